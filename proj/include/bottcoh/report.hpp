#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "bottcoh/cohomology.hpp"
#include "bottcoh/criteria.hpp"
#include "bottcoh/scan.hpp"
#include "bottcoh/sequences.hpp"

namespace bottcoh {

/// Reports keep their field order, so serialized output is stable.
using Json = nlohmann::ordered_json;

Json integer_json(const Integer& x);
Json to_json(const CohomologyVector& v);
Json to_json(const CohomologyEntry& x);
Json to_json(const CriterionReport& r);
Json to_json(const SVReport& r);
Json to_json(const AcmVerdict& r);
Json to_json(const Ex23Report& r);
Json to_json(const SoundnessReport& r);
Json to_json(const ExactnessReport& r);
Json to_json(const ChainReport& r);

enum class OutputFormat { text, csv, json };

OutputFormat parse_output_format(const std::string& name);

/// Comma-separated dimensions, e.g. "0,0,1,0,0".
std::string format_vector(const CohomologyVector& v);

/// text: aligned columns; csv: header then `a,b,h0,...`; json: one record per line.
void write_table(std::ostream& out, const CohomologyTable& table, OutputFormat format);

/// Short human-readable summaries.
std::string summarize(const CriterionReport& r);
std::string summarize(const SVReport& r);
std::string summarize(const ChainReport& r);

}  // namespace bottcoh
