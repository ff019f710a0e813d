#include "bottcoh/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "bottcoh/bundle_io.hpp"

namespace bottcoh {

Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Json to_json(const CohomologyVector& v) {
  Json out = Json::array();
  for (const auto& d : v.dims) out.push_back(integer_json(d));
  return out;
}

Json to_json(const CohomologyEntry& x) {
  return Json{{"degree", x.degree}, {"twist", x.twist}, {"dim", integer_json(x.dim)}};
}

namespace {

Json entries_json(const std::vector<CohomologyEntry>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

Json condition_json(const std::vector<CohomologyEntry>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) {
    Json j = to_json(x);
    j["pass"] = x.vanishes();
    out.push_back(j);
  }
  return out;
}

Json pair_json(const SupportPair& s) { return Json::array({s.degree, s.twist}); }

std::string h_name(const CohomologyEntry& x) {
  std::string t;
  for (std::size_t k = 0; k < x.twist.size(); ++k)
    t += (k ? "," : "") + std::to_string(x.twist[k]);
  return "h^" + std::to_string(x.degree) + "(E(" + t + "))";
}

}  // namespace

Json to_json(const CriterionReport& r) {
  Json out;
  out["criterion"] = r.criterion_id;
  out["parameters"] = r.parameters;
  out["hypothesis"] = to_json(r.hypothesis);
  out["condition_a"] = condition_json(r.condition_a);
  out["condition_b"] = condition_json(r.condition_b);
  out["witnesses"] = entries_json(r.witnesses);
  out["criterion_met"] = r.criterion_met;
  out["conclusion_verified"] = r.conclusion_verified;
  return out;
}

Json to_json(const SVReport& r) {
  Json support = Json::array();
  for (const auto& s : r.support) support.push_back(pair_json(s));
  Json pairs = Json::array();
  for (const auto& [x, y] : r.violating_pairs) pairs.push_back(Json::array({pair_json(x), pair_json(y)}));
  Json out;
  out["criterion"] = "sv";
  out["support"] = support;
  out["violating_pairs"] = pairs;
  out["passes"] = r.passes;
  return out;
}

Json to_json(const AcmVerdict& r) {
  Json out;
  out["criterion"] = "acm";
  out["acm"] = r.acm;
  out["verdict"] = r.verdict;
  return out;
}

Json to_json(const Ex23Report& r) {
  Json atoms = Json::array();
  for (const auto& a : r.satisfying) atoms.push_back(describe_atom(a));
  Json out;
  out["scan"] = "ex23";
  out["twist_bound"] = r.twist_bound;
  out["atoms_tested"] = r.atoms_tested;
  out["satisfying"] = atoms;
  out["unique_expected"] = r.unique_expected;
  return out;
}

Json to_json(const SoundnessReport& r) {
  Json violations = Json::array();
  for (const auto& e : r.violations) violations.push_back(format_compact(e));
  Json out;
  out["scan"] = "soundness";
  out["criterion"] = r.criterion_id;
  out["space"] = r.space.dims();
  out["parameters"] = r.parameters;
  out["twist_bound"] = r.twist_bound;
  out["max_summands"] = r.max_summands;
  out["sample_budget"] = r.sample_budget;
  out["seed"] = r.seed;
  out["tested"] = r.tested;
  out["atoms_tested"] = r.atoms_tested;
  out["samples_tested"] = r.samples_tested;
  out["criterion_met"] = r.criterion_met;
  out["violations"] = violations;
  return out;
}

Json to_json(const ExactnessReport& r) {
  Json residuals = Json::array();
  for (const auto& [t, v] : r.nonzero_residuals)
    residuals.push_back(Json{{"twist", t}, {"residual", integer_json(v)}});
  Json out;
  out["check"] = "euler_exactness";
  out["exact"] = r.exact;
  out["skipped"] = r.skipped;
  if (r.skipped) out["skip_reason"] = r.skip_reason;
  out["points_checked"] = r.points_checked;
  out["nonzero_residuals"] = residuals;
  return out;
}

Json to_json(const ChainReport& r) {
  Json chains = Json::array();
  for (const auto& c : r.chains) {
    Json links = Json::array();
    for (const auto& l : c.links) {
      Json link;
      link["degree"] = l.degree;
      link["twist"] = l.twist;
      if (l.multiplier) link["multiplier"] = describe_factor(*l.multiplier);
      Json cert = Json::array();
      for (std::size_t i = 0; i < l.certificate.size(); ++i) {
        Json x = to_json(l.certificate[i]);
        x["in_condition_range"] = static_cast<bool>(l.certificate_in_condition_range[i]);
        cert.push_back(x);
      }
      link["certificate"] = cert;
      link["pass"] = l.passes;
      links.push_back(link);
    }
    Json chain;
    chain["chain"] = c.name;
    chain["links"] = links;
    chain["witnesses"] = entries_json(c.witnesses);
    chain["pass"] = c.passes;
    chains.push_back(chain);
  }
  Json out;
  out["check"] = "vanishing_chains";
  out["parameters"] = r.parameters;
  out["chains"] = chains;
  out["all_pass"] = r.all_pass;
  out["conditions_hold"] = r.conditions_hold;
  out["implication_holds"] = r.implication_holds;
  out["out_of_range"] = entries_json(r.out_of_range);
  return out;
}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw InputError("unknown output format '" + name + "' (expected text, csv or json)");
}

std::string format_vector(const CohomologyVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dims.size(); ++i) out += (i ? "," : "") + v.dims[i].str();
  return out;
}

void write_table(std::ostream& out, const CohomologyTable& table, OutputFormat format) {
  const std::size_t arity = table.grid.ranges.size();
  const std::size_t degrees = table.entries.empty() ? 0 : table.entries.front().second.dims.size();
  static const char* axis[] = {"a", "b"};

  if (format == OutputFormat::json) {
    for (const auto& [t, v] : table.entries)
      out << Json{{"twist", t}, {"h", to_json(v)}}.dump() << '\n';
    return;
  }
  if (format == OutputFormat::csv) {
    for (std::size_t k = 0; k < arity; ++k) out << axis[k] << ',';
    for (std::size_t i = 0; i < degrees; ++i) out << 'h' << i << (i + 1 < degrees ? "," : "\n");
    for (const auto& [t, v] : table.entries) {
      for (int x : t) out << x << ',';
      out << format_vector(v) << '\n';
    }
    return;
  }

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  for (std::size_t k = 0; k < arity; ++k) header.push_back(axis[k]);
  for (std::size_t i = 0; i < degrees; ++i) header.push_back("h" + std::to_string(i));
  rows.push_back(header);
  for (const auto& [t, v] : table.entries) {
    std::vector<std::string> row;
    for (int x : t) row.push_back(std::to_string(x));
    for (const auto& d : v.dims) row.push_back(d.str());
    rows.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == arity) line += " |";
      line += (c ? " " : "") + std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    out << line << '\n';
  }
}

std::string summarize(const CriterionReport& r) {
  std::ostringstream out;
  out << "criterion " << r.criterion_id;
  static const char* names[] = {"p", "q"};
  for (std::size_t i = 0; i < r.parameters.size(); ++i)
    out << ' ' << names[i] << '=' << r.parameters[i];
  out << '\n';
  out << "hypothesis " << h_name(r.hypothesis) << " = " << r.hypothesis.dim << '\n';
  auto count = [](const std::vector<CohomologyEntry>& xs) {
    return std::count_if(xs.begin(), xs.end(), [](const auto& x) { return !x.vanishes(); });
  };
  out << "condition (a): " << r.condition_a.size() << " groups, " << count(r.condition_a)
      << " nonzero\n";
  out << "condition (b): " << r.condition_b.size() << " groups, " << count(r.condition_b)
      << " nonzero\n";
  for (const auto& w : r.witnesses) out << "witness " << h_name(w) << " = " << w.dim << '\n';
  out << "criterion met: " << (r.criterion_met ? "yes" : "no") << '\n';
  out << "summand present: " << (r.conclusion_verified ? "yes" : "no") << '\n';
  return out.str();
}

std::string summarize(const SVReport& r) {
  std::ostringstream out;
  out << "support:";
  for (const auto& s : r.support) out << " (" << s.degree << "," << s.twist << ")";
  out << '\n';
  for (const auto& [x, y] : r.violating_pairs)
    out << "violating pair (" << x.degree << "," << x.twist << ") (" << y.degree << ","
        << y.twist << ")\n";
  out << "SV condition " << (r.passes ? "passes" : "fails") << '\n';
  return out.str();
}

std::string summarize(const ChainReport& r) {
  std::ostringstream out;
  for (const auto& c : r.chains) {
    out << "chain " << c.name << ": " << c.links.size() << " links, "
        << (c.passes ? "pass" : "FAIL") << '\n';
    for (const auto& w : c.witnesses) out << "  witness " << h_name(w) << " = " << w.dim << '\n';
  }
  out << "conditions (a),(b) hold: " << (r.conditions_hold ? "yes" : "no") << '\n';
  out << "all chains pass: " << (r.all_pass ? "yes" : "no") << '\n';
  if (!r.out_of_range.empty())
    out << "certificate entries outside the condition range: " << r.out_of_range.size() << '\n';
  return out.str();
}

}  // namespace bottcoh
