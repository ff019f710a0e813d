#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bottcoh/bundle.hpp"

namespace bottcoh {

/// Bundle file format:
///
///   {"space": [2, 2],
///    "summands": [{"factors": [{"p": 1, "l": 0}, {"p": 1, "l": 0}], "mult": 1}]}
///
/// Unknown fields are rejected. "mult" defaults to 1 when absent.
Bundle parse_bundle_json(const nlohmann::json& doc);
Bundle parse_bundle(std::string_view text);
nlohmann::json bundle_to_json(const Bundle& e);
std::string format_bundle(const Bundle& e);

/// One-line notation, e.g. "P2xP2:W(1,0)xW(1,0)+O(3,3)*2".
///
/// A summand is a product of factor terms joined by 'x'. `W(p,l)` is one
/// factor Omega^p(l); `O(a)` is one line-bundle factor and `O(a,b)` is
/// shorthand for `O(a)xO(b)`. An optional `*k` sets the multiplicity.
/// The leading `P<n>xP<m>:` names the space; without it `default_space` is
/// used, and without that every factor is taken to be P^2.
Bundle parse_compact(std::string_view text,
                     const std::optional<Space>& default_space = std::nullopt);
std::string format_compact(const Bundle& e);

/// Human-readable name of an atom, e.g. "W^1(0)xW^1(0)" or "O(-4)".
std::string describe_atom(const Atom& a);
std::string describe_factor(FactorAtom f);

}  // namespace bottcoh
