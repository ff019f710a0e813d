#include "bottcoh/bundle_io.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <utility>
#include <vector>

namespace bottcoh {

using nlohmann::json;

namespace {

void reject_unknown_fields(const json& obj, const std::set<std::string>& known,
                           const std::string& where) {
  if (!obj.is_object()) throw InputError(where + " must be an object");
  for (const auto& [key, value] : obj.items())
    if (!known.count(key))
      throw InputError("unknown field '" + key + "' in " + where);
}

int get_int(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError("missing field '" + std::string(key) + "' in " + where);
  if (!it->is_number_integer())
    throw InputError("field '" + std::string(key) + "' in " + where + " must be an integer");
  auto v = it->get<std::int64_t>();
  if (v < -1000000 || v > 1000000)
    throw InputError("field '" + std::string(key) + "' in " + where + " is out of range");
  return static_cast<int>(v);
}

}  // namespace

Bundle parse_bundle_json(const json& doc) {
  reject_unknown_fields(doc, {"space", "summands"}, "bundle");
  if (!doc.contains("space") || !doc["space"].is_array())
    throw InputError("bundle needs a 'space' array");
  std::vector<int> dims;
  for (const auto& d : doc["space"]) {
    if (!d.is_number_integer()) throw InputError("space entries must be integers");
    dims.push_back(d.get<int>());
  }
  Space space(std::move(dims));

  if (!doc.contains("summands") || !doc["summands"].is_array())
    throw InputError("bundle needs a 'summands' array");
  std::vector<Atom> atoms;
  for (const auto& s : doc["summands"]) {
    reject_unknown_fields(s, {"factors", "mult"}, "summand");
    if (!s.contains("factors") || !s["factors"].is_array())
      throw InputError("summand needs a 'factors' array");
    Atom a;
    for (const auto& f : s["factors"]) {
      reject_unknown_fields(f, {"p", "l"}, "factor");
      a.factors.push_back({get_int(f, "p", "factor"), get_int(f, "l", "factor")});
    }
    if (s.contains("mult")) {
      if (!s["mult"].is_number_integer()) throw InputError("'mult' must be an integer");
      a.mult = s["mult"].get<std::int64_t>();
    }
    atoms.push_back(std::move(a));
  }
  return Bundle(std::move(space), std::move(atoms));
}

Bundle parse_bundle(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed bundle text: ") + e.what());
  }
  return parse_bundle_json(doc);
}

json bundle_to_json(const Bundle& e) {
  json summands = json::array();
  for (const auto& a : e.atoms()) {
    json factors = json::array();
    for (const auto& f : a.factors) factors.push_back({{"p", f.p}, {"l", f.l}});
    summands.push_back({{"factors", factors}, {"mult", a.mult}});
  }
  return {{"space", e.space().dims()}, {"summands", summands}};
}

std::string format_bundle(const Bundle& e) { return bundle_to_json(e).dump(); }

// ---------------------------------------------------------------------------
// compact notation

namespace {

class CompactParser {
 public:
  explicit CompactParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  Bundle parse(const std::optional<Space>& default_space) {
    std::optional<Space> space;
    if (text_.find(':') != std::string::npos) space = parse_space();
    std::vector<Atom> atoms;
    atoms.push_back(parse_summand());
    while (accept('+')) atoms.push_back(parse_summand());
    if (pos_ != text_.size()) fail("unexpected trailing input");
    if (!space) {
      if (default_space) {
        space = default_space;
      } else {
        space = Space(std::vector<int>(atoms.front().factors.size(), 2));
      }
    }
    return Bundle(*space, std::move(atoms));
  }

 private:
  Space parse_space() {
    std::vector<int> dims;
    do {
      expect('P');
      dims.push_back(parse_int());
    } while (accept('x'));
    expect(':');
    return Space(std::move(dims));
  }

  Atom parse_summand() {
    Atom a;
    do {
      parse_term(a.factors);
    } while (accept('x'));
    if (accept('*')) a.mult = parse_int();
    return a;
  }

  void parse_term(std::vector<FactorAtom>& out) {
    if (accept('W')) {
      expect('(');
      int p = parse_int();
      expect(',');
      int l = parse_int();
      expect(')');
      out.push_back({p, l});
    } else if (accept('O')) {
      expect('(');
      do {
        out.push_back({0, parse_int()});
      } while (accept(','));
      expect(')');
    } else {
      fail("expected 'W(' or 'O('");
    }
  }

  int parse_int() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const char* first = text_.data() + start;
    if (*first == '+') ++first;
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_ || ptr == first) {
      pos_ = start;
      fail("expected an integer");
    }
    return value;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("malformed bundle notation '" + text_ + "' at position " +
                     std::to_string(pos_) + ": " + what);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Bundle parse_compact(std::string_view text, const std::optional<Space>& default_space) {
  return CompactParser(text).parse(default_space);
}

std::string describe_factor(FactorAtom f) {
  if (f.p == 0) return "O(" + std::to_string(f.l) + ")";
  return "W(" + std::to_string(f.p) + "," + std::to_string(f.l) + ")";
}

std::string describe_atom(const Atom& a) {
  bool all_line = true;
  for (const auto& f : a.factors) all_line = all_line && f.p == 0;
  std::string out;
  if (all_line) {
    out = "O(";
    for (std::size_t k = 0; k < a.factors.size(); ++k)
      out += (k ? "," : "") + std::to_string(a.factors[k].l);
    out += ")";
  } else {
    for (std::size_t k = 0; k < a.factors.size(); ++k)
      out += (k ? "x" : "") + describe_factor(a.factors[k]);
  }
  if (a.mult != 1) out += "*" + std::to_string(a.mult);
  return out;
}

std::string format_compact(const Bundle& e) {
  std::string out;
  const auto& dims = e.space().dims();
  for (std::size_t k = 0; k < dims.size(); ++k)
    out += (k ? "xP" : "P") + std::to_string(dims[k]);
  out += ":";
  for (std::size_t i = 0; i < e.atoms().size(); ++i)
    out += (i ? "+" : "") + describe_atom(e.atoms()[i]);
  return out;
}

}  // namespace bottcoh
