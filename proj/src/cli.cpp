#include "bottcoh/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bottcoh/bundle_io.hpp"
#include "bottcoh/cohomology.hpp"
#include "bottcoh/criteria.hpp"
#include "bottcoh/oracle.hpp"
#include "bottcoh/report.hpp"
#include "bottcoh/scan.hpp"
#include "bottcoh/sequences.hpp"

namespace bottcoh {

namespace {

constexpr int kOk = 0;
constexpr int kNotMet = 1;
constexpr int kInputError = 2;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(std::string("malformed ") + what + " '" + text + "'");
    }
  }
  if (out.empty()) throw InputError(std::string("empty ") + what);
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    int v = parse_int_list(text, "range").at(0);
    return {v, v};
  }
  int lo = parse_int_list(text.substr(0, colon), "range").at(0);
  int hi = parse_int_list(text.substr(colon + 1), "range").at(0);
  if (lo > hi) throw InputError("empty twist range '" + text + "'");
  return {lo, hi};
}

struct BundleArgs {
  std::string source;
  std::string space;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--bundle,-b", source, "bundle file (JSON) or inline notation")->required();
    cmd->add_option("--space", space, "space for inline notation, e.g. 2,2");
  }

  Bundle load() const {
    std::optional<Space> default_space;
    if (!space.empty()) default_space = Space(parse_int_list(space, "space"));
    std::error_code ec;
    if (std::filesystem::is_regular_file(source, ec)) {
      std::ifstream in(source);
      std::stringstream buf;
      buf << in.rdbuf();
      Bundle e = parse_bundle(buf.str());
      if (default_space && !(e.space() == *default_space))
        throw InputError("--space does not match the space in " + source);
      return e;
    }
    return parse_compact(source, default_space);
  }
};

std::string default_format(const char* fallback) {
  if (const char* env = std::getenv("BOTTCOH_FORMAT"); env && *env) return env;
  return fallback;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology tables and splitting criteria for Bott-class bundles on P^n and P^m x P^n",
               "bottcoh"};
  app.require_subcommand(1);

  std::function<int()> action;
  std::string format;

  // cohom ------------------------------------------------------------------
  BundleArgs cohom_bundle;
  std::string cohom_twist;
  auto* cohom = app.add_subcommand("cohom", "cohomology vector h^0..h^dim at one twist");
  cohom_bundle.add_to(cohom);
  cohom->add_option("--twist,-t", cohom_twist, "twist, e.g. 0,0")->required();
  cohom->add_option("--format", format, "text|csv|json");
  cohom->callback([&] {
    action = [&] {
      Bundle e = cohom_bundle.load();
      Twist t = parse_int_list(cohom_twist, "twist");
      auto fmt = parse_output_format(format.empty() ? default_format("text") : format);
      auto v = cohomology(e, t);
      if (fmt == OutputFormat::json)
        out << Json{{"twist", t}, {"h", to_json(v)}}.dump() << '\n';
      else
        out << format_vector(v) << '\n';
      return kOk;
    };
  });

  // table ------------------------------------------------------------------
  BundleArgs table_bundle;
  std::vector<std::string> table_ranges;
  auto* table_cmd = app.add_subcommand("table", "cohomology table over a twist grid");
  table_bundle.add_to(table_cmd);
  table_cmd->add_option("--range,-r", table_ranges, "LO:HI per factor (one value applies to all)")
      ->required();
  table_cmd->add_option("--format", format, "text|csv|json");
  table_cmd->callback([&] {
    action = [&] {
      Bundle e = table_bundle.load();
      auto fmt = parse_output_format(format.empty() ? default_format("text") : format);
      TwistGrid grid;
      for (const auto& r : table_ranges) grid.ranges.push_back(parse_range(r));
      if (grid.ranges.size() == 1)
        grid.ranges.resize(e.space().factor_count(), grid.ranges.front());
      write_table(out, table(e, grid), fmt);
      return kOk;
    };
  });

  // check ------------------------------------------------------------------
  auto* check = app.add_subcommand("check", "evaluate a criterion");
  check->require_subcommand(1);
  BundleArgs check_bundle;
  int check_p = 0;
  int check_q = 0;
  auto add_check = [&](const char* name, const char* help, bool with_p, bool with_q,
                       std::function<int(const Bundle&, bool)> body) {
    auto* cmd = check->add_subcommand(name, help);
    check_bundle.add_to(cmd);
    if (with_p) cmd->add_option("-p", check_p, "exterior index on the first factor")->required();
    if (with_q) cmd->add_option("-q", check_q, "exterior index on the second factor")->required();
    cmd->add_option("--format", format, "text|json");
    cmd->callback([&, body] {
      action = [&, body] {
        Bundle e = check_bundle.load();
        auto fmt = parse_output_format(format.empty() ? default_format("text") : format);
        return body(e, fmt == OutputFormat::json);
      };
    });
  };
  auto emit_criterion = [&](const CriterionReport& r, bool json) {
    if (json)
      out << to_json(r).dump(2) << '\n';
    else
      out << summarize(r);
    return r.criterion_met ? kOk : kNotMet;
  };
  add_check("prop13", "Omega^p summand criterion on P^n", true, false,
            [&](const Bundle& e, bool json) { return emit_criterion(check_prop13(e, check_p), json); });
  add_check("thm21", "Omega^p x Omega^q summand criterion on P^m x P^n", true, true,
            [&](const Bundle& e, bool json) {
              return emit_criterion(check_thm21(e, check_p, check_q), json);
            });
  add_check("sv", "Stueckrad-Vogel condition on P^n", false, false, [&](const Bundle& e, bool json) {
    auto r = check_sv(e);
    if (json)
      out << to_json(r).dump(2) << '\n';
    else
      out << summarize(r);
    return r.passes ? kOk : kNotMet;
  });
  add_check("acm", "ACM test and Horrocks verdict on P^n", false, false,
            [&](const Bundle& e, bool json) {
              auto r = is_acm(e);
              if (json)
                out << to_json(r).dump(2) << '\n';
              else
                out << r.verdict << '\n';
              return r.acm ? kOk : kNotMet;
            });

  // scan -------------------------------------------------------------------
  auto* scan = app.add_subcommand("scan", "exhaustive and sampled scans");
  scan->require_subcommand(1);
  int scan_bound = 6;
  auto* ex23 = scan->add_subcommand("ex23", "single-atom scan of the P^2 x P^2 characterization");
  ex23->add_option("--bound", scan_bound, "twist bound");
  ex23->callback([&] {
    action = [&] {
      if (scan_bound < 0) throw InputError("--bound must be nonnegative");
      auto r = scan_ex23(scan_bound);
      out << to_json(r).dump(2) << '\n';
      return r.unique_expected ? kOk : kNotMet;
    };
  });
  std::string sound_space = "2,2";
  int sound_p = 1;
  int sound_q = 1;
  int sound_summands = 2;
  std::size_t sound_samples = 2000;
  std::uint64_t sound_seed = 1;
  auto* sound = scan->add_subcommand("soundness", "criterion => summand, over atoms and random sums");
  sound->add_option("--space", sound_space, "e.g. 2,2 (one factor scans prop13 exhaustively)");
  sound->add_option("-p", sound_p);
  sound->add_option("-q", sound_q);
  int sound_bound = 4;
  sound->add_option("--bound", sound_bound, "twist bound");
  sound->add_option("--max-summands", sound_summands);
  sound->add_option("--samples", sound_samples);
  sound->add_option("--seed", sound_seed);
  sound->callback([&] {
    action = [&] {
      Space space(parse_int_list(sound_space, "space"));
      if (sound_bound < 0 || sound_summands < 1) throw InputError("bounds must be positive");
      SoundnessReport r = space.factor_count() == 1
                              ? scan_prop13_soundness(space.dim(0), sound_p, sound_bound)
                              : scan_soundness(space, sound_p, sound_q, sound_bound,
                                               sound_summands, sound_samples, sound_seed);
      out << to_json(r).dump(2) << '\n';
      return r.violations.empty() ? kOk : kNotMet;
    };
  });

  // oracle -----------------------------------------------------------------
  int oracle_n = 2;
  int oracle_p = 1;
  int oracle_l = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "cross-check the Bott formula against the Koszul oracle");
  oracle_cmd->add_option("-n", oracle_n, "projective dimension")->required();
  oracle_cmd->add_option("-p", oracle_p, "exterior index")->required();
  oracle_cmd->add_option("-l", oracle_l, "twist")->required();
  oracle_cmd->callback([&] {
    action = [&] {
      if (oracle_n < 1 || oracle_p < 0 || oracle_p > oracle_n)
        throw InputError("need n >= 1 and 0 <= p <= n");
      auto brute = oracle::oracle_cohomology(oracle_n, oracle_p, oracle_l);
      CohomologyVector closed{factor_cohomology(oracle_n, oracle_p, oracle_l)};
      out << "oracle: " << format_vector(brute) << '\n';
      out << "bott:   " << format_vector(closed) << '\n';
      out << (brute == closed ? "agree" : "DISAGREE") << '\n';
      return brute == closed ? kOk : kNotMet;
    };
  });

  // verify -----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "proof machinery checks");
  verify->require_subcommand(1);
  std::string kind_name;
  int seq_n = 2;
  int seq_r = 1;
  BundleArgs verify_bundle;
  verify_bundle.source.clear();
  int verify_p = 1;
  int verify_q = 1;
  bool skip_composite = false;
  bool show_sequence = false;
  std::vector<std::string> verify_ranges;
  auto* exactness = verify->add_subcommand("exactness", "Euler-exactness of a Koszul or glued sequence");
  exactness->add_option("--kind", kind_name, "e1|e2|e3|e4|glued-phi|glued-psi")->required();
  exactness->add_option("-n", seq_n, "projective dimension (e1..e4)");
  exactness->add_option("-r", seq_r, "exterior index (e1..e4)");
  exactness->add_option("--bundle,-b", verify_bundle.source, "bundle (glued sequences)");
  exactness->add_option("--space", verify_bundle.space);
  exactness->add_option("-p", verify_p);
  exactness->add_option("-q", verify_q);
  exactness->add_option("--range", verify_ranges, "LO:HI per factor");
  exactness->add_flag("--skip-composite", skip_composite, "skip instead of resolving doubly-tensored terms");
  exactness->add_flag("--show", show_sequence, "print the sequence in arrow notation");
  exactness->callback([&] {
    action = [&] {
      SequenceKind kind = parse_sequence_kind(kind_name);
      Sequence s{kind, {}};
      if (kind == SequenceKind::glued_phi || kind == SequenceKind::glued_psi) {
        if (verify_bundle.source.empty()) throw InputError("glued sequences need --bundle");
        s = glued_sequence(verify_bundle.load(), verify_p, verify_q,
                           kind == SequenceKind::glued_phi ? GluedSide::phi : GluedSide::psi);
      } else {
        s = koszul_sequence(seq_n, seq_r, kind);
      }
      const Space& space = s.terms.front().base.space();
      TwistGrid grid = default_exactness_grid(space);
      if (!verify_ranges.empty()) {
        grid.ranges.clear();
        for (const auto& r : verify_ranges) grid.ranges.push_back(parse_range(r));
        if (grid.ranges.size() == 1) grid.ranges.resize(space.factor_count(), grid.ranges.front());
      }
      if (show_sequence) out << to_arrow_notation(s) << '\n';
      auto r = verify_euler_exactness(
          s, grid, skip_composite ? CompositePolicy::skip : CompositePolicy::factorwise);
      out << to_json(r).dump(2) << '\n';
      return r.exact ? kOk : kNotMet;
    };
  });
  BundleArgs chains_bundle;
  auto* chains = verify->add_subcommand("chains", "certify the vanishing chains behind the biprojective criterion");
  chains_bundle.add_to(chains);
  chains->add_option("-p", verify_p)->required();
  chains->add_option("-q", verify_q)->required();
  chains->add_option("--format", format, "text|json");
  chains->callback([&] {
    action = [&] {
      Bundle e = chains_bundle.load();
      auto fmt = parse_output_format(format.empty() ? default_format("text") : format);
      auto r = certify_vanishing_chains(e, verify_p, verify_q);
      if (fmt == OutputFormat::json)
        out << to_json(r).dump(2) << '\n';
      else
        out << summarize(r);
      return r.all_pass ? kOk : kNotMet;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action ? action() : kInputError;
  } catch (const InputError& e) {
    err << "bottcoh: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace bottcoh
