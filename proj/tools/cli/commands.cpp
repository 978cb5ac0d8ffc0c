#include "cli/commands.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "cli/document.hpp"
#include "twoadic/claims.hpp"
#include "twoadic/errors.hpp"

namespace twoadic::cli {

namespace {

struct Failure {
  int code;
  std::string message;
};

// Maps library exceptions onto the stable exit codes.
template <class Fn>
std::optional<Failure> guarded(Fn&& fn) {
  try {
    fn();
    return std::nullopt;
  } catch (const ParseError& e) {
    return Failure{kExitParse, e.what()};
  } catch (const SingularCurve& e) {
    return Failure{kExitSingular, e.what()};
  } catch (const FamilyExcludedParameter& e) {
    return Failure{kExitFamilyExcluded, e.what()};
  } catch (const std::exception& e) {
    return Failure{kExitInternal, e.what()};
  }
}

void emit(std::ostream& out, const OutputDocument& doc, bool text, bool compact) {
  if (text)
    out << render_text(doc);
  else
    out << to_json(doc).dump(compact ? -1 : 2) << "\n";
}

int check_batch(std::istream& in, std::ostream& out, bool text) {
  int status = kExitOk;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::string spec = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    const auto failure = guarded([&] {
      const CurveQ e = parse_curve_spec(spec);
      emit(out, make_document(e, analyze(e)), text, true);
    });
    if (failure) {
      if (status == kExitOk) status = failure->code;
      nlohmann::ordered_json j{{"input", spec}, {"error", failure->message}, {"exit_code", failure->code}};
      out << j.dump() << "\n";
    }
  }
  return status;
}

ClaimReport run_target(const std::string& target, std::optional<std::size_t> samples, std::uint64_t seed, unsigned workers) {
  if (target == "groups4") return verify_mod4_claim(workers);
  if (target == "groups8") return verify_mod8_claim(workers);
  if (target == "groups16") return verify_mod16_lift(workers);
  if (target == "detmaps") return verify_det_mod2_surjectivity();
  if (target == "resolvent") return verify_resolvent_identity(samples.value_or(25), seed);
  if (target == "disc") return verify_disc_identity(samples.value_or(100), seed);
  if (target == "lemma") return verify_lemma(samples.value_or(200), seed);
  throw ParseError("unknown verify target '" + target + "'");
}

const std::vector<std::string> kAllTargets{"detmaps", "groups4", "groups8", "groups16", "disc", "resolvent", "lemma"};

}  // namespace

unsigned workers_from_env() {
  if (const char* v = std::getenv("TWOADIC_WORKERS")) {
    const int n = std::atoi(v);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Surjectivity of the mod 2, 4 and 8 Galois representations of elliptic curves over Q", "twoadic"};
  app.require_subcommand(1);

  bool text = false;
  bool json = false;

  auto* check = app.add_subcommand("check", "analyze a curve given as a,b or a1,a2,a3,a4,a6");
  std::string curve_spec;
  bool from_stdin = false;
  check->add_option("curve", curve_spec, "curve coefficients, rationals allowed (e.g. 6,8 or 0,0,1,-1,0)");
  check->add_flag("--stdin", from_stdin, "read one curve spec per line, write one JSON document per line");
  check->add_flag("--json", json, "JSON output (default)");
  check->add_flag("--text", text, "human-readable output");

  auto* family = app.add_subcommand("family", "analyze the curve with j = -4t^3(t+8) from the parametric family");
  std::string t_text;
  family->add_option("t", t_text, "family parameter, t != -8")->required();
  family->add_flag("--json", json, "JSON output (default)");
  family->add_flag("--text", text, "human-readable output");

  auto* verify = app.add_subcommand("verify", "re-run a computational verification");
  std::string target;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 7;
  bool timing = false;
  verify->add_option("target", target, "groups4 | groups8 | groups16 | detmaps | resolvent | disc | lemma | all")->required();
  verify->add_option("--samples", samples, "number of random samples for resolvent/disc/lemma");
  verify->add_option("--seed", seed, "random seed");
  verify->add_flag("--json", json, "one JSON report per line");
  verify->add_flag("--text", text, "human-readable output (default)");
  verify->add_flag("--timing", timing, "include wall time");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitParse;
  }
  if (text && json) {
    err << "error: --json and --text are exclusive\n";
    return kExitParse;
  }

  if (check->parsed()) {
    if (from_stdin) return check_batch(in, out, text);
    if (curve_spec.empty()) {
      err << "error: check needs a curve spec or --stdin\n";
      return kExitParse;
    }
    const auto failure = guarded([&] {
      const CurveQ e = parse_curve_spec(curve_spec);
      emit(out, make_document(e, analyze(e)), text, false);
    });
    if (failure) {
      err << "error: " << failure->message << "\n";
      return failure->code;
    }
    return kExitOk;
  }

  if (family->parsed()) {
    int code = kExitOk;
    const auto failure = guarded([&] {
      const Rational t = parse_rational(t_text);
      const CurveQ e = family_curve(t);
      OutputDocument doc = make_document(e, analyze(e));
      doc.family_t = t;
      if (doc.mod4.surjective) {
        err << "error: family member reported surjective mod 4\n";
        code = kExitInternal;
      }
      emit(out, doc, text, false);
    });
    if (failure) {
      err << "error: " << failure->message << "\n";
      return failure->code;
    }
    return code;
  }

  // verify
  std::vector<std::string> targets = target == "all" ? kAllTargets : std::vector<std::string>{target};
  const unsigned workers = workers_from_env();
  int code = kExitOk;
  for (const auto& name : targets) {
    ClaimReport report;
    const auto failure = guarded([&] { report = run_target(name, samples, seed, workers); });
    if (failure) {
      err << "error: " << failure->message << "\n";
      return failure->code;
    }
    if (json)
      out << to_json(report, timing).dump() << "\n";
    else
      out << render_text(report, timing);
    if (!report.passed) {
      code = kExitClaimFalsified;
      err << "claim " << report.id << " falsified: " << report.counterexample.value_or("(no counterexample recorded)") << "\n";
    }
  }
  return code;
}

}  // namespace twoadic::cli
