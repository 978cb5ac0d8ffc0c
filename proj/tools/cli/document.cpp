#include "cli/document.hpp"

#include <cstdio>
#include <sstream>

#include "twoadic/errors.hpp"

namespace twoadic::cli {

namespace {

using ojson = nlohmann::ordered_json;

ojson obstruction_json(const Obstruction& o) {
  struct Visitor {
    ojson operator()(const CubicRationalRoot& w) const { return {{"kind", "cubic_rational_root"}, {"x0", to_string(w.x0)}}; }
    ojson operator()(const DiscriminantInClass& w) const {
      return {{"kind", "discriminant_in_class"}, {"c", std::to_string(w.c)}, {"r", to_string(w.r)}};
    }
    ojson operator()(const JInFamily& w) const { return {{"kind", "j_in_family"}, {"t", to_string(w.t)}}; }
    ojson operator()(const InheritedFailure& w) const {
      return {{"kind", "inherited_failure"}, {"level", std::to_string(w.level)}};
    }
  };
  return std::visit(Visitor{}, o);
}

std::string field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_string()) throw ParseError(std::string("missing string field '") + key + "'");
  return j[key].get<std::string>();
}

int small_int(const nlohmann::json& j, const char* key) {
  const Rational q = parse_rational(field(j, key));
  if (q.get_den() != 1 || !q.get_num().fits_sint_p()) throw ParseError(std::string("field '") + key + "' is not a small integer");
  return static_cast<int>(q.get_num().get_si());
}

Obstruction obstruction_from_json(const nlohmann::json& j) {
  const std::string kind = field(j, "kind");
  if (kind == "cubic_rational_root") return CubicRationalRoot{parse_rational(field(j, "x0"))};
  if (kind == "discriminant_in_class") return DiscriminantInClass{small_int(j, "c"), parse_rational(field(j, "r"))};
  if (kind == "j_in_family") return JInFamily{parse_rational(field(j, "t"))};
  if (kind == "inherited_failure") return InheritedFailure{small_int(j, "level")};
  throw ParseError("unknown obstruction kind '" + kind + "'");
}

ojson report_json(const SurjectivityReport& r) {
  ojson obs = ojson::array();
  for (const auto& o : r.obstructions) obs.push_back(obstruction_json(o));
  return {{"surjective", r.surjective}, {"obstructions", obs}};
}

SurjectivityReport report_from_json(const nlohmann::json& j, int level) {
  if (!j.is_object() || !j.contains("surjective") || !j["surjective"].is_boolean() || !j.contains("obstructions") ||
      !j["obstructions"].is_array())
    throw ParseError("malformed report at level " + std::to_string(level));
  SurjectivityReport r{level, j["surjective"].get<bool>(), {}};
  for (const auto& o : j["obstructions"]) r.obstructions.push_back(obstruction_from_json(o));
  if (r.surjective != r.obstructions.empty()) throw ParseError("verdict inconsistent with obstructions");
  return r;
}

std::string describe(const Obstruction& o) {
  struct Visitor {
    std::string operator()(const CubicRationalRoot& w) const { return "x^3 + ax + b has the rational root " + to_string(w.x0); }
    std::string operator()(const DiscriminantInClass& w) const {
      return "delta = " + std::to_string(w.c) + " * (" + to_string(w.r) + ")^2";
    }
    std::string operator()(const JInFamily& w) const { return "j = -4t^3(t+8) at t = " + to_string(w.t); }
    std::string operator()(const InheritedFailure& w) const { return "already not surjective mod " + std::to_string(w.level); }
  };
  return std::visit(Visitor{}, o);
}

void render_report(std::ostringstream& os, const SurjectivityReport& r) {
  os << "mod " << r.level << ": " << (r.surjective ? "surjective" : "NOT surjective") << "\n";
  for (const auto& o : r.obstructions) os << "  - " << describe(o) << "\n";
}

}  // namespace

OutputDocument make_document(const CurveQ& e, const Analysis& analysis) {
  OutputDocument doc;
  doc.curve = {e.a(), e.b(), e.discriminant(), e.j_invariant()};
  doc.mod2 = analysis.mod2;
  doc.mod4 = analysis.mod4;
  doc.mod8 = analysis.mod8;
  doc.two_adic_surjective = analysis.two_adic_surjective;
  return doc;
}

nlohmann::ordered_json to_json(const OutputDocument& doc) {
  ojson j;
  j["schema_version"] = doc.schema_version;
  j["curve"] = {{"a", to_string(doc.curve.a)},
                {"b", to_string(doc.curve.b)},
                {"delta", to_string(doc.curve.delta)},
                {"j", to_string(doc.curve.j)}};
  if (doc.family_t) j["family"] = {{"t", to_string(*doc.family_t)}};
  j["mod2"] = report_json(doc.mod2);
  j["mod4"] = report_json(doc.mod4);
  j["mod8"] = report_json(doc.mod8);
  j["two_adic_surjective"] = doc.two_adic_surjective;
  return j;
}

OutputDocument document_from_json(const nlohmann::json& j) {
  OutputDocument doc;
  doc.schema_version = field(j, "schema_version");
  if (doc.schema_version != kSchemaVersion) throw ParseError("unsupported schema version " + doc.schema_version);
  if (!j.contains("curve")) throw ParseError("missing curve");
  const auto& c = j["curve"];
  doc.curve = {parse_rational(field(c, "a")), parse_rational(field(c, "b")), parse_rational(field(c, "delta")),
               parse_rational(field(c, "j"))};
  if (j.contains("family")) doc.family_t = parse_rational(field(j["family"], "t"));
  if (!j.contains("mod2") || !j.contains("mod4") || !j.contains("mod8")) throw ParseError("missing level report");
  doc.mod2 = report_from_json(j["mod2"], 2);
  doc.mod4 = report_from_json(j["mod4"], 4);
  doc.mod8 = report_from_json(j["mod8"], 8);
  if (!j.contains("two_adic_surjective") || !j["two_adic_surjective"].is_boolean()) throw ParseError("missing two_adic_surjective");
  doc.two_adic_surjective = j["two_adic_surjective"].get<bool>();
  return doc;
}

std::string render_text(const OutputDocument& doc) {
  std::ostringstream os;
  if (doc.family_t) os << "family parameter t = " << to_string(*doc.family_t) << "\n";
  os << "E: y^2 = x^3 + (" << to_string(doc.curve.a) << ")x + (" << to_string(doc.curve.b) << ")\n";
  os << "delta = " << to_string(doc.curve.delta) << "\n";
  os << "j = " << to_string(doc.curve.j) << "\n";
  render_report(os, doc.mod2);
  render_report(os, doc.mod4);
  render_report(os, doc.mod8);
  os << "2-adic surjective: " << (doc.two_adic_surjective ? "yes" : "no") << "\n";
  return os.str();
}

nlohmann::ordered_json to_json(const ClaimReport& report, bool timing) {
  ojson j;
  j["claim"] = report.id;
  j["passed"] = report.passed;
  j["statement"] = report.statement;
  ojson facts = ojson::object();
  for (const auto& [k, v] : report.facts) facts[k] = v;
  j["facts"] = facts;
  ojson survivors = ojson::array();
  for (const auto& s : report.survivors)
    survivors.push_back({{"order", s.order}, {"class_size", s.class_size}, {"representative", s.representative}});
  j["survivors"] = survivors;
  if (report.counterexample) j["counterexample"] = *report.counterexample;
  if (timing) j["wall_seconds"] = report.wall_seconds;
  return j;
}

std::string render_text(const ClaimReport& report, bool timing) {
  std::ostringstream os;
  os << "[" << (report.passed ? "pass" : "FAIL") << "] " << report.id << ": " << report.statement << "\n";
  for (const auto& [k, v] : report.facts) os << "    " << k << " = " << v << "\n";
  for (const auto& s : report.survivors)
    os << "    survivor: " << s.class_size << " x " << s.representative << "\n";
  if (report.counterexample) os << "    counterexample: " << *report.counterexample << "\n";
  if (timing) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "    wall time: %.3f s\n", report.wall_seconds);
    os << buf;
  }
  return os.str();
}

}  // namespace twoadic::cli
