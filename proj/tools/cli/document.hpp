#pragma once

// JSON and text renderings of curve analyses and claim reports.
// Schema "1": every rational is a string "p" or "p/q".

#include <optional>
#include <string>

#include <json.hpp>

#include "twoadic/claims.hpp"
#include "twoadic/curve.hpp"
#include "twoadic/decide.hpp"

namespace twoadic::cli {

inline constexpr const char* kSchemaVersion = "1";

struct CurveFields {
  Rational a, b, delta, j;
  friend bool operator==(const CurveFields&, const CurveFields&) = default;
};

struct OutputDocument {
  std::string schema_version = kSchemaVersion;
  CurveFields curve;
  SurjectivityReport mod2, mod4, mod8;
  bool two_adic_surjective = false;
  std::optional<Rational> family_t;  // set by `family`

  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

OutputDocument make_document(const CurveQ& e, const Analysis& analysis);

nlohmann::ordered_json to_json(const OutputDocument& doc);
/// Throws ParseError on schema violations.
OutputDocument document_from_json(const nlohmann::json& j);

std::string render_text(const OutputDocument& doc);

/// Wall time is left out unless `timing` is set, so output is reproducible.
nlohmann::ordered_json to_json(const ClaimReport& report, bool timing = false);
std::string render_text(const ClaimReport& report, bool timing = false);

}  // namespace twoadic::cli
