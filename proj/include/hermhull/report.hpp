#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hermhull/code.hpp"

namespace hermhull {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Verified, Structural, Skipped, Failed };
enum class Verdict { Pass, Partial, Fail };

std::string to_string(CheckStatus s);
std::string to_string(Verdict v);

struct Check {
  std::string name;
  CheckStatus status;
  std::string detail;
  bool claim = true;  // false for optional cross-checks
};

/// A built code together with its claimed properties and the verifier's findings.
struct ConstructionReport {
  std::string family;
  Json params = Json::object();
  const FieldContext* field = nullptr;
  int n = 0;
  int k = 0;
  std::optional<int> d;
  std::string d_source;  // "enumerated", "structural" or "bound"
  std::optional<int> hull_dim_claimed;
  std::optional<int> hull_dim_measured;
  std::vector<Check> checks;
  Json quantum = Json::array();
  Json extra = Json::object();
  std::vector<std::pair<std::string, double>> timings_ms;

  void add(std::string name, CheckStatus status, std::string detail = {}, bool claim = true);
  /// FAIL if any check failed, PARTIAL if a claimed property was skipped, PASS otherwise.
  Verdict verdict() const;
  std::optional<std::string> first_failure() const;

  /// Deterministic report body (no timings).
  Json canonical_json() const;
  /// {"report": canonical body, "timings_ms": {...}}.
  Json envelope() const;
  std::string markdown() const;
};

Json field_json(const FieldContext& f);
/// Log exponent, -1 for zero.
int element_json(Gf x);
Json vector_json(std::span<const Gf> v);
Json matrix_json(const MatrixGF& m);
Json code_json(const LinearCode& c);

}  // namespace hermhull
