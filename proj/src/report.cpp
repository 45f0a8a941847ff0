#include "hermhull/report.hpp"

#include <sstream>

namespace hermhull {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Verified: return "verified";
    case CheckStatus::Structural: return "structural";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Failed: return "failed";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Partial: return "PARTIAL";
    case Verdict::Fail: return "FAIL";
  }
  return "?";
}

void ConstructionReport::add(std::string name, CheckStatus status, std::string detail, bool claim) {
  checks.push_back({std::move(name), status, std::move(detail), claim});
}

Verdict ConstructionReport::verdict() const {
  bool partial = false;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Failed) return Verdict::Fail;
    if (c.status == CheckStatus::Skipped && c.claim) partial = true;
  }
  return partial ? Verdict::Partial : Verdict::Pass;
}

std::optional<std::string> ConstructionReport::first_failure() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Failed) return c.name;
  return std::nullopt;
}

Json field_json(const FieldContext& f) {
  return Json{{"p", f.characteristic()}, {"m", f.degree()}, {"modulus", f.modulus()}};
}

int element_json(Gf x) { return x.log(); }

Json vector_json(std::span<const Gf> v) {
  Json out = Json::array();
  for (Gf x : v) out.push_back(x.log());
  return out;
}

Json matrix_json(const MatrixGF& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).log());
    out.push_back(std::move(row));
  }
  return out;
}

Json code_json(const LinearCode& c) {
  Json out{{"field", field_json(c.field())},
           {"n", c.length()},
           {"k", c.dimension()},
           {"generator", matrix_json(c.generator())}};
  if (auto d = c.known_distance()) out["d"] = *d;
  return out;
}

Json ConstructionReport::canonical_json() const {
  Json out;
  out["family"] = family;
  out["params"] = params;
  out["field"] = field ? field_json(*field) : Json(nullptr);
  Json code{{"n", n}, {"k", k}};
  code["d"] = d ? Json(*d) : Json(nullptr);
  code["d_source"] = d_source;
  out["code"] = std::move(code);
  Json hull;
  hull["claimed_dim"] = hull_dim_claimed ? Json(*hull_dim_claimed) : Json(nullptr);
  hull["measured_dim"] = hull_dim_measured ? Json(*hull_dim_measured) : Json(nullptr);
  out["hull"] = std::move(hull);
  Json cs = Json::array();
  for (const auto& c : checks)
    cs.push_back(Json{{"name", c.name}, {"status", to_string(c.status)}, {"claim", c.claim}, {"detail", c.detail}});
  out["checks"] = std::move(cs);
  out["quantum"] = quantum;
  if (!extra.empty()) out["extra"] = extra;
  out["verdict"] = to_string(verdict());
  if (auto f = first_failure()) out["first_failure"] = *f;
  return out;
}

Json ConstructionReport::envelope() const {
  Json t = Json::object();
  for (const auto& [name, ms] : timings_ms) t[name] = ms;
  return Json{{"report", canonical_json()}, {"timings_ms", std::move(t)}};
}

std::string ConstructionReport::markdown() const {
  std::ostringstream os;
  os << "### " << family << " " << params.dump() << "\n\n";
  os << "- field: " << (field ? field->name() : "?") << "\n";
  os << "- code: [" << n << ", " << k;
  if (d) os << ", " << *d;
  os << "]";
  if (!d_source.empty()) os << " (d " << d_source << ")";
  os << "\n";
  if (hull_dim_claimed || hull_dim_measured) {
    os << "- hull dimension: claimed " << (hull_dim_claimed ? std::to_string(*hull_dim_claimed) : "-") << ", measured "
       << (hull_dim_measured ? std::to_string(*hull_dim_measured) : "-") << "\n";
  }
  os << "\n| check | status | detail |\n|---|---|---|\n";
  for (const auto& c : checks) os << "| " << c.name << " | " << to_string(c.status) << " | " << c.detail << " |\n";
  os << "\n**" << to_string(verdict()) << "**\n";
  return os.str();
}

}  // namespace hermhull
