#pragma once

// Parameter arithmetic for entanglement-assisted quantum codes built from
// classical codes over GF(q^2), and regeneration of the parameter tables.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermhull/report.hpp"

namespace hermhull {

/// [[n, kappa, delta; c]]_q. c = 0 is a plain QECC.
struct QuantumParams {
  int n = 0;
  int kappa = 0;
  int delta = 0;
  int c = 0;
  std::uint32_t q = 0;
  bool pure = false;
  std::string delta_source = "structural";

  friend bool operator==(const QuantumParams& a, const QuantumParams& b) {
    return a.n == b.n && a.kappa == b.kappa && a.delta == b.delta && a.c == b.c && a.q == b.q;
  }
};

std::string to_string(const QuantumParams& p);

/// An [n, k] code over GF(q^2) with Hermitian hull dimension hull_dim. dual_weight is the
/// minimum weight of C^perpH outside the hull (k + 1 for an MDS code).
struct ClassicalIngredient {
  int n = 0;
  int k = 0;
  int hull_dim = 0;
  int dual_weight = 0;
  std::uint32_t q = 0;
  /// Minimum distance of C^perpH, when known; equality with dual_weight marks purity.
  std::optional<int> dual_distance;
  std::string weight_source = "structural";
};

/// Ingredient for an MDS [n, k] code: dual weight and dual distance k + 1.
ClassicalIngredient mds_ingredient(int n, int k, int hull_dim, std::uint32_t q);

/// c = k - hull_dim, kappa = n - 2k + c, delta = dual weight.
QuantumParams eaqecc_from_code(const ClassicalIngredient& ing);

/// [[n, kappa + i, delta; c + i]] for 0 <= i <= hull_dim from a pure code, q > 2.
QuantumParams propagate(const QuantumParams& p, int i, int hull_dim);

struct SingletonCheck {
  int slack_small = 0;  // c + max(0, n - 2 delta + 2) - kappa
  int slack_trivial = 0;  // n - delta + 1 - kappa
  /// (n - delta + 1)(c + 2 delta - 2 - n) - kappa (3 delta - 3 - n), when delta - 1 >= n/2.
  std::optional<long long> slack_large;
  bool mds = false;
};

SingletonCheck singleton_check(const QuantumParams& p);

struct TableRow {
  int table = 0;
  int row = 0;
  std::string variant;  // Q1, Q2', Q3', EA, ...
  std::string source;   // construction that produced the classical code
  Json params;          // construction parameters
  QuantumParams qp;
  SingletonCheck bounds;
  /// Table 3 only: "new", "matches-ref" or "dominated".
  std::string status;
  std::string note;
};

struct ReferenceEntry {
  QuantumParams qp;
  std::string label;
};

/// Previously known MDS EAQECCs over GF(7) with delta > 7, used for dominance checks.
const std::vector<ReferenceEntry>& table3_reference();

/// True when some reference entry at the same (n, kappa) has delta >= and c <=, one strictly.
bool dominated(const QuantumParams& p, const std::vector<ReferenceEntry>& refs);

struct TableOptions {
  bool table1 = true;
  bool table2 = true;
  bool table3 = true;
};

/// Rows regenerated from the constructions at this q. Table 3 collects every row with
/// delta > q; dominance is checked against table3_reference() when q = 7.
std::vector<TableRow> emit_tables(std::uint32_t q, const TableOptions& opt = {});

std::string tables_csv(const std::vector<TableRow>& rows);
Json tables_json(const std::vector<TableRow>& rows);
std::string tables_markdown(const std::vector<TableRow>& rows);
Json quantum_json(const QuantumParams& p);

}  // namespace hermhull
