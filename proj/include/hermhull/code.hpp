#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hermhull/linalg.hpp"

namespace hermhull {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear [n, k] code stored by its reduced row echelon generator.
class LinearCode {
 public:
  /// Rows of `spanning` span the code; they need not be independent.
  LinearCode(const FieldContext& f, const MatrixGF& spanning);
  static LinearCode zero(const FieldContext& f, Index n);
  static LinearCode full(const FieldContext& f, Index n);

  const FieldContext& field() const { return *field_; }
  Index length() const { return n_; }
  Index dimension() const { return generator_.rows(); }
  const MatrixGF& generator() const { return generator_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// Minimum distance when known (set through with_distance or min_distance()).
  std::optional<int> known_distance() const { return distance_; }
  LinearCode with_distance(int d) const;

  bool contains(const RowVectorGF& v) const;
  bool contains(const LinearCode& sub) const;
  /// Basis of the Euclidean dual as rows.
  MatrixGF parity_check() const;

  friend bool operator==(const LinearCode& a, const LinearCode& b);

 private:
  const FieldContext* field_;
  Index n_;
  MatrixGF generator_;
  std::vector<Index> pivots_;
  std::optional<int> distance_;
};

LinearCode euclidean_dual(const LinearCode& c);
LinearCode hermitian_dual(const LinearCode& c);
LinearCode hermitian_hull(const LinearCode& c);
LinearCode intersection(const LinearCode& a, const LinearCode& b);
/// G * G^dagger with G^dagger the q-conjugate transpose.
MatrixGF gram_matrix(const MatrixGF& g);
Index hull_dim_via_gram(const LinearCode& c);
bool is_hermitian_self_orthogonal(const LinearCode& c);

/// Number of codewords (q^k) or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> codeword_count(const LinearCode& c);
/// Exact minimum distance by enumeration. Throws BudgetExceeded when q^k > budget.
/// Uses HERMHULL_THREADS worker threads when set.
int min_distance(const LinearCode& c, std::uint64_t budget = kDefaultBudget);
/// Weight distribution A_0..A_n by full enumeration.
std::vector<std::uint64_t> weight_distribution(const LinearCode& c, std::uint64_t budget = kDefaultBudget);
/// d = n - k + 1 by enumeration.
bool is_mds(const LinearCode& c, std::uint64_t budget = kDefaultBudget);
/// MDS test by checking that every k columns of the generator are independent.
/// Throws BudgetExceeded when binomial(n, k) > budget.
bool is_mds_by_minors(const LinearCode& c, std::uint64_t budget = kDefaultBudget);

/// Deletes the (0-based) coordinates in s.
LinearCode puncture(const LinearCode& c, std::span<const Index> s);
/// Multiplies coordinate i by a[i]; all a[i] must be nonzero.
LinearCode monomial_scale(const LinearCode& c, std::span<const Gf> a);
/// Appends the coordinate -sum(c_i).
LinearCode extend_sum_zero(const LinearCode& c);

/// Splits each GF(q^2) row w into the GF(q) rows x, y with w = x + y*alpha.
MatrixGF split_rows(const MatrixGF& rows, const FieldContext& big);
/// Codewords of c with every entry in GF(q), as a code over GF(q).
LinearCode subfield_subcode(const LinearCode& c);
/// The GF(q^2) code spanned by a GF(q) code.
LinearCode embed_code(const LinearCode& c, const FieldContext& big);

int worker_threads();

}  // namespace hermhull
