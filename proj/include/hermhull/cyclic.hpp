#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hermhull/code.hpp"
#include "hermhull/poly.hpp"

namespace hermhull {

/// Smallest r > 0 with q^r = 1 mod n.
int multiplicative_order(std::uint32_t q, int n);
/// { i q^t mod n }, sorted.
std::vector<int> cyclotomic_coset(int n, std::uint32_t q, int i);
/// All cosets, ordered by minimal representative.
std::vector<std::vector<int>> cyclotomic_cosets(int n, std::uint32_t q);
/// Sorted q-closed defining set D_{k,l} of length q^2 - 1.
std::vector<int> defining_set_dkl(std::uint32_t q, int k, int l);

struct CyclicCode {
  int n;
  const FieldContext* base;
  const FieldContext* splitting;
  Gf beta;  // primitive n-th root of unity alpha^{(|splitting|-1)/n}
  std::vector<int> defining_set;
  Polynomial generator_poly;  // over base
  LinearCode code;

  /// Rows (1, beta^i, ..., beta^{i(n-1)}) for i in D, over the splitting field.
  MatrixGF parity_matrix() const;
};

CyclicCode cyclic_from_defining_set(int n, std::uint32_t q, std::vector<int> defining_set);
/// The code spanned by the trace family of the generating set (complement of D).
LinearCode cyclic_from_trace(int n, std::uint32_t q, std::span<const int> defining_set);
/// Best Hartmann-Tzeng bound x + y over all progressions contained in D.
int ht_bound(int n, std::span<const int> defining_set);

/// Extension of the cyclic code with defining set D_{k,l}, length q^2, over GF(q).
LinearCode extended_dkl(std::uint32_t q, int k, int l);

/// Coefficients of the trace-representation family; see eqtr_codeword.
struct EqtrParams {
  std::map<int, Gf> diagonal;                  // theta_{t,t}, t in [k-1, q-1], values in GF(q)
  std::map<std::pair<int, int>, Gf> off;       // theta_{i,j}, (i,j) in T, values in GF(q^2)
};

/// T = { (i, j) : i in [k, q-1], j in [0, k-1] or [i+1, q-1] }.
std::vector<std::pair<int, int>> eqtr_index_set(std::uint32_t q, int k);
/// Codeword of E(D_{k,k-1}) \ E(D_{k,k}) over GF(q) built from the trace family;
/// the last coordinate is -sum(c_r), which equals theta_{q-1,q-1}.
RowVectorGF eqtr_codeword(const FieldContext& gfq2, int k, const EqtrParams& params);

/// Rains' code { a in GF(q)^n : sum a_i u_i v_i^q = 0 for u in u_code, v in v_code }.
/// The form is linear in u and semilinear in v, so basis pairs of the two RREF
/// generators give a complete constraint set.
LinearCode rains_p(const LinearCode& u_code, const LinearCode& v_code);
inline LinearCode rains_p(const LinearCode& c) { return rains_p(c, c); }

}  // namespace hermhull
