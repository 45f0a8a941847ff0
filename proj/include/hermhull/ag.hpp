#pragma once

// Genus-0 function field machinery over GF(q^2): divisors on the projective line,
// Riemann-Roch spaces, evaluation codes and residues of dx/h(x).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hermhull/code.hpp"
#include "hermhull/poly.hpp"
#include "hermhull/report.hpp"

namespace hermhull {

/// Rational place: P_beta for finite beta, or O (pole of x).
struct Place {
  bool infinite = false;
  std::uint32_t beta = 0;  // packed element, unused for O

  static Place finite(Gf b) { return {false, b.packed()}; }
  static Place at_infinity() { return {true, 0}; }
  auto operator<=>(const Place&) const = default;
};

class Divisor {
 public:
  Divisor() = default;
  static Divisor of(Place p, int mult = 1);

  int operator[](Place p) const;
  const std::map<Place, int>& support() const { return m_; }
  int degree() const;
  /// Pointwise >=.
  bool geq(const Divisor& o) const;

  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend Divisor operator-(const Divisor& a, const Divisor& b);
  friend Divisor operator*(int s, const Divisor& a);
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.m_ == b.m_; }
  /// Pointwise min and max.
  friend Divisor wedge(const Divisor& a, const Divisor& b);
  friend Divisor vee(const Divisor& a, const Divisor& b);

 private:
  void set(Place p, int v);
  std::map<Place, int> m_;
};

/// dim L(G) on the projective line: max(0, deg G + 1).
int rr_dim(const Divisor& g);

/// num/den with the gcd removed and the denominator monic.
class RationalFunction {
 public:
  RationalFunction(Polynomial num, Polynomial den);
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  int valuation(Place p) const;
  /// Principal divisor (f); degree 0.
  Divisor divisor() const;
  Gf operator()(Gf x) const;

 private:
  Polynomial num_, den_;
};

/// Basis of L(G). For G = kO + P_p this is {1, x, ..., x^k, 1/(x - p)}.
std::vector<RationalFunction> lbasis(const FieldContext& f, const Divisor& g);

/// Evaluation code C_L(D, G), D the sum of P_u over `points`; G must avoid supp D.
LinearCode evaluation_code(const FieldContext& f, std::span<const Gf> points, const Divisor& g);

enum class WitnessRule { SmallestExponent, LargestExponent };

struct DifferentialData {
  std::vector<Gf> points;
  Polynomial h;
  std::vector<Gf> residues;  // 1 / h'(u_i)
  Gf residue_sum;
  /// Smallest-exponent lambda with lambda * r_i in GF(q)^* for every i, if any.
  std::optional<Gf> normalizer;
  /// a_i with a_i^{q+1} = lambda * r_i; empty without a normalizer.
  std::vector<Gf> witnesses;
};

/// Residues of dx/h at the zeros of h = prod (x - u).
DifferentialData residues(const FieldContext& f, std::span<const Gf> points,
                          WitnessRule rule = WitnessRule::SmallestExponent);

enum class EvalFamily { COR1, COR2, COR3 };
std::string to_string(EvalFamily f);
std::optional<EvalFamily> parse_eval_family(const std::string& s);

struct EvalParams {
  std::uint32_t q = 0;
  int s = 0;   // COR1 length
  int t = 0;   // COR2, COR3
  int n0 = 0;  // COR3
};

std::optional<std::string> eval_range_violation(EvalFamily fam, const EvalParams& p);
/// Every in-range parameter tuple at this q.
std::vector<EvalParams> eval_in_range(EvalFamily fam, std::uint32_t q);
/// The evaluation set; all residues of dx/h are checked to lie in GF(q)^*.
std::vector<Gf> evaluation_set(EvalFamily fam, const EvalParams& p);

struct TwoPointOptions {
  std::optional<Gf> extra_point;  // defaults to the smallest element outside U
  WitnessRule rule = WitnessRule::SmallestExponent;
  std::uint64_t budget = kDefaultBudget;
  int enumerate_hull_upto = 3;  // enumerate hull distance when its dimension is at most this
};

struct TwoPointCode {
  LinearCode code;  // a . C_L(D, kO + P)
  LinearCode base;  // a . C_L(D, kO)
  DifferentialData diff;
  Gf extra_point;
  int branch = 0;  // 1: self-orthogonal branch, 2: hull branch
  ConstructionReport report;
};

/// k is the degree of the one-point part; the code has dimension k + 2.
TwoPointCode two_point_code(const FieldContext& f, std::span<const Gf> points, int k, const TwoPointOptions& opt = {});

/// Extended variant with scaling vector (a_1, ..., a_n, 0) on C_L extended by -sum.
/// Reports the measured parameters against the [n+1, k+2, n-k] claim.
TwoPointCode extended_two_point(const FieldContext& f, std::span<const Gf> points, int k,
                                const TwoPointOptions& opt = {});

/// Multiplies the last l pivot columns of the base code's RREF (as coordinates of the
/// whole two-point code) by alpha, default primitive. Requires alpha^{q+1} != 1 and 0 <= l <= k.
LinearCode scale_for_hull(const TwoPointCode& c, int l, std::optional<Gf> alpha = std::nullopt);
/// Measured hull dimensions of scale_for_hull(c, l) for l = 0..k.
std::vector<int> hull_sweep(const TwoPointCode& c, std::optional<Gf> alpha = std::nullopt);

struct GrowthStep {
  std::vector<Gf> set;
  std::pair<Gf, Gf> added;
  bool conjugate_pair;
};

struct GrowthResult {
  std::vector<GrowthStep> steps;
  bool exhausted = false;  // stopped because no admissible pair remained
};

/// True when f'(u) is a nonzero norm for every u, f = prod (x - u).
bool derivative_norm_condition(const FieldContext& f, std::span<const Gf> points);

/// Repeatedly adds a pair (b1, b2) outside the set keeping the derivative-norm condition.
/// Conjugate pairs (b, b^q) are tried first in log order of b, then all pairs.
GrowthResult extend_evaluation_set(const FieldContext& f, std::vector<Gf> start, int max_steps);

}  // namespace hermhull
