#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hermhull/gf.hpp"

namespace hermhull {

/// Univariate polynomial over a finite field, coefficients low degree first, trimmed.
class Polynomial {
 public:
  explicit Polynomial(const FieldContext& f) : field_(&f) {}
  Polynomial(const FieldContext& f, std::vector<Gf> coeffs);
  static Polynomial constant(Gf c);
  static Polynomial monomial(const FieldContext& f, int degree, Gf c);
  /// prod (x - r) over the given roots.
  static Polynomial from_roots(const FieldContext& f, std::span<const Gf> roots);

  const FieldContext& field() const { return *field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Gf coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : field_->zero(); }
  Gf leading() const { return c_.empty() ? field_->zero() : c_.back(); }
  const std::vector<Gf>& coeffs() const { return c_; }

  Gf operator()(Gf x) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  /// Multiplicity of x = a as a root.
  int root_multiplicity(Gf a) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Gf s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  const FieldContext* field_;
  std::vector<Gf> c_;
};

/// (quotient, remainder).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace hermhull
