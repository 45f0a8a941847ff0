#include "hermhull/poly.hpp"

#include <stdexcept>

namespace hermhull {

Polynomial::Polynomial(const FieldContext& f, std::vector<Gf> coeffs) : field_(&f), c_(std::move(coeffs)) {
  for (auto& c : c_) c = Gf(f, c.packed());
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(Gf c) { return Polynomial(*c.field(), {c}); }

Polynomial Polynomial::monomial(const FieldContext& f, int degree, Gf c) {
  std::vector<Gf> v(degree + 1, f.zero());
  v[degree] = c;
  return Polynomial(f, std::move(v));
}

Polynomial Polynomial::from_roots(const FieldContext& f, std::span<const Gf> roots) {
  Polynomial p(f, {f.one()});
  for (Gf r : roots) p = p * Polynomial(f, {-r, f.one()});
  return p;
}

Gf Polynomial::operator()(Gf x) const {
  Gf acc = field_->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Gf> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(field_->from_integer(static_cast<long long>(i)) * c_[i]);
  return Polynomial(*field_, std::move(d));
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  return leading().inverse() * *this;
}

int Polynomial::root_multiplicity(Gf a) const {
  if (is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
  const Polynomial lin(*field_, {-a, field_->one()});
  Polynomial cur = *this;
  int k = 0;
  while (true) {
    auto [qt, r] = divmod(cur, lin);
    if (!r.is_zero()) return k;
    cur = std::move(qt);
    ++k;
  }
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Gf> r(std::max(a.c_.size(), b.c_.size()), a.field_->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return Polynomial(*a.field_, std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Gf(-b.field_->one()) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(*a.field_);
  std::vector<Gf> r(a.c_.size() + b.c_.size() - 1, a.field_->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(*a.field_, std::move(r));
}

Polynomial operator*(Gf s, const Polynomial& a) {
  std::vector<Gf> r = a.c_;
  for (auto& c : r) c *= s;
  return Polynomial(*a.field_, std::move(r));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const FieldContext& f = a.field();
  std::vector<Gf> rem = a.coeffs();
  const int db = b.degree();
  const Gf lead_inv = b.leading().inverse();
  std::vector<Gf> quot(std::max(0, a.degree() - db + 1), f.zero());
  for (int i = a.degree(); i >= db; --i) {
    const Gf c = rem[i] * lead_inv;
    if (c.is_zero()) continue;
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeff(j);
  }
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace hermhull
