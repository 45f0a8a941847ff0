#pragma once

// Finite fields GF(p^m) with table-driven arithmetic and an Eigen scalar type.

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hermhull {

class FieldContext;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotPrime : public FieldError {
 public:
  using FieldError::FieldError;
};
class ReducibleModulus : public FieldError {
 public:
  using FieldError::FieldError;
};
class NonPrimitiveModulus : public FieldError {
 public:
  using FieldError::FieldError;
};
class NoQuadraticStructure : public FieldError {
 public:
  using FieldError::FieldError;
};
class NotInSubfield : public FieldError {
 public:
  using FieldError::FieldError;
};

/// Field element. `packed` holds polynomial-basis coordinates as base-p digits.
/// The integer literals 0 and 1 are accepted without a field so that Eigen's
/// Scalar(0)/Scalar(1) work; any operation adopts the context of the other operand.
class Gf {
 public:
  Gf() = default;
  Gf(int literal);  // NOLINT(google-explicit-constructor)
  Gf(const FieldContext& field, std::uint32_t packed) noexcept : field_(&field), value_(packed) {}

  const FieldContext* field() const noexcept { return field_; }
  std::uint32_t packed() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  /// Discrete log to the base of the field's primitive element, -1 for zero.
  int log() const;
  Gf inverse() const;
  Gf pow(long long e) const;

  Gf& operator+=(Gf o);
  Gf& operator-=(Gf o);
  Gf& operator*=(Gf o);
  Gf& operator/=(Gf o);

  friend Gf operator+(Gf a, Gf b) { return a += b; }
  friend Gf operator-(Gf a, Gf b) { return a -= b; }
  friend Gf operator*(Gf a, Gf b) { return a *= b; }
  friend Gf operator/(Gf a, Gf b) { return a /= b; }
  friend Gf operator-(Gf a);
  friend bool operator==(Gf a, Gf b) noexcept { return a.value_ == b.value_; }
  friend bool operator!=(Gf a, Gf b) noexcept { return a.value_ != b.value_; }

 private:
  const FieldContext* field_ = nullptr;
  std::uint32_t value_ = 0;
};

/// Embedding of a subfield into a larger field, as packed-value maps.
struct SubfieldMap {
  const FieldContext* sub = nullptr;
  const FieldContext* big = nullptr;
  std::vector<std::uint32_t> up;                    // sub packed -> big packed
  std::vector<std::int64_t> down;                   // big packed -> sub packed or -1
  Gf embed(Gf x) const;
  std::optional<Gf> restrict(Gf x) const;
};

class FieldContext {
 public:
  FieldContext(int p, int m, std::vector<int> modulus, bool conway);
  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return m_; }
  std::uint32_t size() const noexcept { return size_; }
  /// Coefficients c_0..c_m of the monic modulus.
  const std::vector<int>& modulus() const noexcept { return modulus_; }
  bool is_conway() const noexcept { return conway_; }
  std::string name() const;

  Gf zero() const noexcept { return Gf(*this, 0); }
  Gf one() const noexcept { return Gf(*this, 1); }
  Gf primitive() const noexcept { return exp(1); }
  Gf exp(long long e) const noexcept {
    long long r = e % static_cast<long long>(size_ - 1);
    if (r < 0) r += size_ - 1;
    return Gf(*this, exp_[static_cast<std::size_t>(r)]);
  }
  Gf element(std::uint32_t packed) const;
  Gf from_integer(long long n) const noexcept;
  Gf from_coefficients(std::span<const int> c) const;
  std::vector<int> coefficients(Gf x) const;
  int log(Gf x) const noexcept { return x.is_zero() ? -1 : static_cast<int>(log_[x.packed()]); }
  /// All elements in packed order (0 first).
  std::vector<Gf> elements() const;
  /// Nonzero elements as alpha^0, alpha^1, ..., alpha^{Q-2}.
  std::vector<Gf> powers() const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    if (!add_table_.empty()) return add_table_[a * size_ + b];
    return add_slow(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg_[b]); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const;

  /// True when the degree is even, i.e. the field is GF(q^2) for q = p^{m/2}.
  bool is_quadratic() const noexcept { return m_ % 2 == 0; }
  std::uint32_t q() const;
  const SubfieldMap& half() const;

 private:
  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const noexcept;

  int p_;
  int m_;
  std::uint32_t size_;
  std::vector<int> modulus_;
  bool conway_;
  std::vector<std::uint32_t> exp_;  // length 2(Q-1) so log sums need no reduction
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint32_t> pow_p_;  // p^i for digit extraction
  SubfieldMap half_;

  friend const FieldContext& make_field(int, int, std::optional<std::vector<int>>);
};

/// Registry-backed field construction. Contexts live for the process lifetime.
/// Without a modulus the Conway polynomial is used.
const FieldContext& make_field(int p, int m, std::optional<std::vector<int>> modulus = std::nullopt);
/// Modulus used by make_field(p, m) when none is given; nullopt restores the Conway default.
void set_default_modulus(int p, int m, std::optional<std::vector<int>> modulus);
/// GF(q) for a prime power q.
const FieldContext& field_of_order(std::uint32_t q);
/// GF(q^2) with q a prime power, optionally with an explicit modulus.
const FieldContext& quadratic_field(std::uint32_t q, std::optional<std::vector<int>> modulus = std::nullopt);

bool is_prime(long long n);
/// (p, e) with q = p^e, or nullopt.
std::optional<std::pair<int, int>> prime_power(long long q);
bool is_irreducible_mod_p(int p, std::span<const int> monic);
std::vector<int> conway_polynomial(int p, int m);
/// Coefficients (over the prime field) of the minimal polynomial of x, monic, low degree first.
std::vector<int> minimal_polynomial(Gf x);
/// Embedding of `sub` into `big`; requires the image of sub's primitive element to be
/// a root of sub's modulus among the powers alpha^{j(|big|-1)/(|sub|-1)}.
SubfieldMap subfield_map(const FieldContext& sub, const FieldContext& big);

/// x^q in GF(q^2).
Gf frobenius_q(Gf x);
/// (x + x^q, x^{q+1}).
std::pair<Gf, Gf> trace_norm(Gf x);
/// Smallest-exponent a with a^{q+1} = x, for x in GF(q)^*.
Gf solve_norm(Gf x);
/// x != 0 and x^q = x.
bool is_norm(Gf x);

}  // namespace hermhull

namespace Eigen {
template <>
struct NumTraits<hermhull::Gf> : GenericNumTraits<hermhull::Gf> {
  using Real = hermhull::Gf;
  using NonInteger = hermhull::Gf;
  using Literal = hermhull::Gf;
  using Nested = hermhull::Gf;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static hermhull::Gf epsilon() { return hermhull::Gf(0); }
  static hermhull::Gf dummy_precision() { return hermhull::Gf(0); }
  static int digits10() { return 0; }
};
}  // namespace Eigen

namespace hermhull {

namespace detail {
[[noreturn]] void literal_overflow();
inline const FieldContext* pick(const FieldContext* a, const FieldContext* b) noexcept { return a ? a : b; }
}  // namespace detail

inline Gf::Gf(int literal) : value_(static_cast<std::uint32_t>(literal)) {
  if (literal != 0 && literal != 1) detail::literal_overflow();
}

inline Gf& Gf::operator+=(Gf o) {
  const FieldContext* f = detail::pick(field_, o.field_);
  if (!f) {
    if (value_ && o.value_) detail::literal_overflow();
    value_ |= o.value_;
    return *this;
  }
  field_ = f;
  value_ = f->add(value_, o.value_);
  return *this;
}

inline Gf& Gf::operator-=(Gf o) {
  const FieldContext* f = detail::pick(field_, o.field_);
  if (!f) {
    if (o.value_ && !value_) detail::literal_overflow();
    value_ ^= o.value_;
    return *this;
  }
  field_ = f;
  value_ = f->sub(value_, o.value_);
  return *this;
}

inline Gf& Gf::operator*=(Gf o) {
  const FieldContext* f = detail::pick(field_, o.field_);
  if (!f) {
    value_ &= o.value_;
    return *this;
  }
  field_ = f;
  value_ = f->mul(value_, o.value_);
  return *this;
}

inline Gf& Gf::operator/=(Gf o) {
  const FieldContext* f = detail::pick(field_, o.field_);
  if (!f) {
    if (!o.value_) throw std::domain_error("division by zero");
    return *this;
  }
  field_ = f;
  value_ = f->mul(value_, f->inv(o.value_));
  return *this;
}

inline Gf operator-(Gf a) {
  if (!a.field_) {
    if (a.value_) detail::literal_overflow();
    return a;
  }
  a.value_ = a.field_->neg(a.value_);
  return a;
}

}  // namespace hermhull
