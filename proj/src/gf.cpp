#include "hermhull/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

namespace hermhull {

namespace detail {
void literal_overflow() { throw std::logic_error("field-free literal outside {0, 1}"); }
}  // namespace detail

namespace {

constexpr std::uint32_t kMaxFieldSize = 1u << 16;

// Dense polynomials over GF(p), low degree first, trimmed.
using Zp = std::vector<int>;

void trim(Zp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  int r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = static_cast<int>(1LL * r * b % p);
    b = static_cast<int>(1LL * b * b % p);
    e >>= 1;
  }
  return r;
}

Zp poly_mod(Zp a, const Zp& f, int p) {
  trim(a);
  const int df = static_cast<int>(f.size()) - 1;
  const int lead_inv = inv_mod(f.back(), p);
  while (static_cast<int>(a.size()) - 1 >= df && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - df;
    const int c = static_cast<int>(1LL * a.back() * lead_inv % p);
    for (int i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<int>(((a[shift + i] - 1LL * c * f[i]) % p + p) % p);
    }
    trim(a);
  }
  return a;
}

Zp poly_mul(const Zp& a, const Zp& b, int p) {
  if (a.empty() || b.empty()) return {};
  Zp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = static_cast<int>((r[i + j] + 1LL * a[i] * b[j]) % p);
  }
  trim(r);
  return r;
}

Zp mulmod(const Zp& a, const Zp& b, const Zp& f, int p) { return poly_mod(poly_mul(a, b, p), f, p); }

Zp powmod(Zp base, unsigned long long e, const Zp& f, int p) {
  Zp r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Zp poly_gcd(Zp a, Zp b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Zp r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Evaluates g (integer coefficients) at r in GF(p)[x]/f.
Zp eval_at(const std::vector<int>& g, const Zp& r, const Zp& f, int p) {
  Zp acc;
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    acc = mulmod(acc, r, f, p);
    if (acc.empty()) acc.push_back(0);
    acc[0] = (acc[0] + *it) % p;
    trim(acc);
  }
  return acc;
}

std::vector<unsigned long long> prime_factors(unsigned long long n) {
  std::vector<unsigned long long> out;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

unsigned long long ipow(unsigned long long b, int e) {
  unsigned long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool order_is_full(const Zp& f, int p, int m) {
  const unsigned long long n = ipow(p, m) - 1;
  const Zp x{0, 1};
  if (powmod(x, n, f, p) != Zp{1}) return false;
  for (auto r : prime_factors(n)) {
    if (powmod(x, n / r, f, p) == Zp{1}) return false;
  }
  return true;
}

struct Registry {
  std::recursive_mutex mu;
  std::map<std::tuple<int, int, std::vector<int>>, std::unique_ptr<FieldContext>> fields;
  std::map<std::pair<int, int>, std::vector<int>> conway;
  std::map<std::pair<int, int>, std::vector<int>> defaults;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power(long long q) {
  if (q < 2) return std::nullopt;
  long long p = 2;
  while (q % p) ++p;
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<int>(p), e);
}

bool is_irreducible_mod_p(int p, std::span<const int> monic) {
  Zp f(monic.begin(), monic.end());
  trim(f);
  const int m = static_cast<int>(f.size()) - 1;
  if (m < 1) return false;
  if (m == 1) return true;
  // Ben-Or: f is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= m/2.
  Zp r{0, 1};
  for (int i = 1; i <= m / 2; ++i) {
    r = powmod(r, static_cast<unsigned long long>(p), f, p);
    Zp d = r;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] - 1 + p) % p;
    trim(d);
    if (d.empty()) return false;
    if (poly_gcd(d, f, p).size() > 1) return false;
  }
  return true;
}

std::vector<int> conway_polynomial(int p, int m) {
  if (!is_prime(p)) throw NotPrime("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw FieldError("extension degree must be positive");
  if (ipow(p, m) > kMaxFieldSize) throw FieldError("field too large");
  auto& reg = registry();
  {
    std::lock_guard lock(reg.mu);
    if (auto it = reg.conway.find({p, m}); it != reg.conway.end()) return it->second;
  }
  std::vector<std::pair<int, std::vector<int>>> sub;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) sub.emplace_back(d, conway_polynomial(p, d));

  const unsigned long long total = ipow(p, m);
  const unsigned long long big = total - 1;
  for (unsigned long long t = 0; t < total; ++t) {
    // Digits of t, most significant first, are the signed coefficients a_{m-1}..a_0.
    Zp f(m + 1, 0);
    f[m] = 1;
    unsigned long long rest = t;
    for (int i = 0; i < m; ++i) {
      const int a = static_cast<int>(rest % p);
      rest /= p;
      f[i] = ((m - i) % 2 == 0) ? a : (p - a) % p;
    }
    if (f[0] == 0 || !order_is_full(f, p, m)) continue;
    bool compatible = true;
    for (const auto& [d, cd] : sub) {
      const auto n = big / (ipow(p, d) - 1);
      if (!eval_at(cd, powmod(Zp{0, 1}, n, f, p), f, p).empty()) {
        compatible = false;
        break;
      }
    }
    if (!compatible) continue;
    std::lock_guard lock(reg.mu);
    reg.conway[{p, m}] = f;
    return f;
  }
  throw FieldError("no Conway polynomial found");
}

FieldContext::FieldContext(int p, int m, std::vector<int> modulus, bool conway)
    : p_(p), m_(m), size_(static_cast<std::uint32_t>(ipow(p, m))), modulus_(std::move(modulus)), conway_(conway) {
  pow_p_.resize(m + 1);
  pow_p_[0] = 1;
  for (int i = 1; i <= m; ++i) pow_p_[i] = pow_p_[i - 1] * p;

  const std::uint32_t n = size_ - 1;
  exp_.assign(2 * static_cast<std::size_t>(n), 0);
  log_.assign(size_, 0);
  std::vector<int> cur(m, 0);
  cur[0] = 1;
  std::vector<bool> seen(size_, false);
  for (std::uint32_t e = 0; e < n; ++e) {
    std::uint32_t packed = 0;
    for (int i = 0; i < m; ++i) packed += cur[i] * pow_p_[i];
    if (seen[packed]) throw NonPrimitiveModulus("modulus is irreducible but not primitive");
    seen[packed] = true;
    exp_[e] = exp_[e + n] = packed;
    log_[packed] = e;
    // Multiply by x and reduce with x^m = -sum c_i x^i.
    const int top = cur[m - 1];
    for (int i = m - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < m; ++i) cur[i] = ((cur[i] - top * modulus_[i]) % p + p) % p;
  }

  neg_.resize(size_);
  for (std::uint32_t a = 0; a < size_; ++a) {
    std::uint32_t r = 0;
    for (int i = 0; i < m; ++i) {
      const std::uint32_t d = (a / pow_p_[i]) % p;
      r += ((p - d) % p) * pow_p_[i];
    }
    neg_[a] = r;
  }
  if (size_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(size_) * size_);
    for (std::uint32_t a = 0; a < size_; ++a)
      for (std::uint32_t b = 0; b < size_; ++b) add_table_[a * size_ + b] = static_cast<std::uint16_t>(add_slow(a, b));
  }
}

std::uint32_t FieldContext::add_slow(std::uint32_t a, std::uint32_t b) const noexcept {
  if (p_ == 2) return a ^ b;
  std::uint32_t r = 0;
  for (int i = 0; i < m_; ++i) {
    const std::uint32_t s = (a / pow_p_[i] + b / pow_p_[i]) % p_;
    r += s * pow_p_[i];
  }
  return r;
}

std::uint32_t FieldContext::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t n = size_ - 1;
  return exp_[(n - log_[a]) % n];
}

std::string FieldContext::name() const { return "GF(" + std::to_string(size_) + ")"; }

Gf FieldContext::element(std::uint32_t packed) const {
  if (packed >= size_) throw std::out_of_range("packed value outside field");
  return Gf(*this, packed);
}

Gf FieldContext::from_integer(long long n) const noexcept {
  long long r = n % p_;
  if (r < 0) r += p_;
  return Gf(*this, static_cast<std::uint32_t>(r));
}

Gf FieldContext::from_coefficients(std::span<const int> c) const {
  if (static_cast<int>(c.size()) > m_) throw std::invalid_argument("too many coefficients");
  std::uint32_t packed = 0;
  for (std::size_t i = 0; i < c.size(); ++i) packed += static_cast<std::uint32_t>(((c[i] % p_) + p_) % p_) * pow_p_[i];
  return Gf(*this, packed);
}

std::vector<int> FieldContext::coefficients(Gf x) const {
  std::vector<int> c(m_);
  for (int i = 0; i < m_; ++i) c[i] = static_cast<int>((x.packed() / pow_p_[i]) % p_);
  return c;
}

std::vector<Gf> FieldContext::elements() const {
  std::vector<Gf> out;
  out.reserve(size_);
  for (std::uint32_t v = 0; v < size_; ++v) out.emplace_back(*this, v);
  return out;
}

std::vector<Gf> FieldContext::powers() const {
  std::vector<Gf> out;
  out.reserve(size_ - 1);
  for (std::uint32_t e = 0; e + 1 < size_; ++e) out.emplace_back(*this, exp_[e]);
  return out;
}

std::uint32_t FieldContext::q() const {
  if (!is_quadratic()) throw NoQuadraticStructure(name() + " has odd degree");
  return pow_p_[m_ / 2];
}

const SubfieldMap& FieldContext::half() const {
  if (!is_quadratic()) throw NoQuadraticStructure(name() + " has odd degree");
  return half_;
}

Gf SubfieldMap::embed(Gf x) const { return Gf(*big, up.at(x.packed())); }

std::optional<Gf> SubfieldMap::restrict(Gf x) const {
  const auto v = down.at(x.packed());
  if (v < 0) return std::nullopt;
  return Gf(*sub, static_cast<std::uint32_t>(v));
}

std::vector<int> minimal_polynomial(Gf x) {
  const FieldContext& f = *x.field();
  std::vector<Gf> conj{x};
  for (Gf y = x.pow(f.characteristic()); y != x; y = y.pow(f.characteristic())) conj.push_back(y);
  std::vector<Gf> poly{f.one()};
  for (Gf c : conj) {
    std::vector<Gf> next(poly.size() + 1, f.zero());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= c * poly[i];
    }
    poly = std::move(next);
  }
  std::vector<int> out;
  for (Gf c : poly) {
    if (c.packed() >= static_cast<std::uint32_t>(f.characteristic())) throw std::logic_error("minimal polynomial not over prime field");
    out.push_back(static_cast<int>(c.packed()));
  }
  return out;
}

SubfieldMap subfield_map(const FieldContext& sub, const FieldContext& big) {
  if (sub.characteristic() != big.characteristic() || big.degree() % sub.degree() != 0)
    throw FieldError(sub.name() + " is not a subfield of " + big.name());
  const std::uint32_t ns = sub.size() - 1;
  const std::uint32_t step = (big.size() - 1) / ns;
  const auto& mod = sub.modulus();
  for (std::uint32_t j = 1; j <= ns; ++j) {
    if (std::gcd(j, ns) != 1) continue;
    const Gf beta = big.exp(static_cast<long long>(j) * step);
    Gf acc = big.zero();
    for (auto it = mod.rbegin(); it != mod.rend(); ++it) acc = acc * beta + big.from_integer(*it);
    if (!acc.is_zero()) continue;
    SubfieldMap map;
    map.sub = &sub;
    map.big = &big;
    map.up.assign(sub.size(), 0);
    map.down.assign(big.size(), -1);
    map.down[0] = 0;
    for (std::uint32_t e = 0; e < ns; ++e) {
      const std::uint32_t s = sub.exp(e).packed();
      const std::uint32_t b = big.exp(static_cast<long long>(e) * j * step).packed();
      map.up[s] = b;
      map.down[b] = s;
    }
    return map;
  }
  throw FieldError("no embedding of " + sub.name() + " into " + big.name());
}

const FieldContext& make_field(int p, int m, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) throw NotPrime("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw FieldError("extension degree must be positive");
  if (ipow(p, m) > kMaxFieldSize) throw FieldError("field too large");
  const std::vector<int> conway = conway_polynomial(p, m);
  if (!modulus) {
    auto& reg = registry();
    std::lock_guard lock(reg.mu);
    if (auto it = reg.defaults.find({p, m}); it != reg.defaults.end()) modulus = it->second;
  }
  std::vector<int> mod = modulus.value_or(conway);
  if (static_cast<int>(mod.size()) != m + 1 || mod.back() != 1)
    throw FieldError("modulus must be monic of degree " + std::to_string(m));
  for (int c : mod)
    if (c < 0 || c >= p) throw FieldError("modulus coefficient outside [0, p)");
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto key = std::make_tuple(p, m, mod);
  if (auto it = reg.fields.find(key); it != reg.fields.end()) return *it->second;
  if (!is_irreducible_mod_p(p, mod)) throw ReducibleModulus("modulus is reducible over GF(" + std::to_string(p) + ")");
  auto ctx = std::make_unique<FieldContext>(p, m, mod, mod == conway);
  if (m % 2 == 0) {
    const FieldContext& half = make_field(p, m / 2, minimal_polynomial(ctx->exp(ctx->q() + 1)));
    ctx->half_ = subfield_map(half, *ctx);
  }
  const FieldContext& out = *ctx;
  reg.fields.emplace(std::move(key), std::move(ctx));
  return out;
}

void set_default_modulus(int p, int m, std::optional<std::vector<int>> modulus) {
  if (modulus) make_field(p, m, modulus);  // validate before installing
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  if (modulus)
    reg.defaults[{p, m}] = *modulus;
  else
    reg.defaults.erase({p, m});
}

const FieldContext& field_of_order(std::uint32_t q) {
  auto pp = prime_power(q);
  if (!pp) throw NotPrime(std::to_string(q) + " is not a prime power");
  return make_field(pp->first, pp->second);
}

const FieldContext& quadratic_field(std::uint32_t q, std::optional<std::vector<int>> modulus) {
  auto pp = prime_power(q);
  if (!pp) throw NotPrime(std::to_string(q) + " is not a prime power");
  return make_field(pp->first, 2 * pp->second, std::move(modulus));
}

int Gf::log() const {
  if (!field_) return value_ ? 0 : -1;
  return field_->log(*this);
}

Gf Gf::inverse() const {
  if (value_ == 0) throw std::domain_error("inverse of zero");
  if (!field_) return *this;
  return Gf(*field_, field_->inv(value_));
}

Gf Gf::pow(long long e) const {
  if (value_ == 0) {
    if (e < 0) throw std::domain_error("negative power of zero");
    if (e == 0) return field_ ? field_->one() : Gf(1);
    return *this;
  }
  if (!field_) return *this;
  return field_->exp(static_cast<long long>(field_->log(*this)) * e);
}

Gf frobenius_q(Gf x) {
  if (!x.field()) return x;
  if (x.is_zero()) return x;
  return x.pow(x.field()->q());
}

std::pair<Gf, Gf> trace_norm(Gf x) {
  const Gf y = frobenius_q(x);
  return {x + y, x * y};
}

bool is_norm(Gf x) {
  if (x.field()) x.field()->q();
  return !x.is_zero() && frobenius_q(x) == x;
}

Gf solve_norm(Gf x) {
  if (!is_norm(x)) throw NotInSubfield("value is not a nonzero element of GF(q)");
  if (!x.field()) return x;
  const FieldContext& f = *x.field();
  const long long q = f.q();
  return f.exp(f.log(x) / (q + 1));
}

}  // namespace hermhull
