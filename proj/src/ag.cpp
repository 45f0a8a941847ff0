#include "hermhull/ag.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

namespace hermhull {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Polynomial linear(const FieldContext& f, Gf root) { return Polynomial(f, {-root, f.one()}); }

Polynomial power(const Polynomial& p, int e) {
  Polynomial r = Polynomial::constant(p.field().one());
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

bool all_zero(const MatrixGF& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

MatrixGF evaluate_rows(const FieldContext& f, std::span<const RationalFunction> fs, std::span<const Gf> points,
                       std::span<const Gf> scale) {
  MatrixGF g(static_cast<Index>(fs.size()), static_cast<Index>(points.size()));
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) {
      Gf v = fs[i](Gf(f, points[j].packed()));
      if (!scale.empty()) v *= scale[j];
      g(static_cast<Index>(i), static_cast<Index>(j)) = v;
    }
  return g;
}

Gf smallest_outside(const FieldContext& f, std::span<const Gf> points) {
  std::set<std::uint32_t> used;
  for (Gf u : points) used.insert(u.packed());
  for (Gf x : f.elements())
    if (!used.count(x.packed())) return x;
  throw std::invalid_argument("evaluation set covers the whole field; no extra place available");
}

std::uint64_t pow_count(std::uint64_t q, Index k) {
  std::uint64_t r = 1;
  for (Index i = 0; i < k; ++i) {
    if (r > UINT64_MAX / q) return UINT64_MAX;
    r *= q;
  }
  return r;
}

// Hull MDS check: enumeration for small hulls, column minors otherwise.
void check_hull_mds(ConstructionReport& rep, const LinearCode& hull, const TwoPointOptions& opt) {
  const Index hk = hull.dimension(), n = hull.length();
  if (hk == 0) {
    rep.add("hull_mds", CheckStatus::Verified, "zero hull");
    return;
  }
  const int want = static_cast<int>(n - hk + 1);
  if (hk <= opt.enumerate_hull_upto && pow_count(hull.field().size(), hk) <= opt.budget) {
    const int d = min_distance(hull, opt.budget);
    rep.extra["hull_distance"] = d;
    rep.add("hull_mds", d == want ? CheckStatus::Verified : CheckStatus::Failed,
            "enumerated d = " + std::to_string(d) + ", n - k + 1 = " + std::to_string(want));
    return;
  }
  try {
    const bool mds = is_mds_by_minors(hull, opt.budget);
    rep.add("hull_mds", mds ? CheckStatus::Verified : CheckStatus::Failed, "all maximal minors nonzero");
  } catch (const BudgetExceeded&) {
    rep.add("hull_mds", CheckStatus::Skipped, "beyond enumeration budget");
  }
}

}  // namespace

Divisor Divisor::of(Place p, int mult) {
  Divisor d;
  d.set(p, mult);
  return d;
}

void Divisor::set(Place p, int v) {
  if (v == 0)
    m_.erase(p);
  else
    m_[p] = v;
}

int Divisor::operator[](Place p) const {
  auto it = m_.find(p);
  return it == m_.end() ? 0 : it->second;
}

int Divisor::degree() const {
  int d = 0;
  for (const auto& [p, v] : m_) d += v;
  return d;
}

bool Divisor::geq(const Divisor& o) const {
  std::set<Place> all;
  for (const auto& [p, v] : m_) all.insert(p);
  for (const auto& [p, v] : o.m_) all.insert(p);
  for (Place p : all)
    if ((*this)[p] < o[p]) return false;
  return true;
}

namespace {
template <class Op>
Divisor combine(const Divisor& a, const Divisor& b, Op op) {
  std::set<Place> all;
  for (const auto& [p, v] : a.support()) all.insert(p);
  for (const auto& [p, v] : b.support()) all.insert(p);
  Divisor out;
  for (Place p : all) out = out + Divisor::of(p, op(a[p], b[p]));
  return out;
}
}  // namespace

Divisor operator+(const Divisor& a, const Divisor& b) {
  Divisor out = a;
  for (const auto& [p, v] : b.m_) out.set(p, out[p] + v);
  return out;
}

Divisor operator-(const Divisor& a, const Divisor& b) { return a + (-1) * b; }

Divisor operator*(int s, const Divisor& a) {
  Divisor out;
  for (const auto& [p, v] : a.m_) out.set(p, s * v);
  return out;
}

Divisor wedge(const Divisor& a, const Divisor& b) {
  return combine(a, b, [](int x, int y) { return std::min(x, y); });
}

Divisor vee(const Divisor& a, const Divisor& b) {
  return combine(a, b, [](int x, int y) { return std::max(x, y); });
}

int rr_dim(const Divisor& g) { return std::max(0, g.degree() + 1); }

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  const Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Gf lead_inv = den_.leading().inverse();
  num_ = lead_inv * num_;
  den_ = lead_inv * den_;
}

int RationalFunction::valuation(Place p) const {
  if (num_.is_zero()) throw std::domain_error("valuation of the zero function");
  if (p.infinite) return den_.degree() - num_.degree();
  const Gf b = num_.field().element(p.beta);
  return num_.root_multiplicity(b) - den_.root_multiplicity(b);
}

Divisor RationalFunction::divisor() const {
  Divisor d;
  for (Gf x : num_.field().elements()) {
    const int v = valuation(Place::finite(x));
    if (v) d = d + Divisor::of(Place::finite(x), v);
  }
  d = d + Divisor::of(Place::at_infinity(), valuation(Place::at_infinity()));
  if (d.degree() != 0) throw std::domain_error("function has zeros or poles at non-rational places");
  return d;
}

Gf RationalFunction::operator()(Gf x) const {
  const Gf d = den_(x);
  if (d.is_zero()) throw std::domain_error("evaluation at a pole");
  return num_(x) / d;
}

std::vector<RationalFunction> lbasis(const FieldContext& f, const Divisor& g) {
  std::vector<RationalFunction> out;
  const int deg = g.degree();
  if (deg < 0) return out;
  const Polynomial one = Polynomial::constant(f.one());
  const Polynomial x = Polynomial::monomial(f, 1, f.one());
  const int n_inf = g[Place::at_infinity()];
  bool simple = n_inf >= 0;
  for (const auto& [p, v] : g.support())
    if (!p.infinite && v < 0) simple = false;
  if (simple) {
    for (int j = 0; j <= n_inf; ++j) out.emplace_back(Polynomial::monomial(f, j, f.one()), one);
    for (const auto& [p, v] : g.support()) {
      if (p.infinite) continue;
      const Polynomial lin = linear(f, f.element(p.beta));
      for (int e = 1; e <= v; ++e) out.emplace_back(one, power(lin, e));
    }
  } else {
    Polynomial zeros = one, poles = one;
    for (const auto& [p, v] : g.support()) {
      if (p.infinite) continue;
      const Polynomial lin = linear(f, f.element(p.beta));
      if (v > 0) poles = poles * power(lin, v);
      if (v < 0) zeros = zeros * power(lin, -v);
    }
    Polynomial xj = one;
    for (int j = 0; j <= deg; ++j) {
      out.emplace_back(zeros * xj, poles);
      xj = xj * x;
    }
  }
  for (const auto& fn : out) {
    for (const auto& [p, v] : g.support())
      if (fn.valuation(p) + v < 0) throw std::logic_error("basis function outside L(G)");
    if (fn.valuation(Place::at_infinity()) + n_inf < 0) throw std::logic_error("basis function outside L(G)");
  }
  return out;
}

LinearCode evaluation_code(const FieldContext& f, std::span<const Gf> points, const Divisor& g) {
  for (Gf u : points)
    if (g[Place::finite(u)] != 0) throw std::invalid_argument("G meets the support of D");
  const auto basis = lbasis(f, g);
  if (basis.empty()) return LinearCode::zero(f, static_cast<Index>(points.size()));
  return LinearCode(f, evaluate_rows(f, basis, points, {}));
}

DifferentialData residues(const FieldContext& f, std::span<const Gf> points, WitnessRule rule) {
  if (points.size() < 2) throw std::invalid_argument("need at least two evaluation points");
  DifferentialData out{{}, Polynomial(f), {}, f.zero(), std::nullopt, {}};
  for (Gf u : points) out.points.push_back(Gf(f, u.packed()));
  out.h = Polynomial::from_roots(f, out.points);
  const Polynomial dh = out.h.derivative();
  out.residue_sum = f.zero();
  for (Gf u : out.points) {
    const Gf d = dh(u);
    if (d.is_zero()) throw std::invalid_argument("repeated evaluation point");
    out.residues.push_back(d.inverse());
    out.residue_sum += out.residues.back();
  }
  const long long qm1 = static_cast<long long>(f.size()) - 1;
  for (long long e = 0; e < qm1 && !out.normalizer; ++e) {
    const Gf lambda = f.exp(e);
    bool ok = true;
    for (Gf r : out.residues)
      if (!is_norm(lambda * r)) {
        ok = false;
        break;
      }
    if (ok) out.normalizer = lambda;
  }
  if (out.normalizer) {
    const long long q = f.q();
    for (Gf r : out.residues) {
      Gf a = solve_norm(*out.normalizer * r);
      if (rule == WitnessRule::LargestExponent && a.log() != 0) a = f.exp(a.log() + q * q - q);
      out.witnesses.push_back(a);
    }
  }
  return out;
}

std::string to_string(EvalFamily f) {
  switch (f) {
    case EvalFamily::COR1: return "COR1";
    case EvalFamily::COR2: return "COR2";
    case EvalFamily::COR3: return "COR3";
  }
  return "?";
}

std::optional<EvalFamily> parse_eval_family(const std::string& s) {
  for (auto f : {EvalFamily::COR1, EvalFamily::COR2, EvalFamily::COR3})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

std::optional<std::string> eval_range_violation(EvalFamily fam, const EvalParams& p) {
  if (!prime_power(p.q)) return "q must be a prime power";
  const long long q = p.q, Q = q * q;
  switch (fam) {
    case EvalFamily::COR1:
      if (p.s < 2 || (Q - 1) % (p.s - 1) != 0) return "(s - 1) divides q^2 - 1";
      if (p.s == Q) return "s != q^2";
      return std::nullopt;
    case EvalFamily::COR2:
      if (p.t < 1 || p.t >= q) return "1 <= t < q";
      return std::nullopt;
    case EvalFamily::COR3: {
      if (p.n0 < 1 || (Q - 1) % p.n0 != 0) return "n0 divides q^2 - 1";
      const long long n2 = p.n0 / std::gcd<long long>(p.n0, q + 1);
      // t <= (q - 1)/n2 - 2, compared over the rationals.
      if (p.t < 1 || (p.t + 2) * n2 > q - 1) return "1 <= t <= (q - 1)/n2 - 2";
      return std::nullopt;
    }
  }
  return "unknown family";
}

std::vector<EvalParams> eval_in_range(EvalFamily fam, std::uint32_t q) {
  std::vector<EvalParams> out;
  const int Q = static_cast<int>(q * q);
  switch (fam) {
    case EvalFamily::COR1:
      for (int s = 2; s < Q; ++s)
        if (!eval_range_violation(fam, {q, s, 0, 0})) out.push_back({q, s, 0, 0});
      break;
    case EvalFamily::COR2:
      for (int t = 1; t < static_cast<int>(q); ++t) out.push_back({q, 0, t, 0});
      break;
    case EvalFamily::COR3:
      for (int n0 = 1; n0 < Q; ++n0)
        for (int t = 1; t < static_cast<int>(q); ++t)
          if (!eval_range_violation(fam, {q, 0, t, n0})) out.push_back({q, 0, t, n0});
      break;
  }
  return out;
}

std::vector<Gf> evaluation_set(EvalFamily fam, const EvalParams& p) {
  if (auto why = eval_range_violation(fam, p)) throw std::invalid_argument(to_string(fam) + ": " + *why);
  const FieldContext& f = quadratic_field(p.q);
  const long long q = p.q, Q1 = q * q - 1;
  std::vector<Gf> u;
  switch (fam) {
    case EvalFamily::COR1:
      for (long long j = 0; j < p.s - 1; ++j) u.push_back(f.exp(j * (Q1 / (p.s - 1))));
      u.push_back(f.zero());
      break;
    case EvalFamily::COR2: {
      const SubfieldMap& half = f.half();
      std::vector<Gf> sub;
      for (Gf x : half.sub->elements()) sub.push_back(half.embed(x));
      const Gf alpha = f.primitive();
      for (int i = 0; i < p.t; ++i)
        for (Gf v : sub) u.push_back(sub[i] * alpha + v);
      break;
    }
    case EvalFamily::COR3: {
      const long long n0 = p.n0;
      std::vector<long long> reps{0};  // log of coset representatives, U_{n0} first
      for (long long c = 1; c < Q1 && static_cast<int>(reps.size()) < p.t + 1; ++c) {
        // c = log of a nontrivial n0-th power lying in GF(q)^*.
        const Gf cv = f.exp(c);
        if (c % std::gcd(n0, Q1) != 0 || !is_norm(cv)) continue;
        long long e = -1;
        for (long long x = 0; x < Q1; ++x)
          if ((n0 * x - c) % Q1 == 0) {
            e = x;
            break;
          }
        if (e >= 0) reps.push_back(e);
      }
      if (static_cast<int>(reps.size()) < p.t + 1) throw std::invalid_argument("COR3: coset representatives exhausted");
      for (long long r : reps)
        for (long long j = 0; j < n0; ++j) u.push_back(f.exp(r + j * (Q1 / n0)));
      u.push_back(f.zero());
      break;
    }
  }
  // The residues need only share one coset lambda * GF(q)^*; lambda is absorbed into a.
  if (!residues(f, u).normalizer) throw std::logic_error(to_string(fam) + ": residues not in a common GF(q)^* coset");
  return u;
}

TwoPointCode two_point_code(const FieldContext& f, std::span<const Gf> points, int k, const TwoPointOptions& opt) {
  const int n = static_cast<int>(points.size());
  const long long q = f.q();
  if (k < 0 || k > (n - 2) / static_cast<int>(q + 1)) throw std::invalid_argument("need 0 <= k <= floor((n-2)/(q+1))");
  auto t0 = Clock::now();
  DifferentialData diff = residues(f, points, opt.rule);
  if (!diff.normalizer) throw std::invalid_argument("residues of dx/h are not a common multiple of GF(q)^* elements");
  const Gf p = opt.extra_point ? Gf(f, opt.extra_point->packed()) : smallest_outside(f, points);
  for (Gf u : diff.points)
    if (u == p) throw std::invalid_argument("extra point lies in the evaluation set");

  const Divisor big = k * Divisor::of(Place::at_infinity()) + Divisor::of(Place::finite(p));
  const auto basis = lbasis(f, big);  // 1, x, ..., x^k, 1/(x - p)
  const MatrixGF rows = evaluate_rows(f, basis, diff.points, diff.witnesses);
  LinearCode code(f, rows);
  LinearCode base(f, rows.topRows(k + 1));
  const MatrixGF pole_rows = (MatrixGF(2, n) << rows.row(0), rows.row(k + 1)).finished();

  ConstructionReport rep;
  rep.family = "two-point";
  rep.params = Json{{"q", q}, {"n", n}, {"k", k}, {"P", p.log()}};
  rep.field = &f;
  rep.n = n;
  rep.k = static_cast<int>(code.dimension());
  rep.extra["points"] = vector_json(diff.points);
  rep.extra["residues"] = vector_json(diff.residues);
  rep.extra["normalizer"] = diff.normalizer->log();
  rep.extra["a"] = vector_json(diff.witnesses);
  rep.add("residue_sum_zero", diff.residue_sum.is_zero() ? CheckStatus::Verified : CheckStatus::Failed,
          "sum of residues of dx/h");
  rep.add("dimension", rep.k == k + 2 ? CheckStatus::Verified : CheckStatus::Failed,
          "k + 2 = " + std::to_string(k + 2));
  rep.add("base_self_orthogonal", is_hermitian_self_orthogonal(base) ? CheckStatus::Verified : CheckStatus::Failed,
          "a . C_L(D, kO) is Hermitian self-orthogonal");

  const int want_d = n - k - 1;
  if (pow_count(f.size(), rep.k) <= opt.budget) {
    const int d = min_distance(code, opt.budget);
    rep.d = d;
    rep.d_source = "enumerated";
    rep.add("distance", d == want_d ? CheckStatus::Verified : CheckStatus::Failed, "d = " + std::to_string(d));
  } else {
    rep.d = want_d;
    rep.d_source = "bound";
    rep.add("distance", CheckStatus::Structural, "n - deg G bound meets the Singleton bound");
  }

  const bool branch1 = all_zero(MatrixGF(pole_rows * adjoint_q(rows)));
  const int branch = branch1 ? 1 : 2;
  const int measured = static_cast<int>(hull_dim_via_gram(code));
  const int expected = branch1 ? k + 2 : k;
  rep.hull_dim_claimed = expected;
  rep.hull_dim_measured = measured;
  rep.extra["branch"] = branch;
  rep.add("hull_dimension", measured == expected ? CheckStatus::Verified : CheckStatus::Failed,
          "branch " + std::to_string(branch) + ": measured " + std::to_string(measured) + ", expected " +
              std::to_string(expected));
  const LinearCode hull = hermitian_hull(code);
  rep.add("hull_dimension_intersection",
          hull.dimension() == measured ? CheckStatus::Verified : CheckStatus::Failed,
          "dim(C cap C^perpH) = " + std::to_string(hull.dimension()), false);
  check_hull_mds(rep, hull, opt);
  rep.timings_ms.emplace_back("build_and_verify", ms_since(t0));
  return {std::move(code), std::move(base), std::move(diff), p, branch, std::move(rep)};
}

TwoPointCode extended_two_point(const FieldContext& f, std::span<const Gf> points, int k, const TwoPointOptions& opt) {
  TwoPointCode inner = two_point_code(f, points, k, opt);
  const int n = static_cast<int>(points.size());
  auto extend_zero = [&](const LinearCode& c) {
    MatrixGF g = MatrixGF::Constant(c.dimension(), n + 1, f.zero());
    g.leftCols(n) = c.generator();
    return LinearCode(f, g);
  };
  // Scaling the -sum coordinate by 0 leaves a zero column.
  const LinearCode base = extend_zero(inner.base);
  if (!is_hermitian_self_orthogonal(base)) throw std::invalid_argument("base extended code is not self-orthogonal");
  LinearCode code = extend_zero(inner.code);

  ConstructionReport rep;
  rep.family = "extended-two-point";
  rep.params = Json{{"q", f.q()}, {"n", n + 1}, {"k", k}, {"P", inner.extra_point.log()}};
  rep.field = &f;
  rep.n = n + 1;
  rep.k = static_cast<int>(code.dimension());
  rep.add("dimension", rep.k == k + 2 ? CheckStatus::Verified : CheckStatus::Failed, "k + 2");
  rep.add("base_self_orthogonal", CheckStatus::Verified, "checked before construction");

  auto distance_check = [&](const LinearCode& c, int want, const std::string& name) {
    if (pow_count(f.size(), c.dimension()) <= opt.budget) {
      const int d = min_distance(c, opt.budget);
      rep.add(name, d == want ? CheckStatus::Verified : CheckStatus::Failed,
              "d = " + std::to_string(d) + ", claimed " + std::to_string(want));
      return d;
    }
    // A zero column cannot raise the distance of the inner code, which is n - k - 1 or n - k.
    const int d = n - static_cast<int>(c.dimension()) + 1;
    rep.add(name, d == want ? CheckStatus::Structural : CheckStatus::Failed,
            "inner GRS distance " + std::to_string(d) + ", claimed " + std::to_string(want));
    return d;
  };
  distance_check(base, n - k + 1, "base_distance");
  rep.d = distance_check(code, n - k, "distance");
  rep.d_source = "enumerated";

  const int measured = static_cast<int>(hull_dim_via_gram(code));
  const int expected = inner.branch == 1 ? k + 2 : k;
  rep.hull_dim_claimed = expected;
  rep.hull_dim_measured = measured;
  rep.add("hull_dimension", measured == expected ? CheckStatus::Verified : CheckStatus::Failed,
          "measured " + std::to_string(measured));
  check_hull_mds(rep, hermitian_hull(code), opt);
  inner.code = std::move(code);
  inner.base = base;
  inner.report = std::move(rep);
  return inner;
}

LinearCode scale_for_hull(const TwoPointCode& c, int l, std::optional<Gf> alpha) {
  const FieldContext& f = c.code.field();
  const Gf a = alpha ? Gf(f, alpha->packed()) : f.primitive();
  const long long q = f.q();
  if (a.is_zero() || a.pow(q + 1).is_one()) throw std::invalid_argument("alpha^{q+1} must differ from 1");
  const Index kb = c.base.dimension();
  if (l < 0 || l >= kb) throw std::invalid_argument("l must lie in [0, k]");
  std::vector<Gf> scale(c.code.length(), f.one());
  for (Index i = kb - l; i < kb; ++i) scale[c.base.pivots()[i]] = a;
  return monomial_scale(c.code, scale);
}

std::vector<int> hull_sweep(const TwoPointCode& c, std::optional<Gf> alpha) {
  std::vector<int> dims;
  for (Index l = 0; l < c.base.dimension(); ++l)
    dims.push_back(static_cast<int>(hull_dim_via_gram(scale_for_hull(c, static_cast<int>(l), alpha))));
  return dims;
}

bool derivative_norm_condition(const FieldContext& f, std::span<const Gf> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    Gf d = f.one();
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) d *= points[i] - points[j];
    if (!is_norm(d)) return false;
  }
  return true;
}

GrowthResult extend_evaluation_set(const FieldContext& f, std::vector<Gf> start, int max_steps) {
  for (auto& u : start) u = Gf(f, u.packed());
  if (!derivative_norm_condition(f, start)) throw std::invalid_argument("starting set violates the derivative-norm condition");
  GrowthResult out;
  std::vector<Gf> cur = std::move(start);
  // Scan order: zero first, then alpha^0, alpha^1, ...
  std::vector<Gf> order{f.zero()};
  for (Gf x : f.powers()) order.push_back(x);

  auto admissible = [&](Gf b1, Gf b2) {
    Gf f1 = f.one(), f2 = f.one();
    for (Gf u : cur) {
      f1 *= b1 - u;
      f2 *= b2 - u;
      if (!is_norm((u - b1) * (u - b2))) return false;
    }
    return is_norm(f1 * (b1 - b2)) && is_norm(f2 * (b2 - b1));
  };

  for (int step = 0; step < max_steps; ++step) {
    std::set<std::uint32_t> in;
    for (Gf u : cur) in.insert(u.packed());
    std::optional<std::pair<Gf, Gf>> found;
    bool conj = false;
    for (Gf b : order) {
      const Gf bq = frobenius_q(b);
      if (bq == b || in.count(b.packed()) || in.count(bq.packed())) continue;
      if (admissible(b, bq)) {
        found = {b, bq};
        conj = true;
        break;
      }
    }
    for (std::size_t i = 0; i < order.size() && !found; ++i) {
      if (in.count(order[i].packed())) continue;
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        if (in.count(order[j].packed())) continue;
        if (admissible(order[i], order[j])) {
          found = {order[i], order[j]};
          break;
        }
      }
    }
    if (!found) {
      out.exhausted = true;
      break;
    }
    cur.push_back(found->first);
    cur.push_back(found->second);
    if (!derivative_norm_condition(f, cur)) throw std::logic_error("grown set fails the derivative-norm condition");
    out.steps.push_back({cur, *found, conj});
  }
  return out;
}

}  // namespace hermhull
