#include "hermhull/code.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace hermhull {

MatrixGF attach(const MatrixGF& m, const FieldContext& f) {
  MatrixGF out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Gf(f, m(i, j).packed());
  return out;
}

LinearCode::LinearCode(const FieldContext& f, const MatrixGF& spanning) : field_(&f), n_(spanning.cols()) {
  auto red = rref(attach(spanning, f));
  generator_ = attach(red.matrix, f);
  pivots_ = std::move(red.pivots);
}

LinearCode LinearCode::zero(const FieldContext& f, Index n) { return LinearCode(f, MatrixGF(0, n)); }

LinearCode LinearCode::full(const FieldContext& f, Index n) {
  MatrixGF id(n, n);
  id.setConstant(f.zero());
  for (Index i = 0; i < n; ++i) id(i, i) = f.one();
  return LinearCode(f, id);
}

LinearCode LinearCode::with_distance(int d) const {
  LinearCode out = *this;
  out.distance_ = d;
  return out;
}

bool LinearCode::contains(const RowVectorGF& v) const {
  if (v.cols() != n_) return false;
  RowVectorGF r = v;
  for (Index i = 0; i < dimension(); ++i) {
    const Gf c = r(pivots_[i]);
    if (c.is_zero()) continue;
    for (Index j = 0; j < n_; ++j) r(j) -= c * generator_(i, j);
  }
  for (Index j = 0; j < n_; ++j)
    if (!r(j).is_zero()) return false;
  return true;
}

bool LinearCode::contains(const LinearCode& sub) const {
  if (sub.length() != n_ || &sub.field() != field_) return false;
  for (Index i = 0; i < sub.dimension(); ++i)
    if (!contains(RowVectorGF(sub.generator().row(i)))) return false;
  return true;
}

MatrixGF LinearCode::parity_check() const { return null_space(generator_, *field_); }

bool operator==(const LinearCode& a, const LinearCode& b) {
  if (a.field_ != b.field_ || a.n_ != b.n_ || a.dimension() != b.dimension()) return false;
  return a.generator_ == b.generator_;
}

LinearCode euclidean_dual(const LinearCode& c) { return LinearCode(c.field(), c.parity_check()); }

LinearCode hermitian_dual(const LinearCode& c) {
  return LinearCode(c.field(), null_space(MatrixGF(conj_q(c.generator())), c.field()));
}

LinearCode hermitian_hull(const LinearCode& c) {
  const MatrixGF h = c.parity_check();
  MatrixGF stacked(h.rows() + c.dimension(), c.length());
  stacked << h, conj_q(c.generator());
  return LinearCode(c.field(), null_space(stacked, c.field()));
}

LinearCode intersection(const LinearCode& a, const LinearCode& b) {
  if (&a.field() != &b.field() || a.length() != b.length()) throw std::invalid_argument("codes are not comparable");
  const MatrixGF ha = a.parity_check(), hb = b.parity_check();
  MatrixGF stacked(ha.rows() + hb.rows(), a.length());
  stacked << ha, hb;
  return LinearCode(a.field(), null_space(stacked, a.field()));
}

MatrixGF gram_matrix(const MatrixGF& g) { return g * adjoint_q(g); }

Index hull_dim_via_gram(const LinearCode& c) {
  return c.dimension() - rank(gram_matrix(c.generator()));
}

bool is_hermitian_self_orthogonal(const LinearCode& c) { return hull_dim_via_gram(c) == c.dimension(); }

std::optional<std::uint64_t> codeword_count(const LinearCode& c) {
  std::uint64_t total = 1;
  const std::uint64_t q = c.field().size();
  for (Index i = 0; i < c.dimension(); ++i) {
    if (total > UINT64_MAX / q) return std::nullopt;
    total *= q;
  }
  return total;
}

int worker_threads() {
  if (const char* env = std::getenv("HERMHULL_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

namespace {

// Odometer over message digits. Digit states cycle 0, alpha^0, ..., alpha^{Q-2};
// step_[i][s] is the packed row (value(s+1) - value(s)) * g_i.
class Enumerator {
 public:
  explicit Enumerator(const LinearCode& c) : f_(c.field()), n_(c.length()), k_(c.dimension()), q_(f_.size()) {
    const MatrixGF& g = c.generator();
    rows_.resize(k_);
    step_.resize(k_);
    for (Index i = 0; i < k_; ++i) {
      rows_[i].resize(n_);
      for (Index j = 0; j < n_; ++j) rows_[i][j] = g(i, j).packed();
      step_[i].resize(q_);
      for (std::uint32_t s = 0; s < q_; ++s) {
        const Gf d = value((s + 1) % q_) - value(s);
        auto& row = step_[i][s];
        row.resize(n_);
        for (Index j = 0; j < n_; ++j) row[j] = f_.mul(d.packed(), rows_[i][j]);
      }
    }
  }

  Gf value(std::uint32_t s) const { return s == 0 ? f_.zero() : f_.exp(s - 1); }

  // Visits every combination of digits [from, k) added to `start`.
  template <class Visit>
  void sweep(std::vector<std::uint32_t> cur, Index from, Visit&& visit) const {
    std::vector<std::uint32_t> state(k_, 0);
    visit(cur);
    if (from >= k_) return;
    while (true) {
      Index j = from;
      while (true) {
        const auto& d = step_[j][state[j]];
        for (Index t = 0; t < n_; ++t) cur[t] = f_.add(cur[t], d[t]);
        state[j] = (state[j] + 1) % q_;
        if (state[j] != 0) break;
        if (++j == k_) return;
      }
      visit(cur);
    }
  }

  std::vector<std::uint32_t> combine(Index lead, std::uint32_t second_state) const {
    std::vector<std::uint32_t> cur = rows_[lead];
    if (second_state != 0) {
      const std::uint32_t v = value(second_state).packed();
      for (Index t = 0; t < n_; ++t) cur[t] = f_.add(cur[t], f_.mul(v, rows_[lead + 1][t]));
    }
    return cur;
  }

  const FieldContext& f_;
  Index n_, k_;
  std::uint32_t q_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::vector<std::vector<std::uint32_t>>> step_;
};

int weight(const std::vector<std::uint32_t>& v) {
  int w = 0;
  for (auto x : v) w += x != 0;
  return w;
}

void check_budget(const LinearCode& c, std::uint64_t budget) {
  const auto count = codeword_count(c);
  if (!count || *count > budget)
    throw BudgetExceeded("enumeration of " + c.field().name() + "^" + std::to_string(c.dimension()) +
                         " codewords exceeds budget " + std::to_string(budget));
}

}  // namespace

int min_distance(const LinearCode& c, std::uint64_t budget) {
  if (c.dimension() == 0) throw std::domain_error("minimum distance of the zero code");
  if (auto d = c.known_distance()) return *d;
  check_budget(c, budget);
  const Enumerator e(c);
  // Projective enumeration: the first nonzero message digit is 1.
  struct Unit {
    Index lead;
    std::uint32_t second;
  };
  std::vector<Unit> units;
  for (Index lead = 0; lead < e.k_; ++lead) {
    if (lead + 1 < e.k_) {
      for (std::uint32_t s = 0; s < e.q_; ++s) units.push_back({lead, s});
    } else {
      units.push_back({lead, 0});
    }
  }
  std::atomic<std::size_t> next{0};
  std::atomic<int> best{static_cast<int>(c.length()) + 1};
  auto work = [&] {
    for (std::size_t u = next++; u < units.size(); u = next++) {
      const Unit unit = units[u];
      int local = best.load();
      e.sweep(e.combine(unit.lead, unit.second), unit.lead + 2, [&](const std::vector<std::uint32_t>& v) {
        const int w = weight(v);
        if (w < local) local = w;
      });
      int cur = best.load();
      while (local < cur && !best.compare_exchange_weak(cur, local)) {
      }
    }
  };
  const int threads = std::min<int>(worker_threads(), static_cast<int>(units.size()));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return best.load();
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& c, std::uint64_t budget) {
  check_budget(c, budget);
  std::vector<std::uint64_t> dist(c.length() + 1, 0);
  const Enumerator e(c);
  e.sweep(std::vector<std::uint32_t>(c.length(), 0), 0, [&](const std::vector<std::uint32_t>& v) { ++dist[weight(v)]; });
  return dist;
}

bool is_mds(const LinearCode& c, std::uint64_t budget) {
  if (c.dimension() == 0) return true;
  return min_distance(c, budget) == c.length() - c.dimension() + 1;
}

bool is_mds_by_minors(const LinearCode& c, std::uint64_t budget) {
  const Index n = c.length(), k = c.dimension();
  if (k == 0 || k == n) return true;
  std::uint64_t subsets = 1;
  for (Index i = 0; i < k; ++i) {
    subsets = subsets * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    if (subsets > budget) throw BudgetExceeded("too many column subsets for the minor test");
  }
  std::vector<Index> cols(k);
  for (Index i = 0; i < k; ++i) cols[i] = i;
  MatrixGF sub(k, k);
  while (true) {
    for (Index j = 0; j < k; ++j) sub.col(j) = c.generator().col(cols[j]);
    if (rank(sub) < k) return false;
    Index i = k - 1;
    while (i >= 0 && cols[i] == n - k + i) --i;
    if (i < 0) return true;
    ++cols[i];
    for (Index j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
}

LinearCode puncture(const LinearCode& c, std::span<const Index> s) {
  std::vector<bool> drop(c.length(), false);
  for (Index i : s) {
    if (i < 0 || i >= c.length()) throw std::out_of_range("puncture index out of range");
    if (drop[i]) throw std::invalid_argument("repeated puncture index");
    drop[i] = true;
  }
  MatrixGF g(c.dimension(), c.length() - static_cast<Index>(s.size()));
  Index col = 0;
  for (Index j = 0; j < c.length(); ++j) {
    if (drop[j]) continue;
    g.col(col++) = c.generator().col(j);
  }
  return LinearCode(c.field(), g);
}

LinearCode monomial_scale(const LinearCode& c, std::span<const Gf> a) {
  if (static_cast<Index>(a.size()) != c.length()) throw std::invalid_argument("scaling vector has wrong length");
  MatrixGF g = c.generator();
  for (Index j = 0; j < c.length(); ++j) {
    if (a[j].is_zero()) throw std::invalid_argument("zero scalar in monomial scaling");
    for (Index i = 0; i < g.rows(); ++i) g(i, j) *= a[j];
  }
  return LinearCode(c.field(), g);
}

LinearCode extend_sum_zero(const LinearCode& c) {
  MatrixGF g(c.dimension(), c.length() + 1);
  g.leftCols(c.length()) = c.generator();
  for (Index i = 0; i < c.dimension(); ++i) {
    Gf s = c.field().zero();
    for (Index j = 0; j < c.length(); ++j) s += c.generator()(i, j);
    g(i, c.length()) = -s;
  }
  return LinearCode(c.field(), g);
}

MatrixGF split_rows(const MatrixGF& rows, const FieldContext& big) {
  const SubfieldMap& map = big.half();
  const Gf xi = big.primitive();
  const Gf denom_inv = (xi - frobenius_q(xi)).inverse();
  MatrixGF out(2 * rows.rows(), rows.cols());
  for (Index i = 0; i < rows.rows(); ++i) {
    for (Index j = 0; j < rows.cols(); ++j) {
      const Gf w = Gf(big, rows(i, j).packed());
      const Gf y = (w - frobenius_q(w)) * denom_inv;
      const Gf x = w - y * xi;
      out(2 * i, j) = *map.restrict(x);
      out(2 * i + 1, j) = *map.restrict(y);
    }
  }
  return out;
}

LinearCode subfield_subcode(const LinearCode& c) {
  const FieldContext& sub = *c.field().half().sub;
  return LinearCode(sub, null_space(split_rows(c.parity_check(), c.field()), sub));
}

LinearCode embed_code(const LinearCode& c, const FieldContext& big) {
  const SubfieldMap& map = big.half();
  if (map.sub != &c.field()) throw FieldError(c.field().name() + " is not the half subfield of " + big.name());
  MatrixGF g(c.dimension(), c.length());
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.cols(); ++j) g(i, j) = map.embed(c.generator()(i, j));
  return LinearCode(big, g);
}

}  // namespace hermhull
