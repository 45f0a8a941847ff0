#include "hermhull/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hermhull {

namespace {

void require_coprime(int n, std::uint32_t q) {
  if (n < 1) throw std::invalid_argument("cyclic length must be positive");
  if (std::gcd<long long, long long>(n, q) != 1) throw std::invalid_argument("gcd(n, q) must be 1");
}

const FieldContext& splitting_field(int n, std::uint32_t q) {
  const auto pp = prime_power(q);
  if (!pp) throw NotPrime(std::to_string(q) + " is not a prime power");
  return make_field(pp->first, pp->second * multiplicative_order(q, n));
}

}  // namespace

int multiplicative_order(std::uint32_t q, int n) {
  require_coprime(n, q);
  if (n == 1) return 1;
  long long x = q % n;
  for (int r = 1;; ++r) {
    if (x == 1) return r;
    x = x * q % n;
  }
}

std::vector<int> cyclotomic_coset(int n, std::uint32_t q, int i) {
  require_coprime(n, q);
  if (i < 0 || i >= n) throw std::out_of_range("coset representative out of range");
  std::set<int> s;
  long long x = i;
  while (s.insert(static_cast<int>(x)).second) x = x * q % n;
  return {s.begin(), s.end()};
}

std::vector<std::vector<int>> cyclotomic_cosets(int n, std::uint32_t q) {
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    out.push_back(cyclotomic_coset(n, q, i));
    for (int x : out.back()) seen[x] = true;
  }
  return out;
}

std::vector<int> defining_set_dkl(std::uint32_t q, int k, int l) {
  if (l < 0 || l > k) throw std::invalid_argument("defining set needs 0 <= l <= k");
  if (k > static_cast<int>(q)) throw std::invalid_argument("defining set needs k <= q");
  std::set<int> d;
  const int qi = static_cast<int>(q);
  const int n = qi * qi - 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i >= l && j >= l) continue;
      // The pair (0, 0) is excluded; (q-1, q-1) wraps to exponent 0 when k = l = q.
      if (i != 0 || j != 0) d.insert((i + qi * j) % n);
    }
  return {d.begin(), d.end()};
}

CyclicCode cyclic_from_defining_set(int n, std::uint32_t q, std::vector<int> defining_set) {
  require_coprime(n, q);
  std::sort(defining_set.begin(), defining_set.end());
  defining_set.erase(std::unique(defining_set.begin(), defining_set.end()), defining_set.end());
  const std::set<int> ds(defining_set.begin(), defining_set.end());
  for (int i : defining_set) {
    if (i < 0 || i >= n) throw std::out_of_range("defining set element out of range");
    if (!ds.count(static_cast<int>(static_cast<long long>(i) * q % n)))
      throw std::invalid_argument("defining set is not closed under multiplication by q");
  }
  const FieldContext& base = field_of_order(q);
  const FieldContext& split = splitting_field(n, q);
  const SubfieldMap map = subfield_map(base, split);
  const Gf beta = split.exp((split.size() - 1) / n);

  std::vector<Gf> roots;
  for (int i : defining_set) roots.push_back(beta.pow(i));
  const Polynomial g_split = Polynomial::from_roots(split, roots);
  std::vector<Gf> coeffs;
  for (Gf c : g_split.coeffs()) {
    auto r = map.restrict(c);
    if (!r) throw std::logic_error("generator polynomial left the base field");
    coeffs.push_back(*r);
  }
  Polynomial g(base, coeffs);

  const int k = n - static_cast<int>(defining_set.size());
  MatrixGF gen(k, n);
  gen.setConstant(base.zero());
  for (int r = 0; r < k; ++r)
    for (int i = 0; i <= g.degree(); ++i) gen(r, r + i) = g.coeff(i);
  return CyclicCode{n, &base, &split, beta, std::move(defining_set), std::move(g), LinearCode(base, gen)};
}

MatrixGF CyclicCode::parity_matrix() const {
  MatrixGF h(static_cast<Index>(defining_set.size()), n);
  for (std::size_t r = 0; r < defining_set.size(); ++r)
    for (int u = 0; u < n; ++u) h(static_cast<Index>(r), u) = beta.pow(static_cast<long long>(defining_set[r]) * u);
  return h;
}

LinearCode cyclic_from_trace(int n, std::uint32_t q, std::span<const int> defining_set) {
  require_coprime(n, q);
  const FieldContext& base = field_of_order(q);
  const FieldContext& split = splitting_field(n, q);
  const SubfieldMap map = subfield_map(base, split);
  const Gf beta = split.exp((split.size() - 1) / n);
  const std::set<int> ds(defining_set.begin(), defining_set.end());

  std::vector<RowVectorGF> rows;
  for (const auto& coset : cyclotomic_cosets(n, q)) {
    if (ds.count(coset.front())) continue;
    const int m = static_cast<int>(coset.size());
    const int rep = coset.front();
    // GF(q)-basis of GF(q^m) inside the splitting field.
    long long qm = 1;
    for (int t = 0; t < m; ++t) qm *= q;
    const Gf gamma = split.exp((split.size() - 1) / (qm - 1));
    for (int b = 0; b < m; ++b) {
      const Gf theta = gamma.pow(b);
      RowVectorGF row(n);
      for (int u = 0; u < n; ++u) {
        const Gf x = theta * beta.pow(-static_cast<long long>(u) * rep);
        Gf tr = split.zero();
        Gf y = x;
        for (int t = 0; t < m; ++t) {
          tr += y;
          y = y.pow(q);
        }
        row(u) = *map.restrict(tr);
      }
      rows.push_back(row);
    }
  }
  MatrixGF g(static_cast<Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) g.row(static_cast<Index>(i)) = rows[i];
  return LinearCode(base, g);
}

int ht_bound(int n, std::span<const int> defining_set) {
  if (defining_set.empty()) return 1;
  std::vector<char> in(n, 0);
  for (int i : defining_set) in.at(i) = 1;
  std::vector<int> units;
  for (int b = 1; b < n; ++b)
    if (std::gcd(b, n) == 1) units.push_back(b);
  if (n == 1) units.push_back(1);

  // run[b][a]: length of the progression a, a+b, a+2b, ... inside D (capped at n).
  std::vector<std::vector<int>> run(n);
  for (int b : units) {
    auto& r = run[b];
    r.assign(n, 0);
    for (int a = 0; a < n; ++a) {
      int len = 0;
      long long x = a;
      while (len < n && in[x]) {
        ++len;
        x = (x + b) % n;
      }
      r[a] = len;
    }
  }
  int best = 1;
  for (int b : units)
    for (int a = 0; a < n; ++a) {
      if (!run[b][a]) continue;
      best = std::max(best, std::min(run[b][a], n - 1) + 1);  // y = 0: BCH
      for (int c : units) {
        int x1 = run[b][a];  // x - 1
        for (int y = 1; y < n; ++y) {
          x1 = std::min(x1, run[b][(a + static_cast<long long>(c) * y) % n]);
          if (x1 < 1) break;
          best = std::max(best, std::min(x1 + 1 + y, n));
        }
      }
    }
  return best;
}

LinearCode extended_dkl(std::uint32_t q, int k, int l) {
  const int n = static_cast<int>(q * q - 1);
  return extend_sum_zero(cyclic_from_defining_set(n, q, defining_set_dkl(q, k, l)).code);
}

std::vector<std::pair<int, int>> eqtr_index_set(std::uint32_t q, int k) {
  std::vector<std::pair<int, int>> t;
  const int qi = static_cast<int>(q);
  for (int i = k; i <= qi - 1; ++i) {
    for (int j = 0; j <= k - 1; ++j) t.emplace_back(i, j);
    for (int j = i + 1; j <= qi - 1; ++j) t.emplace_back(i, j);
  }
  return t;
}

RowVectorGF eqtr_codeword(const FieldContext& gfq2, int k, const EqtrParams& params) {
  const long long q = gfq2.q();
  if (k <= 1 || k >= q) throw std::invalid_argument("trace family needs 1 < k < q");
  const SubfieldMap& half = gfq2.half();
  auto theta_kk = params.diagonal.find(k - 1);
  if (theta_kk == params.diagonal.end() || theta_kk->second.is_zero())
    throw std::invalid_argument("theta_{k-1,k-1} must be nonzero");
  for (const auto& [t, v] : params.diagonal) {
    if (t < k - 1 || t > q - 1) throw std::invalid_argument("diagonal index out of range");
    if (!half.restrict(Gf(gfq2, v.packed()))) throw std::invalid_argument("diagonal theta must lie in GF(q)");
  }
  const auto tset = eqtr_index_set(static_cast<std::uint32_t>(q), k);
  const std::set<std::pair<int, int>> allowed(tset.begin(), tset.end());
  for (const auto& [ij, v] : params.off)
    if (!allowed.count(ij)) throw std::invalid_argument("off-diagonal index outside T");

  const long long n = q * q - 1;
  RowVectorGF out(n + 1);
  Gf total = gfq2.zero();
  for (long long r = 0; r < n; ++r) {
    Gf c = gfq2.zero();
    for (const auto& [t, v] : params.diagonal) c += Gf(gfq2, v.packed()) * gfq2.exp(-r * t * (q + 1));
    for (const auto& [ij, v] : params.off) {
      const Gf x = Gf(gfq2, v.packed()) * gfq2.exp(-r * (ij.first + q * ij.second));
      c += x + frobenius_q(x);
    }
    total += c;
    out(r) = *half.restrict(c);
  }
  out(n) = *half.restrict(-total);
  return out;
}

LinearCode rains_p(const LinearCode& u_code, const LinearCode& v_code) {
  const FieldContext& big = u_code.field();
  if (&v_code.field() != &big || u_code.length() != v_code.length()) throw std::invalid_argument("incompatible codes");
  const Index n = u_code.length();
  MatrixGF w(u_code.dimension() * v_code.dimension(), n);
  Index row = 0;
  for (Index i = 0; i < u_code.dimension(); ++i)
    for (Index j = 0; j < v_code.dimension(); ++j, ++row)
      for (Index t = 0; t < n; ++t) w(row, t) = u_code.generator()(i, t) * frobenius_q(v_code.generator()(j, t));
  const FieldContext& sub = *big.half().sub;
  return LinearCode(sub, null_space(split_rows(w, big), sub));
}

}  // namespace hermhull
