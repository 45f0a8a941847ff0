#include "hermhull/grs.hpp"

#include <chrono>
#include <numeric>
#include <set>

#include "hermhull/cyclic.hpp"

namespace hermhull {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int qi(const FamilyParams& p) { return static_cast<int>(p.q); }

bool is_enlarged(Family f) {
  return f == Family::CON1E || f == Family::CON2E || f == Family::CON3E || f == Family::CON4E;
}

// Exponent e of the scaling vector: k-1 for the base families, q-f-1 for the enlarged ones.
int base_exponent(Family fam, const FamilyParams& p) { return is_enlarged(fam) ? qi(p) - p.f - 1 : p.k - 1; }

int gcd_s(Family fam, const FamilyParams& p) {
  const int q = qi(p), e = base_exponent(fam, p);
  switch (fam) {
    case Family::CON3:
    case Family::CON3E: return std::gcd(e, q - 1);
    case Family::CON4:
    case Family::CON4E: return std::gcd(p.m - e, q - 1);
    default: return 0;
  }
}

int expected_length(Family fam, int q, int s) {
  switch (fam) {
    case Family::CON1:
    case Family::CON1E: return q * q;
    case Family::CON2:
    case Family::CON2E: return q * q - 1;
    case Family::CON3:
    case Family::CON3E: return q * q - s * (q + 1);
    case Family::CON4:
    case Family::CON4E: return (q + 1) * (q - 1 - s);
  }
  return 0;
}

std::optional<std::string> check_enlarged(Family fam, const FamilyParams& p, bool relaxed) {
  const int q = qi(p);
  if (p.z < 1) return "z >= 1";
  int zbound = 0;
  if (fam == Family::CON1E) {
    zbound = q / 2;
  } else {
    if (p.f < 1) return "f >= 1";
    if (p.z + p.f + 1 >= q) return "z + f + 1 < q";
    if (fam == Family::CON4E && !(q - p.f - 1 < p.m && p.m < q - 1)) return "q - f - 1 < m < q - 1";
    const int n = expected_length(fam, q, gcd_s(fam, p));
    zbound = fam == Family::CON2E ? (q * q - 1) / (2 * q) : n / (2 * q);
  }
  if (relaxed ? p.z > zbound : p.z >= zbound) return relaxed ? "z <= floor bound" : "z < floor bound";
  const int upper = fam == Family::CON1E ? (p.z + 1) * q - p.z - 1 : (p.z + 1) * q - p.z - p.f - 1;
  if (p.k < p.z * q || p.k >= upper) return "zq <= k < " + std::to_string(upper);
  return std::nullopt;
}

int claimed_gram_rank(Family fam, const FamilyParams& p) {
  switch (fam) {
    case Family::CON1E:
    case Family::CON2E: return p.z * p.z;
    case Family::CON3E:
    case Family::CON4E: return p.f >= p.z ? 2 * p.z * p.z : p.z * p.z + p.z * p.f;
    default: return 1;
  }
}

}  // namespace

MatrixGF grs_generator(const GrsSpec& spec) {
  const Index n = static_cast<Index>(spec.b.size());
  if (spec.a.size() != spec.b.size()) throw std::invalid_argument("GRS vectors differ in length");
  if (spec.k < 0 || spec.k > n) throw std::invalid_argument("GRS dimension out of range");
  if (n == 0) return MatrixGF(0, 0);
  const FieldContext& f = *spec.b.front().field();
  std::set<std::uint32_t> seen;
  for (Gf x : spec.b)
    if (!seen.insert(x.packed()).second) throw std::invalid_argument("duplicate evaluation point");
  for (Gf x : spec.a)
    if (x.is_zero()) throw std::invalid_argument("zero scaling entry");
  MatrixGF g(spec.k, n);
  for (Index j = 0; j < n; ++j) {
    Gf v = Gf(f, spec.a[j].packed());
    for (Index i = 0; i < spec.k; ++i) {
      g(i, j) = v;
      v *= spec.b[j];
    }
  }
  return g;
}

LinearCode grs_code(const GrsSpec& spec) {
  const FieldContext& f = *spec.b.front().field();
  LinearCode c(f, grs_generator(spec));
  return c.dimension() ? c.with_distance(static_cast<int>(spec.b.size()) - spec.k + 1) : c;
}

std::string to_string(Family f) {
  static const char* names[] = {"CON1", "CON2", "CON3", "CON4", "CON1E", "CON2E", "CON3E", "CON4E"};
  return names[static_cast<int>(f)];
}

std::optional<Family> parse_family(const std::string& s) {
  for (int i = 0; i < 8; ++i)
    if (to_string(static_cast<Family>(i)) == s) return static_cast<Family>(i);
  return std::nullopt;
}

std::optional<std::string> range_violation(Family fam, const FamilyParams& p, bool relaxed) {
  if (!prime_power(p.q)) return "q must be a prime power";
  const int q = qi(p);
  switch (fam) {
    case Family::CON1:
      if (p.k != 0 && p.k != q) return "k = q";
      return std::nullopt;
    case Family::CON2:
    case Family::CON3:
      if (!(1 < p.k && p.k < q)) return "1 < k < q";
      return std::nullopt;
    case Family::CON4:
      if (!(1 < p.k && p.k < q)) return "1 < k < q";
      if (!(p.k - 1 < p.m && p.m < q - 1)) return "k - 1 < m < q - 1";
      return std::nullopt;
    default: return check_enlarged(fam, p, relaxed);
  }
}

std::vector<FamilyParams> in_range_params(Family fam, std::uint32_t q, bool relaxed) {
  std::vector<FamilyParams> out;
  const int qq = static_cast<int>(q);
  if (fam == Family::CON1) {
    out.push_back({q, qq, 0, 0, 0});
    return out;
  }
  for (int k = 1; k < qq * qq; ++k)
    for (int z = 0; z <= qq; ++z)
      for (int f = 0; f < qq; ++f)
        for (int m = 0; m < qq; ++m) {
          const FamilyParams p{q, k, z, f, m};
          const bool uses_z = is_enlarged(fam);
          const bool uses_f = uses_z && fam != Family::CON1E;
          const bool uses_m = fam == Family::CON4 || fam == Family::CON4E;
          if ((!uses_z && z) || (!uses_f && f) || (!uses_m && m)) continue;
          if (!range_violation(fam, p, relaxed)) out.push_back(p);
        }
  return out;
}

std::vector<Gf> full_evaluation_vector(const FieldContext& gfq2) {
  std::vector<Gf> b = gfq2.powers();
  b.push_back(gfq2.zero());
  return b;
}

Construction construct_family(Family fam, const FamilyParams& p_in, bool allow_relaxed) {
  FamilyParams p = p_in;
  if (fam == Family::CON1) p.k = static_cast<int>(p.q);
  const bool strict_ok = !range_violation(fam, p, false);
  if (!strict_ok) {
    const auto why = range_violation(fam, p, allow_relaxed);
    if (why) throw std::invalid_argument(to_string(fam) + " parameter out of range: " + *why);
  }
  const FieldContext& f = quadratic_field(p.q);
  const long long q = p.q;
  const long long n_full = q * q - 1;
  const int e = base_exponent(fam, p);
  const int s = gcd_s(fam, p);

  GrsSpec spec;
  spec.k = p.k;
  switch (fam) {
    case Family::CON1:
    case Family::CON1E:
      spec.b = full_evaluation_vector(f);
      spec.a.assign(spec.b.size(), f.one());
      break;
    case Family::CON2:
    case Family::CON2E:
      for (long long r = 0; r < n_full; ++r) {
        spec.b.push_back(f.exp(r));
        spec.a.push_back(f.exp(-r * e));
      }
      break;
    case Family::CON3:
    case Family::CON3E:
    case Family::CON4:
    case Family::CON4E: {
      const long long step = (q - 1) / s;
      const bool con3 = fam == Family::CON3 || fam == Family::CON3E;
      for (long long l = 1; l < n_full; ++l) {
        if (l % step == 0) continue;
        const Gf other = con3 ? f.one() : f.exp(-l * p.m * (q + 1));
        spec.b.push_back(f.exp(l));
        spec.a.push_back(solve_norm(f.exp(-l * e * (q + 1)) - other));
      }
      if (con3) {
        spec.b.push_back(f.zero());
        spec.a.push_back(solve_norm(-f.one()));
      }
      break;
    }
  }
  const int n = static_cast<int>(spec.b.size());
  if (n != expected_length(fam, static_cast<int>(q), s)) throw std::logic_error("construction produced an unexpected length");

  GrsHullClaim claim;
  claim.family = fam;
  claim.params = p;
  claim.s = s;
  claim.spec = spec;
  claim.gram_rank = claimed_gram_rank(fam, p);
  claim.hull_dim = p.k - claim.gram_rank;
  claim.hull_equality = !is_enlarged(fam);
  claim.relaxed = !strict_ok;
  if (fam == Family::CON1E)
    claim.subcode = spec.with_dimension(static_cast<int>(q) - 1);
  else if (is_enlarged(fam))
    claim.subcode = spec.with_dimension(static_cast<int>(q) - p.f - 1);
  else
    claim.subcode = spec.with_dimension(p.k - 1);
  return {grs_code(spec), std::move(claim)};
}

ConstructionReport verify_claim(const LinearCode& code, const GrsHullClaim& claim, const VerifyOptions& opt) {
  ConstructionReport rep;
  const auto& p = claim.params;
  const FieldContext& f = code.field();
  rep.family = to_string(claim.family);
  rep.params = Json{{"q", p.q}, {"k", p.k}};
  if (p.z) rep.params["z"] = p.z;
  if (p.f) rep.params["f"] = p.f;
  if (p.m) rep.params["m"] = p.m;
  if (claim.s) rep.params["s"] = claim.s;
  if (claim.relaxed) rep.params["relaxed_range"] = true;
  rep.field = &f;
  rep.n = static_cast<int>(code.length());
  rep.k = static_cast<int>(code.dimension());
  rep.hull_dim_claimed = claim.hull_dim;
  const int n = rep.n;
  const int q = static_cast<int>(p.q);

  const int want_n = expected_length(claim.family, q, claim.s);
  rep.add("length", n == want_n ? CheckStatus::Verified : CheckStatus::Failed,
          "n = " + std::to_string(n) + ", expected " + std::to_string(want_n));
  rep.add("dimension", rep.k == p.k ? CheckStatus::Verified : CheckStatus::Failed,
          "k = " + std::to_string(rep.k) + ", expected " + std::to_string(p.k));

  auto t0 = Clock::now();
  const MatrixGF g = grs_generator(claim.spec);
  const int gram_rank = static_cast<int>(rank(gram_matrix(g)));
  const int measured = rep.k - gram_rank;
  rep.hull_dim_measured = measured;
  rep.timings_ms.emplace_back("gram", ms_since(t0));
  rep.add("gram_rank", gram_rank == claim.gram_rank ? CheckStatus::Verified : CheckStatus::Failed,
          "rank(G G^dagger) = " + std::to_string(gram_rank) + ", expected " + std::to_string(claim.gram_rank));
  rep.add("hull_dimension", measured == claim.hull_dim ? CheckStatus::Verified : CheckStatus::Failed,
          "k - rank = " + std::to_string(measured) + ", expected " + std::to_string(claim.hull_dim));

  std::optional<LinearCode> hull;
  const auto words = codeword_count(code);
  t0 = Clock::now();
  if (words && *words <= opt.budget) {
    hull = hermitian_hull(code);
    rep.add("hull_dimension_intersection",
            hull->dimension() == measured ? CheckStatus::Verified : CheckStatus::Failed,
            "dim(C cap C^perpH) = " + std::to_string(hull->dimension()), false);
  } else {
    rep.add("hull_dimension_intersection", CheckStatus::Skipped, "q^(2k) exceeds budget", false);
  }
  rep.timings_ms.emplace_back("intersection", ms_since(t0));

  t0 = Clock::now();
  const MatrixGF sub = grs_generator(claim.subcode);
  const LinearCode sub_code(f, sub);
  bool member = code.contains(sub_code);
  if (member) {
    const MatrixGF cross = sub * adjoint_q(g);
    for (Index i = 0; i < cross.rows() && member; ++i)
      for (Index j = 0; j < cross.cols(); ++j)
        if (!cross(i, j).is_zero()) {
          member = false;
          break;
        }
  }
  rep.add("subcode_in_hull", member ? CheckStatus::Verified : CheckStatus::Failed,
          "GRS_" + std::to_string(claim.subcode.k) + "(b, a) rows lie in C and are Hermitian-orthogonal to C");
  if (hull) {
    rep.add("subcode_in_hull_intersection", hull->contains(sub_code) ? CheckStatus::Verified : CheckStatus::Failed,
            "row membership in the computed hull", false);
  }
  if (!claim.hull_equality) {
    // Rows v_0..v_{L-1} are orthogonal to all of C up to the first nonzero Gram row.
    const MatrixGF gram = gram_matrix(g);
    int prefix = 0;
    auto zero_row = [&](Index i) {
      for (Index j = 0; j < gram.cols(); ++j)
        if (!gram(i, j).is_zero()) return false;
      return true;
    };
    while (prefix < gram.rows() && zero_row(prefix)) ++prefix;
    rep.extra["grs_prefix_in_hull"] = prefix;
    rep.add("grs_prefix_in_hull", CheckStatus::Verified,
            "largest L with GRS_L(b, a) in the hull: " + std::to_string(prefix), false);
  }
  rep.timings_ms.emplace_back("subcode", ms_since(t0));

  if (claim.hull_equality) {
    const bool eq = member && measured == claim.subcode.k;
    rep.add("hull_equals_subcode", eq ? CheckStatus::Verified : CheckStatus::Failed,
            "containment plus equal dimension " + std::to_string(claim.subcode.k));
    if (hull)
      rep.add("hull_equals_subcode_rref", *hull == sub_code ? CheckStatus::Verified : CheckStatus::Failed,
              "RREF equality with the computed hull", false);
    rep.add("not_self_orthogonal", measured < rep.k ? CheckStatus::Verified : CheckStatus::Failed,
            "hull dimension below k");
  }

  // MDS-ness of the hull (equality families) or of the contained subcode.
  t0 = Clock::now();
  const LinearCode& mds_target = hull && claim.hull_equality ? *hull : sub_code;
  const int tk = static_cast<int>(mds_target.dimension());
  const auto tw = codeword_count(mds_target);
  const std::string what = claim.hull_equality ? "hull_mds" : "subcode_mds";
  if (tk == 0) {
    rep.add(what, CheckStatus::Verified, "zero code");
  } else if (opt.enumerate_hull && tw && *tw <= opt.budget) {
    const int d = min_distance(LinearCode(f, mds_target.generator()), opt.budget);
    rep.add(what, d == n - tk + 1 ? CheckStatus::Verified : CheckStatus::Failed,
            "enumerated d = " + std::to_string(d) + ", n - k + 1 = " + std::to_string(n - tk + 1));
    rep.extra["hull_distance"] = d;
  } else {
    rep.add(what, CheckStatus::Structural, "GRS row space, d = " + std::to_string(n - tk + 1));
  }
  rep.timings_ms.emplace_back("mds", ms_since(t0));

  const auto cw = codeword_count(code);
  if (opt.enumerate_code && cw && *cw <= opt.budget) {
    const int d = min_distance(LinearCode(f, code.generator()), opt.budget);
    rep.d = d;
    rep.d_source = "enumerated";
    rep.add("code_mds", d == n - rep.k + 1 ? CheckStatus::Verified : CheckStatus::Failed, "d = " + std::to_string(d));
  } else {
    rep.d = n - rep.k + 1;
    rep.d_source = "structural";
    rep.add("code_mds", CheckStatus::Structural, "GRS code");
  }
  rep.extra["a"] = vector_json(claim.spec.a);
  rep.extra["b"] = vector_json(claim.spec.b);
  return rep;
}

LinearCode rains_grs_pair(std::uint32_t q, int k, int l) {
  if (l < 0 || l > k || k > static_cast<int>(q * q)) throw std::invalid_argument("need 0 <= l <= k <= q^2");
  const FieldContext& f = quadratic_field(q);
  const std::vector<Gf> b = full_evaluation_vector(f);
  const std::vector<Gf> ones(b.size(), f.one());
  return rains_p(LinearCode(f, grs_generator({b, ones, l})), LinearCode(f, grs_generator({b, ones, k})));
}

std::pair<GrsSpec, GrsSpec> puncture_from_p_codeword(const FieldContext& gfq2, const RowVectorGF& x, int k, int l) {
  const std::uint32_t q = gfq2.q();
  const SubfieldMap& half = gfq2.half();
  if (x.cols() != static_cast<Index>(q * q)) throw std::invalid_argument("codeword must have length q^2");
  for (Index i = 0; i < x.cols(); ++i)
    if (x(i).field() != half.sub) throw std::invalid_argument("codeword entries must lie in GF(q)");
  if (!(0 <= l && l <= k && k <= static_cast<int>(q))) throw std::invalid_argument("need l <= k <= q");
  if (!rains_grs_pair(q, k, l).contains(x)) throw std::invalid_argument("vector is not in E(D_{k,l})");
  const std::vector<Gf> b = full_evaluation_vector(gfq2);
  GrsSpec big;
  for (Index i = 0; i < x.cols(); ++i) {
    if (x(i).is_zero()) continue;
    big.b.push_back(b[i]);
    big.a.push_back(solve_norm(half.embed(x(i))));
  }
  if (static_cast<int>(big.b.size()) < k) throw std::invalid_argument("codeword weight below k");
  big.k = k;
  return {big, big.with_dimension(l)};
}

}  // namespace hermhull
