// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every failing criterion is listed in kKnownFailures (each one is
// a construction claim that the measurements contradict; see README), 1 otherwise.
// --strict turns every FAIL into a nonzero exit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "gf25_example.hpp"
#include "hermhull/ag.hpp"
#include "hermhull/cyclic.hpp"
#include "hermhull/grs.hpp"
#include "hermhull/quantum.hpp"

using namespace hermhull;

namespace {

const std::set<int> kKnownFailures{3, 7, 8};

struct Outcome {
  bool pass = true;
  std::string detail;
  int failures = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures++ == 0) first = what;
  }
};

bool hermitian_orthogonal_to(const RowVectorGF& v, const LinearCode& c) {
  const MatrixGF conj = conj_q(c.generator());
  for (Index i = 0; i < c.dimension(); ++i) {
    Gf s = v(0).field()->zero();
    for (Index j = 0; j < v.cols(); ++j) s += v(j) * conj(i, j);
    if (!s.is_zero()) return false;
  }
  return true;
}

bool in_hull(const LinearCode& sub, const LinearCode& c) {
  for (Index i = 0; i < sub.dimension(); ++i) {
    const RowVectorGF v = sub.generator().row(i);
    if (!c.contains(v) || !hermitian_orthogonal_to(v, c)) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > kDefaultBudget) return kDefaultBudget + 1;
    r *= b;
  }
  return r;
}

Outcome criterion1() {
  Outcome o;
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const auto& f = quadratic_field(q);
    const int qi = static_cast<int>(q);
    const GrsSpec spec{full_evaluation_vector(f), std::vector<Gf>(q * q, f.one()), qi};
    const LinearCode c = grs_code(spec);
    const LinearCode hull = intersection(c, hermitian_dual(c));
    const std::string tag = "q=" + std::to_string(q);
    o.check(c.length() == qi * qi && c.dimension() == qi, tag + " code shape");
    o.check(hull == grs_code(spec.with_dimension(qi - 1)), tag + " hull != GRS_{q-1}");
    o.check(hull.dimension() == qi - 1, tag + " hull dim");
    const int d = min_distance(hull);
    o.check(d == qi * qi - qi + 2, tag + " hull d=" + std::to_string(d));
    o.detail += tag + ": hull dim " + std::to_string(hull.dimension()) + ", d " + std::to_string(d) + "; ";
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  int members = 0, intersections = 0;
  for (std::uint32_t q : {4u, 5u, 7u})
    for (Family fam : {Family::CON2, Family::CON3, Family::CON4})
      for (const FamilyParams& p : in_range_params(fam, q)) {
        const Construction con = construct_family(fam, p);
        const LinearCode& c = con.code;
        std::ostringstream tag;
        tag << to_string(fam) << " q=" << q << " k=" << p.k << " m=" << p.m;
        const int k = static_cast<int>(c.dimension());
        const LinearCode claimed = grs_code(con.claim.subcode);
        o.check(claimed.dimension() == k - 1, tag.str() + " claimed subcode dimension");
        o.check(static_cast<int>(hull_dim_via_gram(c)) == k - 1, tag.str() + " Gram-rank hull dim");
        if (ipow(q, 2 * k) <= kDefaultBudget) {
          const LinearCode hull = intersection(c, hermitian_dual(c));
          o.check(hull.dimension() == k - 1, tag.str() + " intersection hull dim");
          o.check(hull == claimed, tag.str() + " hull != claimed GRS_{k-1}");
          ++intersections;
        } else {
          // Equal dimensions plus containment give equality of row spaces.
          o.check(in_hull(claimed, c), tag.str() + " claimed GRS_{k-1} not in hull");
        }
        ++members;
      }
  o.detail = std::to_string(members) + " members, " + std::to_string(intersections) + " by intersection";
  return o;
}

Outcome criterion3() {
  Outcome o;
  int members = 0, rank_ok = 0, subcode_ok = 0;
  for (std::uint32_t q : {5u, 7u})
    for (Family fam : {Family::CON1E, Family::CON2E, Family::CON3E, Family::CON4E})
      for (const FamilyParams& p : in_range_params(fam, q)) {
        const Construction con = construct_family(fam, p);
        std::ostringstream tag;
        tag << to_string(fam) << " q=" << q << " k=" << p.k << " z=" << p.z << " f=" << p.f << " m=" << p.m;
        const int rank = static_cast<int>(con.code.dimension() - hull_dim_via_gram(con.code));
        const bool r = rank == con.claim.gram_rank;
        const bool s = in_hull(grs_code(con.claim.subcode), con.code);
        o.check(r, tag.str() + " Gram rank " + std::to_string(rank) + " vs " + std::to_string(con.claim.gram_rank));
        o.check(s, tag.str() + " claimed GRS_" + std::to_string(con.claim.subcode.k) + " not in hull");
        rank_ok += r;
        subcode_ok += s;
        ++members;
      }
  o.detail = std::to_string(members) + " members, Gram rank ok " + std::to_string(rank_ok) + ", subcode in hull " +
             std::to_string(subcode_ok);
  return o;
}

Outcome criterion4() {
  Outcome o;
  int members = 0, enumerated = 0, hull_mds = 0;
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const auto& f = quadratic_field(q);
    for (EvalFamily fam : {EvalFamily::COR1, EvalFamily::COR2, EvalFamily::COR3})
      for (const EvalParams& p : eval_in_range(fam, q)) {
        std::vector<Gf> u;
        try {
          u = evaluation_set(fam, p);
        } catch (const std::invalid_argument&) {
          continue;  // no common residue normalizer for this tuple
        }
        const int n = static_cast<int>(u.size());
        for (int k = 0; k <= (n - 2) / static_cast<int>(q + 1); ++k) {
          std::ostringstream tag;
          tag << to_string(fam) << " q=" << q << " s=" << p.s << " t=" << p.t << " n0=" << p.n0 << " k=" << k;
          const TwoPointCode tp = two_point_code(f, u, k);
          const LinearCode& c = tp.code;
          o.check(c.length() == n && c.dimension() == k + 2, tag.str() + " shape");
          if (ipow(f.size(), k + 2) <= kDefaultBudget) {
            o.check(min_distance(c) == n - k - 1, tag.str() + " distance");
            ++enumerated;
          }
          // Branch test: a.C_L(D, P) orthogonal to a.C_L(D, kO + P) means self-orthogonal.
          const int expected = tp.branch == 1 ? k + 2 : k;
          const int measured = static_cast<int>(hull_dim_via_gram(c));
          o.check(measured == expected, tag.str() + " hull dim " + std::to_string(measured));
          if (k <= 3 && measured > 0) {
            const LinearCode hull = hermitian_hull(c);
            const bool mds = min_distance(hull) == n - measured + 1;
            o.check(mds, tag.str() + " hull not MDS");
            hull_mds += mds;
          }
          ++members;
        }
      }
  }
  o.detail = std::to_string(members) + " codes, " + std::to_string(enumerated) + " distances enumerated, " +
             std::to_string(hull_mds) + " MDS hulls enumerated";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto& f = quadratic_field(5);
  o.check(f.is_conway(), "field modulus is not the Conway polynomial");
  TwoPointOptions opt;
  opt.extra_point = f.exp(example::kExtraPoint);
  opt.rule = WitnessRule::LargestExponent;
  const TwoPointCode tp = two_point_code(f, example::points(f), example::kDegree, opt);
  const std::vector<Gf> reference = example::reference_vector(f);
  // The reference vector is the scaling vector a with a_i^{q+1} = lambda / h'(u_i).
  o.check(tp.diff.witnesses == reference, "scaling vector differs from the reference vector");
  bool norms = tp.diff.normalizer.has_value();
  for (std::size_t i = 0; norms && i < reference.size(); ++i)
    norms = reference[i].pow(6) == *tp.diff.normalizer * tp.diff.residues[i];
  o.check(norms, "reference vector is not a norm witness of the residues");
  o.check(tp.code == LinearCode(f, example::generator(f)), "row space differs from the reference generator");
  const LinearCode hull = hermitian_hull(tp.code);
  o.check(hull.dimension() == 3, "hull dim");
  const int d = min_distance(hull);
  o.check(d == 18, "hull d=" + std::to_string(d));
  o.detail = "lambda = theta^" + std::to_string(tp.diff.normalizer ? tp.diff.normalizer->log() : -1) +
             ", hull dim " + std::to_string(hull.dimension()) + ", hull d " + std::to_string(d);
  return o;
}

std::vector<Gf> subfield_points(const FieldContext& f) {
  std::vector<Gf> u;
  for (Gf x : f.half().sub->elements()) u.push_back(f.half().embed(x));
  return u;
}

// Independent restatement of the condition: prod_{j != i} (u_i - u_j) is a nonzero norm.
bool norm_condition_from_scratch(const FieldContext& f, const std::vector<Gf>& u) {
  std::set<std::uint32_t> norms;
  for (Gf x : f.powers()) norms.insert(x.pow(f.q() + 1).packed());
  for (std::size_t i = 0; i < u.size(); ++i) {
    Gf d = f.one();
    for (std::size_t j = 0; j < u.size(); ++j)
      if (j != i) d *= u[i] - u[j];
    if (d.is_zero() || !norms.count(d.packed())) return false;
  }
  return true;
}

Outcome criterion6() {
  Outcome o;
  const auto& f5 = quadratic_field(5);
  const GrowthResult r5 = extend_evaluation_set(f5, subfield_points(f5), 2);
  o.check(r5.steps.size() == 2, "q=5 did not take two steps");
  std::vector<std::size_t> sizes;
  for (const auto& s : r5.steps) {
    sizes.push_back(s.set.size());
    o.check(s.added.second == s.added.first.pow(5), "q=5 added pair is not Frobenius-conjugate");
    o.check(norm_condition_from_scratch(f5, s.set), "q=5 norm condition");
  }
  o.check(sizes == std::vector<std::size_t>{7, 9}, "q=5 sizes");
  const auto& f7 = quadratic_field(7);
  const GrowthResult r7 = extend_evaluation_set(f7, subfield_points(f7), 3);
  o.check(r7.steps.size() == 3 && r7.steps.back().set.size() == 13, "q=7 did not reach 13 in three steps");
  for (const auto& s : r7.steps) o.check(norm_condition_from_scratch(f7, s.set), "q=7 norm condition");
  std::ostringstream d;
  d << "q=5 sizes 7, 9 adding {theta^" << r5.steps[0].added.first.log() << ", theta^" << r5.steps[0].added.second.log()
    << "}, {theta^" << r5.steps[1].added.first.log() << ", theta^" << r5.steps[1].added.second.log()
    << "}; q=7 size " << (r7.steps.empty() ? 0 : r7.steps.back().set.size());
  o.detail = d.str();
  return o;
}

Outcome criterion7() {
  Outcome o;
  int pairs = 0, equal = 0;
  std::string degenerate;
  for (int k = 1; k <= 3; ++k)
    for (int l = 0; l <= k; ++l) {
      const LinearCode p = rains_grs_pair(3, k, l);
      const LinearCode e = extended_dkl(3, k, l);
      const std::string tag = "k=" + std::to_string(k) + " l=" + std::to_string(l);
      o.check(p == e, tag + " P (dim " + std::to_string(p.dimension()) + ") != extended cyclic code (dim " +
                          std::to_string(e.dimension()) + ")");
      o.check(p.dimension() == 9 - 2 * l * k + l * l, tag + " dimension");
      equal += p == e;
      ++pairs;
    }
  o.detail = std::to_string(pairs) + " pairs (k, l), " + std::to_string(equal) + " equal as row spaces";
  return o;
}

QuantumParams qp7(int n, int kappa, int delta, int c) {
  QuantumParams p;
  p.n = n;
  p.kappa = kappa;
  p.delta = delta;
  p.c = c;
  p.q = 7;
  return p;
}

Outcome criterion8() {
  Outcome o;
  const std::vector<QuantumParams> expected{
      qp7(49, 25, 15, 4), qp7(49, 23, 16, 4), qp7(49, 21, 17, 4), qp7(49, 19, 18, 4), qp7(49, 16, 22, 9),
      qp7(49, 14, 23, 9), qp7(49, 12, 24, 9), qp7(41, 29, 8, 2),  qp7(41, 27, 9, 2),  qp7(41, 25, 10, 2),
      qp7(41, 23, 11, 2), qp7(41, 19, 15, 6), qp7(41, 17, 16, 6), qp7(41, 15, 17, 6), qp7(33, 21, 8, 2),
      qp7(33, 19, 9, 2),  qp7(33, 17, 10, 2), qp7(33, 10, 16, 8), qp7(25, 13, 8, 2),  qp7(25, 11, 9, 2)};
  const auto rows = emit_tables(7);
  int found = 0;
  for (const QuantumParams& e : expected) {
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const TableRow& r) { return r.table == 3 && r.qp == e; });
    if (it == rows.end()) {
      o.check(false, to_string(e) + " not derived");
      continue;
    }
    ++found;
    o.check(it->bounds.mds, to_string(e) + " misses bound equality");
    o.check(it->status == "new", to_string(e) + " status " + it->status);
  }
  o.detail = std::to_string(found) + "/" + std::to_string(expected.size()) + " entries derived";
  return o;
}

LinearCode random_code(const FieldContext& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> len(2, 10);
  const int n = len(rng);
  std::uniform_int_distribution<int> dim(1, std::min(5, n));
  const int k = dim(rng);
  std::uniform_int_distribution<std::uint32_t> pick(0, f.size() - 1);
  MatrixGF g(k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = f.element(pick(rng));
  return LinearCode(f, g);
}

Outcome criterion9() {
  Outcome o;
  std::mt19937 rng(20240611);
  const std::uint32_t qs[] = {2, 3, 4, 5};
  for (int trial = 0; trial < 500; ++trial) {
    const auto& f = quadratic_field(qs[trial % 4]);
    const LinearCode c = random_code(f, rng);
    const std::string tag = "code " + std::to_string(trial);
    const LinearCode de = euclidean_dual(c), dh = hermitian_dual(c);
    o.check(euclidean_dual(de) == c && hermitian_dual(dh) == c, tag + " double dual");
    o.check(c.dimension() + de.dimension() == c.length() && c.dimension() + dh.dimension() == c.length(),
            tag + " rank-nullity");
    const LinearCode hull = intersection(c, dh);
    o.check(hermitian_hull(dh) == hull && hermitian_hull(c) == hull, tag + " hull symmetry");
    o.check(hull_dim_via_gram(c) == hull.dimension(), tag + " Gram rank vs intersection");
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto& f = quadratic_field(qs[trial % 4]);
    auto all = f.elements();
    std::shuffle(all.begin(), all.end(), rng);
    std::uniform_int_distribution<std::size_t> size(2, all.size());
    const std::vector<Gf> u(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size(rng)));
    o.check(residues(f, u).residue_sum.is_zero(), "residue sum, set " + std::to_string(trial));
  }
  o.detail = "500 codes, 200 evaluation sets";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9};
  bool unexpected = false;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s (%.2f s) %s", id, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    if (!o.pass) std::printf(" | %d failed checks, first: %s", o.failures, o.first.c_str());
    std::printf("\n");
    std::fflush(stdout);
    if (!o.pass && (strict || !kKnownFailures.count(id))) unexpected = true;
  }
  return unexpected ? 1 : 0;
}
