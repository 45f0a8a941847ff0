#include "hermhull/quantum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "hermhull/ag.hpp"
#include "hermhull/grs.hpp"

namespace hermhull {

std::string to_string(const QuantumParams& p) {
  std::ostringstream os;
  os << "[[" << p.n << "," << p.kappa << "," << p.delta << ";" << p.c << "]]_" << p.q;
  return os.str();
}

ClassicalIngredient mds_ingredient(int n, int k, int hull_dim, std::uint32_t q) {
  return {n, k, hull_dim, k + 1, q, k + 1, "structural"};
}

QuantumParams eaqecc_from_code(const ClassicalIngredient& ing) {
  if (ing.n < 1 || ing.k < 0 || ing.k > ing.n) throw std::invalid_argument("inconsistent ingredient: need 0 <= k <= n");
  if (ing.hull_dim < 0 || ing.hull_dim > std::min(ing.k, ing.n - ing.k))
    throw std::invalid_argument("inconsistent ingredient: hull dimension exceeds min(k, n - k)");
  if (ing.dual_weight < 1) throw std::invalid_argument("inconsistent ingredient: dual weight must be positive");
  QuantumParams p;
  p.n = ing.n;
  p.c = ing.k - ing.hull_dim;
  p.kappa = ing.n - 2 * ing.k + p.c;
  p.delta = ing.dual_weight;
  p.q = ing.q;
  p.pure = ing.dual_distance && *ing.dual_distance == ing.dual_weight;
  p.delta_source = ing.weight_source;
  return p;
}

QuantumParams propagate(const QuantumParams& p, int i, int hull_dim) {
  if (i == 0) return p;
  if (p.q <= 2) throw std::invalid_argument("propagation needs q > 2");
  if (i < 0 || i > hull_dim) throw std::invalid_argument("propagation index must lie in [1, hull dimension]");
  if (!p.pure) throw std::invalid_argument("propagation needs a pure source code");
  QuantumParams out = p;
  out.kappa += i;
  out.c += i;
  return out;
}

SingletonCheck singleton_check(const QuantumParams& p) {
  SingletonCheck s;
  s.slack_small = p.c + std::max(0, p.n - 2 * p.delta + 2) - p.kappa;
  s.slack_trivial = p.n - p.delta + 1 - p.kappa;
  const bool large = 2 * (p.delta - 1) >= p.n;
  if (large) {
    const long long n = p.n, d = p.delta, c = p.c, kappa = p.kappa;
    s.slack_large = (n - d + 1) * (c + 2 * d - 2 - n) - kappa * (3 * d - 3 - n);
    s.mds = *s.slack_large == 0;
  } else {
    s.mds = s.slack_small == 0;
  }
  return s;
}

const std::vector<ReferenceEntry>& table3_reference() {
  static const std::vector<ReferenceEntry> refs = [] {
    std::vector<ReferenceEntry> r;
    auto add = [&](int n, int kappa, int delta, int c, const char* label) {
      r.push_back({{n, kappa, delta, c, 7, true, "reference"}, label});
    };
    add(50, 36, 8, 0, "ref-a");
    for (int j = 0; j <= 17; ++j) add(50, 42 - j, 9 + j, 8 + j, "ref-b");
    for (int j = 0; j < 6; ++j) add(49, 36 - 2 * j, 8 + j, 1, "ref-c");
    for (int j = 0; j < 6; ++j) add(25, 18 - j, 8 + j, 7 + j, "ref-c");
    add(25, 13, 9, 4, "ref-d");
    add(25, 9, 11, 4, "ref-d");
    add(25, 5, 13, 4, "ref-d");
    add(24, 12, 8, 2, "ref-c");
    add(24, 10, 9, 2, "ref-c");
    add(24, 8, 10, 2, "ref-c");
    add(24, 6, 12, 4, "ref-e");
    add(24, 4, 13, 4, "ref-e");
    return r;
  }();
  return refs;
}

bool dominated(const QuantumParams& p, const std::vector<ReferenceEntry>& refs) {
  for (const auto& r : refs) {
    const auto& x = r.qp;
    if (x.n != p.n || x.kappa != p.kappa) continue;
    if (x.delta >= p.delta && x.c <= p.c && (x.delta > p.delta || x.c < p.c)) return true;
  }
  return false;
}

namespace {

int measured_hull(const LinearCode& c) { return static_cast<int>(hull_dim_via_gram(c)); }

TableRow make_row(int table, int row, std::string variant, std::string source, Json params, QuantumParams qp,
                  std::string note = {}) {
  TableRow r;
  r.table = table;
  r.row = row;
  r.variant = std::move(variant);
  r.source = std::move(source);
  r.params = std::move(params);
  r.qp = qp;
  r.bounds = singleton_check(qp);
  r.note = std::move(note);
  return r;
}

Json grs_params(const FamilyParams& p, int s) {
  Json j{{"q", p.q}, {"k", p.k}};
  if (p.z) j["z"] = p.z;
  if (p.f) j["f"] = p.f;
  if (p.m) j["m"] = p.m;
  if (s) j["s"] = s;
  return j;
}

// Q1, Q2' and Q3' for one hull-equality GRS instance with hull GRS_{k-1}.
void table1_grs_rows(std::vector<TableRow>& out, int row, Family fam, const FamilyParams& p) {
  const Construction con = construct_family(fam, p);
  const int n = static_cast<int>(con.code.length());
  const int k = con.claim.params.k;
  const std::uint32_t q = p.q;
  const int hull = measured_hull(con.code);
  const Json params = grs_params(con.claim.params, con.claim.s);
  const std::string src = to_string(fam);
  if (hull != k - 1) {
    out.push_back(make_row(1, row, "Q1", src, params, {}, "measured hull " + std::to_string(hull) + " != k - 1"));
    return;
  }
  // The hull GRS_{k-1} is self-orthogonal and MDS.
  out.push_back(make_row(1, row, "Q1", src, params, eaqecc_from_code(mds_ingredient(n, k - 1, k - 1, q))));
  const QuantumParams q2 = eaqecc_from_code(mds_ingredient(n, k, hull, q));
  out.push_back(make_row(1, row, "Q2'", src, params, propagate(q2, 1, hull)));
  for (int u = 1; u < static_cast<int>(q) - 2; ++u) {
    const int ku = k + u;
    if (ku > n / 2) break;
    const LinearCode big = grs_code(con.claim.spec.with_dimension(ku));
    const int h = measured_hull(big);
    const int c0 = ku - h;
    const int i = 2 * u + 2 - c0;
    Json pu = params;
    pu["u"] = u;
    pu["hull"] = h;
    if (i < 0 || i > h) {
      out.push_back(make_row(1, row, "Q3'", src, pu, {}, "propagation index " + std::to_string(i) + " outside [0, hull]"));
      continue;
    }
    out.push_back(make_row(1, row, "Q3'", src, pu, propagate(eaqecc_from_code(mds_ingredient(n, ku, h, q)), i, h)));
  }
}

struct AgInstance {
  std::string family;
  Json params;
  std::vector<Gf> points;
};

std::vector<AgInstance> ag_instances(std::uint32_t q) {
  std::vector<AgInstance> out;
  for (auto fam : {EvalFamily::COR1, EvalFamily::COR2, EvalFamily::COR3})
    for (const auto& p : eval_in_range(fam, q)) {
      AgInstance a;
      a.family = to_string(fam);
      a.params = Json{{"q", q}};
      if (fam == EvalFamily::COR1) a.params["s"] = p.s;
      if (fam != EvalFamily::COR1) a.params["t"] = p.t;
      if (fam == EvalFamily::COR3) a.params["n0"] = p.n0;
      try {
        a.points = evaluation_set(fam, p);
      } catch (const std::exception&) {
        continue;  // exhausted coset representatives
      }
      out.push_back(std::move(a));
    }
  return out;
}

TwoPointOptions cheap_options() {
  TwoPointOptions o;
  o.budget = 0;  // parameter work only; distances are structural
  o.enumerate_hull_upto = 0;
  return o;
}

void table1_ag_rows(std::vector<TableRow>& out, std::uint32_t q, const std::vector<AgInstance>& inst) {
  const std::map<std::string, int> row_of{{"COR1", 5}, {"COR2", 6}, {"COR3", 7}};
  const FieldContext& f = quadratic_field(q);
  for (const auto& a : inst) {
    const int n = static_cast<int>(a.points.size());
    const int row = row_of.at(a.family);
    for (int deg = 0; deg <= (n - 2) / static_cast<int>(q + 1); ++deg) {
      const int k = deg + 2;
      const TwoPointCode tp = two_point_code(f, a.points, deg, cheap_options());
      Json params = a.params;
      params["k"] = k;
      const int base_hull = measured_hull(tp.base);
      if (base_hull == k - 1)
        out.push_back(make_row(1, row, "Q1", a.family, params, eaqecc_from_code(mds_ingredient(n, k - 1, k - 1, q))));
      else
        out.push_back(make_row(1, row, "Q1", a.family, params, {}, "base code not self-orthogonal"));
      const int h = measured_hull(tp.code);
      const int c0 = k - h;
      params["hull"] = h;
      if (c0 > 2 || 2 - c0 > h) {
        out.push_back(make_row(1, row, "Q2'", a.family, params, {}, "cannot reach c = 2 from c = " + std::to_string(c0)));
        continue;
      }
      out.push_back(make_row(1, row, "Q2'", a.family, params,
                             propagate(eaqecc_from_code(mds_ingredient(n, k, h, q)), 2 - c0, h)));
    }
  }
}

int table2_row(Family fam, const FamilyParams& p) {
  switch (fam) {
    case Family::CON1E: return 1;
    case Family::CON2E: return 2;
    case Family::CON3E: return p.f >= p.z ? 3 : 4;
    case Family::CON4E: return p.f >= p.z ? 5 : 6;
    default: return 0;
  }
}

TableRow enlarged_row(int table, Family fam, const FamilyParams& p, bool relaxed) {
  const Construction con = construct_family(fam, p, relaxed);
  const int n = static_cast<int>(con.code.length());
  const int gram = p.k - measured_hull(con.code);
  Json params = grs_params(p, con.claim.s);
  if (con.claim.relaxed) params["relaxed_range"] = true;
  std::string note;
  if (gram != con.claim.gram_rank)
    note = "measured Gram rank " + std::to_string(gram) + ", claimed " + std::to_string(con.claim.gram_rank);
  return make_row(table, table2_row(fam, p), "EA", to_string(fam), params,
                  eaqecc_from_code(mds_ingredient(n, p.k, p.k - gram, p.q)), note);
}

void table2_ag_rows(std::vector<TableRow>& out, std::uint32_t q, const std::vector<AgInstance>& inst) {
  const std::map<std::string, int> row_of{{"COR1", 7}, {"COR2", 8}, {"COR3", 9}};
  const FieldContext& f = quadratic_field(q);
  for (const auto& a : inst) {
    const int n = static_cast<int>(a.points.size());
    for (int deg = 0; deg <= (n - 2) / static_cast<int>(q + 1); ++deg) {
      const int k = deg + 2;
      const TwoPointCode tp = two_point_code(f, a.points, deg, cheap_options());
      std::set<int> seen;
      const std::vector<int> dims = hull_sweep(tp);
      for (int l = 0; l <= deg; ++l) {
        const int h = dims[l];
        const int c = k - h;
        if (c < 2 || !seen.insert(c).second) continue;
        Json params = a.params;
        params["k"] = k;
        params["l"] = l;
        out.push_back(make_row(2, row_of.at(a.family), "EA", a.family, params,
                               eaqecc_from_code(mds_ingredient(n, k, h, q))));
      }
    }
  }
}

}  // namespace

std::vector<TableRow> emit_tables(std::uint32_t q, const TableOptions& opt) {
  if (!prime_power(q) || q < 3) throw std::invalid_argument("tables need a prime power q >= 3");
  std::vector<TableRow> t1, t2, t3;
  const auto inst = ag_instances(q);
  if (opt.table1 || opt.table3) {
    table1_grs_rows(t1, 1, Family::CON1, {q, static_cast<int>(q), 0, 0, 0});
    const std::pair<int, Family> grs_rows[] = {{2, Family::CON2}, {3, Family::CON3}, {4, Family::CON4}};
    for (const auto& [row, fam] : grs_rows)
      for (const auto& p : in_range_params(fam, q)) table1_grs_rows(t1, row, fam, p);
    table1_ag_rows(t1, q, inst);
  }
  if (opt.table2 || opt.table3) {
    for (auto fam : {Family::CON1E, Family::CON2E, Family::CON3E, Family::CON4E})
      for (const auto& p : in_range_params(fam, q)) t2.push_back(enlarged_row(2, fam, p, false));
    table2_ag_rows(t2, q, inst);
  }
  if (opt.table3) {
    std::vector<TableRow> cand;
    for (const auto& r : t1) cand.push_back(r);
    for (const auto& r : t2) cand.push_back(r);
    // Enlarged families at the boundary value of z, kept only when the measured Gram rank
    // agrees with the branch formula.
    for (auto fam : {Family::CON1E, Family::CON2E, Family::CON3E, Family::CON4E})
      for (const auto& p : in_range_params(fam, q, true)) {
        if (!range_violation(fam, p, false)) continue;
        TableRow r = enlarged_row(3, fam, p, true);
        if (r.note.empty()) cand.push_back(std::move(r));
      }
    const auto& refs = table3_reference();
    std::set<std::tuple<int, int, int, int>> seen;
    for (auto& r : cand) {
      if (r.qp.n == 0 || !r.note.empty() || r.qp.delta <= static_cast<int>(q) || !r.bounds.mds) continue;
      if (!seen.insert({r.qp.n, r.qp.kappa, r.qp.delta, r.qp.c}).second) continue;
      TableRow x = r;
      x.params["from_table"] = r.table;
      x.params["from_row"] = r.row;
      x.table = 3;
      x.row = 0;
      if (q == 7) {
        const bool same = std::any_of(refs.begin(), refs.end(), [&](const ReferenceEntry& e) { return e.qp == x.qp; });
        x.status = same ? "matches-ref" : dominated(x.qp, refs) ? "dominated" : "new";
      } else {
        x.status = "new";
      }
      t3.push_back(std::move(x));
    }
    std::stable_sort(t3.begin(), t3.end(), [](const TableRow& a, const TableRow& b) {
      return std::make_tuple(-a.qp.n, a.qp.c, a.qp.delta) < std::make_tuple(-b.qp.n, b.qp.c, b.qp.delta);
    });
    for (std::size_t i = 0; i < t3.size(); ++i) t3[i].row = static_cast<int>(i) + 1;
  }
  std::vector<TableRow> out;
  if (opt.table1) out.insert(out.end(), t1.begin(), t1.end());
  if (opt.table2) out.insert(out.end(), t2.begin(), t2.end());
  if (opt.table3) out.insert(out.end(), t3.begin(), t3.end());
  return out;
}

Json quantum_json(const QuantumParams& p) {
  const SingletonCheck s = singleton_check(p);
  return Json{{"n", p.n},
              {"kappa", p.kappa},
              {"delta", p.delta},
              {"c", p.c},
              {"q", p.q},
              {"pure", p.pure},
              {"delta_source", p.delta_source},
              {"bounds",
               {{"slack_small_distance", s.slack_small},
                {"slack_trivial", s.slack_trivial},
                {"slack_large_distance", s.slack_large ? Json(*s.slack_large) : Json(nullptr)},
                {"mds", s.mds}}}};
}

Json tables_json(const std::vector<TableRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j{{"table", r.table}, {"row", r.row}, {"variant", r.variant}, {"source", r.source}, {"params", r.params}};
    j["code"] = r.qp.n ? quantum_json(r.qp) : Json(nullptr);
    if (!r.status.empty()) j["status"] = r.status;
    if (!r.note.empty()) j["note"] = r.note;
    out.push_back(std::move(j));
  }
  return out;
}

namespace {
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}
}  // namespace

std::string tables_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "table,row,variant,source,params,n,kappa,delta,c,q,slack_small,slack_trivial,slack_large,mds,status,note\n";
  for (const auto& r : rows) {
    os << r.table << ',' << r.row << ',' << r.variant << ',' << r.source << ',' << csv_field(r.params.dump()) << ',';
    if (r.qp.n) {
      os << r.qp.n << ',' << r.qp.kappa << ',' << r.qp.delta << ',' << r.qp.c << ',' << r.qp.q << ','
         << r.bounds.slack_small << ',' << r.bounds.slack_trivial << ','
         << (r.bounds.slack_large ? std::to_string(*r.bounds.slack_large) : "") << ',' << (r.bounds.mds ? 1 : 0);
    } else {
      os << ",,,,,,,,";
    }
    os << ',' << r.status << ',' << csv_field(r.note) << '\n';
  }
  return os.str();
}

std::string tables_markdown(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  int current = 0;
  for (const auto& r : rows) {
    if (r.table != current) {
      current = r.table;
      os << (os.tellp() > 0 ? "\n" : "") << "## Table " << current << "\n\n";
      os << "| row | variant | source | params | [[n,kappa,delta;c]] | MDS | status |\n";
      os << "|---|---|---|---|---|---|---|\n";
    }
    os << "| " << r.row << " | " << r.variant << " | " << r.source << " | `" << r.params.dump() << "` | ";
    if (r.qp.n)
      os << "[[" << r.qp.n << "," << r.qp.kappa << "," << r.qp.delta << ";" << r.qp.c << "]] | "
         << (r.bounds.mds ? "yes" : "no");
    else
      os << "- | -";
    os << " | " << (r.status.empty() ? r.note : r.status) << " |\n";
  }
  return os.str();
}

}  // namespace hermhull
