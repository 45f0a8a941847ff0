// hermhull: command-line front end for the Hermitian-hull constructions.

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hermhull/ag.hpp"
#include "hermhull/cyclic.hpp"
#include "hermhull/grs.hpp"
#include "hermhull/quantum.hpp"

using namespace hermhull;

namespace {

struct Globals {
  std::uint64_t budget = kDefaultBudget;
  std::string modulus;
  std::string format = "json";
  bool timings = false;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad integer list: " + s);
    }
  }
  return out;
}

const FieldContext& field_for(std::uint32_t q, const Globals& g) {
  const auto pp = prime_power(q);
  if (!pp) throw UsageError(std::to_string(q) + " is not a prime power");
  if (!g.modulus.empty()) set_default_modulus(pp->first, 2 * pp->second, parse_int_list(g.modulus));
  return quadratic_field(q);
}

Json evaluation_set_json(std::span<const Gf> u) {
  std::vector<int> logs;
  bool zero = false;
  for (Gf x : u) {
    if (x.is_zero())
      zero = true;
    else
      logs.push_back(x.log());
  }
  std::sort(logs.begin(), logs.end());
  return Json{{"logs", logs}, {"zero", zero}};
}

void attach_quantum(ConstructionReport& rep, std::uint32_t q) {
  if (!rep.hull_dim_measured || !rep.d || *rep.d != rep.n - rep.k + 1) return;
  const int h = *rep.hull_dim_measured;
  if (h > std::min(rep.k, rep.n - rep.k)) return;
  rep.quantum.push_back(quantum_json(eaqecc_from_code(mds_ingredient(rep.n, rep.k, h, q))));
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int emit(const ConstructionReport& rep, const Globals& g) {
  if (g.format == "markdown")
    std::cout << rep.markdown();
  else
    print_json(g.timings ? rep.envelope() : rep.canonical_json());
  return rep.verdict() == Verdict::Fail ? 1 : 0;
}

int emit_many(const std::vector<ConstructionReport>& reps, const Globals& g, Json header) {
  int pass = 0, partial = 0, fail = 0;
  for (const auto& r : reps) {
    switch (r.verdict()) {
      case Verdict::Pass: ++pass; break;
      case Verdict::Partial: ++partial; break;
      case Verdict::Fail: ++fail; break;
    }
  }
  const Json summary{{"total", reps.size()}, {"pass", pass}, {"partial", partial}, {"fail", fail}};
  if (g.format == "markdown") {
    for (const auto& r : reps) std::cout << r.markdown() << "\n";
    std::cout << "**summary**: " << pass << " pass, " << partial << " partial, " << fail << " fail\n";
  } else {
    Json out = std::move(header);
    Json arr = Json::array();
    for (const auto& r : reps) arr.push_back(g.timings ? r.envelope() : r.canonical_json());
    out["reports"] = std::move(arr);
    out["summary"] = summary;
    print_json(out);
  }
  return fail ? 1 : 0;
}

ConstructionReport grs_report(Family fam, const FamilyParams& p, bool relaxed, const Globals& g) {
  const Construction con = construct_family(fam, p, relaxed);
  ConstructionReport rep = verify_claim(con.code, con.claim, {.budget = g.budget});
  attach_quantum(rep, p.q);
  return rep;
}

std::vector<ConstructionReport> grs_sweep(std::uint32_t q, std::optional<Family> only, bool relaxed, const Globals& g) {
  std::vector<ConstructionReport> reps;
  for (int i = 0; i < 8; ++i) {
    const auto fam = static_cast<Family>(i);
    if (only && *only != fam) continue;
    for (const auto& p : in_range_params(fam, q, relaxed)) reps.push_back(grs_report(fam, p, relaxed, g));
  }
  return reps;
}

struct AgArgs {
  std::string family;
  std::uint32_t q = 0;
  int s = 0, t = 0, n0 = 0, k = 0;
  std::optional<int> point_log;
  std::optional<int> alpha_log;
  bool extended = false;
  bool sweep = false;
  std::string points;  // explicit evaluation set as logs, -1 for 0
  std::string witness = "smallest";
};

EvalParams eval_params(const AgArgs& a) { return {a.q, a.s, a.t, a.n0}; }

std::vector<Gf> explicit_points(const FieldContext& f, const std::string& list) {
  std::vector<Gf> u;
  for (int c : parse_int_list(list)) {
    if (c < -1) throw UsageError("point logs must be >= -1");
    u.push_back(c < 0 ? f.zero() : f.exp(c));
  }
  return u;
}

ConstructionReport ag_report(const FieldContext& f, std::optional<EvalFamily> fam, const AgArgs& a, const Globals& g) {
  const std::vector<Gf> u = fam ? evaluation_set(*fam, eval_params(a)) : explicit_points(f, a.points);
  TwoPointOptions opt;
  opt.budget = g.budget;
  opt.rule = a.witness == "largest" ? WitnessRule::LargestExponent : WitnessRule::SmallestExponent;
  if (a.point_log) opt.extra_point = *a.point_log < 0 ? f.zero() : f.exp(*a.point_log);
  TwoPointCode tp = a.extended ? extended_two_point(f, u, a.k, opt) : two_point_code(f, u, a.k, opt);
  ConstructionReport rep = std::move(tp.report);
  rep.family = (fam ? to_string(*fam) : "explicit") + (a.extended ? "-extended" : "");
  rep.params["family_params"] = Json::object();
  if (fam == EvalFamily::COR1) rep.params["family_params"]["s"] = a.s;
  if (fam == EvalFamily::COR2 || fam == EvalFamily::COR3) rep.params["family_params"]["t"] = a.t;
  if (fam == EvalFamily::COR3) rep.params["family_params"]["n0"] = a.n0;
  if (!fam) rep.params["family_params"]["witness"] = a.witness;
  rep.extra["evaluation_set"] = evaluation_set_json(u);
  if (a.sweep && !a.extended) {
    const std::optional<Gf> alpha = a.alpha_log ? std::optional<Gf>(f.exp(*a.alpha_log)) : std::nullopt;
    const std::vector<int> dims = hull_sweep(tp, alpha);
    bool ok = true;
    for (std::size_t l = 0; l < dims.size(); ++l) ok = ok && dims[l] == a.k - static_cast<int>(l);
    rep.extra["hull_sweep"] = dims;
    rep.add("hull_sweep", ok ? CheckStatus::Verified : CheckStatus::Failed,
            "hull dimensions strictly decreasing over l = 0..k and covering 0..k");
  }
  attach_quantum(rep, a.q);
  return rep;
}

EvalFamily need_eval_family(const std::string& s) {
  const auto fam = parse_eval_family(s);
  if (!fam) throw UsageError("unknown evaluation family: " + s);
  return *fam;
}

Family need_family(const std::string& s) {
  const auto fam = parse_family(s);
  if (!fam) throw UsageError("unknown family: " + s);
  return *fam;
}

std::vector<ConstructionReport> verify_all(std::uint32_t q, bool include_extended, const Globals& g) {
  std::vector<ConstructionReport> reps = grs_sweep(q, std::nullopt, false, g);
  const FieldContext& f = field_for(q, g);
  for (auto fam : {EvalFamily::COR1, EvalFamily::COR2, EvalFamily::COR3})
    for (const auto& p : eval_in_range(fam, q)) {
      std::vector<Gf> u;
      try {
        u = evaluation_set(fam, p);
      } catch (const std::exception&) {
        continue;
      }
      const int n = static_cast<int>(u.size());
      for (int k = 0; k <= (n - 2) / static_cast<int>(q + 1); ++k) {
        AgArgs a{to_string(fam), q, p.s, p.t, p.n0, k, std::nullopt, std::nullopt, false, true, "", "smallest"};
        reps.push_back(ag_report(f, fam, a, g));
        if (include_extended) {
          a.extended = true;
          a.sweep = false;
          reps.push_back(ag_report(f, fam, a, g));
        }
      }
    }
  return reps;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int quantum_params(const std::string& path, std::optional<int> prop) {
  Json j = read_json_file(path);
  if (j.contains("report")) j = j["report"];
  if (!j.contains("code") || !j.contains("hull") || !j.contains("params"))
    throw UsageError("not a construction report: " + path);
  const int n = j["code"]["n"].get<int>();
  const int k = j["code"]["k"].get<int>();
  const auto& hull = j["hull"];
  const Json h = hull["measured_dim"].is_null() ? hull["claimed_dim"] : hull["measured_dim"];
  if (h.is_null()) throw std::runtime_error("report has no hull dimension");
  const auto q = j["params"]["q"].get<std::uint32_t>();
  if (j["code"]["d"].is_null() || j["code"]["d"].get<int>() != n - k + 1)
    throw std::runtime_error("code is not MDS; the dual weight outside the hull is not known");
  const ClassicalIngredient ing = mds_ingredient(n, k, h.get<int>(), q);
  const QuantumParams qp = eaqecc_from_code(ing);
  Json out{{"source", j.value("family", "")},
           {"ingredient", {{"n", n}, {"k", k}, {"hull_dim", ing.hull_dim}, {"dual_weight", ing.dual_weight}, {"q", q}}},
           {"params", quantum_json(qp)}};
  if (prop) out["propagated"] = quantum_json(propagate(qp, *prop, ing.hull_dim));
  print_json(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian hulls of GRS and genus-0 AG codes, with EAQECC parameters"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--budget", g.budget, "cap on enumerated codewords");
  app.add_option("--field-modulus", g.modulus, "coefficients c0,...,cm of the GF(q^2) modulus");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "markdown"}));
  app.add_flag("--timings", g.timings, "wrap reports in an envelope with timings");

  std::uint32_t fq = 0;
  auto* field = app.add_subcommand("field", "describe GF(q^2) and its subfield GF(q)");
  field->add_option("--q", fq)->required();

  auto* grs = app.add_subcommand("grs", "GRS constructions");
  grs->require_subcommand(1);
  FamilyParams gp;
  std::string gfam;
  bool relaxed = false;
  auto* construct = grs->add_subcommand("construct", "build and verify one family member");
  construct->add_option("--family", gfam)->required();
  construct->add_option("--q", gp.q)->required();
  construct->add_option("--k", gp.k);
  construct->add_option("--z", gp.z);
  construct->add_option("--f", gp.f);
  construct->add_option("--m", gp.m);
  construct->add_flag("--relaxed", relaxed, "admit z at the floor bound");
  auto* sweep = grs->add_subcommand("sweep", "verify every in-range family member");
  std::uint32_t sq = 0;
  std::string sfam;
  sweep->add_option("--q", sq)->required();
  sweep->add_option("--family", sfam);
  sweep->add_flag("--relaxed", relaxed, "admit z at the floor bound");

  auto* cyclic = app.add_subcommand("cyclic", "cyclic codes");
  cyclic->require_subcommand(1);
  auto* dkl = cyclic->add_subcommand("dkl", "defining set D_{k,l}");
  std::uint32_t cq = 0;
  int ck = 0, cl = 0;
  dkl->add_option("--q", cq)->required();
  dkl->add_option("--k", ck)->required();
  dkl->add_option("--l", cl)->required();

  auto* ag = app.add_subcommand("ag", "two-point AG codes");
  ag->require_subcommand(1);
  AgArgs aa;
  auto* build = ag->add_subcommand("build", "build and verify a two-point code");
  auto* bfam = build->add_option("--family", aa.family);
  auto* bpts = build->add_option("--points", aa.points, "explicit evaluation set as logs, -1 for 0");
  bfam->excludes(bpts);
  build->add_option("--witness", aa.witness, "norm witness rule")->check(CLI::IsMember({"smallest", "largest"}));
  build->add_option("--q", aa.q)->required();
  build->add_option("--s", aa.s);
  build->add_option("--t", aa.t);
  build->add_option("--n0", aa.n0);
  build->add_option("--k", aa.k)->required();
  build->add_option("--point", aa.point_log, "log of the extra place P (-1 for 0)");
  build->add_option("--alpha", aa.alpha_log, "log of the scaling constant for --sweep");
  build->add_flag("--extended", aa.extended, "extend by the negative coordinate sum");
  build->add_flag("--sweep", aa.sweep, "scale coordinates to realize every hull dimension");
  auto* grow = ag->add_subcommand("grow", "grow an evaluation set from GF(q)");
  std::uint32_t wq = 0;
  int steps = 1;
  grow->add_option("--q", wq)->required();
  grow->add_option("--steps", steps);

  auto* quantum = app.add_subcommand("quantum", "quantum code parameters");
  quantum->require_subcommand(1);
  auto* qparams = quantum->add_subcommand("params", "EAQECC parameters from a report");
  std::string from;
  std::optional<int> prop;
  qparams->add_option("--from", from)->required();
  qparams->add_option("--propagate", prop);
  auto* tables = quantum->add_subcommand("tables", "regenerate the parameter tables");
  std::uint32_t tq = 0;
  std::string tformat = "json";
  tables->add_option("--q", tq)->required();
  tables->add_option("--format", tformat)->check(CLI::IsMember({"csv", "json", "markdown"}));

  auto* vall = app.add_subcommand("verify-all", "verify every in-range construction at q");
  std::uint32_t vq = 0;
  bool with_ext = false;
  vall->add_option("--q", vq)->required();
  vall->add_flag("--include-extended", with_ext, "also run the extended two-point construction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (field->parsed()) {
      const FieldContext& f = field_for(fq, g);
      const SubfieldMap& half = f.half();
      print_json(Json{{"q", fq},
                      {"field", field_json(f)},
                      {"conway", f.is_conway()},
                      {"subfield", field_json(*half.sub)},
                      {"subfield_generator_log", half.embed(half.sub->primitive()).log()}});
      return 0;
    }
    if (construct->parsed()) {
      field_for(gp.q, g);
      return emit(grs_report(need_family(gfam), gp, relaxed, g), g);
    }
    if (sweep->parsed()) {
      field_for(sq, g);
      std::optional<Family> only;
      if (!sfam.empty()) only = need_family(sfam);
      return emit_many(grs_sweep(sq, only, relaxed, g), g, Json{{"q", sq}});
    }
    if (dkl->parsed()) {
      const auto d = defining_set_dkl(cq, ck, cl);
      const int n = static_cast<int>(cq * cq) - 1;
      print_json(Json{{"q", cq},
                      {"k", ck},
                      {"l", cl},
                      {"n", n},
                      {"D", d},
                      {"dim", n - static_cast<int>(d.size())},
                      {"ht_bound", ht_bound(n, d)}});
      return 0;
    }
    if (build->parsed()) {
      const FieldContext& f = field_for(aa.q, g);
      if (aa.family.empty() && aa.points.empty()) throw UsageError("ag build needs --family or --points");
      const std::optional<EvalFamily> fam =
          aa.family.empty() ? std::nullopt : std::optional<EvalFamily>(need_eval_family(aa.family));
      return emit(ag_report(f, fam, aa, g), g);
    }
    if (grow->parsed()) {
      const FieldContext& f = field_for(wq, g);
      std::vector<Gf> start;
      for (Gf x : f.half().sub->elements()) start.push_back(f.half().embed(x));
      const GrowthResult res = extend_evaluation_set(f, start, steps);
      Json st = Json::array();
      for (const auto& s : res.steps)
        st.push_back(Json{{"size", s.set.size()},
                          {"added", {s.added.first.log(), s.added.second.log()}},
                          {"conjugate_pair", s.conjugate_pair},
                          {"set", evaluation_set_json(s.set)}});
      print_json(Json{{"q", wq}, {"start", evaluation_set_json(start)}, {"steps", st}, {"exhausted", res.exhausted}});
      return 0;
    }
    if (qparams->parsed()) return quantum_params(from, prop);
    if (tables->parsed()) {
      field_for(tq, g);
      const auto rows = emit_tables(tq);
      if (tformat == "csv")
        std::cout << tables_csv(rows);
      else if (tformat == "markdown")
        std::cout << tables_markdown(rows);
      else
        print_json(Json{{"q", tq}, {"rows", tables_json(rows)}});
      return 0;
    }
    if (vall->parsed()) {
      field_for(vq, g);
      return emit_many(verify_all(vq, with_ext, g), g, Json{{"q", vq}});
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
