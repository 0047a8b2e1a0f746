#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsg/ce_complex.hpp"
#include "tsg/io.hpp"
#include "tsg/qf_search.hpp"

namespace tsg::cli {

namespace {

using json = nlohmann::json;

constexpr const char* kFormats = R"FMT(Input formats (TOML, indices 1-based, rationals as "p" or "p/q"):
  algebra      dim = 3, basis = ["x","y","z"], brackets = [[1,2,3,"1"]]   (or builtin:NAME)
  form         degree = 2, forms = [[[1,2],"1"]]
  algebroid    rank, chart_dim, anchor = [["x1"]], structure = [[1,2,2,"1"]]
               or algebra = "builtin:aff(1)", chart_dim = 1, fields = [["-x1"],["-1"]]
  realization  kind = "action"|"pair"|"mgm", group = "aff(1)", chart_dim = 1,
               action = "affine"|"linear"|"trivial"
  slgb         algebra, beta = [[[1,2],"1"]], opens = ["U0","U1"],
               overlaps = [{pair = [0,1], points = ["a"], maps = {a = [["1","0"],["1","1"]]}}],
               triples = [{ids = [0,1,2], points = ["a"]}]   (opens are 0-based)
Exit codes: 0 all verdicts pass, 1 a verdict fails, 2 malformed input or usage.)FMT";

struct Options {
  std::string algebra, form, realization, spec, algebroid, out;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::optional<int> degree;
};

// Thrown for failures of the input rather than of the mathematics.
struct InputError {
  std::string kind, message;
};

json verdict_json(const Verdict& v) {
  return {{"pass", v.pass}, {"condition", v.condition}, {"witness", v.witness}, {"detail", v.detail}};
}

json form_json(const AltForm& f) {
  json entries = json::array();
  for (const auto& [t, c] : f.coeffs()) {
    json idx = json::array();
    for (int i : t) idx.push_back(i + 1);
    entries.push_back({{"indices", idx}, {"value", format_rational(c)}});
  }
  return {{"degree", f.degree()}, {"entries", entries}, {"text", f.to_string()}};
}

json input(const std::string& ref) { return {{"ref", ref}, {"sha256", io::input_digest(ref)}}; }

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError{"Usage", std::string("missing required flag ") + flag};
}

struct Outcome {
  json result;
  json inputs = json::object();
  bool pass = true;
};

Outcome algebra_validate(const Options& o) {
  require(o.algebra, "--algebra");
  Outcome out;
  out.inputs["algebra"] = input(o.algebra);
  const LieAlgebra g = io::load_algebra(o.algebra);
  const Verdict v = validate(g);
  out.result = {{"dim", g.dim()}, {"jacobi", verdict_json(v)}};
  out.pass = v.pass;
  return out;
}

Outcome algebra_cohomology(const Options& o) {
  require(o.algebra, "--algebra");
  Outcome out;
  out.inputs["algebra"] = input(o.algebra);
  const LieAlgebra g = io::load_algebra(o.algebra);
  const Verdict v = validate(g);
  out.result["jacobi"] = verdict_json(v);
  if (!v) {
    out.pass = false;
    return out;
  }
  const auto b = betti(g);
  long euler = 0;
  for (std::size_t k = 0; k < b.size(); ++k) euler += (k % 2 == 0 ? 1 : -1) * static_cast<long>(b[k]);
  out.result["betti"] = b;
  out.result["euler_characteristic"] = euler;
  if (o.degree) {
    const int k = *o.degree;
    if (k < 0 || k > g.dim()) throw InputError{"Usage", "--degree must lie in 0..dim"};
    json basis = json::array();
    for (const auto& z : cocycle_space(g, k)) basis.push_back(form_json(z));
    out.result["degree"] = k;
    out.result["cocycle_basis"] = basis;
  }
  return out;
}

Outcome qf_search(const Options& o) {
  require(o.algebra, "--algebra");
  Outcome out;
  out.inputs["algebra"] = input(o.algebra);
  const LieAlgebra g = io::load_algebra(o.algebra);
  const Verdict v = validate(g);
  if (!v) {
    out.result["jacobi"] = verdict_json(v);
    out.pass = false;
    return out;
  }
  const QFVerdict q = find_quasi_frobenius(g, o.seed);
  json r;
  r["status"] = std::string(to_string(q.status));
  r["certificate"] = std::string(to_string(q.certificate));
  r["certificate_poly"] = q.certificate_poly ? json(q.certificate_poly->to_string("t")) : json(nullptr);
  r["witness"] = q.witness ? form_json(*q.witness) : json(nullptr);
  r["potential"] = q.potential ? form_json(*q.potential) : json(nullptr);
  r["attempts"] = q.attempts;
  r["cocycle_space_dim"] = q.cocycle_basis.size();
  r["note"] = "a single witness is reported; no claim is made about equivalence classes";
  out.pass = q.status != QFStatus::None;
  r["verdict"] = verdict_json(out.pass ? Verdict::ok()
                                       : Verdict::fail(std::string(to_string(q.certificate)), {},
                                                       "no nondegenerate 2-cocycle exists"));
  out.result = r;
  return out;
}

Outcome qf_validate_cmd(const Options& o) {
  require(o.algebra, "--algebra");
  require(o.form, "--form");
  Outcome out;
  out.inputs["algebra"] = input(o.algebra);
  out.inputs["form"] = input(o.form);
  const LieAlgebra g = io::load_algebra(o.algebra);
  const AltForm beta = io::load_form(o.form, g.dim());
  const Verdict v = qf_validate(g, beta);
  out.result = {{"form", form_json(beta)}, {"verdict", verdict_json(v)}};
  out.pass = v.pass;
  if (v) out.result["frobenius_potential"] = [&] {
      const auto th = frobenius_potential(g, beta);
      return th ? form_json(*th) : json(nullptr);
    }();
  return out;
}

Outcome algebroid_check(const Options& o) {
  require(o.algebroid, "--algebroid");
  Outcome out;
  out.inputs["algebroid"] = input(o.algebroid);
  const PolyAlgebroid a = io::load_algebroid(o.algebroid);
  const Verdict v = algebroid_validate(a);
  out.result = {{"rank", a.rank()}, {"chart_dim", a.chart_dim()}, {"axioms", verdict_json(v)}};
  out.pass = v.pass;
  if (o.form.empty() || !v) return out;

  out.inputs["form"] = input(o.form);
  const PolyAlgebroidForm omega = io::load_algebroid_form(o.form, a.rank(), a.chart_dim());
  if (omega.degree() != 2) throw InputError{"DimensionMismatch", "algebroid form must have degree 2"};
  if (a.rank() % 2 != 0) {
    out.result["quasi_frobenius"] = {{"pass", false}, {"condition", "OddRank"}};
    out.pass = false;
    return out;
  }
  RationalSampler sampler(o.seed);
  std::vector<std::vector<Rational>> points(o.samples);
  for (auto& p : points) {
    p.resize(a.chart_dim());
    for (auto& x : p) x = sampler.next(4);
  }
  const QFAlgebroidReport rep = qf_algebroid_check(a, omega, points);
  json failures = json::array();
  for (std::size_t i : rep.sample_failures) {
    json pt = json::array();
    for (const auto& x : points[i]) pt.push_back(format_rational(x));
    failures.push_back(pt);
  }
  out.result["quasi_frobenius"] = {
      {"verdict", verdict_json(rep.verdict)},
      {"closed", rep.closed},
      {"pfaffian", rep.pfaffian.to_string()},
      {"generically_nondegenerate", rep.generically_nondegenerate},
      {"samples", o.samples},
      {"sample_failures", failures},
      {"nondegeneracy",
       rep.sample_failures.empty()
           ? "no violation found at " + std::to_string(o.samples) + " samples"
           : "Pfaffian vanishes at " + std::to_string(rep.sample_failures.size()) + " of " +
                 std::to_string(o.samples) + " samples"}};
  out.pass = rep.verdict.pass;
  return out;
}

json defect_json(double value, double tolerance, bool below) {
  return {{"value", value}, {"tolerance", tolerance}, {"pass", below ? value < tolerance : value > tolerance}};
}

Outcome groupoid_check(const Options& o) {
  require(o.realization, "--realization");
  require(o.form, "--form");
  Outcome out;
  out.inputs["realization"] = input(o.realization);
  out.inputs["form"] = input(o.form);
  const GroupoidRealization r = io::load_realization(o.realization);
  const AltForm beta = io::load_form(o.form, static_cast<int>(r.fiber_dim()));
  json res;
  res["kind"] = std::string(to_string(r.kind()));
  res["fiber_dim"] = r.fiber_dim();
  res["total_dim"] = r.total_dim();
  res["base_dim"] = r.base_dim();
  const Verdict parity = parity_check(r);
  res["parity"] = verdict_json(parity);
  const Verdict axioms = r.self_test(o.seed, o.samples);
  res["groupoid_axioms"] = verdict_json(axioms);
  out.pass = parity.pass && axioms.pass;

  std::optional<TSymplecticEvaluator> w;
  try {
    w = build_t_symplectic(r, beta);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateInput) throw;
    res["form"] = {{"pass", false}, {"condition", "beta"}, {"detail", e.what()}};
    out.result = res;
    out.pass = false;
    return out;
  }
  res["form"] = {{"pass", true}, {"beta", form_json(beta)}};

  const double li = left_invariance_defect(r, *w, o.seed, o.samples);
  std::mt19937_64 rng(o.seed);
  const Vec p = r.sample_base(rng);
  const double fc = fiber_closedness_defect(r, *w, p, o.seed, o.samples);
  res["left_invariance_defect"] = defect_json(li, 1e-10, true);
  res["fiber_closedness_defect"] = defect_json(fc, 1e-6, true);
  json unit;
  bool round_trip = false;
  try {
    const AltForm back = unit_restriction(r, *w);
    round_trip = back == beta;
    unit = {{"form", form_json(back)}, {"round_trip", round_trip}};
  } catch (const Error& e) {
    unit = {{"round_trip", false}, {"detail", e.what()}};
  }
  res["unit_restriction"] = unit;
  const double pf = min_fiber_pfaffian(r, *w, o.seed, o.samples);
  res["fiber_pfaffian_min_abs"] = defect_json(pf, 1e-8, false);
  res["nondegeneracy"] = pf > 1e-8 ? "no violation found at " + std::to_string(o.samples) + " samples"
                                   : std::string("fiber Pfaffian below threshold at a sample");
  out.pass = out.pass && li < 1e-10 && fc < 1e-6 && round_trip && pf > 1e-8;
  out.result = res;
  return out;
}

json slgb_verdict_json(const SLGBVerdict& v) {
  return {{"pass", v.pass}, {"condition", v.condition}, {"opens", v.opens}, {"point", v.point}, {"detail", v.detail}};
}

Outcome slgb_check(const Options& o) {
  require(o.spec, "--spec");
  Outcome out;
  out.inputs["spec"] = input(o.spec);
  const SLGBSpec spec = io::load_slgb(o.spec);
  json res;
  const Verdict qf = qf_validate(spec.algebra, spec.beta);
  res["fiber_form"] = verdict_json(qf);
  const SLGBVerdict tr = check_transitions(spec);
  res["transitions"] = slgb_verdict_json(tr);
  const SLGBVerdict co = tr ? check_cocycle(spec) : SLGBVerdict{false, "not run", {}, {}, "transitions failed"};
  res["cocycle"] = slgb_verdict_json(co);
  res["caveat"] = kSimplyConnectedCaveat;
  out.pass = qf.pass && tr.pass && co.pass;
  if (out.pass) {
    const QFLAB q = associated_qflab(spec);
    json rechecks = json::array();
    for (const auto& t : q.transitions)
      rechecks.push_back({{"pair", {t.i, t.j}}, {"point", t.point}, {"pass", t.pass}});
    res["qflab"] = {{"anchor_zero", q.anchor_zero},      {"fiber_dim", q.fiber_dim},
                    {"fiber_dim_even", q.fiber_dim_even}, {"fiber_form", form_json(q.fiber_form)},
                    {"transition_rechecks", rechecks}};
  }
  out.result = res;
  return out;
}

int input_error_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedInput:
    case ErrorKind::UnknownName:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::FiberAlgebraMismatch:
    case ErrorKind::DegreeOverflow:
    case ErrorKind::NotSkewSymmetric:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-Frobenius structures on Lie algebras, algebroids and groupoids", "tsg"};
  app.footer(kFormats);
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--out", o.out, "write the JSON report here instead of standard output");
    c->add_option("--seed", o.seed, "seed for every sampled quantity");
  };
  auto* algebra = app.add_subcommand("algebra", "Lie algebra checks");
  algebra->require_subcommand(1);
  auto* alg_validate = algebra->add_subcommand("validate", "check the Jacobi identity");
  auto* alg_coh = algebra->add_subcommand("cohomology", "Betti numbers and cocycle bases");
  for (auto* c : {alg_validate, alg_coh}) {
    c->add_option("--algebra", o.algebra, "algebra file or builtin:NAME");
    add_common(c);
  }
  alg_coh->add_option("--degree", o.degree, "also list a basis of Z^k");

  auto* qf = app.add_subcommand("qf", "quasi-Frobenius structures");
  qf->require_subcommand(1);
  auto* qf_search_cmd = qf->add_subcommand("search", "decide existence and find a witness");
  auto* qf_val = qf->add_subcommand("validate", "check a given 2-form");
  for (auto* c : {qf_search_cmd, qf_val}) {
    c->add_option("--algebra", o.algebra, "algebra file or builtin:NAME");
    add_common(c);
  }
  qf_val->add_option("--form", o.form, "2-form file");

  auto* algebroid = app.add_subcommand("algebroid", "polynomial Lie algebroids");
  algebroid->require_subcommand(1);
  auto* ab_check = algebroid->add_subcommand("check", "axioms, and a quasi-Frobenius check when --form is given");
  ab_check->add_option("--algebroid", o.algebroid, "algebroid file");
  ab_check->add_option("--form", o.form, "2-form file with polynomial coefficients");
  ab_check->add_option("--samples", o.samples, "rational sample points for nondegeneracy");
  add_common(ab_check);

  auto* groupoid = app.add_subcommand("groupoid", "t-symplectic groupoid realizations");
  groupoid->require_subcommand(1);
  auto* gp_check = groupoid->add_subcommand("check", "defect suite for the t-symplectic form built from beta");
  gp_check->add_option("--realization", o.realization, "realization file");
  gp_check->add_option("--form", o.form, "2-form on the fiber algebra");
  gp_check->add_option("--samples", o.samples, "samples per defect");
  add_common(gp_check);

  auto* slgb = app.add_subcommand("slgb", "symplectic Lie group bundle cocycles");
  slgb->require_subcommand(1);
  auto* sl_check = slgb->add_subcommand("check", "transition and cocycle checks");
  sl_check->add_option("--spec", o.spec, "SLGB spec file");
  add_common(sl_check);

  std::vector<const char*> argv{"tsg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 2;
  }

  std::string command;
  Outcome result;
  json error;
  int code = 0;
  try {
    if (alg_validate->parsed()) {
      command = "algebra validate";
      result = algebra_validate(o);
    } else if (alg_coh->parsed()) {
      command = "algebra cohomology";
      result = algebra_cohomology(o);
    } else if (qf_search_cmd->parsed()) {
      command = "qf search";
      result = qf_search(o);
    } else if (qf_val->parsed()) {
      command = "qf validate";
      result = qf_validate_cmd(o);
    } else if (ab_check->parsed()) {
      command = "algebroid check";
      result = algebroid_check(o);
    } else if (gp_check->parsed()) {
      command = "groupoid check";
      result = groupoid_check(o);
    } else {
      command = "slgb check";
      result = slgb_check(o);
    }
    code = result.pass ? 0 : 1;
  } catch (const InputError& e) {
    err << e.message << "\n\n" << app.help();
    return 2;
  } catch (const Error& e) {
    code = input_error_code(e.kind());
    error = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"witness", e.witness()},
             {"detail", e.detail()}};
    err << e.what() << "\n";
  }

  json report;
  report["schema"] = kSchema;
  report["tool_version"] = kVersion;
  report["command"] = command;
  json echoed = json::array();  // --out is left out so reports compare across destinations
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--out") {
      ++i;
      continue;
    }
    if (args[i].rfind("--out=", 0) == 0) continue;
    echoed.push_back(args[i]);
  }
  report["args"] = echoed;
  report["seed"] = o.seed;
  report["inputs"] = result.inputs;
  report["pass"] = code == 0;
  report["exit_code"] = code;
  if (!error.is_null())
    report["error"] = error;
  else
    report["result"] = result.result;

  const std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "cannot write " << o.out << "\n";
      return 2;
    }
    f << text;
  }
  return code;
}

}  // namespace tsg::cli
