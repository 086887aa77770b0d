#include "mellinop/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "mellinop/characters.hpp"
#include "mellinop/errors.hpp"
#include "mellinop/greens.hpp"
#include "mellinop/group_algebra.hpp"
#include "mellinop/induction.hpp"
#include "mellinop/io.hpp"
#include "mellinop/magnus.hpp"
#include "mellinop/opcalc.hpp"
#include "mellinop/verify.hpp"
#include "mellinop/weights.hpp"

namespace mellinop::cli {
namespace {

using io::json;

struct Args {
  std::string op;
  std::string matrix, matrix2, alpha = "1", z, seed = "0xC0FFEE", out, csv;
  std::string group, function, function2, family, label, subgroup, fiber, generator, input, psi1, psi2;
  std::string suite;
  int dim = 3, order = 4, steps = 0, n = 0, character = -1, element = -1;
  double r = NAN, r2 = NAN, t = NAN, tol = NAN;
  bool timing = false;
};

const std::map<std::string, std::vector<std::string>>& op_table() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"power", {"power", "regularized", "semigroup", "eig", "exp"}},
      {"resolvent", {}},
      {"trace", {"trace", "zeta"}},
      {"det", {}},
      {"zetadet", {}},
      {"log", {}},
      {"greens", {"kernel", "difference", "propagator", "harmonicity", "strip", "transform"}},
      {"magnus", {"evolve", "step", "heisenberg", "residual", "effective", "bernoulli", "ad"}},
      {"group", {"info", "integrate", "convolve", "involution", "norm", "regular-rep", "cstar-norm", "family-norm",
                 "project", "characters"}},
      {"induce", {"induce", "character", "frobenius", "inner-product", "mellin-rep", "leakage", "weights",
                  "highest-weight"}},
      {"verify", {}},
  };
  return table;
}

/// Inline JSON when the argument looks like JSON, else a file path.
json load_arg(const std::string& s, const char* what) {
  if (s.empty()) throw InputError(std::string("missing --") + what);
  const auto first = s.find_first_not_of(" \t\n");
  if (first != std::string::npos && (s[first] == '{' || s[first] == '[' || s[first] == '"')) {
    try {
      return json::parse(s);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("--") + what + ": malformed inline JSON: " + e.what());
    }
  }
  return io::load_json(s);
}

std::filesystem::path base_of(const std::string& s) {
  if (s.empty() || s.front() == '{' || s.front() == '[') return {};
  return std::filesystem::path(s).parent_path();
}

HermitianOperator load_operator(const Args& a) { return HermitianOperator(io::matrix_from_json(load_arg(a.matrix, "matrix"))); }

QuadratureScheme scheme_of(const Args& a) {
  QuadratureScheme q;
  if (!std::isnan(a.tol)) q.rel_tol = a.tol;
  q.validate();
  return q;
}

json op_result(const OperatorResult& r) {
  return {{"value", io::to_json(r.value)}, {"error_estimate", r.error_estimate}, {"levels", r.levels},
          {"evaluations", r.evaluations}};
}

json scalar_result(const ScalarResult& r) {
  return {{"value", io::to_json(r.value)}, {"error_estimate", r.error_estimate}, {"levels", r.levels},
          {"evaluations", r.evaluations}};
}

double require_t(const Args& a) {
  if (std::isnan(a.t)) throw InputError("missing --t");
  return a.t;
}

json cmd_power(const Args& a) {
  const auto h = load_operator(a);
  const std::string op = a.op.empty() ? "power" : a.op;
  if (op == "power") return op_result(functional_power(h, io::parse_complex(a.alpha), scheme_of(a)));
  if (op == "regularized") return op_result(regularized_power(h, io::parse_complex(a.alpha), scheme_of(a)));
  if (op == "semigroup") return {{"value", io::to_json(semigroup(h, require_t(a)))}};
  if (op == "exp") return {{"value", io::to_json(enveloping_exponential(h, require_t(a)))}};
  const auto& s = h.spectrum();
  return {{"eigenvalues", std::vector<double>(s.eigenvalues.data(), s.eigenvalues.data() + s.eigenvalues.size())},
          {"eigenvectors", io::to_json(s.eigenvectors)}};
}

json cmd_resolvent(const Args& a) {
  if (a.z.empty()) throw InputError("missing --z");
  ResolventOptions opts;
  opts.quadrature = scheme_of(a);
  return op_result(resolvent_power(load_operator(a), io::parse_complex(a.z), io::parse_complex(a.alpha), opts));
}

json cmd_trace(const Args& a) {
  const auto h = load_operator(a);
  if (a.op == "zeta") return scalar_result(spectral_zeta(h, io::parse_complex(a.alpha), scheme_of(a)));
  return scalar_result(functional_trace(h, io::parse_complex(a.alpha), scheme_of(a)));
}

json cmd_det(const Args& a) {
  return scalar_result(functional_determinant_mellin(load_operator(a), io::parse_complex(a.alpha), scheme_of(a)));
}

DifferenceOptions diff_of(const Args& a) {
  DifferenceOptions d;
  d.quadrature = scheme_of(a);
  return d;
}

json cmd_zetadet(const Args& a) {
  const auto z = zeta_determinant(load_operator(a), diff_of(a));
  return {{"value", z.value}, {"zeta_prime_zero", z.zeta_prime_zero}, {"step_gap", z.step_gap}};
}

json cmd_log(const Args& a) { return op_result(functional_log(load_operator(a), diff_of(a))); }

double require_r(double r, const char* flag) {
  if (std::isnan(r)) throw InputError(std::string("missing --") + flag);
  return r;
}

json kernel_json(const KernelResult& k) {
  return {{"value", io::to_json(k.value)}, {"error_estimate", k.error_estimate}, {"method", k.method}};
}

json cmd_greens(const Args& a) {
  const std::string op = a.op.empty() ? (std::isnan(a.r2) ? "kernel" : "difference") : a.op;
  const Complex alpha = io::parse_complex(a.alpha);
  if (op == "kernel") return kernel_json(elementary_kernel(KernelQuery::radial(a.dim, require_r(a.r, "r"), alpha), scheme_of(a)));
  if (op == "difference") {
    if (alpha != Complex(1.0, 0.0)) throw InputError("greens difference: only alpha = 1 is supported");
    return kernel_json(regularized_kernel_difference(a.dim, require_r(a.r, "r"), require_r(a.r2, "r2"), scheme_of(a)));
  }
  if (op == "propagator") {
    const Complex v = equivariant_propagator(KernelQuery::radial(a.dim, require_r(a.r, "r"), alpha), require_t(a));
    return {{"value", io::to_json(v)}};
  }
  if (op == "harmonicity") {
    const double lo = require_r(a.r, "r"), hi = require_r(a.r2, "r2");
    const int steps = a.steps > 0 ? a.steps : 20;
    if (!(hi > lo)) throw InputError("greens harmonicity: need --r < --r2");
    std::vector<double> grid;
    for (int k = 0; k <= steps; ++k) grid.push_back(lo + (hi - lo) * k / steps);
    return {{"residual", kernel_harmonicity_check(a.dim, grid, scheme_of(a))}, {"grid_points", grid.size()}};
  }
  const auto sampler = kernel_sampler(a.dim, std::isnan(a.r) ? 1.0 : a.r);
  const Strip s = fundamental_strip(sampler);
  if (op == "strip") {
    auto edge = [](double x) { return std::isfinite(x) ? json(x) : json(x > 0 ? "inf" : "-inf"); };
    return {{"lower", edge(s.lower)}, {"upper", edge(s.upper)}};
  }
  MellinParams p;
  p.alpha = alpha;
  p.strip = s;
  p.quadrature = scheme_of(a);
  const auto m = mellin_transform(sampler, p);
  return {{"value", io::to_json(m.value(0, 0))}, {"error_estimate", m.error_estimate}, {"levels", m.levels},
          {"evaluations", m.evaluations}, {"t_lo", m.t_lo}, {"t_hi", m.t_hi}};
}

void write_csv(const std::string& path, const std::vector<double>& times, const std::vector<CMatrix>& mats) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f.precision(17);
  f << "t";
  const Eigen::Index n = mats.empty() ? 0 : mats.front().rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) f << ",re_" << i << k << ",im_" << i << k;
  f << "\n";
  for (std::size_t s = 0; s < times.size(); ++s) {
    if (mats[s].size() == 0) continue;
    f << times[s];
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index k = 0; k < n; ++k) f << "," << mats[s](i, k).real() << "," << mats[s](i, k).imag();
    f << "\n";
  }
}

json cmd_magnus(const Args& a) {
  const std::string op = a.op.empty() ? "evolve" : a.op;
  if (op == "bernoulli") {
    if (a.n < 0) throw InputError("--n must be nonnegative");
    return {{"values", bernoulli_numbers(a.n)}};
  }
  if (op == "ad") {
    const CMatrix x = io::matrix_from_json(load_arg(a.matrix, "matrix"));
    const CMatrix y = io::matrix_from_json(load_arg(a.matrix2, "matrix2"));
    return {{"value", io::to_json(ad_power(x, y, a.n))}};
  }
  const auto gen = io::generator_from_json(load_arg(a.generator, "generator"));
  if (a.order != 2 && a.order != 4) throw InputError("--order must be 2 or 4");
  if (op == "step") {
    const double h = require_r(a.r, "r");
    return {{"omega", io::to_json(magnus_step(gen, std::isnan(a.t) ? 0.0 : a.t, h, a.order))}};
  }

  if (a.steps < 1) throw InputError("--steps must be positive");
  const auto ev = evolve(gen, require_t(a), a.steps, a.order);
  double defect = 0.0;
  for (const auto& u : ev.unitaries)
    defect = std::max(defect, (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff());
  json out{{"order", ev.order}, {"step", ev.step}, {"steps", a.steps}, {"unitarity_defect", defect}};
  if (op == "evolve") {
    out["final"] = io::to_json(ev.unitaries.back());
    if (!a.csv.empty()) write_csv(a.csv, ev.times, ev.unitaries);
    return out;
  }
  if (op == "effective") {
    const auto hs = effective_hamiltonians(ev);
    if (!a.csv.empty()) write_csv(a.csv, ev.times, hs);
    out["midpoint"] = io::to_json(hs[hs.size() / 2]);
    return out;
  }
  const CMatrix f0 = io::matrix_from_json(load_arg(a.matrix, "matrix"));
  const auto fs = heisenberg_evolve(f0, ev);
  if (!a.csv.empty()) write_csv(a.csv, ev.times, fs);
  if (op == "heisenberg") {
    out["final"] = io::to_json(fs.back());
    return out;
  }
  out["residual"] = heisenberg_residual(fs, ev);
  return out;
}

GroupPtr group_arg(const Args& a) {
  if (a.group.empty()) throw InputError("missing --group");
  const auto first = a.group.front();
  return io::group_from_json(first == '{' ? json::parse(a.group) : json(a.group));
}

json cmd_group(const Args& a) {
  const std::string op = a.op.empty() ? "info" : a.op;
  if (op == "family-norm" || op == "project") {
    const auto fam = io::family_from_json(load_arg(a.family, "family"), base_of(a.family));
    if (op == "family-norm") return {{"value", family_norm(fam)}, {"labels", fam.labels()}};
    return io::to_json(project_localization(fam, a.label));
  }
  if (op == "info" || op == "characters") {
    const GroupPtr g = group_arg(a);
    if (op == "info") {
      json classes = json::array();
      for (const auto& c : conjugacy_classes(*g)) classes.push_back(c);
      json out = io::to_json(*g);
      out["classes"] = classes;
      out["inverses"] = g->inverses();
      return out;
    }
    return io::to_json(character_table(*g), *g);
  }
  GroupPtr g;
  auto load_fn = [&](const std::string& s, const char* what) {
    const json j = load_arg(s, what);
    if (!a.group.empty() && !j.contains("group")) {
      if (!g) g = group_arg(a);
      return io::group_function_from_json(j, g);
    }
    return io::group_function_from_json(j, base_of(s));
  };
  const auto f = load_fn(a.function, "function");
  if (op == "integrate") return {{"value", io::to_json(integrate(f))}};
  if (op == "involution") return io::to_json(involution(f));
  if (op == "norm") return {{"value", l1_norm(f)}};
  if (op == "regular-rep") return {{"value", io::to_json(left_regular_representation(f))}};
  if (op == "cstar-norm") return {{"value", regular_rep_cstar_norm(f)}};
  return io::to_json(convolve(f, load_fn(a.function2, "function2")));
}

SubgroupRep subgroup_rep_of(const Args& a, const GroupPtr& g) {
  std::vector<int> sub;
  if (a.subgroup.empty()) {
    sub = {g->identity()};
  } else {
    sub = io::parse_index_list(a.subgroup);
    for (int x : sub)
      if (x < 0 || x >= g->order()) throw InputError("--subgroup: element index out of range");
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  }
  if (!is_subgroup(*g, sub)) throw InputError("--subgroup: not closed under product and inverse");
  if (!a.fiber.empty()) return io::subgroup_rep_from_json(load_arg(a.fiber, "fiber"), g, sub);
  if (a.character >= 0) {
    for (int x : sub)
      if (element_order(*g, x) == static_cast<int>(sub.size())) return SubgroupRep::cyclic_character(g, x, a.character);
    throw InputError("--character needs a cyclic subgroup");
  }
  return SubgroupRep::trivial(g, sub);
}

json class_fn_json(const ClassFunction& c) {
  json out = json::array();
  for (const auto& v : c) out.push_back(io::to_json(v));
  return out;
}

CVector vector_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected a vector of [re, im] entries");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = io::complex_from_json(j[i]);
  return v;
}

json vector_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(io::to_json(v(i)));
  return out;
}

json cmd_induce(const Args& a) {
  const std::string op = a.op.empty() ? "induce" : a.op;
  if (op == "weights" || op == "highest-weight") {
    const json in = load_arg(a.input, "input");
    if (!in.contains("cartan")) throw InputError("weights input: missing \"cartan\"");
    const auto wd = weight_decompose(io::matrices_from_json(in.at("cartan")), std::isnan(a.tol) ? 1e-10 : a.tol);
    if (op == "weights") {
      json spaces = json::array();
      for (const auto& s : wd.spaces) spaces.push_back({{"weight", s.weight}, {"basis", io::to_json(s.basis)}, {"dim", s.basis.cols()}});
      return {{"spaces", spaces}};
    }
    const auto raising = in.contains("raising") ? io::matrices_from_json(in.at("raising")) : std::vector<CMatrix>{};
    json vecs = json::array();
    for (const auto& h : highest_weight_vectors(wd, raising))
      vecs.push_back({{"vector", vector_json(h.vector)}, {"weight", h.weight}, {"maximal", h.maximal}});
    return {{"vectors", vecs}, {"found", !vecs.empty()}};
  }

  const GroupPtr g = group_arg(a);
  const SubgroupRep sr = subgroup_rep_of(a, g);
  const InducedRep ir = induce(sr);
  json out{{"total_dim", ir.total_dim}, {"fiber_dim", ir.fiber_dim}, {"index", ir.index()},
           {"transversal", ir.transversal}, {"subgroup", ir.subgroup}};
  if (op == "induce") {
    json mats = json::array();
    for (const auto& m : ir.matrices) mats.push_back(io::to_json(m));
    out["matrices"] = mats;
    out["normalization"] = ir.normalization;
    return out;
  }
  const CharacterTable table = character_table(*g);
  if (op == "character") {
    const auto chi = rep_character(ir, table);
    out["character"] = class_fn_json(chi);
    out["norm_squared"] = io::to_json(class_inner_product(table, chi, chi));
    return out;
  }
  if (op == "frobenius") {
    json pairs = json::array();
    for (const auto& p : frobenius_check(sr, ir, table))
      pairs.push_back({{"induced", io::to_json(p.induced_side)}, {"restricted", io::to_json(p.restricted_side)},
                       {"multiplicity", p.multiplicity}});
    out["irreps"] = pairs;
    return out;
  }
  if (op == "inner-product") {
    const CVector v1 = vector_from_json(load_arg(a.psi1, "psi1")), v2 = vector_from_json(load_arg(a.psi2, "psi2"));
    if (v1.size() != ir.total_dim || v2.size() != ir.total_dim)
      throw InputError("inner-product: sections must have total_dim entries");
    const auto s1 = unflatten(v1, ir.fiber_dim), s2 = unflatten(v2, ir.fiber_dim);
    out["value"] = io::to_json(coset_inner_product(s1, s2));
    if (a.element >= 0) out["transformed"] = io::to_json(coset_inner_product(act(ir, a.element, s1), act(ir, a.element, s2)));
    return out;
  }
  const json fj = load_arg(a.function, "function");
  const auto f = fj.contains("group") ? io::group_function_from_json(fj, base_of(a.function))
                                      : io::group_function_from_json(fj, g);
  if (op == "mellin-rep") {
    out["value"] = io::to_json(mellin_rep(f, ir));
    return out;
  }
  out["leakage"] = invariant_subspace_check(ir, f, table);
  out["projectors"] = isotypic_projectors(ir, table).size();
  return out;
}

std::uint64_t parse_seed(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used, 16);
    if (used != s.size()) throw InputError("");
    return v;
  } catch (const std::exception&) {
    throw InputError("--seed: expected a hex integer, got '" + s + "'");
  }
}

struct VerifyFailure : NumericalError {
  using NumericalError::NumericalError;
};

json cmd_verify(const Args& a, json& report_extra) {
  if (a.suite.empty()) throw InputError("verify: empty suite name");
  const auto rep = run_suite(a.suite, parse_seed(a.seed), a.timing);
  report_extra = rep.to_json();
  if (!rep.pass()) throw VerifyFailure("verify: one or more checks failed");
  return report_extra;
}

void add_op(CLI::App* sub, Args& a) {
  const auto& ops = op_table().at(sub->get_name());
  if (!ops.empty()) sub->add_option("--op", a.op, "operation")->check(CLI::IsMember(ops));
}

void add_common(CLI::App* sub, Args& a) {
  sub->add_option("--out", a.out, "write the report here");
  sub->add_option("--tol", a.tol, "quadrature relative tolerance");
}

void emit(const json& j, const Args& a, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (a.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(a.out);
  if (!f) throw InputError("cannot write " + a.out);
  f << text;
}

}  // namespace

const std::vector<Route>& routes() {
  static const std::vector<Route> r{
      {"functional_power", "power", "power"},
      {"regularized_power", "power", "regularized"},
      {"regularize_subtract_identity", "power", "regularized"},
      {"semigroup", "power", "semigroup"},
      {"eig_oracle", "power", "eig"},
      {"enveloping_exponential", "power", "exp"},
      {"resolvent_power", "resolvent", ""},
      {"functional_trace", "trace", "trace"},
      {"spectral_zeta", "trace", "zeta"},
      {"functional_determinant_mellin", "det", ""},
      {"zeta_determinant", "zetadet", ""},
      {"functional_log", "log", ""},
      {"elementary_kernel", "greens", "kernel"},
      {"regularized_kernel_difference", "greens", "difference"},
      {"continue_in_alpha", "greens", "difference"},
      {"equivariant_propagator", "greens", "propagator"},
      {"kernel_harmonicity_check", "greens", "harmonicity"},
      {"radial_laplacian_residual", "greens", "harmonicity"},
      {"fundamental_strip", "greens", "strip"},
      {"mellin_transform", "greens", "transform"},
      {"evolve", "magnus", "evolve"},
      {"magnus_step", "magnus", "step"},
      {"heisenberg_evolve", "magnus", "heisenberg"},
      {"heisenberg_residual", "magnus", "residual"},
      {"effective_hamiltonians", "magnus", "effective"},
      {"bernoulli_numbers", "magnus", "bernoulli"},
      {"ad_power", "magnus", "ad"},
      {"conjugacy_classes", "group", "info"},
      {"integrate", "group", "integrate"},
      {"convolve", "group", "convolve"},
      {"involution", "group", "involution"},
      {"l1_norm", "group", "norm"},
      {"left_regular_representation", "group", "regular-rep"},
      {"regular_rep_cstar_norm", "group", "cstar-norm"},
      {"family_norm", "group", "family-norm"},
      {"project_localization", "group", "project"},
      {"character_table", "group", "characters"},
      {"induce", "induce", "induce"},
      {"rep_character", "induce", "character"},
      {"frobenius_check", "induce", "frobenius"},
      {"coset_inner_product", "induce", "inner-product"},
      {"mellin_rep", "induce", "mellin-rep"},
      {"invariant_subspace_check", "induce", "leakage"},
      {"isotypic_projectors", "induce", "leakage"},
      {"weight_decompose", "induce", "weights"},
      {"highest_weight_vectors", "induce", "highest-weight"},
      {"run_suite", "verify", ""},
  };
  return r;
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"power", "resolvent", "trace",  "det",    "zetadet", "log",
                                              "greens", "magnus",   "group", "induce", "verify"};
  return names;
}

std::vector<std::string> ops_of(const std::string& subcommand) {
  const auto it = op_table().find(subcommand);
  if (it == op_table().end()) throw InputError("unknown subcommand '" + subcommand + "'");
  return it->second;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Operator calculus through Mellin transforms over groups", "mellinop"};
  app.require_subcommand(1, 1);
  std::map<std::string, CLI::App*> subs;
  static const std::map<std::string, std::string> blurbs = {
      {"power", "fractional powers H^-alpha, semigroup, spectrum, exp"},
      {"resolvent", "resolvent (zI - H)^-1 along a bisector ray"},
      {"trace", "Tr H^-alpha and the spectral zeta function"},
      {"det", "determinant via the Gamma-normalized Mellin route"},
      {"zetadet", "zeta-regularized determinant"},
      {"log", "functional logarithm from the zeta derivative"},
      {"greens", "Laplacian kernels, differences, propagator, harmonicity"},
      {"magnus", "Magnus evolution and Heisenberg residuals"},
      {"group", "finite-group convolution algebra and characters"},
      {"induce", "induced representations, Frobenius, weights"},
      {"verify", "run the acceptance checks and emit a report"},
  };
  for (const auto& name : subcommands()) {
    const auto it = blurbs.find(name);
    subs[name] = app.add_subcommand(name, it == blurbs.end() ? std::string() : it->second);
  }

  for (const char* name : {"power", "resolvent", "trace", "det", "zetadet", "log"}) {
    auto* s = subs[name];
    s->add_option("--matrix", a.matrix, "Hermitian matrix JSON (path or inline)")->required();
    add_common(s, a);
    add_op(s, a);
  }
  for (const char* name : {"power", "resolvent", "trace", "det"}) subs[name]->add_option("--alpha", a.alpha, "exponent re[,im]");
  subs["power"]->add_option("--t", a.t, "semigroup / exponential time");
  subs["resolvent"]->add_option("--z", a.z, "spectral parameter re,im")->required();

  auto* greens = subs["greens"];
  greens->add_option("--dim", a.dim, "space dimension n")->check(CLI::PositiveNumber);
  greens->add_option("--alpha", a.alpha, "exponent re[,im]");
  greens->add_option("--r", a.r, "radius");
  greens->add_option("--r2", a.r2, "second radius");
  greens->add_option("--t", a.t, "propagator time");
  greens->add_option("--steps", a.steps, "harmonicity grid intervals");
  add_common(greens, a);
  add_op(greens, a);

  auto* magnus = subs["magnus"];
  magnus->add_option("--generator", a.generator, "generator preset JSON (path or inline)");
  magnus->add_option("--matrix", a.matrix, "observable F(0), or A for --op ad");
  magnus->add_option("--matrix2", a.matrix2, "B for --op ad");
  magnus->add_option("--order", a.order, "2 or 4");
  magnus->add_option("--steps", a.steps, "number of steps");
  magnus->add_option("--t", a.t, "final time (start time for --op step)");
  magnus->add_option("--r", a.r, "step size for --op step");
  magnus->add_option("--n", a.n, "index for --op bernoulli / ad");
  magnus->add_option("--csv", a.csv, "time-series CSV output");
  add_common(magnus, a);
  add_op(magnus, a);

  auto* group = subs["group"];
  group->add_option("--group", a.group, "group JSON path, inline JSON or built-in name");
  group->add_option("--function", a.function, "group function JSON");
  group->add_option("--function2", a.function2, "second group function JSON");
  group->add_option("--family", a.family, "localization family JSON");
  group->add_option("--label", a.label, "component label");
  add_common(group, a);
  add_op(group, a);

  auto* ind = subs["induce"];
  ind->add_option("--group", a.group, "group JSON path, inline JSON or built-in name");
  ind->add_option("--subgroup", a.subgroup, "element indices i,j,...");
  ind->add_option("--fiber", a.fiber, "fiber rep JSON");
  ind->add_option("--character", a.character, "j: character g^k -> exp(2 pi i j k/m) of a cyclic subgroup");
  ind->add_option("--function", a.function, "group function JSON");
  ind->add_option("--psi1", a.psi1, "section vector JSON");
  ind->add_option("--psi2", a.psi2, "section vector JSON");
  ind->add_option("--element", a.element, "group element for the transformed inner product");
  ind->add_option("--input", a.input, "weights input JSON {cartan, raising}");
  add_common(ind, a);
  add_op(ind, a);

  auto* ver = subs["verify"];
  ver->add_option("--suite", a.suite, "opcalc, greens, magnus, algebra, induction or all")->required();
  ver->add_option("--seed", a.seed, "RNG seed (hex)");
  ver->add_flag("--timing", a.timing, "record wall times in the report");
  ver->add_option("--out", a.out, "write the report here");

  auto error_json = [&](const char* category, const std::string& message) {
    err << json{{"error", {{"category", category}, {"message", message}}}}.dump() << "\n";
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    error_json("input", e.what());
    return 1;
  }

  std::string name;
  std::vector<std::string> echo;
  for (int i = 1; i < argc; ++i) echo.emplace_back(argv[i]);
  for (const auto& [n, s] : subs)
    if (s->parsed()) name = n;

  json report{{"command", {{"name", name}, {"args", echo}}}};
  json verify_report;
  try {
    json result;
    if (name == "power") result = cmd_power(a);
    else if (name == "resolvent") result = cmd_resolvent(a);
    else if (name == "trace") result = cmd_trace(a);
    else if (name == "det") result = cmd_det(a);
    else if (name == "zetadet") result = cmd_zetadet(a);
    else if (name == "log") result = cmd_log(a);
    else if (name == "greens") result = cmd_greens(a);
    else if (name == "magnus") result = cmd_magnus(a);
    else if (name == "group") result = cmd_group(a);
    else if (name == "induce") result = cmd_induce(a);
    else result = cmd_verify(a, verify_report);
    report["result"] = result;
    emit(report, a, out);
    return 0;
  } catch (const VerifyFailure& e) {
    report["result"] = verify_report;
    try {
      emit(report, a, out);
    } catch (const std::exception&) {
    }
    error_json("numerical", e.what());
    return 2;
  } catch (const InputError& e) {
    error_json("input", e.what());
    return 1;
  } catch (const json::exception& e) {
    error_json("input", e.what());
    return 1;
  } catch (const NumericalError& e) {
    error_json("numerical", e.what());
    return 2;
  } catch (const std::exception& e) {
    error_json("numerical", e.what());
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"mellinop"};
  for (const auto& s : args) argv.push_back(s.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mellinop::cli
