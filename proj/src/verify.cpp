#include "mellinop/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "mellinop/characters.hpp"
#include "mellinop/errors.hpp"
#include "mellinop/greens.hpp"
#include "mellinop/group_algebra.hpp"
#include "mellinop/induction.hpp"
#include "mellinop/magnus.hpp"
#include "mellinop/opcalc.hpp"
#include "mellinop/weights.hpp"

namespace mellinop {
namespace {

using Clock = std::chrono::steady_clock;

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double rel_norm_err(const CMatrix& got, const CMatrix& want) {
  return spectral_norm(got - want) / std::max(spectral_norm(want), 1e-300);
}

/// Accumulates the worst value of one named check across a corpus.
class Tally {
 public:
  Tally(std::string name, double threshold) : name_(std::move(name)), threshold_(threshold) {}

  void add(double v, const std::string& where) {
    if (!std::isfinite(v)) v = std::numeric_limits<double>::infinity();
    if (where_.empty() || v > worst_) {
      worst_ = v;
      where_ = where;
    }
  }
  void fail(const std::string& why) {
    failed_ = true;
    if (error_.empty()) error_ = why;
  }
  /// Runs fn, recording its value, or a failure if it throws.
  void run(const std::string& where, const std::function<double()>& fn) {
    try {
      add(fn(), where);
    } catch (const std::exception& e) {
      fail(where + ": " + e.what());
    }
  }

  Check done() const {
    Check c;
    c.name = name_;
    c.threshold = threshold_;
    c.measured = worst_;
    c.pass = !failed_ && worst_ <= threshold_;
    c.detail = failed_ ? error_ : ("worst at " + where_);
    return c;
  }

 private:
  std::string name_;
  double threshold_;
  double worst_ = 0.0;
  std::string where_;
  bool failed_ = false;
  std::string error_;
};

Check band_check(const std::string& name, double measured, double target, double halfwidth,
                 const std::string& detail) {
  Check c;
  c.name = name;
  c.measured = measured;
  c.threshold = halfwidth;
  c.pass = std::isfinite(measured) && std::abs(measured - target) <= halfwidth;
  c.detail = detail;
  return c;
}

Check failed_check(const std::string& name, const std::string& why) {
  Check c;
  c.name = name;
  c.measured = std::numeric_limits<double>::infinity();
  c.detail = why;
  return c;
}

/// Least-squares slope of log(err) against log(h).
double loglog_slope(const std::vector<double>& h, const std::vector<double>& err) {
  const auto n = static_cast<double>(h.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double x = std::log(h[i]), y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string fmt_list(const std::vector<double>& v) {
  std::ostringstream s;
  s.precision(3);
  s << "[";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
  s << "]";
  return s.str();
}

std::string tag(const std::string& what, std::size_t i) { return what + " #" + std::to_string(i); }

/// 50 positive-definite Hermitian matrices, dims 1..8 cycling, spectra in [0.2, 4].
std::vector<HermitianOperator> pd_corpus(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<HermitianOperator> out;
  for (int k = 0; k < 50; ++k) out.emplace_back(random_pd_hermitian(rng, 1 + k % 8, 0.2, 4.0));
  return out;
}

Check timing_check(const char* name, Clock::time_point start, double limit_s, bool timing) {
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  Check c;
  c.name = name;
  c.threshold = limit_s;
  c.pass = elapsed <= limit_s;
  c.measured = timing ? elapsed : 0.0;
  c.detail = timing ? "seconds" : "wall time checked, not recorded";
  return c;
}

CriterionReport fractional_powers(std::uint64_t seed, bool timing) {
  CriterionReport r{1, "fractional powers vs spectral oracle", {}};
  const auto start = Clock::now();
  const auto corpus = pd_corpus(seed);
  Tally err("relative operator-norm error", 1e-8);
  for (double a : {0.25, 0.5, 1.0, 1.7})
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& h = corpus[i];
      err.run(tag("alpha=" + std::to_string(a).substr(0, 4) + " matrix", i), [&] {
        const CMatrix oracle = h.spectrum().apply([a](double l) { return Complex(std::pow(l, -a), 0.0); });
        return rel_norm_err(functional_power(h, a).value, oracle);
      });
    }
  r.checks.push_back(err.done());
  r.checks.push_back(timing_check("runtime", start, 10.0, timing));
  return r;
}

CriterionReport resolvents(std::uint64_t seed) {
  CriterionReport r{2, "resolvent inverse and resolvent identity", {}};
  const auto corpus = pd_corpus(seed);
  const std::vector<Complex> zs{{0, 2}, {0, -2}, {5, 0}, {-1, 1}};
  Tally inv("||(zI - H) R(z) - I||", 1e-8);
  Tally ident("||R(z) - R(w) - (w - z) R(z) R(w)||", 1e-8);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& h = corpus[i];
    const auto n = h.dim();
    std::vector<CMatrix> rs;
    try {
      for (Complex z : zs) rs.push_back(resolvent_power(h, z, 1.0).value);
    } catch (const std::exception& e) {
      inv.fail(tag("matrix", i) + ": " + e.what());
      continue;
    }
    for (std::size_t a = 0; a < zs.size(); ++a) {
      const CMatrix lhs = (zs[a] * CMatrix::Identity(n, n) - h.matrix()) * rs[a];
      inv.add(spectral_norm(lhs - CMatrix::Identity(n, n)), tag("matrix", i));
      for (std::size_t b = a + 1; b < zs.size(); ++b)
        ident.add(spectral_norm(rs[a] - rs[b] - (zs[b] - zs[a]) * rs[a] * rs[b]), tag("matrix", i));
    }
  }
  r.checks.push_back(inv.done());
  r.checks.push_back(ident.done());
  return r;
}

CriterionReport traces_and_zeta(std::uint64_t seed) {
  CriterionReport r{3, "trace, zeta determinant, Mellin determinant", {}};
  Tally tr("|Tr diag(1,2,3)^-2 - 49/36|", 1e-10);
  tr.run("diag(1,2,3)", [] {
    const HermitianOperator h(Eigen::Vector3cd(1, 2, 3).asDiagonal().toDenseMatrix());
    return std::abs(functional_trace(h, 2.0).value - 49.0 / 36.0);
  });
  r.checks.push_back(tr.done());

  const auto corpus = pd_corpus(seed);
  Tally zd("zeta determinant relative error", 1e-6);
  Tally md("Mellin determinant relative error", 1e-8);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& h = corpus[i];
    zd.run(tag("matrix", i), [&] {
      const double prod = h.spectrum().eigenvalues.prod();
      return std::abs(zeta_determinant(h).value - prod) / prod;
    });
    for (double a : {0.5, 1.0}) {
      md.run(tag("matrix", i), [&] {
        const double trace = h.matrix().trace().real();
        const Complex want = std::pow(trace, -a * static_cast<double>(h.dim()));
        return std::abs(functional_determinant_mellin(h, a).value - want) / std::abs(want);
      });
    }
  }
  r.checks.push_back(zd.done());
  r.checks.push_back(md.done());
  return r;
}

CriterionReport functional_logs(std::uint64_t seed) {
  CriterionReport r{4, "functional log vs spectral log", {}};
  const auto corpus = pd_corpus(seed);
  Tally err("||functional_log + log H||", 1e-6);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& h = corpus[i];
    err.run(tag("matrix", i), [&] {
      const CMatrix oracle = h.spectrum().apply([](double l) { return Complex(-std::log(l), 0.0); });
      return spectral_norm(functional_log(h).value - oracle);
    });
  }
  r.checks.push_back(err.done());
  return r;
}

CriterionReport greens_functions() {
  CriterionReport r{5, "Laplacian kernels", {}};
  const std::vector<double> radii{0.1, 0.5, 1.0, 2.0, 10.0};
  Tally k3("n=3 relative error vs 1/r", 1e-6);
  Tally k4("n=4 relative error vs 1/(pi r^2)", 1e-6);
  for (double rr : radii) {
    const std::string where = "r=" + std::to_string(rr);
    k3.run(where, [&] { return std::abs(elementary_kernel(KernelQuery::radial(3, rr)).value - 1.0 / rr) * rr; });
    k4.run(where, [&] {
      const double want = 1.0 / (std::numbers::pi * rr * rr);
      return std::abs(elementary_kernel(KernelQuery::radial(4, rr)).value - want) / want;
    });
  }
  Tally d2("n=2 difference error vs -2 ln(r1/r2)", 1e-4);
  Tally d1("n=1 difference error vs -2 pi (r1 - r2)", 1e-6);
  for (std::size_t i = 0; i < radii.size(); ++i)
    for (std::size_t j = 0; j < radii.size(); ++j) {
      if (i == j) continue;
      const double r1 = radii[i], r2 = radii[j];
      const std::string where = "r1=" + std::to_string(r1) + " r2=" + std::to_string(r2);
      d2.run(where, [&] { return std::abs(regularized_kernel_difference(2, r1, r2).value + 2.0 * std::log(r1 / r2)); });
      d1.run(where, [&] {
        return std::abs(regularized_kernel_difference(1, r1, r2).value + 2.0 * std::numbers::pi * (r1 - r2));
      });
    }
  r.checks.push_back(k3.done());
  r.checks.push_back(k4.done());
  r.checks.push_back(d2.done());
  r.checks.push_back(d1.done());

  try {
    std::vector<double> hs, res;
    // n = 3 is no use here: 1/r is exactly harmonic under the central stencil.
    // A three-point grid keeps the single interior point fixed at r = 1.5.
    for (double h : {0.1, 0.05, 0.025, 0.0125}) {
      const std::vector<double> grid{1.5 - h, 1.5, 1.5 + h};
      hs.push_back(h);
      res.push_back(kernel_harmonicity_check(4, grid));
    }
    r.checks.push_back(band_check("harmonicity residual slope (n=4)", loglog_slope(hs, res), 2.0, 0.3,
                                  "residuals " + fmt_list(res)));
  } catch (const std::exception& e) {
    r.checks.push_back(failed_check("harmonicity residual slope (n=4)", e.what()));
  }
  return r;
}

/// Classical RK4 for U' = -i H(t) U, used only as a fine-step reference.
CMatrix rk4_reference(const TimeDependentGenerator& gen, double final_time, int steps) {
  const double h = final_time / steps;
  const Complex mi(0.0, -1.0);
  CMatrix u = CMatrix::Identity(gen.dim, gen.dim);
  for (int k = 0; k < steps; ++k) {
    const double t = k * h;
    const CMatrix k1 = mi * gen(t) * u;
    const CMatrix k2 = mi * gen(t + h / 2) * (u + h / 2 * k1);
    const CMatrix k3 = mi * gen(t + h / 2) * (u + h / 2 * k2);
    const CMatrix k4 = mi * gen(t + h) * (u + h * k3);
    u += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return u;
}

double unitarity_defect(const EvolutionResult& ev) {
  double worst = 0.0;
  for (const auto& u : ev.unitaries)
    worst = std::max(worst, max_abs(u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())));
  return worst;
}

CriterionReport magnus_checks(std::uint64_t seed) {
  CriterionReport r{6, "Magnus integrator", {}};
  Tally unit("unitarity defect", 1e-10);

  Tally exact("constant-H error vs exp(-iHt)", 1e-12);
  {
    Rng rng(seed);
    const HermitianOperator h(random_hermitian(rng, 3));
    const auto gen = TimeDependentGenerator::constant(h.matrix());
    for (int order : {2, 4})
      exact.run("order " + std::to_string(order), [&] {
        const auto ev = evolve(gen, 1.3, 7, order);
        unit.add(unitarity_defect(ev), "constant H");
        double worst = 0.0;
        for (std::size_t k = 0; k < ev.times.size(); ++k) {
          const double t = ev.times[k];
          const CMatrix want = h.spectrum().apply([t](double l) { return std::exp(Complex(0.0, -l * t)); });
          worst = std::max(worst, max_abs(ev.unitaries[k] - want));
        }
        return worst;
      });
  }
  r.checks.push_back(exact.done());

  const auto field = TimeDependentGenerator::rotating_field(1.0, 1.0);
  const double final_time = 2.0;
  const std::vector<int> step_counts{16, 32, 64, 128};
  try {
    const CMatrix ref = rk4_reference(field, final_time, 40000);
    for (int order : {2, 4}) {
      std::vector<double> hs, errs;
      for (int n : step_counts) {
        const auto ev = evolve(field, final_time, n, order);
        unit.add(unitarity_defect(ev), "rotating field order " + std::to_string(order));
        hs.push_back(final_time / n);
        errs.push_back(spectral_norm(ev.unitaries.back() - ref));
      }
      r.checks.push_back(band_check("global error slope, order " + std::to_string(order), loglog_slope(hs, errs),
                                    order, 0.3, "errors " + fmt_list(errs)));
    }
  } catch (const std::exception& e) {
    r.checks.push_back(failed_check("global error slopes", e.what()));
  }

  Tally iso("conjugation isospectrality", 1e-10);
  try {
    CMatrix f0(2, 2);
    f0 << 1, 0, 0, -1;
    const Eigen::VectorXd spec0 = eig_oracle(f0).eigenvalues;
    std::vector<double> hs, res;
    for (int n : {20, 40, 80, 160}) {
      const auto ev = evolve(field, final_time, n, 4);
      unit.add(unitarity_defect(ev), "Heisenberg run");
      const auto fs = heisenberg_evolve(f0, ev);
      for (const auto& f : fs) iso.add((eig_oracle(f, 1e-10).eigenvalues - spec0).cwiseAbs().maxCoeff(), "steps " + std::to_string(n));
      hs.push_back(ev.step);
      res.push_back(heisenberg_residual(fs, ev));
    }
    r.checks.push_back(band_check("Heisenberg residual slope", loglog_slope(hs, res), 2.0, 0.3,
                                  "residuals " + fmt_list(res)));
  } catch (const std::exception& e) {
    r.checks.push_back(failed_check("Heisenberg residual slope", e.what()));
  }
  r.checks.push_back(unit.done());
  r.checks.push_back(iso.done());
  return r;
}

std::vector<std::pair<std::string, GroupPtr>> algebra_groups() {
  return {{"Z6", builtin_group("Z6")}, {"D4", builtin_group("D4")}, {"S3", builtin_group("S3")}};
}

CriterionReport convolution_algebra(std::uint64_t seed) {
  CriterionReport r{7, "convolution algebra", {}};
  Rng rng(seed);
  bool submult = true;
  double worst_ratio = 0.0;
  std::string submult_where;
  Tally assoc("associativity", 1e-12);
  Tally anti("involution anti-homomorphism", 1e-12);
  Tally integ("integration *-homomorphism", 1e-12);
  Tally cstar("C*-identity under the regular representation", 1e-10);
  for (const auto& [name, g] : algebra_groups()) {
    for (int k = 0; k < 200; ++k) {
      const auto f1 = random_group_function(rng, g, 2);
      const auto f2 = random_group_function(rng, g, 2);
      const auto f3 = random_group_function(rng, g, 2);
      const std::string where = name + " pair " + std::to_string(k);
      const auto f12 = convolve(f1, f2);
      const double lhs = l1_norm(f12), rhs = l1_norm(f1) * l1_norm(f2);
      if (!(lhs <= rhs)) {
        submult = false;
        submult_where = where;
      }
      worst_ratio = std::max(worst_ratio, lhs / rhs);

      double e = 0.0;
      const auto left = convolve(f12, f3), right = convolve(f1, convolve(f2, f3));
      for (int x = 0; x < g->order(); ++x) e = std::max(e, max_abs(left(x) - right(x)));
      assoc.add(e, where);

      e = 0.0;
      const auto a = involution(f12), b = convolve(involution(f2), involution(f1));
      for (int x = 0; x < g->order(); ++x) e = std::max(e, max_abs(a(x) - b(x)));
      anti.add(e, where);

      integ.add(std::max(max_abs(integrate(f12) - integrate(f1) * integrate(f2)),
                         max_abs(integrate(involution(f1)) - integrate(f1).adjoint())),
                where);

      const double n1 = regular_rep_cstar_norm(f1);
      cstar.add(std::abs(regular_rep_cstar_norm(convolve(involution(f1), f1)) - n1 * n1), where);
    }
  }
  Check sm;
  sm.name = "submultiplicativity ||f1*f2|| <= ||f1|| ||f2||";
  sm.pass = submult;
  sm.measured = worst_ratio;
  sm.threshold = 1.0;
  sm.detail = submult ? "exact inequality held on all pairs" : "violated at " + submult_where;
  r.checks.push_back(sm);
  r.checks.push_back(assoc.done());
  r.checks.push_back(anti.done());
  r.checks.push_back(integ.done());
  r.checks.push_back(cstar.done());
  return r;
}

double homomorphism_defect(const InducedRep& ir) {
  const auto& g = *ir.group;
  const CMatrix id = CMatrix::Identity(ir.total_dim, ir.total_dim);
  double worst = max_abs(ir.matrices[g.identity()] - id);
  for (int a = 0; a < g.order(); ++a) {
    worst = std::max(worst, max_abs(ir.matrices[a].adjoint() * ir.matrices[a] - id));
    for (int b = 0; b < g.order(); ++b)
      worst = std::max(worst, max_abs(ir.matrices[a] * ir.matrices[b] - ir.matrices[g.multiply(a, b)]));
  }
  return worst;
}

/// Element of maximal order (first in element order).
int max_order_element(const FiniteGroup& g) {
  int best = 0;
  for (int x = 1; x < g.order(); ++x)
    if (element_order(g, x) > element_order(g, best)) best = x;
  return best;
}

CriterionReport induction_checks(std::uint64_t seed) {
  CriterionReport r{8, "induced representations", {}};
  const std::vector<std::string> names{"Z6", "D4", "S3", "S4"};

  Tally dims("dim(Ind) - [G:P] dim(rho)", 0.0);
  Tally homo("induced rep unitary homomorphism defect", 1e-12);
  Tally frob("Frobenius reciprocity integer defect", 1e-8);
  for (const auto& name : names) {
    const GroupPtr g = builtin_group(name);
    const CharacterTable table = character_table(*g);
    std::vector<std::vector<int>> seen;
    for (int gen = 0; gen < g->order(); ++gen) {
      const auto sub = generated_subgroup(*g, {gen});
      if (std::find(seen.begin(), seen.end(), sub) != seen.end()) continue;
      seen.push_back(sub);
      const int m = static_cast<int>(sub.size());
      for (int j = 0; j < m; ++j) {
        const std::string where = name + " <" + g->label(gen) + "> j=" + std::to_string(j);
        frob.run(where, [&] {
          const auto sr = SubgroupRep::cyclic_character(g, gen, j);
          const auto ir = induce(sr);
          dims.add(std::abs(static_cast<double>(ir.total_dim - (g->order() / m) * sr.dim())), where);
          homo.add(homomorphism_defect(ir), where);
          double worst = 0.0;
          for (const auto& p : frobenius_check(sr, ir, table))
            worst = std::max({worst, std::abs(p.induced_side - static_cast<double>(p.multiplicity)),
                              std::abs(p.restricted_side - static_cast<double>(p.multiplicity))});
          return worst;
        });
      }
    }
    std::vector<int> all(g->order());
    for (int x = 0; x < g->order(); ++x) all[x] = x;
    frob.run(name + " P=G trivial", [&] {
      const auto sr = SubgroupRep::trivial(g, all);
      const auto ir = induce(sr);
      dims.add(std::abs(static_cast<double>(ir.total_dim - 1)), name + " P=G");
      double worst = 0.0;
      for (const auto& p : frobenius_check(sr, ir, table))
        worst = std::max(worst, std::abs(p.induced_side - static_cast<double>(p.multiplicity)));
      return worst;
    });
  }
  r.checks.push_back(dims.done());
  r.checks.push_back(homo.done());

  Tally s3("S3/A3 induced character vs (2, -1, 0)", 1e-12);
  s3.run("S3", [] {
    const GroupPtr g = builtin_group("S3");
    int rot = -1;
    for (int x = 0; x < g->order() && rot < 0; ++x)
      if (element_order(*g, x) == 3) rot = x;
    const auto ir = induce(SubgroupRep::cyclic_character(g, rot, 1));
    if (ir.total_dim != 2) throw NumericalError("induced dimension is not 2");
    double worst = 0.0;
    for (int x = 0; x < g->order(); ++x) {
      const int ord = element_order(*g, x);
      const double want = ord == 1 ? 2.0 : (ord == 3 ? -1.0 : 0.0);
      worst = std::max(worst, std::abs(ir.matrices[x].trace() - want));
    }
    return worst;
  });
  r.checks.push_back(s3.done());
  r.checks.push_back(frob.done());

  Rng rng(seed);
  Tally star("mellin_rep *-homomorphism", 1e-12);
  Tally leak("isotypic leakage", 1e-10);
  for (const auto& name : names) {
    const GroupPtr g = builtin_group(name);
    const CharacterTable table = character_table(*g);
    const int gen = max_order_element(*g);
    const auto twisted = induce(SubgroupRep::cyclic_character(g, gen, 1));
    const auto plain = induce(SubgroupRep::trivial(g, generated_subgroup(*g, {gen})));
    for (int k = 0; k < 20; ++k) {
      const auto f1 = random_group_function(rng, g, 2);
      const auto f2 = random_group_function(rng, g, 2);
      star.run(name + " pair " + std::to_string(k), [&] {
        const CMatrix m1 = mellin_rep(f1, twisted), m2 = mellin_rep(f2, twisted);
        return std::max(max_abs(mellin_rep(convolve(f1, f2), twisted) - m1 * m2),
                        max_abs(mellin_rep(involution(f1), twisted) - m1.adjoint()));
      });
    }
    for (int k = 0; k < 50; ++k) {
      const auto f = random_group_function(rng, g, 2);
      leak.run(name + " function " + std::to_string(k), [&] {
        return std::max(invariant_subspace_check(plain, f, table), invariant_subspace_check(twisted, f, table));
      });
    }
  }
  r.checks.push_back(star.done());
  r.checks.push_back(leak.done());
  return r;
}

CriterionReport weight_checks() {
  CriterionReport r{9, "weights and highest weight", {}};
  Tally w("spin-1 weight error vs {-1, 0, 1}", 1e-12);
  Tally hw("||J+ v|| for the highest-weight vector", 1e-12);
  const auto s = spin_matrices(1.0);
  w.run("J_z", [&] {
    const auto wd = weight_decompose({s.jz});
    if (wd.spaces.size() != 3) throw NumericalError("expected three weight spaces");
    double worst = 0.0;
    const double want[] = {-1.0, 0.0, 1.0};
    for (std::size_t i = 0; i < 3; ++i) {
      if (wd.spaces[i].basis.cols() != 1) throw NumericalError("weight space is not one-dimensional");
      worst = std::max(worst, std::abs(wd.spaces[i].weight[0] - want[i]));
    }
    return worst;
  });
  hw.run("J_z, J_+", [&] {
    const auto hv = highest_weight_vectors(weight_decompose({s.jz}), {s.jplus});
    if (hv.size() != 1) throw NumericalError("expected one highest-weight vector");
    if (!hv[0].maximal || std::abs(hv[0].weight[0] - 1.0) > 1e-12)
      throw NumericalError("highest-weight vector has the wrong weight");
    return (s.jplus * hv[0].vector).norm();
  });
  r.checks.push_back(w.done());
  r.checks.push_back(hw.done());
  return r;
}

}  // namespace

bool CriterionReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* CriterionReport::worst() const {
  const Check* out = nullptr;
  double ratio = -1.0;
  for (const auto& c : checks) {
    if (!c.pass) return &c;
    const double q = c.threshold > 0 ? c.measured / c.threshold : 0.0;
    if (q > ratio) {
      ratio = q;
      out = &c;
    }
  }
  return out;
}

bool SuiteReport::pass() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionReport& c) { return c.pass(); });
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json crit = nlohmann::json::array();
  for (const auto& c : criteria) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& k : c.checks)
      checks.push_back({{"name", k.name},
                        {"pass", k.pass},
                        {"measured", std::isfinite(k.measured) ? nlohmann::json(k.measured) : nlohmann::json(nullptr)},
                        {"threshold", k.threshold},
                        {"detail", k.detail}});
    crit.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass()}, {"checks", checks}});
  }
  std::ostringstream seed_hex;
  seed_hex << "0x" << std::hex << std::uppercase << seed;
  return {{"suite", suite}, {"seed", seed_hex.str()}, {"pass", pass()}, {"criteria", crit}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"opcalc", "greens", "magnus", "algebra", "induction", "all"};
  return names;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "opcalc") return {1, 2, 3, 4};
  if (suite == "greens") return {5};
  if (suite == "magnus") return {6};
  if (suite == "algebra") return {7};
  if (suite == "induction") return {8, 9};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9};
  throw InputError("verify: unknown suite '" + suite + "'");
}

CriterionReport run_criterion(int id, std::uint64_t seed, bool timing) {
  switch (id) {
    case 1: return fractional_powers(seed, timing);
    case 2: return resolvents(seed);
    case 3: return traces_and_zeta(seed);
    case 4: return functional_logs(seed);
    case 5: return greens_functions();
    case 6: return magnus_checks(seed);
    case 7: return convolution_algebra(seed);
    case 8: return induction_checks(seed);
    case 9: return weight_checks();
    default: throw InputError("verify: no criterion " + std::to_string(id));
  }
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, bool timing) {
  SuiteReport rep;
  rep.suite = suite;
  rep.seed = seed;
  for (int id : suite_criteria(suite)) rep.criteria.push_back(run_criterion(id, seed, timing));
  return rep;
}

}  // namespace mellinop
