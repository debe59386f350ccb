#include "finspinor/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <utility>

#include "finspinor/herm.hpp"
#include "finspinor/metric.hpp"
#include "finspinor/sampling.hpp"
#include "finspinor/spintensor.hpp"
#include "finspinor/types.hpp"

namespace finspinor {
namespace {

SuiteResult finish(std::string suite, int n, double value, double bound, Relation rel) {
  const bool pass = rel == Relation::AtMost ? value <= bound : value > bound;
  return SuiteResult{std::move(suite), n, value, bound, rel, pass};
}

Complex random_scalar(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  const double re = gauss(rng);
  const double im = gauss(rng);
  return {re, im};
}

std::vector<NSpinor> random_tuple(int n, Rng& rng) {
  std::vector<NSpinor> spinors;
  spinors.reserve(n);
  for (int i = 0; i < n; ++i) spinors.push_back(random_spinor(n, rng));
  return spinors;
}

Spintensor random_spintensor(int n, const Valency& v, Rng& rng) {
  std::size_t count = 1;
  for (int i = 0; i < v.rank(); ++i) count *= static_cast<std::size_t>(n);
  std::vector<Complex> comps(count);
  for (Complex& z : comps) z = random_scalar(rng);
  return Spintensor(n, v, std::move(comps));
}

Valency random_valency(Rng& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  Valency v;
  do {
    v = Valency{bit(rng), bit(rng), bit(rng), bit(rng)};
  } while (v.rank() == 0);
  return v;
}

double max_abs(const Spintensor& s) {
  double m = 0.0;
  for (const Complex& z : s.components()) m = std::max(m, std::abs(z));
  return m;
}

void core_suites(int n, int samples, Rng& rng, std::vector<SuiteResult>& out) {
  double anti = 0.0;
  double multi = 0.0;
  double det_dev = 0.0;
  double dependent = 0.0;
  std::uniform_int_distribution<int> slot(0, n - 1);
  for (int s = 0; s < samples; ++s) {
    const std::vector<NSpinor> spinors = random_tuple(n, rng);
    const Complex p = scalar_n_product(spinors);

    const int i = std::uniform_int_distribution<int>(0, n - 2)(rng);
    const int j = std::uniform_int_distribution<int>(i + 1, n - 1)(rng);
    std::vector<NSpinor> swapped = spinors;
    std::swap(swapped[i], swapped[j]);
    anti = std::max(anti,
                    std::abs(scalar_n_product(swapped) + p) / std::max(1.0, std::abs(p)));

    const int a = slot(rng);
    const NSpinor eta = random_spinor(n, rng);
    const Complex z = random_scalar(rng);
    std::vector<NSpinor> combined = spinors;
    combined[a] = NSpinor(z * spinors[a].components() + eta.components());
    std::vector<NSpinor> with_eta = spinors;
    with_eta[a] = eta;
    const Complex rhs = z * p + scalar_n_product(with_eta);
    multi = std::max(multi, std::abs(scalar_n_product(combined) - rhs) /
                                std::max(1.0, std::abs(rhs)));

    CMatrix m(n, n);
    for (int c = 0; c < n; ++c) m.col(c) = spinors[c].components();
    const Complex det = m.determinant();
    det_dev = std::max(det_dev, std::abs(p - det) / std::max(1.0, std::abs(det)));

    std::vector<NSpinor> dep = spinors;
    CVector combo = CVector::Zero(n);
    for (int k = 0; k + 1 < n; ++k) combo += random_scalar(rng) * spinors[k].components();
    dep[n - 1] = NSpinor(combo);
    dependent = std::max(dependent, std::abs(scalar_n_product(dep)));
  }
  out.push_back(finish("core/antisymmetry", n, anti, 1e-12, Relation::AtMost));
  out.push_back(finish("core/multilinearity", n, multi, 1e-12, Relation::AtMost));
  out.push_back(finish("core/determinant-identity", n, det_dev, 1e-12, Relation::AtMost));
  out.push_back(finish("core/dependent-tuple", n, dependent, 1e-10, Relation::AtMost));

  double ident = 0.0;
  double compo = 0.0;
  const BasisChange id = BasisChange::identity(n);
  for (int s = 0; s < samples; ++s) {
    const Spintensor t = random_spintensor(n, random_valency(rng), rng);
    const Spintensor ti = transform(t, id);
    // 0 only on bitwise equality; any other outcome fails the 0 bound.
    if (!(t == ti)) {
      ident = std::max(ident, std::max(max_abs_diff(t, ti),
                                       std::numeric_limits<double>::denorm_min()));
    }
    const BasisChange b1 = random_sl(n, rng);
    const BasisChange b2 = random_sl(n, rng);
    const Spintensor chained = transform(transform(t, b1), b2);
    const Spintensor direct = transform(t, compose(b1, b2));
    compo = std::max(compo, max_abs_diff(chained, direct) /
                                std::max(1.0, max_abs(chained)));
  }
  out.push_back(finish("core/transform-identity", n, ident, 0.0, Relation::AtMost));
  out.push_back(finish("core/transform-composition", n, compo, 1e-10, Relation::AtMost));

  const HermBasis basis = standard_herm_basis(n);
  double pairing = 0.0;
  for (int alpha = 0; alpha < n * n; ++alpha) {
    const Spintensor dual = basis.dual_to_spintensor(alpha);
    for (int beta = 0; beta < n * n; ++beta) {
      const Spintensor prod = tensor_product(dual, basis.elements()[beta].to_spintensor());
      // axes: 0 upper plain, 1 upper dotted, 2 lower plain, 3 lower dotted
      const Spintensor paired = contract(contract(prod, 0, 2), 0, 1);
      const double expected = alpha == beta ? 1.0 : 0.0;
      pairing = std::max(pairing, std::abs(paired.components()[0] - expected));
    }
  }
  out.push_back(finish("core/dual-pairing", n, pairing, 1e-10, Relation::AtMost));
}

void herm_suites(int n, int samples, Rng& rng, std::vector<SuiteResult>& out) {
  const HermBasis basis = standard_herm_basis(n);
  const int nn = n * n;

  double realness = 0.0;
  double basis_image = 0.0;
  for (int s = 0; s < samples; ++s) {
    const BasisChange b = random_sl(n, rng);
    std::vector<CMatrix> conjugated(nn);
    for (int beta = 0; beta < nn; ++beta) {
      conjugated[beta] = b.c() * basis.elements()[beta].matrix() * b.c().adjoint();
    }
    for (int alpha = 0; alpha < nn; ++alpha) {
      for (int beta = 0; beta < nn; ++beta) {
        const Complex t = (basis.duals()[alpha] * conjugated[beta]).trace();
        realness = std::max(realness, std::abs(t.imag()));
      }
    }
    const FLMatrix map = epimorphism_L(b, basis);
    for (int beta = 0; beta < nn; ++beta) {
      CMatrix recombined = CMatrix::Zero(n, n);
      for (int gamma = 0; gamma < nn; ++gamma) {
        recombined += map.entries(gamma, beta) * basis.elements()[gamma].matrix();
      }
      basis_image = std::max(
          basis_image, (conjugated[beta] - recombined).cwiseAbs().maxCoeff());
    }
  }
  out.push_back(finish("herm/trace-realness", n, realness, 1e-10, Relation::AtMost));
  out.push_back(finish("herm/basis-image-residual", n, basis_image, 1e-9, Relation::AtMost));

  double homo = 0.0;
  double inv_dev = 0.0;
  const RMatrix eye = RMatrix::Identity(nn, nn);
  for (int s = 0; s < samples; ++s) {
    const BasisChange b = random_sl(n, rng);
    const BasisChange c = random_sl(n, rng);
    homo = std::max(homo, check_homomorphism(b, c, basis));
    const FLMatrix forward = epimorphism_L(b, basis);
    const FLMatrix backward = epimorphism_L(b.inverse(), basis);
    inv_dev = std::max(
        inv_dev, (backward.entries * forward.entries - eye).cwiseAbs().maxCoeff());
  }
  out.push_back(finish("herm/homomorphism", n, homo, 1e-9, Relation::AtMost));
  out.push_back(finish("herm/inverse-map", n, inv_dev, 1e-9, Relation::AtMost));

  double kernel_dev = 0.0;
  for (int k = 0; k < n; ++k) {
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    const BasisChange b = make_basis_change(w * CMatrix::Identity(n, n));
    const FLMatrix map = epimorphism_L(b, basis);
    kernel_dev = std::max(kernel_dev, (map.entries - eye).cwiseAbs().maxCoeff());
  }
  out.push_back(finish("herm/kernel-members", n, kernel_dev, 1e-9, Relation::AtMost));

  double separation = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    const BasisChange b = random_sl(n, rng);
    const CMatrix scalar_part =
        (b.c().trace() / static_cast<double>(n)) * CMatrix::Identity(n, n);
    if ((b.c() - scalar_part).cwiseAbs().maxCoeff() < 1e-9) continue;  // scalar draw
    const FLMatrix map = epimorphism_L(b, basis);
    separation = std::min(separation, (map.entries - eye).cwiseAbs().maxCoeff());
  }
  out.push_back(finish("herm/kernel-separation", n, separation, 1e-3, Relation::Above));

  if (n == 2) {
    RMatrix eta = RMatrix::Identity(4, 4);
    eta(1, 1) = eta(2, 2) = eta(3, 3) = -1.0;
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
      const FLMatrix map = epimorphism_L(random_sl(2, rng), basis);
      const RMatrix& m = map.entries;
      double dev = (m.transpose() * eta * m - eta).cwiseAbs().maxCoeff();
      dev = std::max(dev, std::abs(m.determinant() - 1.0));
      dev = std::max(dev, 1.0 - m(0, 0));  // proper orthochronous: m(0,0) >= 1
      worst = std::max(worst, dev);
    }
    out.push_back(finish("herm/lorentz-fixture", 2, worst, 1e-9, Relation::AtMost));
  }
}

void metric_suites(int n, int samples, Rng& rng, std::vector<SuiteResult>& out) {
  const HermBasis basis = standard_herm_basis(n);
  const FinslerMetric metric = metric_coefficients(basis);
  const int nn = n * n;

  double diag = 0.0;
  double homog = 0.0;
  std::uniform_real_distribution<double> scale(-2.0, 2.0);
  for (int s = 0; s < samples; ++s) {
    const HermVector x = random_hermitian(n, rng);
    const RVector comps = vector_components(x, basis);
    const double via_metric = finsler_power(comps, metric);
    const double via_det = det_invariant(x);
    diag = std::max(diag,
                    std::abs(via_metric - via_det) / std::max(1.0, std::abs(via_det)));

    const double t = scale(rng);
    const double scaled = finsler_power(t * comps, metric);
    const double expected = std::pow(t, n) * via_metric;
    homog = std::max(homog,
                     std::abs(scaled - expected) / std::max(1.0, std::abs(expected)));
  }
  out.push_back(finish("metric/diagonal-consistency", n, diag, 1e-9, Relation::AtMost));
  out.push_back(finish("metric/homogeneity", n, homog, 1e-10, Relation::AtMost));

  double symm = 0.0;
  double real_res = 0.0;
  std::uniform_int_distribution<int> pick(0, nn - 1);
  for (int s = 0; s < samples; ++s) {
    std::vector<CMatrix> mats;
    mats.reserve(n);
    for (int k = 0; k < n; ++k) mats.push_back(basis.elements()[pick(rng)].matrix());
    const Complex base = mixed_determinant(mats);
    real_res = std::max(real_res, std::abs(base.imag()));
    std::shuffle(mats.begin(), mats.end(), rng);
    symm = std::max(symm, std::abs(mixed_determinant(mats) - base));
  }
  out.push_back(finish("metric/argument-symmetry", n, symm, 1e-10, Relation::AtMost));
  out.push_back(finish("metric/coefficient-realness", n, real_res, 1e-10, Relation::AtMost));

  const HermVector plus((CMatrix(CMatrix::Identity(n, n))));
  CMatrix minus_m = CMatrix::Identity(n, n);
  minus_m(0, 0) = -1.0;
  const double fp_plus = finsler_power(vector_components(plus, basis), metric);
  const double fp_minus = finsler_power(vector_components(HermVector(minus_m), basis), metric);
  out.push_back(finish("metric/indefiniteness", n, std::min(fp_plus, -fp_minus), 0.0,
                       Relation::Above));

  if (n <= 4) {
    double inv_dev = 0.0;
    for (int s = 0; s < samples; ++s) {
      const FLMatrix map = epimorphism_L(random_sl(n, rng), basis);
      inv_dev = std::max(inv_dev, check_forminvariance(metric, map, 4, rng));
    }
    out.push_back(finish("metric/forminvariance", n, inv_dev, 1e-8, Relation::AtMost));
  }
}

}  // namespace

std::vector<SuiteResult> run_verification(int n_max, std::uint64_t seed, int samples) {
  if (n_max < 2 || n_max > 5) throw DomainError("run_verification: n_max must lie in 2..5");
  if (samples < 1) throw DomainError("run_verification: samples must be >= 1");
  std::vector<SuiteResult> results;
  Rng rng(seed);
  for (int n = 2; n <= n_max; ++n) {
    core_suites(n, samples, rng, results);
    herm_suites(n, samples, rng, results);
    metric_suites(n, samples, rng, results);
  }
  return results;
}

void print_report(const std::vector<SuiteResult>& results, std::ostream& out) {
  char line[160];
  std::snprintf(line, sizeof line, "%-28s %2s %14s  %12s  %s", "suite", "N",
                "observed", "bound", "result");
  out << line << '\n' << std::string(68, '-') << '\n';
  int failed = 0;
  for (const SuiteResult& r : results) {
    const char* cmp = r.relation == Relation::AtMost ? "<=" : "> ";
    std::snprintf(line, sizeof line, "%-28s %2d %14.6e  %2s %9.1e  %s",
                  r.suite.c_str(), r.n, r.value, cmp, r.bound,
                  r.pass ? "pass" : "FAIL");
    out << line << '\n';
    failed += r.pass ? 0 : 1;
  }
  if (failed == 0) {
    out << "all " << results.size() << " suites passed\n";
  } else {
    out << failed << " of " << results.size() << " suites FAILED\n";
  }
}

bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.pass; });
}

}  // namespace finspinor
