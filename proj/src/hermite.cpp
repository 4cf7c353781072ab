#include "lagmesh/hermite.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "lagmesh/parallel.hpp"

namespace lagmesh {

HermiteEvaluation hermite_eval(long n, const BigReal& x, const PrecisionContext& ctx) {
  if (n < 0) throw ConfigError("hermite_eval: negative degree");
  HermiteEvaluation out;
  out.degree = n;
  BigReal prev = ctx.from_int(1);  // H_0
  if (n == 0) {
    out.value = prev;
    out.derivative = ctx.zero();
    return out;
  }
  BigReal cur = x * 2;  // H_1
  for (long k = 1; k < n; ++k) {
    BigReal next = (x * cur) * 2 - prev * (2 * k);
    prev = cur;
    cur = next;
  }
  if (!cur.is_finite() || !prev.is_finite()) {
    throw NumericalError("hermite_eval: exponent overflow at degree " + std::to_string(n));
  }
  out.value = cur;
  out.derivative = prev * (2 * n);
  return out;
}

std::vector<double> hermite_roots_seed(long n) {
  // Jacobi matrix of the monic recurrence p_{k+1} = x p_k - (k/2) p_{k-1}
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (long k = 1; k < n; ++k) {
    const double b = std::sqrt(static_cast<double>(k) / 2.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
  std::vector<double> seeds(n);
  Eigen::Map<Eigen::VectorXd>(seeds.data(), n) = solver.eigenvalues();
  std::sort(seeds.begin(), seeds.end());
  return seeds;
}

BigReal newton_stage(long n, const BigReal& seed, long digits, int budget) {
  const PrecisionContext stage_ctx(std::max(digits, PrecisionContext::kMinDigits));
  const BigReal convergence = stage_ctx.pow10(-(digits - 5));
  BigReal x = stage_ctx.zero() + seed;
  for (int step = 0; step < budget; ++step) {
    const HermiteEvaluation he = hermite_eval(n, x, stage_ctx);
    if (he.derivative.is_zero()) {
      throw NumericalError("hermite root polish: vanishing derivative at degree " +
                           std::to_string(n));
    }
    const BigReal delta = he.value / he.derivative;
    x -= delta;
    if (abs(delta) <= convergence * max(stage_ctx.from_int(1), abs(x))) return x;
  }
  throw NumericalError("hermite root polish: Newton budget exhausted at degree " +
                       std::to_string(n) + ", stage " + std::to_string(digits) + " digits");
}

RootSet hermite_roots(long n, const PrecisionContext& ctx) {
  if (n < 1) throw ConfigError("hermite_roots: degree must be positive");
  RootSet out;
  out.degree = n;
  out.roots.assign(n, BigReal());
  if (n == 1) {
    out.roots[0] = ctx.zero();
    return out;
  }

  const std::vector<double> seeds = hermite_roots_seed(n);
  std::vector<long> stages{30};
  while (stages.back() < ctx.decimal_digits()) {
    stages.push_back(std::min(2 * stages.back(), ctx.decimal_digits()));
  }

  const long first_positive = (n % 2 == 0) ? n / 2 : n / 2 + 1;
  const long positives = n - first_positive;
  parallel_for(positives, [&](long p) {
    BigReal x = ctx.from_double(seeds[first_positive + p]);
    for (long digits : stages) x = newton_stage(n, x, digits, 8);
    out.roots[first_positive + p] = ctx.zero() + x;
  });
  if (n % 2 == 1) out.roots[n / 2] = ctx.zero();
  for (long j = first_positive; j < n; ++j) out.roots[n - 1 - j] = -out.roots[j];

  // Residual certification; failed polish must not return silently.
  const BigReal bound = ctx.pow10(-(ctx.decimal_digits() - 5));
  const BigReal one = ctx.from_int(1);
  for (long i = first_positive; i < n; ++i) {
    const HermiteEvaluation he = hermite_eval(n, out.roots[i], ctx);
    if (abs(he.value) >= abs(he.derivative) * bound * max(one, abs(out.roots[i]))) {
      throw NumericalError("hermite_roots: residual criterion failed for root " +
                           std::to_string(i) + " of H_" + std::to_string(n));
    }
  }
  return out;
}

}  // namespace lagmesh
