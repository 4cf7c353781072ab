#include "lagmesh/oracle.hpp"

namespace lagmesh {

HOBasisSpec HOBasisSpec::make(long size, const BigReal& omega, const BigReal& lambda,
                              const PrecisionContext& ctx) {
  if (size < 2) throw ConfigError("HOBasisSpec: basis size must be at least 2");
  if (!(omega > 0)) throw ConfigError("HOBasisSpec: omega must be positive");
  HOBasisSpec spec;
  spec.size = size;
  spec.omega = ctx.zero() + omega;
  spec.lambda = ctx.zero() + lambda;
  spec.quartic_coefficient = ctx.from_ratio(1, 4);
  return spec;
}

SymmetricMatrix<BigReal> x_squared_matrix(long size, const BigReal& omega) {
  if (size < 1) throw ConfigError("x_squared_matrix: size must be positive");
  if (!(omega > 0)) throw ConfigError("x_squared_matrix: omega must be positive");
  const BigReal inv2w = 1 / (omega * 2);
  SymmetricMatrix<BigReal> x2(size);
  const BigReal zero = omega * 0;
  for (long i = 0; i < size; ++i)
    for (long j = 0; j <= i; ++j) x2.lower(i, j) = zero;
  for (long n = 0; n < size; ++n) {
    x2.lower(n, n) = (2 * n + 1) * inv2w;
    if (n + 2 < size) {
      x2.lower(n + 2, n) = sqrt((omega * 0 + (n + 1)) * (n + 2)) * inv2w;
    }
  }
  return x2;
}

SymmetricMatrix<BigReal> ho_hamiltonian(const HOBasisSpec& spec) {
  const long m = spec.size;
  const BigReal& w = spec.omega;
  const BigReal zero = w * 0;

  const SymmetricMatrix<BigReal> x2big = x_squared_matrix(m + 2, w);
  const BigReal coupling = -((spec.lambda + w * w) / 2);

  SymmetricMatrix<BigReal> h(m);
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j <= i; ++j) {
      // X4 entry: pentadiagonal, intermediate index k within 2 of both i, j
      BigReal x4 = zero;
      if (i - j <= 4 && (i - j) % 2 == 0) {
        const long klo = std::max(i, j) - 2 > 0 ? std::max(i, j) - 2 : 0;
        const long khi = std::min(std::min(i, j) + 2, m + 1);
        for (long k = klo; k <= khi; ++k) x4 += x2big(i, k) * x2big(k, j);
      }
      BigReal entry = spec.quartic_coefficient * x4;
      if ((i - j) % 2 == 0 && i - j <= 2) entry += coupling * x2big(i, j);
      if (i == j) entry += w * (i * 2 + 1) / 2;
      h.lower(i, j) = entry;
    }
  }
  return h;
}

Spectrum<BigReal> oracle_energies(const HOBasisSpec& spec, long k, const BigReal& tol) {
  if (k < 1) throw ConfigError("oracle_energies: need at least one state");
  if (k > spec.size / 2) {
    throw ConfigError("oracle_energies: only the lowest M/2 states are trusted; requested " +
                      std::to_string(k) + " of M = " + std::to_string(spec.size));
  }
  const SymmetricMatrix<BigReal> h = ho_hamiltonian(spec);
  EigenRequest<BigReal> req;
  req.indices.resize(k);
  for (long i = 0; i < k; ++i) req.indices[i] = i;
  req.want_vectors = false;
  req.tolerance = tol;
  return solve_selected(h, req, tol, tol);
}

}  // namespace lagmesh
