#pragma once

#include "lagmesh/big_real.hpp"
#include "lagmesh/eigensolve.hpp"
#include "lagmesh/mesh.hpp"

namespace lagmesh {

// Variational baseline in the truncated eigenbasis of a harmonic oscillator
// of frequency omega: H = p^2/2 - (lambda/2) x^2 + q x^4 expanded over the
// first `size` oscillator states.
struct HOBasisSpec {
  long size = 0;             // basis truncation M
  BigReal omega;             // basis frequency, > 0
  BigReal lambda;
  BigReal quartic_coefficient;  // q, default 1/4

  static HOBasisSpec make(long size, const BigReal& omega, const BigReal& lambda,
                          const PrecisionContext& ctx);
};

// <n|x^2|n> = (2n+1)/(2w), <n+2|x^2|n> = sqrt((n+1)(n+2))/(2w), else zero.
SymmetricMatrix<BigReal> x_squared_matrix(long size, const BigReal& omega);

// H = diag(w(n+1/2)) - ((lambda + w^2)/2) X2 + q X4, with X4 taken as the
// top-left M x M block of the square of the (M+2)-sized X2 — exact for every
// retained element because x^2 couples |n> only to |n±2>.
SymmetricMatrix<BigReal> ho_hamiltonian(const HOBasisSpec& spec);

// k lowest eigenvalues through the shared eigensolver.  Only states below
// M/2 are trusted under truncation.
Spectrum<BigReal> oracle_energies(const HOBasisSpec& spec, long k, const BigReal& tol);

}  // namespace lagmesh
