#pragma once

#include <vector>

#include "lagmesh/big_real.hpp"

namespace lagmesh {

// H_n(x) and H'_n(x), physicists' convention:
//   H_0 = 1,  H_1 = 2x,  H_{k+1} = 2x H_k - 2k H_{k-1},  H'_n = 2n H_{n-1}.
struct HermiteEvaluation {
  long degree = 0;
  BigReal value;
  BigReal derivative;
};

HermiteEvaluation hermite_eval(long n, const BigReal& x, const PrecisionContext& ctx);

// The n zeros of H_n, strictly ascending.  Antisymmetric by construction:
// the positive half is polished and mirrored, with 0 inserted for odd n.
struct RootSet {
  long degree = 0;
  std::vector<BigReal> roots;
};

// Hardware-precision seeds: eigenvalues of the Jacobi matrix of the Hermite
// recurrence (Golub-Welsch), ascending.
std::vector<double> hermite_roots_seed(long n);

// One Newton stage at `digits` working precision.  At most `budget` steps;
// exceeding the budget is a hard error, not a warning.
BigReal newton_stage(long n, const BigReal& seed, long digits, int budget = 8);

// All roots polished to the context precision through a precision-doubling
// ladder (30, 60, ..., P digits), then certified against the residual
// criterion |H_n(r)/H'_n(r)| < 10^-(P-5) * max(1, |r|).
RootSet hermite_roots(long n, const PrecisionContext& ctx);

}  // namespace lagmesh
