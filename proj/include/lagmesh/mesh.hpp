#pragma once

#include <iosfwd>
#include <string_view>
#include <utility>
#include <vector>

#include "lagmesh/big_real.hpp"
#include "lagmesh/eigen_support.hpp"
#include "lagmesh/hermite.hpp"

namespace lagmesh {

// Dense symmetric matrix storing the lower triangle only, so A(i,j) == A(j,i)
// holds structurally rather than by bookkeeping.
template <class Scalar>
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(long order) : order_(order), tri_(order * (order + 1) / 2) {}

  long order() const { return order_; }

  // Writable access to the stored triangle; requires j <= i.
  Scalar& lower(long i, long j) { return tri_[i * (i + 1) / 2 + j]; }
  const Scalar& lower(long i, long j) const { return tri_[i * (i + 1) / 2 + j]; }

  const Scalar& operator()(long i, long j) const {
    return j <= i ? tri_[i * (i + 1) / 2 + j] : tri_[j * (j + 1) / 2 + i];
  }

  MatrixX<Scalar> to_dense() const {
    MatrixX<Scalar> full(order_, order_);
    for (long i = 0; i < order_; ++i)
      for (long j = 0; j < order_; ++j) full(i, j) = (*this)(i, j);
    return full;
  }

 private:
  long order_;
  std::vector<Scalar> tri_;
};

// Polynomial potential sum_k c_k x^k.  Confining means the highest nonzero
// power is even with a positive coefficient.
struct PotentialSpec {
  std::vector<std::pair<long, BigReal>> coefficients;

  // V(x) = -(lambda/2) x^2 + (1/4) x^4
  static PotentialSpec quartic(const BigReal& lambda, const PrecisionContext& ctx);

  bool is_confining() const;
  BigReal operator()(const BigReal& x) const;  // Horner on the dense form
};

// N zeros of H_N plus a scale factor; physical points are x_i = h u_i.
struct LagrangeMesh {
  long n = 0;
  BigReal h;
  RootSet points;

  BigReal physical_point(long i) const { return h * points.roots[i]; }
};

LagrangeMesh build_mesh(long n, const BigReal& h, const PrecisionContext& ctx);

// Two standard closed forms of the second-derivative matrix over
// Lagrange-Hermite functions.  Pre-scaling elements of -d^2/du^2:
//   Exact:       T_ii = (4N - 1 - 2 u_i^2)/6,
//                T_ij = (-1)^(i-j) [2/(u_i-u_j)^2 - 1/2]
//   GaussApprox: T_ii = (2N + 1 - u_i^2)/3,
//                T_ij = (-1)^(i-j)  2/(u_i-u_j)^2
// The returned matrix is (1/(2 h^2)) T.
enum class KineticVariant { Exact, GaussApprox };

std::string_view to_string(KineticVariant variant);
KineticVariant variant_from_string(std::string_view name);

SymmetricMatrix<BigReal> kinetic_matrix(const LagrangeMesh& mesh, KineticVariant variant);

VectorX<BigReal> potential_on_mesh(const LagrangeMesh& mesh, const PotentialSpec& pot);

// H = kinetic + diag(V(x_i)); rejects non-confining potentials.
SymmetricMatrix<BigReal> hamiltonian_matrix(const LagrangeMesh& mesh, const PotentialSpec& pot,
                                            KineticVariant variant);

// Debug dump: header line "N P variant h", then one row of decimal strings
// per line.
void dump_matrix(std::ostream& os, const SymmetricMatrix<BigReal>& a, const LagrangeMesh& mesh,
                 KineticVariant variant, const PrecisionContext& ctx, long digits);

}  // namespace lagmesh
