#pragma once

#include <Eigen/Core>

#include "lagmesh/big_real.hpp"

// Eigen scalar glue so dense vectors/matrices can be instantiated on
// BigReal.  Precision-sensitive thresholds (epsilon, dummy_precision) are
// placeholders: none of the algorithms used on BigReal consult them.

namespace Eigen {

template <>
struct NumTraits<lagmesh::BigReal> {
  using Real = lagmesh::BigReal;
  using NonInteger = lagmesh::BigReal;
  using Nested = lagmesh::BigReal;
  using Literal = long;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 40,
  };

  static inline Real epsilon() { return lagmesh::with_precision(60).pow10(-50); }
  static inline Real dummy_precision() { return lagmesh::with_precision(60).pow10(-40); }
  static inline Real highest() { return lagmesh::with_precision(60).pow10(999999); }
  static inline Real lowest() { return -highest(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace lagmesh {

template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace lagmesh
