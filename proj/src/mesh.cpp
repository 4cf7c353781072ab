#include "lagmesh/mesh.hpp"

#include <ostream>

#include "lagmesh/decimal.hpp"

namespace lagmesh {

PotentialSpec PotentialSpec::quartic(const BigReal& lambda, const PrecisionContext& ctx) {
  PotentialSpec pot;
  pot.coefficients.emplace_back(2, -(lambda / 2));
  pot.coefficients.emplace_back(4, ctx.from_ratio(1, 4));
  return pot;
}

bool PotentialSpec::is_confining() const {
  long top = -1;
  int top_sign = 0;
  for (const auto& [power, c] : coefficients) {
    if (!c.is_zero() && power > top) {
      top = power;
      top_sign = c.sign();
    }
  }
  return top >= 0 && top % 2 == 0 && top_sign > 0;
}

BigReal PotentialSpec::operator()(const BigReal& x) const {
  long degree = 0;
  for (const auto& [power, c] : coefficients) degree = std::max(degree, power);
  std::vector<BigReal> dense(degree + 1);
  for (const auto& [power, c] : coefficients) dense[power] += c;
  BigReal acc = dense[degree];
  for (long k = degree - 1; k >= 0; --k) acc = acc * x + dense[k];
  return acc;
}

LagrangeMesh build_mesh(long n, const BigReal& h, const PrecisionContext& ctx) {
  if (n < 1) throw ConfigError("build_mesh: need at least one mesh point");
  if (!(h > 0)) throw ConfigError("build_mesh: scaling factor must be positive");
  LagrangeMesh mesh;
  mesh.n = n;
  mesh.h = ctx.zero() + h;
  mesh.points = hermite_roots(n, ctx);
  return mesh;
}

std::string_view to_string(KineticVariant variant) {
  return variant == KineticVariant::Exact ? "exact" : "gauss";
}

KineticVariant variant_from_string(std::string_view name) {
  if (name == "exact") return KineticVariant::Exact;
  if (name == "gauss") return KineticVariant::GaussApprox;
  throw ConfigError("unknown kinetic variant '" + std::string(name) + "' (use exact|gauss)");
}

SymmetricMatrix<BigReal> kinetic_matrix(const LagrangeMesh& mesh, KineticVariant variant) {
  const long n = mesh.n;
  const auto& u = mesh.points.roots;
  const BigReal scale = 1 / (mesh.h * mesh.h * 2);
  const BigReal half = (mesh.h * 0 + 1) / 2;
  SymmetricMatrix<BigReal> t(n);
  for (long i = 0; i < n; ++i) {
    BigReal diag = (variant == KineticVariant::Exact)
                       ? (4 * n - 1 - u[i] * u[i] * 2) / 6
                       : (2 * n + 1 - u[i] * u[i]) / 3;
    t.lower(i, i) = diag * scale;
    for (long j = 0; j < i; ++j) {
      const BigReal du = u[i] - u[j];
      BigReal off = 2 / (du * du);
      if (variant == KineticVariant::Exact) off -= half;
      if ((i - j) % 2 == 1) off = -off;
      t.lower(i, j) = off * scale;
    }
  }
  return t;
}

VectorX<BigReal> potential_on_mesh(const LagrangeMesh& mesh, const PotentialSpec& pot) {
  VectorX<BigReal> v(mesh.n);
  for (long i = 0; i < mesh.n; ++i) v[i] = pot(mesh.physical_point(i));
  return v;
}

SymmetricMatrix<BigReal> hamiltonian_matrix(const LagrangeMesh& mesh, const PotentialSpec& pot,
                                            KineticVariant variant) {
  if (!pot.is_confining()) {
    throw ConfigError("hamiltonian_matrix: potential is not confining "
                      "(highest power must be even with positive coefficient)");
  }
  SymmetricMatrix<BigReal> h = kinetic_matrix(mesh, variant);
  const VectorX<BigReal> v = potential_on_mesh(mesh, pot);
  for (long i = 0; i < mesh.n; ++i) h.lower(i, i) += v[i];
  return h;
}

void dump_matrix(std::ostream& os, const SymmetricMatrix<BigReal>& a, const LagrangeMesh& mesh,
                 KineticVariant variant, const PrecisionContext& ctx, long digits) {
  os << mesh.n << ' ' << ctx.decimal_digits() << ' ' << to_string(variant) << ' '
     << to_decimal_string(mesh.h, digits, ctx).str() << '\n';
  for (long i = 0; i < a.order(); ++i) {
    for (long j = 0; j < a.order(); ++j) {
      if (j) os << ' ';
      os << to_decimal_string(a(i, j), digits, ctx).str();
    }
    os << '\n';
  }
}

}  // namespace lagmesh
