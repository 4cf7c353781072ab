#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lagmesh/eigen_support.hpp"
#include "lagmesh/errors.hpp"
#include "lagmesh/mesh.hpp"
#include "lagmesh/parallel.hpp"

namespace lagmesh {

template <class Scalar>
struct Tridiagonal {
  std::vector<Scalar> diag;
  std::vector<Scalar> offdiag;  // size order()-1

  long order() const { return static_cast<long>(diag.size()); }
};

template <class Scalar>
struct EigenRequest {
  std::vector<long> indices;  // ascending, 0 = ground state
  bool want_vectors = false;
  Scalar tolerance;
};

template <class Scalar>
struct SpectrumEntry {
  long index = 0;
  Scalar value;
  std::optional<VectorX<Scalar>> vector;
};

// Ascending eigenvalues (ties broken by index).  Vectors, when present, are
// unit-norm with the first decisive component made positive.
template <class Scalar>
struct Spectrum {
  std::vector<SpectrumEntry<Scalar>> entries;
};

namespace detail {

inline double scalar_cast(double /*model*/, long v) { return static_cast<double>(v); }
inline BigReal scalar_cast(const BigReal& model, long v) { return model * 0 + v; }

inline double scalar_eps(double /*model*/) { return std::numeric_limits<double>::epsilon(); }
inline BigReal scalar_eps(const BigReal& model) {
  return ldexp2(model * 0 + 1, -static_cast<long>(model.precision() - 1));
}

// acc += a*b with a single rounding.
inline void acc_fma(double& acc, double a, double b) { acc = std::fma(a, b, acc); }
inline void acc_fma(BigReal& acc, const BigReal& a, const BigReal& b) {
  mpfr_fma(acc.raw(), a.raw(), b.raw(), acc.raw(), MPFR_RNDN);
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <class Scalar>
Scalar matrix_scale(const Tridiagonal<Scalar>& t) {
  using std::abs;
  using std::max;
  Scalar scale = scalar_cast(t.diag[0], 1);
  for (const Scalar& d : t.diag) scale = max(scale, abs(d));
  for (const Scalar& e : t.offdiag) scale = max(scale, abs(e));
  return scale;
}

}  // namespace detail

template <class Scalar>
Scalar max_abs_entry(const SymmetricMatrix<Scalar>& a) {
  using std::abs;
  using std::max;
  Scalar m = abs(a(0, 0));
  for (long i = 0; i < a.order(); ++i)
    for (long j = 0; j <= i; ++j) m = max(m, abs(a(i, j)));
  return m;
}

// Householder reduction to tridiagonal form.  The reflectors are kept when
// eigenvectors will be needed; reflector k acts on rows k+1..n-1.
template <class Scalar>
struct HouseholderFactor {
  Tridiagonal<Scalar> tridiagonal;
  std::vector<VectorX<Scalar>> reflectors;
  std::vector<Scalar> betas;

  // v = Q w maps tridiagonal-basis vectors back to the original basis.
  VectorX<Scalar> apply_q(VectorX<Scalar> w) const {
    for (long k = static_cast<long>(reflectors.size()) - 1; k >= 0; --k) reflect(k, w);
    return w;
  }

  VectorX<Scalar> apply_q_transpose(VectorX<Scalar> w) const {
    for (long k = 0; k < static_cast<long>(reflectors.size()); ++k) reflect(k, w);
    return w;
  }

 private:
  void reflect(long k, VectorX<Scalar>& w) const {
    const VectorX<Scalar>& v = reflectors[k];
    const long m = static_cast<long>(v.size());
    if (m == 0) return;
    const long base = tridiagonal.order() - m;
    Scalar s = detail::scalar_cast(betas[k], 0);
    for (long i = 0; i < m; ++i) detail::acc_fma(s, v[i], w[base + i]);
    s = s * betas[k];
    const Scalar neg_s = -s;
    for (long i = 0; i < m; ++i) detail::acc_fma(w[base + i], neg_s, v[i]);
  }
};

template <class Scalar>
HouseholderFactor<Scalar> householder_factor(const SymmetricMatrix<Scalar>& a,
                                             bool keep_reflectors = true) {
  using std::sqrt;
  const long n = a.order();
  SymmetricMatrix<Scalar> work = a;
  HouseholderFactor<Scalar> f;
  f.tridiagonal.diag.resize(n);
  if (n > 1) f.tridiagonal.offdiag.resize(n - 1);
  if (keep_reflectors && n > 2) {
    f.reflectors.resize(n - 2);
    f.betas.resize(n - 2);
  }

  const Scalar zero = detail::scalar_cast(a(0, 0), 0);
  for (long k = 0; k + 2 < n; ++k) {
    const long m = n - k - 1;
    Scalar nrm2 = zero;
    for (long i = k + 1; i < n; ++i) detail::acc_fma(nrm2, work(i, k), work(i, k));
    const Scalar nrm = sqrt(nrm2);

    VectorX<Scalar> v(m);
    Scalar alpha = zero;
    Scalar beta = zero;
    if (!(nrm == zero)) {
      const Scalar head = work(k + 1, k);
      alpha = (head < zero) ? nrm : -nrm;
      v[0] = head - alpha;
      for (long i = 1; i < m; ++i) v[i] = work(k + 1 + i, k);
      Scalar vtv = zero;
      for (long i = 0; i < m; ++i) detail::acc_fma(vtv, v[i], v[i]);
      beta = detail::scalar_cast(zero, 2) / vtv;

      VectorX<Scalar> p(m);
      parallel_for(m, [&](long i) {
        Scalar s = zero;
        const long gi = k + 1 + i;
        for (long j = 0; j < m; ++j) detail::acc_fma(s, work(gi, k + 1 + j), v[j]);
        p[i] = s * beta;
      });
      Scalar ptv = zero;
      for (long i = 0; i < m; ++i) detail::acc_fma(ptv, p[i], v[i]);
      const Scalar kappa = beta * ptv / 2;
      VectorX<Scalar> w(m);
      for (long i = 0; i < m; ++i) {
        w[i] = p[i];
        detail::acc_fma(w[i], -kappa, v[i]);
      }
      parallel_for(m, [&](long i) {
        const long gi = k + 1 + i;
        const Scalar neg_v = -v[i];
        const Scalar neg_w = -w[i];
        for (long j = 0; j <= i; ++j) {
          Scalar& entry = work.lower(gi, k + 1 + j);
          detail::acc_fma(entry, neg_v, w[j]);
          detail::acc_fma(entry, neg_w, v[j]);
        }
      });
    }
    f.tridiagonal.offdiag[k] = alpha;
    if (keep_reflectors) {
      f.reflectors[k] = std::move(v);
      f.betas[k] = beta;
    }
  }

  for (long i = 0; i < n; ++i) f.tridiagonal.diag[i] = work(i, i);
  if (n > 1) f.tridiagonal.offdiag[n - 2] = work(n - 1, n - 2);
  return f;
}

template <class Scalar>
Tridiagonal<Scalar> householder_tridiagonalize(const SymmetricMatrix<Scalar>& a) {
  return householder_factor(a, /*keep_reflectors=*/false).tridiagonal;
}

// Number of eigenvalues strictly below mu, by the signs of the LDL^T pivots
// of (T - mu I).  Exact zero pivots are replaced by a tiny negative value;
// mpfr's exponent range makes ordinary underflow a non-issue.
template <class Scalar>
long sturm_count(const Tridiagonal<Scalar>& t, const Scalar& mu) {
  const long n = t.order();
  if (n == 0) return 0;
  const Scalar eps = detail::scalar_eps(mu);
  const Scalar guard = -(eps * eps * detail::matrix_scale(t));
  const Scalar zero = detail::scalar_cast(mu, 0);

  long count = 0;
  Scalar q = t.diag[0] - mu;
  if (q == zero) q = guard;
  if (q < zero) ++count;
  for (long i = 1; i < n; ++i) {
    q = t.diag[i] - mu - t.offdiag[i - 1] * t.offdiag[i - 1] / q;
    if (q == zero) q = guard;
    if (q < zero) ++count;
  }
  return count;
}

// [lowest, highest] Gershgorin disc bounds of the tridiagonal.
template <class Scalar>
std::pair<Scalar, Scalar> gershgorin_bounds(const Tridiagonal<Scalar>& t) {
  using std::abs;
  using std::max;
  using std::min;
  const long n = t.order();
  const Scalar zero = detail::scalar_cast(t.diag[0], 0);
  Scalar lo = t.diag[0];
  Scalar hi = t.diag[0];
  for (long i = 0; i < n; ++i) {
    Scalar radius = zero;
    if (i > 0) radius += abs(t.offdiag[i - 1]);
    if (i + 1 < n) radius += abs(t.offdiag[i]);
    lo = min(lo, t.diag[i] - radius);
    hi = max(hi, t.diag[i] + radius);
  }
  return {lo, hi};
}

// k-th smallest eigenvalue (0-based) by Sturm bisection from the Gershgorin
// bracket down to width < tol; returns the bracket midpoint.
template <class Scalar>
Scalar bisect_eigenvalue(const Tridiagonal<Scalar>& t, long k, const Scalar& tol) {
  const long n = t.order();
  if (k < 0 || k >= n) throw ConfigError("bisect_eigenvalue: index out of range");
  const Scalar zero = detail::scalar_cast(tol, 0);
  if (!(tol > zero)) throw ConfigError("bisect_eigenvalue: tolerance must be positive");

  auto [lo, hi] = gershgorin_bounds(t);
  lo -= tol;
  hi += tol;
  if (sturm_count(t, lo) != 0 || sturm_count(t, hi) != n) {
    throw NumericalError("bisect_eigenvalue: inconsistent Sturm counts at Gershgorin bounds");
  }
  while (hi - lo > tol) {
    const Scalar mid = (lo + hi) / 2;
    if (!(lo < mid) || !(mid < hi)) break;  // bracket no longer splittable
    if (sturm_count(t, mid) <= k) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

namespace detail {

// LU factorization of (T - shift I) with partial pivoting; pivoting fills a
// second superdiagonal.
template <class Scalar>
struct ShiftedTridiagLU {
  long n = 0;
  std::vector<Scalar> low;      // elimination multipliers
  std::vector<Scalar> d0, d1, d2;  // diagonals of U
  std::vector<char> swapped;
};

template <class Scalar>
ShiftedTridiagLU<Scalar> factor_shifted(const Tridiagonal<Scalar>& t, const Scalar& shift) {
  using std::abs;
  const long n = t.order();
  const Scalar zero = scalar_cast(shift, 0);
  const Scalar eps = scalar_eps(shift);
  const Scalar guard = eps * eps * matrix_scale(t);

  ShiftedTridiagLU<Scalar> lu;
  lu.n = n;
  lu.low.assign(n > 0 ? n - 1 : 0, zero);
  lu.d0.assign(n, zero);
  lu.d1.assign(n > 1 ? n - 1 : 0, zero);
  lu.d2.assign(n > 2 ? n - 2 : 0, zero);
  lu.swapped.assign(n > 0 ? n - 1 : 0, 0);

  for (long i = 0; i < n; ++i) lu.d0[i] = t.diag[i] - shift;
  for (long i = 0; i + 1 < n; ++i) lu.d1[i] = t.offdiag[i];

  for (long i = 0; i + 1 < n; ++i) {
    const Scalar sub = t.offdiag[i];
    if (!(abs(lu.d0[i]) < abs(sub))) {
      Scalar pivot = lu.d0[i];
      if (pivot == zero) pivot = lu.d0[i] = guard;
      const Scalar l = sub / pivot;
      lu.d0[i + 1] -= l * lu.d1[i];
      lu.low[i] = l;
    } else {
      // swap rows i and i+1
      const Scalar a1 = lu.d1[i];
      const Scalar b1 = lu.d0[i + 1];
      const Scalar b2 = (i + 2 < n) ? lu.d1[i + 1] : zero;
      const Scalar l = lu.d0[i] / sub;
      lu.d0[i] = sub;
      lu.d1[i] = b1;
      if (i + 2 < n) lu.d2[i] = b2;
      lu.d0[i + 1] = a1 - l * b1;
      if (i + 2 < n) lu.d1[i + 1] = -(l * b2);
      lu.low[i] = l;
      lu.swapped[i] = 1;
    }
  }
  if (lu.d0[n - 1] == zero) lu.d0[n - 1] = guard;
  return lu;
}

template <class Scalar>
VectorX<Scalar> solve_shifted(const ShiftedTridiagLU<Scalar>& lu, VectorX<Scalar> rhs) {
  const long n = lu.n;
  for (long i = 0; i + 1 < n; ++i) {
    if (lu.swapped[i]) std::swap(rhs[i], rhs[i + 1]);
    const Scalar neg_l = -lu.low[i];
    acc_fma(rhs[i + 1], neg_l, rhs[i]);
  }
  for (long i = n - 1; i >= 0; --i) {
    Scalar s = rhs[i];
    if (i + 1 < n) acc_fma(s, -lu.d1[i], rhs[i + 1]);
    if (i + 2 < n && static_cast<long>(lu.d2.size()) > i) acc_fma(s, -lu.d2[i], rhs[i + 2]);
    rhs[i] = s / lu.d0[i];
  }
  return rhs;
}

template <class Scalar>
Scalar vector_norm(const VectorX<Scalar>& v) {
  using std::sqrt;
  Scalar s = scalar_cast(v[0], 0);
  for (long i = 0; i < v.size(); ++i) acc_fma(s, v[i], v[i]);
  return sqrt(s);
}

template <class Scalar>
Scalar dot(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  Scalar s = scalar_cast(a[0], 0);
  for (long i = 0; i < a.size(); ++i) acc_fma(s, a[i], b[i]);
  return s;
}

// Inverse iteration on the tridiagonal itself; priors are in the same basis.
template <class Scalar>
VectorX<Scalar> tridiag_inverse_iteration(const Tridiagonal<Scalar>& t, const Scalar& shift,
                                          const std::vector<VectorX<Scalar>>& priors,
                                          const Scalar& tol, int budget = 4) {
  const long n = t.order();
  const Scalar zero = scalar_cast(shift, 0);
  const auto lu = factor_shifted(t, shift);
  const Scalar bound = tol * matrix_scale(t) * n;

  VectorX<Scalar> b(n);
  for (long i = 0; i < n; ++i) {
    const auto raw = splitmix64(static_cast<std::uint64_t>(i) + 1);
    b[i] = scalar_cast(shift, static_cast<long>(raw >> 40) + 1);
  }

  for (int iter = 0; iter < budget; ++iter) {
    VectorX<Scalar> x = solve_shifted(lu, std::move(b));
    const Scalar raw_norm = vector_norm(x);
    if (raw_norm == zero) throw NumericalError("inverse iteration: zero solve result");
    for (long i = 0; i < n; ++i) x[i] /= raw_norm;
    // normalize first, then orthogonalize twice: the solve amplifies the
    // rhs enormously near a degenerate shift and one pass leaves rounding
    // residue parallel to the priors
    for (int pass = 0; pass < 2 && !priors.empty(); ++pass) {
      for (const auto& prior : priors) {
        const Scalar overlap = dot(prior, x);
        const Scalar neg = -overlap;
        for (long i = 0; i < n; ++i) acc_fma(x[i], neg, prior[i]);
      }
    }
    const Scalar nrm = vector_norm(x);
    if (nrm == zero) {
      throw NumericalError("inverse iteration: residual vector vanished after orthogonalization");
    }
    for (long i = 0; i < n; ++i) x[i] /= nrm;

    // residual (T - shift) x
    Scalar res2 = zero;
    for (long i = 0; i < n; ++i) {
      Scalar r = (t.diag[i] - shift) * x[i];
      if (i > 0) acc_fma(r, t.offdiag[i - 1], x[i - 1]);
      if (i + 1 < n) acc_fma(r, t.offdiag[i], x[i + 1]);
      acc_fma(res2, r, r);
    }
    using std::sqrt;
    if (sqrt(res2) <= bound) return x;
    b = std::move(x);
  }
  throw NumericalError("inverse iteration: budget exhausted without meeting the residual bound");
}

// Makes the first component larger than `threshold` in magnitude positive.
template <class Scalar>
void fix_sign(VectorX<Scalar>& v, const Scalar& threshold) {
  using std::abs;
  for (long i = 0; i < v.size(); ++i) {
    if (abs(v[i]) > threshold) {
      if (v[i] < scalar_cast(threshold, 0)) {
        for (long j = 0; j < v.size(); ++j) v[j] = -v[j];
      }
      return;
    }
  }
}

}  // namespace detail

// Eigenvector of A for the (already computed) eigenvalue E, orthogonalized
// against prior_vectors to keep quasi-degenerate pairs apart.  Unit norm,
// sign fixed, residual verified against tol * max|A| * N.
template <class Scalar>
VectorX<Scalar> inverse_iteration(const SymmetricMatrix<Scalar>& a, const Scalar& e,
                                  const std::vector<VectorX<Scalar>>& prior_vectors,
                                  const Scalar& tol) {
  const long n = a.order();
  const auto factor = householder_factor(a, /*keep_reflectors=*/true);
  std::vector<VectorX<Scalar>> priors_t;
  priors_t.reserve(prior_vectors.size());
  for (const auto& p : prior_vectors) priors_t.push_back(factor.apply_q_transpose(p));

  VectorX<Scalar> w = detail::tridiag_inverse_iteration(factor.tridiagonal, e, priors_t, tol);
  VectorX<Scalar> v = factor.apply_q(std::move(w));
  detail::fix_sign(v, tol);

  Scalar res2 = detail::scalar_cast(e, 0);
  for (long i = 0; i < n; ++i) {
    Scalar r = -(e * v[i]);
    for (long j = 0; j < n; ++j) detail::acc_fma(r, a(i, j), v[j]);
    detail::acc_fma(res2, r, r);
  }
  using std::sqrt;
  if (!(sqrt(res2) <= tol * max_abs_entry(a) * n)) {
    throw NumericalError("inverse_iteration: residual bound violated");
  }
  return v;
}

// Full spectrum with vectors by cyclic Jacobi sweeps; the small-order
// cross-check oracle, deliberately capped.
template <class Scalar>
Spectrum<Scalar> jacobi_eigen_full(const SymmetricMatrix<Scalar>& a, const Scalar& tol) {
  using std::abs;
  using std::sqrt;
  constexpr long kMaxOrder = 64;
  constexpr int kMaxSweeps = 64;
  const long n = a.order();
  if (n > kMaxOrder) throw ConfigError("jacobi_eigen_full: order capped at 64");
  const Scalar zero = detail::scalar_cast(tol, 0);
  const Scalar one = detail::scalar_cast(tol, 1);
  if (!(tol > zero)) throw ConfigError("jacobi_eigen_full: tolerance must be positive");

  MatrixX<Scalar> m = a.to_dense();
  MatrixX<Scalar> vecs(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) vecs(i, j) = (i == j) ? one : zero;

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    Scalar off2 = zero;
    for (long p = 0; p < n; ++p)
      for (long q = p + 1; q < n; ++q) detail::acc_fma(off2, m(p, q), m(p, q));
    if (sqrt(off2 * 2) <= tol) break;

    for (long p = 0; p < n; ++p) {
      for (long q = p + 1; q < n; ++q) {
        if (m(p, q) == zero) continue;
        const Scalar theta = (m(q, q) - m(p, p)) / (m(p, q) * 2);
        Scalar t = one / (abs(theta) + sqrt(theta * theta + 1));
        if (theta < zero) t = -t;
        const Scalar c = one / sqrt(t * t + 1);
        const Scalar s = t * c;

        for (long r = 0; r < n; ++r) {
          const Scalar mrp = m(r, p);
          const Scalar mrq = m(r, q);
          m(r, p) = c * mrp - s * mrq;
          m(r, q) = s * mrp + c * mrq;
        }
        for (long r = 0; r < n; ++r) {
          const Scalar mpr = m(p, r);
          const Scalar mqr = m(q, r);
          m(p, r) = c * mpr - s * mqr;
          m(q, r) = s * mpr + c * mqr;
        }
        for (long r = 0; r < n; ++r) {
          const Scalar vrp = vecs(r, p);
          const Scalar vrq = vecs(r, q);
          vecs(r, p) = c * vrp - s * vrq;
          vecs(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }
  if (sweep == kMaxSweeps) throw NumericalError("jacobi_eigen_full: sweep budget exhausted");

  std::vector<long> order(n);
  for (long i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](long x, long y) { return m(x, x) < m(y, y); });

  Spectrum<Scalar> spectrum;
  spectrum.entries.resize(n);
  for (long i = 0; i < n; ++i) {
    auto& entry = spectrum.entries[i];
    entry.index = i;
    entry.value = m(order[i], order[i]);
    VectorX<Scalar> v = vecs.col(order[i]);
    detail::fix_sign(v, tol);
    entry.vector = std::move(v);
  }
  return spectrum;
}

// Inverse-iterates every entry of an already-bisected spectrum, in the
// tridiagonal basis, and maps the vectors back through the stored
// reflectors.  Quasi-degenerate clusters (gap <= cluster_gap) run
// sequentially so later members orthogonalize against earlier ones;
// distinct clusters run in parallel.
template <class Scalar>
void attach_eigenvectors(const SymmetricMatrix<Scalar>& a, const HouseholderFactor<Scalar>& factor,
                         Spectrum<Scalar>& spectrum, const Scalar& tolerance,
                         const Scalar& cluster_gap, const Scalar& sign_threshold) {
  const long n = a.order();
  const long count = static_cast<long>(spectrum.entries.size());
  const Scalar zero = detail::scalar_cast(tolerance, 0);

  std::vector<long> cluster_start{0};
  for (long i = 1; i < count; ++i) {
    if (spectrum.entries[i].value - spectrum.entries[i - 1].value > cluster_gap) {
      cluster_start.push_back(i);
    }
  }
  cluster_start.push_back(count);

  std::vector<VectorX<Scalar>> tri_vectors(count);
  parallel_for(static_cast<long>(cluster_start.size()) - 1, [&](long c) {
    std::vector<VectorX<Scalar>> priors;
    for (long i = cluster_start[c]; i < cluster_start[c + 1]; ++i) {
      tri_vectors[i] = detail::tridiag_inverse_iteration(factor.tridiagonal,
                                                         spectrum.entries[i].value, priors,
                                                         tolerance);
      priors.push_back(tri_vectors[i]);
    }
  });
  const Scalar residual_bound = tolerance * max_abs_entry(a) * n;
  parallel_for(count, [&](long i) {
    VectorX<Scalar> v = factor.apply_q(std::move(tri_vectors[i]));
    detail::fix_sign(v, sign_threshold);
    Scalar res2 = zero;
    for (long r = 0; r < n; ++r) {
      Scalar resid = -(spectrum.entries[i].value * v[r]);
      for (long s = 0; s < n; ++s) detail::acc_fma(resid, a(r, s), v[s]);
      detail::acc_fma(res2, resid, resid);
    }
    using std::sqrt;
    if (!(sqrt(res2) <= residual_bound)) {
      throw NumericalError("attach_eigenvectors: eigenvector residual bound violated");
    }
    spectrum.entries[i].vector = std::move(v);
  });
}

// Production path: tridiagonalize once, bisect the requested indices (each
// independently, so the loop parallelizes), then inverse-iterate in the
// tridiagonal basis and map back.  cluster_gap controls when neighbouring
// eigenvalues share an orthogonalization cluster; sign_threshold is the
// cutoff for the deterministic sign convention.
template <class Scalar>
Spectrum<Scalar> solve_selected(const SymmetricMatrix<Scalar>& a, const EigenRequest<Scalar>& req,
                                const Scalar& cluster_gap, const Scalar& sign_threshold) {
  const long n = a.order();
  const Scalar zero = detail::scalar_cast(req.tolerance, 0);
  if (req.indices.empty()) throw ConfigError("solve_selected: no indices requested");
  for (size_t i = 0; i < req.indices.size(); ++i) {
    if (req.indices[i] < 0 || req.indices[i] >= n) {
      throw ConfigError("solve_selected: index out of range");
    }
    if (i > 0 && req.indices[i] <= req.indices[i - 1]) {
      throw ConfigError("solve_selected: indices must be ascending and distinct");
    }
  }
  if (!(req.tolerance > zero)) throw ConfigError("solve_selected: tolerance must be positive");

  const auto factor = householder_factor(a, req.want_vectors);
  const long count = static_cast<long>(req.indices.size());

  Spectrum<Scalar> spectrum;
  spectrum.entries.resize(count);
  parallel_for(count, [&](long i) {
    spectrum.entries[i].index = req.indices[i];
    spectrum.entries[i].value = bisect_eigenvalue(factor.tridiagonal, req.indices[i], req.tolerance);
  });
  std::stable_sort(spectrum.entries.begin(), spectrum.entries.end(),
                   [](const auto& x, const auto& y) {
                     if (x.value < y.value) return true;
                     if (y.value < x.value) return false;
                     return x.index < y.index;
                   });

  if (req.want_vectors) {
    attach_eigenvectors(a, factor, spectrum, req.tolerance, cluster_gap, sign_threshold);
  }
  return spectrum;
}

}  // namespace lagmesh
