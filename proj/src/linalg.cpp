#include "scarlab/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace scarlab {

namespace {

double mode_key(Complex lambda, EigenMode mode) {
  switch (mode) {
    case EigenMode::largest_real: return lambda.real();
    case EigenMode::largest_imag: return lambda.imag();
    case EigenMode::largest_magnitude: return std::abs(lambda);
  }
  return lambda.real();
}

ComplexVector random_unit_vector(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

EigenPair dense_extremal(const LinearOperator& op, EigenMode mode) {
  ComplexMatrix a = materialize(op);
  Eigen::ComplexEigenSolver<ComplexMatrix> es(a, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success)
    throw NoConvergence(0, std::numeric_limits<double>::infinity(),
                        "dense eigensolver failed");
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < a.rows(); ++i) {
    if (mode_key(es.eigenvalues()[i], mode) > mode_key(es.eigenvalues()[best], mode))
      best = i;
  }
  EigenPair pair;
  pair.value = es.eigenvalues()[best];
  pair.vector = es.eigenvectors().col(best).normalized();
  pair.residual = (a * pair.vector - pair.value * pair.vector).norm();
  return pair;
}

// One Arnoldi factorization + Ritz extraction.  Returns the Ritz pair with
// the extremal key and whether the Krylov space closed on an invariant
// subspace.
struct RitzResult {
  Complex value{};
  ComplexVector vector;
  bool invariant = false;
};

RitzResult arnoldi_ritz(const LinearOperator& op, const ComplexVector& start,
                        int m, EigenMode mode) {
  const Eigen::Index n = op.dim();
  m = static_cast<int>(std::min<Eigen::Index>(m, n));
  ComplexMatrix V(n, m + 1);
  ComplexMatrix H = ComplexMatrix::Zero(m + 1, m);
  V.col(0) = start.normalized();
  int actual = m;
  bool invariant = false;
  ComplexVector w(n);
  for (int j = 0; j < m; ++j) {
    op.apply(V.col(j), w);
    for (int i = 0; i <= j; ++i) {
      Complex h = V.col(i).dot(w);
      H(i, j) += h;
      w -= h * V.col(i);
    }
    // second orthogonalization pass
    for (int i = 0; i <= j; ++i) {
      Complex h = V.col(i).dot(w);
      H(i, j) += h;
      w -= h * V.col(i);
    }
    double beta = w.norm();
    H(j + 1, j) = beta;
    if (beta < 1e-14) {
      actual = j + 1;
      invariant = true;
      break;
    }
    V.col(j + 1) = w / beta;
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> es(H.topLeftCorner(actual, actual), true);
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < actual; ++i) {
    if (mode_key(es.eigenvalues()[i], mode) > mode_key(es.eigenvalues()[best], mode))
      best = i;
  }
  RitzResult r;
  r.value = es.eigenvalues()[best];
  r.vector = (V.leftCols(actual) * es.eigenvectors().col(best)).normalized();
  r.invariant = invariant;
  return r;
}

EigenPair iterative_extremal(const LinearOperator& op, EigenMode mode,
                             const EigenSolveOptions& opts) {
  const Eigen::Index n = op.dim();
  ComplexVector start = random_unit_vector(n, opts.seed);
  EigenPair best;
  best.residual = std::numeric_limits<double>::infinity();
  int applies = 0;
  for (int restart = 0; restart < opts.max_iter; ++restart) {
    RitzResult r = arnoldi_ritz(op, start, opts.krylov_dim, mode);
    applies += opts.krylov_dim;
    ComplexVector Av = op(r.vector);
    double res = (Av - r.value * r.vector).norm();
    if (res < best.residual) {
      best.value = r.value;
      best.vector = r.vector;
      best.residual = res;
    }
    if (best.residual <= opts.tol) return best;
    if (r.invariant) break;  // converged subspace; residual is as good as it gets
    start = r.vector;
  }
  if (best.residual <= opts.tol) return best;
  throw NoConvergence(applies, best.residual, "Arnoldi iteration did not reach tolerance");
}

}  // namespace

ComplexMatrix materialize(const LinearOperator& op, Eigen::Index max_dim) {
  const Eigen::Index n = op.dim();
  if (n > max_dim) throw SizeTooLarge("dense materialization beyond size bound");
  ComplexMatrix a(n, n);
  ComplexVector e = ComplexVector::Zero(n), col(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    e[j] = 1.0;
    op.apply(e, col);
    a.col(j) = col;
    e[j] = 0.0;
  }
  return a;
}

EigenPair dominant_eigenpair(const LinearOperator& op, EigenMode mode,
                             const EigenSolveOptions& opts) {
  if (opts.tol <= 0) throw OutOfRange("eigensolver tolerance must be positive");
  if (mode == EigenMode::largest_imag) {
    // Rotate spectrum so that Im(lambda) becomes the real part: B = -i A.
    FunctionOperator rotated(op.dim(), [&op](const ComplexVector& x, ComplexVector& y) {
      op.apply(x, y);
      y *= Complex(0.0, -1.0);
    });
    EigenPair p = dominant_eigenpair(rotated, EigenMode::largest_real, opts);
    p.value *= Complex(0.0, 1.0);
    p.residual = (op(p.vector) - p.value * p.vector).norm();
    return p;
  }
  if (op.dim() <= opts.dense_threshold) return dense_extremal(op, mode);
  return iterative_extremal(op, mode, opts);
}

ComplexVector propagate(const LinearOperator& op, const ComplexVector& state,
                        Complex prefactor, double t, double tol) {
  if (t < 0) throw OutOfRange("propagate requires t >= 0");
  if (state.size() != op.dim()) throw DimensionMismatch("propagate: state dimension");
  if (t == 0.0 || prefactor == Complex(0.0, 0.0)) return state;

  const Complex z = prefactor * t;
  double scale = 0.0;
  {
    double sn = state.norm();
    if (sn > 0) scale = op(state).norm() / sn;
  }
  long nstep = std::max<long>(1, static_cast<long>(std::ceil(std::abs(z) * scale / 3.0)));
  constexpr int kmax = 40;
  constexpr long nstep_cap = 1L << 26;

  while (true) {
    if (nstep > nstep_cap)
      throw StepUnderflow("propagate: adaptive step fell below floor");
    const Complex zs = z / static_cast<double>(nstep);
    const double step_tol = tol / static_cast<double>(nstep) * 0.1;
    ComplexVector y = state;
    bool restart = false;
    for (long s = 0; s < nstep; ++s) {
      ComplexVector acc = y;
      ComplexVector term = y;
      bool converged = false;
      for (int k = 1; k <= kmax; ++k) {
        term = op(term) * (zs / static_cast<double>(k));
        acc += term;
        if (term.norm() <= step_tol * std::max(acc.norm(), 1e-300)) {
          converged = true;
          break;
        }
      }
      if (!converged) {
        nstep *= 2;
        restart = true;
        break;
      }
      y.swap(acc);
    }
    if (!restart) return y;
  }
}

namespace {

std::vector<Eigen::Index> site_strides(const std::vector<int>& dims) {
  std::vector<Eigen::Index> stride(dims.size());
  Eigen::Index s = 1;
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    stride[k] = s;
    s *= dims[k];
  }
  return stride;
}

Eigen::Index total_dim(const std::vector<int>& dims) {
  Eigen::Index n = 1;
  for (int d : dims) n *= d;
  return n;
}

}  // namespace

ComplexVector apply_local_gate(const ComplexVector& state, const ComplexMatrix& gate,
                               int site_i, int site_j, const std::vector<int>& dims) {
  const Eigen::Index n = total_dim(dims);
  if (state.size() != n) throw DimensionMismatch("apply_local_gate: state dimension");
  if (site_i == site_j || site_i < 0 || site_j < 0 ||
      site_i >= static_cast<int>(dims.size()) || site_j >= static_cast<int>(dims.size()))
    throw DimensionMismatch("apply_local_gate: bad site pair");
  const int di = dims[site_i], dj = dims[site_j];
  if (gate.rows() != di * dj || gate.cols() != di * dj)
    throw DimensionMismatch("apply_local_gate: gate dimension");

  auto stride = site_strides(dims);
  const Eigen::Index si = stride[site_i], sj = stride[site_j];
  ComplexVector out(n);
  ComplexVector block(di * dj), tblock(di * dj);
  for (Eigen::Index base = 0; base < n; ++base) {
    if ((base / si) % di != 0 || (base / sj) % dj != 0) continue;
    for (int a = 0; a < di; ++a)
      for (int b = 0; b < dj; ++b) block[a * dj + b] = state[base + a * si + b * sj];
    tblock.noalias() = gate * block;
    for (int a = 0; a < di; ++a)
      for (int b = 0; b < dj; ++b) out[base + a * si + b * sj] = tblock[a * dj + b];
  }
  return out;
}

ComplexVector apply_local_gate(const ComplexVector& state, const ComplexMatrix& gate,
                               int site, const std::vector<int>& dims) {
  const Eigen::Index n = total_dim(dims);
  if (state.size() != n) throw DimensionMismatch("apply_local_gate: state dimension");
  if (site < 0 || site >= static_cast<int>(dims.size()))
    throw DimensionMismatch("apply_local_gate: bad site");
  const int d = dims[site];
  if (gate.rows() != d || gate.cols() != d)
    throw DimensionMismatch("apply_local_gate: gate dimension");

  auto stride = site_strides(dims);
  const Eigen::Index s = stride[site];
  ComplexVector out(n);
  ComplexVector block(d), tblock(d);
  for (Eigen::Index base = 0; base < n; ++base) {
    if ((base / s) % d != 0) continue;
    for (int a = 0; a < d; ++a) block[a] = state[base + a * s];
    tblock.noalias() = gate * block;
    for (int a = 0; a < d; ++a) out[base + a * s] = tblock[a];
  }
  return out;
}

}  // namespace scarlab
