#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "scarlab/errors.hpp"

namespace scarlab {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using SparseComplexMatrix = Eigen::SparseMatrix<Complex>;

// Abstract "apply to vector" capability.  Realizations: dense matrix, sparse
// matrix, lazy product of local gates.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;
  virtual Eigen::Index dim() const = 0;
  virtual void apply(const ComplexVector& x, ComplexVector& y) const = 0;

  ComplexVector operator()(const ComplexVector& x) const {
    if (x.size() != dim()) throw DimensionMismatch("operator/vector dimension mismatch");
    ComplexVector y(dim());
    apply(x, y);
    return y;
  }
};

class DenseOperator final : public LinearOperator {
 public:
  explicit DenseOperator(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionMismatch("dense operator must be square");
  }
  Eigen::Index dim() const override { return m_.rows(); }
  void apply(const ComplexVector& x, ComplexVector& y) const override { y = m_ * x; }
  const ComplexMatrix& matrix() const { return m_; }

 private:
  ComplexMatrix m_;
};

class SparseOperator final : public LinearOperator {
 public:
  explicit SparseOperator(SparseComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionMismatch("sparse operator must be square");
  }
  Eigen::Index dim() const override { return m_.rows(); }
  void apply(const ComplexVector& x, ComplexVector& y) const override { y = m_ * x; }
  const SparseComplexMatrix& matrix() const { return m_; }

 private:
  SparseComplexMatrix m_;
};

class FunctionOperator final : public LinearOperator {
 public:
  using Apply = std::function<void(const ComplexVector&, ComplexVector&)>;
  FunctionOperator(Eigen::Index n, Apply f) : n_(n), f_(std::move(f)) {}
  Eigen::Index dim() const override { return n_; }
  void apply(const ComplexVector& x, ComplexVector& y) const override { f_(x, y); }

 private:
  Eigen::Index n_;
  Apply f_;
};

// Dense matrix of `op`, built column by column.  Intended for small dims.
ComplexMatrix materialize(const LinearOperator& op, Eigen::Index max_dim = 8192);

enum class EigenMode { largest_real, largest_imag, largest_magnitude };

struct EigenPair {
  Complex value{};
  ComplexVector vector;
  double residual = 0.0;  // ||A v - lambda v|| / ||v||
};

struct EigenSolveOptions {
  double tol = 1e-10;
  int max_iter = 600;       // Arnoldi restarts (iterative path)
  std::uint64_t seed = 1;
  Eigen::Index dense_threshold = 1024;
  int krylov_dim = 48;
};

// Eigenpair whose eigenvalue is extremal in the requested sense.  Dense solve
// below `dense_threshold`, restarted Arnoldi above it.  For largest_imag the
// solver rotates the operator onto the real axis and selects largest-real
// internally.
EigenPair dominant_eigenpair(const LinearOperator& op, EigenMode mode,
                             const EigenSolveOptions& opts = {});

// exp(prefactor * t * op) * state via scaled Taylor stepping.  The result is
// not renormalized.
ComplexVector propagate(const LinearOperator& op, const ComplexVector& state,
                        Complex prefactor, double t, double tol = 1e-8);

// Action of (1 x ... x gate x ... x 1) on the two sites (site_i, site_j) of a
// tensor-product space with the given local dimensions.  Site-major basis:
// site 0 is the most significant digit; the gate row/column index for local
// states (a, b) is a * dims[site_j] + b.
ComplexVector apply_local_gate(const ComplexVector& state, const ComplexMatrix& gate,
                               int site_i, int site_j, const std::vector<int>& dims);

// Single-site variant.
ComplexVector apply_local_gate(const ComplexVector& state, const ComplexMatrix& gate,
                               int site, const std::vector<int>& dims);

}  // namespace scarlab
