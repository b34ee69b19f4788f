#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "scarlab/linalg.hpp"
#include "scarlab/oracles.hpp"

using namespace scarlab;

namespace {

ComplexVector random_vector(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  return v;
}

ComplexMatrix random_matrix(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
  return m;
}

}  // namespace

TEST_CASE("operator realizations are linear on random vectors") {
  const Eigen::Index n = 24;
  ComplexMatrix m = random_matrix(n, 11);
  DenseOperator dense(m);
  SparseOperator sparse(SparseComplexMatrix(m.sparseView()));
  FunctionOperator lazy(n, [&m](const ComplexVector& x, ComplexVector& y) { y = m * x; });
  const LinearOperator* ops[] = {&dense, &sparse, &lazy};
  ComplexVector x = random_vector(n, 21), y = random_vector(n, 22);
  Complex alpha(0.3, -1.2), beta(-0.7, 0.4);
  for (const LinearOperator* op : ops) {
    ComplexVector lhs = (*op)(alpha * x + beta * y);
    ComplexVector rhs = alpha * (*op)(x) + beta * (*op)(y);
    CHECK((lhs - rhs).norm() <= 1e-12 * rhs.norm());
  }
}

TEST_CASE("dominant_eigenpair: identity returns 1 in every mode") {
  DenseOperator id(ComplexMatrix::Identity(4, 4));
  for (auto mode :
       {EigenMode::largest_real, EigenMode::largest_imag, EigenMode::largest_magnitude}) {
    EigenPair p = dominant_eigenpair(id, mode);
    CHECK(std::abs(p.value - Complex(1.0, 0.0)) < 1e-12);
    CHECK(p.residual < 1e-12);
  }
}

TEST_CASE("dominant_eigenpair: diagonal and rotation examples") {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 1.0;
  EigenPair p = dominant_eigenpair(DenseOperator(d), EigenMode::largest_magnitude);
  CHECK(std::abs(p.value - Complex(2.0, 0.0)) < 1e-12);

  ComplexMatrix rot = ComplexMatrix::Zero(2, 2);
  rot(0, 1) = 1.0;
  rot(1, 0) = -1.0;
  p = dominant_eigenpair(DenseOperator(rot), EigenMode::largest_imag);
  CHECK(std::abs(p.value - Complex(0.0, 1.0)) < 1e-10);
  CHECK(p.residual < 1e-10);
}

TEST_CASE("dominant_eigenpair agrees with dense decomposition on Hermitian matrices") {
  for (Eigen::Index n : {16, 48}) {
    ComplexMatrix m = random_matrix(n, 100 + n);
    ComplexMatrix herm = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm);
    double expect = es.eigenvalues().maxCoeff();
    DenseOperator op(herm);

    EigenPair p = dominant_eigenpair(op, EigenMode::largest_real);
    CHECK(std::abs(p.value.real() - expect) < 1e-9);

    // Force the Arnoldi path as well.
    EigenSolveOptions opts;
    opts.dense_threshold = 0;
    opts.seed = 3;
    p = dominant_eigenpair(op, EigenMode::largest_real, opts);
    CHECK(std::abs(p.value.real() - expect) < 1e-9);
    CHECK(p.residual <= opts.tol);
  }
}

TEST_CASE("dominant_eigenpair iterative path on a non-normal operator") {
  const Eigen::Index n = 60;
  ComplexMatrix m = random_matrix(n, 4242) / std::sqrt(double(n));
  m(0, 0) += 4.0;  // plant a dominant eigenvalue
  Eigen::ComplexEigenSolver<ComplexMatrix> es(m);
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < n; ++i)
    if (es.eigenvalues()[i].real() > es.eigenvalues()[best].real()) best = i;
  EigenSolveOptions opts;
  opts.dense_threshold = 0;
  EigenPair p = dominant_eigenpair(DenseOperator(m), EigenMode::largest_real, opts);
  CHECK(std::abs(p.value - es.eigenvalues()[best]) < 1e-8);
  CHECK(p.residual <= opts.tol);
}

TEST_CASE("dominant_eigenpair reports NoConvergence with diagnostics") {
  ComplexMatrix m = random_matrix(40, 7);
  EigenSolveOptions opts;
  opts.dense_threshold = 0;
  opts.krylov_dim = 2;
  opts.max_iter = 1;
  opts.tol = 1e-15;
  bool threw = false;
  try {
    dominant_eigenpair(DenseOperator(m), EigenMode::largest_magnitude, opts);
  } catch (const NoConvergence& e) {
    threw = true;
    CHECK(e.best_residual > 0.0);
    CHECK(e.iterations > 0);
  }
  CHECK(threw);
}

TEST_CASE("propagate: zero generator, diagonal phases, unitarity") {
  const Eigen::Index n = 6;
  ComplexVector x = random_vector(n, 31);

  DenseOperator zero(ComplexMatrix::Zero(n, n));
  CHECK((propagate(zero, x, Complex(1, 0), 2.5) - x).norm() == 0.0);

  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  ComplexVector v(2);
  v << 1.0, 1.0;
  ComplexVector out = propagate(DenseOperator(d), v, Complex(0, -1), M_PI, 1e-12);
  CHECK(std::abs(out[0] - std::exp(Complex(0, -M_PI))) < 1e-10);
  CHECK(std::abs(out[1] - std::exp(Complex(0, -2 * M_PI))) < 1e-10);

  ComplexMatrix a = random_matrix(n, 32);
  ComplexMatrix anti = (a - a.adjoint()) / 2.0;
  ComplexVector u = propagate(DenseOperator(anti), x, Complex(1, 0), 1.7, 1e-12);
  CHECK(std::abs(u.norm() - x.norm()) < 1e-10);
}

TEST_CASE("propagate composes in t") {
  const Eigen::Index n = 10;
  ComplexMatrix m = random_matrix(n, 55) / 2.0;
  DenseOperator op(m);
  ComplexVector x = random_vector(n, 56);
  Complex pf(0.2, -0.9);
  ComplexVector once = propagate(op, x, pf, 1.3, 1e-12);
  ComplexVector twice = propagate(op, propagate(op, x, pf, 0.8, 1e-12), pf, 0.5, 1e-12);
  CHECK((once - twice).norm() <= 1e-8 * once.norm());
}

TEST_CASE("apply_local_gate: identity and SWAP") {
  std::vector<int> dims{2, 2};
  ComplexVector x = random_vector(4, 61);
  CHECK((apply_local_gate(x, ComplexMatrix::Identity(4, 4), 0, 1, dims) - x).norm() == 0.0);

  ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = 1.0;
  swap(1, 2) = swap(2, 1) = 1.0;
  ComplexVector e01 = ComplexVector::Zero(4);
  e01[1] = 1.0;  // |01>
  ComplexVector out = apply_local_gate(e01, swap, 0, 1, dims);
  CHECK(std::abs(out[2] - 1.0) < 1e-15);  // |10>
  CHECK(out.cwiseAbs().sum() == doctest::Approx(1.0));
}

TEST_CASE("apply_local_gate matches the dense Kronecker oracle") {
  std::vector<int> dims{2, 2, 2};
  ComplexMatrix gate = random_matrix(4, 71);
  ComplexVector x = random_vector(8, 72);
  for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}, std::pair{2, 0}}) {
    ComplexMatrix full = oracle::embed_two_site_gate(gate, i, j, dims);
    ComplexVector expect = full * x;
    ComplexVector got = apply_local_gate(x, gate, i, j, dims);
    CHECK((got - expect).norm() <= 1e-13 * expect.norm());
  }
  // mixed local dimensions
  std::vector<int> dims2{2, 3, 2};
  ComplexMatrix gate6 = random_matrix(6, 73);
  ComplexVector y = random_vector(12, 74);
  ComplexMatrix full = oracle::embed_two_site_gate(gate6, 1, 2, dims2);
  CHECK((apply_local_gate(y, gate6, 1, 2, dims2) - full * y).norm() <= 1e-13 * y.norm() * 10);
}

TEST_CASE("apply_local_gate rejects mismatched dimensions") {
  std::vector<int> dims{2, 2};
  ComplexVector x = random_vector(4, 81);
  CHECK_THROWS_AS(apply_local_gate(x, ComplexMatrix::Identity(3, 3), 0, 1, dims),
                  DimensionMismatch);
  CHECK_THROWS_AS(apply_local_gate(x, ComplexMatrix::Identity(4, 4), 0, 0, dims),
                  DimensionMismatch);
}
