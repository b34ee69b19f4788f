#include "scarlab/rqc_channel.hpp"

#include <bit>
#include <cmath>

namespace scarlab {

LocalChannelMatrix local_channel_matrix(const ChannelParams& p) {
  const double a = p.a, b = p.b(), c = p.c, r = p.r;
  LocalChannelMatrix m = LocalChannelMatrix::Zero();
  // A block: columns (uu, dd)
  m(kUpUp, kUpUp) = a + b;
  m(kUpUp, kDownDown) = b;
  m(kDownDown, kUpUp) = c * r * r;
  m(kDownDown, kDownDown) = a + c;
  // B block: columns (ud, du), both equal
  m(kUpUp, kUpDown) = a * (1.0 - r) + b;
  m(kUpUp, kDownUp) = a * (1.0 - r) + b;
  m(kDownDown, kUpDown) = (a + c) * r;
  m(kDownDown, kDownUp) = (a + c) * r;
  return m;
}

Eigen::Matrix4d to_standard_order(const LocalChannelMatrix& m) {
  // Standard order pairs up/down digits as 2*left + right with up = 0:
  // (uu, ud, du, dd).  Paper order (uu, dd, ud, du) maps to standard
  // positions {0, 3, 1, 2}.
  static const int perm[4] = {0, 3, 1, 2};
  Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s(perm[i], perm[j]) = m(i, j);
  return s;
}

ChannelActionCoeffs channel_action_labels(const ChannelParams& p, EffLabel left,
                                          EffLabel right) {
  const double a = p.a, b = p.b(), c = p.c, r = p.r;
  if (left == EffLabel::s && right == EffLabel::s) return {a + c, b};
  if (left == EffLabel::q && right == EffLabel::q) return {c * r * r, a + b};
  // mixed sq and qs act identically
  return {(a + c) * r, a * (1.0 - r) + b};
}

std::shared_ptr<LinearOperator> brickwork_operator(const ChannelParams& p, int L) {
  if (L % 2 != 0) throw OddL("brickwork_operator: L must be even");
  if (L < 2 || L > 14) throw SizeTooLarge("brickwork_operator: need 2 <= L <= 14");
  ComplexMatrix gate = to_standard_order(local_channel_matrix(p)).cast<Complex>();
  std::vector<int> dims(L, 2);
  const Eigen::Index n = Eigen::Index(1) << L;
  auto apply = [gate, dims, L](const ComplexVector& x, ComplexVector& y) {
    y = x;
    for (int i = 0; i + 1 < L; i += 2) y = apply_local_gate(y, gate, i, i + 1, dims);
    for (int i = 1; i + 1 < L; i += 2) y = apply_local_gate(y, gate, i, i + 1, dims);
    y = apply_local_gate(y, gate, L - 1, 0, dims);
  };
  return std::make_shared<FunctionOperator>(n, apply);
}

double scar_weight_of(const ComplexVector& state, int L) {
  const Eigen::Index n = state.size();
  Complex total(0.0, 0.0);
  for (Eigen::Index i = 0; i < n; ++i) total += state[i];
  auto down_fraction = [L](Eigen::Index i) {
    return static_cast<double>(std::popcount(static_cast<std::uint64_t>(i))) / L;
  };
  // Basis products of s/q density matrices all carry unit trace, so the
  // physical normalization is sum of amplitudes = 1.
  if (std::abs(total) > 1e-10 * state.cwiseAbs().sum()) {
    double w = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      w += (state[i] / total).real() * down_fraction(i);
    return w;
  }
  // Degenerate sign structure: fall back to |amplitude|^2 weights.
  double w = 0.0, norm2 = state.squaredNorm();
  for (Eigen::Index i = 0; i < n; ++i)
    w += std::norm(state[i]) / norm2 * down_fraction(i);
  return w;
}

SteadyStateExact steady_state_exact(const ChannelParams& p, int L, double tol,
                                    std::uint64_t seed) {
  auto op = brickwork_operator(p, L);
  EigenSolveOptions opts;
  opts.tol = tol;
  opts.seed = seed;
  EigenPair pair = dominant_eigenpair(*op, EigenMode::largest_real, opts);
  return {pair, scar_weight_of(pair.vector, L)};
}

}  // namespace scarlab
