#pragma once

#include <array>
#include <memory>
#include <vector>

#include "scarlab/rqc_channel.hpp"

namespace scarlab {

// Plaquette Boltzmann weight of the 2D classical model.  Corner convention:
// (s1, s2) is the output pair and (s3, s4) the input pair of the local
// channel, first slot = left site; sigma = 0 means up, 1 means down.
struct PlaquetteWeight {
  std::array<double, 16> w{};

  static constexpr int index(int s1, int s2, int s3, int s4) {
    return (((s1 << 1) | s2) << 2) | ((s3 << 1) | s4);
  }
  double& operator()(int s1, int s2, int s3, int s4) { return w[index(s1, s2, s3, s4)]; }
  double operator()(int s1, int s2, int s3, int s4) const { return w[index(s1, s2, s3, s4)]; }

  double max_abs() const {
    double m = 0.0;
    for (double v : w) m = std::max(m, std::abs(v));
    return m;
  }
  // True when both mismatched output rows vanish (channel-built weights).
  bool out_rows_clean(double tol = 0.0) const {
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s3 = 0; s3 < 2; ++s3)
        for (int s4 = 0; s4 < 2; ++s4)
          if (std::abs((*this)(s1, 1 - s1, s3, s4)) > tol) return false;
    return true;
  }
};

// w(s1 s2 | s3 s4) = <s1 s2| L |s3 s4> of the local channel.
PlaquetteWeight boltzmann_weight(const ChannelParams& p);

// Transfer matrix in the pi/4-rotated frame,
//   U[s'|s] = sum_tau prod_i W(tau_i, s'_i | s_i, tau_{i+1}),  tau_{L+1} = tau_1,
// as a lazy 2^L operator (dense materialization available for small L).
std::shared_ptr<LinearOperator> transfer_matrix_dense(const PlaquetteWeight& W, int L);

// Single repeated MPO tensor encoding U (bond 2) or U^dag U (bond 4).
struct TransferMPO {
  int bond = 2;
  bool squared = false;
  // block(l, r) is the 2x2 physical matrix (row = out spin, col = in spin).
  std::vector<Eigen::Matrix2d> blocks;

  const Eigen::Matrix2d& block(int l, int r) const { return blocks[l * bond + r]; }
  Eigen::Matrix2d& block(int l, int r) { return blocks[l * bond + r]; }
};

TransferMPO transfer_mpo(const PlaquetteWeight& W, bool squared);

// Periodic closure of the MPO ring over L sites applied to a vector.
ComplexVector mpo_ring_apply(const TransferMPO& mpo, int L, const ComplexVector& x);

// Dense matrix of the periodic closure (small L only).
RealMatrix mpo_ring_dense(const TransferMPO& mpo, int L);

}  // namespace scarlab
