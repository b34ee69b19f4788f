#include "scarlab/classical_lattice.hpp"

namespace scarlab {

namespace {

int pair_index(int left, int right) {
  if (left == 0 && right == 0) return kUpUp;
  if (left == 1 && right == 1) return kDownDown;
  if (left == 0 && right == 1) return kUpDown;
  return kDownUp;
}

}  // namespace

PlaquetteWeight boltzmann_weight(const ChannelParams& p) {
  LocalChannelMatrix m = local_channel_matrix(p);
  PlaquetteWeight w;
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2)
      for (int s3 = 0; s3 < 2; ++s3)
        for (int s4 = 0; s4 < 2; ++s4)
          w(s1, s2, s3, s4) = m(pair_index(s1, s2), pair_index(s3, s4));
  return w;
}

TransferMPO transfer_mpo(const PlaquetteWeight& W, bool squared) {
  TransferMPO single;
  single.bond = 2;
  single.squared = false;
  single.blocks.assign(4, Eigen::Matrix2d::Zero());
  for (int l = 0; l < 2; ++l)
    for (int r = 0; r < 2; ++r)
      for (int so = 0; so < 2; ++so)
        for (int si = 0; si < 2; ++si) single.block(l, r)(so, si) = W(l, so, si, r);
  if (!squared) return single;

  // Site tensor of U^dag U: upper chain carries the conjugated copy.
  TransferMPO sq;
  sq.bond = 4;
  sq.squared = true;
  sq.blocks.assign(16, Eigen::Matrix2d::Zero());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          Eigen::Matrix2d blk = Eigen::Matrix2d::Zero();
          for (int so = 0; so < 2; ++so)
            for (int si = 0; si < 2; ++si)
              for (int m = 0; m < 2; ++m)
                blk(so, si) += single.block(a, c)(m, so) * single.block(b, d)(m, si);
          sq.block(a * 2 + b, c * 2 + d) = blk;
        }
  return sq;
}

ComplexVector mpo_ring_apply(const TransferMPO& mpo, int L, const ComplexVector& x) {
  const Eigen::Index n = Eigen::Index(1) << L;
  if (x.size() != n) throw DimensionMismatch("mpo_ring_apply: vector size");
  const int m = mpo.bond;
  // work[t0 * m + t] carries the partially contracted tensor with the ring
  // bond opened at t0 and current bond t.
  std::vector<ComplexVector> work(m * m, ComplexVector::Zero(n));
  for (int t0 = 0; t0 < m; ++t0) work[t0 * m + t0] = x;

  std::vector<ComplexVector> next(m * m);
  for (int site = 0; site < L; ++site) {
    const Eigen::Index stride = Eigen::Index(1) << (L - 1 - site);
    for (auto& v : next) v = ComplexVector::Zero(n);
    for (int t0 = 0; t0 < m; ++t0) {
      for (int t = 0; t < m; ++t) {
        const ComplexVector& src = work[t0 * m + t];
        for (int tp = 0; tp < m; ++tp) {
          const Eigen::Matrix2d& blk = mpo.block(t, tp);
          if (blk.cwiseAbs().maxCoeff() == 0.0) continue;
          ComplexVector& dst = next[t0 * m + tp];
          for (Eigen::Index base = 0; base < n; ++base) {
            if ((base / stride) & 1) continue;  // digit at this site is 0
            const Complex lo = src[base];
            const Complex hi = src[base + stride];
            dst[base] += blk(0, 0) * lo + blk(0, 1) * hi;
            dst[base + stride] += blk(1, 0) * lo + blk(1, 1) * hi;
          }
        }
      }
    }
    work.swap(next);
  }
  ComplexVector y = ComplexVector::Zero(n);
  for (int t0 = 0; t0 < m; ++t0) y += work[t0 * m + t0];
  return y;
}

RealMatrix mpo_ring_dense(const TransferMPO& mpo, int L) {
  if (L < 1 || L > 12) throw SizeTooLarge("mpo_ring_dense: need 1 <= L <= 12");
  const Eigen::Index n = Eigen::Index(1) << L;
  RealMatrix u(n, n);
  ComplexVector e = ComplexVector::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    e[j] = 1.0;
    u.col(j) = mpo_ring_apply(mpo, L, e).real();
    e[j] = 0.0;
  }
  return u;
}

std::shared_ptr<LinearOperator> transfer_matrix_dense(const PlaquetteWeight& W, int L) {
  if (L < 2 || L > 14) throw SizeTooLarge("transfer_matrix_dense: need 2 <= L <= 14");
  TransferMPO mpo = transfer_mpo(W, /*squared=*/false);
  const Eigen::Index n = Eigen::Index(1) << L;
  auto apply = [mpo, L](const ComplexVector& x, ComplexVector& y) {
    y = mpo_ring_apply(mpo, L, x);
  };
  return std::make_shared<FunctionOperator>(n, apply);
}

}  // namespace scarlab
