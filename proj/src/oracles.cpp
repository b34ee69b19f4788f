#include "scarlab/oracles.hpp"

namespace scarlab::oracle {

ComplexMatrix embed_two_site_gate(const ComplexMatrix& gate, int site_i, int site_j,
                                  const std::vector<int>& dims) {
  Eigen::Index n = 1;
  for (int d : dims) n *= d;
  const int nsites = static_cast<int>(dims.size());
  auto digit = [&](Eigen::Index state, int site) {
    Eigen::Index s = state;
    for (int k = nsites - 1; k > site; --k) s /= dims[k];
    return static_cast<int>(s % dims[site]);
  };
  const int di = dims[site_i], dj = dims[site_j];
  ComplexMatrix full = ComplexMatrix::Zero(n, n);
  for (Eigen::Index row = 0; row < n; ++row) {
    for (Eigen::Index col = 0; col < n; ++col) {
      bool same = true;
      for (int k = 0; k < nsites; ++k) {
        if (k == site_i || k == site_j) continue;
        if (digit(row, k) != digit(col, k)) {
          same = false;
          break;
        }
      }
      if (!same) continue;
      int gr = digit(row, site_i) * dj + digit(row, site_j);
      int gc = digit(col, site_i) * dj + digit(col, site_j);
      full(row, col) = gate(gr, gc);
    }
  }
  return full;
}

double brickwork_partition_function(const PlaquetteWeight& W, int L, int layers) {
  if (L * layers > 24) throw SizeTooLarge("brute-force partition function beyond 2^24");
  if (L % 2 != 0 || layers % 2 != 0)
    throw OutOfRange("brute-force partition function: L and layers must be even");
  const long total = 1L << (L * layers);
  auto spin = [&](long cfg, int t, int i) {
    return static_cast<int>((cfg >> (t * L + i)) & 1L);
  };
  double z = 0.0;
  for (long cfg = 0; cfg < total; ++cfg) {
    double prod = 1.0;
    for (int t = 0; t < layers && prod != 0.0; ++t) {
      const int tn = (t + 1) % layers;
      const int start = (t % 2 == 0) ? 0 : 1;
      for (int b = 0; b < L / 2; ++b) {
        const int i = (start + 2 * b) % L;
        const int j = (i + 1) % L;
        prod *= W(spin(cfg, tn, i), spin(cfg, tn, j), spin(cfg, t, i), spin(cfg, t, j));
        if (prod == 0.0) break;
      }
    }
    z += prod;
  }
  return z;
}

RealMatrix transfer_matrix_l2(const PlaquetteWeight& W) {
  RealMatrix u = RealMatrix::Zero(4, 4);
  for (int sp1 = 0; sp1 < 2; ++sp1)
    for (int sp2 = 0; sp2 < 2; ++sp2)
      for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2) {
          double sum = 0.0;
          for (int t1 = 0; t1 < 2; ++t1)
            for (int t2 = 0; t2 < 2; ++t2)
              sum += W(t1, sp1, s1, t2) * W(t2, sp2, s2, t1);
          u(sp1 * 2 + sp2, s1 * 2 + s2) = sum;
        }
  return u;
}

}  // namespace scarlab::oracle
