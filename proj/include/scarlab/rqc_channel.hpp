#pragma once

#include <memory>

#include "scarlab/linalg.hpp"

namespace scarlab {

// Stochastic gate mixture of the circuit channel: scar-preserving unitary
// with probability a, Haar perturbation with probability b = 1 - a - c,
// projector with probability c.  r = |s|/q is the scar fraction; q and |s|
// never enter separately.
struct ChannelParams {
  double a;
  double c;
  double r;

  ChannelParams(double a_, double c_, double r_) : a(a_), c(c_), r(r_) {
    if (a < 0 || c < 0 || a + c > 1.0 + 1e-12)
      throw OutOfRange("ChannelParams: need a, c >= 0 and a + c <= 1");
    if (!(r > 0.0 && r < 1.0)) throw OutOfRange("ChannelParams: need 0 < r < 1");
  }
  double b() const { return 1.0 - a - c; }
};

// Effective two-site basis order, fixed globally: (uu, dd, ud, du).
// Up spin = thermal q-state, down spin = scar s-state.
enum EffPairIndex : int { kUpUp = 0, kDownDown = 1, kUpDown = 2, kDownUp = 3 };

// 4x4 real matrix of the local channel in the basis above.  Block layout
// [[A, B], [0, 0]]: rows 3 and 4 vanish because the channel only emits
// uu and dd pair states.
using LocalChannelMatrix = Eigen::Matrix4d;

LocalChannelMatrix local_channel_matrix(const ChannelParams& p);

// Same gate in the standard tensor order (uu, ud, du, dd) with up = 0,
// down = 1, for use with apply_local_gate.
Eigen::Matrix4d to_standard_order(const LocalChannelMatrix& m);

enum class EffLabel { s, q };

// Coefficients of the channel action on a product of local density matrices:
// L(left x right) = ss_coeff * ss + qq_coeff * qq.
struct ChannelActionCoeffs {
  double ss;
  double qq;
};

ChannelActionCoeffs channel_action_labels(const ChannelParams& p, EffLabel left,
                                          EffLabel right);

// Lazy brickwork operator on the 2^L effective chain: odd layer then even
// layer of local channel gates, periodic boundaries.  L even, 2 <= L <= 14.
std::shared_ptr<LinearOperator> brickwork_operator(const ChannelParams& p, int L);

struct SteadyStateExact {
  EigenPair pair;
  double scar_weight;  // amplitude-weighted fraction of down (scar) labels
};

SteadyStateExact steady_state_exact(const ChannelParams& p, int L, double tol = 1e-10,
                                    std::uint64_t seed = 1);

// Scar weight of a raw steady-state vector (exposed for reuse in tests).
double scar_weight_of(const ComplexVector& state, int L);

}  // namespace scarlab
