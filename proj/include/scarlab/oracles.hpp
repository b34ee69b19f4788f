#pragma once

// Independent reference implementations used by the test suites and the
// `validate` subcommand.  Everything in here is deliberately written by the
// most direct route available (dense Kronecker products, exhaustive spin
// sums, finite differences) and shares no code with the optimized paths it
// cross-checks.

#include <vector>

#include "scarlab/classical_lattice.hpp"
#include "scarlab/linalg.hpp"

namespace scarlab::oracle {

// Dense embedding of a two-site gate into the full product space by explicit
// basis-state bookkeeping.
ComplexMatrix embed_two_site_gate(const ComplexMatrix& gate, int site_i, int site_j,
                                  const std::vector<int>& dims);

// Partition function of the brickwork lattice with `layers` rows of L spins
// (periodic in both directions) by exhaustive spin summation.  Layer t -> t+1
// carries gates on even bonds of the row when t is odd and odd bonds when t
// is even, matching the odd-layer-first brickwork order.
double brickwork_partition_function(const PlaquetteWeight& W, int L, int layers);

// Transfer matrix for L = 2 by a hand-coded four-index contraction loop.
RealMatrix transfer_matrix_l2(const PlaquetteWeight& W);

}  // namespace scarlab::oracle
