#pragma once

#include <utility>
#include <vector>

#include "laxg2/sphere.hpp"

namespace laxg2 {

// Global algebra-valued 1-form omega = W(z) dz used to correct the naive
// trace pairing into a well-defined local 2-cocycle. At every marked point
// the coefficient W has at most a simple pole, its residue satisfies the
// normalized shape conditions (both pairings against the marked directions
// equal 1 instead of 0), the constant term satisfies the eigenvalue
// conditions, and the linear term satisfies the first-order condition.
struct OmegaForm {
    GlobalElement w;           // coefficient of dz
    std::vector<int> in_order; // exact order of the form at each in-point
    std::vector<int> out_pole; // exact pole order of the form at each out-point
};

// Finds a 1-form satisfying the marked-point conditions within the smallest
// pole budget at the in/out points, enumerating budget distributions in
// increasing total and solving exactly. Deterministic. Throws NoSolution
// when no budget up to max_total_pole admits a solution, ConfigError when
// there are no marked points.
OmegaForm build_omega(const SurfaceSpec& s, int max_total_pole = 6);

// Certificate for one local residue identity: the exact residue, the
// closed-form prediction, and the vanishing of everything below the residue.
struct ResidueCertificate {
    Rat residue;  // coefficient at order -1 of the local trace form
    Rat expected; // prediction from the extraction parameters
    bool matches = false;
    bool sub_orders_vanish = false;
    // The two coefficient traces whose vanishing kills the sub-residues.
    bool intermediate_traces_vanish = false;

    bool pass() const { return matches && sub_orders_vanish && intermediate_traces_vanish; }
};

// res tr(L dL') against 2(k1 + k2) of the commutator [L, L']; both jets must
// be admissible for d with truncation at least 3.
ResidueCertificate residue_trace_LdL(const MatrixJet& x, const MatrixJet& y, const TyurinDatum& d);

// res tr(L w) against 2(k1 + k2) of L itself; omega_local is the expansion
// of the 1-form coefficient at the marked point, window containing [-1, 1].
ResidueCertificate residue_trace_Lomega(const MatrixJet& x, const MatrixJet& omega_local,
                                        const TyurinDatum& d);

// Cocycle pairing: the sum over in-points of res tr(x dy - W [x, y]).
// With certify set, first proves tr(x dy - W [x, y]) is holomorphic at every
// marked point (all negative orders of the complete expansion vanish), so the
// pairing is independent of the separating contour; HolomorphyViolation
// otherwise.
Rat cocycle_value(const SurfaceSpec& s, const OmegaForm& omega, const GlobalElement& x,
                  const GlobalElement& y, bool certify = true);

// Degree window [lower, upper]: the pairing of degree-k and degree-l basis
// sections vanishes identically whenever k + l lies outside it. Computed
// from the measured orders of the form and the grading offset bound.
std::pair<int, int> locality_window(const SurfaceSpec& s, const GradingSpec& g,
                                    const OmegaForm& omega);

} // namespace laxg2
