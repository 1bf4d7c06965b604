#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laxg2/g2.hpp"
#include "laxg2/jets.hpp"
#include "laxg2/rng.hpp"

namespace laxg2 {

// One marked point with its pair of framing vectors. The vectors must be
// nonzero and mutually orthogonal; over the rationals that already forces
// linear independence.
struct TyurinDatum {
    Rat gamma;
    Vec3 alpha1;
    Vec3 alpha2;

    TyurinDatum(Rat gamma_, Vec3 alpha1_, Vec3 alpha2_);
};

// Scalars that witness membership of a jet in the constrained space at one
// marked point. beta1/beta2 are the canonical representatives fixed by the
// gauge row alpha1^t beta1 = 0.
struct AdmissibleParams {
    Rat mu = 0;                 // double-pole scale
    Rat beta01 = 0, beta02 = 0; // residue vector scales
    Vec3 beta1 = vec3_zero();
    Vec3 beta2 = vec3_zero();
    Rat kappa1 = 0, kappa2 = 0; // eigenvalues at order zero
    Rat lambda1 = 0, lambda2 = 0; // induced cross-product scales
};

struct ConditionResult {
    std::string name;
    bool pass = false;
    std::string detail; // empty when the condition holds
};

struct AdmissibilityReport {
    std::vector<ConditionResult> conditions;
    bool pass = false;
    // Extraction scalars; meaningful only when pass is true.
    AdmissibleParams params;
};

// Extraction checks for the individual expansion orders. Each throws
// NotAdmissible naming the violated condition.
Rat check_order_minus2(const G2Element& coeff, const TyurinDatum& d);

struct ResidueParams {
    Rat beta01 = 0, beta02 = 0;
    Vec3 beta1 = vec3_zero();
    Vec3 beta2 = vec3_zero();
};
ResidueParams check_residue(const G2Element& coeff, const TyurinDatum& d);

struct EigenParams {
    Rat kappa1 = 0, kappa2 = 0;
    Rat lambda1 = 0, lambda2 = 0;
};
EigenParams check_order_zero(const G2Element& coeff, const TyurinDatum& d);

void check_order_one(const G2Element& coeff, const TyurinDatum& d);

// Full report over orders -2..1 of the jet (window must contain them).
// Never throws for in-window jets; failures land in the condition list.
AdmissibilityReport is_admissible(const MatrixJet& jet, const TyurinDatum& d);

// Like is_admissible but throws NotAdmissible on the first failing
// condition and returns the witness scalars.
AdmissibleParams extract_params(const MatrixJet& jet, const TyurinDatum& d);

// Basis of the space of admissible jets with window [-2, T], T >= 1.
// Every returned jet is re-checked against is_admissible. Raises
// DegenerateDatum if the dimension differs from the generic count
// 14*(T+3) - 28.
std::vector<MatrixJet> admissible_jet_basis(const TyurinDatum& d, int T);

// Independent-condition counts per order block. The contracted values are
// the bookkeeping differences (scalar conditions minus witness parameters);
// the codims are measured ranks of the same blocks. Both sum to 28 for
// admissible data; a rank drop below the generic codims raises
// DegenerateDatum.
struct RelationCount {
    int double_pole_contracted = 0; // 13
    int residue_contracted = 0;     // 8
    int eigen_contracted = 0;       // 6
    int first_order_contracted = 0; // 1
    int double_pole_codim = 0;      // 13
    int residue_codim = 0;          // 9
    int eigen_codim = 0;            // 5
    int first_order_codim = 0;      // 1
    int contracted_total() const {
        return double_pole_contracted + residue_contracted + eigen_contracted +
               first_order_contracted;
    }
    int codim_total() const {
        return double_pole_codim + residue_codim + eigen_codim + first_order_codim;
    }
};
RelationCount effective_relation_count(const TyurinDatum& d);

// Deterministic pseudo-random admissible jet with window [-2, T].
MatrixJet random_admissible(const TyurinDatum& d, int T, std::uint64_t seed);
MatrixJet random_admissible(const std::vector<MatrixJet>& basis, Rng& rng);

// Certificate that the commutator of two admissible jets is admissible
// again: the orders -4 and -3 of the product vanish identically and the
// orders -2..1 satisfy every condition. Also cross-checks the double-pole
// scale of the bracket against its closed formula in the factors' scalars.
struct ClosureCertificate {
    bool no_order_minus4 = false;
    bool no_order_minus3 = false;
    AdmissibilityReport bracket;
    bool mu_matches_formula = false;
    bool pass() const {
        return no_order_minus4 && no_order_minus3 && bracket.pass && mu_matches_formula;
    }
};
ClosureCertificate closure_check(const MatrixJet& x, const MatrixJet& y, const TyurinDatum& d);

// Double-pole scale of [x, y] from the witness scalars of x and y.
Rat commutator_mu(const AdmissibleParams& px, const AdmissibleParams& py);

} // namespace laxg2
