#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "laxg2/constraints.hpp"
#include "laxg2/jets.hpp"
#include "laxg2/linalg.hpp"
#include "laxg2/poly.hpp"
#include "laxg2/tyurin.hpp"

namespace laxg2 {

// Point on the projective line over Q.
struct SpherePoint {
    bool at_infinity = false;
    Rat z; // meaningful only when finite

    static SpherePoint infinity() {
        SpherePoint p;
        p.at_infinity = true;
        return p;
    }
    static SpherePoint finite(Rat v) {
        SpherePoint p;
        p.z = std::move(v);
        return p;
    }

    friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
        return a.at_infinity == b.at_infinity && (a.at_infinity || a.z == b.z);
    }
    friend bool operator!=(const SpherePoint& a, const SpherePoint& b) { return !(a == b); }

    std::string str() const { return at_infinity ? "inf" : rat_str(z); }
};

// Genus-zero marked-point data: in-points sharing the degree bound, weighted
// out-points, and the constrained double-pole points. All points must be
// pairwise distinct; the point at infinity may only be an out-point.
struct SurfaceSpec {
    std::vector<SpherePoint> in_points;
    std::vector<SpherePoint> out_points;
    std::vector<TyurinDatum> marked;

    SurfaceSpec(std::vector<SpherePoint> in_points_, std::vector<SpherePoint> out_points_,
                std::vector<TyurinDatum> marked_);

    int n_in() const { return int(in_points.size()); }
    int n_out() const { return int(out_points.size()); }
    int n_marked() const { return int(marked.size()); }
    bool has_infinite_out() const;
};

// Out-point degree weights a_j plus the bounded offsets b_{m,j}. The weights
// must be positive with sum equal to the number of in-points; the offsets must
// sum to (number of in-points) - 1 for every degree. Offset rules:
//   Constant:  b_{m,j} = constant for all m, j
//   HalfSplit: two out-points with b_{m,0} = floor(m/2) - m/2,
//              b_{m,1} = ceil(m/2) - m/2 (used with weights 1/2, 1/2)
struct GradingSpec {
    enum class Offsets { Constant, HalfSplit };

    std::vector<Rat> a;
    Offsets offsets = Offsets::Constant;
    Rat constant = 0;

    void validate(const SurfaceSpec& s) const; // throws InvalidGrading
    Rat offset(int m, std::size_t j) const;    // b_{m,j}
    Rat weight(int m, std::size_t j) const;    // a_j * m + b_{m,j}
    // Exact maximum of |b_{m,j}| over all degrees and out-points.
    Rat offset_bound() const;
    // weight() coerced to an integer; throws InvalidGrading otherwise.
    int integer_weight(int m, std::size_t j) const;
};

// Total degree of the constraint divisor for degree m:
// -m at in-points, the integer weights at out-points, 2 at marked points.
// Constant in m by the offset sum rule.
int divisor_degree(const SurfaceSpec& s, const GradingSpec& g, int m);

// Rational section num(z)/den(z) with coefficients in the algebra; den is a
// product of distinct linear factors with multiplicities (roots sorted).
struct GlobalElement {
    int degree = 0;                       // graded degree it belongs to
    std::vector<G2Element> num;           // num[d] = z^d coefficient
    std::vector<std::pair<Rat, int>> den; // (root, multiplicity)

    bool is_zero() const;
};

// Cancels shared linear factors between num and den and trims zero top
// coefficients of num.
void normalize_element(GlobalElement& x);

// Pointwise bracket; den multiplicities add, then the result is normalized.
GlobalElement global_bracket(const GlobalElement& x, const GlobalElement& y);

// Exact valuation of x at a point (order of the zero, negative for a pole).
// Throws on the zero element.
int order_at(const GlobalElement& x, const SpherePoint& p);

// Local expansion at a point: the exact series coefficients for every order
// in [lo, hi]. Orders below the pole bound of the representation are zeros.
MatrixJet expand_at(const GlobalElement& x, const SpherePoint& p, int lo, int hi);

// Linear expressions for the expansion orders -2..1 of num/den at a root of
// den, over the numerator coefficient variables (14 per z-degree, numerator
// degree numdeg). Orders below the pole bound come out as zero expressions.
std::map<int, CoeffExprs> expansion_order_exprs(const std::vector<std::pair<Rat, int>>& den,
                                                const Rat& gamma, int numdeg);

// Basis of the degree-m graded piece, cut out by the order bounds at the
// in/out points and the admissibility conditions at the marked points.
struct HomogeneousBasis {
    int degree = 0;
    std::vector<GlobalElement> elements;
    int generic_dim = 0;        // 14 * (number of in-points)
    // True when the measured dimension differs from generic_dim. This is a
    // structural property of small configurations (the first-order conditions
    // can be implied by the pole bounds), not a sampling accident; a dimension
    // differing from the structural prediction raises DegenerateConfiguration
    // instead.
    bool structural_deviation = false;
};
HomogeneousBasis homogeneous_basis(const SurfaceSpec& s, const GradingSpec& g, int m);

// Bundles a surface with a grading and caches graded bases plus the linear
// algebra needed to decompose brackets across degree windows.
class GradedModel {
public:
    GradedModel(SurfaceSpec s, GradingSpec g);

    const SurfaceSpec& surface() const { return surface_; }
    const GradingSpec& grading() const { return grading_; }

    const HomogeneousBasis& basis(int m);

    struct Component {
        int degree;
        RatVec coords; // coordinates in basis(degree).elements
    };
    struct SpreadResult {
        int spread; // minimal h with x in span of degrees base .. base+h
        std::vector<Component> components; // one valid representation of x
    };
    // Throws NotInWindow when even [base, base+cap] does not contain x.
    SpreadResult decompose(const GlobalElement& x, int base, int cap = 8);

    struct GradingCertificate {
        int m = 0, n = 0;
        int spread = 0;          // max spread over the contained bracket pairs
        int escaped = 0;         // bracket pairs outside the whole probed window
        bool round_trip = false; // sampled decompositions rebuilt their bracket
    };
    // Never throws on escaping brackets; they are counted in `escaped`.
    // Multipoint configurations genuinely produce them: the degree spaces
    // overlap, their union falls short of the order-bound container, and
    // whether a bounded spread exists at all is measured here, not assumed.
    GradingCertificate grading_check(int m, int n, int cap = 8);

    // Rank of the joint span of the bases of degrees mlo..mhi against the sum
    // of their dimensions. independent == (rank == dim_sum); adjacent spaces
    // of one-marked-point configurations genuinely overlap, so false is an
    // honest measurement, not an error.
    struct JointSpan {
        int rank = 0;
        int dim_sum = 0;
        bool independent = false;
    };
    JointSpan joint_span(int mlo, int mhi);

private:
    SurfaceSpec surface_;
    GradingSpec grading_;
    std::map<int, HomogeneousBasis> bases_;
};

} // namespace laxg2
