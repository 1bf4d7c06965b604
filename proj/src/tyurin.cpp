#include "laxg2/tyurin.hpp"

#include <utility>

#include "laxg2/constraints.hpp"
#include "laxg2/errors.hpp"

namespace laxg2 {

namespace {

constexpr int kBlockConditionTotal = 28;

std::string vec_str(const Vec3& v) {
    return "(" + rat_str(v[0]) + ", " + rat_str(v[1]) + ", " + rat_str(v[2]) + ")";
}

// Solves the residue shape equations with the gauge row alpha1^t beta1 = 0
// but WITHOUT the orthogonality rows, so shape violations and orthogonality
// violations stay distinguishable. The gauge row makes the representative
// unique whenever the shape holds at all.
std::optional<ResidueParams> residue_shape_solve(const G2Element& c, const TyurinDatum& d) {
    // Unknowns: beta01, beta02, beta1 (3), beta2 (3).
    RatMat m(16, 8);
    RatVec rhs(16, Rat(0));
    std::size_t r = 0;
    for (std::size_t i = 0; i < 3; ++i, ++r) {
        m(r, 0) = d.alpha1[i];
        rhs[r] = c.a1[i];
    }
    for (std::size_t i = 0; i < 3; ++i, ++r) {
        m(r, 1) = d.alpha2[i];
        rhs[r] = c.a2[i];
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j, ++r) {
            // alpha1_i beta2_j - beta1_i alpha2_j = A(i,j)
            m(r, 5 + j) = d.alpha1[i];
            m(r, 2 + i) = -d.alpha2[j];
            rhs[r] = c.A(i, j);
        }
    for (std::size_t i = 0; i < 3; ++i) m(r, 2 + i) = d.alpha1[i];
    ++r;

    auto sol = solve_affine(std::move(m), std::move(rhs));
    if (!sol) return std::nullopt;
    if (!sol->kernel.empty())
        throw InternalCheckFailure("residue extraction not unique despite gauge row");
    ResidueParams p;
    p.beta01 = sol->particular[0];
    p.beta02 = sol->particular[1];
    p.beta1 = vec3(sol->particular[2], sol->particular[3], sol->particular[4]);
    p.beta2 = vec3(sol->particular[5], sol->particular[6], sol->particular[7]);
    return p;
}

} // namespace

TyurinDatum::TyurinDatum(Rat gamma_, Vec3 alpha1_, Vec3 alpha2_)
    : gamma(std::move(gamma_)), alpha1(std::move(alpha1_)), alpha2(std::move(alpha2_)) {
    if (is_zero(alpha1) || is_zero(alpha2))
        throw DegenerateDatum("framing vectors must be nonzero");
    if (dot(alpha1, alpha2) != 0)
        throw DegenerateDatum("framing vectors must be orthogonal, got alpha1^t alpha2 = " +
                              rat_str(dot(alpha1, alpha2)));
    // Orthogonal nonzero rational vectors are automatically independent:
    // alpha2 = c alpha1 would give alpha1^t alpha2 = c |alpha1|^2 != 0.
}

Rat check_order_minus2(const G2Element& coeff, const TyurinDatum& d) {
    if (!is_zero(coeff.a1) || !is_zero(coeff.a2))
        throw NotAdmissible("at order -2", "vector slots must vanish");
    // A = mu * alpha1 alpha2^t; read mu off any nonzero entry of the target.
    Rat mu(0);
    bool found = false;
    for (std::size_t i = 0; i < 3 && !found; ++i)
        for (std::size_t j = 0; j < 3 && !found; ++j) {
            Rat t = d.alpha1[i] * d.alpha2[j];
            if (t != 0) {
                mu = coeff.A(i, j) / t;
                found = true;
            }
        }
    if (!found) throw InternalCheckFailure("rank-one target matrix vanished");
    RatMat want = mu * outer(d.alpha1, d.alpha2);
    if (!(coeff.A == want))
        throw NotAdmissible("at order -2", "matrix slot is not a multiple of alpha1 alpha2^t");
    return mu;
}

ResidueParams check_residue(const G2Element& coeff, const TyurinDatum& d) {
    auto p = residue_shape_solve(coeff, d);
    if (!p)
        throw NotAdmissible("at order -1",
                            "not of the shape (b01 alpha1, b02 alpha2, alpha1 beta2^t - beta1 alpha2^t)");
    Rat o1 = dot(d.alpha1, p->beta2);
    Rat o2 = dot(d.alpha2, p->beta1);
    if (o1 != 0 || o2 != 0)
        throw NotAdmissible("at order -1", "extraction vectors not orthogonal: alpha1^t beta2 = " +
                                               rat_str(o1) + ", alpha2^t beta1 = " + rat_str(o2));
    return *p;
}

EigenParams check_order_zero(const G2Element& coeff, const TyurinDatum& d) {
    Rat r1 = dot(d.alpha1, coeff.a2);
    Rat r2 = dot(d.alpha2, coeff.a1);
    if (r1 != 0 || r2 != 0)
        throw NotAdmissible("at order 0", "vector slots not orthogonal to the framing: alpha1^t a2 = " +
                                              rat_str(r1) + ", alpha2^t a1 = " + rat_str(r2));

    // Unknowns: kappa1, kappa2, lambda1, lambda2.
    RatMat m(12, 4);
    RatVec rhs(12, Rat(0));
    Vec3 Aa1 = mat_vec(coeff.A, d.alpha1);
    Vec3 Ata2 = mat_tvec(coeff.A, d.alpha2);
    Vec3 x1 = cross(coeff.a2, d.alpha2);
    Vec3 x2 = cross(coeff.a1, d.alpha1);
    for (std::size_t i = 0; i < 3; ++i) {
        m(i, 0) = d.alpha1[i];
        rhs[i] = Aa1[i];
        m(3 + i, 1) = d.alpha2[i];
        rhs[3 + i] = -Ata2[i];
        m(6 + i, 2) = d.alpha1[i];
        rhs[6 + i] = x1[i];
        m(9 + i, 3) = d.alpha2[i];
        rhs[9 + i] = x2[i];
    }
    auto sol = solve_affine(std::move(m), std::move(rhs));
    if (!sol)
        throw NotAdmissible("at order 0",
                            "framing vectors are not eigenvectors: alpha1 for A was " + vec_str(Aa1) +
                                ", alpha2 for -A^t was " + vec_str(-Ata2));
    if (!sol->kernel.empty())
        throw InternalCheckFailure("eigenvalue extraction not unique");
    EigenParams e;
    e.kappa1 = sol->particular[0];
    e.kappa2 = sol->particular[1];
    e.lambda1 = sol->particular[2];
    e.lambda2 = sol->particular[3];
    return e;
}

void check_order_one(const G2Element& coeff, const TyurinDatum& d) {
    Rat v = dot(d.alpha2, mat_vec(coeff.A, d.alpha1));
    if (v != 0)
        throw NotAdmissible("at order 1", "alpha2^t A alpha1 = " + rat_str(v) + ", expected 0");
}

AdmissibilityReport is_admissible(const MatrixJet& jet, const TyurinDatum& d) {
    AdmissibilityReport rep;
    auto record = [&rep](const std::string& name, bool ok, std::string detail) {
        rep.conditions.push_back({name, ok, std::move(detail)});
        return ok;
    };

    bool all = true;

    try {
        rep.params.mu = check_order_minus2(jet.at(-2), d);
        record("double pole shape", true, "");
    } catch (const NotAdmissible& e) {
        all = record("double pole shape", false, e.detail) && all;
    }

    std::optional<ResidueParams> shape = residue_shape_solve(jet.at(-1), d);
    if (!shape) {
        all = record("residue shape", false, "no extraction vectors reproduce the coefficient") && all;
        all = record("residue orthogonality", false, "no residue representative to test") && all;
    } else {
        record("residue shape", true, "");
        Rat o1 = dot(d.alpha1, shape->beta2);
        Rat o2 = dot(d.alpha2, shape->beta1);
        if (o1 == 0 && o2 == 0) {
            record("residue orthogonality", true, "");
            rep.params.beta01 = shape->beta01;
            rep.params.beta02 = shape->beta02;
            rep.params.beta1 = shape->beta1;
            rep.params.beta2 = shape->beta2;
        } else {
            all = record("residue orthogonality", false,
                         "alpha1^t beta2 = " + rat_str(o1) + ", alpha2^t beta1 = " + rat_str(o2)) &&
                  all;
        }
    }

    try {
        EigenParams e = check_order_zero(jet.at(0), d);
        record("eigenvalue conditions", true, "");
        rep.params.kappa1 = e.kappa1;
        rep.params.kappa2 = e.kappa2;
        rep.params.lambda1 = e.lambda1;
        rep.params.lambda2 = e.lambda2;
    } catch (const NotAdmissible& e) {
        all = record("eigenvalue conditions", false, e.detail) && all;
    }

    try {
        check_order_one(jet.at(1), d);
        record("first order vanishing", true, "");
    } catch (const NotAdmissible& e) {
        all = record("first order vanishing", false, e.detail) && all;
    }

    rep.pass = all;
    return rep;
}

AdmissibleParams extract_params(const MatrixJet& jet, const TyurinDatum& d) {
    AdmissibleParams p;
    p.mu = check_order_minus2(jet.at(-2), d);
    ResidueParams r = check_residue(jet.at(-1), d);
    p.beta01 = r.beta01;
    p.beta02 = r.beta02;
    p.beta1 = r.beta1;
    p.beta2 = r.beta2;
    EigenParams e = check_order_zero(jet.at(0), d);
    p.kappa1 = e.kappa1;
    p.kappa2 = e.kappa2;
    p.lambda1 = e.lambda1;
    p.lambda2 = e.lambda2;
    check_order_one(jet.at(1), d);
    return p;
}

std::vector<MatrixJet> admissible_jet_basis(const TyurinDatum& d, int T) {
    if (T < 1) throw ConfigError("jet truncation order must be at least 1");
    const std::size_t ncoeff = kG2Coords * std::size_t(T + 3);
    ConstraintSystem sys(ncoeff);
    auto exprs = jet_variable_exprs(-2, T, ncoeff);
    add_local_conditions(sys, exprs, d.alpha1, d.alpha2);

    auto kern = kernel_basis(sys.matrix());
    const int expected = int(ncoeff) - kBlockConditionTotal;
    if (int(kern.size()) != expected)
        throw DegenerateDatum("admissible jet space has dimension " +
                              std::to_string(kern.size()) + ", generic count is " +
                              std::to_string(expected));

    std::vector<MatrixJet> basis;
    basis.reserve(kern.size());
    for (const auto& v : kern) {
        bool coeff_zero = true;
        for (std::size_t i = 0; i < ncoeff && coeff_zero; ++i) coeff_zero = (v[i] == 0);
        if (coeff_zero) {
            // The gauge row ties every witness parameter to the coefficients,
            // so a kernel vector supported on the parameter columns is a bug.
            throw InternalCheckFailure("witness parameters not determined by coefficients");
        }
        MatrixJet j(T);
        for (int o = -2; o <= T; ++o) {
            std::array<Rat, kG2Coords> c;
            for (std::size_t k = 0; k < kG2Coords; ++k)
                c[k] = v[kG2Coords * std::size_t(o + 2) + k];
            G2Element el = from_coords(c);
            if (!el.is_zero()) j.set(o, std::move(el));
        }
        if (!is_admissible(j, d).pass)
            throw InternalCheckFailure("kernel jet failed the admissibility re-check");
        basis.push_back(std::move(j));
    }
    return basis;
}

RelationCount effective_relation_count(const TyurinDatum& d) {
    RelationCount rc;
    // Bookkeeping differences: scalar conditions per order minus witness
    // parameters introduced there.
    rc.double_pole_contracted = int(kG2Coords) - 1;     // full shape, one scale
    rc.residue_contracted = int(kG2Coords) + 2 - 8;     // shape + 2 orthogonality - 8 vector params
    rc.eigen_contracted = (2 + 6) - 2;                  // 2 orthogonality + 6 eigen scalars - 2 eigenvalues
    rc.first_order_contracted = 1;

    struct Block {
        int order;
        int* codim;
        int generic;
    };
    Block blocks[] = {
        {-2, &rc.double_pole_codim, 13},
        {-1, &rc.residue_codim, 9},
        {0, &rc.eigen_codim, 5},
        {1, &rc.first_order_codim, 1},
    };
    for (const auto& b : blocks) {
        ConstraintSystem sys(kG2Coords);
        auto exprs = jet_variable_exprs(b.order, b.order, kG2Coords);
        add_local_conditions(sys, exprs, d.alpha1, d.alpha2);
        auto kern = kernel_basis(sys.matrix());
        for (const auto& v : kern) {
            bool coeff_zero = true;
            for (std::size_t i = 0; i < kG2Coords && coeff_zero; ++i) coeff_zero = (v[i] == 0);
            if (coeff_zero)
                throw InternalCheckFailure("witness parameters not determined by coefficients");
        }
        *b.codim = int(kG2Coords) - int(kern.size());
        if (*b.codim != b.generic)
            throw DegenerateDatum("order " + std::to_string(b.order) + " block has codimension " +
                                  std::to_string(*b.codim) + ", generic value is " +
                                  std::to_string(b.generic));
    }

    if (rc.contracted_total() != kBlockConditionTotal || rc.codim_total() != kBlockConditionTotal)
        throw InternalCheckFailure("relation totals do not match the block sum");
    return rc;
}

MatrixJet random_admissible(const TyurinDatum& d, int T, std::uint64_t seed) {
    auto basis = admissible_jet_basis(d, T);
    Rng rng(seed);
    return random_admissible(basis, rng);
}

MatrixJet random_admissible(const std::vector<MatrixJet>& basis, Rng& rng) {
    if (basis.empty()) throw InternalCheckFailure("empty jet basis");
    MatrixJet acc = rng.rat() * basis[0];
    for (std::size_t i = 1; i < basis.size(); ++i) acc = acc + rng.rat() * basis[i];
    return acc;
}

ClosureCertificate closure_check(const MatrixJet& x, const MatrixJet& y, const TyurinDatum& d) {
    AdmissibleParams px = extract_params(x, d);
    AdmissibleParams py = extract_params(y, d);

    MatrixJet c = jet_commutator(x, y);
    if (c.hi < 1)
        throw OrderOutsideWindow(1); // factors must be truncated at order >= 3

    ClosureCertificate cert;
    cert.no_order_minus4 = (c.lo > -4) || c.at(-4).is_zero();
    cert.no_order_minus3 = (c.lo > -3) || c.at(-3).is_zero();

    MatrixJet head(-2, 1);
    for (int o = -2; o <= 1; ++o)
        if (!c.at(o).is_zero()) head.set(o, c.at(o));
    cert.bracket = is_admissible(head, d);

    Rat want = commutator_mu(px, py);
    if (cert.bracket.pass) {
        cert.mu_matches_formula = (cert.bracket.params.mu == want);
    } else {
        try {
            cert.mu_matches_formula = (check_order_minus2(c.at(-2), d) == want);
        } catch (const NotAdmissible&) {
            cert.mu_matches_formula = false;
        }
    }
    return cert;
}

Rat commutator_mu(const AdmissibleParams& px, const AdmissibleParams& py) {
    // Residue pairing part plus the cross terms between the double poles and
    // the order-zero eigenvalues; both contribute to the bracket's order -2.
    Rat out = 3 * (px.beta02 * py.beta01 - px.beta01 * py.beta02);
    out += dot(py.beta2, px.beta1) - dot(px.beta2, py.beta1);
    out += py.mu * (px.kappa1 + px.kappa2) - px.mu * (py.kappa1 + py.kappa2);
    return out;
}

} // namespace laxg2
