#include "laxg2/cocycle.hpp"

#include <algorithm>
#include <functional>

#include "laxg2/constraints.hpp"
#include "laxg2/errors.hpp"

namespace laxg2 {

namespace {

int mult_of(const std::vector<std::pair<Rat, int>>& den, const Rat& r) {
    for (const auto& [root, mult] : den)
        if (root == r) return mult;
    return 0;
}

Rat dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Direct verification of the 1-form conditions at one marked point, written
// against the local expansion rather than the constraint rows that produced
// it, so solver bugs cannot certify themselves.
void verify_omega_at(const MatrixJet& local, const TyurinDatum& d) {
    if (!local.at(-2).is_zero())
        throw InternalCheckFailure("1-form has a double pole at a marked point");

    const G2Element& res = local.at(-1);
    const Rat n1 = dot3(d.alpha1, d.alpha1);
    const Rat n2 = dot3(d.alpha2, d.alpha2);

    // Residue shape with the gauge row alpha1 . beta1 = 0:
    //   beta2 = A^t alpha1 / |alpha1|^2,  beta1 = (alpha1 (beta2 . alpha2) - A alpha2) / |alpha2|^2
    const Vec3 beta2 = (Rat(1) / n1) * mat_tvec(res.A, d.alpha1);
    const Vec3 beta1 = (Rat(1) / n2) * (dot3(beta2, d.alpha2) * d.alpha1 - mat_vec(res.A, d.alpha2));
    if (!(res.A == outer(d.alpha1, beta2) - outer(beta1, d.alpha2)))
        throw InternalCheckFailure("1-form residue is not of marked shape");
    if (dot3(d.alpha1, beta2) != 1 || dot3(d.alpha2, beta1) != 1)
        throw InternalCheckFailure("1-form residue pairings are not normalized");
    // Vector slots stay multiples of the marked directions.
    const Rat b01 = dot3(d.alpha1, res.a1) / n1;
    const Rat b02 = dot3(d.alpha2, res.a2) / n2;
    if (!( (res.a1 - b01 * d.alpha1)[0] == 0 && (res.a1 - b01 * d.alpha1)[1] == 0 &&
           (res.a1 - b01 * d.alpha1)[2] == 0 ))
        throw InternalCheckFailure("1-form residue first vector slot is off-direction");
    if (!( (res.a2 - b02 * d.alpha2)[0] == 0 && (res.a2 - b02 * d.alpha2)[1] == 0 &&
           (res.a2 - b02 * d.alpha2)[2] == 0 ))
        throw InternalCheckFailure("1-form residue second vector slot is off-direction");

    const G2Element& c0 = local.at(0);
    if (dot3(d.alpha1, c0.a2) != 0 || dot3(d.alpha2, c0.a1) != 0)
        throw InternalCheckFailure("1-form constant term fails the vector conditions");
    const Rat k1 = dot3(d.alpha1, mat_vec(c0.A, d.alpha1)) / n1;
    const Rat k2 = -dot3(d.alpha2, mat_tvec(c0.A, d.alpha2)) / n2;
    const Vec3 r1 = mat_vec(c0.A, d.alpha1) - k1 * d.alpha1;
    const Vec3 r2 = mat_tvec(c0.A, d.alpha2) + k2 * d.alpha2;
    if (r1[0] != 0 || r1[1] != 0 || r1[2] != 0 || r2[0] != 0 || r2[1] != 0 || r2[2] != 0)
        throw InternalCheckFailure("1-form constant term fails the eigenvalue conditions");

    if (dot3(d.alpha2, mat_vec(local.at(1).A, d.alpha1)) != 0)
        throw InternalCheckFailure("1-form linear term fails the first-order condition");
}

} // namespace

OmegaForm build_omega(const SurfaceSpec& s, int max_total_pole) {
    if (s.marked.empty())
        throw ConfigError("the corrective 1-form needs at least one marked point");

    // Budget points: out-points first, so minimal solutions put their poles
    // at the out side; in-point poles only appear when nothing else works.
    std::vector<SpherePoint> pts = s.out_points;
    pts.insert(pts.end(), s.in_points.begin(), s.in_points.end());
    const int nparts = int(pts.size());

    for (int total = 0; total <= max_total_pole; ++total) {
        std::vector<int> alloc(std::size_t(nparts), 0);
        std::vector<std::vector<int>> all;
        std::function<void(int, int)> rec = [&](int idx, int remaining) {
            if (idx == nparts - 1) {
                alloc[std::size_t(idx)] = remaining;
                all.push_back(alloc);
                return;
            }
            for (int v = remaining; v >= 0; --v) {
                alloc[std::size_t(idx)] = v;
                rec(idx + 1, remaining - v);
            }
        };
        rec(0, total);

        for (const auto& budget : all) {
            // Denominator of W: finite budget points by their allowance, each
            // marked point simply.
            std::vector<std::pair<Rat, int>> den;
            int inf_allow = -1;
            for (int i = 0; i < nparts; ++i) {
                if (pts[std::size_t(i)].at_infinity) {
                    inf_allow = budget[std::size_t(i)];
                    continue;
                }
                if (budget[std::size_t(i)] > 0) den.emplace_back(pts[std::size_t(i)].z, budget[std::size_t(i)]);
            }
            for (const auto& d : s.marked) den.emplace_back(d.gamma, 1);
            std::sort(den.begin(), den.end(),
                      [](const auto& l, const auto& r) { return l.first < r.first; });

            // ord of the form at infinity is ord(W) - 2; an absent infinity
            // point must stay holomorphic.
            int degnum = 0;
            for (const auto& [root, mult] : den) {
                (void)root;
                degnum += mult;
            }
            degnum += -2 + std::max(inf_allow, 0);
            if (degnum < 0) continue;

            const std::size_t ncoeff = std::size_t(14) * std::size_t(degnum + 1);
            ConstraintSystem sys(ncoeff);
            LocalConditionOptions opts;
            opts.affine_orthogonality = true;
            for (const auto& d : s.marked) {
                auto exprs = expansion_order_exprs(den, d.gamma, degnum);
                exprs.erase(-2); // simple pole by construction, no scale slot
                add_local_conditions(sys, exprs, d.alpha1, d.alpha2, opts);
            }

            const auto sol = solve_affine(sys.matrix(), sys.rhs());
            if (!sol) continue;

            OmegaForm out;
            out.w.degree = 0;
            out.w.num.resize(std::size_t(degnum + 1));
            for (int deg = 0; deg <= degnum; ++deg) {
                std::array<Rat, kG2Coords> c;
                for (std::size_t slot = 0; slot < kG2Coords; ++slot)
                    c[slot] = sol->particular[std::size_t(14 * deg) + slot];
                out.w.num[std::size_t(deg)] = from_coords(c);
            }
            out.w.den = den;
            normalize_element(out.w);
            if (out.w.is_zero())
                throw InternalCheckFailure("1-form solver returned the zero form");

            for (const auto& d : s.marked)
                verify_omega_at(expand_at(out.w, SpherePoint::finite(d.gamma), -2, 1), d);

            for (const auto& p : s.in_points) out.in_order.push_back(order_at(out.w, p));
            for (const auto& p : s.out_points) {
                const int o = order_at(out.w, p);
                out.out_pole.push_back(p.at_infinity ? 2 - o : -o);
            }
            return out;
        }
    }
    throw NoSolution("no 1-form satisfies the marked-point conditions within pole budget " +
                     std::to_string(max_total_pole));
}

ResidueCertificate residue_trace_LdL(const MatrixJet& x, const MatrixJet& y, const TyurinDatum& d) {
    if (x.hi < 3 || y.hi < 3) throw OrderOutsideWindow(-1);

    ResidueCertificate cert;
    const ScalarJet t = trace_form_jet(x, jet_derivative(y));
    cert.residue = t.at(-1);

    cert.sub_orders_vanish = true;
    for (int n = t.lo; n <= -2; ++n)
        if (t.at(n) != 0) cert.sub_orders_vanish = false;

    cert.intermediate_traces_vanish = trace_form(x.at(-1), y.at(-1)) == 0 &&
                                      trace_form(x.at(0), y.at(-2)) == 0 &&
                                      trace_form(x.at(-2), y.at(0)) == 0;

    const AdmissibleParams pc = extract_params(jet_commutator(x, y), d);
    cert.expected = 2 * (pc.kappa1 + pc.kappa2);
    cert.matches = cert.residue == cert.expected;
    return cert;
}

ResidueCertificate residue_trace_Lomega(const MatrixJet& x, const MatrixJet& omega_local,
                                        const TyurinDatum& d) {
    if (x.hi < 1 || omega_local.hi < 1 || omega_local.lo > -1) throw OrderOutsideWindow(-1);

    ResidueCertificate cert;
    const ScalarJet t = trace_form_jet(x, omega_local);
    cert.residue = t.at(-1);

    cert.sub_orders_vanish = true;
    for (int n = t.lo; n <= -2; ++n)
        if (t.at(n) != 0) cert.sub_orders_vanish = false;
    cert.intermediate_traces_vanish = trace_form(x.at(-2), omega_local.at(-1)) == 0;

    const AdmissibleParams p = extract_params(x, d);
    cert.expected = 2 * (p.kappa1 + p.kappa2);
    cert.matches = cert.residue == cert.expected;
    return cert;
}

Rat cocycle_value(const SurfaceSpec& s, const OmegaForm& omega, const GlobalElement& x,
                  const GlobalElement& y, bool certify) {
    if (x.is_zero() || y.is_zero()) return Rat(0);
    const GlobalElement br = global_bracket(x, y);

    if (certify) {
        for (const auto& d : s.marked) {
            const SpherePoint g = SpherePoint::finite(d.gamma);
            const ScalarJet t1 = trace_form_jet(expand_at(x, g, -2, 4),
                                                jet_derivative(expand_at(y, g, -2, 5)));
            ScalarJet t2(-3, 2);
            if (!br.is_zero())
                t2 = trace_form_jet(expand_at(omega.w, g, -1, 4), expand_at(br, g, -2, 3));
            for (int n = -5; n <= -1; ++n) {
                Rat v = t1.at(n);
                if (n >= t2.lo) v -= t2.at(n);
                if (v != 0)
                    throw HolomorphyViolation("pairing integrand has order " + std::to_string(n) +
                                              " at marked point " + rat_str(d.gamma));
            }
        }
    }

    Rat eta(0);
    for (const auto& p : s.in_points) {
        const int hx = mult_of(x.den, p.z);
        const int hy = mult_of(y.den, p.z);
        const ScalarJet t = trace_form_jet(expand_at(x, p, -hx, hy + 1),
                                           jet_derivative(expand_at(y, p, -hy, hx + 2)));
        if (t.lo <= -1) eta += t.at(-1);

        if (br.is_zero()) continue;
        const int hw = mult_of(omega.w.den, p.z);
        const int hb = mult_of(br.den, p.z);
        if (hw + hb == 0) continue; // both factors holomorphic, no residue
        const ScalarJet tw =
            trace_form_jet(expand_at(omega.w, p, -hw, hb), expand_at(br, p, -hb, hw));
        if (tw.lo <= -1) eta -= tw.at(-1);
    }
    return eta;
}

std::pair<int, int> locality_window(const SurfaceSpec& s, const GradingSpec& g,
                                    const OmegaForm& omega) {
    g.validate(s);
    if (omega.in_order.size() != s.in_points.size() ||
        omega.out_pole.size() != s.out_points.size())
        throw ConfigError("1-form order data does not match the surface");

    int min_in = -1;
    for (const int o : omega.in_order) min_in = std::min(min_in, o);
    const int upper = -1 - min_in;

    // At out-point j both residues of the integrand vanish once the pole
    // budget a_j (k + l) + 2 * offset_bound drops to -max(1, pole of the
    // form); the window's lower edge is one above the worst such degree sum.
    const Rat bound = g.offset_bound();
    long worst = 0;
    for (std::size_t j = 0; j < g.a.size(); ++j) {
        const Rat cut = (Rat(-std::max(1, omega.out_pole[j])) - 2 * bound) / g.a[j];
        const long c = rat_floor(cut);
        if (j == 0 || c < worst) worst = c;
    }
    return {int(worst) + 1, upper};
}

} // namespace laxg2
