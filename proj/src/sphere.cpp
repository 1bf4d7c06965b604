#include "laxg2/sphere.hpp"

#include <algorithm>
#include <cstddef>

#include "laxg2/constraints.hpp"
#include "laxg2/errors.hpp"

namespace laxg2 {

namespace {

Rat binom(int n, int k) {
    if (k < 0 || k > n) return Rat(0);
    Rat acc(1);
    for (int i = 1; i <= k; ++i) acc = acc * Rat(n - k + i) / Rat(i);
    return acc;
}

int den_degree(const std::vector<std::pair<Rat, int>>& den) {
    int d = 0;
    for (const auto& [root, mult] : den) {
        (void)root;
        d += mult;
    }
    return d;
}

int mult_at(const std::vector<std::pair<Rat, int>>& den, const Rat& r) {
    for (const auto& [root, mult] : den)
        if (root == r) return mult;
    return 0;
}

G2Element gpoly_eval(const std::vector<G2Element>& num, const Rat& z) {
    G2Element acc;
    for (std::size_t i = num.size(); i-- > 0;) acc = z * acc + num[i];
    return acc;
}

// Exact division of a coefficient polynomial by (z - r); the caller has
// already verified the value at r vanishes.
std::vector<G2Element> gpoly_divide_linear(const std::vector<G2Element>& num, const Rat& r) {
    if (num.empty()) return {};
    std::vector<G2Element> q(num.size() - 1);
    G2Element carry;
    for (std::size_t i = num.size(); i-- > 1;) {
        carry = num[i] + r * carry;
        q[i - 1] = carry;
    }
    if (!(num[0] + r * carry).is_zero())
        throw InternalCheckFailure("linear factor does not divide the section");
    return q;
}

void trim_top(std::vector<G2Element>& num) {
    while (!num.empty() && num.back().is_zero()) num.pop_back();
}

} // namespace

SurfaceSpec::SurfaceSpec(std::vector<SpherePoint> in_points_, std::vector<SpherePoint> out_points_,
                         std::vector<TyurinDatum> marked_)
    : in_points(std::move(in_points_)), out_points(std::move(out_points_)),
      marked(std::move(marked_)) {
    if (in_points.empty()) throw ConfigError("at least one in-point is required");
    if (out_points.empty()) throw ConfigError("at least one out-point is required");
    for (const auto& p : in_points)
        if (p.at_infinity) throw ConfigError("the point at infinity may only be an out-point");

    std::vector<SpherePoint> all;
    all.insert(all.end(), in_points.begin(), in_points.end());
    all.insert(all.end(), out_points.begin(), out_points.end());
    for (const auto& d : marked) all.push_back(SpherePoint::finite(d.gamma));
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (all[i] == all[j])
                throw ConfigError("marked points must be pairwise distinct, got " + all[i].str() +
                                  " twice");
}

bool SurfaceSpec::has_infinite_out() const {
    for (const auto& p : out_points)
        if (p.at_infinity) return true;
    return false;
}

void GradingSpec::validate(const SurfaceSpec& s) const {
    if (a.size() != s.out_points.size())
        throw InvalidGrading("need one weight per out-point, got " + std::to_string(a.size()) +
                             " for " + std::to_string(s.out_points.size()));
    Rat sum(0);
    for (const auto& w : a) {
        if (w <= 0) throw InvalidGrading("out-point weights must be positive");
        sum += w;
    }
    if (sum != Rat(s.n_in()))
        throw InvalidGrading("out-point weights must sum to the number of in-points");

    const Rat target(s.n_in() - 1);
    switch (offsets) {
    case Offsets::Constant:
        if (Rat(s.n_out()) * constant != target)
            throw InvalidGrading("constant offsets must sum to one less than the in-point count");
        break;
    case Offsets::HalfSplit:
        if (s.n_out() != 2)
            throw InvalidGrading("half-split offsets need exactly two out-points");
        if (a[0] != Rat(1, 2) || a[1] != Rat(1, 2))
            throw InvalidGrading("half-split offsets need both weights equal to 1/2");
        break;
    }
}

Rat GradingSpec::offset(int m, std::size_t j) const {
    switch (offsets) {
    case Offsets::Constant:
        return constant;
    case Offsets::HalfSplit: {
        const Rat half = Rat(m) / 2;
        if (j == 0) return Rat(rat_floor(half)) - half;
        if (j == 1) return Rat(rat_ceil(half)) - half;
        throw InvalidGrading("half-split offsets index exactly two out-points");
    }
    }
    throw InternalCheckFailure("unhandled offset rule");
}

Rat GradingSpec::weight(int m, std::size_t j) const {
    if (j >= a.size()) throw InvalidGrading("out-point index out of range");
    return a[j] * m + offset(m, j);
}

Rat GradingSpec::offset_bound() const {
    switch (offsets) {
    case Offsets::Constant:
        return constant < 0 ? Rat(-constant) : constant;
    case Offsets::HalfSplit:
        return Rat(1, 2);
    }
    throw InternalCheckFailure("unhandled offset rule");
}

int GradingSpec::integer_weight(int m, std::size_t j) const {
    const Rat w = weight(m, j);
    if (!is_integer(w))
        throw InvalidGrading("weight at out-point " + std::to_string(j) + " for degree " +
                             std::to_string(m) + " is not an integer: " + rat_str(w));
    return int(rat_floor(w));
}

int divisor_degree(const SurfaceSpec& s, const GradingSpec& g, int m) {
    g.validate(s);
    long total = long(-m) * s.n_in() + 2L * s.n_marked();
    for (std::size_t j = 0; j < s.out_points.size(); ++j) total += g.integer_weight(m, j);
    return int(total);
}

bool GlobalElement::is_zero() const {
    for (const auto& c : num)
        if (!c.is_zero()) return false;
    return true;
}

void normalize_element(GlobalElement& x) {
    trim_top(x.num);
    if (x.num.empty()) {
        x.den.clear();
        return;
    }
    for (auto& [root, mult] : x.den) {
        while (mult > 0 && gpoly_eval(x.num, root).is_zero()) {
            x.num = gpoly_divide_linear(x.num, root);
            --mult;
        }
    }
    std::erase_if(x.den, [](const auto& e) { return e.second == 0; });
    std::sort(x.den.begin(), x.den.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
}

GlobalElement global_bracket(const GlobalElement& x, const GlobalElement& y) {
    GlobalElement out;
    out.degree = x.degree + y.degree;
    if (x.is_zero() || y.is_zero()) return out;

    out.num.assign(x.num.size() + y.num.size() - 1, G2Element());
    for (std::size_t i = 0; i < x.num.size(); ++i) {
        if (x.num[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.num.size(); ++j)
            out.num[i + j] = out.num[i + j] + bracket(x.num[i], y.num[j]);
    }

    std::map<Rat, int> mults;
    for (const auto& [root, mult] : x.den) mults[root] += mult;
    for (const auto& [root, mult] : y.den) mults[root] += mult;
    for (const auto& [root, mult] : mults) out.den.emplace_back(root, mult);

    normalize_element(out);
    return out;
}

int order_at(const GlobalElement& x, const SpherePoint& p) {
    if (x.is_zero()) throw InternalCheckFailure("the zero section has no order");
    std::vector<G2Element> num = x.num;
    trim_top(num);
    if (p.at_infinity) return den_degree(x.den) - int(num.size() - 1);

    int zeros = 0;
    while (gpoly_eval(num, p.z).is_zero()) {
        num = gpoly_divide_linear(num, p.z);
        ++zeros;
    }
    return zeros - mult_at(x.den, p.z);
}

MatrixJet expand_at(const GlobalElement& x, const SpherePoint& p, int lo, int hi) {
    if (lo > hi) throw EmptyWindow();
    MatrixJet jet(lo, hi);
    if (x.is_zero()) return jet;

    if (p.at_infinity) {
        // In the coordinate u = 1/z: x = u^(deg den - deg num) * numrev(u)/denrev(u)
        // with denrev(0) = 1.
        std::vector<G2Element> num = x.num;
        trim_top(num);
        const int L = int(num.size()) - 1;
        const int base = den_degree(x.den) - L;
        if (hi < base) return jet;
        Poly denrev{Rat(1)};
        for (const auto& [root, mult] : x.den)
            for (int i = 0; i < mult; ++i) denrev = poly_mul(denrev, Poly{Rat(1), -root});
        const Poly s = series_inverse(denrev, std::size_t(hi - base + 1));
        for (int n = std::max(lo, base); n <= hi; ++n) {
            G2Element coeff;
            for (int j = 0; j <= L; ++j) {
                const int si = n - base - j;
                if (si < 0 || s[std::size_t(si)] == 0) continue;
                coeff = coeff + s[std::size_t(si)] * num[std::size_t(L - j)];
            }
            jet.set(n, coeff);
        }
        return jet;
    }

    // Finite point: x = w^(-k) * num(p + w) * s(w) with w = z - p, k the
    // denominator multiplicity at p, and s the series inverse of the
    // remaining denominator factors shifted to p.
    const int k = mult_at(x.den, p.z);
    if (hi + k < 0) return jet;
    Poly rest{Rat(1)};
    for (const auto& [root, mult] : x.den) {
        if (root == p.z) continue;
        for (int i = 0; i < mult; ++i) rest = poly_mul(rest, Poly{p.z - root, Rat(1)});
    }
    const Poly s = series_inverse(rest, std::size_t(hi + k + 1));

    // Taylor coefficients of num at p, up to the highest one needed.
    const int tmax = std::min(int(x.num.size()) - 1, hi + k);
    std::vector<G2Element> taylor(std::size_t(tmax + 1));
    for (int t = 0; t <= tmax; ++t) {
        G2Element acc;
        Rat power(1); // p^(d - t) built up incrementally
        for (std::size_t d = std::size_t(t); d < x.num.size(); ++d) {
            acc = acc + (binom(int(d), t) * power) * x.num[d];
            power *= p.z;
        }
        taylor[std::size_t(t)] = acc;
    }

    for (int n = std::max(lo, -k); n <= hi; ++n) {
        G2Element coeff;
        for (int t = 0; t <= std::min(tmax, n + k); ++t) {
            const Rat& sc = s[std::size_t(n + k - t)];
            if (sc == 0) continue;
            coeff = coeff + sc * taylor[std::size_t(t)];
        }
        jet.set(n, coeff);
    }
    return jet;
}

std::map<int, CoeffExprs> expansion_order_exprs(const std::vector<std::pair<Rat, int>>& den,
                                                const Rat& gamma, int numdeg) {
    const int k = mult_at(den, gamma);
    const std::size_t ncoeff = std::size_t(14) * std::size_t(numdeg + 1);

    Poly rest{Rat(1)};
    for (const auto& [root, mult] : den) {
        if (root == gamma) continue;
        for (int i = 0; i < mult; ++i) rest = poly_mul(rest, Poly{gamma - root, Rat(1)});
    }
    const Poly sinv = series_inverse(rest, std::size_t(k + 2));
    std::vector<Rat> gp(std::size_t(numdeg + 1), Rat(1));
    for (int i = 1; i <= numdeg; ++i) gp[std::size_t(i)] = gp[std::size_t(i - 1)] * gamma;

    std::map<int, CoeffExprs> exprs;
    for (int n = -2; n <= 1; ++n) {
        // Coefficient of z^d in num contributes cf(d) to expansion order n;
        // the factor is slot-independent. Orders below -k are exact zeros.
        RatVec cf(std::size_t(numdeg + 1), Rat(0));
        if (n + k >= 0) {
            for (int d = 0; d <= numdeg; ++d) {
                Rat acc(0);
                for (int t = 0; t <= std::min(d, n + k); ++t)
                    acc += sinv[std::size_t(n + k - t)] * binom(d, t) * gp[std::size_t(d - t)];
                cf[std::size_t(d)] = acc;
            }
        }
        CoeffExprs ce;
        for (std::size_t slot = 0; slot < kG2Coords; ++slot) {
            LinExpr e(ncoeff, Rat(0));
            for (int d = 0; d <= numdeg; ++d) e[std::size_t(14 * d) + slot] = cf[std::size_t(d)];
            ce[slot] = std::move(e);
        }
        exprs.emplace(n, std::move(ce));
    }
    return exprs;
}

HomogeneousBasis homogeneous_basis(const SurfaceSpec& s, const GradingSpec& g, int m) {
    g.validate(s);

    const int N = s.n_in();
    const int K = s.n_marked();
    HomogeneousBasis out;
    out.degree = m;
    out.generic_dim = 14 * N;
    const int predicted = 14 * N + (N + 2 * K < 4 ? K : 0);
    out.structural_deviation = predicted != out.generic_dim;

    // Denominator shared by every section of this degree: allowed pole orders
    // at the finite marked points.
    std::vector<std::pair<Rat, int>> den;
    std::vector<std::pair<Rat, int>> zero_orders; // required vanishing at finite points
    for (const auto& p : s.in_points) {
        if (m < 0)
            den.emplace_back(p.z, -m);
        else if (m > 0)
            zero_orders.emplace_back(p.z, m);
    }
    int qe_inf = 0;
    for (std::size_t j = 0; j < s.out_points.size(); ++j) {
        const int qe = g.integer_weight(m, j);
        if (s.out_points[j].at_infinity) {
            qe_inf = qe;
            continue;
        }
        if (qe > 0)
            den.emplace_back(s.out_points[j].z, qe);
        else if (qe < 0)
            zero_orders.emplace_back(s.out_points[j].z, -qe);
    }
    for (const auto& d : s.marked) den.emplace_back(d.gamma, 2);
    std::sort(den.begin(), den.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });

    const int dnum = den_degree(den) + (s.has_infinite_out() ? qe_inf : 0);
    int dim = 0;
    std::vector<RatVec> kernel;
    std::size_t ncoeff = 0;
    if (dnum >= 0) {
        ncoeff = std::size_t(14) * std::size_t(dnum + 1);
        ConstraintSystem sys(ncoeff);

        // Order bounds at finite points outside the denominator support.
        for (const auto& [pz, need] : zero_orders) {
            for (int t = 0; t < need; ++t) {
                for (std::size_t slot = 0; slot < kG2Coords; ++slot) {
                    LinExpr e(ncoeff, Rat(0));
                    Rat power(1);
                    for (int d = t; d <= dnum; ++d) {
                        e[std::size_t(14 * d) + slot] = binom(d, t) * power;
                        power *= pz;
                    }
                    sys.add_row(e);
                }
            }
        }

        // Local admissibility rows at each marked point, phrased on the exact
        // series coefficients of num/den there.
        for (const auto& md : s.marked)
            add_local_conditions(sys, expansion_order_exprs(den, md.gamma, dnum), md.alpha1,
                                 md.alpha2);

        kernel = kernel_basis(sys.matrix());
        for (const auto& v : kernel) {
            bool coeff_zero = true;
            for (std::size_t i = 0; i < ncoeff; ++i)
                if (v[i] != 0) {
                    coeff_zero = false;
                    break;
                }
            if (coeff_zero)
                throw InternalCheckFailure(
                    "auxiliary parameters are not determined by the section coefficients");
        }
        dim = int(kernel.size());
    }

    if (dim != predicted)
        throw DegenerateConfiguration("degree " + std::to_string(m) + " dimension is " +
                                      std::to_string(dim) + ", structural prediction is " +
                                      std::to_string(predicted));

    for (const auto& v : kernel) {
        GlobalElement e;
        e.degree = m;
        e.num.resize(std::size_t(dnum + 1));
        for (int d = 0; d <= dnum; ++d) {
            std::array<Rat, kG2Coords> c;
            for (std::size_t slot = 0; slot < kG2Coords; ++slot) c[slot] = v[std::size_t(14 * d) + slot];
            e.num[std::size_t(d)] = from_coords(c);
        }
        e.den = den;
        normalize_element(e);
        for (const auto& d : s.marked) {
            const MatrixJet local = expand_at(e, SpherePoint::finite(d.gamma), -2, 1);
            if (!is_admissible(local, d).pass)
                throw InternalCheckFailure("basis section fails the marked-point re-check");
        }
        out.elements.push_back(std::move(e));
    }
    return out;
}

namespace {

// Common-denominator lift: every section in a working set is rewritten over
// the per-root maximum multiplicity so span questions become plain linear
// algebra on numerator coordinates. Multiplication only; no division.
struct LiftContext {
    std::map<Rat, int> cd;
    int degcd = 0;
    int maxdeg = 0;
    std::size_t dim = 14;
};

LiftContext build_lift(const std::vector<const GlobalElement*>& elems) {
    LiftContext ctx;
    for (const auto* e : elems) {
        if (e->is_zero()) continue;
        for (const auto& [root, mult] : e->den) {
            int& slot = ctx.cd[root];
            slot = std::max(slot, mult);
        }
    }
    for (const auto& [root, mult] : ctx.cd) {
        (void)root;
        ctx.degcd += mult;
    }
    for (const auto* e : elems) {
        if (e->is_zero()) continue;
        const int lifted = int(e->num.size()) - 1 + ctx.degcd - den_degree(e->den);
        ctx.maxdeg = std::max(ctx.maxdeg, lifted);
    }
    ctx.dim = std::size_t(14) * std::size_t(ctx.maxdeg + 1);
    return ctx;
}

RatVec lift_into(const LiftContext& ctx, const GlobalElement& e) {
    RatVec v(ctx.dim, Rat(0));
    if (e.is_zero()) return v;
    Poly extra{Rat(1)};
    for (const auto& [root, mult] : ctx.cd) {
        const int have = mult_at(e.den, root);
        for (int i = have; i < mult; ++i) extra = poly_mul(extra, Poly{-root, Rat(1)});
    }
    for (std::size_t t = 0; t < e.num.size(); ++t) {
        if (e.num[t].is_zero()) continue;
        const auto coords = to_coords(e.num[t]);
        for (std::size_t j = 0; j < extra.size(); ++j) {
            if (extra[j] == 0) continue;
            const std::size_t off = 14 * (t + j);
            for (std::size_t slot = 0; slot < kG2Coords; ++slot)
                v[off + slot] += extra[j] * coords[slot];
        }
    }
    return v;
}

} // namespace

GradedModel::GradedModel(SurfaceSpec s, GradingSpec g)
    : surface_(std::move(s)), grading_(std::move(g)) {
    grading_.validate(surface_);
}

const HomogeneousBasis& GradedModel::basis(int m) {
    auto it = bases_.find(m);
    if (it == bases_.end())
        it = bases_.emplace(m, homogeneous_basis(surface_, grading_, m)).first;
    return it->second;
}

GradedModel::SpreadResult GradedModel::decompose(const GlobalElement& x, int base, int cap) {
    std::vector<const GlobalElement*> working{&x};
    for (int h = 0; h <= cap; ++h)
        for (const auto& e : basis(base + h).elements) working.push_back(&e);
    const LiftContext ctx = build_lift(working);
    const RatVec vx = lift_into(ctx, x);

    SpanReducer red(ctx.dim);
    for (int h = 0; h <= cap; ++h) {
        for (const auto& e : basis(base + h).elements) red.insert(lift_into(ctx, e));
        const auto r = red.reduce(vx);
        if (!r.in_span) continue;

        SpreadResult out;
        out.spread = h;
        std::size_t pos = 0;
        for (int hh = 0; hh <= h; ++hh) {
            const auto& b = basis(base + hh);
            Component c;
            c.degree = base + hh;
            c.coords.assign(b.elements.size(), Rat(0));
            for (std::size_t i = 0; i < b.elements.size(); ++i) c.coords[i] = r.coords[pos + i];
            pos += b.elements.size();
            out.components.push_back(std::move(c));
        }
        return out;
    }
    throw NotInWindow("element does not lie in the span of degrees " + std::to_string(base) +
                      " .. " + std::to_string(base + cap));
}

GradedModel::GradingCertificate GradedModel::grading_check(int m, int n, int cap) {
    const int base = m + n;
    std::vector<GlobalElement> brackets;
    {
        const auto& bx = basis(m);
        const auto& by = basis(n);
        for (std::size_t i = 0; i < bx.elements.size(); ++i) {
            // Brackets are antisymmetric, so equal degrees only need i < j.
            const std::size_t jstart = (m == n) ? i + 1 : 0;
            for (std::size_t j = jstart; j < by.elements.size(); ++j)
                brackets.push_back(global_bracket(bx.elements[i], by.elements[j]));
        }
    }

    GradingCertificate cert;
    cert.m = m;
    cert.n = n;
    cert.round_trip = true;
    if (brackets.empty()) return cert;

    std::vector<const GlobalElement*> working;
    for (const auto& b : brackets) working.push_back(&b);
    for (int h = 0; h <= cap; ++h)
        for (const auto& e : basis(base + h).elements) working.push_back(&e);
    const LiftContext ctx = build_lift(working);

    std::vector<RatVec> lifted;
    lifted.reserve(brackets.size());
    for (const auto& b : brackets) lifted.push_back(lift_into(ctx, b));

    SpanReducer red(ctx.dim);
    std::vector<RatVec> gens; // lifted generators, insertion order
    std::vector<std::size_t> pending(brackets.size());
    for (std::size_t i = 0; i < pending.size(); ++i) pending[i] = i;

    std::size_t sampled = 0;
    for (int h = 0; h <= cap && !pending.empty(); ++h) {
        for (const auto& e : basis(base + h).elements) {
            gens.push_back(lift_into(ctx, e));
            red.insert(gens.back());
        }
        std::vector<std::size_t> still;
        for (const std::size_t idx : pending) {
            const auto r = red.reduce(lifted[idx]);
            if (!r.in_span) {
                still.push_back(idx);
                continue;
            }
            cert.spread = std::max(cert.spread, h);
            if (sampled < 5) {
                // Rebuild the bracket from the reported coordinates; the
                // exactness of reduce() gets spot-checked here, not trusted.
                RatVec rebuilt(ctx.dim, Rat(0));
                for (std::size_t gi = 0; gi < r.coords.size(); ++gi) {
                    if (r.coords[gi] == 0) continue;
                    for (std::size_t c = 0; c < ctx.dim; ++c)
                        rebuilt[c] += r.coords[gi] * gens[gi][c];
                }
                if (rebuilt != lifted[idx]) cert.round_trip = false;
                ++sampled;
            }
        }
        pending = std::move(still);
    }
    cert.escaped = int(pending.size());
    return cert;
}

GradedModel::JointSpan GradedModel::joint_span(int mlo, int mhi) {
    std::vector<const GlobalElement*> working;
    for (int m = mlo; m <= mhi; ++m)
        for (const auto& e : basis(m).elements) working.push_back(&e);
    const LiftContext ctx = build_lift(working);

    SpanReducer red(ctx.dim);
    for (const auto* e : working) red.insert(lift_into(ctx, *e));

    JointSpan out;
    out.rank = int(red.rank());
    out.dim_sum = int(working.size());
    out.independent = out.rank == out.dim_sum;
    return out;
}

} // namespace laxg2
