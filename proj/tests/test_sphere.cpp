#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "laxg2/sphere.hpp"

#include "laxg2/errors.hpp"
#include "laxg2/rng.hpp"

using namespace laxg2;

namespace {

Vec3 e(int i) {
    Vec3 v{Rat(0), Rat(0), Rat(0)};
    v[std::size_t(i)] = 1;
    return v;
}

G2Element elem_a1(const Vec3& v) {
    G2Element x;
    x.a1 = v;
    return x;
}

TyurinDatum datum1() { return TyurinDatum(Rat(1), e(0), e(1)); }
TyurinDatum datum2() { return TyurinDatum(Rat(2), Vec3{Rat(1), Rat(2), Rat(3)}, Vec3{Rat(2), Rat(-1), Rat(0)}); }

// One in-point at 0, one out-point at infinity, one marked point.
SurfaceSpec surf111() { return SurfaceSpec({SpherePoint::finite(Rat(0))}, {SpherePoint::infinity()}, {datum1()}); }
GradingSpec grad111() {
    GradingSpec g;
    g.a = {Rat(1)};
    return g;
}

// Same marked points plus a second one.
SurfaceSpec surf112() {
    return SurfaceSpec({SpherePoint::finite(Rat(0))}, {SpherePoint::infinity()}, {datum1(), datum2()});
}

// Two in-points, out-point at infinity with weight 2, offset 1.
SurfaceSpec surf211() {
    return SurfaceSpec({SpherePoint::finite(Rat(0)), SpherePoint::finite(Rat(3))},
                       {SpherePoint::infinity()}, {datum1()});
}
GradingSpec grad211() {
    GradingSpec g;
    g.a = {Rat(2)};
    g.constant = 1;
    return g;
}

// One in-point, two out-points with the half-split offsets.
SurfaceSpec surf121() {
    return SurfaceSpec({SpherePoint::finite(Rat(0))},
                       {SpherePoint::finite(Rat(5)), SpherePoint::infinity()}, {datum1()});
}
GradingSpec grad121() {
    GradingSpec g;
    g.a = {Rat(1, 2), Rat(1, 2)};
    g.offsets = GradingSpec::Offsets::HalfSplit;
    return g;
}

} // namespace

TEST_CASE("surface validation rejects bad point layouts") {
    CHECK_THROWS_AS(SurfaceSpec({}, {SpherePoint::infinity()}, {}), ConfigError);
    CHECK_THROWS_AS(SurfaceSpec({SpherePoint::finite(Rat(0))}, {}, {}), ConfigError);
    CHECK_THROWS_AS(SurfaceSpec({SpherePoint::infinity()}, {SpherePoint::finite(Rat(0))}, {}),
                    ConfigError);
    // Marked point colliding with an in-point.
    CHECK_THROWS_AS(SurfaceSpec({SpherePoint::finite(Rat(1))}, {SpherePoint::infinity()}, {datum1()}),
                    ConfigError);
    // Duplicate out-points.
    CHECK_THROWS_AS(SurfaceSpec({SpherePoint::finite(Rat(0))},
                                {SpherePoint::infinity(), SpherePoint::infinity()}, {}),
                    ConfigError);
    CHECK(surf111().has_infinite_out());
    CHECK_FALSE(SurfaceSpec({SpherePoint::finite(Rat(0))}, {SpherePoint::finite(Rat(1))}, {})
                    .has_infinite_out());
}

TEST_CASE("grading validation enforces the weight and offset rules") {
    const auto s = surf111();

    GradingSpec g;
    CHECK_THROWS_AS(g.validate(s), InvalidGrading); // no weights
    g.a = {Rat(2)};
    CHECK_THROWS_AS(g.validate(s), InvalidGrading); // sum != 1
    g.a = {Rat(-1)};
    CHECK_THROWS_AS(g.validate(s), InvalidGrading); // nonpositive
    g.a = {Rat(1)};
    CHECK_NOTHROW(g.validate(s));
    g.constant = 1;
    CHECK_THROWS_AS(g.validate(s), InvalidGrading); // offsets must sum to 0

    // Constant offsets with two in-points need sum 1.
    const auto s2 = surf211();
    auto g2 = grad211();
    CHECK_NOTHROW(g2.validate(s2));
    g2.constant = 0;
    CHECK_THROWS_AS(g2.validate(s2), InvalidGrading);

    // Half-split offsets need two out-points with weights 1/2.
    auto gh = grad121();
    CHECK_NOTHROW(gh.validate(surf121()));
    CHECK_THROWS_AS(gh.validate(s), InvalidGrading);
    gh.a = {Rat(1), Rat(0)};
    CHECK_THROWS_AS(gh.validate(surf121()), InvalidGrading);
}

TEST_CASE("half-split offsets and weights take the pinned values") {
    const auto g = grad121();
    CHECK_EQ(g.offset(1, 0), Rat(-1, 2));
    CHECK_EQ(g.offset(1, 1), Rat(1, 2));
    CHECK_EQ(g.offset(2, 0), Rat(0));
    CHECK_EQ(g.offset(2, 1), Rat(0));
    CHECK_EQ(g.offset(-3, 0), Rat(-1, 2));
    CHECK_EQ(g.offset(-3, 1), Rat(1, 2));
    CHECK_EQ(g.offset_bound(), Rat(1, 2));

    // Weights are integers for every degree even though a_j = 1/2.
    for (int m = -4; m <= 4; ++m) {
        const Rat sum = g.weight(m, 0) + g.weight(m, 1);
        CHECK_EQ(sum, Rat(m));
        CHECK_NOTHROW(g.integer_weight(m, 0));
        CHECK_NOTHROW(g.integer_weight(m, 1));
    }
    CHECK_EQ(g.integer_weight(1, 0), 0);
    CHECK_EQ(g.integer_weight(1, 1), 1);

    // Fractional weights are rejected, not rounded.
    GradingSpec bad;
    bad.a = {Rat(1, 2), Rat(1, 2)};
    bad.constant = 0;
    CHECK_NOTHROW(bad.validate(surf121()));
    CHECK_THROWS_AS(bad.integer_weight(1, 0), InvalidGrading);

    GradingSpec gc = grad111();
    CHECK_EQ(gc.offset_bound(), Rat(0));
    GradingSpec gneg;
    gneg.a = {Rat(1)};
    gneg.constant = -2;
    CHECK_EQ(gneg.offset_bound(), Rat(2));
}

TEST_CASE("divisor degree is constant in the grading degree") {
    for (int m = -4; m <= 4; ++m) {
        CHECK_EQ(divisor_degree(surf111(), grad111(), m), 2);
        CHECK_EQ(divisor_degree(surf112(), grad111(), m), 4);
        CHECK_EQ(divisor_degree(surf211(), grad211(), m), 3);
        CHECK_EQ(divisor_degree(surf121(), grad121(), m), 2);
    }
}

TEST_CASE("section normalization cancels shared factors and trims") {
    const G2Element X = elem_a1(e(0));

    GlobalElement x;
    x.degree = 0;
    x.num = {Rat(-1) * X, X}; // (z - 1) X
    x.den = {{Rat(1), 2}};
    normalize_element(x);
    REQUIRE_EQ(x.num.size(), 1);
    CHECK_EQ(x.num[0], X);
    REQUIRE_EQ(x.den.size(), 1);
    CHECK_EQ(x.den[0].second, 1);

    GlobalElement z;
    z.num = {G2Element(), G2Element()};
    z.den = {{Rat(2), 3}};
    normalize_element(z);
    CHECK(z.is_zero());
    CHECK(z.num.empty());
    CHECK(z.den.empty());
}

TEST_CASE("global brackets multiply pointwise and add degrees") {
    const G2Element X = elem_a1(e(0));
    G2Element Y;
    Y.a2 = e(1);

    GlobalElement x;
    x.degree = -1;
    x.num = {X};
    x.den = {{Rat(1), 1}};
    GlobalElement y;
    y.degree = 2;
    y.num = {G2Element(), Y}; // z Y

    const GlobalElement b = global_bracket(x, y);
    CHECK_EQ(b.degree, 1);
    REQUIRE_EQ(b.num.size(), 2);
    CHECK(b.num[0].is_zero());
    CHECK_EQ(b.num[1], bracket(X, Y));
    REQUIRE_EQ(b.den.size(), 1);
    CHECK_EQ(b.den[0].first, Rat(1));
    CHECK_EQ(b.den[0].second, 1);

    // Bracket with itself vanishes and normalizes to the zero section.
    CHECK(global_bracket(x, x).is_zero());
}

TEST_CASE("orders at finite points and infinity are exact valuations") {
    const G2Element X = elem_a1(e(0));
    // x = (z - 2)^2 X / (z - 1)^3
    GlobalElement x;
    x.num = {Rat(4) * X, Rat(-4) * X, X};
    x.den = {{Rat(1), 3}};

    CHECK_EQ(order_at(x, SpherePoint::finite(Rat(2))), 2);
    CHECK_EQ(order_at(x, SpherePoint::finite(Rat(1))), -3);
    CHECK_EQ(order_at(x, SpherePoint::finite(Rat(0))), 0);
    CHECK_EQ(order_at(x, SpherePoint::infinity()), 1);

    GlobalElement z;
    CHECK_THROWS_AS(order_at(z, SpherePoint::infinity()), InternalCheckFailure);
}

TEST_CASE("local expansions match geometric series by hand") {
    const G2Element X = elem_a1(e(0));
    GlobalElement x; // X / (z - 1)
    x.num = {X};
    x.den = {{Rat(1), 1}};

    // At 0: -X (1 + z + z^2 + ...).
    const MatrixJet at0 = expand_at(x, SpherePoint::finite(Rat(0)), -2, 3);
    CHECK(at0.at(-2).is_zero());
    CHECK(at0.at(-1).is_zero());
    for (int n = 0; n <= 3; ++n) CHECK_EQ(at0.at(n), Rat(-1) * X);

    // At 1: a simple pole with coefficient X.
    const MatrixJet at1 = expand_at(x, SpherePoint::finite(Rat(1)), -2, 3);
    CHECK(at1.at(-2).is_zero());
    CHECK_EQ(at1.at(-1), X);
    for (int n = 0; n <= 3; ++n) CHECK(at1.at(n).is_zero());

    // At infinity (u = 1/z): X (u + u^2 + ...).
    const MatrixJet atinf = expand_at(x, SpherePoint::infinity(), -1, 3);
    CHECK(atinf.at(-1).is_zero());
    CHECK(atinf.at(0).is_zero());
    for (int n = 1; n <= 3; ++n) CHECK_EQ(atinf.at(n), X);

    // Expansion windows below the pole bound hold exact zeros.
    const MatrixJet deep = expand_at(x, SpherePoint::finite(Rat(1)), -6, -3);
    CHECK(deep.is_zero());
}

TEST_CASE("expansion of a product form agrees with jet arithmetic") {
    const G2Element X = elem_a1(e(0));
    G2Element Y;
    Y.A = outer(e(0), e(2));

    // x = X/(z-1) + z Y = (X - z Y + z^2 Y)/(z - 1).
    GlobalElement x;
    x.num = {X, Rat(-1) * Y, Y};
    x.den = {{Rat(1), 1}};

    GlobalElement y; // Y * (z - 3)
    y.num = {Rat(-3) * Y, Y};

    const GlobalElement xb = global_bracket(x, y);
    const SpherePoint p0 = SpherePoint::finite(Rat(0));
    // Both factors are holomorphic at 0, so windows starting at 0 are sharp.
    const MatrixJet jx = expand_at(x, p0, 0, 4);
    const MatrixJet jy = expand_at(y, p0, 0, 6);
    const MatrixJet direct = expand_at(xb, p0, 0, 3);
    const MatrixJet viajets = jet_commutator(jx, jy);
    for (int n = 0; n <= 3; ++n) CHECK_EQ(direct.at(n), viajets.at(n));
}

TEST_CASE("graded dimensions follow the structural prediction") {
    GradedModel m111(surf111(), grad111());
    GradedModel m112(surf112(), grad111());
    GradedModel m211(surf211(), grad211());
    GradedModel m121(surf121(), grad121());

    for (int m = -3; m <= 3; ++m) {
        const auto& b111 = m111.basis(m);
        CHECK_EQ(b111.elements.size(), 15);
        CHECK_EQ(b111.generic_dim, 14);
        CHECK(b111.structural_deviation);

        const auto& b112 = m112.basis(m);
        CHECK_EQ(b112.elements.size(), 14);
        CHECK_FALSE(b112.structural_deviation);

        const auto& b211 = m211.basis(m);
        CHECK_EQ(b211.elements.size(), 28);
        CHECK_FALSE(b211.structural_deviation);

        const auto& b121 = m121.basis(m);
        CHECK_EQ(b121.elements.size(), 15);
        CHECK(b121.structural_deviation);
    }
}

TEST_CASE("basis sections respect every order bound") {
    GradedModel model(surf211(), grad211());
    const auto& s = model.surface();
    const auto& g = model.grading();

    for (int m : {-2, 0, 1, 3}) {
        for (const auto& sec : model.basis(m).elements) {
            REQUIRE_FALSE(sec.is_zero());
            for (const auto& p : s.in_points) CHECK_GE(order_at(sec, p), m);
            for (std::size_t j = 0; j < s.out_points.size(); ++j)
                CHECK_GE(order_at(sec, s.out_points[j]), -g.integer_weight(m, j));
            for (const auto& d : s.marked) {
                CHECK_GE(order_at(sec, SpherePoint::finite(d.gamma)), -2);
                const MatrixJet local = expand_at(sec, SpherePoint::finite(d.gamma), -2, 1);
                CHECK(is_admissible(local, d).pass);
            }
        }
    }
}

TEST_CASE("decompose returns exact coordinates for scaled basis sections") {
    GradedModel model(surf112(), grad111());
    const auto& b0 = model.basis(0);

    GlobalElement x = b0.elements[3];
    for (auto& c : x.num) c = Rat(7, 2) * c;

    const auto r = model.decompose(x, 0, 2);
    CHECK_EQ(r.spread, 0);
    REQUIRE_EQ(r.components.size(), 1);
    const auto& coords = r.components[0].coords;
    REQUIRE_EQ(coords.size(), b0.elements.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        CHECK_EQ(coords[i], i == 3 ? Rat(7, 2) : Rat(0));

    // A deliberately out-of-window element: wrong order at the in-point.
    GlobalElement bad;
    bad.degree = 0;
    bad.num = {elem_a1(e(0))};
    bad.den = {{Rat(0), 6}};
    CHECK_THROWS_AS(model.decompose(bad, 0, 2), NotInWindow);
}

TEST_CASE("single-marked-point spaces overlap; two-marked-point spaces do not") {
    GradedModel m111(surf111(), grad111());
    GradedModel m112(surf112(), grad111());
    GradedModel m211(surf211(), grad211());
    GradedModel m121(surf121(), grad121());

    // Adjacent degrees share a 6-dimensional overlap for one marked point.
    const auto a111 = m111.joint_span(0, 1);
    CHECK_EQ(a111.dim_sum, 30);
    CHECK_EQ(a111.rank, 24);
    CHECK_FALSE(a111.independent);

    const auto a211 = m211.joint_span(-1, 0);
    CHECK_EQ(a211.dim_sum, 56);
    CHECK_EQ(a211.rank, 50);
    CHECK_FALSE(a211.independent);

    const auto a121 = m121.joint_span(1, 2);
    CHECK_EQ(a121.dim_sum, 30);
    CHECK_EQ(a121.rank, 24);
    CHECK_FALSE(a121.independent);

    // Two marked points: adjacent and windowed spans are jointly independent.
    const auto a112 = m112.joint_span(0, 1);
    CHECK_EQ(a112.dim_sum, 28);
    CHECK_EQ(a112.rank, 28);
    CHECK(a112.independent);
    const auto w112 = m112.joint_span(-3, 3);
    CHECK_EQ(w112.dim_sum, 98);
    CHECK_EQ(w112.rank, 98);
    CHECK(w112.independent);
}

TEST_CASE("bracket spread vanishes for single in/out configurations") {
    GradedModel m111(surf111(), grad111());
    GradedModel m112(surf112(), grad111());

    for (int k = -1; k <= 1; ++k) {
        for (int l = k; l <= 1; ++l) {
            const auto c111 = m111.grading_check(k, l);
            CHECK_EQ(c111.spread, 0);
            CHECK_EQ(c111.escaped, 0);
            CHECK(c111.round_trip);
            const auto c112 = m112.grading_check(k, l);
            CHECK_EQ(c112.spread, 0);
            CHECK_EQ(c112.escaped, 0);
            CHECK(c112.round_trip);
        }
    }
}

TEST_CASE("multipoint bracket escapes are measured, not assumed away") {
    // The degree spaces of these configurations overlap, so their union
    // falls short of the order-bound container and some basis brackets lie
    // outside every upward window. The counts below are measurements.
    GradedModel m211(surf211(), grad211());
    const auto c = m211.grading_check(0, 1, 4);
    CHECK(c.round_trip);
    CHECK_GT(c.escaped, 0);

    // The half-split offsets exist to repair exactly this: measured zero
    // escapes and zero spread for the two-out-point configuration.
    GradedModel m121(surf121(), grad121());
    const auto ch = m121.grading_check(0, 1, 4);
    CHECK(ch.round_trip);
    CHECK_EQ(ch.escaped, 0);
    CHECK_EQ(ch.spread, 0);
}

TEST_CASE("basis construction is deterministic") {
    GradedModel a(surf112(), grad111());
    GradedModel b(surf112(), grad111());
    const auto& ba = a.basis(2);
    const auto& bb = b.basis(2);
    REQUIRE_EQ(ba.elements.size(), bb.elements.size());
    for (std::size_t i = 0; i < ba.elements.size(); ++i) {
        REQUIRE_EQ(ba.elements[i].num.size(), bb.elements[i].num.size());
        for (std::size_t dcoef = 0; dcoef < ba.elements[i].num.size(); ++dcoef)
            CHECK_EQ(ba.elements[i].num[dcoef], bb.elements[i].num[dcoef]);
    }
}
