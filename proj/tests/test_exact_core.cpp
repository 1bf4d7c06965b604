#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "laxg2/linalg.hpp"
#include "laxg2/rng.hpp"

using namespace laxg2;

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rat("3/6") == make_rat(1, 2));
    CHECK(parse_rat("-7") == make_rat(-7));
    CHECK(parse_rat("0") == 0);
    CHECK(rat_str(make_rat(-4, 6)) == "-2/3");
    CHECK(rat_str(make_rat(5)) == "5");
    CHECK_THROWS_AS(parse_rat("1/0"), ConfigError);
    CHECK_THROWS_AS(parse_rat("abc"), ConfigError);
    CHECK_THROWS_AS(parse_rat(""), ConfigError);
}

TEST_CASE("floor and ceiling") {
    CHECK(rat_floor(make_rat(7, 2)) == 3);
    CHECK(rat_floor(make_rat(-7, 2)) == -4);
    CHECK(rat_ceil(make_rat(7, 2)) == 4);
    CHECK(rat_ceil(make_rat(-7, 2)) == -3);
    CHECK(rat_floor(make_rat(4)) == 4);
    CHECK(rat_ceil(make_rat(4)) == 4);
}

TEST_CASE("quadratic extension field axioms") {
    // (0 + 1*sqrt2)^2 = 2
    CHECK(QSqrt2::sqrt2() * QSqrt2::sqrt2() == QSqrt2(Rat(2)));

    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        QSqrt2 a(rng.rat(), rng.rat());
        QSqrt2 b(rng.rat(), rng.rat());
        if (b.is_zero()) continue;
        CHECK((a * b) / b == a);
        // conjugation is an automorphism
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
    }
}

TEST_CASE("rank on pinned matrices") {
    CHECK(rank_of(RatMat::identity(3)) == 3);
    CHECK(rank_of(RatMat(4, 7)) == 0);

    RatMat m(2, 2);
    m(0, 0) = 1; m(0, 1) = 2;
    m(1, 0) = 2; m(1, 1) = 4;
    CHECK(rank_of(m) == 1);
}

TEST_CASE("kernel basis on pinned matrices") {
    CHECK(kernel_basis(RatMat::identity(4)).empty());
    CHECK(kernel_basis(RatMat(2, 3)).size() == 3);

    RatMat m(1, 3);
    m(0, 0) = 1; m(0, 1) = 1;
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker)
        CHECK(v[0] + v[1] == 0); // m*v = 0 means x + y = 0
}

TEST_CASE("affine solve") {
    {
        RatMat m(1, 1);
        m(0, 0) = 1;
        auto sol = solve_affine(m, {Rat(1)});
        REQUIRE(sol.has_value());
        CHECK(sol->particular[0] == 1);
        CHECK(sol->kernel.empty());
    }
    {
        RatMat m(1, 1); // 0 * x = 1
        auto sol = solve_affine(m, {Rat(1)});
        CHECK(!sol.has_value());
    }
    {
        RatMat m(1, 2);
        m(0, 0) = 1; m(0, 1) = 1;
        auto sol = solve_affine(m, {Rat(2)});
        REQUIRE(sol.has_value());
        CHECK(sol->particular[0] + sol->particular[1] == 2);
        REQUIRE(sol->kernel.size() == 1);
        CHECK(sol->kernel[0][0] + sol->kernel[0][1] == 0);
    }
}

TEST_CASE("rank-nullity on random matrices") {
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        std::size_t rows = static_cast<std::size_t>(rng.next_long(1, 10));
        std::size_t cols = static_cast<std::size_t>(rng.next_long(1, 10));
        RatMat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rng.rat(5, 3);
        auto ker = kernel_basis(m);
        CHECK(rank_of(m) + ker.size() == cols);
        for (const auto& v : ker) {
            for (std::size_t i = 0; i < rows; ++i) {
                Rat acc(0);
                for (std::size_t j = 0; j < cols; ++j) acc += m(i, j) * v[j];
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("affine solutions verify by back-substitution") {
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
        std::size_t rows = static_cast<std::size_t>(rng.next_long(1, 8));
        std::size_t cols = static_cast<std::size_t>(rng.next_long(1, 8));
        RatMat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rng.rat(5, 3);
        // Build a consistent rhs from a known solution.
        RatVec x0(cols);
        for (auto& v : x0) v = rng.rat(5, 3);
        RatVec rhs(rows, Rat(0));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) rhs[i] += m(i, j) * x0[j];

        auto sol = solve_affine(m, rhs);
        REQUIRE(sol.has_value());
        for (std::size_t i = 0; i < rows; ++i) {
            Rat acc(0);
            for (std::size_t j = 0; j < cols; ++j)
                acc += m(i, j) * sol->particular[j];
            CHECK(acc == rhs[i]); // zero residual, not small residual
        }
    }
}

TEST_CASE("span reducer tracks rank and coordinates") {
    Rng rng(47);
    SpanReducer red(6);
    std::vector<RatVec> gens;
    for (int g = 0; g < 10; ++g) {
        RatVec v(6);
        for (auto& x : v) x = rng.rat(4, 2);
        gens.push_back(v);
        red.insert(v);
    }
    RatMat m(gens.size(), 6);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < 6; ++j) m(i, j) = gens[i][j];
    CHECK(red.rank() == rank_of(m.transpose()));

    // A random combination reduces to zero with recovering coordinates.
    RatVec target(6, Rat(0));
    RatVec want(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        want[g] = rng.rat(4, 2);
        for (std::size_t j = 0; j < 6; ++j) target[j] += want[g] * gens[g][j];
    }
    auto r = red.reduce(target);
    REQUIRE(r.in_span);
    // Coordinates need not equal `want` (dependent generators), but they
    // must reproduce the target exactly.
    RatVec rebuilt(6, Rat(0));
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t j = 0; j < 6; ++j) rebuilt[j] += r.coords[g] * gens[g][j];
    CHECK(rebuilt == target);
}
