#pragma once

#include <cstdint>
#include <random>

#include "laxg2/g2.hpp"

namespace laxg2 {

// Single deterministic random stream. All draws go through next_u64 so a
// seed fixes the entire run; bounded draws use plain modulo on purpose (the
// tiny bias is irrelevant for test-data generation, and the sequence is then
// identical on every platform, unlike std distributions).
//
// Draw order of the composite helpers:
//   rat():        numerator in [-9, 9], then denominator in [1, 4]
//   vec3():       three rat() in index order
//   traceless():  eight rat() in coordinate order c0..c7
//   element():    a1, a2, then traceless coords
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    long next_long(long lo, long hi) {
        return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rat rat(long max_num = 9, long max_den = 4) {
        long num = next_long(-max_num, max_num);
        long den = next_long(1, max_den);
        return make_rat(num, den);
    }

    // Nonzero variant; retries the same stream until a nonzero value appears.
    Rat rat_nonzero(long max_num = 9, long max_den = 4) {
        for (;;) {
            Rat r = rat(max_num, max_den);
            if (r != 0) return r;
        }
    }

    Vec3 vec3() { return {rat(), rat(), rat()}; }

    Vec3 vec3_nonzero() {
        for (;;) {
            Vec3 v = vec3();
            if (!is_zero(v)) return v;
        }
    }

    RatMat traceless() {
        std::array<Rat, kG2Coords> c;
        c.fill(Rat(0));
        for (std::size_t k = 6; k < kG2Coords; ++k) c[k] = rat();
        return from_coords(c).A;
    }

    G2Element element() {
        Vec3 a1 = vec3();
        Vec3 a2 = vec3();
        return G2Element(std::move(a1), std::move(a2), traceless());
    }

private:
    std::mt19937_64 eng_;
};

} // namespace laxg2
