#include <doctest.h>

#include "ratknot/classify.hpp"
#include "ratknot/tangle.hpp"
#include "reference.hpp"

using namespace ratknot;

TEST_CASE("twist, inversion, mirror and rotation examples") {
    CHECK(add_twist(Fraction(3, 2), 1) == Fraction(5, 2));
    CHECK(add_twist(Fraction(7, 5), 0) == Fraction(7, 5));
    CHECK(add_twist(Fraction(2, 1), -3) == Fraction(-1, 1));
    CHECK_THROWS_AS(add_twist(Fraction::infinity(), 1), InfinityInput);

    CHECK(invert(Fraction(3, 2)) == Fraction(2, 3));
    CHECK(invert(Fraction(0, 1)) == Fraction::infinity());
    CHECK(invert(Fraction(-3, 1)) == Fraction(-1, 3));

    CHECK(mirror(Fraction(30, 13)) == Fraction(-30, 13));
    CHECK(mirror(Fraction(0, 1)) == Fraction(0, 1));
    CHECK(mirror(Fraction::infinity()) == Fraction::infinity());

    CHECK(rotate(Fraction(3, 1)) == Fraction(-1, 3));
    CHECK(rotate(Fraction::infinity()) == Fraction(0, 1));
    CHECK(rotate(Fraction(30, 13)) == Fraction(-13, 30));
}

TEST_CASE("bottom twists and their reduction") {
    CHECK(bottom_twist(Fraction(3, 2), 1) == Fraction(3, 5));
    CHECK(bottom_twist(Fraction(8, 3), 0) == Fraction(8, 3));
    CHECK(bottom_twist(Fraction(8, 3), 2) == Fraction(8, 19));

    CHECK(reduce_twists(Fraction(3, 5)) == TwistReduction{Fraction(3, 2), 1});
    CHECK(reduce_twists(Fraction(30, 13)) == TwistReduction{Fraction(30, 13), 0});
    CHECK(reduce_twists(Fraction(8, 19)) == TwistReduction{Fraction(8, 3), 2});
    CHECK_THROWS_AS(reduce_twists(Fraction::infinity()), InfinityInput);
    CHECK_THROWS_AS(reduce_twists(Fraction(0, 1)), ZeroNumerator);
}

TEST_CASE("special cut examples") {
    const auto s = special_cut(ContinuedFraction({-3}));
    CHECK(s == ContinuedFraction({1, 2}));
    CHECK(eval(s) == Fraction(3, 2));
    CHECK(special_cut(ContinuedFraction({3})) == ContinuedFraction({-1, -2}));
    CHECK(eval(special_cut(ContinuedFraction({3}))) == Fraction(-3, 2));
    const auto t = special_cut(ContinuedFraction({2, 3, 4}));
    CHECK(t == ContinuedFraction({-1, -1, -3, -4}));
    CHECK(eval(t) == Fraction(-30, 17));  // -17 = 13 mod 30
    CHECK_THROWS_AS(special_cut(ContinuedFraction({2, -3, 4})), NotCanonical);
    CHECK_THROWS_AS(special_cut(ContinuedFraction({0, 3})), NotCanonical);
    // one sign is enough; length may be even
    CHECK(eval(special_cut(ContinuedFraction({2, 3}))) == Fraction(-7, 4));
}

TEST_CASE("operation laws on random fractions") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> num(-999, 999), den(0, 999);
    for (int trial = 0; trial < 5000; ++trial) {
        const Int n = num(rng), d = den(rng);
        if (n == 0 && d == 0) continue;
        const Fraction f(n, d);
        INFO(to_string(f));
        CHECK(invert(invert(f)) == f);
        CHECK(mirror(mirror(f)) == f);
        CHECK(rotate(rotate(f)) == f);
        if (f.is_infinite() || f.is_zero()) continue;
        for (Int k = -3; k <= 3; ++k) {
            CHECK(add_twist(add_twist(f, k), -k) == f);
            CHECK(bottom_twist(bottom_twist(f, k), -k) == f);
        }
        const TwistReduction r = reduce_twists(f);
        CHECK(bottom_twist(r.reduced, r.twists) == f);
        const Int p = f.num() < 0 ? -f.num() : f.num();
        if (p == 1) {
            CHECK(r.reduced == Fraction::infinity());
            continue;
        }
        CHECK(r.reduced.den() < p);
        CHECK(unoriented_equivalent(f, r.reduced));
    }
}

TEST_CASE("special cut keeps the numerator and the denominator class") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> len(0, 3), term(1, 6);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<Int> terms(static_cast<std::size_t>(2 * len(rng) + 1));
        const Int sign = trial % 2 == 0 ? 1 : -1;
        for (auto& t : terms) t = sign * term(rng);
        const ContinuedFraction v(terms);
        const Fraction f = eval(v);
        const auto s = special_cut(v);
        const ref::Q g = ref::eval(std::vector<std::int64_t>(s.terms().begin(), s.terms().end()));
        INFO(to_string(v));
        if (g.q == 0) {
            // only the unknot [+-1] reopens to the formal 1/0
            CHECK(terms.size() == 1);
            CHECK((terms[0] == 1 || terms[0] == -1));
            continue;
        }
        CHECK(ref::babs(g.p) == (f.num() < 0 ? -f.num() : f.num()));
        CHECK(ref::unoriented(f.num(), f.den(), static_cast<std::int64_t>(g.p), static_cast<std::int64_t>(g.q)));
    }
}
