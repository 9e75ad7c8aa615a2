#include <doctest.h>

#include <limits>

#include "ratknot/contfrac.hpp"
#include "reference.hpp"

using namespace ratknot;

namespace {

ContinuedFraction cf(std::vector<Int> t) { return ContinuedFraction(std::move(t)); }

}  // namespace

TEST_CASE("fraction normalization") {
    CHECK(Fraction(6, 4) == Fraction(3, 2));
    CHECK(Fraction(3, -2).num() == -3);
    CHECK(Fraction(3, -2).den() == 2);
    CHECK(Fraction(0, -7) == Fraction(0, 1));
    CHECK(Fraction(-5, 0) == Fraction::infinity());
    CHECK(Fraction(5, 0).num() == 1);
    CHECK_THROWS_AS(Fraction(0, 0), PreconditionError);
    CHECK(to_string(Fraction::infinity()) == "inf");
    CHECK(to_string(Fraction(-30, 13)) == "-30/13");
}

TEST_CASE("vector validity") {
    CHECK_THROWS_AS(cf({}), InvalidContinuedFraction);
    CHECK_THROWS_AS(cf({2, 0, 3}), InvalidContinuedFraction);
    CHECK_NOTHROW(cf({0, 2}));
    CHECK(cf({3}).is_canonical());
    CHECK(cf({-2, -1, -2}).is_canonical());
    CHECK_FALSE(cf({2, -1, 2}).is_canonical());
    CHECK_FALSE(cf({2, 2}).is_canonical());
    CHECK_FALSE(cf({0, 2, 2}).is_canonical());
    CHECK(ContinuedFraction::formal({1, 0}).terms().size() == 2);
    CHECK_FALSE(ContinuedFraction::formal({1, 0}).is_standard());
}

TEST_CASE("eval examples") {
    CHECK(eval(cf({2, 3, 4})) == Fraction(30, 13));
    CHECK(eval(cf({4, 3, 2})) == Fraction(30, 7));
    CHECK(eval(cf({0})) == Fraction(0, 1));
    CHECK(eval(cf({2, -2, 3})) == Fraction(7, 5));
    // an intermediate 0 makes the next reciprocal formal
    CHECK(eval(cf({1, -1})) == Fraction(0, 1));
    CHECK(eval(cf({0, 1, -1})) == Fraction::infinity());
    CHECK(eval(ContinuedFraction::formal({1, 0})) == Fraction::infinity());
}

TEST_CASE("matrix examples") {
    CHECK(matrix(cf({3})) == TangleMatrix{3, 1, 1, 0});
    CHECK(matrix(cf({1})) == TangleMatrix{1, 1, 1, 0});
    CHECK(matrix(cf({2, 3, 4})) == TangleMatrix{30, 7, 13, 3});
    CHECK(matrix(cf({2, 3, 4})).determinant() == -1);
    CHECK(TangleMatrix::identity().determinant() == 1);
}

TEST_CASE("expand examples") {
    CHECK(expand(Fraction(30, 13)) == cf({2, 3, 4}));
    CHECK(expand(Fraction(3, 2)) == cf({1, 1, 1}));
    CHECK(expand(Fraction(-3, 1)) == cf({-3}));
    CHECK(expand(Fraction(0, 1)) == cf({0}));
    CHECK(expand(Fraction(2, 3)) == cf({0, 1, 2}));
    CHECK(expand(Fraction(-30, 13)) == cf({-2, -3, -4}));
    CHECK_THROWS_AS(expand(Fraction::infinity()), InfinityNotExpandable);
}

TEST_CASE("palindrome examples") {
    CHECK(palindrome(cf({2, 3, 4})) == cf({4, 3, 2}));
    CHECK(palindrome(cf({5})) == cf({5}));
    CHECK(palindrome(cf({2, 1, 2})) == cf({2, 1, 2}));
    CHECK(palindrome(cf({0, 2})).terms().back() == 0);
}

TEST_CASE("parity examples") {
    CHECK(to_string(parity(Fraction(2, 3))) == "e/o");
    CHECK(to_string(parity(Fraction::infinity())) == "o/e");
    CHECK(to_string(parity(Fraction(8, 3))) == "e/o");
    CHECK(to_string(parity(Fraction(0, 1))) == "e/o");
    CHECK(to_string(parity(Fraction(3, 1))) == "o/o");
}

TEST_CASE("overflow is reported, not wrapped") {
    const Int big = std::numeric_limits<Int>::max() / 2;
    CHECK_THROWS_AS(eval(cf({big, 1, big, 1, big})), OverflowError);
    CHECK_THROWS_AS(matrix(cf({big, big, big})), OverflowError);
}

TEST_CASE("random vectors: recursive, matrix and reference evaluation agree") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 4000; ++trial) {
        const auto terms = ref::random_vector(rng, 9, 12);
        const ContinuedFraction v(terms);
        const Fraction f = eval(v);
        const ref::Q expected = ref::eval(terms);
        INFO(to_string(v));
        CHECK(static_cast<ref::Big>(f.num()) == expected.p);
        CHECK(static_cast<ref::Big>(f.den()) == expected.q);
        CHECK(eval_by_matrix(v) == f);
        const TangleMatrix m = matrix(v);
        CHECK(matrix(palindrome(v)) == m.transpose());
        CHECK(m.determinant() == (terms.size() % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("expand is a section of eval and lands on canonical vectors") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<Int> num(-5000, 5000), den(1, 5000);
    for (int trial = 0; trial < 4000; ++trial) {
        const Fraction f(num(rng), den(rng));
        const ContinuedFraction e = expand(f);
        INFO(to_string(f));
        CHECK(eval(e) == f);
        CHECK(e.size() % 2 == 1);
        if (f.num() != 0 && (f.num() < 0 ? -f.num() : f.num()) >= f.den()) CHECK(e.is_canonical());
    }
}
