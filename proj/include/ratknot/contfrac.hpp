#pragma once

// Exact fractions (with the formal value 1/0), continued fractions with
// numerators 1, their generating-matrix evaluation and canonical expansion.

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "ratknot/checked.hpp"

namespace ratknot {

/// Reduced rational p/q with q >= 0; 1/0 is the formal infinity.
class Fraction {
public:
    /// 0/1.
    constexpr Fraction() = default;

    /// Reduces and moves the sign to the numerator. Any p/0 with p != 0
    /// becomes 1/0; 0/0 is rejected.
    Fraction(Int num, Int den);

    static Fraction integer(Int n) { return Fraction(n, 1); }
    static Fraction infinity() { return Fraction(1, 0); }

    Int num() const noexcept { return num_; }
    Int den() const noexcept { return den_; }
    bool is_infinite() const noexcept { return den_ == 0; }
    bool is_zero() const noexcept { return num_ == 0; }

    friend bool operator==(const Fraction&, const Fraction&) = default;

    /// Orders by (num, den); used for deterministic containers only.
    friend auto operator<=>(const Fraction& a, const Fraction& b) {
        if (auto c = a.num_ <=> b.num_; c != 0) return c;
        return a.den_ <=> b.den_;
    }

private:
    Int num_ = 0;
    Int den_ = 1;
};

/// `p/q`, or `inf` for 1/0.
std::string to_string(const Fraction& f);

/// Term vector [a1, ..., an] of a continued fraction a1 + 1/(a2 + ... + 1/an).
class ContinuedFraction {
public:
    /// Standard vector: n >= 1 and a_i != 0 for i >= 2.
    explicit ContinuedFraction(std::vector<Int> terms);

    /// Any non-empty vector; zero terms are evaluated through 1/0.
    static ContinuedFraction formal(std::vector<Int> terms);

    std::span<const Int> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    Int operator[](std::size_t i) const { return terms_[i]; }
    Int front() const { return terms_.front(); }
    Int back() const { return terms_.back(); }

    /// No zero term after the first.
    bool is_standard() const noexcept;

    /// All terms share one sign, a1 != 0 and the length is odd; [0] counts
    /// as canonical (the zero tangle).
    bool is_canonical() const noexcept;

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

private:
    struct Unchecked {};
    ContinuedFraction(Unchecked, std::vector<Int> terms) : terms_(std::move(terms)) {}

    std::vector<Int> terms_;
};

/// `[a1,a2,...,an]`.
std::string to_string(const ContinuedFraction& cf);

/// Generating-matrix product laid out as ((x, y), (z, u)).
struct TangleMatrix {
    Int x = 1, y = 0, z = 0, u = 1;

    static TangleMatrix identity() { return {}; }
    /// M(a) = ((a, 1), (1, 0)).
    static TangleMatrix generator(Int a) { return {a, 1, 1, 0}; }

    TangleMatrix transpose() const { return {x, z, y, u}; }
    Int determinant() const;

    friend TangleMatrix operator*(const TangleMatrix& a, const TangleMatrix& b);
    friend bool operator==(const TangleMatrix&, const TangleMatrix&) = default;
};

enum class Parity { even, odd };

inline Parity parity_of(Int n) { return is_even(n) ? Parity::even : Parity::odd; }
inline char to_char(Parity p) { return p == Parity::even ? 'e' : 'o'; }

struct FractionParity {
    Parity num;
    Parity den;

    friend bool operator==(const FractionParity&, const FractionParity&) = default;
};

/// `e/o`, `o/e` or `o/o`.
std::string to_string(const FractionParity& p);

/// Recursive evaluation a1 + 1/(a2 + ... + 1/an).
Fraction eval(const ContinuedFraction& cf);

/// M(a1)...M(an).
TangleMatrix matrix(const ContinuedFraction& cf);

/// [M (1,0)^T], i.e. x/z of the generating-matrix product.
Fraction eval_by_matrix(const ContinuedFraction& cf);

/// Unique expansion with all terms of the sign of f and odd length. 0 maps
/// to [0]; for 0 < |f| < 1 the first term is 0.
ContinuedFraction expand(const Fraction& f);

/// Terms reversed. A vector starting with 0 reverses into a formal one.
ContinuedFraction palindrome(const ContinuedFraction& cf);

FractionParity parity(const Fraction& f);

}  // namespace ratknot
