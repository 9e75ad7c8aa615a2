#include "ratknot/contfrac.hpp"

#include <algorithm>
#include <numeric>

namespace ratknot {

Fraction::Fraction(Int num, Int den) {
    if (num == 0 && den == 0) throw PreconditionError("0/0 is not a fraction");
    if (den == 0) {
        num_ = 1;
        den_ = 0;
        return;
    }
    if (num == 0) {
        num_ = 0;
        den_ = 1;
        return;
    }
    Int g = std::gcd(checked::abs(num), checked::abs(den));
    num /= g;
    den /= g;
    if (den < 0) {
        num = checked::neg(num);
        den = checked::neg(den);
    }
    num_ = num;
    den_ = den;
}

std::string to_string(const Fraction& f) {
    if (f.is_infinite()) return "inf";
    return std::to_string(f.num()) + "/" + std::to_string(f.den());
}

ContinuedFraction::ContinuedFraction(std::vector<Int> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw InvalidContinuedFraction("continued fraction needs at least one term");
    if (!is_standard())
        throw InvalidContinuedFraction("terms after the first must be nonzero: " + to_string(*this));
}

ContinuedFraction ContinuedFraction::formal(std::vector<Int> terms) {
    if (terms.empty()) throw InvalidContinuedFraction("continued fraction needs at least one term");
    return ContinuedFraction(Unchecked{}, std::move(terms));
}

bool ContinuedFraction::is_standard() const noexcept {
    return std::none_of(terms_.begin() + 1, terms_.end(), [](Int a) { return a == 0; });
}

bool ContinuedFraction::is_canonical() const noexcept {
    if (terms_.size() % 2 == 0) return false;
    if (terms_.size() == 1 && terms_[0] == 0) return true;
    if (terms_[0] > 0) return std::all_of(terms_.begin(), terms_.end(), [](Int a) { return a > 0; });
    if (terms_[0] < 0) return std::all_of(terms_.begin(), terms_.end(), [](Int a) { return a < 0; });
    return false;
}

std::string to_string(const ContinuedFraction& cf) {
    std::string s = "[";
    for (std::size_t i = 0; i < cf.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(cf[i]);
    }
    return s + "]";
}

Int TangleMatrix::determinant() const {
    return checked::sub(checked::mul(x, u), checked::mul(y, z));
}

TangleMatrix operator*(const TangleMatrix& a, const TangleMatrix& b) {
    using checked::add, checked::mul;
    return {add(mul(a.x, b.x), mul(a.y, b.z)), add(mul(a.x, b.y), mul(a.y, b.u)),
            add(mul(a.z, b.x), mul(a.u, b.z)), add(mul(a.z, b.y), mul(a.u, b.u))};
}

std::string to_string(const FractionParity& p) {
    return std::string{to_char(p.num), '/', to_char(p.den)};
}

namespace {

Fraction reciprocal(const Fraction& f) { return Fraction(f.den(), f.num()); }

Fraction plus_integer(const Fraction& f, Int a) {
    if (f.is_infinite()) return f;
    return Fraction(checked::add(f.num(), checked::mul(a, f.den())), f.den());
}

}  // namespace

Fraction eval(const ContinuedFraction& cf) {
    auto terms = cf.terms();
    Fraction value = Fraction::integer(terms.back());
    for (auto i = terms.size() - 1; i-- > 0;) value = plus_integer(reciprocal(value), terms[i]);
    return value;
}

TangleMatrix matrix(const ContinuedFraction& cf) {
    auto m = TangleMatrix::identity();
    for (Int a : cf.terms()) m = m * TangleMatrix::generator(a);
    return m;
}

Fraction eval_by_matrix(const ContinuedFraction& cf) {
    auto m = matrix(cf);
    return Fraction(m.x, m.z);
}

ContinuedFraction expand(const Fraction& f) {
    if (f.is_infinite()) throw InfinityNotExpandable();
    if (f.is_zero()) return ContinuedFraction({0});

    const bool negative = f.num() < 0;
    Int p = checked::abs(f.num());
    Int q = f.den();
    std::vector<Int> terms;
    while (q != 0) {
        terms.push_back(p / q);
        Int r = p % q;
        p = q;
        q = r;
    }
    // Euclid's last quotient is >= 2 here unless the whole expansion is [1].
    if (terms.size() % 2 == 0) {
        terms.back() -= 1;
        terms.push_back(1);
    }
    if (negative)
        for (Int& a : terms) a = -a;
    return ContinuedFraction(std::move(terms));
}

ContinuedFraction palindrome(const ContinuedFraction& cf) {
    std::vector<Int> reversed(cf.terms().rbegin(), cf.terms().rend());
    return ContinuedFraction::formal(std::move(reversed));
}

FractionParity parity(const Fraction& f) { return {parity_of(f.num()), parity_of(f.den())}; }

}  // namespace ratknot
