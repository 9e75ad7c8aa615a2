#include "ratknot/classify.hpp"

#include <algorithm>
#include <array>

#include "ratknot/tangle.hpp"

namespace ratknot {

Int inverse_mod(Int a, Int m) {
    // Extended Euclid on (a mod m, m), tracking only the coefficient of a.
    Int r0 = mod(a, m), r1 = m;
    Int s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int k = r0 / r1;
        r0 = checked::sub(r0, checked::mul(k, r1));
        std::swap(r0, r1);
        s0 = checked::sub(s0, checked::mul(k, s1));
        std::swap(s0, s1);
    }
    if (r0 != 1) throw PreconditionError("inverse_mod: " + std::to_string(a) + " is not a unit mod " + std::to_string(m));
    return mod(s0, m);
}

namespace {

// Numerator made positive by negating numerator and denominator together.
Int abs_num(const Fraction& f) { return checked::abs(f.num()); }
Int signed_den(const Fraction& f) { return f.num() < 0 ? checked::neg(f.den()) : f.den(); }

Relation compare_residues(Int qa, Int qb, Int modulus) {
    qa = mod(qa, modulus);
    qb = mod(qb, modulus);
    if (qa == qb) return Relation::same_residue;
    if (mulmod(qa, qb, modulus) == 1) return Relation::inverse_residue;
    return Relation::none;
}

std::optional<Relation> special_relation(const Fraction& a, const Fraction& b) {
    if (a.is_infinite() || b.is_infinite())
        return a.is_infinite() && b.is_infinite() ? Relation::infinity : Relation::none;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero() ? Relation::unlink : Relation::none;
    if (abs_num(a) != abs_num(b)) return Relation::none;
    if (abs_num(a) == 1) return Relation::unknot;
    return std::nullopt;
}

bool is_palindromic(const ContinuedFraction& cf) {
    auto t = cf.terms();
    return std::equal(t.begin(), t.begin() + t.size() / 2, t.rbegin());
}

// The other positive expansion of the same value: [.., a, 1] <-> [.., a+1].
ContinuedFraction flip_length(const ContinuedFraction& cf) {
    std::vector<Int> t(cf.terms().begin(), cf.terms().end());
    if (t.size() > 1 && t.back() == 1) {
        t.pop_back();
        t.back() += 1;
    } else {
        t.back() -= 1;
        t.push_back(1);
    }
    return ContinuedFraction(std::move(t));
}

// The residues q, q^-1 (mod p) whose fractions p/r make up the class of f.
std::array<Int, 2> class_residues(const Fraction& f) {
    const Int p = abs_num(f);
    const Int r = mod(signed_den(f), p);
    return {r, inverse_mod(r, p)};
}

}  // namespace

Relation unoriented_relation(const Fraction& a, const Fraction& b) {
    if (auto s = special_relation(a, b)) return *s;
    return compare_residues(signed_den(a), signed_den(b), abs_num(a));
}

bool unoriented_equivalent(const Fraction& a, const Fraction& b) { return holds(unoriented_relation(a, b)); }

Fraction normalize_odd_denominator(const Fraction& f) {
    if (f.is_infinite()) throw InfinityInput("normalize_odd_denominator");
    if (!is_even(f.den())) return f;
    return Fraction(f.num(), checked::add(f.num(), f.den()));
}

Relation oriented_relation(const Fraction& a, const Fraction& b) {
    if (auto s = special_relation(a, b)) return *s;
    const Fraction na = normalize_odd_denominator(a);
    const Fraction nb = normalize_odd_denominator(b);
    return compare_residues(signed_den(na), signed_den(nb), checked::mul(2, abs_num(na)));
}

bool oriented_equivalent(const Fraction& a, const Fraction& b) { return holds(oriented_relation(a, b)); }

bool is_achiral(const Fraction& f) {
    if (f.is_infinite() || f.is_zero() || abs_num(f) == 1) return true;
    const Int p = abs_num(f);
    const Int q = signed_den(f);
    return mulmod(q, q, p) == p - 1;
}

std::optional<ContinuedFraction> achiral_form(const Fraction& f) {
    if (f.is_infinite() || f.is_zero() || abs_num(f) == 1 || !is_achiral(f)) return std::nullopt;
    for (Int r : class_residues(f)) {
        auto even = flip_length(expand(Fraction(abs_num(f), r)));
        if (is_palindromic(even)) return even;
    }
    return std::nullopt;
}

std::string to_string(ConnectivityType t) {
    switch (t) {
        case ConnectivityType::zero: return "ZERO";
        case ConnectivityType::infinity: return "INFINITY";
        case ConnectivityType::one: return "ONE";
    }
    return "?";
}

ConnectivityType connectivity(const Fraction& f) {
    const auto par = parity(f);
    if (par.num == Parity::even) return ConnectivityType::zero;
    if (par.den == Parity::even) return ConnectivityType::infinity;
    return ConnectivityType::one;
}

int components(const Fraction& f) { return connectivity(f) == ConnectivityType::zero ? 2 : 1; }

namespace {

void require_two_components(const Fraction& f, const char* op) {
    if (components(f) != 2)
        throw NotTwoComponent(std::string(op) + ": " + to_string(f) + " has parity " + to_string(parity(f)) +
                              ", not e/o");
}

}  // namespace

std::optional<Int> strong_invertibility_residue(const Fraction& f) {
    require_two_components(f, "strong_invertibility_residue");
    if (f.is_zero()) return std::nullopt;
    const Fraction reduced = reduce_twists(f).reduced;
    const Int p = reduced.num();
    const Int q = reduced.den();
    const Int qq1 = checked::sub(checked::mul(q, q), 1);
    if (qq1 % p != 0) return std::nullopt;
    return qq1 / p;
}

bool is_strongly_invertible(const Fraction& f) {
    require_two_components(f, "is_strongly_invertible");
    if (f.is_zero()) return true;
    auto u = strong_invertibility_residue(f);
    return u && !is_even(*u);
}

std::optional<ContinuedFraction> strong_form(const Fraction& f) {
    if (!is_strongly_invertible(f)) return std::nullopt;
    if (f.is_zero()) return ContinuedFraction({0});
    for (Int r : class_residues(f)) {
        auto odd = expand(Fraction(abs_num(f), r));
        if (is_palindromic(odd)) return odd;
    }
    return std::nullopt;
}

Fraction class_representative(const Fraction& f) {
    if (f.is_infinite() || f.is_zero()) return f;
    if (abs_num(f) == 1) return Fraction::integer(1);
    auto [r, inv] = class_residues(f);
    return Fraction(abs_num(f), std::min(r, inv));
}

bool palindrome_cut_compatible(const TangleMatrix& m) {
    if (is_even(m.x)) return is_even(m.u);
    return parity_of(m.z) == parity_of(m.y);
}

KnotClassReport classify(const Fraction& f) {
    KnotClassReport report;
    report.input = f;
    report.representative = class_representative(f);
    report.components = components(f);
    report.connectivity = connectivity(f);
    report.achiral = is_achiral(f);
    report.achiral_form = achiral_form(f);
    if (report.components == 2) {
        report.strongly_invertible = is_strongly_invertible(f);
        report.strong_form = strong_form(f);
    }
    return report;
}

}  // namespace ratknot
