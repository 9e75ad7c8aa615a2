#pragma once

// Classification of rational knots and links N(p/q): unoriented and
// oriented Schubert equivalence, chirality, components and strong
// invertibility, all decided from the fraction alone.

#include <optional>
#include <string>

#include "ratknot/contfrac.hpp"

namespace ratknot {

/// Inverse of a modulo m (m > 1), in [0, m). Requires gcd(a, m) = 1.
Int inverse_mod(Int a, Int m);

/// Why two fractions were (or were not) judged equivalent.
enum class Relation {
    none,               ///< not equivalent
    same_residue,       ///< q = q' mod p (or mod 2p)
    inverse_residue,    ///< qq' = 1 mod p (or mod 2p)
    unknot,             ///< |p| = 1 on both sides
    unlink,             ///< both 0/1
    infinity            ///< both 1/0
};

inline bool holds(Relation r) { return r != Relation::none; }

Relation unoriented_relation(const Fraction& a, const Fraction& b);
bool unoriented_equivalent(const Fraction& a, const Fraction& b);

/// Replaces an even denominator by p/(p+q) (one bottom twist).
Fraction normalize_odd_denominator(const Fraction& f);

/// Oriented comparison mod 2p after odd-denominator normalization. Inputs
/// carry the convention NW end arc downward, NE upward.
Relation oriented_relation(const Fraction& a, const Fraction& b);
bool oriented_equivalent(const Fraction& a, const Fraction& b);

/// q^2 = -1 mod p. The unknot, 1/0 and the unlink 0/1 are achiral.
bool is_achiral(const Fraction& f);

/// Even-length palindromic vector in the class of f, when f is achiral.
std::optional<ContinuedFraction> achiral_form(const Fraction& f);

enum class ConnectivityType { zero, infinity, one };

/// `ZERO`, `INFINITY` or `ONE`.
std::string to_string(ConnectivityType t);

ConnectivityType connectivity(const Fraction& f);

/// Number of components of N(f): 2 exactly for parity e/o.
int components(const Fraction& f);

/// u with q^2 = 1 + u p for the twist-reduced p/q, or empty when p does not
/// divide q^2 - 1 (also empty for 0/1). Throws NotTwoComponent unless f has
/// parity e/o.
std::optional<Int> strong_invertibility_residue(const Fraction& f);

/// q^2 = 1 + u p with u odd. Throws NotTwoComponent unless parity is e/o.
bool is_strongly_invertible(const Fraction& f);

/// Odd-length palindromic vector in the class of f, when strongly invertible.
std::optional<ContinuedFraction> strong_form(const Fraction& f);

/// Canonical member of the unoriented class: p/min(q, q^-1 mod p) with
/// p > 0. 1/0 and 0/1 are their own classes; |p| = 1 maps to 1/1.
Fraction class_representative(const Fraction& f);

/// Rational knots and links are invertible.
constexpr bool is_invertible(const Fraction&) { return true; }

/// Formula-level verdict on the oriented standard and palindrome cuts of
/// N(a1..an), n odd, read from M = ((p, q'), (q, u)): for odd p they agree
/// iff q and q' have equal parity; for even p iff u is even.
bool palindrome_cut_compatible(const TangleMatrix& m);

struct KnotClassReport {
    Fraction input;
    Fraction representative;
    int components = 1;
    ConnectivityType connectivity = ConnectivityType::one;
    bool achiral = false;
    /// Empty unless the link has two components.
    std::optional<bool> strongly_invertible;
    std::optional<ContinuedFraction> achiral_form;
    std::optional<ContinuedFraction> strong_form;

    friend bool operator==(const KnotClassReport&, const KnotClassReport&) = default;
};

KnotClassReport classify(const Fraction& f);

}  // namespace ratknot
