#include "ratknot/tangle.hpp"

#include <algorithm>

namespace ratknot {

Fraction add_twist(const Fraction& f, Int k) {
    if (f.is_infinite()) throw InfinityInput("add_twist");
    return Fraction(checked::add(f.num(), checked::mul(k, f.den())), f.den());
}

Fraction invert(const Fraction& f) { return Fraction(f.den(), f.num()); }

Fraction mirror(const Fraction& f) {
    if (f.is_infinite()) return f;
    return Fraction(checked::neg(f.num()), f.den());
}

Fraction rotate(const Fraction& f) { return mirror(invert(f)); }

Fraction bottom_twist(const Fraction& f, Int n) {
    return Fraction(f.num(), checked::add(checked::mul(n, f.num()), f.den()));
}

TwistReduction reduce_twists(const Fraction& f) {
    if (f.is_infinite()) throw InfinityInput("reduce_twists");
    if (f.is_zero()) throw ZeroNumerator();
    const Int p = f.num();
    const Int q_reduced = mod(f.den(), checked::abs(p));
    return {Fraction(p, q_reduced), (f.den() - q_reduced) / p};
}

ContinuedFraction special_cut(const ContinuedFraction& cf) {
    const bool positive = cf.front() > 0;
    if (cf.front() == 0 || !std::all_of(cf.terms().begin(), cf.terms().end(),
                                        [&](Int a) { return positive ? a > 0 : a < 0; }))
        throw NotCanonical("special_cut needs nonzero terms of one sign: " + to_string(cf));

    std::vector<Int> out;
    out.reserve(cf.size() + 1);
    out.push_back(positive ? -1 : 1);
    out.push_back(positive ? checked::sub(1, cf.front()) : checked::sub(-1, cf.front()));
    for (std::size_t i = 1; i < cf.size(); ++i) out.push_back(checked::neg(cf[i]));
    return ContinuedFraction::formal(std::move(out));
}

}  // namespace ratknot
