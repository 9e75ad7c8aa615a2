#include <stdexcept>

#include "ratknot/oracle.hpp"

namespace ratknot::oracle {

EndPairing EndPairing::matching(Endpoint a, Endpoint b) {
    std::array<Endpoint, 4> m{};
    const std::array<Endpoint, 4> all{Endpoint::nw, Endpoint::ne, Endpoint::sw, Endpoint::se};
    Endpoint rest[2];
    int k = 0;
    for (Endpoint e : all)
        if (e != a && e != b) rest[k++] = e;
    m[static_cast<int>(a)] = b;
    m[static_cast<int>(b)] = a;
    m[static_cast<int>(rest[0])] = rest[1];
    m[static_cast<int>(rest[1])] = rest[0];
    return EndPairing(m[0], m[1], m[2], m[3]);
}

EndPairing EndPairing::zero() { return matching(Endpoint::nw, Endpoint::ne); }
EndPairing EndPairing::infinity() { return matching(Endpoint::nw, Endpoint::sw); }
EndPairing EndPairing::one() { return matching(Endpoint::nw, Endpoint::se); }

ConnectivityType EndPairing::type() const {
    switch (mate(Endpoint::nw)) {
        case Endpoint::ne: return ConnectivityType::zero;
        case Endpoint::sw: return ConnectivityType::infinity;
        default: return ConnectivityType::one;
    }
}

std::string icon(ConnectivityType t) {
    switch (t) {
        case ConnectivityType::zero: return "≍";
        case ConnectivityType::infinity: return "><";
        case ConnectivityType::one: return "χ";
    }
    return "?";
}

namespace {

// Two tangles side by side: nodes 0-3 are the first tangle's NW, NE, SW, SE,
// nodes 4-7 the second's. `glue` joins nodes across the seam (-1 = outer end).
Composite glue_trace(const EndPairing& first, const EndPairing& second, const std::array<int, 8>& glue,
                     const std::array<int, 4>& outer) {
    auto inner = [&](int node) {
        const EndPairing& t = node < 4 ? first : second;
        return (node / 4) * 4 + static_cast<int>(t.mate(static_cast<Endpoint>(node % 4)));
    };
    std::array<bool, 8> seen{};
    std::array<int, 8> outer_of{};
    outer_of.fill(-1);
    for (int e = 0; e < 4; ++e) outer_of[outer[e]] = e;

    std::array<Endpoint, 4> mate{};
    for (int e = 0; e < 4; ++e) {
        int node = outer[e];
        seen[node] = true;
        while (true) {
            node = inner(node);
            seen[node] = true;
            if (glue[node] < 0) break;
            node = glue[node];
            seen[node] = true;
        }
        mate[e] = static_cast<Endpoint>(outer_of[node]);
    }

    int loops = 0;
    for (int start = 0; start < 8; ++start) {
        if (seen[start]) continue;
        ++loops;
        int node = start;
        do {
            seen[node] = true;
            node = inner(node);
            seen[node] = true;
            node = glue[node];
        } while (node != start);
    }

    Composite out{EndPairing::zero(), loops};
    if (mate[0] == Endpoint::sw) out.pairing = EndPairing::infinity();
    else if (mate[0] == Endpoint::se) out.pairing = EndPairing::one();
    return out;
}

}  // namespace

Composite tangle_sum(const EndPairing& left, const EndPairing& right) {
    // left NE(1) - right NW(4), left SE(3) - right SW(6)
    constexpr std::array<int, 8> glue{-1, 4, -1, 6, 1, -1, 3, -1};
    constexpr std::array<int, 4> outer{0, 5, 2, 7};
    return glue_trace(left, right, glue, outer);
}

Composite tangle_product(const EndPairing& top, const EndPairing& bottom) {
    // top SW(2) - bottom NW(4), top SE(3) - bottom NE(5)
    constexpr std::array<int, 8> glue{-1, -1, 4, 5, 2, 3, -1, -1};
    constexpr std::array<int, 4> outer{0, 1, 6, 7};
    return glue_trace(top, bottom, glue, outer);
}

EndPairing trace_pairing(const ContinuedFraction& cf) {
    const auto terms = cf.terms();
    const std::size_t n = terms.size();
    EndPairing state = n % 2 == 1 ? EndPairing::zero() : EndPairing::infinity();
    for (std::size_t i = n; i-- > 0;) {
        const bool horizontal = i % 2 == 0;
        const Int count = terms[i] < 0 ? -terms[i] : terms[i];
        for (Int k = 0; k < count; ++k) {
            Composite c = horizontal ? tangle_sum(state, EndPairing::one())
                                     : tangle_product(state, EndPairing::one());
            if (c.loops != 0) throw std::logic_error("closed loop while twisting " + to_string(cf));
            state = c.pairing;
        }
    }
    return state;
}

int closure_components(const EndPairing& pairing, Closure closure) {
    auto arc = [&](Endpoint e) {
        if (closure == Closure::numerator) {
            switch (e) {
                case Endpoint::nw: return Endpoint::ne;
                case Endpoint::ne: return Endpoint::nw;
                case Endpoint::sw: return Endpoint::se;
                case Endpoint::se: return Endpoint::sw;
            }
        }
        switch (e) {
            case Endpoint::nw: return Endpoint::sw;
            case Endpoint::sw: return Endpoint::nw;
            case Endpoint::ne: return Endpoint::se;
            case Endpoint::se: return Endpoint::ne;
        }
        return e;
    };
    std::array<bool, 4> seen{};
    int cycles = 0;
    for (int s = 0; s < 4; ++s) {
        if (seen[s]) continue;
        ++cycles;
        auto e = static_cast<Endpoint>(s);
        do {
            seen[static_cast<int>(e)] = true;
            e = pairing.mate(e);
            seen[static_cast<int>(e)] = true;
            e = arc(e);
        } while (static_cast<int>(e) != s);
    }
    return cycles;
}

int trace_components(const ContinuedFraction& cf, Closure closure) {
    return closure_components(trace_pairing(cf), closure);
}

std::string to_string(OrientationType t) { return t == OrientationType::type_i ? "I" : "II"; }

std::string to_string(CutCompatibility c) {
    return c == CutCompatibility::compatible ? "compatible" : "incompatible";
}

namespace {

// The closed 4-plat: positions 0..3 left to right, caps (0,1), (2,3) on top,
// cups (0,1), (2,3) at the bottom. Box i twists positions (1,2) for odd i and
// (0,1) for even i, so position 3 never crosses. Removing the caps leaves the
// tangle [a1..an] with top positions read as NW, NE, SE, SW.
struct Plat {
    std::vector<std::pair<int, int>> swaps;  // one per crossing, top to bottom

    explicit Plat(const ContinuedFraction& cf) {
        for (std::size_t i = 0; i < cf.size(); ++i) {
            const auto pair = i % 2 == 0 ? std::pair{1, 2} : std::pair{0, 1};
            const Int count = cf[i] < 0 ? -cf[i] : cf[i];
            for (Int k = 0; k < count; ++k) swaps.push_back(pair);
        }
    }

    int levels() const { return static_cast<int>(swaps.size()); }

    static int through(std::pair<int, int> s, int j) {
        if (j == s.first) return s.second;
        if (j == s.second) return s.first;
        return j;
    }

    // Position reached at the bottom when entering at top position j, and back.
    int descend(int j) const {
        for (const auto& s : swaps) j = through(s, j);
        return j;
    }
    int ascend(int j) const {
        for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) j = through(*it, j);
        return j;
    }
};

// Top positions of the plat as endpoints of the standard-cut tangle.
constexpr std::array<Endpoint, 4> kTopEnds{Endpoint::nw, Endpoint::ne, Endpoint::se, Endpoint::sw};
// Bottom positions as endpoints of the palindrome-cut tangle after a half turn.
constexpr std::array<Endpoint, 4> kBottomEnds{Endpoint::sw, Endpoint::se, Endpoint::ne, Endpoint::nw};

int position_of(const std::array<Endpoint, 4>& ends, Endpoint e) {
    for (int j = 0; j < 4; ++j)
        if (ends[j] == e) return j;
    return -1;
}

EndPairing pairing_from(const std::array<int, 4>& mate_pos, const std::array<Endpoint, 4>& ends) {
    const Endpoint partner = ends[mate_pos[position_of(ends, Endpoint::nw)]];
    if (partner == Endpoint::ne) return EndPairing::zero();
    if (partner == Endpoint::sw) return EndPairing::infinity();
    return EndPairing::one();
}

struct OrientedPlat {
    int components = 0;
    std::array<int, 4> component_at_top{};
    std::array<int, 4> component_at_bottom{};
    std::array<bool, 4> top_enters{};     // strand runs downward through the top point
    std::array<bool, 4> bottom_enters{};  // strand runs upward through the bottom point
};

OrientedPlat orient(const Plat& plat) {
    OrientedPlat o;
    std::array<bool, 4> seen{};
    for (int start = 0; start < 4; ++start) {
        if (seen[start]) continue;
        const int c = o.components++;
        int top = start;
        while (!seen[top]) {
            seen[top] = true;
            o.top_enters[top] = true;
            o.component_at_top[top] = c;
            const int down = plat.descend(top);
            o.bottom_enters[down] = false;
            o.component_at_bottom[down] = c;
            const int up = down ^ 1;  // cup
            o.bottom_enters[up] = true;
            o.component_at_bottom[up] = c;
            const int back = plat.ascend(up);
            seen[back] = true;
            o.top_enters[back] = false;
            o.component_at_top[back] = c;
            top = back ^ 1;  // cap
        }
    }
    return o;
}

// Type I: NW and SW end arcs point opposite ways relative to the tangle.
OrientationType type_at(const std::array<bool, 4>& enters, const std::array<Endpoint, 4>& ends) {
    const bool nw = enters[position_of(ends, Endpoint::nw)];
    const bool sw = enters[position_of(ends, Endpoint::sw)];
    return nw != sw ? OrientationType::type_i : OrientationType::type_ii;
}

}  // namespace

CutTrace trace_cut(const ContinuedFraction& cf) {
    if (!cf.is_canonical()) throw NotCanonical("trace_cut needs a canonical odd-length vector: " + to_string(cf));

    const Plat plat(cf);
    const OrientedPlat o = orient(plat);

    CutTrace t;
    t.components = o.components;

    std::array<int, 4> top_mate{}, bottom_mate{};
    for (int j = 0; j < 4; ++j) {
        top_mate[j] = plat.ascend(plat.descend(j) ^ 1);
        bottom_mate[j] = plat.descend(plat.ascend(j) ^ 1);
    }
    t.standard_pairing = pairing_from(top_mate, kTopEnds);
    t.palindrome_pairing = pairing_from(bottom_mate, kBottomEnds);

    // The verdict must not depend on how each component is oriented.
    std::optional<CutCompatibility> verdict;
    for (int flips = 0; flips < (1 << o.components); ++flips) {
        auto top = o.top_enters;
        auto bottom = o.bottom_enters;
        for (int j = 0; j < 4; ++j) {
            if (flips >> o.component_at_top[j] & 1) top[j] = !top[j];
            if (flips >> o.component_at_bottom[j] & 1) bottom[j] = !bottom[j];
        }
        const auto standard = type_at(top, kTopEnds);
        const auto palin = type_at(bottom, kBottomEnds);
        const auto v = standard == palin ? CutCompatibility::compatible : CutCompatibility::incompatible;
        if (verdict && *verdict != v)
            throw std::logic_error("cut compatibility depends on component orientation for " + to_string(cf));
        verdict = v;
        if (flips == 0) {
            t.standard = standard;
            t.palindrome = palin;
        }
    }
    t.verdict = *verdict;
    return t;
}

CutCompatibility trace_cut_compatibility(const ContinuedFraction& cf) { return trace_cut(cf).verdict; }

ParityMatrix operator*(const ParityMatrix& a, const ParityMatrix& b) {
    auto mul = [](Parity s, Parity t) { return s == Parity::odd && t == Parity::odd ? Parity::odd : Parity::even; };
    auto add = [](Parity s, Parity t) { return s == t ? Parity::even : Parity::odd; };
    return {add(mul(a.x, b.x), mul(a.y, b.z)), add(mul(a.x, b.y), mul(a.y, b.u)),
            add(mul(a.z, b.x), mul(a.u, b.z)), add(mul(a.z, b.y), mul(a.u, b.u))};
}

std::string to_string(const ParityMatrix& m) {
    return std::string{'(', '(', to_char(m.x), ',', to_char(m.y), ')', ',', '(', to_char(m.z), ',', to_char(m.u), ')', ')'};
}

ParityMatrix parity_matrix(const ContinuedFraction& cf) {
    ParityMatrix m;
    for (Int a : cf.terms()) m = m * ParityMatrix::generator(a);
    return m;
}

}  // namespace ratknot::oracle
