#pragma once

// Independent combinatorial checks. Everything here traces strands through
// the twist construction or the closed 4-plat diagram; nothing consults
// fractions except the sweep, which compares the two worlds.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ratknot/classify.hpp"
#include "ratknot/contfrac.hpp"

namespace ratknot::oracle {

enum class Endpoint : std::uint8_t { nw, ne, sw, se };

/// Perfect matching of the four boundary points of a 2-tangle.
class EndPairing {
public:
    /// NW-NE, SW-SE.
    static EndPairing zero();
    /// NW-SW, NE-SE.
    static EndPairing infinity();
    /// NW-SE, NE-SW.
    static EndPairing one();

    Endpoint mate(Endpoint e) const { return mate_[static_cast<int>(e)]; }
    ConnectivityType type() const;

    friend bool operator==(const EndPairing&, const EndPairing&) = default;

private:
    EndPairing(Endpoint nw, Endpoint ne, Endpoint sw, Endpoint se) : mate_{nw, ne, sw, se} {}
    static EndPairing matching(Endpoint a, Endpoint b);

    std::array<Endpoint, 4> mate_;
};

/// `><`, `≍` style icon for a pairing type.
std::string icon(ConnectivityType t);

/// Result of gluing two tangles: the outer pairing plus closed loops formed.
struct Composite {
    EndPairing pairing;
    int loops = 0;
};

/// left + right: left NE/SE glued to right NW/SW.
Composite tangle_sum(const EndPairing& left, const EndPairing& right);

/// top * bottom: top SW/SE glued to bottom NW/NE.
Composite tangle_product(const EndPairing& top, const EndPairing& bottom);

/// Builds [a1..an] from the innermost term outward, one [+-1] at a time:
/// a_i added on the right for odd i, at the bottom for even i. Throws
/// std::logic_error if a closed loop ever appears.
EndPairing trace_pairing(const ContinuedFraction& cf);

enum class Closure { numerator, denominator };

/// Closed curves after joining the traced end arcs.
int trace_components(const ContinuedFraction& cf, Closure closure);
int closure_components(const EndPairing& pairing, Closure closure);

enum class OrientationType { type_i, type_ii };
enum class CutCompatibility { compatible, incompatible };

std::string to_string(OrientationType t);
std::string to_string(CutCompatibility c);

/// Orientation read off the closed 4-plat N(a1..an) at its two cut sites.
struct CutTrace {
    int components = 0;
    /// Tangle left by removing the top caps (the standard cut).
    EndPairing standard_pairing = EndPairing::zero();
    /// Tangle left by removing the bottom cups, read upside down (palindrome cut).
    EndPairing palindrome_pairing = EndPairing::zero();
    OrientationType standard = OrientationType::type_i;
    OrientationType palindrome = OrientationType::type_i;
    CutCompatibility verdict = CutCompatibility::compatible;
};

/// Requires a canonical (odd-length, one-sign) vector; throws NotCanonical.
CutTrace trace_cut(const ContinuedFraction& cf);
CutCompatibility trace_cut_compatibility(const ContinuedFraction& cf);

/// 2x2 matrix over {e, o} with e+e = o+o = e, o*o = o.
struct ParityMatrix {
    Parity x = Parity::odd, y = Parity::even, z = Parity::even, u = Parity::odd;

    static ParityMatrix generator(Int a) { return {parity_of(a), Parity::odd, Parity::odd, Parity::even}; }
    static ParityMatrix of(const TangleMatrix& m) {
        return {parity_of(m.x), parity_of(m.y), parity_of(m.z), parity_of(m.u)};
    }

    friend ParityMatrix operator*(const ParityMatrix& a, const ParityMatrix& b);
    friend bool operator==(const ParityMatrix&, const ParityMatrix&) = default;
};

std::string to_string(const ParityMatrix& m);

/// Product of generator parity matrices; never touches integer entries.
ParityMatrix parity_matrix(const ContinuedFraction& cf);

struct CheckResult {
    std::string name;
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    std::optional<std::string> first_counterexample;

    bool passed() const { return failures == 0; }
    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
    int max_len = 0;
    Int max_term = 0;
    /// Bound on |p| for the fraction-range checks; 0 when they were skipped.
    Int max_p = 0;
    std::int64_t vectors = 0;
    std::int64_t canonical_vectors = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
    const CheckResult* find(const std::string& name) const;
    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Enumerates every vector of length <= max_len with terms in
/// [-max_term, max_term] (nonzero after the first) and runs the per-vector,
/// canonical and equivalence checks. Mismatches are reported, not thrown.
/// threads = 0 picks the hardware concurrency.
VerificationReport sweep_verify(int max_len, Int max_term, unsigned threads = 0);

/// Checks over all reduced p/q with 0 < q < p <= max_p: chirality against
/// the mirror class, achiral and strong forms, strong invertibility against
/// the oriented bottom-twist comparison.
std::vector<CheckResult> verify_fraction_range(Int max_p);

}  // namespace ratknot::oracle
