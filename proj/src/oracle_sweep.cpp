#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "ratknot/checked.hpp"
#include "ratknot/oracle.hpp"
#include "ratknot/tangle.hpp"

namespace ratknot::oracle {

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

// Bound on |p| for the pairwise equivalence-axiom checks.
constexpr Int kAxiomBound = 40;

enum Check : int {
    dual_route_eval,
    matrix_transpose,
    determinant,
    palindrome_congruence,
    parity_matrix_product,
    connectivity_trace,
    components_trace,
    expand_roundtrip,
    canonical_roundtrip,
    special_cut_congruence,
    cut_compatibility_trace,
    class_closure,
    oriented_bottom_twists,
    oriented_palindrome_cut,
    kVectorChecks
};

constexpr std::array<const char*, kVectorChecks> kVectorCheckNames{
    "dual_route_eval",        "matrix_transpose",      "determinant",
    "palindrome_congruence",  "parity_matrix",         "connectivity_trace",
    "components_trace",       "expand_roundtrip",      "canonical_roundtrip",
    "special_cut_congruence", "cut_compatibility_trace", "class_closure",
    "oriented_bottom_twists", "oriented_palindrome_cut",
};

class Tally {
public:
    explicit Tally(std::string name) { result_.name = std::move(name); }

    void record(bool ok, const std::function<std::string()>& describe) {
        ++result_.cases;
        if (ok) return;
        ++result_.failures;
        if (!result_.first_counterexample) result_.first_counterexample = describe();
    }

    void merge(const CheckResult& other) {
        result_.cases += other.cases;
        result_.failures += other.failures;
        if (!result_.first_counterexample) result_.first_counterexample = other.first_counterexample;
    }

    const CheckResult& result() const { return result_; }

private:
    CheckResult result_;
};

struct Partial {
    std::vector<Tally> tallies;
    std::int64_t vectors = 0;
    std::int64_t canonical = 0;
    std::vector<std::pair<Fraction, ContinuedFraction>> evaluations;

    Partial() {
        for (const char* name : kVectorCheckNames) tallies.emplace_back(name);
    }
};

bool is_palindromic(std::span<const Int> t) { return std::equal(t.begin(), t.end(), t.rbegin()); }

Int sign_pow(std::size_t n) { return n % 2 == 0 ? -1 : 1; }  // (-1)^(n+1)

// Q Q' = (-1)^(n+1) mod P, reading Q' off the reversed vector with the sign
// of P' matched to P. When P = 0 the reduced fractions lose the sign of Q, so
// the matrix entries are used directly.
bool palindrome_holds(const ContinuedFraction& cf) {
    const Int expected = sign_pow(cf.size());
    const Fraction f = eval(cf);
    const Fraction g = eval(palindrome(cf));
    if (f.num() == 0) {
        if (g.num() != 0) return false;
        const TangleMatrix m = matrix(cf);
        return checked::mul(m.z, m.y) == expected;
    }
    Int p2 = g.num(), q2 = g.den();
    if (p2 == -f.num()) {
        p2 = -p2;
        q2 = -q2;
    }
    if (p2 != f.num()) return false;
    const Int m = checked::abs(f.num());
    return mulmod(f.den(), q2, m) == mod(expected, m);
}

bool special_cut_holds(const ContinuedFraction& cf) {
    const Fraction f = eval(cf);
    const Fraction g = eval(special_cut(cf));
    const Int p = checked::abs(f.num());
    if (checked::abs(g.num()) != p) return false;
    const Int q2 = g.num() == f.num() ? g.den() : -g.den();
    return mod(f.den() - q2, p) == 0;
}

void check_vector(const ContinuedFraction& cf, Partial& out) {
    auto& t = out.tallies;
    const std::string vec = to_string(cf);
    const Fraction f = eval(cf);
    const TangleMatrix m = matrix(cf);

    t[dual_route_eval].record(f == eval_by_matrix(cf), [&] {
        return vec + ": recursive " + to_string(f) + ", matrix " + to_string(eval_by_matrix(cf));
    });
    t[matrix_transpose].record(matrix(palindrome(cf)) == m.transpose(),
                               [&] { return vec + ": M(reversed) is not the transpose"; });
    t[determinant].record(m.determinant() == -sign_pow(cf.size()),
                          [&] { return vec + ": det " + std::to_string(m.determinant()); });
    t[palindrome_congruence].record(palindrome_holds(cf), [&] {
        return vec + ": " + to_string(f) + " vs reversed " + to_string(eval(palindrome(cf)));
    });
    t[parity_matrix_product].record(parity_matrix(cf) == ParityMatrix::of(m), [&] {
        return vec + ": parity product " + to_string(parity_matrix(cf)) + " vs " + to_string(ParityMatrix::of(m));
    });
    const EndPairing traced = trace_pairing(cf);
    t[connectivity_trace].record(traced.type() == connectivity(f), [&] {
        return vec + ": traced " + to_string(traced.type()) + ", parity " + to_string(parity(f)) + " gives " +
               to_string(connectivity(f));
    });
    const int num_closure = closure_components(traced, Closure::numerator);
    const int den_closure = closure_components(traced, Closure::denominator);
    t[components_trace].record(num_closure == components(f) && den_closure == components(rotate(f)), [&] {
        return vec + ": traced N=" + std::to_string(num_closure) + " D=" + std::to_string(den_closure) +
               ", rule N=" + std::to_string(components(f)) + " D=" + std::to_string(components(rotate(f)));
    });
    if (!f.is_infinite()) {
        const Fraction back = eval(expand(f));
        t[expand_roundtrip].record(back == f, [&] { return vec + ": eval(expand) = " + to_string(back); });
        out.evaluations.emplace_back(f, cf);
    }

    if (!cf.is_canonical() || cf.front() == 0) return;
    ++out.canonical;

    t[canonical_roundtrip].record(expand(f) == cf, [&] { return vec + ": expand gives " + to_string(expand(f)); });
    t[special_cut_congruence].record(special_cut_holds(cf), [&] {
        return vec + ": " + to_string(f) + " vs cut " + to_string(eval(special_cut(cf)));
    });

    const CutTrace cut = trace_cut(cf);
    const bool traced_compatible = cut.verdict == CutCompatibility::compatible;
    t[cut_compatibility_trace].record(
        traced_compatible == palindrome_cut_compatible(m) && cut.standard_pairing == traced &&
            cut.palindrome_pairing == trace_pairing(palindrome(cf)) && cut.components == components(f),
        [&] {
            return vec + ": traced " + to_string(cut.verdict) + ", rule " +
                   (palindrome_cut_compatible(m) ? "compatible" : "incompatible");
        });

    const Fraction g = eval(palindrome(cf));
    // Results at the formal 1/0 (reachable only from |p| = 1) leave the finite classes.
    auto in_class = [&](const Fraction& h) { return h.is_infinite() || unoriented_equivalent(f, h); };
    bool closed = in_class(g) && in_class(eval(special_cut(cf)));
    for (Int n = -3; n <= 3; ++n) closed = closed && in_class(bottom_twist(f, n));
    t[class_closure].record(closed, [&] { return vec + ": class of " + to_string(f) + " not closed"; });

    bool twists = true;
    for (Int n = -2; n <= 2; ++n) twists = twists && oriented_equivalent(f, bottom_twist(f, 2 * n));
    t[oriented_bottom_twists].record(twists, [&] { return vec + ": even bottom twist of " + to_string(f); });

    const Fraction aligned = traced_compatible ? g : bottom_twist(g, 1);
    t[oriented_palindrome_cut].record(oriented_equivalent(f, aligned), [&] {
        return vec + ": " + to_string(f) + " vs " + to_string(aligned) + " (" + to_string(cut.verdict) + ")";
    });
}

struct Task {
    std::size_t length;
    Int first;
};

Partial run_task(const Task& task, Int max_term) {
    Partial out;
    std::vector<Int> values;
    for (Int v = -max_term; v <= max_term; ++v)
        if (v != 0) values.push_back(v);
    const std::size_t rest = task.length - 1;
    if (rest > 0 && values.empty()) return out;

    std::vector<std::size_t> idx(rest, 0);
    std::vector<Int> terms(task.length);
    terms[0] = task.first;
    while (true) {
        for (std::size_t i = 0; i < rest; ++i) terms[i + 1] = values[idx[i]];
        ++out.vectors;
        check_vector(ContinuedFraction(terms), out);
        std::size_t k = rest;
        while (k > 0 && ++idx[k - 1] == values.size()) idx[--k] = 0;
        if (k == 0) break;
    }
    return out;
}

// Equal evaluations must expand to the same vector, and canonical vectors
// must never share an evaluation.
void check_uniqueness(std::vector<std::pair<Fraction, ContinuedFraction>>& evaluations, Tally& tally) {
    std::map<Fraction, std::pair<ContinuedFraction, ContinuedFraction>> seen;
    std::map<Fraction, ContinuedFraction> canonical;
    for (const auto& [f, cf] : evaluations) {
        const ContinuedFraction e = expand(f);
        auto [it, fresh] = seen.try_emplace(f, cf, e);
        if (!fresh) {
            tally.record(it->second.second == e, [&] {
                return to_string(it->second.first) + " and " + to_string(cf) + " both give " + to_string(f) +
                       " but expand differently";
            });
        }
        if (cf.is_canonical() && cf.front() != 0) {
            auto [c, first_time] = canonical.try_emplace(f, cf);
            if (!first_time)
                tally.record(c->second == cf, [&] {
                    return "canonical " + to_string(c->second) + " and " + to_string(cf) + " both give " +
                           to_string(f);
                });
        }
    }
}

// Reflexivity, symmetry and transitivity of both relations, oriented
// implying unoriented, and agreement with the class representative, over
// every swept fraction with |p| <= kAxiomBound. Different |p| never relate,
// so each |p| is checked on its own.
void check_axioms(const std::vector<std::pair<Fraction, ContinuedFraction>>& evaluations, Tally& tally) {
    std::map<Int, std::set<Fraction>> groups;
    for (const auto& [f, cf] : evaluations) {
        const Int p = checked::abs(f.num());
        if (p <= kAxiomBound) groups[p].insert(f);
    }
    groups[-1].insert(Fraction::infinity());

    for (const auto& [p, members] : groups) {
        const std::vector<Fraction> fs(members.begin(), members.end());
        const std::size_t n = fs.size();
        std::vector<char> un(n * n), ori(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                un[i * n + j] = unoriented_equivalent(fs[i], fs[j]);
                ori[i * n + j] = oriented_equivalent(fs[i], fs[j]);
            }
        auto pair_text = [&](std::size_t i, std::size_t j) { return to_string(fs[i]) + ", " + to_string(fs[j]); };
        for (std::size_t i = 0; i < n; ++i) {
            tally.record(un[i * n + i] && ori[i * n + i], [&] { return "not reflexive at " + to_string(fs[i]); });
            for (std::size_t j = 0; j < n; ++j) {
                const char u = un[i * n + j], o = ori[i * n + j];
                tally.record(u == un[j * n + i] && o == ori[j * n + i],
                             [&] { return "not symmetric at " + pair_text(i, j); });
                tally.record(!o || u, [&] { return "oriented without unoriented at " + pair_text(i, j); });
                tally.record(static_cast<bool>(u) ==
                                 (class_representative(fs[i]) == class_representative(fs[j])),
                             [&] { return "representative disagrees at " + pair_text(i, j); });
                for (std::size_t k = 0; k < n; ++k) {
                    if (u && un[j * n + k])
                        tally.record(un[i * n + k], [&] {
                            return "unoriented not transitive at " + pair_text(i, j) + ", " + to_string(fs[k]);
                        });
                    if (o && ori[j * n + k])
                        tally.record(ori[i * n + k], [&] {
                            return "oriented not transitive at " + pair_text(i, j) + ", " + to_string(fs[k]);
                        });
                }
            }
        }
    }
}

}  // namespace

VerificationReport sweep_verify(int max_len, Int max_term, unsigned threads) {
    if (max_len < 1 || max_len % 2 == 0) throw RangeError("max_len must be odd and at least 1");
    if (max_term < 0) throw RangeError("max_term must be non-negative");

    std::vector<Task> tasks;
    for (int len = 1; len <= max_len; ++len)
        for (Int first = -max_term; first <= max_term; ++first) tasks.push_back({static_cast<std::size_t>(len), first});

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<Partial> partials(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < tasks.size();) partials[i] = run_task(tasks[i], max_term);
    };
    std::vector<std::future<void>> pool;
    for (unsigned k = 0; k < threads; ++k) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();

    VerificationReport report;
    report.max_len = max_len;
    report.max_term = max_term;
    std::vector<Tally> totals;
    for (const char* name : kVectorCheckNames) totals.emplace_back(name);
    std::vector<std::pair<Fraction, ContinuedFraction>> evaluations;
    for (auto& part : partials) {
        report.vectors += part.vectors;
        report.canonical_vectors += part.canonical;
        for (std::size_t c = 0; c < totals.size(); ++c) totals[c].merge(part.tallies[c].result());
        evaluations.insert(evaluations.end(), std::make_move_iterator(part.evaluations.begin()),
                           std::make_move_iterator(part.evaluations.end()));
    }

    Tally uniqueness("canonical_uniqueness");
    check_uniqueness(evaluations, uniqueness);
    Tally axioms("equivalence_axioms");
    check_axioms(evaluations, axioms);

    for (const auto& t : totals) report.checks.push_back(t.result());
    report.checks.push_back(uniqueness.result());
    report.checks.push_back(axioms.result());
    return report;
}

std::vector<CheckResult> verify_fraction_range(Int max_p) {
    if (max_p < 2) throw RangeError("max_p must be at least 2");
    Tally mirror_class("achirality_mirror");
    Tally achiral_forms("achiral_form");
    Tally strong_forms("strong_form");
    Tally strong_twist("strong_inversion_twist");

    for (Int p = 2; p <= max_p; ++p) {
        for (Int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const Fraction f(p, q);
            const std::string text = to_string(f);
            const bool achiral = is_achiral(f);
            mirror_class.record(achiral == unoriented_equivalent(f, Fraction(p, p - q)) &&
                                    achiral == unoriented_equivalent(f, mirror(f)),
                                [&] { return text + ": is_achiral " + (achiral ? "true" : "false"); });

            const auto form = achiral_form(f);
            achiral_forms.record(
                achiral ? form && form->size() % 2 == 0 && is_palindromic(form->terms()) &&
                              unoriented_equivalent(eval(*form), f)
                        : !form,
                [&] { return text + ": achiral form " + (form ? to_string(*form) : std::string("none")); });

            if (p % 2 != 0) continue;
            const bool strong = is_strongly_invertible(f);
            const auto sform = strong_form(f);
            strong_forms.record(
                strong ? sform && sform->size() % 2 == 1 && is_palindromic(sform->terms()) &&
                             unoriented_equivalent(eval(*sform), f)
                       : !sform,
                [&] { return text + ": strong form " + (sform ? to_string(*sform) : std::string("none")); });
            strong_twist.record(strong == oriented_equivalent(f, bottom_twist(f, 1)),
                                [&] { return text + ": is_strongly_invertible " + (strong ? "true" : "false"); });
        }
    }
    return {mirror_class.result(), achiral_forms.result(), strong_forms.result(), strong_twist.result()};
}

}  // namespace ratknot::oracle
