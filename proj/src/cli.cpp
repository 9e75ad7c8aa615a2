#include "ratknot/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iomanip>
#include <ostream>

#include "ratknot/classify.hpp"
#include "ratknot/notation.hpp"
#include "ratknot/oracle.hpp"
#include "ratknot/report_json.hpp"
#include "ratknot/table.hpp"
#include "ratknot/tangle.hpp"

namespace ratknot {

namespace {

std::string relation_text(Relation r, const char* modulus) {
    switch (r) {
        case Relation::none: return "not equivalent";
        case Relation::same_residue: return std::string("equivalent (q ≡ q' mod ") + modulus + ")";
        case Relation::inverse_residue: return std::string("equivalent (qq' ≡ 1 mod ") + modulus + ")";
        case Relation::unknot: return "equivalent (unknot)";
        case Relation::unlink: return "equivalent (unlink)";
        case Relation::infinity: return "equivalent (both inf)";
    }
    return "";
}

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::none: return "none";
        case Relation::same_residue: return "same_residue";
        case Relation::inverse_residue: return "inverse_residue";
        case Relation::unknot: return "unknot";
        case Relation::unlink: return "unlink";
        case Relation::infinity: return "infinity";
    }
    return "";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string icon_text(ConnectivityType t) { return "(" + oracle::icon(t) + ")"; }

struct Context {
    std::ostream& out;
    bool json = false;

    void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

int equivalence(const Context& ctx, const std::string& a, const std::string& b, bool oriented) {
    const Fraction fa = parse_fraction(a);
    const Fraction fb = parse_fraction(b);
    const Relation r = oriented ? oriented_relation(fa, fb) : unoriented_relation(fa, fb);
    if (ctx.json) {
        ctx.emit({{"input", {a, b}},
                  {"fraction", {to_json(fa), to_json(fb)}},
                  {"verdicts", {{oriented ? "oriented_equivalent" : "equivalent", holds(r)},
                                {"relation", relation_name(r)}}}});
    } else {
        ctx.out << relation_text(r, oriented ? "2p" : "p") << '\n';
    }
    return 0;
}

void print_classification(const Context& ctx, const KnotClassReport& r) {
    auto line = [&](const char* key, const std::string& value) {
        ctx.out << std::left << std::setw(22) << key << value << '\n';
    };
    line("fraction", to_string(r.input));
    line("representative", to_string(r.representative));
    line("components", std::to_string(r.components));
    line("connectivity", to_string(r.connectivity) + " " + icon_text(r.connectivity));
    line("parity", to_string(parity(r.input)));
    line("achiral", yes_no(r.achiral) + (r.achiral_form ? ", form " + to_string(*r.achiral_form) : ""));
    if (r.strongly_invertible)
        line("strongly invertible",
             yes_no(*r.strongly_invertible) + (r.strong_form ? ", form " + to_string(*r.strong_form) : ""));
    line("invertible", yes_no(is_invertible(r.input)));
}

void print_check(std::ostream& out, const oracle::CheckResult& c) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases";
    if (!c.passed()) out << ", " << c.failures << " failures; first: " << c.first_counterexample.value_or("?");
    out << ")\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rational knot and tangle calculator", "ratknot"};
    app.require_subcommand(1);
    Context ctx{out};
    app.add_flag("--json", ctx.json, "Emit one JSON object instead of text");
    app.fallthrough();

    std::function<int()> action;
    std::string a, b;

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a continued fraction vector");
    eval_cmd->add_option("VEC", a, "Vector such as [2,3,4]")->required();
    eval_cmd->callback([&] {
        action = [&] {
            const ContinuedFraction cf = parse_vector(a);
            const Fraction f = eval(cf);
            if (ctx.json) ctx.emit({{"input", a}, {"fraction", to_json(f)}});
            else out << to_string(f) << '\n';
            return 0;
        };
    });

    auto* expand_cmd = app.add_subcommand("expand", "Canonical odd-length vector of a fraction");
    expand_cmd->add_option("FRAC", a, "Fraction p/q, integer, or vector")->required();
    expand_cmd->callback([&] {
        action = [&] {
            const Fraction f = parse_fraction(a);
            const ContinuedFraction cf = expand(f);
            if (ctx.json) ctx.emit({{"input", a}, {"fraction", to_json(f)}, {"forms", {{"canonical", to_json(cf)}}}});
            else out << to_string(cf) << '\n';
            return 0;
        };
    });

    auto vector_transform = [&](const char* name, const char* help, ContinuedFraction (*op)(const ContinuedFraction&)) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("VEC", a, "Vector such as [2,3,4]")->required();
        cmd->callback([&, name, op] {
            action = [&, name, op] {
                const ContinuedFraction cf = op(parse_vector(a));
                const Fraction f = eval(cf);
                if (ctx.json)
                    ctx.emit({{"input", a}, {"fraction", to_json(f)}, {"forms", {{name, to_json(cf)}}}});
                else
                    out << to_string(cf) << " = " << to_string(f) << '\n';
                return 0;
            };
        });
    };
    vector_transform("palindrome", "Reverse a vector (the other cut of the same closure)", &palindrome);
    vector_transform("special-cut", "Reopen the closure at the first crossing", &special_cut);

    for (bool oriented : {false, true}) {
        auto* cmd = app.add_subcommand(oriented ? "oriented-equiv" : "equiv",
                                       oriented ? "Oriented equivalence of N(A) and N(B)"
                                                : "Unoriented equivalence of N(A) and N(B)");
        cmd->add_option("A", a)->required();
        cmd->add_option("B", b)->required();
        cmd->callback([&, oriented] { action = [&, oriented] { return equivalence(ctx, a, b, oriented); }; });
    }

    auto* chiral_cmd = app.add_subcommand("chiral", "Achirality of N(p/q)");
    chiral_cmd->add_option("FRAC", a)->required();
    chiral_cmd->callback([&] {
        action = [&] {
            const Fraction f = parse_fraction(a);
            const bool achiral = is_achiral(f);
            const auto form = achiral_form(f);
            if (ctx.json) {
                ctx.emit({{"input", a},
                          {"fraction", to_json(f)},
                          {"achiral", achiral},
                          {"forms", {{"achiral", form ? to_json(*form) : Json(nullptr)}}}});
            } else {
                out << (achiral ? "achiral" : "chiral");
                if (form) out << ", form " << to_string(*form);
                out << '\n';
            }
            return 0;
        };
    });

    auto* components_cmd = app.add_subcommand("components", "Number of components of N(p/q)");
    components_cmd->add_option("FRAC", a)->required();
    components_cmd->callback([&] {
        action = [&] {
            const Fraction f = parse_fraction(a);
            if (ctx.json) ctx.emit({{"input", a}, {"fraction", to_json(f)}, {"components", components(f)}});
            else out << components(f) << '\n';
            return 0;
        };
    });

    auto* connectivity_cmd = app.add_subcommand("connectivity", "End-arc connectivity of the tangle p/q");
    connectivity_cmd->add_option("FRAC", a)->required();
    connectivity_cmd->callback([&] {
        action = [&] {
            const Fraction f = parse_fraction(a);
            const ConnectivityType t = connectivity(f);
            if (ctx.json)
                ctx.emit({{"input", a},
                          {"fraction", to_json(f)},
                          {"connectivity", to_string(t)},
                          {"verdicts", {{"parity", to_string(parity(f))}}}});
            else
                out << to_string(t) << ' ' << icon_text(t) << '\n';
            return 0;
        };
    });

    auto* strong_cmd = app.add_subcommand("strong-inv", "Strong invertibility of a two-component link");
    strong_cmd->add_option("FRAC", a)->required();
    strong_cmd->callback([&] {
        action = [&] {
            const Fraction f = parse_fraction(a);
            const bool strong = is_strongly_invertible(f);
            const auto u = strong_invertibility_residue(f);
            const auto form = strong_form(f);
            if (ctx.json) {
                ctx.emit({{"input", a},
                          {"fraction", to_json(f)},
                          {"strongly_invertible", strong},
                          {"forms", {{"strong", form ? to_json(*form) : Json(nullptr)}}},
                          {"verdicts", {{"strong_invertibility_u", u ? Json(*u) : Json(nullptr)}}}});
            } else {
                out << (strong ? "strongly invertible" : "not strongly invertible");
                if (u) out << ", u=" << *u;
                if (form) out << ", form " << to_string(*form);
                out << '\n';
            }
            return 0;
        };
    });

    auto* classify_cmd = app.add_subcommand("classify", "Full report for N(p/q)");
    classify_cmd->add_option("FRAC", a)->required();
    classify_cmd->callback([&] {
        action = [&] {
            const KnotClassReport r = classify(parse_fraction(a));
            if (ctx.json) ctx.emit(to_json(r, a));
            else print_classification(ctx, r);
            return 0;
        };
    });

    int max_crossings = 0;
    TableOptions table_options;
    auto* table_cmd = app.add_subcommand("table", "Rational knots and links up to a crossing number");
    table_cmd->add_option("--max-crossings", max_crossings, "Largest crossing number, 2..16")->required();
    table_cmd->add_flag("--knots-only", table_options.knots_only, "Omit two-component links");
    table_cmd->add_flag("--mirror-distinct", table_options.mirror_distinct,
                        "List a chiral class and its mirror image separately");
    table_cmd->callback([&] {
        action = [&] {
            const auto rows = table(max_crossings, table_options);
            if (ctx.json) {
                Json j = Json::array();
                for (const auto& row : rows) j.push_back(to_json(row));
                ctx.emit(j);
                return 0;
            }
            out << std::left << std::setw(10) << "crossings" << std::setw(12) << "fraction" << std::setw(20)
                << "vector" << std::setw(12) << "components" << std::setw(9) << "achiral"
                << "strongly_invertible\n";
            for (const auto& row : rows) {
                out << std::left << std::setw(10) << row.crossings << std::setw(12) << to_string(row.representative)
                    << std::setw(20) << to_string(row.vector) << std::setw(12) << row.components << std::setw(9)
                    << yes_no(row.achiral)
                    << (row.strongly_invertible ? yes_no(*row.strongly_invertible) : std::string("-")) << '\n';
            }
            return 0;
        };
    });

    int max_len = 0;
    Int max_term = 0;
    Int max_p = 0;
    unsigned threads = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive cross-check of formulas against strand tracing");
    verify_cmd->add_option("--max-len", max_len, "Longest vector (odd)")->required();
    verify_cmd->add_option("--max-term", max_term, "Largest |term|")->required();
    verify_cmd->add_option("--max-p", max_p, "Also check every reduced p/q with p up to this bound");
    verify_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
    verify_cmd->callback([&] {
        action = [&] {
            oracle::VerificationReport report = oracle::sweep_verify(max_len, max_term, threads);
            if (max_p > 0) {
                report.max_p = max_p;
                for (auto& c : oracle::verify_fraction_range(max_p)) report.checks.push_back(std::move(c));
            }
            if (ctx.json) {
                ctx.emit(to_json(report));
            } else {
                for (const auto& c : report.checks) print_check(out, c);
                out << report.vectors << " vectors, " << report.canonical_vectors << " canonical\n";
                out << (report.passed() ? "all checks passed" : "verification FAILED") << '\n';
            }
            return report.passed() ? 0 : 1;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace ratknot
