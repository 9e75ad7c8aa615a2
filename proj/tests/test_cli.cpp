#include <doctest.h>

#include <sstream>

#include "ratknot/classify.hpp"
#include "ratknot/cli.hpp"
#include "ratknot/notation.hpp"
#include "ratknot/report_json.hpp"
#include "ratknot/table.hpp"
#include "reference.hpp"

using namespace ratknot;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t parse_error_offset(std::string_view text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    return std::string_view::npos;
}

}  // namespace

TEST_CASE("parse examples") {
    CHECK(std::get<ContinuedFraction>(parse("[2,-2,3]")) == ContinuedFraction({2, -2, 3}));
    CHECK(std::get<Fraction>(parse("30/13")) == Fraction(30, 13));
    CHECK(std::get<Fraction>(parse("inf")) == Fraction::infinity());
    CHECK(std::get<Fraction>(parse("-7")) == Fraction(-7, 1));
    CHECK(std::get<Fraction>(parse("6/4")) == Fraction(3, 2));
    CHECK(std::get<Fraction>(parse("8/-5")) == Fraction(-8, 5));
    CHECK(std::get<ContinuedFraction>(parse(" [ 2 3  4 ] ")) == ContinuedFraction({2, 3, 4}));
    CHECK(std::get<ContinuedFraction>(parse("[0, 1,-1]")) == ContinuedFraction({0, 1, -1}));
    CHECK(parse_fraction("[2,3,4]") == Fraction(30, 13));
    CHECK_THROWS_AS(parse_vector("30/13"), ParseError);
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK(parse_error_offset("") == 0);
    CHECK(parse_error_offset("[]") == 1);
    CHECK(parse_error_offset("[2,0]") == 3);
    CHECK(parse_error_offset("[2,,3]") == 3);
    CHECK(parse_error_offset("[2,3") == 4);
    CHECK(parse_error_offset("[2;3]") == 2);
    CHECK(parse_error_offset("3/") == 2);
    CHECK(parse_error_offset("0/0") == 2);
    CHECK(parse_error_offset("3/2x") == 3);
    CHECK(parse_error_offset("infinity") == 3);
    CHECK(parse_error_offset("99999999999999999999") == 0);
    CHECK(parse_error_offset("abc") == 0);
}

TEST_CASE("parse and serialize are inverse") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<Int> num(-100000, 100000), den(0, 100000);
    for (int trial = 0; trial < 3000; ++trial) {
        const ContinuedFraction v(ref::random_vector(rng, 8, 50));
        CHECK(std::get<ContinuedFraction>(parse(serialize(v))) == v);
        const Int n = num(rng), d = den(rng);
        if (n == 0 && d == 0) continue;
        const Fraction f(n, d);
        CHECK(std::get<Fraction>(parse(serialize(f))) == f);
    }
}

TEST_CASE("JSON round trips") {
    for (Int p = 1; p <= 30; ++p)
        for (Int q = -p; q <= p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const KnotClassReport r = classify(Fraction(p, q));
            const Json j = to_json(r, "x");
            CHECK(class_report_from_json(Json::parse(j.dump())) == r);
        }
    const KnotClassReport zero = classify(Fraction(0, 1));
    CHECK(class_report_from_json(to_json(zero, "0")) == zero);

    oracle::VerificationReport v = oracle::sweep_verify(3, 2);
    v.checks.front().failures = 2;
    v.checks.front().first_counterexample = "made up";
    CHECK(verification_from_json(Json::parse(to_json(v).dump())) == v);

    const Json j = to_json(classify(Fraction(8, 3)), "8/3");
    for (const char* key : {"input", "fraction", "representative", "components", "connectivity", "achiral",
                            "strongly_invertible", "forms", "verdicts"})
        CHECK(j.contains(key));
    CHECK(j["verdicts"]["strong_invertibility_u"] == 1);
}

TEST_CASE("table examples") {
    const auto three = table(3, {.knots_only = true});
    REQUIRE(three.size() == 1);
    CHECK(three[0].representative == Fraction(3, 1));
    CHECK(three[0].vector == ContinuedFraction({3}));

    const auto four = table(4);
    std::vector<Fraction> reps;
    for (const auto& row : four) reps.push_back(row.representative);
    CHECK(reps == std::vector<Fraction>{Fraction(2, 1), Fraction(3, 1), Fraction(5, 2), Fraction(4, 1)});
    CHECK(table(4, {.knots_only = true}).size() == 2);

    // 3_1 4_1 5_1 5_2 6_1 6_2 6_3 7_1 ... 7_7
    CHECK(table(7, {.knots_only = true}).size() == 14);
    // twelve of them are chiral
    CHECK(table(7, {.knots_only = true, .mirror_distinct = true}).size() == 26);
    CHECK(table(3, {.mirror_distinct = true}).size() == 3);  // Hopf link, trefoil and its mirror
    CHECK_THROWS_AS(table(1), RangeError);
    CHECK_THROWS_AS(table(17), RangeError);
}

namespace {

// Every positive odd-length vector with term sum <= max.
void positive_vectors(int max, const std::function<void(const std::vector<Int>&)>& visit) {
    std::vector<Int> v;
    std::function<void(int)> walk = [&](int budget) {
        if (!v.empty() && v.size() % 2 == 1) visit(v);
        for (int t = 1; t <= budget; ++t) {
            v.push_back(t);
            walk(budget - t);
            v.pop_back();
        }
    };
    walk(max);
}

bool same_or_mirror(const Fraction& a, const Fraction& b) {
    return ref::unoriented(a.num(), a.den(), b.num(), b.den()) ||
           ref::unoriented(a.num(), -a.den(), b.num(), b.den());
}

}  // namespace

TEST_CASE("table rows are pairwise inequivalent and cover every positive vector") {
    const int max = 9;
    for (bool distinct : {false, true}) {
        INFO("mirror_distinct " << distinct);
        auto related = [&](const Fraction& a, const Fraction& b) {
            return distinct ? ref::unoriented(a.num(), a.den(), b.num(), b.den()) : same_or_mirror(a, b);
        };
        const auto rows = table(max, {.mirror_distinct = distinct});
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(eval(rows[i].vector).num() == rows[i].representative.num());
            for (std::size_t j = i + 1; j < rows.size(); ++j)
                CHECK_FALSE(related(rows[i].representative, rows[j].representative));
        }
        positive_vectors(max, [&](const std::vector<Int>& v) {
            if (v == std::vector<Int>{1}) return;  // one crossing: the unknot is not tabulated
            const Fraction f = eval(ContinuedFraction(v));
            int hits = 0;
            for (const auto& row : rows) hits += related(f, row.representative);
            CHECK(hits == 1);
        });
    }
}

TEST_CASE("command line outputs") {
    CHECK(cli({"eval", "[2,3,4]"}).out == "30/13\n");
    CHECK(cli({"equiv", "30/13", "30/7"}).out == "equivalent (qq' ≡ 1 mod p)\n");
    CHECK(cli({"equiv", "3/-1", "3/2"}).out == "equivalent (q ≡ q' mod p)\n");
    CHECK(cli({"equiv", "3/1", "5/2"}).out == "not equivalent\n");
    CHECK(cli({"oriented-equiv", "8/3", "8/-5"}).out == "equivalent (qq' ≡ 1 mod 2p)\n");
    CHECK(cli({"oriented-equiv", "8/3", "8/5"}).out == "not equivalent\n");
    CHECK(cli({"strong-inv", "8/3"}).out == "strongly invertible, u=1, form [2,1,2]\n");
    CHECK(cli({"strong-inv", "4/1"}).out == "not strongly invertible, u=0\n");
    CHECK(cli({"expand", "30/13"}).out == "[2,3,4]\n");
    CHECK(cli({"expand", "-3/1"}).out == "[-3]\n");
    CHECK(cli({"palindrome", "[2,3,4]"}).out == "[4,3,2] = 30/7\n");
    CHECK(cli({"special-cut", "[-3]"}).out == "[1,2] = 3/2\n");
    CHECK(cli({"chiral", "5/2"}).out == "achiral, form [2,2]\n");
    CHECK(cli({"chiral", "3/1"}).out == "chiral\n");
    CHECK(cli({"components", "8/3"}).out == "2\n");
    CHECK(cli({"connectivity", "inf"}).out == "INFINITY (><)\n");
    CHECK(cli({"components", "[2,1,2]"}).out == "2\n");
}

TEST_CASE("command line JSON") {
    const auto r = cli({"--json", "classify", "8/3"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["input"] == "8/3");
    CHECK(j["strongly_invertible"] == true);
    CHECK(j["forms"]["strong"] == Json::array({2, 1, 2}));
    CHECK(Json::parse(cli({"eval", "[2,3,4]", "--json"}).out)["fraction"] == "30/13");
    const Json t = Json::parse(cli({"table", "--max-crossings", "4", "--json"}).out);
    CHECK(t.size() == 4);
    const Json v = Json::parse(cli({"verify", "--max-len", "3", "--max-term", "2", "--json"}).out);
    CHECK(v["passed"] == true);
}

TEST_CASE("command line exit codes") {
    CHECK(cli({"eval", "[2,0]"}).code == 2);
    CHECK(cli({"eval", "30/13"}).code == 2);
    CHECK(cli({"equiv", "3/1"}).code == 2);
    CHECK(cli({"nonsense"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"expand", "inf"}).code == 1);
    CHECK(cli({"strong-inv", "3/1"}).code == 1);
    CHECK(cli({"special-cut", "[2,-1,2]"}).code == 1);
    CHECK(cli({"table", "--max-crossings", "40"}).code == 1);
    CHECK(cli({"verify", "--max-len", "2", "--max-term", "1"}).code == 1);
    CHECK(cli({"eval", "[9223372036854775807,1,9223372036854775807]"}).code == 1);
    const auto bad = cli({"eval", "[2,0]"});
    CHECK(bad.err.find("byte 3") != std::string::npos);
}
