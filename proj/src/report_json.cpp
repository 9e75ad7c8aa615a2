#include "ratknot/report_json.hpp"

#include "ratknot/notation.hpp"

namespace ratknot {

namespace {

template <class T, class F>
Json optional_to_json(const std::optional<T>& v, F&& convert) {
    return v ? convert(*v) : Json(nullptr);
}

ConnectivityType connectivity_from_string(const std::string& s) {
    if (s == "ZERO") return ConnectivityType::zero;
    if (s == "INFINITY") return ConnectivityType::infinity;
    if (s == "ONE") return ConnectivityType::one;
    throw ParseError(0, "ZERO, INFINITY or ONE");
}

}  // namespace

Json to_json(const Fraction& f) { return to_string(f); }

Fraction fraction_from_json(const Json& j) {
    const Notation n = parse(j.get<std::string>());
    if (!std::holds_alternative<Fraction>(n)) throw ParseError(0, "fraction");
    return std::get<Fraction>(n);
}

Json to_json(const ContinuedFraction& cf) { return Json(std::vector<Int>(cf.terms().begin(), cf.terms().end())); }

ContinuedFraction vector_from_json(const Json& j) { return ContinuedFraction::formal(j.get<std::vector<Int>>()); }

Json to_json(const KnotClassReport& r, const std::string& input) {
    Json j;
    j["input"] = input;
    j["fraction"] = to_json(r.input);
    j["representative"] = to_json(r.representative);
    j["components"] = r.components;
    j["connectivity"] = to_string(r.connectivity);
    j["achiral"] = r.achiral;
    j["strongly_invertible"] = optional_to_json(r.strongly_invertible, [](bool b) { return Json(b); });
    auto vec = [](const ContinuedFraction& cf) { return to_json(cf); };
    j["forms"] = {{"achiral", optional_to_json(r.achiral_form, vec)},
                  {"strong", optional_to_json(r.strong_form, vec)}};
    Json verdicts;
    verdicts["parity"] = to_string(parity(r.input));
    verdicts["invertible"] = is_invertible(r.input);
    std::optional<Int> u;
    if (r.components == 2) u = strong_invertibility_residue(r.input);
    verdicts["strong_invertibility_u"] = optional_to_json(u, [](Int v) { return Json(v); });
    j["verdicts"] = verdicts;
    return j;
}

KnotClassReport class_report_from_json(const Json& j) {
    KnotClassReport r;
    r.input = fraction_from_json(j.at("fraction"));
    r.representative = fraction_from_json(j.at("representative"));
    r.components = j.at("components").get<int>();
    r.connectivity = connectivity_from_string(j.at("connectivity").get<std::string>());
    r.achiral = j.at("achiral").get<bool>();
    if (!j.at("strongly_invertible").is_null()) r.strongly_invertible = j.at("strongly_invertible").get<bool>();
    const Json& forms = j.at("forms");
    if (!forms.at("achiral").is_null()) r.achiral_form = vector_from_json(forms.at("achiral"));
    if (!forms.at("strong").is_null()) r.strong_form = vector_from_json(forms.at("strong"));
    return r;
}

Json to_json(const oracle::CheckResult& c) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed();
    j["cases"] = c.cases;
    j["failures"] = c.failures;
    j["first_counterexample"] = optional_to_json(c.first_counterexample, [](const std::string& s) { return Json(s); });
    return j;
}

oracle::CheckResult check_from_json(const Json& j) {
    oracle::CheckResult c;
    c.name = j.at("name").get<std::string>();
    c.cases = j.at("cases").get<std::int64_t>();
    c.failures = j.at("failures").get<std::int64_t>();
    if (!j.at("first_counterexample").is_null())
        c.first_counterexample = j.at("first_counterexample").get<std::string>();
    return c;
}

Json to_json(const oracle::VerificationReport& r) {
    Json j;
    j["max_len"] = r.max_len;
    j["max_term"] = r.max_term;
    j["max_p"] = r.max_p;
    j["vectors"] = r.vectors;
    j["canonical_vectors"] = r.canonical_vectors;
    j["passed"] = r.passed();
    j["checks"] = Json::array();
    for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
    return j;
}

oracle::VerificationReport verification_from_json(const Json& j) {
    oracle::VerificationReport r;
    r.max_len = j.at("max_len").get<int>();
    r.max_term = j.at("max_term").get<Int>();
    r.max_p = j.at("max_p").get<Int>();
    r.vectors = j.at("vectors").get<std::int64_t>();
    r.canonical_vectors = j.at("canonical_vectors").get<std::int64_t>();
    for (const auto& c : j.at("checks")) r.checks.push_back(check_from_json(c));
    return r;
}

Json to_json(const TableRow& row) {
    Json j;
    j["crossings"] = row.crossings;
    j["representative"] = to_json(row.representative);
    j["vector"] = to_json(row.vector);
    j["components"] = row.components;
    j["achiral"] = row.achiral;
    j["strongly_invertible"] = optional_to_json(row.strongly_invertible, [](bool b) { return Json(b); });
    return j;
}

}  // namespace ratknot
