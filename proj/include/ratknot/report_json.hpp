#pragma once

// JSON shapes written by `--json`. Fractions travel as "p/q" or "inf",
// vectors as integer arrays, absent values as null.

#include <json.hpp>

#include "ratknot/classify.hpp"
#include "ratknot/oracle.hpp"
#include "ratknot/table.hpp"

namespace ratknot {

using Json = nlohmann::ordered_json;

Json to_json(const Fraction& f);
Fraction fraction_from_json(const Json& j);

Json to_json(const ContinuedFraction& cf);
ContinuedFraction vector_from_json(const Json& j);

/// {input, fraction, representative, components, connectivity, achiral,
/// strongly_invertible, forms, verdicts}; `input` is the text as typed.
Json to_json(const KnotClassReport& r, const std::string& input);
KnotClassReport class_report_from_json(const Json& j);

Json to_json(const oracle::CheckResult& c);
oracle::CheckResult check_from_json(const Json& j);

Json to_json(const oracle::VerificationReport& r);
oracle::VerificationReport verification_from_json(const Json& j);

Json to_json(const TableRow& row);

}  // namespace ratknot
