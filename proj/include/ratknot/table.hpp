#pragma once

#include <optional>
#include <vector>

#include "ratknot/contfrac.hpp"

namespace ratknot {

struct TableRow {
    int crossings = 0;
    Fraction representative;
    /// First positive canonical vector found for the class.
    ContinuedFraction vector{std::vector<Int>{0}};
    int components = 1;
    bool achiral = false;
    /// Empty for knots.
    std::optional<bool> strongly_invertible;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct TableOptions {
    bool knots_only = false;
    /// Keep a chiral class and its mirror image as separate rows.
    bool mirror_distinct = false;
};

/// One row per class realized by a positive canonical vector with term sum
/// at most max_crossings, ordered by crossings and then by first appearance.
/// By default classes are taken up to mirror image and vectors of length > 1
/// end in a term >= 2; with mirror_distinct every positive odd-length vector
/// is enumerated. Requires 2 <= max_crossings <= 16; throws RangeError.
std::vector<TableRow> table(int max_crossings, TableOptions options = {});

}  // namespace ratknot
