#include "ratknot/table.hpp"

#include <functional>
#include <set>

#include "ratknot/classify.hpp"
#include "ratknot/tangle.hpp"

namespace ratknot {

namespace {

// Compositions of `total` into an odd number of positive parts; with
// `trailing_two` the last part is >= 2 unless it is the only one.
void compositions(int total, bool trailing_two, std::vector<Int>& prefix,
                  const std::function<void(const std::vector<Int>&)>& emit) {
    for (int part = 1; part <= total; ++part) {
        prefix.push_back(part);
        const int rest = total - part;
        if (rest == 0) {
            if (prefix.size() % 2 == 1 && (!trailing_two || prefix.size() == 1 || part >= 2)) emit(prefix);
        } else {
            compositions(rest, trailing_two, prefix, emit);
        }
        prefix.pop_back();
    }
}

}  // namespace

std::vector<TableRow> table(int max_crossings, TableOptions options) {
    if (max_crossings < 2 || max_crossings > 16) throw RangeError("max_crossings must lie in [2, 16]");

    std::vector<TableRow> rows;
    std::set<Fraction> seen;
    std::vector<Int> prefix;
    for (int c = 2; c <= max_crossings; ++c) {
        compositions(c, !options.mirror_distinct, prefix, [&](const std::vector<Int>& terms) {
            const ContinuedFraction cf(terms);
            const Fraction f = eval(cf);
            Fraction key = class_representative(f);
            if (!options.mirror_distinct) key = std::min(key, class_representative(mirror(f)));
            if (!seen.insert(key).second) return;
            const int comps = components(f);
            if (options.knots_only && comps != 1) return;
            TableRow row;
            row.crossings = c;
            row.representative = class_representative(f);
            row.vector = cf;
            row.components = comps;
            row.achiral = is_achiral(f);
            if (comps == 2) row.strongly_invertible = is_strongly_invertible(f);
            rows.push_back(std::move(row));
        });
    }
    return rows;
}

}  // namespace ratknot
