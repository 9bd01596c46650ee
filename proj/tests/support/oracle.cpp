#include "oracle.hpp"

#include <algorithm>
#include <bit>

namespace oracle {

using rulerag::AttributeKind;
using rulerag::CoefficientKind;
using rulerag::CoefficientSpec;
using rulerag::DataTable;
using rulerag::MiningTask;

std::vector<std::vector<std::uint32_t>> literal_sets(std::size_t category_count,
                                                     const CoefficientSpec& c) {
    const int k = static_cast<int>(category_count);
    const int lo = c.minlen;
    const int hi = std::min(c.maxlen, k - 1);
    std::vector<std::vector<std::uint32_t>> sets;
    if (k <= 1 || hi < lo) return sets;

    const auto mask_to_set = [&](unsigned mask) {
        std::vector<std::uint32_t> s;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) s.push_back(static_cast<std::uint32_t>(i));
        return s;
    };

    switch (c.kind) {
        case CoefficientKind::one:
            for (int i = 0; i < k; ++i) sets.push_back({static_cast<std::uint32_t>(i)});
            break;
        case CoefficientKind::subset:
            for (unsigned mask = 1; mask < (1u << k) - 1u; ++mask) {
                const int size = std::popcount(mask);
                if (size >= lo && size <= hi) sets.push_back(mask_to_set(mask));
            }
            std::sort(sets.begin(), sets.end(),
                      [](const auto& x, const auto& y) {
                          if (x.size() != y.size()) return x.size() < y.size();
                          return x < y;
                      });
            break;
        case CoefficientKind::seq:
            for (unsigned mask = 1; mask < (1u << k) - 1u; ++mask) {
                const auto s = mask_to_set(mask);
                const int size = static_cast<int>(s.size());
                if (size < lo || size > hi) continue;
                if (s.back() - s.front() + 1 != static_cast<std::uint32_t>(size))
                    continue;  // not contiguous
                sets.push_back(s);
            }
            std::sort(sets.begin(), sets.end(),
                      [](const auto& x, const auto& y) {
                          if (x.front() != y.front()) return x.front() < y.front();
                          return x.size() < y.size();
                      });
            break;
        case CoefficientKind::lcut:
            for (unsigned mask = 1; mask < (1u << k) - 1u; ++mask) {
                const auto s = mask_to_set(mask);
                const int size = static_cast<int>(s.size());
                if (size < lo || size > hi) continue;
                if (s.front() != 0 || s.back() + 1 != static_cast<std::uint32_t>(size))
                    continue;  // not a prefix
                sets.push_back(s);
            }
            std::sort(sets.begin(), sets.end(),
                      [](const auto& x, const auto& y) { return x.size() < y.size(); });
            break;
        case CoefficientKind::rcut:
            for (unsigned mask = 1; mask < (1u << k) - 1u; ++mask) {
                const auto s = mask_to_set(mask);
                const int size = static_cast<int>(s.size());
                if (size < lo || size > hi) continue;
                if (s.back() != static_cast<std::uint32_t>(k - 1) ||
                    s.back() - s.front() + 1 != static_cast<std::uint32_t>(size))
                    continue;  // not a suffix
                sets.push_back(s);
            }
            std::sort(sets.begin(), sets.end(),
                      [](const auto& x, const auto& y) { return x.size() < y.size(); });
            break;
    }
    return sets;
}

namespace {

bool literal_true(const OracleLiteral& lit, const DataTable& table, std::size_t row) {
    const auto code =
        table.columns[static_cast<std::size_t>(lit.column)].codes[row];
    return std::find(lit.categories.begin(), lit.categories.end(), code) !=
           lit.categories.end();
}

bool cedent_true(const std::vector<OracleLiteral>& cedent, const DataTable& table,
                 std::size_t row) {
    for (const auto& lit : cedent)
        if (!literal_true(lit, table, row)) return false;
    return true;
}

// All attribute-position subsets of the allowed sizes, shortest-prefix-first
// lexicographic, built from bitmasks rather than recursion.
std::vector<std::vector<int>> position_combinations(std::size_t count, int minlen,
                                                    int maxlen) {
    const int lo = std::max(1, minlen);
    std::vector<std::vector<int>> combos;
    for (unsigned mask = 1; mask < (1u << count); ++mask) {
        const int size = std::popcount(mask);
        if (size < lo || size > maxlen) continue;
        std::vector<int> combo;
        for (int i = 0; i < static_cast<int>(count); ++i)
            if (mask & (1u << i)) combo.push_back(i);
        combos.push_back(std::move(combo));
    }
    std::sort(combos.begin(), combos.end());  // lexicographic, prefix first
    return combos;
}

// Every cedent admitted by the spec, canonical order, via mixed-radix odometer.
std::vector<std::vector<OracleLiteral>> all_cedents(
    const rulerag::CedentSpec& spec, const DataTable& table) {
    std::vector<std::vector<std::vector<std::uint32_t>>> per_attr;
    std::vector<int> columns;
    for (const auto& attr : spec.attributes) {
        const int col = table.column_index(attr.attribute);
        columns.push_back(col);
        per_attr.push_back(literal_sets(
            table.columns[static_cast<std::size_t>(col)].categories.size(),
            attr.coefficient));
    }

    std::vector<std::vector<OracleLiteral>> cedents;
    for (const auto& combo :
         position_combinations(spec.attributes.size(), spec.minlen, spec.maxlen)) {
        bool feasible = true;
        for (int pos : combo)
            if (per_attr[static_cast<std::size_t>(pos)].empty()) feasible = false;
        if (!feasible) continue;

        std::vector<std::size_t> odometer(combo.size(), 0);
        while (true) {
            std::vector<OracleLiteral> cedent;
            for (std::size_t i = 0; i < combo.size(); ++i) {
                const auto pos = static_cast<std::size_t>(combo[i]);
                cedent.push_back(OracleLiteral{columns[pos], per_attr[pos][odometer[i]]});
            }
            cedents.push_back(std::move(cedent));

            // increment, last position fastest... first attribute is major,
            // so advance from the back
            std::size_t level = combo.size();
            while (level > 0) {
                --level;
                const auto pos = static_cast<std::size_t>(combo[level]);
                if (++odometer[level] < per_attr[pos].size()) break;
                odometer[level] = 0;
                if (level == 0) goto combo_done;
            }
        }
    combo_done:;
    }
    return cedents;
}

}  // namespace

OracleResult mine(const MiningTask& task, const DataTable& table) {
    const auto antes = all_cedents(task.antecedent, table);
    const auto succs = all_cedents(task.succedent, table);
    const auto n = static_cast<long long>(table.row_count);

    OracleResult result;
    for (const auto& ante : antes) {
        for (const auto& succ : succs) {
            long long a = 0, b = 0, c = 0, d = 0;
            for (std::size_t row = 0; row < table.row_count; ++row) {
                const bool at = cedent_true(ante, table, row);
                const bool st = cedent_true(succ, table, row);
                if (at && st) ++a;
                else if (at) ++b;
                else if (st) ++c;
                else ++d;
            }
            ++result.verifications;
            if (a + b == 0 || a + c == 0) continue;

            const long double conf = static_cast<long double>(a) / (a + b);
            const long double lift = conf * n / (a + c);
            const long double aad = lift - 1.0L;

            // Thresholds apply to the reported double-precision quantifier
            // values (conf = a/(a+b), lift = conf*n/(a+c), aad = lift-1, all
            // evaluated in double), so the filter recomputes them in double;
            // the long doubles stay as reference values for the 1e-12 check.
            const double conf_d = static_cast<double>(a) / static_cast<double>(a + b);
            const double lift_d = conf_d * static_cast<double>(a + b + c + d) /
                                  static_cast<double>(a + c);
            const double aad_d = lift_d - 1.0;
            const auto& t = task.thresholds;
            if (t.base_min && a < *t.base_min) continue;
            if (t.conf_min && conf_d < *t.conf_min) continue;
            if (t.aad_min && aad_d < *t.aad_min) continue;
            if (t.lift_min && lift_d < *t.lift_min) continue;

            OracleRule rule;
            rule.antecedent = ante;
            rule.succedent = succ;
            rule.a = a; rule.b = b; rule.c = c; rule.d = d;
            rule.conf = conf; rule.lift = lift; rule.aad = aad;
            result.rules.push_back(std::move(rule));
        }
    }
    return result;
}

}  // namespace oracle
