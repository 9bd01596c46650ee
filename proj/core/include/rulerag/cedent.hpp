#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rulerag/table.hpp"
#include "rulerag/task.hpp"

namespace rulerag {

// A(alpha): the condition that a row's value for `column` falls in the
// category set. The set is always a nonempty proper subset of the
// column's categories.
struct Literal {
    int column = -1;
    std::vector<std::uint32_t> categories;  // sorted ascending

    bool operator==(const Literal&) const = default;
};

struct Cedent {
    std::vector<Literal> literals;
    Bitmap bitmap;
};

// Category index sets admitted by a coefficient over k categories, with
// maxlen clamped to k-1. Deterministic order:
//   subset: size ascending, then lexicographic over index tuples
//   seq:    start ascending, then length ascending
//   lcut:   prefix length ascending;  rcut: suffix length ascending
//   one:    index ascending
std::vector<std::vector<std::uint32_t>> enumerate_coefficient_sets(
    std::size_t category_count, const CoefficientSpec& coefficient);

std::vector<Literal> enumerate_literals(const DataTable& table,
                                        const ResolvedAttribute& attribute);

// OR of the member category bitmaps.
Bitmap literal_bitmap(const Literal& literal, const DataTable& table);

// Attribute-position combinations of size max(1,minlen)..maxlen, in
// lexicographic order over position tuples ({0} < {0,1} < {0,2} < {1} < ...).
std::vector<std::vector<int>> attribute_combinations(std::size_t attribute_count,
                                                     int minlen, int maxlen);

using CedentSink = std::function<void(const Cedent&)>;

// All literal assignments for one fixed attribute combination, odometer order
// (first attribute major), bitmaps built by incremental intersection.
// A partial conjunction whose popcount drops below `prune_below` is skipped
// together with all of its completions; pass prune_below <= 0 to disable.
void enumerate_combination_cedents(const std::vector<int>& combination,
                                   const std::vector<std::vector<Literal>>& literals_per_attr,
                                   const std::vector<std::vector<Bitmap>>& bitmaps_per_attr,
                                   std::size_t row_count, long long prune_below,
                                   const CedentSink& sink);

// Full stream over every admitted cedent of the spec, combination-major.
void enumerate_cedents(const ResolvedCedent& spec, const DataTable& table,
                       const CedentSink& sink, long long prune_below = 0);

std::vector<Cedent> collect_cedents(const ResolvedCedent& spec, const DataTable& table,
                                    long long prune_below = 0);

}  // namespace rulerag
