#include "rulerag/cedent.hpp"

#include <algorithm>

namespace rulerag {

namespace {

void subsets_of_size(std::size_t k, int size,
                     std::vector<std::vector<std::uint32_t>>& out) {
    std::vector<std::uint32_t> current;
    current.reserve(static_cast<std::size_t>(size));
    const auto recurse = [&](auto&& self, std::uint32_t next) -> void {
        if (static_cast<int>(current.size()) == size) {
            out.push_back(current);
            return;
        }
        const int still_needed = size - static_cast<int>(current.size());
        for (std::uint32_t i = next; i + still_needed <= k; ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
}

}  // namespace

std::vector<std::vector<std::uint32_t>> enumerate_coefficient_sets(
    std::size_t category_count, const CoefficientSpec& coefficient) {
    const int k = static_cast<int>(category_count);
    const int lo = coefficient.minlen;
    const int hi = std::min(coefficient.maxlen, k - 1);  // proper-subset clamp

    std::vector<std::vector<std::uint32_t>> out;
    if (k <= 1 || hi < lo) return out;

    switch (coefficient.kind) {
        case CoefficientKind::one:
            for (std::uint32_t i = 0; i < category_count; ++i) out.push_back({i});
            break;
        case CoefficientKind::subset:
            for (int size = lo; size <= hi; ++size)
                subsets_of_size(category_count, size, out);
            break;
        case CoefficientKind::seq:
            for (int start = 0; start < k; ++start)
                for (int len = lo; len <= hi && start + len <= k; ++len) {
                    std::vector<std::uint32_t> run(static_cast<std::size_t>(len));
                    for (int i = 0; i < len; ++i)
                        run[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(start + i);
                    out.push_back(std::move(run));
                }
            break;
        case CoefficientKind::lcut:
            for (int len = lo; len <= hi; ++len) {
                std::vector<std::uint32_t> prefix(static_cast<std::size_t>(len));
                for (int i = 0; i < len; ++i) prefix[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
                out.push_back(std::move(prefix));
            }
            break;
        case CoefficientKind::rcut:
            for (int len = lo; len <= hi; ++len) {
                std::vector<std::uint32_t> suffix(static_cast<std::size_t>(len));
                for (int i = 0; i < len; ++i)
                    suffix[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(k - len + i);
                out.push_back(std::move(suffix));
            }
            break;
    }
    return out;
}

std::vector<Literal> enumerate_literals(const DataTable& table,
                                        const ResolvedAttribute& attribute) {
    const auto& column = table.columns[static_cast<std::size_t>(attribute.column)];
    std::vector<Literal> out;
    for (auto& set : enumerate_coefficient_sets(column.categories.size(),
                                                attribute.coefficient))
        out.push_back(Literal{attribute.column, std::move(set)});
    return out;
}

Bitmap literal_bitmap(const Literal& literal, const DataTable& table) {
    const auto& maps = table.bitmaps[static_cast<std::size_t>(literal.column)];
    Bitmap out(table.row_count);
    for (std::uint32_t cat : literal.categories) out |= maps[cat];
    return out;
}

std::vector<std::vector<int>> attribute_combinations(std::size_t attribute_count,
                                                     int minlen, int maxlen) {
    const int lo = std::max(1, minlen);
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    const auto recurse = [&](auto&& self, int next) -> void {
        for (int i = next; i < static_cast<int>(attribute_count); ++i) {
            current.push_back(i);
            if (static_cast<int>(current.size()) >= lo) out.push_back(current);
            if (static_cast<int>(current.size()) < maxlen) self(self, i + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

void enumerate_combination_cedents(const std::vector<int>& combination,
                                   const std::vector<std::vector<Literal>>& literals_per_attr,
                                   const std::vector<std::vector<Bitmap>>& bitmaps_per_attr,
                                   std::size_t row_count, long long prune_below,
                                   const CedentSink& sink) {
    const std::size_t depth = combination.size();
    Cedent cedent;
    cedent.literals.reserve(depth);
    std::vector<Bitmap> prefix(depth);

    const auto recurse = [&](auto&& self, std::size_t level) -> void {
        const int attr = combination[level];
        const auto& literals = literals_per_attr[static_cast<std::size_t>(attr)];
        const auto& bitmaps = bitmaps_per_attr[static_cast<std::size_t>(attr)];
        for (std::size_t i = 0; i < literals.size(); ++i) {
            Bitmap& acc = prefix[level];
            if (level == 0)
                acc = bitmaps[i];
            else
                acc = prefix[level - 1] & bitmaps[i];
            if (prune_below > 0 &&
                static_cast<long long>(acc.count()) < prune_below)
                continue;  // no completion can recover support
            cedent.literals.push_back(literals[i]);
            if (level + 1 == depth) {
                cedent.bitmap = acc;
                sink(cedent);
            } else {
                self(self, level + 1);
            }
            cedent.literals.pop_back();
        }
    };

    if (depth == 0) return;
    bool feasible = true;
    for (int attr : combination)
        if (literals_per_attr[static_cast<std::size_t>(attr)].empty()) feasible = false;
    if (!feasible) return;
    (void)row_count;
    recurse(recurse, 0);
}

void enumerate_cedents(const ResolvedCedent& spec, const DataTable& table,
                       const CedentSink& sink, long long prune_below) {
    std::vector<std::vector<Literal>> literals(spec.attributes.size());
    std::vector<std::vector<Bitmap>> bitmaps(spec.attributes.size());
    for (std::size_t i = 0; i < spec.attributes.size(); ++i) {
        literals[i] = enumerate_literals(table, spec.attributes[i]);
        bitmaps[i].reserve(literals[i].size());
        for (const auto& lit : literals[i])
            bitmaps[i].push_back(literal_bitmap(lit, table));
    }
    for (const auto& combo :
         attribute_combinations(spec.attributes.size(), spec.minlen, spec.maxlen)) {
        // combinations index into spec.attributes; remap bitmap/literal lookup
        enumerate_combination_cedents(combo, literals, bitmaps, table.row_count,
                                      prune_below, sink);
    }
}

std::vector<Cedent> collect_cedents(const ResolvedCedent& spec, const DataTable& table,
                                    long long prune_below) {
    std::vector<Cedent> out;
    enumerate_cedents(spec, table, [&](const Cedent& c) { out.push_back(c); },
                      prune_below);
    return out;
}

}  // namespace rulerag
