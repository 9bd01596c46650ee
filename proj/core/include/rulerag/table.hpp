#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rulerag/bitmap.hpp"

namespace rulerag {

enum class AttributeKind { nominal, ordinal };

// Per-column ingest settings. An empty `order` means categories are sorted
// with the numeric-aware natural comparator; an explicit order implies the
// caller controls the total order used by seq/lcut/rcut.
struct ColumnSpec {
    std::string name;
    AttributeKind kind = AttributeKind::nominal;
    std::vector<std::string> order;
};

struct IngestConfig {
    std::string path;
    char delimiter = '\t';
    std::string encoding = "utf-8";
    std::vector<ColumnSpec> columns;
    std::vector<std::string> sentinels = {"", "NA"};
};

// Text table as read from disk, restricted to the selected columns.
struct RawTable {
    std::vector<std::string> column_names;
    std::vector<std::vector<std::string>> rows;

    std::size_t row_count() const { return rows.size(); }
};

struct AttributeColumn {
    std::string name;
    AttributeKind kind = AttributeKind::nominal;
    std::vector<std::string> categories;   // ordered; total order for ordinals
    std::vector<std::uint32_t> codes;      // per-row index into categories
};

// Encoded table: one bitmap per (column, category). For every column the
// category bitmaps partition the rows.
struct DataTable {
    std::size_t row_count = 0;
    std::vector<AttributeColumn> columns;
    std::vector<std::vector<Bitmap>> bitmaps;  // parallel to columns/categories

    int column_index(std::string_view name) const;
    const AttributeColumn& column(std::string_view name) const;
    const Bitmap& category_bitmap(std::size_t col, std::size_t cat) const {
        return bitmaps[col][cat];
    }
};

// Numeric-aware natural order: digit runs compare by value, other runs
// lexicographically ("20" < "100", "a2" < "a10").
bool natural_less(std::string_view a, std::string_view b);

RawTable load_table(const std::string& path, char delimiter,
                    const std::string& encoding,
                    const std::vector<std::string>& selected_columns);

RawTable impute_most_frequent(const RawTable& table,
                              const std::vector<std::string>& sentinels = {"", "NA"});

// `specs` entries are matched to columns by name; columns without a spec
// default to nominal with natural-sorted categories.
DataTable encode_categories(const RawTable& table,
                            const std::vector<ColumnSpec>& specs = {});

// load_table + impute_most_frequent + encode_categories in one step.
DataTable load_data_table(const IngestConfig& config);

}  // namespace rulerag
