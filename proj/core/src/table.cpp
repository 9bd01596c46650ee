#include "rulerag/table.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <fstream>
#include <iconv.h>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "rulerag/errors.hpp"

namespace rulerag {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open data file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool utf8_passthrough(const std::string& encoding) {
    std::string e;
    for (char c : encoding)
        if (c != '-' && c != '_') e.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return e.empty() || e == "utf8" || e == "ascii" || e == "usascii";
}

std::string to_utf8(const std::string& data, const std::string& encoding) {
    if (utf8_passthrough(encoding)) return data;
    iconv_t cd = iconv_open("UTF-8", encoding.c_str());
    if (cd == reinterpret_cast<iconv_t>(-1))
        throw DataError("unsupported text encoding: " + encoding);
    std::string out;
    out.resize(data.size() * 4 + 16);
    char* in_ptr = const_cast<char*>(data.data());
    std::size_t in_left = data.size();
    char* out_ptr = out.data();
    std::size_t out_left = out.size();
    const std::size_t rc = iconv(cd, &in_ptr, &in_left, &out_ptr, &out_left);
    iconv_close(cd);
    if (rc == static_cast<std::size_t>(-1))
        throw DataError("cannot decode data file as " + encoding);
    out.resize(out.size() - out_left);
    return out;
}

// Splits one line into fields. Double-quoted fields may contain the
// delimiter; "" inside quotes is a literal quote.
std::vector<std::string> split_fields(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == delimiter) {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (is_digit(a[i]) && is_digit(b[j])) {
            std::size_t ia = i, jb = j;
            while (ia < a.size() && is_digit(a[ia])) ++ia;
            while (jb < b.size() && is_digit(b[jb])) ++jb;
            std::string_view da = a.substr(i, ia - i);
            std::string_view db = b.substr(j, jb - j);
            std::string_view ta = da.substr(std::min(da.find_first_not_of('0'), da.size() - 1));
            std::string_view tb = db.substr(std::min(db.find_first_not_of('0'), db.size() - 1));
            if (ta.size() != tb.size()) return ta.size() < tb.size();
            if (ta != tb) return ta < tb;
            i = ia;
            j = jb;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return (a.size() - i) < (b.size() - j) || (i == a.size() && j == b.size() && a < b);
}

int DataTable::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i].name == name) return static_cast<int>(i);
    return -1;
}

const AttributeColumn& DataTable::column(std::string_view name) const {
    const int idx = column_index(name);
    if (idx < 0) throw DataError("unknown attribute: " + std::string(name));
    return columns[static_cast<std::size_t>(idx)];
}

RawTable load_table(const std::string& path, char delimiter,
                    const std::string& encoding,
                    const std::vector<std::string>& selected_columns) {
    if (selected_columns.empty())
        throw ConfigError("selected_columns must not be empty");

    const std::string text = to_utf8(read_file(path), encoding);

    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    if (lines.empty()) throw DataError("data file has no header row: " + path);

    const std::vector<std::string> header = split_fields(lines[0], delimiter);
    std::vector<std::size_t> pick;
    pick.reserve(selected_columns.size());
    for (const auto& name : selected_columns) {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            throw DataError("column not found in header: " + name);
        pick.push_back(static_cast<std::size_t>(it - header.begin()));
    }

    RawTable table;
    table.column_names = selected_columns;
    table.rows.reserve(lines.size() - 1);
    for (std::size_t r = 1; r < lines.size(); ++r) {
        if (lines[r].empty() && r + 1 == lines.size()) break;  // trailing newline
        std::vector<std::string> fields = split_fields(lines[r], delimiter);
        if (fields.size() != header.size())
            throw DataError("malformed row " + std::to_string(r + 1) + ": expected " +
                            std::to_string(header.size()) + " fields, got " +
                            std::to_string(fields.size()));
        std::vector<std::string> row;
        row.reserve(pick.size());
        for (std::size_t p : pick) row.push_back(fields[p]);
        table.rows.push_back(std::move(row));
    }
    return table;
}

RawTable impute_most_frequent(const RawTable& table,
                              const std::vector<std::string>& sentinels) {
    const std::unordered_set<std::string> missing(sentinels.begin(), sentinels.end());
    const std::size_t ncols = table.column_names.size();

    std::vector<std::string> fill(ncols);
    std::vector<bool> needs_fill(ncols, false);
    for (std::size_t c = 0; c < ncols; ++c) {
        std::map<std::string, std::size_t> counts;  // ordered: lexicographic tie-break
        bool any_missing = false;
        for (const auto& row : table.rows) {
            if (missing.count(row[c])) {
                any_missing = true;
            } else {
                ++counts[row[c]];
            }
        }
        if (!any_missing) continue;
        if (counts.empty())
            throw DataError("column '" + table.column_names[c] +
                            "' is entirely missing, cannot impute");
        std::size_t best = 0;
        for (const auto& [value, count] : counts) {
            if (count > best) {
                best = count;
                fill[c] = value;
            }
        }
        needs_fill[c] = true;
    }

    RawTable out;
    out.column_names = table.column_names;
    out.rows = table.rows;
    for (auto& row : out.rows)
        for (std::size_t c = 0; c < ncols; ++c)
            if (needs_fill[c] && missing.count(row[c])) row[c] = fill[c];
    return out;
}

DataTable encode_categories(const RawTable& table,
                            const std::vector<ColumnSpec>& specs) {
    DataTable out;
    out.row_count = table.row_count();

    for (std::size_t c = 0; c < table.column_names.size(); ++c) {
        const std::string& name = table.column_names[c];
        const ColumnSpec* spec = nullptr;
        for (const auto& s : specs)
            if (s.name == name) spec = &s;

        std::vector<std::string> observed;
        {
            std::unordered_set<std::string> seen;
            for (const auto& row : table.rows)
                if (seen.insert(row[c]).second) observed.push_back(row[c]);
        }

        AttributeColumn col;
        col.name = name;
        col.kind = spec ? spec->kind : AttributeKind::nominal;

        if (spec && !spec->order.empty()) {
            std::unordered_set<std::string> ordered(spec->order.begin(), spec->order.end());
            for (const auto& v : observed)
                if (!ordered.count(v))
                    throw ConfigError("explicit order for '" + name +
                                      "' omits observed value '" + v + "'");
            for (const auto& v : spec->order)
                if (std::find(observed.begin(), observed.end(), v) == observed.end())
                    throw ConfigError("explicit order for '" + name +
                                      "' lists unobserved value '" + v + "'");
            col.categories = spec->order;
        } else {
            col.categories = observed;
            std::sort(col.categories.begin(), col.categories.end(),
                      [](const std::string& a, const std::string& b) {
                          return natural_less(a, b);
                      });
        }

        std::unordered_map<std::string, std::uint32_t> index;
        for (std::size_t i = 0; i < col.categories.size(); ++i)
            index[col.categories[i]] = static_cast<std::uint32_t>(i);

        col.codes.reserve(out.row_count);
        std::vector<Bitmap> maps(col.categories.size(), Bitmap(out.row_count));
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            const auto it = index.find(table.rows[r][c]);
            if (it == index.end())
                throw DataError("value not encodable in column '" + name +
                                "' (missing values must be imputed first)");
            col.codes.push_back(it->second);
            maps[it->second].set(r);
        }

        out.columns.push_back(std::move(col));
        out.bitmaps.push_back(std::move(maps));
    }
    return out;
}

DataTable load_data_table(const IngestConfig& config) {
    std::vector<std::string> names;
    names.reserve(config.columns.size());
    for (const auto& c : config.columns) names.push_back(c.name);
    RawTable raw = load_table(config.path, config.delimiter, config.encoding, names);
    raw = impute_most_frequent(raw, config.sentinels);
    return encode_categories(raw, config.columns);
}

}  // namespace rulerag
