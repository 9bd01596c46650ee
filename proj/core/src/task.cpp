#include "rulerag/task.hpp"

#include <algorithm>
#include <unordered_set>

#include "json_detail.hpp"
#include "rulerag/errors.hpp"

namespace rulerag {

std::string to_string(CoefficientKind kind) {
    switch (kind) {
        case CoefficientKind::subset: return "subset";
        case CoefficientKind::seq: return "seq";
        case CoefficientKind::lcut: return "lcut";
        case CoefficientKind::rcut: return "rcut";
        case CoefficientKind::one: return "one";
    }
    return "subset";
}

CoefficientKind coefficient_kind_from_string(const std::string& s) {
    if (s == "subset") return CoefficientKind::subset;
    if (s == "seq") return CoefficientKind::seq;
    if (s == "lcut") return CoefficientKind::lcut;
    if (s == "rcut") return CoefficientKind::rcut;
    if (s == "one") return CoefficientKind::one;
    throw ConfigError("unknown coefficient type: '" + s + "'");
}

namespace detail {

namespace {

CedentSpec cedent_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("attributes"))
        throw ConfigError(where + ": expected an object with 'attributes'");
    if (j.contains("type") && j.at("type") != "con")
        throw ConfigError(where + ".type: only 'con' (conjunction) is supported");

    CedentSpec spec;
    for (const auto& a : j.at("attributes")) {
        AttributeSpec attr;
        attr.attribute = a.at("name").get<std::string>();
        attr.coefficient.kind =
            coefficient_kind_from_string(a.value("type", std::string("subset")));
        if (attr.coefficient.kind == CoefficientKind::one) {
            attr.coefficient.minlen = 1;
            attr.coefficient.maxlen = 1;
        } else {
            attr.coefficient.minlen = a.value("minlen", 1);
            attr.coefficient.maxlen = a.value("maxlen", attr.coefficient.minlen);
        }
        if (attr.coefficient.minlen < 1)
            throw ConfigError(where + "." + attr.attribute + ".minlen: must be >= 1");
        if (attr.coefficient.minlen > attr.coefficient.maxlen)
            throw ConfigError(where + "." + attr.attribute +
                              ": minlen exceeds maxlen");
        spec.attributes.push_back(std::move(attr));
    }

    spec.minlen = j.value("minlen", 1);
    spec.maxlen = j.value("maxlen", static_cast<int>(spec.attributes.size()));
    if (spec.minlen < 0) throw ConfigError(where + ".minlen: must be >= 0");
    if (spec.maxlen < 1) throw ConfigError(where + ".maxlen: must be >= 1");
    if (spec.minlen > spec.maxlen)
        throw ConfigError(where + ": minlen exceeds maxlen");
    if (spec.maxlen > static_cast<int>(spec.attributes.size()))
        throw ConfigError(where + ".maxlen: exceeds number of attributes");

    std::unordered_set<std::string> seen;
    for (const auto& a : spec.attributes)
        if (!seen.insert(a.attribute).second)
            throw ConfigError(where + ": duplicate attribute '" + a.attribute + "'");
    return spec;
}

json cedent_to_json(const CedentSpec& spec) {
    json attrs = json::array();
    for (const auto& a : spec.attributes)
        attrs.push_back({{"name", a.attribute},
                         {"type", to_string(a.coefficient.kind)},
                         {"minlen", a.coefficient.minlen},
                         {"maxlen", a.coefficient.maxlen}});
    return {{"attributes", std::move(attrs)},
            {"minlen", spec.minlen},
            {"maxlen", spec.maxlen},
            {"type", "con"}};
}

}  // namespace

MiningTask task_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("task: expected a JSON object");
    if (j.contains("proc") && j.at("proc") != "4ftMiner")
        throw ConfigError("proc: only '4ftMiner' is supported");

    MiningTask task;
    if (!j.contains("quantifiers"))
        throw ConfigError("quantifiers: section is required");
    for (const auto& [key, value] : j.at("quantifiers").items()) {
        if (key == "Base" || key == "base") {
            task.thresholds.base_min = value.get<long long>();
            if (*task.thresholds.base_min < 0)
                throw ConfigError("quantifiers.Base: must be >= 0");
        } else if (key == "conf") {
            task.thresholds.conf_min = value.get<double>();
            if (*task.thresholds.conf_min < 0.0 || *task.thresholds.conf_min > 1.0)
                throw ConfigError("quantifiers.conf: must lie in [0,1]");
        } else if (key == "aad") {
            task.thresholds.aad_min = value.get<double>();
        } else if (key == "lift") {
            task.thresholds.lift_min = value.get<double>();
            if (*task.thresholds.lift_min < 0.0)
                throw ConfigError("quantifiers.lift: must be >= 0");
        } else {
            throw ConfigError("quantifiers: unknown quantifier '" + key + "'");
        }
    }
    if (!task.thresholds.any())
        throw ConfigError("quantifiers: at least one threshold is required");

    if (!j.contains("ante")) throw ConfigError("ante: section is required");
    if (!j.contains("succ")) throw ConfigError("succ: section is required");
    task.antecedent = cedent_from_json(j.at("ante"), "ante");
    task.succedent = cedent_from_json(j.at("succ"), "succ");
    if (task.succedent.minlen < 1)
        throw ConfigError("succ.minlen: must be >= 1");

    std::unordered_set<std::string> ante_names;
    for (const auto& a : task.antecedent.attributes) ante_names.insert(a.attribute);
    for (const auto& a : task.succedent.attributes)
        if (ante_names.count(a.attribute))
            throw ConfigError("attribute '" + a.attribute +
                              "' appears in both ante and succ");

    if (j.contains("opts")) {
        // unknown opts keys (e.g. use_cache) are tolerated and ignored
        task.pruning_enabled = j.at("opts").value("pruning", true);
    }
    return task;
}

json task_to_json(const MiningTask& task) {
    json quant = json::object();
    if (task.thresholds.base_min) quant["Base"] = *task.thresholds.base_min;
    if (task.thresholds.conf_min) quant["conf"] = *task.thresholds.conf_min;
    if (task.thresholds.aad_min) quant["aad"] = *task.thresholds.aad_min;
    if (task.thresholds.lift_min) quant["lift"] = *task.thresholds.lift_min;
    return {{"proc", "4ftMiner"},
            {"quantifiers", std::move(quant)},
            {"ante", cedent_to_json(task.antecedent)},
            {"succ", cedent_to_json(task.succedent)},
            {"opts", {{"pruning", task.pruning_enabled}}}};
}

}  // namespace detail

MiningTask parse_task(const std::string& config_text) {
    detail::json j;
    try {
        j = detail::json::parse(config_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("task config is not valid JSON: ") + e.what());
    }
    return detail::task_from_json(j);
}

std::string serialize_task(const MiningTask& task) {
    return detail::task_to_json(task).dump(2) + "\n";
}

ValidatedTask validate_against_table(const MiningTask& task, const DataTable& table) {
    ValidatedTask out;
    out.task = task;

    const auto resolve = [&](const CedentSpec& spec, const std::string& where) {
        ResolvedCedent res;
        res.minlen = std::max(1, spec.minlen);  // never yields an empty cedent
        res.maxlen = spec.maxlen;
        for (const auto& attr : spec.attributes) {
            const int col = table.column_index(attr.attribute);
            if (col < 0)
                throw ConfigError(where + ": attribute '" + attr.attribute +
                                  "' does not exist in the data table");
            const auto& column = table.columns[static_cast<std::size_t>(col)];
            const auto kind = attr.coefficient.kind;
            if ((kind == CoefficientKind::seq || kind == CoefficientKind::lcut ||
                 kind == CoefficientKind::rcut) &&
                column.kind != AttributeKind::ordinal)
                throw ConfigError(where + ": coefficient '" + to_string(kind) +
                                  "' requires ordinal attribute, but '" +
                                  attr.attribute + "' is nominal");
            ResolvedAttribute resolved;
            resolved.column = col;
            resolved.coefficient = attr.coefficient;
            // proper-subset rule: a literal never covers all k categories
            const int limit = static_cast<int>(column.categories.size()) - 1;
            resolved.coefficient.maxlen = std::min(resolved.coefficient.maxlen, limit);
            res.attributes.push_back(resolved);
        }
        return res;
    };

    out.antecedent = resolve(task.antecedent, "ante");
    out.succedent = resolve(task.succedent, "succ");
    return out;
}

}  // namespace rulerag
