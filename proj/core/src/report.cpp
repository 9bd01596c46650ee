#include "rulerag/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json_detail.hpp"
#include "rulerag/errors.hpp"

namespace rulerag {

namespace {

std::string literal_text(const RuleLiteral& literal) {
    std::string out = literal.attribute + "(";
    for (std::size_t i = 0; i < literal.categories.size(); ++i) {
        if (i) out += ' ';
        out += literal.categories[i];
    }
    out += ')';
    return out;
}

std::string cedent_text(const std::vector<RuleLiteral>& literals) {
    std::string out;
    for (std::size_t i = 0; i < literals.size(); ++i) {
        if (i) out += " & ";
        out += literal_text(literals[i]);
    }
    return out;
}

using detail::json;

json literal_to_json(const RuleLiteral& literal) {
    return {{"attribute", literal.attribute},
            {"ordinal", literal.ordinal},
            {"category_indices", literal.category_indices},
            {"categories", literal.categories}};
}

RuleLiteral literal_from_json(const json& j) {
    RuleLiteral out;
    out.attribute = j.at("attribute").get<std::string>();
    out.ordinal = j.at("ordinal").get<bool>();
    out.category_indices = j.at("category_indices").get<std::vector<std::uint32_t>>();
    out.categories = j.at("categories").get<std::vector<std::string>>();
    return out;
}

}  // namespace

std::string format_duration(double seconds) {
    const auto total = static_cast<long long>(seconds);
    char buf[48];
    std::snprintf(buf, sizeof buf, "%02lldh %02lldm %02llds", total / 3600,
                  (total / 60) % 60, total % 60);
    return buf;
}

std::string format_rule_listing(const TaskResult& result) {
    std::string out = "RULEID BASE  CONF  AAD    Rule\n";
    char buf[64];
    for (const auto& rule : result.rules) {
        // +0.0 guards against "-0.000" for exact zero
        std::snprintf(buf, sizeof buf, "%u %5lld %.3f %+.3f ", rule.id,
                      rule.quantifiers.base, rule.quantifiers.conf,
                      rule.quantifiers.aad + 0.0);
        out += buf;
        out += cedent_text(rule.antecedent);
        out += " => ";
        out += cedent_text(rule.succedent);
        out += '\n';
    }
    return out;
}

std::string format_task_summary(const TaskResult& result) {
    std::ostringstream out;
    out << "Task type : " << result.task_type << '\n'
        << "Number of verifications : " << result.verifications << '\n'
        << "Number of rules : " << result.rules.size() << '\n'
        << "Total time needed : "
        << format_duration(result.prep_seconds + result.mining_seconds) << '\n'
        << "Time of data preparation : " << format_duration(result.prep_seconds) << '\n'
        << "Time of rule mining : " << format_duration(result.mining_seconds) << '\n';
    return out.str();
}

std::string rules_to_json(const TaskResult& result) {
    json rules = json::array();
    for (const auto& rule : result.rules) {
        json ante = json::array();
        for (const auto& lit : rule.antecedent) ante.push_back(literal_to_json(lit));
        json succ = json::array();
        for (const auto& lit : rule.succedent) succ.push_back(literal_to_json(lit));
        rules.push_back({{"id", rule.id},
                         {"ante", std::move(ante)},
                         {"succ", std::move(succ)},
                         {"fourfold",
                          {{"a", rule.fourfold.a},
                           {"b", rule.fourfold.b},
                           {"c", rule.fourfold.c},
                           {"d", rule.fourfold.d}}},
                         {"quantifiers",
                          {{"base", rule.quantifiers.base},
                           {"conf", rule.quantifiers.conf},
                           {"lift", rule.quantifiers.lift},
                           {"aad", rule.quantifiers.aad}}}});
    }
    const json doc = {{"task_type", result.task_type},
                      {"row_count", result.row_count},
                      {"verifications", result.verifications},
                      {"prep_seconds", result.prep_seconds},
                      {"mining_seconds", result.mining_seconds},
                      {"rules", std::move(rules)}};
    return doc.dump(2) + "\n";
}

TaskResult rules_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError(std::string("rule file is not valid JSON: ") + e.what());
    }
    try {
        TaskResult result;
        result.task_type = doc.at("task_type").get<std::string>();
        result.row_count = doc.at("row_count").get<std::size_t>();
        result.verifications = doc.at("verifications").get<unsigned long long>();
        result.prep_seconds = doc.value("prep_seconds", 0.0);
        result.mining_seconds = doc.value("mining_seconds", 0.0);
        for (const auto& r : doc.at("rules")) {
            MinedRule rule;
            rule.id = r.at("id").get<std::uint32_t>();
            for (const auto& lit : r.at("ante"))
                rule.antecedent.push_back(literal_from_json(lit));
            for (const auto& lit : r.at("succ"))
                rule.succedent.push_back(literal_from_json(lit));
            const auto& ff = r.at("fourfold");
            rule.fourfold = {ff.at("a").get<long long>(), ff.at("b").get<long long>(),
                             ff.at("c").get<long long>(), ff.at("d").get<long long>()};
            const auto& q = r.at("quantifiers");
            rule.quantifiers.base = q.at("base").get<long long>();
            rule.quantifiers.conf = q.at("conf").get<double>();
            rule.quantifiers.lift = q.at("lift").get<double>();
            rule.quantifiers.aad = q.at("aad").get<double>();
            result.rules.push_back(std::move(rule));
        }
        return result;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed rule file: ") + e.what());
    }
}

}  // namespace rulerag
