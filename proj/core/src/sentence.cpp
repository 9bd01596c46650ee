#include "rulerag/sentence.hpp"

#include <algorithm>

#include "json_detail.hpp"
#include "rulerag/errors.hpp"

namespace rulerag {

AadBandTable AadBandTable::defaults() {
    return {{2.0, 1.0, 0.25, -0.2, -0.5},
            {"extremely much likely", "very much likely", "more likely",
             "approximately the same", "less likely", "much less likely"}};
}

namespace {

void validate_bands(const AadBandTable& bands) {
    if (bands.statements.size() != bands.boundaries.size() + 1)
        throw ConfigError("aad_bands: need exactly one statement more than boundaries");
    for (std::size_t i = 1; i < bands.boundaries.size(); ++i)
        if (bands.boundaries[i] >= bands.boundaries[i - 1])
            throw ConfigError("aad_bands: boundaries must be strictly decreasing");
    for (const auto& s : bands.statements)
        if (s.empty()) throw ConfigError("aad_bands: empty statement");
}

// "16 - 20" -> {"16", "20"}; empty when the label is not a range
std::pair<std::string, std::string> split_range_label(const std::string& label) {
    const auto pos = label.find(" - ");
    if (pos == std::string::npos || pos == 0 || pos + 3 >= label.size()) return {};
    return {label.substr(0, pos), label.substr(pos + 3)};
}

std::string enumerate_categories(const std::vector<std::string>& categories) {
    std::string out = "one of ";
    for (std::size_t i = 0; i < categories.size(); ++i) {
        if (i) out += " and ";
        out += categories[i];
    }
    return out;
}

// Category phrase without the attribute prefix: a plain label, an
// enumeration, or (join mode, ordinal) a collapsed interval.
std::string categories_phrase(const RuleLiteral& literal, const SentenceOptions& options) {
    const auto& cats = literal.categories;
    if (cats.size() == 1) return cats.front();
    if (options.join_ordinal_intervals && literal.ordinal) {
        const auto first = split_range_label(cats.front());
        const auto last = split_range_label(cats.back());
        if (!first.first.empty() && !last.second.empty())
            return first.first + " - " + last.second;
        return "between " + cats.front() + " and " + cats.back();
    }
    return enumerate_categories(cats);
}

std::string literal_phrase(const RuleLiteral& literal, const SentenceOptions& options) {
    std::string prefix = literal.attribute + " is";
    if (const auto it = options.attribute_phrases.find(literal.attribute);
        it != options.attribute_phrases.end())
        prefix = it->second;
    return prefix + " " + categories_phrase(literal, options);
}

std::string apply_template(const std::string& templ, const std::string& categories) {
    const std::string slot = "{categories}";
    const auto pos = templ.find(slot);
    if (pos == std::string::npos)
        throw ConfigError("succedent_template must contain the {categories} slot");
    return templ.substr(0, pos) + categories + templ.substr(pos + slot.size());
}

std::string succedent_text(const std::vector<RuleLiteral>& literals,
                           const SentenceOptions& options) {
    if (literals.size() == 1)
        return apply_template(options.succedent_template,
                              categories_phrase(literals.front(), options));
    return cedent_to_text(literals, options);
}

}  // namespace

const std::string& aad_band_statement(double aad, const AadBandTable& bands) {
    for (std::size_t i = 0; i < bands.boundaries.size(); ++i)
        if (aad >= bands.boundaries[i]) return bands.statements[i];
    return bands.statements.back();
}

std::string cedent_to_text(const std::vector<RuleLiteral>& literals,
                           const SentenceOptions& options) {
    std::string out;
    for (std::size_t i = 0; i < literals.size(); ++i) {
        if (i) out += " and ";
        out += literal_phrase(literals[i], options);
    }
    return out;
}

std::string rule_to_sentence(const MinedRule& rule, const SentenceOptions& options) {
    validate_bands(options.bands);
    return "If " + cedent_to_text(rule.antecedent, options) + " then " +
           succedent_text(rule.succedent, options) + " occur " +
           aad_band_statement(rule.quantifiers.aad, options.bands) + ".";
}

std::vector<std::pair<std::uint32_t, std::string>> generate_sentences(
    const TaskResult& result, const SentenceOptions& options) {
    std::vector<std::pair<std::uint32_t, std::string>> out;
    out.reserve(result.rules.size());
    for (const auto& rule : result.rules)
        out.emplace_back(rule.id, rule_to_sentence(rule, options));
    return out;
}

SentenceOptions parse_sentence_options(const std::string& config_text) {
    detail::json j;
    try {
        j = detail::json::parse(config_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("sentence options are not valid JSON: ") + e.what());
    }
    return detail::sentence_options_from_json(j);
}

namespace detail {

SentenceOptions sentence_options_from_json(const json& j) {
    SentenceOptions options;
    if (!j.is_object()) throw ConfigError("sentences: expected a JSON object");
    const std::string mode = j.value("mode", std::string("enumerate"));
    if (mode == "join")
        options.join_ordinal_intervals = true;
    else if (mode != "enumerate")
        throw ConfigError("sentences.mode: expected 'join' or 'enumerate'");
    if (j.contains("attribute_phrases"))
        for (const auto& [attr, phrase] : j.at("attribute_phrases").items())
            options.attribute_phrases[attr] = phrase.get<std::string>();
    options.succedent_template =
        j.value("succedent_template", options.succedent_template);
    if (j.contains("aad_bands")) {
        options.bands.boundaries =
            j.at("aad_bands").at("boundaries").get<std::vector<double>>();
        options.bands.statements =
            j.at("aad_bands").at("statements").get<std::vector<std::string>>();
    }
    validate_bands(options.bands);
    if (options.succedent_template.find("{categories}") == std::string::npos)
        throw ConfigError("succedent_template must contain the {categories} slot");
    return options;
}

}  // namespace detail

}  // namespace rulerag
