#include <doctest.h>

#include <algorithm>

#include "rulerag/errors.hpp"
#include "rulerag/sentence.hpp"

using namespace rulerag;

namespace {

SentenceOptions accident_options() {
    SentenceOptions options;
    options.attribute_phrases = {{"Driver_Age_Band", "drivers age is"},
                                 {"Sex", "driver is"}};
    return options;
}

MinedRule reference_rule(double aad = 0.551) {
    MinedRule rule;
    rule.id = 1;
    rule.antecedent = {
        {"Driver_Age_Band", true, {0, 1, 2}, {"16 - 20", "21 - 25", "26 - 35"}},
        {"Sex", false, {1}, {"Male"}},
        {"Area", false, {0}, {"2,Rural"}}};
    rule.succedent = {{"Severity", true, {0}, {"Fatal"}}};
    rule.quantifiers = {2512, 0.030, aad + 1.0, aad};
    return rule;
}

}  // namespace

TEST_CASE("aad band selection") {
    const AadBandTable bands = AadBandTable::defaults();
    CHECK(aad_band_statement(0.551, bands) == "more likely");
    CHECK(aad_band_statement(0.0, bands) == "approximately the same");
    CHECK(aad_band_statement(3.0, bands) == "extremely much likely");
    CHECK(aad_band_statement(-0.3, bands) == "less likely");
    CHECK(aad_band_statement(-0.9, bands) == "much less likely");
}

TEST_CASE("band selection is total and monotone over a sweep") {
    const AadBandTable bands = AadBandTable::defaults();
    std::size_t previous_band = bands.statements.size();
    for (double aad = -1.0; aad <= 3.0; aad += 0.01) {
        const std::string& s = aad_band_statement(aad, bands);
        const auto band = static_cast<std::size_t>(
            std::find(bands.statements.begin(), bands.statements.end(), s) -
            bands.statements.begin());
        REQUIRE(band < bands.statements.size());
        CHECK(band <= previous_band);  // higher aad never moves to a later band
        previous_band = band;
    }
}

TEST_CASE("cedent text modes") {
    const SentenceOptions options = accident_options();
    const std::vector<RuleLiteral> sex = {{"Sex", false, {1}, {"Male"}}};
    CHECK(cedent_to_text(sex, options) == "driver is Male");

    const std::vector<RuleLiteral> ages = {
        {"Driver_Age_Band", true, {0, 1, 2}, {"16 - 20", "21 - 25", "26 - 35"}}};
    CHECK(cedent_to_text(ages, options) ==
          "drivers age is one of 16 - 20 and 21 - 25 and 26 - 35");

    SentenceOptions joined = options;
    joined.join_ordinal_intervals = true;
    CHECK(cedent_to_text(ages, joined) == "drivers age is 16 - 35");

    // non-range ordinal labels fall back to between/and
    const std::vector<RuleLiteral> grades = {{"Grade", true, {0, 1}, {"Low", "Mid"}}};
    CHECK(cedent_to_text(grades, joined) == "Grade is between Low and Mid");

    // nominal multi-category literals enumerate even in join mode
    const std::vector<RuleLiteral> areas = {{"Area", false, {0, 1}, {"Rural", "Urban"}}};
    CHECK(cedent_to_text(areas, joined) == "Area is one of Rural and Urban");
}

TEST_CASE("rule sentence reproduces the reference output byte for byte") {
    const SentenceOptions options = accident_options();
    CHECK(rule_to_sentence(reference_rule(), options) ==
          "If drivers age is one of 16 - 20 and 21 - 25 and 26 - 35 and driver is "
          "Male and Area is 2,Rural then Fatal accidents occur more likely.");

    SentenceOptions joined = options;
    joined.join_ordinal_intervals = true;
    CHECK(rule_to_sentence(reference_rule(), joined) ==
          "If drivers age is 16 - 35 and driver is Male and Area is 2,Rural then "
          "Fatal accidents occur more likely.");
}

TEST_CASE("multi-category succedent and zero aad") {
    SentenceOptions options = accident_options();
    MinedRule rule = reference_rule(0.0);
    rule.succedent = {{"Severity", true, {0, 1}, {"Fatal", "Serious"}}};
    const std::string sentence = rule_to_sentence(rule, options);
    CHECK(sentence.find("one of Fatal and Serious") != std::string::npos);
    CHECK(sentence.find("occur approximately the same.") != std::string::npos);
}

TEST_CASE("generate_sentences keeps order and duplicates") {
    TaskResult result;
    result.rules.push_back(reference_rule());
    result.rules.push_back(reference_rule());
    result.rules[1].id = 2;
    const auto sentences = generate_sentences(result, accident_options());
    REQUIRE(sentences.size() == 2);
    CHECK(sentences[0].first == 1);
    CHECK(sentences[1].first == 2);
    CHECK(sentences[0].second == sentences[1].second);  // no dedup

    CHECK(generate_sentences(TaskResult{}, accident_options()).empty());
}

TEST_CASE("every sentence matches the If/then/occur template") {
    const auto sentence = rule_to_sentence(reference_rule(-0.7), accident_options());
    CHECK(sentence.rfind("If ", 0) == 0);
    CHECK(sentence.find(" then ") != std::string::npos);
    CHECK(sentence.find(" occur ") != std::string::npos);
    CHECK(sentence.back() == '.');
}

TEST_CASE("options parsing") {
    const SentenceOptions options = parse_sentence_options(R"({
      "mode": "join",
      "attribute_phrases": {"Sex": "driver is"},
      "aad_bands": {"boundaries": [1.0, 0.0], "statements": ["a", "b", "c"]}
    })");
    CHECK(options.join_ordinal_intervals);
    CHECK(options.attribute_phrases.at("Sex") == "driver is");
    CHECK(aad_band_statement(0.5, options.bands) == "b");

    CHECK_THROWS_AS(parse_sentence_options(R"({"mode":"verbose"})"), ConfigError);
    CHECK_THROWS_AS(parse_sentence_options(
                        R"({"aad_bands":{"boundaries":[0.0,1.0],
                            "statements":["a","b","c"]}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_sentence_options(
                        R"({"aad_bands":{"boundaries":[1.0],"statements":["a"]}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_sentence_options(R"({"succedent_template":"no slot"})"),
                    ConfigError);
}
