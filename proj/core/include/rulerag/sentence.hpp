#pragma once

#include <map>
#include <string>
#include <vector>

#include "rulerag/miner.hpp"

namespace rulerag {

// Descending aad boundaries with one phrase per band (statements has one
// more entry than boundaries; the last one catches everything below).
struct AadBandTable {
    std::vector<double> boundaries;
    std::vector<std::string> statements;

    static AadBandTable defaults();
};

struct SentenceOptions {
    bool join_ordinal_intervals = false;  // default: enumerate categories
    std::map<std::string, std::string> attribute_phrases;  // "Sex" -> "driver is"
    std::string succedent_template = "{categories} accidents";
    AadBandTable bands = AadBandTable::defaults();
};

// statements[i] for the smallest i with aad >= boundaries[i]; the last
// statement when aad is below every boundary.
const std::string& aad_band_statement(double aad, const AadBandTable& bands);

std::string cedent_to_text(const std::vector<RuleLiteral>& literals,
                           const SentenceOptions& options);

// "If {ante} then {succ} occur {statement}."
std::string rule_to_sentence(const MinedRule& rule, const SentenceOptions& options);

// One (rule_id, sentence) per rule, in rule_id order.
std::vector<std::pair<std::uint32_t, std::string>> generate_sentences(
    const TaskResult& result, const SentenceOptions& options);

// Options file: {"mode":"join"|"enumerate","attribute_phrases":{...},
// "succedent_template":"...","aad_bands":{"boundaries":[...],"statements":[...]}}
SentenceOptions parse_sentence_options(const std::string& config_text);

}  // namespace rulerag
