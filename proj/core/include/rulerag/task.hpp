#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rulerag/table.hpp"

namespace rulerag {

enum class CoefficientKind { subset, seq, lcut, rcut, one };

std::string to_string(CoefficientKind kind);
CoefficientKind coefficient_kind_from_string(const std::string& s);

struct CoefficientSpec {
    CoefficientKind kind = CoefficientKind::subset;
    int minlen = 1;
    int maxlen = 1;
};

struct AttributeSpec {
    std::string attribute;
    CoefficientSpec coefficient;
};

struct CedentSpec {
    std::vector<AttributeSpec> attributes;
    int minlen = 1;
    int maxlen = 1;
};

// A rule is accepted iff every threshold that is present holds (>=, no epsilon).
struct QuantifierThresholds {
    std::optional<long long> base_min;
    std::optional<double> conf_min;
    std::optional<double> aad_min;
    std::optional<double> lift_min;

    bool any() const {
        return base_min || conf_min || aad_min || lift_min;
    }
};

struct MiningTask {
    CedentSpec antecedent;
    CedentSpec succedent;
    QuantifierThresholds thresholds;
    bool pruning_enabled = true;
};

// Parses the JSON task schema:
//   {"proc":"4ftMiner",
//    "quantifiers":{"Base":2000,"aad":0.5},
//    "ante":{"attributes":[{"name":"Sex","type":"subset","minlen":1,"maxlen":1}],
//            "minlen":1,"maxlen":3,"type":"con"},
//    "succ":{...},
//    "opts":{"pruning":true}}
// Every invariant violation raises ConfigError naming the offending field.
MiningTask parse_task(const std::string& config_text);
std::string serialize_task(const MiningTask& task);

// Task with attributes resolved to columns and coefficient maxlen clamped to
// the category count minus one (full-category literals are excluded).
struct ResolvedAttribute {
    int column = -1;
    CoefficientSpec coefficient;
};

struct ResolvedCedent {
    std::vector<ResolvedAttribute> attributes;
    int minlen = 1;
    int maxlen = 1;
};

struct ValidatedTask {
    MiningTask task;
    ResolvedCedent antecedent;
    ResolvedCedent succedent;
};

ValidatedTask validate_against_table(const MiningTask& task, const DataTable& table);

}  // namespace rulerag
