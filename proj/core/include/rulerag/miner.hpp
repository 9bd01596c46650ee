#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rulerag/cedent.hpp"
#include "rulerag/table.hpp"
#include "rulerag/task.hpp"

namespace rulerag {

struct FourfoldTable {
    long long a = 0;  // ante and succ
    long long b = 0;  // ante, not succ
    long long c = 0;  // not ante, succ
    long long d = 0;  // neither

    long long n() const { return a + b + c + d; }
    bool operator==(const FourfoldTable&) const = default;
};

struct QuantifierValues {
    long long base = 0;  // = a
    double conf = 0.0;   // a / (a+b)
    double lift = 0.0;   // conf / ((a+c)/n)
    double aad = 0.0;    // lift - 1
};

// Literal with labels resolved, self-contained for reporting and rule2text.
struct RuleLiteral {
    std::string attribute;
    bool ordinal = false;
    std::vector<std::uint32_t> category_indices;
    std::vector<std::string> categories;
};

struct MinedRule {
    std::uint32_t id = 0;  // 1-based, canonical enumeration order
    std::vector<RuleLiteral> antecedent;
    std::vector<RuleLiteral> succedent;
    FourfoldTable fourfold;
    QuantifierValues quantifiers;
};

struct TaskResult {
    std::string task_type = "4ftMiner";
    std::size_t row_count = 0;
    std::vector<MinedRule> rules;
    unsigned long long verifications = 0;
    double prep_seconds = 0.0;
    double mining_seconds = 0.0;
};

// Bitmaps must share the same length; throws std::invalid_argument otherwise.
FourfoldTable compute_fourfold(const Bitmap& ante, const Bitmap& succ);

// nullopt when conf (a+b=0) or lift (a+c=0) is undefined; such candidates
// are skipped but still count as verifications.
std::optional<QuantifierValues> eval_quantifiers(const FourfoldTable& ff);

bool thresholds_satisfied(const QuantifierValues& q, const QuantifierThresholds& t);

// Evaluates every (antecedent, succedent) candidate pair. Rules come out in
// canonical enumeration order (antecedent-major, succedent-minor) regardless
// of worker count or pruning; only the verification counter may differ with
// pruning. workers = 0 means hardware concurrency.
TaskResult run_task(const ValidatedTask& task, const DataTable& table,
                    unsigned workers = 1);

}  // namespace rulerag
