#pragma once

#include <string>

#include "rulerag/miner.hpp"

namespace rulerag {

// "01h 01m 01s" style, seconds floored.
std::string format_duration(double seconds);

// Header plus one line per rule:
//   RULEID BASE  CONF  AAD    Rule
//        1  2512 0.030 +0.551 Sex(Male) & Area(2,Rural) => Severity(Fatal)
std::string format_rule_listing(const TaskResult& result);

std::string format_task_summary(const TaskResult& result);

// Machine-readable rule file consumed by rule2text: task type, row count,
// verifications, and one record per rule (literals with labels, a/b/c/d,
// quantifier values).
std::string rules_to_json(const TaskResult& result);
TaskResult rules_from_json(const std::string& text);

}  // namespace rulerag
