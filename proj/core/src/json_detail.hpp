#pragma once

// Internal JSON <-> domain-type conversions shared by task, sentence and
// pipeline parsing. Not installed.

#include <json.hpp>

#include "rulerag/pipeline.hpp"
#include "rulerag/sentence.hpp"
#include "rulerag/table.hpp"
#include "rulerag/task.hpp"

namespace rulerag::detail {

using json = nlohmann::ordered_json;

MiningTask task_from_json(const json& j);
json task_to_json(const MiningTask& task);

SentenceOptions sentence_options_from_json(const json& j);
IngestConfig ingest_config_from_json(const json& j);

}  // namespace rulerag::detail
