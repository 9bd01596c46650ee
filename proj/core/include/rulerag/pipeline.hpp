#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "rulerag/miner.hpp"
#include "rulerag/rag.hpp"
#include "rulerag/sentence.hpp"
#include "rulerag/table.hpp"
#include "rulerag/task.hpp"

namespace rulerag {

struct ChunkingConfig {
    int chunk_size = 8;
    int overlap = 2;
};

// One config file with independent sections:
//   {"data":{...}, "task":{...}, "sentences":{...}, "chunking":{...},
//    "output":{"dir":"out"}}
struct PipelineConfig {
    IngestConfig data;
    MiningTask task;
    SentenceOptions sentences;
    ChunkingConfig chunking;
    std::filesystem::path out_dir = ".";
};

PipelineConfig parse_pipeline_config(const std::string& config_text);
PipelineConfig load_pipeline_config(const std::string& path);

// Fixed artifact names inside the output directory.
struct StagePaths {
    std::filesystem::path rules_json;
    std::filesystem::path rules_txt;
    std::filesystem::path sentences_txt;
    std::filesystem::path chunks_jsonl;

    static StagePaths in(const std::filesystem::path& dir);
};

// Independent stages; each writes its artifacts and the next stage reads
// them back. `progress` receives status lines (CLI passes stderr).
TaskResult stage_mine(const PipelineConfig& config, unsigned workers,
                      std::ostream& progress);
void stage_text(const std::filesystem::path& rules_json,
                const SentenceOptions& options,
                const std::filesystem::path& sentences_txt);
void stage_emit(const std::filesystem::path& sentences_txt,
                const ChunkingConfig& chunking,
                const std::filesystem::path& chunks_jsonl);

// mine + text + emit, byte-identical to running the stages one by one.
void run_pipeline(const PipelineConfig& config, unsigned workers,
                  std::ostream& progress);

}  // namespace rulerag
