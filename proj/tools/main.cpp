// rulerag: mine enhanced association rules from categorical data, turn them
// into sentences, and emit RAG-ready chunk files.
//
// Subcommands map onto the pipeline stages:
//   mine      data -> rules.json + rules.txt (+ task summary on stdout)
//   text      rules.json -> sentences.txt
//   emit      sentences.txt -> chunks.jsonl
//   pipeline  all of the above in sequence
//
// Exit codes: 0 ok, 2 config error, 3 data error, 4 I/O error.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "rulerag/errors.hpp"
#include "rulerag/pipeline.hpp"
#include "rulerag/report.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitIo = 4;

struct CommonFlags {
    std::string config_path;
    std::string data_path;
    std::string out_dir;
    unsigned workers = 0;  // 0 = hardware concurrency
    bool no_prune = false;
    std::string mode;
    int chunk_size = -1;
    int overlap = -1;
};

std::string default_config_path() {
    const char* env = std::getenv("RULERAG_CONFIG");
    return env ? env : "";
}

rulerag::PipelineConfig load_config(const CommonFlags& flags) {
    std::string path = flags.config_path;
    if (path.empty()) path = default_config_path();
    if (path.empty())
        throw rulerag::ConfigError(
            "no config given (use --config or the RULERAG_CONFIG env var)");
    rulerag::PipelineConfig config = rulerag::load_pipeline_config(path);

    // flags win over config-file values
    if (!flags.data_path.empty()) config.data.path = flags.data_path;
    if (!flags.out_dir.empty()) config.out_dir = flags.out_dir;
    if (flags.no_prune) config.task.pruning_enabled = false;
    if (!flags.mode.empty()) {
        if (flags.mode != "join" && flags.mode != "enumerate")
            throw rulerag::ConfigError("--mode: expected 'join' or 'enumerate'");
        config.sentences.join_ordinal_intervals = flags.mode == "join";
    }
    if (flags.chunk_size > 0) config.chunking.chunk_size = flags.chunk_size;
    if (flags.overlap >= 0) config.chunking.overlap = flags.overlap;
    if (config.chunking.overlap >= config.chunking.chunk_size)
        throw rulerag::ConfigError("overlap must be smaller than chunk size");
    return config;
}

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "Pipeline config file (JSON)");
    cmd->add_option("--data", flags.data_path, "Override data file path");
    cmd->add_option("--out-dir", flags.out_dir, "Output directory");
    cmd->add_option("--workers", flags.workers,
                    "Mining worker threads (0 = all cores)");
    cmd->add_flag("--no-prune", flags.no_prune, "Disable support-based pruning");
    cmd->add_option("--mode", flags.mode, "Sentence mode: join|enumerate");
    cmd->add_option("--chunk-size", flags.chunk_size, "Sentences per chunk");
    cmd->add_option("--overlap", flags.overlap, "Chunk overlap in sentences");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"4ft rule mining to RAG document pipeline"};
    app.require_subcommand(1);

    CommonFlags flags;
    CLI::App* mine = app.add_subcommand("mine", "Mine rules from data");
    CLI::App* text = app.add_subcommand("text", "Convert mined rules to sentences");
    CLI::App* emit = app.add_subcommand("emit", "Chunk sentences for RAG ingestion");
    CLI::App* pipeline = app.add_subcommand("pipeline", "Run mine, text and emit");
    for (CLI::App* cmd : {mine, text, emit, pipeline}) add_common_flags(cmd, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        const rulerag::PipelineConfig config = load_config(flags);
        const auto paths = rulerag::StagePaths::in(config.out_dir);
        if (mine->parsed()) {
            const auto result = rulerag::stage_mine(config, flags.workers, std::cerr);
            std::cout << rulerag::format_task_summary(result);
        } else if (text->parsed()) {
            rulerag::stage_text(paths.rules_json, config.sentences, paths.sentences_txt);
        } else if (emit->parsed()) {
            rulerag::stage_emit(paths.sentences_txt, config.chunking, paths.chunks_jsonl);
        } else {
            rulerag::run_pipeline(config, flags.workers, std::cerr);
            std::cout << "wrote " << paths.chunks_jsonl.string() << "\n";
        }
    } catch (const rulerag::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const rulerag::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const rulerag::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    }
    return 0;
}
