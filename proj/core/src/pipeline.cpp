#include "rulerag/pipeline.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "json_detail.hpp"
#include "rulerag/errors.hpp"
#include "rulerag/report.hpp"

namespace rulerag {

namespace detail {

IngestConfig ingest_config_from_json(const json& j) {
    if (!j.is_object() || !j.contains("path"))
        throw ConfigError("data: expected an object with 'path'");
    IngestConfig config;
    config.path = j.at("path").get<std::string>();
    const std::string delim = j.value("delimiter", std::string("\t"));
    if (delim.size() != 1)
        throw ConfigError("data.delimiter: expected a single character");
    config.delimiter = delim[0];
    config.encoding = j.value("encoding", std::string("utf-8"));
    if (j.contains("sentinels"))
        config.sentinels = j.at("sentinels").get<std::vector<std::string>>();
    if (!j.contains("columns") || j.at("columns").empty())
        throw ConfigError("data.columns: at least one column is required");
    for (const auto& c : j.at("columns")) {
        ColumnSpec spec;
        if (c.is_string()) {
            spec.name = c.get<std::string>();
        } else {
            spec.name = c.at("name").get<std::string>();
            const std::string kind = c.value("kind", std::string("nominal"));
            if (kind == "ordinal")
                spec.kind = AttributeKind::ordinal;
            else if (kind != "nominal")
                throw ConfigError("data.columns." + spec.name +
                                  ".kind: expected 'nominal' or 'ordinal'");
            if (c.contains("order")) {
                spec.order = c.at("order").get<std::vector<std::string>>();
                spec.kind = AttributeKind::ordinal;
            }
        }
        config.columns.push_back(std::move(spec));
    }
    return config;
}

}  // namespace detail

PipelineConfig parse_pipeline_config(const std::string& config_text) {
    detail::json j;
    try {
        j = detail::json::parse(config_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: expected a JSON object");

    PipelineConfig config;
    if (!j.contains("data")) throw ConfigError("data: section is required");
    if (!j.contains("task")) throw ConfigError("task: section is required");
    config.data = detail::ingest_config_from_json(j.at("data"));
    config.task = detail::task_from_json(j.at("task"));
    if (j.contains("sentences"))
        config.sentences = detail::sentence_options_from_json(j.at("sentences"));
    if (j.contains("chunking")) {
        config.chunking.chunk_size = j.at("chunking").value("chunk_size", 8);
        config.chunking.overlap = j.at("chunking").value("overlap", 2);
        if (config.chunking.chunk_size < 1)
            throw ConfigError("chunking.chunk_size: must be >= 1");
        if (config.chunking.overlap < 0 ||
            config.chunking.overlap >= config.chunking.chunk_size)
            throw ConfigError("chunking.overlap: must satisfy 0 <= overlap < chunk_size");
    }
    if (j.contains("output"))
        config.out_dir = j.at("output").value("dir", std::string("."));
    return config;
}

PipelineConfig load_pipeline_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pipeline_config(buf.str());
}

StagePaths StagePaths::in(const std::filesystem::path& dir) {
    return {dir / "rules.json", dir / "rules.txt", dir / "sentences.txt",
            dir / "chunks.jsonl"};
}

namespace {

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path.string());
    out << text;
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

TaskResult stage_mine(const PipelineConfig& config, unsigned workers,
                      std::ostream& progress) {
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    const StagePaths paths = StagePaths::in(config.out_dir);

    progress << "loading " << config.data.path << "\n";
    const DataTable table = load_data_table(config.data);
    const ValidatedTask validated = validate_against_table(config.task, table);
    progress << "mining " << table.row_count << " rows\n";
    TaskResult result = run_task(validated, table, workers);

    write_text_file(paths.rules_json, rules_to_json(result));
    write_text_file(paths.rules_txt, format_rule_listing(result));
    return result;
}

void stage_text(const std::filesystem::path& rules_json,
                const SentenceOptions& options,
                const std::filesystem::path& sentences_txt) {
    std::ifstream in(rules_json, std::ios::binary);
    if (!in) throw DataError("cannot open rule file: " + rules_json.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const TaskResult result = rules_from_json(buf.str());

    RagDocument doc;
    doc.sentences = generate_sentences(result, options);
    write_document(doc, sentences_txt.string());
}

void stage_emit(const std::filesystem::path& sentences_txt,
                const ChunkingConfig& chunking,
                const std::filesystem::path& chunks_jsonl) {
    const RagDocument doc = read_document(sentences_txt.string());
    const std::vector<Chunk> chunks =
        chunk_document(doc, chunking.chunk_size, chunking.overlap);
    emit_chunks(chunks, chunks_jsonl.string());
}

void run_pipeline(const PipelineConfig& config, unsigned workers,
                  std::ostream& progress) {
    TaskResult result = stage_mine(config, workers, progress);
    progress << "rules: " << result.rules.size() << "\n";
    const StagePaths paths = StagePaths::in(config.out_dir);
    stage_text(paths.rules_json, config.sentences, paths.sentences_txt);
    stage_emit(paths.sentences_txt, config.chunking, paths.chunks_jsonl);
}

}  // namespace rulerag
