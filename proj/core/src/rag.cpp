#include "rulerag/rag.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json_detail.hpp"
#include "rulerag/errors.hpp"

namespace rulerag {

void write_document(const RagDocument& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write sentence file: " + path);
    for (const auto& [id, sentence] : doc.sentences) out << sentence << '\n';
    if (!out) throw IoError("write failed: " + path);
}

RagDocument read_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read sentence file: " + path);
    RagDocument doc;
    std::string line;
    std::uint32_t id = 1;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        doc.sentences.emplace_back(id++, line);
    }
    return doc;
}

std::vector<Chunk> chunk_document(const RagDocument& doc, int chunk_size, int overlap) {
    if (chunk_size < 1) throw ConfigError("chunk_size must be >= 1");
    if (overlap < 0 || overlap >= chunk_size)
        throw ConfigError("overlap must satisfy 0 <= overlap < chunk_size");

    const std::size_t n = doc.sentences.size();
    const std::size_t stride = static_cast<std::size_t>(chunk_size - overlap);
    std::vector<Chunk> chunks;
    for (std::size_t start = 0; start < n; start += stride) {
        const std::size_t end = std::min(start + static_cast<std::size_t>(chunk_size), n);
        if (start > 0 && end - start < static_cast<std::size_t>(overlap))
            break;  // tail lies entirely inside the previous chunk
        Chunk chunk;
        chunk.chunk_id = static_cast<std::uint32_t>(chunks.size());
        chunk.first_sentence = static_cast<std::uint32_t>(start);
        chunk.last_sentence = static_cast<std::uint32_t>(end - 1);
        for (std::size_t i = start; i < end; ++i) {
            if (i > start) chunk.text += ' ';
            chunk.text += doc.sentences[i].second;
            chunk.rule_ids.push_back(doc.sentences[i].first);
        }
        chunks.push_back(std::move(chunk));
    }
    return chunks;
}

void emit_chunks(const std::vector<Chunk>& chunks, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write chunk file: " + path);
    for (const auto& chunk : chunks) {
        const detail::json record = {{"chunk_id", chunk.chunk_id},
                                     {"text", chunk.text},
                                     {"first_sentence", chunk.first_sentence},
                                     {"last_sentence", chunk.last_sentence},
                                     {"rule_ids", chunk.rule_ids}};
        out << record.dump() << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

std::vector<Chunk> read_chunks(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read chunk file: " + path);
    std::vector<Chunk> chunks;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        detail::json record;
        try {
            record = detail::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw DataError(std::string("malformed chunk record: ") + e.what());
        }
        Chunk chunk;
        chunk.chunk_id = record.at("chunk_id").get<std::uint32_t>();
        chunk.text = record.at("text").get<std::string>();
        chunk.first_sentence = record.at("first_sentence").get<std::uint32_t>();
        chunk.last_sentence = record.at("last_sentence").get<std::uint32_t>();
        chunk.rule_ids = record.at("rule_ids").get<std::vector<std::uint32_t>>();
        chunks.push_back(std::move(chunk));
    }
    return chunks;
}

namespace {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string token;
    for (char c : text) {
        const auto u = static_cast<unsigned char>(c);
        if (std::isalnum(u)) {
            token.push_back(static_cast<char>(std::tolower(u)));
        } else if (!token.empty()) {
            tokens.push_back(std::move(token));
            token.clear();
        }
    }
    if (!token.empty()) tokens.push_back(std::move(token));
    return tokens;
}

using TermCounts = std::unordered_map<std::string, double>;

TermCounts term_counts(const std::string& text) {
    TermCounts counts;
    for (auto& t : tokenize(text)) counts[t] += 1.0;
    return counts;
}

}  // namespace

std::vector<std::pair<std::size_t, double>> retrieve(const std::string& query,
                                                     const std::vector<Chunk>& chunks,
                                                     std::size_t k) {
    if (k < 1) throw ConfigError("retrieve: k must be >= 1");
    const TermCounts query_counts = term_counts(query);
    if (query_counts.empty())
        throw ConfigError("retrieve: query has no word tokens");

    std::vector<TermCounts> docs;
    docs.reserve(chunks.size());
    std::unordered_map<std::string, double> df;
    for (const auto& chunk : chunks) {
        docs.push_back(term_counts(chunk.text));
        for (const auto& [term, count] : docs.back()) df[term] += 1.0;
    }

    // smoothed idf keeps corpus-wide terms contributing, so querying with a
    // chunk's own text scores that chunk a strict cosine of 1
    const double n = static_cast<double>(chunks.size());
    const auto idf = [&](const std::string& term) {
        const auto it = df.find(term);
        const double d = it == df.end() ? 0.0 : it->second;
        return std::log((1.0 + n) / (1.0 + d)) + 1.0;
    };

    const auto weigh = [&](const TermCounts& counts) {
        TermCounts weights;
        double norm = 0.0;
        for (const auto& [term, count] : counts) {
            const double w = count * idf(term);
            weights[term] = w;
            norm += w * w;
        }
        norm = std::sqrt(norm);
        if (norm > 0.0)
            for (auto& [term, w] : weights) w /= norm;
        return weights;
    };

    const TermCounts query_vec = weigh(query_counts);
    std::vector<std::pair<std::size_t, double>> scored;
    scored.reserve(chunks.size());
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        const TermCounts doc_vec = weigh(docs[i]);
        double dot = 0.0;
        for (const auto& [term, w] : query_vec) {
            const auto it = doc_vec.find(term);
            if (it != doc_vec.end()) dot += w * it->second;
        }
        scored.emplace_back(i, std::min(1.0, dot));
    }

    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& x, const auto& y) { return x.second > y.second; });
    if (scored.size() > k) scored.resize(k);
    return scored;
}

}  // namespace rulerag
