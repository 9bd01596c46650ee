#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rulerag {

// Ordered rule sentences; rule_ids strictly increasing.
struct RagDocument {
    std::vector<std::pair<std::uint32_t, std::string>> sentences;
};

struct Chunk {
    std::uint32_t chunk_id = 0;
    std::string text;                       // sentences joined with a space
    std::uint32_t first_sentence = 0;       // inclusive indices into the document
    std::uint32_t last_sentence = 0;
    std::vector<std::uint32_t> rule_ids;
};

// Plain text, one sentence per line, UTF-8, newline-terminated.
void write_document(const RagDocument& doc, const std::string& path);
// Reading a bare sentence file assigns rule ids 1..n by line order.
RagDocument read_document(const std::string& path);

// Chunks start every (chunk_size - overlap) sentences. A trailing start
// whose remaining span is shorter than the overlap is dropped: it would be
// wholly contained in the previous chunk.
std::vector<Chunk> chunk_document(const RagDocument& doc, int chunk_size, int overlap);

// Line-delimited JSON, one chunk per line:
//   {"chunk_id":0,"text":"...","first_sentence":0,"last_sentence":7,"rule_ids":[1,...]}
void emit_chunks(const std::vector<Chunk>& chunks, const std::string& path);
std::vector<Chunk> read_chunks(const std::string& path);

// TF-IDF cosine over lowercase word tokens; top-k by score, ties broken by
// chunk_id. Returns (index into chunks, score), scores in [0,1].
std::vector<std::pair<std::size_t, double>> retrieve(const std::string& query,
                                                     const std::vector<Chunk>& chunks,
                                                     std::size_t k);

}  // namespace rulerag
