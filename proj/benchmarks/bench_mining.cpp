// Microbenchmarks for the hot paths: bitmap intersection counting, cedent
// enumeration with and without support pruning, end-to-end mining, and the
// chunker. All inputs are synthetic and deterministic.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "rulerag/cedent.hpp"
#include "rulerag/miner.hpp"
#include "rulerag/rag.hpp"
#include "rulerag/table.hpp"
#include "rulerag/task.hpp"

using namespace rulerag;

namespace {

Bitmap random_bitmap(std::size_t rows, std::mt19937& rng, double density) {
    Bitmap bm(rows);
    std::bernoulli_distribution bit(density);
    for (std::size_t i = 0; i < rows; ++i)
        if (bit(rng)) bm.set(i);
    return bm;
}

// attrs categorical columns with `cats` categories each over `rows` rows
DataTable synth_table(int attrs, int cats, int rows, unsigned seed) {
    std::mt19937 rng(seed);
    RawTable raw;
    std::vector<ColumnSpec> specs;
    for (int a = 0; a < attrs; ++a) {
        ColumnSpec spec;
        spec.name = "A" + std::to_string(a);
        spec.kind = AttributeKind::ordinal;
        specs.push_back(spec);
        raw.column_names.push_back(spec.name);
    }
    raw.rows.resize(static_cast<std::size_t>(rows));
    std::uniform_int_distribution<int> cat(0, cats - 1);
    for (auto& row : raw.rows)
        for (int a = 0; a < attrs; ++a)
            row.push_back("v" + std::to_string(cat(rng)));
    return encode_categories(raw, specs);
}

MiningTask synth_task(int ante_attrs, long long base_min) {
    MiningTask task;
    for (int a = 0; a < ante_attrs; ++a) {
        AttributeSpec spec;
        spec.attribute = "A" + std::to_string(a);
        spec.coefficient = {CoefficientKind::subset, 1, 2};
        task.antecedent.attributes.push_back(spec);
    }
    task.antecedent.minlen = 1;
    task.antecedent.maxlen = 3;
    AttributeSpec succ;
    succ.attribute = "A" + std::to_string(ante_attrs);
    succ.coefficient = {CoefficientKind::lcut, 1, 2};
    task.succedent.attributes.push_back(succ);
    task.succedent.minlen = task.succedent.maxlen = 1;
    task.thresholds.base_min = base_min;
    return task;
}

void BM_BitmapAndCount(benchmark::State& state) {
    const auto rows = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(7);
    const Bitmap a = random_bitmap(rows, rng, 0.3);
    const Bitmap b = random_bitmap(rows, rng, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(Bitmap::and_count(a, b));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(rows));
}
BENCHMARK(BM_BitmapAndCount)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);

void BM_CedentEnumeration(benchmark::State& state) {
    const DataTable table = synth_table(5, 4, 50000, 11);
    const MiningTask task = synth_task(4, state.range(0));
    const ValidatedTask validated = validate_against_table(task, table);
    const long long prune = task.thresholds.base_min.value();
    for (auto _ : state) {
        std::size_t count = 0;
        enumerate_cedents(validated.antecedent, table,
                          [&](const Cedent&) { ++count; }, prune);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_CedentEnumeration)->Arg(0)->Arg(500)->Arg(5000);

void BM_RunTask(benchmark::State& state) {
    const DataTable table = synth_table(5, 4, 50000, 11);
    const MiningTask task = synth_task(4, 100);
    const ValidatedTask validated = validate_against_table(task, table);
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        const TaskResult result = run_task(validated, table, workers);
        benchmark::DoNotOptimize(result.rules.size());
    }
}
BENCHMARK(BM_RunTask)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ChunkDocument(benchmark::State& state) {
    RagDocument doc;
    for (int i = 0; i < state.range(0); ++i)
        doc.sentences.emplace_back(static_cast<std::uint32_t>(i + 1),
                                   "If condition " + std::to_string(i) +
                                       " then outcome occurs more likely.");
    for (auto _ : state) {
        const auto chunks = chunk_document(doc, 8, 2);
        benchmark::DoNotOptimize(chunks.size());
    }
}
BENCHMARK(BM_ChunkDocument)->Arg(512)->Arg(8192);

}  // namespace

BENCHMARK_MAIN();
