#include "rulerag/miner.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace rulerag {

FourfoldTable compute_fourfold(const Bitmap& ante, const Bitmap& succ) {
    if (ante.size() != succ.size())
        throw std::invalid_argument("fourfold: bitmap length mismatch");
    const long long n = static_cast<long long>(ante.size());
    FourfoldTable ff;
    ff.a = static_cast<long long>(Bitmap::and_count(ante, succ));
    ff.b = static_cast<long long>(ante.count()) - ff.a;
    ff.c = static_cast<long long>(succ.count()) - ff.a;
    ff.d = n - ff.a - ff.b - ff.c;
    return ff;
}

std::optional<QuantifierValues> eval_quantifiers(const FourfoldTable& ff) {
    const long long row_total = ff.n();
    if (ff.a + ff.b == 0) return std::nullopt;  // confidence undefined
    if (ff.a + ff.c == 0) return std::nullopt;  // lift undefined
    QuantifierValues q;
    q.base = ff.a;
    q.conf = static_cast<double>(ff.a) / static_cast<double>(ff.a + ff.b);
    q.lift = q.conf * static_cast<double>(row_total) /
             static_cast<double>(ff.a + ff.c);
    q.aad = q.lift - 1.0;
    return q;
}

bool thresholds_satisfied(const QuantifierValues& q, const QuantifierThresholds& t) {
    if (t.base_min && q.base < *t.base_min) return false;
    if (t.conf_min && q.conf < *t.conf_min) return false;
    if (t.aad_min && q.aad < *t.aad_min) return false;
    if (t.lift_min && q.lift < *t.lift_min) return false;
    return true;
}

namespace {

RuleLiteral describe(const Literal& literal, const DataTable& table) {
    const auto& column = table.columns[static_cast<std::size_t>(literal.column)];
    RuleLiteral out;
    out.attribute = column.name;
    out.ordinal = column.kind == AttributeKind::ordinal;
    out.category_indices = literal.categories;
    for (std::uint32_t cat : literal.categories)
        out.categories.push_back(column.categories[cat]);
    return out;
}

struct KeyedRule {
    std::size_t combo_index;   // antecedent attribute-combination rank
    std::size_t within_combo;  // literal-assignment counter inside the combination
    std::size_t succ_index;    // succedent rank in its own canonical order
    std::vector<Literal> antecedent;
    FourfoldTable fourfold;
    QuantifierValues quantifiers;
};

}  // namespace

TaskResult run_task(const ValidatedTask& task, const DataTable& table,
                    unsigned workers) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();

    TaskResult result;
    result.row_count = table.row_count;

    const QuantifierThresholds& thresholds = task.task.thresholds;
    const long long prune_below =
        (task.task.pruning_enabled && thresholds.base_min) ? *thresholds.base_min : 0;

    // Succedents are few; materialize them once with their popcounts.
    std::vector<Cedent> succedents =
        collect_cedents(task.succedent, table, prune_below);
    std::vector<std::size_t> succ_pops(succedents.size());
    for (std::size_t i = 0; i < succedents.size(); ++i)
        succ_pops[i] = succedents[i].bitmap.count();

    std::vector<std::vector<Literal>> ante_literals(task.antecedent.attributes.size());
    std::vector<std::vector<Bitmap>> ante_bitmaps(task.antecedent.attributes.size());
    for (std::size_t i = 0; i < task.antecedent.attributes.size(); ++i) {
        ante_literals[i] = enumerate_literals(table, task.antecedent.attributes[i]);
        ante_bitmaps[i].reserve(ante_literals[i].size());
        for (const auto& lit : ante_literals[i])
            ante_bitmaps[i].push_back(literal_bitmap(lit, table));
    }
    const std::vector<std::vector<int>> combos = attribute_combinations(
        task.antecedent.attributes.size(), task.antecedent.minlen,
        task.antecedent.maxlen);

    const auto t1 = clock::now();
    result.prep_seconds = std::chrono::duration<double>(t1 - t0).count();

    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::max(1u, std::min<unsigned>(workers, combos.empty() ? 1 : static_cast<unsigned>(combos.size())));

    std::vector<std::vector<KeyedRule>> worker_rules(workers);
    std::vector<unsigned long long> worker_verifications(workers, 0);

    const auto mine_combo = [&](std::size_t combo_index, std::vector<KeyedRule>& rules,
                                unsigned long long& verifications) {
        std::size_t within = 0;
        enumerate_combination_cedents(
            combos[combo_index], ante_literals, ante_bitmaps, table.row_count,
            prune_below, [&](const Cedent& ante) {
                const std::size_t seq = within++;
                for (std::size_t s = 0; s < succedents.size(); ++s) {
                    const FourfoldTable ff =
                        compute_fourfold(ante.bitmap, succedents[s].bitmap);
                    ++verifications;
                    const auto q = eval_quantifiers(ff);
                    if (!q || !thresholds_satisfied(*q, thresholds)) continue;
                    rules.push_back(KeyedRule{combo_index, seq, s, ante.literals,
                                              ff, *q});
                }
            });
    };

    if (workers == 1) {
        for (std::size_t i = 0; i < combos.size(); ++i)
            mine_combo(i, worker_rules[0], worker_verifications[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < combos.size(); i += workers)
                    mine_combo(i, worker_rules[w], worker_verifications[w]);
            });
        }
        for (auto& t : pool) t.join();
    }

    std::vector<KeyedRule> merged;
    for (unsigned w = 0; w < workers; ++w) {
        result.verifications += worker_verifications[w];
        merged.insert(merged.end(),
                      std::make_move_iterator(worker_rules[w].begin()),
                      std::make_move_iterator(worker_rules[w].end()));
    }
    std::sort(merged.begin(), merged.end(), [](const KeyedRule& x, const KeyedRule& y) {
        if (x.combo_index != y.combo_index) return x.combo_index < y.combo_index;
        if (x.within_combo != y.within_combo) return x.within_combo < y.within_combo;
        return x.succ_index < y.succ_index;
    });

    result.rules.reserve(merged.size());
    for (std::size_t i = 0; i < merged.size(); ++i) {
        MinedRule rule;
        rule.id = static_cast<std::uint32_t>(i + 1);
        for (const auto& lit : merged[i].antecedent)
            rule.antecedent.push_back(describe(lit, table));
        for (const auto& lit : succedents[merged[i].succ_index].literals)
            rule.succedent.push_back(describe(lit, table));
        rule.fourfold = merged[i].fourfold;
        rule.quantifiers = merged[i].quantifiers;
        result.rules.push_back(std::move(rule));
    }

    result.mining_seconds =
        std::chrono::duration<double>(clock::now() - t1).count();
    return result;
}

}  // namespace rulerag
