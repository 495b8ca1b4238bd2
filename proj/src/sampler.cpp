#include "homm/sampler.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "homm/errors.hpp"
#include "homm/esu.hpp"
#include "homm/rng.hpp"
#include "homm/significance.hpp"

namespace homm {

namespace {

using Clock = std::chrono::steady_clock;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

SampleBudget SampleBudget::split(const Hypergraph& h, int k, std::uint64_t total,
                                 std::span<const double> ratios) {
    if (k < 3 || k > 5) throw config_error("sample budgets support orders 3..5");
    if (total == 0) throw config_error("sample budget must be positive");
    if (static_cast<int>(ratios.size()) < k - 2)
        throw config_error("need one budget ratio per size 3..k");

    double denom = 0.0;
    std::vector<std::pair<int, double>> weights;  // sampleable sizes only
    for (int s = 2; s <= k; ++s) {
        if (h.edges_of_size(s).empty()) continue;
        const double w = s == 2 ? 1.0 : ratios[s - 3];
        if (w < 0) throw config_error("budget ratios must be non-negative");
        if (w == 0) continue;
        weights.emplace_back(s, w);
        denom += w;
    }
    if (weights.empty()) throw config_error("no sampleable hyperedge sizes in 2..k");

    SampleBudget b;
    const auto base = static_cast<std::uint64_t>(static_cast<double>(total) / denom);
    std::uint64_t assigned = 0;
    for (const auto& [s, w] : weights) {
        const auto share = static_cast<std::uint64_t>(static_cast<double>(base) * w);
        b.per_size[s] = share;
        assigned += share;
    }
    b.per_size[weights.front().first] += total - assigned;  // remainder to smallest size
    return b;
}

SampleBudget SampleBudget::split_default(const Hypergraph& h, int k, std::uint64_t total) {
    static constexpr double kDefaultRatios[] = {3.0, 2.0, 2.0};  // S_3, S_4, S_5 vs S_2
    return split(h, k, total, {kDefaultRatios, static_cast<std::size_t>(k - 2)});
}

std::string SampleBudget::describe() const {
    std::string out;
    for (const auto& [s, c] : per_size) {
        if (!out.empty()) out += ',';
        out += std::to_string(s) + ':' + std::to_string(c);
    }
    return out;
}

EstimateCensus::Flag EstimateCensus::flag_for(const CanonicalPattern& p) const {
    if (raw.count(p) && raw.at(p) > 0) return Flag::ok;
    return budget.for_size(p.max_edge_size()) > 0 ? Flag::unobserved : Flag::unsampled;
}

namespace {

// Shared tally core: size-restricted projections plus the induced-pattern
// probe; anchors of size s only explore edges of size <= s.
struct AnchorTally {
    const Hypergraph& h;
    int k;
    std::map<int, ProjectedGraph> projections;
    Hyperedge probe;
    std::array<VertexId, 5> vs{};

    AnchorTally(const Hypergraph& hg, int order) : h(hg), k(order) {}

    const ProjectedGraph& projection_for(int size) {
        auto it = projections.find(size);
        if (it == projections.end())
            it = projections.emplace(size, project_filtered(h, 2, size)).first;
        return it->second;
    }

    PatternKey induced_key(const VertexId* sorted, Hyperedge& scratch) const {
        PatternKey key = 0;
        const std::uint32_t full = (1u << k) - 1;
        for (std::uint32_t mask = 3; mask <= full; ++mask) {
            if (std::popcount(mask) < 2) continue;
            scratch.clear();
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) scratch.push_back(sorted[i]);
            if (h.contains_edge(scratch)) key |= 1u << mask;
        }
        return key;
    }

    // Calls sink(key, sorted_vertices) for every qualifying k-set anchored at
    // edge `anchor`: connected induced sub-hypergraph, no edge larger than
    // the anchor.
    template <class Sink>
    void visit(EdgeIndex anchor, Sink&& sink) {
        const auto& e = h.edge(anchor);
        const int s = static_cast<int>(e.size());
        const auto& g = projection_for(s);
        const auto& ps = pattern_space(k);
        esu_anchored(g, e, k, [&](std::span<const VertexId> cur) {
            std::copy(cur.begin(), cur.end(), vs.begin());
            std::sort(vs.begin(), vs.begin() + k);
            const PatternKey key = induced_key(vs.data(), probe);
            for (PatternKey t = key; t; t &= t - 1)
                if (std::popcount(static_cast<std::uint32_t>(std::countr_zero(t))) > s)
                    return;  // contains an edge larger than the anchor
            if (!pattern_spanning_connected(key, ps)) return;
            sink(key, std::span<const VertexId>(vs.data(), static_cast<std::size_t>(k)));
        });
    }
};

void validate_budget(const Hypergraph& h, int k, const SampleBudget& budget) {
    if (k < 3 || k > 5) throw std::invalid_argument("sample_census supports k in 3..5");
    if (budget.total() == 0) throw config_error("sample budget must be positive");
    for (const auto& [s, count] : budget.per_size) {
        if (s < 2 || s > k)
            throw config_error("budget size " + std::to_string(s) + " outside 2.." +
                               std::to_string(k));
        if (count > 0 && h.edges_of_size(s).empty())
            throw config_error("budget assigns samples to empty size class " + std::to_string(s));
    }
}

EstimateCensus tally_anchors(const Hypergraph& h, int k, const SampleBudget& budget,
                             std::uint64_t seed, std::span<const EdgeIndex> anchors,
                             const char* algorithm, Clock::time_point t0) {
    AnchorTally ctx(h, k);
    std::map<CanonicalPattern, std::uint64_t> raw;
    if (k <= 4) {
        const auto& table = pattern_table(k);
        std::vector<std::uint64_t> tally(table.class_count(), 0);
        for (EdgeIndex a : anchors)
            ctx.visit(a, [&](PatternKey key, std::span<const VertexId>) {
                const int id = table.classify_key(key);
                ++tally[static_cast<std::size_t>(id)];
            });
        for (std::size_t id = 0; id < tally.size(); ++id)
            if (tally[id]) raw.emplace(table.patterns()[id], tally[id]);
    } else {
        for (EdgeIndex a : anchors)
            ctx.visit(a, [&](PatternKey key, std::span<const VertexId>) {
                ++raw[canonicalize(k, key)];
            });
    }

    EstimateCensus out;
    out.order = k;
    out.raw = std::move(raw);
    out.budget = budget;
    out.seed = seed;
    out.estimates = correct_estimates(out.raw, budget, h);
    out.meta.algorithm = algorithm;
    out.meta.runtime_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return out;
}

}  // namespace

EstimateCensus sample_census(const Hypergraph& h, int k, const SampleBudget& budget,
                             std::uint64_t seed) {
    const auto t0 = Clock::now();
    validate_budget(h, k, budget);

    std::mt19937_64 rng(seed);
    std::vector<EdgeIndex> anchors;
    anchors.reserve(budget.total());
    for (const auto& [s, count] : budget.per_size) {
        const auto es = h.edges_of_size(s);
        for (std::uint64_t i = 0; i < count; ++i)
            anchors.push_back(es[bounded(rng, es.size())]);
    }
    return tally_anchors(h, k, budget, seed, anchors, "sample", t0);
}

EstimateCensus full_pass_census(const Hypergraph& h, int k, std::span<const int> sizes) {
    const auto t0 = Clock::now();
    SampleBudget budget;
    std::vector<EdgeIndex> anchors;
    for (int s : sizes) {
        const auto es = h.edges_of_size(s);
        if (es.empty()) continue;
        budget.per_size[s] = es.size();
        anchors.insert(anchors.end(), es.begin(), es.end());
    }
    validate_budget(h, k, budget);
    return tally_anchors(h, k, budget, 0, anchors, "full-pass", t0);
}

void enumerate_containing(const Hypergraph& h, const Hyperedge& e, int k,
                          const std::function<void(const SubHypergraph&)>& cb) {
    Hyperedge sorted = e;
    std::sort(sorted.begin(), sorted.end());
    const EdgeIndex idx = h.find_edge(sorted);
    if (idx == h.edge_count()) throw std::invalid_argument("anchor edge not present");
    if (static_cast<int>(sorted.size()) > k)
        throw std::invalid_argument("anchor edge larger than requested order");

    AnchorTally ctx(h, k);
    ctx.visit(idx, [&](PatternKey, std::span<const VertexId> vs) {
        cb(induced_subhypergraph(h, vs));
    });
}

std::map<CanonicalPattern, double> correct_estimates(
    const std::map<CanonicalPattern, std::uint64_t>& raw, const SampleBudget& budget,
    const Hypergraph& h) {
    std::map<CanonicalPattern, double> out;
    for (const auto& [p, count] : raw) {
        if (count == 0) continue;
        const int maxcard = p.max_edge_size();
        const std::uint64_t s_max = budget.for_size(maxcard);
        if (s_max == 0)
            throw std::logic_error("tallied class has zero budget for its maximal size");
        const double e_max = static_cast<double>(h.edges_of_size(maxcard).size());
        const double countmax = p.max_size_edge_count();
        out.emplace(p, static_cast<double>(count) * e_max /
                           (static_cast<double>(s_max) * countmax));
    }
    return out;
}

BudgetSearchResult budget_search(const std::vector<Hypergraph>& corpora, std::uint64_t base_s2,
                                 std::span<const int> a_grid, std::span<const int> b_grid,
                                 int repetitions, std::uint64_t seed, int null_samples,
                                 double epsilon, int swap_multiplier) {
    if (corpora.empty()) throw config_error("budget search needs at least one corpus");
    if (a_grid.empty() || b_grid.empty()) throw config_error("budget search grid is empty");
    if (repetitions < 1) throw config_error("budget search needs at least one repetition");

    // Exact references are shared across all grid cells.
    std::vector<SignificanceProfile> exact_profiles;
    std::vector<std::vector<CensusCounts>> null_counts(corpora.size());
    for (std::size_t hi = 0; hi < corpora.size(); ++hi) {
        const auto& h = corpora[hi];
        const MotifCensus exact = count_exact_4(h);
        const NullEnsemble nulls =
            sample_null_ensemble(h, null_samples, derive_seed(seed, "budget-null", hi),
                                 swap_multiplier);
        for (const auto& replica : nulls.replicas)
            null_counts[hi].push_back(to_counts(count_exact_4(replica)));
        exact_profiles.push_back(abundance_profile(4, to_counts(exact), null_counts[hi], epsilon));
    }

    BudgetSearchResult res;
    res.a_values.assign(a_grid.begin(), a_grid.end());
    res.b_values.assign(b_grid.begin(), b_grid.end());
    res.mean_rho.assign(a_grid.size(), std::vector<double>(b_grid.size(), 0.0));

    double best = -2.0;
    for (std::size_t ai = 0; ai < a_grid.size(); ++ai) {
        for (std::size_t bi = 0; bi < b_grid.size(); ++bi) {
            double acc = 0.0;
            std::size_t n = 0;
            for (std::size_t hi = 0; hi < corpora.size(); ++hi) {
                const auto& h = corpora[hi];
                SampleBudget budget;
                if (!h.edges_of_size(2).empty()) budget.per_size[2] = base_s2;
                if (!h.edges_of_size(3).empty())
                    budget.per_size[3] = base_s2 * static_cast<std::uint64_t>(a_grid[ai]);
                if (!h.edges_of_size(4).empty())
                    budget.per_size[4] = base_s2 * static_cast<std::uint64_t>(b_grid[bi]);
                if (budget.total() == 0) throw config_error("budget search corpus has no edges");
                for (int rep = 0; rep < repetitions; ++rep) {
                    const std::uint64_t cell_seed = derive_seed(
                        seed, "budget-cell",
                        ((ai * b_grid.size() + bi) * corpora.size() + hi) *
                                static_cast<std::uint64_t>(repetitions) +
                            static_cast<std::uint64_t>(rep));
                    const EstimateCensus est = sample_census(h, 4, budget, cell_seed);
                    const SignificanceProfile p =
                        abundance_profile(4, est.as_counts(), null_counts[hi], epsilon);
                    const ProfileMetrics m = profile_metrics(p, exact_profiles[hi]);
                    acc += m.rho.value_or(0.0);
                    ++n;
                }
            }
            const double mean = acc / static_cast<double>(n);
            res.mean_rho[ai][bi] = mean;
            if (mean > best) {
                best = mean;
                res.best_a = a_grid[ai];
                res.best_b = b_grid[bi];
            }
        }
    }
    return res;
}

namespace {

const char* flag_name(EstimateCensus::Flag f) {
    switch (f) {
        case EstimateCensus::Flag::ok: return "ok";
        case EstimateCensus::Flag::unobserved: return "unobserved";
        default: return "unsampled";
    }
}

// k <= 4 reports the full pattern universe; order 5 reports observed classes.
template <class Row>
void for_each_estimate_row(const EstimateCensus& c, Row&& row) {
    if (c.order <= 4) {
        for (const auto& p : patterns_for_order(c.order)) {
            const auto rit = c.raw.find(p);
            const std::uint64_t raw = rit == c.raw.end() ? 0 : rit->second;
            const auto eit = c.estimates.find(p);
            row(p, raw, eit == c.estimates.end() ? std::optional<double>{} : eit->second,
                c.flag_for(p));
        }
    } else {
        for (const auto& [p, raw] : c.raw) row(p, raw, c.estimates.at(p), c.flag_for(p));
    }
}

}  // namespace

void write_estimate_csv(const EstimateCensus& census, std::ostream& out,
                        const MetaLines& extra_meta) {
    out << "# algorithm: " << census.meta.algorithm << '\n';
    out << "# order: " << census.order << '\n';
    out << "# seed: " << census.seed << '\n';
    out << "# budget: " << census.budget.describe() << '\n';
    for (const auto& [k, v] : extra_meta) out << "# " << k << ": " << v << '\n';
    out << "pattern,raw,estimate,flag\n";
    for_each_estimate_row(census, [&](const CanonicalPattern& p, std::uint64_t raw,
                                      std::optional<double> est, EstimateCensus::Flag f) {
        out << '"' << p.encode() << "\"," << raw << ',';
        if (f == EstimateCensus::Flag::unsampled)
            out << "";  // unsampled classes have no estimate, not a zero
        else
            out << format_double(est.value_or(0.0));
        out << ',' << flag_name(f) << '\n';
    });
}

void write_estimate_json(const EstimateCensus& census, std::ostream& out,
                         const MetaLines& extra_meta) {
    nlohmann::json meta;
    meta["algorithm"] = census.meta.algorithm;
    meta["order"] = census.order;
    meta["seed"] = census.seed;
    meta["budget"] = census.budget.describe();
    for (const auto& [k, v] : extra_meta) meta[k] = v;

    nlohmann::json rows = nlohmann::json::array();
    for_each_estimate_row(census, [&](const CanonicalPattern& p, std::uint64_t raw,
                                      std::optional<double> est, EstimateCensus::Flag f) {
        nlohmann::json r;
        r["pattern"] = p.encode();
        r["raw"] = raw;
        if (f != EstimateCensus::Flag::unsampled) r["estimate"] = est.value_or(0.0);
        r["flag"] = flag_name(f);
        rows.push_back(std::move(r));
    });

    nlohmann::json doc;
    doc["meta"] = meta;
    doc["rows"] = rows;
    out << doc.dump(2) << '\n';
}

}  // namespace homm
