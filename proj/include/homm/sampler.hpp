#ifndef HOMM_SAMPLER_HPP
#define HOMM_SAMPLER_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "homm/census.hpp"
#include "homm/hypergraph.hpp"
#include "homm/pattern.hpp"

namespace homm {

// Per-hyperedge-size sample allocations S_2..S_k.
struct SampleBudget {
    std::map<int, std::uint64_t> per_size;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [s, c] : per_size) t += c;
        return t;
    }
    std::uint64_t for_size(int s) const {
        auto it = per_size.find(s);
        return it == per_size.end() ? 0 : it->second;
    }

    // Splits a total sample count S across sizes 2..k with weights
    // (1, ratios[0], ratios[1], ...); sizes with no edges get weight 0.
    // Floor rounding, remainder assigned to the smallest sampleable size.
    static SampleBudget split(const Hypergraph& h, int k, std::uint64_t total,
                              std::span<const double> ratios);
    // Default ratios: S_3 = 3 S_2, S_4 = 2 S_2, S_5 = S_4.
    static SampleBudget split_default(const Hypergraph& h, int k, std::uint64_t total);

    std::string describe() const;  // "2:166,3:498,4:332"
};

// Motif frequency estimates from hyperedge sampling. `estimates` holds the
// corrected values for classes with nonzero raw tallies; classes of a size
// class that had zero budget are reported as unsampled, not zero.
struct EstimateCensus {
    int order = 0;
    std::map<CanonicalPattern, double> estimates;
    std::map<CanonicalPattern, std::uint64_t> raw;
    SampleBudget budget;
    std::uint64_t seed = 0;
    CensusMeta meta;

    enum class Flag { ok, unobserved, unsampled };
    Flag flag_for(const CanonicalPattern& p) const;
    // Estimates as a plain censum map (absent classes are 0); unsampled
    // classes are indistinguishable from zero here.
    std::map<CanonicalPattern, double> as_counts() const { return estimates; }
};

// Samples S_s hyperedges of each size s uniformly with replacement, counts
// the connected induced k-node sub-hypergraphs anchored at each draw whose
// maximal edge size equals the drawn edge's size, and applies the per-class
// correction factor |E_maxcard| / (S_maxcard * countmax). Unbiased for every
// class whose maximal size class has budget. Deterministic in (h, k, budget,
// seed).
EstimateCensus sample_census(const Hypergraph& h, int k, const SampleBudget& budget,
                             std::uint64_t seed);

// Every connected induced k-node sub-hypergraph containing edge e and
// containing no edge larger than |e|, each exactly once. Exploration is
// restricted to edges of size <= |e|; anything reachable only through a
// larger edge would be discarded anyway.
void enumerate_containing(const Hypergraph& h, const Hyperedge& e, int k,
                          const std::function<void(const SubHypergraph&)>& cb);

// Correction factor applied per class; classes with zero raw count are
// omitted. Throws std::logic_error if a tallied class has no budget for its
// maximal size (it could not have been sampled).
std::map<CanonicalPattern, double> correct_estimates(
    const std::map<CanonicalPattern, std::uint64_t>& raw, const SampleBudget& budget,
    const Hypergraph& h);

// As sample_census, but every edge of every budgeted size is used exactly
// once (S_s = |E_s|, without replacement): the estimate equals the exact
// census restricted to classes whose maximal size is budgeted.
EstimateCensus full_pass_census(const Hypergraph& h, int k, std::span<const int> sizes);

struct BudgetSearchResult {
    std::vector<int> a_values;                 // S_3 multipliers
    std::vector<int> b_values;                 // S_4 multipliers
    std::vector<std::vector<double>> mean_rho;  // [a index][b index]
    int best_a = 0;
    int best_b = 0;
};

// Grid search over (S_3, S_4) multipliers of S_2 = base: runs the sampler on
// each corpus and grid cell, scores the Pearson correlation between the
// estimated and exact significance profiles, and averages over repetitions
// and corpora.
BudgetSearchResult budget_search(const std::vector<Hypergraph>& corpora, std::uint64_t base_s2,
                                 std::span<const int> a_grid, std::span<const int> b_grid,
                                 int repetitions, std::uint64_t seed, int null_samples = 10,
                                 double epsilon = 4.0, int swap_multiplier = 10);

void write_estimate_csv(const EstimateCensus& census, std::ostream& out,
                        const MetaLines& extra_meta = {});
void write_estimate_json(const EstimateCensus& census, std::ostream& out,
                         const MetaLines& extra_meta = {});

}  // namespace homm

#endif
