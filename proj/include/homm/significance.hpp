#ifndef HOMM_SIGNIFICANCE_HPP
#define HOMM_SIGNIFICANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homm/census.hpp"
#include "homm/hypergraph.hpp"
#include "homm/pattern.hpp"

namespace homm {

// Degree- and size-preserving randomization: repeatedly pick two distinct
// hyperedges and one member of each and exchange them, rejecting swaps that
// would duplicate a member within an edge or duplicate a hyperedge. The
// proposal is symmetric, so the stationary distribution is uniform over the
// reachable configurations. Hypergraphs admitting no valid swap come back
// unchanged.
Hypergraph configuration_sample(const Hypergraph& h, std::uint64_t seed,
                                std::uint64_t swap_attempts);

struct NullEnsemble {
    std::vector<Hypergraph> replicas;
    std::uint64_t swap_attempts = 0;
    std::uint64_t seed = 0;
};

// N independent replicas; replica i is seeded with derive_seed(seed, "null", i).
// swap_attempts defaults to swap_multiplier * |E| per replica.
NullEnsemble sample_null_ensemble(const Hypergraph& h, int n, std::uint64_t seed,
                                  int swap_multiplier = 10);

// Normalized abundance vector over all patterns of one order. For orders 3
// and 4 the indexing is the full pattern enumeration; for order 5 it is the
// union of patterns observed in the input censuses.
struct SignificanceProfile {
    int order = 0;
    std::vector<CanonicalPattern> patterns;
    std::vector<double> values;
    double epsilon = 0.0;
    bool normalized = false;  // false when all abundances are zero
};

using CensusCounts = std::map<CanonicalPattern, double>;

CensusCounts to_counts(const MotifCensus& census);

// Delta_m = (N_real - <N_null>) / (N_real + <N_null> + epsilon), then the
// vector is scaled to unit L2 norm (left unnormalized and flagged when all
// abundances vanish). Throws std::invalid_argument on empty nulls or mixed
// orders.
SignificanceProfile abundance_profile(int order, const CensusCounts& real,
                                      const std::vector<CensusCounts>& nulls, double epsilon);
SignificanceProfile abundance_profile(const MotifCensus& real,
                                      const std::vector<MotifCensus>& nulls, double epsilon);
// Explicit pattern indexing (used to align order-5 profiles across datasets).
SignificanceProfile abundance_profile(int order, const CensusCounts& real,
                                      const std::vector<CensusCounts>& nulls, double epsilon,
                                      std::vector<CanonicalPattern> patterns);

struct ProfileMetrics {
    std::optional<double> rho;  // missing when either vector has zero variance
    double maxae = 0.0;
    double mae = 0.0;
};

// Pearson correlation, maximum absolute error and mean absolute error
// between two profiles with identical pattern indexing.
ProfileMetrics profile_metrics(const SignificanceProfile& estimated,
                               const SignificanceProfile& exact);

struct CorrelationMatrix {
    std::vector<std::string> names;
    std::vector<std::vector<double>> rho;  // NaN where undefined
};

CorrelationMatrix profile_correlation_matrix(
    const std::vector<std::pair<std::string, SignificanceProfile>>& profiles);

void write_profiles_csv(const std::vector<std::pair<std::string, SignificanceProfile>>& profiles,
                        std::ostream& out, const MetaLines& extra_meta = {});
void write_profiles_json(const std::vector<std::pair<std::string, SignificanceProfile>>& profiles,
                         std::ostream& out, const MetaLines& extra_meta = {});
void write_matrix_csv(const CorrelationMatrix& m, std::ostream& out,
                      const MetaLines& extra_meta = {});
void write_matrix_json(const CorrelationMatrix& m, std::ostream& out,
                       const MetaLines& extra_meta = {});

}  // namespace homm

#endif
