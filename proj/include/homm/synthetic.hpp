#ifndef HOMM_SYNTHETIC_HPP
#define HOMM_SYNTHETIC_HPP

#include <cstdint>
#include <map>

#include "homm/hypergraph.hpp"

namespace homm {

// Controlled random hypergraphs: a fixed number of distinct uniform-random
// edges per size, optionally with nested sub-edges emitted below each edge of
// size >= 3 (models corpora dominated by containment structure).
struct GenSpec {
    std::size_t n = 0;
    std::map<int, std::size_t> edge_counts;  // size -> requested count
    double nesting_prob = 0.0;
    std::uint64_t seed = 0;
};

struct GenResult {
    Hypergraph hypergraph;
    std::size_t nested_emitted = 0;    // nested edges drawn (before dedup)
    std::size_t dedup_collisions = 0;  // nested edges that collided with existing ones
};

// Deterministic in the spec. Throws config_error when a requested count
// exceeds the number of distinct edges of that size.
GenResult generate_hypergraph(const GenSpec& spec);

}  // namespace homm

#endif
