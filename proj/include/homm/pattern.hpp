#ifndef HOMM_PATTERN_HPP
#define HOMM_PATTERN_HPP

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "homm/hypergraph.hpp"

namespace homm {

// A labeled pattern on k <= 5 vertices is a bitmask over vertex subsets:
// bit m is set iff the local vertex subset encoded by mask m (bit i = vertex i)
// is an edge. Only bits with popcount >= 2 are meaningful.
using PatternKey = std::uint32_t;

// Precomputed geometry of the pattern space for one order: the valid edge
// masks sorted by (size, members), their ranks, and the action of all k!
// vertex relabelings on masks and ranked keys.
struct PatternSpace {
    int k = 0;
    std::vector<PatternKey> full_keys;                  // unused; reserved
    std::vector<std::uint32_t> mask_by_ordinal;         // ordinal -> edge mask
    std::array<std::uint8_t, 32> ordinal_of_mask{};     // edge mask -> ordinal
    std::vector<std::array<std::uint8_t, 32>> perm_mask;  // per permutation: mask -> image mask
    std::uint32_t vertex_full_mask = 0;                 // (1<<k)-1

    std::size_t edge_slot_count() const { return mask_by_ordinal.size(); }
    std::size_t permutation_count() const { return perm_mask.size(); }

    // Reorder a pattern key into ordinal space (bit o = edge with ordinal o present).
    std::uint32_t to_ordinal_key(PatternKey key) const;
    PatternKey from_ordinal_key(std::uint32_t okey) const;
    // Image of key under permutation p.
    PatternKey apply(std::size_t p, PatternKey key) const;
};

const PatternSpace& pattern_space(int k);

// Compare two labeled patterns of the same order in canonical edge-list order:
// edges sorted by (size, members), lists compared lexicographically.
int pattern_key_compare(PatternKey a, PatternKey b, const PatternSpace& ps);

// True iff the pattern covers all k vertices and is connected.
bool pattern_spanning_connected(PatternKey key, const PatternSpace& ps);

// Identity of one isomorphism class: the relabeling whose edge-list encoding
// is minimal. A fixed point of canonicalization.
struct CanonicalPattern {
    std::uint8_t order = 0;
    PatternKey key = 0;

    std::vector<std::vector<int>> edge_lists() const;  // sorted by (size, members)
    std::string encode() const;                        // e.g. "[[0,1],[0,1,2]]"
    static CanonicalPattern parse(const std::string& text);

    int max_edge_size() const;
    // Number of edges of maximal size (the countmax divisor of the estimator).
    int max_size_edge_count() const;

    bool operator==(const CanonicalPattern& o) const = default;
    bool operator<(const CanonicalPattern& o) const;
};

// Minimal relabeling of an arbitrary labeled pattern.
CanonicalPattern canonicalize(int k, PatternKey key);
// Relabels sub's vertices to 0..k-1 (sorted order) first. Requires 3 <= k <= 5.
CanonicalPattern canonicalize(const SubHypergraph& sub);

// One representative per isomorphism class of connected spanning patterns on
// k nodes, sorted by encoding. k=5 is large (enumerated by scanning all 2^26
// labeled patterns) and computed on demand.
std::vector<CanonicalPattern> enumerate_patterns(int k);
// Cached variant; safe for concurrent use after first call per order.
const std::vector<CanonicalPattern>& patterns_for_order(int k);

// Classification table for k in {3,4}: every relabeled variant of every class
// maps to its class id. Built by inserting all class_count * k! relabelings;
// entry_count() counts every insertion, distinct_key_count() the unique
// labeled variants (automorphic relabelings collide on the same key).
class PatternTable {
public:
    int order() const { return order_; }
    std::size_t class_count() const { return patterns_.size(); }
    std::size_t entry_count() const { return index_.size(); }
    std::size_t distinct_key_count() const { return distinct_keys_; }
    const std::vector<CanonicalPattern>& patterns() const { return patterns_; }

    // Class id for a labeled pattern, or -1 when the pattern is not a
    // connected spanning pattern of this order.
    int classify_key(PatternKey key) const {
        auto it = index_.find(key);
        return it == index_.end() ? -1 : it->second;
    }

    friend PatternTable build_pattern_table(int k);

private:
    int order_ = 0;
    std::vector<CanonicalPattern> patterns_;
    std::unordered_multimap<PatternKey, int> index_;
    std::size_t distinct_keys_ = 0;
};

PatternTable build_pattern_table(int k);     // k in {3,4}
const PatternTable& pattern_table(int k);    // cached, immutable after build

// Isomorphism class of a connected sub-hypergraph on 3..5 vertices.
// k <= 4 probes the relabeling table; k = 5 canonicalizes lazily.
// Throws std::invalid_argument on disconnected input.
CanonicalPattern classify(const SubHypergraph& sub);

namespace detail {
// Orbit counts of the relabeling action, optionally restricted to connected
// spanning patterns. Exposed for cross-checks against cycle-index counting.
std::size_t count_pattern_orbits(int k, bool connected_only);
}  // namespace detail

}  // namespace homm

#endif
