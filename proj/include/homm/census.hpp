#ifndef HOMM_CENSUS_HPP
#define HOMM_CENSUS_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "homm/hypergraph.hpp"
#include "homm/pattern.hpp"

namespace homm {

struct CensusMeta {
    std::string algorithm;
    double runtime_seconds = 0.0;
};

// Exact frequency of every motif class of one order. Keys are canonical;
// only classes with nonzero count are stored.
struct MotifCensus {
    int order = 0;
    std::map<CanonicalPattern, std::uint64_t> counts;
    CensusMeta meta;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [p, c] : counts) t += c;
        return t;
    }
};

// Exact membership over sorted k-tuples of vertices.
class VisitedSet {
public:
    explicit VisitedSet(int k) : k_(k) {}

    // tuple must be sorted ascending with k distinct entries.
    // Returns true when the tuple was not seen before.
    bool insert(std::span<const VertexId> tuple) { return set_.insert(pack(tuple)).second; }
    bool contains(std::span<const VertexId> tuple) const { return set_.count(pack(tuple)) > 0; }
    std::size_t size() const { return set_.size(); }

private:
    using Key = std::array<VertexId, 5>;
    struct KeyHash {
        std::size_t operator()(const Key& a) const {
            std::uint64_t h = 0x9e3779b97f4a7c15ULL;
            for (VertexId v : a) h = (h ^ v) * 0x100000001b3ULL;
            return static_cast<std::size_t>(h);
        }
    };
    Key pack(std::span<const VertexId> tuple) const {
        Key key{};
        key.fill(~VertexId{0});
        for (int i = 0; i < k_; ++i) key[i] = tuple[i];
        return key;
    }

    int k_;
    std::unordered_set<Key, KeyHash> set_;
};

// Projection + ESU + induced-connectivity filter. k in {3, 4}.
MotifCensus count_baseline(const Hypergraph& h, int k);

// Structure-aware exact counters; identical output to count_baseline.
MotifCensus count_exact_3(const Hypergraph& h);
MotifCensus count_exact_4(const Hypergraph& h);

using MetaLines = std::vector<std::pair<std::string, std::string>>;

// CSV: '#'-prefixed metadata lines, then pattern,count rows sorted by
// pattern encoding. Pattern cells are double-quoted (they contain commas).
void write_census_csv(const MotifCensus& census, std::ostream& out,
                      const MetaLines& extra_meta = {});
void write_census_json(const MotifCensus& census, std::ostream& out,
                       const MetaLines& extra_meta = {});

}  // namespace homm

#endif
