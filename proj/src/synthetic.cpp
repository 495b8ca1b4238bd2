#include "homm/synthetic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

#include "homm/errors.hpp"
#include "homm/rng.hpp"

namespace homm {

namespace {

double binomial(std::size_t n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return r;
}

Hyperedge random_edge(std::mt19937_64& rng, std::size_t n, int size) {
    Hyperedge e;
    while (static_cast<int>(e.size()) < size) {
        const VertexId v = static_cast<VertexId>(bounded(rng, n));
        if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    return e;
}

}  // namespace

GenResult generate_hypergraph(const GenSpec& spec) {
    if (spec.n < 2) throw config_error("generator needs at least 2 vertices");
    if (spec.nesting_prob < 0.0 || spec.nesting_prob > 1.0)
        throw config_error("nesting probability must lie in [0,1]");
    for (const auto& [size, count] : spec.edge_counts) {
        if (size < 2 || static_cast<std::size_t>(size) > spec.n)
            throw config_error("edge size " + std::to_string(size) + " infeasible for n=" +
                               std::to_string(spec.n));
        if (static_cast<double>(count) > binomial(spec.n, size))
            throw config_error("requested " + std::to_string(count) + " edges of size " +
                               std::to_string(size) + ", only C(n," + std::to_string(size) +
                               ") exist");
    }

    std::mt19937_64 rng(spec.seed);
    std::unordered_set<Hyperedge, HyperedgeHash, HyperedgeEq> edges;
    std::vector<Hyperedge> order;  // insertion order, for deterministic nesting pass

    for (const auto& [size, count] : spec.edge_counts) {
        std::size_t placed = 0;
        while (placed < count) {
            Hyperedge e = random_edge(rng, spec.n, size);
            if (edges.insert(e).second) {
                order.push_back(std::move(e));
                ++placed;
            }
        }
    }

    GenResult res;
    const std::size_t primaries = order.size();
    for (std::size_t i = 0; i < primaries; ++i) {
        const Hyperedge e = order[i];
        const int s = static_cast<int>(e.size());
        if (s < 3) continue;
        // 53-bit uniform in [0,1)
        const double coin = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (coin >= spec.nesting_prob) continue;

        // Uniform proper sub-edge of size >= 2: enumerate all masks once.
        std::vector<std::uint32_t> masks;
        for (std::uint32_t m = 1; m < (1u << s) - 1; ++m)
            if (std::popcount(m) >= 2) masks.push_back(m);
        const std::uint32_t mask = masks[bounded(rng, masks.size())];
        Hyperedge nested;
        for (int b = 0; b < s; ++b)
            if (mask & (1u << b)) nested.push_back(e[b]);
        ++res.nested_emitted;
        if (!edges.insert(nested).second)
            ++res.dedup_collisions;
        else
            order.push_back(std::move(nested));
    }

    res.hypergraph = Hypergraph::from_edges(spec.n, std::move(order));
    return res;
}

}  // namespace homm
