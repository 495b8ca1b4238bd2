#include "homm/census.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "homm/esu.hpp"

namespace homm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Pattern key of the sub-hypergraph induced by the sorted k-set `vs`,
// built by probing every subset of size >= 2 against the edge lookup.
PatternKey induced_key(const Hypergraph& h, const VertexId* vs, int k, Hyperedge& probe) {
    PatternKey key = 0;
    const std::uint32_t full = (1u << k) - 1;
    for (std::uint32_t mask = 3; mask <= full; ++mask) {
        if (std::popcount(mask) < 2) continue;
        probe.clear();
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) probe.push_back(vs[i]);
        if (h.contains_edge(probe)) key |= 1u << mask;
    }
    return key;
}

MotifCensus finish(int k, const PatternTable& table, const std::vector<std::uint64_t>& tally,
                   std::string algorithm, Clock::time_point t0) {
    MotifCensus census;
    census.order = k;
    for (std::size_t id = 0; id < tally.size(); ++id)
        if (tally[id]) census.counts.emplace(table.patterns()[id], tally[id]);
    census.meta.algorithm = std::move(algorithm);
    census.meta.runtime_seconds = seconds_since(t0);
    return census;
}

}  // namespace

MotifCensus count_baseline(const Hypergraph& h, int k) {
    if (k != 3 && k != 4) throw std::invalid_argument("count_baseline supports k in {3,4}");
    const auto t0 = Clock::now();
    const auto& table = pattern_table(k);
    std::vector<std::uint64_t> tally(table.class_count(), 0);

    const ProjectedGraph g = project(h);
    std::array<VertexId, 5> vs{};
    Hyperedge probe;
    esu(g, k, [&](std::span<const VertexId> cur) {
        std::copy(cur.begin(), cur.end(), vs.begin());
        std::sort(vs.begin(), vs.begin() + k);
        const int id = table.classify_key(induced_key(h, vs.data(), k, probe));
        if (id >= 0) ++tally[id];  // misses are candidates whose induced sub-hypergraph is disconnected
    });
    return finish(k, table, tally, "baseline", t0);
}

MotifCensus count_exact_3(const Hypergraph& h) {
    const auto t0 = Clock::now();
    const auto& table = pattern_table(3);
    std::vector<std::uint64_t> tally(table.class_count(), 0);
    VisitedSet visited(3);
    Hyperedge probe;

    // Every 3-edge spans a connected triple; fill in the nested pairs.
    for (EdgeIndex i : h.edges_of_size(3)) {
        const auto& e = h.edge(i);
        const int id = table.classify_key(induced_key(h, e.data(), 3, probe));
        ++tally[id];
        visited.insert(e);
    }

    // Remaining occurrences are pairwise-only.
    const ProjectedGraph g2 = project_filtered(h, 2, 2);
    std::array<VertexId, 5> vs{};
    esu(g2, 3, [&](std::span<const VertexId> cur) {
        std::copy(cur.begin(), cur.end(), vs.begin());
        std::sort(vs.begin(), vs.begin() + 3);
        if (visited.contains({vs.data(), 3})) return;
        const int id = table.classify_key(induced_key(h, vs.data(), 3, probe));
        ++tally[id];
    });
    return finish(3, table, tally, "efficient-3", t0);
}

MotifCensus count_exact_4(const Hypergraph& h) {
    const auto t0 = Clock::now();
    const auto& table = pattern_table(4);
    std::vector<std::uint64_t> tally(table.class_count(), 0);
    VisitedSet visited(4);
    Hyperedge probe;

    for (EdgeIndex i : h.edges_of_size(4)) {
        const auto& e = h.edge(i);
        const int id = table.classify_key(induced_key(h, e.data(), 4, probe));
        ++tally[id];
        visited.insert(e);
    }

    // A 3-edge plus any adjacent edge of size 2 or 3 contributing exactly one
    // new vertex spans a connected quadruple. Edges reached through several
    // shared vertices reappear here; the visited check collapses them.
    std::array<VertexId, 5> vs{};
    for (EdgeIndex i : h.edges_of_size(3)) {
        const auto& e = h.edge(i);
        for (VertexId v : e) {
            for (EdgeIndex j : h.incident_edges(v)) {
                if (j == i) continue;
                const auto& other = h.edge(j);
                if (other.size() > 3) continue;
                VertexId extra = 0;
                int new_members = 0;
                for (VertexId w : other) {
                    if (!std::binary_search(e.begin(), e.end(), w)) {
                        extra = w;
                        ++new_members;
                    }
                }
                if (new_members != 1) continue;
                std::copy(e.begin(), e.end(), vs.begin());
                vs[3] = extra;
                std::sort(vs.begin(), vs.begin() + 4);
                if (!visited.insert({vs.data(), 4})) continue;
                const int id = table.classify_key(induced_key(h, vs.data(), 4, probe));
                ++tally[id];
            }
        }
    }

    const ProjectedGraph g2 = project_filtered(h, 2, 2);
    esu(g2, 4, [&](std::span<const VertexId> cur) {
        std::copy(cur.begin(), cur.end(), vs.begin());
        std::sort(vs.begin(), vs.begin() + 4);
        if (visited.contains({vs.data(), 4})) return;
        const int id = table.classify_key(induced_key(h, vs.data(), 4, probe));
        ++tally[id];
    });
    return finish(4, table, tally, "efficient-4", t0);
}

static void write_meta_csv(std::ostream& out, const MetaLines& lines) {
    for (const auto& [k, v] : lines) out << "# " << k << ": " << v << '\n';
}

void write_census_csv(const MotifCensus& census, std::ostream& out, const MetaLines& extra_meta) {
    out << "# algorithm: " << census.meta.algorithm << '\n';
    out << "# order: " << census.order << '\n';
    out << "# total: " << census.total() << '\n';
    write_meta_csv(out, extra_meta);
    out << "pattern,count\n";
    for (const auto& [p, c] : census.counts) out << '"' << p.encode() << "\"," << c << '\n';
}

void write_census_json(const MotifCensus& census, std::ostream& out, const MetaLines& extra_meta) {
    nlohmann::json meta;
    meta["algorithm"] = census.meta.algorithm;
    meta["order"] = census.order;
    meta["total"] = census.total();
    for (const auto& [k, v] : extra_meta) meta[k] = v;

    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [p, c] : census.counts) counts[p.encode()] = c;

    nlohmann::json doc;
    doc["meta"] = meta;
    doc["counts"] = counts;
    out << doc.dump(2) << '\n';
}

}  // namespace homm
