#ifndef HOMM_HYPERGRAPH_HPP
#define HOMM_HYPERGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace homm {

// Vertex ids are dense 0..n-1 indices; ingestion remaps arbitrary labels.
using VertexId = std::uint32_t;
using EdgeIndex = std::uint32_t;

// A hyperedge is a strictly ascending, duplicate-free vertex sequence of size >= 2.
using Hyperedge = std::vector<VertexId>;

struct HyperedgeHash {
    using is_transparent = void;
    std::size_t operator()(std::span<const VertexId> e) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (VertexId v : e) {
            h ^= v;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
    std::size_t operator()(const Hyperedge& e) const {
        return (*this)(std::span<const VertexId>(e));
    }
};

struct HyperedgeEq {
    using is_transparent = void;
    bool operator()(std::span<const VertexId> a, std::span<const VertexId> b) const {
        return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
    }
    bool operator()(const Hyperedge& a, const Hyperedge& b) const {
        return a == b;
    }
    bool operator()(const Hyperedge& a, std::span<const VertexId> b) const {
        return (*this)(std::span<const VertexId>(a), b);
    }
    bool operator()(std::span<const VertexId> a, const Hyperedge& b) const {
        return (*this)(a, std::span<const VertexId>(b));
    }
};

// Immutable after construction; all read paths are safe to share across threads.
class Hypergraph {
public:
    Hypergraph() = default;

    // Takes ownership of `edges`; members of each edge may be unsorted or
    // duplicated and are normalized here. Duplicate edges collapse.
    // Edges whose distinct-member count is < 2 are rejected.
    static Hypergraph from_edges(std::size_t n, std::vector<Hyperedge> edges,
                                 std::vector<std::string> labels = {});

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Hyperedge>& edges() const { return edges_; }
    const Hyperedge& edge(EdgeIndex i) const { return edges_[i]; }

    int max_edge_size() const { return max_size_; }

    // Indices of edges with exactly `size` members (the E_k partition).
    std::span<const EdgeIndex> edges_of_size(int size) const;

    // Indices of edges incident to v.
    std::span<const EdgeIndex> incident_edges(VertexId v) const {
        return {incidence_[v].data(), incidence_[v].size()};
    }

    bool contains_edge(std::span<const VertexId> sorted_members) const {
        return lookup_.find(sorted_members) != lookup_.end();
    }
    // Edge index for sorted members, or edge_count() if absent.
    EdgeIndex find_edge(std::span<const VertexId> sorted_members) const {
        auto it = lookup_.find(sorted_members);
        return it == lookup_.end() ? static_cast<EdgeIndex>(edges_.size()) : it->second;
    }

    // Number of incident edges per vertex.
    std::vector<std::uint32_t> degree_sequence() const;
    // Number of edges per size, indexed by size (index 0 and 1 unused).
    std::vector<std::uint32_t> size_histogram() const;

    // Original input labels per dense id; empty when vertices were created
    // programmatically (serialize then falls back to the numeric id).
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::size_t n_ = 0;
    int max_size_ = 0;
    std::vector<Hyperedge> edges_;                       // sorted lexicographically
    std::vector<std::vector<EdgeIndex>> by_size_;        // indexed by size
    std::vector<std::vector<EdgeIndex>> incidence_;      // indexed by vertex
    std::unordered_map<Hyperedge, EdgeIndex, HyperedgeHash, HyperedgeEq> lookup_;
    std::vector<std::string> labels_;
};

struct LoadOptions {
    int min_size = 2;
    int max_size = 5;
    // When set, every vertex token must parse as a base-10 integer;
    // otherwise arbitrary tokens are interned as labels.
    bool require_integer_ids = false;
};

// One hyperedge per line; members separated by whitespace or commas.
// '#' starts a comment; blank lines are skipped. Lines whose distinct-member
// count falls outside [min_size, max_size] are dropped (sizes < 2 always are).
// Throws parse_error on malformed tokens, config_error when nothing survives.
Hypergraph load_hyperedge_list(std::istream& in, const LoadOptions& opts = {});
Hypergraph load_hyperedge_list_file(const std::string& path, const LoadOptions& opts = {});

// Same line format back out, edges sorted lexicographically by dense id.
void serialize_hyperedge_list(const Hypergraph& h, std::ostream& out);

// Simple graph on the same vertices; adjacency lists are sorted and
// self-loop free.
struct ProjectedGraph {
    std::size_t n = 0;
    std::vector<std::vector<VertexId>> adj;

    bool has_edge(VertexId u, VertexId v) const {
        const auto& a = adj[u];
        return std::binary_search(a.begin(), a.end(), v);
    }
    std::size_t edge_count() const;
};

// Clique expansion: (a,b) is an edge iff some hyperedge contains both.
ProjectedGraph project(const Hypergraph& h);
// Clique expansion restricted to hyperedges with size in [min_size, max_size].
ProjectedGraph project_filtered(const Hypergraph& h, int min_size, int max_size);

// Vertex set plus the hyperedges fully contained in it (global vertex ids).
struct SubHypergraph {
    std::vector<VertexId> vertices;  // sorted
    std::vector<Hyperedge> edges;    // sorted lexicographically
};

// All hyperedges of h inside vset, found by probing every subset of size >= 2
// against the edge lookup. |vset| must be 3..5.
SubHypergraph induced_subhypergraph(const Hypergraph& h, std::span<const VertexId> vset);

// True iff the graph linking all members of each hyperedge is one component.
bool is_connected(const SubHypergraph& sub);

// Indices of edges sharing at least one vertex with edges()[e], e excluded,
// each exactly once, ascending.
std::vector<EdgeIndex> adjacent_hyperedges(const Hypergraph& h, EdgeIndex e);
// Overload resolving the edge by its member set; throws std::invalid_argument
// if the edge is not present.
std::vector<EdgeIndex> adjacent_hyperedges(const Hypergraph& h, const Hyperedge& e);

}  // namespace homm

#endif
