#include "homm/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "homm/errors.hpp"

namespace homm {

Hypergraph Hypergraph::from_edges(std::size_t n, std::vector<Hyperedge> edges,
                                  std::vector<std::string> labels) {
    Hypergraph h;
    h.n_ = n;
    h.labels_ = std::move(labels);

    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.size() < 2)
            throw std::invalid_argument("hyperedge needs at least 2 distinct members");
        if (e.back() >= n)
            throw std::invalid_argument("hyperedge member out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    h.edges_ = std::move(edges);
    h.incidence_.resize(n);
    for (EdgeIndex i = 0; i < h.edges_.size(); ++i) {
        const auto& e = h.edges_[i];
        const int s = static_cast<int>(e.size());
        h.max_size_ = std::max(h.max_size_, s);
        if (static_cast<std::size_t>(s) >= h.by_size_.size()) h.by_size_.resize(s + 1);
        h.by_size_[s].push_back(i);
        for (VertexId v : e) h.incidence_[v].push_back(i);
        h.lookup_.emplace(e, i);
    }
    return h;
}

std::span<const EdgeIndex> Hypergraph::edges_of_size(int size) const {
    if (size < 0 || static_cast<std::size_t>(size) >= by_size_.size()) return {};
    return {by_size_[size].data(), by_size_[size].size()};
}

std::vector<std::uint32_t> Hypergraph::degree_sequence() const {
    std::vector<std::uint32_t> deg(n_);
    for (std::size_t v = 0; v < n_; ++v) deg[v] = static_cast<std::uint32_t>(incidence_[v].size());
    return deg;
}

std::vector<std::uint32_t> Hypergraph::size_histogram() const {
    std::vector<std::uint32_t> hist(by_size_.size());
    for (std::size_t s = 0; s < by_size_.size(); ++s)
        hist[s] = static_cast<std::uint32_t>(by_size_[s].size());
    return hist;
}

namespace {

bool is_integer_token(const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Hypergraph load_hyperedge_list(std::istream& in, const LoadOptions& opts) {
    const int min_size = std::max(opts.min_size, 2);  // singletons are never kept
    std::unordered_map<std::string, VertexId> intern;
    std::vector<std::string> labels;
    std::vector<Hyperedge> edges;

    std::string line;
    std::size_t lineno = 0;
    std::vector<std::string> tokens;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);

        tokens.clear();
        std::string cur;
        for (char c : line) {
            if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
                if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) tokens.push_back(std::move(cur));
        if (tokens.empty()) continue;

        Hyperedge e;
        e.reserve(tokens.size());
        for (const auto& t : tokens) {
            if (opts.require_integer_ids && !is_integer_token(t))
                throw parse_error("vertex token '" + t + "' is not an integer", lineno);
            auto [it, inserted] = intern.emplace(t, static_cast<VertexId>(labels.size()));
            if (inserted) labels.push_back(t);
            e.push_back(it->second);
        }
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        const int s = static_cast<int>(e.size());
        if (s < min_size || s > opts.max_size) continue;
        edges.push_back(std::move(e));
    }

    if (edges.empty())
        throw config_error("no hyperedges left after size filtering [" +
                           std::to_string(min_size) + ", " + std::to_string(opts.max_size) + "]");
    const std::size_t n = labels.size();
    return Hypergraph::from_edges(n, std::move(edges), std::move(labels));
}

Hypergraph load_hyperedge_list_file(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open input file: " + path);
    return load_hyperedge_list(in, opts);
}

void serialize_hyperedge_list(const Hypergraph& h, std::ostream& out) {
    const auto& labels = h.labels();
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            if (e[i] < labels.size())
                out << labels[e[i]];
            else
                out << e[i];
        }
        out << '\n';
    }
}

std::size_t ProjectedGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& a : adj) total += a.size();
    return total / 2;
}

ProjectedGraph project_filtered(const Hypergraph& h, int min_size, int max_size) {
    ProjectedGraph g;
    g.n = h.vertex_count();
    g.adj.resize(g.n);
    for (int s = std::max(min_size, 2); s <= std::min(max_size, h.max_edge_size()); ++s) {
        for (EdgeIndex i : h.edges_of_size(s)) {
            const auto& e = h.edge(i);
            for (std::size_t a = 0; a < e.size(); ++a)
                for (std::size_t b = a + 1; b < e.size(); ++b) {
                    g.adj[e[a]].push_back(e[b]);
                    g.adj[e[b]].push_back(e[a]);
                }
        }
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

ProjectedGraph project(const Hypergraph& h) {
    return project_filtered(h, 2, std::max(h.max_edge_size(), 2));
}

SubHypergraph induced_subhypergraph(const Hypergraph& h, std::span<const VertexId> vset) {
    const int k = static_cast<int>(vset.size());
    if (k < 3 || k > 5)
        throw std::invalid_argument("induced_subhypergraph supports vertex sets of size 3..5");

    Hyperedge sorted(vset.begin(), vset.end());
    std::sort(sorted.begin(), sorted.end());

    SubHypergraph sub;
    sub.vertices = sorted;
    Hyperedge probe;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        if (std::popcount(mask) < 2) continue;
        probe.clear();
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) probe.push_back(sorted[i]);
        if (h.contains_edge(probe)) sub.edges.push_back(probe);
    }
    std::sort(sub.edges.begin(), sub.edges.end());
    return sub;
}

bool is_connected(const SubHypergraph& sub) {
    const std::size_t k = sub.vertices.size();
    if (k == 0) throw std::invalid_argument("is_connected requires at least one vertex");
    if (k == 1) return true;

    // Union-find over local indices; vertices are sorted so lookups are binary searches.
    std::vector<int> parent(k);
    for (std::size_t i = 0; i < k; ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto local = [&](VertexId v) {
        return static_cast<int>(std::lower_bound(sub.vertices.begin(), sub.vertices.end(), v) -
                                sub.vertices.begin());
    };
    std::size_t components = k;
    for (const auto& e : sub.edges) {
        const int r0 = find(local(e[0]));
        for (std::size_t i = 1; i < e.size(); ++i) {
            int r = find(local(e[i]));
            if (r != r0 && find(r0) != r) {
                parent[r] = find(r0);
                --components;
            }
        }
    }
    return components == 1;
}

std::vector<EdgeIndex> adjacent_hyperedges(const Hypergraph& h, EdgeIndex e) {
    if (e >= h.edge_count()) throw std::invalid_argument("edge index out of range");
    std::vector<EdgeIndex> out;
    for (VertexId v : h.edge(e))
        for (EdgeIndex i : h.incident_edges(v))
            if (i != e) out.push_back(i);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<EdgeIndex> adjacent_hyperedges(const Hypergraph& h, const Hyperedge& e) {
    Hyperedge sorted = e;
    std::sort(sorted.begin(), sorted.end());
    const EdgeIndex idx = h.find_edge(sorted);
    if (idx == h.edge_count()) throw std::invalid_argument("edge not present in hypergraph");
    return adjacent_hyperedges(h, idx);
}

}  // namespace homm
