#include "homm/esu.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace homm {

namespace {

// Shared state of one enumeration walk. `touched` marks the current subgraph
// plus its discovered neighborhood; additions are undone on backtrack so the
// exclusive-neighborhood rule sees exactly N(current) at every node of the
// recursion tree.
struct EsuWalk {
    const ProjectedGraph& g;
    int k;
    const SubsetCallback& cb;
    VertexId min_allowed;  // candidates must be > min_allowed (esu); 0 = no bound
    bool bounded;
    std::vector<char> touched;
    std::vector<VertexId> current;

    EsuWalk(const ProjectedGraph& graph, int size, const SubsetCallback& callback, bool bound,
            VertexId bound_vertex)
        : g(graph),
          k(size),
          cb(callback),
          min_allowed(bound_vertex),
          bounded(bound),
          touched(graph.n, 0) {}

    bool admissible(VertexId u) const { return (!bounded || u > min_allowed) && !touched[u]; }

    void extend(std::vector<VertexId>& ext) {
        if (static_cast<int>(current.size()) == k) {
            cb({current.data(), current.size()});
            return;
        }
        while (!ext.empty()) {
            const VertexId w = ext.back();
            ext.pop_back();

            // Vertices first reachable through w; they stay marked for the
            // whole subtree below w and are released afterwards. The child
            // extension set is consumed by the recursion, so the undo list
            // has to be kept separately.
            std::vector<VertexId> added;
            for (VertexId u : g.adj[w])
                if (admissible(u)) {
                    touched[u] = 1;
                    added.push_back(u);
                }
            std::vector<VertexId> child = ext;
            child.insert(child.end(), added.begin(), added.end());
            current.push_back(w);
            extend(child);
            current.pop_back();
            for (VertexId u : added) touched[u] = 0;
        }
    }
};

}  // namespace

void esu(const ProjectedGraph& g, int k, const SubsetCallback& cb) {
    if (k < 2) throw std::invalid_argument("esu requires k >= 2");
    if (g.n < static_cast<std::size_t>(k)) return;
    for (VertexId root = 0; root < g.n; ++root) {
        EsuWalk walk(g, k, cb, /*bound=*/true, root);
        walk.touched[root] = 1;
        walk.current.push_back(root);
        std::vector<VertexId> ext;
        for (VertexId u : g.adj[root])
            if (u > root) {
                walk.touched[u] = 1;
                ext.push_back(u);
            }
        walk.extend(ext);
    }
}

void esu_anchored(const ProjectedGraph& g, std::span<const VertexId> seed, int k,
                  const SubsetCallback& cb) {
    if (seed.empty() || static_cast<int>(seed.size()) > k)
        throw std::invalid_argument("esu_anchored requires 1 <= |seed| <= k");

    // The seed must induce a connected subgraph.
    std::vector<VertexId> sv(seed.begin(), seed.end());
    std::sort(sv.begin(), sv.end());
    std::vector<char> in_seed_component(sv.size(), 0);
    std::vector<std::size_t> stack = {0};
    in_seed_component[0] = 1;
    while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < sv.size(); ++j)
            if (!in_seed_component[j] && g.has_edge(sv[i], sv[j])) {
                in_seed_component[j] = 1;
                stack.push_back(j);
            }
    }
    if (!std::all_of(in_seed_component.begin(), in_seed_component.end(), [](char c) { return c; }))
        throw std::invalid_argument("esu_anchored seed does not induce a connected subgraph");

    EsuWalk walk(g, k, cb, /*bound=*/false, 0);
    for (VertexId v : sv) {
        walk.touched[v] = 1;
        walk.current.push_back(v);
    }
    std::vector<VertexId> ext;
    for (VertexId v : sv)
        for (VertexId u : g.adj[v])
            if (!walk.touched[u]) {
                walk.touched[u] = 1;
                ext.push_back(u);
            }
    walk.extend(ext);
}

}  // namespace homm
