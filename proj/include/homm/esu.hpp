#ifndef HOMM_ESU_HPP
#define HOMM_ESU_HPP

#include <functional>
#include <span>

#include "homm/hypergraph.hpp"

namespace homm {

// Visits the vertex set of each size-k connected induced subgraph of g exactly
// once. The span passed to the callback is in discovery order, not sorted, and
// is only valid during the call. Enumeration order is deterministic.
using SubsetCallback = std::function<void(std::span<const VertexId>)>;

void esu(const ProjectedGraph& g, int k, const SubsetCallback& cb);

// Anchored variant: every size-k connected induced superset of `seed`, each
// once. The seed must induce a connected subgraph of g (throws
// std::invalid_argument otherwise) and satisfy |seed| <= k.
void esu_anchored(const ProjectedGraph& g, std::span<const VertexId> seed, int k,
                  const SubsetCallback& cb);

}  // namespace homm

#endif
