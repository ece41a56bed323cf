#pragma once

#include <optional>
#include <vector>

#include "cyp/multigraph.hpp"

namespace cyp {

inline constexpr int kIsomorphismVertexLimit = 64;

// Vertex bijection witnessing an isomorphism of simple underlying graphs.
struct IsoCertificate {
  std::vector<int> mapping;  // mapping[v in g] = image in h
};

// Backtracking isomorphism search with iterated neighborhood refinement.
// Operates on the simple underlying graphs; throws SizeLimitExceeded above
// kIsomorphismVertexLimit vertices.
std::optional<IsoCertificate> are_isomorphic(const MultiGraph& g, const MultiGraph& h);

// Checks that the mapping carries the simple underlying edge set of g
// exactly onto that of h.
bool certificate_valid(const MultiGraph& g, const MultiGraph& h,
                       const IsoCertificate& cert);

}  // namespace cyp
