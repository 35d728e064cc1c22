#ifndef ANCLAB_UNIVERSAL_HPP
#define ANCLAB_UNIVERSAL_HPP

#include <ostream>
#include <utility>
#include <vector>

#include "anclab/decoder.hpp"
#include "anclab/forest.hpp"
#include "anclab/params.hpp"

namespace anclab {

// The implicit universal graph induced by the adjacency scheme. Vertices
// are the packed adjacency labels [0, (gamma_K - 1) * d); edges are decided
// on demand by the adjacency decoder, never materialized by default —
// every forest of the family embeds into this graph as an induced
// subgraph via node -> (label, depth).

// (gamma_K - 1) * d; O(n) for fixed d.
BigInt universal_vertex_count(const ParamTable& p);

// Adjacency predicate over packed vertex ids. Symmetric and irreflexive.
// Throws validation_error if a vertex is out of range.
bool universal_adjacent(const ParamTable& p, const BigInt& w1,
                        const BigInt& w2);

// Labels f, maps each node to (label, depth), and verifies that the map is
// injective and preserves the edge relation both ways over all node pairs.
// False signals a scheme bug.
bool embed_check(const ParamTable& p, const Forest& f);

// All-pairs edge list for tiny tables only (vertex count <= 5000, else
// validation_error). Pairs are (smaller, larger) packed ids.
std::vector<std::pair<BigInt, BigInt>> materialize_universal_edges(
    const ParamTable& p);

// One "u v" pair per line, vertices as packed integers.
void write_edge_list(std::ostream& os,
                     const std::vector<std::pair<BigInt, BigInt>>& edges);

}  // namespace anclab

#endif
