#include "anclab/universal.hpp"

#include "anclab/marker.hpp"

namespace anclab {

BigInt universal_vertex_count(const ParamTable& p) {
  return (p.gamma_max() - 1) * p.depth_bound;
}

bool universal_adjacent(const ParamTable& p, const BigInt& w1,
                        const BigInt& w2) {
  return is_adjacent(p, w1, w2);  // unpack validates the vertex range
}

bool embed_check(const ParamTable& p, const Forest& f) {
  Labeling lab = label_forest(p, f);
  const std::int64_t n = f.size();

  std::vector<BigInt> phi(n + 1);
  for (NodeId v = 1; v <= n; ++v) {
    phi[v] = make_adj_label(p, lab.label(v), lab.depth(v));
  }

  // Injectivity, then edge preservation in both directions over all pairs.
  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v = u + 1; v <= n; ++v) {
      if (phi[u] == phi[v]) return false;
      if (f.edge(u, v) != universal_adjacent(p, phi[u], phi[v])) return false;
    }
  }
  return true;
}

std::vector<std::pair<BigInt, BigInt>> materialize_universal_edges(
    const ParamTable& p) {
  BigInt count = universal_vertex_count(p);
  if (count > 5000) {
    throw validation_error(
        validation_error::kind::bad_argument,
        "refusing to materialize a universal graph with more than 5000 "
        "vertices");
  }
  const std::int64_t m = count.get_si();

  std::vector<std::pair<BigInt, BigInt>> edges;
  for (std::int64_t a = 0; a < m; ++a) {
    for (std::int64_t b = a + 1; b < m; ++b) {
      if (universal_adjacent(p, BigInt(a), BigInt(b))) {
        edges.emplace_back(BigInt(a), BigInt(b));
      }
    }
  }
  return edges;
}

void write_edge_list(std::ostream& os,
                     const std::vector<std::pair<BigInt, BigInt>>& edges) {
  for (const auto& [a, b] : edges) {
    os << a.get_str() << ' ' << b.get_str() << '\n';
  }
}

}  // namespace anclab
