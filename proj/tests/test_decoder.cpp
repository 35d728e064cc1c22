#include "anclab/decoder.hpp"

#include "anclab/marker.hpp"
#include "anclab/verify.hpp"
#include "test_util.hpp"

using namespace anclab;
using anclab::test::forest_of_parents;

TEST_SUITE("decoder") {

TEST_CASE("equal-interval pair resolves by level") {
  ParamTable p = build_params(2, 2);
  // Labels of the two-node tree: both map to the interval [1,2).
  CHECK(is_ancestor(p, 15, 1));
  CHECK(!is_ancestor(p, 1, 15));
}

TEST_CASE("is_ancestor is irreflexive for every label") {
  ParamTable p = build_params(2, 2);
  for (BigInt nu = 1; nu < p.gamma_max(); ++nu) {
    REQUIRE(!is_ancestor(p, nu, nu));
  }
}

TEST_CASE("star labeling answers") {
  ParamTable p = build_params(3, 2);
  CHECK(is_ancestor(p, 252, 1));
  CHECK(is_ancestor(p, 252, 3));
  CHECK(!is_ancestor(p, 1, 3));
  CHECK(!is_ancestor(p, 3, 1));
  CHECK(!is_ancestor(p, 1, 252));
}

TEST_CASE("out-of-range labels are rejected") {
  ParamTable p = build_params(2, 2);
  CHECK_THROWS_AS(is_ancestor(p, 0, 1), validation_error);
  CHECK_THROWS_AS(is_ancestor(p, 1, p.gamma_max()), validation_error);
}

TEST_CASE("adjacency label packing") {
  ParamTable p = build_params(2, 2);
  CHECK(make_adj_label(p, 15, 1) == 28);  // (15-1)*2 + 0
  CHECK(make_adj_label(p, 1, 2) == 1);    // 0*2 + 1

  CHECK_THROWS_AS(make_adj_label(p, 15, 0), validation_error);
  CHECK_THROWS_AS(make_adj_label(p, 15, 3), validation_error);

  // Exhaustive round-trip over the whole packed space of this tiny table.
  for (BigInt nu = 1; nu < p.gamma_max(); ++nu) {
    for (std::int64_t depth = 1; depth <= 2; ++depth) {
      AdjLabel back = unpack_adj_label(p, make_adj_label(p, nu, depth));
      REQUIRE(back.nu == nu);
      REQUIRE(back.depth == depth);
    }
  }
}

TEST_CASE("is_adjacent: parent edge, both argument orders") {
  ParamTable p = build_params(2, 2);
  BigInt root = make_adj_label(p, 15, 1);
  BigInt child = make_adj_label(p, 1, 2);
  CHECK(is_adjacent(p, root, child));
  CHECK(is_adjacent(p, child, root));
  CHECK(!is_adjacent(p, root, root));
}

TEST_CASE("is_adjacent: ancestor at depth gap two is not adjacent") {
  ParamTable p = build_params(3, 3);
  Forest chain = forest_of_parents({0, 1, 2});
  Labeling lab = label_forest(p, chain);

  auto adj = [&](NodeId v) {
    return make_adj_label(p, lab.label(v), lab.depth(v));
  };
  CHECK(is_adjacent(p, adj(1), adj(2)));
  CHECK(is_adjacent(p, adj(2), adj(3)));
  CHECK(!is_adjacent(p, adj(1), adj(3)));  // grandparent
}

TEST_CASE("label widths") {
  CHECK(label_bits(build_params(16, 2)) == 16);  // ceil(log2 56325)
  CHECK(label_bits(build_params(1, 1)) == 2);    // labels in [1, 3)

  ParamTable big = build_params(std::int64_t{1} << 20, 8);
  CHECK(label_bits(big) == 39);  // gamma_K = 300354919760
  CHECK(label_bits(big) <= 20 + 6 + 16);
  CHECK(label_bits(big) < 40);  // beats 2 log n already at this size
}

TEST_CASE("adjacency width adds about log d") {
  ParamTable p = build_params(16, 2);
  CHECK(adj_label_bits(p) == ceil_log2((p.gamma_max() - 1) * 2));
  CHECK(adj_label_bits(p) <= label_bits(p) + 1);
}

TEST_CASE("decoder agrees with the oracle on all forests up to n=5") {
  VerifyReport report = exhaustive_equivalence(5);
  CHECK(report.forests == 1 + 2 + 6 + 24 + 120);
  CHECK(report.mismatches == 0);
}

}  // TEST_SUITE
