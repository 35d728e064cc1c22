#ifndef ANCLAB_VERIFY_HPP
#define ANCLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace anclab {

// Equivalence checks between the label decoder and the parent-chain
// oracle, shared by the CLI selftest and the acceptance suite.

struct VerifyReport {
  std::uint64_t forests = 0;
  std::uint64_t pairs = 0;          // ordered pairs queried
  std::uint64_t mismatches = 0;     // ancestry or adjacency disagreements
  std::vector<std::string> failures;  // first few mismatch descriptions

  bool ok() const { return mismatches == 0; }
};

// Every parent-array forest with 1..max_n nodes (sum of n! forests), d set
// to each forest's depth; checks every ordered node pair for ancestry and
// adjacency agreement. check_universal additionally runs embed_check per
// forest. max_n <= 8.
VerifyReport exhaustive_equivalence(int max_n, bool check_universal = false);

// `count` random forests spread round-robin over the (n, d) grid;
// pairs_per_forest random ordered pairs each, plus all pairs when
// n <= all_pairs_max_n.
struct RandomizedConfig {
  std::vector<std::int64_t> n_values;
  std::vector<std::int64_t> d_values;
  int count = 100;
  std::int64_t pairs_per_forest = 200;
  std::int64_t all_pairs_max_n = 128;
  std::uint64_t seed = 42;
};
VerifyReport randomized_equivalence(const RandomizedConfig& config);

}  // namespace anclab

#endif
