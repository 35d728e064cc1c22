#ifndef ANCLAB_BENCH_HPP
#define ANCLAB_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "anclab/forest.hpp"

namespace anclab {

struct BenchConfig {
  std::vector<ForestShape> families = {ForestShape::random()};
  std::vector<std::int64_t> n_values = {1 << 10};
  std::vector<std::int64_t> d_values = {8};
  int trials = 1;
  std::uint64_t seed = 42;
  std::int64_t query_pairs = 1'000'000;   // per (cell, scheme) timing sample
  std::int64_t oracle_checks = 1000;      // random pairs cross-checked per trial
  std::int64_t max_label_n = 1 << 22;     // above this, report table-derived
                                          // widths only (trials = 0 in the row)
  int jobs = 1;                           // independent cells may run in parallel
};

// One CSV row per (family, n, d, scheme). max_bits is the scheme's label
// width for the family: ceil(log2 gamma_K) for this scheme, 2*ceil(log2(2n+1))
// for the baseline. label_ms and queries_per_sec are measured over the
// trials (empty cells when the cell ran table-only).
struct BenchRow {
  std::string family;
  std::int64_t n = 0;
  std::int64_t d = 0;
  int trials = 0;
  std::string scheme;  // "anclab" or "baseline"
  int max_bits = 0;
  int theoretical_bound_bits = 0;
  double label_ms = 0.0;
  double queries_per_sec = 0.0;
  bool measured = false;
  std::int64_t oracle_checks_passed = 0;
};

std::vector<BenchRow> run_bench(const BenchConfig& config);

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace anclab

#endif
