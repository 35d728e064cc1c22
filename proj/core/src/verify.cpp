#include "anclab/verify.hpp"

#include <map>
#include <random>
#include <utility>

#include "anclab/decoder.hpp"
#include "anclab/forest.hpp"
#include "anclab/marker.hpp"
#include "anclab/universal.hpp"

namespace anclab {

namespace {

constexpr std::size_t kMaxFailureMessages = 10;

void record_failure(VerifyReport& report, std::string message) {
  ++report.mismatches;
  if (report.failures.size() < kMaxFailureMessages) {
    report.failures.push_back(std::move(message));
  }
}

class TableCache {
public:
  const ParamTable& get(std::int64_t n, std::int64_t d) {
    auto key = std::make_pair(n, d);
    auto it = tables_.find(key);
    if (it == tables_.end()) {
      it = tables_.emplace(key, build_params(n, d)).first;
    }
    return it->second;
  }

private:
  std::map<std::pair<std::int64_t, std::int64_t>, ParamTable> tables_;
};

struct LabeledForest {
  const ParamTable* p;
  const Forest* f;
  Labeling lab;
  std::vector<BigInt> adj;  // packed adjacency labels, 1-based

  LabeledForest(const ParamTable& params, const Forest& forest)
      : p(&params), f(&forest), lab(label_forest(params, forest)) {
    adj.resize(forest.size() + 1);
    for (NodeId v = 1; v <= forest.size(); ++v) {
      adj[v] = make_adj_label(params, lab.label(v), lab.depth(v));
    }
  }

  void check_pair(NodeId u, NodeId v, VerifyReport& report,
                  const std::string& what) const {
    ++report.pairs;
    bool want_anc = is_ancestor_oracle(*f, u, v);
    bool got_anc = is_ancestor(*p, lab.label(u), lab.label(v));
    if (want_anc != got_anc) {
      record_failure(report, what + ": ancestry mismatch on pair (" +
                                 std::to_string(u) + ", " + std::to_string(v) +
                                 ")");
      return;
    }
    bool want_adj = f->edge(u, v);
    bool got_adj = is_adjacent(*p, adj[u], adj[v]);
    if (want_adj != got_adj) {
      record_failure(report, what + ": adjacency mismatch on pair (" +
                                 std::to_string(u) + ", " + std::to_string(v) +
                                 ")");
      return;
    }
    // Two distinct labels sharing an interval must sit on distinct levels,
    // or the decoder's equal-interval rule would be ambiguous.
    if (u < v) {
      Triplet tu = decode_triplet(*p, lab.label(u));
      Triplet tv = decode_triplet(*p, lab.label(v));
      if (interval_of(*p, tu) == interval_of(*p, tv) &&
          tu.level == tv.level) {
        record_failure(report,
                       what + ": equal interval and level on pair (" +
                           std::to_string(u) + ", " + std::to_string(v) + ")");
      }
    }
  }

  void check_all_pairs(VerifyReport& report, const std::string& what) const {
    for (NodeId u = 1; u <= f->size(); ++u) {
      for (NodeId v = 1; v <= f->size(); ++v) {
        if (u != v) check_pair(u, v, report, what);
      }
    }
  }
};

}  // namespace

VerifyReport exhaustive_equivalence(int max_n, bool check_universal) {
  VerifyReport report;
  TableCache tables;

  for (int n = 1; n <= max_n; ++n) {
    ForestEnumerator en(n);
    std::uint64_t index = 0;
    while (auto f = en.next()) {
      const ParamTable& p = tables.get(n, f->max_depth());
      std::string what =
          "forest n=" + std::to_string(n) + " #" + std::to_string(index++);
      LabeledForest lf(p, *f);
      lf.check_all_pairs(report, what);
      if (check_universal && !embed_check(p, *f)) {
        record_failure(report, what + ": embed_check failed");
      }
      ++report.forests;
    }
  }
  return report;
}

VerifyReport randomized_equivalence(const RandomizedConfig& config) {
  VerifyReport report;
  TableCache tables;

  std::size_t cells = config.n_values.size() * config.d_values.size();
  for (int i = 0; i < config.count; ++i) {
    std::size_t cell = i % cells;
    std::int64_t n = config.n_values[cell / config.d_values.size()];
    std::int64_t d = config.d_values[cell % config.d_values.size()];

    Forest f = gen_forest(n, d, ForestShape::random(), config.seed + i);
    const ParamTable& p = tables.get(n, d);
    std::string what = "random forest #" + std::to_string(i) + " (n=" +
                       std::to_string(n) + ", d=" + std::to_string(d) + ")";
    LabeledForest lf(p, f);

    if (n <= config.all_pairs_max_n) {
      lf.check_all_pairs(report, what);
    }
    std::mt19937_64 rng(config.seed ^ (0x9e3779b97f4a7c15ULL + i));
    for (std::int64_t q = 0; q < config.pairs_per_forest; ++q) {
      NodeId u = 1 + static_cast<NodeId>(rng() % n);
      NodeId v = 1 + static_cast<NodeId>(rng() % n);
      if (u != v) lf.check_pair(u, v, report, what);
    }
    ++report.forests;
  }
  return report;
}

}  // namespace anclab
