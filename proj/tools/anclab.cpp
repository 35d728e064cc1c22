// anclab — ancestry and adjacency labels for forests of bounded depth.
//
// Subcommands: params, label, query, bench, universal-check, selftest.
// Exit codes: 0 success, 1 usage error, 2 input validation error,
// 3 internal assertion (a scheme bug, never the input's fault).

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "anclab/baseline.hpp"
#include "anclab/bench.hpp"
#include "anclab/decoder.hpp"
#include "anclab/forest_io.hpp"
#include "anclab/marker.hpp"
#include "anclab/universal.hpp"
#include "anclab/verify.hpp"

namespace {

using namespace anclab;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw validation_error(validation_error::kind::malformed_input,
                           "cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

// Writes to the given path, or to stdout for an empty path.
class OutputTarget {
public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) {
        throw validation_error(validation_error::kind::malformed_input,
                               "cannot open output file: " + path);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

ForestShape parse_family(const std::string& text) {
  auto colon = text.find(':');
  std::string base = text.substr(0, colon);
  std::int64_t arg = 0;
  if (colon != std::string::npos) {
    try {
      arg = std::stoll(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw CLI::ValidationError("family", "bad numeric argument in " + text);
    }
  }
  if (base == "random") return ForestShape::random();
  if (base == "path") return ForestShape::path();
  if (base == "star") return ForestShape::star();
  if (base == "kary") return ForestShape::kary(arg > 0 ? arg : 2);
  if (base == "forest" || base == "forest_of") {
    return ForestShape::forest_of(arg > 0 ? arg : 2);
  }
  throw CLI::ValidationError(
      "family", text + " (expected random|path|star|kary:B|forest:T)");
}

BigInt parse_label_arg(const std::string& text, const char* what) {
  auto v = parse_bigint(text);
  if (!v) {
    throw validation_error(validation_error::kind::malformed_input,
                           std::string(what) + " is not an integer: " + text);
  }
  return *v;
}

void cmd_params(std::int64_t n, std::int64_t d) {
  ParamTable p = build_params(n, d);
  std::cout << "n " << p.n_input << "\n";
  std::cout << "d " << p.depth_bound << "\n";
  std::cout << "n_pow2 " << p.n_pow2.get_str() << "\n";
  std::cout << "K " << p.levels << "\n";
  std::cout << "gamma_max " << p.gamma_max().get_str() << "\n";
  std::cout << "ancestry_bits " << label_bits(p) << "\n";
  std::cout << "adjacency_bits " << adj_label_bits(p) << "\n";
  std::cout << "universal_vertices " << universal_vertex_count(p).get_str()
            << "\n";
  std::cout << "k,c_k,x_k,H_k,J_k,gamma_k\n";
  for (int k = 0; k <= p.levels; ++k) {
    std::cout << k << ',' << p.c[k].get_str() << ',' << p.x[k].get_str()
              << ',';
    if (k == 0) {
      std::cout << "-,-";
    } else {
      std::cout << p.H[k].get_str() << ',' << p.J[k].get_str();
    }
    std::cout << ',' << p.gamma[k].get_str() << "\n";
  }
}

void cmd_label(const std::string& input, const std::string& output,
               const std::string& format) {
  std::string text = read_file(input);

  bool xml = format == "xml";
  if (format == "auto") {
    auto first = text.find_first_not_of(" \t\r\n");
    xml = first != std::string::npos && text[first] == '<';
  }
  IngestedForest in = xml ? ingest_xml(text) : ingest_parent_list(text);

  ParamTable p = build_params(in.n, in.d);
  Labeling lab = label_forest(p, in.forest);

  OutputTarget out(output);
  write_label_file(out.stream(), p, lab);
  std::cerr << "labeled " << in.forest.size() << " nodes (depth "
            << in.forest.max_depth() << ") with " << label_bits(p)
            << "-bit ancestry labels\n";
}

void cmd_query(const std::string& labelfile, const std::string& u_text,
               const std::string& v_text, bool adjacent) {
  std::ifstream in(labelfile, std::ios::binary);
  if (!in) {
    throw validation_error(validation_error::kind::malformed_input,
                           "cannot open file: " + labelfile);
  }
  LabelFile lf = read_label_file(in);

  BigInt u = parse_label_arg(u_text, "u-label");
  BigInt v = parse_label_arg(v_text, "v-label");
  bool result = adjacent ? is_adjacent(lf.params, u, v)
                         : is_ancestor(lf.params, u, v);
  std::cout << (result ? "true" : "false") << "\n";
}

int cmd_universal_check(std::int64_t n, std::int64_t d, int trials,
                        std::uint64_t seed, const std::string& export_path) {
  ParamTable p = build_params(n, d);
  std::cout << "universal_vertices " << universal_vertex_count(p).get_str()
            << "\n";

  int passed = 0;
  for (int t = 0; t < trials; ++t) {
    Forest f = gen_forest(n, d, ForestShape::random(), seed + t);
    if (embed_check(p, f)) ++passed;
  }
  std::cout << "embed_check " << passed << "/" << trials << " passed\n";

  if (!export_path.empty()) {
    auto edges = materialize_universal_edges(p);
    OutputTarget out(export_path);
    write_edge_list(out.stream(), edges);
    std::cout << "exported " << edges.size() << " edges\n";
  }
  return passed == trials ? 0 : 3;
}

int cmd_selftest(int max_n, bool universal) {
  VerifyReport report = exhaustive_equivalence(max_n, universal);
  std::cout << "forests " << report.forests << "\n";
  std::cout << "pairs " << report.pairs << "\n";
  std::cout << "mismatches " << report.mismatches << "\n";
  for (const auto& failure : report.failures) {
    std::cout << "  " << failure << "\n";
  }
  return report.ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compact ancestry/adjacency labels for bounded-depth forests"};
  app.require_subcommand(1);
  int rc = 0;

  // params
  auto* params_cmd =
      app.add_subcommand("params", "print the parameter table for (n, d)");
  std::int64_t pn = 0, pd = 0;
  params_cmd->add_option("n", pn, "max node count")->required();
  params_cmd->add_option("d", pd, "max depth")->required();
  params_cmd->callback([&] { cmd_params(pn, pd); });

  // label
  auto* label_cmd =
      app.add_subcommand("label", "label a forest or XML file");
  std::string label_in, label_out, label_format = "auto";
  label_cmd->add_option("file", label_in, "parent-list or XML file")
      ->required();
  label_cmd->add_option("-o,--output", label_out, "label file (default stdout)");
  label_cmd->add_option("--format", label_format, "auto|parents|xml")
      ->check(CLI::IsMember({"auto", "parents", "xml"}));
  label_cmd->callback([&] { cmd_label(label_in, label_out, label_format); });

  // query
  auto* query_cmd =
      app.add_subcommand("query", "answer a query from two labels");
  std::string query_file, query_u, query_v;
  bool query_adjacent = false;
  query_cmd->add_option("labelfile", query_file)->required();
  query_cmd->add_option("u", query_u, "label of u")->required();
  query_cmd->add_option("v", query_v, "label of v")->required();
  query_cmd->add_flag("--adjacent", query_adjacent,
                      "adjacency query over packed labels");
  query_cmd->callback(
      [&] { cmd_query(query_file, query_u, query_v, query_adjacent); });

  // bench
  auto* bench_cmd =
      app.add_subcommand("bench", "compare against the 2 log n baseline");
  std::vector<std::string> bench_families = {"random"};
  BenchConfig bench_config;
  std::string bench_out;
  bench_cmd->add_option("--families", bench_families,
                        "random|path|star|kary:B|forest:T");
  bench_cmd->add_option("--n", bench_config.n_values, "node counts");
  bench_cmd->add_option("--d", bench_config.d_values, "depth bounds");
  bench_cmd->add_option("--trials", bench_config.trials);
  bench_cmd->add_option("--seed", bench_config.seed);
  bench_cmd->add_option("--query-pairs", bench_config.query_pairs);
  bench_cmd->add_option("--oracle-checks", bench_config.oracle_checks);
  bench_cmd->add_option("--max-label-n", bench_config.max_label_n,
                        "larger n report table-derived widths only");
  bench_cmd->add_option("--jobs", bench_config.jobs);
  bench_cmd->add_option("-o,--output", bench_out, "CSV path (default stdout)");
  bench_cmd->callback([&] {
    bench_config.families.clear();
    for (const auto& text : bench_families) {
      bench_config.families.push_back(parse_family(text));
    }
    auto rows = run_bench(bench_config);
    OutputTarget out(bench_out);
    write_bench_csv(out.stream(), rows);
  });

  // universal-check
  auto* uni_cmd = app.add_subcommand(
      "universal-check", "verify induced-subgraph embeddings at (n, d)");
  std::int64_t un = 0, ud = 0;
  int uni_trials = 100;
  std::uint64_t uni_seed = 42;
  std::string uni_export;
  uni_cmd->add_option("n", un)->required();
  uni_cmd->add_option("d", ud)->required();
  uni_cmd->add_option("--trials", uni_trials);
  uni_cmd->add_option("--seed", uni_seed);
  uni_cmd->add_option("--export", uni_export,
                      "edge-list path (tiny tables only)");
  uni_cmd->callback(
      [&] { rc = cmd_universal_check(un, ud, uni_trials, uni_seed, uni_export); });

  // selftest
  auto* self_cmd = app.add_subcommand(
      "selftest", "exhaustive decoder/oracle equivalence on small forests");
  int self_max_n = 7;
  bool self_universal = false;
  self_cmd->add_option("--max-n", self_max_n)->check(CLI::Range(1, 8));
  self_cmd->add_flag("--universal", self_universal,
                     "also run embed_check per forest");
  self_cmd->callback([&] { rc = cmd_selftest(self_max_n, self_universal); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
