#include "anclab/forest_io.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "anclab/decoder.hpp"
#include "test_util.hpp"

using namespace anclab;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

}  // namespace

TEST_SUITE("forest_io") {

TEST_CASE("parent list: two-node tree") {
  IngestedForest in = ingest_parent_list("2 2\n1 0\n2 1\n");
  CHECK(in.n == 2);
  CHECK(in.d == 2);
  CHECK(in.forest.parent(2) == 1);
  CHECK(in.forest.max_depth() == 2);
}

TEST_CASE("parent list: comments and id order do not matter") {
  IngestedForest in =
      ingest_parent_list("# a forest\n3 2\n# nodes\n3 1\n1 0\n2 1\n");
  CHECK(in.forest.children(1).size() == 2);
}

TEST_CASE("parent list: error cases") {
  // Depth above the declared bound.
  try {
    ingest_parent_list("2 1\n1 0\n2 1\n");
    FAIL("depth not checked");
  } catch (const validation_error& e) {
    CHECK(e.error_kind() == validation_error::kind::depth_exceeded);
  }
  // Duplicate id.
  try {
    ingest_parent_list("2 2\n1 0\n1 0\n");
    FAIL("duplicate not checked");
  } catch (const validation_error& e) {
    CHECK(e.error_kind() == validation_error::kind::duplicate_id);
  }
  CHECK_THROWS_AS(ingest_parent_list(""), validation_error);
  CHECK_THROWS_AS(ingest_parent_list("2\n1 0\n2 1\n"), validation_error);
  CHECK_THROWS_AS(ingest_parent_list("2 2\n1 0\n"), validation_error);
  CHECK_THROWS_AS(ingest_parent_list("2 2\n1 0\n2 1\n3 1\n"),
                  validation_error);
  CHECK_THROWS_AS(ingest_parent_list("2 2\n1 0\nx 1\n"), validation_error);
  CHECK_THROWS_AS(ingest_parent_list("0 1\n"), validation_error);
}

TEST_CASE("xml: element tree in document order") {
  IngestedForest in = ingest_xml("<a><b/><c><d/></c></a>");
  CHECK(in.n == 4);
  CHECK(in.d == 3);
  CHECK(in.forest.parent(1) == kNoParent);  // a
  CHECK(in.forest.parent(2) == 1);          // b -> a
  CHECK(in.forest.parent(3) == 1);          // c -> a
  CHECK(in.forest.parent(4) == 3);          // d -> c
}

TEST_CASE("xml: text, comments and PIs are skipped") {
  IngestedForest in =
      ingest_xml("<?xml version=\"1.0\"?>\n<a>text<!--x--><b/></a>");
  CHECK(in.n == 2);
  CHECK(in.d == 2);

  // Attribute values may contain markup characters.
  IngestedForest attr = ingest_xml("<a title=\"5 > 4\"><b x='<'/></a>");
  CHECK(attr.n == 2);
}

TEST_CASE("xml: rejection of everything beyond the subset") {
  CHECK_THROWS_AS(ingest_xml("<a><b></a></b>"), validation_error);
  CHECK_THROWS_AS(ingest_xml("<a><b></a>"), validation_error);
  CHECK_THROWS_AS(ingest_xml("<a>"), validation_error);
  CHECK_THROWS_AS(ingest_xml("</a>"), validation_error);
  CHECK_THROWS_AS(ingest_xml(""), validation_error);
  CHECK_THROWS_AS(ingest_xml("just text"), validation_error);
  CHECK_THROWS_AS(ingest_xml("<a/><b/>"), validation_error);  // two roots
  CHECK_THROWS_AS(ingest_xml("<!DOCTYPE html><a/>"), validation_error);
  CHECK_THROWS_AS(ingest_xml("<a><![CDATA[x]]></a>"), validation_error);
  CHECK_THROWS_AS(ingest_xml("<a foo></a>"), validation_error);
  CHECK_THROWS_AS(ingest_xml("<a foo=bar></a>"), validation_error);
  CHECK_THROWS_AS(ingest_xml("<a><!-- unterminated </a>"), validation_error);
  CHECK_THROWS_AS(ingest_xml("<1a/>"), validation_error);
}

TEST_CASE("label file round-trip preserves every query") {
  Forest f = gen_forest(60, 5, ForestShape::random(), 17);
  ParamTable p = build_params(60, 5);
  Labeling lab = label_forest(p, f);

  std::stringstream buf;
  write_label_file(buf, p, lab);
  LabelFile back = read_label_file(buf);

  CHECK(back.params.gamma == p.gamma);
  CHECK(back.params.n_input == p.n_input);
  REQUIRE(back.labeling.size() == lab.size());
  for (NodeId v = 1; v <= f.size(); ++v) {
    REQUIRE(back.labeling.label(v) == lab.label(v));
    REQUIRE(back.labeling.depth(v) == lab.depth(v));
  }
  for (NodeId u = 1; u <= f.size(); ++u) {
    for (NodeId v = 1; v <= f.size(); v += 3) {
      REQUIRE(is_ancestor(back.params, back.labeling.label(u),
                          back.labeling.label(v)) ==
              is_ancestor(p, lab.label(u), lab.label(v)));
    }
  }
}

TEST_CASE("label file header must reproduce the table") {
  Forest f = gen_forest(8, 3, ForestShape::random(), 1);
  ParamTable p = build_params(8, 3);
  std::stringstream buf;
  write_label_file(buf, p, label_forest(p, f));
  std::string text = buf.str();

  {
    // Corrupt gamma_max (prefix a digit onto the recorded value).
    std::string bad = text;
    bad.replace(bad.find("# gamma_max "), std::string("# gamma_max ").size(),
                "# gamma_max 9");
    std::istringstream is(bad);
    CHECK_THROWS_AS(read_label_file(is), validation_error);
  }
  {
    // Inconsistent adjacency column (value far outside the packed space).
    std::string bad = text;
    auto pos = bad.rfind(',');
    bad = bad.substr(0, pos + 1) + "1000000000000000000\n";
    std::istringstream is(bad);
    CHECK_THROWS_AS(read_label_file(is), validation_error);
  }
  {
    std::istringstream is("node,label,depth,adj_label\n");
    CHECK_THROWS_AS(read_label_file(is), validation_error);  // missing n/d
  }
}

TEST_CASE("bundled XML corpus: ingest, label, verify against the oracle") {
  namespace fs = std::filesystem;
  fs::path dir = fs::path(ANCLAB_TEST_DATA_DIR) / "xml";
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".xml") files.push_back(entry.path());
  }
  REQUIRE(files.size() == 20);

  std::mt19937_64 rng(2024);
  for (const auto& path : files) {
    CAPTURE(path.filename().string());
    IngestedForest in = ingest_xml(read_file(path));
    REQUIRE(in.d <= 8);  // typical document depths

    ParamTable p = build_params(in.n, in.d);
    Labeling lab = label_forest(p, in.forest);
    const std::int64_t n = in.forest.size();
    for (int q = 0; q < 1000; ++q) {
      NodeId u = 1 + static_cast<NodeId>(rng() % n);
      NodeId v = 1 + static_cast<NodeId>(rng() % n);
      if (u == v) continue;
      REQUIRE(is_ancestor(p, lab.label(u), lab.label(v)) ==
              is_ancestor_oracle(in.forest, u, v));
    }
  }
}

}  // TEST_SUITE
