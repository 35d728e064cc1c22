#ifndef ANCLAB_FOREST_IO_HPP
#define ANCLAB_FOREST_IO_HPP

#include <iosfwd>
#include <string_view>

#include "anclab/forest.hpp"
#include "anclab/marker.hpp"
#include "anclab/params.hpp"

namespace anclab {

// A forest read from a file plus the (n, d) family it belongs to: declared
// in the header for parent lists, inferred for XML documents.
struct IngestedForest {
  Forest forest;
  std::int64_t n = 0;
  std::int64_t d = 0;
};

// Parent-list format: '#' comment lines, a "n d" header line, then one
// "<id> <parent-id>" line per node (parent 0 = root), ids 1..n in any
// order. Throws validation_error on malformed lines, duplicate ids, or
// anything validate_forest rejects.
IngestedForest ingest_parent_list(std::string_view text);

// Minimal well-formed XML subset: open/close/self-closing element tags.
// Attributes, text, comments and processing instructions are skipped;
// DOCTYPE, CDATA and entities are rejected. The element tree becomes the
// forest (document root = tree root), n = element count, d = depth.
IngestedForest ingest_xml(std::string_view text);

// Label files are plain CSV with a '#'-prefixed header that carries the
// (n, d) family context the decoder needs, followed by one row per node:
// node id, ancestry label, depth, packed adjacency label.
void write_label_file(std::ostream& os, const ParamTable& p,
                      const Labeling& lab);

struct LabelFile {
  ParamTable params;
  Labeling labeling;
};

// Parses and cross-checks a label file: the header must reproduce the
// exact parameter table for its (n, d) and every row must decode under it.
LabelFile read_label_file(std::istream& is);

}  // namespace anclab

#endif
