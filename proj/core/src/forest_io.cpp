#include "anclab/forest_io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "anclab/decoder.hpp"

namespace anclab {

namespace {

using kind = validation_error::kind;

validation_error malformed(const std::string& what) {
  return validation_error(kind::malformed_input, what);
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::int64_t parse_i64(std::string_view field, const std::string& context) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(),
                                   value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw malformed("expected an integer for " + context + ", got '" +
                    std::string(field) + "'");
  }
  return value;
}

// Splits on runs of blanks.
std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

class LineReader {
public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-blank, non-comment line, trimmed; nullopt at end.
  std::optional<std::string_view> next() {
    while (pos_ < text_.size()) {
      std::size_t eol = text_.find('\n', pos_);
      if (eol == std::string_view::npos) eol = text_.size();
      std::string_view line = trim(text_.substr(pos_, eol - pos_));
      pos_ = eol + 1;
      ++line_no_;
      if (!line.empty() && line[0] != '#') return line;
    }
    return std::nullopt;
  }

  std::size_t line_no() const { return line_no_; }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

}  // namespace

IngestedForest ingest_parent_list(std::string_view text) {
  LineReader reader(text);

  auto header = reader.next();
  if (!header) throw malformed("empty parent-list file");
  auto head_fields = split_ws(*header);
  if (head_fields.size() != 2) {
    throw malformed("header line must be 'n d'");
  }
  std::int64_t n = parse_i64(head_fields[0], "node count");
  std::int64_t d = parse_i64(head_fields[1], "depth bound");
  if (n < 1 || d < 1) {
    throw validation_error(kind::bad_argument,
                           "node count and depth bound must be at least 1");
  }

  std::vector<NodeId> parents(n, kNoParent);
  std::vector<bool> seen(n + 1, false);
  for (std::int64_t row = 0; row < n; ++row) {
    auto line = reader.next();
    if (!line) {
      throw malformed("expected " + std::to_string(n) + " node lines, got " +
                      std::to_string(row));
    }
    auto fields = split_ws(*line);
    if (fields.size() != 2) {
      throw malformed("line " + std::to_string(reader.line_no()) +
                      ": expected '<id> <parent-id>'");
    }
    std::int64_t id = parse_i64(fields[0], "node id");
    std::int64_t parent = parse_i64(fields[1], "parent id");
    if (id < 1 || id > n) {
      throw malformed("node id " + std::to_string(id) + " outside 1.." +
                      std::to_string(n));
    }
    if (seen[id]) {
      throw validation_error(kind::duplicate_id,
                             "duplicate node id " + std::to_string(id));
    }
    seen[id] = true;
    parents[id - 1] = parent;  // range-checked by validate_forest
  }
  if (reader.next()) throw malformed("trailing data after node lines");

  return IngestedForest{validate_forest(parents, d), n, d};
}

// ---- XML ------------------------------------------------------------------

namespace {

bool name_start_char(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == ':' || c >= 0x80;
}

bool name_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == ':' || c == '-' || c == '.' ||
         c >= 0x80;
}

class XmlScanner {
public:
  explicit XmlScanner(std::string_view text) : s_(text) {}

  std::vector<NodeId> parse() {
    while (pos_ < s_.size()) {
      if (s_[pos_] != '<') {
        ++pos_;  // text content is skipped wholesale
        continue;
      }
      if (match("<!--")) {
        skip_until("-->", "unterminated comment");
      } else if (match("<?")) {
        skip_until("?>", "unterminated processing instruction");
      } else if (peek("<!")) {
        throw malformed("DOCTYPE/CDATA sections are not supported");
      } else if (match("</")) {
        close_tag();
      } else {
        open_tag();
      }
    }
    if (!open_.empty()) {
      throw malformed("unclosed element '" + open_names_.back() + "'");
    }
    if (parents_.empty()) throw malformed("document contains no elements");
    return parents_;
  }

private:
  bool peek(std::string_view lit) const {
    return s_.substr(pos_, lit.size()) == lit;
  }
  bool match(std::string_view lit) {
    if (!peek(lit)) return false;
    pos_ += lit.size();
    return true;
  }
  void skip_until(std::string_view terminator, const char* err) {
    std::size_t end = s_.find(terminator, pos_);
    if (end == std::string_view::npos) throw malformed(err);
    pos_ = end + terminator.size();
  }
  void skip_ws() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
  }

  std::string read_name() {
    if (pos_ >= s_.size() || !name_start_char(s_[pos_])) {
      throw malformed("malformed tag near offset " + std::to_string(pos_));
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_attributes() {
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) throw malformed("unterminated tag");
      char c = s_[pos_];
      if (c == '>' || (c == '/' && peek("/>"))) return;
      read_name();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != '=') {
        throw malformed("attribute without '=' near offset " +
                        std::to_string(pos_));
      }
      ++pos_;
      skip_ws();
      if (pos_ >= s_.size() || (s_[pos_] != '"' && s_[pos_] != '\'')) {
        throw malformed("attribute value must be quoted");
      }
      char quote = s_[pos_++];
      std::size_t end = s_.find(quote, pos_);
      if (end == std::string_view::npos) {
        throw malformed("unterminated attribute value");
      }
      pos_ = end + 1;
    }
  }

  void open_tag() {
    ++pos_;  // consume '<'
    std::string name = read_name();
    skip_attributes();

    if (open_.empty() && root_seen_) {
      throw malformed("multiple root elements");
    }
    NodeId id = static_cast<NodeId>(parents_.size()) + 1;
    parents_.push_back(open_.empty() ? kNoParent : open_.back());
    root_seen_ = true;

    if (match("/>")) return;  // self-closing
    ++pos_;                   // consume '>'
    open_.push_back(id);
    open_names_.push_back(std::move(name));
  }

  void close_tag() {
    std::string name = read_name();
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '>') {
      throw malformed("malformed close tag for '" + name + "'");
    }
    ++pos_;
    if (open_.empty()) {
      throw malformed("close tag '" + name + "' with no open element");
    }
    if (open_names_.back() != name) {
      throw malformed("mismatched tag: expected '" + open_names_.back() +
                      "', got '" + name + "'");
    }
    open_.pop_back();
    open_names_.pop_back();
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<NodeId> parents_;
  std::vector<NodeId> open_;
  std::vector<std::string> open_names_;
  bool root_seen_ = false;
};

}  // namespace

IngestedForest ingest_xml(std::string_view text) {
  XmlScanner scanner(text);
  std::vector<NodeId> parents = scanner.parse();
  // Depth can never exceed the element count, so that is a valid bound;
  // the family depth is the measured one.
  Forest f = validate_forest(parents, static_cast<std::int64_t>(parents.size()));
  std::int64_t n = f.size();
  std::int64_t d = f.max_depth();
  return IngestedForest{std::move(f), n, d};
}

// ---- label files ------------------------------------------------------------

void write_label_file(std::ostream& os, const ParamTable& p,
                      const Labeling& lab) {
  os << "# anclab label file v1\n";
  os << "# n " << p.n_input << '\n';
  os << "# d " << p.depth_bound << '\n';
  os << "# n_pow2 " << p.n_pow2.get_str() << '\n';
  os << "# gamma_max " << p.gamma_max().get_str() << '\n';
  os << "# ancestry_bits " << label_bits(p) << '\n';
  os << "# adjacency_bits " << adj_label_bits(p) << '\n';
  os << "node,label,depth,adj_label\n";
  for (NodeId v = 1; v <= lab.size(); ++v) {
    os << v << ',' << lab.label(v).get_str() << ',' << lab.depth(v) << ','
       << make_adj_label(p, lab.label(v), lab.depth(v)).get_str() << '\n';
  }
}

namespace {

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

BigInt parse_big(std::string_view field, const std::string& context) {
  auto v = parse_bigint(field);
  if (!v) {
    throw malformed("expected an integer for " + context + ", got '" +
                    std::string(field) + "'");
  }
  return *v;
}

}  // namespace

LabelFile read_label_file(std::istream& is) {
  std::map<std::string, std::string> header;
  std::string line;
  bool saw_columns = false;

  // Header block: "# key value" lines up to the column header.
  while (std::getline(is, line)) {
    std::string_view sv = trim(line);
    if (sv.empty()) continue;
    if (sv[0] == '#') {
      auto fields = split_ws(sv.substr(1));
      if (fields.size() == 2) {
        header[std::string(fields[0])] = std::string(fields[1]);
      }
      continue;
    }
    if (sv == "node,label,depth,adj_label") {
      saw_columns = true;
      break;
    }
    throw malformed("unexpected line before column header: '" +
                    std::string(sv) + "'");
  }
  if (!saw_columns) throw malformed("missing column header line");
  if (!header.contains("n") || !header.contains("d")) {
    throw malformed("label file header must declare n and d");
  }

  ParamTable p = build_params(parse_i64(header.at("n"), "n"),
                              parse_i64(header.at("d"), "d"));

  // Any redundant header value must reproduce the rebuilt table exactly.
  auto check_header = [&](const char* key, const std::string& expect) {
    auto it = header.find(key);
    if (it != header.end() && it->second != expect) {
      throw malformed(std::string("header field ") + key +
                      " does not match the parameter table (expected " +
                      expect + ", file says " + it->second + ")");
    }
  };
  check_header("n_pow2", p.n_pow2.get_str());
  check_header("gamma_max", p.gamma_max().get_str());
  check_header("ancestry_bits", std::to_string(label_bits(p)));
  check_header("adjacency_bits", std::to_string(adj_label_bits(p)));

  std::vector<LabelValue> labels;
  std::vector<std::int64_t> depths;
  std::vector<bool> seen;
  std::int64_t rows = 0;

  while (std::getline(is, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv[0] == '#') continue;
    auto fields = split_csv(sv);
    if (fields.size() != 4) {
      throw malformed("expected 4 CSV fields, got " +
                      std::to_string(fields.size()));
    }
    std::int64_t id = parse_i64(fields[0], "node id");
    BigInt nu = parse_big(fields[1], "label");
    std::int64_t depth = parse_i64(fields[2], "depth");
    BigInt adj = parse_big(fields[3], "adjacency label");

    if (id < 1 || id > p.n_input) {
      throw malformed("node id " + std::to_string(id) + " outside 1..n");
    }
    if (static_cast<std::size_t>(id) >= seen.size()) {
      seen.resize(id + 1, false);
      labels.resize(id + 1, BigInt(0));
      depths.resize(id + 1, 0);
    }
    if (seen[id]) {
      throw validation_error(kind::duplicate_id,
                             "duplicate node id " + std::to_string(id));
    }
    seen[id] = true;

    decode_triplet(p, nu);  // range check: must decode under this table
    if (adj != make_adj_label(p, nu, depth)) {
      throw malformed("adjacency label of node " + std::to_string(id) +
                      " does not match (label, depth)");
    }
    labels[id] = std::move(nu);
    depths[id] = depth;
    ++rows;
  }

  if (rows == 0) throw malformed("label file has no rows");
  if (rows + 1 != static_cast<std::int64_t>(seen.size())) {
    throw malformed("node ids must cover 1..row_count exactly");
  }

  LabelFile out;
  out.params = std::move(p);
  out.labeling.labels = std::move(labels);
  out.labeling.depths = std::move(depths);
  return out;
}

}  // namespace anclab
