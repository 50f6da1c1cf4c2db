#include "oramsey/io.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace oramsey {
namespace {

std::string format_ids(std::span<const VertexId> ids) {
  std::string out = "[";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += std::to_string(ids[i]);
  }
  return out + "]";
}

std::string format_pairs(std::span<const Pair> pairs) {
  std::string out = "[";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += format_pair(pairs[i]);
  }
  return out + "]";
}

std::string format_nested(const std::vector<std::vector<VertexId>>& lists) {
  std::string out = "[";
  for (std::size_t i = 0; i < lists.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += format_ids(lists[i]);
  }
  return out + "]";
}

void put(std::string& out, std::string_view key, std::string_view value) {
  out.append(key).append(" = ").append(value).append("\n");
}

void put_header(std::string& out, std::string_view kind, std::string_view name) {
  put(out, "kind", kind);
  if (!name.empty()) {
    put(out, "name", name);
  }
}

void put_graph(std::string& out, const RNGraph& g, std::string_view prefix, bool with_n = true) {
  const std::string p(prefix);
  put(out, p + "n", std::to_string(g.size()));
  put(out, p + "R", format_pairs(g.R().pairs()));
  if (with_n) {
    put(out, p + "N", format_pairs(g.N().pairs()));
  }
  put(out, p + "order", format_ids(g.order().sequence()));
}

// --- parsing ---------------------------------------------------------------

struct Field {
  std::size_t line = 0;
  std::string value;
};

class Fields {
 public:
  explicit Fields(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      ++line_no;
      std::string_view line = trim(text.substr(start, end - start));
      start = end + 1;
      if (line.empty() || line.front() == '#') {
        if (end == text.size()) {
          break;
        }
        continue;
      }
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": expected 'key = value'");
      }
      std::string key(trim(line.substr(0, eq)));
      if (fields_.count(key) != 0) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) + ", field " + key + ": given twice");
      }
      fields_[key] = Field{line_no, std::string(trim(line.substr(eq + 1)))};
      if (end == text.size()) {
        break;
      }
    }
  }

  bool has(const std::string& key) const { return fields_.count(key) != 0; }

  const Field& require(const std::string& key) {
    auto it = fields_.find(key);
    if (it == fields_.end()) {
      throw Error(ErrorCode::kParseError, "field " + key + ": missing");
    }
    consumed_.push_back(key);
    return it->second;
  }

  std::optional<Field> optional(const std::string& key) {
    if (!has(key)) {
      return std::nullopt;
    }
    return require(key);
  }

  void reject_unused() const {
    for (const auto& [key, field] : fields_) {
      if (std::find(consumed_.begin(), consumed_.end(), key) == consumed_.end()) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(field.line) + ", field " + key + ": unknown field");
      }
    }
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
    }
    return s;
  }

 private:
  std::map<std::string, Field> fields_;
  std::vector<std::string> consumed_;
};

class Cursor {
 public:
  Cursor(const Field& field, std::string key) : text_(field.value), line_(field.line), key_(std::move(key)) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line_) + ", field " + key_ + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::uint64_t number() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a number");
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 0xffffffffULL) {
        fail("number out of range");
      }
      ++pos_;
    }
    return v;
  }

  template <typename F>
  void list(F&& element) {
    expect('[');
    if (peek(']')) {
      ++pos_;
      return;
    }
    while (true) {
      element();
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(']');
      return;
    }
  }

  void done() {
    skip_ws();
    if (pos_ != text_.size()) {
      fail("trailing characters");
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::string key_;
};

std::size_t read_count(Fields& f, const std::string& key) {
  Cursor c(f.require(key), key);
  const std::size_t v = c.number();
  c.done();
  return v;
}

std::vector<VertexId> read_ids(Fields& f, const std::string& key) {
  Cursor c(f.require(key), key);
  std::vector<VertexId> out;
  c.list([&] { out.push_back(static_cast<VertexId>(c.number())); });
  c.done();
  return out;
}

std::vector<Pair> read_pairs(Fields& f, const std::string& key) {
  Cursor c(f.require(key), key);
  std::vector<Pair> out;
  c.list([&] {
    c.expect('(');
    const auto x = static_cast<VertexId>(c.number());
    c.expect(',');
    const auto y = static_cast<VertexId>(c.number());
    c.expect(')');
    out.emplace_back(x, y);
  });
  c.done();
  return out;
}

std::vector<std::vector<VertexId>> read_nested(Fields& f, const std::string& key) {
  Cursor c(f.require(key), key);
  std::vector<std::vector<VertexId>> out;
  c.list([&] {
    out.emplace_back();
    c.list([&] { out.back().push_back(static_cast<VertexId>(c.number())); });
  });
  c.done();
  return out;
}

RNGraph read_graph(Fields& f, const std::string& prefix) {
  const std::size_t n = read_count(f, prefix + "n");
  auto r = read_pairs(f, prefix + "R");
  auto nn = read_pairs(f, prefix + "N");
  auto order = read_ids(f, prefix + "order");
  if (order.size() != n) {
    throw Error(ErrorCode::kParseError, "field " + prefix + "order: expected " + std::to_string(n) + " ids");
  }
  return make_rn_graph(n, std::move(r), std::move(nn), std::move(order));
}

}  // namespace

std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::kPoset: return "poset";
    case DocumentKind::kRN: return "rn";
    case DocumentKind::kAPartite: return "apartite";
    case DocumentKind::kPicture: return "picture";
    case DocumentKind::kHomomorphism: return "hom";
    case DocumentKind::kColoring: return "coloring";
  }
  return "unknown";
}

std::string serialize(const OrderedPoset& p, std::string_view name) {
  std::string out;
  put_header(out, "poset", name);
  put(out, "n", std::to_string(p.size()));
  put(out, "R", format_pairs(p.R().pairs()));
  put(out, "order", format_ids(p.order().sequence()));
  return out;
}

std::string serialize(const RNGraph& g, std::string_view name) {
  std::string out;
  put_header(out, "rn", name);
  put_graph(out, g, "");
  return out;
}

std::string serialize(const APartiteRNGraph& g, std::string_view name) {
  std::string out;
  put_header(out, "apartite", name);
  put_graph(out, g.base(), "");
  put_graph(out, g.A(), "a.");
  put(out, "parts", format_nested(g.parts()));
  return out;
}

std::string serialize(const Picture& p, std::string_view name) {
  std::string out;
  put_header(out, "picture", name);
  put_graph(out, p.base, "");
  put_graph(out, p.d, "d.");
  put(out, "map", format_ids(p.f.map));
  return out;
}

std::string serialize(const Homomorphism& h, std::size_t target_size, std::string_view name) {
  std::string out;
  put_header(out, "hom", name);
  put(out, "n", std::to_string(h.map.size()));
  put(out, "target_n", std::to_string(target_size));
  put(out, "map", format_ids(h.map));
  return out;
}

std::string serialize(const Coloring& c, std::string_view name) {
  std::string out;
  put_header(out, "coloring", name);
  put(out, "r", std::to_string(c.num_colors()));
  put(out, "copies", format_nested(c.images()));
  std::string colors = "[";
  for (std::size_t i = 0; i < c.colors().size(); ++i) {
    colors += (i > 0 ? ", " : "") + std::to_string(c.colors()[i]);
  }
  put(out, "colors", colors + "]");
  return out;
}

Document parse_document(std::string_view text) {
  Fields f(text);
  Document doc;
  const Field& kind_field = f.require("kind");
  const std::string& kind = kind_field.value;
  if (auto name = f.optional("name")) {
    doc.name = name->value;
  }
  if (kind == "poset") {
    doc.kind = DocumentKind::kPoset;
    const std::size_t n = read_count(f, "n");
    auto r = read_pairs(f, "R");
    auto order = read_ids(f, "order");
    doc.poset = make_ordered_poset(n, std::move(r), std::move(order));
  } else if (kind == "rn") {
    doc.kind = DocumentKind::kRN;
    doc.graph = read_graph(f, "");
  } else if (kind == "apartite") {
    doc.kind = DocumentKind::kAPartite;
    RNGraph base = read_graph(f, "");
    RNGraph a = read_graph(f, "a.");
    doc.apartite = make_apartite(a, read_nested(f, "parts"), base);
  } else if (kind == "picture") {
    doc.kind = DocumentKind::kPicture;
    RNGraph base = read_graph(f, "");
    RNGraph d = read_graph(f, "d.");
    doc.picture = make_picture(std::move(base), std::move(d), Homomorphism{read_ids(f, "map")});
  } else if (kind == "hom") {
    doc.kind = DocumentKind::kHomomorphism;
    const std::size_t n = read_count(f, "n");
    doc.hom_target_size = read_count(f, "target_n");
    doc.hom = Homomorphism{read_ids(f, "map")};
    if (doc.hom->map.size() != n) {
      throw Error(ErrorCode::kParseError, "field map: expected " + std::to_string(n) + " entries");
    }
    for (VertexId v : doc.hom->map) {
      if (v >= doc.hom_target_size) {
        throw Error(ErrorCode::kParseError, "field map: image " + std::to_string(v) + " >= target_n");
      }
    }
  } else if (kind == "coloring") {
    doc.kind = DocumentKind::kColoring;
    const std::size_t r = read_count(f, "r");
    auto copies = read_nested(f, "copies");
    auto raw = read_ids(f, "colors");
    std::vector<int> colors(raw.begin(), raw.end());
    if (r < 1 || r > 31) {
      throw Error(ErrorCode::kParseError, "field r: must lie in 1..31");
    }
    doc.coloring = Coloring(std::move(copies), std::move(colors), static_cast<int>(r));
  } else {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(kind_field.line) + ", field kind: unknown kind '" + kind + "'");
  }
  f.reject_unused();
  return doc;
}

Document load_document(const std::filesystem::path& path) {
  return parse_document(read_file(path));
}

RNGraph as_rn_graph(const Document& doc) {
  switch (doc.kind) {
    case DocumentKind::kPoset: return poset_to_complete_rn(*doc.poset);
    case DocumentKind::kRN: return *doc.graph;
    case DocumentKind::kAPartite: return doc.apartite->base();
    case DocumentKind::kPicture: return doc.picture->base;
    default: break;
  }
  throw Error(ErrorCode::kInvalidInput, std::string(to_string(doc.kind)) + " document is not a structure");
}

OrderedPoset as_poset(const Document& doc) {
  if (doc.kind == DocumentKind::kPoset) {
    return *doc.poset;
  }
  return complete_rn_to_poset(as_rn_graph(doc));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidInput, "cannot read " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kInvalidInput, "cannot write " + path.string());
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kInvariantViolation, "sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

void Manifest::set(std::string key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
}

std::optional<std::string> Manifest::get(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) {
      return v;
    }
  }
  return std::nullopt;
}

std::string Manifest::to_string() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    put(out, k, v);
  }
  return out;
}

Manifest Manifest::parse(std::string_view text) {
  Manifest m;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = Fields::trim(line);
    if (s.empty() || s.front() == '#') {
      continue;
    }
    const std::size_t eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParseError, "manifest line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    m.set(std::string(Fields::trim(s.substr(0, eq))), std::string(Fields::trim(s.substr(eq + 1))));
  }
  return m;
}

std::string to_dot(const RNGraph& g, const std::vector<std::vector<VertexId>>& parts,
                   std::string_view name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=LR;\n  node [shape=circle];\n";
  if (parts.empty()) {
    for (VertexId v : g.order().sequence()) {
      out << "  " << v << ";\n";
    }
  } else {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out << "  subgraph cluster_" << i << " {\n    label=\"X_" << i << "\";\n";
      for (VertexId v : parts[i]) {
        out << "    " << v << ";\n";
      }
      out << "  }\n";
    }
  }
  for (const Pair& p : g.R().pairs()) {
    out << "  " << p.first << " -> " << p.second << ";\n";
  }
  for (const Pair& p : g.N().pairs()) {
    out << "  " << p.first << " -> " << p.second << " [style=dashed];\n";
  }
  for (std::size_t i = 1; i < g.size(); ++i) {
    out << "  " << g.order().at(i - 1) << " -> " << g.order().at(i)
        << " [style=invis, weight=100];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Document& doc) {
  const std::string name = doc.name.empty() ? std::string(to_string(doc.kind)) : doc.name;
  switch (doc.kind) {
    case DocumentKind::kAPartite: return to_dot(doc.apartite->base(), doc.apartite->parts(), name);
    case DocumentKind::kPicture: return to_dot(doc.picture->base, doc.picture->parts, name);
    default: return to_dot(as_rn_graph(doc), {}, name);
  }
}

}  // namespace oramsey
