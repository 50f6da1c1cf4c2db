#pragma once

// Canonical text form for structures, maps and colourings:
//
//   kind = rn
//   name = C_2
//   n = 3
//   R = [(0,1), (1,2)]
//   N = [(0,2)]
//   order = [0, 1, 2]
//
// One `key = value` per line, fixed key order, sorted pair lists. Blank
// lines and lines starting with '#' are ignored when reading. Writing a
// parsed document reproduces the input byte for byte when the input was
// itself written by this module.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oramsey/arrow.hpp"
#include "oramsey/construction.hpp"
#include "oramsey/partite.hpp"
#include "oramsey/structures.hpp"

namespace oramsey {

enum class DocumentKind { kPoset, kRN, kAPartite, kPicture, kHomomorphism, kColoring };

std::string_view to_string(DocumentKind kind);

struct Document {
  DocumentKind kind = DocumentKind::kRN;
  std::string name;
  std::optional<OrderedPoset> poset;
  std::optional<RNGraph> graph;
  std::optional<APartiteRNGraph> apartite;
  std::optional<Picture> picture;
  std::optional<Homomorphism> hom;
  std::size_t hom_target_size = 0;
  std::optional<Coloring> coloring;
};

std::string serialize(const OrderedPoset& p, std::string_view name = {});
std::string serialize(const RNGraph& g, std::string_view name = {});
std::string serialize(const APartiteRNGraph& g, std::string_view name = {});
std::string serialize(const Picture& p, std::string_view name = {});
std::string serialize(const Homomorphism& h, std::size_t target_size, std::string_view name = {});
std::string serialize(const Coloring& c, std::string_view name = {});

/// Errors: kParseError (with line and field), or the validation error of
/// the structure described.
Document parse_document(std::string_view text);
Document load_document(const std::filesystem::path& path);

/// Posets become their complete RN graph; partite graphs and pictures give
/// their base graph. Throws kInvalidInput for maps and colourings.
RNGraph as_rn_graph(const Document& doc);
OrderedPoset as_poset(const Document& doc);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

std::string sha256_hex(std::string_view data);

/// Ordered `key = value` lines.
class Manifest {
 public:
  void set(std::string key, std::string value);
  std::optional<std::string> get(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  std::string to_string() const;
  static Manifest parse(std::string_view text);

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Solid arcs for R, dashed for N, an invisible chain fixing the order,
/// and one cluster per part when `parts` is non-empty.
std::string to_dot(const RNGraph& g, const std::vector<std::vector<VertexId>>& parts = {},
                   std::string_view name = "G");
std::string to_dot(const Document& doc);

}  // namespace oramsey
