#include <gtest/gtest.h>

#include "oramsey/io.hpp"
#include "test_util.hpp"

namespace oramsey {
namespace {

using testing::error_code_of;

std::string parse_error(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError) << e.detail();
    return e.detail();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return {};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) {
    ++n;
  }
  return n;
}

TEST(Serialize, RNGraphLayout) {
  const RNGraph g = make_rn_graph(3, {{0, 1}, {1, 2}}, {{0, 2}}, {0, 1, 2});
  EXPECT_EQ(serialize(g, "C_2"),
            "kind = rn\nname = C_2\nn = 3\nR = [(0,1), (1,2)]\nN = [(0,2)]\norder = [0, 1, 2]\n");
  EXPECT_EQ(serialize(chain(2)), "kind = poset\nn = 2\nR = [(0,1)]\norder = [0, 1]\n");
}

TEST(Serialize, RoundTripsEveryKind) {
  testing::Rng rng(31);
  std::vector<std::string> texts;
  for (int trial = 0; trial < 20; ++trial) {
    texts.push_back(serialize(testing::random_rn_graph(rng, 1 + trial % 7, 0.3, 0.3), "g"));
    texts.push_back(serialize(testing::random_poset(rng, 1 + trial % 7)));
    const auto inst = testing::random_partite(rng, 1 + trial % 3, 2, 0.5);
    texts.push_back(serialize(make_apartite(inst.a, inst.parts, inst.base)));
  }
  texts.push_back(serialize(build_picture_zero(poset_to_complete_rn(chain(3)), poset_to_complete_rn(chain(2))),
                            "P_0"));
  texts.push_back(serialize(Homomorphism{{0, 0, 1}}, 2, "h"));
  texts.push_back(serialize(Coloring({{0, 1}, {0, 2}, {1, 2}}, {0, 1, 0}, 2)));
  texts.push_back(serialize(antichain(1)));
  for (const std::string& text : texts) {
    const Document doc = parse_document(text);
    std::string again;
    switch (doc.kind) {
      case DocumentKind::kPoset: again = serialize(*doc.poset, doc.name); break;
      case DocumentKind::kRN: again = serialize(*doc.graph, doc.name); break;
      case DocumentKind::kAPartite: again = serialize(*doc.apartite, doc.name); break;
      case DocumentKind::kPicture: again = serialize(*doc.picture, doc.name); break;
      case DocumentKind::kHomomorphism: again = serialize(*doc.hom, doc.hom_target_size, doc.name); break;
      case DocumentKind::kColoring: again = serialize(*doc.coloring, doc.name); break;
    }
    EXPECT_EQ(again, text);
  }
}

TEST(Parse, CommentsAndBlankLinesAreIgnored) {
  const Document doc = parse_document("# a chain\n\nkind = poset\nn = 2\nR = [(0,1)]\norder = [0, 1]\n");
  EXPECT_EQ(*doc.poset, chain(2));
  EXPECT_EQ(as_rn_graph(doc), poset_to_complete_rn(chain(2)));
}

TEST(Parse, ErrorsNameLineAndField) {
  EXPECT_NE(parse_error("kind = rn\nn = 2\nR = [(0,1]\nN = []\norder = [0, 1]\n").find("line 3, field R"),
            std::string::npos);
  EXPECT_NE(parse_error("kind = rn\nn = 2\nR = []\nN = []\norder = [0, 1]\ncolour = 3\n").find("unknown field"),
            std::string::npos);
  EXPECT_NE(parse_error("kind = rn\nn = 2\nn = 2\nR = []\nN = []\norder = [0, 1]\n").find("given twice"),
            std::string::npos);
  EXPECT_NE(parse_error("kind = rn\nn = 2\nR = []\norder = [0, 1]\n").find("field N"), std::string::npos);
  EXPECT_NE(parse_error("kind = rn\nn = 2\nR = [] x\nN = []\norder = [0, 1]\n").find("trailing"),
            std::string::npos);
  EXPECT_NE(parse_error("kind = tree\n").find("unknown kind"), std::string::npos);
  EXPECT_NE(parse_error("just words\n").find("line 1"), std::string::npos);
}

TEST(Parse, ValidationErrorsPropagate) {
  EXPECT_EQ(error_code_of([] { parse_document("kind = rn\nn = 2\nR = [(0,1)]\nN = [(0,1)]\norder = [0, 1]\n"); }),
            ErrorCode::kNotDisjoint);
  EXPECT_EQ(error_code_of([] { parse_document("kind = poset\nn = 3\nR = [(0,1), (1,2)]\norder = [0, 1, 2]\n"); }),
            ErrorCode::kNotTransitive);
}

TEST(Parse, ConversionsRejectTheWrongKind) {
  const Document hom = parse_document(serialize(Homomorphism{{0}}, 1));
  EXPECT_EQ(error_code_of([&] { as_rn_graph(hom); }), ErrorCode::kInvalidInput);
  const Document g = parse_document(serialize(make_rn_graph(2, {}, {}, {0, 1})));
  EXPECT_EQ(error_code_of([&] { as_poset(g); }), ErrorCode::kInvalidInput);
}

TEST(Digest, KnownVectors) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Manifest, RoundTripKeepsOrder) {
  Manifest m;
  m.set("format", "x 1");
  m.set("b", "2");
  m.set("a", "1");
  m.set("b", "3");
  const Manifest back = Manifest::parse(m.to_string());
  EXPECT_EQ(back.entries(), m.entries());
  EXPECT_EQ(back.get("b"), "3");
  EXPECT_FALSE(back.get("c"));
  EXPECT_EQ(m.entries().front().first, "format");
}

TEST(Dot, ArcsAndClusters) {
  const std::string c2 = to_dot(poset_to_complete_rn(chain(2)));
  EXPECT_EQ(count(c2, "0 -> 1;"), 1u);
  EXPECT_EQ(count(c2, "dashed"), 0u);
  const std::string a2 = to_dot(poset_to_complete_rn(antichain(2)));
  EXPECT_EQ(count(a2, "dashed"), 1u);
  const Picture p = build_picture_zero(poset_to_complete_rn(chain(3)), poset_to_complete_rn(chain(2)));
  const std::string pd = to_dot(p.base, p.parts, "P_0");
  EXPECT_EQ(count(pd, "subgraph cluster_"), 3u);
  EXPECT_EQ(pd.rfind("digraph \"P_0\" {", 0), 0u);
}

TEST(Files, WriteThenLoad) {
  const auto dir = std::filesystem::temp_directory_path() / "oramsey_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "g.txt";
  write_file(path, serialize(chain(3), "c"));
  const Document doc = load_document(path);
  EXPECT_EQ(doc.name, "c");
  EXPECT_EQ(*doc.poset, chain(3));
  EXPECT_EQ(error_code_of([&] { load_document(dir / "missing.txt"); }), ErrorCode::kInvalidInput);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace oramsey
