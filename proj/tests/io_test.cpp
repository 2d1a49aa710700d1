#include <gtest/gtest.h>

#include <filesystem>

#include "support.hpp"
#include "vkc/error.hpp"
#include "vkc/io.hpp"

namespace vkc {
namespace {

using test::code_of;
using test::pick;

std::string error_text(std::string_view text) {
  try {
    parse_complex(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(ComplexFormatTest, ParsesEveryDirective) {
  const ComplexFile cf = parse_complex(
      "# annulus-ish\n"
      "vertex a b   # two points\n"
      "edge e a b\n"
      "edge f b a\n"
      "cell D e f\n"
      "cell R ~f e'\n"
      "sub S e / a / \n"
      "sub T / / D\n"
      "base b\n");
  const TwoComplex& x = cf.complex;
  EXPECT_EQ(x.vertex_count(), 2u);
  EXPECT_EQ(x.edge_pair_count(), 2u);
  EXPECT_EQ(x.boundary(1), (std::vector<EdgeId>{3, 1}));
  EXPECT_EQ(cf.base, std::optional<VertexId>(1));
  EXPECT_EQ(cf.sub("S").vertices(), (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(cf.sub("T"), cf.sub("T").unite(Subcomplex::closure(x, {}, {}, std::vector<CellId>{0})));
  EXPECT_TRUE(cf.sub("T").has_edge(2));
  EXPECT_EQ(code_of([&] { cf.sub("nope"); }), ErrorCode::InvalidArgument);
}

TEST(ComplexFormatTest, ErrorsCarryLineAndColumn) {
  EXPECT_EQ(error_text("vertex a\nedge e a q\n"), "ParseError: line 2, column 10: unknown vertex q");
  EXPECT_NE(error_text("vertex a\nvertex a\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_text("vertex a\nedge e a a\ncell D e g\n").find("line 3"), std::string::npos);
  EXPECT_NE(error_text("vertex a\nwedge x\n").find("line 2, column 1"), std::string::npos);
  EXPECT_NE(error_text("vertex a\nbase b\n").find("line 2"), std::string::npos);
  EXPECT_EQ(code_of([] { parse_complex("vertex a\nedge e a q\n"); }), ErrorCode::ParseError);
}

TEST(ComplexFormatTest, OpenBoundaryIsAValidationError) {
  EXPECT_EQ(code_of([] { parse_complex("vertex a b\nedge e a b\ncell D e\n"); }), ErrorCode::ValidationError);
}

TEST(ComplexFormatTest, EmitParseRoundTrip) {
  Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    ComplexFile cf;
    cf.complex = random_complex(rng);
    const TwoComplex& x = cf.complex;
    Subcomplex s = Subcomplex::empty(x);
    for (EdgeId e = 0; e < x.edge_count(); e += 2) {
      if (pick(rng, 0, 1)) s.add_edge(x, e);
    }
    s.add_vertex(static_cast<VertexId>(pick(rng, 0, x.vertex_count() - 1)));
    for (CellId c = 0; c < x.cell_count(); ++c) {
      if (pick(rng, 0, 1)) s.add_cell(x, c);
    }
    cf.subcomplexes.emplace_back("S", s);
    if (pick(rng, 0, 1)) cf.base = static_cast<VertexId>(pick(rng, 0, x.vertex_count() - 1));

    const std::string text = emit_complex(cf);
    const ComplexFile back = parse_complex(text);
    EXPECT_EQ(back.complex, cf.complex) << text;
    EXPECT_EQ(back.sub("S"), s);
    EXPECT_EQ(back.base, cf.base);
    EXPECT_EQ(emit_complex(back), text);
  }
}

TEST(ComplexFormatTest, FixturesLoad) {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(VKC_FIXTURE_DIR)) {
    if (entry.path().extension() != ".cx") continue;
    const ComplexFile cf = load_complex(entry.path());
    EXPECT_TRUE(validate_complex(cf.complex).empty()) << entry.path();
    EXPECT_TRUE(cf.base.has_value()) << entry.path();
    ++count;
  }
  EXPECT_GE(count, 10u);
  EXPECT_EQ(code_of([] { load_complex("/nonexistent/file.cx"); }), ErrorCode::ParseError);
}

TEST(GroupFormatTest, NamedAndTabulatedGroups) {
  EXPECT_EQ(parse_group("cyclic 5").order(), 5u);
  EXPECT_EQ(parse_group("symmetric 3").order(), 6u);
  EXPECT_EQ(resolve_group("Z4").order(), 4u);
  EXPECT_EQ(resolve_group("S4").order(), 24u);
  EXPECT_EQ(resolve_group("  symmetric 2 ").order(), 2u);
  // Klein four-group, identity listed last.
  const FiniteGroup v4 = parse_group(
      "table\n"
      "a b c e\n"
      "e c b a\n"
      "c e a b\n"
      "b a e c\n"
      "a b c e\n");
  EXPECT_EQ(v4.order(), 4u);
  EXPECT_EQ(v4.name(v4.identity()), "e");
  for (Element x = 0; x < 4; ++x) EXPECT_EQ(v4.mul(x, x), v4.identity());
  EXPECT_EQ(code_of([] { parse_group("table\na b\na b\nb b\n"); }), ErrorCode::NoInverse);
  EXPECT_EQ(code_of([] { parse_group("table\na b\na b\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_group("dihedral 4"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { resolve_group("no-such-group"); }), ErrorCode::ParseError);
}

TEST(GroupFormatTest, Batteries) {
  EXPECT_EQ(parse_battery("default").size(), 6u);
  const auto b = parse_battery("Z2, S3,cyclic 7");
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[2].order(), 7u);
  EXPECT_EQ(code_of([] { parse_battery("Z2,,Z3"); }), ErrorCode::ParseError);
}

TEST(CocycleFormatTest, ReversedNamesStoreInverses) {
  const ComplexFile cf = parse_complex("vertex o\nedge a o o\nedge b o o\ncell T a b ~a ~b\n");
  const TwoComplex& x = cf.complex;
  // 231 and 312 commute (powers of a 3-cycle).
  const Cocycle u = parse_cocycle(x, "cocycle S3\na 231\nb' 231\n", {0});
  const FiniteGroup& g = u.group();
  EXPECT_EQ(g.name(u[0]), "231");
  EXPECT_EQ(g.name(u[2]), "312");
  EXPECT_EQ(code_of([&] { parse_cocycle(x, "cocycle S3\na 231\n", {0}); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { parse_cocycle(x, "cocycle S3\na 213\nb 132\n", {0}); }), ErrorCode::NotACocycle);
  EXPECT_EQ(code_of([&] { parse_cocycle(x, "a 1\n", {0}); }), ErrorCode::ParseError);
}

TEST(CocycleFormatTest, EmitParseRoundTrip) {
  Rng rng(72);
  const FiniteGroup s3 = make_symmetric(3);
  for (int trial = 0; trial < 100; ++trial) {
    const TwoComplex x = random_complex(rng);
    const Cocycle u = test::random_cocycle(x, s3, {0}, rng);
    EXPECT_EQ(parse_cocycle(x, emit_cocycle(x, u, "symmetric 3"), {0}), u);
  }
}

}  // namespace
}  // namespace vkc
