#include <gtest/gtest.h>

#include <filesystem>
#include <regex>

#include "corpus.hpp"
#include "legfront/constructions.hpp"
#include "legfront/io.hpp"
#include "legfront/moves.hpp"
#include "legfront/render.hpp"

using namespace legfront;
using testing_support::corpus_dir;
using testing_support::front_names;
using testing_support::load_front;

namespace {

std::string golden(const std::string& name) {
  return read_text_file(std::filesystem::path(LEGFRONT_GOLDEN_DIR) / name);
}

Error error_of(const char* text) {
  try {
    parse_front(text);
  } catch (const Error& e) {
    return e;
  }
  return Error(ErrorCode::InternalConsistency, "accepted");
}

RenderSpec svg() {
  RenderSpec s;
  s.format = RenderFormat::Svg;
  return s;
}

// Every opening tag is closed in order; enough to catch broken output.
bool tags_balance(const std::string& doc) {
  static const std::regex tag(R"(<(/?)([a-zA-Z]+)[^>]*?(/?)>)");
  std::vector<std::string> stack;
  for (auto it = std::sregex_iterator(doc.begin(), doc.end(), tag); it != std::sregex_iterator();
       ++it) {
    const std::smatch& m = *it;
    if (m[3].length() > 0) continue;
    if (m[1].length() == 0) {
      stack.push_back(m[2]);
    } else {
      if (stack.empty() || stack.back() != m[2]) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

}  // namespace

TEST(ParseFront, Examples) {
  const FrontDiagram d = parse_front("L1 L3 X2 X2 X2 R3 R1");
  EXPECT_EQ(d.size(), 7u);
  EXPECT_EQ(d[2].kind, EventKind::Crossing);
  EXPECT_EQ(d[2].position, 2);
  EXPECT_EQ(parse_front("  L1\n\tR1  \n"), parse_front("L1 R1"));
  EXPECT_EQ(parse_front("# heading\nL1 # cusp\nR1 # close\n"), parse_front("L1 R1"));
  EXPECT_EQ(parse_front("L1#no space\nR1"), parse_front("L1 R1"));
}

TEST(ParseFront, SyntaxErrorsCarryLineAndColumn) {
  const Error e = error_of("L1 R1\n  Q2");
  EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 3u);

  const Error f = error_of("L1 Xa R1");
  EXPECT_EQ(f.code(), ErrorCode::SyntaxError);
  EXPECT_EQ(f.line(), 1u);
  EXPECT_EQ(f.column(), 5u);

  EXPECT_EQ(error_of("L").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(error_of("l1 r1").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(error_of("L-1 R1").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(error_of("L1 R1 L3").code(), ErrorCode::PositionOutOfRange);
}

TEST(SerializeFront, CorpusRoundTrips) {
  for (const std::string& name : front_names()) {
    const FrontDiagram d = load_front(name).diagram();
    const std::string text = serialize_front(d);
    EXPECT_EQ(text.back(), '\n');
    EXPECT_EQ(parse_front(text), d) << name;
    EXPECT_EQ(serialize_front(parse_front(text)), text) << name;
  }
}

TEST(Grid, RoundTripAndErrors) {
  for (const char* name : {"unknot.grid", "trefoil_left.grid", "figure_eight.grid"}) {
    const GridDiagram g = testing_support::load_grid(name);
    EXPECT_EQ(parse_grid(serialize_grid(g)), g) << name;
  }
  EXPECT_EQ(parse_grid("grid 2\nX: 2 1\nO: 1 2\n").size(), 2);
  EXPECT_THROW(parse_grid("grid 2\nX: 1 2\nO: 1 2\n"), Error);
  EXPECT_THROW(parse_grid("grid 3\nX: 2 1\nO: 1 2\n"), Error);
  EXPECT_THROW(parse_grid("grid 2\nO: 1 2\nX: 2 1\n"), Error);
}

TEST(Files, MissingFileIsAnIoError) {
  try {
    read_text_file(corpus_dir() / "does_not_exist.front");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Io);
  }
}

TEST(Files, WriteThenRead) {
  const auto path = std::filesystem::temp_directory_path() / "legfront_io_test.front";
  write_text_file(path, "L1 R1\n");
  EXPECT_EQ(read_text_file(path), "L1 R1\n");
  std::filesystem::remove(path);
}

TEST(Render, GoldenAscii) {
  EXPECT_EQ(render(load_front("unknot.front")), golden("unknot.txt"));
  EXPECT_EQ(render(load_front("trefoil.front")), golden("trefoil.txt"));
}

TEST(Render, GoldenSvg) {
  EXPECT_EQ(render(load_front("unknot.front"), svg()), golden("unknot.svg"));
  EXPECT_EQ(render(load_front("trefoil.front"), svg()), golden("trefoil.svg"));
}

TEST(Render, AsciiShowsCuspsAndOneColumnPerEvent) {
  const std::string pic = render(load_front("unknot.front"));
  EXPECT_NE(pic.find('<'), std::string::npos);
  EXPECT_NE(pic.find('>'), std::string::npos);
  RenderSpec labelled;
  labelled.show_event_indices = true;
  labelled.show_components = true;
  const std::string hopf = render(load_front("hopf.front"), labelled);
  EXPECT_NE(hopf.find("component 1"), std::string::npos);
  EXPECT_NE(hopf.find(" 6"), std::string::npos);
}

TEST(Render, DeterministicAndWellFormedOnCorpusAndFuzz) {
  for (const std::string& name : front_names()) {
    const OrientedFront of = load_front(name);
    if (of.diagram().size() > 120) continue;
    std::vector<OrientedFront> fronts{of, fuzz(of, 50, 11, FuzzOptions{true}).front};
    for (const OrientedFront& f : fronts) {
      const std::string a = render(f);
      EXPECT_EQ(a, render(f)) << name;
      EXPECT_FALSE(a.empty());
      const std::string s = render(f, svg());
      EXPECT_EQ(s, render(f, svg())) << name;
      EXPECT_EQ(s.rfind("<?xml", 0), 0u) << name;
      EXPECT_TRUE(tags_balance(s)) << name;
    }
  }
}

TEST(Render, InvalidSpecRejected) {
  const OrientedFront of = load_front("trefoil.front");
  for (auto [w, h] : {std::pair{4, 3}, std::pair{4, 0}, std::pair{3, 2}, std::pair{1, 2}}) {
    RenderSpec s;
    s.column_width = w;
    s.strand_spacing = h;
    try {
      render(of, s);
      FAIL() << w << ' ' << h;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
    }
  }
  RenderSpec wide;
  wide.column_width = 8;
  wide.strand_spacing = 4;
  EXPECT_NO_THROW(render(of, wide));
}
