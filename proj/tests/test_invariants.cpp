#include <gtest/gtest.h>

#include <cstdlib>

#include "brute.hpp"
#include "corpus.hpp"
#include "legfront/invariants.hpp"
#include "legfront/io.hpp"
#include "legfront/moves.hpp"

using namespace legfront;
using testing_support::front_names;
using testing_support::load_front;
using testing_support::word_of;

namespace {

OrientedFront W(const char* text) { return orient(parse_front(text)); }

void expect_matches_brute(const OrientedFront& of, const std::string& label) {
  const brute::Result ref = brute::trace(word_of(of.diagram()));
  const InvariantReport r = invariant_report(of);
  ASSERT_EQ(ref.components.size(), r.components.size()) << label;
  for (std::size_t k = 0; k < r.components.size(); ++k) {
    const auto& a = r.components[k];
    const auto& b = ref.components[k];
    EXPECT_EQ(a.writhe, b.writhe) << label << " component " << k;
    EXPECT_EQ(a.right_cusps, b.right_cusps) << label << " component " << k;
    EXPECT_EQ(a.down_cusps, b.down) << label << " component " << k;
    EXPECT_EQ(a.up_cusps, b.up) << label << " component " << k;
    EXPECT_EQ(a.tb, b.tb()) << label << " component " << k;
    EXPECT_EQ(2 * a.rot, b.rot2()) << label << " component " << k;
    for (std::size_t j = 0; j < r.components.size(); ++j) {
      if (j != k) EXPECT_EQ(2 * r.linking[k][j], ref.twice_linking[k][j]) << label;
    }
  }
}

}  // namespace

TEST(Invariants, StandardUnknot) {
  const OrientedFront of = W("L1 R1");
  EXPECT_EQ(tb(of, 0), -1);
  EXPECT_EQ(rot(of, 0), 0);
  EXPECT_EQ(writhe(of, 0), 0);
}

TEST(Invariants, Trefoil) {
  const OrientedFront of = W("L1 L3 X2 X2 X2 R3 R1");
  ASSERT_EQ(of.component_count(), 1u);
  EXPECT_EQ(writhe(of, 0), 3);
  EXPECT_EQ(cusp_counts(of, 0), (CuspCounts{2, 2, 2}));
  EXPECT_EQ(tb(of, 0), 1);
  EXPECT_EQ(rot(of, 0), 0);
  for (std::size_t e = 2; e <= 4; ++e) EXPECT_EQ(crossing_sign(of, e), 1);
}

TEST(Invariants, ThreeCrossingWordWithNestedCuspsIsTwoComponents) {
  const OrientedFront of = W("L1 L2 X2 X2 X2 R2 R1");
  ASSERT_EQ(of.component_count(), 2u);
  EXPECT_EQ(tb(of, 0), -1);
  EXPECT_EQ(tb(of, 1), -4);
  EXPECT_EQ(linking(of, 0, 1), 0);
}

TEST(Invariants, WritheFiveFourRightCusps) {
  const OrientedFront of = load_front("bb5_c4.front");
  ASSERT_EQ(of.component_count(), 1u);
  EXPECT_EQ(writhe(of, 0), 5);
  EXPECT_EQ(cusp_counts(of, 0).right, 4);
  EXPECT_EQ(tb(of, 0), 1);
}

TEST(Invariants, ReportMatchesSingleQueries) {
  for (const std::string& name : front_names()) {
    const OrientedFront of = load_front(name);
    const InvariantReport r = invariant_report(of);
    for (std::size_t k = 0; k < of.component_count(); ++k) {
      EXPECT_EQ(r.components[k].tb, tb(of, k)) << name;
      EXPECT_EQ(r.components[k].rot, rot(of, k)) << name;
      EXPECT_EQ(r.components[k].writhe, writhe(of, k)) << name;
      for (std::size_t j = 0; j < of.component_count(); ++j) {
        if (j != k) EXPECT_EQ(r.linking[k][j], linking(of, k, j)) << name;
      }
    }
  }
}

TEST(Invariants, AgreeWithBruteTracerOnCorpus) {
  for (const std::string& name : front_names()) expect_matches_brute(load_front(name), name);
}

TEST(Invariants, AgreeWithBruteTracerOnFuzzedFronts) {
  const char* seeds[] = {"trefoil.front", "hopf.front", "figure_eight.front", "unlink3.front"};
  std::uint64_t seed = 11;
  for (const char* name : seeds) {
    for (int round = 0; round < 5; ++round) {
      const FuzzResult f = fuzz(load_front(name), 150, seed++, FuzzOptions{true});
      expect_matches_brute(orient(f.front.diagram()), std::string(name) + " fuzz");
    }
  }
}

TEST(Invariants, KnotParityTbPlusRotOdd) {
  for (const std::string& name : front_names()) {
    const OrientedFront of = load_front(name);
    const InvariantReport r = invariant_report(of);
    for (const auto& c : r.components) EXPECT_EQ(std::abs(c.tb + c.rot) % 2, 1) << name;
  }
}

TEST(Invariants, ReversingAComponent) {
  for (const std::string& name : front_names()) {
    const OrientedFront of = load_front(name);
    const InvariantReport before = invariant_report(of);
    for (std::size_t k = 0; k < of.component_count(); ++k) {
      const InvariantReport after = invariant_report(of.reversed_component(k));
      for (std::size_t j = 0; j < of.component_count(); ++j) {
        EXPECT_EQ(after.components[j].tb, before.components[j].tb) << name;
        EXPECT_EQ(after.components[j].writhe, before.components[j].writhe) << name;
        EXPECT_EQ(after.components[j].rot,
                  j == k ? -before.components[j].rot : before.components[j].rot)
            << name;
        for (std::size_t i = 0; i < of.component_count(); ++i) {
          if (i == j) continue;
          const bool touches = (i == k) != (j == k);
          EXPECT_EQ(after.linking[i][j], touches ? -before.linking[i][j] : before.linking[i][j])
              << name;
        }
      }
    }
  }
}

TEST(Invariants, LinkingIsSymmetric) {
  for (const std::string& name : front_names()) {
    const InvariantReport r = invariant_report(load_front(name));
    for (std::size_t i = 0; i < r.linking.size(); ++i) {
      EXPECT_EQ(r.linking[i][i], 0);
      for (std::size_t j = 0; j < r.linking.size(); ++j) {
        EXPECT_EQ(r.linking[i][j], r.linking[j][i]) << name;
      }
    }
  }
}

TEST(Invariants, HopfLinkingIsOddUnlinkZero) {
  EXPECT_EQ(std::abs(linking(load_front("hopf.front"), 0, 1)), 1);
  EXPECT_EQ(linking(load_front("unlink2.front"), 0, 1), 0);
  EXPECT_EQ(linking(load_front("unlink2_side.front"), 0, 1), 0);
}

TEST(Invariants, ComponentErrors) {
  const OrientedFront link = W("L1 L1 R1 R1");
  try {
    linking(link, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SameComponent);
  }
  try {
    tb(link, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownComponent);
  }
}
