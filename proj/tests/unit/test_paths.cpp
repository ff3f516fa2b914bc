#include <deque>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "yw/graph.hpp"
#include "yw/path_model.hpp"

using yw::Algebra;
using yw::LambdaPath;
using yw::PathModelContext;
using yw::VertexId;
using yw::WallModel;
using yw::WallModelContext;

namespace {

PathModelContext paths(Algebra a) {
  return {ywtest::crystal(a), ywtest::energy(a)};
}

WallModelContext reducedWalls(Algebra a) {
  return {ywtest::crystal(a), ywtest::energy(a), WallModel::Reduced};
}

}  // namespace

TEST_CASE("ground sequence basics") {
  for (Algebra a : ywtest::kBoth) {
    PathModelContext ctx = paths(a);
    LambdaPath g = ctx.ground();
    CHECK(ctx.key(g) == "ground");
    CHECK(ctx.contains(g));
    CHECK(ctx.weight(g) ==
          yw::AffineWeight{ctx.crystal().cartan().fundamentalWeight(0), 0});
    for (int i = 0; i < yw::kRank; ++i) {
      CHECK(ctx.epsilon(g, i) == 0);
      CHECK(ctx.phi(g, i) == (i == 0 ? 1 : 0));
      if (i != 0) CHECK_FALSE(ctx.ftilde(g, i).has_value());
      CHECK_FALSE(ctx.etilde(g, i).has_value());
    }
  }
}

TEST_CASE("one lowering step from the ground sequence") {
  const auto& b = ywtest::crystal(Algebra::E6_2);
  const auto& cd = b.cartan();
  PathModelContext ctx = paths(Algebra::E6_2);

  auto p = ctx.ftilde(ctx.ground(), 0);
  REQUIRE(p.has_value());
  CHECK(p->dev == std::vector<VertexId>{b.theta()});
  CHECK(ctx.key(*p) == "(2321)");

  yw::AffineWeight expect{cd.fundamentalWeight(0) - cd.simpleRootClassical(0),
                          -1};
  CHECK(ctx.weight(*p) == expect);

  auto back = ctx.etilde(*p, 0);
  REQUIRE(back.has_value());
  CHECK(back->dev.empty());
}

TEST_CASE("the energy-weighted delta of a two-step deviation") {
  const auto& b = ywtest::crystal(Algebra::E6_2);
  PathModelContext ctx = paths(Algebra::E6_2);

  // entries (position 0, position 1) = (vacuum, theta); both adjacent
  // energies are 1, weighted by position + 1
  LambdaPath p{{b.empty(), b.theta()}};
  REQUIRE(ctx.contains(p));
  CHECK(ctx.weight(p).delta == -3);
  CHECK(ctx.weight(p).classical ==
        b.cartan().fundamentalWeight(0) + b.weight(b.theta()));
}

TEST_CASE("paths convert to reduced walls and back") {
  for (Algebra a : ywtest::kBoth) {
    PathModelContext ctx = paths(a);
    WallModelContext walls = reducedWalls(a);

    std::set<std::string> seen{ctx.key(ctx.ground())};
    std::deque<std::pair<LambdaPath, int>> queue{{ctx.ground(), 0}};
    while (!queue.empty()) {
      auto [p, depth] = queue.front();
      queue.pop_front();

      yw::YoungWall w = ctx.toWall(walls, p);
      CHECK(walls.isReduced(w));
      CHECK(walls.contains(w));
      CHECK(ctx.fromWall(w) == p);
      // the two models paint the same weight on corresponding elements
      CHECK(walls.weight(w) == ctx.weight(p));
      for (int i = 0; i < yw::kRank; ++i) {
        CHECK(walls.epsilon(w, i) == ctx.epsilon(p, i));
        CHECK(walls.phi(w, i) == ctx.phi(p, i));
      }

      // the ball is a thin chain for the first few levels and only starts
      // branching around depth 7
      if (depth >= 8) continue;
      for (int i = 0; i < yw::kRank; ++i) {
        auto t = ctx.ftilde(p, i);
        if (t && seen.insert(ctx.key(*t)).second)
          queue.push_back({*t, depth + 1});
      }
    }
    CHECK(seen.size() >= 15);
  }
}

TEST_CASE("path and wall enumerations are isomorphic as anchored graphs") {
  // depth 30 reaches balls of several hundred elements, well past the thin
  // top of the crystal
  for (Algebra a : ywtest::kBoth) {
    PathModelContext p = paths(a);
    WallModelContext w = reducedWalls(a);
    yw::CrystalGraph gp = yw::enumerate(p, "path", p.ground(),
                                        yw::Direction::FOnly,
                                        yw::EnumLimits{.maxDepth = 30});
    yw::CrystalGraph gw = yw::enumerate(w, "reduced", w.ground(),
                                        yw::Direction::FOnly,
                                        yw::EnumLimits{.maxDepth = 30});
    CHECK(gp.nodes.size() == gw.nodes.size());
    CHECK(gp.nodes.size() >= 500);
    auto iso = yw::anchoredIsomorphic(gp, gw);
    CHECK(iso.ok);
    CHECK(iso.detail.empty());
  }
}
