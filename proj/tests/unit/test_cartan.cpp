#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "yw/cartan.hpp"

using yw::Algebra;
using yw::CartanDatum;
using yw::ClassicalWeight;
using yw::kRank;

TEST_CASE("cartan matrices carry the fixed entries and are transposes") {
  const CartanDatum& e6 = CartanDatum::get(Algebra::E6_2);
  const CartanDatum& f4 = CartanDatum::get(Algebra::F4_1);

  const int expected[kRank][kRank] = {{2, -1, 0, 0, 0},
                                      {-1, 2, -1, 0, 0},
                                      {0, -1, 2, -2, 0},
                                      {0, 0, -1, 2, -1},
                                      {0, 0, 0, -1, 2}};
  for (int i = 0; i < kRank; ++i) {
    for (int j = 0; j < kRank; ++j) {
      CHECK(e6.a(i, j) == expected[i][j]);
      CHECK(f4.a(i, j) == e6.a(j, i));
    }
  }
}

TEST_CASE("null root and central element annihilate the cartan matrix") {
  const int e6Delta[kRank] = {1, 2, 3, 2, 1};
  const int e6Central[kRank] = {1, 2, 3, 4, 2};
  const CartanDatum& e6 = CartanDatum::get(Algebra::E6_2);
  const CartanDatum& f4 = CartanDatum::get(Algebra::F4_1);
  for (int i = 0; i < kRank; ++i) {
    CHECK(e6.deltaCoeff(i) == e6Delta[i]);
    CHECK(e6.centralCoeff(i) == e6Central[i]);
    // the transposed matrix swaps the two coefficient vectors
    CHECK(f4.deltaCoeff(i) == e6Central[i]);
    CHECK(f4.centralCoeff(i) == e6Delta[i]);
  }

  for (const CartanDatum* cd : {&e6, &f4}) {
    for (int i = 0; i < kRank; ++i) {
      int row = 0, col = 0;
      for (int j = 0; j < kRank; ++j) {
        row += cd->a(i, j) * cd->deltaCoeff(j);
        col += cd->centralCoeff(j) * cd->a(j, i);
      }
      CHECK(row == 0);
      CHECK(col == 0);
    }
  }
}

TEST_CASE("fundamental weights and simple roots pair as expected") {
  for (Algebra a : ywtest::kBoth) {
    const CartanDatum& cd = CartanDatum::get(a);
    for (int i = 0; i < kRank; ++i) {
      for (int j = 0; j < kRank; ++j) {
        CHECK(cd.fundamentalWeight(i).pairing(j) == (i == j ? 1 : 0));
        CHECK(cd.simpleRootClassical(j).pairing(i) == cd.a(i, j));
      }
      CHECK(cd.simpleRoot(i).delta == (i == 0 ? 1 : 0));
    }
    CHECK(cd.level(cd.fundamentalWeight(0)) == 1);
    CHECK(cd.level(cd.fundamentalWeight(2)) == 3);
  }
  CHECK(CartanDatum::get(Algebra::E6_2)
            .level(CartanDatum::get(Algebra::E6_2).fundamentalWeight(4)) == 2);
  CHECK(CartanDatum::get(Algebra::F4_1)
            .level(CartanDatum::get(Algebra::F4_1).fundamentalWeight(4)) == 1);
}

TEST_CASE("finite root decomposition round trips and rejects non-lattice weights") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (Algebra a : ywtest::kBoth) {
    const CartanDatum& cd = CartanDatum::get(a);
    for (int trial = 0; trial < 200; ++trial) {
      std::array<int, kRank> x{};
      for (int i = 1; i < kRank; ++i) x[i] = coeff(rng);
      ClassicalWeight w;
      for (int i = 1; i < kRank; ++i)
        w = w + x[i] * cd.simpleRootClassical(i);
      auto back = cd.decomposeOverFiniteRoots(w);
      REQUIRE(back.has_value());
      CHECK(*back == x);
    }
    // Lambda0 does not lie in the span of the finite simple roots.
    CHECK_FALSE(cd.decomposeOverFiniteRoots(cd.fundamentalWeight(0)).has_value());
  }
}

TEST_CASE("affine root decomposition recovers all five coefficients") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (Algebra a : ywtest::kBoth) {
    const CartanDatum& cd = CartanDatum::get(a);
    for (int trial = 0; trial < 200; ++trial) {
      std::array<int, kRank> x{};
      for (int i = 0; i < kRank; ++i) x[i] = coeff(rng);
      yw::AffineWeight w;
      for (int i = 0; i < kRank; ++i) {
        yw::AffineWeight r = cd.simpleRoot(i);
        w = w + yw::AffineWeight{x[i] * r.classical, x[i] * r.delta};
      }
      auto back = cd.decomposeOverAffineRoots(w);
      REQUIRE(back.has_value());
      CHECK(*back == x);
    }

    // minus delta = minus the whole coefficient vector
    auto md = cd.decomposeOverAffineRoots({ClassicalWeight{}, -1});
    REQUIRE(md.has_value());
    for (int i = 0; i < kRank; ++i) CHECK((*md)[i] == -cd.deltaCoeff(i));

    CHECK_FALSE(
        cd.decomposeOverAffineRoots({cd.fundamentalWeight(0), 0}).has_value());
  }
}

TEST_CASE("weight strings") {
  const CartanDatum& cd = CartanDatum::get(Algebra::E6_2);
  CHECK(cd.fundamentalWeight(0).toString() == "L0");
  CHECK((2 * cd.fundamentalWeight(0) - cd.fundamentalWeight(3)).toString() ==
        "2L0-L3");
  CHECK(ClassicalWeight{}.toString() == "0");
  CHECK(yw::AffineWeight{{}, -2}.toString() == "-2d");
  CHECK(yw::AffineWeight{cd.fundamentalWeight(1), 1}.toString() == "L1+d");
  CHECK(yw::AffineWeight{cd.fundamentalWeight(1), 3}.toString() == "L1+3d");
}

TEST_CASE("algebra names round trip") {
  CHECK(yw::algebraName(Algebra::E6_2) == "e6-2");
  CHECK(yw::algebraName(Algebra::F4_1) == "f4-1");
  CHECK(yw::algebraFromName("e6-2") == Algebra::E6_2);
  CHECK(yw::algebraFromName("f4-1") == Algebra::F4_1);
  CHECK_FALSE(yw::algebraFromName("e8").has_value());
}
