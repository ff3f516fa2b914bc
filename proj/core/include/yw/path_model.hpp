#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yw/energy.hpp"
#include "yw/perfect_crystal.hpp"
#include "yw/walls.hpp"

namespace yw {

// A sequence over the crystal that agrees with the ground sequence beyond
// the stored entries. Entry k = 0 is the rightmost tensor factor.
struct LambdaPath {
  std::vector<VertexId> dev;
  auto operator<=>(const LambdaPath&) const = default;
};

class PathModelContext {
 public:
  using Elem = LambdaPath;

  PathModelContext(const PerfectCrystal& b, const EnergyTable& table)
      : b_(&b), h_(&table) {}

  const PerfectCrystal& crystal() const { return *b_; }

  LambdaPath ground() const { return {}; }
  LambdaPath canonical(LambdaPath p) const;
  bool contains(const LambdaPath& p) const;

  int epsilon(const LambdaPath& p, int i) const;
  int phi(const LambdaPath& p, int i) const;
  std::optional<LambdaPath> ftilde(const LambdaPath& p, int i) const;
  std::optional<LambdaPath> etilde(const LambdaPath& p, int i) const;

  // Classical part relative to the anchor weight; the delta part is the
  // energy-weighted sum over adjacent entries.
  AffineWeight weight(const LambdaPath& p) const;
  std::string key(const LambdaPath& p) const;

  // The reduced wall carrying the same deviation classes, and back.
  YoungWall toWall(const WallModelContext& walls, const LambdaPath& p) const;
  LambdaPath fromWall(const YoungWall& w) const;

 private:
  const PerfectCrystal* b_;
  const EnergyTable* h_;
};

}  // namespace yw
