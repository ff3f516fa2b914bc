#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "yw/energy.hpp"
#include "yw/errors.hpp"
#include "yw/perfect_crystal.hpp"
#include "yw/tensor.hpp"

namespace yw {

// One wall column: a vertex class plus z extra full periods of blocks.
// The ground column is (empty, 0).
struct YoungColumn {
  VertexId cls = -1;
  int shift = 0;
  auto operator<=>(const YoungColumn&) const = default;
};

// Columns indexed by position k, k = 0 rightmost. Positions beyond
// cols.size() hold implicit ground columns; canonical form stores none.
struct YoungWall {
  std::vector<YoungColumn> cols;
  auto operator<=>(const YoungWall&) const = default;
};

enum class WallModel { Reduced, Proper };

// Signature data for a wall, with word positions translated back to column
// indices. The lowering operator may point one past the stored columns,
// meaning it materialises the first ground column.
struct WallSignature {
  int eps = 0;
  int phi = 0;
  int etildeColumn = -1;
  int ftildeColumn = -1;
};

class WallModelContext {
 public:
  using Elem = YoungWall;

  WallModelContext(const PerfectCrystal& b, const EnergyTable& table,
                   WallModel model)
      : b_(&b), h_(&table), model_(model) {}

  const PerfectCrystal& crystal() const { return *b_; }
  const EnergyTable& energy() const { return *h_; }
  WallModel model() const { return model_; }

  YoungWall ground() const { return {}; }

  // Drops trailing ground columns so equal walls compare equal.
  static void canonicalize(YoungWall& w, VertexId emptyVertex);
  YoungWall canonical(YoungWall w) const;

  // Stacking condition between column k+1 (upper) and column k (lower):
  // H(upper.cls (x) lower.cls) + upper.shift - lower.shift. Zero for a
  // reduced pair, nonpositive for a proper one.
  int pairExcess(const YoungColumn& upper, const YoungColumn& lower) const;

  bool isReduced(const YoungWall& w) const;
  bool isProper(const YoungWall& w) const;
  // Canonical, nonnegative shifts, and the model's stacking condition at
  // every position including against the implicit ground tail.
  bool contains(const YoungWall& w) const;

  // Per-column block counts; entry i counts i-blocks over the whole wall.
  std::array<int, kRank> blockCounts(const YoungWall& w) const;
  std::array<int, kRank> columnContent(const YoungColumn& c) const;

  WallSignature wallSignature(const YoungWall& w, int i) const;
  int epsilon(const YoungWall& w, int i) const;
  int phi(const YoungWall& w, int i) const;

  // Crystal operators. Results are canonicalised and re-checked against the
  // model; a result outside the model throws ModelViolationError.
  std::optional<YoungWall> ftilde(const YoungWall& w, int i) const;
  std::optional<YoungWall> etilde(const YoungWall& w, int i) const;

  AffineWeight weight(const YoungWall& w) const;
  std::string key(const YoungWall& w) const;

  // H on adjacent columns in Fock labels n_k = k + z_k, entry k covering
  // the pair (column k+1, column k) for k up to the first ground column.
  // A wall is reduced exactly when every entry is 1.
  std::vector<int> fockAdjacentEnergies(const YoungWall& w) const;

  // Rebuilds the shifts a reduced wall must carry over the given classes,
  // bottom position first.
  YoungWall wallFromClasses(std::span<const VertexId> classes) const;

  // Every proper wall with at most maxColumns stored columns and all shifts
  // at most maxShift, ground included. Enumeration order is deterministic.
  std::vector<YoungWall> properSeeds(int maxColumns, int maxShift) const;

 private:
  const PerfectCrystal* b_;
  const EnergyTable* h_;
  WallModel model_;
};

// Whether the lowered left column reaches the right column in the
// affinization; columns carry Fock labels. Reduced pairs always pass, and
// the failing proper pairs are exactly those with adjacent energy zero.
bool rightBlockPairHolds(const PerfectCrystal& b, const AffineVertex& left,
                         const AffineVertex& right);

}  // namespace yw
