#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "yw/data.hpp"
#include "yw/perfect_crystal.hpp"
#include "yw/tensor.hpp"

namespace yw {

// H on ordered pairs of vertices, normalised by H(empty, empty) = 0.
class EnergyTable {
 public:
  EnergyTable(int size, std::vector<int> cells) : n_(size), h_(std::move(cells)) {}

  int size() const { return n_; }
  int at(VertexId left, VertexId right) const { return h_[static_cast<std::size_t>(left) * n_ + right]; }

  bool operator==(const EnergyTable&) const = default;

 private:
  int n_;
  std::vector<int> h_;
};

// Propagates H across B (x) B from the vacuum pair: applying a lowering
// operator leaves H alone except in colour 0, where it drops by one when the
// operator lands in the left factor and rises by one otherwise. Every pair
// is reached and revisits must agree, else this throws.
EnergyTable computeEnergy(const PerfectCrystal& b);

// Same propagation with the expansion order shuffled by `seed`. The result
// must be identical; disagreement would mean the recursion is inconsistent.
EnergyTable computeEnergyShuffled(const PerfectCrystal& b, std::uint64_t seed);

struct EnergyMismatch {
  std::string rowLabel;   // right tensor factor
  std::string colLabel;   // left tensor factor
  int expected = 0;
  int actual = 0;
};

struct GoldenEnergyComparison {
  std::vector<EnergyMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// The reference tables print H(col (x) row), so the comparison transposes.
GoldenEnergyComparison compareWithGolden(const PerfectCrystal& b,
                                         const EnergyTable& table,
                                         const GoldenEnergyTable& golden);

// Emits the printed layout: cell (row a, col b) = H(b (x) a).
std::string energyTableToCsv(const PerfectCrystal& b, const EnergyTable& table,
                             std::span<const std::string> rowLabels,
                             std::span<const std::string> colLabels);
std::string energyTableToCsv(const PerfectCrystal& b, const EnergyTable& table);

// H on the affinization: H(a(m) (x) b(n)) = H(a (x) b) + m - n.
inline int affineEnergy(const EnergyTable& table, const AffineVertex& left,
                        const AffineVertex& right) {
  return table.at(left.v, right.v) + left.shift - right.shift;
}

struct ConstancyReport {
  bool ok = true;
  long checkedMoves = 0;
  std::string detail;
};

// Verifies that affineEnergy is invariant under every defined word operator
// on two-factor words a(m) (x) b(n) with shifts in [-window, window]. The
// range overload restricts the left vertex to [xBegin, xEnd) so callers can
// split the sweep across threads and merge the reports.
ConstancyReport checkAffineConstancy(const PerfectCrystal& b,
                                     const EnergyTable& table, int window);
ConstancyReport checkAffineConstancy(const PerfectCrystal& b,
                                     const EnergyTable& table, int window,
                                     VertexId xBegin, VertexId xEnd);

struct ZeroDistance {
  int zeroArrows = 0;
  int steps = 0;
};

// Over all directed lowering paths from one vertex to another, the least
// number of 0-arrows used, with path length as tie break. Total because the
// crystal graph is strongly connected.
ZeroDistance minZeroArrows(const PerfectCrystal& b, VertexId from, VertexId to);

// Whether some sequence of affinized lowering operators turns `from` into
// `to`. Search is pruned by the componentwise block-count bound, which also
// makes it terminate.
bool pathExists(const PerfectCrystal& b, const AffineVertex& from,
                const AffineVertex& to);

}  // namespace yw
