#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "yw/cartan.hpp"
#include "yw/data.hpp"

namespace yw {

using VertexId = int;

struct Arrow {
  VertexId from;
  int i;
  VertexId to;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// The level-1 perfect crystal attached to E6(2) or F4(1): vertices x_{+a} and
// x_{-a} for each root a in the relevant finite list, one vertex r_i for each
// index whose simple root occurs in that list (1,2 for E6(2); 1..4 for F4(1)),
// and a vacuum vertex labelled "empty". Arrows for i != 0 follow subtraction
// of alpha_i through the root list, with x_{alpha_i} -> r_i -> x_{-alpha_i};
// arrows for i = 0 follow addition of the highest root theta, with
// x_{-theta} -> empty -> x_theta.
//
// Vertex order is fixed: empty, r_i ascending, positive roots in list order,
// then their negatives; every table and export is deterministic in it.
// Instances are immutable after build().
class PerfectCrystal {
 public:
  using Elem = VertexId;

  static PerfectCrystal build(Algebra a);

  Algebra algebra() const { return algebra_; }
  const CartanDatum& cartan() const;
  int size() const { return static_cast<int>(labels_.size()); }

  VertexId empty() const { return empty_; }
  VertexId theta() const { return theta_; }
  VertexId minusTheta() const { return minusTheta_; }

  std::optional<VertexId> ftilde(VertexId v, int i) const;
  std::optional<VertexId> etilde(VertexId v, int i) const;
  // String distances: epsilon = steps to the top of the i-string, phi = steps
  // to the bottom. Values never exceed 2 here, but are computed, not assumed.
  int epsilon(VertexId v, int i) const { return eps_[v][i]; }
  int phi(VertexId v, int i) const { return phi_[v][i]; }

  ClassicalWeight weight(VertexId v) const;     // sum (phi_i - eps_i) Lambda_i
  ClassicalWeight epsWeight(VertexId v) const;  // sum eps_i Lambda_i
  ClassicalWeight phiWeight(VertexId v) const;  // sum phi_i Lambda_i

  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> vertexByLabel(std::string_view label) const;

  std::span<const Arrow> arrows() const { return arrows_; }

  // Blocks added on top of the ground column along any arrow path from
  // empty(0) to v(0) in the affinization; component i counts i-coloured
  // blocks, so component 0 equals the accumulated shift and is 0 here.
  // Path independence is asserted during construction.
  const std::array<int, kRank>& baseContent(VertexId v) const {
    return baseContent_[v];
  }

 private:
  PerfectCrystal() = default;
  void finalize();  // derives eps/phi/arrow list/base contents from f_

  friend PerfectCrystal perturbArrowForTest(const PerfectCrystal&, std::size_t);

  Algebra algebra_ = Algebra::E6_2;
  std::vector<std::string> labels_;
  std::vector<std::array<VertexId, kRank>> f_;  // -1 when absent
  std::vector<std::array<VertexId, kRank>> e_;
  std::vector<std::array<int, kRank>> eps_;
  std::vector<std::array<int, kRank>> phi_;
  std::vector<std::array<int, kRank>> baseContent_;
  std::vector<Arrow> arrows_;
  VertexId empty_ = -1, theta_ = -1, minusTheta_ = -1;
};

// Copy of the crystal with arrow #arrowIndex recoloured to the next index,
// or simply deleted when recolouring would break the one-arrow-per-colour
// structure. Exists so tests and the verify command can demonstrate that the
// golden comparisons actually detect a wrong graph; never use it otherwise.
PerfectCrystal perturbArrowForTest(const PerfectCrystal& b,
                                   std::size_t arrowIndex);

struct ArrowComparison {
  std::vector<GoldenEdge> missing;     // golden arrows the crystal lacks
  std::vector<GoldenEdge> unexpected;  // crystal arrows absent from golden
  bool ok() const { return missing.empty() && unexpected.empty(); }
};

// Multiset comparison of the built arrows against a golden edge list.
ArrowComparison compareArrowsWithGolden(const PerfectCrystal& b,
                                        std::span<const GoldenEdge> golden);

// Level-1 perfectness, restricted to the conditions decidable by finite
// search over B and B (x) B. (Being the crystal of an integrable module is
// taken for granted; it is not checkable from the graph alone.)
struct PerfectnessReport {
  bool squareConnected = false;      // B (x) B has a single component
  bool uniqueMaximalWeight = false;  // a unique lambda0 dominates wt(B) and
                                     // |B_{lambda0}| = 1
  bool epsilonLevelAtLeastOne = false;  // <c, eps(b)> >= 1 for every b
  bool vacuumMinimal = false;  // unique b with eps(b) = Lambda0, ditto phi,
                               // both equal to "empty"
  std::string detail;
  bool ok() const {
    return squareConnected && uniqueMaximalWeight && epsilonLevelAtLeastOne &&
           vacuumMinimal;
  }
};

PerfectnessReport checkPerfect(const PerfectCrystal& b);

}  // namespace yw
