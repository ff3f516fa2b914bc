#include "yw/perfect_crystal.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "yw/tensor.hpp"

namespace yw {

namespace {

using Root = std::array<int, 4>;

// Finite root lists, in the order the labels are printed everywhere. E6(2)
// uses the twelve-element list (no (0010) or (0001), hence no r_3, r_4);
// F4(1) uses all twenty-four positive roots of F4.
constexpr std::array<Root, 12> kRootsE62{{{1, 0, 0, 0},
                                          {0, 1, 0, 0},
                                          {1, 1, 0, 0},
                                          {0, 1, 1, 0},
                                          {1, 1, 1, 0},
                                          {0, 1, 1, 1},
                                          {1, 1, 1, 1},
                                          {1, 2, 1, 0},
                                          {1, 2, 1, 1},
                                          {1, 2, 2, 1},
                                          {1, 3, 2, 1},
                                          {2, 3, 2, 1}}};

constexpr std::array<Root, 24> kRootsF41{
    {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0},
     {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 1, 1, 0}, {0, 1, 2, 0}, {0, 1, 1, 1},
     {1, 1, 2, 0}, {1, 1, 1, 1}, {0, 1, 2, 1}, {1, 2, 2, 0}, {1, 1, 2, 1},
     {0, 1, 2, 2}, {1, 2, 2, 1}, {1, 1, 2, 2}, {1, 2, 3, 1}, {1, 2, 2, 2},
     {1, 2, 3, 2}, {1, 2, 4, 2}, {1, 3, 4, 2}, {2, 3, 4, 2}}};

Root negate(Root r) {
  for (int& c : r) c = -c;
  return r;
}

std::string rootLabel(const Root& r) {
  bool neg = std::ranges::any_of(r, [](int c) { return c < 0; });
  std::string s = neg ? "-(" : "(";
  for (int c : r) s += static_cast<char>('0' + (neg ? -c : c));
  s += ')';
  return s;
}

}  // namespace

const CartanDatum& PerfectCrystal::cartan() const {
  return CartanDatum::get(algebra_);
}

PerfectCrystal PerfectCrystal::build(Algebra a) {
  PerfectCrystal b;
  b.algebra_ = a;

  std::vector<Root> roots;
  if (a == Algebra::E6_2)
    roots.assign(kRootsE62.begin(), kRootsE62.end());
  else
    roots.assign(kRootsF41.begin(), kRootsF41.end());

  std::map<Root, VertexId> byRoot;
  std::array<VertexId, kRank> rVertex;
  rVertex.fill(-1);

  auto addVertex = [&b](std::string label) {
    b.labels_.push_back(std::move(label));
    return static_cast<VertexId>(b.labels_.size() - 1);
  };

  b.empty_ = addVertex("empty");
  std::array<bool, kRank> simpleIsRoot{};
  for (int i = 1; i < kRank; ++i) {
    Root ei{};
    ei[i - 1] = 1;
    simpleIsRoot[i] = std::ranges::find(roots, ei) != roots.end();
    if (simpleIsRoot[i]) rVertex[i] = addVertex("r" + std::to_string(i));
  }
  for (const Root& r : roots) byRoot[r] = addVertex(rootLabel(r));
  for (const Root& r : roots) {
    Root m = negate(r);
    byRoot[m] = addVertex(rootLabel(m));
  }

  const Root theta = roots.back();  // highest root, by list order
  b.theta_ = byRoot.at(theta);
  b.minusTheta_ = byRoot.at(negate(theta));

  b.f_.assign(b.labels_.size(), [] {
    std::array<VertexId, kRank> x;
    x.fill(-1);
    return x;
  }());

  auto addArrow = [&b](VertexId from, int i, VertexId to) {
    assert(b.f_[from][i] == -1);  // i-strings are simple paths
    b.f_[from][i] = to;
  };

  for (int i = 1; i < kRank; ++i) {
    Root ei{};
    ei[i - 1] = 1;
    for (const auto& [alpha, v] : byRoot) {
      Root beta = alpha;
      for (int k = 0; k < 4; ++k) beta[k] -= ei[k];
      if (auto it = byRoot.find(beta); it != byRoot.end()) {
        addArrow(v, i, it->second);
      }
    }
    if (simpleIsRoot[i]) {
      addArrow(byRoot.at(ei), i, rVertex[i]);
      addArrow(rVertex[i], i, byRoot.at(negate(ei)));
    }
  }
  for (const auto& [alpha, v] : byRoot) {
    if (alpha == theta || alpha == negate(theta)) continue;
    Root beta = alpha;
    for (int k = 0; k < 4; ++k) beta[k] += theta[k];
    if (auto it = byRoot.find(beta); it != byRoot.end()) {
      if (beta != theta && beta != negate(theta)) addArrow(v, 0, it->second);
    }
  }
  addArrow(b.minusTheta_, 0, b.empty_);
  addArrow(b.empty_, 0, b.theta_);

  b.finalize();
  return b;
}

void PerfectCrystal::finalize() {
  const int n = size();
  e_.assign(n, [] {
    std::array<VertexId, kRank> x;
    x.fill(-1);
    return x;
  }());
  arrows_.clear();
  for (VertexId v = 0; v < n; ++v) {
    for (int i = 0; i < kRank; ++i) {
      if (VertexId t = f_[v][i]; t != -1) {
        assert(e_[t][i] == -1);
        e_[t][i] = v;
        arrows_.push_back({v, i, t});
      }
    }
  }

  eps_.assign(n, {});
  phi_.assign(n, {});
  for (VertexId v = 0; v < n; ++v) {
    for (int i = 0; i < kRank; ++i) {
      int d = 0;
      for (VertexId u = v; e_[u][i] != -1; u = e_[u][i]) {
        ++d;
        assert(d <= n);
      }
      eps_[v][i] = d;
      d = 0;
      for (VertexId u = v; f_[u][i] != -1; u = f_[u][i]) {
        ++d;
        assert(d <= n);
      }
      phi_[v][i] = d;
    }
  }

  // Base contents by search from the vacuum; each f_i adds one i-block and
  // each 0-arrow additionally rolls the column up one period. Revisits verify
  // path independence.
  const auto& delta = cartan().deltaCoeffs();
  baseContent_.assign(n, {});
  std::vector<bool> seen(n, false);
  seen[empty_] = true;
  std::deque<VertexId> queue{empty_};
  auto relax = [&](VertexId from, VertexId to, std::array<int, kRank> next) {
    if (!seen[to]) {
      seen[to] = true;
      baseContent_[to] = next;
      queue.push_back(to);
    } else if (baseContent_[to] != next) {
      throw std::logic_error("content vector is path dependent at " +
                             labels_[from] + " -> " + labels_[to]);
    }
  };
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (int i = 0; i < kRank; ++i) {
      if (VertexId t = f_[v][i]; t != -1) {
        auto c = baseContent_[v];
        c[i] += 1;
        if (i == 0)
          for (int k = 0; k < kRank; ++k) c[k] -= delta[k];
        relax(v, t, c);
      }
      if (VertexId s = e_[v][i]; s != -1) {
        auto c = baseContent_[v];
        c[i] -= 1;
        if (i == 0)
          for (int k = 0; k < kRank; ++k) c[k] += delta[k];
        relax(v, s, c);
      }
    }
  }
  assert(std::ranges::all_of(seen, [](bool x) { return x; }));
}

std::optional<VertexId> PerfectCrystal::ftilde(VertexId v, int i) const {
  VertexId t = f_[v][i];
  return t == -1 ? std::nullopt : std::optional<VertexId>(t);
}

std::optional<VertexId> PerfectCrystal::etilde(VertexId v, int i) const {
  VertexId t = e_[v][i];
  return t == -1 ? std::nullopt : std::optional<VertexId>(t);
}

ClassicalWeight PerfectCrystal::weight(VertexId v) const {
  ClassicalWeight w;
  for (int i = 0; i < kRank; ++i) w.lambda[i] = phi_[v][i] - eps_[v][i];
  return w;
}

ClassicalWeight PerfectCrystal::epsWeight(VertexId v) const {
  ClassicalWeight w;
  for (int i = 0; i < kRank; ++i) w.lambda[i] = eps_[v][i];
  return w;
}

ClassicalWeight PerfectCrystal::phiWeight(VertexId v) const {
  ClassicalWeight w;
  for (int i = 0; i < kRank; ++i) w.lambda[i] = phi_[v][i];
  return w;
}

std::optional<VertexId> PerfectCrystal::vertexByLabel(
    std::string_view label) const {
  for (VertexId v = 0; v < size(); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

PerfectCrystal perturbArrowForTest(const PerfectCrystal& b,
                                   std::size_t arrowIndex) {
  PerfectCrystal out = b;
  if (arrowIndex >= out.arrows_.size()) {
    throw std::out_of_range("arrow index out of range");
  }
  Arrow a = out.arrows_[arrowIndex];
  out.f_[a.from][a.i] = -1;

  // Try to re-add the arrow under the next colour, but only if that keeps
  // the graph a cycle-free partial function per colour; otherwise the arrow
  // stays deleted, which is an equally visible defect.
  int j = (a.i + 1) % kRank;
  bool slotFree = out.f_[a.from][j] == -1;
  bool targetFree = std::ranges::none_of(
      out.f_, [&](const auto& row) { return row[j] == a.to; });
  bool makesCycle = false;
  for (VertexId u = a.to; u != -1; u = out.f_[u][j]) {
    if (u == a.from) {
      makesCycle = true;
      break;
    }
  }
  if (slotFree && targetFree && !makesCycle) out.f_[a.from][j] = a.to;

  try {
    out.finalize();
  } catch (const std::logic_error&) {
    // Recolouring usually breaks content path independence. The arrow list
    // and the string data are complete by then, which is all a deliberately
    // damaged copy is for.
  }
  return out;
}

ArrowComparison compareArrowsWithGolden(const PerfectCrystal& b,
                                        std::span<const GoldenEdge> golden) {
  std::map<GoldenEdge, int> count;
  for (const auto& g : golden) ++count[g];
  for (const Arrow& a : b.arrows()) {
    --count[{b.label(a.from), a.i, b.label(a.to)}];
  }
  ArrowComparison cmp;
  for (const auto& [edge, c] : count) {
    for (int k = 0; k < c; ++k) cmp.missing.push_back(edge);
    for (int k = 0; k < -c; ++k) cmp.unexpected.push_back(edge);
  }
  return cmp;
}

PerfectnessReport checkPerfect(const PerfectCrystal& b) {
  PerfectnessReport r;
  std::ostringstream detail;
  const CartanDatum& cd = b.cartan();
  const int n = b.size();

  // Connectivity of B (x) B under the tensor operators.
  {
    ClassicalView view{&b};
    std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
    auto id = [n](VertexId x, VertexId y) {
      return static_cast<std::size_t>(x) * n + y;
    };
    std::deque<std::pair<VertexId, VertexId>> queue{{b.empty(), b.empty()}};
    seen[id(b.empty(), b.empty())] = true;
    std::size_t visited = 1;
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      std::vector<VertexId> word{x, y};
      for (int i = 0; i < kRank; ++i) {
        for (auto next : {wordFtilde(view, word, i), wordEtilde(view, word, i)}) {
          if (!next) continue;
          auto [nx, ny] = std::pair{(*next)[0], (*next)[1]};
          if (!seen[id(nx, ny)]) {
            seen[id(nx, ny)] = true;
            ++visited;
            queue.push_back({nx, ny});
          }
        }
      }
    }
    r.squareConnected = visited == static_cast<std::size_t>(n) * n;
    if (!r.squareConnected) {
      detail << "B(x)B: reached " << visited << " of " << n * n << " pairs. ";
    }
  }

  // A unique vertex whose weight dominates every other weight through the
  // finite simple roots.
  {
    std::vector<VertexId> maximal;
    for (VertexId v = 0; v < n; ++v) {
      ClassicalWeight lam = b.weight(v);
      bool dominates = true;
      for (VertexId u = 0; u < n && dominates; ++u) {
        auto x = cd.decomposeOverFiniteRoots(lam - b.weight(u));
        dominates = x.has_value() &&
                    std::ranges::all_of(*x, [](int c) { return c >= 0; });
      }
      if (dominates) maximal.push_back(v);
    }
    r.uniqueMaximalWeight = maximal.size() == 1;
    if (maximal.size() == 1) {
      VertexId top = maximal.front();
      int atTop = 0;
      for (VertexId v = 0; v < n; ++v) {
        if (b.weight(v) == b.weight(top)) ++atTop;
      }
      r.uniqueMaximalWeight = atTop == 1;
      detail << "lambda0 = wt(" << b.label(top) << ") = "
             << b.weight(top).toString() << ". ";
    } else {
      detail << maximal.size() << " maximal-weight candidates. ";
    }
  }

  // <c, eps(b)> >= 1 everywhere (level-1 bound).
  r.epsilonLevelAtLeastOne = true;
  for (VertexId v = 0; v < n; ++v) {
    if (cd.level(b.epsWeight(v)) < 1) {
      r.epsilonLevelAtLeastOne = false;
      detail << "level(eps(" << b.label(v) << ")) < 1. ";
    }
  }

  // Minimal vectors for Lambda_0: the vacuum, uniquely, on both sides.
  {
    ClassicalWeight lambda0 = cd.fundamentalWeight(0);
    std::vector<VertexId> epsMin, phiMin;
    for (VertexId v = 0; v < n; ++v) {
      if (b.epsWeight(v) == lambda0) epsMin.push_back(v);
      if (b.phiWeight(v) == lambda0) phiMin.push_back(v);
    }
    r.vacuumMinimal = epsMin == std::vector<VertexId>{b.empty()} &&
                      phiMin == std::vector<VertexId>{b.empty()};
  }

  // F4(1) also has <c, Lambda_4> = 1, with r4 as the corresponding minimal
  // vector; the construction here only ever anchors at Lambda_0, so this is
  // reported for information and not scored.
  if (cd.centralCoeff(4) == 1) {
    ClassicalWeight lambda4 = cd.fundamentalWeight(4);
    for (VertexId v = 0; v < n; ++v) {
      if (b.epsWeight(v) == lambda4 && b.phiWeight(v) == lambda4) {
        detail << "level-1 side weight Lambda4 has minimal vector "
               << b.label(v) << ". ";
      }
    }
  }

  r.detail = detail.str();
  return r;
}

}  // namespace yw
