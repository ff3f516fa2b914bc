#include "yw/energy.hpp"

#include "yw/errors.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <deque>
#include <map>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

namespace yw {

namespace {

// Shared propagation core. `pick` selects the next frontier index, which
// lets the shuffled variant reorder expansion without duplicating logic.
template <typename Pick>
EnergyTable propagateEnergy(const PerfectCrystal& b, Pick pick) {
  const int n = b.size();
  ClassicalView view{&b};
  constexpr int kUnset = INT_MIN;
  std::vector<int> h(static_cast<std::size_t>(n) * n, kUnset);
  auto id = [n](VertexId x, VertexId y) {
    return static_cast<std::size_t>(x) * n + y;
  };

  h[id(b.empty(), b.empty())] = 0;
  std::vector<std::pair<VertexId, VertexId>> frontier{{b.empty(), b.empty()}};
  std::size_t assigned = 1;

  while (!frontier.empty()) {
    std::size_t at = pick(frontier.size());
    auto [x, y] = frontier[at];
    frontier[at] = frontier.back();
    frontier.pop_back();
    int value = h[id(x, y)];
    std::vector<VertexId> word{x, y};

    for (int i = 0; i < kRank; ++i) {
      Signature sig = wordSignature(view, word, i);
      // Deltas along a 0-arrow depend only on which factor moves; raising
      // and lowering traverse the same edge in opposite directions.
      if (sig.actingFtilde >= 0) {
        auto next = wordFtilde(view, word, i);
        int nv = value;
        if (i == 0) nv += sig.actingFtilde == 0 ? -1 : 1;
        std::size_t key = id((*next)[0], (*next)[1]);
        if (h[key] == kUnset) {
          h[key] = nv;
          ++assigned;
          frontier.push_back({(*next)[0], (*next)[1]});
        } else if (h[key] != nv) {
          throw std::logic_error("energy recursion is inconsistent");
        }
      }
      if (sig.actingEtilde >= 0) {
        auto next = wordEtilde(view, word, i);
        int nv = value;
        if (i == 0) nv += sig.actingEtilde == 0 ? 1 : -1;
        std::size_t key = id((*next)[0], (*next)[1]);
        if (h[key] == kUnset) {
          h[key] = nv;
          ++assigned;
          frontier.push_back({(*next)[0], (*next)[1]});
        } else if (h[key] != nv) {
          throw std::logic_error("energy recursion is inconsistent");
        }
      }
    }
  }

  if (assigned != static_cast<std::size_t>(n) * n) {
    throw std::logic_error("energy propagation did not reach every pair");
  }
  return EnergyTable(n, std::move(h));
}

}  // namespace

EnergyTable computeEnergy(const PerfectCrystal& b) {
  return propagateEnergy(b, [](std::size_t) { return std::size_t{0}; });
}

EnergyTable computeEnergyShuffled(const PerfectCrystal& b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return propagateEnergy(b, [&rng](std::size_t size) {
    return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
  });
}

GoldenEnergyComparison compareWithGolden(const PerfectCrystal& b,
                                         const EnergyTable& table,
                                         const GoldenEnergyTable& golden) {
  GoldenEnergyComparison cmp;
  auto vertex = [&b](const std::string& label) {
    auto v = b.vertexByLabel(label);
    if (!v) throw DataError("unknown vertex label: " + label);
    return *v;
  };
  for (std::size_t r = 0; r < golden.rowLabels.size(); ++r) {
    for (std::size_t c = 0; c < golden.columnLabels.size(); ++c) {
      int expected = golden.cells[r][c];
      int actual = table.at(vertex(golden.columnLabels[c]),
                            vertex(golden.rowLabels[r]));
      if (expected != actual) {
        cmp.mismatches.push_back({golden.rowLabels[r], golden.columnLabels[c],
                                  expected, actual});
      }
    }
  }
  return cmp;
}

std::string energyTableToCsv(const PerfectCrystal& b, const EnergyTable& table,
                             std::span<const std::string> rowLabels,
                             std::span<const std::string> colLabels) {
  auto vertex = [&b](const std::string& label) {
    auto v = b.vertexByLabel(label);
    if (!v) throw DataError("unknown vertex label: " + label);
    return *v;
  };
  std::ostringstream out;
  out << "a\\b";
  for (const auto& c : colLabels) out << ',' << c;
  out << '\n';
  for (const auto& r : rowLabels) {
    out << r;
    VertexId right = vertex(r);
    for (const auto& c : colLabels) out << ',' << table.at(vertex(c), right);
    out << '\n';
  }
  return out.str();
}

std::string energyTableToCsv(const PerfectCrystal& b, const EnergyTable& table) {
  std::vector<std::string> labels;
  labels.reserve(b.size());
  for (VertexId v = 0; v < b.size(); ++v) labels.emplace_back(b.label(v));
  return energyTableToCsv(b, table, labels, labels);
}

ConstancyReport checkAffineConstancy(const PerfectCrystal& b,
                                     const EnergyTable& table, int window) {
  return checkAffineConstancy(b, table, window, 0, b.size());
}

ConstancyReport checkAffineConstancy(const PerfectCrystal& b,
                                     const EnergyTable& table, int window,
                                     VertexId xBegin, VertexId xEnd) {
  ConstancyReport report;
  AffineView view{&b};
  std::ostringstream detail;
  for (VertexId x = xBegin; x < xEnd; ++x) {
    for (VertexId y = 0; y < b.size(); ++y) {
      for (int m = -window; m <= window; ++m) {
        for (int n = -window; n <= window; ++n) {
          std::vector<AffineVertex> word{{x, m}, {y, n}};
          int before = affineEnergy(table, word[0], word[1]);
          for (int i = 0; i < kRank; ++i) {
            for (auto next :
                 {wordFtilde(view, word, i), wordEtilde(view, word, i)}) {
              if (!next) continue;
              ++report.checkedMoves;
              int after = affineEnergy(table, (*next)[0], (*next)[1]);
              if (after != before && report.ok) {
                report.ok = false;
                detail << "colour " << i << " changes H at "
                       << view.key(word[0]) << " (x) " << view.key(word[1]);
              }
            }
          }
        }
      }
    }
  }
  report.detail = detail.str();
  return report;
}

ZeroDistance minZeroArrows(const PerfectCrystal& b, VertexId from,
                           VertexId to) {
  // Dijkstra over (zero-arrow count, step count) in lexicographic order.
  using Cost = std::pair<int, int>;
  const Cost kInf{INT_MAX, INT_MAX};
  std::vector<Cost> best(b.size(), kInf);
  std::priority_queue<std::pair<Cost, VertexId>,
                      std::vector<std::pair<Cost, VertexId>>, std::greater<>>
      heap;
  best[from] = {0, 0};
  heap.push({{0, 0}, from});
  while (!heap.empty()) {
    auto [cost, v] = heap.top();
    heap.pop();
    if (cost != best[v]) continue;
    if (v == to) return {cost.first, cost.second};
    for (int i = 0; i < kRank; ++i) {
      if (auto t = b.ftilde(v, i)) {
        Cost nc{cost.first + (i == 0 ? 1 : 0), cost.second + 1};
        if (nc < best[*t]) {
          best[*t] = nc;
          heap.push({nc, *t});
        }
      }
    }
  }
  throw std::logic_error("no lowering path between vertices");
}

bool pathExists(const PerfectCrystal& b, const AffineVertex& from,
                const AffineVertex& to) {
  AffineView view{&b};
  auto bound = view.content(to);
  auto fits = [&bound](const std::array<int, kRank>& c) {
    for (int i = 0; i < kRank; ++i) {
      if (c[i] > bound[i]) return false;
    }
    return true;
  };
  if (!fits(view.content(from))) return false;

  std::deque<AffineVertex> queue{from};
  std::map<AffineVertex, bool> seen{{from, true}};
  while (!queue.empty()) {
    AffineVertex x = queue.front();
    queue.pop_front();
    if (x == to) return true;
    for (int i = 0; i < kRank; ++i) {
      auto t = view.ftilde(x, i);
      if (!t || !fits(view.content(*t)) || seen.contains(*t)) continue;
      seen[*t] = true;
      queue.push_back(*t);
    }
  }
  return false;
}

}  // namespace yw
