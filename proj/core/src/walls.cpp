#include "yw/walls.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace yw {

void WallModelContext::canonicalize(YoungWall& w, VertexId emptyVertex) {
  while (!w.cols.empty() && w.cols.back() == YoungColumn{emptyVertex, 0}) {
    w.cols.pop_back();
  }
}

YoungWall WallModelContext::canonical(YoungWall w) const {
  canonicalize(w, b_->empty());
  return w;
}

int WallModelContext::pairExcess(const YoungColumn& upper,
                                 const YoungColumn& lower) const {
  return h_->at(upper.cls, lower.cls) + upper.shift - lower.shift;
}

bool WallModelContext::isReduced(const YoungWall& w) const {
  const YoungColumn ground{b_->empty(), 0};
  for (std::size_t k = 0; k < w.cols.size(); ++k) {
    const YoungColumn& upper = k + 1 < w.cols.size() ? w.cols[k + 1] : ground;
    if (pairExcess(upper, w.cols[k]) != 0) return false;
  }
  return true;
}

bool WallModelContext::isProper(const YoungWall& w) const {
  const YoungColumn ground{b_->empty(), 0};
  for (std::size_t k = 0; k < w.cols.size(); ++k) {
    const YoungColumn& upper = k + 1 < w.cols.size() ? w.cols[k + 1] : ground;
    if (pairExcess(upper, w.cols[k]) > 0) return false;
  }
  return true;
}

bool WallModelContext::contains(const YoungWall& w) const {
  if (!w.cols.empty() && w.cols.back() == YoungColumn{b_->empty(), 0}) {
    return false;  // not canonical
  }
  for (const YoungColumn& c : w.cols) {
    if (c.cls < 0 || c.cls >= b_->size() || c.shift < 0) return false;
  }
  return model_ == WallModel::Reduced ? isReduced(w) : isProper(w);
}

std::array<int, kRank> WallModelContext::columnContent(
    const YoungColumn& c) const {
  std::array<int, kRank> out = b_->baseContent(c.cls);
  const auto& d = CartanDatum::get(b_->algebra()).deltaCoeffs();
  for (int i = 0; i < kRank; ++i) out[i] += c.shift * d[i];
  return out;
}

std::array<int, kRank> WallModelContext::blockCounts(const YoungWall& w) const {
  std::array<int, kRank> total{};
  for (const YoungColumn& c : w.cols) {
    auto cc = columnContent(c);
    for (int i = 0; i < kRank; ++i) total[i] += cc[i];
  }
  return total;
}

WallSignature WallModelContext::wallSignature(const YoungWall& w, int i) const {
  std::vector<std::pair<int, int>> byPos;
  byPos.reserve(w.cols.size());
  for (const YoungColumn& c : w.cols) {
    byPos.emplace_back(b_->epsilon(c.cls, i), b_->phi(c.cls, i));
  }
  TailSignature t = tailSignature(
      byPos, {b_->epsilon(b_->empty(), i), b_->phi(b_->empty(), i)});
  return {t.eps, t.phi, t.etildeIndex, t.ftildeIndex};
}

int WallModelContext::epsilon(const YoungWall& w, int i) const {
  return wallSignature(w, i).eps;
}

int WallModelContext::phi(const YoungWall& w, int i) const {
  return wallSignature(w, i).phi;
}

std::optional<YoungWall> WallModelContext::ftilde(const YoungWall& w,
                                                 int i) const {
  WallSignature sig = wallSignature(w, i);
  if (sig.ftildeColumn < 0) return std::nullopt;
  YoungWall out = w;
  if (sig.ftildeColumn == static_cast<int>(out.cols.size())) {
    out.cols.push_back({b_->empty(), 0});
  }
  YoungColumn& col = out.cols[sig.ftildeColumn];
  auto moved = b_->ftilde(col.cls, i);
  assert(moved);  // the column carried the surviving plus
  col.cls = *moved;
  if (i == 0) col.shift += 1;
  canonicalize(out, b_->empty());
  if (!contains(out)) {
    throw ModelViolationError("lowering left the wall model at " + key(w) +
                              ", colour " + std::to_string(i));
  }
  return out;
}

std::optional<YoungWall> WallModelContext::etilde(const YoungWall& w,
                                                 int i) const {
  WallSignature sig = wallSignature(w, i);
  if (sig.etildeColumn < 0) return std::nullopt;
  YoungWall out = w;
  YoungColumn& col = out.cols[sig.etildeColumn];
  auto moved = b_->etilde(col.cls, i);
  assert(moved);  // the column carried the surviving minus
  col.cls = *moved;
  if (i == 0) col.shift -= 1;
  canonicalize(out, b_->empty());
  if (!contains(out)) {
    throw ModelViolationError("raising left the wall model at " + key(w) +
                              ", colour " + std::to_string(i));
  }
  return out;
}

AffineWeight WallModelContext::weight(const YoungWall& w) const {
  const CartanDatum& cd = CartanDatum::get(b_->algebra());
  std::array<int, kRank> k = blockCounts(w);
  AffineWeight wt{cd.fundamentalWeight(0), 0};
  for (int i = 0; i < kRank; ++i) {
    wt.classical = wt.classical - k[i] * cd.simpleRootClassical(i);
  }
  wt.delta = -k[0];
  return wt;
}

std::string WallModelContext::key(const YoungWall& w) const {
  if (w.cols.empty()) return "ground";
  std::ostringstream out;
  for (std::size_t k = 0; k < w.cols.size(); ++k) {
    if (k) out << '|';
    out << b_->label(w.cols[k].cls) << '(' << w.cols[k].shift << ')';
  }
  return out.str();
}

std::vector<int> WallModelContext::fockAdjacentEnergies(
    const YoungWall& w) const {
  const YoungColumn ground{b_->empty(), 0};
  std::vector<int> out;
  out.reserve(w.cols.size());
  for (std::size_t k = 0; k < w.cols.size(); ++k) {
    const YoungColumn& upper = k + 1 < w.cols.size() ? w.cols[k + 1] : ground;
    out.push_back(pairExcess(upper, w.cols[k]) + 1);
  }
  return out;
}

YoungWall WallModelContext::wallFromClasses(
    std::span<const VertexId> classes) const {
  YoungWall w;
  w.cols.resize(classes.size());
  int zAbove = 0;
  for (int k = static_cast<int>(classes.size()) - 1; k >= 0; --k) {
    VertexId above = k + 1 < static_cast<int>(classes.size()) ? classes[k + 1]
                                                              : b_->empty();
    int z = zAbove + h_->at(above, classes[k]);
    w.cols[k] = {classes[k], z};
    zAbove = z;
  }
  canonicalize(w, b_->empty());
  return w;
}

std::vector<YoungWall> WallModelContext::properSeeds(int maxColumns,
                                                     int maxShift) const {
  std::vector<YoungWall> out;
  std::vector<YoungColumn> topDown;  // topDown[0] is the highest stored column

  auto emit = [&] {
    YoungWall w;
    w.cols.assign(topDown.rbegin(), topDown.rend());
    out.push_back(std::move(w));
  };

  auto rec = [&](auto&& self, const YoungColumn& upper, int depth) -> void {
    emit();
    if (depth == maxColumns) return;
    for (VertexId cls = 0; cls < b_->size(); ++cls) {
      for (int z = 0; z <= maxShift; ++z) {
        YoungColumn c{cls, z};
        if (depth == 0 && c == YoungColumn{b_->empty(), 0}) continue;
        if (pairExcess(upper, c) > 0) continue;
        topDown.push_back(c);
        self(self, c, depth + 1);
        topDown.pop_back();
      }
    }
  };
  rec(rec, YoungColumn{b_->empty(), 0}, 0);
  return out;
}

bool rightBlockPairHolds(const PerfectCrystal& b, const AffineVertex& left,
                         const AffineVertex& right) {
  return pathExists(b, {left.v, left.shift - 1}, right);
}

}  // namespace yw
