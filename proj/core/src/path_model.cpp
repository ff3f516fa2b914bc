#include "yw/path_model.hpp"

#include <cassert>
#include <sstream>

#include "yw/tensor.hpp"

namespace yw {

LambdaPath PathModelContext::canonical(LambdaPath p) const {
  while (!p.dev.empty() && p.dev.back() == b_->empty()) p.dev.pop_back();
  return p;
}

bool PathModelContext::contains(const LambdaPath& p) const {
  if (!p.dev.empty() && p.dev.back() == b_->empty()) return false;
  for (VertexId v : p.dev) {
    if (v < 0 || v >= b_->size()) return false;
  }
  return true;
}

namespace {

TailSignature pathSignature(const PerfectCrystal& b, const LambdaPath& p,
                            int i) {
  std::vector<std::pair<int, int>> byPos;
  byPos.reserve(p.dev.size());
  for (VertexId v : p.dev) byPos.emplace_back(b.epsilon(v, i), b.phi(v, i));
  return tailSignature(byPos,
                       {b.epsilon(b.empty(), i), b.phi(b.empty(), i)});
}

}  // namespace

int PathModelContext::epsilon(const LambdaPath& p, int i) const {
  return pathSignature(*b_, p, i).eps;
}

int PathModelContext::phi(const LambdaPath& p, int i) const {
  return pathSignature(*b_, p, i).phi;
}

std::optional<LambdaPath> PathModelContext::ftilde(const LambdaPath& p,
                                                  int i) const {
  TailSignature sig = pathSignature(*b_, p, i);
  if (sig.ftildeIndex < 0) return std::nullopt;
  LambdaPath out = p;
  if (sig.ftildeIndex == static_cast<int>(out.dev.size())) {
    out.dev.push_back(b_->empty());
  }
  auto moved = b_->ftilde(out.dev[sig.ftildeIndex], i);
  assert(moved);
  out.dev[sig.ftildeIndex] = *moved;
  return canonical(std::move(out));
}

std::optional<LambdaPath> PathModelContext::etilde(const LambdaPath& p,
                                                  int i) const {
  TailSignature sig = pathSignature(*b_, p, i);
  if (sig.etildeIndex < 0) return std::nullopt;
  LambdaPath out = p;
  auto moved = b_->etilde(out.dev[sig.etildeIndex], i);
  assert(moved);
  out.dev[sig.etildeIndex] = *moved;
  return canonical(std::move(out));
}

AffineWeight PathModelContext::weight(const LambdaPath& p) const {
  const CartanDatum& cd = CartanDatum::get(b_->algebra());
  AffineWeight wt{cd.fundamentalWeight(0), 0};
  for (VertexId v : p.dev) wt.classical = wt.classical + b_->weight(v);
  const int r = static_cast<int>(p.dev.size());
  for (int k = 0; k < r; ++k) {
    VertexId upper = k + 1 < r ? p.dev[k + 1] : b_->empty();
    wt.delta -= (k + 1) * h_->at(upper, p.dev[k]);
  }
  return wt;
}

std::string PathModelContext::key(const LambdaPath& p) const {
  if (p.dev.empty()) return "ground";
  std::ostringstream out;
  for (std::size_t k = 0; k < p.dev.size(); ++k) {
    if (k) out << '|';
    out << b_->label(p.dev[k]);
  }
  return out.str();
}

YoungWall PathModelContext::toWall(const WallModelContext& walls,
                                   const LambdaPath& p) const {
  return walls.wallFromClasses(p.dev);
}

LambdaPath PathModelContext::fromWall(const YoungWall& w) const {
  LambdaPath p;
  p.dev.reserve(w.cols.size());
  for (const YoungColumn& c : w.cols) p.dev.push_back(c.cls);
  return canonical(std::move(p));
}

}  // namespace yw
