#pragma once

#include <cstddef>
#include <deque>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "yw/cartan.hpp"
#include "yw/errors.hpp"
#include "yw/tensor.hpp"

namespace yw {

// A view the enumerator can serialise: elements have a stable printable key
// and an affine weight.
template <typename V>
concept KeyedCrystalView = CrystalView<V> && requires(const V& v, const typename V::Elem& b) {
  { v.key(b) } -> std::convertible_to<std::string>;
  { v.weight(b) } -> std::same_as<AffineWeight>;
};

struct GraphNode {
  std::string key;
  AffineWeight wt;
  bool operator==(const GraphNode&) const = default;
};

struct GraphArrow {
  int from = 0;  // node index
  int i = 0;
  int to = 0;
  auto operator<=>(const GraphArrow&) const = default;
};

// A finite coloured digraph cut out of some crystal model, anchored at a
// distinguished node so two cuts can be compared rigidly.
struct CrystalGraph {
  std::string type;
  std::string anchor;
  std::vector<GraphNode> nodes;
  std::vector<GraphArrow> arrows;

  int indexOf(std::string_view key) const {
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (nodes[k].key == key) return static_cast<int>(k);
    }
    return -1;
  }
};

enum class Direction { FOnly, EOnly, Both };

struct EnumLimits {
  std::size_t maxNodes = 1'000'000;
  int maxDepth = std::numeric_limits<int>::max();
};

// Breadth-first ball around the seeds, then every lowering arrow between
// ball members. Arrows are recorded f-oriented regardless of direction.
template <KeyedCrystalView V>
CrystalGraph enumerate(const V& view, std::string type,
                       const typename V::Elem& anchor, Direction dir,
                       EnumLimits limits = {},
                       std::span<const typename V::Elem> extraSeeds = {}) {
  CrystalGraph g;
  g.type = std::move(type);
  g.anchor = view.key(anchor);

  std::vector<typename V::Elem> elems;
  std::map<std::string, int> index;
  std::deque<std::pair<int, int>> queue;  // node index, depth

  auto admit = [&](const typename V::Elem& e, int depth) {
    std::string key = view.key(e);
    if (auto it = index.find(key); it != index.end()) return it->second;
    if (elems.size() >= limits.maxNodes) {
      throw ResourceLimitError("enumeration exceeded " +
                               std::to_string(limits.maxNodes) + " nodes");
    }
    int id = static_cast<int>(elems.size());
    index.emplace(std::move(key), id);
    elems.push_back(e);
    g.nodes.push_back({view.key(e), view.weight(e)});
    queue.push_back({id, depth});
    return id;
  };

  admit(anchor, 0);
  for (const auto& seed : extraSeeds) admit(seed, 0);

  while (!queue.empty()) {
    auto [id, depth] = queue.front();
    queue.pop_front();
    if (depth >= limits.maxDepth) continue;
    // elems may reallocate inside admit, so copy the element out first
    typename V::Elem e = elems[id];
    for (int i = 0; i < kRank; ++i) {
      if (dir != Direction::EOnly) {
        if (auto t = view.ftilde(e, i)) admit(*t, depth + 1);
      }
      if (dir != Direction::FOnly) {
        if (auto t = view.etilde(e, i)) admit(*t, depth + 1);
      }
    }
  }

  for (std::size_t from = 0; from < elems.size(); ++from) {
    for (int i = 0; i < kRank; ++i) {
      auto t = view.ftilde(elems[from], i);
      if (!t) continue;
      auto it = index.find(view.key(*t));
      if (it != index.end()) {
        g.arrows.push_back({static_cast<int>(from), i, it->second});
      }
    }
  }
  return g;
}

struct IsoResult {
  bool ok = true;
  std::string detail;
};

// Rigid colour-preserving isomorphism test. The anchors must correspond;
// from there the matching is forced arrow by arrow, and weights must agree
// node by node. On failure `detail` names the first obstruction.
IsoResult anchoredIsomorphic(const CrystalGraph& a, const CrystalGraph& b);

std::string toDot(const CrystalGraph& g);
std::string toJson(const CrystalGraph& g);
CrystalGraph graphFromJson(std::string_view text);

}  // namespace yw
