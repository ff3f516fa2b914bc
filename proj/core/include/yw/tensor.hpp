#pragma once

#include <array>
#include <cassert>
#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "yw/cartan.hpp"
#include "yw/perfect_crystal.hpp"

namespace yw {

// Anything the word operators can act on: a crystal presented through a
// view object. Views are cheap handles; elements are values.
template <typename V>
concept CrystalView =
    requires(const V& v, const typename V::Elem& b, int i) {
      { v.epsilon(b, i) } -> std::convertible_to<int>;
      { v.phi(b, i) } -> std::convertible_to<int>;
      { v.ftilde(b, i) } -> std::same_as<std::optional<typename V::Elem>>;
      { v.etilde(b, i) } -> std::same_as<std::optional<typename V::Elem>>;
    };

// Reduced i-signature of a tensor word. After cancelling every "+ then -"
// pair the word reads -^minusCount +^plusCount; the surviving extremes give
// both string lengths and the factor each operator acts on.
struct Signature {
  int minusCount = 0;
  int plusCount = 0;
  int actingEtilde = -1;  // factor index the raising operator hits, -1 if none
  int actingFtilde = -1;  // factor index the lowering operator hits, -1 if none
};

// Input: one (epsilon, phi) pair per factor, leftmost factor first.
Signature reduceSignature(std::span<const std::pair<int, int>> epsPhi);

// Same reduction, but exposing the factor index of every surviving sign in
// word order. Wall signatures need these to tell tail letters apart.
struct SignatureWord {
  std::vector<int> minusAt;
  std::vector<int> plusAt;
};

SignatureWord reduceSignatureWord(std::span<const std::pair<int, int>> epsPhi);

// Signature of a sequence (b_k) that continues with ground entries for all
// k >= size. Input is indexed by position k ascending, k = 0 the rightmost
// tensor factor. A surviving minus on the tail lies infinitely deep and is
// dropped; a surviving tail plus is a real target on the first tail
// position, so ftildeIndex may equal size. Computed twice with one and two
// explicit tail entries, which must agree.
struct TailSignature {
  int eps = 0;
  int phi = 0;
  int etildeIndex = -1;
  int ftildeIndex = -1;
};

TailSignature tailSignature(std::span<const std::pair<int, int>> epsPhiByPos,
                            std::pair<int, int> groundEpsPhi);

template <CrystalView V>
Signature wordSignature(const V& view, std::span<const typename V::Elem> word,
                        int i) {
  std::vector<std::pair<int, int>> epsPhi;
  epsPhi.reserve(word.size());
  for (const auto& b : word) epsPhi.emplace_back(view.epsilon(b, i), view.phi(b, i));
  return reduceSignature(epsPhi);
}

template <CrystalView V>
int wordEpsilon(const V& view, std::span<const typename V::Elem> word, int i) {
  return wordSignature(view, word, i).minusCount;
}

template <CrystalView V>
int wordPhi(const V& view, std::span<const typename V::Elem> word, int i) {
  return wordSignature(view, word, i).plusCount;
}

template <CrystalView V>
std::optional<std::vector<typename V::Elem>> wordFtilde(
    const V& view, std::span<const typename V::Elem> word, int i) {
  Signature sig = wordSignature(view, word, i);
  if (sig.actingFtilde < 0) return std::nullopt;
  std::vector<typename V::Elem> out(word.begin(), word.end());
  auto moved = view.ftilde(out[sig.actingFtilde], i);
  assert(moved);  // the factor carried a surviving plus
  out[sig.actingFtilde] = *moved;
  return out;
}

template <CrystalView V>
std::optional<std::vector<typename V::Elem>> wordEtilde(
    const V& view, std::span<const typename V::Elem> word, int i) {
  Signature sig = wordSignature(view, word, i);
  if (sig.actingEtilde < 0) return std::nullopt;
  std::vector<typename V::Elem> out(word.begin(), word.end());
  auto moved = view.etilde(out[sig.actingEtilde], i);
  assert(moved);
  out[sig.actingEtilde] = *moved;
  return out;
}

// The crystal itself, elements by id, weights with zero delta part.
struct ClassicalView {
  const PerfectCrystal* b;
  using Elem = VertexId;

  int epsilon(Elem v, int i) const { return b->epsilon(v, i); }
  int phi(Elem v, int i) const { return b->phi(v, i); }
  std::optional<Elem> ftilde(Elem v, int i) const { return b->ftilde(v, i); }
  std::optional<Elem> etilde(Elem v, int i) const { return b->etilde(v, i); }
  AffineWeight weight(Elem v) const { return {b->weight(v), 0}; }
  std::string key(Elem v) const { return std::string(b->label(v)); }
};

// Element b(n) of the affinization: n counts applied 0-arrows.
struct AffineVertex {
  VertexId v = -1;
  int shift = 0;
  auto operator<=>(const AffineVertex&) const = default;
};

struct AffineView {
  const PerfectCrystal* b;
  using Elem = AffineVertex;

  int epsilon(const Elem& x, int i) const { return b->epsilon(x.v, i); }
  int phi(const Elem& x, int i) const { return b->phi(x.v, i); }

  std::optional<Elem> ftilde(const Elem& x, int i) const {
    auto t = b->ftilde(x.v, i);
    if (!t) return std::nullopt;
    return Elem{*t, x.shift + (i == 0 ? 1 : 0)};
  }

  std::optional<Elem> etilde(const Elem& x, int i) const {
    auto t = b->etilde(x.v, i);
    if (!t) return std::nullopt;
    return Elem{*t, x.shift - (i == 0 ? 1 : 0)};
  }

  AffineWeight weight(const Elem& x) const {
    return {b->weight(x.v), -x.shift};
  }

  // Block counts of the column b(n): the base content plus n full periods.
  std::array<int, kRank> content(const Elem& x) const {
    std::array<int, kRank> c = b->baseContent(x.v);
    const auto& d = CartanDatum::get(b->algebra()).deltaCoeffs();
    for (int k = 0; k < kRank; ++k) c[k] += x.shift * d[k];
    return c;
  }

  std::string key(const Elem& x) const {
    return std::string(b->label(x.v)) + "(" + std::to_string(x.shift) + ")";
  }
};

}  // namespace yw
