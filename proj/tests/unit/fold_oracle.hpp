#pragma once

// Independent reimplementation of tensor words by iterated two-factor
// products. The library computes everything with one signature scan; these
// folds bracket the word either to the right or to the left and apply the
// two-factor rule at every step. All three must agree on every word, which
// is exactly associativity of the product rule.

#include <span>
#include <vector>

#include "yw/tensor.hpp"

namespace ywtest {

struct OracleSig {
  int eps = 0;
  int phi = 0;
  int etildeAt = -1;  // factor index, -1 when the operator is undefined
  int ftildeAt = -1;
};

// <h_i, wt b> for a seminormal element.
template <typename V>
int pairing(const V& view, const typename V::Elem& b, int i) {
  return view.phi(b, i) - view.epsilon(b, i);
}

// b_0 (x) (b_1 (x) (... (x) b_{L-1})).
template <typename V>
OracleSig foldRight(const V& view, std::span<const typename V::Elem> word,
                    int i) {
  const int n = static_cast<int>(word.size());

  // epsSuffix[k] = eps of the bracketed suffix starting at k.
  std::vector<int> epsSuffix(n + 1, 0);
  OracleSig sig;
  {
    int eps = 0, phi = 0;
    for (int k = n - 1; k >= 0; --k) {
      int be = view.epsilon(word[k], i), bp = view.phi(word[k], i);
      phi = std::max(phi, bp + (phi - eps));
      eps = std::max(be, eps - (bp - be));
      epsSuffix[k] = eps;
    }
    sig.eps = eps;
    sig.phi = phi;
  }

  for (int k = 0; k < n; ++k) {
    if (view.phi(word[k], i) > epsSuffix[k + 1]) {
      if (view.phi(word[k], i) > 0) sig.ftildeAt = k;
      break;
    }
  }
  for (int k = 0; k < n; ++k) {
    if (view.phi(word[k], i) >= epsSuffix[k + 1]) {
      if (view.epsilon(word[k], i) > 0) sig.etildeAt = k;
      break;
    }
  }
  return sig;
}

// ((b_0 (x) b_1) (x) ...) (x) b_{L-1}.
template <typename V>
OracleSig foldLeft(const V& view, std::span<const typename V::Elem> word,
                   int i) {
  const int n = static_cast<int>(word.size());

  // phiPrefix[k] = phi of the bracketed prefix ending at k.
  std::vector<int> phiPrefix(n, 0);
  OracleSig sig;
  {
    int eps = 0, phi = 0;
    for (int k = 0; k < n; ++k) {
      int be = view.epsilon(word[k], i), bp = view.phi(word[k], i);
      eps = std::max(eps, be - (phi - eps));
      phi = std::max(bp, phi + (bp - be));
      phiPrefix[k] = phi;
    }
    sig.eps = eps;
    sig.phi = phi;
  }

  if (n > 0) {
    int k = n - 1;
    while (k > 0 && phiPrefix[k - 1] > view.epsilon(word[k], i)) --k;
    if (view.phi(word[k], i) > 0) sig.ftildeAt = k;

    k = n - 1;
    while (k > 0 && phiPrefix[k - 1] >= view.epsilon(word[k], i)) --k;
    if (view.epsilon(word[k], i) > 0) sig.etildeAt = k;
  }
  return sig;
}

}  // namespace ywtest
