#include "yw/tensor.hpp"

#include <cassert>
#include <stdexcept>

namespace yw {

SignatureWord reduceSignatureWord(std::span<const std::pair<int, int>> epsPhi) {
  // Each factor contributes eps minuses then phi pluses. Scanning left to
  // right, a minus cancels the nearest surviving plus to its left.
  SignatureWord sw;
  for (std::size_t k = 0; k < epsPhi.size(); ++k) {
    auto [eps, phi] = epsPhi[k];
    for (int t = 0; t < eps; ++t) {
      if (!sw.plusAt.empty())
        sw.plusAt.pop_back();
      else
        sw.minusAt.push_back(static_cast<int>(k));
    }
    for (int t = 0; t < phi; ++t) sw.plusAt.push_back(static_cast<int>(k));
  }
  return sw;
}

Signature reduceSignature(std::span<const std::pair<int, int>> epsPhi) {
  SignatureWord sw = reduceSignatureWord(epsPhi);
  Signature sig;
  sig.minusCount = static_cast<int>(sw.minusAt.size());
  sig.plusCount = static_cast<int>(sw.plusAt.size());
  if (!sw.minusAt.empty()) sig.actingEtilde = sw.minusAt.back();
  if (!sw.plusAt.empty()) sig.actingFtilde = sw.plusAt.front();
  return sig;
}

TailSignature tailSignature(std::span<const std::pair<int, int>> epsPhiByPos,
                            std::pair<int, int> groundEpsPhi) {
  const int r = static_cast<int>(epsPhiByPos.size());

  auto compute = [&](int pads) {
    std::vector<std::pair<int, int>> word;
    word.reserve(pads + r);
    for (int p = 0; p < pads; ++p) word.push_back(groundEpsPhi);
    for (int k = r - 1; k >= 0; --k) word.push_back(epsPhiByPos[k]);
    SignatureWord sw = reduceSignatureWord(word);

    TailSignature sig;
    for (int p : sw.minusAt) {
      if (p >= pads) ++sig.eps;
    }
    sig.phi = static_cast<int>(sw.plusAt.size());
    for (auto it = sw.minusAt.rbegin(); it != sw.minusAt.rend(); ++it) {
      if (*it >= pads) {
        sig.etildeIndex = r - 1 - (*it - pads);
        break;
      }
    }
    if (!sw.plusAt.empty()) {
      int p = sw.plusAt.front();
      if (p < pads) {
        assert(p == pads - 1);  // only the pad next to the word can survive
        sig.ftildeIndex = r;
      } else {
        sig.ftildeIndex = r - 1 - (p - pads);
      }
    }
    return sig;
  };

  TailSignature one = compute(1);
  TailSignature two = compute(2);
  if (one.eps != two.eps || one.phi != two.phi ||
      one.etildeIndex != two.etildeIndex ||
      one.ftildeIndex != two.ftildeIndex) {
    throw std::logic_error("tail signature depends on padding length");
  }
  return one;
}

}  // namespace yw
