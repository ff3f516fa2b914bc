#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace yw {

// Affine index set {0,...,4}; node 0 is the affine vertex.
inline constexpr int kRank = 5;

enum class Algebra { E6_2, F4_1 };

// Canonical short names used by the CLI and all file formats.
std::string_view algebraName(Algebra a);                     // "e6-2" / "f4-1"
std::optional<Algebra> algebraFromName(std::string_view s);

// A weight written in the basis of fundamental weights Lambda_0..Lambda_4,
// i.e. lambda[i] = <h_i, w>.
struct ClassicalWeight {
  std::array<int, kRank> lambda{};

  int pairing(int i) const { return lambda[i]; }

  friend ClassicalWeight operator+(ClassicalWeight a, const ClassicalWeight& b) {
    for (int i = 0; i < kRank; ++i) a.lambda[i] += b.lambda[i];
    return a;
  }
  friend ClassicalWeight operator-(ClassicalWeight a, const ClassicalWeight& b) {
    for (int i = 0; i < kRank; ++i) a.lambda[i] -= b.lambda[i];
    return a;
  }
  friend ClassicalWeight operator*(int s, ClassicalWeight a) {
    for (int i = 0; i < kRank; ++i) a.lambda[i] *= s;
    return a;
  }
  friend ClassicalWeight operator-(ClassicalWeight a) { return -1 * a; }
  friend auto operator<=>(const ClassicalWeight&, const ClassicalWeight&) = default;

  std::string toString() const;  // "aL0+bL1+..." with zero terms dropped
};

// A classical weight plus an integer multiple of the null root delta. The
// fundamental-weight coordinates of delta all vanish, so the multiple has to
// be carried separately.
struct AffineWeight {
  ClassicalWeight classical{};
  int delta = 0;

  friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) {
    return {a.classical + b.classical, a.delta + b.delta};
  }
  friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) {
    return {a.classical - b.classical, a.delta - b.delta};
  }
  friend auto operator<=>(const AffineWeight&, const AffineWeight&) = default;

  std::string toString() const;
};

// Affine Cartan datum for one of the two supported algebras: Cartan matrix,
// null root delta = sum deltaCoeff[i] alpha_i, and canonical central element
// c = sum centralCoeff[i] h_i. The two matrices are transposes of each other,
// and the delta/central coefficient vectors swap accordingly.
class CartanDatum {
 public:
  static const CartanDatum& get(Algebra a);

  Algebra algebra() const { return algebra_; }
  // a(i, j) = <h_i, alpha_j>
  int a(int i, int j) const { return a_[i][j]; }
  int deltaCoeff(int i) const { return delta_[i]; }
  int centralCoeff(int i) const { return c_[i]; }
  const std::array<int, kRank>& deltaCoeffs() const { return delta_; }
  const std::array<int, kRank>& centralCoeffs() const { return c_; }

  ClassicalWeight fundamentalWeight(int i) const;
  // Column i of the Cartan matrix: the classical image of alpha_i.
  ClassicalWeight simpleRootClassical(int i) const;
  // alpha_i as an affine weight; alpha_0 carries delta-part 1 because
  // delta = alpha_0 + sum_{i>0} deltaCoeff[i] alpha_i.
  AffineWeight simpleRoot(int i) const;

  int level(const ClassicalWeight& w) const;  // <c, w>

  // Solves w = sum_{i=1..4} x_i alpha_i with the affine coefficient pinned to
  // zero. Five equations in four unknowns; returns nullopt when the system is
  // inconsistent or non-integral. x[0] is always 0 in a returned solution.
  std::optional<std::array<int, kRank>> decomposeOverFiniteRoots(
      const ClassicalWeight& w) const;

  // Solves w = sum_i x_i alpha_i over all five affine simple roots. The
  // delta-part of w fixes x_0, which makes the solution unique when it exists.
  std::optional<std::array<int, kRank>> decomposeOverAffineRoots(
      const AffineWeight& w) const;

  std::string toJson() const;

 private:
  CartanDatum(Algebra algebra, std::array<std::array<int, kRank>, kRank> a,
              std::array<int, kRank> delta, std::array<int, kRank> c);

  Algebra algebra_;
  std::array<std::array<int, kRank>, kRank> a_;
  std::array<int, kRank> delta_;
  std::array<int, kRank> c_;
};

}  // namespace yw
