#include "yw/cartan.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace yw {

std::string_view algebraName(Algebra a) {
  return a == Algebra::E6_2 ? "e6-2" : "f4-1";
}

std::optional<Algebra> algebraFromName(std::string_view s) {
  if (s == "e6-2") return Algebra::E6_2;
  if (s == "f4-1") return Algebra::F4_1;
  return std::nullopt;
}

namespace {

std::string termString(const char* symbol, int idx, int coeff, bool& first) {
  if (coeff == 0) return "";
  std::ostringstream os;
  if (!first && coeff > 0) os << "+";
  if (coeff == -1)
    os << "-";
  else if (coeff != 1)
    os << coeff;
  os << symbol << idx;
  first = false;
  return os.str();
}

}  // namespace

std::string ClassicalWeight::toString() const {
  std::string out;
  bool first = true;
  for (int i = 0; i < kRank; ++i) out += termString("L", i, lambda[i], first);
  return first ? "0" : out;
}

std::string AffineWeight::toString() const {
  std::string out = classical.toString();
  if (delta != 0) {
    std::ostringstream os;
    if (out == "0") out.clear();
    if (delta > 0 && !out.empty()) os << "+";
    if (delta == -1)
      os << "-";
    else if (delta != 1)
      os << delta;
    os << "d";
    out += os.str();
  }
  return out;
}

CartanDatum::CartanDatum(Algebra algebra,
                         std::array<std::array<int, kRank>, kRank> a,
                         std::array<int, kRank> delta, std::array<int, kRank> c)
    : algebra_(algebra), a_(a), delta_(delta), c_(c) {
  // A delta = 0 and c^T A = 0 pin the null root and central element.
  for (int i = 0; i < kRank; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < kRank; ++j) {
      row += a_[i][j] * delta_[j];
      col += c_[j] * a_[j][i];
    }
    assert(row == 0 && col == 0);
    (void)row;
    (void)col;
  }
}

const CartanDatum& CartanDatum::get(Algebra a) {
  static const CartanDatum e62{Algebra::E6_2,
                               {{{2, -1, 0, 0, 0},
                                 {-1, 2, -1, 0, 0},
                                 {0, -1, 2, -2, 0},
                                 {0, 0, -1, 2, -1},
                                 {0, 0, 0, -1, 2}}},
                               {1, 2, 3, 2, 1},
                               {1, 2, 3, 4, 2}};
  static const CartanDatum f41{Algebra::F4_1,
                               {{{2, -1, 0, 0, 0},
                                 {-1, 2, -1, 0, 0},
                                 {0, -1, 2, -1, 0},
                                 {0, 0, -2, 2, -1},
                                 {0, 0, 0, -1, 2}}},
                               {1, 2, 3, 4, 2},
                               {1, 2, 3, 2, 1}};
  return a == Algebra::E6_2 ? e62 : f41;
}

ClassicalWeight CartanDatum::fundamentalWeight(int i) const {
  ClassicalWeight w;
  w.lambda[i] = 1;
  return w;
}

ClassicalWeight CartanDatum::simpleRootClassical(int i) const {
  ClassicalWeight w;
  for (int j = 0; j < kRank; ++j) w.lambda[j] = a_[j][i];
  return w;
}

AffineWeight CartanDatum::simpleRoot(int i) const {
  return {simpleRootClassical(i), i == 0 ? 1 : 0};
}

int CartanDatum::level(const ClassicalWeight& w) const {
  int l = 0;
  for (int i = 0; i < kRank; ++i) l += c_[i] * w.lambda[i];
  return l;
}

// Both Cartan matrices are pentadiagonal with |a(2,3)| or |a(3,2)| equal to 2
// and every other off-diagonal entry in {0,-1}, so the linear systems below
// solve by forward substitution with explicit divisibility checks.
std::optional<std::array<int, kRank>> CartanDatum::decomposeOverAffineRoots(
    const AffineWeight& w) const {
  std::array<int, kRank> x{};
  x[0] = w.delta;
  const auto& t = w.classical.lambda;
  // Row i reads sum_j a(i, j) x_j = t[i]; rows 0..3 determine x_1..x_4 in turn.
  x[1] = a_[0][0] * x[0] - t[0];
  x[2] = a_[1][0] * x[0] + a_[1][1] * x[1] - t[1];
  {
    int rhs = t[2] - a_[2][1] * x[1] - a_[2][2] * x[2];
    if (rhs % a_[2][3] != 0) return std::nullopt;
    x[3] = rhs / a_[2][3];
  }
  x[4] = a_[3][2] * x[2] + a_[3][3] * x[3] - t[3];
  if (a_[4][3] * x[3] + a_[4][4] * x[4] != t[4]) return std::nullopt;
  // Re-check every row; cheap and guards the substitution order above.
  for (int i = 0; i < kRank; ++i) {
    int s = 0;
    for (int j = 0; j < kRank; ++j) s += a_[i][j] * x[j];
    if (s != t[i]) return std::nullopt;
  }
  return x;
}

std::optional<std::array<int, kRank>> CartanDatum::decomposeOverFiniteRoots(
    const ClassicalWeight& w) const {
  return decomposeOverAffineRoots(AffineWeight{w, 0});
}

std::string CartanDatum::toJson() const {
  nlohmann::ordered_json j;
  j["type"] = algebraName(algebra_);
  j["cartanMatrix"] = nlohmann::ordered_json::array();
  for (int i = 0; i < kRank; ++i) j["cartanMatrix"].push_back(a_[i]);
  j["deltaCoeffs"] = delta_;
  j["centralCoeffs"] = c_;
  return j.dump(2);
}

}  // namespace yw
