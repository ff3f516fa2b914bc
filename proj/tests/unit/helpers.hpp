#pragma once

#include <array>

#include "yw/energy.hpp"
#include "yw/perfect_crystal.hpp"

namespace ywtest {

inline constexpr std::array<yw::Algebra, 2> kBoth{yw::Algebra::E6_2,
                                                  yw::Algebra::F4_1};

// Built once per process; every suite shares the same instances.
inline const yw::PerfectCrystal& crystal(yw::Algebra a) {
  static const yw::PerfectCrystal e6 = yw::PerfectCrystal::build(yw::Algebra::E6_2);
  static const yw::PerfectCrystal f4 = yw::PerfectCrystal::build(yw::Algebra::F4_1);
  return a == yw::Algebra::E6_2 ? e6 : f4;
}

inline const yw::EnergyTable& energy(yw::Algebra a) {
  static const yw::EnergyTable e6 = yw::computeEnergy(crystal(yw::Algebra::E6_2));
  static const yw::EnergyTable f4 = yw::computeEnergy(crystal(yw::Algebra::F4_1));
  return a == yw::Algebra::E6_2 ? e6 : f4;
}

}  // namespace ywtest
