//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/molgraph/element.h"

#include <algorithm>
#include <array>

namespace mgb {
namespace {

constexpr int kNoValence[] = {0};
constexpr int kV1[] = {1};
constexpr int kV2[] = {2};
constexpr int kV3[] = {3};
constexpr int kV4[] = {4};
constexpr int kP[] = {3, 5};
constexpr int kS[] = {2, 4, 6};

constexpr std::span<const int> none() {
  return std::span<const int>(kNoValence, 0);
}

// Average masses follow the IUPAC conventional values used by common
// cheminformatics toolkits, so molecular weights agree to 1e-3 g/mol.
const std::array kElements = {
    ElementInfo{1, "H", 1.008, kV1},
    ElementInfo{2, "He", 4.003, none()},
    ElementInfo{3, "Li", 6.941, none()},
    ElementInfo{4, "Be", 9.012, none()},
    ElementInfo{5, "B", 10.812, kV3},
    ElementInfo{6, "C", 12.011, kV4},
    ElementInfo{7, "N", 14.007, kV3},
    ElementInfo{8, "O", 15.999, kV2},
    ElementInfo{9, "F", 18.998, kV1},
    ElementInfo{10, "Ne", 20.180, none()},
    ElementInfo{11, "Na", 22.990, none()},
    ElementInfo{12, "Mg", 24.305, none()},
    ElementInfo{13, "Al", 26.982, none()},
    ElementInfo{14, "Si", 28.086, none()},
    ElementInfo{15, "P", 30.974, kP},
    ElementInfo{16, "S", 32.067, kS},
    ElementInfo{17, "Cl", 35.453, kV1},
    ElementInfo{18, "Ar", 39.948, none()},
    ElementInfo{19, "K", 39.098, none()},
    ElementInfo{20, "Ca", 40.078, none()},
    ElementInfo{21, "Sc", 44.956, none()},
    ElementInfo{22, "Ti", 47.867, none()},
    ElementInfo{23, "V", 50.942, none()},
    ElementInfo{24, "Cr", 51.996, none()},
    ElementInfo{25, "Mn", 54.938, none()},
    ElementInfo{26, "Fe", 55.845, none()},
    ElementInfo{27, "Co", 58.933, none()},
    ElementInfo{28, "Ni", 58.693, none()},
    ElementInfo{29, "Cu", 63.546, none()},
    ElementInfo{30, "Zn", 65.39, none()},
    ElementInfo{31, "Ga", 69.723, none()},
    ElementInfo{32, "Ge", 72.61, none()},
    ElementInfo{33, "As", 74.922, none()},
    ElementInfo{34, "Se", 78.96, none()},
    ElementInfo{35, "Br", 79.904, kV1},
    ElementInfo{36, "Kr", 83.80, none()},
    ElementInfo{37, "Rb", 85.468, none()},
    ElementInfo{38, "Sr", 87.62, none()},
    ElementInfo{39, "Y", 88.906, none()},
    ElementInfo{40, "Zr", 91.224, none()},
    ElementInfo{41, "Nb", 92.906, none()},
    ElementInfo{42, "Mo", 95.94, none()},
    ElementInfo{43, "Tc", 98.0, none()},
    ElementInfo{44, "Ru", 101.07, none()},
    ElementInfo{45, "Rh", 102.906, none()},
    ElementInfo{46, "Pd", 106.42, none()},
    ElementInfo{47, "Ag", 107.868, none()},
    ElementInfo{48, "Cd", 112.411, none()},
    ElementInfo{49, "In", 114.818, none()},
    ElementInfo{50, "Sn", 118.71, none()},
    ElementInfo{51, "Sb", 121.76, none()},
    ElementInfo{52, "Te", 127.6, none()},
    ElementInfo{53, "I", 126.904, kV1},
    ElementInfo{54, "Xe", 131.29, none()},
    ElementInfo{55, "Cs", 132.905, none()},
    ElementInfo{56, "Ba", 137.328, none()},
    ElementInfo{72, "Hf", 178.49, none()},
    ElementInfo{73, "Ta", 180.948, none()},
    ElementInfo{74, "W", 183.84, none()},
    ElementInfo{75, "Re", 186.207, none()},
    ElementInfo{76, "Os", 190.23, none()},
    ElementInfo{77, "Ir", 192.217, none()},
    ElementInfo{78, "Pt", 195.078, none()},
    ElementInfo{79, "Au", 196.967, none()},
    ElementInfo{80, "Hg", 200.59, none()},
    ElementInfo{81, "Tl", 204.383, none()},
    ElementInfo{82, "Pb", 207.2, none()},
    ElementInfo{83, "Bi", 208.980, none()},
};

}  // namespace

const ElementInfo *find_element(int atomic_number) {
  auto it = std::find_if(kElements.begin(), kElements.end(),
                         [&](const ElementInfo &e) {
                           return e.atomic_number == atomic_number;
                         });
  return it == kElements.end() ? nullptr : &*it;
}

const ElementInfo *find_element(std::string_view symbol) {
  auto it = std::find_if(kElements.begin(), kElements.end(),
                         [&](const ElementInfo &e) { return e.symbol == symbol; });
  return it == kElements.end() ? nullptr : &*it;
}

bool is_organic_subset(int z) {
  switch (z) {
  case 5:
  case 6:
  case 7:
  case 8:
  case 9:
  case 15:
  case 16:
  case 17:
  case 35:
  case 53:
    return true;
  default:
    return false;
  }
}

bool can_be_aromatic(int z) {
  switch (z) {
  case 5:
  case 6:
  case 7:
  case 8:
  case 15:
  case 16:
  case 33:
  case 34:
  case 52:
    return true;
  default:
    return false;
  }
}

std::optional<int> pick_valence(int atomic_number, int used) {
  const ElementInfo *info = find_element(atomic_number);
  if (info == nullptr)
    return std::nullopt;
  for (int v : info->valences) {
    if (v >= used)
      return v;
  }
  return std::nullopt;
}

}  // namespace mgb
