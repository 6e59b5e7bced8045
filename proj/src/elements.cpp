//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "moltok/elements.hpp"

#include <array>
#include <unordered_map>

namespace moltok {

namespace {

constexpr std::array<const char*, 119> kSymbols = {
    "*",  // placeholder pseudo-element, atomic number 0
    "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg",
    "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr",
    "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr",
    "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd",
    "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd",
    "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf",
    "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi", "Po",
    "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am", "Cm",
    "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs",
    "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og"};

const std::unordered_map<std::string_view, int>& symbol_index() {
  static const std::unordered_map<std::string_view, int> index = [] {
    std::unordered_map<std::string_view, int> m;
    for (int i = 0; i < static_cast<int>(kSymbols.size()); ++i)
      m.emplace(kSymbols[static_cast<std::size_t>(i)], i);
    return m;
  }();
  return index;
}

const std::vector<int> kNoValence = {};
const std::vector<int> kValence1 = {1};
const std::vector<int> kValence2 = {2};
const std::vector<int> kValence3 = {3};
const std::vector<int> kValence4 = {4};
const std::vector<int> kValenceP = {3, 5};
const std::vector<int> kValenceS = {2, 4, 6};

}  // namespace

int atomic_number(std::string_view symbol) {
  auto it = symbol_index().find(symbol);
  return it == symbol_index().end() ? -1 : it->second;
}

bool is_valid_element(std::string_view symbol) {
  return symbol != "*" && atomic_number(symbol) > 0;
}

bool in_organic_subset(std::string_view symbol) {
  return symbol == "B" || symbol == "C" || symbol == "N" || symbol == "O" ||
         symbol == "P" || symbol == "S" || symbol == "F" || symbol == "Cl" ||
         symbol == "Br" || symbol == "I";
}

bool aromatic_symbol_allowed(std::string_view symbol) {
  return symbol == "B" || symbol == "C" || symbol == "N" || symbol == "O" ||
         symbol == "P" || symbol == "S";
}

const std::vector<int>& standard_valences(std::string_view symbol) {
  if (symbol == "B") return kValence3;
  if (symbol == "C") return kValence4;
  if (symbol == "N") return kValence3;
  if (symbol == "O") return kValence2;
  if (symbol == "P") return kValenceP;
  if (symbol == "S") return kValenceS;
  if (symbol == "F" || symbol == "Cl" || symbol == "Br" || symbol == "I")
    return kValence1;
  if (symbol == "H") return kValence1;
  return kNoValence;
}

}  // namespace moltok
