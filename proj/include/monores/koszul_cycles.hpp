#pragma once

#include "monores/complex.hpp"
#include "monores/linalg.hpp"
#include "monores/resolution.hpp"

#include <vector>

namespace monores {

/// Cycles and boundaries of the Koszul complex at one (degree, multidegree).
template <class Field>
struct KoszulSpot {
  ComponentBasis basis;
  std::vector<SparseVector<Field>> boundaries;
  std::vector<SparseVector<Field>> representatives;
};

template <class Field>
KoszulSpot<Field> koszul_spot(const FreeComplex& k, const Field& field, std::size_t i,
                              const Multidegree& j) {
  KoszulSpot<Field> s;
  s.basis = component_basis(k, i, j);
  if (s.basis.gens.empty())
    return s;
  std::vector<SparseVector<Field>> cycles;
  if (i == 0) {
    for (std::size_t p = 0; p < s.basis.gens.size(); ++p)
      cycles.push_back({{p, field.one()}});
  } else {
    const auto lower = component_basis(k, i - 1, j);
    cycles = kernel_of_columns(field, lower.gens.size(), component_matrix(k, field, i, s.basis, lower));
  }
  Echelon<Field> ech(field, s.basis.gens.size());
  if (i + 1 < k.num_modules()) {
    const auto upper = component_basis(k, i + 1, j);
    s.boundaries = component_matrix(k, field, i + 1, upper, s.basis);
    for (const auto& b : s.boundaries)
      ech.insert(b);
  }
  for (const auto& z : cycles)
    if (ech.insert(z))
      s.representatives.push_back(z);
  return s;
}

template <class Field>
KoszulChain chain_from(const KoszulSpot<Field>& s, const Field& field, std::size_t i,
                       const Multidegree& j, const SparseVector<Field>& v) {
  KoszulChain ch;
  ch.degree = static_cast<int>(i);
  ch.multidegree = j;
  for (const auto& [pos, e] : v)
    ch.terms.emplace_back(s.basis.gens[pos], field.to_coeff(e));
  return ch;
}

} // namespace monores
