#pragma once

#include "monores/complex.hpp"
#include "monores/ideal.hpp"
#include "monores/resolution.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace monores {

/// Basis element e_L (x) T_{J_1} (x) ... (x) T_{J_l} of the Eagon complex.
/// `faces` holds indices into EagonResolution::faces.
struct EagonGenerator {
  std::uint64_t koszul_mask = 0;
  std::vector<std::size_t> faces;

  auto operator<=>(const EagonGenerator&) const = default;
};

/// Free resolution of k over R = S/I for generic I, built from the Koszul
/// complex over R and tensor words in the nonempty Scarf faces. Face J sits
/// in homological degree |J| + 1 and multidegree m_J.
struct EagonResolution {
  MonomialIdeal ideal;
  int imax = 0;
  /// Nonempty Scarf faces, by size then mask.
  std::vector<GeneratorMask> faces;
  /// d(T_J): a cycle of K_{|J|} (x) R in multidegree m_J spanning H_{|J|} there.
  std::vector<KoszulChain> face_cycles;
  /// Whether the cycles could be chosen so that z_a z_b equals the Scarf
  /// product of T_a and T_b on the nose; without it d o d fails.
  bool multiplicative = false;
  FreeComplex complex;
  std::vector<std::vector<EagonGenerator>> generators;
};

/// Builds Y_0..Y_imax. Refuses non-generic ideals.
EagonResolution eagon_resolution(const MonomialIdeal& ideal, int imax, std::uint64_t characteristic = 0);

/// rank Y_i from the direct sum decomposition alone:
/// sum over j + sum_k (t_k + 1) = i of C(n, j) * prod_k f_{t_k}, f_t = #faces of size t.
std::vector<std::size_t> eagon_rank_formula(const MonomialIdeal& ideal, int imax);

struct EagonCheck {
  int imax = 0;
  Multidegree bound;
  bool d_squared_zero = false;
  /// H_0 = k (one dimension, in multidegree 0).
  bool h0_is_k = false;
  /// H_i vanishes for 1 <= i <= imax - 1 in every multidegree <= bound.
  bool exact = false;
  bool ranks_match = false;
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> formula_ranks;

  bool ok() const { return d_squared_zero && h0_is_k && exact && ranks_match; }
};

/// Default bound used by check_eagon: max(1, imax / 2) * m_I.
Multidegree default_eagon_bound(const MonomialIdeal& ideal, int imax);
EagonCheck check_eagon(const EagonResolution& res, const Multidegree& bound, unsigned jobs = 1);

std::string eagon_label(const EagonResolution& res, const EagonGenerator& g);

} // namespace monores
