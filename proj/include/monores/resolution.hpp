#pragma once

#include "monores/complex.hpp"
#include "monores/ideal.hpp"
#include "monores/series.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace monores {

/// Minimal multigraded free resolution of k over R = S/I, computed up to
/// homological degree `tmax` and in multidegrees below `bound` only.
struct ResidueFieldResolution {
  MonomialIdeal ideal;
  int tmax = 0;
  Multidegree bound;
  /// F_0 .. F_tmax over R; generator multidegrees are the multigraded Betti
  /// numbers dim Tor_i^R(k,k)_j.
  FreeComplex complex;

  /// sum_i sum_j dim Tor_i^R(k,k)_j y^j t^i, truncated at (tmax, bound).
  BigradedSeries poincare_series() const;
  std::map<Multidegree, std::size_t> betti(std::size_t i) const;
};

/// Builds F_0 = R and then, degree by degree, picks minimal generators of the
/// kernel of the last differential in each multidegree (kernel modulo the
/// multiples of generators already chosen). Refuses a bound that does not
/// dominate m_I.
ResidueFieldResolution resolve_residue_field(const MonomialIdeal& ideal, int tmax,
                                             const Multidegree& bound,
                                             std::uint64_t characteristic = 0);

/// P_R(y,t) truncated at t-degree tmax and y-bound m_I.
BigradedSeries poincare_series(const MonomialIdeal& ideal, int tmax, std::uint64_t characteristic = 0);
BigradedSeries poincare_series(const MonomialIdeal& ideal, int tmax, const Multidegree& ybound,
                               std::uint64_t characteristic = 0);
/// m_I + (1,...,1): large enough that every variable shows up in P_R.
Multidegree padded_bound(const MonomialIdeal& ideal);

/// Default t-degree bound for denominators: deg m_I + 1.
int default_tmax(const MonomialIdeal& ideal);

/// Q_R(y,t) = prod(1 + t y_i) / P_R(y,t). Requires tmax >= deg m_I; throws
/// InternalError if a coefficient survives above t-degree deg m_I.
BigradedSeries denominator(const MonomialIdeal& ideal, int tmax = -1, std::uint64_t characteristic = 0);

/// A chain of the Koszul complex over R living in one multidegree: pairs
/// (Koszul generator index, coefficient), the monomial part being
/// x^(multidegree - deg generator).
struct KoszulChain {
  int degree = 0;
  Multidegree multidegree;
  std::vector<std::pair<std::size_t, Coeff>> terms;
};

/// Multigraded homology H(K (x) R) with representative cycles and the
/// products of positive-degree classes.
struct KoszulHomologyAlgebra {
  MonomialIdeal ideal;
  Multidegree bound;
  std::uint64_t characteristic = 0;
  FreeComplex koszul;
  HomologyTable dims;
  /// Basis of H_{>=1} in multidegrees <= bound, ordered by degree then multidegree.
  std::vector<KoszulChain> classes;
  /// Nonzero products classes[a] * classes[b] (a <= b) in the class basis.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Coeff>>> products;

  bool products_vanish() const { return products.empty(); }
};

KoszulHomologyAlgebra koszul_homology_algebra(const MonomialIdeal& ideal, const Multidegree& bound,
                                              std::uint64_t characteristic = 0);
KoszulHomologyAlgebra koszul_homology_algebra(const MonomialIdeal& ideal, std::uint64_t characteristic = 0);

/// Wedge product of two Koszul chains over R.
KoszulChain wedge(const FreeComplex& koszul, const KoszulChain& a, const KoszulChain& b);

/// Index of the Koszul generator e_A (A given as a variable bitmask).
std::size_t koszul_generator_index(const FreeComplex& koszul, std::uint64_t var_mask);
std::uint64_t koszul_generator_mask(const FreeComplex& koszul, std::size_t degree, std::size_t index);

/// 1 - sum_{i>=1} dim H_i(K)_j y^j t^{i+1}, truncated at (tmax, m_I).
BigradedSeries golod_denominator(const MonomialIdeal& ideal, int tmax = -1, std::uint64_t characteristic = 0);
BigradedSeries golod_denominator(const KoszulHomologyAlgebra& algebra, int tmax);

/// Outcome of comparing P_R with the Golod bound prod(1+ty)/golod_denominator.
/// The comparison only covers t-degrees <= tmax and y-multidegrees <= bound.
struct GolodCertificate {
  bool golod = false;
  int tmax = 0;
  Multidegree bound;
  BigradedSeries poincare;
  BigradedSeries golod_bound;
};

GolodCertificate golod_certificate(const MonomialIdeal& ideal, int tmax, std::uint64_t characteristic = 0);
bool is_golod_truncated(const MonomialIdeal& ideal, int tmax, std::uint64_t characteristic = 0);

/// Generic ideals: Golod iff m_A * m_B != m_{A u B} whenever A u B is a
/// Scarf face. Refuses non-generic input.
bool is_golod_generic(const MonomialIdeal& ideal);

} // namespace monores
