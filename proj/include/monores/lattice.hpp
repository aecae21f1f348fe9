#pragma once

#include "monores/ideal.hpp"
#include "monores/series.hpp"

#include <utility>
#include <vector>

namespace monores {

/// Lattice of lcms of subsets of the minimal generators, ordered by
/// divisibility. Elements are sorted; the bottom (empty lcm) comes first.
class LcmLattice {
public:
  explicit LcmLattice(MonomialIdeal ideal);

  const MonomialIdeal& ideal() const { return ideal_; }
  const std::vector<Multidegree>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  /// Element index of each generator.
  const std::vector<std::size_t>& atoms() const { return atoms_; }
  /// Element index of lcm(J) for every generator subset J (as a bitmask).
  const std::vector<std::size_t>& element_of_mask() const { return of_mask_; }

  bool contains(const Multidegree& m) const;
  /// Index of `m`, or npos.
  std::size_t index_of(const Multidegree& m) const;
  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return of_mask_.back(); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  MonomialIdeal ideal_;
  std::vector<Multidegree> elements_;
  std::vector<std::size_t> atoms_;
  std::vector<std::size_t> of_mask_;
};

/// Coprimality graph on the non-bottom lattice elements.
struct GcdGraph {
  std::size_t num_vertices = 0;
  /// Pairs (a, b), a < b, of element indices with disjoint supports.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool adjacent(std::size_t a, std::size_t b) const;
};

GcdGraph build_gcd_graph(const LcmLattice& lattice);

/// Lattice isomorphism induced by a bijection of generators.
struct LatticeMap {
  std::vector<std::size_t> atom_map;
  std::vector<std::size_t> element_map;
  std::vector<Multidegree> source_elements;
  std::vector<Multidegree> target_elements;
  bool gcd_preserving = false;

  /// Image of a lattice element; ContractError if `m` is not one.
  Multidegree apply(const Multidegree& m) const;
};

/// Every generator bijection whose induced map on lcms is well defined and
/// bijective. Sorted by atom map.
std::vector<LatticeMap> find_lattice_isomorphisms(const MonomialIdeal& source, const MonomialIdeal& target);

/// Map from the lattice of the polarization back to the original lattice
/// (generator i to generator i).
LatticeMap polarization_lattice_map(const Polarization& pol);

/// Replaces every y-multidegree j of `q` by map(j). The result is truncated
/// at q's t-degree and at the top of the target lattice.
BigradedSeries transport_denominator(const BigradedSeries& q, const LatticeMap& map);

} // namespace monores
