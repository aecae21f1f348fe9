#pragma once

#include "monores/field.hpp"
#include "monores/ideal.hpp"
#include "monores/linalg.hpp"
#include "monores/multidegree.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace monores {

/// Ring over which a free complex lives: S = k[x], R = S/I, or the residue
/// field k (where only entries with trivial monomial part survive).
enum class RingKind { polynomial, quotient, residue_field };

struct ComplexEntry {
  std::size_t row = 0;
  Coeff coeff;
};

/// Column of a differential: the image of one generator, sorted by row.
using Column = std::vector<ComplexEntry>;

/// Chain complex of multigraded free modules
///   F_L -> ... -> F_1 -> F_0.
/// Module i is a list of generator multidegrees; differential i maps F_i to
/// F_{i-1} and stores one column per generator of F_i. An entry in row h of
/// column g stands for coeff * x^(deg g - deg h).
class FreeComplex {
public:
  FreeComplex() = default;
  FreeComplex(MonomialIdeal ring_ideal, RingKind kind, std::uint64_t characteristic = 0);

  const MonomialIdeal& ring_ideal() const { return ideal_; }
  RingKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return characteristic_; }
  std::size_t num_vars() const { return ideal_.num_vars(); }

  /// Number of homological degrees stored (0 for the zero complex).
  std::size_t num_modules() const { return modules_.size(); }
  std::size_t rank(std::size_t i) const { return i < modules_.size() ? modules_[i].size() : 0; }
  std::vector<std::size_t> ranks() const;
  const std::vector<Multidegree>& module(std::size_t i) const { return modules_.at(i); }
  const std::vector<Column>& differential(std::size_t i) const { return diffs_.at(i); }
  const std::vector<std::string>& labels(std::size_t i) const { return labels_.at(i); }

  /// Appends the next homological degree. `diff` has one column per entry
  /// of `gens`, with rows indexing the previous module (ignored for degree 0).
  void push_module(std::vector<Multidegree> gens, std::vector<Column> diff,
                   std::vector<std::string> labels = {});

  /// Monomial part x^(deg g - deg h) of entry (h, g) of differential i.
  Multidegree entry_monomial(std::size_t i, std::size_t col, std::size_t row) const;

  /// Same modules and maps, read over a different ring.
  FreeComplex with_ring(MonomialIdeal ring_ideal, RingKind kind) const;
  /// Same complex with coefficients reduced into the given field.
  FreeComplex with_characteristic(std::uint64_t characteristic) const;

private:
  MonomialIdeal ideal_;
  RingKind kind_ = RingKind::polynomial;
  std::uint64_t characteristic_ = 0;
  std::vector<std::vector<Multidegree>> modules_;
  std::vector<std::vector<Column>> diffs_;
  std::vector<std::vector<std::string>> labels_;
};

/// Generators of F_i that contribute a basis vector to the multidegree-j
/// component, and the inverse map generator -> position (npos if absent).
struct ComponentBasis {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> gens;
  std::vector<std::size_t> position;
};

bool contributes_to(const FreeComplex& c, const Multidegree& gen_degree, const Multidegree& j);
ComponentBasis component_basis(const FreeComplex& c, std::size_t i, const Multidegree& j);

/// Matrix of differential i in multidegree j, as columns indexed by `src`
/// and rows indexed by `tgt`.
template <class Field>
std::vector<SparseVector<Field>> component_matrix(const FreeComplex& c, const Field& field,
                                                  std::size_t i, const ComponentBasis& src,
                                                  const ComponentBasis& tgt) {
  std::vector<SparseVector<Field>> cols;
  cols.reserve(src.gens.size());
  const auto& diff = c.differential(i);
  for (std::size_t g : src.gens) {
    SparseVector<Field> col;
    for (const auto& e : diff[g]) {
      const std::size_t pos = tgt.position[e.row];
      if (pos == ComponentBasis::npos)
        continue;
      auto v = field.from(e.coeff);
      if (!field.is_zero(v))
        col.emplace_back(pos, v);
    }
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    cols.push_back(std::move(col));
  }
  return cols;
}

/// Taylor complex of S/I over S: one generator T_J of multidegree m_J per
/// subset J, d(T_J) = sum_k (-1)^k (m_J / m_{J - j_k}) T_{J - j_k} where j_k
/// is the k-th element (0-based) of J in increasing order.
FreeComplex taylor_complex(const MonomialIdeal& ideal);

/// Subcomplex of the Taylor complex on subsets whose lcm is attained by no
/// other subset.
FreeComplex scarf_complex(const MonomialIdeal& ideal);
/// Faces of the Scarf complex (including the empty face), by size then mask.
std::vector<GeneratorMask> scarf_faces(const MonomialIdeal& ideal);

/// Koszul complex on x_1..x_n over S (kind polynomial) or over R = S/I
/// (kind quotient). d(e_A) = sum_k (-1)^k x_{a_k} e_{A - a_k}.
FreeComplex koszul_complex(const MonomialIdeal& ideal, RingKind kind);

/// Per homological degree, the nonzero multigraded homology dimensions.
struct HomologyTable {
  std::vector<std::map<Multidegree, std::size_t>> dims;

  std::size_t dim(std::size_t i, const Multidegree& j) const;
  std::size_t total(std::size_t i) const;
  bool operator==(const HomologyTable&) const = default;
};

/// Multigraded homology in every multidegree j <= bound. Multidegrees are
/// independent, so `jobs` > 1 spreads them over threads.
HomologyTable homology(const FreeComplex& c, const Multidegree& bound, unsigned jobs = 1);

/// Dimension of H_i(C)_j.
std::size_t homology_dim(const FreeComplex& c, std::size_t i, const Multidegree& j);

/// The complex read over k: what multigraded Betti numbers are read from.
FreeComplex tensor_with_residue_field(const FreeComplex& c);

/// Cancels unit entries (nonzero scalar, trivial monomial) until none are
/// left. The result is homotopy equivalent to the input.
FreeComplex minimize(const FreeComplex& c);

/// Symbolic check of d_{i-1} o d_i = 0 for all i (entries killed by I when
/// the ring is a quotient).
bool d_squared_is_zero(const FreeComplex& c);

/// True iff no entry is a nonzero scalar with trivial monomial part.
bool is_minimal(const FreeComplex& c);

/// All subset lcms distinct and none equal to the lcm of a facet.
bool is_taylor_minimal(const MonomialIdeal& ideal);

std::string subset_label(GeneratorMask mask);

/// Position of e_A among the Koszul generators of degree |A| (subsets of a
/// fixed size are ordered by increasing bitmask).
std::size_t koszul_rank_of_mask(std::uint64_t var_mask);
std::uint64_t mask_of_indicator(const Multidegree& indicator);
/// Sign of the permutation sorting the concatenation of A and B (both
/// increasing); 0 if they intersect.
int merge_sign(std::uint64_t a, std::uint64_t b);

} // namespace monores
