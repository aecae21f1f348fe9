#pragma once

#include "monores/multidegree.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace monores {

/// Bitmask over generator indices. Ideals with more than 63 minimal
/// generators are rejected by the subset-enumerating operations.
using GeneratorMask = std::uint64_t;

inline constexpr std::size_t kMaxSubsetGenerators = 20;

/// Monomial ideal in k[x_1..x_n], always stored by its minimal generators.
/// Generators keep the order of first appearance in the input.
class MonomialIdeal {
public:
  MonomialIdeal() = default;

  /// Builds the ideal generated by `raw`, discarding non-minimal generators
  /// and duplicates. Throws InputError on length mismatch.
  static MonomialIdeal minimalize(std::vector<Multidegree> raw, std::size_t num_vars,
                                  std::vector<std::string> var_names = {});
  /// The zero ideal of k[x_1..x_n].
  static MonomialIdeal zero(std::size_t num_vars, std::vector<std::string> var_names = {});

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<std::string>& var_names() const { return var_names_; }
  const std::vector<Multidegree>& generators() const { return gens_; }
  std::size_t num_generators() const { return gens_.size(); }
  const Multidegree& generator(std::size_t i) const { return gens_.at(i); }
  bool empty() const { return gens_.empty(); }

  /// True iff x^m lies in the ideal.
  bool contains(const Multidegree& m) const;
  /// Exponent vector of lcm of all generators (zero vector for the zero ideal).
  Multidegree lcm_all() const;
  std::int64_t min_generator_degree() const;
  bool is_squarefree() const;

  std::string to_string() const;

  bool operator==(const MonomialIdeal&) const = default;

private:
  std::size_t num_vars_ = 0;
  std::vector<std::string> var_names_;
  std::vector<Multidegree> gens_;
};

std::vector<std::string> default_var_names(std::size_t num_vars);

/// m_J: lcm of the generators indexed by `subset`; zero multidegree for the
/// empty subset. Throws InputError on an out-of-range index.
Multidegree lcm_of_subset(const MonomialIdeal& ideal, std::span<const std::size_t> subset);
Multidegree lcm_of_mask(const MonomialIdeal& ideal, GeneratorMask mask);

std::vector<std::size_t> mask_to_indices(GeneratorMask mask);
GeneratorMask indices_to_mask(std::span<const std::size_t> indices);

/// l_J: number of connected components of the graph on J joining generators
/// that share a variable. Throws InputError for empty J.
int connected_components(const MonomialIdeal& ideal, std::span<const std::size_t> subset);
int connected_components_of_mask(const MonomialIdeal& ideal, GeneratorMask mask);

/// Two generators with the same positive exponent in some variable must
/// have a third generator strictly dividing their lcm (strictly smaller in
/// every variable that occurs in the lcm).
bool is_generic(const MonomialIdeal& ideal);

/// Standard polarization. Variable x_i with largest exponent d_i becomes
/// d_i variables (one if d_i <= 1, keeping the original name). The forward
/// map sends x_i^a to z_{i,1}...z_{i,a}; the inverse collapses z_{i,k} to x_i.
class Polarization {
public:
  explicit Polarization(const MonomialIdeal& ideal);

  const MonomialIdeal& source() const { return source_; }
  const MonomialIdeal& polarized() const { return polarized_; }
  /// Original variable index of polarized variable `z`.
  std::size_t origin_of(std::size_t z) const { return origin_.at(z); }
  /// Position (1-based) of polarized variable `z` among the copies of its origin.
  Exponent copy_index_of(std::size_t z) const { return copy_.at(z); }

  Multidegree lambda(const Multidegree& x_monomial) const;
  Multidegree lambda_inverse(const Multidegree& z_monomial) const;

private:
  MonomialIdeal source_;
  MonomialIdeal polarized_;
  std::vector<std::size_t> first_copy_;
  std::vector<Exponent> copies_;
  std::vector<std::size_t> origin_;
  std::vector<Exponent> copy_;
};

} // namespace monores
