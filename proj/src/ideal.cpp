#include "monores/ideal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace monores {

std::vector<std::string> default_var_names(std::size_t num_vars) {
  std::vector<std::string> names;
  names.reserve(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i)
    names.push_back("x" + std::to_string(i + 1));
  return names;
}

MonomialIdeal MonomialIdeal::minimalize(std::vector<Multidegree> raw, std::size_t num_vars,
                                        std::vector<std::string> var_names) {
  if (var_names.empty())
    var_names = default_var_names(num_vars);
  if (var_names.size() != num_vars)
    throw InputError("expected " + std::to_string(num_vars) + " variable names, got " +
                     std::to_string(var_names.size()));
  for (const auto& m : raw)
    if (m.size() != num_vars)
      throw InputError("generator has " + std::to_string(m.size()) + " exponents, ring has " +
                       std::to_string(num_vars) + " variables");

  MonomialIdeal ideal;
  ideal.num_vars_ = num_vars;
  ideal.var_names_ = std::move(var_names);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < raw.size() && !redundant; ++j) {
      if (i == j || !raw[j].divides(raw[i]))
        continue;
      // equal generators: keep the first occurrence only
      redundant = raw[j] != raw[i] || j < i;
    }
    if (!redundant)
      ideal.gens_.push_back(raw[i]);
  }
  return ideal;
}

MonomialIdeal MonomialIdeal::zero(std::size_t num_vars, std::vector<std::string> var_names) {
  return minimalize({}, num_vars, std::move(var_names));
}

bool MonomialIdeal::contains(const Multidegree& m) const {
  for (const auto& g : gens_)
    if (g.divides(m))
      return true;
  return false;
}

Multidegree MonomialIdeal::lcm_all() const {
  Multidegree m(num_vars_);
  for (const auto& g : gens_)
    m = m.lcm(g);
  return m;
}

std::int64_t MonomialIdeal::min_generator_degree() const {
  std::int64_t d = 0;
  bool first = true;
  for (const auto& g : gens_) {
    d = first ? g.total_degree() : std::min(d, g.total_degree());
    first = false;
  }
  return d;
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const auto& g) { return g.is_squarefree(); });
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i)
      out += ", ";
    out += gens_[i].to_string(var_names_);
  }
  return out + ")";
}

std::vector<std::size_t> mask_to_indices(GeneratorMask mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

GeneratorMask indices_to_mask(std::span<const std::size_t> indices) {
  GeneratorMask mask = 0;
  for (std::size_t i : indices) {
    if (i >= 64)
      throw InputError("generator index out of range");
    mask |= GeneratorMask{1} << i;
  }
  return mask;
}

Multidegree lcm_of_subset(const MonomialIdeal& ideal, std::span<const std::size_t> subset) {
  Multidegree m(ideal.num_vars());
  for (std::size_t i : subset) {
    if (i >= ideal.num_generators())
      throw InputError("generator index " + std::to_string(i) + " out of range");
    m = m.lcm(ideal.generator(i));
  }
  return m;
}

Multidegree lcm_of_mask(const MonomialIdeal& ideal, GeneratorMask mask) {
  const auto idx = mask_to_indices(mask);
  return lcm_of_subset(ideal, idx);
}

int connected_components(const MonomialIdeal& ideal, std::span<const std::size_t> subset) {
  if (subset.empty())
    throw InputError("connected components requested for an empty generator subset");
  for (std::size_t i : subset)
    if (i >= ideal.num_generators())
      throw InputError("generator index " + std::to_string(i) + " out of range");

  std::vector<std::size_t> parent(subset.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a)
      a = parent[a] = parent[parent[a]];
    return a;
  };
  int components = static_cast<int>(subset.size());
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      if (ideal.generator(subset[a]).coprime_to(ideal.generator(subset[b])))
        continue;
      auto ra = find(a), rb = find(b);
      if (ra != rb) {
        parent[ra] = rb;
        --components;
      }
    }
  return components;
}

int connected_components_of_mask(const MonomialIdeal& ideal, GeneratorMask mask) {
  const auto idx = mask_to_indices(mask);
  return connected_components(ideal, idx);
}

namespace {

bool strictly_divides_lcm(const Multidegree& m, const Multidegree& lcm) {
  for (std::size_t s = 0; s < lcm.size(); ++s) {
    if (lcm[s] == 0 ? m[s] != 0 : m[s] >= lcm[s])
      return false;
  }
  return true;
}

} // namespace

bool is_generic(const MonomialIdeal& ideal) {
  const auto& g = ideal.generators();
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      bool shared = false;
      for (std::size_t s = 0; s < ideal.num_vars() && !shared; ++s)
        shared = g[a][s] > 0 && g[a][s] == g[b][s];
      if (!shared)
        continue;
      const auto lcm = g[a].lcm(g[b]);
      bool witnessed = false;
      for (std::size_t c = 0; c < g.size() && !witnessed; ++c)
        witnessed = c != a && c != b && strictly_divides_lcm(g[c], lcm);
      if (!witnessed)
        return false;
    }
  return true;
}

Polarization::Polarization(const MonomialIdeal& ideal) : source_(ideal) {
  const std::size_t n = ideal.num_vars();
  const auto top = ideal.lcm_all();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    const Exponent d = std::max<Exponent>(1, top[i]);
    first_copy_.push_back(origin_.size());
    copies_.push_back(d);
    for (Exponent k = 1; k <= d; ++k) {
      origin_.push_back(i);
      copy_.push_back(k);
      names.push_back(d == 1 ? ideal.var_names()[i]
                             : ideal.var_names()[i] + "_" + std::to_string(k));
    }
  }
  std::vector<Multidegree> gens;
  for (const auto& g : ideal.generators())
    gens.push_back(lambda(g));
  polarized_ = MonomialIdeal::minimalize(std::move(gens), origin_.size(), std::move(names));
}

Multidegree Polarization::lambda(const Multidegree& x_monomial) const {
  if (x_monomial.size() != source_.num_vars())
    throw InputError("monomial length does not match the source ring");
  Multidegree z(origin_.size());
  for (std::size_t i = 0; i < x_monomial.size(); ++i) {
    if (x_monomial[i] > copies_[i])
      throw InputError("monomial exponent exceeds the polarization range");
    for (Exponent k = 0; k < x_monomial[i]; ++k)
      z[first_copy_[i] + static_cast<std::size_t>(k)] = 1;
  }
  return z;
}

Multidegree Polarization::lambda_inverse(const Multidegree& z_monomial) const {
  if (z_monomial.size() != origin_.size())
    throw InputError("monomial length does not match the polarized ring");
  Multidegree x(source_.num_vars());
  for (std::size_t z = 0; z < z_monomial.size(); ++z)
    x[origin_[z]] += z_monomial[z];
  return x;
}

} // namespace monores
