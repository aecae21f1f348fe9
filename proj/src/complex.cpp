#include "monores/complex.hpp"

#include <bit>
#include <future>
#include <map>
#include <unordered_map>

namespace monores {

FreeComplex::FreeComplex(MonomialIdeal ring_ideal, RingKind kind, std::uint64_t characteristic)
    : ideal_(std::move(ring_ideal)), kind_(kind), characteristic_(characteristic) {
  validate_characteristic(characteristic);
}

std::vector<std::size_t> FreeComplex::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& m : modules_)
    r.push_back(m.size());
  return r;
}

void FreeComplex::push_module(std::vector<Multidegree> gens, std::vector<Column> diff,
                              std::vector<std::string> labels) {
  if (modules_.empty())
    diff.assign(gens.size(), Column{});
  if (diff.size() != gens.size())
    throw InternalError("differential column count does not match module rank");
  if (!labels.empty() && labels.size() != gens.size())
    throw InternalError("label count does not match module rank");
  for (const auto& g : gens)
    if (g.size() != num_vars())
      throw InternalError("generator multidegree has the wrong length");
  if (!modules_.empty()) {
    const auto& prev = modules_.back();
    for (std::size_t g = 0; g < diff.size(); ++g) {
      auto& col = diff[g];
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
      for (const auto& e : col)
        if (e.row >= prev.size() || !prev[e.row].divides(gens[g]))
          throw InternalError("differential entry is not multidegree-homogeneous");
    }
  }
  if (labels.empty())
    labels.resize(gens.size());
  modules_.push_back(std::move(gens));
  diffs_.push_back(std::move(diff));
  labels_.push_back(std::move(labels));
}

Multidegree FreeComplex::entry_monomial(std::size_t i, std::size_t col, std::size_t row) const {
  return modules_.at(i).at(col) - modules_.at(i - 1).at(row);
}

FreeComplex FreeComplex::with_ring(MonomialIdeal ring_ideal, RingKind kind) const {
  if (ring_ideal.num_vars() != num_vars())
    throw InputError("ring has a different number of variables");
  FreeComplex out = *this;
  out.ideal_ = std::move(ring_ideal);
  out.kind_ = kind;
  return out;
}

FreeComplex FreeComplex::with_characteristic(std::uint64_t characteristic) const {
  validate_characteristic(characteristic);
  FreeComplex out = *this;
  out.characteristic_ = characteristic;
  if (characteristic == 0)
    return out;
  const PrimeField field(characteristic);
  for (auto& diff : out.diffs_)
    for (auto& col : diff) {
      Column reduced;
      for (auto& e : col) {
        const auto v = field.from(e.coeff);
        if (!field.is_zero(v))
          reduced.push_back({e.row, field.to_coeff(v)});
      }
      col = std::move(reduced);
    }
  return out;
}

bool contributes_to(const FreeComplex& c, const Multidegree& gen_degree, const Multidegree& j) {
  switch (c.kind()) {
  case RingKind::residue_field:
    return gen_degree == j;
  case RingKind::polynomial:
    return gen_degree.divides(j);
  case RingKind::quotient:
    if (!gen_degree.divides(j))
      return false;
    for (const auto& g : c.ring_ideal().generators()) {
      bool in = true;
      for (std::size_t s = 0; s < j.size() && in; ++s)
        in = g[s] + gen_degree[s] <= j[s];
      if (in)
        return false;
    }
    return true;
  }
  return false;
}

ComponentBasis component_basis(const FreeComplex& c, std::size_t i, const Multidegree& j) {
  ComponentBasis b;
  const std::size_t rank = c.rank(i);
  b.position.assign(rank, ComponentBasis::npos);
  if (i >= c.num_modules())
    return b;
  const auto& mod = c.module(i);
  for (std::size_t g = 0; g < rank; ++g)
    if (contributes_to(c, mod[g], j)) {
      b.position[g] = b.gens.size();
      b.gens.push_back(g);
    }
  return b;
}

std::string subset_label(GeneratorMask mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : mask_to_indices(mask)) {
    if (!first)
      out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::size_t koszul_rank_of_mask(std::uint64_t var_mask) {
  // colex rank: sum_k C(b_k, k+1) over the set bits b_0 < b_1 < ...
  std::size_t rank = 0;
  std::size_t k = 0;
  while (var_mask) {
    const auto b = static_cast<std::size_t>(std::countr_zero(var_mask));
    std::size_t binom = 1;
    for (std::size_t i = 0; i < k + 1; ++i)
      binom = binom * (b - i) / (i + 1);
    rank += b >= k + 1 ? binom : 0;
    var_mask &= var_mask - 1;
    ++k;
  }
  return rank;
}

std::uint64_t mask_of_indicator(const Multidegree& indicator) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < indicator.size(); ++i)
    if (indicator[i])
      m |= std::uint64_t{1} << i;
  return m;
}

int merge_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b)
    return 0;
  int inversions = 0;
  for (std::uint64_t rest = b; rest; rest &= rest - 1) {
    const auto y = std::countr_zero(rest);
    const std::uint64_t above = y >= 63 ? 0 : ~((std::uint64_t{1} << (y + 1)) - 1);
    inversions += std::popcount(a & above);
  }
  return inversions % 2 == 0 ? 1 : -1;
}

namespace {

void check_subset_limit(const MonomialIdeal& ideal) {
  if (ideal.num_generators() > kMaxSubsetGenerators)
    throw InputError("subset enumeration supports at most " +
                     std::to_string(kMaxSubsetGenerators) + " generators");
}

/// Subsets of {0..r-1} (restricted to `keep`) grouped by size, masks ascending.
std::vector<std::vector<GeneratorMask>> subsets_by_size(std::size_t r,
                                                        const std::vector<GeneratorMask>& keep) {
  std::vector<std::vector<GeneratorMask>> by_size(r + 1);
  for (GeneratorMask m : keep)
    by_size[static_cast<std::size_t>(std::popcount(m))].push_back(m);
  for (auto& v : by_size)
    std::sort(v.begin(), v.end());
  while (by_size.size() > 1 && by_size.back().empty())
    by_size.pop_back();
  return by_size;
}

FreeComplex simplicial_complex_on(const MonomialIdeal& ideal, const std::vector<GeneratorMask>& faces) {
  const std::size_t r = ideal.num_generators();
  FreeComplex c(MonomialIdeal::zero(ideal.num_vars(), ideal.var_names()), RingKind::polynomial);
  const auto by_size = subsets_by_size(r, faces);
  std::unordered_map<GeneratorMask, std::size_t> index_prev;
  for (std::size_t k = 0; k < by_size.size(); ++k) {
    std::vector<Multidegree> gens;
    std::vector<Column> diff;
    std::vector<std::string> labels;
    std::unordered_map<GeneratorMask, std::size_t> index_here;
    for (GeneratorMask m : by_size[k]) {
      index_here[m] = gens.size();
      gens.push_back(lcm_of_mask(ideal, m));
      labels.push_back(subset_label(m));
      Column col;
      if (k > 0) {
        const auto elems = mask_to_indices(m);
        for (std::size_t pos = 0; pos < elems.size(); ++pos) {
          const GeneratorMask facet = m & ~(GeneratorMask{1} << elems[pos]);
          auto it = index_prev.find(facet);
          if (it == index_prev.end())
            throw InternalError("face set is not closed under removing an element");
          col.push_back({it->second, Coeff(pos % 2 == 0 ? 1 : -1)});
        }
      }
      diff.push_back(std::move(col));
    }
    c.push_module(std::move(gens), std::move(diff), std::move(labels));
    index_prev = std::move(index_here);
  }
  return c;
}

} // namespace

FreeComplex taylor_complex(const MonomialIdeal& ideal) {
  check_subset_limit(ideal);
  const std::size_t r = ideal.num_generators();
  std::vector<GeneratorMask> all(std::size_t{1} << r);
  for (GeneratorMask m = 0; m < all.size(); ++m)
    all[m] = m;
  return simplicial_complex_on(ideal, all);
}

std::vector<GeneratorMask> scarf_faces(const MonomialIdeal& ideal) {
  check_subset_limit(ideal);
  const std::size_t r = ideal.num_generators();
  const GeneratorMask total = GeneratorMask{1} << r;
  std::vector<Multidegree> lcms(total);
  std::map<Multidegree, int> count;
  for (GeneratorMask m = 0; m < total; ++m) {
    if (m == 0) {
      lcms[m] = Multidegree(ideal.num_vars());
    } else {
      const auto low = static_cast<std::size_t>(std::countr_zero(m));
      lcms[m] = lcms[m & (m - 1)].lcm(ideal.generator(low));
    }
    ++count[lcms[m]];
  }
  std::vector<GeneratorMask> faces;
  for (GeneratorMask m = 0; m < total; ++m)
    if (count[lcms[m]] == 1)
      faces.push_back(m);
  std::stable_sort(faces.begin(), faces.end(), [](GeneratorMask a, GeneratorMask b) {
    return std::popcount(a) < std::popcount(b);
  });
  return faces;
}

FreeComplex scarf_complex(const MonomialIdeal& ideal) {
  return simplicial_complex_on(ideal, scarf_faces(ideal));
}

FreeComplex koszul_complex(const MonomialIdeal& ideal, RingKind kind) {
  const std::size_t n = ideal.num_vars();
  if (n > 24)
    throw InputError("Koszul complex supports at most 24 variables");
  MonomialIdeal ring =
      kind == RingKind::quotient ? ideal : MonomialIdeal::zero(n, ideal.var_names());
  FreeComplex c(std::move(ring), kind);
  std::vector<GeneratorMask> all(std::size_t{1} << n);
  for (GeneratorMask m = 0; m < all.size(); ++m)
    all[m] = m;
  const auto by_size = subsets_by_size(n, all);
  std::unordered_map<GeneratorMask, std::size_t> index_prev;
  for (std::size_t k = 0; k < by_size.size(); ++k) {
    std::vector<Multidegree> gens;
    std::vector<Column> diff;
    std::vector<std::string> labels;
    std::unordered_map<GeneratorMask, std::size_t> index_here;
    for (GeneratorMask m : by_size[k]) {
      const auto vars = mask_to_indices(m);
      index_here[m] = gens.size();
      gens.push_back(Multidegree::indicator(n, vars));
      std::string label = "e";
      for (std::size_t v : vars)
        label += (label.size() > 1 ? "^" : "") + ideal.var_names()[v];
      labels.push_back(k == 0 ? "1" : label);
      Column col;
      for (std::size_t pos = 0; pos < vars.size(); ++pos) {
        const GeneratorMask facet = m & ~(GeneratorMask{1} << vars[pos]);
        col.push_back({index_prev.at(facet), Coeff(pos % 2 == 0 ? 1 : -1)});
      }
      diff.push_back(std::move(col));
    }
    c.push_module(std::move(gens), std::move(diff), std::move(labels));
    index_prev = std::move(index_here);
  }
  return c;
}

std::size_t HomologyTable::dim(std::size_t i, const Multidegree& j) const {
  if (i >= dims.size())
    return 0;
  auto it = dims[i].find(j);
  return it == dims[i].end() ? 0 : it->second;
}

std::size_t HomologyTable::total(std::size_t i) const {
  std::size_t t = 0;
  if (i < dims.size())
    for (const auto& [j, d] : dims[i])
      t += d;
  return t;
}

namespace {

/// Homology dimensions of all degrees at one multidegree.
std::vector<std::size_t> homology_at(const FreeComplex& c, const Multidegree& j) {
  return with_field(c.characteristic(), [&](const auto& field) {
    const std::size_t L = c.num_modules();
    std::vector<ComponentBasis> bases;
    bases.reserve(L);
    for (std::size_t i = 0; i < L; ++i)
      bases.push_back(component_basis(c, i, j));
    std::vector<std::size_t> rank(L + 1, 0);
    for (std::size_t i = 1; i < L; ++i) {
      if (bases[i].gens.empty() || bases[i - 1].gens.empty())
        continue;
      auto cols = component_matrix(c, field, i, bases[i], bases[i - 1]);
      rank[i] = rank_of_columns(field, bases[i - 1].gens.size(), cols);
    }
    std::vector<std::size_t> h(L, 0);
    for (std::size_t i = 0; i < L; ++i)
      h[i] = bases[i].gens.size() - rank[i] - rank[i + 1];
    return h;
  });
}

} // namespace

std::size_t homology_dim(const FreeComplex& c, std::size_t i, const Multidegree& j) {
  if (i >= c.num_modules())
    return 0;
  return homology_at(c, j)[i];
}

HomologyTable homology(const FreeComplex& c, const Multidegree& bound, unsigned jobs) {
  if (bound.size() != c.num_vars())
    throw InputError("multidegree bound has the wrong number of variables");
  const Box box(bound);
  HomologyTable table;
  table.dims.resize(c.num_modules());
  std::vector<std::vector<std::size_t>> per_index(box.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t idx = begin; idx < box.size(); idx += step)
      per_index[idx] = homology_at(c, box.at(idx));
  };
  if (jobs <= 1) {
    work(0, 1);
  } else {
    std::vector<std::future<void>> tasks;
    for (unsigned t = 0; t < jobs; ++t)
      tasks.push_back(std::async(std::launch::async, work, t, jobs));
    for (auto& t : tasks)
      t.get();
  }
  for (std::size_t idx = 0; idx < box.size(); ++idx)
    for (std::size_t i = 0; i < per_index[idx].size(); ++i)
      if (per_index[idx][i])
        table.dims[i][box.at(idx)] = per_index[idx][i];
  return table;
}

FreeComplex tensor_with_residue_field(const FreeComplex& c) {
  return c.with_ring(MonomialIdeal::zero(c.num_vars(), c.ring_ideal().var_names()),
                     RingKind::residue_field);
}

namespace {

template <class Field>
FreeComplex minimize_over(const FreeComplex& c, const Field& field) {
  using Element = typename Field::Element;
  using SparseCol = std::map<std::size_t, Element>;
  const std::size_t L = c.num_modules();
  std::vector<std::vector<SparseCol>> d(L);
  std::vector<std::vector<bool>> alive(L);
  for (std::size_t i = 0; i < L; ++i) {
    alive[i].assign(c.rank(i), true);
    d[i].resize(c.rank(i));
    if (i == 0)
      continue;
    for (std::size_t g = 0; g < c.rank(i); ++g)
      for (const auto& e : c.differential(i)[g]) {
        auto v = field.from(e.coeff);
        if (!field.is_zero(v))
          d[i][g][e.row] = v;
      }
  }

  for (std::size_t i = 1; i < L; ++i) {
    const auto& mod = c.module(i);
    const auto& prev = c.module(i - 1);
    for (std::size_t g = 0; g < c.rank(i); ++g) {
      if (!alive[i][g])
        continue;
      // look for a unit entry in column g
      std::size_t h = ComponentBasis::npos;
      for (const auto& [row, v] : d[i][g])
        if (alive[i - 1][row] && prev[row] == mod[g]) {
          h = row;
          break;
        }
      if (h == ComponentBasis::npos)
        continue;
      const Element pivot_inv = field.inv(d[i][g].at(h));
      const SparseCol col_g = d[i][g];
      for (std::size_t g2 = 0; g2 < c.rank(i); ++g2) {
        if (g2 == g || !alive[i][g2])
          continue;
        auto it = d[i][g2].find(h);
        if (it == d[i][g2].end())
          continue;
        const Element f = field.mul(it->second, pivot_inv);
        for (const auto& [row, v] : col_g) {
          Element& target = d[i][g2][row];
          field.submul(target, f, v);
          if (field.is_zero(target))
            d[i][g2].erase(row);
        }
        d[i][g2].erase(h);
      }
      alive[i][g] = false;
      alive[i - 1][h] = false;
      d[i][g].clear();
      if (i + 1 < L)
        for (auto& col : d[i + 1])
          col.erase(g);
      d[i - 1][h].clear();
      // a new unit may have appeared in an earlier column
      g = static_cast<std::size_t>(-1);
    }
  }

  FreeComplex out(c.ring_ideal(), c.kind(), c.characteristic());
  std::vector<std::size_t> prev_index;
  for (std::size_t i = 0; i < L; ++i) {
    std::vector<std::size_t> index(c.rank(i), ComponentBasis::npos);
    std::vector<Multidegree> gens;
    std::vector<Column> diff;
    std::vector<std::string> labels;
    for (std::size_t g = 0; g < c.rank(i); ++g) {
      if (!alive[i][g])
        continue;
      index[g] = gens.size();
      gens.push_back(c.module(i)[g]);
      labels.push_back(c.labels(i)[g]);
      Column col;
      for (const auto& [row, v] : d[i][g])
        if (alive[i - 1][row] && !field.is_zero(v))
          col.push_back({prev_index[row], field.to_coeff(v)});
      diff.push_back(std::move(col));
    }
    if (gens.empty() && i > 0) {
      bool rest_empty = true;
      for (std::size_t k = i; k < L; ++k)
        for (bool a : alive[k])
          rest_empty = rest_empty && !a;
      if (rest_empty)
        break;
    }
    out.push_module(std::move(gens), std::move(diff), std::move(labels));
    prev_index = std::move(index);
  }
  return out;
}

} // namespace

FreeComplex minimize(const FreeComplex& c) {
  return with_field(c.characteristic(), [&](const auto& field) { return minimize_over(c, field); });
}

bool d_squared_is_zero(const FreeComplex& c) {
  return with_field(c.characteristic(), [&](const auto& field) {
    using Element = typename std::decay_t<decltype(field)>::Element;
    for (std::size_t i = 2; i < c.num_modules(); ++i) {
      const auto& mod = c.module(i);
      const auto& target = c.module(i - 2);
      for (std::size_t g = 0; g < c.rank(i); ++g) {
        std::map<std::size_t, Element> acc;
        for (const auto& e1 : c.differential(i)[g])
          for (const auto& e2 : c.differential(i - 1)[e1.row]) {
            const Multidegree mono = mod[g] - target[e2.row];
            if (c.kind() == RingKind::quotient && c.ring_ideal().contains(mono))
              continue;
            if (c.kind() == RingKind::residue_field && !mono.is_zero())
              continue;
            auto [it, inserted] = acc.try_emplace(e2.row, field.zero());
            it->second = field.add(it->second, field.mul(field.from(e1.coeff), field.from(e2.coeff)));
          }
        for (const auto& [row, v] : acc)
          if (!field.is_zero(v))
            return false;
      }
    }
    return true;
  });
}

bool is_minimal(const FreeComplex& c) {
  for (std::size_t i = 1; i < c.num_modules(); ++i)
    for (std::size_t g = 0; g < c.rank(i); ++g)
      for (const auto& e : c.differential(i)[g])
        if (sgn(e.coeff) != 0 && c.module(i)[g] == c.module(i - 1)[e.row])
          return false;
  return true;
}

bool is_taylor_minimal(const MonomialIdeal& ideal) {
  check_subset_limit(ideal);
  const std::size_t r = ideal.num_generators();
  const GeneratorMask total = GeneratorMask{1} << r;
  std::vector<Multidegree> lcms(total);
  std::map<Multidegree, int> seen;
  for (GeneratorMask m = 0; m < total; ++m) {
    lcms[m] = m == 0 ? Multidegree(ideal.num_vars())
                     : lcms[m & (m - 1)].lcm(ideal.generator(static_cast<std::size_t>(std::countr_zero(m))));
    if (++seen[lcms[m]] > 1)
      return false;
  }
  for (GeneratorMask m = 1; m < total; ++m)
    for (std::size_t j : mask_to_indices(m))
      if (lcms[m] == lcms[m & ~(GeneratorMask{1} << j)])
        return false;
  return true;
}

} // namespace monores
