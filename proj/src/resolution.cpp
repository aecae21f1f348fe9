#include "monores/resolution.hpp"

#include "monores/koszul_cycles.hpp"

#include <bit>
#include <set>

namespace monores {

BigradedSeries ResidueFieldResolution::poincare_series() const {
  BigradedSeries p(tmax, bound);
  for (std::size_t i = 0; i < complex.num_modules(); ++i)
    for (const auto& g : complex.module(i))
      p.add(static_cast<int>(i), g, 1);
  return p;
}

std::map<Multidegree, std::size_t> ResidueFieldResolution::betti(std::size_t i) const {
  std::map<Multidegree, std::size_t> out;
  if (i < complex.num_modules())
    for (const auto& g : complex.module(i))
      ++out[g];
  return out;
}

namespace {

template <class Field>
FreeComplex resolve_over(const MonomialIdeal& ideal, int tmax, const Multidegree& bound,
                         const Field& field) {
  using Vec = SparseVector<Field>;
  const std::size_t n = ideal.num_vars();
  FreeComplex c(ideal, RingKind::quotient, field.characteristic());
  c.push_module({Multidegree(n)}, {Column{}});
  const Box box(bound);
  for (int i = 0; i < tmax; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    std::vector<Multidegree> gens;
    std::vector<Column> cols;
    for (std::size_t idx : box.graded_order()) {
      const Multidegree j = box.at(idx);
      const ComponentBasis basis = component_basis(c, ui, j);
      if (basis.gens.empty())
        continue;
      std::vector<Vec> cycles;
      if (i == 0) {
        if (j.is_zero())
          continue;
        cycles.push_back(Vec{{0, field.one()}});
      } else {
        const ComponentBasis lower = component_basis(c, ui - 1, j);
        cycles = kernel_of_columns(field, lower.gens.size(),
                                   component_matrix(c, field, ui, basis, lower));
      }
      if (cycles.empty())
        continue;
      Echelon<Field> span(field, basis.gens.size());
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (!gens[g].divides(j))
          continue;
        Vec v;
        for (const auto& e : cols[g]) {
          const std::size_t pos = basis.position[e.row];
          if (pos != ComponentBasis::npos)
            v.emplace_back(pos, field.from(e.coeff));
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        span.insert(v);
        if (span.rank() == cycles.size())
          break;
      }
      for (const auto& z : cycles) {
        if (span.rank() == cycles.size())
          break;
        if (!span.insert(z))
          continue;
        Column col;
        for (const auto& [pos, e] : z)
          col.push_back({basis.gens[pos], field.to_coeff(e)});
        gens.push_back(j);
        cols.push_back(std::move(col));
      }
    }
    if (gens.empty())
      break;
    c.push_module(std::move(gens), std::move(cols));
  }
  return c;
}

} // namespace

ResidueFieldResolution resolve_residue_field(const MonomialIdeal& ideal, int tmax,
                                             const Multidegree& bound, std::uint64_t characteristic) {
  validate_characteristic(characteristic);
  if (tmax < 0)
    throw InputError("t-degree bound must be non-negative");
  if (bound.size() != ideal.num_vars())
    throw InputError("multidegree bound has the wrong number of variables");
  if (!ideal.lcm_all().divides(bound))
    throw InputError("multidegree bound must dominate the lcm of the generators");
  ResidueFieldResolution res;
  res.ideal = ideal;
  res.tmax = tmax;
  res.bound = bound;
  res.complex = with_field(characteristic, [&](const auto& field) {
    return resolve_over(ideal, tmax, bound, field);
  });
  return res;
}

BigradedSeries poincare_series(const MonomialIdeal& ideal, int tmax, std::uint64_t characteristic) {
  return resolve_residue_field(ideal, tmax, ideal.lcm_all(), characteristic).poincare_series();
}

BigradedSeries poincare_series(const MonomialIdeal& ideal, int tmax, const Multidegree& ybound,
                               std::uint64_t characteristic) {
  return resolve_residue_field(ideal, tmax, ybound, characteristic).poincare_series();
}

Multidegree padded_bound(const MonomialIdeal& ideal) {
  return ideal.lcm_all() + Multidegree(std::vector<Exponent>(ideal.num_vars(), 1));
}

int default_tmax(const MonomialIdeal& ideal) {
  return static_cast<int>(ideal.lcm_all().total_degree()) + 1;
}

BigradedSeries denominator(const MonomialIdeal& ideal, int tmax, std::uint64_t characteristic) {
  const int top = static_cast<int>(ideal.lcm_all().total_degree());
  if (tmax < 0)
    tmax = default_tmax(ideal);
  if (tmax < top)
    throw InputError("t-degree bound " + std::to_string(tmax) + " is below deg m_I = " +
                     std::to_string(top));
  const auto p = poincare_series(ideal, tmax, characteristic);
  auto q = series_divide(BigradedSeries::linear_factors(tmax, ideal.lcm_all()), p);
  for (const auto& [key, c] : q.terms())
    if (key.t > top)
      throw InternalError("denominator has a term above t-degree deg m_I");
  return q;
}

std::size_t koszul_generator_index(const FreeComplex& koszul, std::uint64_t var_mask) {
  const auto d = static_cast<std::size_t>(std::popcount(var_mask));
  const std::size_t idx = koszul_rank_of_mask(var_mask);
  if (d >= koszul.num_modules() || idx >= koszul.rank(d))
    throw InternalError("variable mask outside the Koszul complex");
  return idx;
}

std::uint64_t koszul_generator_mask(const FreeComplex& koszul, std::size_t degree, std::size_t index) {
  return mask_of_indicator(koszul.module(degree).at(index));
}

KoszulChain wedge(const FreeComplex& koszul, const KoszulChain& a, const KoszulChain& b) {
  KoszulChain out;
  out.degree = a.degree + b.degree;
  out.multidegree = a.multidegree + b.multidegree;
  const auto d = static_cast<std::size_t>(out.degree);
  if (d >= koszul.num_modules())
    return out;
  return with_field(koszul.characteristic(), [&](const auto& field) {
    using Element = typename std::decay_t<decltype(field)>::Element;
    std::map<std::size_t, Element> acc;
    const auto& mod_a = koszul.module(static_cast<std::size_t>(a.degree));
    const auto& mod_b = koszul.module(static_cast<std::size_t>(b.degree));
    for (const auto& [ga, ca] : a.terms) {
      const std::uint64_t ma = mask_of_indicator(mod_a[ga]);
      for (const auto& [gb, cb] : b.terms) {
        const std::uint64_t mb = mask_of_indicator(mod_b[gb]);
        const int sign = merge_sign(ma, mb);
        if (sign == 0)
          continue;
        const Multidegree mono = (a.multidegree - mod_a[ga]) + (b.multidegree - mod_b[gb]);
        if (koszul.ring_ideal().contains(mono))
          continue;
        Element v = field.mul(field.from(ca), field.from(cb));
        if (sign < 0)
          v = field.neg(v);
        auto [it, fresh] = acc.try_emplace(koszul_generator_index(koszul, ma | mb), field.zero());
        it->second = field.add(it->second, v);
      }
    }
    for (const auto& [g, v] : acc)
      if (!field.is_zero(v))
        out.terms.emplace_back(g, field.to_coeff(v));
    return out;
  });
}

namespace {

template <class Field>
void fill_algebra(KoszulHomologyAlgebra& alg, const Field& field) {
  using Vec = SparseVector<Field>;
  const FreeComplex& k = alg.koszul;
  const Box box(alg.bound);
  std::map<std::pair<std::size_t, Multidegree>, std::size_t> first_class;
  for (std::size_t i = 1; i < k.num_modules(); ++i)
    for (std::size_t idx : box.graded_order()) {
      const Multidegree j = box.at(idx);
      if (alg.dims.dim(i, j) == 0)
        continue;
      const auto s = koszul_spot(k, field, i, j);
      first_class[{i, j}] = alg.classes.size();
      for (const auto& z : s.representatives)
        alg.classes.push_back(chain_from(s, field, i, j, z));
    }

  for (std::size_t a = 0; a < alg.classes.size(); ++a)
    for (std::size_t b = a; b < alg.classes.size(); ++b) {
      const KoszulChain prod = wedge(k, alg.classes[a], alg.classes[b]);
      if (prod.terms.empty())
        continue;
      const auto deg = static_cast<std::size_t>(prod.degree);
      const auto s = koszul_spot(k, field, deg, prod.multidegree);
      Echelon<Field> ech(field, s.basis.gens.size(), s.representatives.size());
      for (const auto& bd : s.boundaries)
        ech.insert(bd);
      for (std::size_t r = 0; r < s.representatives.size(); ++r)
        ech.insert(s.representatives[r], Vec{{r, field.one()}});
      Vec v;
      for (const auto& [g, c] : prod.terms)
        v.emplace_back(s.basis.position.at(g), field.from(c));
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      const auto red = ech.reduce(v);
      if (!red.remainder.empty())
        throw InternalError("product of Koszul cycles is not a cycle");
      if (red.used_tags.empty())
        continue;
      std::size_t base;
      auto it = first_class.find({deg, prod.multidegree});
      if (it != first_class.end()) {
        base = it->second;
      } else {
        base = alg.classes.size();
        first_class[{deg, prod.multidegree}] = base;
        for (const auto& z : s.representatives)
          alg.classes.push_back(chain_from(s, field, deg, prod.multidegree, z));
      }
      auto& entry = alg.products[{a, b}];
      for (const auto& [r, e] : red.used_tags)
        entry.emplace_back(base + r, field.to_coeff(e));
    }
}

} // namespace

KoszulHomologyAlgebra koszul_homology_algebra(const MonomialIdeal& ideal, const Multidegree& bound,
                                              std::uint64_t characteristic) {
  validate_characteristic(characteristic);
  if (bound.size() != ideal.num_vars())
    throw InputError("multidegree bound has the wrong number of variables");
  KoszulHomologyAlgebra alg;
  alg.ideal = ideal;
  alg.bound = bound;
  alg.characteristic = characteristic;
  alg.koszul = koszul_complex(ideal, RingKind::quotient).with_characteristic(characteristic);
  alg.dims = homology(alg.koszul, bound);
  with_field(characteristic, [&](const auto& field) { fill_algebra(alg, field); });
  return alg;
}

KoszulHomologyAlgebra koszul_homology_algebra(const MonomialIdeal& ideal, std::uint64_t characteristic) {
  return koszul_homology_algebra(ideal, ideal.lcm_all(), characteristic);
}

namespace {

BigradedSeries golod_from_dims(const HomologyTable& dims, int tmax, const Multidegree& ybound) {
  auto g = BigradedSeries::one(tmax, ybound);
  for (std::size_t i = 1; i < dims.dims.size(); ++i)
    for (const auto& [j, d] : dims.dims[i])
      g.add(static_cast<int>(i) + 1, j, -mpz_class(static_cast<unsigned long>(d)));
  return g;
}

} // namespace

BigradedSeries golod_denominator(const MonomialIdeal& ideal, int tmax, std::uint64_t characteristic) {
  validate_characteristic(characteristic);
  if (tmax < 0)
    tmax = default_tmax(ideal);
  const auto k = koszul_complex(ideal, RingKind::quotient).with_characteristic(characteristic);
  return golod_from_dims(homology(k, ideal.lcm_all()), tmax, ideal.lcm_all());
}

BigradedSeries golod_denominator(const KoszulHomologyAlgebra& algebra, int tmax) {
  return golod_from_dims(algebra.dims, tmax, algebra.ideal.lcm_all());
}

GolodCertificate golod_certificate(const MonomialIdeal& ideal, int tmax, std::uint64_t characteristic) {
  if (tmax < 0)
    throw InputError("t-degree bound must be non-negative");
  // Variables that are themselves generators do not count toward the
  // embedding dimension; drop them before forming the bound.
  std::vector<bool> linear(ideal.num_vars(), false);
  for (const auto& g : ideal.generators())
    if (g.total_degree() == 1)
      for (std::size_t v = 0; v < g.size(); ++v)
        linear[v] = linear[v] || g[v] == 1;
  std::vector<std::size_t> kept;
  for (std::size_t v = 0; v < ideal.num_vars(); ++v)
    if (!linear[v])
      kept.push_back(v);
  std::vector<Multidegree> reduced;
  for (const auto& g : ideal.generators()) {
    if (g.total_degree() == 1)
      continue;
    Multidegree r(kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k)
      r[k] = g[kept[k]];
    reduced.push_back(r);
  }
  std::vector<std::string> names;
  for (std::size_t v : kept)
    names.push_back(ideal.var_names()[v]);
  const auto small = MonomialIdeal::minimalize(reduced, kept.size(), names);
  const auto small_dims =
      homology(koszul_complex(small, RingKind::quotient).with_characteristic(characteristic),
               small.lcm_all());

  GolodCertificate cert;
  cert.tmax = tmax;
  cert.bound = ideal.lcm_all();
  cert.poincare = poincare_series(ideal, tmax, characteristic);
  auto g = BigradedSeries::one(tmax, cert.bound);
  auto numerator = BigradedSeries::one(tmax, cert.bound);
  for (std::size_t v : kept) {
    auto f = BigradedSeries::one(tmax, cert.bound);
    f.add(1, Multidegree::unit(ideal.num_vars(), v), 1);
    numerator = series_mul(numerator, f);
  }
  for (std::size_t i = 1; i < small_dims.dims.size(); ++i)
    for (const auto& [j, d] : small_dims.dims[i]) {
      Multidegree full(ideal.num_vars());
      for (std::size_t k = 0; k < kept.size(); ++k)
        full[kept[k]] = j[k];
      g.add(static_cast<int>(i) + 1, full, -mpz_class(static_cast<unsigned long>(d)));
    }
  cert.golod_bound = series_divide(numerator, g);
  cert.golod = cert.poincare.same_terms(cert.golod_bound);
  return cert;
}

bool is_golod_truncated(const MonomialIdeal& ideal, int tmax, std::uint64_t characteristic) {
  return golod_certificate(ideal, tmax, characteristic).golod;
}

bool is_golod_generic(const MonomialIdeal& ideal) {
  if (!is_generic(ideal))
    throw InputError("ideal is not generic");
  const auto faces = scarf_faces(ideal);
  const std::set<GeneratorMask> face_set(faces.begin(), faces.end());
  for (GeneratorMask a : faces)
    for (GeneratorMask b : faces) {
      if (a == 0 || b == 0 || a > b || !face_set.count(a | b))
        continue;
      if (lcm_of_mask(ideal, a) + lcm_of_mask(ideal, b) == lcm_of_mask(ideal, a | b))
        return false;
    }
  return true;
}

} // namespace monores
