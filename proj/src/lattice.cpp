#include "monores/lattice.hpp"

#include <algorithm>
#include <bit>

namespace monores {

LcmLattice::LcmLattice(MonomialIdeal ideal) : ideal_(std::move(ideal)) {
  const std::size_t r = ideal_.num_generators();
  if (r > kMaxSubsetGenerators)
    throw InputError("LCM lattice supports at most " + std::to_string(kMaxSubsetGenerators) +
                     " generators");
  const GeneratorMask total = GeneratorMask{1} << r;
  std::vector<Multidegree> lcms(total);
  lcms[0] = Multidegree(ideal_.num_vars());
  for (GeneratorMask m = 1; m < total; ++m)
    lcms[m] = lcms[m & (m - 1)].lcm(ideal_.generator(static_cast<std::size_t>(std::countr_zero(m))));
  elements_ = lcms;
  std::sort(elements_.begin(), elements_.end(), [](const Multidegree& a, const Multidegree& b) {
    const auto da = a.total_degree(), db = b.total_degree();
    return da != db ? da < db : a < b;
  });
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  of_mask_.resize(total);
  for (GeneratorMask m = 0; m < total; ++m)
    of_mask_[m] = index_of(lcms[m]);
  for (std::size_t i = 0; i < r; ++i)
    atoms_.push_back(of_mask_[GeneratorMask{1} << i]);
}

std::size_t LcmLattice::index_of(const Multidegree& m) const {
  auto it = std::find(elements_.begin(), elements_.end(), m);
  return it == elements_.end() ? npos : static_cast<std::size_t>(it - elements_.begin());
}

bool LcmLattice::contains(const Multidegree& m) const { return index_of(m) != npos; }

std::size_t LcmLattice::join(std::size_t a, std::size_t b) const {
  return index_of(elements_.at(a).lcm(elements_.at(b)));
}

bool GcdGraph::adjacent(std::size_t a, std::size_t b) const {
  if (a > b)
    std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

GcdGraph build_gcd_graph(const LcmLattice& lattice) {
  GcdGraph g;
  g.num_vertices = lattice.size();
  const auto& el = lattice.elements();
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = a + 1; b < el.size(); ++b)
      if (!el[a].is_zero() && !el[b].is_zero() && el[a].coprime_to(el[b]))
        g.edges.emplace_back(a, b);
  return g;
}

Multidegree LatticeMap::apply(const Multidegree& m) const {
  auto it = std::find(source_elements.begin(), source_elements.end(), m);
  if (it == source_elements.end())
    throw ContractError("multidegree " + m.to_y_string() + " is not in the source LCM lattice");
  return target_elements[element_map[static_cast<std::size_t>(it - source_elements.begin())]];
}

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

struct Search {
  const LcmLattice& src;
  const LcmLattice& tgt;
  std::size_t r;
  std::vector<std::size_t> perm;
  std::vector<bool> used;
  std::vector<std::size_t> forward;
  std::vector<std::size_t> backward;
  std::vector<std::vector<std::size_t>> found;

  /// Extends the element correspondence to all subsets that contain atom k
  /// and otherwise only earlier atoms. Returns false on a conflict; the
  /// recorded pairs are appended to `log` so they can be undone.
  bool extend(std::size_t k, std::vector<std::size_t>& log) {
    const GeneratorMask low = (GeneratorMask{1} << k) - 1;
    for (GeneratorMask rest = 0;; rest = (rest - low) & low) {
      const GeneratorMask a = rest | (GeneratorMask{1} << k);
      GeneratorMask b = 0;
      for (GeneratorMask bits = a; bits; bits &= bits - 1)
        b |= GeneratorMask{1} << perm[static_cast<std::size_t>(std::countr_zero(bits))];
      const std::size_t u = src.element_of_mask()[a];
      const std::size_t v = tgt.element_of_mask()[b];
      if (forward[u] == kUnset && backward[v] == kUnset) {
        forward[u] = v;
        backward[v] = u;
        log.push_back(u);
      } else if (forward[u] != v || backward[v] != u) {
        return false;
      }
      if (rest == low)
        break;
    }
    return true;
  }

  void run(std::size_t k) {
    if (k == r) {
      found.push_back(perm);
      return;
    }
    const Multidegree& atom = src.elements()[src.atoms()[k]];
    for (std::size_t c = 0; c < r; ++c) {
      if (used[c])
        continue;
      // atoms can only match atoms with as many elements below them
      const Multidegree& image = tgt.elements()[tgt.atoms()[c]];
      if (count_below(src, atom) != count_below(tgt, image))
        continue;
      perm[k] = c;
      used[c] = true;
      std::vector<std::size_t> log;
      if (extend(k, log))
        run(k + 1);
      for (std::size_t u : log) {
        backward[forward[u]] = kUnset;
        forward[u] = kUnset;
      }
      used[c] = false;
    }
  }

  static std::size_t count_below(const LcmLattice& l, const Multidegree& m) {
    std::size_t n = 0;
    for (const auto& e : l.elements())
      n += e.divides(m) ? 1 : 0;
    return n;
  }
};

LatticeMap make_map(const LcmLattice& src, const LcmLattice& tgt, const std::vector<std::size_t>& perm) {
  LatticeMap map;
  map.atom_map = perm;
  map.source_elements = src.elements();
  map.target_elements = tgt.elements();
  map.element_map.assign(src.size(), kUnset);
  const GeneratorMask total = GeneratorMask{1} << perm.size();
  for (GeneratorMask a = 0; a < total; ++a) {
    GeneratorMask b = 0;
    for (GeneratorMask bits = a; bits; bits &= bits - 1)
      b |= GeneratorMask{1} << perm[static_cast<std::size_t>(std::countr_zero(bits))];
    const std::size_t u = src.element_of_mask()[a];
    const std::size_t v = tgt.element_of_mask()[b];
    if (map.element_map[u] != kUnset && map.element_map[u] != v)
      throw InternalError("generator bijection does not induce a map of lattices");
    map.element_map[u] = v;
  }
  const GcdGraph gs = build_gcd_graph(src);
  const GcdGraph gt = build_gcd_graph(tgt);
  map.gcd_preserving = gs.edges.size() == gt.edges.size();
  for (const auto& [a, b] : gs.edges)
    map.gcd_preserving = map.gcd_preserving && gt.adjacent(map.element_map[a], map.element_map[b]);
  return map;
}

} // namespace

std::vector<LatticeMap> find_lattice_isomorphisms(const MonomialIdeal& source, const MonomialIdeal& target) {
  const LcmLattice src(source);
  const LcmLattice tgt(target);
  std::vector<LatticeMap> out;
  if (source.num_generators() != target.num_generators() || src.size() != tgt.size())
    return out;
  const std::size_t r = source.num_generators();
  Search s{src, tgt, r, std::vector<std::size_t>(r, 0), std::vector<bool>(r, false),
           std::vector<std::size_t>(src.size(), kUnset), std::vector<std::size_t>(tgt.size(), kUnset), {}};
  // the bottom always corresponds to the bottom
  s.forward[0] = 0;
  s.backward[0] = 0;
  s.run(0);
  for (const auto& perm : s.found)
    out.push_back(make_map(src, tgt, perm));
  return out;
}

LatticeMap polarization_lattice_map(const Polarization& pol) {
  const LcmLattice src(pol.polarized());
  const LcmLattice tgt(pol.source());
  std::vector<std::size_t> identity(pol.source().num_generators());
  for (std::size_t i = 0; i < identity.size(); ++i)
    identity[i] = i;
  return make_map(src, tgt, identity);
}

BigradedSeries transport_denominator(const BigradedSeries& q, const LatticeMap& map) {
  if (map.source_elements.empty())
    throw InputError("lattice map is empty");
  if (q.num_vars() != map.source_elements.front().size())
    throw InputError("series and lattice map have different numbers of variables");
  BigradedSeries out(q.tmax(), map.target_elements.back());
  for (const auto& [key, c] : q.terms())
    out.add(key.t, map.apply(key.y), c);
  return out;
}

} // namespace monores
