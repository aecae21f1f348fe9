#include "monores/lattice.hpp"
#include "monores/resolution.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace monores;

namespace {

MonomialIdeal ideal(std::vector<Multidegree> g, std::size_t n) { return MonomialIdeal::minimalize(std::move(g), n, {}); }

/// Generator permutations whose induced map on subset lcms is a well defined bijection.
std::vector<std::vector<std::size_t>> brute_force_isomorphisms(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<std::vector<std::size_t>> out;
  if (a.num_generators() != b.num_generators())
    return out;
  const auto ga = oracle::gens_of(a), gb = oracle::gens_of(b);
  std::vector<std::size_t> perm(ga.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::map<oracle::Mono, oracle::Mono> fwd, back;
    bool ok = true;
    for (std::uint64_t m : oracle::all_subsets(ga.size())) {
      std::uint64_t pm = 0;
      for (std::size_t i = 0; i < ga.size(); ++i)
        if (m >> i & 1)
          pm |= std::uint64_t{1} << perm[i];
      const auto u = oracle::lcm_of(ga, m, a.num_vars()), v = oracle::lcm_of(gb, pm, b.num_vars());
      auto [f, fnew] = fwd.emplace(u, v);
      auto [r, rnew] = back.emplace(v, u);
      ok = ok && f->second == v && r->second == u;
    }
    if (ok)
      out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

} // namespace

TEST_CASE("lcm lattices") {
  const LcmLattice L(ideal({Multidegree{2, 0, 0}, Multidegree{0, 2, 1}}, 3));
  CHECK(L.elements() == std::vector<Multidegree>{Multidegree{0, 0, 0}, Multidegree{2, 0, 0}, Multidegree{0, 2, 1}, Multidegree{2, 2, 1}});
  CHECK(L.join(1, 2) == L.top());
  CHECK(LcmLattice(MonomialIdeal::zero(2)).size() == 1);
}

TEST_CASE("gcd graphs") {
  const LcmLattice L(ideal({Multidegree{2, 0, 0}, Multidegree{0, 2, 1}}, 3));
  const auto g = build_gcd_graph(L);
  CHECK(g.edges.size() == 1);
  CHECK(g.adjacent(L.atoms()[0], L.atoms()[1]));
  CHECK(build_gcd_graph(LcmLattice(ideal({Multidegree{1, 2, 0}, Multidegree{1, 0, 2}}, 3))).edges.empty());
  CHECK(build_gcd_graph(LcmLattice(ideal({Multidegree{1, 1}}, 2))).edges.empty());
}

TEST_CASE("lattice-isomorphic pair that is not GCD-isomorphic") {
  const auto I = ideal({Multidegree{2, 0, 0}, Multidegree{0, 2, 1}}, 3);
  const auto Ip = ideal({Multidegree{1, 2, 0}, Multidegree{1, 0, 2}}, 3);
  const auto maps = find_lattice_isomorphisms(I, Ip);
  CHECK(maps.size() == 2);
  for (const auto& m : maps) {
    CHECK_FALSE(m.gcd_preserving);
    CHECK_FALSE(transport_denominator(denominator(I, 5), m).same_terms(denominator(Ip, 5)));
  }
  const auto self = find_lattice_isomorphisms(I, I);
  CHECK(std::any_of(self.begin(), self.end(), [](const auto& m) { return m.atom_map == std::vector<std::size_t>{0, 1} && m.gcd_preserving; }));
}

TEST_CASE("transport of single terms and contract errors") {
  const auto I = ideal({Multidegree{2, 0, 0}, Multidegree{0, 2, 1}}, 3);
  const auto Ip = ideal({Multidegree{1, 2, 0}, Multidegree{1, 0, 2}}, 3);
  const auto m = find_lattice_isomorphisms(I, Ip).front();
  auto q = BigradedSeries::one(4, I.lcm_all());
  q.add(2, I.generator(0), -1);
  const auto moved = transport_denominator(q, m);
  CHECK(moved.coeff(2, Ip.generator(m.atom_map[0])) == -1);
  CHECK(transport_denominator(BigradedSeries::one(4, I.lcm_all()), m).same_terms(BigradedSeries::one(4, Ip.lcm_all())));
  q.add(3, Multidegree{1, 0, 0}, 1);
  CHECK_THROWS_AS(transport_denominator(q, m), ContractError);
}

TEST_CASE("isomorphism search agrees with brute force and preserves joins") {
  std::mt19937_64 rng(17);
  int found = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = oracle::random_ideal(rng, 3, 4, 2, 1);
    auto b = oracle::random_ideal(rng, 3, 4, 2, 1);
    if (trial % 3 == 0)
      b = Polarization(a).polarized();
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    const auto maps = find_lattice_isomorphisms(a, b);
    std::vector<std::vector<std::size_t>> perms;
    for (const auto& m : maps)
      perms.push_back(m.atom_map);
    CHECK(perms == brute_force_isomorphisms(a, b));
    const LcmLattice la(a), lb(b);
    for (const auto& m : maps)
      for (std::size_t u = 0; u < la.size(); ++u)
        for (std::size_t v = 0; v < la.size(); ++v)
          CHECK(m.element_map[la.join(u, v)] == lb.join(m.element_map[u], m.element_map[v]));
    found += maps.empty() ? 0 : 1;
  }
  CHECK(found >= 20);
}

TEST_CASE("polarization map") {
  const auto I = ideal({Multidegree{3, 0}, Multidegree{1, 1}, Multidegree{0, 2}}, 2);
  const Polarization pol(I);
  const auto m = polarization_lattice_map(pol);
  CHECK(m.gcd_preserving);
  for (const auto& z : m.source_elements)
    CHECK(m.apply(z) == pol.lambda_inverse(z));
  const auto maps = find_lattice_isomorphisms(pol.polarized(), I);
  CHECK(std::any_of(maps.begin(), maps.end(), [](const auto& x) { return x.atom_map == std::vector<std::size_t>{0, 1, 2} && x.gcd_preserving; }));
}
