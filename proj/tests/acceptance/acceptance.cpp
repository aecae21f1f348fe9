// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fail.
#include "monores/eagon.hpp"
#include "monores/io.hpp"
#include "monores/lattice.hpp"
#include "monores/resolution.hpp"

#include "../support/oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace monores;

namespace {

MonomialIdeal ideal(std::vector<Multidegree> g, std::size_t n) { return MonomialIdeal::minimalize(std::move(g), n, {}); }

std::string data(const std::string& name) { return std::string(MONORES_DATA_DIR) + "/" + name; }

struct Outcome {
  bool pass;
  std::string detail;
};

/// Named examples plus seeded random ideals with generators of degree >= 2.
std::vector<MonomialIdeal> corpus() {
  std::vector<MonomialIdeal> c{
      ideal({Multidegree{2, 0, 0}, Multidegree{0, 2, 1}}, 3),
      ideal({Multidegree{1, 2, 0}, Multidegree{1, 0, 2}}, 3),
      ideal({Multidegree{3, 0}, Multidegree{1, 1}, Multidegree{0, 2}}, 2),
      ideal({Multidegree{2, 0}, Multidegree{1, 1}, Multidegree{0, 2}}, 2),
      ideal({Multidegree{2, 0}, Multidegree{0, 2}}, 2),
      ideal({Multidegree{2, 1, 0}, Multidegree{0, 2, 1}, Multidegree{1, 0, 2}}, 3),
      ideal({Multidegree{1, 1, 0}, Multidegree{0, 1, 1}, Multidegree{1, 0, 1}}, 3),
      ideal({Multidegree{1, 1, 0, 0}, Multidegree{0, 0, 1, 1}}, 4),
      ideal({Multidegree{2, 0, 0, 0}, Multidegree{1, 1, 0, 0}, Multidegree{0, 1, 1, 0}, Multidegree{0, 0, 1, 1}}, 4),
      ideal({Multidegree{3}}, 1),
  };
  std::mt19937_64 rng(20261019);
  for (int i = 0; i < 40; ++i)
    c.push_back(oracle::random_ideal(rng, 4, 4, 3, 2));
  return c;
}

Outcome closing_prime() {
  const auto q = denominator(load_ideal(data("closing_I_prime.json")), 5);
  const std::string expected = "1 - t^2*(y1*y2^2 + y1*y3^2) - t^3*y1*y2^2*y3^2";
  return {q.to_string() == expected, q.to_string()};
}

Outcome closing_ci() {
  const auto I = load_ideal(data("closing_I.json"));
  const auto q = denominator(I);
  auto f1 = BigradedSeries::one(q.tmax(), q.ybound());
  f1.add(2, Multidegree{2, 0, 0}, -1);
  auto f2 = BigradedSeries::one(q.tmax(), q.ybound());
  f2.add(2, Multidegree{0, 2, 1}, -1);
  return {q.same_terms(series_mul(f1, f2)), q.to_string()};
}

Outcome closing_lattice() {
  const auto I = load_ideal(data("closing_I.json"));
  const auto Ip = load_ideal(data("closing_I_prime.json"));
  const auto maps = find_lattice_isomorphisms(I, Ip);
  std::size_t gcd = 0, equal = 0;
  const auto q = denominator(I), qp = denominator(Ip);
  for (const auto& m : maps) {
    gcd += m.gcd_preserving ? 1 : 0;
    equal += transport_denominator(q, m).same_terms(qp) ? 1 : 0;
  }
  std::ostringstream s;
  s << maps.size() << " isomorphisms, " << gcd << " gcd-preserving, " << equal << " transport to Q'";
  return {!maps.empty() && gcd == 0 && equal == 0, s.str()};
}

Outcome lcm_property() {
  std::mt19937_64 rng(4);
  int failures = 0, n = 0;
  for (; n < 250; ++n) {
    const auto I = oracle::random_ideal(rng, 4, 4, 3, 1);
    if (!verify_lcm_coefficients(denominator(I), I))
      ++failures;
  }
  return {failures == 0, std::to_string(n) + " ideals, " + std::to_string(failures) + " failures"};
}

Outcome golod_consistency(const std::vector<MonomialIdeal>& c) {
  int certified = 0, failures = 0;
  for (const auto& I : c) {
    const int tmax = static_cast<int>(I.lcm_all().total_degree()) + 2;
    if (!is_golod_truncated(I, tmax))
      continue;
    ++certified;
    const auto q = denominator(I, tmax);
    if (!q.same_terms(golod_denominator(I, tmax)) || !terms_within_candidates(q, candidate_terms(I)))
      ++failures;
  }
  return {certified > 0 && failures == 0,
          std::to_string(certified) + " certified, " + std::to_string(failures) + " failures"};
}

Outcome generic_golod(const std::vector<MonomialIdeal>& c) {
  int generic = 0, golod = 0, disagreements = 0;
  for (const auto& I : c) {
    if (!is_generic(I))
      continue;
    ++generic;
    const bool truncated = is_golod_truncated(I, static_cast<int>(I.lcm_all().total_degree()) + 2);
    golod += truncated ? 1 : 0;
    if (is_golod_generic(I) != truncated)
      ++disagreements;
  }
  return {generic > 0 && disagreements == 0, std::to_string(generic) + " generic (" + std::to_string(golod) +
                                                  " Golod), " + std::to_string(disagreements) + " disagreements"};
}

Outcome eagon() {
  const int imax = 6;
  bool ok = true;
  std::ostringstream s;
  for (const auto& I : {ideal({Multidegree{3, 0}, Multidegree{1, 1}, Multidegree{0, 2}}, 2),
                        ideal({Multidegree{2, 0}, Multidegree{1, 1}, Multidegree{0, 2}}, 2)}) {
    const auto res = eagon_resolution(I, imax);
    const auto bound = default_eagon_bound(I, imax);
    const auto mono = oracle::to_mono(bound);
    bool exact = true;
    for (const auto& [key, d] : oracle::complex_homology(res.complex, mono))
      if (key.first >= 1 && key.first <= 5 && d != 0)
        exact = false;
    const auto ranks = res.complex.ranks();
    const auto formula = eagon_rank_formula(I, 3);
    const bool ranks_ok = std::equal(formula.begin(), formula.end(), ranks.begin()) &&
                          formula == std::vector<std::size_t>{1, 2, 4, 8};
    const bool this_ok = d_squared_is_zero(res.complex) && oracle::complex_d_squared_zero(res.complex, mono) &&
                         exact && ranks_ok && check_eagon(res, bound).ok();
    ok = ok && this_ok;
    s << I.to_string() << (this_ok ? " ok" : " bad") << "; ";
  }
  return {ok, s.str()};
}

Outcome deviation_round_trip(const std::vector<MonomialIdeal>& c) {
  int failures = 0;
  for (const auto& I : c) {
    const auto p = poincare_series(I, 6, padded_bound(I));
    const auto eps = deviations(p, 6);
    bool ok = series_from_deviations(eps, 6, p.ybound()).same_terms(p);
    const std::size_t n = I.num_vars();
    for (const auto& [key, e] : eps) {
      if (key.n == 1) {
        ok = ok && key.j.total_degree() == 1 && e == 1;
      } else if (key.n == 2) {
        long gens = 0;
        for (const auto& g : I.generators())
          gens += g == key.j ? 1 : 0;
        ok = ok && e == gens;
      }
    }
    std::size_t units = 0, seconds = 0;
    for (const auto& [key, e] : eps) {
      units += key.n == 1 ? 1 : 0;
      seconds += key.n == 2 ? 1 : 0;
    }
    ok = ok && units == n && seconds == I.num_generators();
    failures += ok ? 0 : 1;
  }
  return {failures == 0, std::to_string(c.size()) + " ideals, " + std::to_string(failures) + " failures"};
}

Outcome polarization(const std::vector<MonomialIdeal>& c) {
  int failures = 0;
  for (const auto& I : c) {
    const Polarization pol(I);
    const auto moved = transport_denominator(denominator(pol.polarized()), polarization_lattice_map(pol));
    failures += moved.same_terms(denominator(I)) ? 0 : 1;
  }
  return {failures == 0, std::to_string(c.size()) + " ideals, " + std::to_string(failures) + " failures"};
}

Outcome homology_oracle() {
  std::mt19937_64 rng(10);
  int instances = 0, failures = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto I = oracle::random_ideal(rng, 5, 4, 2, 1);
    const auto gens = oracle::gens_of(I);
    const auto bound = oracle::to_mono(I.lcm_all());
    const std::size_t n = I.num_vars();
    const auto& m = I.lcm_all();
    const auto t = taylor_complex(I), s = scarf_complex(I);
    const auto kr = koszul_complex(I, RingKind::quotient), ks = koszul_complex(I, RingKind::polynomial);
    bool ok = oracle::to_dims(homology(t, m)) == oracle::simplicial_homology(gens, oracle::all_subsets(gens.size()), bound);
    ok = ok && oracle::to_dims(homology(t, m)) == oracle::complex_homology(t, bound);
    ok = ok && oracle::to_dims(homology(s, m)) == oracle::simplicial_homology(gens, oracle::scarf_subsets(gens, n), bound);
    ok = ok && oracle::to_dims(homology(s, m)) == oracle::complex_homology(s, bound);
    ok = ok && oracle::to_dims(homology(kr, m)) == oracle::koszul_homology(gens, bound, true);
    ok = ok && oracle::to_dims(homology(ks, m)) == oracle::koszul_homology(gens, bound, false);
    ok = ok && oracle::to_dims(homology(kr, m)) == oracle::complex_homology(kr, bound);
    ++instances;
    failures += ok ? 0 : 1;
  }
  return {failures == 0, std::to_string(instances) + " instances, " + std::to_string(failures) + " failures"};
}

} // namespace

int main() {
  const auto c = corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Q of (x1x2^2, x1x3^2)", closing_prime},
      {"Q of (x1^2, x2^2x3) is the complete-intersection product", closing_ci},
      {"(x1^2, x2^2x3) vs (x1x2^2, x1x3^2): lattice isomorphic, not GCD isomorphic, Q not transported", closing_lattice},
      {"Q multidegrees lie in the lcm lattice", lcm_property},
      {"Golod ideals: Q equals the Koszul-homology denominator", [&] { return golod_consistency(c); }},
      {"generic ideals: combinatorial and truncated Golod tests agree", [&] { return generic_golod(c); }},
      {"Eagon resolutions of (x^3,xy,y^2) and (x^2,xy,y^2)", eagon},
      {"deviations round trip and low deviations", [&] { return deviation_round_trip(c); }},
      {"polarization transports Q", [&] { return polarization(c); }},
      {"Taylor, Scarf, Koszul homology against dense oracle", homology_oracle},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << " (" << o.detail << ", "
              << secs << "s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
