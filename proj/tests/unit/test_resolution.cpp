#include "monores/resolution.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

using namespace monores;

namespace {

MonomialIdeal ideal(std::vector<Multidegree> g, std::size_t n) { return MonomialIdeal::minimalize(std::move(g), n, {}); }

} // namespace

TEST_CASE("residue field over a polynomial ring is resolved by the Koszul complex") {
  const auto I = MonomialIdeal::zero(2);
  const auto res = resolve_residue_field(I, 4, Multidegree{1, 1});
  CHECK(res.complex.ranks() == std::vector<std::size_t>{1, 2, 1});
  CHECK(res.betti(2) == std::map<Multidegree, std::size_t>{{Multidegree{1, 1}, 1}});
  CHECK(denominator(I).to_string() == "1");
}

TEST_CASE("k[x]/(x^2) has the periodic resolution") {
  const auto I = ideal({Multidegree{2}}, 1);
  const int tmax = 7;
  const auto res = resolve_residue_field(I, tmax, Multidegree{8});
  for (int i = 0; i <= tmax; ++i) {
    // Tor_i sits in multidegree i (odd: (i+1)/2 + ... ) = ceil(i/2) + floor(i/2)... i.e. i
    const auto b = res.betti(static_cast<std::size_t>(i));
    REQUIRE(b.size() == 1);
    CHECK(b.begin()->first == Multidegree{i});
  }
  CHECK(is_minimal(res.complex));
  CHECK(d_squared_is_zero(res.complex));
  const auto expected = oracle::multiply(
      oracle::linear_factors(tmax, {8}),
      oracle::geometric({{{2, {2}}, 1}}, tmax, {8}), tmax, {8});
  CHECK(oracle::from_library(res.poincare_series()) == expected);
}

TEST_CASE("bound must dominate m_I") {
  const auto I = ideal({Multidegree{2, 0}, Multidegree{0, 3}}, 2);
  CHECK_THROWS_AS(resolve_residue_field(I, 3, Multidegree{2, 2}), InputError);
  CHECK_THROWS_AS(denominator(I, 3), InputError);
}

TEST_CASE("denominators of two-generator ideals") {
  const auto Ip = ideal({Multidegree{1, 2, 0}, Multidegree{1, 0, 2}}, 3);
  CHECK(denominator(Ip, 5).to_string() == "1 - t^2*(y1*y2^2 + y1*y3^2) - t^3*y1*y2^2*y3^2");
  const auto I = ideal({Multidegree{2, 0, 0}, Multidegree{0, 2, 1}}, 3);
  CHECK(denominator(I).to_string() == "1 - t^2*(y1^2 + y2^2*y3) + t^4*y1^2*y2^2*y3");
  // P_R of I' to t^4 against prod(1+ty)/Q with the published Q
  const oracle::Mono m{1, 2, 2};
  const auto p = oracle::multiply(oracle::linear_factors(4, m),
                                  oracle::geometric({{{2, {1, 2, 0}}, 1}, {{2, {1, 0, 2}}, 1}, {{3, {1, 2, 2}}, 1}}, 4, m), 4, m);
  CHECK(oracle::from_library(poincare_series(Ip, 4)) == p);
}

TEST_CASE("resolution is exact and minimal on random ideals") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    const auto I = oracle::random_ideal(rng, 3, 3, 2, 2);
    CAPTURE(I.to_string());
    const int tmax = 4;
    const auto res = resolve_residue_field(I, tmax, I.lcm_all());
    CHECK(is_minimal(res.complex));
    CHECK(oracle::complex_d_squared_zero(res.complex, oracle::to_mono(I.lcm_all())));
    const auto h = oracle::complex_homology(res.complex, oracle::to_mono(I.lcm_all()));
    oracle::Dims expected{{{0, oracle::Mono(I.num_vars(), 0)}, 1}};
    oracle::Dims below_top;
    for (const auto& [key, d] : h)
      if (key.first + 1 < res.complex.num_modules())
        below_top[key] = d;
    CHECK(below_top == expected);
  }
}

TEST_CASE("koszul homology algebra") {
  const auto Ip = ideal({Multidegree{1, 2, 0}, Multidegree{1, 0, 2}}, 3);
  const auto alg = koszul_homology_algebra(Ip);
  CHECK(alg.dims.dim(1, Multidegree{1, 2, 0}) == 1);
  CHECK(alg.dims.dim(1, Multidegree{1, 0, 2}) == 1);
  CHECK(alg.dims.dim(2, Multidegree{1, 2, 2}) == 1);
  CHECK(alg.classes.size() == 3);
  CHECK(alg.products_vanish());

  const auto xy = ideal({Multidegree{1, 0}, Multidegree{0, 1}}, 2);
  const auto ext = koszul_homology_algebra(xy);
  CHECK(ext.classes.size() == 3);
  CHECK_FALSE(ext.products_vanish());

  CHECK(koszul_homology_algebra(MonomialIdeal::zero(2)).classes.empty());
}

TEST_CASE("golod denominators and certificates") {
  const auto Ip = ideal({Multidegree{1, 2, 0}, Multidegree{1, 0, 2}}, 3);
  CHECK(golod_denominator(Ip).to_string() == "1 - t^2*(y1*y2^2 + y1*y3^2) - t^3*y1*y2^2*y3^2");
  CHECK(golod_denominator(ideal({Multidegree{2}}, 1)).to_string() == "1 - t^2*y1^2");
  CHECK(golod_denominator(MonomialIdeal::zero(2)).to_string() == "1");
  CHECK(is_golod_truncated(Ip, 5));
  CHECK_FALSE(is_golod_truncated(ideal({Multidegree{2, 0, 0}, Multidegree{0, 2, 1}}, 3), 5));
  CHECK(is_golod_truncated(ideal({Multidegree{2, 3}}, 2), 6));
  CHECK(is_golod_truncated(ideal({Multidegree{1, 0}}, 2), 4));

  CHECK(is_golod_generic(ideal({Multidegree{3, 0}, Multidegree{1, 1}, Multidegree{0, 2}}, 2)));
  CHECK_FALSE(is_golod_generic(ideal({Multidegree{2, 0}, Multidegree{0, 2}}, 2)));
  CHECK(is_golod_generic(ideal({Multidegree{2, 1}}, 2)));
  CHECK_THROWS_AS(is_golod_generic(ideal({Multidegree{1, 1, 0}, Multidegree{0, 1, 1}, Multidegree{1, 0, 1}}, 3)),
                  InputError);
}

TEST_CASE("golod certificate agrees with the Koszul-homology bound oracle") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 15; ++trial) {
    const auto I = oracle::random_ideal(rng, 3, 3, 2, 2);
    CAPTURE(I.to_string());
    const int tmax = static_cast<int>(I.lcm_all().total_degree()) + 1;
    const auto m = oracle::to_mono(I.lcm_all());
    const bool expected = oracle::from_library(poincare_series(I, tmax)) ==
                          oracle::golod_bound(oracle::gens_of(I), m, tmax);
    CHECK(is_golod_truncated(I, tmax) == expected);
    CHECK(oracle::from_library(golod_denominator(I, tmax)) == oracle::golod_denominator(oracle::gens_of(I), m, tmax));
  }
}

TEST_CASE("padded bound keeps variables outside the support") {
  const auto I = ideal({Multidegree{2, 0}}, 2);
  const auto p = poincare_series(I, 3, padded_bound(I));
  CHECK(p.ybound() == Multidegree{3, 1});
  CHECK(p.coeff(1, Multidegree{0, 1}) == 1);
  CHECK(poincare_series(I, 3).coeff(1, Multidegree{0, 1}) == 0);
}
