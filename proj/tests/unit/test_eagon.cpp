#include "monores/eagon.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

using namespace monores;

namespace {

MonomialIdeal ideal(std::vector<Multidegree> g, std::size_t n) { return MonomialIdeal::minimalize(std::move(g), n, {}); }

} // namespace

TEST_CASE("eagon ranks") {
  const auto I = ideal({Multidegree{3, 0}, Multidegree{1, 1}, Multidegree{0, 2}}, 2);
  const auto res = eagon_resolution(I, 4);
  CHECK(res.complex.ranks() == std::vector<std::size_t>{1, 2, 4, 8, 16});
  CHECK(eagon_rank_formula(I, 4) == res.complex.ranks());
  const auto principal = eagon_resolution(ideal({Multidegree{2}}, 1), 5);
  CHECK(principal.complex.ranks() == std::vector<std::size_t>(6, 1));
}

TEST_CASE("eagon resolution is a resolution on generic ideals") {
  const std::vector<MonomialIdeal> cases{
      ideal({Multidegree{3, 0}, Multidegree{1, 1}, Multidegree{0, 2}}, 2),
      ideal({Multidegree{2, 0}, Multidegree{1, 1}, Multidegree{0, 2}}, 2),
      ideal({Multidegree{2, 0}, Multidegree{0, 2}}, 2),
      ideal({Multidegree{2, 1, 0}, Multidegree{0, 2, 1}, Multidegree{1, 0, 2}}, 3),
  };
  for (const auto& I : cases) {
    CAPTURE(I.to_string());
    const int imax = 4;
    const auto res = eagon_resolution(I, imax);
    CHECK(res.multiplicative);
    const auto bound = default_eagon_bound(I, imax);
    CHECK(oracle::complex_d_squared_zero(res.complex, oracle::to_mono(bound)));
    const auto h = oracle::complex_homology(res.complex, oracle::to_mono(bound));
    for (const auto& [key, d] : h)
      if (key.first < static_cast<std::size_t>(imax))
        CHECK((key.first == 0 && key.second == oracle::Mono(I.num_vars(), 0) && d == 1));
    CHECK(check_eagon(res, bound).ok());
  }
}

TEST_CASE("eagon refuses non-generic input") {
  CHECK_THROWS_AS(eagon_resolution(ideal({Multidegree{1, 1, 0}, Multidegree{0, 1, 1}, Multidegree{1, 0, 1}}, 3), 3),
                  InputError);
}
