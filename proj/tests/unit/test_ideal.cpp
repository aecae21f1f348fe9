#include "monores/ideal.hpp"

#include <doctest.h>

using monores::MonomialIdeal;
using monores::Multidegree;

TEST_CASE("minimalize drops multiples and duplicates") {
  const auto I = MonomialIdeal::minimalize({Multidegree{1, 1}, Multidegree{2, 1}, Multidegree{1, 1}, Multidegree{0, 3}}, 2, {});
  REQUIRE(I.num_generators() == 2);
  CHECK(I.generator(0) == Multidegree{1, 1});
  CHECK(I.generator(1) == Multidegree{0, 3});
  CHECK(I.contains(Multidegree{3, 2}));
  CHECK_FALSE(I.contains(Multidegree{3, 0}));
  CHECK_THROWS_AS(MonomialIdeal::minimalize({Multidegree{1, 1, 0}}, 2, {}), monores::InputError);
}

TEST_CASE("lcm of subsets and connected components") {
  const auto I = MonomialIdeal::minimalize({Multidegree{2, 0, 0}, Multidegree{0, 2, 1}, Multidegree{1, 1, 0}}, 3, {});
  const std::vector<std::size_t> first_two{0, 1};
  CHECK(monores::lcm_of_subset(I, first_two) == Multidegree{2, 2, 1});
  CHECK(monores::connected_components(I, first_two) == 2);
  const std::vector<std::size_t> all{0, 1, 2};
  CHECK(monores::connected_components(I, all) == 1);
  CHECK(monores::lcm_of_mask(I, 0b101) == Multidegree{2, 1, 0});
}

TEST_CASE("genericity uses equal positive exponents only") {
  const auto generic = MonomialIdeal::minimalize({Multidegree{3, 0}, Multidegree{1, 1}, Multidegree{0, 2}}, 2, {});
  CHECK(monores::is_generic(generic));
  const auto squarefree = MonomialIdeal::minimalize({Multidegree{1, 1, 0}, Multidegree{0, 1, 1}, Multidegree{1, 0, 1}}, 3, {});
  CHECK_FALSE(monores::is_generic(squarefree));
  const auto coprime = MonomialIdeal::minimalize({Multidegree{2, 0}, Multidegree{0, 2}}, 2, {});
  CHECK(monores::is_generic(coprime));
}

TEST_CASE("polarization") {
  const auto I = MonomialIdeal::minimalize({Multidegree{2, 0, 0}, Multidegree{0, 2, 1}}, 3, {});
  const monores::Polarization pol(I);
  const auto& P = pol.polarized();
  CHECK(P.is_squarefree());
  CHECK(P.num_vars() == 5);
  CHECK(P.generator(0) == Multidegree{1, 1, 0, 0, 0});
  CHECK(P.generator(1) == Multidegree{0, 0, 1, 1, 1});
  for (std::size_t g = 0; g < I.num_generators(); ++g)
    CHECK(pol.lambda_inverse(P.generator(g)) == I.generator(g));
  CHECK(pol.origin_of(3) == 1);
  CHECK(pol.copy_index_of(3) == 2);
}
