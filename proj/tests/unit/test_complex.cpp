#include "monores/complex.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

using namespace monores;

namespace {

MonomialIdeal ideal(std::vector<Multidegree> g, std::size_t n) { return MonomialIdeal::minimalize(std::move(g), n, {}); }

} // namespace

TEST_CASE("taylor complex of (x, y)") {
  const auto c = taylor_complex(ideal({Multidegree{1, 0}, Multidegree{0, 1}}, 2));
  CHECK(c.ranks() == std::vector<std::size_t>{1, 2, 1});
  const auto& col = c.differential(2)[0];
  REQUIRE(col.size() == 2);
  // d(e12) = -y e1 + x e2
  CHECK(col[0].coeff == -1);
  CHECK(col[1].coeff == 1);
  CHECK(c.entry_monomial(2, 0, 0) == Multidegree{0, 1});
  CHECK(d_squared_is_zero(c));
}

TEST_CASE("scarf complexes of generic ideals") {
  const auto I = ideal({Multidegree{3, 0}, Multidegree{1, 1}, Multidegree{0, 2}}, 2);
  const auto s = scarf_complex(I);
  CHECK(s.ranks() == std::vector<std::size_t>{1, 3, 2});
  CHECK(s.labels(2) == std::vector<std::string>{"{1,2}", "{2,3}"});
  CHECK(minimize(taylor_complex(I)).ranks() == s.ranks());
  CHECK(scarf_complex(ideal({Multidegree{2, 0}, Multidegree{1, 1}, Multidegree{0, 2}}, 2)).ranks() ==
        std::vector<std::size_t>{1, 3, 2});
}

TEST_CASE("koszul complex conventions") {
  const auto K = koszul_complex(ideal({Multidegree{2, 0}}, 2), RingKind::polynomial);
  CHECK(K.ranks() == std::vector<std::size_t>{1, 2, 1});
  // d(e1 ^ e2) = x1 e2 - x2 e1
  const auto& col = K.differential(2)[0];
  REQUIRE(col.size() == 2);
  CHECK(K.module(1)[col[0].row] == Multidegree{1, 0});
  CHECK(col[0].coeff == -1);
  CHECK(K.module(1)[col[1].row] == Multidegree{0, 1});
  CHECK(col[1].coeff == 1);
  const auto K4 = koszul_complex(ideal({Multidegree{1, 1, 0, 0}, Multidegree{0, 0, 2, 1}}, 4), RingKind::quotient);
  CHECK(d_squared_is_zero(K4));
}

TEST_CASE("koszul homology over k[x]/(x^2)") {
  const auto K = koszul_complex(ideal({Multidegree{2}}, 1), RingKind::quotient);
  const auto h = homology(K, Multidegree{3});
  CHECK(h.dim(0, Multidegree{0}) == 1);
  CHECK(h.total(0) == 1);
  CHECK(h.dim(1, Multidegree{2}) == 1);
  CHECK(h.total(1) == 1);
}

TEST_CASE("minimize (xy, yz, xz)") {
  const auto I = ideal({Multidegree{1, 1, 0}, Multidegree{0, 1, 1}, Multidegree{1, 0, 1}}, 3);
  CHECK_FALSE(is_taylor_minimal(I));
  const auto m = minimize(taylor_complex(I));
  CHECK(m.ranks() == std::vector<std::size_t>{1, 3, 2});
  CHECK(is_minimal(m));
  CHECK(d_squared_is_zero(m));
  CHECK(oracle::to_dims(homology(m, I.lcm_all())) ==
        oracle::simplicial_homology(oracle::gens_of(I), oracle::all_subsets(3), oracle::to_mono(I.lcm_all())));
  CHECK(is_taylor_minimal(ideal({Multidegree{2, 0, 0}, Multidegree{0, 2, 1}}, 3)));
}

TEST_CASE("homology matches the brute-force oracle on random ideals") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const auto I = oracle::random_ideal(rng, 4, 4, 2, 1);
    const auto gens = oracle::gens_of(I);
    const auto bound = oracle::to_mono(I.lcm_all());
    const std::size_t n = I.num_vars();
    CAPTURE(I.to_string());
    CHECK(oracle::to_dims(homology(taylor_complex(I), I.lcm_all())) ==
          oracle::simplicial_homology(gens, oracle::all_subsets(gens.size()), bound));
    CHECK(oracle::to_dims(homology(scarf_complex(I), I.lcm_all(), 2)) ==
          oracle::simplicial_homology(gens, oracle::scarf_subsets(gens, n), bound));
    CHECK(oracle::to_dims(homology(koszul_complex(I, RingKind::quotient), I.lcm_all())) ==
          oracle::koszul_homology(gens, bound, true));
    // Tor symmetry: Taylor (x) k against Koszul (x) S/I
    CHECK(oracle::to_dims(homology(tensor_with_residue_field(taylor_complex(I)), I.lcm_all())) ==
          oracle::koszul_homology(gens, bound, true));
  }
}

TEST_CASE("prime characteristic") {
  const auto I = ideal({Multidegree{1, 1, 0}, Multidegree{0, 1, 1}, Multidegree{1, 0, 1}}, 3);
  const auto c = taylor_complex(I).with_characteristic(2);
  CHECK(d_squared_is_zero(c));
  CHECK(homology(c, I.lcm_all()) == homology(taylor_complex(I), I.lcm_all()));
}
