#include "monores/eagon.hpp"

#include "monores/koszul_cycles.hpp"

#include <bit>
#include <map>
#include <set>

namespace monores {

namespace {

template <class Field>
using Dense = std::vector<typename Field::Element>;

/// Coordinates of a chain in the Koszul module of its degree.
template <class Field>
Dense<Field> coordinates(const FreeComplex& k, const Field& field, const KoszulChain& c) {
  Dense<Field> v(k.rank(static_cast<std::size_t>(c.degree)), field.zero());
  for (const auto& [g, e] : c.terms)
    v[g] = field.add(v[g], field.from(e));
  return v;
}

/// x^shift * c, dropping terms whose monomial part falls into I.
KoszulChain shifted(const FreeComplex& k, const KoszulChain& c, const Multidegree& shift) {
  KoszulChain out{c.degree, c.multidegree + shift, {}};
  const auto& mod = k.module(static_cast<std::size_t>(c.degree));
  for (const auto& [g, e] : c.terms)
    if (!k.ring_ideal().contains(out.multidegree - mod[g]))
      out.terms.emplace_back(g, e);
  return out;
}

/// One linear condition on z_J, grouped as "lhs(z) + constant = 0", where
/// lhs is given by its values on the candidate directions.
template <class Field>
struct Condition {
  Dense<Field> constant;
  std::vector<Dense<Field>> on_direction;
};

template <class Field>
void choose_cycles(EagonResolution& res, const FreeComplex& k, const Field& field) {
  const auto& ideal = res.ideal;
  const std::set<GeneratorMask> face_set(res.faces.begin(), res.faces.end());
  std::map<GeneratorMask, std::size_t> face_index;
  for (std::size_t f = 0; f < res.faces.size(); ++f)
    face_index[res.faces[f]] = f;
  res.multiplicative = true;

  for (std::size_t f = 0; f < res.faces.size(); ++f) {
    const GeneratorMask J = res.faces[f];
    const auto t = static_cast<std::size_t>(std::popcount(J));
    const Multidegree mJ = lcm_of_mask(ideal, J);
    const auto spot = koszul_spot(k, field, t, mJ);
    if (spot.representatives.size() != 1)
      throw InternalError("Koszul homology at a Scarf face is not one-dimensional");

    // Candidates: z = z0 + sum beta_k * boundary_k.
    const KoszulChain z0 = chain_from(spot, field, t, mJ, spot.representatives[0]);
    std::vector<KoszulChain> directions;
    for (const auto& b : spot.boundaries)
      if (!b.empty())
        directions.push_back(chain_from(spot, field, t, mJ, b));

    std::vector<Condition<Field>> conditions;
    auto linear_condition = [&](auto&& apply, const KoszulChain& constant_part, bool has_constant) {
      Condition<Field> c;
      const KoszulChain image0 = apply(z0);
      c.constant = coordinates(k, field, image0);
      if (has_constant) {
        const auto extra = coordinates(k, field, constant_part);
        if (extra.size() != c.constant.size())
          throw InternalError("condition parts live in different degrees");
        for (std::size_t i = 0; i < extra.size(); ++i)
          c.constant[i] = field.add(c.constant[i], extra[i]);
      }
      for (const auto& d : directions)
        c.on_direction.push_back(coordinates(k, field, apply(d)));
      conditions.push_back(std::move(c));
    };

    // z_a z_b = sign * x^delta * z_J for disjoint faces a < b with a u b = J.
    for (std::size_t a = 0; a < f; ++a)
      for (std::size_t b = a + 1; b < f; ++b) {
        const GeneratorMask A = res.faces[a], B = res.faces[b];
        if ((A & B) || (A | B) != J)
          continue;
        const int sign = merge_sign(A, B);
        const Multidegree delta = lcm_of_mask(ideal, A) + lcm_of_mask(ideal, B) - mJ;
        const KoszulChain prod = wedge(k, res.face_cycles[a], res.face_cycles[b]);
        auto apply = [&](const KoszulChain& z) {
          KoszulChain s = shifted(k, z, delta);
          for (auto& [g, e] : s.terms)
            e = sign > 0 ? Coeff(-e) : e;
          return s;
        };
        linear_condition(apply, prod, true);
      }
    // z_J z_b = 0 whenever the Scarf product T_J T_b vanishes.
    for (std::size_t b = 0; b < f; ++b) {
      const GeneratorMask B = res.faces[b];
      if (!(J & B) && face_set.count(J | B))
        continue;
      auto apply = [&](const KoszulChain& z) { return wedge(k, z, res.face_cycles[b]); };
      linear_condition(apply, KoszulChain{}, false);
    }

    KoszulChain chosen = z0;
    if (!conditions.empty()) {
      std::vector<Dense<Field>> rows;
      Dense<Field> rhs;
      for (const auto& c : conditions)
        for (std::size_t i = 0; i < c.constant.size(); ++i) {
          Dense<Field> row;
          bool nonzero = !field.is_zero(c.constant[i]);
          for (const auto& dir : c.on_direction) {
            row.push_back(dir[i]);
            nonzero = nonzero || !field.is_zero(dir[i]);
          }
          if (!nonzero)
            continue;
          rows.push_back(std::move(row));
          rhs.push_back(field.neg(c.constant[i]));
        }
      auto beta = solve_affine(field, rows, rhs, directions.size());
      if (!beta) {
        res.multiplicative = false;
      } else {
        Dense<Field> z = coordinates(k, field, z0);
        for (std::size_t d = 0; d < directions.size(); ++d) {
          const auto dv = coordinates(k, field, directions[d]);
          for (std::size_t i = 0; i < z.size(); ++i)
            z[i] = field.add(z[i], field.mul((*beta)[d], dv[i]));
        }
        chosen.terms.clear();
        for (std::size_t i = 0; i < z.size(); ++i)
          if (!field.is_zero(z[i]))
            chosen.terms.emplace_back(i, field.to_coeff(z[i]));
      }
    }
    res.face_cycles.push_back(std::move(chosen));
  }
  // z_J z_J also has to vanish; it is quadratic, so only checked.
  for (const auto& z : res.face_cycles)
    if (!wedge(k, z, z).terms.empty())
      res.multiplicative = false;
}

/// Words of faces with sum (|J_k| + 1) = weight, for every weight <= imax.
std::vector<std::vector<std::vector<std::size_t>>> words_by_weight(const EagonResolution& res) {
  std::vector<std::vector<std::vector<std::size_t>>> by_weight(static_cast<std::size_t>(res.imax) + 1);
  by_weight[0].push_back({});
  for (std::size_t w = 1; w < by_weight.size(); ++w)
    for (std::size_t f = 0; f < res.faces.size(); ++f) {
      const auto cost = static_cast<std::size_t>(std::popcount(res.faces[f])) + 1;
      if (cost > w)
        continue;
      for (const auto& prefix : by_weight[w - cost]) {
        auto word = prefix;
        word.push_back(f);
        by_weight[w].push_back(std::move(word));
      }
    }
  for (auto& words : by_weight)
    std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
  return by_weight;
}

struct BarTerm {
  std::uint64_t koszul_mask;
  std::vector<std::size_t> word;
  Coeff coeff;
};

} // namespace

EagonResolution eagon_resolution(const MonomialIdeal& ideal, int imax, std::uint64_t characteristic) {
  validate_characteristic(characteristic);
  if (imax < 0)
    throw InputError("imax must be non-negative");
  if (!is_generic(ideal))
    throw InputError("Eagon resolution needs a generic ideal");
  const std::size_t n = ideal.num_vars();
  EagonResolution res;
  res.ideal = ideal;
  res.imax = imax;
  for (GeneratorMask m : scarf_faces(ideal))
    if (m != 0)
      res.faces.push_back(m);
  const FreeComplex k = koszul_complex(ideal, RingKind::quotient).with_characteristic(characteristic);
  with_field(characteristic, [&](const auto& field) { choose_cycles(res, k, field); });

  std::vector<Multidegree> face_deg;
  for (GeneratorMask m : res.faces)
    face_deg.push_back(lcm_of_mask(ideal, m));
  const std::set<GeneratorMask> face_set(res.faces.begin(), res.faces.end());
  std::map<GeneratorMask, std::size_t> face_index;
  for (std::size_t f = 0; f < res.faces.size(); ++f)
    face_index[res.faces[f]] = f;

  const auto words = words_by_weight(res);
  res.generators.resize(static_cast<std::size_t>(imax) + 1);
  std::vector<std::map<EagonGenerator, std::size_t>> index(res.generators.size());
  for (std::size_t i = 0; i < res.generators.size(); ++i)
    for (std::size_t w = 0; w <= i; ++w) {
      const std::size_t j = i - w;
      if (j > n || j >= k.num_modules())
        continue;
      for (const auto& word : words[w])
        for (std::size_t g = 0; g < k.rank(j); ++g) {
          EagonGenerator gen{mask_of_indicator(k.module(j)[g]), word};
          index[i][gen] = res.generators[i].size();
          res.generators[i].push_back(std::move(gen));
        }
    }

  auto degree_of = [&](const EagonGenerator& g) {
    Multidegree d(n);
    for (std::size_t v = 0; v < n; ++v)
      if (g.koszul_mask >> v & 1)
        d[v] = 1;
    for (std::size_t f : g.faces)
      d += face_deg[f];
    return d;
  };

  // d of a bare word T_{J_1} (x) ... (x) T_{J_l}.
  auto bar_differential = [&](const std::vector<std::size_t>& word) {
    std::vector<BarTerm> out;
    const KoszulChain& z = res.face_cycles[word[0]];
    const auto& mod = k.module(static_cast<std::size_t>(z.degree));
    std::vector<std::size_t> rest(word.begin() + 1, word.end());
    for (const auto& [g, c] : z.terms)
      out.push_back({mask_of_indicator(mod[g]), rest, c});
    int weight = 0;
    for (std::size_t l = 1; l < word.size(); ++l) {
      weight += std::popcount(res.faces[word[l - 1]]) + 1;
      const GeneratorMask A = res.faces[word[l - 1]], B = res.faces[word[l]];
      if ((A & B) || !face_set.count(A | B))
        continue;
      std::vector<std::size_t> merged(word.begin(), word.begin() + static_cast<long>(l) - 1);
      merged.push_back(face_index.at(A | B));
      merged.insert(merged.end(), word.begin() + static_cast<long>(l) + 1, word.end());
      const int sign = merge_sign(A, B) * (weight % 2 == 0 ? 1 : -1);
      out.push_back({0, std::move(merged), Coeff(sign)});
    }
    return out;
  };

  FreeComplex c(ideal, RingKind::quotient, characteristic);
  const PrimeField* prime = nullptr;
  std::optional<PrimeField> pf;
  if (characteristic != 0) {
    pf.emplace(characteristic);
    prime = &*pf;
  }
  for (std::size_t i = 0; i < res.generators.size(); ++i) {
    std::vector<Multidegree> gens;
    std::vector<Column> diff;
    std::vector<std::string> labels;
    for (const auto& gen : res.generators[i]) {
      const Multidegree deg = degree_of(gen);
      gens.push_back(deg);
      labels.push_back(eagon_label(res, gen));
      std::map<std::size_t, Coeff> acc;
      auto add = [&](const EagonGenerator& target, const Coeff& coeff) {
        auto it = index[i - 1].find(target);
        if (it == index[i - 1].end())
          throw InternalError("Eagon differential leaves the constructed range");
        if (ideal.contains(deg - degree_of(target)))
          return;
        acc[it->second] += coeff;
      };
      if (i > 0) {
        const auto vars = mask_to_indices(gen.koszul_mask);
        for (std::size_t pos = 0; pos < vars.size(); ++pos)
          add({gen.koszul_mask & ~(std::uint64_t{1} << vars[pos]), gen.faces}, Coeff(pos % 2 == 0 ? 1 : -1));
        if (!gen.faces.empty()) {
          const int outer = vars.size() % 2 == 0 ? 1 : -1;
          for (const auto& term : bar_differential(gen.faces)) {
            const int s = merge_sign(gen.koszul_mask, term.koszul_mask);
            if (s == 0)
              continue;
            add({gen.koszul_mask | term.koszul_mask, term.word}, Coeff(outer * s) * term.coeff);
          }
        }
      }
      Column col;
      for (auto& [row, v] : acc) {
        Coeff value = v;
        if (prime)
          value = prime->to_coeff(prime->from(v));
        if (sgn(value) != 0)
          col.push_back({row, value});
      }
      diff.push_back(std::move(col));
    }
    c.push_module(std::move(gens), std::move(diff), std::move(labels));
  }
  res.complex = std::move(c);
  return res;
}

std::vector<std::size_t> eagon_rank_formula(const MonomialIdeal& ideal, int imax) {
  const std::size_t n = ideal.num_vars();
  std::vector<std::size_t> f(ideal.num_generators() + 1, 0);
  for (GeneratorMask m : scarf_faces(ideal))
    if (m != 0)
      ++f[static_cast<std::size_t>(std::popcount(m))];
  const auto top = static_cast<std::size_t>(imax);
  // words[w]: number of face words of total weight w
  std::vector<std::size_t> words(top + 1, 0);
  words[0] = 1;
  for (std::size_t w = 1; w <= top; ++w)
    for (std::size_t t = 1; t < f.size() && t + 1 <= w; ++t)
      words[w] += f[t] * words[w - t - 1];
  std::vector<std::size_t> ranks(top + 1, 0);
  for (std::size_t i = 0; i <= top; ++i) {
    std::size_t binom = 1;
    for (std::size_t j = 0; j <= std::min(i, n); ++j) {
      ranks[i] += binom * words[i - j];
      binom = binom * (n - j) / (j + 1);
    }
  }
  return ranks;
}

Multidegree default_eagon_bound(const MonomialIdeal& ideal, int imax) {
  const int factor = std::max(1, imax / 2);
  Multidegree b = ideal.lcm_all();
  for (std::size_t v = 0; v < b.size(); ++v)
    b[v] *= factor;
  return b;
}

EagonCheck check_eagon(const EagonResolution& res, const Multidegree& bound, unsigned jobs) {
  EagonCheck chk;
  chk.imax = res.imax;
  chk.bound = bound;
  chk.d_squared_zero = d_squared_is_zero(res.complex);
  chk.ranks = res.complex.ranks();
  chk.formula_ranks = eagon_rank_formula(res.ideal, res.imax);
  chk.ranks_match = chk.ranks == chk.formula_ranks;
  const HomologyTable h = homology(res.complex, bound, jobs);
  const Multidegree zero(res.ideal.num_vars());
  chk.h0_is_k = h.total(0) == 1 && h.dim(0, zero) == 1;
  chk.exact = true;
  for (int i = 1; i < res.imax; ++i)
    chk.exact = chk.exact && h.total(static_cast<std::size_t>(i)) == 0;
  return chk;
}

std::string eagon_label(const EagonResolution& res, const EagonGenerator& g) {
  std::string out = "e";
  const auto vars = mask_to_indices(g.koszul_mask);
  if (vars.empty())
    out = "1";
  for (std::size_t p = 0; p < vars.size(); ++p)
    out += (p ? "^" : "") + res.ideal.var_names()[vars[p]];
  for (std::size_t f : g.faces)
    out += "*T" + subset_label(res.faces[f]);
  return out;
}

} // namespace monores
