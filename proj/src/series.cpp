#include "monores/series.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace monores {

BigradedSeries::BigradedSeries(int tmax, Multidegree ybound) : tmax_(tmax), ybound_(std::move(ybound)) {
  if (tmax < 0)
    throw InputError("series truncation degree must be non-negative");
}

BigradedSeries BigradedSeries::one(int tmax, Multidegree ybound) {
  BigradedSeries s(tmax, std::move(ybound));
  s.add(0, Multidegree(s.num_vars()), 1);
  return s;
}

BigradedSeries BigradedSeries::linear_factors(int tmax, Multidegree ybound) {
  BigradedSeries s = one(tmax, ybound);
  for (std::size_t i = 0; i < ybound.size(); ++i) {
    BigradedSeries f = one(tmax, ybound);
    f.add(1, Multidegree::unit(ybound.size(), i), 1);
    s = series_mul(s, f);
  }
  return s;
}

bool BigradedSeries::in_range(int t, const Multidegree& y) const {
  return t >= 0 && t <= tmax_ && y.size() == ybound_.size() && y.divides(ybound_);
}

mpz_class BigradedSeries::coeff(int t, const Multidegree& y) const {
  auto it = terms_.find(SeriesKey{t, y});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void BigradedSeries::add(int t, const Multidegree& y, const mpz_class& c) {
  if (y.size() != ybound_.size())
    throw InputError("series term has the wrong number of variables");
  if (!in_range(t, y) || c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(SeriesKey{t, y}, 0);
  it->second += c;
  if (it->second == 0)
    terms_.erase(it);
}

int BigradedSeries::t_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_)
    d = std::max(d, k.t);
  return d;
}

BigradedSeries BigradedSeries::truncated(int tmax, Multidegree ybound) const {
  BigradedSeries s(tmax, std::move(ybound));
  for (const auto& [k, c] : terms_)
    s.add(k.t, k.y, c);
  return s;
}

std::map<Multidegree, mpz_class> BigradedSeries::t_slice(int t) const {
  std::map<Multidegree, mpz_class> out;
  for (const auto& [k, c] : terms_)
    if (k.t == t)
      out.emplace(k.y, c);
  return out;
}

namespace {

std::string with_coeff(const mpz_class& abs_c, const Multidegree& y) {
  if (y.is_zero())
    return abs_c.get_str();
  return (abs_c == 1 ? std::string{} : abs_c.get_str() + "*") + y.to_y_string();
}

} // namespace

std::string BigradedSeries::to_string() const {
  std::string out;
  auto append = [&](bool negative, const std::string& body) {
    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  };
  const int top = t_degree();
  for (int t = 0; t <= top; ++t) {
    const auto slice = t_slice(t);
    if (slice.empty())
      continue;
    if (t == 0) {
      for (const auto& [y, c] : slice)
        append(c < 0, with_coeff(abs(c), y));
      continue;
    }
    const std::string tpart = t == 1 ? "t" : "t^" + std::to_string(t);
    if (slice.size() == 1) {
      const auto& [y, c] = *slice.begin();
      mpz_class a = abs(c);
      std::string body = (a == 1 ? std::string{} : a.get_str() + "*") + tpart;
      if (!y.is_zero())
        body += "*" + y.to_y_string();
      append(c < 0, body);
      continue;
    }
    const bool all_negative =
        std::all_of(slice.begin(), slice.end(), [](const auto& kv) { return kv.second < 0; });
    std::string inner;
    for (auto it = slice.rbegin(); it != slice.rend(); ++it) {
      const auto& [y, c] = *it;
      const mpz_class signed_c = all_negative ? mpz_class(-c) : c;
      if (inner.empty())
        inner = (signed_c < 0 ? "-" : "") + with_coeff(abs(signed_c), y);
      else
        inner += (signed_c < 0 ? " - " : " + ") + with_coeff(abs(signed_c), y);
    }
    append(all_negative, tpart + "*(" + inner + ")");
  }
  return out.empty() ? "0" : out;
}

void require_same_truncation(const BigradedSeries& a, const BigradedSeries& b) {
  if (a.tmax() != b.tmax() || a.ybound() != b.ybound())
    throw InputError("series have different truncation parameters");
}

BigradedSeries series_add(const BigradedSeries& a, const BigradedSeries& b) {
  require_same_truncation(a, b);
  BigradedSeries s = a;
  for (const auto& [k, c] : b.terms())
    s.add(k.t, k.y, c);
  return s;
}

BigradedSeries series_sub(const BigradedSeries& a, const BigradedSeries& b) {
  require_same_truncation(a, b);
  BigradedSeries s = a;
  for (const auto& [k, c] : b.terms())
    s.add(k.t, k.y, -c);
  return s;
}

namespace {

/// Dense slot layout (t, y) -> t * |box| + index(y).
class DenseLayout {
public:
  DenseLayout(int tmax, const Multidegree& bound) : tmax_(tmax), box_(bound) {
    points_.reserve(box_.size());
    for (std::size_t i = 0; i < box_.size(); ++i)
      points_.push_back(box_.at(i));
  }

  std::size_t slots() const { return static_cast<std::size_t>(tmax_ + 1) * box_.size(); }
  std::size_t slot(int t, std::size_t yidx) const {
    return static_cast<std::size_t>(t) * box_.size() + yidx;
  }
  int t_of(std::size_t slot) const { return static_cast<int>(slot / box_.size()); }
  std::size_t y_of(std::size_t slot) const { return slot % box_.size(); }
  const Multidegree& point(std::size_t yidx) const { return points_[yidx]; }
  std::size_t index_of(const Multidegree& y) const { return box_.index_of(y); }

  /// Whether point(a) + point(b) stays inside the box; then its index is a + b.
  bool fits(std::size_t a, std::size_t b) const {
    const auto& pa = points_[a];
    const auto& pb = points_[b];
    const auto& bound = box_.bound();
    for (std::size_t i = 0; i < pa.size(); ++i)
      if (pa[i] + pb[i] > bound[i])
        return false;
    return true;
  }

  /// Slots ordered by t + |y|.
  std::vector<std::size_t> weight_order() const {
    std::vector<std::size_t> order(slots());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return t_of(a) + box_.total_degree_at(y_of(a)) < t_of(b) + box_.total_degree_at(y_of(b));
    });
    return order;
  }

  int tmax() const { return tmax_; }

private:
  int tmax_;
  Box box_;
  std::vector<Multidegree> points_;
};

struct DenseTerm {
  int t;
  std::size_t yidx;
  mpz_class c;
};

std::vector<DenseTerm> dense_terms(const BigradedSeries& s, const DenseLayout& layout) {
  std::vector<DenseTerm> out;
  out.reserve(s.terms().size());
  for (const auto& [k, c] : s.terms())
    out.push_back({k.t, layout.index_of(k.y), c});
  return out;
}

BigradedSeries from_dense(const std::vector<mpz_class>& acc, const DenseLayout& layout,
                          const Multidegree& ybound) {
  BigradedSeries s(layout.tmax(), ybound);
  for (std::size_t slot = 0; slot < acc.size(); ++slot)
    if (acc[slot] != 0)
      s.add(layout.t_of(slot), layout.point(layout.y_of(slot)), acc[slot]);
  return s;
}

} // namespace

BigradedSeries series_mul(const BigradedSeries& a, const BigradedSeries& b) {
  require_same_truncation(a, b);
  const DenseLayout layout(a.tmax(), a.ybound());
  std::vector<mpz_class> acc(layout.slots());
  const auto ta = dense_terms(a, layout);
  const auto tb = dense_terms(b, layout);
  for (const auto& x : ta)
    for (const auto& y : tb) {
      const int t = x.t + y.t;
      if (t > layout.tmax() || !layout.fits(x.yidx, y.yidx))
        continue;
      mpz_addmul(acc[layout.slot(t, x.yidx + y.yidx)].get_mpz_t(), x.c.get_mpz_t(), y.c.get_mpz_t());
    }
  return from_dense(acc, layout, a.ybound());
}

BigradedSeries series_divide(const BigradedSeries& num, const BigradedSeries& den) {
  require_same_truncation(num, den);
  const Multidegree zero(den.num_vars());
  const mpz_class unit = den.coeff(0, zero);
  if (unit != 1 && unit != -1)
    throw InputError("series inverse requires constant term 1 or -1");
  const DenseLayout layout(num.tmax(), num.ybound());
  std::vector<mpz_class> acc(layout.slots());
  for (const auto& t : dense_terms(num, layout))
    acc[layout.slot(t.t, t.yidx)] = t.c;
  std::vector<DenseTerm> rest;
  for (auto& t : dense_terms(den, layout))
    if (t.t != 0 || t.yidx != 0)
      rest.push_back(std::move(t));

  std::vector<mpz_class> quotient(layout.slots());
  for (std::size_t slot : layout.weight_order()) {
    if (acc[slot] == 0)
      continue;
    const mpz_class q = acc[slot] * unit;
    quotient[slot] = q;
    const int t0 = layout.t_of(slot);
    const std::size_t y0 = layout.y_of(slot);
    for (const auto& d : rest) {
      const int t = t0 + d.t;
      if (t > layout.tmax() || !layout.fits(y0, d.yidx))
        continue;
      mpz_submul(acc[layout.slot(t, y0 + d.yidx)].get_mpz_t(), d.c.get_mpz_t(), q.get_mpz_t());
    }
  }
  return from_dense(quotient, layout, num.ybound());
}

BigradedSeries series_inverse(const BigradedSeries& a) {
  return series_divide(BigradedSeries::one(a.tmax(), a.ybound()), a);
}

BigradedSeries binomial_factor(int n, const Multidegree& j, int sign, const mpz_class& power,
                               int tmax, const Multidegree& ybound) {
  if (n <= 0)
    throw InputError("factor t-degree must be positive");
  BigradedSeries s(tmax, ybound);
  mpz_class binom = 1;
  Multidegree y(ybound.size());
  for (int k = 0; k * n <= tmax && y.divides(ybound); ++k) {
    if (binom == 0)
      break;
    s.add(k * n, y, (sign < 0 && k % 2 == 1) ? mpz_class(-binom) : binom);
    // binom(power, k+1) = binom(power, k) * (power - k) / (k + 1)
    binom *= power - k;
    binom /= k + 1;
    y += j;
  }
  return s;
}

DeviationTable deviations(const BigradedSeries& p, int nmax) {
  const Multidegree zero(p.num_vars());
  const auto head = p.t_slice(0);
  if (head.size() != 1 || head.begin()->first != zero || head.begin()->second != 1)
    throw InputError("deviations require a series whose t-degree-0 part is 1");
  DeviationTable table;
  BigradedSeries current = BigradedSeries::one(p.tmax(), p.ybound());
  const int top = std::min(nmax, p.tmax());
  for (int n = 1; n <= top; ++n) {
    const auto target = p.t_slice(n);
    const auto have = current.t_slice(n);
    std::map<Multidegree, mpz_class> diff = target;
    for (const auto& [y, c] : have)
      diff[y] -= c;
    for (const auto& [y, e] : diff) {
      if (e == 0)
        continue;
      table[DeviationKey{n, y}] = e;
      const auto factor = n % 2 == 1 ? binomial_factor(n, y, +1, e, p.tmax(), p.ybound())
                                     : binomial_factor(n, y, -1, -e, p.tmax(), p.ybound());
      current = series_mul(current, factor);
    }
  }
  return table;
}

BigradedSeries series_from_deviations(const DeviationTable& table, int tmax, const Multidegree& ybound) {
  BigradedSeries s = BigradedSeries::one(tmax, ybound);
  for (const auto& [key, e] : table) {
    if (key.j.size() != ybound.size())
      throw InputError("deviation multidegree has the wrong number of variables");
    if (e == 0 || key.n > tmax)
      continue;
    const auto factor = key.n % 2 == 1 ? binomial_factor(key.n, key.j, +1, e, tmax, ybound)
                                       : binomial_factor(key.n, key.j, -1, -e, tmax, ybound);
    s = series_mul(s, factor);
  }
  return s;
}

std::set<CandidateTerm> candidate_terms(const MonomialIdeal& ideal) {
  if (ideal.num_generators() > kMaxSubsetGenerators)
    throw InputError("candidate enumeration supports at most " +
                     std::to_string(kMaxSubsetGenerators) + " generators");
  std::set<CandidateTerm> out;
  const GeneratorMask total = GeneratorMask{1} << ideal.num_generators();
  for (GeneratorMask m = 1; m < total; ++m) {
    const int l = connected_components_of_mask(ideal, m);
    out.insert(CandidateTerm{l % 2 == 0 ? 1 : -1, std::popcount(m) + l, lcm_of_mask(ideal, m)});
  }
  return out;
}

bool verify_lcm_coefficients(const BigradedSeries& q, const MonomialIdeal& ideal) {
  if (q.num_vars() != ideal.num_vars())
    throw InputError("series and ideal have different numbers of variables");
  if (ideal.num_generators() > kMaxSubsetGenerators)
    throw InputError("lcm verification supports at most " +
                     std::to_string(kMaxSubsetGenerators) + " generators");
  std::set<Multidegree> lcms;
  const GeneratorMask total = GeneratorMask{1} << ideal.num_generators();
  for (GeneratorMask m = 1; m < total; ++m)
    lcms.insert(lcm_of_mask(ideal, m));
  for (const auto& [k, c] : q.terms()) {
    if (k.t == 0 && k.y.is_zero())
      continue;
    if (!lcms.contains(k.y))
      return false;
  }
  return true;
}

bool terms_within_candidates(const BigradedSeries& q, const std::set<CandidateTerm>& candidates) {
  for (const auto& [k, c] : q.terms()) {
    if (k.t == 0 && k.y.is_zero())
      continue;
    if (!candidates.contains(CandidateTerm{c < 0 ? -1 : 1, k.t, k.y}))
      return false;
  }
  return true;
}

} // namespace monores
