#pragma once

#include "monores/ideal.hpp"
#include "monores/multidegree.hpp"

#include <gmpxx.h>

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace monores {

struct SeriesKey {
  int t = 0;
  Multidegree y;

  auto operator<=>(const SeriesKey&) const = default;
  bool operator==(const SeriesKey&) const = default;
};

/// Power series in t and y_1..y_n with integer coefficients, truncated at
/// t-degree `tmax` and at the componentwise y-bound `ybound`. Truncation by
/// a box and a t-degree is a quotient ring, so products and quotients of
/// truncated series are exact within the bounds.
class BigradedSeries {
public:
  BigradedSeries() = default;
  BigradedSeries(int tmax, Multidegree ybound);

  static BigradedSeries one(int tmax, Multidegree ybound);
  /// prod_i (1 + t*y_i), truncated.
  static BigradedSeries linear_factors(int tmax, Multidegree ybound);

  int tmax() const { return tmax_; }
  const Multidegree& ybound() const { return ybound_; }
  std::size_t num_vars() const { return ybound_.size(); }
  const std::map<SeriesKey, mpz_class>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  bool in_range(int t, const Multidegree& y) const;
  mpz_class coeff(int t, const Multidegree& y) const;
  /// Adds c * t^t y^y. Keys beyond the truncation are dropped.
  void add(int t, const Multidegree& y, const mpz_class& c);

  /// Largest t-degree with a nonzero coefficient (0 for the zero series).
  int t_degree() const;
  BigradedSeries truncated(int tmax, Multidegree ybound) const;
  /// Terms with t-degree exactly `t`.
  std::map<Multidegree, mpz_class> t_slice(int t) const;

  bool same_terms(const BigradedSeries& other) const { return terms_ == other.terms_; }
  bool operator==(const BigradedSeries&) const = default;

  /// Grouped by powers of t, e.g. `1 - t^2*(y1*y2^2 + y1*y3^2) - t^3*y1*y2^2*y3^2`.
  std::string to_string() const;

private:
  int tmax_ = 0;
  Multidegree ybound_;
  std::map<SeriesKey, mpz_class> terms_;
};

/// Throws InputError unless both series share tmax and ybound.
void require_same_truncation(const BigradedSeries& a, const BigradedSeries& b);

BigradedSeries series_add(const BigradedSeries& a, const BigradedSeries& b);
BigradedSeries series_sub(const BigradedSeries& a, const BigradedSeries& b);
BigradedSeries series_mul(const BigradedSeries& a, const BigradedSeries& b);
/// Requires the constant term of `a` to be 1 or -1.
BigradedSeries series_inverse(const BigradedSeries& a);
/// num / den, with the same unit requirement on den.
BigradedSeries series_divide(const BigradedSeries& num, const BigradedSeries& den);
/// (1 + sign * y^j t^n)^power for any integer power, truncated.
BigradedSeries binomial_factor(int n, const Multidegree& j, int sign, const mpz_class& power,
                               int tmax, const Multidegree& ybound);

/// Exponents e_{n,j} of the product decomposition
///   P = prod_{n odd} (1 + y^j t^n)^{e_{n,j}} / prod_{n even} (1 - y^j t^n)^{e_{n,j}}.
struct DeviationKey {
  int n = 0;
  Multidegree j;

  auto operator<=>(const DeviationKey&) const = default;
  bool operator==(const DeviationKey&) const = default;
};
using DeviationTable = std::map<DeviationKey, mpz_class>;

/// Peels the factors off one t-degree at a time, up to t-degree nmax
/// (capped at P's own truncation). Requires constant term 1.
DeviationTable deviations(const BigradedSeries& p, int nmax);
/// Expands the product decomposition of `table`, truncated.
BigradedSeries series_from_deviations(const DeviationTable& table, int tmax, const Multidegree& ybound);

struct CandidateTerm {
  int sign = 1;
  int t_power = 0;
  Multidegree y;

  auto operator<=>(const CandidateTerm&) const = default;
  bool operator==(const CandidateTerm&) const = default;
};

/// {((-1)^{l_J}, |J| + l_J, m_J) : J nonempty subset of the generators}.
std::set<CandidateTerm> candidate_terms(const MonomialIdeal& ideal);

/// True iff every nonconstant term's y-multidegree is the lcm of some
/// nonempty set of generators.
bool verify_lcm_coefficients(const BigradedSeries& q, const MonomialIdeal& ideal);

/// True iff (sign(c), t, y) lies in `candidates` for every nonconstant term.
bool terms_within_candidates(const BigradedSeries& q, const std::set<CandidateTerm>& candidates);

} // namespace monores
