#pragma once

#include "monores/multidegree.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace monores {

/// Rational scalars stored in complexes. Over a prime field they hold the
/// canonical representative in [0, p).
using Coeff = mpq_class;

/// Exact rationals.
class RationalField {
public:
  using Element = mpq_class;

  std::uint64_t characteristic() const { return 0; }
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from(const Coeff& c) const { return c; }
  Element from_int(long v) const { return v; }
  Coeff to_coeff(const Element& e) const { return e; }
  bool is_zero(const Element& e) const { return sgn(e) == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const { return 1 / a; }
  /// a -= f * b
  void submul(Element& a, const Element& f, const Element& b) const { a -= f * b; }
};

/// Z/p for a prime p < 2^31.
class PrimeField {
public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from(const Coeff& c) const;
  Element from_int(long v) const;
  Coeff to_coeff(const Element& e) const { return Coeff(static_cast<unsigned long>(e)); }
  bool is_zero(Element e) const { return e == 0; }
  Element add(Element a, Element b) const { return (a + b) % p_; }
  Element sub(Element a, Element b) const { return (a + p_ - b) % p_; }
  Element mul(Element a, Element b) const { return a * b % p_; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;
  void submul(Element& a, Element f, Element b) const { a = (a + p_ - f * b % p_) % p_; }

private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Throws InputError unless `characteristic` is 0 or a prime below 2^31.
void validate_characteristic(std::uint64_t characteristic);

/// Calls `fn(field)` with the field of the given characteristic.
template <class Fn>
decltype(auto) with_field(std::uint64_t characteristic, Fn&& fn) {
  if (characteristic == 0)
    return fn(RationalField{});
  return fn(PrimeField{characteristic});
}

} // namespace monores
