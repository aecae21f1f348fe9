#include "monores/field.hpp"

namespace monores {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

void validate_characteristic(std::uint64_t characteristic) {
  if (characteristic == 0)
    return;
  if (characteristic >= (std::uint64_t{1} << 31) || !is_prime(characteristic))
    throw InputError("field characteristic must be 0 or a prime below 2^31, got " +
                     std::to_string(characteristic));
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) { validate_characteristic(p); }

PrimeField::Element PrimeField::from_int(long v) const {
  const auto m = static_cast<long>(p_);
  long r = v % m;
  return static_cast<Element>(r < 0 ? r + m : r);
}

PrimeField::Element PrimeField::from(const Coeff& c) const {
  mpz_class num = c.get_num() % p_;
  mpz_class den = c.get_den() % p_;
  if (num < 0)
    num += p_;
  if (den == 0)
    throw InputError("rational coefficient is undefined modulo " + std::to_string(p_));
  return mul(num.get_ui(), inv(den.get_ui()));
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0)
    throw InternalError("inverse of zero in a prime field");
  // Fermat: a^(p-2)
  Element result = 1, base = a % p_;
  for (std::uint64_t e = p_ - 2; e; e >>= 1) {
    if (e & 1)
      result = result * base % p_;
    base = base * base % p_;
  }
  return result;
}

} // namespace monores
