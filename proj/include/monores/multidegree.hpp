#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace monores {

/// Raised for malformed user input (bad files, length mismatches, refused
/// preconditions). The CLI maps it to exit status 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computed object breaks a known mathematical bound, which
/// indicates a bug in the library.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Raised when an argument breaks a documented precondition that input
/// parsing cannot catch, such as transporting a term outside the lattice.
class ContractError : public InputError {
public:
  using InputError::InputError;
};

using Exponent = std::int32_t;

/// Exponent vector of a monomial in N^n. Used both for x-monomials of the
/// polynomial ring and for y-monomials of series coefficients.
class Multidegree {
public:
  Multidegree() = default;
  explicit Multidegree(std::size_t num_vars) : exps_(num_vars, 0) {}
  Multidegree(std::initializer_list<Exponent> exps);
  explicit Multidegree(std::vector<Exponent> exps);

  static Multidegree unit(std::size_t num_vars, std::size_t var);
  static Multidegree indicator(std::size_t num_vars, std::span<const std::size_t> vars);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  const std::vector<Exponent>& vec() const { return exps_; }

  auto begin() const { return exps_.begin(); }
  auto end() const { return exps_.end(); }

  std::int64_t total_degree() const;
  bool is_zero() const;
  bool is_squarefree() const;

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const Multidegree& other) const;
  /// Componentwise < in every coordinate.
  bool strictly_divides_everywhere(const Multidegree& other) const;
  bool coprime_to(const Multidegree& other) const;

  Multidegree lcm(const Multidegree& other) const;
  Multidegree gcd(const Multidegree& other) const;
  Multidegree operator+(const Multidegree& other) const;
  /// Requires other.divides(*this).
  Multidegree operator-(const Multidegree& other) const;
  Multidegree& operator+=(const Multidegree& other);

  auto operator<=>(const Multidegree&) const = default;
  bool operator==(const Multidegree&) const = default;

  /// Renders as `x1^2*x3` using the given names; "1" for the zero vector.
  std::string to_string(std::span<const std::string> names) const;
  /// Renders with names y1..yn.
  std::string to_y_string() const;

private:
  std::vector<Exponent> exps_;
};

struct MultidegreeHash {
  std::size_t operator()(const Multidegree& m) const noexcept;
};

/// Enumerates every multidegree below a componentwise bound. Positions are
/// mixed-radix indices, so lookups by multidegree are O(n).
class Box {
public:
  Box() = default;
  explicit Box(Multidegree bound);

  const Multidegree& bound() const { return bound_; }
  std::size_t num_vars() const { return bound_.size(); }
  std::size_t size() const { return size_; }
  bool contains(const Multidegree& m) const;
  std::size_t index_of(const Multidegree& m) const;
  Multidegree at(std::size_t index) const;
  /// Indices sorted by total degree, ties in index order.
  const std::vector<std::size_t>& graded_order() const { return graded_; }
  std::int64_t total_degree_at(std::size_t index) const { return degree_[index]; }

private:
  Multidegree bound_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
  std::vector<std::size_t> graded_;
  std::vector<std::int64_t> degree_;
};

} // namespace monores
