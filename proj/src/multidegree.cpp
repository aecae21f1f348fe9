#include "monores/multidegree.hpp"

#include <algorithm>
#include <numeric>

namespace monores {

Multidegree::Multidegree(std::initializer_list<Exponent> exps) : exps_(exps) {
  for (Exponent e : exps_)
    if (e < 0)
      throw InputError("negative exponent in multidegree");
}

Multidegree::Multidegree(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_)
    if (e < 0)
      throw InputError("negative exponent in multidegree");
}

Multidegree Multidegree::unit(std::size_t num_vars, std::size_t var) {
  Multidegree m(num_vars);
  m.exps_.at(var) = 1;
  return m;
}

Multidegree Multidegree::indicator(std::size_t num_vars, std::span<const std::size_t> vars) {
  Multidegree m(num_vars);
  for (std::size_t v : vars)
    m.exps_.at(v) = 1;
  return m;
}

std::int64_t Multidegree::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::int64_t{0});
}

bool Multidegree::is_zero() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Multidegree::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Multidegree::divides(const Multidegree& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i])
      return false;
  return true;
}

bool Multidegree::strictly_divides_everywhere(const Multidegree& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] >= other.exps_[i])
      return false;
  return true;
}

bool Multidegree::coprime_to(const Multidegree& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0)
      return false;
  return true;
}

Multidegree Multidegree::lcm(const Multidegree& other) const {
  Multidegree r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Multidegree Multidegree::gcd(const Multidegree& other) const {
  Multidegree r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return r;
}

Multidegree Multidegree::operator+(const Multidegree& other) const {
  Multidegree r = *this;
  r += other;
  return r;
}

Multidegree& Multidegree::operator+=(const Multidegree& other) {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    exps_[i] += other.exps_[i];
  return *this;
}

Multidegree Multidegree::operator-(const Multidegree& other) const {
  Multidegree r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] -= other.exps_[i];
    if (r.exps_[i] < 0)
      throw InternalError("monomial quotient with negative exponent");
  }
  return r;
}

std::string Multidegree::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += i < names.size() ? names[i] : "v" + std::to_string(i + 1);
    if (exps_[i] > 1)
      out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Multidegree::to_y_string() const {
  std::vector<std::string> names;
  names.reserve(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    names.push_back("y" + std::to_string(i + 1));
  return to_string(names);
}

std::size_t MultidegreeHash::operator()(const Multidegree& m) const noexcept {
  std::size_t h = m.size();
  for (Exponent e : m)
    h = h * 1000003u ^ static_cast<std::size_t>(e);
  return h;
}

Box::Box(Multidegree bound) : bound_(std::move(bound)) {
  constexpr std::size_t kMaxBoxSize = std::size_t{1} << 26;
  stride_.resize(bound_.size());
  size_ = 1;
  for (std::size_t i = bound_.size(); i-- > 0;) {
    stride_[i] = size_;
    size_ *= static_cast<std::size_t>(bound_[i]) + 1;
    if (size_ > kMaxBoxSize)
      throw InputError("multidegree bound is too large to enumerate");
  }
  degree_.resize(size_);
  for (std::size_t idx = 0; idx < size_; ++idx) {
    std::int64_t d = 0;
    std::size_t rest = idx;
    for (std::size_t i = 0; i < bound_.size(); ++i) {
      d += static_cast<std::int64_t>(rest / stride_[i]);
      rest %= stride_[i];
    }
    degree_[idx] = d;
  }
  graded_.resize(size_);
  std::iota(graded_.begin(), graded_.end(), std::size_t{0});
  std::stable_sort(graded_.begin(), graded_.end(),
                   [&](std::size_t a, std::size_t b) { return degree_[a] < degree_[b]; });
}

bool Box::contains(const Multidegree& m) const {
  return m.size() == bound_.size() && m.divides(bound_);
}

std::size_t Box::index_of(const Multidegree& m) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < bound_.size(); ++i)
    idx += stride_[i] * static_cast<std::size_t>(m[i]);
  return idx;
}

Multidegree Box::at(std::size_t index) const {
  Multidegree m(bound_.size());
  for (std::size_t i = 0; i < bound_.size(); ++i) {
    m[i] = static_cast<Exponent>(index / stride_[i]);
    index %= stride_[i];
  }
  return m;
}

} // namespace monores
