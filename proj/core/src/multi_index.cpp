#include "weylsb/multi_index.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace weylsb {

MultiIndex::MultiIndex(std::vector<Exponent> alpha, const std::vector<Exponent>& beta)
    : n_(alpha.size()), e_(std::move(alpha)) {
  if (beta.size() != n_) throw std::invalid_argument("alpha and beta differ in length");
  e_.insert(e_.end(), beta.begin(), beta.end());
}

std::uint64_t MultiIndex::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : e_) d += e;
  return d;
}

bool MultiIndex::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](Exponent e) { return e == 0; });
}

bool MultiIndex::divides(const MultiIndex& other) const {
  assert(n_ == other.n_);
  for (std::size_t s = 0; s < e_.size(); ++s) {
    if (e_[s] > other.e_[s]) return false;
  }
  return true;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other) {
  assert(n_ == other.n_);
  for (std::size_t s = 0; s < e_.size(); ++s) e_[s] += other.e_[s];
  return *this;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  assert(b.divides(a));
  MultiIndex r = a;
  for (std::size_t s = 0; s < r.e_.size(); ++s) r.e_[s] -= b.e_[s];
  return r;
}

MultiIndex lcm(const MultiIndex& a, const MultiIndex& b) {
  assert(a.n_ == b.n_);
  MultiIndex r = a;
  for (std::size_t s = 0; s < r.e_.size(); ++s) r.e_[s] = std::max(a.e_[s], b.e_[s]);
  return r;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& m) {
  os << '(';
  for (std::size_t s = 0; s < m.slots().size(); ++s) {
    if (s > 0) os << ',';
    os << m.slot(s);
  }
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const HomogIndex& h) {
  os << '(' << h.k;
  for (Exponent e : h.m.slots()) os << ',' << e;
  return os << ')';
}

}  // namespace weylsb
