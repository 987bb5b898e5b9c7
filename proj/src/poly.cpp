#include "c0/poly.hpp"

#include <algorithm>

#include "c0/errors.hpp"

namespace c0 {

namespace {
const GaussianRational kZero{};
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(int exponent, GaussianRational scale) {
  if (exponent < 0) throw DomainError("negative monomial exponent");
  if (scale.is_zero()) return Poly();
  std::vector<GaussianRational> c(static_cast<size_t>(exponent) + 1);
  c.back() = std::move(scale);
  return Poly(std::move(c));
}

const GaussianRational& Poly::at(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(k)];
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<GaussianRational> c(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = at(static_cast<int>(i)) + o.at(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<GaussianRational> c(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = at(static_cast<int>(i)) - o.at(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<GaussianRational> c(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(c));
}

Poly Poly::operator*(const GaussianRational& s) const {
  std::vector<GaussianRational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  return Poly(std::move(c));
}

Poly Poly::truncated(int n) const {
  if (n < 0) throw DomainError("negative truncation length");
  std::vector<GaussianRational> c(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), static_cast<size_t>(n)));
  return Poly(std::move(c));
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw DomainError("negative shift");
  if (is_zero()) return Poly();
  std::vector<GaussianRational> c(c_.size() + static_cast<size_t>(k));
  std::copy(c_.begin(), c_.end(), c.begin() + k);
  return Poly(std::move(c));
}

int valuation(const Poly& f, int n) {
  if (n < 0) throw DomainError("valuation cap must be nonnegative");
  for (int k = 0; k < n; ++k) {
    if (!f.at(k).is_zero()) return k;
  }
  return n;
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= f.degree(); ++k) {
    if (f.at(k).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(f.at(k)) + ")";
    if (k == 1) out += "*z";
    if (k > 1) out += "*z^" + std::to_string(k);
  }
  return out;
}

}  // namespace c0
