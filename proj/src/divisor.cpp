#include "c0/divisor.hpp"

#include <algorithm>
#include <optional>

#include "c0/errors.hpp"

namespace c0 {

BlaschkeDivisor BlaschkeDivisor::z_power(int n) {
  if (n < 0) throw DomainError("negative power of z");
  BlaschkeDivisor d;
  if (n > 0) d.add_zero(GaussianRational(0), n);
  return d;
}

void BlaschkeDivisor::add_zero(const GaussianRational& point, int multiplicity) {
  if (multiplicity <= 0) throw DomainError("zero multiplicity must be positive");
  if (point.norm() >= 1) {
    throw DomainError("divisor zero " + c0::to_string(point) + " is not strictly inside the unit disc");
  }
  zeros_[point] += multiplicity;
}

int BlaschkeDivisor::multiplicity_at(const GaussianRational& point) const {
  auto it = zeros_.find(point);
  return it == zeros_.end() ? 0 : it->second;
}

int BlaschkeDivisor::degree() const {
  int d = 0;
  for (const auto& [_, m] : zeros_) d += m;
  return d;
}

BlaschkeDivisor mul(const BlaschkeDivisor& a, const BlaschkeDivisor& b) {
  BlaschkeDivisor r = a;
  for (const auto& [p, m] : b.zeros_) r.zeros_[p] += m;
  return r;
}

std::optional<BlaschkeDivisor> try_div(const BlaschkeDivisor& a, const BlaschkeDivisor& b) {
  BlaschkeDivisor r;
  for (const auto& [p, m] : a.zeros_) {
    int q = m - b.multiplicity_at(p);
    if (q < 0) return std::nullopt;
    if (q > 0) r.zeros_[p] = q;
  }
  for (const auto& [p, m] : b.zeros_) {
    if (a.multiplicity_at(p) < m) return std::nullopt;
  }
  return r;
}

BlaschkeDivisor gcd(const BlaschkeDivisor& a, const BlaschkeDivisor& b) {
  BlaschkeDivisor r;
  for (const auto& [p, m] : a.zeros_) {
    int g = std::min(m, b.multiplicity_at(p));
    if (g > 0) r.zeros_[p] = g;
  }
  return r;
}

BlaschkeDivisor lcm(const BlaschkeDivisor& a, const BlaschkeDivisor& b) {
  BlaschkeDivisor r = a;
  for (const auto& [p, m] : b.zeros_) {
    int& cur = r.zeros_[p];
    cur = std::max(cur, m);
  }
  return r;
}

bool BlaschkeDivisor::divides(const BlaschkeDivisor& other) const {
  for (const auto& [p, m] : zeros_) {
    if (other.multiplicity_at(p) < m) return false;
  }
  return true;
}

BlaschkeDivisor BlaschkeDivisor::tilde() const {
  BlaschkeDivisor r;
  for (const auto& [p, m] : zeros_) r.zeros_[p.conj()] = m;
  return r;
}

std::string BlaschkeDivisor::to_string() const {
  if (zeros_.empty()) return "1";
  std::string out;
  for (const auto& [p, m] : zeros_) {
    if (!out.empty()) out += " ";
    out += "(" + c0::to_string(p) + ")^" + std::to_string(m);
  }
  return out;
}

Partition::Partition(std::initializer_list<int> p) : parts(p) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1]))
      throw DomainError("partition parts must be weakly decreasing and nonnegative");
  }
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1]))
      throw DomainError("partition parts must be weakly decreasing and nonnegative");
  }
}

int Partition::sum() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

int Partition::nonzero_count() const {
  int c = 0;
  for (int p : parts)
    if (p > 0) ++c;
  return c;
}

Partition Partition::normalized() const {
  Partition r = *this;
  while (!r.parts.empty() && r.parts.back() == 0) r.parts.pop_back();
  return r;
}

Partition Partition::padded(int len) const {
  Partition r = *this;
  while (static_cast<int>(r.parts.size()) < len) r.parts.push_back(0);
  return r;
}

bool Partition::contained_in(const Partition& o) const {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] > o.part(static_cast<int>(i))) return false;
  }
  return true;
}

bool Partition::same_as(const Partition& o) const {
  return normalized() == o.normalized();
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
  return out + ")";
}

}  // namespace c0
