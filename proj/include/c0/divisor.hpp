#pragma once

#include <map>
#include <string>
#include <vector>

#include "c0/gaussian.hpp"
#include "c0/poly.hpp"

namespace c0 {

// Finite Blaschke divisor: a multiset of zeros strictly inside the unit disc,
// each an exact Gaussian rational with a positive multiplicity.  The empty
// multiset is the unit divisor.  Divisibility is multiset containment, so
// gcd/lcm are pointwise min/max of multiplicities and the quotient (when it
// exists) is the multiset difference.
class BlaschkeDivisor {
 public:
  BlaschkeDivisor() = default;

  static BlaschkeDivisor one() { return BlaschkeDivisor(); }
  // z^n: the origin with multiplicity n.
  static BlaschkeDivisor z_power(int n);

  // Rejects |point| >= 1 (checked exactly via re^2 + im^2) and mult <= 0.
  void add_zero(const GaussianRational& point, int multiplicity = 1);

  int multiplicity_at(const GaussianRational& point) const;
  int degree() const;  // total multiplicity
  bool is_one() const { return zeros_.empty(); }

  const std::map<GaussianRational, int>& zeros() const { return zeros_; }

  friend BlaschkeDivisor mul(const BlaschkeDivisor& a, const BlaschkeDivisor& b);
  // Multiset difference a / b, or nullopt when b does not divide a.
  friend std::optional<BlaschkeDivisor> try_div(const BlaschkeDivisor& a, const BlaschkeDivisor& b);
  friend BlaschkeDivisor gcd(const BlaschkeDivisor& a, const BlaschkeDivisor& b);
  friend BlaschkeDivisor lcm(const BlaschkeDivisor& a, const BlaschkeDivisor& b);

  bool divides(const BlaschkeDivisor& other) const;

  // Conjugates every zero (the divisor of f~(z) = conj(f(conj z))).
  BlaschkeDivisor tilde() const;

  bool operator==(const BlaschkeDivisor& o) const { return zeros_ == o.zeros_; }
  bool operator!=(const BlaschkeDivisor& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::map<GaussianRational, int> zeros_;
};

// Integer partition: weakly decreasing nonnegative parts.  Trailing zeros are
// permitted in storage; comparisons that should ignore them use normalized().
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p);
  explicit Partition(std::vector<int> p);

  int sum() const;
  int nonzero_count() const;
  int part(int i) const {  // 0-indexed; zero beyond the stored parts
    return i < static_cast<int>(parts.size()) ? parts[static_cast<size_t>(i)] : 0;
  }

  Partition normalized() const;    // trailing zeros removed
  Partition padded(int len) const; // zero-padded to at least len parts

  // Containment as Young diagrams: every part bounded by the other's.
  bool contained_in(const Partition& o) const;

  bool same_as(const Partition& o) const;  // equality ignoring trailing zeros
  bool operator==(const Partition& o) const { return parts == o.parts; }

  std::string to_string() const;
};

}  // namespace c0
