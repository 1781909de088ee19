#ifndef BLOWUP_MONOMIAL_HPP
#define BLOWUP_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>

#include <boost/container/small_vector.hpp>

#include "blowup/errors.hpp"

namespace blowup {

/// A power product in a fixed number of variables: an exponent vector with
/// its total degree cached. Exponents are machine words; arithmetic checks
/// for overflow (degrees in actual use stay tiny).
class Monomial {
 public:
  using Exp = std::uint32_t;
  using ExpVec = boost::container::small_vector<Exp, 14>;

  explicit Monomial(ExpVec exps) : exps_(std::move(exps)) { recompute_degree(); }
  Monomial(std::initializer_list<Exp> exps) : exps_(exps) { recompute_degree(); }

  static Monomial one(std::size_t nvars) { return Monomial(ExpVec(nvars, 0)); }

  static Monomial variable(std::size_t nvars, std::size_t i, Exp e = 1) {
    ExpVec v(nvars, 0);
    v.at(i) = e;
    return Monomial(std::move(v));
  }

  std::size_t nvars() const { return exps_.size(); }
  Exp exp(std::size_t i) const { return exps_[i]; }
  std::span<const Exp> exps() const { return {exps_.data(), exps_.size()}; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  std::uint64_t degree_on(std::span<const std::size_t> vars) const {
    std::uint64_t d = 0;
    for (std::size_t i : vars) d += exps_[i];
    return d;
  }

  std::uint64_t weighted_degree(std::span<const std::uint64_t> weights) const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) d += weights[i] * exps_[i];
    return d;
  }

  Monomial times(const Monomial& o) const {
    check_same_size(o);
    ExpVec v(exps_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::uint64_t s = std::uint64_t{exps_[i]} + o.exps_[i];
      if (s > std::uint32_t(-1)) throw Error("monomial exponent overflow");
      v[i] = static_cast<Exp>(s);
    }
    return Monomial(std::move(v));
  }

  /// Does this monomial divide m?
  bool divides(const Monomial& m) const {
    check_same_size(m);
    if (degree_ > m.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > m.exps_[i]) return false;
    return true;
  }

  /// this / d; requires d.divides(*this).
  Monomial quotient(const Monomial& d) const {
    check_same_size(d);
    ExpVec v(exps_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (d.exps_[i] > exps_[i]) throw Error("monomial quotient is not a monomial");
      v[i] = exps_[i] - d.exps_[i];
    }
    return Monomial(std::move(v));
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_same_size(b);
    ExpVec v(a.exps_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i];
    return Monomial(std::move(v));
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    a.check_same_size(b);
    ExpVec v(a.exps_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = a.exps_[i] < b.exps_[i] ? a.exps_[i] : b.exps_[i];
    return Monomial(std::move(v));
  }

  bool coprime(const Monomial& o) const {
    check_same_size(o);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && o.exps_[i] != 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

  /// Deterministic structural order for use as a container key.
  /// Not a monomial order; use MonomialOrder for those.
  struct RawLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
      if (a.exps_.size() != b.exps_.size()) return a.exps_.size() < b.exps_.size();
      for (std::size_t i = 0; i < a.exps_.size(); ++i)
        if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i];
      return false;
    }
  };

 private:
  void recompute_degree() {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }
  void check_same_size(const Monomial& o) const {
    if (exps_.size() != o.exps_.size())
      throw Error("monomial length mismatch: " + std::to_string(exps_.size()) +
                  " vs " + std::to_string(o.exps_.size()));
  }

  ExpVec exps_;
  std::uint64_t degree_ = 0;
};

}  // namespace blowup

#endif  // BLOWUP_MONOMIAL_HPP
