#ifndef BLOWUP_HILBERT_HPP
#define BLOWUP_HILBERT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "blowup/idealops.hpp"

namespace blowup {

inline mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// A rational function N(u) / (1-u)^k with integer numerator, stored in
/// the (1-u)-cancelled form: either N(1) != 0 or N = 0. For the series
/// of a graded quotient, k is then the Krull dimension and N(1) the
/// length when k = 0.
class HilbertSeries {
 public:
  HilbertSeries(std::vector<mpz_class> numerator, unsigned denom_exponent)
      : num_(std::move(numerator)), denom_(denom_exponent) {
    trim();
    while (!num_.empty() && denom_ > 0 && eval_at_one() == 0) divide_by_one_minus_u();
    if (num_.empty()) denom_ = 0;
  }

  const std::vector<mpz_class>& numerator() const { return num_; }
  unsigned dimension() const { return denom_; }
  bool is_zero() const { return num_.empty(); }

  mpz_class eval_at_one() const {
    mpz_class s = 0;
    for (const auto& c : num_) s += c;
    return s;
  }

  /// Finite length (the numerator evaluated at 1) when the dimension is
  /// zero; no value means the quotient is infinite-dimensional over k.
  std::optional<mpz_class> finite_length() const {
    if (denom_ != 0) return std::nullopt;
    return eval_at_one();
  }

  /// Coefficient of u^t in the power-series expansion.
  mpz_class coefficient(std::uint64_t t) const {
    mpz_class s = 0;
    for (std::size_t j = 0; j < num_.size(); ++j) {
      if (j > t) break;
      if (denom_ == 0) {
        if (j == t) s += num_[j];
      } else {
        s += num_[j] * binomial(t - j + denom_ - 1, denom_ - 1);
      }
    }
    return s;
  }

  bool operator==(const HilbertSeries& o) const {
    return denom_ == o.denom_ && num_ == o.num_;
  }

  std::string to_string() const {
    std::string n = numerator_string();
    if (denom_ == 0) return n;
    return "(" + n + ") / (1-u)^" + std::to_string(denom_);
  }

  std::string numerator_string() const {
    if (num_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t j = 0; j < num_.size(); ++j) {
      if (num_[j] == 0) continue;
      mpz_class a = abs(num_[j]);
      bool neg = num_[j] < 0;
      std::string piece;
      if (j == 0)
        piece = a.get_str();
      else {
        piece = (a == 1 ? std::string() : a.get_str() + "*");
        piece += j == 1 ? "u" : "u^" + std::to_string(j);
      }
      if (first) {
        out += neg ? "-" : "";
        out += piece;
        first = false;
      } else {
        out += neg ? " - " : " + ";
        out += piece;
      }
    }
    return out.empty() ? "0" : out;
  }

  static std::vector<mpz_class> mul_numerators(const std::vector<mpz_class>& a,
                                               const std::vector<mpz_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpz_class> out(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  }

 private:
  void trim() {
    while (!num_.empty() && num_.back() == 0) num_.pop_back();
  }

  void divide_by_one_minus_u() {
    // N = (1-u) Q with Q_i = N_i + Q_{i-1}; exact because N(1) = 0
    std::vector<mpz_class> q(num_.size() - 1);
    mpz_class carry = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      carry += num_[i];
      q[i] = carry;
    }
    num_ = std::move(q);
    trim();
    --denom_;
  }

  std::vector<mpz_class> num_;
  unsigned denom_;
};

namespace detail {

using MonoKey = std::vector<std::vector<std::uint32_t>>;

inline MonoKey mono_key(const std::vector<Monomial>& gens) {
  MonoKey key;
  key.reserve(gens.size());
  for (const auto& m : gens) {
    std::vector<std::uint32_t> e(m.exps().begin(), m.exps().end());
    key.push_back(std::move(e));
  }
  return key;
}

inline void sub_shifted(std::vector<mpz_class>& acc, const std::vector<mpz_class>& v,
                        std::size_t shift) {
  if (acc.size() < v.size() + shift) acc.resize(v.size() + shift, mpz_class(0));
  for (std::size_t i = 0; i < v.size(); ++i) acc[i + shift] -= v[i];
}

inline void add_shifted(std::vector<mpz_class>& acc, const std::vector<mpz_class>& v,
                        std::size_t shift) {
  if (acc.size() < v.size() + shift) acc.resize(v.size() + shift, mpz_class(0));
  for (std::size_t i = 0; i < v.size(); ++i) acc[i + shift] += v[i];
}

/// Unreduced numerator of the series of R/M over (1-u)^nvars, by the
/// pivot recursion N(M) = N(M + (x_j)) + u * N(M : x_j). Base cases:
/// no generators, and pairwise-coprime generators (complete
/// intersections, which covers lone generators and pure powers). The
/// pivot x_j is the variable hitting the most generators; minimality
/// guarantees it splits properly, so both branches shrink.
inline std::vector<mpz_class> monomial_numerator(
    const MonomialIdeal& M, std::map<MonoKey, std::vector<mpz_class>>& memo) {
  const auto& gens = M.gens();
  if (gens.empty()) return {mpz_class(1)};

  bool coprime = true;
  for (std::size_t a = 0; a < gens.size() && coprime; ++a)
    for (std::size_t b = a + 1; b < gens.size() && coprime; ++b)
      if (!gens[a].coprime(gens[b])) coprime = false;
  if (coprime) {
    std::vector<mpz_class> acc{mpz_class(1)};
    for (const auto& g : gens) {
      std::vector<mpz_class> next = acc;
      sub_shifted(next, acc, g.degree());
      acc = std::move(next);
    }
    return acc;
  }

  MonoKey key = mono_key(gens);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const std::size_t n = M.nvars();
  std::vector<std::size_t> freq(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (g.exp(i) > 0) ++freq[i];
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (freq[i] > freq[pivot]) pivot = i;

  // M + (x_pivot): the pivot variable plus the generators it misses
  std::vector<Monomial> plus{Monomial::variable(n, pivot)};
  for (const auto& g : gens)
    if (g.exp(pivot) == 0) plus.push_back(g);
  // M : x_pivot: divide the generators that contain the pivot
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  Monomial xp = Monomial::variable(n, pivot);
  for (const auto& g : gens)
    colon.push_back(g.exp(pivot) > 0 ? g.quotient(xp) : g);

  auto n_plus = monomial_numerator(MonomialIdeal(n, std::move(plus)), memo);
  auto n_colon = monomial_numerator(MonomialIdeal(n, std::move(colon)), memo);
  add_shifted(n_plus, n_colon, 1);
  memo.emplace(std::move(key), n_plus);
  return n_plus;
}

}  // namespace detail

/// Reduced Hilbert series of R/M for a monomial ideal M in `nvars`
/// variables (standard grading).
inline HilbertSeries hilbert_series_monomial(const MonomialIdeal& M,
                                             std::size_t nvars) {
  if (M.nvars() != nvars)
    throw Error("monomial ideal variable count does not match the ring");
  std::map<detail::MonoKey, std::vector<mpz_class>> memo;
  auto num = detail::monomial_numerator(M, memo);
  return HilbertSeries(std::move(num), static_cast<unsigned>(nvars));
}

/// Every element of the reduced basis is homogeneous iff the ideal is;
/// this also accepts homogeneous ideals given by non-homogeneous
/// generating sets.
template <class K>
bool ideal_is_homogeneous(const Ideal<K>& I) {
  for (const auto& g : I.groebner()->basis)
    if (!g.is_homogeneous()) return false;
  return true;
}

/// Hilbert series of R/I through the initial ideal (Macaulay: R/I and
/// R/in(I) share the Hilbert function).
template <class K>
HilbertSeries hilbert_series_quotient(const Ideal<K>& I) {
  if (!ideal_is_homogeneous(I))
    throw NotHomogeneous("Hilbert series requires a homogeneous ideal");
  return hilbert_series_monomial(initial_ideal(I), I.ring()->nvars());
}

template <class K>
mpz_class hilbert_function(const Ideal<K>& I, std::uint64_t d) {
  return hilbert_series_quotient(I).coefficient(d);
}

/// Krull dimension of R/I (denominator exponent of the reduced series).
template <class K>
unsigned dimension(const Ideal<K>& I) {
  return hilbert_series_quotient(I).dimension();
}

/// Length of R/I when finite, nothing otherwise.
template <class K>
std::optional<mpz_class> length_of_quotient(const Ideal<K>& I) {
  return hilbert_series_quotient(I).finite_length();
}

inline mpz_class series_coefficient(const HilbertSeries& hs, std::uint64_t t) {
  return hs.coefficient(t);
}

}  // namespace blowup

#endif  // BLOWUP_HILBERT_HPP
