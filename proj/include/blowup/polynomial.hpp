#ifndef BLOWUP_POLYNOMIAL_HPP
#define BLOWUP_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "blowup/field.hpp"
#include "blowup/monomial.hpp"
#include "blowup/ring.hpp"

namespace blowup {

template <class K>
struct Term {
  typename K::Elem coeff;
  Monomial mono;
};

/// A sparse multivariate polynomial over an exact field. Terms are kept
/// strictly descending under the ring's active order, with no zero
/// coefficients and no repeated monomials; the empty term list is zero.
template <class K>
class Polynomial {
 public:
  using Elem = typename K::Elem;

  static Polynomial zero(RingPtr<K> ring) { return Polynomial(std::move(ring), {}); }

  static Polynomial constant(RingPtr<K> ring, Elem c) {
    std::vector<Term<K>> ts;
    if (!ring->field().is_zero(c))
      ts.push_back({std::move(c), Monomial::one(ring->nvars())});
    return Polynomial(std::move(ring), std::move(ts));
  }

  static Polynomial one(RingPtr<K> ring) {
    auto c = ring->field().one();
    return constant(std::move(ring), std::move(c));
  }

  static Polynomial variable(RingPtr<K> ring, std::size_t i) {
    auto m = Monomial::variable(ring->nvars(), i);
    return from_monomial(std::move(ring), std::move(m));
  }

  static Polynomial from_monomial(RingPtr<K> ring, Monomial m) {
    auto c = ring->field().one();
    std::vector<Term<K>> ts;
    ts.push_back({std::move(c), std::move(m)});
    return Polynomial(std::move(ring), std::move(ts));
  }

  /// Canonicalizing constructor: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(RingPtr<K> ring, std::vector<Term<K>> ts) {
    const auto& field = ring->field();
    const auto& ord = ring->order();
    for (const auto& t : ts)
      if (t.mono.nvars() != ring->nvars())
        throw RingMismatch("term has wrong number of variables for ring");
    std::sort(ts.begin(), ts.end(), [&ord](const Term<K>& a, const Term<K>& b) {
      return ord.greater(a.mono, b.mono);
    });
    std::vector<Term<K>> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = field.add(out.back().coeff, t.coeff);
        if (field.is_zero(out.back().coeff)) out.pop_back();
      } else if (!field.is_zero(t.coeff)) {
        out.push_back(std::move(t));
      }
    }
    return Polynomial(std::move(ring), std::move(out));
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term<K>& leading_term() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Elem& leading_coeff() const { return leading_term().coeff; }

  /// Total degree; -1 for the zero polynomial.
  std::int64_t degree() const {
    std::int64_t d = -1;
    for (const auto& t : terms_)
      d = std::max<std::int64_t>(d, static_cast<std::int64_t>(t.mono.degree()));
    return d;
  }

  std::int64_t degree_on(std::span<const std::size_t> vars) const {
    std::int64_t d = -1;
    for (const auto& t : terms_)
      d = std::max<std::int64_t>(d, static_cast<std::int64_t>(t.mono.degree_on(vars)));
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  /// Every term has the same degree in the listed variables.
  bool is_homogeneous_on(std::span<const std::size_t> vars) const {
    for (const auto& t : terms_)
      if (t.mono.degree_on(vars) != terms_.front().mono.degree_on(vars)) return false;
    return true;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    return merge(a, b, /*negate_b=*/false);
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    return merge(a, b, /*negate_b=*/true);
  }

  Polynomial operator-() const {
    const auto& field = ring_->field();
    std::vector<Term<K>> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({field.neg(t.coeff), t.mono});
    return Polynomial(ring_, std::move(ts));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return zero(a.ring_);
    const auto& field = a.ring_->field();
    std::vector<Term<K>> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_)
        prod.push_back({field.mul(s.coeff, t.coeff), s.mono.times(t.mono)});
    return from_terms(a.ring_, std::move(prod));
  }

  Polynomial scaled_by(const Elem& c) const {
    const auto& field = ring_->field();
    if (field.is_zero(c)) return zero(ring_);
    std::vector<Term<K>> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({field.mul(t.coeff, c), t.mono});
    return Polynomial(ring_, std::move(ts));
  }

  /// c * m * this, a single pass (no re-sort needed: orders are multiplicative).
  Polynomial times_term(const Elem& c, const Monomial& m) const {
    const auto& field = ring_->field();
    if (field.is_zero(c)) return zero(ring_);
    std::vector<Term<K>> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_)
      ts.push_back({field.mul(t.coeff, c), t.mono.times(m)});
    return Polynomial(ring_, std::move(ts));
  }

  Polynomial pow(std::uint64_t e) const {
    Polynomial acc = one(ring_);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return acc;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    const auto& field = ring_->field();
    if (field.is_one(leading_coeff())) return *this;
    return scaled_by(field.inv(leading_coeff()));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.terms_.size() != b.terms_.size()) return false;
    const auto& field = a.ring_->field();
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) ||
          !field.equal(a.terms_[i].coeff, b.terms_[i].coeff))
        return false;
    return true;
  }

  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// a - c * m * b in one merge pass; the workhorse of polynomial reduction.
  static Polynomial fused_sub_mul(const Polynomial& a, const Elem& c,
                                  const Monomial& m, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    const auto& field = a.ring_->field();
    const auto& ord = a.ring_->order();
    std::vector<Term<K>> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    std::optional<Monomial> bj;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j < b.terms_.size() && !bj) bj = b.terms_[j].mono.times(m);
      if (j == b.terms_.size()) {
        out.push_back(a.terms_[i++]);
        continue;
      }
      if (i == a.terms_.size()) {
        Elem nc = field.neg(field.mul(c, b.terms_[j].coeff));
        if (!field.is_zero(nc)) out.push_back({std::move(nc), *std::move(bj)});
        bj.reset();
        ++j;
        continue;
      }
      auto cmp = ord.compare(a.terms_[i].mono, *bj);
      if (cmp == std::strong_ordering::greater) {
        out.push_back(a.terms_[i++]);
      } else if (cmp == std::strong_ordering::less) {
        Elem nc = field.neg(field.mul(c, b.terms_[j].coeff));
        if (!field.is_zero(nc)) out.push_back({std::move(nc), *std::move(bj)});
        bj.reset();
        ++j;
      } else {
        Elem nc = field.sub(a.terms_[i].coeff, field.mul(c, b.terms_[j].coeff));
        if (!field.is_zero(nc)) out.push_back({std::move(nc), a.terms_[i].mono});
        bj.reset();
        ++i;
        ++j;
      }
    }
    return Polynomial(a.ring_, std::move(out));
  }

 private:
  Polynomial(RingPtr<K> ring, std::vector<Term<K>> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool negate_b) {
    const auto& field = a.ring_->field();
    const auto& ord = a.ring_->order();
    std::vector<Term<K>> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    auto bcoeff = [&](std::size_t jj) {
      return negate_b ? field.neg(b.terms_[jj].coeff) : b.terms_[jj].coeff;
    };
    while (i < a.terms_.size() && j < b.terms_.size()) {
      auto cmp = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (cmp == std::strong_ordering::greater) {
        out.push_back(a.terms_[i++]);
      } else if (cmp == std::strong_ordering::less) {
        out.push_back({bcoeff(j), b.terms_[j].mono});
        ++j;
      } else {
        Elem c = field.add(a.terms_[i].coeff, bcoeff(j));
        if (!field.is_zero(c)) out.push_back({std::move(c), a.terms_[i].mono});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.push_back({bcoeff(j), b.terms_[j].mono});
    return Polynomial(a.ring_, std::move(out));
  }

  RingPtr<K> ring_;
  std::vector<Term<K>> terms_;
};

/// Move a polynomial into another ring over the same field, matching
/// variables by name. Every variable actually used must exist in the
/// target; this both re-sorts under the target's order and permutes or
/// embeds exponent vectors (also used to drop unused auxiliary variables).
template <class K>
Polynomial<K> transfer(const Polynomial<K>& f, const RingPtr<K>& target) {
  const auto& src = *f.ring();
  if (f.ring() == target) return f;
  if (!(src.field() == target->field()))
    throw RingMismatch("transfer between different coefficient fields");
  // src index -> target index, or npos when the variable is absent
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(src.nvars(), npos);
  for (std::size_t i = 0; i < src.nvars(); ++i)
    if (auto j = target->var_index(src.var_name(i))) map[i] = *j;
  std::vector<Term<K>> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial::ExpVec e(target->nvars(), 0);
    for (std::size_t i = 0; i < src.nvars(); ++i) {
      if (t.mono.exp(i) == 0) continue;
      if (map[i] == npos)
        throw RingMismatch("variable '" + src.var_name(i) +
                           "' does not exist in the target ring");
      e[map[i]] = t.mono.exp(i);
    }
    ts.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial<K>::from_terms(target, std::move(ts));
}

/// Ring homomorphism determined by an image polynomial per source variable.
template <class K>
Polynomial<K> substitute(const Polynomial<K>& f, const RingPtr<K>& target,
                         const std::vector<Polynomial<K>>& images) {
  if (images.size() != f.ring()->nvars())
    throw RingMismatch("substitute needs one image per source variable");
  for (const auto& g : images) require_same_ring(g.ring(), target);
  if (!(f.ring()->field() == target->field()))
    throw RingMismatch("substitute between different coefficient fields");
  auto acc = Polynomial<K>::zero(target);
  for (const auto& t : f.terms()) {
    auto prod = Polynomial<K>::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono.exp(i) > 0) prod = prod * images[i].pow(t.mono.exp(i));
    acc = acc + prod;
  }
  return acc;
}

/// Reduce a rational polynomial mod p. Fails if p divides a denominator.
inline Polynomial<PrimeField> to_prime_field(const Polynomial<Rationals>& f,
                                             const RingPtr<PrimeField>& target) {
  if (f.ring()->vars() != target->vars())
    throw RingMismatch("prime-field reduction needs identical variables");
  const PrimeField& fp = target->field();
  std::vector<Term<PrimeField>> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    auto num = fp.from_decimal(t.coeff.get_num().get_str());
    auto den = fp.from_decimal(t.coeff.get_den().get_str());
    if (fp.is_zero(den))
      throw FieldError("denominator divisible by " + std::to_string(fp.modulus()));
    ts.push_back({fp.div(num, den), t.mono});
  }
  return Polynomial<PrimeField>::from_terms(target, std::move(ts));
}

}  // namespace blowup

#endif  // BLOWUP_POLYNOMIAL_HPP
