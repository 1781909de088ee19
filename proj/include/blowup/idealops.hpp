#ifndef BLOWUP_IDEALOPS_HPP
#define BLOWUP_IDEALOPS_HPP

#include <cstdint>
#include <vector>

#include "blowup/ideal.hpp"

namespace blowup {

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& I, const Ideal<K>& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial<K>> gens = I.gens();
  for (const auto& g : J.gens()) gens.push_back(g);
  return Ideal<K>(I.ring(), std::move(gens));
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& I, const Ideal<K>& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial<K>> gens;
  gens.reserve(I.gens().size() * J.gens().size());
  for (const auto& f : I.gens())
    for (const auto& g : J.gens()) gens.push_back(f * g);
  return Ideal<K>(I.ring(), std::move(gens));
}

/// I^t, generated by all t-fold products of the generators (multisets,
/// indices nondecreasing). I^0 is the unit ideal.
template <class K>
Ideal<K> ideal_power(const Ideal<K>& I, std::uint64_t t) {
  if (t == 0) return Ideal<K>::unit(I.ring());
  if (I.gens().empty()) return Ideal<K>::zero(I.ring());
  std::vector<Polynomial<K>> cur;
  std::vector<std::size_t> last;  // last generator index used in cur[k]
  for (std::size_t i = 0; i < I.gens().size(); ++i) {
    cur.push_back(I.gens()[i]);
    last.push_back(i);
  }
  for (std::uint64_t step = 1; step < t; ++step) {
    std::vector<Polynomial<K>> next;
    std::vector<std::size_t> next_last;
    for (std::size_t k = 0; k < cur.size(); ++k)
      for (std::size_t i = last[k]; i < I.gens().size(); ++i) {
        next.push_back(cur[k] * I.gens()[i]);
        next_last.push_back(i);
      }
    cur = std::move(next);
    last = std::move(next_last);
  }
  return Ideal<K>(I.ring(), std::move(cur));
}

template <class K>
bool ideal_equals(const Ideal<K>& I, const Ideal<K>& J) {
  require_same_ring(I.ring(), J.ring());
  const auto& a = I.groebner()->basis;
  const auto& b = J.groebner()->basis;
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

template <class K>
bool membership(const Polynomial<K>& f, const Ideal<K>& I) {
  require_same_ring(f.ring(), I.ring());
  return normal_form(f, *I.groebner()).is_zero();
}

template <class K>
bool ideal_contains(const Ideal<K>& I, const Ideal<K>& J) {
  auto gb = I.groebner();
  for (const auto& g : J.gens())
    if (!normal_form(g, *gb).is_zero()) return false;
  return true;
}

/// Generators of I restricted to the polynomials free of the front
/// variables: a Groebner basis under a block order with the front block
/// eliminated, filtered. The result lives in the same ring.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<std::size_t>& front_vars) {
  for (std::size_t v : front_vars)
    if (v >= I.ring()->nvars()) throw Error("eliminate: variable index out of range");
  auto order = MonomialOrder::block(front_vars, I.ring()->nvars());
  auto gb = I.groebner(order);
  std::vector<Polynomial<K>> kept;
  for (const auto& g : gb->basis) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (std::size_t v : front_vars)
        if (t.mono.exp(v) != 0) {
          free = false;
          break;
        }
      if (!free) break;
    }
    if (free) kept.push_back(transfer(g, I.ring()));
  }
  return Ideal<K>(I.ring(), std::move(kept));
}

/// I ∩ J via the tag-variable trick: eliminate y from y*I + (1-y)*J.
template <class K>
Ideal<K> ideal_intersection(const Ideal<K>& I, const Ideal<K>& J) {
  require_same_ring(I.ring(), J.ring());
  const auto& R = I.ring();
  if (I.has_no_generators() || J.has_no_generators()) return Ideal<K>::zero(R);
  std::string tag = fresh_var_name(*R, "y");
  std::size_t yidx = R->nvars();
  auto ext = extend_ring(R, {tag},
                         MonomialOrder::block({yidx}, R->nvars() + 1));
  auto y = Polynomial<K>::variable(ext, yidx);
  auto one_minus_y = Polynomial<K>::one(ext) - y;
  std::vector<Polynomial<K>> gens;
  gens.reserve(I.gens().size() + J.gens().size());
  for (const auto& f : I.gens()) gens.push_back(y * transfer(f, ext));
  for (const auto& g : J.gens()) gens.push_back(one_minus_y * transfer(g, ext));
  Ideal<K> graph(ext, std::move(gens));
  auto elim = eliminate(graph, {yidx});
  std::vector<Polynomial<K>> back;
  back.reserve(elim.gens().size());
  for (const auto& g : elim.gens()) back.push_back(transfer(g, R));
  return Ideal<K>(R, std::move(back));
}

/// Exact single-divisor division; throws if f does not divide h.
template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& h, const Polynomial<K>& f) {
  require_same_ring(h.ring(), f.ring());
  if (f.is_zero()) throw Error("division by the zero polynomial");
  const auto& field = h.ring()->field();
  auto rem = h;
  std::vector<Term<K>> q;
  while (!rem.is_zero()) {
    const auto& lt = rem.leading_term();
    if (!f.leading_monomial().divides(lt.mono))
      throw Error("exact division failed: not a multiple");
    auto c = field.div(lt.coeff, f.leading_coeff());
    Monomial m = lt.mono.quotient(f.leading_monomial());
    rem = Polynomial<K>::fused_sub_mul(rem, c, m, f);
    q.push_back({std::move(c), std::move(m)});
  }
  return Polynomial<K>::from_terms(h.ring(), std::move(q));
}

/// I : f = (1/f) * (I ∩ (f)).
template <class K>
Ideal<K> ideal_colon(const Ideal<K>& I, const Polynomial<K>& f) {
  require_same_ring(I.ring(), f.ring());
  if (f.is_zero()) throw Error("colon by the zero polynomial");
  Ideal<K> Jf(I.ring(), {f});
  auto inter = ideal_intersection(I, Jf);
  std::vector<Polynomial<K>> gens;
  gens.reserve(inter.gens().size());
  for (const auto& h : inter.gens()) gens.push_back(divide_exact(h, f));
  return Ideal<K>(I.ring(), std::move(gens));
}

/// I : J = ∩_j (I : f_j) over the generators of J.
template <class K>
Ideal<K> ideal_colon(const Ideal<K>& I, const Ideal<K>& J) {
  require_same_ring(I.ring(), J.ring());
  if (J.has_no_generators()) throw Error("colon by the zero ideal");
  bool first = true;
  Ideal<K> acc = Ideal<K>::zero(I.ring());
  for (const auto& f : J.gens()) {
    auto q = ideal_colon(I, f);
    acc = first ? q : ideal_intersection(acc, q);
    first = false;
  }
  return acc;
}

/// I : J^∞, by iterating K := K : J until the chain stabilizes
/// (Groebner-basis equality under the ring's order).
template <class K>
Ideal<K> saturation(const Ideal<K>& I, const Ideal<K>& J,
                    std::size_t iteration_cap = 64) {
  require_same_ring(I.ring(), J.ring());
  if (J.has_no_generators()) throw Error("saturation by the zero ideal");
  Ideal<K> cur = I;
  for (std::size_t i = 0; i < iteration_cap; ++i) {
    Ideal<K> next = ideal_colon(cur, J);
    if (ideal_equals(next, cur)) return cur;
    cur = std::move(next);
  }
  throw CapExceeded("saturation did not stabilize within " +
                    std::to_string(iteration_cap) + " iterations");
}

/// (x_0, ..., x_n): the irrelevant maximal ideal of the ring.
template <class K>
Ideal<K> maximal_ideal(const RingPtr<K>& ring) {
  std::vector<Polynomial<K>> gens;
  gens.reserve(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    gens.push_back(Polynomial<K>::variable(ring, i));
  return Ideal<K>(ring, std::move(gens));
}

}  // namespace blowup

#endif  // BLOWUP_IDEALOPS_HPP
