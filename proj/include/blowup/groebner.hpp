#ifndef BLOWUP_GROEBNER_HPP
#define BLOWUP_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <set>
#include <span>
#include <vector>

#include "blowup/parse.hpp"
#include "blowup/polynomial.hpp"

namespace blowup {

struct GBStats {
  std::size_t generators = 0;
  std::size_t pairs_formed = 0;
  std::size_t pairs_pruned = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
};

/// The reduced Groebner basis of an ideal under one global order:
/// monic elements, no leading monomial divides another, every tail term
/// irreducible, sorted ascending by leading monomial. Unique per
/// (ideal, order), which is what all ideal-equality tests lean on.
template <class K>
struct ReducedGB {
  RingPtr<K> ring;  // carries `order` as its active order
  MonomialOrder order;
  std::vector<Polynomial<K>> basis;
  bool fully_auto_reduced = true;

  bool is_zero_ideal() const { return basis.empty(); }
  bool contains_one() const {
    return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
  }
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> ms;
    ms.reserve(basis.size());
    for (const auto& g : basis) ms.push_back(g.leading_monomial());
    return ms;
  }
};

namespace detail {

/// terms[start..] - c * q * (g minus its leading term), merged into a
/// fresh descending list. Used for one reduction step, where the leading
/// terms have already cancelled.
template <class K>
std::vector<Term<K>> merge_sub_scaled(const K& field, const MonomialOrder& ord,
                                      const std::vector<Term<K>>& terms,
                                      std::size_t start,
                                      const typename K::Elem& c, const Monomial& q,
                                      const Polynomial<K>& g) {
  const auto& gt = g.terms();
  std::vector<Term<K>> out;
  out.reserve(terms.size() - start + gt.size());
  std::size_t i = start, j = 1;  // j = 1: skip the cancelled lead of g
  Monomial gj = j < gt.size() ? gt[j].mono.times(q) : q;
  while (i < terms.size() || j < gt.size()) {
    if (j == gt.size()) {
      out.push_back(terms[i++]);
      continue;
    }
    if (i == terms.size()) {
      auto nc = field.neg(field.mul(c, gt[j].coeff));
      if (!field.is_zero(nc)) out.push_back({std::move(nc), gj});
      if (++j < gt.size()) gj = gt[j].mono.times(q);
      continue;
    }
    auto cmp = ord.compare(terms[i].mono, gj);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(terms[i++]);
    } else if (cmp == std::strong_ordering::less) {
      auto nc = field.neg(field.mul(c, gt[j].coeff));
      if (!field.is_zero(nc)) out.push_back({std::move(nc), gj});
      if (++j < gt.size()) gj = gt[j].mono.times(q);
    } else {
      auto nc = field.sub(terms[i].coeff, field.mul(c, gt[j].coeff));
      if (!field.is_zero(nc)) out.push_back({std::move(nc), terms[i].mono});
      ++i;
      if (++j < gt.size()) gj = gt[j].mono.times(q);
    }
  }
  return out;
}

/// Full normal form against monic reducers scanned in the given index
/// order. `sugar`, when given, is propagated through the steps.
template <class K>
Polynomial<K> reduce_full(const RingPtr<K>& ring, std::vector<Term<K>> h,
                          std::span<const Polynomial<K>> reducers,
                          std::span<const std::uint32_t> scan,
                          const std::vector<std::uint64_t>* reducer_sugar = nullptr,
                          std::uint64_t* sugar = nullptr,
                          std::span<const std::uint64_t> weights = {}) {
  const K& field = ring->field();
  const MonomialOrder& ord = ring->order();
  std::vector<Term<K>> out;
  std::size_t start = 0;
  while (start < h.size()) {
    const auto& lt = h[start];
    const Polynomial<K>* divisor = nullptr;
    std::uint32_t divisor_idx = 0;
    for (std::uint32_t idx : scan) {
      if (reducers[idx].leading_monomial().divides(lt.mono)) {
        divisor = &reducers[idx];
        divisor_idx = idx;
        break;
      }
    }
    if (!divisor) {
      out.push_back(lt);
      ++start;
      continue;
    }
    Monomial q = lt.mono.quotient(divisor->leading_monomial());
    if (sugar && reducer_sugar) {
      std::uint64_t qd = weights.empty() ? q.degree() : q.weighted_degree(weights);
      std::uint64_t s = (*reducer_sugar)[divisor_idx] + qd;
      if (s > *sugar) *sugar = s;
    }
    auto c = field.is_one(divisor->leading_coeff())
                 ? lt.coeff
                 : field.div(lt.coeff, divisor->leading_coeff());
    h = merge_sub_scaled(field, ord, h, start + 1, c, q, *divisor);
    start = 0;
  }
  return Polynomial<K>::from_terms(ring, std::move(out));
}

template <class K>
class GBEngine {
 public:
  GBEngine(RingPtr<K> ring, GBStats* stats, std::ostream* trace,
           std::vector<std::uint64_t> sugar_weights = {})
      : ring_(std::move(ring)),
        stats_(stats),
        trace_(trace),
        weights_(std::move(sugar_weights)),
        pairs_(PairCmp{this}) {
    if (!weights_.empty() && weights_.size() != ring_->nvars())
      throw Error("sugar weight vector does not match the ring");
  }

  std::uint64_t wdeg(const Monomial& m) const {
    return weights_.empty() ? m.degree() : m.weighted_degree(weights_);
  }

  std::uint64_t wdeg(const Polynomial<K>& f) const {
    std::uint64_t d = 0;
    for (const auto& t : f.terms()) d = std::max(d, wdeg(t.mono));
    return d;
  }

  void add_generator(Polynomial<K> f) {
    if (done_unit_ || f.is_zero()) return;
    std::uint64_t sugar = wdeg(f);
    f = reduce(std::move(f), &sugar);
    if (f.is_zero()) return;
    update(f.monic(), sugar);
  }

  void run() {
    const auto& field = ring_->field();
    while (!pairs_.empty() && !done_unit_) {
      SPair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (stats_) ++stats_->pairs_reduced;
      const auto& fi = polys_[p.i];
      const auto& fj = polys_[p.j];
      Monomial qi = p.lcm.quotient(fi.leading_monomial());
      Monomial qj = p.lcm.quotient(fj.leading_monomial());
      // both sides monic, so the S-polynomial is qi*fi - qj*fj
      auto s = Polynomial<K>::fused_sub_mul(fi.times_term(field.one(), qi),
                                            field.one(), qj, fj);
      std::uint64_t sugar = p.sugar;
      s = reduce(std::move(s), &sugar);
      if (s.is_zero()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      if (trace_)
        *trace_ << "pair (" << p.i << "," << p.j << ") sugar " << p.sugar
                << " -> basis element " << polys_.size() << "\n";
      update(s.monic(), sugar);
    }
  }

  std::vector<Polynomial<K>> reduced_basis() {
    if (done_unit_) return {Polynomial<K>::one(ring_)};
    const auto& ord = ring_->order();
    // minimalize: ascending leading monomials make divisors come first
    std::vector<std::uint32_t> by_lm(polys_.size());
    for (std::uint32_t i = 0; i < polys_.size(); ++i) by_lm[i] = i;
    std::sort(by_lm.begin(), by_lm.end(), [&](std::uint32_t a, std::uint32_t b) {
      auto c = ord.compare(polys_[a].leading_monomial(), polys_[b].leading_monomial());
      if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
      return a < b;
    });
    std::vector<Polynomial<K>> kept;
    for (std::uint32_t i : by_lm) {
      const auto& lm = polys_[i].leading_monomial();
      bool redundant = false;
      for (const auto& g : kept)
        if (g.leading_monomial().divides(lm)) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(polys_[i]);
    }
    // tail-reduce each element against the others
    std::vector<Polynomial<K>> out;
    out.reserve(kept.size());
    for (std::uint32_t i = 0; i < kept.size(); ++i) {
      std::vector<std::uint32_t> others;
      others.reserve(kept.size() - 1);
      for (std::uint32_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(j);
      std::vector<Term<K>> tail(kept[i].terms().begin() + 1, kept[i].terms().end());
      auto reduced_tail =
          reduce_full<K>(ring_, std::move(tail),
                         std::span<const Polynomial<K>>(kept), others);
      out.push_back(Polynomial<K>::from_monomial(ring_, kept[i].leading_monomial()) +
                    reduced_tail);
    }
    if (stats_) stats_->basis_size = out.size();
    return out;
  }

 private:
  struct SPair {
    std::uint32_t i, j;
    Monomial lcm;
    std::uint64_t sugar;
    std::uint64_t id;
  };
  struct PairCmp {
    const GBEngine* engine;
    bool operator()(const SPair& a, const SPair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      auto c = engine->ring_->order().compare(a.lcm, b.lcm);
      if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
      return a.id < b.id;
    }
  };
  friend struct PairCmp;

  Polynomial<K> reduce(Polynomial<K> h, std::uint64_t* sugar) {
    std::vector<Term<K>> terms(h.terms().begin(), h.terms().end());
    return reduce_full<K>(ring_, std::move(terms),
                          std::span<const Polynomial<K>>(polys_), div_scan_,
                          &sugars_, sugar,
                          weights_.empty() ? std::span<const std::uint64_t>{}
                                           : std::span<const std::uint64_t>(weights_));
  }

  // Gebauer-Moeller update: prune new pairs by the M/F criteria and the
  // product criterion, prune old pairs by the chain criterion, then add h.
  void update(Polynomial<K> h, std::uint64_t sugar_h) {
    if (h.is_constant()) {
      done_unit_ = true;
      pairs_.clear();
      return;
    }
    const Monomial hm = h.leading_monomial();
    const std::uint32_t t = static_cast<std::uint32_t>(polys_.size());

    std::vector<SPair> cand;
    for (std::uint32_t i = 0; i < t; ++i) {
      if (!in_play_[i]) continue;
      const auto& lm_i = polys_[i].leading_monomial();
      Monomial l = Monomial::lcm(lm_i, hm);
      std::uint64_t si = sugars_[i] + wdeg(l.quotient(lm_i));
      std::uint64_t sj = sugar_h + wdeg(l.quotient(hm));
      cand.push_back(SPair{i, t, std::move(l), si > sj ? si : sj, next_pair_id_++});
    }
    if (stats_) stats_->pairs_formed += cand.size();

    std::vector<SPair> survivors;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool coprime = polys_[cand[a].i].leading_monomial().coprime(hm);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < cand.size() && !dominated; ++b)
          if (cand[b].lcm.divides(cand[a].lcm)) dominated = true;
        for (std::size_t b = 0; b < survivors.size() && !dominated; ++b)
          if (survivors[b].lcm.divides(cand[a].lcm)) dominated = true;
      }
      if (coprime || !dominated) survivors.push_back(std::move(cand[a]));
    }
    std::size_t added = 0;
    for (auto& s : survivors) {
      if (polys_[s.i].leading_monomial().coprime(hm)) continue;  // product criterion
      pairs_.insert(std::move(s));
      ++added;
    }
    if (stats_) stats_->pairs_pruned += cand.size() - added;

    // chain criterion on the old queue
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      if (it->i == t || it->j == t) {
        ++it;
        continue;
      }
      const auto& li = polys_[it->i].leading_monomial();
      const auto& lj = polys_[it->j].leading_monomial();
      if (hm.divides(it->lcm) && !(Monomial::lcm(li, hm) == it->lcm) &&
          !(Monomial::lcm(lj, hm) == it->lcm)) {
        it = pairs_.erase(it);
        if (stats_) ++stats_->pairs_pruned;
      } else {
        ++it;
      }
    }

    for (std::uint32_t i = 0; i < t; ++i)
      if (in_play_[i] && hm.divides(polys_[i].leading_monomial()))
        in_play_[i] = false;

    polys_.push_back(std::move(h));
    sugars_.push_back(sugar_h);
    in_play_.push_back(true);
    // keep the divisor scan sorted by (degree, order) so small reducers
    // are tried first
    const auto& ord = ring_->order();
    auto cmp = [&](std::uint32_t a, std::uint32_t b) {
      const auto& ma = polys_[a].leading_monomial();
      const auto& mb = polys_[b].leading_monomial();
      if (ma.degree() != mb.degree()) return ma.degree() < mb.degree();
      auto c = ord.compare(ma, mb);
      if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
      return a < b;
    };
    auto pos = std::lower_bound(div_scan_.begin(), div_scan_.end(), t, cmp);
    div_scan_.insert(pos, t);
  }

  RingPtr<K> ring_;
  GBStats* stats_;
  std::ostream* trace_;
  std::vector<std::uint64_t> weights_;
  std::vector<Polynomial<K>> polys_;
  std::vector<std::uint64_t> sugars_;
  std::vector<bool> in_play_;
  std::vector<std::uint32_t> div_scan_;
  std::set<SPair, PairCmp> pairs_;
  std::uint64_t next_pair_id_ = 0;
  bool done_unit_ = false;
};

}  // namespace detail

/// Buchberger's algorithm with sugar-degree pair selection and
/// Gebauer-Moeller pruning; returns the reduced basis. Deterministic for
/// fixed input and order.
template <class K>
ReducedGB<K> buchberger(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens,
                        const MonomialOrder& order, GBStats* stats = nullptr,
                        std::ostream* trace = nullptr,
                        std::vector<std::uint64_t> sugar_weights = {}) {
  RingPtr<K> working = with_order(ring, order);
  detail::GBEngine<K> engine(working, stats, trace, std::move(sugar_weights));
  if (stats) stats->generators = gens.size();
  for (const auto& g : gens) engine.add_generator(transfer(g, working));
  engine.run();
  ReducedGB<K> out{working, order, engine.reduced_basis()};
  if (trace) {
    *trace << "reduced basis (" << out.basis.size() << " elements):\n";
    for (const auto& g : out.basis) *trace << "  " << to_string(g) << "\n";
  }
  return out;
}

/// Remainder of f on division by a reduced basis: no term of the result
/// is divisible by any basis leading monomial, and f - result lies in
/// the ideal of G. Unique because G is reduced.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const ReducedGB<K>& G) {
  if (!(f.ring() == G.ring)) {
    if (f.ring()->vars() != G.ring->vars() || !(f.ring()->field() == G.ring->field()))
      throw RingMismatch("normal form: polynomial and basis rings differ");
    if (!(f.ring()->order() == G.order))
      throw RingMismatch("normal form: polynomial order differs from basis order");
  }
  std::vector<std::uint32_t> scan(G.basis.size());
  for (std::uint32_t i = 0; i < scan.size(); ++i) scan[i] = i;
  auto g = transfer(f, G.ring);
  std::vector<Term<K>> terms(g.terms().begin(), g.terms().end());
  return detail::reduce_full<K>(G.ring, std::move(terms),
                                std::span<const Polynomial<K>>(G.basis), scan);
}

/// An ideal generated by monomials, kept as the unique minimal generator
/// set (no generator divides another), sorted by degree then exponents.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    for (const auto& m : gens)
      if (m.nvars() != nvars_) throw Error("monomial ideal: wrong variable count");
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return Monomial::RawLess{}(a, b);
    });
    for (auto& m : gens) {
      bool redundant = false;
      for (const auto& g : gens_)
        if (g.divides(m)) {
          redundant = true;
          break;
        }
      if (!redundant) gens_.push_back(std::move(m));
    }
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const {
    for (const auto& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  bool operator==(const MonomialIdeal& o) const {
    return nvars_ == o.nvars_ && gens_ == o.gens_;
  }

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

/// Ideal of leading monomials of a reduced basis, minimalized.
template <class K>
MonomialIdeal initial_ideal(const ReducedGB<K>& G) {
  return MonomialIdeal(G.ring->nvars(), G.leading_monomials());
}

}  // namespace blowup

#endif  // BLOWUP_GROEBNER_HPP
