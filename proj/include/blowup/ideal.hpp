#ifndef BLOWUP_IDEAL_HPP
#define BLOWUP_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "blowup/groebner.hpp"

namespace blowup {

/// An ideal given by a generator list, with reduced Groebner bases cached
/// per monomial order. Ideals are immutable; the cache is write-once per
/// order (concurrent callers may duplicate work, the results coincide by
/// determinism of the engine).
template <class K>
class Ideal {
 public:
  Ideal(RingPtr<K> ring, std::vector<Polynomial<K>> gens)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
      require_same_ring(ring_, g.ring());
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  static Ideal zero(RingPtr<K> ring) { return Ideal(std::move(ring), {}); }

  static Ideal unit(RingPtr<K> ring) {
    auto one = Polynomial<K>::one(ring);
    return Ideal(std::move(ring), {std::move(one)});
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& gens() const { return gens_; }
  bool has_no_generators() const { return gens_.empty(); }

  std::shared_ptr<const ReducedGB<K>> groebner(const MonomialOrder& order,
                                               GBStats* stats = nullptr,
                                               std::ostream* trace = nullptr) const {
    const std::string key = order.key();
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->by_order.find(key);
      if (it != cache_->by_order.end()) return it->second;
    }
    auto gb = std::make_shared<const ReducedGB<K>>(
        buchberger(ring_, gens_, order, stats, trace));
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->by_order.emplace(key, std::move(gb));
    return it->second;
  }

  std::shared_ptr<const ReducedGB<K>> groebner() const {
    return groebner(ring_->order());
  }

  /// Max total degree over the generators; -1 when there are none.
  std::int64_t max_generator_degree() const {
    std::int64_t d = -1;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const ReducedGB<K>>> by_order;
  };

  RingPtr<K> ring_;
  std::vector<Polynomial<K>> gens_;
  std::shared_ptr<Cache> cache_;
};

template <class K>
MonomialIdeal initial_ideal(const Ideal<K>& I, const MonomialOrder& order) {
  return initial_ideal(*I.groebner(order));
}

template <class K>
MonomialIdeal initial_ideal(const Ideal<K>& I) {
  return initial_ideal(*I.groebner());
}

}  // namespace blowup

#endif  // BLOWUP_IDEAL_HPP
