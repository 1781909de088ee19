#ifndef BLOWUP_RING_HPP
#define BLOWUP_RING_HPP

#include <cctype>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "blowup/errors.hpp"
#include "blowup/order.hpp"

namespace blowup {

/// A polynomial ring context: ordered variable names, the coefficient
/// field, and the active monomial order used for canonical term sorting.
/// Contexts are immutable and shared through RingPtr.
template <class K>
class Ring {
 public:
  Ring(K field, std::vector<std::string> vars, MonomialOrder order)
      : field_(std::move(field)), vars_(std::move(vars)), order_(std::move(order)) {
    if (vars_.empty()) throw Error("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
      if (!valid_ident(v)) throw Error("invalid variable name '" + v + "'");
      if (!seen.insert(v).second)
        throw Error("duplicate variable name '" + v + "'");
    }
  }

  const K& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::string& var_name(std::size_t i) const { return vars_.at(i); }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    return std::nullopt;
  }

  bool same_as(const Ring& o) const {
    return vars_ == o.vars_ && field_ == o.field_ && order_ == o.order_;
  }

  static bool valid_ident(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
  }

 private:
  K field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <class K>
RingPtr<K> make_ring(K field, std::vector<std::string> vars,
                     MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const Ring<K>>(std::move(field), std::move(vars),
                                         std::move(order));
}

/// Convenience: k[<prefix>0 .. <prefix>n].
template <class K>
RingPtr<K> make_ring_indexed(K field, std::string_view prefix, std::size_t count,
                             MonomialOrder order = MonomialOrder::grevlex(),
                             std::size_t start = 0) {
  std::vector<std::string> vars;
  vars.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    vars.push_back(std::string(prefix) + std::to_string(start + i));
  return make_ring(std::move(field), std::move(vars), std::move(order));
}

/// Same variables and field, different active order.
template <class K>
RingPtr<K> with_order(const RingPtr<K>& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return make_ring(ring->field(), ring->vars(), std::move(order));
}

/// Append extra variables (used for tag/parameter variables).
template <class K>
RingPtr<K> extend_ring(const RingPtr<K>& ring, std::vector<std::string> extra,
                       MonomialOrder order) {
  std::vector<std::string> vars = ring->vars();
  for (auto& v : extra) vars.push_back(std::move(v));
  return make_ring(ring->field(), std::move(vars), std::move(order));
}

/// A variable name that does not clash with anything in the ring:
/// `base`, then `base_`, `base__`, ...
template <class K>
std::string fresh_var_name(const Ring<K>& ring, std::string base) {
  while (ring.var_index(base)) base += '_';
  return base;
}

template <class K>
void require_same_ring(const RingPtr<K>& a, const RingPtr<K>& b) {
  if (a == b) return;
  if (a && b && a->same_as(*b)) return;
  throw RingMismatch("operands live in different rings");
}

}  // namespace blowup

#endif  // BLOWUP_RING_HPP
