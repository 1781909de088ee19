#ifndef BLOWUP_ORDER_HPP
#define BLOWUP_ORDER_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "blowup/errors.hpp"
#include "blowup/monomial.hpp"

namespace blowup {

enum class OrderKind { grevlex, lex, grlex, block };

inline const char* order_kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::lex: return "lex";
    case OrderKind::grlex: return "grlex";
    case OrderKind::block: return "block";
  }
  return "?";
}

/// A global monomial order. Variable index 0 is the most significant
/// (x0 > x1 > ... > xn). Block orders split the variables into an
/// eliminated front block and a back block, each compared by a simple
/// order; any monomial touching the front block sorts above every
/// front-free monomial, which is what elimination needs.
class MonomialOrder {
 public:
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
  static MonomialOrder grlex() { return MonomialOrder(OrderKind::grlex); }
  static MonomialOrder simple(OrderKind k) {
    if (k == OrderKind::block) throw Error("block order needs a front block");
    return MonomialOrder(k);
  }

  static MonomialOrder block(std::vector<std::size_t> front, std::size_t nvars,
                             OrderKind front_kind = OrderKind::grevlex,
                             OrderKind back_kind = OrderKind::grevlex) {
    if (front_kind == OrderKind::block || back_kind == OrderKind::block)
      throw Error("block sub-orders must be simple orders");
    MonomialOrder o(OrderKind::block);
    std::sort(front.begin(), front.end());
    front.erase(std::unique(front.begin(), front.end()), front.end());
    if (!front.empty() && front.back() >= nvars)
      throw Error("block front variable out of range");
    o.front_ = std::move(front);
    o.nvars_ = nvars;
    o.front_kind_ = front_kind;
    o.back_kind_ = back_kind;
    for (std::size_t i = 0, j = 0; i < nvars; ++i) {
      if (j < o.front_.size() && o.front_[j] == i)
        ++j;
      else
        o.back_.push_back(i);
    }
    o.key_ = o.make_key();
    return o;
  }

  OrderKind kind() const { return kind_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars())
      throw Error("monomial length mismatch in order comparison");
    if (kind_ != OrderKind::block) return cmp_full(kind_, a, b);
    if (a.nvars() != nvars_)
      throw Error("block order defined for " + std::to_string(nvars_) +
                  " variables, got " + std::to_string(a.nvars()));
    auto front = cmp_indexed(front_kind_, a, b, front_);
    if (front != std::strong_ordering::equal) return front;
    return cmp_indexed(back_kind_, a, b, back_);
  }

  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  const std::vector<std::size_t>& front_block() const { return front_; }

  /// Stable identity string; used as cache key and in diagnostics.
  const std::string& key() const { return key_; }

  bool operator==(const MonomialOrder& o) const { return key_ == o.key_; }

 private:
  explicit MonomialOrder(OrderKind k) : kind_(k), key_(order_kind_name(k)) {}

  static std::strong_ordering cmp_full(OrderKind k, const Monomial& a,
                                       const Monomial& b) {
    const std::size_t n = a.nvars();
    switch (k) {
      case OrderKind::grevlex: {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        for (std::size_t i = n; i-- > 0;)
          if (a.exp(i) != b.exp(i)) return b.exp(i) <=> a.exp(i);
        return std::strong_ordering::equal;
      }
      case OrderKind::lex: {
        for (std::size_t i = 0; i < n; ++i)
          if (a.exp(i) != b.exp(i)) return a.exp(i) <=> b.exp(i);
        return std::strong_ordering::equal;
      }
      case OrderKind::grlex: {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        for (std::size_t i = 0; i < n; ++i)
          if (a.exp(i) != b.exp(i)) return a.exp(i) <=> b.exp(i);
        return std::strong_ordering::equal;
      }
      case OrderKind::block: break;
    }
    throw Error("unsupported order kind");
  }

  static std::strong_ordering cmp_indexed(OrderKind k, const Monomial& a,
                                          const Monomial& b,
                                          const std::vector<std::size_t>& idx) {
    switch (k) {
      case OrderKind::grevlex: {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i : idx) {
          da += a.exp(i);
          db += b.exp(i);
        }
        if (da != db) return da <=> db;
        for (std::size_t j = idx.size(); j-- > 0;) {
          std::size_t i = idx[j];
          if (a.exp(i) != b.exp(i)) return b.exp(i) <=> a.exp(i);
        }
        return std::strong_ordering::equal;
      }
      case OrderKind::lex: {
        for (std::size_t i : idx)
          if (a.exp(i) != b.exp(i)) return a.exp(i) <=> b.exp(i);
        return std::strong_ordering::equal;
      }
      case OrderKind::grlex: {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i : idx) {
          da += a.exp(i);
          db += b.exp(i);
        }
        if (da != db) return da <=> db;
        for (std::size_t i : idx)
          if (a.exp(i) != b.exp(i)) return a.exp(i) <=> b.exp(i);
        return std::strong_ordering::equal;
      }
      case OrderKind::block: break;
    }
    throw Error("unsupported order kind");
  }

  std::string make_key() const {
    std::string s = "block[";
    for (std::size_t i = 0; i < front_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(front_[i]);
    }
    s += "|";
    s += order_kind_name(front_kind_);
    s += ",";
    s += order_kind_name(back_kind_);
    s += ",n=" + std::to_string(nvars_) + "]";
    return s;
  }

  OrderKind kind_;
  OrderKind front_kind_ = OrderKind::grevlex;
  OrderKind back_kind_ = OrderKind::grevlex;
  std::vector<std::size_t> front_;
  std::vector<std::size_t> back_;
  std::size_t nvars_ = 0;
  std::string key_;
};

}  // namespace blowup

#endif  // BLOWUP_ORDER_HPP
