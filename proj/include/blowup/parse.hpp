#ifndef BLOWUP_PARSE_HPP
#define BLOWUP_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "blowup/polynomial.hpp"

namespace blowup {

// Polynomial text grammar:
//   poly   := term (('+'|'-') term)*
//   term   := coeff ('*' varpow)* | varpow ('*' varpow)*
//   varpow := ident ('^' nat)?
//   coeff  := int ('/' nat)?
// Whitespace is insignificant. A leading sign on the first term is also
// accepted so that printed output always re-parses.

namespace detail {

class PolyCursor {
 public:
  explicit PolyCursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char take() { return s_[pos_++]; }
  std::size_t pos() const { return pos_; }

  bool at_digit() const {
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  bool at_ident() const {
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string digits() {
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (pos_ == start) throw ParseError("expected a number", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string ident() {
    std::size_t start = pos_;
    if (!at_ident()) throw ParseError("expected an identifier", pos_);
    ++pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::uint32_t nat32() {
    std::size_t at = pos_;
    std::string d = digits();
    if (d.size() > 9) throw ParseError("exponent too large", at);
    return static_cast<std::uint32_t>(std::stoul(d));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class K>
void parse_varpow(detail::PolyCursor& c, const RingPtr<K>& ring,
                  Monomial::ExpVec& exps) {
  std::size_t at = c.pos();
  std::string name = c.ident();
  auto idx = ring->var_index(name);
  if (!idx) throw ParseError("unknown variable '" + name + "'", at);
  std::uint32_t e = 1;
  c.skip_ws();
  if (c.peek() == '^') {
    c.take();
    c.skip_ws();
    e = c.nat32();
  }
  std::uint64_t s = std::uint64_t{exps[*idx]} + e;
  if (s > std::uint32_t(-1)) throw ParseError("exponent overflow", at);
  exps[*idx] = static_cast<std::uint32_t>(s);
}

template <class K>
Polynomial<K> parse_polynomial(std::string_view text, const RingPtr<K>& ring) {
  const K& field = ring->field();
  detail::PolyCursor c(text);
  std::vector<Term<K>> terms;

  c.skip_ws();
  if (c.done()) throw ParseError("empty polynomial", 0);
  bool negate = false;
  if (c.peek() == '+' || c.peek() == '-') negate = c.take() == '-';

  for (;;) {
    c.skip_ws();
    typename K::Elem coeff = field.one();
    Monomial::ExpVec exps(ring->nvars(), 0);
    bool saw_factor = false;

    // optional leading coefficient (with its own sign, per the int rule)
    bool coeff_neg = false;
    if ((c.peek() == '+' || c.peek() == '-')) {
      std::size_t at = c.pos();
      coeff_neg = c.take() == '-';
      c.skip_ws();
      if (!c.at_digit()) throw ParseError("expected a number after sign", at);
    }
    if (c.at_digit()) {
      std::string num = c.digits();
      if (c.peek() == '/') {
        c.take();
        std::size_t at = c.pos();
        if (!c.at_digit()) throw ParseError("expected a denominator", at);
        std::string den = c.digits();
        coeff = field.from_fraction(num, den);
      } else {
        coeff = field.from_decimal(num);
      }
      if (coeff_neg) coeff = field.neg(coeff);
      saw_factor = true;
      c.skip_ws();
      while (c.peek() == '*') {
        c.take();
        c.skip_ws();
        parse_varpow(c, ring, exps);
        c.skip_ws();
      }
    } else if (c.at_ident()) {
      parse_varpow(c, ring, exps);
      c.skip_ws();
      saw_factor = true;
      while (c.peek() == '*') {
        c.take();
        c.skip_ws();
        parse_varpow(c, ring, exps);
        c.skip_ws();
      }
    }
    if (!saw_factor)
      throw ParseError(std::string("expected a term, found '") + c.peek() + "'",
                       c.pos());

    if (negate) coeff = field.neg(coeff);
    terms.push_back({std::move(coeff), Monomial(std::move(exps))});

    c.skip_ws();
    if (c.done()) break;
    char sep = c.peek();
    if (sep != '+' && sep != '-')
      throw ParseError(std::string("unexpected character '") + sep + "'", c.pos());
    c.take();
    negate = sep == '-';
  }
  return Polynomial<K>::from_terms(ring, std::move(terms));
}

template <class K>
std::string to_string(const Monomial& m, const Ring<K>& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m.exp(i) == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.var_name(i);
    if (m.exp(i) > 1) out += '^' + std::to_string(m.exp(i));
  }
  return out.empty() ? "1" : out;
}

template <class K>
std::string to_string(const Polynomial<K>& f) {
  if (f.is_zero()) return "0";
  const K& field = f.ring()->field();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool neg = field.print_as_negative(t.coeff);
    std::string mag = field.to_string_abs(t.coeff);
    std::string piece;
    if (t.mono.is_one())
      piece = mag;
    else if (mag == "1")
      piece = to_string(t.mono, *f.ring());
    else
      piece = mag + "*" + to_string(t.mono, *f.ring());
    if (first) {
      out += neg ? "-" : "";
      out += piece;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += piece;
    }
  }
  return out;
}

}  // namespace blowup

#endif  // BLOWUP_PARSE_HPP
