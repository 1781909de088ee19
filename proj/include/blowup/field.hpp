#ifndef BLOWUP_FIELD_HPP
#define BLOWUP_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "blowup/errors.hpp"

namespace blowup {

// A coefficient field K provides:
//   using Elem = ...;                value type, cheap to copy or move
//   Elem zero(), one(), from_int(long)
//   Elem add/sub/mul/div(a, b), neg(a), inv(a)
//   bool is_zero(a), is_one(a), equal(a, b)
//   Elem from_decimal(num), from_fraction(num, den)   (decimal digit strings)
//   std::string to_string(a), name()
// All arithmetic is exact; div and inv throw FieldError on zero.

/// The rational numbers. Elements are GMP rationals kept in canonical
/// form (lowest terms, positive denominator).
class Rationals {
 public:
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }

  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw FieldError("division by zero in QQ");
    return a / b;
  }
  Elem inv(const Elem& a) const { return div(one(), a); }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  Elem from_decimal(const std::string& digits) const {
    return Elem(mpz_class(digits, 10));
  }
  Elem from_fraction(const std::string& num, const std::string& den) const {
    mpz_class d(den, 10);
    if (d == 0) throw FieldError("zero denominator");
    Elem q(mpz_class(num, 10), d);
    q.canonicalize();
    return q;
  }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  bool print_as_negative(const Elem& a) const { return a < 0; }
  std::string to_string_abs(const Elem& a) const { return mpq_class(abs(a)).get_str(); }
  std::string name() const { return "QQ"; }

  bool operator==(const Rationals&) const { return true; }
};

/// The prime field F_p for a prime p < 2^31. Elements are residues in
/// [0, p); printing uses the balanced representative for readability.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p))
      throw FieldError("modulus must be a prime below 2^31, got " +
                       std::to_string(p));
  }

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

  Elem inv(Elem a) const {
    if (a == 0) throw FieldError("division by zero in " + name());
    // extended Euclid on (a, p)
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_);
    std::int64_t nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == one(); }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem from_decimal(const std::string& digits) const {
    return reduce(mpz_class(digits, 10));
  }
  Elem from_fraction(const std::string& num, const std::string& den) const {
    mpz_class d(den, 10);
    if (d == 0) throw FieldError("zero denominator");
    Elem dd = reduce(d);
    if (dd == 0)
      throw FieldError("coefficient not valid in " + name() +
                       ": denominator divisible by " + std::to_string(p_));
    return div(reduce(mpz_class(num, 10)), dd);
  }

  std::string to_string(Elem a) const {
    // balanced representative: residues above p/2 print as negatives
    if (a > p_ / 2)
      return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }
  bool print_as_negative(Elem a) const { return a > p_ / 2; }
  std::string to_string_abs(Elem a) const {
    return std::to_string(a > p_ / 2 ? p_ - a : a);
  }
  std::string name() const { return "FP:" + std::to_string(p_); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  Elem reduce(const mpz_class& z) const {
    mpz_class r = z % static_cast<unsigned long>(p_);
    if (r < 0) r += static_cast<unsigned long>(p_);
    return r.get_ui();
  }

  static bool is_prime(std::uint64_t n) {
    if (n < 4) return n >= 2;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

  std::uint64_t p_;
};

}  // namespace blowup

#endif  // BLOWUP_FIELD_HPP
