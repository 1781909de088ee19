#ifndef BLOWUP_MONOCURVE_HPP
#define BLOWUP_MONOCURVE_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "blowup/idealops.hpp"

namespace blowup {

/// Degrees a_1 < ... < a_n of a projective monomial curve in P^n,
/// parametrized on the affine chart x_0 = 1 by x_i = w^{a_i}. The
/// homogenized parametrization is x_i = s^{d - a_i} w^{a_i} with
/// a_0 = 0 and d = a_n.
class CurveSpec {
 public:
  explicit CurveSpec(std::vector<std::uint64_t> degrees)
      : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw Error("curve spec needs at least one degree");
    std::uint64_t prev = 0;
    for (std::uint64_t a : degrees_) {
      if (a == 0) throw Error("curve degrees must be positive");
      if (a <= prev) throw Error("curve degrees must be strictly increasing");
      prev = a;
    }
    std::uint64_t g = 0;
    for (std::uint64_t a : degrees_) g = std::gcd(g, a);
    if (g != 1)
      throw Error("curve degrees must have gcd 1, got gcd " + std::to_string(g));
  }

  const std::vector<std::uint64_t>& degrees() const { return degrees_; }
  std::size_t ambient_dim() const { return degrees_.size(); }  // the n of P^n
  std::uint64_t top_degree() const { return degrees_.back(); }

  std::string to_string() const {
    std::string s = "C(";
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(degrees_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<std::uint64_t> degrees_;
};

/// k[x_0..x_n] with grevlex, the ring the curve ideal lives in.
template <class K>
RingPtr<K> curve_ring(const CurveSpec& spec, const K& field) {
  return make_ring_indexed(field, "x", spec.ambient_dim() + 1);
}

/// Defining ideal of the monomial curve: the kernel of
/// x_i -> s^{d-a_i} w^{a_i}, computed by eliminating {s, w} from the
/// graph ideal. The output generates a homogeneous prime of dimension 2
/// (as an affine cone); primality itself is not certified here.
template <class K>
Ideal<K> curve_ideal(const CurveSpec& spec, const K& field) {
  const auto R = curve_ring(spec, field);
  const std::size_t n = spec.ambient_dim();
  const std::uint64_t d = spec.top_degree();

  const std::string s_name = fresh_var_name(*R, "s");
  const std::string w_name = fresh_var_name(*R, "w");
  const std::size_t s_idx = R->nvars(), w_idx = R->nvars() + 1;
  auto ext = extend_ring(R, {s_name, w_name},
                         MonomialOrder::block({s_idx, w_idx}, R->nvars() + 2));

  std::vector<Polynomial<K>> gens;
  gens.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    std::uint64_t ai = i == 0 ? 0 : spec.degrees()[i - 1];
    Monomial::ExpVec e(ext->nvars(), 0);
    e[s_idx] = static_cast<std::uint32_t>(d - ai);
    e[w_idx] = static_cast<std::uint32_t>(ai);
    auto param = Polynomial<K>::from_monomial(ext, Monomial(std::move(e)));
    gens.push_back(Polynomial<K>::variable(ext, i) - param);
  }

  auto elim = eliminate(Ideal<K>(ext, std::move(gens)),
                        {s_idx, w_idx});
  std::vector<Polynomial<K>> back;
  back.reserve(elim.gens().size());
  for (const auto& g : elim.gens()) back.push_back(transfer(g, R));
  return Ideal<K>(R, std::move(back));
}

/// Soundness oracle: every generator must vanish identically under the
/// parametrization x_i -> s^{d-a_i} w^{a_i} in k[s, w].
template <class K>
bool parametrization_check(const Ideal<K>& I, const CurveSpec& spec) {
  const auto& R = I.ring();
  if (R->nvars() != spec.ambient_dim() + 1)
    throw RingMismatch("ideal ring does not match the curve spec");
  auto sw = make_ring(R->field(), std::vector<std::string>{"s", "w"});
  const std::uint64_t d = spec.top_degree();
  std::vector<Polynomial<K>> images;
  images.reserve(R->nvars());
  for (std::size_t i = 0; i < R->nvars(); ++i) {
    std::uint64_t ai = i == 0 ? 0 : spec.degrees()[i - 1];
    images.push_back(Polynomial<K>::from_monomial(
        sw, Monomial{static_cast<std::uint32_t>(d - ai),
                     static_cast<std::uint32_t>(ai)}));
  }
  for (const auto& g : I.gens())
    if (!substitute(g, sw, images).is_zero()) return false;
  return true;
}

}  // namespace blowup

#endif  // BLOWUP_MONOCURVE_HPP
