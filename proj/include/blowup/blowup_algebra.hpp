#ifndef BLOWUP_BLOWUP_ALGEBRA_HPP
#define BLOWUP_BLOWUP_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blowup/hilbert.hpp"
#include "blowup/report.hpp"

namespace blowup {

/// mu(I) for a homogeneous ideal, by graded Nakayama: the number of
/// minimal generators equals sum_d [dim I_d - dim (mI)_d], and the sum
/// stops at the top degree of the supplied generating set.
template <class K>
mpz_class minimal_generator_count(const Ideal<K>& I) {
  if (I.gens().empty()) return 0;
  if (!ideal_is_homogeneous(I))
    throw NotHomogeneous("minimal generator count requires a homogeneous ideal");
  const std::size_t n = I.ring()->nvars();
  const std::int64_t top = I.max_generator_degree();
  auto hs_quotient = hilbert_series_quotient(I);
  auto hs_m_quotient = hilbert_series_quotient(
      ideal_product(maximal_ideal(I.ring()), I));
  mpz_class mu = 0;
  for (std::int64_t d = 0; d <= top; ++d) {
    mpz_class full = binomial(static_cast<std::uint64_t>(d) + n - 1, n - 1);
    mpz_class dim_i = full - hs_quotient.coefficient(d);
    mpz_class dim_mi = full - hs_m_quotient.coefficient(d);
    mu += dim_i - dim_mi;
  }
  return mu;
}

template <class K>
mpz_class mu_power(const Ideal<K>& I, std::uint64_t t) {
  return minimal_generator_count(ideal_power(I, t));
}

struct DSequenceCheck {
  bool ok = false;
  // failing (i, k), 1-based, when !ok
  std::optional<std::pair<std::size_t, std::size_t>> failure;
};

/// Colon criterion for d-sequences: for all 1 <= i <= k <= s,
/// ((f_1..f_{i-1}) : f_i f_k) = ((f_1..f_{i-1}) : f_k).
template <class K>
DSequenceCheck is_d_sequence(const std::vector<Polynomial<K>>& seq) {
  if (seq.empty()) throw Error("d-sequence check: empty sequence");
  const auto& ring = seq.front().ring();
  for (const auto& f : seq) {
    require_same_ring(ring, f.ring());
    if (f.is_zero()) throw Error("d-sequence check: zero element in sequence");
  }
  const std::size_t s = seq.size();
  for (std::size_t i = 1; i <= s; ++i) {
    std::vector<Polynomial<K>> prefix_gens(seq.begin(), seq.begin() + (i - 1));
    Ideal<K> prefix(ring, std::move(prefix_gens));
    for (std::size_t k = i; k <= s; ++k) {
      auto lhs = ideal_colon(prefix, seq[i - 1] * seq[k - 1]);
      auto rhs = ideal_colon(prefix, seq[k - 1]);
      if (!ideal_equals(lhs, rhs)) return {false, std::make_pair(i, k)};
    }
  }
  return {true, std::nullopt};
}

template <class K>
struct ReductionCertificate {
  Ideal<K> sub;   // J
  Ideal<K> big;   // I
  unsigned number = 0;       // least n with J I^n = I^{n+1}
  bool strict_below = false; // J I^{n-1} != I^n witnessed (trivially so at n = 0)
};

template <class K>
struct ReductionSearch {
  std::optional<ReductionCertificate<K>> certificate;
  unsigned cap = 0;
  bool conclusive() const { return certificate.has_value(); }
};

/// Least n <= cap with J * I^n = I^{n+1}. Requires J ⊆ I (verified).
/// Running past the cap is reported as inconclusive, never as a
/// non-reduction.
template <class K>
ReductionSearch<K> reduction_number(const Ideal<K>& J, const Ideal<K>& I,
                                    unsigned cap = 10) {
  require_same_ring(J.ring(), I.ring());
  if (!ideal_contains(I, J))
    throw Error("reduction search: J is not contained in I");
  std::vector<Ideal<K>> powers;  // powers[k] = I^{k+1}
  powers.push_back(ideal_power(I, 1));
  ReductionSearch<K> out;
  out.cap = cap;
  for (unsigned n = 0; n <= cap; ++n) {
    auto lhs = n == 0 ? J : ideal_product(J, powers[n - 1]);
    while (powers.size() < n + 2) powers.push_back(ideal_power(I, powers.size() + 1));
    const auto& rhs = powers[n];
    if (ideal_equals(lhs, rhs)) {
      out.certificate = ReductionCertificate<K>{J, I, n, true};
      return out;
    }
  }
  return out;
}

template <class K>
struct ReesPresentation {
  RingPtr<K> ring;                   // k[x..., u_1..u_s]
  std::vector<std::size_t> u_vars;   // indices of the u block
  Ideal<K> ideal;                    // defining ideal of the Rees algebra
  bool linear_type = false;          // every generator of u-degree exactly 1
};

/// Defining ideal of the Rees algebra R[I t] on the given generators:
/// the kernel of k[x, u] -> R[t], u_j -> t g_j, by eliminating t from
/// the graph ideal (u_j - t g_j).
template <class K>
ReesPresentation<K> rees_ideal(const std::vector<Polynomial<K>>& gens) {
  if (gens.empty()) throw Error("Rees presentation needs at least one generator");
  const auto& R = gens.front().ring();
  for (const auto& g : gens) require_same_ring(R, g.ring());
  const std::size_t s = gens.size();

  std::vector<std::string> unames;
  for (std::size_t j = 1; j <= s; ++j)
    unames.push_back(fresh_var_name(*R, "u" + std::to_string(j)));
  std::vector<std::string> ext_names = unames;
  ext_names.push_back(fresh_var_name(*R, "t"));
  const std::size_t t_idx = R->nvars() + s;
  auto ext = extend_ring(R, std::move(ext_names),
                         MonomialOrder::block({t_idx}, R->nvars() + s + 1));

  std::vector<Polynomial<K>> graph;
  graph.reserve(s);
  auto t_poly = Polynomial<K>::variable(ext, t_idx);
  for (std::size_t j = 0; j < s; ++j) {
    auto u = Polynomial<K>::variable(ext, R->nvars() + j);
    graph.push_back(u - t_poly * transfer(gens[j], ext));
  }
  // the graph ideal is homogeneous for w(x)=w(t)=1, w(u_j)=1+deg g_j;
  // feeding that grading to the sugar strategy keeps the elimination tame
  std::vector<std::uint64_t> weights(ext->nvars(), 1);
  for (std::size_t j = 0; j < s; ++j)
    weights[R->nvars() + j] = 1 + static_cast<std::uint64_t>(gens[j].degree());
  auto gb = buchberger(ext, graph, ext->order(), nullptr, nullptr, std::move(weights));

  auto xu_ring = extend_ring(R, unames, MonomialOrder::grevlex());
  std::vector<std::size_t> u_vars;
  for (std::size_t j = 0; j < s; ++j) u_vars.push_back(R->nvars() + j);
  std::vector<Polynomial<K>> defs;
  for (const auto& g : gb.basis) {
    bool t_free = true;
    for (const auto& t : g.terms())
      if (t.mono.exp(t_idx) != 0) {
        t_free = false;
        break;
      }
    if (t_free) defs.push_back(transfer(g, xu_ring));
  }

  bool linear = true;
  for (const auto& g : defs) {
    if (!g.is_homogeneous_on(u_vars) || g.degree_on(u_vars) != 1) {
      linear = false;
      break;
    }
  }
  Ideal<K> ideal(xu_ring, std::move(defs));
  return ReesPresentation<K>{xu_ring, std::move(u_vars), std::move(ideal), linear};
}

template <class K>
struct FiberPresentation {
  RingPtr<K> ring;       // k[u_1..u_s]
  Ideal<K> defining;     // presented by its reduced basis
  HilbertSeries series;  // of k[u]/K; coefficient at t is mu(I^t)
  unsigned spread = 0;   // dim of the fiber cone
  std::vector<std::string> generator_map;  // u_j <- supplied generator j
};

/// Fiber cone F_I = R[I t] ⊗ R/m as k[u]/K, where K is obtained from the
/// Rees ideal by sending every base variable to zero. The u_j map to the
/// supplied generators in order.
template <class K>
FiberPresentation<K> fiber_cone(const std::vector<Polynomial<K>>& gens) {
  auto rees = rees_ideal(gens);
  const auto& R = gens.front().ring();
  const std::size_t s = gens.size();

  std::vector<std::string> unames;
  for (std::size_t j = 0; j < s; ++j)
    unames.push_back(rees.ring->var_name(R->nvars() + j));
  auto u_ring = make_ring(R->field(), unames);

  std::vector<Polynomial<K>> images;
  images.reserve(rees.ring->nvars());
  for (std::size_t i = 0; i < R->nvars(); ++i)
    images.push_back(Polynomial<K>::zero(u_ring));
  for (std::size_t j = 0; j < s; ++j)
    images.push_back(Polynomial<K>::variable(u_ring, j));

  std::vector<Polynomial<K>> kgens;
  for (const auto& g : rees.ideal.gens()) {
    auto h = substitute(g, u_ring, images);
    if (!h.is_zero()) kgens.push_back(std::move(h));
  }
  auto gb = Ideal<K>(u_ring, std::move(kgens)).groebner();
  Ideal<K> defining(u_ring, gb->basis);

  auto series = hilbert_series_quotient(defining);
  unsigned spread = series.dimension();

  std::vector<std::string> mapping;
  mapping.reserve(s);
  for (std::size_t j = 0; j < s; ++j)
    mapping.push_back(unames[j] + " <- " + to_string(gens[j]));
  return FiberPresentation<K>{u_ring, std::move(defining), std::move(series),
                              spread, std::move(mapping)};
}

/// Analytic spread: the Krull dimension of the fiber cone.
template <class K>
unsigned analytic_spread(const Ideal<K>& I) {
  if (I.gens().empty()) throw Error("analytic spread of the zero ideal");
  return fiber_cone(I.gens()).spread;
}

/// depth(R/I^t) > 0 at the irrelevant ideal, tested as: I^t is
/// saturated, i.e. sat(I^t, m) = I^t.
template <class K>
bool is_saturated_power(const Ideal<K>& I, std::uint64_t t,
                        std::size_t saturation_cap = 64) {
  auto P = ideal_power(I, t);
  auto sat = saturation(P, maximal_ideal(I.ring()), saturation_cap);
  return ideal_equals(sat, P);
}

/// Check mu(I^t) against the binomial formula
///   C(t+a-1, a-1) + (mu(I) - a) C(t+a-2, a-1),   a = analytic spread,
/// for t = 1..tmax, and (independently of I) that at a = 3 this equals
/// the P^3 form (mu-2) C(t+2,2) - (mu-3)(t+1) as a polynomial in t.
template <class K>
VerificationReport check_mu_formula(const Ideal<K>& I, unsigned tmax) {
  VerificationReport rep;
  rep.command = "mu-formula";
  rep.field = I.ring()->field().name();
  rep.order = I.ring()->order().key();

  const unsigned a = analytic_spread(I);
  const mpz_class mu = minimal_generator_count(I);
  rep.check("spread", "a = dim F_I", mpz_class(a).get_str(),
            mpz_class(a).get_str(), Provenance::derived);
  rep.check("mu", "mu(I) from graded Nakayama", mu.get_str(), mu.get_str(),
            Provenance::derived);

  for (unsigned t = 1; t <= tmax; ++t) {
    mpz_class formula = binomial(t + a - 1, a - 1) +
                        (mu - a) * binomial(t + a - 2, a - 1);
    mpz_class actual = mu_power(I, t);
    rep.check("mu-power.t" + std::to_string(t),
              "mu(I^" + std::to_string(t) +
                  ") = C(t+a-1,a-1) + (mu-a)*C(t+a-2,a-1)",
              actual.get_str(), formula.get_str(), Provenance::paper);
  }

  bool identity = true;
  for (unsigned t = 0; t <= tmax + 3 && identity; ++t) {
    mpz_class lhs = binomial(t + 2, 2) + (mu - 3) * binomial(t + 1, 2);
    mpz_class rhs = (mu - 2) * binomial(t + 2, 2) - (mu - 3) * (t + 1);
    identity = lhs == rhs;
  }
  rep.check_bool("p3-identity",
                 "at a=3: C(t+2,2)+(mu-3)C(t+1,2) = (mu-2)C(t+2,2)-(mu-3)(t+1)",
                 identity, Provenance::derived);
  return rep;
}

}  // namespace blowup

#endif  // BLOWUP_BLOWUP_ALGEBRA_HPP
