#pragma once

// The embedding-pair count scrJ(d1, d2, t): Hilbert-symbol vanishing, the
// closed form (exact under conductor coprimality, an upper bound otherwise),
// and the conjectural product of local factors used as a cross-check.

#include <optional>
#include <set>
#include <string_view>

#include "cmint/arith.hpp"
#include "cmint/cm_field.hpp"
#include "cmint/quad_orders.hpp"

namespace cmint {

enum class Exactness { Exact, UpperBound };

constexpr std::string_view to_string(Exactness e) { return e == Exactness::Exact ? "Exact" : "UpperBound"; }

struct CountResult {
  Integer value;
  Exactness exactness = Exactness::Exact;
  bool nonintegral_input = false;  // t or the ideal norm was not an integer

  friend bool operator==(const CountResult&, const CountResult&) = default;
};

struct ScrJQuery {
  QuadDiscriminant d1;  // d_u / f_u^2
  Integer d2;           // d_x
  Rational t;           // t(n, f_u)
  Rational Nprime;      // (delta^2 Dtilde - n^2) / (4 D ell f_u^2)
  Integer ell;
  // context for the Hilbert-symbol test
  Integer D, n, delta, Dtilde;
  Integer d_u, fu;
};

inline ScrJQuery make_scrj_query(const CMFieldData& field, const NContext& c, const Integer& fu, const Integer& ell) {
  ScrJQuery q;
  q.d1 = discriminant_of(exact_div(c.d_u, Integer(fu * fu)));
  q.d2 = c.d_x;
  q.t = t_pair(c, fu);
  q.Nprime = Rational(c.N, Integer(ell * fu * fu));
  q.Nprime.canonicalize();
  q.ell = ell;
  q.D = field.D();
  q.n = c.n;
  q.delta = c.dctx.delta;
  q.Dtilde = field.Dtilde;
  q.d_u = c.d_u;
  q.fu = fu;
  return q;
}

namespace detail {

inline Rational second_symbol_argument(const ScrJQuery& q) {
  const Rational d12 = Rational(q.d1.d * q.d2);
  const Rational s = d12 - 2 * q.t;
  return s * s - d12;
}

inline void add_primes(std::set<Integer>& out, const Integer& n) {
  if (n == 0) return;
  for (auto& p : prime_divisors(n)) out.insert(p);
}

}  // namespace detail

/// True iff (d_u, D(n^2 - delta^2 Dtilde))_p = -1 for some prime p != ell.
///
/// Only primes dividing 2 d_u D (delta^2 Dtilde - n^2) (and the second
/// expression) are searched: at any other odd p both arguments are units and
/// the symbol is 1. At every searched p the two expressions of the symbol are
/// required to agree.
inline bool vanishing_test(const ScrJQuery& q) {
  const Integer gap = q.delta * q.delta * q.Dtilde - q.n * q.n;
  const Rational first(Integer(-q.D * gap));
  const Rational second = detail::second_symbol_argument(q);
  if (first == 0 || second == 0) throw Error(Errc::SymbolMismatch, "degenerate Hilbert symbol argument");
  std::set<Integer> primes{2};
  detail::add_primes(primes, q.d_u);
  detail::add_primes(primes, q.D);
  detail::add_primes(primes, gap);
  detail::add_primes(primes, second.get_num());
  detail::add_primes(primes, second.get_den());
  bool vanishes = false;
  for (const auto& p : primes) {
    if (p == q.ell) continue;
    const int s1 = hilbert_symbol(Rational(q.d_u), first, p);
    const int s2 = hilbert_symbol(Rational(q.d_u), second, p);
    if (s1 != s2)
      throw Error(Errc::SymbolMismatch, "Hilbert symbol expressions disagree at p = " + p.get_str() +
                                            " (d_u=" + q.d_u.get_str() + ", n=" + q.n.get_str() + ")");
    if (s1 == -1) vanishes = true;
  }
  return vanishes;
}

/// The closed-form bound 2^{...} * rho2 * #{invertible ideals of norm N'};
/// nullopt when t or N' is not an integer.
// rho2 is the local factor at 2, so it drops out when ell = 2 like every
// other p = ell factor. Applying it there breaks the gcd simplification and the
// local-factor product on every ell = 2 query that hits it.
inline std::optional<Integer> scrJ_bound(const ScrJQuery& q) {
  if (q.t.get_den() != 1 || q.Nprime.get_den() != 1) return std::nullopt;
  const Integer t = q.t.get_num();
  const Integer local2 = q.ell == 2 ? 1 : rho2(q.d1, t, q.d2);
  return two_power_factor(q.d1, t, q.ell) * local2 * count_invertible_ideals(q.d1, q.Nprime.get_num());
}

inline CountResult scrJ(const ScrJQuery& q) {
  if (vanishing_test(q)) return {0, Exactness::Exact, false};
  const auto bound = scrJ_bound(q);
  // No embedding pair has a non-integral trace and no ideal has a non-integral norm.
  if (!bound) return {0, Exactness::Exact, true};
  const Integer reduced_norm = q.Nprime.get_num() * q.ell;  // (delta^2 Dtilde - n^2) / (4 D f_u^2)
  const bool coprime = gcd(reduced_norm, q.d1.f) == 1;
  const Exactness ex = (coprime || *bound == 0) ? Exactness::Exact : Exactness::UpperBound;
  return {*bound, ex, false};
}

/// Conjectural local-factor product; nullopt when the conductors of d1, d2 and
/// m = (d1 d2 - (d1 d2 - 2t)^2)/4 share a common prime (or t is not integral).
inline std::optional<Integer> scrJ_conjecture(const ScrJQuery& q) {
  if (q.t.get_den() != 1) return std::nullopt;
  const Integer& d1 = q.d1.d;
  const Integer d12 = d1 * q.d2;
  const Integer s = d12 - 2 * q.t.get_num();
  const Integer m4 = d12 - s * s;
  if (!divides(4, m4) || m4 <= 0) return std::nullopt;
  const Integer m = exact_div(m4, 4);
  const QuadDiscriminant disc2 = discriminant_of(q.d2);
  const Integer& f1 = q.d1.f;
  if (gcd(gcd(f1, disc2.f), m) != 1) return std::nullopt;

  Integer product = 1;
  for (const auto& [p, vm] : factorize(m).factors) {
    if (p == q.ell) continue;
    Integer dp;
    if (q.d1.maximal_at(p))
      dp = d1;
    else if (disc2.maximal_at(p))
      dp = q.d2;
    else
      throw Error(Errc::AmbiguousSelection, "neither discriminant is maximal at p = " + p.get_str());
    const int chi = kronecker(dp, p);
    const bool p_div_f1 = divides(p, f1);
    const bool ramified_ok = chi == 0 && hilbert_symbol(Rational(dp), Rational(-m), p) == 1;
    long factor = 0;
    if (chi == 1 && !p_div_f1)
      factor = 1 + static_cast<long>(vm);
    else if ((chi == 1 && p_div_f1) || (ramified_ok && !p_div_f1))
      factor = 2;
    else if ((chi == -1 && !p_div_f1 && vm % 2 == 0) || (ramified_ok && p_div_f1 && vm == 2))
      factor = 1;
    product *= factor;
    if (product == 0) break;
  }
  return product;
}

}  // namespace cmint
