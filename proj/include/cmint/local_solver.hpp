#pragma once

// Root counts of monic quadratics modulo prime powers and the local product
// frakI(n, f_u) assembled from them.

#include <array>

#include "cmint/arith.hpp"
#include "cmint/cm_field.hpp"

namespace cmint {

/// Counts t mod p^C with t^2 - a1 t + a0 = 0 (mod p^C).
struct LocalQuery {
  Integer p;
  long C = 0;
  Integer a1, a0;
};

namespace detail {

// Polynomial of degree <= 2, coefficients c[0] + c[1] x + c[2] x^2.
using Quadratic = std::array<Integer, 3>;

inline Integer eval(const Quadratic& h, const Integer& x) { return h[0] + x * (h[1] + x * h[2]); }
inline Integer eval_derivative(const Quadratic& h, const Integer& x) { return h[1] + 2 * x * h[2]; }

// h(r + p y) as a polynomial in y.
inline Quadratic shift_scale(const Quadratic& h, const Integer& r, const Integer& p) {
  return {eval(h, r), p * eval_derivative(h, r), p * p * h[2]};
}

inline Valuation content_valuation(const Quadratic& h, const Integer& p) {
  Valuation v;
  for (const auto& c : h) {
    const Valuation vc = valuation(c, p);
    if (vc && (!v || *vc < *v)) v = vc;
  }
  return v;
}

// Number of x mod p^k with h(x) = 0 (mod p^k). Singular roots mod p are
// lifted by substituting x = r + p y and recursing on the reduced polynomial.
inline Integer count_roots(Quadratic h, const Integer& p, long k) {
  if (k <= 0) return 1;
  const Valuation e = content_valuation(h, p);
  if (!e || *e >= k) return pow(p, static_cast<unsigned long>(k));
  if (*e > 0) {
    const Integer pe = pow(p, static_cast<unsigned long>(*e));
    for (auto& c : h) c = exact_div(c, pe);
    return count_roots(h, p, k - *e) * pe;
  }
  Integer total = 0;
  for (Integer r = 0; r < p; ++r) {
    if (!divides(p, eval(h, r))) continue;
    if (!divides(p, eval_derivative(h, r))) {
      total += 1;  // simple root: unique Hensel lift
      continue;
    }
    // y ranges mod p^(k-1); g has content at least p.
    Quadratic g = shift_scale(h, r, p);
    const Valuation eg = content_valuation(g, p);
    if (!eg || *eg >= k) {
      total += pow(p, static_cast<unsigned long>(k - 1));
      continue;
    }
    const Integer peg = pow(p, static_cast<unsigned long>(*eg));
    for (auto& c : g) c = exact_div(c, peg);
    total += count_roots(g, p, k - *eg) * pow(p, static_cast<unsigned long>(*eg - 1));
  }
  return total;
}

}  // namespace detail

/// 0 for C < 0; 1 for C = 0 (the single class mod 1); Hensel-lifted count otherwise.
inline Integer count_roots_mod_pk(const LocalQuery& q) {
  if (!is_prime(q.p)) throw Error(Errc::InvalidArgument, "count_roots_mod_pk needs a prime, got " + q.p.get_str());
  if (q.C < 0) return 0;
  if (q.C == 0) return 1;
  return detail::count_roots({q.a0, Integer(-q.a1), Integer(1)}, q.p, q.C);
}

inline Integer count_roots_mod_pk(const Integer& p, long C, const Integer& a1, const Integer& a0) {
  return count_roots_mod_pk(LocalQuery{p, C, a1, a0});
}

/// r_p = max(v_p(delta) - min(v_p(f_u), v_p((d_u - t_u f_u) / (2 f_u))), 0).
inline long local_exponent(const NContext& c, const Integer& fu, const Integer& p) {
  const long vdelta = padic_val(c.dctx.delta, p);
  Rational q(Integer(c.d_u - c.dctx.t_u * fu), Integer(2 * fu));
  q.canonicalize();
  const long vfu = padic_val(fu, p);
  const Valuation vq = valuation(q, p);
  const long m = vq ? std::min(vfu, *vq) : vfu;
  return std::max(vdelta - m, 0L);
}

/// frakI(n, f_u): product over p | delta, p != ell of the parity-restricted
/// sum of root counts of t^2 - t_w t + n_w modulo p^(j - r_p).
inline Integer frakI(const NContext& c, const Integer& fu, const Integer& ell) {
  Integer product = 1;
  for (const auto& [p, vdelta] : factorize(c.dctx.delta).factors) {
    if (p == ell) continue;
    const long rp = local_exponent(c, fu, p);
    Integer sum = 0;
    for (long j = static_cast<long>(vdelta % 2); j <= static_cast<long>(vdelta); j += 2)
      sum += count_roots_mod_pk(p, j - rp, c.dctx.t_w, c.n_w);
    product *= sum;
    if (product == 0) break;
  }
  return product;
}

}  // namespace cmint
