#pragma once

// Input validation for a primitive quartic CM field given by (D, alpha, beta)
// and enumeration of the (delta, n, f_u) branches of the intersection sum.

#include <optional>
#include <string>
#include <vector>

#include "cmint/arith.hpp"
#include "cmint/quad_orders.hpp"

namespace cmint {

/// Tr_{K/F}(eta) = alpha0 + alpha1*omega, N_{K/F}(eta) = beta0 + beta1*omega,
/// omega = (D + sqrt D)/2. index_bound is [O_K : O_F[eta]] as asserted by the caller.
struct CMFieldParams {
  Integer D;
  Integer alpha0, alpha1;
  Integer beta0, beta1;
  Integer index_bound = 1;

  friend bool operator==(const CMFieldParams&, const CMFieldParams&) = default;
};

struct CMFieldData {
  CMFieldParams params;
  Integer Dtilde;  // Norm_{F/Q} of the relative discriminant of eta
  Integer cK;

  const Integer& D() const { return params.D; }
};

struct DeltaContext {
  Integer delta;
  Integer a;
  Integer sq;  // sqrt(D - 4 delta) = D - 2a
  int C_delta = 1;
  Integer t_u, t_x, t_w;
};

struct NContext {
  DeltaContext dctx;
  Integer n;
  Integer N;  // (delta^2 Dtilde - n^2) / 4D
  Integer n_u, n_x, n_w;
  Integer t_xuv;
  Integer d_u, d_x, d_w;
};

inline Integer compute_cK(const CMFieldParams& f) {
  const Integer& D = f.D;
  return f.alpha0 * f.alpha0 + f.alpha0 * f.alpha1 * D + f.alpha1 * f.alpha1 * exact_div(Integer(D * D - D), 4) -
         4 * f.beta0 - 2 * f.beta1 * D;
}

/// Validates the field data and derives Dtilde and c_K.
///
/// Twice the relative discriminant is P + Q sqrt(D) with
///   P = 2 c_K + alpha1^2 D,   Q = 2 alpha0 alpha1 + alpha1^2 D - 4 beta1.
/// It is negative at both real embeddings iff P < 0 and P^2 > Q^2 D, and
/// Dtilde = (P^2 - Q^2 D) / 4. Everything stays in exact integers.
inline CMFieldData validate(const CMFieldParams& params) {
  const Integer& D = params.D;
  if (D <= 0 || !is_discriminant_class(D) || perfect_square_root(D))
    throw Error(Errc::BadRealDiscriminant, "D must be a positive non-square integer congruent to 0 or 1 mod 4, got " + D.get_str());
  if (params.index_bound < 1) throw Error(Errc::InvalidArgument, "index_bound must be positive");

  CMFieldData out{params, 0, compute_cK(params)};
  const Integer a1sq = params.alpha1 * params.alpha1;
  const Integer P = 2 * out.cK + a1sq * D;
  const Integer Q = 2 * params.alpha0 * params.alpha1 + a1sq * D - 4 * params.beta1;
  const Integer norm4 = P * P - Q * Q * D;
  if (!divides(4, norm4))
    throw Error(Errc::HalfIntegerDiscriminant, "relative discriminant norm is not integral");
  if (!(P < 0 && norm4 > 0))
    throw Error(Errc::NotTotallyImaginary, "relative discriminant is not negative at both real embeddings");
  out.Dtilde = exact_div(norm4, 4);
  if (perfect_square_root(out.Dtilde))
    throw Error(Errc::NotPrimitive, "Dtilde = " + out.Dtilde.get_str() + " is a square");
  return out;
}

/// All delta >= 1 with D - 4 delta a perfect square, ascending.
inline std::vector<DeltaContext> enumerate_delta(const CMFieldData& field) {
  const auto& prm = field.params;
  const Integer& D = prm.D;
  std::vector<DeltaContext> out;
  // D - 4 delta = sq^2 forces sq = D (mod 2); descending sq gives ascending delta.
  std::vector<Integer> roots;
  for (Integer sq = mod(D, 2); sq * sq + 4 <= D; sq += 2) roots.push_back(sq);
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    const Integer& sq = *it;
    DeltaContext c;
    c.sq = sq;
    c.delta = exact_div(Integer(D - sq * sq), 4);
    c.a = exact_div(Integer(D - sq), 2);
    c.C_delta = (sq == 0) ? 2 : 1;
    c.t_u = prm.alpha1 * c.delta;
    c.t_x = prm.alpha0 + c.a * prm.alpha1;
    c.t_w = prm.alpha0 + (D - c.a) * prm.alpha1;
    out.push_back(std::move(c));
  }
  return out;
}

namespace detail {

inline void check_ncontext(const CMFieldData& field, const NContext& c) {
  const auto& prm = field.params;
  const auto& dc = c.dctx;
  auto fail = [&](const std::string& what) {
    throw Error(Errc::IntegralityViolation,
                what + " (delta=" + dc.delta.get_str() + ", n=" + c.n.get_str() + ")");
  };
  if (dc.t_x + dc.t_w != 2 * prm.alpha0 + prm.D * prm.alpha1) fail("t_x + t_w mismatch");
  if (dc.t_w - dc.t_x != prm.alpha1 * dc.sq) fail("t_w - t_x mismatch");
  if (c.n_w - c.n_x != prm.beta1 * dc.sq) fail("n_w - n_x mismatch");
  if (dc.delta * (c.n_x + c.n_w) != dc.delta * (2 * prm.beta0 + prm.D * prm.beta1) - 2 * c.n_u) fail("n_x + n_w mismatch");
  const Integer cross = dc.t_x * dc.t_u - 2 * c.t_xuv;
  if (4 * c.N != c.d_x * c.d_u - cross * cross) fail("norm identity N = (d_x d_u - (t_x t_u - 2 t_xuv)^2)/4 fails");
  if (c.d_u >= 0) fail("d_u is not negative");
}

inline std::vector<NContext> enumerate_n_impl(const CMFieldData& field, const DeltaContext& dc,
                                              const std::optional<Integer>& ell) {
  const auto& prm = field.params;
  const Integer& D = prm.D;
  const Integer modulus = 2 * D;
  const Integer bound2 = dc.delta * dc.delta * field.Dtilde;
  // Dtilde is not a square, so n^2 < bound2 iff |n| <= isqrt(bound2).
  const Integer B = isqrt(bound2);
  const Integer residue = mod(Integer(-field.cK * dc.delta), modulus);
  std::vector<NContext> out;
  for (Integer n = -B + mod(Integer(residue + B), modulus); n <= B; n += modulus) {
    const Integer num = bound2 - n * n;
    if (!divides(Integer(4 * D), num)) continue;
    NContext c;
    c.N = exact_div(num, Integer(4 * D));
    if (ell && !divides(*ell, c.N)) continue;
    c.dctx = dc;
    c.n = n;
    const Integer k = exact_div(Integer(n + field.cK * dc.delta), modulus);  // = -n_u / delta
    c.n_u = -dc.delta * k;
    c.t_xuv = prm.beta1 * dc.delta + dc.sq * k;
    c.n_x = prm.beta0 + dc.a * prm.beta1 + k;
    c.n_w = c.n_x + prm.beta1 * dc.sq;
    c.d_u = dc.t_u * dc.t_u - 4 * c.n_u;
    c.d_x = dc.t_x * dc.t_x - 4 * c.n_x;
    c.d_w = dc.t_w * dc.t_w - 4 * c.n_w;
    check_ncontext(field, c);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

/// n with n = -c_K delta (mod 2D), n^2 < delta^2 Dtilde, 4D | delta^2 Dtilde - n^2 and ell | N.
inline std::vector<NContext> enumerate_n(const CMFieldData& field, const DeltaContext& dc, const Integer& ell) {
  return detail::enumerate_n_impl(field, dc, ell);
}

/// As enumerate_n, without the ell | N filter.
inline std::vector<NContext> enumerate_n_all(const CMFieldData& field, const DeltaContext& dc) {
  return detail::enumerate_n_impl(field, dc, std::nullopt);
}

/// f_u with d_u / f_u^2 the discriminant of an order maximal at ell.
inline std::vector<Integer> enumerate_fu(const NContext& c, const Integer& ell) {
  const QuadDiscriminant disc = discriminant_of(c.d_u);
  const long target = padic_val(disc.f, ell);
  std::vector<Integer> out;
  for (const auto& fu : divisors(disc.f))
    if (padic_val(fu, ell) == target) out.push_back(fu);
  return out;
}

/// t(n, f_u) = (d_x d_u - f_u (t_x t_u - 2 t_xuv)) / (2 f_u^2), exactly.
inline Rational t_pair(const NContext& c, const Integer& fu) {
  Rational t(Integer(c.d_x * c.d_u - fu * (c.dctx.t_x * c.dctx.t_u - 2 * c.t_xuv)), Integer(2 * fu * fu));
  t.canonicalize();
  return t;
}

}  // namespace cmint
