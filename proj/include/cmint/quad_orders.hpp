#pragma once

// Imaginary quadratic orders: discriminant bookkeeping, invertible-ideal
// counts by norm, and the 2-adic and simplified local weights attached to
// them.

#include <string>

#include "cmint/arith.hpp"

namespace cmint {

/// Discriminant d = f^2 * d0 of an imaginary quadratic order.
struct QuadDiscriminant {
  Integer d;
  Integer d0;  // fundamental part
  Integer f;   // conductor

  bool is_fundamental() const { return f == 1; }
  bool maximal_at(const Integer& p) const { return !divides(p, f); }

  friend bool operator==(const QuadDiscriminant&, const QuadDiscriminant&) = default;
};

inline bool is_discriminant_class(const Integer& d) {
  const Integer r = mod(d, 4);
  return r == 0 || r == 1;
}

inline bool is_fundamental_discriminant(const Integer& d) {
  if (d == 0 || d == 1) return false;
  const Integer r = mod(d, 4);
  auto squarefree = [](const Integer& n) {
    for (const auto& pp : factorize(n).factors)
      if (pp.exponent > 1) return false;
    return true;
  };
  if (r == 1) return squarefree(d);
  if (r == 0) {
    const Integer m = d / 4;
    const Integer rm = mod(m, 4);
    return (rm == 2 || rm == 3) && squarefree(m);
  }
  return false;
}

/// Validated decomposition d = f^2 * d0.
inline QuadDiscriminant discriminant_of(const Integer& d) {
  if (d >= 0) throw Error(Errc::BadQuadDiscriminant, "discriminant must be negative: " + d.get_str());
  if (!is_discriminant_class(d))
    throw Error(Errc::BadQuadDiscriminant, "discriminant must be 0 or 1 mod 4: " + d.get_str());
  Integer f = 1;
  for (const auto& [p, e] : factorize(d).factors) {
    if (p == 2) continue;
    f *= pow(p, e / 2);
  }
  Integer d0 = d / (f * f);
  // Odd squares are 1 mod 8, so the 2-part can be handled last.
  while (divides(16, d0) || (divides(4, d0) && mod(Integer(d0 / 4), 4) == 1)) {
    d0 /= 4;
    f *= 2;
  }
  return {d, d0, f};
}

// Norm of b + omega where omega = (d + sqrt d)/2.
inline Integer norm_b_plus_omega(const Integer& d, const Integer& b) {
  return b * b + b * d + (d * d - d) / 4;
}

namespace detail {

// Invertible ideals of index p^e in the order of discriminant d, for p dividing
// the conductor. Every ideal is c*[a, b + omega] with a | N(b + omega); it is
// invertible iff the form (a, 2b + d, N/a) is primitive.
inline Integer local_count_at_conductor(const QuadDiscriminant& disc, const Integer& p, unsigned long e) {
  Integer total = 0;
  for (unsigned long c = 0; 2 * c <= e; ++c) {
    const Integer a = pow(p, e - 2 * c);
    Integer count = 0;
    for (Integer b = 0; b < a; ++b) {
      const Integer nb = norm_b_plus_omega(disc.d, b);
      if (!divides(a, nb)) continue;
      const Integer form_gcd = gcd(gcd(a, Integer(2 * b + disc.d)), exact_div(nb, a));
      if (form_gcd == 1) ++count;
    }
    total += count;
  }
  return total;
}

}  // namespace detail

/// Number of invertible integral ideals of norm exactly M.
inline Integer count_invertible_ideals(const QuadDiscriminant& disc, const Integer& M) {
  if (M < 1) throw Error(Errc::InvalidArgument, "ideal norm must be positive");
  Integer total = 1;
  for (const auto& [p, e] : factorize(M).factors) {
    if (divides(p, disc.f)) {
      total *= detail::local_count_at_conductor(disc, p, e);
    } else {
      switch (kronecker(disc.d0, p)) {
        case 1: total *= e + 1; break;
        case -1: if (e % 2 != 0) return 0; break;
        default: break;  // ramified: exactly one ideal of each index p^e
      }
    }
    if (total == 0) return 0;
  }
  return total;
}

/// The 2-adic weight: product of the two bracketed case factors.
inline int rho2(const QuadDiscriminant& disc, const Integer& s0, const Integer& s1) {
  const Integer& d = disc.d;
  int first = 1;
  if (mod(d, 16) == 12 && mod(Integer(s0 - s1), 2) == 0) first = 2;
  if (divides(8, d) && val_ge(valuation(s0, 2), padic_val(d, 2) - 2)) first = 2;
  int second = 1;
  if (divides(32, d) && divides(4, Integer(s0 - 2 * s1))) second = 2;
  return first * second;
}

/// 2^#{p : v_p(t) >= v_p(d) > 0, p not dividing 2*ell}.
inline Integer two_power_factor(const QuadDiscriminant& disc, const Integer& t, const Integer& ell) {
  unsigned long count = 0;
  for (const auto& [p, e] : factorize(disc.d).factors) {
    if (p == 2 || p == ell) continue;
    if (val_ge(valuation(t, p), static_cast<long>(e))) ++count;
  }
  return pow(Integer(2), count);
}

/// Simplified local weight for a fundamental discriminant d:
/// 0 if (d, -M)_p = -1 for some p | d, p != ell; else 2^#{p | gcd(d, M), p != ell}.
inline Integer rho_simplified(const QuadDiscriminant& disc, const Integer& M, const Integer& ell) {
  if (!disc.is_fundamental())
    throw Error(Errc::BadQuadDiscriminant, "rho_simplified needs a fundamental discriminant, got " + disc.d.get_str());
  if (M < 1) throw Error(Errc::InvalidArgument, "rho_simplified needs M >= 1");
  for (const auto& p : prime_divisors(disc.d)) {
    if (p == ell) continue;
    if (hilbert_symbol(Rational(disc.d), Rational(-M), p) == -1) return 0;
  }
  unsigned long count = 0;
  for (const auto& p : prime_divisors(gcd(disc.d, M)))
    if (p != ell) ++count;
  return pow(Integer(2), count);
}

}  // namespace cmint
