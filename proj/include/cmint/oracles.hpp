#pragma once

// Slow, definition-level reference computations. Used by the test suite and
// by the `selftest` CLI verb to cross-check the fast paths.

#include <cstdint>
#include <set>
#include <vector>

#include "cmint/arith.hpp"
#include "cmint/mat2_ideals.hpp"
#include "cmint/quad_orders.hpp"

namespace cmint::oracle {

struct IdealCounts {
  long invertible = 0;
  long all = 0;
};

namespace detail {

using i64 = std::int64_t;

// Elements x + y*omega of Z[omega], omega^2 = d*omega - n0.
struct Elt {
  i64 x, y;
};

inline Elt mul(Elt u, Elt v, i64 d, i64 n0) {
  return {u.x * v.x - u.y * v.y * n0, u.x * v.y + u.y * v.x + u.y * v.y * d};
}

// Lattice with basis a, b + c*omega.
struct Lattice {
  i64 a, b, c;
  bool contains(Elt e) const {
    if (e.y % c != 0) return false;
    const i64 u = e.y / c;
    return (e.x - u * b) % a == 0;
  }
  Lattice scaled(i64 k) const { return {a * k, b * k, c * k}; }
};

inline bool stable_under(const Lattice& L, Elt w, i64 d, i64 n0, const Lattice& target) {
  return target.contains(mul(w, {L.a, 0}, d, n0)) && target.contains(mul(w, {L.b, L.c}, d, n0));
}

}  // namespace detail

/// Counts ideals of index M in Z[(d + sqrt d)/2] by enumerating every
/// sublattice in Hermite normal form. An ideal is invertible iff no order
/// Z[omega_{d/p^2}] (p | f) multiplies it into itself.
inline IdealCounts count_ideals_bruteforce(long d, long M) {
  using namespace detail;
  if (M < 1 || M > 10'000) throw Error(Errc::OutOfRange, "count_ideals_bruteforce needs 1 <= M <= 10^4");
  const QuadDiscriminant disc = discriminant_of(d);
  const i64 n0 = (static_cast<i64>(d) * d - d) / 4;
  std::vector<i64> conductor_primes;
  for (const auto& p : prime_divisors(disc.f)) conductor_primes.push_back(p.get_si());
  IdealCounts out;
  for (i64 a = 1; a <= M; ++a) {
    if (M % a != 0) continue;
    const i64 c = M / a;
    for (i64 b = 0; b < a; ++b) {
      const Lattice L{a, b, c};
      if (!stable_under(L, {0, 1}, d, n0, L)) continue;
      ++out.all;
      bool invertible = true;
      for (i64 p : conductor_primes) {
        // p^2 * omega_{d/p^2} = d(1 - p)/2 + p*omega
        const Elt w{d * (1 - p) / 2, p};
        if (stable_under(L, w, d, n0, L.scaled(p * p))) {
          invertible = false;
          break;
        }
      }
      if (invertible) ++out.invertible;
    }
  }
  return out;
}

/// #{t mod p^C : t^2 - a1 t + a0 = 0 mod p^C} by direct enumeration.
inline long count_roots_bruteforce(long p, long C, const Integer& a1, const Integer& a0) {
  if (C < 0) return 0;
  const Integer pk = pow(Integer(p), static_cast<unsigned long>(C));
  if (!pk.fits_slong_p() || pk > 3'000'000'000L) throw Error(Errc::OutOfRange, "count_roots_bruteforce: p^C too large");
  // plain int64 once the coefficients are reduced; t^2 < 2^63 for p^C < 3e9
  using detail::i64;
  const i64 m = pk.get_si(), b = mod(a1, pk).get_si(), c = mod(a0, pk).get_si();
  long count = 0;
  for (i64 t = 0; t < m; ++t)
    if (((t * t) % m - (b * t) % m + c) % m == 0) ++count;
  return count;
}

/// (a/p) for a prime p from the set of squares mod p (and mod 8 at p = 2).
inline int kronecker_bruteforce(const Integer& a, long p) {
  if (p == 2) {
    const long r = mod(a, 8).get_si();
    if (r % 2 == 0) return 0;
    return (r == 1 || r == 7) ? 1 : -1;
  }
  const long r = mod(a, p).get_si();
  if (r == 0) return 0;
  for (long x = 1; x < p; ++x)
    if ((x * x) % p == r) return 1;
  return -1;
}

/// (a, b)_p from solvability of a x^2 + b y^2 = z^2: after removing square
/// factors, a primitive solution exists iff a x^2 + b y^2 is a square modulo
/// p^k (k = 3 for odd p, 6 for p = 2) for some (x, y) with x = 1 or y = 1.
inline int hilbert_bruteforce(const Rational& qa, const Rational& qb, long p) {
  const long k = p == 2 ? 6 : 3;
  const Integer pk = pow(Integer(p), static_cast<unsigned long>(k));
  auto reduce = [&](const Rational& q) {
    Integer v = q.get_num() * q.get_den();
    const Integer p2 = Integer(p) * p;
    while (divides(p2, v)) v /= p2;
    return mod(v, pk);
  };
  const Integer a = reduce(qa), b = reduce(qb);
  std::set<Integer> squares;
  for (Integer z = 0; z < pk; ++z) squares.insert(mod(Integer(z * z), pk));
  for (Integer s = 0; s < pk; ++s) {
    if (squares.count(mod(Integer(a + b * s * s), pk))) return 1;
    if (squares.count(mod(Integer(a * s * s + b), pk))) return 1;
  }
  return -1;
}

/// p^j I <= p^k J iff (p^j G_I)(p^k G_J)^-1 is integral.
inline bool contained_bruteforce(long j, const IdealTriple& I, long k, const IdealTriple& J) {
  const Rational pj(pow(I.p, static_cast<unsigned long>(j)));
  const Rational pk(pow(J.p, static_cast<unsigned long>(k)));
  return (I.generator().scaled(pj) * J.generator().scaled(pk).inverse()).is_integral();
}

/// The ideals of norm p^L that contain I, found by filtering all of them.
inline std::vector<IdealTriple> superideals_bruteforce(const IdealTriple& I, long L) {
  std::vector<IdealTriple> out;
  for (const auto& J : enumerate_ideals(I.p, L))
    if (contained_bruteforce(0, I, 0, J)) out.push_back(J);
  return out;
}

/// Primitive ideals of norm p^N whose right order contains y, by exhaustion.
inline long count_right_order_bruteforce(const Integer& p, long N, const PMatrix& y) {
  long count = 0;
  for (const auto& I : enumerate_ideals(p, N))
    if (is_primitive(I) && right_order_contains(I, y)) ++count;
  return count;
}

}  // namespace cmint::oracle
