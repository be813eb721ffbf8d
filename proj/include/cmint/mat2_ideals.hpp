#pragma once

// Left ideals of Mat_2(Z_p), represented by normalized triples (n, m, t):
// the ideal generated by [[p^n, t], [0, p^m]] with 0 <= t < p^m.
//
// p-adic matrices are exact rationals whose denominators may only carry
// powers of p in the cases of interest; "integral" means every entry has
// non-negative p-adic valuation.

#include <array>
#include <string>
#include <vector>

#include "cmint/arith.hpp"
#include "cmint/local_solver.hpp"

namespace cmint {

class PMatrix {
 public:
  PMatrix(Integer p, Rational a, Rational b, Rational c, Rational d) : p_(std::move(p)), e_{a, b, c, d} {
    for (auto& x : e_) x.canonicalize();
    trace_ = e_[0] + e_[3];
    norm_ = e_[0] * e_[3] - e_[1] * e_[2];
  }

  static PMatrix identity(const Integer& p) { return {p, 1, 0, 0, 1}; }
  static PMatrix scalar(const Integer& p, const Rational& s) { return {p, s, 0, 0, s}; }

  const Integer& p() const { return p_; }
  const Rational& a() const { return e_[0]; }
  const Rational& b() const { return e_[1]; }
  const Rational& c() const { return e_[2]; }
  const Rational& d() const { return e_[3]; }
  const Rational& trace() const { return trace_; }
  const Rational& norm() const { return norm_; }  // determinant

  bool is_integral() const {
    for (const auto& x : e_)
      if (!val_ge(valuation(x, p_), 0)) return false;
    return true;
  }

  // Integral with at least one entry a p-adic unit.
  bool is_primitive() const {
    if (!is_integral()) return false;
    for (const auto& x : e_)
      if (valuation(x, p_) == Valuation(0)) return true;
    return false;
  }

  PMatrix inverse() const {
    if (norm_ == 0) throw Error(Errc::InvalidArgument, "singular matrix has no inverse");
    return {p_, e_[3] / norm_, -e_[1] / norm_, -e_[2] / norm_, e_[0] / norm_};
  }

  PMatrix scaled(const Rational& s) const { return {p_, e_[0] * s, e_[1] * s, e_[2] * s, e_[3] * s}; }

  friend PMatrix operator*(const PMatrix& x, const PMatrix& y) {
    return {x.p_, x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(), x.c() * y.a() + x.d() * y.c(),
            x.c() * y.b() + x.d() * y.d()};
  }

  friend bool operator==(const PMatrix& x, const PMatrix& y) { return x.p_ == y.p_ && x.e_ == y.e_; }

  std::string str() const {
    return "[[" + e_[0].get_str() + ", " + e_[1].get_str() + "], [" + e_[2].get_str() + ", " + e_[3].get_str() + "]]";
  }

 private:
  Integer p_;
  std::array<Rational, 4> e_;
  Rational trace_, norm_;
};

struct IdealTriple {
  Integer p;
  long n = 0, m = 0;
  Integer t;  // 0 <= t < p^m

  long norm_exponent() const { return n + m; }

  PMatrix generator() const { return {p, Rational(pow(p, n)), Rational(t), 0, Rational(pow(p, m))}; }

  std::string str() const {
    return "(" + std::to_string(n) + "," + std::to_string(m) + "," + t.get_str() + ")";
  }

  friend bool operator==(const IdealTriple&, const IdealTriple&) = default;
};

/// Reduces q in Z_(p) to an integer representative mod p^k.
inline Integer reduce_mod_pk(const Rational& q, const Integer& p, long k) {
  if (!val_ge(valuation(q, p), 0)) throw Error(Errc::InvalidArgument, "value is not p-integral: " + q.get_str());
  const Integer pk = pow(p, static_cast<unsigned long>(std::max(k, 0L)));
  if (pk == 1) return 0;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), pk.get_mpz_t());
  return mod(Integer(q.get_num() * inv), pk);
}

inline constexpr long kMaxIdealEnumeration = 1'000'000;

/// All left ideals of norm p^N, as triples; there are 1 + p + ... + p^N of them.
inline std::vector<IdealTriple> enumerate_ideals(const Integer& p, long N) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, "enumerate_ideals needs a prime");
  if (N < 0 || pow(p, static_cast<unsigned long>(N)) > kMaxIdealEnumeration)
    throw Error(Errc::OutOfRange, "enumerate_ideals limited to p^N <= 10^6");
  std::vector<IdealTriple> out;
  for (long n = N; n >= 0; --n) {
    const long m = N - n;
    const Integer pm = pow(p, static_cast<unsigned long>(m));
    for (Integer t = 0; t < pm; ++t) out.push_back({p, n, m, t});
  }
  return out;
}

/// Primitive iff one of n, m, v(t) is zero (v(0) = +infinity).
inline bool is_primitive(const IdealTriple& I) {
  return I.n == 0 || I.m == 0 || (I.t != 0 && !divides(I.p, I.t));
}

/// Splits I = p^c * I' with I' primitive; returns {c, I'}.
inline std::pair<long, IdealTriple> primitive_part(const IdealTriple& I) {
  const Valuation vt = valuation(I.t, I.p);
  long c = std::min(I.n, I.m);
  if (vt) c = std::min(c, *vt);
  if (c == 0) return {0, I};
  const long m = I.m - c;
  const Integer t = mod(exact_div(I.t, pow(I.p, static_cast<unsigned long>(c))), pow(I.p, static_cast<unsigned long>(m)));
  return {c, IdealTriple{I.p, I.n - c, m, t}};
}

/// The unique ideal of norm p^L containing the primitive ideal I (L <= norm exponent of I).
inline IdealTriple superideal(const IdealTriple& I, long L) {
  if (!is_primitive(I)) throw Error(Errc::PreconditionViolated, "superideal needs a primitive ideal");
  if (L < 0 || L > I.norm_exponent()) throw Error(Errc::OutOfRange, "superideal level out of range");
  const Integer& p = I.p;
  auto pk = [&](long k) { return pow(p, static_cast<unsigned long>(k)); };
  if (I.n == 0) return {p, 0, L, mod(I.t, pk(L))};
  if (I.m == 0) return {p, L, 0, 0};
  const long n2 = std::min(I.n, L);
  const long m2 = L - n2;
  return {p, n2, m2, mod(I.t, pk(m2))};
}

/// Normal form of the left ideal Mat_2(Z_p) * z, by unimodular row operations.
inline IdealTriple normalize(const PMatrix& z) {
  if (!z.is_integral()) throw Error(Errc::PreconditionViolated, "normalize needs an integral matrix");
  if (z.norm() == 0) throw Error(Errc::PreconditionViolated, "normalize needs a nonsingular matrix");
  const Integer& p = z.p();
  Rational a = z.a(), b = z.b(), c = z.c(), d = z.d();
  auto below = [&](const Rational& x, const Rational& y) {  // v(x) <= v(y)
    const Valuation vx = valuation(x, p), vy = valuation(y, p);
    return vx && (!vy || *vx <= *vy);
  };
  if (!below(a, c)) {
    std::swap(a, c);
    std::swap(b, d);
  }
  const Rational ratio = c / a;  // p-integral
  d -= ratio * b;
  const long n = *valuation(a, p);
  const Rational unit_a = a / Rational(pow(p, static_cast<unsigned long>(n)));
  b /= unit_a;
  const long m = *valuation(d, p);
  return {p, n, m, reduce_mod_pk(b, p, m)};
}

/// The unique ideal of norm p^N containing the primitive integral element z.
inline IdealTriple unique_superideal(const PMatrix& z, long N) {
  if (!z.is_primitive()) throw Error(Errc::PreconditionViolated, "unique_superideal needs a primitive integral element");
  if (z.norm() == 0) throw Error(Errc::PreconditionViolated, "unique_superideal needs a nonsingular element");
  if (N < 0 || !val_ge(valuation(z.norm(), z.p()), N))
    throw Error(Errc::PreconditionViolated, "N exceeds v_p(Norm(z))");
  return superideal(normalize(z), N);
}

/// p^j I <= p^k J, decided by the scalar-containment criterion on primitive parts.
inline bool contained_in(long j, const IdealTriple& I, long k, const IdealTriple& J) {
  if (I.p != J.p) throw Error(Errc::InvalidArgument, "ideals at different primes");
  const auto [ci, Ip] = primitive_part(I);
  const auto [cj, Jp] = primitive_part(J);
  const long jj = j + ci, kk = k + cj;
  const long r = Ip.norm_exponent(), s = Jp.norm_exponent();
  const long level = s - jj + kk;
  if (r < level || s < level) return false;
  if (level < 0) return true;
  return superideal(Ip, level) == superideal(Jp, level);
}

/// y in RO(I) iff G y G^-1 is integral for the generator G of I.
inline bool right_order_contains(const IdealTriple& I, const PMatrix& y) {
  const PMatrix G = I.generator();
  return (G * y * G.inverse()).is_integral();
}

/// p^r y is optimally embedded in Mat_2(Z_p): integral, and no (p^r y + s)/p is
/// integral for an integer s, i.e. p^r y is not a scalar modulo p.
inline bool is_optimally_embedded(const PMatrix& y, long r) {
  const PMatrix yr = y.scaled(Rational(pow(y.p(), static_cast<unsigned long>(r))));
  if (!yr.is_integral()) return false;
  const Integer& p = y.p();
  for (Integer s = 0; s < p; ++s) {
    const PMatrix shifted(p, (yr.a() + Rational(s)) / Rational(p), yr.b() / Rational(p), yr.c() / Rational(p),
                          (yr.d() + Rational(s)) / Rational(p));
    if (shifted.is_integral()) return false;
  }
  return true;
}

namespace detail {

inline void require_embedding_hypotheses(const PMatrix& y, long r) {
  if (r < 0) throw Error(Errc::PreconditionViolated, "r must be non-negative");
  const Integer& p = y.p();
  if (!val_ge(valuation(y.trace(), p), 0) || !val_ge(valuation(y.norm(), p), 0))
    throw Error(Errc::PreconditionViolated, "y is not integral (trace or norm not p-integral): " + y.str());
  if (!is_optimally_embedded(y, r))
    throw Error(Errc::PreconditionViolated, "p^r y is not optimally embedded: " + y.str());
}

}  // namespace detail

/// Number of primitive ideals of norm p^N whose right order contains y,
/// where p^r y is optimally embedded: the root count of t^2 - Tr(y) t + Norm(y) mod p^(N-r).
inline Integer count_right_order_ideals(const Integer& p, long N, const PMatrix& y, long r) {
  if (y.p() != p) throw Error(Errc::InvalidArgument, "matrix prime mismatch");
  detail::require_embedding_hypotheses(y, r);
  const long C = N - r;
  if (C < 0) return 0;
  return count_roots_mod_pk(p, C, reduce_mod_pk(y.trace(), p, C), reduce_mod_pk(y.norm(), p, C));
}

/// Companion form [[0, -Norm(y) p^r], [p^-r, Tr(y)]].
inline PMatrix companion_form(const PMatrix& y, long r) {
  const Rational pr(pow(y.p(), static_cast<unsigned long>(r)));
  return {y.p(), 0, -y.norm() * pr, 1 / pr, y.trace()};
}

/// A in GL_2(Z_p) with A y A^-1 equal to the companion form. The case is
/// chosen by which of b, c, a - d has valuation exactly -r.
inline PMatrix canonical_conjugate(const PMatrix& y, long r) {
  detail::require_embedding_hypotheses(y, r);
  const Integer& p = y.p();
  const Rational pr(pow(p, static_cast<unsigned long>(r)));
  auto exact = [&](const Rational& x) { return valuation(x, p) == Valuation(-r); };
  if (exact(y.b())) return {p, -y.d() * pr, y.b() * pr, 1, 0};
  if (exact(y.c())) return {p, y.c() * pr, -y.a() * pr, 0, 1};
  if (exact(y.a() - y.d())) return {p, (y.c() - y.d()) * pr, (y.b() - y.a()) * pr, 1, 1};
  throw Error(Errc::PreconditionViolated, "no entry of y has valuation -r: " + y.str());
}

}  // namespace cmint
