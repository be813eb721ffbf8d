#pragma once

// Unbounded-integer number theory used throughout cmint: valuations,
// factorization, square roots, Kronecker and Hilbert symbols.

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmint/error.hpp"

namespace cmint {

using Integer = mpz_class;
using Rational = mpq_class;

// A p-adic valuation; nullopt stands for +infinity (the valuation of 0).
using Valuation = std::optional<long>;

inline bool is_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

inline Integer abs_of(const Integer& n) { return n < 0 ? Integer(-n) : n; }

// Floor-style remainder in [0, |m|).
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), abs_of(m).get_mpz_t());
  return r;
}

inline Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Integer& d, const Integer& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; the caller guarantees d | n.
inline Integer exact_div(const Integer& n, const Integer& d) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "isqrt of negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline long to_long(const Integer& n) {
  if (!n.fits_slong_p()) throw Error(Errc::OutOfRange, "integer does not fit in a machine word: " + n.get_str());
  return n.get_si();
}

/// Largest e with p^e | n. Rejects n = 0.
inline long padic_val(const Integer& n, const Integer& p) {
  if (n == 0) throw Error(Errc::InvalidArgument, "padic_val of zero");
  if (p < 2) throw Error(Errc::InvalidArgument, "padic_val with p < 2");
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

/// Valuation with v(0) = +infinity.
inline Valuation valuation(const Integer& n, const Integer& p) {
  if (n == 0) return std::nullopt;
  return padic_val(n, p);
}

/// Valuation of a rational: v(num) - v(den); v(0) = +infinity.
inline Valuation valuation(const Rational& q, const Integer& p) {
  if (q == 0) return std::nullopt;
  return padic_val(q.get_num(), p) - padic_val(q.get_den(), p);
}

// v >= bound, honouring v = +infinity.
inline bool val_ge(const Valuation& v, long bound) { return !v || *v >= bound; }

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // strictly increasing primes

  Integer value() const {
    Integer r = sign;
    for (const auto& f : factors) r *= pow(f.prime, f.exponent);
    return r;
  }

  std::vector<Integer> primes() const {
    std::vector<Integer> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.prime);
    return out;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

namespace detail {

// Brent's variant of Pollard rho; n odd composite, not a perfect power of a small prime.
inline Integer pollard_brent(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 64;
    unsigned long r = 1;
    auto f = [&](const Integer& v) {
      Integer w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = q * abs_of(Integer(x - y));
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs_of(Integer(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    split_into(root, out);
    split_into(root, out);
    return;
  }
  Integer d = pollard_brent(n);
  split_into(d, out);
  split_into(exact_div(n, d), out);
}

}  // namespace detail

/// Complete prime factorization. Trial division by small primes, then Pollard rho.
inline Factorization factorize(const Integer& n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "factorize of zero");
  Factorization out;
  out.sign = n < 0 ? -1 : 1;
  Integer m = abs_of(n);
  std::vector<Integer> primes;
  for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      primes.emplace_back(p);
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }
  if (m > 1) detail::split_into(m, primes);
  std::sort(primes.begin(), primes.end());
  for (const auto& p : primes) {
    if (!out.factors.empty() && out.factors.back().prime == p)
      ++out.factors.back().exponent;
    else
      out.factors.push_back({p, 1});
  }
  return out;
}

inline std::vector<Integer> prime_divisors(const Integer& n) { return factorize(n).primes(); }

/// Positive divisors of n != 0, ascending.
inline std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factorize(n).factors) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned long k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// r with r*r = n, or nullopt. Negative inputs are never squares.
inline std::optional<Integer> perfect_square_root(const Integer& n) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  return isqrt(n);
}

/// Kronecker symbol (a/n).
inline int kronecker(Integer a, Integer n) {
  static constexpr int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
  if (a == 0 && n == 0) throw Error(Errc::InvalidArgument, "kronecker(0, 0)");
  if (n == 0) return abs_of(a) == 1 ? 1 : 0;
  if (mpz_even_p(a.get_mpz_t()) && mpz_even_p(n.get_mpz_t())) return 0;
  int k = 1;
  unsigned long v = mpz_scan1(n.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), v);
  if (v % 2 == 1) k = tab2[mod(a, 8).get_ui()];
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  // n > 0 odd from here on.
  while (a != 0) {
    v = mpz_scan1(a.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), v);
    if (v % 2 == 1) k *= tab2[mod(n, 8).get_ui()];
    if (mod(a, 4) == 3 && mod(n, 4) == 3) k = -k;
    Integer r = abs_of(a);
    a = mod(n, r);
    n = r;
  }
  return n == 1 ? k : 0;
}

/// A place of Q: a prime p or the archimedean place.
class Place {
 public:
  static Place infinity() { return Place(); }
  static Place prime(const Integer& p) {
    if (!is_prime(p)) throw Error(Errc::InvalidArgument, "place is not a prime: " + p.get_str());
    Place v;
    v.prime_ = p;
    return v;
  }

  bool is_infinite() const { return !prime_.has_value(); }
  const Integer& p() const { return *prime_; }

  std::string str() const { return prime_ ? prime_->get_str() : std::string("inf"); }

  friend bool operator==(const Place&, const Place&) = default;

 private:
  Place() = default;
  std::optional<Integer> prime_;
};

/// Hilbert symbol (a, b)_v over Q_v.
inline int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (a == 0 || b == 0) throw Error(Errc::InvalidArgument, "hilbert_symbol with a zero argument");
  // a = num/den lies in the square class of num*den.
  const Integer ai = a.get_num() * a.get_den();
  const Integer bi = b.get_num() * b.get_den();
  if (v.is_infinite()) return (ai < 0 && bi < 0) ? -1 : 1;

  const Integer& p = v.p();
  Integer u, w;
  const long alpha = static_cast<long>(mpz_remove(u.get_mpz_t(), ai.get_mpz_t(), p.get_mpz_t()));
  const long beta = static_cast<long>(mpz_remove(w.get_mpz_t(), bi.get_mpz_t(), p.get_mpz_t()));

  if (p == 2) {
    auto eps = [](const Integer& x) { return mod(Integer((x - 1) / 2), 2).get_ui(); };
    auto omega = [](const Integer& x) { return mod(Integer((x * x - 1) / 8), 2).get_ui(); };
    const unsigned long e = eps(u) * eps(w) + (alpha % 2) * omega(w) + (beta % 2) * omega(u);
    return e % 2 == 0 ? 1 : -1;
  }
  int s = 1;
  if (alpha % 2 != 0 && beta % 2 != 0 && mod(p, 4) == 3) s = -s;
  if (beta % 2 != 0) s *= kronecker(u, p);
  if (alpha % 2 != 0) s *= kronecker(w, p);
  return s;
}

inline int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p) {
  return hilbert_symbol(a, b, Place::prime(p));
}

}  // namespace cmint
