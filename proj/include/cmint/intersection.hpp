#pragma once

// The l-part of (CM(K).G_1): the triple sum over (delta, n, f_u), its
// index-bound variant, the fundamental-discriminant special case and the
// candidate primes allowed by the Hilbert-symbol pattern.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "cmint/arith.hpp"
#include "cmint/cm_field.hpp"
#include "cmint/embedding_count.hpp"
#include "cmint/local_solver.hpp"
#include "cmint/quad_orders.hpp"

namespace cmint {

enum class Mode { Monogenic, IndexBound };

constexpr std::string_view to_string(Mode m) { return m == Mode::Monogenic ? "Monogenic" : "IndexBound"; }

struct ContributionRow {
  Integer delta, n, fu;
  int C_delta = 1;
  Rational mu;
  Integer frakI;
  Integer scrJ_value;
  Exactness scrJ_exactness = Exactness::Exact;
  Rational product;

  friend bool operator==(const ContributionRow&, const ContributionRow&) = default;
};

struct IntersectionReport {
  Rational value;
  Exactness exactness = Exactness::Exact;
  Mode mode = Mode::Monogenic;
  std::vector<ContributionRow> rows;
  Integer ell;
  bool doubled = false;  // the global factor 2 was applied
  std::vector<std::string> warnings;

  friend bool operator==(const IntersectionReport&, const IntersectionReport&) = default;
};

/// v_l(N) if l divides both d_u and d_x, else (v_l(N) + 1)/2.
inline Rational mu_ell(const NContext& c, const Integer& ell) {
  const long v = padic_val(c.N, ell);
  if (divides(ell, c.d_u) && divides(ell, c.d_x)) return Rational(v);
  Rational r(v + 1, 2);
  r.canonicalize();
  return r;
}

namespace detail {

inline void require_prime_ell(const Integer& ell) {
  if (!is_prime(ell)) throw Error(Errc::InvalidArgument, "ell must be prime, got " + ell.get_str());
}

inline Mode check_index_hypothesis(const CMFieldData& field, const Integer& ell) {
  const Integer& k = field.params.index_bound;
  if (k == 1) return Mode::Monogenic;
  if (gcd(k, ell) != 1)
    throw Error(Errc::IndexHypothesisViolated, "index bound " + k.get_str() + " is not prime to ell = " + ell.get_str());
  for (const auto& p : prime_divisors(k))
    if (4 * p <= field.D())
      throw Error(Errc::IndexHypothesisViolated,
                  "index bound " + k.get_str() + " has prime factor " + p.get_str() + " <= D/4");
  return Mode::IndexBound;
}

}  // namespace detail

inline IntersectionReport intersection_number(const CMFieldData& field, const Integer& ell) {
  detail::require_prime_ell(ell);
  IntersectionReport rep;
  rep.ell = ell;
  rep.mode = detail::check_index_hypothesis(field, ell);
  bool all_exact = true;
  bool ell_divides_delta = false;
  for (const auto& dc : enumerate_delta(field)) {
    if (divides(ell, dc.delta)) ell_divides_delta = true;
    for (const auto& c : enumerate_n(field, dc, ell)) {
      const Rational mu = mu_ell(c, ell);
      for (const auto& fu : enumerate_fu(c, ell)) {
        const ScrJQuery q = make_scrj_query(field, c, fu, ell);
        const CountResult J = scrJ(q);
        if (J.nonintegral_input)
          rep.warnings.push_back("non-integral t or ideal norm at delta=" + dc.delta.get_str() + ", n=" + c.n.get_str() +
                                 ", f_u=" + fu.get_str() + "; count taken as 0");
        if (J.exactness != Exactness::Exact) all_exact = false;
        ContributionRow row;
        row.delta = dc.delta;
        row.n = c.n;
        row.fu = fu;
        row.C_delta = dc.C_delta;
        row.mu = mu;
        row.frakI = frakI(c, fu, ell);
        row.scrJ_value = J.value;
        row.scrJ_exactness = J.exactness;
        row.product = Rational(dc.C_delta) * mu * Rational(row.frakI) * Rational(J.value);
        rep.rows.push_back(std::move(row));
      }
    }
  }
  std::sort(rep.rows.begin(), rep.rows.end(), [](const ContributionRow& a, const ContributionRow& b) {
    return std::tie(a.delta, a.n, a.fu) < std::tie(b.delta, b.n, b.fu);
  });
  Rational sum = 0;
  for (const auto& r : rep.rows) sum += r.product;
  rep.doubled = ell_divides_delta || rep.mode == Mode::IndexBound;
  rep.value = rep.doubled ? Rational(2 * sum) : sum;
  const bool exact = all_exact && !rep.doubled && rep.mode == Mode::Monogenic;
  rep.exactness = exact ? Exactness::Exact : Exactness::UpperBound;
  return rep;
}

struct CandidatePrime {
  Integer ell;
  std::vector<std::pair<Integer, Integer>> witnesses;  // (delta, n)

  friend bool operator==(const CandidatePrime&, const CandidatePrime&) = default;
};

/// Finite primes p with (d_u, -N)_p = -1. Only p | 2 d_u N can occur.
inline std::vector<Integer> negative_symbol_primes(const NContext& c) {
  std::set<Integer> primes{2};
  for (const auto& p : prime_divisors(c.d_u)) primes.insert(p);
  for (const auto& p : prime_divisors(c.N)) primes.insert(p);
  std::vector<Integer> out;
  for (const auto& p : primes)
    if (hilbert_symbol(Rational(c.d_u), Rational(Integer(-c.N)), p) == -1) out.push_back(p);
  return out;
}

/// Primes l with a witness (delta, n): l | N and (d_u(n), -N)_p = -1 exactly at p = l.
inline std::vector<CandidatePrime> enumerate_candidate_primes(const CMFieldData& field) {
  std::vector<CandidatePrime> out;
  for (const auto& dc : enumerate_delta(field)) {
    for (const auto& c : enumerate_n_all(field, dc)) {
      if (c.N < 1) continue;
      const auto bad = negative_symbol_primes(c);
      if (bad.size() != 1 || !divides(bad.front(), c.N)) continue;
      const Integer& ell = bad.front();
      auto it = std::find_if(out.begin(), out.end(), [&](const CandidatePrime& cp) { return cp.ell == ell; });
      if (it == out.end()) {
        out.push_back({ell, {}});
        it = std::prev(out.end());
      }
      it->witnesses.emplace_back(dc.delta, c.n);
    }
  }
  std::sort(out.begin(), out.end(), [](const CandidatePrime& a, const CandidatePrime& b) { return a.ell < b.ell; });
  return out;
}

/// The sum C'_delta mu rho~_{d_u}(N) A~_{d_u}(N / l), present only when the field
/// is monogenic, l divides no delta and every d_u(n) met is fundamental.
/// Here C'_delta is 1/2 when 4 delta = D.
inline std::optional<Rational> special_case_value(const CMFieldData& field, const Integer& ell) {
  detail::require_prime_ell(ell);
  if (field.params.index_bound != 1) return std::nullopt;
  Rational sum = 0;
  for (const auto& dc : enumerate_delta(field)) {
    if (divides(ell, dc.delta)) return std::nullopt;
    const Rational C = dc.sq == 0 ? Rational(1, 2) : Rational(1);
    for (const auto& c : enumerate_n(field, dc, ell)) {
      if (!is_fundamental_discriminant(c.d_u)) return std::nullopt;
      const QuadDiscriminant disc = discriminant_of(c.d_u);
      // maximal order: every ideal is invertible
      const Integer all_ideals = count_invertible_ideals(disc, exact_div(c.N, ell));
      sum += C * mu_ell(c, ell) * Rational(rho_simplified(disc, c.N, ell) * all_ideals);
    }
  }
  return sum;
}

}  // namespace cmint
