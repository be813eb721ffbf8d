// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cmint/cmint.hpp"
#include "cmint/corpus.hpp"
#include "cmint/oracles.hpp"
#include "cmint/report.hpp"

using namespace cmint;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  for (long p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

PMatrix random_admissible(std::mt19937_64& rng, long p, long r) {
  const Rational pr(pow(Integer(p), static_cast<unsigned long>(r)));
  for (;;) {
    auto e = [&] { return Rational(static_cast<long>(rng() % 41) - 20); };
    const Rational s = e();
    const PMatrix M(p, e(), e(), e(), e());
    const PMatrix y(p, s + M.a() / pr, M.b() / pr, M.c() / pr, s + M.d() / pr);
    if (!val_ge(valuation(y.trace(), p), 0) || !val_ge(valuation(y.norm(), p), 0)) continue;
    if (is_optimally_embedded(y, r)) return y;
  }
}

// 1. root counts vs enumeration
Outcome c1() {
  std::mt19937_64 rng(101);
  long mismatches = 0, cases = 0;
  for (int i = 0; i < 500; ++i) {
    const Integer a1 = static_cast<long>(rng() % 2001) - 1000, a0 = static_cast<long>(rng() % 2001) - 1000;
    for (long p : {2L, 3L, 5L, 7L})
      for (long C = 0; C <= 5; ++C) {
        ++cases;
        if (count_roots_mod_pk(p, C, a1, a0) != oracle::count_roots_bruteforce(p, C, a1, a0)) ++mismatches;
      }
  }
  return {mismatches == 0, std::to_string(cases) + " cases, " + std::to_string(mismatches) + " mismatches"};
}

// 2. right-order ideal counts vs exhaustive filter; ideal cardinalities
Outcome c2() {
  std::mt19937_64 rng(102);
  long mismatches = 0, ys = 0;
  for (long p : {2L, 3L, 5L})
    for (long r = 0; r <= 2; ++r)
      for (int i = 0; i < 12; ++i) {
        const PMatrix y = random_admissible(rng, p, r);
        ++ys;
        for (long N = 0; N <= 4; ++N)
          if (count_right_order_ideals(p, N, y, r) != oracle::count_right_order_bruteforce(p, N, y)) ++mismatches;
      }
  long bad_card = 0;
  for (long p : {2L, 3L, 5L})
    for (long N = 0; N <= 4; ++N) {
      long expected = 0;
      for (long k = 0; k <= N; ++k) expected += pow(Integer(p), static_cast<unsigned long>(k)).get_si();
      if (static_cast<long>(enumerate_ideals(p, N).size()) != expected) ++bad_card;
    }
  return {mismatches == 0 && bad_card == 0 && ys >= 100,
          std::to_string(ys) + " admissible y, " + std::to_string(mismatches) + " mismatches, " +
              std::to_string(bad_card) + " cardinality errors"};
}

// 3. containment criterion vs matrix quotient
Outcome c3() {
  long mismatches = 0, pairs = 0;
  for (long p : {2L, 3L})
    for (long N1 = 0; N1 <= 3; ++N1)
      for (long N2 = 0; N2 <= 3; ++N2)
        for (const auto& I : enumerate_ideals(p, N1))
          for (const auto& J : enumerate_ideals(p, N2))
            for (long j = 0; j <= 2; ++j)
              for (long k = 0; k <= 2; ++k) {
                ++pairs;
                if (contained_in(j, I, k, J) != oracle::contained_bruteforce(j, I, k, J)) ++mismatches;
              }
  return {mismatches == 0, std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatches"};
}

// 4. ideal counts vs HNF brute force
Outcome c4() {
  long mismatches = 0, cases = 0;
  for (long d = -400; d < 0; ++d) {
    if (!is_discriminant_class(d)) continue;
    const auto disc = discriminant_of(d);
    for (long M = 1; M <= 200; ++M) {
      ++cases;
      if (count_invertible_ideals(disc, M) != oracle::count_ideals_bruteforce(d, M).invertible) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(cases) + " (d, M), " + std::to_string(mismatches) + " mismatches"};
}

// 5. Hilbert symbols: product formula and solvability oracle
Outcome c5() {
  std::mt19937_64 rng(105);
  long product_fail = 0, oracle_fail = 0, pairs = 0;
  while (pairs < 200) {
    const long a = static_cast<long>(rng() % 20001) - 10000, b = static_cast<long>(rng() % 20001) - 10000;
    if (a == 0 || b == 0) continue;
    ++pairs;
    int prod = hilbert_symbol(a, b, Place::infinity());
    for (const auto& p : prime_divisors(Integer(2) * a * b)) prod *= hilbert_symbol(a, b, p);
    if (prod != 1) ++product_fail;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
      if (hilbert_symbol(a, b, Integer(p)) != oracle::hilbert_bruteforce(a, b, p)) ++oracle_fail;
  }
  return {product_fail == 0 && oracle_fail == 0, std::to_string(pairs) + " pairs, product failures " +
                                                     std::to_string(product_fail) + ", oracle mismatches " +
                                                     std::to_string(oracle_fail)};
}

// 6. internal identities over the corpus
Outcome c6(const std::vector<CMFieldData>& corpus) {
  long violations = 0, branches = 0;
  for (const auto& field : corpus)
    for (const auto& dc : enumerate_delta(field)) {
      std::vector<NContext> ns;
      try {
        ns = enumerate_n_all(field, dc);
      } catch (const Error&) {
        ++violations;
        continue;
      }
      for (const auto& c : ns) {
        const Integer cross = dc.t_x * dc.t_u - 2 * c.t_xuv;
        if (4 * c.N != c.d_x * c.d_u - cross * cross) ++violations;
        if (c.d_u >= 0) ++violations;
        for (const auto& ell : prime_divisors(c.N)) {
          if (frakI(c, 1, ell) != 1) ++violations;
          for (const auto& fu : enumerate_fu(c, ell)) {
            ++branches;
            const ScrJQuery q = make_scrj_query(field, c, fu, ell);
            try {
              vanishing_test(q);
            } catch (const Error&) {
              ++violations;
            }
          }
        }
      }
    }
  return {violations == 0 && corpus.size() >= 50,
          std::to_string(corpus.size()) + " fields, " + std::to_string(branches) + " (delta, n, f_u) branches, " +
              std::to_string(violations) + " violations"};
}

// 7. conjecture vs scrJ; special case vs main formula
Outcome c7(const std::vector<CMFieldData>& corpus) {
  long conj_cmp = 0, conj_bad = 0, special_cmp = 0, special_bad = 0;
  for (const auto& field : corpus) {
    bool quarter = false;
    for (const auto& dc : enumerate_delta(field)) {
      if (dc.sq == 0) quarter = true;
      for (const auto& c : enumerate_n_all(field, dc))
        for (const auto& ell : prime_divisors(c.N))
          for (const auto& fu : enumerate_fu(c, ell)) {
            const ScrJQuery q = make_scrj_query(field, c, fu, ell);
            const auto r = scrJ(q);
            if (r.exactness != Exactness::Exact || r.nonintegral_input) continue;
            if (gcd(q.d1.f, Integer(q.Nprime.get_num() * ell)) != 1) continue;
            const auto conj = scrJ_conjecture(q);
            if (!conj) continue;
            ++conj_cmp;
            if (*conj != r.value) ++conj_bad;
          }
    }
    if (quarter) continue;
    for (long ell : primes_up_to(50)) {
      const auto special = special_case_value(field, ell);
      if (!special) continue;
      const auto rep = intersection_number(field, ell);
      if (rep.exactness != Exactness::Exact) continue;
      ++special_cmp;
      if (*special != rep.value) ++special_bad;
    }
  }
  return {conj_bad == 0 && special_bad == 0 && conj_cmp > 0 && special_cmp > 0,
          "conjecture " + std::to_string(conj_cmp) + " compared / " + std::to_string(conj_bad) +
              " mismatches; special case " + std::to_string(special_cmp) + " compared / " +
              std::to_string(special_bad) + " mismatches"};
}

// 8. the worked value
Outcome c8() {
  const auto field = validate({5, 0, 1, 1, 1});
  const auto rep = intersection_number(field, 2);
  bool ok = rep.value == 1 && rep.exactness == Exactness::Exact && rep.rows.size() == 1;
  if (ok) {
    const auto& r = rep.rows[0];
    ok = r.delta == 1 && r.n == -1 && r.fu == 1 && r.C_delta == 1 && r.mu == 1 && r.frakI == 1 && r.scrJ_value == 1;
  }
  long nonzero_other = 0;
  for (long ell : primes_up_to(100))
    if (ell != 2 && intersection_number(field, ell).value != 0) ++nonzero_other;
  return {ok && nonzero_other == 0, "value " + rep.value.get_str() + ", rows " + std::to_string(rep.rows.size()) +
                                        ", nonzero at other primes <= 100: " + std::to_string(nonzero_other)};
}

// 9. nonzero intersection implies candidate prime
Outcome c9(const std::vector<CMFieldData>& corpus) {
  long violations = 0, nonzero = 0;
  for (const auto& field : corpus) {
    const auto cands = enumerate_candidate_primes(field);
    for (long ell : primes_up_to(50)) {
      if (intersection_number(field, ell).value == 0) continue;
      ++nonzero;
      if (std::none_of(cands.begin(), cands.end(), [&](const CandidatePrime& c) { return c.ell == ell; })) ++violations;
    }
  }
  return {violations == 0, std::to_string(nonzero) + " nonzero (field, ell), " + std::to_string(violations) +
                               " violations"};
}

// 10. byte-identical reports
Outcome c10(const std::vector<CMFieldData>& corpus) {
  long differing = 0, jobs = 0;
  for (std::size_t i = 0; i < std::min<std::size_t>(corpus.size(), 20); ++i)
    for (long ell : {2L, 3L, 5L}) {
      ++jobs;
      const auto a = io::report_to_json(intersection_number(corpus[i], ell)).dump(2);
      const auto b = io::report_to_json(intersection_number(corpus[i], ell)).dump(2);
      const auto pa = io::candidates_to_json(enumerate_candidate_primes(corpus[i])).dump();
      const auto pb = io::candidates_to_json(enumerate_candidate_primes(corpus[i])).dump();
      if (a != b || pa != pb) ++differing;
    }
  return {differing == 0, std::to_string(jobs) + " jobs, " + std::to_string(differing) + " differing"};
}

}  // namespace

int main() {
  const auto corpus = fuzz_corpus(60);
  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0: no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "local root counts vs enumeration", 2.0, c1},
      {2, "right-order ideal counts vs exhaustive filter", 10.0, c2},
      {3, "containment criterion vs matrix quotient", 0, c3},
      {4, "quadratic-order ideal counts vs HNF brute force", 30.0, c4},
      {5, "Hilbert symbols: product formula and solvability oracle", 0, c5},
      {6, "main-formula internal identities on fuzz corpus", 0, [&] { return c6(corpus); }},
      {7, "conjectural product and special case agree", 0, [&] { return c7(corpus); }},
      {8, "worked example (D=5, alpha=(0,1), beta=(1,1), ell=2) = 1", 0, c8},
      {9, "nonzero intersection implies candidate prime", 0, [&] { return c9(corpus); }},
      {10, "deterministic reports", 0, [&] { return c10(corpus); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail += " (time limit exceeded)";
    }
    std::ostringstream line;
    line.precision(3);
    line << (o.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail << " (" << std::fixed
         << secs << " s";
    if (c.limit_seconds > 0) line << ", limit " << c.limit_seconds << " s";
    line << ")";
    std::puts(line.str().c_str());
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
