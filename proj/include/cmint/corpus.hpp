#pragma once

// Fixed-seed random CM fields for property checks: fundamental D in [2, 60],
// |alpha_i|, |beta_i| <= 8, kept only if they validate.

#include <cstdint>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "cmint/cm_field.hpp"
#include "cmint/quad_orders.hpp"

namespace cmint {

inline constexpr std::uint64_t kCorpusSeed = 0x5eed'c0de'2024ULL;

inline std::vector<CMFieldData> fuzz_corpus(std::size_t count, std::uint64_t seed = kCorpusSeed, long max_D = 60,
                                            long bound = 8) {
  std::vector<long> Ds;
  for (long D = 2; D <= max_D; ++D)
    if (is_fundamental_discriminant(D)) Ds.push_back(D);
  std::mt19937_64 rng(seed);
  // plain modular reduction keeps the sequence identical across standard libraries
  auto pick = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  std::vector<CMFieldData> out;
  std::set<std::tuple<long, long, long, long, long>> seen;
  for (std::size_t attempt = 0; out.size() < count && attempt < 200 * count; ++attempt) {
    const long D = Ds[static_cast<std::size_t>(pick(0, static_cast<long>(Ds.size()) - 1))];
    const long a0 = pick(-bound, bound), a1 = pick(-bound, bound);
    const long b0 = pick(-bound, bound), b1 = pick(-bound, bound);
    if (!seen.insert({D, a0, a1, b0, b1}).second) continue;
    try {
      out.push_back(validate({D, a0, a1, b0, b1}));
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace cmint
