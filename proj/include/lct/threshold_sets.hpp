#pragma once

#include "lct/poly.hpp"
#include "lct/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lct {

/// A finite, sorted, duplicate-free set of thresholds with a record of how it was produced.
struct ThresholdSetSample {
  std::size_t dimension = 0;
  std::vector<Rat> values;  ///< strictly ascending, all in [0, 1]
  std::vector<std::pair<std::string, std::string>> provenance;

  bool contains(const Rat& q) const;
  std::size_t size() const noexcept { return values.size(); }
};

/// {0} together with 1/k for 1 <= k <= K.
ThresholdSetSample ht1(std::uint64_t K);

/// One parameter tuple of the two-variable threshold formula
/// (c1 + c2) / (c1 c2 + a1 c2 + a2 c1).
struct Ht2Params {
  std::uint64_t a1 = 0, a2 = 0, c1 = 0, c2 = 0;

  /// a_i + c_i >= max(2, a_{3-i}) for i = 1, 2.
  bool admissible() const;
  /// The formula value; nullopt when the denominator is not positive.
  std::optional<Rat> value() const;
};

struct Ht2Options {
  /// Enumeration memory grows like B^3 / 1.3 bytes.
  std::uint64_t max_bound = 400;
};

/// All formula values over admissible tuples with entries in [0, B], plus 0.
/// Throws std::invalid_argument for B < 2 and ResourceLimitError above the cap.
ThresholdSetSample ht2_enumerate(std::uint64_t B, const Ht2Options& options = {});

/// Newton thresholds of `count` seeded random supports in n variables with
/// exponents <= D, assuming generic coefficients. Only finite values are kept.
ThresholdSetSample toric_sample(std::size_t n, std::uint32_t D, std::size_t count, std::uint64_t seed);

struct AccumulationInterval {
  Rat lo;
  Rat hi;
  std::size_t count = 0;
};

/// Left-to-right sweep: from the first element not yet covered, take every
/// element within delta; keep the window if it has at least k elements and
/// continue after it, otherwise move one element right. Windows are disjoint,
/// of width <= delta, and extend as far right as possible.
std::vector<AccumulationInterval> accumulation_scan(const ThresholdSetSample& sample, const Rat& delta,
                                                    std::size_t k);

struct FamilyCheck {
  Rat base;
  std::uint64_t first_m = 0;
  std::uint64_t last_m = 0;
  std::vector<Rat> values;  ///< c + 1/m for m = first_m..last_m
  bool empty = false;       ///< first_m > last_m: nothing to check
  bool passed = false;
};

/// Checks that min(1, c + 1/m) = c + 1/m for m from ceil(1/(1-c)) + 1 to M and
/// that the values strictly decrease towards c. Throws std::invalid_argument
/// unless c is finite and below 1.
FamilyCheck family_limit_check(const ThresholdValue& c, std::uint64_t M);

struct GapOptions {
  int max_n = 5;
};

struct GapResult {
  int n = 0;
  Rat max;                              ///< largest sum 1/a_1 + ... + 1/a_n below 1
  std::vector<std::uint64_t> witness;   ///< a_1 <= ... <= a_n, lexicographically first maximizer
  std::uint64_t nodes = 0;
};

/// Complete branch-and-bound search. Throws std::invalid_argument for n < 1
/// and ResourceLimitError for n > options.max_n.
GapResult gap_search(int n, const GapOptions& options = {});

/// First k terms of 2, 3, 7, 43, ... with c_{k+1} = c_1 ... c_k + 1.
std::vector<BigInt> sylvester(std::size_t k);

/// 1 / (c_{n+1} - 1).
Rat epsilon_candidate(std::size_t n);

}  // namespace lct
