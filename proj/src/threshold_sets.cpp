#include "lct/threshold_sets.hpp"

#include "lct/engine.hpp"
#include "lct/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace lct {

namespace {

void sort_unique(std::vector<Rat>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Portable bounded draw; std::uniform_int_distribution differs across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Dense bit matrix indexed by (numerator, denominator).
class FractionGrid {
 public:
  FractionGrid(std::size_t max_num, std::size_t max_den)
      : width_(max_den + 1), bits_((max_num + 1) * width_) {}

  void set(std::size_t num, std::size_t den) { bits_[num * width_ + den] = true; }
  bool test(std::size_t num, std::size_t den) const { return bits_[num * width_ + den]; }
  std::size_t width() const { return width_; }

 private:
  std::size_t width_;
  std::vector<bool> bits_;
};

struct GapSearch {
  int n;
  std::vector<std::uint64_t> current;
  Rat best = -1;
  std::vector<std::uint64_t> witness;
  std::uint64_t nodes = 0;

  void offer(const Rat& total, const std::vector<std::uint64_t>& tuple) {
    if (total > best || (total == best && tuple < witness)) {
      best = total;
      witness = tuple;
    }
  }

  // Smallest a with s + 1/a < 1.
  static std::uint64_t first_admissible(const Rat& s) {
    return floor(Rat(1) / (Rat(1) - s)).get_ui() + 1;
  }

  // Greedy completion from a prefix; always a valid tuple.
  void greedy_completion(Rat s, std::uint64_t prev) {
    auto tuple = current;
    while (static_cast<int>(tuple.size()) < n) {
      const std::uint64_t a = std::max(prev, first_admissible(s));
      tuple.push_back(a);
      s += Rat(1, a);
      prev = a;
    }
    offer(s, tuple);
  }

  void descend(const Rat& s, std::uint64_t prev) {
    ++nodes;
    const int remaining = n - static_cast<int>(current.size());
    const std::uint64_t lo = std::max(prev, first_admissible(s));
    if (remaining == 1) {
      current.push_back(lo);
      offer(s + Rat(1, lo), current);
      current.pop_back();
      return;
    }
    if (s >= best) greedy_completion(s, prev);
    // s + remaining/a >= best is necessary for a completion to reach best
    const std::uint64_t hi = floor(Rat(remaining) / (best - s)).get_ui();
    for (std::uint64_t a = lo; a <= hi; ++a) {
      current.push_back(a);
      descend(s + Rat(1, a), a);
      current.pop_back();
    }
  }
};

}  // namespace

bool ThresholdSetSample::contains(const Rat& q) const {
  return std::binary_search(values.begin(), values.end(), q);
}

ThresholdSetSample ht1(std::uint64_t K) {
  if (K < 1) throw std::invalid_argument("ht1 needs K >= 1");
  ThresholdSetSample s;
  s.dimension = 1;
  s.values.reserve(K + 1);
  s.values.emplace_back(0);
  for (std::uint64_t k = K; k >= 1; --k) s.values.emplace_back(1, k);
  s.provenance = {{"K", std::to_string(K)}};
  return s;
}

bool Ht2Params::admissible() const {
  return a1 + c1 >= std::max<std::uint64_t>(2, a2) && a2 + c2 >= std::max<std::uint64_t>(2, a1);
}

std::optional<Rat> Ht2Params::value() const {
  const std::uint64_t den = c1 * c2 + a1 * c2 + a2 * c1;
  if (den == 0) return std::nullopt;
  Rat q(c1 + c2, den);
  q.canonicalize();
  return q;
}

ThresholdSetSample ht2_enumerate(std::uint64_t B, const Ht2Options& options) {
  if (B < 2) throw std::invalid_argument("ht2_enumerate needs B >= 2");
  if (B > options.max_bound)
    throw ResourceLimitError("ht2 bound " + std::to_string(B) + " exceeds the cap of " +
                             std::to_string(options.max_bound));

  // For fixed (c1, c2) the value depends only on D = c1 c2 + a1 c2 + a2 c1, so
  // mark the unreduced pairs (c1 + c2, D) first and reduce afterwards. The
  // formula is symmetric under (a1, c1) <-> (a2, c2), so c1 <= c2 suffices.
  const std::size_t max_num = 2 * B;
  const std::size_t max_den = 3 * B * B;
  FractionGrid raw(max_num, max_den);
  std::uint64_t skipped = 0;

  for (std::uint64_t c1 = 0; c1 <= B; ++c1) {
    for (std::uint64_t c2 = c1; c2 <= B; ++c2) {
      const std::size_t num = c1 + c2;
      for (std::uint64_t a1 = 0; a1 <= B; ++a1) {
        if (a1 + c1 < 2) continue;
        // a2 <= a1 + c1, a2 >= 2 - c2, a2 + c2 >= a1
        const std::uint64_t a2_hi = std::min(B, a1 + c1);
        std::uint64_t a2_lo = 0;
        if (c2 < 2) a2_lo = 2 - c2;
        if (a1 > c2) a2_lo = std::max(a2_lo, a1 - c2);
        if (a2_lo > a2_hi) continue;
        if (num == 0) {
          skipped += a2_hi - a2_lo + 1;
          continue;
        }
        std::size_t den = c1 * c2 + a1 * c2 + a2_lo * c1;
        for (std::uint64_t a2 = a2_lo; a2 <= a2_hi; ++a2, den += c1) raw.set(num, den);
      }
    }
  }

  FractionGrid reduced(max_num, max_den);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> fractions;
  for (std::size_t num = 1; num <= max_num; ++num)
    for (std::size_t den = 1; den < raw.width(); ++den) {
      if (!raw.test(num, den)) continue;
      const std::size_t g = std::gcd(num, den);
      if (reduced.test(num / g, den / g)) continue;
      reduced.set(num / g, den / g);
      fractions.emplace_back(static_cast<std::uint32_t>(num / g), static_cast<std::uint32_t>(den / g));
    }
  std::sort(fractions.begin(), fractions.end(), [](const auto& x, const auto& y) {
    return std::uint64_t{x.first} * y.second < std::uint64_t{y.first} * x.second;
  });

  ThresholdSetSample s;
  s.dimension = 2;
  s.values.reserve(fractions.size() + 1);
  s.values.emplace_back(0);
  for (const auto& [p, q] : fractions) {
    if (p > q) throw std::logic_error("ht2 formula value above 1");
    s.values.emplace_back(p, q);
  }
  s.provenance = {{"B", std::to_string(B)}, {"skipped_nonpositive_denominator", std::to_string(skipped)}};
  return s;
}

ThresholdSetSample toric_sample(std::size_t n, std::uint32_t D, std::size_t count, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("toric_sample needs n >= 1");
  if (D < 1) throw std::invalid_argument("toric_sample needs D >= 1");

  std::mt19937_64 rng(seed);
  ThresholdSetSample s;
  s.dimension = n;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t points = 1 + draw_below(rng, n + 1);
    std::vector<ExponentVector> support;
    while (support.size() < points) {
      std::vector<std::uint32_t> e(n);
      for (auto& x : e) x = static_cast<std::uint32_t>(draw_below(rng, std::uint64_t{D} + 1));
      ExponentVector v(std::move(e));
      if (!v.is_zero()) support.push_back(std::move(v));
    }
    const auto value = newton_threshold(support);
    if (value.is_finite()) s.values.push_back(value.value());
  }
  sort_unique(s.values);
  s.provenance = {{"n", std::to_string(n)},
                  {"D", std::to_string(D)},
                  {"count", std::to_string(count)},
                  {"seed", std::to_string(seed)}};
  return s;
}

std::vector<AccumulationInterval> accumulation_scan(const ThresholdSetSample& sample, const Rat& delta,
                                                    std::size_t k) {
  if (delta <= 0) throw std::invalid_argument("accumulation_scan needs delta > 0");
  if (k < 2) throw std::invalid_argument("accumulation_scan needs k >= 2");

  const auto& v = sample.values;
  std::vector<AccumulationInterval> out;
  std::size_t i = 0, j = 0;
  Rat limit;
  while (i < v.size()) {
    limit = v[i] + delta;
    if (j < i) j = i;
    while (j + 1 < v.size() && v[j + 1] <= limit) ++j;
    const std::size_t count = j - i + 1;
    if (count >= k) {
      out.push_back({v[i], v[j], count});
      i = j + 1;
    } else {
      ++i;
    }
  }
  return out;
}

FamilyCheck family_limit_check(const ThresholdValue& c, std::uint64_t M) {
  if (!c.is_finite()) throw std::invalid_argument("family check needs a finite threshold");
  if (c.value() >= 1) throw std::invalid_argument("family check needs a threshold below 1");

  FamilyCheck check;
  check.base = c.value();
  check.first_m = ceil(Rat(1) / (Rat(1) - check.base)).get_ui() + 1;
  check.last_m = M;
  if (check.first_m > M) {
    check.empty = true;
    return check;
  }

  bool ok = true;
  for (std::uint64_t m = check.first_m; m <= M; ++m) {
    const Rat step(1, m);
    const Rat expected = check.base + step;
    const auto got = lct_direct_sum(c, ThresholdValue::finite(step));
    ok = ok && got.is_finite() && got.value() == expected && expected > check.base;
    if (!check.values.empty()) ok = ok && expected < check.values.back();
    check.values.push_back(expected);
  }
  check.passed = ok && check.values.back() - check.base == Rat(1, M);
  return check;
}

GapResult gap_search(int n, const GapOptions& options) {
  if (n < 1) throw std::invalid_argument("gap_search needs n >= 1");
  if (n > options.max_n)
    throw ResourceLimitError("gap search for n = " + std::to_string(n) + " exceeds the cap of " +
                             std::to_string(options.max_n));
  GapSearch search{n};
  search.descend(Rat(0), 1);
  return {n, search.best, search.witness, search.nodes};
}

std::vector<BigInt> sylvester(std::size_t k) {
  if (k < 1) throw std::invalid_argument("sylvester needs k >= 1");
  std::vector<BigInt> terms;
  terms.reserve(k);
  BigInt product = 1;
  for (std::size_t i = 0; i < k; ++i) {
    terms.push_back(product + 1);
    product *= terms.back();
  }
  return terms;
}

Rat epsilon_candidate(std::size_t n) {
  if (n < 1) throw std::invalid_argument("epsilon_candidate needs n >= 1");
  const auto c = sylvester(n + 1);
  Rat q(BigInt(1), c.back() - 1);
  q.canonicalize();
  return q;
}

}  // namespace lct
