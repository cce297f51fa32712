#include "sumdiff/sumsets.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "sumdiff/errors.hpp"

namespace sumdiff {

IntSet::IntSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw ValidationError("integer set must be nonempty");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool IntSet::contains(std::int64_t x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

IntSet IntSet::shifted(std::int64_t c) const {
  std::vector<std::int64_t> out = elements_;
  for (auto& x : out) x += c;
  return IntSet(std::move(out));
}

IntSet sumset(const IntSet& a, const IntSet& b) {
  std::vector<std::int64_t> out;
  out.reserve(a.size() * b.size());
  for (auto x : a.elements()) {
    for (auto y : b.elements()) out.push_back(x + y);
  }
  return IntSet(std::move(out));
}

std::int64_t span(const IntSet& x) { return x.max() - x.min(); }

std::int64_t common_difference(const IntSet& a, const IntSet& b) {
  if (a.size() == 1 && b.size() == 1) {
    throw ValidationError("common difference undefined: both sets are singletons");
  }
  // Differences from the minimum generate the same gcd as all differences.
  std::int64_t d = 0;
  for (const IntSet* s : {&a, &b}) {
    for (auto x : s->elements()) d = std::gcd(d, x - s->min());
  }
  return d;
}

ApCover ap_cover(const IntSet& x, std::int64_t d) {
  if (d <= 0) throw ValidationError("progression difference must be positive");
  for (auto e : x.elements()) {
    if ((e - x.min()) % d != 0) {
      throw ValidationError("difference " + std::to_string(d) + " does not divide " +
                            std::to_string(e - x.min()));
    }
  }
  ApCover cover;
  for (std::int64_t e = x.min(); e <= x.max(); e += d) cover.progression.push_back(e);
  cover.excess = static_cast<std::int64_t>(cover.progression.size() - x.size());
  return cover;
}

StanchescuVerdict stanchescu_check(const IntSet& a, const IntSet& b) {
  StanchescuVerdict v;
  const auto size_a = static_cast<std::int64_t>(a.size());
  const auto size_b = static_cast<std::int64_t>(b.size());
  v.common_difference = common_difference(a, b);
  v.sumset_size = static_cast<std::int64_t>(sumset(a, b).size());
  const std::int64_t kronecker = span(a) == span(b) ? 1 : 0;
  v.hypothesis_rhs = size_a + size_b + std::min(size_a, size_b) - 2 - kronecker;
  v.hypothesis_holds = v.sumset_size < v.hypothesis_rhs;
  v.spanA_over_d = span(a) / v.common_difference;
  v.spanB_over_d = span(b) / v.common_difference;
  v.rhsA = v.sumset_size - size_b;
  v.rhsB = v.sumset_size - size_a;
  v.conclusion_holds = v.spanA_over_d <= v.rhsA && v.spanB_over_d <= v.rhsB;
  return v;
}

StanchescuRun stanchescu_property_run(std::uint64_t trials, std::uint64_t seed,
                                      std::int64_t max_elem, int max_size) {
  if (max_size < 1 || max_elem < 0) {
    throw ValidationError("property run needs max_size >= 1 and max_elem >= 0");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(1, max_size);
  std::uniform_int_distribution<std::int64_t> elem_dist(0, max_elem);
  auto draw = [&] {
    std::vector<std::int64_t> xs(static_cast<std::size_t>(size_dist(rng)));
    for (auto& x : xs) x = elem_dist(rng);
    return IntSet(std::move(xs));
  };
  StanchescuRun run;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const IntSet a = draw();
    const IntSet b = draw();
    ++run.trials;
    if (a.size() == 1 && b.size() == 1) {
      ++run.skipped_undefined;
      continue;
    }
    const auto verdict = stanchescu_check(a, b);
    if (verdict.hypothesis_holds) {
      ++run.hypothesis_true;
      if (!verdict.conclusion_holds) ++run.violations;
    }
  }
  return run;
}

}  // namespace sumdiff
