#ifndef SUMDIFF_SUMSETS_HPP
#define SUMDIFF_SUMSETS_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sumdiff {

/// Finite nonempty set of integers, stored sorted and deduplicated.
class IntSet {
 public:
  /// Throws ValidationError when empty.
  explicit IntSet(std::vector<std::int64_t> elements);
  IntSet(std::initializer_list<std::int64_t> elements)
      : IntSet(std::vector<std::int64_t>(elements)) {}

  std::size_t size() const noexcept { return elements_.size(); }
  std::int64_t min() const noexcept { return elements_.front(); }
  std::int64_t max() const noexcept { return elements_.back(); }
  const std::vector<std::int64_t>& elements() const noexcept { return elements_; }
  bool contains(std::int64_t x) const;

  IntSet shifted(std::int64_t c) const;

  friend bool operator==(const IntSet&, const IntSet&) = default;

 private:
  std::vector<std::int64_t> elements_;
};

IntSet sumset(const IntSet& a, const IntSet& b);

/// max - min.
std::int64_t span(const IntSet& x);

/// gcd of all differences within A and within B. Throws ValidationError if
/// both sets are singletons.
std::int64_t common_difference(const IntSet& a, const IntSet& b);

struct ApCover {
  std::vector<std::int64_t> progression;  // min(X), min(X)+d, ..., max(X)
  std::int64_t excess = 0;                // |progression| - |X|
};

/// Throws ValidationError unless d > 0 divides every difference within X.
ApCover ap_cover(const IntSet& x, std::int64_t d);

struct StanchescuVerdict {
  bool hypothesis_holds = false;
  std::int64_t sumset_size = 0;
  std::int64_t hypothesis_rhs = 0;  // |A|+|B|+min(|A|,|B|)-2-[l(A)=l(B)]
  std::int64_t common_difference = 0;
  std::int64_t spanA_over_d = 0;
  std::int64_t spanB_over_d = 0;
  std::int64_t rhsA = 0;  // |A+B| - |B|
  std::int64_t rhsB = 0;  // |A+B| - |A|
  bool conclusion_holds = false;
};

/// If |A+B| is below the hypothesis threshold, both sets lie in short
/// progressions: l(A)/d <= |A+B|-|B| and l(B)/d <= |A+B|-|A|. Evaluates
/// both sides; throws when d(A,B) is undefined.
StanchescuVerdict stanchescu_check(const IntSet& a, const IntSet& b);

struct StanchescuRun {
  std::uint64_t trials = 0;
  std::uint64_t skipped_undefined = 0;  // both sets singletons
  std::uint64_t hypothesis_true = 0;
  std::uint64_t violations = 0;
};

/// Random pairs with sizes in [1, max_size] and elements in [0, max_elem].
StanchescuRun stanchescu_property_run(std::uint64_t trials, std::uint64_t seed,
                                      std::int64_t max_elem, int max_size);

}  // namespace sumdiff

#endif  // SUMDIFF_SUMSETS_HPP
