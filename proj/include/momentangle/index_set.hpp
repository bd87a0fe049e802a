#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace momentangle {

/// Subset of the ground set [m] = {1, ..., m}, stored as a bitmask. Elements
/// are 1-based; at most 64 elements are representable.
class IndexSet {
 public:
  static constexpr int kMaxElement = 64;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> elements);
  explicit IndexSet(const std::vector<int>& elements);

  /// {1, ..., m}
  static IndexSet range(int m);
  static IndexSet singleton(int i);

  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
  [[nodiscard]] bool contains(int i) const;
  [[nodiscard]] constexpr bool is_subset_of(IndexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  [[nodiscard]] constexpr bool intersects(IndexSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  /// Largest element, 0 for the empty set.
  [[nodiscard]] int max_element() const;
  [[nodiscard]] std::vector<int> elements() const;

  /// Number of elements of this set strictly smaller than i.
  [[nodiscard]] int count_below(int i) const;

  [[nodiscard]] IndexSet with(int i) const;
  [[nodiscard]] IndexSet without(int i) const;

  /// "{1,3}"
  [[nodiscard]] std::string to_string() const;

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(IndexSet a, IndexSet b) = default;
  friend constexpr auto operator<=>(IndexSet a, IndexSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Order by size, then lexicographically on the sorted element lists.
bool graded_lex_less(IndexSet a, IndexSet b);

/// Lexicographic order on sorted element lists ({1} < {1,2} < {2}).
bool lex_less(IndexSet a, IndexSet b);

/// Indicator vector of length m.
std::vector<int> indicator(IndexSet set, int m);

/// All subsets of [m] in graded-lex order.
std::vector<IndexSet> all_subsets(int m);

}  // namespace momentangle
