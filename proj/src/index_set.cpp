#include "momentangle/index_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace momentangle {

namespace {

void check_element(int i) {
  if (i < 1 || i > IndexSet::kMaxElement) {
    throw std::out_of_range("index " + std::to_string(i) + " outside 1..64");
  }
}

}  // namespace

IndexSet::IndexSet(std::initializer_list<int> elements) {
  for (int i : elements) {
    check_element(i);
    bits_ |= std::uint64_t{1} << (i - 1);
  }
}

IndexSet::IndexSet(const std::vector<int>& elements) {
  for (int i : elements) {
    check_element(i);
    bits_ |= std::uint64_t{1} << (i - 1);
  }
}

IndexSet IndexSet::range(int m) {
  if (m < 0 || m > kMaxElement) throw std::out_of_range("range size outside 0..64");
  if (m == kMaxElement) return IndexSet(~std::uint64_t{0});
  return IndexSet((std::uint64_t{1} << m) - 1);
}

IndexSet IndexSet::singleton(int i) {
  check_element(i);
  return IndexSet(std::uint64_t{1} << (i - 1));
}

bool IndexSet::contains(int i) const {
  if (i < 1 || i > kMaxElement) return false;
  return (bits_ >> (i - 1)) & 1U;
}

int IndexSet::max_element() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

std::vector<int> IndexSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

int IndexSet::count_below(int i) const {
  if (i <= 1) return 0;
  if (i > kMaxElement) return size();
  return std::popcount(bits_ & ((std::uint64_t{1} << (i - 1)) - 1));
}

IndexSet IndexSet::with(int i) const { return *this | singleton(i); }

IndexSet IndexSet::without(int i) const { return *this - singleton(i); }

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : elements()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

bool lex_less(IndexSet a, IndexSet b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

bool graded_lex_less(IndexSet a, IndexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

std::vector<int> indicator(IndexSet set, int m) {
  std::vector<int> v(static_cast<std::size_t>(m), 0);
  for (int i : set.elements()) {
    if (i <= m) v[static_cast<std::size_t>(i - 1)] = 1;
  }
  return v;
}

std::vector<IndexSet> all_subsets(int m) {
  if (m < 0 || m > 20) throw std::out_of_range("all_subsets: m outside 0..20");
  std::vector<IndexSet> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) out.emplace_back(b);
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

}  // namespace momentangle
