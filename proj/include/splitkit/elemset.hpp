#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace splitkit {

inline constexpr int kMaxGround = 16;

/// Subset of a ground set {0,...,n-1}, n <= 16, packed into a 16-bit mask.
/// The ground-set size n is implicit from context; only bits below n may be
/// set. All set operations are exact word operations.
struct ElemSet {
  std::uint16_t bits = 0;

  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint16_t raw) : bits(raw) {}

  static constexpr ElemSet single(int e) {
    return ElemSet(static_cast<std::uint16_t>(1u << e));
  }
  static constexpr ElemSet full(int n) {
    return ElemSet(static_cast<std::uint16_t>((1u << n) - 1u));
  }
  static constexpr ElemSet of(std::initializer_list<int> elems) {
    std::uint16_t m = 0;
    for (int e : elems) m = static_cast<std::uint16_t>(m | (1u << e));
    return ElemSet(m);
  }

  [[nodiscard]] constexpr int size() const { return std::popcount(bits); }
  [[nodiscard]] constexpr bool empty() const { return bits == 0; }
  [[nodiscard]] constexpr bool contains(int e) const { return (bits >> e) & 1u; }
  [[nodiscard]] constexpr bool subset_of(ElemSet o) const {
    return (bits & ~o.bits) == 0;
  }
  [[nodiscard]] constexpr int lowest() const { return std::countr_zero(bits); }

  [[nodiscard]] constexpr ElemSet with(int e) const {
    return ElemSet(static_cast<std::uint16_t>(bits | (1u << e)));
  }
  [[nodiscard]] constexpr ElemSet without(int e) const {
    return ElemSet(static_cast<std::uint16_t>(bits & ~(1u << e)));
  }
  [[nodiscard]] constexpr ElemSet complement_in(int n) const {
    return ElemSet(static_cast<std::uint16_t>(~bits & ((1u << n) - 1u)));
  }

  friend constexpr ElemSet operator|(ElemSet a, ElemSet b) {
    return ElemSet(static_cast<std::uint16_t>(a.bits | b.bits));
  }
  friend constexpr ElemSet operator&(ElemSet a, ElemSet b) {
    return ElemSet(static_cast<std::uint16_t>(a.bits & b.bits));
  }
  /// Set difference.
  friend constexpr ElemSet operator-(ElemSet a, ElemSet b) {
    return ElemSet(static_cast<std::uint16_t>(a.bits & ~b.bits));
  }
  friend constexpr ElemSet operator^(ElemSet a, ElemSet b) {
    return ElemSet(static_cast<std::uint16_t>(a.bits ^ b.bits));
  }
  friend constexpr auto operator<=>(ElemSet a, ElemSet b) = default;

  struct iterator {
    std::uint16_t rest = 0;
    constexpr int operator*() const { return std::countr_zero(rest); }
    constexpr iterator& operator++() {
      rest = static_cast<std::uint16_t>(rest & (rest - 1));
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return rest != o.rest; }
  };
  [[nodiscard]] constexpr iterator begin() const { return {bits}; }
  [[nodiscard]] constexpr iterator end() const { return {0}; }

  /// "{0,2,5}" with ascending elements; "{}" when empty.
  [[nodiscard]] std::string to_string() const;
};

static_assert(sizeof(ElemSet) == 2);

/// Gosper's hack: next integer with the same popcount, or 0 on overflow past
/// the given limit bit width.
constexpr std::uint32_t next_same_popcount(std::uint32_t v) {
  std::uint32_t c = v & (0u - v);
  std::uint32_t r = v + c;
  return r | (((v ^ r) >> 2) / c);
}

/// Scatters the low |universe| bits of `packed` onto the positions of
/// `universe`, preserving order (software pdep).
constexpr ElemSet deposit(std::uint32_t packed, ElemSet universe) {
  std::uint16_t out = 0;
  std::uint16_t u = universe.bits;
  while (u != 0) {
    std::uint16_t low = static_cast<std::uint16_t>(u & (0u - u));
    if (packed & 1u) out = static_cast<std::uint16_t>(out | low);
    packed >>= 1;
    u = static_cast<std::uint16_t>(u & (u - 1));
  }
  return ElemSet(out);
}

/// Calls fn(ElemSet) for every k-subset of `universe` in ascending mask order.
template <typename Fn>
void for_each_subset_of_size(ElemSet universe, int k, Fn&& fn) {
  int m = universe.size();
  if (k < 0 || k > m) return;
  if (k == 0) {
    fn(ElemSet{});
    return;
  }
  bool dense = universe.bits == ElemSet::full(m).bits;
  std::uint32_t v = (1u << k) - 1u;
  std::uint32_t limit = 1u << m;
  while (v < limit) {
    fn(dense ? ElemSet(static_cast<std::uint16_t>(v)) : deposit(v, universe));
    v = next_same_popcount(v);
  }
}

/// Calls fn(ElemSet) for every subset of `universe` in ascending mask order
/// (ascending on the packed index, which matches mask order).
template <typename Fn>
void for_each_subset(ElemSet universe, Fn&& fn) {
  // Standard subset-of-mask walk, from the full set down, then reordered by
  // enumerating packed indices ascending.
  int m = universe.size();
  bool dense = universe.bits == ElemSet::full(m).bits;
  for (std::uint32_t v = 0; v < (1u << m); ++v) {
    fn(dense ? ElemSet(static_cast<std::uint16_t>(v)) : deposit(v, universe));
  }
}

constexpr std::uint32_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t num = 1;
  for (int i = 0; i < k; ++i) num = num * static_cast<std::uint64_t>(n - i) / (i + 1);
  return static_cast<std::uint32_t>(num);
}

}  // namespace splitkit
