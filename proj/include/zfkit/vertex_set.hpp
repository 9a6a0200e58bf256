#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace zfkit {

using Vertex = int;

/// Bit-packed subset of {0..61}. Bit v set means vertex v is a member.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr Vertex first() const { return std::countr_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  class iterator {
  public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

  private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for (Vertex v : *this) {
      if (!first_item) s += ',';
      s += std::to_string(v);
      first_item = false;
    }
    return s + "}";
  }

private:
  std::uint64_t bits_ = 0;
};

/// Next larger mask with the same popcount (Gosper's hack). Caller checks the bound.
constexpr std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t c = x & -x;
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

/// Calls fn(VertexSet) for every k-subset of {0..n-1} in increasing bit-pattern
/// order. Stops early and returns true as soon as fn returns true.
template <typename Fn>
bool for_each_subset_of_size(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return false;
  if (k == 0) return fn(VertexSet{});
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = (std::uint64_t{1} << k) - 1; m < limit; m = next_same_popcount(m)) {
    if (fn(VertexSet(m))) return true;
  }
  return false;
}

}  // namespace zfkit
