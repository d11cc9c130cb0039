#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace scree {

// Subset of the vertex indices 0..universe-1 of some graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<int> members);
  VertexSet(std::size_t universe, std::span<const int> members);

  static VertexSet full(std::size_t universe);
  // Bit i of `mask` is vertex i; universe must be <= 64.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(int v) const noexcept {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(int v) noexcept {
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(int v) noexcept {
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  // Members in increasing index order.
  std::vector<int> members() const;
  // Smallest member, or -1 when empty.
  int first() const noexcept;
  std::uint64_t mask() const;

  VertexSet complement() const;
  VertexSet operator|(const VertexSet& other) const;
  VertexSet operator&(const VertexSet& other) const;
  VertexSet operator-(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // Canonical order: by size, then lexicographically by sorted members.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace scree
