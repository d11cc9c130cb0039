#include "scree/vertex_set.hpp"

#include <algorithm>
#include <bit>

#include "scree/error.hpp"

namespace scree {

namespace {
std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }
}  // namespace

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<int> members)
    : VertexSet(universe, std::span<const int>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const int> members)
    : VertexSet(universe) {
  for (int v : members) {
    if (v < 0 || static_cast<std::size_t>(v) >= universe) {
      throw Error(Errc::kUnknownVertex, "vertex index out of range");
    }
    insert(v);
  }
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<int>(v));
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw Error(Errc::kBadParams, "mask universe exceeds 64");
  VertexSet s(universe);
  if (universe > 0) s.words_[0] = universe == 64 ? mask : mask & ((std::uint64_t{1} << universe) - 1);
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

int VertexSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
  }
  return -1;
}

std::uint64_t VertexSet::mask() const {
  if (universe_ > 64) throw Error(Errc::kBadParams, "mask universe exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (universe_ % 64 != 0 && !out.words_.empty()) {
    out.words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
  return out;
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
  VertexSet out(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  return out;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
  VertexSet out(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  return out;
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
  VertexSet out(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~other.words_[i];
  return out;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace scree
