#include "grin/edge_set.hpp"

namespace grin {

std::size_t EdgeSet::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(__builtin_popcountll(w));
  return total;
}

bool EdgeSet::empty() const {
  for (std::uint64_t w : words_)
    if (w) return false;
  return true;
}

int EdgeSet::lowest() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w])));
  return -1;
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& other) {
  if (universe_ != other.universe_)
    fail(ErrorCode::DimensionMismatch, "edge sets of length " + std::to_string(universe_) +
                                           " and " + std::to_string(other.universe_));
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool EdgeSet::lex_less(const EdgeSet& other) const {
  // The ascending id sequences first differ at the lowest index where the
  // sets disagree; the set containing that index is lexicographically smaller
  // as long as it still has elements to offer, which the bit itself witnesses.
  for (std::size_t w = 0; w < words_.size() && w < other.words_.size(); ++w) {
    std::uint64_t diff = words_[w] ^ other.words_[w];
    if (diff) {
      std::uint64_t low = diff & (~diff + 1);
      return (words_[w] & low) != 0;
    }
  }
  return false;
}

std::vector<int> EdgeSet::indices() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int i) { out.push_back(i); });
  return out;
}

std::size_t EdgeSet::hash() const {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ull;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

void Gf2Basis::reduce(EdgeSet& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!v.empty() && v.test(pivots_[i])) v ^= rows_[i];
  }
}

bool Gf2Basis::insert(EdgeSet v) {
  reduce(v);
  if (v.empty()) return false;
  pivots_.push_back(v.lowest());
  rows_.push_back(std::move(v));
  return true;
}

bool Gf2Basis::contains(EdgeSet v) const {
  reduce(v);
  return v.empty();
}

int gf2_rank(const std::vector<EdgeSet>& vectors) {
  if (vectors.empty()) return 0;
  std::size_t universe = vectors.front().universe();
  Gf2Basis basis;
  for (const EdgeSet& v : vectors) {
    if (v.universe() != universe)
      fail(ErrorCode::DimensionMismatch, "mixed edge-set lengths in rank computation");
    basis.insert(v);
  }
  return static_cast<int>(basis.rank());
}

}  // namespace grin
