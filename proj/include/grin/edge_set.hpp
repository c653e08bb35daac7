#ifndef GRIN_EDGE_SET_HPP
#define GRIN_EDGE_SET_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "grin/errors.hpp"

namespace grin {

/// GF(2) cycle-space element: a fixed-length bit vector indexed by edge id.
/// The length is the edge count of the graph it belongs to; operations on
/// sets of different length raise DimensionMismatch.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (static_cast<std::size_t>(i) & 63)) & 1u;
  }
  void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (static_cast<std::size_t>(i) & 63); }
  void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (static_cast<std::size_t>(i) & 63)); }

  std::size_t count() const;
  bool empty() const;

  /// Index of the lowest set bit, or -1 when empty.
  int lowest() const;

  EdgeSet& operator^=(const EdgeSet& other);
  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) {
    a ^= b;
    return a;
  }

  bool operator==(const EdgeSet& other) const = default;

  /// Lexicographic order on the ascending sequence of set edge ids.
  bool lex_less(const EdgeSet& other) const;

  std::vector<int> indices() const;

  template <class F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        int bit = __builtin_ctzll(word);
        fn(static_cast<int>(w * 64 + static_cast<std::size_t>(bit)));
        word &= word - 1;
      }
    }
  }

  std::size_t hash() const;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const { return s.hash(); }
};

/// Incremental GF(2) row-reduction basis: independence sieve and span tests.
class Gf2Basis {
 public:
  /// Inserts `v` if independent of the rows so far; returns whether it was.
  bool insert(EdgeSet v);
  /// True iff `v` lies in the span of the inserted rows.
  bool contains(EdgeSet v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<EdgeSet> rows_;   // reduced rows with pairwise distinct pivots
  std::vector<int> pivots_;     // lowest set bit of each row
  void reduce(EdgeSet& v) const;
};

/// Rank over GF(2) of a list of equal-length vectors (0 for an empty list).
int gf2_rank(const std::vector<EdgeSet>& vectors);

}  // namespace grin

#endif
