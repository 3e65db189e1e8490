#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "megs/perm.hpp"

namespace megs {

/// Vertex of the truncated p-adic tree: a word over {1,...,p}.
/// The empty word is the root; the level is the word length.
struct Vertex {
  std::vector<uint8_t> word;

  Vertex() = default;
  explicit Vertex(std::vector<uint8_t> w) : word(std::move(w)) {}
  Vertex(std::initializer_list<int> letters);

  int level() const { return static_cast<int>(word.size()); }
  bool operator==(const Vertex&) const = default;
};

/// Index of the first level-m vertex in breadth-first order: (p^m - 1)/(p-1).
long level_offset(int p, int m);
/// Number of level-m vertices: p^m.
long level_size(int p, int m);

/// Automorphism of the depth-k truncated p-adic tree whose label at every
/// vertex is a power of the standard cycle sigma: x -> x+1 on {1,...,p},
/// wrapping p -> 1. Labels (sigma exponents in 0..p-1) are stored for the
/// vertices of levels 0..k-1 in breadth-first lexicographic order.
class Portrait {
 public:
  Portrait(int p, int depth);  // identity
  Portrait(int p, int depth, std::vector<uint8_t> labels);

  static Portrait identity(int p, int depth) { return {p, depth}; }

  int p() const { return p_; }
  int depth() const { return depth_; }
  bool is_identity() const;

  /// Number of labelled vertices: (p^depth - 1)/(p - 1).
  int label_count() const { return static_cast<int>(labels_.size()); }
  std::span<const uint8_t> labels() const { return labels_; }

  uint8_t label(const Vertex& v) const;

  /// Image of v under this automorphism; level(v) <= depth required.
  Vertex act(const Vertex& v) const;
  /// Image of the level-m vertex of lexicographic rank r (0-based).
  long act_rank(int m, long r) const;

  /// "this first, then g": u^(f.then(g)) = (u^f)^g.
  Portrait then(const Portrait& g) const;
  Portrait inverse() const;
  Portrait pow(long e) const;
  /// Conjugate g^{-1} * this * g.
  Portrait conjugated_by(const Portrait& g) const;

  /// Restriction to the subtree rooted at v, as a portrait of depth
  /// depth() - level(v); requires level(v) < depth().
  Portrait section(const Vertex& v) const;
  /// Drop labels at levels >= m (the quotient map onto depth m).
  Portrait truncate(int m) const;

  /// Largest m <= depth such that all labels at levels < m vanish, i.e.
  /// this stabilises every vertex up to level m.
  int stabilizer_depth() const;
  /// Entry m-1 = number of level-m vertices fixed, for m = 1..depth.
  std::vector<long> fixed_counts() const;
  /// Permutation induced on the p^depth leaves in lexicographic rank order.
  Perm leaf_perm() const;

  /// Exact order (this is a p-element; computed via repeated p-th powers).
  long long order() const;

  /// Canonical text form: "p k" header, then the labels in breadth-first
  /// lexicographic order, space-separated.
  std::string to_text() const;
  static Portrait from_text(const std::string& text);

  bool operator==(const Portrait&) const = default;

 private:
  int p_ = 3;
  int depth_ = 0;
  std::vector<uint8_t> labels_;
};

}  // namespace megs
