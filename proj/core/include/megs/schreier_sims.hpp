#pragma once

#include <utility>
#include <vector>

#include "megs/bigint.hpp"
#include "megs/perm.hpp"

namespace megs {

/// Base-and-strong-generating-set structure built by deterministic
/// Schreier-Sims. Base points are chosen greedily as the first moved point
/// in rank order, so identical generator lists produce identical chains.
class StabilizerChain {
 public:
  static StabilizerChain build(const std::vector<Perm>& generators, int degree);

  /// Chain for the normal closure of `seeds` under the group generated by
  /// `group_gens` (standard conjugate-and-adjoin iteration).
  static StabilizerChain normal_closure(const std::vector<Perm>& group_gens,
                                        const std::vector<Perm>& seeds,
                                        int degree);

  /// Extend with extra generators (no-op for members); returns the chain of
  /// the enlarged group.
  StabilizerChain extended(const std::vector<Perm>& extra) const;

  int degree() const { return degree_; }
  int base_length() const { return static_cast<int>(levels_.size()); }
  std::vector<int> base() const;
  const std::vector<Perm>& generators() const { return input_gens_; }

  BigInt order() const;
  bool contains(const Perm& g) const;
  /// Sift g through the chain; members sift to the identity. Returns the
  /// residue and the level where sifting stopped.
  std::pair<Perm, int> sift(const Perm& g) const;

 private:
  struct Level {
    int beta = -1;
    std::vector<Perm> gens;
    std::vector<int32_t> pos;  // point -> orbit position, -1 outside
    std::vector<int> orbit;
    std::vector<Perm> transversal;      // transversal[pos] : beta -> orbit[pos]
    std::vector<Perm> inv_transversal;
    bool verified = false;  // Schreier generators known to sift to identity
  };

  std::pair<Perm, int> sift_from(const Perm& g, int from_level) const;
  void insert_generator(const Perm& g, int from_level);
  void recompute_orbit(int lvl);
  void complete_level(int lvl);

  int degree_ = 0;
  std::vector<Level> levels_;
  std::vector<Perm> input_gens_;
};

}  // namespace megs
