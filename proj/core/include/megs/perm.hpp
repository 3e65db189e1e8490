#pragma once

#include <cstdint>
#include <vector>

namespace megs {

/// Permutation of {0,...,n-1}, stored as its image vector.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);  // identity
  explicit Perm(std::vector<int32_t> images);

  static Perm identity(int degree) { return Perm(degree); }

  int degree() const { return static_cast<int>(images_.size()); }
  int32_t operator[](int i) const { return images_[i]; }

  bool is_identity() const;

  /// "this first, then g" (right action: i -> g[this[i]]).
  Perm then(const Perm& g) const;
  Perm inverse() const;

  /// Exact element order (lcm of cycle lengths). Throws on overflow.
  long long order() const;

  bool operator==(const Perm&) const = default;

 private:
  std::vector<int32_t> images_;
};

}  // namespace megs
