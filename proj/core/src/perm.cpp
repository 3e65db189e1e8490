#include "megs/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace megs {

Perm::Perm(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int32_t v : images_) {
    if (v < 0 || v >= static_cast<int32_t>(images_.size()) || seen[v])
      throw std::invalid_argument("Perm: image vector is not a permutation");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::then(const Perm& g) const {
  if (g.degree() != degree())
    throw std::invalid_argument("Perm: degree mismatch");
  std::vector<int32_t> out(images_.size());
  for (int i = 0; i < degree(); ++i) out[i] = g.images_[images_[i]];
  Perm r;
  r.images_ = std::move(out);
  return r;
}

Perm Perm::inverse() const {
  std::vector<int32_t> out(images_.size());
  for (int i = 0; i < degree(); ++i) out[images_[i]] = i;
  Perm r;
  r.images_ = std::move(out);
  return r;
}

long long Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  long long ord = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    long long g = std::gcd(ord, len);
    long long m;
    if (__builtin_mul_overflow(ord / g, len, &m))
      throw std::overflow_error("Perm::order: overflow");
    ord = m;
  }
  return ord;
}

}  // namespace megs
