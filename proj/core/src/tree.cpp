#include "megs/tree.hpp"

#include <sstream>
#include <stdexcept>

namespace megs {

Vertex::Vertex(std::initializer_list<int> letters) {
  word.reserve(letters.size());
  for (int x : letters) word.push_back(static_cast<uint8_t>(x));
}

long level_offset(int p, int m) {
  long off = 0, sz = 1;
  for (int i = 0; i < m; ++i) {
    off += sz;
    sz *= p;
  }
  return off;
}

long level_size(int p, int m) {
  long sz = 1;
  for (int i = 0; i < m; ++i) sz *= p;
  return sz;
}

namespace {

void check_shape(int p, int depth) {
  if (p < 3 || p > 255) throw std::invalid_argument("Portrait: bad p");
  if (depth < 0) throw std::invalid_argument("Portrait: negative depth");
}

void check_vertex(const Vertex& v, int p) {
  for (uint8_t x : v.word)
    if (x < 1 || x > p) throw std::invalid_argument("Vertex: letter out of range");
}

}  // namespace

Portrait::Portrait(int p, int depth) : p_(p), depth_(depth) {
  check_shape(p, depth);
  labels_.assign(level_offset(p, depth), 0);
}

Portrait::Portrait(int p, int depth, std::vector<uint8_t> labels)
    : p_(p), depth_(depth), labels_(std::move(labels)) {
  check_shape(p, depth);
  if (static_cast<long>(labels_.size()) != level_offset(p, depth))
    throw std::invalid_argument("Portrait: wrong label count");
  for (uint8_t c : labels_)
    if (c >= p) throw std::invalid_argument("Portrait: label out of range");
}

bool Portrait::is_identity() const {
  for (uint8_t c : labels_)
    if (c != 0) return false;
  return true;
}

uint8_t Portrait::label(const Vertex& v) const {
  check_vertex(v, p_);
  if (v.level() >= depth_)
    throw std::invalid_argument("Portrait::label: vertex too deep");
  long r = 0;
  for (uint8_t x : v.word) r = r * p_ + (x - 1);
  return labels_[level_offset(p_, v.level()) + r];
}

Vertex Portrait::act(const Vertex& v) const {
  check_vertex(v, p_);
  if (v.level() > depth_)
    throw std::invalid_argument("Portrait::act: vertex deeper than portrait");
  Vertex out;
  out.word.reserve(v.word.size());
  long prefix = 0;  // rank of the original prefix at its level
  for (int i = 0; i < v.level(); ++i) {
    int x = v.word[i];
    int lab = labels_[level_offset(p_, i) + prefix];
    out.word.push_back(static_cast<uint8_t>((x - 1 + lab) % p_ + 1));
    prefix = prefix * p_ + (x - 1);
  }
  return out;
}

long Portrait::act_rank(int m, long r) const {
  if (m > depth_) throw std::invalid_argument("Portrait::act_rank: level too deep");
  // decode the digits of r most-significant first
  long pw = 1;
  for (int i = 0; i < m - 1; ++i) pw *= p_;
  long prefix = 0, img = 0;
  for (int i = 0; i < m; ++i) {
    int d = static_cast<int>(r / pw);
    r %= pw;
    int lab = labels_[level_offset(p_, i) + prefix];
    img = img * p_ + (d + lab) % p_;
    prefix = prefix * p_ + d;
    pw /= p_;
  }
  return img;
}

Portrait Portrait::then(const Portrait& g) const {
  if (g.p_ != p_ || g.depth_ != depth_)
    throw std::invalid_argument("Portrait::then: mismatched p or depth");
  std::vector<uint8_t> out(labels_.size());
  for (int m = 0; m < depth_; ++m) {
    long off = level_offset(p_, m);
    long n = level_size(p_, m);
    for (long r = 0; r < n; ++r)
      out[off + r] = static_cast<uint8_t>(
          (labels_[off + r] + g.labels_[off + act_rank(m, r)]) % p_);
  }
  return {p_, depth_, std::move(out)};
}

Portrait Portrait::inverse() const {
  std::vector<uint8_t> out(labels_.size());
  for (int m = 0; m < depth_; ++m) {
    long off = level_offset(p_, m);
    long n = level_size(p_, m);
    for (long r = 0; r < n; ++r)
      out[off + act_rank(m, r)] =
          static_cast<uint8_t>((p_ - labels_[off + r]) % p_);
  }
  return {p_, depth_, std::move(out)};
}

Portrait Portrait::pow(long e) const {
  Portrait base = e < 0 ? inverse() : *this;
  if (e < 0) e = -e;
  Portrait acc = identity(p_, depth_);
  while (e > 0) {
    if (e & 1) acc = acc.then(base);
    e >>= 1;
    if (e) base = base.then(base);
  }
  return acc;
}

Portrait Portrait::conjugated_by(const Portrait& g) const {
  return g.inverse().then(*this).then(g);
}

Portrait Portrait::section(const Vertex& v) const {
  check_vertex(v, p_);
  if (v.level() >= depth_ && !(v.level() == 0 && depth_ == 0))
    throw std::invalid_argument("Portrait::section: vertex too deep");
  int sub_depth = depth_ - v.level();
  long vr = 0;
  for (uint8_t x : v.word) vr = vr * p_ + (x - 1);
  std::vector<uint8_t> out(level_offset(p_, sub_depth));
  for (int m = 0; m < sub_depth; ++m) {
    long off = level_offset(p_, m);
    long n = level_size(p_, m);
    // vertex v.w at level level(v)+m has rank vr * p^m + rank(w)
    long big_off = level_offset(p_, v.level() + m);
    long base = vr * n;
    for (long r = 0; r < n; ++r) out[off + r] = labels_[big_off + base + r];
  }
  return {p_, sub_depth, std::move(out)};
}

Portrait Portrait::truncate(int m) const {
  if (m < 0 || m > depth_)
    throw std::invalid_argument("Portrait::truncate: level out of range");
  std::vector<uint8_t> out(labels_.begin(), labels_.begin() + level_offset(p_, m));
  return {p_, m, std::move(out)};
}

int Portrait::stabilizer_depth() const {
  for (int m = 0; m < depth_; ++m) {
    long off = level_offset(p_, m);
    long n = level_size(p_, m);
    for (long r = 0; r < n; ++r)
      if (labels_[off + r] != 0) return m;
  }
  return depth_;
}

std::vector<long> Portrait::fixed_counts() const {
  std::vector<long> counts(depth_, 0);
  // a level-m vertex is fixed iff every proper prefix is fixed and the label
  // at its parent does not move its last letter; walk levels incrementally
  std::vector<long> fixed_ranks = {0};  // root
  for (int m = 1; m <= depth_; ++m) {
    long off = level_offset(p_, m - 1);
    std::vector<long> next;
    for (long pr : fixed_ranks) {
      if (labels_[off + pr] == 0)
        for (int d = 0; d < p_; ++d) next.push_back(pr * p_ + d);
    }
    counts[m - 1] = static_cast<long>(next.size());
    fixed_ranks = std::move(next);
  }
  return counts;
}

Perm Portrait::leaf_perm() const {
  long n = level_size(p_, depth_);
  std::vector<int32_t> images(n);
  for (long r = 0; r < n; ++r) images[r] = static_cast<int32_t>(act_rank(depth_, r));
  return Perm(std::move(images));
}

long long Portrait::order() const {
  long long ord = 1;
  Portrait x = *this;
  while (!x.is_identity()) {
    x = x.pow(p_);
    ord *= p_;
  }
  return ord;
}

std::string Portrait::to_text() const {
  std::ostringstream os;
  os << p_ << ' ' << depth_;
  for (uint8_t c : labels_) os << ' ' << static_cast<int>(c);
  return os.str();
}

Portrait Portrait::from_text(const std::string& text) {
  std::istringstream is(text);
  int p = 0, k = -1;
  if (!(is >> p >> k)) throw std::invalid_argument("Portrait::from_text: bad header");
  check_shape(p, k);
  std::vector<uint8_t> labels(level_offset(p, k));
  for (auto& c : labels) {
    int v;
    if (!(is >> v) || v < 0 || v >= p)
      throw std::invalid_argument("Portrait::from_text: bad label");
    c = static_cast<uint8_t>(v);
  }
  return {p, k, std::move(labels)};
}

}  // namespace megs
