#include "megs/group_context.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace megs {

std::optional<size_t> ConjOrbit::find(const std::string& key) const {
  auto it = std::find(elements.begin(), elements.end(), key);
  if (it == elements.end()) return std::nullopt;
  return static_cast<size_t>(it - elements.begin());
}

std::vector<int> ConjOrbit::conjugator_path(size_t idx) const {
  std::vector<int> path;
  for (int i = static_cast<int>(idx); parent[i] >= 0; i = parent[i])
    path.push_back(via_gen[i]);
  std::reverse(path.begin(), path.end());
  return path;
}

GroupContext::GroupContext(DefiningDatum datum, int depth)
    : datum_(std::move(datum)), depth_(depth) {
  require_valid(datum_);
  if (depth_ < 1) throw std::invalid_argument("GroupContext: depth must be >= 1");
  degree_ = 1;
  for (int i = 0; i < depth_; ++i) degree_ *= datum_.p;
  symbols_ = standard_symbols(datum_);
  for (const auto& sym : symbols_) {
    portraits_.push_back(generator_portrait(datum_, sym, depth_));
    perms_.push_back(portraits_.back().leaf_perm());
  }
  chain_ = StabilizerChain::build(perms_, degree_);
}

const StabilizerChain& GroupContext::derived_chain() const {
  std::scoped_lock lock(lazy_mutex_);
  if (!derived_) {
    std::vector<Perm> seeds;
    for (size_t i = 0; i < perms_.size(); ++i)
      for (size_t j = i + 1; j < perms_.size(); ++j) {
        // commutator [g_i, g_j] = g_i^{-1} g_j^{-1} g_i g_j
        Perm c = perms_[i].inverse().then(perms_[j].inverse()).then(perms_[i]).then(perms_[j]);
        if (!c.is_identity()) seeds.push_back(std::move(c));
      }
    derived_ = StabilizerChain::normal_closure(perms_, seeds, degree_);
  }
  return *derived_;
}

const StabilizerChain& GroupContext::frattini_chain() const {
  const StabilizerChain& derived = derived_chain();
  std::scoped_lock lock(lazy_mutex_);
  if (!frattini_) {
    std::vector<Perm> powers;
    for (const Perm& g : perms_) {
      Perm gp = Perm::identity(degree_);
      for (int i = 0; i < datum_.p; ++i) gp = gp.then(g);
      if (!gp.is_identity()) powers.push_back(std::move(gp));
    }
    // <G', generator p-th powers> is the Frattini subgroup: the quotient by
    // it is the largest elementary abelian quotient.
    frattini_ = derived.extended(powers);
  }
  return *frattini_;
}

int GroupContext::frattini_rank() const {
  BigInt index = order() / frattini_chain().order();
  int rank = 0;
  while (index > 1) {
    index /= datum_.p;
    ++rank;
  }
  return rank;
}

const std::vector<std::pair<std::vector<int>, Perm>>& GroupContext::ab_candidates()
    const {
  derived_chain();
  std::scoped_lock lock(lazy_mutex_);
  if (!ab_candidates_) {
    const int p = datum_.p;
    const int m = static_cast<int>(perms_.size());
    // generator powers g^0..g^{p-1}
    std::vector<std::vector<Perm>> pows(m);
    for (int i = 0; i < m; ++i) {
      pows[i].push_back(Perm::identity(degree_));
      for (int e = 1; e < p; ++e) pows[i].push_back(pows[i].back().then(perms_[i]));
    }
    std::vector<std::pair<std::vector<int>, Perm>> cands;
    std::vector<int> exps(m, 0);
    for (;;) {
      Perm prod = pows[0][exps[0]];
      for (int i = 1; i < m; ++i) prod = prod.then(pows[i][exps[i]]);
      cands.emplace_back(exps, std::move(prod));
      int i = m - 1;
      while (i >= 0 && exps[i] == p - 1) exps[i--] = 0;
      if (i < 0) break;
      ++exps[i];
    }
    ab_candidates_ = std::move(cands);
  }
  return *ab_candidates_;
}

std::vector<int> GroupContext::ab_image(const Perm& x) const {
  const StabilizerChain& derived = derived_chain();
  for (const auto& [exps, cand] : ab_candidates())
    if (derived.contains(x.then(cand.inverse()))) return exps;
  throw std::logic_error("ab_image: element not in G_k");
}

std::vector<int> GroupContext::ab_image(const Portrait& x) const {
  return ab_image(x.leaf_perm());
}

bool GroupContext::coset_equal(const Portrait& x, const Portrait& y,
                               const StabilizerChain& subgroup) const {
  if (subgroup.degree() != degree_)
    throw std::invalid_argument("coset_equal: degree mismatch");
  return subgroup.contains(x.leaf_perm().then(y.leaf_perm().inverse()));
}

std::string GroupContext::portrait_key(const Portrait& f) {
  auto labels = f.labels();
  return {reinterpret_cast<const char*>(labels.data()), labels.size()};
}

Portrait GroupContext::orbit_element(const ConjOrbit& orbit, size_t idx) const {
  const std::string& key = orbit.elements[idx];
  std::vector<uint8_t> labels(key.begin(), key.end());
  return {datum_.p, depth_, std::move(labels)};
}

ConjOrbit GroupContext::conj_orbit_bfs(const Portrait& z, size_t cap) const {
  if (cap < 1) throw std::invalid_argument("conj_orbit_bfs: cap must be >= 1");
  ConjOrbit orbit;
  std::unordered_map<std::string, size_t> index;
  orbit.elements.push_back(portrait_key(z));
  orbit.parent.push_back(-1);
  orbit.via_gen.push_back(-1);
  index.emplace(orbit.elements[0], 0);
  for (size_t head = 0; head < orbit.elements.size(); ++head) {
    Portrait current = orbit_element(orbit, head);
    for (size_t gi = 0; gi < portraits_.size(); ++gi) {
      Portrait img = current.conjugated_by(portraits_[gi]);
      std::string key = portrait_key(img);
      if (index.contains(key)) continue;
      if (orbit.elements.size() >= cap) {
        orbit.complete = false;
        return orbit;
      }
      index.emplace(key, orbit.elements.size());
      orbit.elements.push_back(std::move(key));
      orbit.parent.push_back(static_cast<int>(head));
      orbit.via_gen.push_back(static_cast<int>(gi));
    }
  }
  orbit.complete = true;
  return orbit;
}

void GroupContext::precompute() const {
  frattini_chain();
  ab_candidates();
}

}  // namespace megs
