#include "megs/schreier_sims.hpp"

#include <deque>
#include <stdexcept>

namespace megs {

namespace {

int first_moved_point(const Perm& g) {
  for (int i = 0; i < g.degree(); ++i)
    if (g[i] != i) return i;
  return -1;
}

}  // namespace

std::vector<int> StabilizerChain::base() const {
  std::vector<int> b;
  b.reserve(levels_.size());
  for (const auto& lvl : levels_) b.push_back(lvl.beta);
  return b;
}

BigInt StabilizerChain::order() const {
  BigInt o = 1;
  for (const auto& lvl : levels_) o *= static_cast<long>(lvl.orbit.size());
  return o;
}

std::pair<Perm, int> StabilizerChain::sift(const Perm& g) const {
  if (g.degree() != degree_)
    throw std::invalid_argument("StabilizerChain::sift: degree mismatch");
  return sift_from(g, 0);
}

std::pair<Perm, int> StabilizerChain::sift_from(const Perm& g, int from_level) const {
  Perm r = g;
  for (int l = from_level; l < static_cast<int>(levels_.size()); ++l) {
    const Level& lvl = levels_[l];
    int pt = r[lvl.beta];
    if (pt == lvl.beta) continue;
    int32_t pos = lvl.pos[pt];
    if (pos < 0) return {std::move(r), l};
    r = r.then(lvl.inv_transversal[pos]);
  }
  return {std::move(r), static_cast<int>(levels_.size())};
}

bool StabilizerChain::contains(const Perm& g) const {
  auto [residue, lvl] = sift(g);
  return lvl == static_cast<int>(levels_.size()) && residue.is_identity();
}

void StabilizerChain::recompute_orbit(int l) {
  Level& lvl = levels_[l];
  lvl.pos.assign(degree_, -1);
  lvl.orbit.clear();
  lvl.transversal.clear();
  lvl.inv_transversal.clear();
  lvl.orbit.push_back(lvl.beta);
  lvl.pos[lvl.beta] = 0;
  lvl.transversal.push_back(Perm::identity(degree_));
  lvl.inv_transversal.push_back(Perm::identity(degree_));
  for (size_t head = 0; head < lvl.orbit.size(); ++head) {
    int pt = lvl.orbit[head];
    for (const Perm& s : lvl.gens) {
      int q = s[pt];
      if (lvl.pos[q] < 0) {
        lvl.pos[q] = static_cast<int32_t>(lvl.orbit.size());
        lvl.orbit.push_back(q);
        lvl.transversal.push_back(lvl.transversal[head].then(s));
        lvl.inv_transversal.push_back(lvl.transversal.back().inverse());
      }
    }
  }
}

void StabilizerChain::insert_generator(const Perm& g, int from_level) {
  int l = from_level;
  while (l < static_cast<int>(levels_.size()) && g[levels_[l].beta] == levels_[l].beta)
    ++l;
  if (l == static_cast<int>(levels_.size())) {
    Level fresh;
    fresh.beta = first_moved_point(g);
    levels_.push_back(std::move(fresh));
  }
  for (int i = from_level; i <= l; ++i) {
    levels_[i].gens.push_back(g);
    levels_[i].verified = false;
  }
  for (int i = from_level; i <= l; ++i) recompute_orbit(i);
}

void StabilizerChain::complete_level(int l) {
  if (levels_[l].verified) return;
  recompute_orbit(l);
  // careful: the recursion below may reallocate levels_, so never hold a
  // reference to levels_[l] across it
  for (size_t pos = 0; pos < levels_[l].orbit.size(); ++pos) {
    for (size_t gi = 0; gi < levels_[l].gens.size(); ++gi) {
      Perm sg;  // Schreier generator u_pt * s * u_{pt^s}^{-1}
      {
        const Level& lvl = levels_[l];
        const Perm& s = lvl.gens[gi];
        int q = s[lvl.orbit[pos]];
        sg = lvl.transversal[pos].then(s).then(lvl.inv_transversal[lvl.pos[q]]);
      }
      if (sg.is_identity()) continue;
      auto [residue, stop] = sift_from(sg, l + 1);
      if (residue.is_identity() && stop == static_cast<int>(levels_.size()))
        continue;
      insert_generator(residue, l + 1);
      // deeper levels changed; re-verify them before moving on
      for (int i = static_cast<int>(levels_.size()) - 1; i > l; --i)
        complete_level(i);
    }
  }
  levels_[l].verified = true;
}

StabilizerChain StabilizerChain::build(const std::vector<Perm>& generators,
                                       int degree) {
  StabilizerChain chain;
  chain.degree_ = degree;
  for (const Perm& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("StabilizerChain::build: degree mismatch");
    if (g.is_identity()) continue;
    chain.input_gens_.push_back(g);
    chain.insert_generator(g, 0);
  }
  for (int i = static_cast<int>(chain.levels_.size()) - 1; i >= 0; --i)
    chain.complete_level(i);
  return chain;
}

StabilizerChain StabilizerChain::extended(const std::vector<Perm>& extra) const {
  StabilizerChain chain = *this;
  bool changed = false;
  for (const Perm& g : extra) {
    if (g.degree() != degree_)
      throw std::invalid_argument("StabilizerChain::extended: degree mismatch");
    if (chain.contains(g)) continue;
    chain.input_gens_.push_back(g);
    chain.insert_generator(g, 0);
    for (int i = static_cast<int>(chain.levels_.size()) - 1; i >= 0; --i)
      chain.complete_level(i);
    changed = true;
  }
  (void)changed;
  return chain;
}

StabilizerChain StabilizerChain::normal_closure(
    const std::vector<Perm>& group_gens, const std::vector<Perm>& seeds,
    int degree) {
  std::vector<Perm> closure_gens;
  for (const Perm& s : seeds)
    if (!s.is_identity()) closure_gens.push_back(s);
  StabilizerChain chain = build(closure_gens, degree);
  std::deque<Perm> queue(closure_gens.begin(), closure_gens.end());
  while (!queue.empty()) {
    Perm s = std::move(queue.front());
    queue.pop_front();
    for (const Perm& g : group_gens) {
      Perm c = g.inverse().then(s).then(g);
      if (!chain.contains(c)) {
        chain = chain.extended({c});
        queue.push_back(std::move(c));
      }
    }
  }
  return chain;
}

}  // namespace megs
