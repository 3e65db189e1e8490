#pragma once

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "megs/group_context.hpp"

namespace megs::testing {

inline DefiningDatum gupta_sidki() {
  DefiningDatum datum;
  datum.p = 3;
  datum.families[1] = {{1, 2}};
  return datum;
}

inline DefiningDatum p3_constant() {
  DefiningDatum datum;
  datum.p = 3;
  datum.families[1] = {{1, 1}};
  datum.families[2] = {{1, 1}};
  return datum;
}

inline DefiningDatum p5_nonperiodic_multi() {
  DefiningDatum datum;
  datum.p = 5;
  datum.families[1] = {{1, 0, 0, 0}, {0, 1, 0, 0}};
  return datum;
}

inline DefiningDatum p5_periodic_multi() {
  DefiningDatum datum;
  datum.p = 5;
  datum.families[1] = {{1, 4, 0, 0}, {0, 1, 4, 0}};
  return datum;
}

inline DefiningDatum p5_symmetric_pair() {
  DefiningDatum datum;
  datum.p = 5;
  datum.families[1] = {{1, 4, 4, 1}};
  datum.families[2] = {{1, 4, 4, 1}};
  return datum;
}

inline std::string perm_key(const Perm& g) {
  std::string key;
  key.reserve(g.degree() * 2);
  for (int i = 0; i < g.degree(); ++i) {
    key.push_back(static_cast<char>(g[i] & 0xff));
    key.push_back(static_cast<char>((g[i] >> 8) & 0xff));
  }
  return key;
}

/// Brute-force subgroup closure by breadth-first products. Returns all
/// elements; throws if the limit is exceeded.
inline std::vector<Perm> closure_oracle(const std::vector<Perm>& gens, int degree,
                                        size_t limit = 200000) {
  std::vector<Perm> elems{Perm::identity(degree)};
  std::set<std::string> seen{perm_key(elems[0])};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const Perm& g : gens) {
      Perm next = elems[head].then(g);
      if (seen.insert(perm_key(next)).second) {
        if (elems.size() >= limit) throw std::runtime_error("closure limit");
        elems.push_back(std::move(next));
      }
    }
  }
  return elems;
}

/// Normal closure oracle: close the seeds under products with themselves and
/// conjugation by the group generators.
inline std::vector<Perm> normal_closure_oracle(const std::vector<Perm>& group_gens,
                                               const std::vector<Perm>& seeds,
                                               int degree, size_t limit = 200000) {
  std::vector<Perm> elems{Perm::identity(degree)};
  std::set<std::string> seen{perm_key(elems[0])};
  auto push = [&](Perm g) {
    if (seen.insert(perm_key(g)).second) {
      if (elems.size() >= limit) throw std::runtime_error("closure limit");
      elems.push_back(std::move(g));
    }
  };
  for (const Perm& s : seeds) push(s);
  for (size_t head = 0; head < elems.size(); ++head) {
    for (size_t i = 0; i < elems.size() && i <= head; ++i) {
      push(elems[head].then(elems[i]));
      push(elems[i].then(elems[head]));
    }
    for (const Perm& g : group_gens)
      push(g.inverse().then(elems[head]).then(g));
  }
  return elems;
}

/// Conjugacy class of z by brute-force closure under generator conjugation.
inline size_t class_size_oracle(const std::vector<Perm>& gens, const Perm& z) {
  std::vector<Perm> orbit{z};
  std::set<std::string> seen{perm_key(z)};
  for (size_t head = 0; head < orbit.size(); ++head)
    for (const Perm& g : gens) {
      Perm c = g.inverse().then(orbit[head]).then(g);
      if (seen.insert(perm_key(c)).second) orbit.push_back(std::move(c));
    }
  return orbit.size();
}

/// Random portrait over the full iterated wreath group (arbitrary labels).
inline Portrait random_portrait(std::mt19937& rng, int p, int depth) {
  std::vector<uint8_t> labels(level_offset(p, depth), 0);
  std::uniform_int_distribution<int> dist(0, p - 1);
  for (auto& l : labels) l = static_cast<uint8_t>(dist(rng));
  return {p, depth, std::move(labels)};
}

/// Random word in a context's generators of the given length.
inline Word random_word(std::mt19937& rng, const GroupContext& ctx, int length) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(ctx.symbols().size()) - 1);
  std::uniform_int_distribution<int> exp(1, ctx.p() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  Word w;
  for (int i = 0; i < length; ++i) {
    int e = exp(rng);
    w.factors.emplace_back(ctx.symbols()[pick(rng)], sign(rng) ? e : -e);
  }
  return w;
}

}  // namespace megs::testing
