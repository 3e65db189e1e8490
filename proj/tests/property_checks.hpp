#pragma once

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "megs/ramification.hpp"

namespace megs::testing {

struct PropertyResult {
  int cases = 0;
  int failures = 0;
  bool pass() const { return cases > 0 && failures == 0; }
};

/// Portrait algebra laws on random labelled automorphisms (the full iterated
/// wreath group): associativity, inverses, powers, conjugation.
inline PropertyResult prop_portrait_algebra(int cases, unsigned seed) {
  std::mt19937 rng(seed);
  PropertyResult res;
  for (int c = 0; c < cases; ++c) {
    int p = c % 2 ? 3 : 5;
    int depth = c % 3 + 1;
    Portrait f = random_portrait(rng, p, depth);
    Portrait g = random_portrait(rng, p, depth);
    Portrait h = random_portrait(rng, p, depth);
    bool ok = f.then(g).then(h) == f.then(g.then(h));
    ok = ok && f.then(f.inverse()).is_identity();
    ok = ok && f.inverse().inverse() == f;
    ok = ok && f.pow(3) == f.then(f).then(f);
    ok = ok && f.then(Portrait::identity(p, depth)) == f;
    ok = ok && f.conjugated_by(g) == g.inverse().then(f).then(g);
    ok = ok && (f.then(g)).inverse() == g.inverse().then(f.inverse());
    ++res.cases;
    if (!ok) ++res.failures;
  }
  return res;
}

/// Section law: section_v(f g) = section_v(f) section_{v^f}(g), and action
/// compatibility on subtrees.
inline PropertyResult prop_section_law(int cases, unsigned seed) {
  std::mt19937 rng(seed);
  PropertyResult res;
  for (int c = 0; c < cases; ++c) {
    int p = c % 2 ? 3 : 5;
    int depth = c % 2 + 2;
    Portrait f = random_portrait(rng, p, depth);
    Portrait g = random_portrait(rng, p, depth);
    std::uniform_int_distribution<int> letter(1, p);
    Vertex v{letter(rng)};
    bool ok = f.then(g).section(v) == f.section(v).then(g.section(f.act(v)));
    ok = ok && f.inverse().section(f.act(v)) == f.section(v).inverse();
    ++res.cases;
    if (!ok) ++res.failures;
  }
  return res;
}

/// The leaf action is a faithful homomorphic image of the portrait group.
inline PropertyResult prop_leaf_homomorphism(int cases, unsigned seed) {
  std::mt19937 rng(seed);
  PropertyResult res;
  for (int c = 0; c < cases; ++c) {
    int p = c % 2 ? 3 : 5;
    int depth = c % 2 + 1;
    Portrait f = random_portrait(rng, p, depth);
    Portrait g = random_portrait(rng, p, depth);
    bool ok = f.then(g).leaf_perm() == f.leaf_perm().then(g.leaf_perm());
    ok = ok && f.inverse().leaf_perm() == f.leaf_perm().inverse();
    ok = ok && (f.leaf_perm().is_identity() == f.is_identity());
    ++res.cases;
    if (!ok) ++res.failures;
  }
  return res;
}

/// Conjugation invariance of stabilizer depth and fixed counts.
inline PropertyResult prop_conjugation_invariants(int cases, unsigned seed) {
  std::mt19937 rng(seed);
  PropertyResult res;
  for (int c = 0; c < cases; ++c) {
    int p = c % 2 ? 3 : 5;
    int depth = c % 2 + 2;
    Portrait z = random_portrait(rng, p, depth);
    Portrait g = random_portrait(rng, p, depth);
    Portrait zg = z.conjugated_by(g);
    bool ok = zg.stabilizer_depth() == z.stabilizer_depth();
    ok = ok && zg.fixed_counts() == z.fixed_counts();
    ok = ok && zg.order() == z.order();
    ++res.cases;
    if (!ok) ++res.failures;
  }
  return res;
}

/// Conjugation fixes abelianization images (inside a group context).
inline PropertyResult prop_abelianization_invariance(int cases, unsigned seed) {
  std::mt19937 rng(seed);
  PropertyResult res;
  GroupContext ctx(p3_constant(), 3);
  ctx.precompute();
  for (int c = 0; c < cases; ++c) {
    Portrait z = ctx.eval(random_word(rng, ctx, 4));
    Portrait g = ctx.eval(random_word(rng, ctx, 4));
    bool ok = ctx.ab_image(z.conjugated_by(g)) == ctx.ab_image(z);
    // and the image is a homomorphic image: image of z*h = image sum mod p
    Portrait h = ctx.eval(random_word(rng, ctx, 3));
    auto vz = ctx.ab_image(z), vh = ctx.ab_image(h), vzh = ctx.ab_image(z.then(h));
    for (size_t i = 0; i < vz.size(); ++i)
      ok = ok && (vz[i] + vh[i]) % 3 == vzh[i];
    ++res.cases;
    if (!ok) ++res.failures;
  }
  return res;
}

/// Conjugation preserves the rotation class of level-1 section images.
inline PropertyResult prop_rotation_class_invariance(int cases, unsigned seed) {
  std::mt19937 rng(seed);
  PropertyResult res;
  GroupContext ctx(p3_constant(), 3);
  GroupContext sub(p3_constant(), 2);
  ctx.precompute();
  sub.precompute();
  const int p = 3;
  auto profile = [&](const Portrait& z) {
    std::vector<std::vector<int>> seq;
    for (int i = 1; i <= p; ++i) seq.push_back(sub.ab_image(z.section(Vertex{i})));
    std::vector<std::vector<int>> best = seq;
    for (int s = 1; s < p; ++s) {
      std::rotate(seq.begin(), seq.begin() + 1, seq.end());
      if (seq < best) best = seq;
    }
    return best;
  };
  for (int c = 0; c < cases; ++c) {
    Portrait z = ctx.eval(random_word(rng, ctx, 4));
    if (z.stabilizer_depth() < 1) z = z.pow(p);  // force into St(1)
    if (z.stabilizer_depth() < 1) continue;
    Portrait g = ctx.eval(random_word(rng, ctx, 4));
    bool ok = profile(z.conjugated_by(g)) == profile(z);
    ++res.cases;
    if (!ok) ++res.failures;
  }
  return res;
}

}  // namespace megs::testing
