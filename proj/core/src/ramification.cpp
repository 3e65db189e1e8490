#include "megs/ramification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace megs {

namespace {

unsigned bit(Rung rung) { return 1u << static_cast<unsigned>(rung); }

Word wpow(const Word& w, int e) {
  if (e == 0) return {};
  const Word base = e > 0 ? w : w.inverse();
  Word out;
  for (int i = std::abs(e); i > 0; --i) out = out.then(base);
  return out.normalized();
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& w : parts) out = out.then(w);
  return out.normalized();
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

int inverse_mod(int x, int p) {
  x = ((x % p) + p) % p;
  for (int t = 1; t < p; ++t)
    if (x * t % p == 1) return t;
  throw std::logic_error("inverse_mod: not invertible");
}

int rank_mod_p(std::vector<std::vector<int>> rows, int p) {
  int rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (size_t i = rank; i < rows.size(); ++i)
      if (((rows[i][c] % p) + p) % p != 0) { pivot = static_cast<int>(i); break; }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    int inv = inverse_mod(rows[rank][c], p);
    for (auto& v : rows[rank]) v = ((v * inv) % p + p) % p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == rank) continue;
      int f = ((rows[i][c] % p) + p) % p;
      if (f == 0) continue;
      for (size_t cc = 0; cc < cols; ++cc)
        rows[i][cc] = ((rows[i][cc] - f * rows[rank][cc]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Canonical (lexicographically minimal) rotation of the sequence of level-1
/// section images in the abelianization of the depth-(k-1) quotient.
std::vector<std::vector<int>> section_profile(const GroupContext& sub,
                                              const Portrait& z) {
  const int p = z.p();
  std::vector<std::vector<int>> seq;
  seq.reserve(p);
  for (int c = 1; c <= p; ++c)
    seq.push_back(sub.ab_image(z.section(Vertex{c})));
  std::vector<std::vector<int>> best = seq;
  for (int s = 1; s < p; ++s) {
    std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    if (seq < best) best = seq;
  }
  return best;
}

}  // namespace

std::string to_string(Rung rung) {
  switch (rung) {
    case Rung::Order: return "ORDER";
    case Rung::Depth: return "DEPTH";
    case Rung::Fixpoints: return "FIXPOINTS";
    case Rung::Abelianization: return "ABELIANIZATION";
    case Rung::SectionProfile: return "SECTION-PROFILE";
    case Rung::OrbitExact: return "ORBIT-EXACT";
  }
  return "?";
}

std::string to_string(PairVerdict verdict) {
  switch (verdict) {
    case PairVerdict::Disjoint: return "DISJOINT";
    case PairVerdict::Intersect: return "INTERSECT";
    case PairVerdict::Undecided: return "UNDECIDED";
  }
  return "?";
}

std::string to_string(DisjointnessReport::Verdict verdict) {
  switch (verdict) {
    case DisjointnessReport::Verdict::Verified: return "VERIFIED";
    case DisjointnessReport::Verdict::Refuted: return "REFUTED";
    case DisjointnessReport::Verdict::Undecided: return "UNDECIDED";
  }
  return "?";
}

SphericalSystem make_spherical(const GroupContext& ctx, std::vector<Word> words) {
  SphericalSystem T;
  T.words = std::move(words);
  for (const Word& w : T.words) T.product_word = T.product_word.then(w);
  T.product_word = T.product_word.normalized();
  for (const Word& w : T.words) T.elements.push_back(ctx.eval(w));
  T.product = ctx.eval(T.product_word);
  return T;
}

std::vector<std::string> validate_spherical(const SphericalSystem& T,
                                            const GroupContext& ctx) {
  std::vector<std::string> errors;
  if (T.words.empty()) return {"empty tuple"};
  std::vector<Perm> perms;
  for (const Portrait& f : T.elements) perms.push_back(f.leaf_perm());
  if (StabilizerChain::build(perms, ctx.degree()).order() != ctx.order())
    errors.push_back("tuple does not generate the quotient");
  Portrait composed = Portrait::identity(ctx.p(), ctx.depth());
  for (const Portrait& f : T.elements) composed = composed.then(f);
  if (!(composed == T.product))
    errors.push_back("stored product differs from the composed product");
  for (size_t i = 0; i < T.size(); ++i)
    if (T.element(i).is_identity())
      errors.push_back("trivial entry: " + T.word(i).to_string());
  return errors;
}

Portrait socle(const Portrait& x) {
  if (x.is_identity()) throw std::invalid_argument("socle: identity input");
  long long o = x.order();
  return x.pow(o / x.p());
}

PairOutcome certify_pair(const GroupContext& ctx, const GroupContext& sub,
                         const Portrait& x, const Portrait& y,
                         const CertifyOptions& opts) {
  const int p = ctx.p();
  PairOutcome out;
  Portrait zx = socle(x);
  Portrait zy = socle(y);

  // C0 ORDER: both socles have order p, so this rung is a pre-filter only
  // and never concludes by itself.

  // C1 DEPTH / FIXPOINTS. Both are conjugation invariants and are shared by
  // all powers z^u with p∤u, so comparing the socles directly suffices.
  if (opts.rung_mask & bit(Rung::Depth)) {
    int dx = zx.stabilizer_depth();
    int dy = zy.stabilizer_depth();
    if (dx != dy) {
      out.verdict = PairVerdict::Disjoint;
      out.rung = Rung::Depth;
      out.details = "stabilizer depth " + std::to_string(dx) + " vs " +
                    std::to_string(dy);
      return out;
    }
  }
  if (opts.rung_mask & bit(Rung::Fixpoints)) {
    auto fx = zx.fixed_counts();
    auto fy = zy.fixed_counts();
    if (fx != fy) {
      out.verdict = PairVerdict::Disjoint;
      out.rung = Rung::Fixpoints;
      out.details = "fixed counts " + join_longs(fx) + " vs " + join_longs(fy);
      return out;
    }
  }

  // C2 ABELIANIZATION: images in G_k/G_k' are conjugation invariants; the
  // socle powers z_x^u have image u * image(z_x).
  if (opts.rung_mask & bit(Rung::Abelianization)) {
    auto vx = ctx.ab_image(zx);
    auto vy = ctx.ab_image(zy);
    bool match = false;
    for (int u = 1; u < p && !match; ++u) {
      bool eq = true;
      for (size_t i = 0; i < vx.size(); ++i)
        if (vx[i] * u % p != vy[i]) { eq = false; break; }
      match = eq;
    }
    if (!match) {
      out.verdict = PairVerdict::Disjoint;
      out.rung = Rung::Abelianization;
      out.details = "abelianization image " + join_ints(vx) + " vs " + join_ints(vy);
      return out;
    }
  }

  // C3 SECTION-PROFILE: for socles fixing level 1, the rotation class of the
  // p-tuple of section images in the depth-(k-1) abelianization is a
  // conjugation invariant (conjugation by a rotates, by level-1 stabilizers
  // fixes positions and images).
  if ((opts.rung_mask & bit(Rung::SectionProfile)) &&
      zx.stabilizer_depth() >= 1 && zy.stabilizer_depth() >= 1) {
    auto prof_y = section_profile(sub, zy);
    bool match = false;
    for (int u = 1; u < p && !match; ++u)
      match = section_profile(sub, zx.pow(u)) == prof_y;
    if (!match) {
      out.verdict = PairVerdict::Disjoint;
      out.rung = Rung::SectionProfile;
      out.details = "level-1 section profiles share no rotation class";
      return out;
    }
  }

  // C4 ORBIT-EXACT: the complete conjugation orbit of one socle decides the
  // question; the cap makes UNDECIDED possible.
  if (opts.rung_mask & bit(Rung::OrbitExact)) {
    auto decide = [&](const Portrait& from, const Portrait& to,
                      bool& answered) -> PairOutcome {
      PairOutcome res;
      ConjOrbit orbit = ctx.conj_orbit_bfs(from, opts.cap);
      res.orbit_explored = orbit.size();
      if (!orbit.complete) {
        answered = false;
        return res;
      }
      answered = true;
      for (int u = 1; u < p; ++u) {
        auto idx = orbit.find(GroupContext::portrait_key(to.pow(u)));
        if (!idx) continue;
        res.verdict = PairVerdict::Intersect;
        res.rung = Rung::OrbitExact;
        std::ostringstream os;
        os << "witness: conjugating the first socle by";
        for (int gi : orbit.conjugator_path(*idx))
          os << ' ' << ctx.symbols()[gi].name();
        os << " gives the other socle to the power " << u;
        res.details = os.str();
        return res;
      }
      res.verdict = PairVerdict::Disjoint;
      res.rung = Rung::OrbitExact;
      res.details = "complete orbit of " + std::to_string(orbit.size()) +
                    " elements misses every socle power";
      return res;
    };

    bool answered = false;
    PairOutcome res = decide(zy, zx, answered);
    if (answered) return res;
    size_t explored = res.orbit_explored;
    res = decide(zx, zy, answered);  // retry from the other socle
    res.orbit_explored = std::max(res.orbit_explored, explored);
    if (answered) return res;
    out.verdict = PairVerdict::Undecided;
    out.orbit_explored = res.orbit_explored;
    out.details = "orbit cap " + std::to_string(opts.cap) +
                  " exceeded from both socles";
    return out;
  }

  out.verdict = PairVerdict::Undecided;
  out.details = "no enabled rung was conclusive";
  return out;
}

namespace {

std::pair<SphericalSystem, SphericalSystem> build_one_family_tuples(
    const GroupContext& ctx, const Classification& cls, const TupleOptions& opts) {
  const DefiningDatum& datum = ctx.datum();
  const int p = datum.p;
  const int r = cls.r;
  const int family = datum.families.begin()->first;
  const auto& vectors = datum.families.begin()->second;

  Word a{{GenSymbol::rooted(), 1}};
  std::vector<Word> b(r);  // b[i] is the (i+1)-th directed generator
  for (int i = 0; i < r; ++i)
    b[i] = Word{{GenSymbol::directed(family, i + 1), 1}};

  if (cls.periodic) {
    if (opts.change_of_generators) {
      const auto& m = *opts.change_of_generators;
      if (static_cast<int>(m.size()) != r ||
          std::any_of(m.begin(), m.end(), [&](const auto& row) {
            return static_cast<int>(row.size()) != r;
          }))
        throw std::invalid_argument("build_tuples: change-of-generators matrix must be r x r");
      if (rank_mod_p(m, p) != r)
        throw std::invalid_argument("build_tuples: change-of-generators matrix is singular mod p");
      std::vector<Word> nb(r);
      for (int i = 0; i < r; ++i)
        for (int t = 0; t < r; ++t)
          nb[i] = nb[i].then(wpow(b[t], m[i][t]));
      b = std::move(nb);
    } else {
      // Without a supplied change of generators, verify the consequence the
      // construction is used for: the minimal generator count of G_k.
      if (ctx.frattini_rank() != r + 1)
        throw std::invalid_argument(
            "build_tuples: generating rank of the quotient is not r+1; supply a "
            "change-of-generators matrix");
    }
    std::vector<Word> t1{a.inverse(), concat({a, b[0]})};
    for (int i = 1; i < r; ++i) t1.push_back(b[i]);
    std::vector<Word> t2{concat({a, wpow(b[0], 2)}), wpow(b[0], -2)};
    for (int i = 0; i + 1 < r; ++i)
      t2.push_back(concat({b[i].inverse(), b[i + 1]}));
    return {make_spherical(ctx, std::move(t1)), make_spherical(ctx, std::move(t2))};
  }

  // Non-periodic: renormalise so that exactly b_1 has nonzero exponent sum.
  std::vector<int> sums(r);
  for (int i = 0; i < r; ++i) {
    long s = 0;
    for (int e : vectors[i]) s += e;
    sums[i] = static_cast<int>(((s % p) + p) % p);
  }
  int lead = -1;
  for (int i = 0; i < r; ++i)
    if (sums[i] != 0) { lead = i; break; }
  if (lead < 0) throw std::logic_error("build_tuples: non-periodic datum with all sums zero");
  std::swap(b[0], b[lead]);
  std::swap(sums[0], sums[lead]);
  const int inv = inverse_mod(sums[0], p);
  for (int i = 1; i < r; ++i)
    if (sums[i] != 0)
      b[i] = b[i].then(wpow(b[0], -(sums[i] * inv % p))).normalized();

  std::vector<Word> t1{a.inverse(), concat({a, b[0]})};
  for (int i = 1; i < r; ++i) t1.push_back(b[i]);
  std::vector<Word> t2{concat({a, b[1]}), b[0]};
  for (int i = 0; i + 1 < r; ++i)
    t2.push_back(concat({b[i].inverse(), b[i + 1]}));
  return {make_spherical(ctx, std::move(t1)), make_spherical(ctx, std::move(t2))};
}

std::pair<SphericalSystem, SphericalSystem> build_single_vector_tuples(
    const GroupContext& ctx, const Classification& cls) {
  const DefiningDatum& datum = ctx.datum();
  const int p = datum.p;

  std::vector<int> fams;
  const FVector* shared = nullptr;
  for (const auto& [j, vecs] : datum.families) {
    if (vecs.empty()) continue;
    if (vecs.size() != 1)
      throw std::invalid_argument(
          "build_tuples: the one-vector case needs exactly one vector per family");
    if (shared && vecs[0] != *shared)
      throw std::invalid_argument(
          "build_tuples: the one-vector case needs the same vector in every family");
    shared = &vecs[0];
    fams.push_back(j);
  }
  const int n = static_cast<int>(fams.size());
  Word a{{GenSymbol::rooted(), 1}};
  std::vector<Word> b(n);
  for (int i = 0; i < n; ++i) b[i] = Word{{GenSymbol::directed(fams[i], 1), 1}};

  if (cls.periodic) {
    if (p == 3)
      throw std::invalid_argument(
          "build_tuples: no periodic one-vector datum exists at p = 3");
    std::vector<Word> t1{concat({a, b[0]})};
    for (int i = 0; i + 1 < n; ++i) t1.push_back(concat({b[i].inverse(), b[i + 1]}));
    t1.push_back(concat({b[n - 1].inverse(), a}));
    std::vector<Word> t2;
    if (n % 2 == 0) {
      t2.push_back(b[0]);
      for (int i = 1; i < n; ++i)
        t2.push_back(i % 2 == 1 ? concat({b[i - 1].inverse(), b[i].inverse()})
                                : concat({b[i - 1], b[i]}));
    } else {
      t2.push_back(b[0].inverse());
      for (int i = 1; i < n; ++i)
        t2.push_back(i % 2 == 1 ? concat({b[i - 1], b[i]})
                                : concat({b[i - 1].inverse(), b[i].inverse()}));
    }
    t2.push_back(concat({wpow(b[n - 1], 3), a}));
    return {make_spherical(ctx, std::move(t1)), make_spherical(ctx, std::move(t2))};
  }

  // Non-periodic.
  int lambda = 0;
  for (int u = 1; u < p; ++u)
    if ((n - 1 + u) % p != 0) { lambda = u; break; }

  std::vector<Word> t1;
  if (n == 2) {
    t1 = {concat({a, b[0], b[1].inverse()}), b[0], b[1].inverse()};
  } else {
    t1 = {concat({a, b[0], b[1].inverse()}), b[1], b[0].inverse()};
    for (int i = 2; i < n; ++i)
      t1.push_back(i % 2 == 0
                       ? concat({b[i - 1], b[i].inverse(), a})
                       : concat({a.inverse(), b[i - 1], b[i].inverse()}));
  }
  std::vector<Word> t2;
  for (int i = 1; i < n; ++i)
    t2.push_back(i % 2 == 1 ? concat({a, b[i - 1]}) : concat({b[i - 1], a.inverse()}));
  if (n % 2 == 0)
    t2.push_back(concat({wpow(b[n - 1], lambda), a.inverse()}));
  else
    t2.push_back(concat({a, wpow(b[n - 1], lambda)}));
  t2.push_back(a);
  return {make_spherical(ctx, std::move(t1)), make_spherical(ctx, std::move(t2))};
}

std::string tuple_case_name(const Classification& cls, int n_families) {
  std::string name = n_families == 1 ? "one-family" : "one-vector";
  name += cls.periodic ? " periodic" : " non-periodic";
  return name;
}

}  // namespace

std::pair<SphericalSystem, SphericalSystem> build_tuples(const GroupContext& ctx,
                                                         const TupleOptions& opts) {
  Classification cls = classify(ctx.datum());
  if (cls.kind == GroupKind::GGS)
    throw std::invalid_argument(
        "build_tuples: a single directed generator is out of scope");
  if (ctx.depth() < cls.threshold_k)
    throw std::invalid_argument("build_tuples: depth below the case threshold " +
                                std::to_string(cls.threshold_k));
  if (cls.kind == GroupKind::MultiGGS)
    return build_one_family_tuples(ctx, cls, opts);
  if (cls.kind == GroupKind::MultiEGSGeneral)
    throw std::invalid_argument(
        "build_tuples: several independent families are out of scope; rewrite "
        "the datum as a one-family datum first");
  return build_single_vector_tuples(ctx, cls);
}

DisjointnessReport verify_ramification(const DefiningDatum& datum, int k,
                                       const VerifyOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  DisjointnessReport report;
  report.datum = datum;
  report.k = k;
  report.classification = classify(datum);
  report.cap = opts.cap;

  GroupContext ctx(datum, k);
  GroupContext sub(datum, k - 1);
  ctx.precompute();
  sub.precompute();

  auto [t1, t2] = build_tuples(ctx, opts.tuples);
  report.tuple_case =
      tuple_case_name(report.classification, report.classification.n_families);
  for (size_t i = 0; i < t1.size(); ++i)
    report.t1_words.push_back(t1.word(i).to_string());
  for (size_t i = 0; i < t2.size(); ++i)
    report.t2_words.push_back(t2.word(i).to_string());

  for (const auto* T : {&t1, &t2}) {
    auto errors = validate_spherical(*T, ctx);
    if (!errors.empty()) {
      std::string msg = "verify_ramification: invalid spherical system:";
      for (const auto& e : errors) msg += " " + e + ";";
      throw std::invalid_argument(msg);
    }
  }

  const size_t n1 = t1.size(), n2 = t2.size();
  report.pairs.resize(n1 * n2);
  CertifyOptions copts{opts.cap, opts.rung_mask};
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t idx; (idx = next.fetch_add(1)) < n1 * n2;) {
      size_t i = idx / n2, j = idx % n2;
      PairOutcome out = certify_pair(ctx, sub, t1.element(i), t2.element(j), copts);
      out.x = t1.word(i).to_string();
      out.y = t2.word(j).to_string();
      report.pairs[idx] = std::move(out);
    }
  };
  int threads = std::max(1, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  bool any_undecided = false, any_intersect = false;
  for (const auto& pr : report.pairs) {
    any_undecided |= pr.verdict == PairVerdict::Undecided;
    any_intersect |= pr.verdict == PairVerdict::Intersect;
    report.max_orbit = std::max(report.max_orbit, pr.orbit_explored);
  }
  report.verdict = any_intersect  ? DisjointnessReport::Verdict::Refuted
                   : any_undecided ? DisjointnessReport::Verdict::Undecided
                                   : DisjointnessReport::Verdict::Verified;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace megs
