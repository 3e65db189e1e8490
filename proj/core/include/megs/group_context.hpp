#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "megs/bigint.hpp"
#include "megs/generators.hpp"
#include "megs/groupdata.hpp"
#include "megs/schreier_sims.hpp"
#include "megs/tree.hpp"

namespace megs {

/// Conjugation orbit of an element under the group generators, with parent
/// pointers for witness reconstruction. `complete` is false when the cap was
/// exceeded; the partial orbit is still conjugation-consistent.
struct ConjOrbit {
  bool complete = false;
  std::vector<std::string> elements;  // serialized label strings, BFS order
  std::vector<int> parent;            // parent[0] = -1
  std::vector<int> via_gen;           // generator index used from parent

  size_t size() const { return elements.size(); }
  std::optional<size_t> find(const std::string& key) const;
  /// Generator indices whose ordered product conjugates the root to
  /// elements[idx].
  std::vector<int> conjugator_path(size_t idx) const;
};

/// The finite quotient G_k as a computable object: generator portraits, the
/// faithful action on the p^k leaves, and a stabilizer chain, with lazily
/// cached derived-subgroup and Frattini-subgroup chains and abelianization
/// data.
class GroupContext {
 public:
  GroupContext(DefiningDatum datum, int depth);

  const DefiningDatum& datum() const { return datum_; }
  int depth() const { return depth_; }
  int p() const { return datum_.p; }
  int degree() const { return degree_; }

  const std::vector<GenSymbol>& symbols() const { return symbols_; }
  const std::vector<Portrait>& generator_portraits() const { return portraits_; }
  const std::vector<Perm>& generator_perms() const { return perms_; }

  const StabilizerChain& chain() const { return chain_; }
  BigInt order() const { return chain_.order(); }
  bool contains(const Perm& g) const { return chain_.contains(g); }

  Portrait eval(const Word& w) const { return eval_word(datum_, w, depth_); }
  Perm leaf_perm(const Portrait& f) const { return f.leaf_perm(); }

  /// Chain for the derived subgroup G_k' (normal closure of the pairwise
  /// generator commutators). Cached; thread-safe.
  const StabilizerChain& derived_chain() const;
  /// Chain for the Frattini subgroup <G_k', generator p-th powers>.
  const StabilizerChain& frattini_chain() const;
  /// d(G_k) = log_p |G_k : Phi(G_k)|.
  int frattini_rank() const;

  /// Exponents (alpha, beta_1, ..., beta_r) of the image of x in the
  /// elementary abelian quotient G_k/G_k' with respect to the standard
  /// generators; unique since the quotient has exponent p.
  std::vector<int> ab_image(const Portrait& x) const;
  std::vector<int> ab_image(const Perm& x) const;

  /// True iff x and y have equal images modulo the given normal subgroup.
  bool coset_equal(const Portrait& x, const Portrait& y,
                   const StabilizerChain& subgroup) const;

  long long element_order(const Portrait& f) const { return f.order(); }

  /// Breadth-first closure of {z} under conjugation by the generators,
  /// stopping with complete=false once the orbit exceeds cap.
  ConjOrbit conj_orbit_bfs(const Portrait& z, size_t cap) const;

  /// Portrait stored in a ConjOrbit slot.
  Portrait orbit_element(const ConjOrbit& orbit, size_t idx) const;
  /// Serialization key used by conj_orbit_bfs.
  static std::string portrait_key(const Portrait& f);

  /// Ensure all lazy members are populated (call before concurrent use).
  void precompute() const;

 private:
  const std::vector<std::pair<std::vector<int>, Perm>>& ab_candidates() const;

  DefiningDatum datum_;
  int depth_;
  int degree_;
  std::vector<GenSymbol> symbols_;
  std::vector<Portrait> portraits_;
  std::vector<Perm> perms_;
  StabilizerChain chain_;

  mutable std::mutex lazy_mutex_;
  mutable std::optional<StabilizerChain> derived_;
  mutable std::optional<StabilizerChain> frattini_;
  mutable std::optional<std::vector<std::pair<std::vector<int>, Perm>>> ab_candidates_;
};

}  // namespace megs
