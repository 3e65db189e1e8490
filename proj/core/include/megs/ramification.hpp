#pragma once

#include <optional>
#include <string>
#include <vector>

#include "megs/group_context.hpp"

namespace megs {

/// Spherical system of generators: words x_1..x_d generating G_k, together
/// with the product x_1...x_d. The T-set iterated by the disjointness check
/// is {x_1, ..., x_d, x_1...x_d}; appending the inverse of the product to
/// the word list gives a tuple multiplying to the identity.
struct SphericalSystem {
  std::vector<Word> words;          // x_1..x_d
  Word product_word;                // concatenation x_1...x_d
  std::vector<Portrait> elements;   // evaluated x_1..x_d
  Portrait product;                 // evaluated product

  SphericalSystem() : product(3, 0) {}

  /// Number of T-set entries (d + 1).
  size_t size() const { return words.size() + 1; }
  const Word& word(size_t i) const {
    return i < words.size() ? words[i] : product_word;
  }
  const Portrait& element(size_t i) const {
    return i < elements.size() ? elements[i] : product;
  }
};

/// Evaluate a word list into a SphericalSystem at the context's depth.
SphericalSystem make_spherical(const GroupContext& ctx, std::vector<Word> words);

/// Check that the system generates G_k, that the stored product matches the
/// composed product, and that no T-set entry is trivial. Returns the list of
/// violations (empty = ok).
std::vector<std::string> validate_spherical(const SphericalSystem& T,
                                            const GroupContext& ctx);

/// Generator of the unique order-p subgroup of <x>: x^(o(x)/p).
Portrait socle(const Portrait& x);

/// Certificate ladder rungs, in the order they are attempted.
enum class Rung { Order, Depth, Fixpoints, Abelianization, SectionProfile, OrbitExact };
std::string to_string(Rung rung);

enum class PairVerdict { Disjoint, Intersect, Undecided };
std::string to_string(PairVerdict verdict);

struct PairOutcome {
  std::string x, y;  // word forms of the pair
  PairVerdict verdict = PairVerdict::Undecided;
  std::optional<Rung> rung;  // deciding rung (absent for UNDECIDED)
  std::string details;       // separating invariant values, or the witness
  size_t orbit_explored = 0; // elements visited by C4, if it ran
};

struct CertifyOptions {
  size_t cap = 2'000'000;
  // Bit i enables the rung with enum value i; C4-only runs use 1 << 5.
  unsigned rung_mask = 0x3F;
};

/// Decide whether the unions of conjugates of <x> and <y> intersect
/// trivially, via socle conjugacy. `sub` must be the context at depth k-1
/// (used by the section-profile rung).
PairOutcome certify_pair(const GroupContext& ctx, const GroupContext& sub,
                         const Portrait& x, const Portrait& y,
                         const CertifyOptions& opts = {});

struct TupleOptions {
  /// Optional change of directed generators for the periodic one-family
  /// case: row i gives the exponents expressing the new b_i in the old ones.
  std::optional<std::vector<std::vector<int>>> change_of_generators;
};

/// The explicit generator tuples for the datum's classification case, with the
/// final T-entry recomputed as the product of the preceding ones.
/// Throws std::invalid_argument for out-of-scope data (single directed
/// generator; several independent families; depth below threshold;
/// periodic one-vector case with p = 3).
std::pair<SphericalSystem, SphericalSystem> build_tuples(
    const GroupContext& ctx, const TupleOptions& opts = {});

struct DisjointnessReport {
  DefiningDatum datum;
  int k = 0;
  Classification classification{};
  std::string tuple_case;
  std::vector<std::string> t1_words, t2_words;
  std::vector<PairOutcome> pairs;

  enum class Verdict { Verified, Refuted, Undecided };
  Verdict verdict = Verdict::Undecided;

  size_t cap = 0;
  size_t max_orbit = 0;      // largest completed/explored C4 orbit
  double wall_seconds = 0;
};

std::string to_string(DisjointnessReport::Verdict verdict);

struct VerifyOptions {
  size_t cap = 2'000'000;
  unsigned rung_mask = 0x3F;
  int threads = 1;
  TupleOptions tuples{};
};

/// Build the tuples, validate both systems, and certify all T1 x T2 pairs.
DisjointnessReport verify_ramification(const DefiningDatum& datum, int k,
                                       const VerifyOptions& opts = {});

}  // namespace megs
