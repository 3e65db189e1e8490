#pragma once

#include <string>
#include <vector>

#include "megs/groupdata.hpp"
#include "megs/tree.hpp"

namespace megs {

/// Generator symbol: the rooted generator `a`, or the directed generator
/// `b<family>.<index>` (index within the family, 1-based).
struct GenSymbol {
  int family = 0;  // 0 means the rooted generator a
  int index = 0;

  static GenSymbol rooted() { return {}; }
  static GenSymbol directed(int family, int index) { return {family, index}; }
  bool is_rooted() const { return family == 0; }
  std::string name() const;
  bool operator==(const GenSymbol&) const = default;
};

/// Word in the generators: (symbol, exponent) pairs, composed left to right.
struct Word {
  std::vector<std::pair<GenSymbol, int>> factors;

  Word() = default;
  Word(std::initializer_list<std::pair<GenSymbol, int>> f) : factors(f) {}

  Word inverse() const;
  Word then(const Word& other) const;
  /// Merge adjacent equal symbols, drop zero exponents.
  Word normalized() const;
  bool empty() const { return factors.empty(); }
  std::string to_string() const;
};

/// Parse the CLI word syntax: whitespace-separated factors `a`, `a^-1`,
/// `b1.1`, `b2.1^3`; left-to-right composition.
Word parse_word(const std::string& text);

/// The rooted automorphism a: root label 1, trivial below.
Portrait rooted_a(int p, int depth);

/// The directed generator b_i^{(j)} as a depth-k portrait. Its recursion
/// places itself at the level-1 vertex p-j+1 and lays the defining vector
/// out cyclically around that position.
Portrait directed_generator(const DefiningDatum& datum, int family, int index,
                            int depth);

/// Portrait of the symbol (validates it against the datum).
Portrait generator_portrait(const DefiningDatum& datum, const GenSymbol& symbol,
                            int depth);

/// Evaluate a word at the given depth; the empty word is the identity.
Portrait eval_word(const DefiningDatum& datum, const Word& word, int depth);

/// [a] followed by all directed generators in (family, index) order.
std::vector<Portrait> standard_generating_set(const DefiningDatum& datum, int depth);
/// Symbols in the same order as standard_generating_set.
std::vector<GenSymbol> standard_symbols(const DefiningDatum& datum);

}  // namespace megs
