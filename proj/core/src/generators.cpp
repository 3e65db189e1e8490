#include "megs/generators.hpp"

#include <sstream>
#include <stdexcept>

namespace megs {

std::string GenSymbol::name() const {
  if (is_rooted()) return "a";
  return "b" + std::to_string(family) + "." + std::to_string(index);
}

Word Word::inverse() const {
  Word out;
  out.factors.reserve(factors.size());
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    out.factors.emplace_back(it->first, -it->second);
  return out;
}

Word Word::then(const Word& other) const {
  Word out = *this;
  out.factors.insert(out.factors.end(), other.factors.begin(), other.factors.end());
  return out;
}

Word Word::normalized() const {
  Word out;
  for (const auto& [sym, e] : factors) {
    if (e == 0) continue;
    if (!out.factors.empty() && out.factors.back().first == sym) {
      out.factors.back().second += e;
      if (out.factors.back().second == 0) out.factors.pop_back();
    } else {
      out.factors.emplace_back(sym, e);
    }
  }
  return out;
}

std::string Word::to_string() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [sym, e] : factors) {
    if (!first) os << ' ';
    first = false;
    os << sym.name();
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    int exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      try {
        exp = std::stoi(tok.substr(caret + 1));
      } catch (...) {
        throw std::invalid_argument("parse_word: bad exponent in '" + tok + "'");
      }
      tok = tok.substr(0, caret);
    }
    GenSymbol sym;
    if (tok == "a") {
      sym = GenSymbol::rooted();
    } else if (tok.size() > 1 && tok[0] == 'b') {
      auto dot = tok.find('.');
      if (dot == std::string::npos)
        throw std::invalid_argument("parse_word: expected b<j>.<i> in '" + tok + "'");
      try {
        sym = GenSymbol::directed(std::stoi(tok.substr(1, dot - 1)),
                                  std::stoi(tok.substr(dot + 1)));
      } catch (...) {
        throw std::invalid_argument("parse_word: bad indices in '" + tok + "'");
      }
    } else {
      throw std::invalid_argument("parse_word: unknown symbol '" + tok + "'");
    }
    w.factors.emplace_back(sym, exp);
  }
  return w.normalized();
}

Portrait rooted_a(int p, int depth) {
  Portrait f(p, depth);
  if (depth == 0) return f;
  std::vector<uint8_t> labels(f.label_count(), 0);
  labels[0] = 1;
  return {p, depth, std::move(labels)};
}

Portrait directed_generator(const DefiningDatum& datum, int family, int index,
                            int depth) {
  const int p = datum.p;
  auto it = datum.families.find(family);
  if (it == datum.families.end() || it->second.empty())
    throw std::invalid_argument("directed_generator: empty family");
  if (index < 1 || index > static_cast<int>(it->second.size()))
    throw std::invalid_argument("directed_generator: index out of range");
  const FVector& vec = it->second[index - 1];
  if (static_cast<int>(vec.size()) != p - 1)
    throw std::invalid_argument("directed_generator: bad vector length");

  std::vector<uint8_t> labels(level_offset(p, depth), 0);
  // The generator fixes level 1 and recurses along the path (p-j+1)^infinity.
  // At each level the siblings of the path carry the rooted powers a^{e_c},
  // read cyclically starting just after the path position.
  const int pos = p - family + 1;  // 1-based child position of the recursion
  long path_rank = 0;              // rank of (pos,...,pos) at its level
  for (int m = 0; m + 1 < depth; ++m) {
    // children of the level-m path vertex sit at level m+1
    long child_base = path_rank * p;
    for (int step = 1; step < p; ++step) {
      int child = (pos - 1 + step) % p;  // 0-based letter
      labels[level_offset(p, m + 1) + child_base + child] =
          static_cast<uint8_t>(vec[step - 1] % p);
    }
    path_rank = child_base + (pos - 1);
  }
  return {p, depth, std::move(labels)};
}

Portrait generator_portrait(const DefiningDatum& datum, const GenSymbol& symbol,
                            int depth) {
  if (symbol.is_rooted()) return rooted_a(datum.p, depth);
  return directed_generator(datum, symbol.family, symbol.index, depth);
}

Portrait eval_word(const DefiningDatum& datum, const Word& word, int depth) {
  Portrait acc = Portrait::identity(datum.p, depth);
  for (const auto& [sym, e] : word.normalized().factors)
    acc = acc.then(generator_portrait(datum, sym, depth).pow(e));
  return acc;
}

std::vector<GenSymbol> standard_symbols(const DefiningDatum& datum) {
  std::vector<GenSymbol> syms{GenSymbol::rooted()};
  for (const auto& [j, vecs] : datum.families)
    for (int i = 1; i <= static_cast<int>(vecs.size()); ++i)
      syms.push_back(GenSymbol::directed(j, i));
  return syms;
}

std::vector<Portrait> standard_generating_set(const DefiningDatum& datum, int depth) {
  std::vector<Portrait> gens;
  for (const auto& sym : standard_symbols(datum))
    gens.push_back(generator_portrait(datum, sym, depth));
  return gens;
}

}  // namespace megs
