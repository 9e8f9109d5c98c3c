#pragma once

#include <deque>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "trisym/group.hpp"
#include "trisym/permutation.hpp"

namespace trisym {

/// Values of the word symbols i, a and a2 (= a squared is derived).
struct WordBinding {
  Permutation i;
  Permutation a;
};

namespace detail {

struct WordParser {
  std::string_view text;
  std::size_t pos = 0;
  const Permutation i, a, a2;
  int degree;

  WordParser(std::string_view text, const WordBinding& binding)
      : text(text),
        i(binding.i),
        a(binding.a),
        a2(compose(binding.a, binding.a)),
        degree(binding.a.degree()) {
    if (binding.i.degree() != degree) throw std::invalid_argument("degree mismatch in binding");
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  int parse_int() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument("expected integer in word");
    int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) throw std::invalid_argument("exponent out of range");
      ++pos;
    }
    return value;
  }

  // A maximal run of cycles "(..)(..)" is one permutation literal.
  Permutation parse_cycle_run() {
    const std::size_t start = pos;
    for (;;) {
      if (peek() != '(') break;
      const std::size_t save = pos;
      ++pos;
      skip_ws();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        pos = save;
        break;
      }
      while (pos < text.size() && text[pos] != ')') ++pos;
      if (pos >= text.size()) throw std::invalid_argument("unclosed cycle in word");
      ++pos;
    }
    if (pos == start) throw std::invalid_argument("expected cycle in word");
    return parse_permutation(text.substr(start, pos - start), degree);
  }

  Permutation parse_symbol() {
    skip_ws();
    if (pos < text.size() && text[pos] == 'i') { ++pos; return i; }
    if (pos < text.size() && text[pos] == 'a') {
      ++pos;
      if (pos < text.size() && text[pos] == '2') { ++pos; return a2; }
      return a;
    }
    throw std::invalid_argument(pos < text.size()
                                    ? std::string("unknown token '") + text[pos] + "' in word"
                                    : std::string("unexpected end of word"));
  }

  // factor := atom ('^' int)?   where a '[...]' exponent repeats the entry
  // and any other exponent is an element power.
  void parse_factor(std::vector<Permutation>& entries) {
    skip_ws();
    if (pos >= text.size()) return;
    const char c = text[pos];
    if (c == '[') {
      ++pos;
      const Permutation value = parse_product(']');
      if (pos >= text.size() || text[pos] != ']') throw std::invalid_argument("unbalanced brackets");
      ++pos;
      int copies = 1;
      if (peek() == '^') { ++pos; copies = parse_int(); }
      for (int n = 0; n < copies; ++n) entries.push_back(value);
      return;
    }
    Permutation value = Permutation::identity(degree);
    if (c == '(') {
      const std::size_t save = pos;
      ++pos;
      skip_ws();
      const bool cycle = pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
      pos = save;
      if (cycle) {
        value = parse_cycle_run();
      } else {
        ++pos;
        value = parse_product(')');
        if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("unbalanced parentheses");
        ++pos;
      }
    } else {
      value = parse_symbol();
    }
    if (peek() == '^') {
      ++pos;
      value = power(value, parse_int());
    }
    entries.push_back(value);
  }

  // Product of factors up to (not consuming) `close` or end of text.
  Permutation parse_product(char close) {
    Permutation acc = Permutation::identity(degree);
    while (!done() && peek() != close) {
      std::vector<Permutation> entries;
      parse_factor(entries);
      for (const auto& e : entries) acc = compose(acc, e);
    }
    return acc;
  }
};

}  // namespace detail

/// Expands a word into its entry list: one entry per top-level factor, with
/// '[...]^n' contributing n copies of the bracket's product.
///
///   word   := factor*
///   factor := atom ('^' int)?
///   atom   := '[' word ']' | '(' word ')' | cycles | 'i' | 'a' | 'a2'
///
/// Juxtaposition multiplies rightmost-first. A parenthesised subword or bare
/// symbol exponent is an element power; a bracket exponent repeats the entry.
inline std::vector<Permutation> word_entries(std::string_view word, const WordBinding& binding) {
  detail::WordParser parser(word, binding);
  std::vector<Permutation> entries;
  while (!parser.done()) {
    const char c = parser.peek();
    if (c == ']' || c == ')') throw std::invalid_argument("unbalanced brackets");
    parser.parse_factor(entries);
  }
  return entries;
}

/// Product of the word's entries (identity for the empty word).
inline Permutation evaluate_word(std::string_view word, const WordBinding& binding) {
  Permutation acc = Permutation::identity(binding.a.degree());
  for (const auto& e : word_entries(word, binding)) acc = compose(acc, e);
  return acc;
}

/// Shortest expression of each group element as a product of i, a, a2,
/// found by breadth-first search; ties break toward i, then a, then a2.
/// The identity renders as the empty word.
class WordTable {
public:
  WordTable(const GroupTable& g, int i_index, int a_index) {
    const int n = g.size();
    const int a2_index = g.mul(a_index, a_index);
    words_.assign(static_cast<std::size_t>(n), std::string());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    seen[GroupTable::kIdentity] = true;
    std::deque<int> queue{GroupTable::kIdentity};
    const std::pair<int, const char*> tokens[] = {{i_index, "i"}, {a_index, "a"}, {a2_index, "a2"}};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (const auto& [t, name] : tokens) {
        const int y = g.mul(x, t);  // append token on the right
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = true;
        auto& w = words_[static_cast<std::size_t>(y)];
        w = words_[static_cast<std::size_t>(x)];
        if (!w.empty()) w += ' ';
        w += name;
        queue.push_back(y);
      }
    }
  }

  const std::string& word_for(int element) const { return words_[static_cast<std::size_t>(element)]; }

  /// Bracketed word for an entry tuple, adjacent equal entries compressed as
  /// '[w]^n'. Unreachable or identity entries render as explicit cycles.
  std::string vector_word(const GroupTable& g, const std::vector<int>& entries) const {
    std::string out;
    for (std::size_t pos = 0; pos < entries.size();) {
      std::size_t run = pos;
      while (run < entries.size() && entries[run] == entries[pos]) ++run;
      const std::string& w = words_[static_cast<std::size_t>(entries[pos])];
      out += '[';
      out += w.empty() ? render_cycles(g.permutation(entries[pos])) : w;
      out += ']';
      if (run - pos > 1) out += "^" + std::to_string(run - pos);
      pos = run;
    }
    return out;
  }

private:
  std::vector<std::string> words_;
};

}  // namespace trisym
