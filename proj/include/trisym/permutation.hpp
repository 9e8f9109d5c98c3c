#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trisym {

/// Bijection on {1..degree}. Points are 1-based in cycle notation and in the
/// public helpers below; storage is 0-based.
///
/// Composition is rightmost-first everywhere in this library:
/// (a * b)(x) = a(b(x)), i.e. b acts first.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(int degree) {
    check_degree(degree);
    Permutation p;
    p.images_.resize(static_cast<std::size_t>(degree));
    std::iota(p.images_.begin(), p.images_.end(), 0);
    return p;
  }

  /// images[x] = image of x, both 0-based. Must be a bijection.
  static Permutation from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    check_degree(n);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("permutation images are not a bijection");
      seen[static_cast<std::size_t>(v)] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }

  /// 0-based image.
  int image(int x) const { return images_[static_cast<std::size_t>(x)]; }

  bool is_identity() const {
    for (int x = 0; x < degree(); ++x)
      if (image(x) != x) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int x = 0; x < degree(); ++x) inv[static_cast<std::size_t>(image(x))] = x;
    return from_images(std::move(inv));
  }

  /// Least n >= 1 with p^n = identity (lcm of cycle lengths).
  int order() const {
    long long ord = 1;
    for (const auto& cyc : cycles_including_fixed())
      ord = std::lcm(ord, static_cast<long long>(cyc.size()));
    return static_cast<int>(ord);
  }

  /// Nontrivial cycles, 1-based, each starting at its least point, ordered by
  /// least point. Canonical form used by render_cycles.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    for (auto& cyc : cycles_including_fixed())
      if (cyc.size() > 1) out.push_back(std::move(cyc));
    return out;
  }

  /// Multiset of cycle lengths (fixed points included), sorted descending.
  /// Conjugate permutations have equal cycle type.
  std::vector<int> cycle_type() const {
    std::vector<int> type;
    for (const auto& cyc : cycles_including_fixed())
      type.push_back(static_cast<int>(cyc.size()));
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
  }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  const std::vector<int>& images() const { return images_; }

private:
  static void check_degree(int degree) {
    if (degree < 1) throw std::invalid_argument("degree must be positive");
  }

  std::vector<std::vector<int>> cycles_including_fixed() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int x = 0; x < degree(); ++x) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      std::vector<int> cyc;
      int y = x;
      do {
        seen[static_cast<std::size_t>(y)] = true;
        cyc.push_back(y + 1);
        y = image(y);
      } while (y != x);
      out.push_back(std::move(cyc));
    }
    return out;
  }

  std::vector<int> images_;
};

/// (a * b)(x) = a(b(x)); b acts first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int x = 0; x < a.degree(); ++x) images[static_cast<std::size_t>(x)] = a.image(b.image(x));
  return Permutation::from_images(std::move(images));
}

inline Permutation power(const Permutation& p, int n) {
  Permutation acc = Permutation::identity(p.degree());
  Permutation base = n >= 0 ? p : p.inverse();
  for (int i = std::abs(n); i > 0; --i) acc = compose(acc, base);
  return acc;
}

/// Parses disjoint-cycle notation over {1..degree}.
///
///   perm  := cycle*
///   cycle := '(' int (sep int)+ ')'      sep = spaces or commas
///
/// Empty text and "()" denote the identity. Points omitted are fixed.
/// Rejects repeated points, points outside {1..degree}, and malformed
/// parentheses.
inline Permutation parse_permutation(std::string_view text, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
      if (pos >= text.size()) throw std::invalid_argument("unclosed cycle");
      if (text[pos] == ')') { ++pos; break; }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("unexpected character in cycle");
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw std::invalid_argument("point out of range");
        ++pos;
      }
      if (value < 1 || value > degree)
        throw std::invalid_argument("point " + std::to_string(value) + " exceeds degree " +
                                    std::to_string(degree));
      if (used[static_cast<std::size_t>(value - 1)])
        throw std::invalid_argument("repeated point " + std::to_string(value));
      used[static_cast<std::size_t>(value - 1)] = true;
      cyc.push_back(value - 1);
    }
    if (cyc.size() == 1) throw std::invalid_argument("cycle must list at least two points");
    for (std::size_t j = 0; j < cyc.size(); ++j)
      images[static_cast<std::size_t>(cyc[j])] = cyc[(j + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation::from_images(std::move(images));
}

/// Canonical cycle text; identity renders as "()".
inline std::string render_cycles(const Permutation& p) {
  auto cycs = p.cycles();
  if (cycs.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycs) {
    out += '(';
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(cyc[j]);
    }
    out += ')';
  }
  return out;
}

}  // namespace trisym
