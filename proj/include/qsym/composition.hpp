#pragma once

/**
 * @file composition.hpp
 * @brief Compositions, weak compositions, partitions and descent sets.
 *
 * A composition of n is a finite sequence of positive integers summing to n.
 * Every basis of QSym and NSym is indexed by compositions, so the maps and
 * orders defined here are used throughout the library.
 *
 * Canonical order: compositions compare first by size, then
 * lexicographically on their parts (a proper prefix sorts first).
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsym {

/// Input outside the domain of an operation (non-partition, size mismatch, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p < 1) throw domain_error("composition parts must be positive");
      size_ += p;
    }
  }

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }

  /// |α|, the sum of the parts.
  int size() const { return size_; }
  /// ℓ(α), the number of parts.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  int operator[](std::size_t i) const { return parts_[i]; }
  /// 1-based part lookup with the implicit trailing zeros.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }
  int front() const { return parts_.front(); }
  int back() const { return parts_.back(); }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                  b.parts_.begin(), b.parts_.end());
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A sequence of non-negative integers; trailing zeros are dropped on construction.
class WeakComposition {
 public:
  WeakComposition() = default;
  WeakComposition(std::initializer_list<int> parts) : WeakComposition(std::vector<int>(parts)) {}
  explicit WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 0) throw domain_error("weak composition parts must be non-negative");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }
  WeakComposition(const Composition& c) : parts_(c.vec()) {}  // NOLINT: compositions are weak compositions

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
  friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;

 private:
  std::vector<int> parts_;
};

/// A composition whose parts are weakly decreasing.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(Composition(parts)) {}
  explicit Partition(Composition c) : c_(std::move(c)) {
    for (int i = 1; i < c_.length(); ++i)
      if (c_[i - 1] < c_[i]) throw domain_error("partition parts must be weakly decreasing");
  }

  const Composition& composition() const { return c_; }
  operator const Composition&() const { return c_; }  // NOLINT: a partition is a composition
  int size() const { return c_.size(); }
  int length() const { return c_.length(); }
  int operator[](std::size_t i) const { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.c_ <=> b.c_; }

 private:
  Composition c_;
};

/// A subset of {1, ..., n-1} together with its degree n.
class DescentSet {
 public:
  DescentSet() = default;
  DescentSet(int degree, std::vector<int> elements) : degree_(degree), elements_(std::move(elements)) {
    if (degree < 0) throw domain_error("descent set degree must be non-negative");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i] < 1 || elements_[i] > degree - 1)
        throw domain_error("descent set element outside {1..n-1}");
      if (i > 0 && elements_[i - 1] >= elements_[i])
        throw domain_error("descent set must be strictly increasing");
    }
  }
  int degree() const { return degree_; }
  const std::vector<int>& elements() const { return elements_; }
  bool contains(int i) const { return std::binary_search(elements_.begin(), elements_.end(), i); }

  friend bool operator==(const DescentSet&, const DescentSet&) = default;

 private:
  int degree_ = 0;
  std::vector<int> elements_;
};

// ---------------------------------------------------------------------------
// set/comp bijection

inline DescentSet set_of(const Composition& a) {
  std::vector<int> s;
  int acc = 0;
  for (int i = 0; i + 1 < a.length(); ++i) {
    acc += a[i];
    s.push_back(acc);
  }
  return DescentSet(a.size(), std::move(s));
}

inline Composition comp_of(const DescentSet& s) {
  if (s.degree() == 0) return {};
  std::vector<int> parts;
  int prev = 0;
  for (int x : s.elements()) {
    parts.push_back(x - prev);
    prev = x;
  }
  parts.push_back(s.degree() - prev);
  return Composition(std::move(parts));
}

inline Composition flatten(const WeakComposition& w) {
  std::vector<int> parts;
  for (int p : w.parts())
    if (p > 0) parts.push_back(p);
  return Composition(std::move(parts));
}

// ---------------------------------------------------------------------------
// involutions and friends

inline Composition complement(const Composition& a) {
  const int n = a.size();
  if (n == 0) return {};
  DescentSet s = set_of(a);
  std::vector<int> c;
  for (int i = 1; i < n; ++i)
    if (!s.contains(i)) c.push_back(i);
  return comp_of(DescentSet(n, std::move(c)));
}

inline Composition reverse(const Composition& a) {
  std::vector<int> p(a.vec().rbegin(), a.vec().rend());
  return Composition(std::move(p));
}

/// α^t = (α^r)^c.
inline Composition transpose(const Composition& a) { return complement(reverse(a)); }

inline bool is_partition(const Composition& a) {
  return std::is_sorted(a.begin(), a.end(), std::greater<>{});
}

inline bool is_strictly_increasing(const Composition& a) {
  return std::adjacent_find(a.begin(), a.end(), std::greater_equal<>{}) == a.end();
}

inline bool is_strictly_decreasing(const Composition& a) {
  return std::adjacent_find(a.begin(), a.end(), std::less_equal<>{}) == a.end();
}

/// Column lengths of the diagram of λ. Distinct from transpose().
inline Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  if (lambda.length() > 0) {
    for (int c = 1; c <= lambda[0]; ++c) {
      int h = 0;
      for (int p : lambda)
        if (p >= c) ++h;
      cols.push_back(h);
    }
  }
  return Partition(Composition(std::move(cols)));
}

inline Partition conjugate(const Composition& c) {
  if (!is_partition(c)) throw domain_error("conjugate is defined only on partitions");
  return conjugate(Partition(c));
}

inline Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> p = a.vec();
  p.insert(p.end(), b.begin(), b.end());
  return Composition(std::move(p));
}

/// α ⊙ β: the last part of α is fused with the first part of β.
inline Composition near_concat(const Composition& a, const Composition& b) {
  if (a.empty() || b.empty()) throw domain_error("near-concatenation needs two nonempty compositions");
  std::vector<int> p = a.vec();
  p.back() += b.front();
  p.insert(p.end(), b.begin() + 1, b.end());
  return Composition(std::move(p));
}

/// α ⪯ β in refinement order: set(β) ⊆ set(α).
inline bool refines(const Composition& a, const Composition& b) {
  if (a.size() != b.size()) throw domain_error("refinement compares compositions of equal size");
  const DescentSet sa = set_of(a), sb = set_of(b);
  for (int x : sb.elements())
    if (!sa.contains(x)) return false;
  return true;
}

/// α ⊆ β in dominance (containment) order.
inline bool dominated(const Composition& a, const Composition& b) {
  if (a.length() > b.length()) return false;
  for (int i = 0; i < a.length(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Partition sort_to_partition(const Composition& a) {
  std::vector<int> p = a.vec();
  std::sort(p.begin(), p.end(), std::greater<>{});
  return Partition(Composition(std::move(p)));
}

// ---------------------------------------------------------------------------
// enumeration

namespace detail {
inline void compositions_rec(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = 1; p <= remaining; ++p) {
    prefix.push_back(p);
    compositions_rec(remaining - p, prefix, out);
    prefix.pop_back();
  }
}

inline void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(Composition(prefix));
    return;
  }
  for (int p = 1; p <= std::min(remaining, max_part); ++p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

/// All compositions of n in canonical order; [()] for n = 0.
inline std::vector<Composition> enumerate_compositions(int n) {
  if (n < 0) throw domain_error("enumerate_compositions needs n >= 0");
  std::vector<Composition> out;
  std::vector<int> prefix;
  detail::compositions_rec(n, prefix, out);
  return out;
}

/// All compositions of size at most n, in canonical order.
inline std::vector<Composition> compositions_up_to(int n) {
  std::vector<Composition> out;
  for (int k = 0; k <= n; ++k) {
    auto c = enumerate_compositions(k);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

/// All partitions of n in canonical (lexicographic) order.
inline std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  detail::partitions_rec(n, n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// text form: [2,3,1]; [] is the empty composition

inline std::string to_string(const Composition& a) {
  std::string s = "[";
  for (int i = 0; i < a.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s + "]";
}

inline std::string to_string(const WeakComposition& a) {
  std::string s = "[";
  for (int i = 0; i < a.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(a.vec()[i]);
  }
  return s + "]";
}

namespace detail {
inline std::vector<int> parse_int_list(std::string_view text, bool allow_zero) {
  std::string_view s = text;
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw domain_error("malformed composition literal: " + std::string(text));
    s = trim(s.substr(1, s.size() - 2));
  } else if (!s.empty() && (s.front() == '(')) {
    if (s.back() != ')') throw domain_error("malformed composition literal: " + std::string(text));
    s = trim(s.substr(1, s.size() - 2));
  }
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    std::string_view tok = trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
    if (tok.empty()) throw domain_error("malformed composition literal: " + std::string(text));
    int v = 0;
    for (char ch : tok) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw domain_error("malformed composition literal: " + std::string(text));
      v = v * 10 + (ch - '0');
      if (v > 1000000) throw domain_error("composition part too large: " + std::string(text));
    }
    if (v == 0 && !allow_zero) throw domain_error("composition parts must be positive: " + std::string(text));
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}
}  // namespace detail

/// Accepts "[2,3,1]", "2,3,1", "(2,3,1)" and "[]".
inline Composition parse_composition(std::string_view text) {
  return Composition(detail::parse_int_list(text, false));
}

inline WeakComposition parse_weak_composition(std::string_view text) {
  return WeakComposition(detail::parse_int_list(text, true));
}

}  // namespace qsym
