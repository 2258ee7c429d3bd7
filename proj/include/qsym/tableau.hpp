#pragma once

/**
 * @file tableau.hpp
 * @brief Composition diagrams and the four shin-tableau families.
 *
 * Rows are numbered from the top. A skew shape α/β removes the first β_i
 * boxes of row i; a skew-II shape α//β aligns β with the bottom rows of α
 * (row ℓ(α)-ℓ(β)+i loses its first β_i boxes). Fillings are stored row by
 * row over the unremoved boxes only.
 *
 * | family     | rows          | columns     | i is a descent when i+1 is | reading word        |
 * |------------|---------------|-------------|----------------------------|---------------------|
 * | shin       | weakly incr.  | strictly    | strictly below i           | L to R, bottom up   |
 * | row_strict | strictly incr.| weakly      | weakly above i             | L to R, top down    |
 * | flipped    | weakly decr.  | strictly    | strictly below i           | R to L, bottom up   |
 * | backward   | strictly decr.| weakly      | weakly above i             | R to L, top down    |
 *
 * Columns are read top to bottom over the boxes present in that column;
 * rows too short to reach the column are skipped.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "composition.hpp"
#include "integer.hpp"

namespace qsym {

enum class Family { shin, row_strict, flipped, backward };

inline constexpr Family all_families[] = {Family::shin, Family::row_strict, Family::flipped, Family::backward};

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::shin: return "shin";
    case Family::row_strict: return "row_strict";
    case Family::flipped: return "flipped";
    case Family::backward: return "backward";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  if (s == "shin" || s == "sh") return Family::shin;
  if (s == "row_strict" || s == "row-strict" || s == "rsh") return Family::row_strict;
  if (s == "flipped" || s == "fsh") return Family::flipped;
  if (s == "backward" || s == "bsh") return Family::backward;
  throw domain_error("unknown tableau family: " + std::string(s));
}

/// Weak rows and strict columns (shin, flipped) versus strict rows and weak columns.
inline bool strict_rows(Family f) { return f == Family::row_strict || f == Family::backward; }
/// Rows read right to left (flipped, backward).
inline bool decreasing_rows(Family f) { return f == Family::flipped || f == Family::backward; }

/// The family obtained by reversing rows and complementing entries.
inline Family flip(Family f) {
  switch (f) {
    case Family::shin: return Family::flipped;
    case Family::flipped: return Family::shin;
    case Family::row_strict: return Family::backward;
    case Family::backward: return Family::row_strict;
  }
  return f;
}

enum class ShapeKind { straight, skew, skew2 };

inline std::string_view to_string(ShapeKind k) {
  switch (k) {
    case ShapeKind::straight: return "straight";
    case ShapeKind::skew: return "skew";
    case ShapeKind::skew2: return "skew2";
  }
  return "?";
}

class Shape {
 public:
  Shape() = default;

  static Shape straight(Composition a) { return Shape(ShapeKind::straight, std::move(a), {}); }

  static Shape skew(Composition a, Composition b) {
    if (!dominated(b, a)) throw domain_error("skew shape needs inner " + to_string(b) + " contained in " + to_string(a));
    return Shape(ShapeKind::skew, std::move(a), std::move(b));
  }

  static Shape skew2(Composition a, Composition b) {
    if (!dominated(reverse(b), reverse(a)))
      throw domain_error("skew-II shape needs reversed inner " + to_string(b) + " contained in reversed " + to_string(a));
    return Shape(ShapeKind::skew2, std::move(a), std::move(b));
  }

  ShapeKind kind() const { return kind_; }
  const Composition& outer() const { return outer_; }
  const Composition& inner() const { return inner_; }

  int rows() const { return outer_.length(); }
  /// Length of row r (0-based) including removed boxes.
  int row_length(int r) const { return outer_[r]; }
  /// Number of removed boxes at the left of row r (0-based).
  int removed(int r) const { return removed_[r]; }
  int row_cells(int r) const { return outer_[r] - removed_[r]; }
  int cells() const { return outer_.size() - inner_.size(); }

  /// Nearest row above r (0-based) with an unremoved box in column c (0-based), or -1.
  int row_above(int r, int c) const {
    for (int q = r - 1; q >= 0; --q)
      if (c < outer_[q] && c >= removed_[q]) return q;
    return -1;
  }

  /**
   * @brief Geometric legality of the removed region.
   *
   * skew: no unremoved box lies above a removed box.
   * skew2: no unremoved box lies below a removed box.
   */
  bool legal() const {
    const int k = rows();
    for (int i = 0; i < k; ++i) {
      if (row_cells(i) == 0) continue;
      if (kind_ == ShapeKind::skew) {
        for (int j = i + 1; j < k; ++j)
          if (removed_[j] > removed_[i]) return false;
      } else if (kind_ == ShapeKind::skew2) {
        for (int j = 0; j < i; ++j)
          if (removed_[j] > removed_[i]) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Shape& a, const Shape& b) {
    return a.kind_ == b.kind_ && a.outer_ == b.outer_ && a.inner_ == b.inner_;
  }

 private:
  Shape(ShapeKind kind, Composition a, Composition b) : kind_(kind), outer_(std::move(a)), inner_(std::move(b)) {
    removed_.assign(outer_.length(), 0);
    if (kind_ == ShapeKind::skew) {
      for (int i = 0; i < inner_.length(); ++i) removed_[i] = inner_[i];
    } else if (kind_ == ShapeKind::skew2) {
      const int off = outer_.length() - inner_.length();
      for (int i = 0; i < inner_.length(); ++i) removed_[off + i] = inner_[i];
    }
  }

  ShapeKind kind_ = ShapeKind::straight;
  Composition outer_, inner_;
  std::vector<int> removed_;
};

inline std::string to_string(const Shape& s) {
  switch (s.kind()) {
    case ShapeKind::straight: return to_string(s.outer());
    case ShapeKind::skew: return to_string(s.outer()) + "/" + to_string(s.inner());
    case ShapeKind::skew2: return to_string(s.outer()) + "//" + to_string(s.inner());
  }
  return "?";
}

using Rows = std::vector<std::vector<int>>;

struct Tableau {
  Shape shape;
  Family family = Family::shin;
  Rows rows;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Entry counts: type(T)_i is the number of boxes labelled i.
inline WeakComposition type_of(const Tableau& t) {
  std::vector<int> counts;
  for (const auto& row : t.rows)
    for (int x : row) {
      if (x < 1) throw domain_error("tableau entries must be positive");
      if (static_cast<int>(counts.size()) < x) counts.resize(x, 0);
      ++counts[x - 1];
    }
  return WeakComposition(std::move(counts));
}

inline void check_filling_shape(const Tableau& t) {
  const Shape& s = t.shape;
  bool ok = static_cast<int>(t.rows.size()) == s.rows();
  for (int r = 0; ok && r < s.rows(); ++r) ok = static_cast<int>(t.rows[r].size()) == s.row_cells(r);
  if (!ok) throw domain_error("filling does not cover the unremoved boxes of " + to_string(s));
}

namespace detail {
inline bool row_ok(Family f, int left, int right) {
  switch (f) {
    case Family::shin: return left <= right;
    case Family::row_strict: return left < right;
    case Family::flipped: return left >= right;
    case Family::backward: return left > right;
  }
  return false;
}
inline bool column_ok(Family f, int above, int below) {
  return strict_rows(f) ? above <= below : above < below;
}
inline int entry(const Tableau& t, int r, int c) { return t.rows[r][c - t.shape.removed(r)]; }
}  // namespace detail

/// True iff the filling satisfies the family's row and column rules and the shape is legal.
inline bool validate(const Tableau& t) {
  check_filling_shape(t);
  const Shape& s = t.shape;
  if (!s.legal()) return false;
  for (int r = 0; r < s.rows(); ++r)
    for (int c = s.removed(r); c < s.row_length(r); ++c) {
      const int x = detail::entry(t, r, c);
      if (x < 1) return false;
      if (c > s.removed(r) && !detail::row_ok(t.family, detail::entry(t, r, c - 1), x)) return false;
      const int q = s.row_above(r, c);
      if (q >= 0 && !detail::column_ok(t.family, detail::entry(t, q, c), x)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// enumeration

namespace detail {

/// Backtracking over cells in row-major order; values tried in increasing order.
class Filler {
 public:
  Filler(const Shape& s, Family f, const WeakComposition& type) : shape_(s), family_(f), remaining_(type.vec()) {
    for (int r = 0; r < s.rows(); ++r) {
      rows_.emplace_back(s.row_cells(r), 0);
      for (int c = s.removed(r); c < s.row_length(r); ++c) cells_.push_back({r, c});
    }
  }

  template <class Visit>
  void run(Visit&& visit) {
    if (!shape_.legal()) return;
    step(0, visit);
  }

 private:
  template <class Visit>
  void step(std::size_t i, Visit& visit) {
    if (i == cells_.size()) {
      visit(rows_);
      return;
    }
    const auto [r, c] = cells_[i];
    const int lo = shape_.removed(r);
    const int q = shape_.row_above(r, c);
    for (std::size_t v = 0; v < remaining_.size(); ++v) {
      if (remaining_[v] == 0) continue;
      const int x = static_cast<int>(v) + 1;
      if (c > lo && !row_ok(family_, rows_[r][c - 1 - lo], x)) continue;
      if (q >= 0 && !column_ok(family_, rows_[q][c - shape_.removed(q)], x)) continue;
      --remaining_[v];
      rows_[r][c - lo] = x;
      step(i + 1, visit);
      ++remaining_[v];
    }
    rows_[r][c - lo] = 0;
  }

  const Shape& shape_;
  Family family_;
  std::vector<int> remaining_;
  Rows rows_;
  std::vector<std::pair<int, int>> cells_;
};

}  // namespace detail

/// All valid fillings of the given type, in row-major lexicographic order.
inline std::vector<Tableau> enumerate_tableaux(const Shape& s, Family f, const WeakComposition& type) {
  if (type.size() != s.cells())
    throw domain_error("type " + to_string(type) + " does not match the " + std::to_string(s.cells()) + " boxes of " +
                       to_string(s));
  std::vector<Tableau> out;
  detail::Filler(s, f, type).run([&](const Rows& rows) { out.push_back(Tableau{s, f, rows}); });
  return out;
}

inline std::vector<Tableau> enumerate_standard(const Shape& s, Family f) {
  return enumerate_tableaux(s, f, WeakComposition(std::vector<int>(s.cells(), 1)));
}

inline bool is_standard(const Tableau& t) {
  const WeakComposition ty = type_of(t);
  return std::all_of(ty.vec().begin(), ty.vec().end(), [](int x) { return x == 1; });
}

namespace detail {
/// Row index of each entry 1..n of a standard tableau.
inline std::vector<int> rows_of_entries(const Tableau& t) {
  int n = 0;
  for (const auto& row : t.rows) n += static_cast<int>(row.size());
  std::vector<int> where(n + 1, -1);
  for (int r = 0; r < static_cast<int>(t.rows.size()); ++r)
    for (int x : t.rows[r]) where[x] = r;
  return where;
}
}  // namespace detail

inline DescentSet descent_set(const Tableau& t) {
  if (!is_standard(t)) throw domain_error("descents are defined on standard tableaux");
  const auto where = detail::rows_of_entries(t);
  const int n = static_cast<int>(where.size()) - 1;
  std::vector<int> d;
  for (int i = 1; i < n; ++i) {
    const bool below = where[i + 1] > where[i];
    if (strict_rows(t.family) ? !below : below) d.push_back(i);
  }
  return DescentSet(n, std::move(d));
}

inline Composition descent_composition(const Tableau& t) { return comp_of(descent_set(t)); }

/// Relabels equal entries 1..n following the family's reading word.
inline Tableau standardize(const Tableau& t) {
  check_filling_shape(t);
  // reading word as (row, position) pairs
  std::vector<std::pair<int, int>> word;
  const int k = static_cast<int>(t.rows.size());
  const bool bottom_up = !strict_rows(t.family);
  for (int i = 0; i < k; ++i) {
    const int r = bottom_up ? k - 1 - i : i;
    const int len = static_cast<int>(t.rows[r].size());
    for (int j = 0; j < len; ++j) word.push_back({r, decreasing_rows(t.family) ? len - 1 - j : j});
  }
  std::stable_sort(word.begin(), word.end(),
                   [&](auto a, auto b) { return t.rows[a.first][a.second] < t.rows[b.first][b.second]; });
  Tableau out = t;
  int label = 0;
  for (auto [r, p] : word) out.rows[r][p] = ++label;
  return out;
}

/**
 * @brief Reverses the row order and replaces each entry i by n+1-i.
 *
 * Sends standard shin tableaux to standard flipped ones (and row-strict to
 * backward, and back). A skew shape α/β becomes the skew-II shape α^r//β^r.
 */
inline Tableau flip(const Tableau& t) {
  if (!is_standard(t)) throw domain_error("flip is defined on standard tableaux");
  const int n = t.shape.cells();
  Shape s;
  switch (t.shape.kind()) {
    case ShapeKind::straight: s = Shape::straight(reverse(t.shape.outer())); break;
    case ShapeKind::skew: s = Shape::skew2(reverse(t.shape.outer()), reverse(t.shape.inner())); break;
    case ShapeKind::skew2: s = Shape::skew(reverse(t.shape.outer()), reverse(t.shape.inner())); break;
  }
  Rows rows(t.rows.rbegin(), t.rows.rend());
  for (auto& row : rows)
    for (int& x : row) x = n + 1 - x;
  return Tableau{s, flip(t.family), std::move(rows)};
}

// ---------------------------------------------------------------------------
// counting

/// Number of family tableaux of straight shape α and type β.
inline Integer count_K(Family f, const Composition& a, const WeakComposition& b) {
  if (a.size() != b.size()) throw domain_error("count_K needs |shape| = |type|");
  Integer n = 0;
  detail::Filler(Shape::straight(a), f, b).run([&](const Rows&) { ++n; });
  return n;
}

/// Number of standard family tableaux of straight shape α with descent composition β.
inline Integer count_L(Family f, const Composition& a, const Composition& b) {
  if (a.size() != b.size()) throw domain_error("count_L needs |shape| = |descent composition|");
  Integer n = 0;
  for (const auto& t : enumerate_standard(Shape::straight(a), f))
    if (descent_composition(t) == b) ++n;
  return n;
}

namespace detail {
struct CountCache {
  std::mutex mutex;
  std::map<std::tuple<int, int, bool>, std::shared_ptr<const Matrix>> entries;
};
inline CountCache& count_cache() {
  static CountCache c;
  return c;
}
}  // namespace detail

/**
 * @brief Degree-n counting matrix, rows = shapes, columns = types, both in canonical order.
 * @param standard false for K (type counts), true for L (descent counts).
 */
inline std::shared_ptr<const Matrix> counting_matrix(Family f, int n, bool standard) {
  auto& cache = detail::count_cache();
  const auto key = std::make_tuple(static_cast<int>(f), n, standard);
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.entries.find(key); it != cache.entries.end()) return it->second;
  }
  const auto comps = enumerate_compositions(n);
  std::map<Composition, std::size_t> pos;
  for (std::size_t i = 0; i < comps.size(); ++i) pos[comps[i]] = i;
  auto m = std::make_shared<Matrix>(comps.size(), comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (standard) {
      for (const auto& t : enumerate_standard(Shape::straight(comps[i]), f)) (*m)(i, pos.at(descent_composition(t))) += 1;
    } else {
      for (std::size_t j = 0; j < comps.size(); ++j) (*m)(i, j) = count_K(f, comps[i], comps[j]);
    }
  }
  std::lock_guard lock(cache.mutex);
  return cache.entries.emplace(key, std::move(m)).first->second;
}

// ---------------------------------------------------------------------------
// shin-horizontal strips and the shin poset

/**
 * @brief All β with α ⊂ β differing by a shin-horizontal strip of r boxes.
 *
 * β_i ≥ α_i, |β| = |α| + r, and whenever row i grows every later row j has
 * β_j ≤ α_i. At most one new row can appear. Canonical order.
 */
inline std::vector<Composition> strip_extensions(const Composition& a, int r) {
  if (r < 1) throw domain_error("strip size must be positive");
  const int k = a.length();
  std::vector<Composition> out;
  std::vector<int> b(a.begin(), a.end());
  b.push_back(0);  // slot for a new row
  // cap: the smallest α_i over grown rows so far bounds every later row
  auto rec = [&](auto& self, int i, int left, int cap) -> void {
    if (i == k + 1) {
      if (left == 0) {
        std::vector<int> parts(b.begin(), b.end());
        if (parts.back() == 0) parts.pop_back();
        out.emplace_back(std::move(parts));
      }
      return;
    }
    const int base = i < k ? a[i] : 0;
    if (base > cap) return;
    for (int add = 0; add <= left; ++add) {
      const int v = base + add;
      if (v > cap) break;
      if (i == k && add == 0 && left > 0) continue;  // new row only if it absorbs the rest
      b[i] = v;
      self(self, i + 1, left - add, add > 0 ? std::min(cap, base) : cap);
    }
    b[i] = base;
  };
  rec(rec, 0, r, std::numeric_limits<int>::max());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Composition> poset_covers(const Composition& a) { return strip_extensions(a, 1); }

using Chain = std::vector<Composition>;

/// All saturated chains β = γ_0 ⋖ γ_1 ⋖ ... ⋖ γ_m = α in the shin poset.
inline std::vector<Chain> maximal_chains(const Composition& b, const Composition& a) {
  std::vector<Chain> out;
  if (!dominated(b, a)) return out;
  Chain chain{b};
  auto rec = [&](auto& self, const Composition& cur) -> void {
    if (cur == a) {
      out.push_back(chain);
      return;
    }
    for (const auto& next : poset_covers(cur)) {
      if (!dominated(next, a)) continue;
      chain.push_back(next);
      self(self, next);
      chain.pop_back();
    }
  };
  rec(rec, b);
  return out;
}

/// The standard skew shin-tableau of shape α/β whose box added at step j holds j.
inline Tableau chain_to_tableau(const Chain& chain) {
  if (chain.empty()) throw domain_error("empty chain");
  const Composition& b = chain.front();
  const Composition& a = chain.back();
  Shape s = b.empty() ? Shape::straight(a) : Shape::skew(a, b);
  Rows rows(a.length());
  for (int r = 0; r < a.length(); ++r) rows[r].assign(s.row_cells(r), 0);
  for (std::size_t j = 1; j < chain.size(); ++j) {
    const Composition& prev = chain[j - 1];
    const Composition& next = chain[j];
    int row = -1;
    for (int r = 0; r < next.length(); ++r)
      if (next.part(r + 1) != prev.part(r + 1)) row = r;
    if (row < 0 || next.size() != prev.size() + 1) throw domain_error("not a chain of covers");
    rows[row][next[row] - 1 - s.removed(row)] = static_cast<int>(j);
  }
  return Tableau{s, Family::shin, std::move(rows)};
}

}  // namespace qsym
