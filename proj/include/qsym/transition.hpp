#pragma once

/**
 * @file transition.hpp
 * @brief Degree-graded transition matrices and basis conversion.
 *
 * Every basis b is tied to the canonical basis C of its algebra (H or M) by
 * a pair of matrices per degree n, indexed by enumerate_compositions(n):
 *   b_α = Σ_β to_canonical(α, β) C_β,   C_β = Σ_α from_canonical(β, α) b_α.
 * A basis registers whichever direction is natural; the other is its integral
 * inverse. Pieces are built lazily and cached.
 */

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "composition.hpp"
#include "element.hpp"
#include "integer.hpp"

namespace qsym {

struct GradedPiece {
  Basis basis;
  int degree;
  std::vector<Composition> index;
  std::map<Composition, std::size_t> position;
  Matrix to_canonical;
  Matrix from_canonical;
};

/// How a basis is defined against the canonical basis in one degree.
struct BasisDefinition {
  enum class Direction { to_canonical, from_canonical } direction;
  std::function<Matrix(int)> build;
};

class TransitionRegistry {
 public:
  static TransitionRegistry& instance() {
    static TransitionRegistry r;
    return r;
  }

  /// Installs (or replaces) a basis definition. Already cached pieces of that basis are dropped.
  void define(Basis b, BasisDefinition def) {
    std::lock_guard lock(mutex_);
    definitions_[b] = std::move(def);
    for (auto it = cache_.begin(); it != cache_.end();)
      it = it->first.first == b ? cache_.erase(it) : std::next(it);
  }

  bool defined(Basis b) const {
    std::lock_guard lock(mutex_);
    return b == Basis::H || b == Basis::M || definitions_.count(b) > 0;
  }

  std::shared_ptr<const GradedPiece> piece(Basis b, int n) {
    const auto key = std::make_pair(b, n);
    BasisDefinition def;
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
      if (b != Basis::H && b != Basis::M) {
        auto d = definitions_.find(b);
        if (d == definitions_.end())
          throw domain_error("basis " + std::string(token(b)) + " has no registered transition matrices");
        def = d->second;
      }
    }
    // Built outside the lock; a concurrent duplicate build yields the same matrices.
    auto p = std::make_shared<GradedPiece>();
    p->basis = b;
    p->degree = n;
    p->index = enumerate_compositions(n);
    for (std::size_t i = 0; i < p->index.size(); ++i) p->position.emplace(p->index[i], i);
    if (!def.build) {
      p->to_canonical = p->from_canonical = Matrix::identity(p->index.size());
    } else if (def.direction == BasisDefinition::Direction::to_canonical) {
      p->to_canonical = def.build(n);
      p->from_canonical = invert_integral(p->to_canonical);
    } else {
      p->from_canonical = def.build(n);
      p->to_canonical = invert_integral(p->from_canonical);
    }
    std::lock_guard lock(mutex_);
    return cache_.emplace(key, std::move(p)).first->second;
  }

 private:
  TransitionRegistry() {
    using D = BasisDefinition::Direction;
    // E_α = Σ_{β refines α} (-1)^{|α|-ℓ(β)} H_β
    definitions_[Basis::E] = {D::to_canonical, [](int n) {
                                return refinement_matrix(n, [n](const Composition& a, const Composition& b) -> int {
                                  if (!refines(b, a)) return 0;
                                  return (n - b.length()) % 2 ? -1 : 1;
                                });
                              }};
    // R_α = Σ_{α refines β} (-1)^{ℓ(α)-ℓ(β)} H_β
    definitions_[Basis::R] = {D::to_canonical, [](int n) {
                                return refinement_matrix(n, [](const Composition& a, const Composition& b) -> int {
                                  if (!refines(a, b)) return 0;
                                  return (a.length() - b.length()) % 2 ? -1 : 1;
                                });
                              }};
    // F_α = Σ_{β refines α} M_β
    definitions_[Basis::F] = {D::to_canonical, [](int n) {
                                return refinement_matrix(n, [](const Composition& a, const Composition& b) -> int {
                                  return refines(b, a) ? 1 : 0;
                                });
                              }};
  }

  template <class Entry>
  static Matrix refinement_matrix(int n, Entry entry) {
    const auto comps = enumerate_compositions(n);
    Matrix m(comps.size(), comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (std::size_t j = 0; j < comps.size(); ++j) m(i, j) = entry(comps[i], comps[j]);
    return m;
  }

  mutable std::mutex mutex_;
  std::map<Basis, BasisDefinition> definitions_;
  std::map<std::pair<Basis, int>, std::shared_ptr<const GradedPiece>> cache_;
};

inline std::shared_ptr<const GradedPiece> graded_piece(Basis b, int n) {
  return TransitionRegistry::instance().piece(b, n);
}

/// Degree-n matrix T with from_α = Σ_β T(α, β) to_β.
inline Matrix transition_matrix(Basis from, Basis to, int n) {
  if (algebra_of(from) != algebra_of(to)) throw domain_error("transition between different algebras");
  auto a = graded_piece(from, n);
  auto b = graded_piece(to, n);
  return a->to_canonical * b->from_canonical;
}

/// The same element written in the canonical basis (H or M).
inline Element to_canonical(const Element& x) {
  const Basis c = canonical_basis(x.algebra());
  Element out(x.algebra());
  for (const auto& [t, coeff] : x.terms()) {
    if (t.basis == c) {
      out.add(t, coeff);
      continue;
    }
    auto p = graded_piece(t.basis, t.index.size());
    const std::size_t row = p->position.at(t.index);
    for (std::size_t j = 0; j < p->index.size(); ++j) {
      const Integer& v = p->to_canonical(row, j);
      if (!v.is_zero()) out.add(Term{c, p->index[j]}, coeff * v);
    }
  }
  return out;
}

/// The same element written in basis `target`.
inline Element convert(const Element& x, Basis target) {
  if (algebra_of(target) != x.algebra())
    throw domain_error("cannot convert a " + std::string(to_string(x.algebra())) + " element to basis " +
                       std::string(token(target)));
  if (x.uniform_basis() == target) return x;
  Element canon = to_canonical(x);
  if (target == canonical_basis(x.algebra())) return canon;
  // dense accumulation per degree
  std::map<int, std::vector<Integer>> acc;
  for (const auto& [t, coeff] : canon.terms()) {
    const int n = t.index.size();
    auto p = graded_piece(target, n);
    auto& v = acc[n];
    if (v.empty()) v.assign(p->index.size(), 0);
    const std::size_t row = p->position.at(t.index);
    for (std::size_t j = 0; j < p->index.size(); ++j) {
      const Integer& m = p->from_canonical(row, j);
      if (!m.is_zero()) v[j] += coeff * m;
    }
  }
  Element out(x.algebra());
  for (const auto& [n, v] : acc) {
    auto p = graded_piece(target, n);
    for (std::size_t j = 0; j < v.size(); ++j) out.add(Term{target, p->index[j]}, v[j]);
  }
  return out;
}

/// Equality as algebra elements, independent of the bases used to write them.
inline bool equal(const Element& x, const Element& y) {
  return x.algebra() == y.algebra() && to_canonical(x) == to_canonical(y);
}

/// Converts each tensor leg independently.
inline TensorElement convert(const TensorElement& t, Basis left, Basis right) {
  TensorElement out(t.algebra());
  for (const auto& [k, c] : t.terms()) {
    Element l = convert(Element(k.first.basis, k.first.index), left);
    Element r = convert(Element(k.second.basis, k.second.index), right);
    for (const auto& [a, x] : l.terms())
      for (const auto& [b, y] : r.terms()) out.add(a, b, c * x * y);
  }
  return out;
}

}  // namespace qsym
