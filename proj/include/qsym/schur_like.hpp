#pragma once

/**
 * @file schur_like.hpp
 * @brief The shin, row-strict, flipped and backward basis pairs and their constructions.
 *
 * For a family X the NSym basis is fixed by H_β = Σ_α K^X(α,β) X_α and the
 * QSym basis by X*_α = Σ_β K^X(α,β) M_β, where K^X counts family tableaux of
 * shape α and type β. The two are dual under the H/M pairing.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "composition.hpp"
#include "element.hpp"
#include "tableau.hpp"
#include "transition.hpp"

namespace qsym {

/// Installs transition matrices for sh, rsh, fsh, bsh and their duals. Idempotent.
inline void register_bases() {
  using D = BasisDefinition::Direction;
  auto& reg = TransitionRegistry::instance();
  for (Family f : all_families) {
    if (reg.defined(nsym_basis(f)) && reg.defined(qsym_basis(f))) continue;
    reg.define(nsym_basis(f), {D::from_canonical, [f](int n) { return counting_matrix(f, n, false)->transposed(); }});
    reg.define(qsym_basis(f), {D::to_canonical, [f](int n) { return *counting_matrix(f, n, false); }});
  }
}

namespace detail {
inline const bool schur_like_registered = (register_bases(), true);
}

inline Element nsym(Family f, const Composition& a) { return Element(nsym_basis(f), a); }
inline Element qsym(Family f, const Composition& a) { return Element(qsym_basis(f), a); }

// ---------------------------------------------------------------------------
// Pieri rules

enum class Side { left, right };
enum class Generator { H, E };

/**
 * @brief Multiplication of X_α by the generator of degree r on the sanctioned side.
 *
 * sh: X_α H_r; rsh: X_α E_r; fsh: H_r X_α; bsh: E_r X_α. The flipped and
 * backward rules run the strip condition on reversed indices.
 */
inline Element pieri(Family f, const Composition& a, int r, Side side, Generator gen) {
  const bool strict = strict_rows(f);
  const bool flipped = decreasing_rows(f);
  if ((gen == Generator::E) != strict || (side == Side::left) != flipped)
    throw domain_error("no Pieri rule for family " + std::string(to_string(f)) + " on this side with this generator");
  Element out(Algebra::NSym);
  const Basis b = nsym_basis(f);
  if (flipped) {
    for (const auto& g : strip_extensions(reverse(a), r)) out.add(Term{b, reverse(g)}, 1);
  } else {
    for (const auto& g : strip_extensions(a, r)) out.add(Term{b, g}, 1);
  }
  return out;
}

/// The sanctioned side and generator of a family's Pieri rule.
inline std::pair<Side, Generator> pieri_convention(Family f) {
  return {decreasing_rows(f) ? Side::left : Side::right, strict_rows(f) ? Generator::E : Generator::H};
}

// ---------------------------------------------------------------------------
// creation operator

/// ℶ_m(H_α) = H_{(m,α)} - H_{(α_1,m,α_2,...)}, ℶ_m(1) = H_m. Result in the basis of x.
inline Element beth(int m, const Element& x) {
  if (m < 1) throw domain_error("beth needs m >= 1");
  if (x.algebra() != Algebra::NSym) throw domain_error("beth acts on NSym");
  Element out(Algebra::NSym);
  const auto src = to_canonical(x);
  for (const auto& [t, c] : src.terms()) {
    out.add(Term{Basis::H, concat(Composition{m}, t.index)}, c);
    if (t.index.empty()) continue;
    std::vector<int> p = t.index.vec();
    p.insert(p.begin() + 1, m);
    out.add(Term{Basis::H, Composition(std::move(p))}, -c);
  }
  return convert(out, output_basis(x));
}

// ---------------------------------------------------------------------------
// Jacobi-Trudi

/// Permutations σ of {1..k} (one-line, 1-based) with σ(i) ≥ i-1, in lexicographic order.
inline std::vector<std::vector<int>> restricted_permutations(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(k);
  std::vector<bool> used(k + 1, false);
  auto rec = [&](auto& self, int i) -> void {
    if (i == k) {
      out.push_back(s);
      return;
    }
    for (int v = std::max(1, i); v <= k; ++v) {  // position i+1 needs v ≥ i
      if (used[v]) continue;
      used[v] = true;
      s[i] = v;
      self(self, i + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
  return out;
}

inline int permutation_sign(const std::vector<int>& s) {
  int inv = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

/**
 * @brief Determinantal expansion of X_β in H (sh, fsh) or E (rsh, bsh).
 *
 * sh/rsh need β strictly increasing and sum over σ(i) ≥ i-1. fsh/bsh need β
 * strictly decreasing and sum over the reversed set τ(i) ≤ i+1.
 */
inline Element jacobi_trudi(Family f, const Composition& b) {
  const bool flipped = decreasing_rows(f);
  const bool ok = flipped ? is_strictly_decreasing(b) : is_strictly_increasing(b);
  if (!ok)
    throw domain_error("Jacobi-Trudi expansion of " + std::string(token(nsym_basis(f))) + to_string(b) + " needs a strictly " +
                       (flipped ? "decreasing" : "increasing") +
                       " index; no formula of this shape exists in general (sh[2,2,4] has no such determinant)");
  const Basis gen = strict_rows(f) ? Basis::E : Basis::H;
  const int k = b.length();
  Element out(Algebra::NSym);
  for (const auto& s : restricted_permutations(k)) {
    std::vector<int> parts(k);
    for (int i = 0; i < k; ++i) {
      if (flipped) {
        // τ(i) = k+1-σ(k+1-i)
        parts[i] = b[k - s[k - 1 - i]];
      } else {
        parts[i] = b[s[i] - 1];
      }
    }
    out.add(Term{gen, Composition(std::move(parts))}, permutation_sign(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// ribbon multiplication

/**
 * @brief X_α R_β (sh, rsh) or R_β X_α (fsh, bsh) via standard skew tableaux.
 *
 * Sums X_γ over standard family tableaux of shape γ/α (skew-II γ//α for the
 * left-multiplying families) with descent composition β.
 */
inline Element ribbon_multiply(Family f, const Composition& a, const Composition& b) {
  const bool left = decreasing_rows(f);
  const Basis basis = nsym_basis(f);
  Element out(Algebra::NSym);
  for (const auto& g : enumerate_compositions(a.size() + b.size())) {
    if (left ? !dominated(reverse(a), reverse(g)) : !dominated(a, g)) continue;
    const Shape s = a.empty() ? Shape::straight(g) : left ? Shape::skew2(g, a) : Shape::skew(g, a);
    for (const auto& t : enumerate_standard(s, f))
      if (descent_composition(t) == b) out.add(Term{basis, g}, 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// skew functions, structure coefficients, coproduct formulas

/**
 * @brief X*_{α/β} = (X_β)^⊥ X*_α, in M.
 * @param warning set when β is not contained in α.
 */
inline Element skew(Family f, const Composition& a, const Composition& b, std::string* warning = nullptr) {
  if (warning && !dominated(b, a)) *warning = "inner " + to_string(b) + " is not contained in outer " + to_string(a);
  return perp(nsym(f, b), qsym(f, a));
}

/// X*_{α//β} = (X_β)^⊥̃ X*_α (right perp), in M.
inline Element skew_ii(Family f, const Composition& a, const Composition& b) { return rperp(nsym(f, b), qsym(f, a)); }

struct StructureCoefficient {
  Composition alpha, beta, gamma;
  Integer value;
};

/// Nonzero coefficients of X_α in X_β X_γ, in canonical order of α.
inline std::vector<StructureCoefficient> structure_coeffs(Family f, const Composition& b, const Composition& g) {
  std::vector<StructureCoefficient> out;
  const auto src = multiply(nsym(f, b), nsym(f, g));
  for (const auto& [t, c] : src.terms()) out.push_back({t.index, b, g, c});
  return out;
}

enum class CoproductVariant { skew, skew2 };

struct CoproductFormula {
  TensorElement value;
  /// Indices β outside the containment bound that still contributed a nonzero term.
  std::vector<Composition> outside_bound;
};

/**
 * @brief Δ X*_α assembled from skew functions.
 *
 * skew: Σ_β X*_β ⊗ X*_{α/β};  skew2: Σ_β X*_{α//β} ⊗ X*_β.
 * β runs over all compositions of size ≤ |α|. Skew legs are written in M.
 */
inline CoproductFormula coproduct_formula(Family f, const Composition& a, CoproductVariant v) {
  CoproductFormula out{TensorElement(Algebra::QSym), {}};
  for (const auto& b : compositions_up_to(a.size())) {
    const bool inside = v == CoproductVariant::skew ? dominated(b, a) : dominated(reverse(b), reverse(a));
    Element sk = v == CoproductVariant::skew ? skew(f, a, b) : skew_ii(f, a, b);
    if (sk.is_zero()) continue;
    if (!inside) out.outside_bound.push_back(b);
    const Element xb = qsym(f, b);
    out.value += v == CoproductVariant::skew ? tensor(xb, sk) : tensor(sk, xb);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sym inside QSym

enum class SymBasis { m, h, s };

inline std::string_view to_string(SymBasis b) {
  switch (b) {
    case SymBasis::m: return "m";
    case SymBasis::h: return "h";
    case SymBasis::s: return "s";
  }
  return "?";
}

struct SymElement {
  SymBasis basis = SymBasis::s;
  std::map<Partition, Integer> terms;

  void add(const Partition& p, const Integer& c) {
    if (c.is_zero()) return;
    auto [it, ins] = terms.try_emplace(p, c);
    if (!ins) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  Integer coefficient(const Partition& p) const {
    auto it = terms.find(p);
    return it == terms.end() ? Integer(0) : it->second;
  }
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const SymElement&, const SymElement&) = default;
};

/// Number of semistandard Young tableaux of shape λ and content μ.
inline Integer kostka(const Partition& lambda, const Composition& mu) { return count_K(Family::shin, lambda, mu); }

/// m_λ = Σ_{sort α = λ} M_α.
inline Element monomial_symmetric(const Partition& lambda) {
  Element out(Algebra::QSym);
  for (const auto& a : enumerate_compositions(lambda.size()))
    if (sort_to_partition(a) == lambda) out.add(Term{Basis::M, a}, 1);
  return out;
}

inline Element to_qsym(const SymElement& x) {
  Element out(Algebra::QSym);
  for (const auto& [p, c] : x.terms) {
    const auto parts = enumerate_partitions(p.size());
    switch (x.basis) {
      case SymBasis::m: out += c * monomial_symmetric(p); break;
      case SymBasis::s:
        for (const auto& mu : parts) {
          Integer k = kostka(p, mu);
          if (!k.is_zero()) out += (c * k) * monomial_symmetric(mu);
        }
        break;
      case SymBasis::h:
        // h_μ = Σ_λ K_{λμ} s_λ
        for (const auto& lambda : parts) {
          Integer k = kostka(lambda, p);
          if (k.is_zero()) continue;
          SymElement s{SymBasis::s, {}};
          s.add(lambda, c * k);
          out += to_qsym(s);
        }
        break;
    }
  }
  return out;
}

/**
 * @brief The s-expansion of f if f is symmetric, else nullopt.
 *
 * Symmetric means the M-coefficients are constant on rearrangement classes.
 * The Schur expansion is peeled off from the lexicographically largest
 * partition down.
 */
inline std::optional<SymElement> schur_detect(const Element& f) {
  if (f.algebra() != Algebra::QSym) throw domain_error("schur_detect takes a QSym element");
  Element m = to_canonical(f);
  std::map<int, bool> degrees;
  for (const auto& [t, c] : m.terms()) degrees[t.index.size()] = true;
  for (const auto& [n, _] : degrees)
    for (const auto& a : enumerate_compositions(n))
      if (m.coefficient(Term{Basis::M, a}) != m.coefficient(Term{Basis::M, sort_to_partition(a)})) return std::nullopt;
  SymElement out{SymBasis::s, {}};
  for (const auto& [n, _] : degrees) {
    auto parts = enumerate_partitions(n);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      Integer c = m.coefficient(Term{Basis::M, *it});
      if (c.is_zero()) continue;
      out.add(*it, c);
      SymElement s{SymBasis::s, {}};
      s.add(*it, c);
      m -= to_qsym(s);
    }
  }
  if (!m.is_zero()) throw domain_error("internal error: Schur expansion left a remainder");
  return out;
}

/// Rewrites a symmetric function in the Schur basis.
inline SymElement to_schur(const SymElement& x) {
  if (x.basis == SymBasis::s) return x;
  if (x.basis == SymBasis::h) {
    SymElement out{SymBasis::s, {}};
    for (const auto& [mu, c] : x.terms)
      for (const auto& lambda : enumerate_partitions(mu.size())) out.add(lambda, c * kostka(lambda, mu));
    return out;
  }
  return *schur_detect(to_qsym(x));
}

inline SymElement sym_multiply(const SymElement& x, const SymElement& y) {
  return *schur_detect(multiply(to_qsym(x), to_qsym(y)));
}

/// The forgetful map χ(H_α) = h_{sort α}.
inline SymElement chi(const Element& x) {
  if (x.algebra() != Algebra::NSym) throw domain_error("chi takes an NSym element");
  SymElement out{SymBasis::h, {}};
  const auto src = to_canonical(x);
  for (const auto& [t, c] : src.terms()) out.add(sort_to_partition(t.index), c);
  return out;
}

}  // namespace qsym
