#pragma once

/**
 * @file algebra.hpp
 * @brief Products, coproducts, the pairing, perp operators, involutions and the antipode.
 *
 * NSym products are computed in H (concatenation), QSym products in M
 * (quasi-shuffle). Coproducts use Δ(H_n) = Σ H_i ⊗ H_{n-i} and
 * deconcatenation of M. Results come back in the basis of the first argument
 * when that argument is written in a single basis.
 */

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "composition.hpp"
#include "element.hpp"
#include "transition.hpp"

namespace qsym {

/// The basis results are reported in: the input's basis if uniform, else canonical.
inline Basis output_basis(const Element& x) { return x.uniform_basis().value_or(canonical_basis(x.algebra())); }

namespace detail {

inline void quasi_shuffle_rec(std::span<const int> a, std::span<const int> b, std::vector<int>& prefix,
                              std::map<Composition, Integer>& out) {
  if (a.empty() || b.empty()) {
    std::vector<int> p = prefix;
    p.insert(p.end(), a.begin(), a.end());
    p.insert(p.end(), b.begin(), b.end());
    out[Composition(std::move(p))] += 1;
    return;
  }
  prefix.push_back(a[0]);
  quasi_shuffle_rec(a.subspan(1), b, prefix, out);
  prefix.back() = b[0];
  quasi_shuffle_rec(a, b.subspan(1), prefix, out);
  prefix.back() = a[0] + b[0];
  quasi_shuffle_rec(a.subspan(1), b.subspan(1), prefix, out);
  prefix.pop_back();
}

}  // namespace detail

/// M_α M_β as a multiset of compositions (overlapping shuffles).
inline std::map<Composition, Integer> quasi_shuffle(const Composition& a, const Composition& b) {
  std::map<Composition, Integer> out;
  std::vector<int> prefix;
  detail::quasi_shuffle_rec(a.parts(), b.parts(), prefix, out);
  return out;
}

inline Element multiply(const Element& x, const Element& y) {
  if (x.algebra() != y.algebra()) throw domain_error("cannot multiply NSym and QSym elements");
  const Algebra alg = x.algebra();
  const Basis c = canonical_basis(alg);
  const Element cx = to_canonical(x), cy = to_canonical(y);
  Element out(alg);
  for (const auto& [s, a] : cx.terms())
    for (const auto& [t, b] : cy.terms()) {
      if (alg == Algebra::NSym) {
        out.add(Term{c, concat(s.index, t.index)}, a * b);
      } else {
        for (const auto& [g, m] : quasi_shuffle(s.index, t.index)) out.add(Term{c, g}, a * b * m);
      }
    }
  return convert(out, output_basis(x));
}

/// Product of a list of elements, left to right; the unit for an empty list.
inline Element product(const std::vector<Element>& xs, Algebra a) {
  Element acc = Element::one(a);
  for (const auto& x : xs) acc = multiply(acc, x);
  return acc;
}

/// Coefficient of the empty composition in the canonical basis.
inline Integer counit(const Element& x) {
  return to_canonical(x).coefficient(Term{canonical_basis(x.algebra()), {}});
}

/// Δx in the canonical basis on both legs.
inline TensorElement coproduct(const Element& x) {
  const Algebra alg = x.algebra();
  const Basis c = canonical_basis(alg);
  TensorElement out(alg);
  const auto src = to_canonical(x);
  for (const auto& [t, coeff] : src.terms()) {
    const auto& parts = t.index.vec();
    if (alg == Algebra::QSym) {
      for (std::size_t i = 0; i <= parts.size(); ++i) {
        Composition l(std::vector<int>(parts.begin(), parts.begin() + i));
        Composition r(std::vector<int>(parts.begin() + i, parts.end()));
        out.add(Term{c, l}, Term{c, r}, coeff);
      }
      continue;
    }
    // Δ(H_α) = Π_i Σ_{a+b=α_i} H_a ⊗ H_b
    std::vector<int> left, right;
    auto rec = [&](auto& self, std::size_t i) -> void {
      if (i == parts.size()) {
        out.add(Term{c, flatten(WeakComposition(left))}, Term{c, flatten(WeakComposition(right))}, coeff);
        return;
      }
      for (int a = 0; a <= parts[i]; ++a) {
        left.push_back(a);
        right.push_back(parts[i] - a);
        self(self, i + 1);
        left.pop_back();
        right.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

/// ⟨h, f⟩ with ⟨H_α, M_β⟩ = δ_{α,β}.
inline Integer pair(const Element& h, const Element& f) {
  if (h.algebra() != Algebra::NSym || f.algebra() != Algebra::QSym)
    throw domain_error("pairing takes an NSym element and a QSym element");
  const Element ch = to_canonical(h), cf = to_canonical(f);
  Integer s = 0;
  for (const auto& [t, a] : ch.terms()) {
    Integer b = cf.coefficient(Term{Basis::M, t.index});
    if (!b.is_zero()) s += a * b;
  }
  return s;
}

namespace detail {
inline Element strip(const Element& h, const Element& f, bool prefix) {
  if (h.algebra() != Algebra::NSym || f.algebra() != Algebra::QSym)
    throw domain_error("perp operators take an NSym element and a QSym element");
  const Element ch = to_canonical(h), cf = to_canonical(f);
  Element out(Algebra::QSym);
  for (const auto& [s, a] : ch.terms())
    for (const auto& [t, b] : cf.terms()) {
      const auto& x = s.index.vec();
      const auto& y = t.index.vec();
      if (x.size() > y.size()) continue;
      if (prefix) {
        if (!std::equal(x.begin(), x.end(), y.begin())) continue;
        out.add(Term{Basis::M, Composition(std::vector<int>(y.begin() + x.size(), y.end()))}, a * b);
      } else {
        if (!std::equal(x.begin(), x.end(), y.end() - x.size())) continue;
        out.add(Term{Basis::M, Composition(std::vector<int>(y.begin(), y.end() - x.size()))}, a * b);
      }
    }
  return out;
}
}  // namespace detail

/// h^⊥(f) = Σ_γ ⟨h H_γ, f⟩ M_γ.
inline Element perp(const Element& h, const Element& f) { return detail::strip(h, f, true); }

/// Right perp: Σ_γ ⟨H_γ h, f⟩ M_γ.
inline Element rperp(const Element& h, const Element& f) { return detail::strip(h, f, false); }

// ---------------------------------------------------------------------------
// involutions and antipode

enum class Involution { psi, rho, omega };

inline std::string_view to_string(Involution w) {
  switch (w) {
    case Involution::psi: return "psi";
    case Involution::rho: return "rho";
    case Involution::omega: return "omega";
  }
  return "?";
}

inline Involution parse_involution(std::string_view s) {
  if (s == "psi") return Involution::psi;
  if (s == "rho") return Involution::rho;
  if (s == "omega") return Involution::omega;
  throw parse_error("unknown involution: " + std::string(s) + " (expected psi, rho or omega)");
}

inline Composition apply_index_map(Involution w, const Composition& a) {
  switch (w) {
    case Involution::psi: return complement(a);
    case Involution::rho: return reverse(a);
    case Involution::omega: return transpose(a);
  }
  return a;
}

/// Basis in which the image of a b-element is reported.
inline Basis image_basis(Involution w, Basis b) {
  auto fam = family_of(b);
  if (fam) {
    Family g = *fam;
    const bool swap_strict = w == Involution::psi || w == Involution::omega;
    const bool swap_flip = w == Involution::rho || w == Involution::omega;
    if (swap_strict) {
      static constexpr Family toggle[] = {Family::row_strict, Family::shin, Family::backward, Family::flipped};
      g = toggle[static_cast<int>(g)];
    }
    if (swap_flip) g = flip(g);
    return algebra_of(b) == Algebra::NSym ? nsym_basis(g) : qsym_basis(g);
  }
  if (b == Basis::H && w != Involution::rho) return Basis::E;
  if (b == Basis::E && w != Involution::rho) return Basis::H;
  return b;
}

/// ψ, ρ or ω: index maps on R (NSym) or F (QSym), extended linearly.
inline Element involution(Involution w, const Element& x) {
  const Basis ribbon = x.algebra() == Algebra::NSym ? Basis::R : Basis::F;
  Element r = convert(x, ribbon);
  Element out(x.algebra());
  for (const auto& [t, c] : r.terms()) out.add(Term{ribbon, apply_index_map(w, t.index)}, c);
  return convert(out, image_basis(w, output_basis(x)));
}

/// S(R_α) = (-1)^{|α|} R_{α^t}, and the same on F.
inline Element antipode(const Element& x) {
  const Basis ribbon = x.algebra() == Algebra::NSym ? Basis::R : Basis::F;
  Element r = convert(x, ribbon);
  Element out(x.algebra());
  for (const auto& [t, c] : r.terms()) out.add(Term{ribbon, transpose(t.index)}, t.index.size() % 2 ? -c : c);
  return convert(out, output_basis(x));
}

/// Σ S(x_(1)) x_(2) written in the canonical basis.
inline Element antipode_convolution(const Element& x) {
  Element out(x.algebra());
  const auto src = coproduct(x);
  for (const auto& [k, c] : src.terms()) {
    Element l = antipode(Element(k.first.basis, k.first.index));
    Element r(k.second.basis, k.second.index);
    out += c * multiply(l, r);
  }
  return to_canonical(out);
}

}  // namespace qsym
