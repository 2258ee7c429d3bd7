#pragma once

/**
 * @file element.hpp
 * @brief Bases, sparse elements and tensor elements of NSym and QSym.
 */

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "composition.hpp"
#include "integer.hpp"
#include "tableau.hpp"

namespace qsym {

enum class Algebra { NSym, QSym };

inline std::string_view to_string(Algebra a) { return a == Algebra::NSym ? "NSym" : "QSym"; }

enum class Basis { H, E, R, sh, rsh, fsh, bsh, M, F, shStar, rshStar, fshStar, bshStar };

inline constexpr Basis nsym_bases[] = {Basis::H, Basis::E, Basis::R, Basis::sh, Basis::rsh, Basis::fsh, Basis::bsh};
inline constexpr Basis qsym_bases[] = {Basis::M,      Basis::F,       Basis::shStar,
                                       Basis::rshStar, Basis::fshStar, Basis::bshStar};

inline Algebra algebra_of(Basis b) {
  switch (b) {
    case Basis::H:
    case Basis::E:
    case Basis::R:
    case Basis::sh:
    case Basis::rsh:
    case Basis::fsh:
    case Basis::bsh: return Algebra::NSym;
    default: return Algebra::QSym;
  }
}

inline Basis canonical_basis(Algebra a) { return a == Algebra::NSym ? Basis::H : Basis::M; }

inline std::string_view token(Basis b) {
  switch (b) {
    case Basis::H: return "H";
    case Basis::E: return "E";
    case Basis::R: return "R";
    case Basis::sh: return "sh";
    case Basis::rsh: return "rsh";
    case Basis::fsh: return "fsh";
    case Basis::bsh: return "bsh";
    case Basis::M: return "M";
    case Basis::F: return "F";
    case Basis::shStar: return "sh*";
    case Basis::rshStar: return "rsh*";
    case Basis::fshStar: return "fsh*";
    case Basis::bshStar: return "bsh*";
  }
  return "?";
}

inline std::optional<Basis> try_parse_basis(std::string_view s) {
  for (Basis b : nsym_bases)
    if (token(b) == s) return b;
  for (Basis b : qsym_bases)
    if (token(b) == s) return b;
  if (s == "shStar") return Basis::shStar;
  if (s == "rshStar") return Basis::rshStar;
  if (s == "fshStar") return Basis::fshStar;
  if (s == "bshStar") return Basis::bshStar;
  return std::nullopt;
}

/// Unknown basis token; reported as a usage error by the command line.
class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Basis parse_basis(std::string_view s) {
  if (auto b = try_parse_basis(s)) return *b;
  throw parse_error("unknown basis token: " + std::string(s));
}

/// The NSym basis of a Schur-like family and its dual QSym basis.
inline Basis nsym_basis(Family f) {
  switch (f) {
    case Family::shin: return Basis::sh;
    case Family::row_strict: return Basis::rsh;
    case Family::flipped: return Basis::fsh;
    case Family::backward: return Basis::bsh;
  }
  return Basis::sh;
}

inline Basis qsym_basis(Family f) {
  switch (f) {
    case Family::shin: return Basis::shStar;
    case Family::row_strict: return Basis::rshStar;
    case Family::flipped: return Basis::fshStar;
    case Family::backward: return Basis::bshStar;
  }
  return Basis::shStar;
}

inline std::optional<Family> family_of(Basis b) {
  switch (b) {
    case Basis::sh:
    case Basis::shStar: return Family::shin;
    case Basis::rsh:
    case Basis::rshStar: return Family::row_strict;
    case Basis::fsh:
    case Basis::fshStar: return Family::flipped;
    case Basis::bsh:
    case Basis::bshStar: return Family::backward;
    default: return std::nullopt;
  }
}

struct Term {
  Basis basis;
  Composition index;

  friend bool operator==(const Term&, const Term&) = default;
  /// Canonical term order: by degree, then basis, then composition.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (auto c = a.index.size() <=> b.index.size(); c != 0) return c;
    if (auto c = a.basis <=> b.basis; c != 0) return c;
    return a.index <=> b.index;
  }
};

/// A finite integer combination of basis elements of one algebra.
class Element {
 public:
  using Map = std::map<Term, Integer>;

  explicit Element(Algebra a = Algebra::NSym) : algebra_(a) {}
  Element(Basis b, Composition index, Integer coeff = 1) : algebra_(algebra_of(b)) {
    add(Term{b, std::move(index)}, coeff);
  }

  static Element zero(Algebra a) { return Element(a); }
  static Element one(Algebra a) { return Element(canonical_basis(a), {}); }

  Algebra algebra() const { return algebra_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Integer(0) : it->second;
  }
  Integer coefficient(Basis b, const Composition& c) const { return coefficient(Term{b, c}); }

  void add(const Term& t, const Integer& c) {
    if (algebra_of(t.basis) != algebra_)
      throw domain_error("term " + std::string(token(t.basis)) + " does not belong to " + std::string(to_string(algebra_)));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// The single basis used by every term, if there is one.
  std::optional<Basis> uniform_basis() const {
    std::optional<Basis> b;
    for (const auto& [t, c] : terms_) {
      if (b && *b != t.basis) return std::nullopt;
      b = t.basis;
    }
    return b;
  }

  Element& operator+=(const Element& o) {
    check_same(o);
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_same(o);
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  Element& operator*=(const Integer& k) {
    if (k.is_zero()) terms_.clear();
    for (auto& [t, c] : terms_) c *= k;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= -1; }
  friend Element operator*(const Integer& k, Element a) { return a *= k; }

  /// Structural equality; use equal() in algebra.hpp to compare across bases.
  friend bool operator==(const Element&, const Element&) = default;

 private:
  void check_same(const Element& o) const {
    if (o.algebra_ != algebra_) throw domain_error("cannot combine NSym and QSym elements");
  }

  Algebra algebra_;
  Map terms_;
};

/// A finite integer combination of tensors of basis elements of one algebra.
class TensorElement {
 public:
  using Key = std::pair<Term, Term>;
  using Map = std::map<Key, Integer>;

  explicit TensorElement(Algebra a = Algebra::NSym) : algebra_(a) {}

  Algebra algebra() const { return algebra_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Term& l, const Term& r, const Integer& c) {
    if (algebra_of(l.basis) != algebra_ || algebra_of(r.basis) != algebra_)
      throw domain_error("tensor legs must lie in " + std::string(to_string(algebra_)));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{l, r}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Integer coefficient(const Term& l, const Term& r) const {
    auto it = terms_.find(Key{l, r});
    return it == terms_.end() ? Integer(0) : it->second;
  }

  TensorElement& operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
  }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  Algebra algebra_;
  Map terms_;
};

/// x ⊗ y expanded bilinearly.
inline TensorElement tensor(const Element& x, const Element& y) {
  if (x.algebra() != y.algebra()) throw domain_error("tensor legs must lie in the same algebra");
  TensorElement t(x.algebra());
  for (const auto& [a, c] : x.terms())
    for (const auto& [b, d] : y.terms()) t.add(a, b, c * d);
  return t;
}

}  // namespace qsym
