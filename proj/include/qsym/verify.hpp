#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive identity sweeps over small degrees.
 *
 * Each identity is a named suite that checks every case up to a degree
 * bound and records failures with a reproducer. Suites are deterministic
 * except "adjunction", which samples random elements from a seeded engine.
 */

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "composition.hpp"
#include "element.hpp"
#include "io.hpp"
#include "schur_like.hpp"
#include "tableau.hpp"
#include "transition.hpp"

namespace qsym {

struct VerifyFailure {
  std::string reproducer;
  std::string detail;
};

struct VerifyReport {
  std::string name;
  std::string statement;
  int min_degree = 0;
  int max_degree = 0;
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::vector<VerifyFailure> failures;  // first few only
  std::vector<std::string> notes;
  double seconds = 0;

  bool ok() const { return failure_count == 0; }
};

/// Collects case outcomes for one report.
class Sweep {
 public:
  explicit Sweep(VerifyReport& r) : r_(r) {}

  bool check(bool ok, const std::string& reproducer, const std::string& detail = {}) {
    ++r_.cases;
    if (!ok) {
      ++r_.failure_count;
      if (r_.failures.size() < kMaxRecorded) r_.failures.push_back({reproducer, detail});
    }
    return ok;
  }

  bool check_equal(const Element& got, const Element& want, const std::string& reproducer) {
    const bool ok = equal(got, want);
    return check(ok, reproducer, ok ? "" : "got " + to_text(got) + ", expected " + to_text(want));
  }

  void note(std::string s) { r_.notes.push_back(std::move(s)); }

 private:
  static constexpr std::size_t kMaxRecorded = 10;
  VerifyReport& r_;
};

// ---------------------------------------------------------------------------
// independent routes used by the suites

/**
 * @brief sh_α in H by Pieri elimination, never touching the K-matrix.
 *
 * sh_α = sh_{α'} H_{α_k} - Σ sh_β over the other strip extensions β of α' by
 * α_k, where α' drops the last part. Each β either is shorter than α or has a
 * smaller last part, so the recursion terminates.
 */
class PieriOracle {
 public:
  const Element& operator()(const Composition& a) {
    if (auto it = memo_.find(a); it != memo_.end()) return it->second;
    Element v(Algebra::NSym);
    if (a.empty()) {
      v = Element::one(Algebra::NSym);
    } else {
      std::vector<int> head(a.begin(), a.end() - 1);
      const Composition h(head);
      const int r = a.back();
      for (const auto& [t, c] : (*this)(h).terms()) v.add(Term{Basis::H, concat(t.index, Composition{r})}, c);
      for (const auto& b : strip_extensions(h, r))
        if (b != a) v -= (*this)(b);
    }
    return memo_.emplace(a, std::move(v)).first->second;
  }

 private:
  std::map<Composition, Element> memo_;
};

inline bool is_reverse_hook(const Composition& a) {
  for (int i = 0; i + 1 < a.length(); ++i)
    if (a[i] != 1) return false;
  return true;
}

inline Element generator(Generator g, int r) { return Element(g == Generator::H ? Basis::H : Basis::E, Composition{r}); }

namespace detail {

inline std::string call(const std::string& fn, std::initializer_list<std::string> args) {
  std::string s = fn + "(";
  bool first = true;
  for (const auto& a : args) {
    if (!first) s += ", ";
    s += a;
    first = false;
  }
  return s + ")";
}

inline std::string tok(Basis b, const Composition& a) { return std::string(token(b)) + to_string(a); }

// --- compositions
inline void suite_compositions(Sweep& s, int d, std::uint64_t) {
  for (int n = 0; n <= d; ++n) {
    const auto comps = enumerate_compositions(n);
    s.check(comps.size() == (n == 0 ? 1u : (1u << (n - 1))), call("enumerate_compositions", {std::to_string(n)}),
            "wrong count");
    for (std::size_t i = 1; i < comps.size(); ++i)
      s.check(comps[i - 1] < comps[i], call("enumerate_compositions", {std::to_string(n)}), "not strictly sorted");
    for (const auto& a : comps) {
      const std::string r = to_string(a);
      s.check(complement(complement(a)) == a, call("complement^2", {r}));
      s.check(reverse(reverse(a)) == a, call("reverse^2", {r}));
      s.check(transpose(transpose(a)) == a, call("transpose^2", {r}));
      s.check(transpose(a) == complement(reverse(a)) && transpose(a) == reverse(complement(a)), call("transpose", {r}));
      s.check(comp_of(set_of(a)) == a, call("comp_of(set_of)", {r}));
      if (is_partition(a)) s.check(conjugate(conjugate(a)) == Partition(a), call("conjugate^2", {r}));
      if (n <= 7)
        for (const auto& b : comps) {
          if (refines(a, b)) s.check(a.length() >= b.length(), call("refines", {r, to_string(b)}), "length");
          s.check(!(refines(a, b) && refines(b, a)) || a == b, call("antisymmetry", {r, to_string(b)}));
          if (n <= 6)
            for (const auto& c : comps)
              if (refines(a, b) && refines(b, c)) s.check(refines(a, c), call("transitivity", {r, to_string(b), to_string(c)}));
        }
    }
  }
}

// --- transition matrices compose to the identity
inline void suite_roundtrip(Sweep& s, int d, std::uint64_t) {
  for (Basis b : nsym_bases)
    for (int n = 0; n <= d; ++n) {
      auto p = graded_piece(b, n);
      s.check((p->to_canonical * p->from_canonical).is_identity() && (p->from_canonical * p->to_canonical).is_identity(),
              call("roundtrip", {std::string(token(b)), std::to_string(n)}));
    }
  for (Basis b : qsym_bases)
    for (int n = 0; n <= d; ++n) {
      auto p = graded_piece(b, n);
      s.check((p->to_canonical * p->from_canonical).is_identity() && (p->from_canonical * p->to_canonical).is_identity(),
              call("roundtrip", {std::string(token(b)), std::to_string(n)}));
    }
  // element-level round trips through every other basis of the algebra
  for (int n = 0; n <= std::min(d, 5); ++n)
    for (const auto& a : enumerate_compositions(n)) {
      for (Basis b : nsym_bases)
        for (Basis c : nsym_bases) {
          const Element x(b, a);
          s.check(convert(convert(x, c), b) == x, call("convert", {tok(b, a), std::string(token(c))}));
        }
      for (Basis b : qsym_bases)
        for (Basis c : qsym_bases) {
          const Element x(b, a);
          s.check(convert(convert(x, c), b) == x, call("convert", {tok(b, a), std::string(token(c))}));
        }
    }
}

// --- dual bases pair to the Kronecker delta
inline const std::vector<std::pair<Basis, Basis>>& dual_pairs() {
  static const std::vector<std::pair<Basis, Basis>> p = {{Basis::H, Basis::M},         {Basis::R, Basis::F},
                                                         {Basis::sh, Basis::shStar},   {Basis::rsh, Basis::rshStar},
                                                         {Basis::fsh, Basis::fshStar}, {Basis::bsh, Basis::bshStar}};
  return p;
}

inline void suite_duality(Sweep& s, int d, std::uint64_t) {
  for (const auto& [x, y] : dual_pairs())
    for (int n = 0; n <= d; ++n) {
      const auto comps = enumerate_compositions(n);
      for (const auto& a : comps)
        for (const auto& b : comps) {
          const Integer v = pair(Element(x, a), Element(y, b));
          s.check(v == (a == b ? 1 : 0), call("pair", {tok(x, a), tok(y, b)}), "value " + v.str());
        }
    }
}

// --- ψ, ρ, ω
inline void suite_involutions(Sweep& s, int d, std::uint64_t) {
  const Involution ws[] = {Involution::psi, Involution::rho, Involution::omega};
  for (int n = 0; n <= d; ++n)
    for (const auto& a : enumerate_compositions(n))
      for (Basis b : {Basis::H, Basis::sh, Basis::M, Basis::shStar}) {
        const Element x(b, a);
        for (Involution w : ws)
          s.check_equal(involution(w, involution(w, x)), x, call(std::string(to_string(w)) + "^2", {tok(b, a)}));
        const Element om = involution(Involution::omega, x);
        s.check_equal(involution(Involution::psi, involution(Involution::rho, x)), om, call("psi.rho = omega", {tok(b, a)}));
        s.check_equal(involution(Involution::rho, involution(Involution::psi, x)), om, call("rho.psi = omega", {tok(b, a)}));
        if (b == Basis::H) {
          s.check_equal(involution(Involution::psi, x), Element(Basis::E, a), call("psi", {tok(b, a)}));
          s.check_equal(involution(Involution::rho, x), Element(Basis::H, reverse(a)), call("rho", {tok(b, a)}));
          s.check_equal(involution(Involution::omega, x), Element(Basis::E, reverse(a)), call("omega", {tok(b, a)}));
        }
      }
  // (anti-)multiplicativity and duality invariance on pairs of degree ≤ min(d, 5)
  const auto small = compositions_up_to(std::min(d, 5));
  for (const auto& a : small)
    for (const auto& b : small) {
      if (a.size() + b.size() > std::min(d, 5)) continue;
      const Element ha(Basis::H, a), hb(Basis::H, b), ma(Basis::M, a), mb(Basis::M, b);
      for (Involution w : ws) {
        const std::string wn(to_string(w));
        const Element lhs = involution(w, multiply(ha, hb));
        const Element rhs = w == Involution::psi ? multiply(involution(w, ha), involution(w, hb))
                                                 : multiply(involution(w, hb), involution(w, ha));
        s.check_equal(lhs, rhs, call(wn + " on NSym product", {tok(Basis::H, a), tok(Basis::H, b)}));
        s.check_equal(involution(w, multiply(ma, mb)), multiply(involution(w, ma), involution(w, mb)),
                      call(wn + " on QSym product", {tok(Basis::M, a), tok(Basis::M, b)}));
      }
      if (a.size() == b.size())
        for (Involution w : ws)
          s.check(pair(ha, mb) == pair(involution(w, ha), involution(w, mb)),
                  call(std::string(to_string(w)) + " pairing invariance", {tok(Basis::H, a), tok(Basis::M, b)}));
    }
}

// --- ψ, ρ, ω carry the shin pair to the other three
inline void suite_transport(Sweep& s, int d, std::uint64_t) {
  for (int n = 0; n <= d; ++n)
    for (const auto& a : enumerate_compositions(n)) {
      const Composition ar = reverse(a);
      s.check(involution(Involution::psi, Element(Basis::sh, a)) == Element(Basis::rsh, a), call("psi", {tok(Basis::sh, a)}));
      s.check(involution(Involution::rho, Element(Basis::sh, a)) == Element(Basis::fsh, ar), call("rho", {tok(Basis::sh, a)}));
      s.check(involution(Involution::omega, Element(Basis::sh, a)) == Element(Basis::bsh, ar),
              call("omega", {tok(Basis::sh, a)}));
      s.check(involution(Involution::psi, Element(Basis::fsh, a)) == Element(Basis::bsh, a), call("psi", {tok(Basis::fsh, a)}));
      s.check(involution(Involution::psi, Element(Basis::shStar, a)) == Element(Basis::rshStar, a),
              call("psi", {tok(Basis::shStar, a)}));
      s.check(involution(Involution::rho, Element(Basis::shStar, a)) == Element(Basis::fshStar, ar),
              call("rho", {tok(Basis::shStar, a)}));
      s.check(involution(Involution::omega, Element(Basis::shStar, a)) == Element(Basis::bshStar, ar),
              call("omega", {tok(Basis::shStar, a)}));
      s.check(involution(Involution::psi, Element(Basis::fshStar, a)) == Element(Basis::bshStar, a),
              call("psi", {tok(Basis::fshStar, a)}));
    }
}

// --- H and R expansions are the K and L counts
inline void suite_kl(Sweep& s, int d, std::uint64_t) {
  for (Family f : all_families)
    for (int n = 0; n <= d; ++n) {
      const Matrix& k = *counting_matrix(f, n, false);
      const Matrix& l = *counting_matrix(f, n, true);
      const std::string fam(to_string(f));
      s.check(transition_matrix(Basis::H, nsym_basis(f), n) == k.transposed(), call("H->X = K^T", {fam, std::to_string(n)}));
      s.check(transition_matrix(Basis::R, nsym_basis(f), n) == l.transposed(), call("R->X = L^T", {fam, std::to_string(n)}));
      s.check(transition_matrix(qsym_basis(f), Basis::M, n) == k, call("X*->M = K", {fam, std::to_string(n)}));
      s.check(transition_matrix(qsym_basis(f), Basis::F, n) == l, call("X*->F = L", {fam, std::to_string(n)}));
    }
}

// --- K-inversion vs Pieri elimination vs Jacobi-Trudi
inline void suite_jt_vs_pieri(Sweep& s, int d, std::uint64_t) {
  PieriOracle oracle;
  for (int n = 0; n <= d; ++n)
    for (const auto& b : enumerate_compositions(n)) {
      const Element k = convert(Element(Basis::sh, b), Basis::H);
      s.check_equal(oracle(b), k, call("pieri-elimination", {tok(Basis::sh, b)}));
      if (is_strictly_increasing(b)) {
        s.check_equal(jacobi_trudi(Family::shin, b), k, call("jacobi_trudi", {"sh", to_string(b)}));
        s.check_equal(jacobi_trudi(Family::row_strict, b), Element(Basis::rsh, b), call("jacobi_trudi", {"rsh", to_string(b)}));
      }
      if (is_strictly_decreasing(b)) {
        s.check_equal(jacobi_trudi(Family::flipped, b), Element(Basis::fsh, b), call("jacobi_trudi", {"fsh", to_string(b)}));
        s.check_equal(jacobi_trudi(Family::backward, b), Element(Basis::bsh, b), call("jacobi_trudi", {"bsh", to_string(b)}));
      }
    }
}

// --- creation operator
inline void suite_beth(Sweep& s, int d, std::uint64_t) {
  for (int n = 1; n <= d; ++n)
    for (const auto& a : enumerate_compositions(n))
      for (int m = 1; m < a[0] && n + m <= d; ++m)
        s.check(beth(m, Element(Basis::sh, a)) == Element(Basis::sh, concat(Composition{m}, a)),
                call("beth", {std::to_string(m), tok(Basis::sh, a)}));
  for (int n = 0; n <= d; ++n)
    for (const auto& b : enumerate_compositions(n)) {
      if (!is_strictly_increasing(b)) continue;
      Element x = Element::one(Algebra::NSym);
      for (int i = b.length() - 1; i >= 0; --i) x = beth(b[i], x);
      s.check_equal(x, Element(Basis::sh, b), call("beth build-up", {to_string(b)}));
    }
}

// --- Pieri rules against the generic product
inline void suite_pieri(Sweep& s, int d, std::uint64_t) {
  for (Family f : all_families) {
    const auto [side, gen] = pieri_convention(f);
    for (const auto& a : compositions_up_to(d - 1))
      for (int r = 1; a.size() + r <= d; ++r) {
        const Element x = nsym(f, a), g = generator(gen, r);
        const Element want = side == Side::right ? multiply(x, g) : multiply(g, x);
        s.check_equal(pieri(f, a, r, side, gen), want, call("pieri", {std::string(to_string(f)), to_string(a), std::to_string(r)}));
      }
  }
}

// --- ribbon multiplication against the generic product
inline void suite_ribbon(Sweep& s, int d, std::uint64_t) {
  const int da = std::min(d, 4), db = std::min(d, 3);
  for (Family f : all_families)
    for (const auto& a : compositions_up_to(da))
      for (const auto& b : compositions_up_to(db)) {
        const Element x = nsym(f, a), r(Basis::R, b);
        const Element want = decreasing_rows(f) ? multiply(r, x) : multiply(x, r);
        s.check_equal(ribbon_multiply(f, a, b), want,
                      call("ribbon_multiply", {std::string(to_string(f)), to_string(a), to_string(b)}));
      }
}

// --- antipode
inline void suite_antipode_axiom(Sweep& s, int d, std::uint64_t) {
  for (int n = 0; n <= d; ++n) {
    for (Basis b : {Basis::H, Basis::M}) {
      const Element x(b, Composition(n == 0 ? std::vector<int>{} : std::vector<int>{n}));
      const Element want = counit(x) * Element::one(x.algebra());
      s.check_equal(antipode_convolution(x), want, call("sum S(x1) x2", {to_text(x)}));
    }
    if (n <= std::min(d, 5))
      for (const auto& a : enumerate_compositions(n)) {
        const Element x(Basis::M, a);
        s.check_equal(antipode_convolution(x), counit(x) * Element::one(Algebra::QSym), call("sum S(x1) x2", {to_text(x)}));
      }
  }
}

inline void suite_antipode_shin(Sweep& s, int d, std::uint64_t) {
  for (int n = 0; n <= d; ++n)
    for (const auto& a : enumerate_compositions(n)) {
      const Integer sign = n % 2 ? -1 : 1;
      s.check(antipode(Element(Basis::sh, a)) == convert(sign * Element(Basis::bsh, reverse(a)), Basis::sh),
              call("antipode", {tok(Basis::sh, a)}));
      s.check(antipode(Element(Basis::shStar, a)) == convert(sign * Element(Basis::bshStar, reverse(a)), Basis::shStar),
              call("antipode", {tok(Basis::shStar, a)}));
    }
}

// --- coproduct formulas
inline void suite_coproduct(Sweep& s, int d, std::uint64_t) {
  std::map<std::string, std::pair<std::uint64_t, std::string>> outside;  // family/variant -> count, example
  for (Family f : all_families)
    for (int n = 0; n <= d; ++n)
      for (const auto& a : enumerate_compositions(n)) {
        const TensorElement direct = coproduct(qsym(f, a));
        const Basis x = qsym_basis(f);
        for (CoproductVariant v : {CoproductVariant::skew, CoproductVariant::skew2}) {
          const bool sk = v == CoproductVariant::skew;
          CoproductFormula cf = coproduct_formula(f, a, v);
          const TensorElement got = convert(cf.value, Basis::M, Basis::M);
          const std::string r = call(sk ? "coproduct skew" : "coproduct skew2", {std::string(to_string(f)), to_string(a)});
          s.check(got == direct, r);
          s.check(convert(direct, sk ? x : Basis::M, sk ? Basis::M : x) == cf.value, r + " leg-wise");
          auto& [count, example] = outside[std::string(to_string(f)) + (sk ? " skew" : " skew2")];
          count += cf.outside_bound.size();
          if (example.empty() && !cf.outside_bound.empty()) example = to_string(a) + " with inner " + to_string(cf.outside_bound.front());
        }
      }
  for (const auto& [key, v] : outside)
    s.note(key + " formula: " + std::to_string(v.first) + " nonzero terms with inner index outside the containment bound" +
           (v.second.empty() ? "" : ", e.g. " + v.second));
  // coassociativity and counit on M and H
  for (int n = 0; n <= std::min(d, 5); ++n)
    for (const auto& a : enumerate_compositions(n))
      for (Basis b : {Basis::H, Basis::M}) {
        const Element x(b, a);
        const TensorElement dx = coproduct(x);
        Element left(x.algebra()), right(x.algebra());
        for (const auto& [k, c] : dx.terms()) {
          left += (c * counit(Element(k.first.basis, k.first.index))) * Element(k.second.basis, k.second.index);
          right += (c * counit(Element(k.second.basis, k.second.index))) * Element(k.first.basis, k.first.index);
        }
        s.check_equal(left, x, call("counit (e x id)", {tok(b, a)}));
        s.check_equal(right, x, call("counit (id x e)", {tok(b, a)}));
        std::map<std::tuple<Composition, Composition, Composition>, Integer> l3, r3;
        for (const auto& [k, c] : dx.terms()) {
          const TensorElement dl = coproduct(Element(k.first.basis, k.first.index));
          const TensorElement dr = coproduct(Element(k.second.basis, k.second.index));
          for (const auto& [k2, c2] : dl.terms()) l3[{k2.first.index, k2.second.index, k.second.index}] += c * c2;
          for (const auto& [k2, c2] : dr.terms()) r3[{k.first.index, k2.first.index, k2.second.index}] += c * c2;
        }
        std::erase_if(l3, [](const auto& e) { return e.second.is_zero(); });
        std::erase_if(r3, [](const auto& e) { return e.second.is_zero(); });
        s.check(l3 == r3, call("coassociativity", {tok(b, a)}));
      }
}

// --- perp adjunctions on random elements
inline Element random_element(std::mt19937_64& rng, Algebra alg, int max_degree) {
  const auto& bases = alg == Algebra::NSym ? std::vector<Basis>(std::begin(nsym_bases), std::end(nsym_bases))
                                           : std::vector<Basis>(std::begin(qsym_bases), std::end(qsym_bases));
  const auto comps = compositions_up_to(max_degree);
  std::uniform_int_distribution<int> nterms(1, 4), coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> pick_c(0, comps.size() - 1), pick_b(0, bases.size() - 1);
  Element x(alg);
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) x.add(Term{bases[pick_b(rng)], comps[pick_c(rng)]}, coeff(rng));
  return x;
}

inline void suite_adjunction(Sweep& s, int, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    const Element h = random_element(rng, Algebra::NSym, 3);
    const Element g = random_element(rng, Algebra::NSym, 3);
    const Element f = random_element(rng, Algebra::QSym, 6);
    const std::string r = "seed " + std::to_string(seed) + " trial " + std::to_string(trial) + ": h = " + to_text(h) +
                          ", g = " + to_text(g) + ", f = " + to_text(f);
    s.check(pair(multiply(h, g), f) == pair(g, perp(h, f)), "<h g, f> = <g, perp(h, f)> with " + r);
    s.check(pair(multiply(g, h), f) == pair(g, rperp(h, f)), "<g h, f> = <g, rperp(h, f)> with " + r);
  }
}

// --- forgetful map
inline SymElement schur(const Partition& p) {
  SymElement s{SymBasis::s, {}};
  s.add(p, 1);
  return s;
}

inline void suite_chi(Sweep& s, int d, std::uint64_t) {
  for (int n = 0; n <= d; ++n)
    for (const auto& a : enumerate_compositions(n)) {
      const SymElement img = to_schur(chi(Element(Basis::sh, a)));
      if (is_partition(a))
        s.check(img == schur(Partition(a)), call("chi", {tok(Basis::sh, a)}), to_text(img));
      else
        s.check(img.is_zero(), call("chi", {tok(Basis::sh, a)}), to_text(img));
    }
  const int m = std::min(d, 4);
  for (const auto& a : compositions_up_to(m))
    for (const auto& b : compositions_up_to(m)) {
      const Element x = to_canonical(Element(Basis::sh, a)), y = to_canonical(Element(Basis::R, b));
      const SymElement lhs = to_schur(chi(multiply(x, y)));
      const SymElement rhs = sym_multiply(to_schur(chi(x)), to_schur(chi(y)));
      s.check(lhs == rhs, call("chi(x y) = chi(x) chi(y)", {tok(Basis::sh, a), tok(Basis::R, b)}));
    }
}

// --- symmetric members of the dual bases
inline void suite_schur(Sweep& s, int d, std::uint64_t) {
  int bsh_plain_holds = 0, bsh_plain_total = 0;
  std::string bsh_plain_counterexample;
  for (int n = 0; n <= d; ++n)
    for (const auto& lam : enumerate_partitions(n)) {
      const Composition& l = lam.composition();
      const Partition conj = conjugate(lam);
      auto sh = schur_detect(Element(Basis::shStar, l));
      s.check(sh && *sh == schur(lam), call("schur_detect", {tok(Basis::shStar, l)}));
      auto fsh = schur_detect(Element(Basis::fshStar, reverse(l)));
      s.check(fsh && *fsh == schur(lam), call("schur_detect", {tok(Basis::fshStar, reverse(l))}));
      auto rsh = schur_detect(Element(Basis::rshStar, l));
      s.check(rsh && *rsh == schur(conj), call("schur_detect", {tok(Basis::rshStar, l)}));
      auto bsh_r = schur_detect(Element(Basis::bshStar, reverse(l)));
      s.check(bsh_r && *bsh_r == schur(conj), call("schur_detect", {tok(Basis::bshStar, reverse(l))}));
      auto bsh = schur_detect(Element(Basis::bshStar, l));
      ++bsh_plain_total;
      if (bsh && *bsh == schur(conj))
        ++bsh_plain_holds;
      else if (bsh_plain_counterexample.empty())
        bsh_plain_counterexample = tok(Basis::bshStar, l);
    }
  s.note("bsh*[lambda] = s[lambda'] holds for " + std::to_string(bsh_plain_holds) + " of " +
         std::to_string(bsh_plain_total) + " partitions" +
         (bsh_plain_counterexample.empty() ? "" : "; first failure " + bsh_plain_counterexample) +
         "; bsh*[reverse(lambda)] = s[lambda'] holds for all");
  for (int n = 0; n <= std::min(d, 7); ++n)
    for (const auto& a : enumerate_compositions(n)) {
      const bool eq = convert(Element(Basis::shStar, a), Basis::F) == Element(Basis::F, a);
      s.check(eq == is_reverse_hook(a), call("sh* = F iff reverse hook", {to_string(a)}));
      if (!is_partition(a) && !is_reverse_hook(a))
        s.check(!schur_detect(Element(Basis::shStar, a)), call("schur_detect not symmetric", {tok(Basis::shStar, a)}));
    }
}

// --- Littlewood-Richardson through two routes
inline void suite_lr(Sweep& s, int d, std::uint64_t) {
  for (int n = 0; n <= d; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& mu : enumerate_partitions(k))
        for (const auto& nu : enumerate_partitions(n - k)) {
          const SymElement lr = sym_multiply(schur(mu), schur(nu));
          const Element prod = multiply(Element(Basis::sh, mu.composition()), Element(Basis::sh, nu.composition()));
          for (const auto& lam : enumerate_partitions(n))
            s.check(prod.coefficient(Basis::sh, lam.composition()) == lr.coefficient(lam),
                    call("C vs c", {to_string(lam.composition()), to_string(mu.composition()), to_string(nu.composition())}));
        }
  // a non-partition factor never produces a partition index
  for (int n = 0; n <= d; ++n)
    for (int k = 1; k < n; ++k)
      for (const auto& b : enumerate_compositions(k))
        for (const auto& g : enumerate_compositions(n - k)) {
          if (is_partition(b) && is_partition(g)) continue;
          const Element prod = multiply(Element(Basis::sh, b), Element(Basis::sh, g));
          bool ok = true;
          for (const auto& [t, c] : prod.terms()) ok = ok && !is_partition(t.index);
          s.check(ok, call("C^lambda vanishes", {to_string(b), to_string(g)}), to_text(prod));
        }
}

// --- skew functions against tableau counts
inline Element tableau_generating_function(const Shape& shape, Family f) {
  Element out(Algebra::QSym);
  for (const auto& g : enumerate_compositions(shape.cells())) {
    const auto n = enumerate_tableaux(shape, f, g).size();
    if (n) out.add(Term{Basis::M, g}, static_cast<int>(n));
  }
  return out;
}

inline void suite_skew_tableaux(Sweep& s, int d, std::uint64_t) {
  for (int n = 0; n <= d; ++n)
    for (const auto& a : enumerate_compositions(n))
      for (const auto& b : compositions_up_to(std::min(n, 3))) {
        if (dominated(b, a)) {
          for (Family f : {Family::shin, Family::row_strict}) {
            const Element sk = skew(f, a, b);
            const Shape shape = b.empty() ? Shape::straight(a) : Shape::skew(a, b);
            s.check_equal(sk, tableau_generating_function(shape, f),
                          call("skew vs tableaux", {std::string(to_string(f)), to_string(a), to_string(b)}));
          }
          const Element rho = involution(Involution::rho, skew(Family::shin, a, b));
          s.check_equal(rho, skew_ii(Family::flipped, reverse(a), reverse(b)), call("rho(skew)", {to_string(a), to_string(b)}));
          const Element om = involution(Involution::omega, skew(Family::shin, a, b));
          s.check_equal(om, skew_ii(Family::backward, reverse(a), reverse(b)), call("omega(skew)", {to_string(a), to_string(b)}));
        }
        if (dominated(reverse(b), reverse(a)))
          for (Family f : {Family::flipped, Family::backward}) {
            const Shape shape = b.empty() ? Shape::straight(a) : Shape::skew2(a, b);
            s.check_equal(skew_ii(f, a, b), tableau_generating_function(shape, f),
                          call("skew_ii vs tableaux", {std::string(to_string(f)), to_string(a), to_string(b)}));
          }
      }
  const Element sk = skew_ii(Family::shin, {2, 1, 3}, {1, 2, 1});
  s.check(sk.coefficient(Basis::M, {1, 1}) == -1, call("skew_ii", {"sh", "[2,1,3]", "[1,2,1]"}), to_text(sk));
}

// --- tableau combinatorics
inline std::set<Rows> fillings(const std::vector<Tableau>& ts) {
  std::set<Rows> out;
  for (const auto& t : ts) out.insert(t.rows);
  return out;
}

inline void suite_tableaux(Sweep& s, int d, std::uint64_t) {
  for (int n = 0; n <= d; ++n)
    for (const auto& a : enumerate_compositions(n)) {
      const std::string r = to_string(a);
      const Shape shape = Shape::straight(a);
      const auto sh = enumerate_standard(shape, Family::shin);
      const auto rs = enumerate_standard(shape, Family::row_strict);
      const auto fl = enumerate_standard(shape, Family::flipped);
      const auto bw = enumerate_standard(shape, Family::backward);
      s.check(fillings(sh) == fillings(rs), call("standard shin = standard row-strict", {r}));
      s.check(fillings(fl) == fillings(bw), call("standard flipped = standard backward", {r}));
      for (auto t : sh) {
        const DescentSet d1 = descent_set(t);
        t.family = Family::row_strict;
        const DescentSet d2 = descent_set(t);
        bool ok = true;
        for (int i = 1; i < n; ++i) ok = ok && (d1.contains(i) != d2.contains(i));
        s.check(ok, call("descent complement shin/row-strict", {to_text(t)}));
      }
      for (auto t : fl) {
        const DescentSet d1 = descent_set(t);
        t.family = Family::backward;
        const DescentSet d2 = descent_set(t);
        bool ok = true;
        for (int i = 1; i < n; ++i) ok = ok && (d1.contains(i) != d2.contains(i));
        s.check(ok, call("descent complement flipped/backward", {to_text(t)}));
      }
      std::set<Rows> images;
      for (const auto& t : sh) {
        const Tableau u = flip(t);
        images.insert(u.rows);
        s.check(validate(u) && u.family == Family::flipped && flip(u) == t, call("flip", {to_text(t)}));
        s.check(descent_composition(u) == reverse(descent_composition(t)), call("flip descents", {to_text(t)}));
      }
      s.check(images == fillings(enumerate_standard(Shape::straight(reverse(a)), Family::flipped)),
              call("flip is onto", {r}));
      for (const auto& b : compositions_up_to(std::min(n, 3))) {
        if (!dominated(b, a)) continue;
        const Shape sk = b.empty() ? shape : Shape::skew(a, b);
        const auto chains = maximal_chains(b, a);
        const auto std_sk = enumerate_standard(sk, Family::shin);
        std::set<Rows> from_chains;
        bool valid = true;
        for (const auto& c : chains) {
          const Tableau t = chain_to_tableau(c);
          valid = valid && validate(t);
          from_chains.insert(t.rows);
        }
        s.check(valid && from_chains.size() == chains.size() && from_chains == fillings(std_sk),
                call("chains <-> standard skew tableaux", {r, to_string(b)}),
                std::to_string(chains.size()) + " chains, " + std::to_string(std_sk.size()) + " tableaux");
        if (!b.empty())
          for (const auto& t : std_sk) {
            const Tableau u = flip(t);
            s.check(validate(u) && descent_composition(u) == reverse(descent_composition(t)),
                    call("flip skew", {to_string(sk), to_text(t)}));
          }
      }
      if (n <= std::min(d, 6))
        for (Family f : all_families)
          for (const auto& g : enumerate_compositions(n))
            for (const auto& t : enumerate_tableaux(shape, f, g)) {
              const Tableau u = standardize(t);
              s.check(validate(u) && is_standard(u) && refines(g, descent_composition(u)),
                      call("standardize", {std::string(to_string(f)), to_text(t)}));
            }
    }
}

struct IdentitySpec {
  std::string name;
  std::string statement;
  int default_max_degree;
  std::function<void(Sweep&, int, std::uint64_t)> run;
};

}  // namespace detail

inline const std::vector<detail::IdentitySpec>& identity_suite() {
  using namespace detail;
  static const std::vector<IdentitySpec> suite = {
      {"compositions", "complement, reverse, transpose, conjugate are involutions; set/comp bijection; refinement order", 9,
       suite_compositions},
      {"roundtrip", "every transition matrix composes with its inverse to the identity", 7, suite_roundtrip},
      {"duality", "each of the six dual basis pairs pairs to the Kronecker delta", 7, suite_duality},
      {"involutions", "psi, rho, omega are involutions, omega = psi rho = rho psi, (anti-)multiplicative, pairing-invariant",
       6, suite_involutions},
      {"transport", "psi, rho, omega carry the shin pair to the row-strict, flipped and backward pairs", 6, suite_transport},
      {"kl-expansions", "H and R expand in each family with the K and L tableau counts", 6, suite_kl},
      {"jt-vs-pieri", "K-matrix inversion, Pieri elimination and Jacobi-Trudi give the same expansions", 8,
       suite_jt_vs_pieri},
      {"beth", "beth_m(sh_a) = sh_(m,a) for m < a_1; strictly increasing build-up", 8, suite_beth},
      {"pieri", "the four Pieri rules agree with the generic product", 6, suite_pieri},
      {"ribbon", "ribbon multiplication by skew standard tableaux agrees with the generic product", 7, suite_ribbon},
      {"antipode-axiom", "sum S(x1) x2 = e(x) 1 on H_n and M_n", 6, suite_antipode_axiom},
      {"antipode-shin", "S(sh_a) = (-1)^|a| bsh_(a^r) and dually", 6, suite_antipode_shin},
      {"coproduct-formulas", "both skew coproduct formulas match deconcatenation; coassociativity and counit", 6,
       suite_coproduct},
      {"adjunction", "perp and right perp are adjoint to left and right multiplication (seeded sample)", 6,
       suite_adjunction},
      {"chi", "chi(sh_lambda) = s_lambda, chi(sh_a) = 0 otherwise; chi is multiplicative", 7, suite_chi},
      {"schur", "sh*_lambda = s_lambda, fsh*_(lambda^r) = s_lambda, rsh*_lambda and bsh*_(lambda^r) = s_lambda'; reverse hooks",
       7, suite_schur},
      {"lr", "shin structure coefficients on partitions are Littlewood-Richardson coefficients", 6, suite_lr},
      {"skew-tableaux", "skew and skew-II functions count skew tableaux; rho and omega transport skew to skew-II", 6,
       suite_skew_tableaux},
      {"tableaux", "standard-set equalities, descent complements, flip, chain bijection, standardization", 7,
       suite_tableaux},
  };
  return suite;
}

inline std::vector<std::string> identity_names() {
  std::vector<std::string> out;
  for (const auto& s : identity_suite()) out.push_back(s.name);
  return out;
}

/**
 * @brief Runs one named identity up to max_degree (negative: the suite default).
 * @throws parse_error for an unknown name.
 */
inline VerifyReport verify(const std::string& name, int max_degree = -1, std::uint64_t seed = 1) {
  for (const auto& spec : identity_suite()) {
    if (spec.name != name) continue;
    VerifyReport r;
    r.name = spec.name;
    r.statement = spec.statement;
    r.max_degree = max_degree < 0 ? spec.default_max_degree : max_degree;
    Sweep sweep(r);
    const auto t0 = std::chrono::steady_clock::now();
    spec.run(sweep, r.max_degree, seed);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw parse_error("unknown identity: " + name);
}

}  // namespace qsym
