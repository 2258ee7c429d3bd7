// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact over the integers, so the tolerance is zero everywhere.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <qsym/qsym.hpp>

using namespace qsym;

namespace {

constexpr int kTolerance = 0;  // exact integer equality

struct Outcome {
  bool ok = true;
  bool hard = false;  // a failure not covered by a documented erratum
  std::vector<std::string> detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      hard = true;
      detail.push_back(what);
    }
  }
  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      ok = false;
      hard = true;
      detail.push_back(what + ": got " + to_text(got) + ", want " + to_text(want));
    }
  }
  // A published value that contradicts other published values. It is checked
  // and reported as a failure, but does not set the exit status.
  template <class A, class B>
  void expect_erratum(const A& got, const B& want, const std::string& what, const std::string& why) {
    if (!(got == want)) {
      ok = false;
      detail.push_back(what + ": got " + to_text(got) + ", want " + to_text(want) + " [known erratum: " + why + "]");
    }
  }
  void run_identity(const std::string& name, int max_degree) {
    const VerifyReport r = verify(name, max_degree);
    std::ostringstream s;
    s << name << " <= " << r.max_degree << ": " << r.cases << " cases, " << r.failure_count << " failures";
    for (const auto& f : r.failures) s << "; " << f.reproducer;
    if (!r.ok()) {
      ok = false;
      hard = true;
      detail.push_back(s.str());
    } else {
      summary.push_back(s.str());
    }
  }
  std::vector<std::string> summary;
};

Element X(Basis b, std::initializer_list<int> a, int c = 1) { return Element(b, Composition(a), c); }

Element sum(Basis b, std::initializer_list<std::initializer_list<int>> idx) {
  Element out(algebra_of(b));
  for (const auto& a : idx) out += X(b, a);
  return out;
}

void goldens(Outcome& o) {
  const Basis H = Basis::H, F = Basis::F;
  o.expect_eq(convert(X(Basis::sh, {3, 2}), H), X(H, {3, 2}) - X(H, {4, 1}), "sh[3,2]");
  o.expect_eq(convert(X(Basis::sh, {4, 1}), H), X(H, {4, 1}) - X(H, {5}), "sh[4,1]");
  o.expect_eq(convert(multiply(X(Basis::sh, {2, 3, 1}), X(H, {2})), Basis::sh),
              sum(Basis::sh, {{2, 3, 1, 2}, {2, 3, 2, 1}, {2, 3, 3}, {2, 4, 1, 1}, {2, 4, 2}, {2, 5, 1}}),
              "sh[2,3,1] H[2]");
  const Element jt134 = X(H, {1, 3, 4}) - X(H, {1, 4, 3}) - X(H, {3, 1, 4}) + X(H, {4, 1, 3});
  o.expect_eq(convert(X(Basis::sh, {1, 3, 4}), H), jt134, "sh[1,3,4]");
  o.expect_eq(jacobi_trudi(Family::shin, {1, 3, 4}), jt134, "Jacobi-Trudi sh[1,3,4]");
  o.expect_eq(convert(X(Basis::sh, {2, 2, 4}), H),
              X(H, {2, 2, 4}) - X(H, {2, 4, 2}) - X(H, {3, 1, 4}) + X(H, {4, 3, 1}) + X(H, {5, 1, 2}) - X(H, {5, 2, 1}),
              "sh[2,2,4]");
  o.expect_eq(beth(2, X(H, {3, 1})), X(H, {2, 3, 1}) - X(H, {3, 2, 1}), "beth_2 H[3,1]");

  o.expect_eq(convert(X(Basis::shStar, {2, 3}), F), sum(F, {{2, 3}, {1, 2, 2}}), "sh*[2,3]");
  o.expect_eq(convert(X(Basis::rshStar, {2, 3}), F), sum(F, {{1, 2, 1, 1}, {2, 2, 1}}), "rsh*[2,3]");
  o.expect_eq(convert(X(Basis::fshStar, {3, 2}), F), sum(F, {{3, 2}, {2, 2, 1}}), "fsh*[3,2]");
  o.expect_eq(convert(X(Basis::bshStar, {3, 2}), F), sum(F, {{1, 1, 2, 1}, {1, 2, 2}}), "bsh*[3,2]");
  o.expect_eq(convert(X(Basis::fshStar, {1, 2, 1}), F), sum(F, {{1, 2, 1}, {2, 1, 1}}), "fsh*[1,2,1]");
  o.expect_eq(convert(X(Basis::bshStar, {1, 2, 1}), F), sum(F, {{2, 2}, {1, 3}}), "bsh*[1,2,1]");
  o.expect_eq(convert(X(Basis::bshStar, {2, 1}), F), sum(F, {{1, 2}}), "bsh*[2,1]");
  o.expect_eq(convert(X(Basis::shStar, {3, 1}), F), sum(F, {{2, 2}, {1, 3}, {3, 1}}), "sh*[3,1]");
  const Element rsh31 = convert(X(Basis::rshStar, {3, 1}), F);
  o.expect_erratum(rsh31, sum(F, {{3, 1}, {1, 2, 1}, {1, 1, 2}}), "rsh*[3,1]",
                   "row-strict fillings 123/4, 124/3, 134/2 have descents (1,1,2), (1,2,1), (2,1,1)");
  o.expect_eq(rsh31, involution(Involution::psi, convert(X(Basis::shStar, {3, 1}), F)), "rsh*[3,1] = psi(sh*[3,1])");
  o.expect_eq(rsh31, sum(F, {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}), "rsh*[3,1] from standard row-strict tableaux");

  o.expect_eq(convert(skew(Family::row_strict, {1, 3, 2}, {1, 2}), F), sum(F, {{2, 1}, {1, 2}, {1, 1, 1}}),
              "rsh*[1,3,2]/[1,2]");
  const Integer c = skew_ii(Family::shin, {2, 1, 3}, {1, 2, 1}).coefficient(Basis::M, {1, 1});
  o.expect(c == -1, "sh*[2,1,3]//[1,2,1] coefficient of M[1,1] is " + c.str());

  const Integer k = count_K(Family::shin, {3, 4}, WeakComposition{1, 2, 1, 1, 2});
  o.expect(k == 3, "K(shin,[3,4],[1,2,1,1,2]) = " + k.str());
  o.expect(complement({3, 2}) == Composition{1, 1, 2, 1}, "complement [3,2]");
  o.expect(reverse({3, 2}) == Composition{2, 3}, "reverse [3,2]");
  o.expect(transpose({3, 2}) == Composition{1, 2, 1, 1}, "transpose [3,2]");
  o.expect(conjugate(Partition{3, 2}).composition() == Composition{2, 2, 1}, "conjugate [3,2]");
}

// (1, ..., 1, m)
bool reverse_hook(const Composition& a) {
  for (int i = 1; i < a.length(); ++i)
    if (a.part(i) != 1) return false;
  return true;
}

void reverse_hooks(Outcome& o, int max_degree) {
  std::uint64_t cases = 0;
  for (int n = 1; n <= max_degree; ++n)
    for (const auto& a : enumerate_compositions(n)) {
      ++cases;
      const bool single = convert(Element(Basis::shStar, a), Basis::F) == Element(Basis::F, a);
      o.expect(single == reverse_hook(a), "sh*" + to_string(a) + " = F" + to_string(a) + " iff reverse hook");
    }
  o.summary.push_back("reverse hooks <= " + std::to_string(max_degree) + ": " + std::to_string(cases) + " cases");
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 golden examples", goldens},
      {"2 oracle triangle (K-inversion, Pieri elimination, Jacobi-Trudi), degree <= 8",
       [](Outcome& o) { o.run_identity("jt-vs-pieri", 8); }},
      {"3 duality of the six basis pairs, degree <= 7", [](Outcome& o) { o.run_identity("duality", 7); }},
      {"4 involutions and basis transport, degree <= 6",
       [](Outcome& o) {
         o.run_identity("involutions", 6);
         o.run_identity("transport", 6);
       }},
      {"5 antipode axiom, antipode of shin functions, coproduct formulas, degree <= 6",
       [](Outcome& o) {
         o.run_identity("antipode-axiom", 6);
         o.run_identity("antipode-shin", 6);
         o.run_identity("coproduct-formulas", 6);
       }},
      {"6 forgetful map, Schur detection, Littlewood-Richardson coefficients",
       [](Outcome& o) {
         o.run_identity("chi", 7);
         o.run_identity("schur", 7);
         o.run_identity("lr", 6);
       }},
      {"7 standard tableaux, flip, poset chains, reverse hooks, degree <= 7",
       [](Outcome& o) {
         o.run_identity("tableaux", 7);
         reverse_hooks(o, 7);
       }},
  };

  std::cout << "tolerance: " << kTolerance << " (exact)\n";
  int failed = 0, known = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    c.run(o);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", s);
    std::cout << (o.ok ? "PASS " : "FAIL ") << c.name << "  [" << buf << " s]\n";
    for (const auto& line : o.summary) std::cout << "    " << line << '\n';
    for (const auto& line : o.detail) std::cout << "    mismatch: " << line << '\n';
    if (o.hard)
      ++failed;
    else if (!o.ok)
      ++known;
  }
  const std::size_t passed = criteria.size() - failed - known;
  std::cout << (failed + known ? "FAILED " : "ALL PASSED ") << passed << "/" << criteria.size();
  if (known) std::cout << " (" << known << " failing only on known errata; exit status 0)";
  std::cout << '\n';
  return failed ? 1 : 0;
}
