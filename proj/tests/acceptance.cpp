#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dialg/dialg.hpp"
#include "oracles.hpp"

using namespace dialg;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void check(bool cond, const std::string& what) {
    if (!cond) notes.push_back(what);
    ok = ok && cond;
  }
  void absorb(const Report& r) {
    for (const auto& d : r.details)
      if (d.rfind("FAIL", 0) == 0) notes.push_back(r.name + ": " + d);
    ok = ok && r.passed;
  }
};

std::string cli_stdout(const std::string& args) {
  FILE* p = popen((std::string(DIALG_CLI) + " " + args).c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  pclose(p);
  return out;
}

Polynomial as_dicommutator(const Term& t) {
  if (t.is_leaf()) return poly(t.variable());
  return dicom(as_dicommutator(t.child(0)), as_dicommutator(t.child(1)));
}

Polynomial as_dicommutator(const Polynomial& p) {
  Polynomial out;
  for (const auto& [t, c] : p.terms()) out += c * as_dicommutator(t);
  return out;
}

std::vector<Term> tagged_trees(std::span<const Variable> leaves) {
  if (leaves.size() == 1) return {Term::leaf(leaves[0])};
  std::vector<Term> out;
  for (std::size_t k = 1; k < leaves.size(); ++k)
    for (const Term& l : tagged_trees(leaves.first(k)))
      for (const Term& r : tagged_trees(leaves.subspan(k))) {
        out.push_back(left(l, r));
        out.push_back(right(l, r));
      }
  return out;
}

Outcome ra_basis() {
  Outcome o;
  std::stringstream ss(cli_stdout("basis --degree 4 --space ra"));
  std::vector<std::string> got;
  for (std::string l; std::getline(ss, l);) got.push_back(l);
  o.check(got.size() == 60, "basis emitted " + std::to_string(got.size()) + " lines");
  for (std::size_t i = 0; i < std::min<std::size_t>(got.size(), 60); ++i)
    o.check(got[i] == oracle::kRaDegree4[i], "line " + std::to_string(i + 1) + ": " + got[i]);
  return o;
}

Outcome lid_ranks() {
  Outcome o;
  o.absorb(verify::lid_dimalcev());
  const MonomialBasis b = ra_degree4_basis();
  IdentityModule fwd(b), rev(b);
  add_generator(fwd, library::lid().poly);
  o.check(fwd.rank() == 8 && fwd.row_count() == 24, "LId orbit rank " + std::to_string(fwd.rank()));
  add_generator(fwd, library::di_malcev().poly);
  o.check(fwd.rank() == 20 && fwd.row_count() == 48, "stacked rank " + std::to_string(fwd.rank()));
  add_generator(rev, library::di_malcev().poly);
  const std::size_t r1 = rev.rank();
  add_generator(rev, library::lid().poly);
  o.check(r1 == 20 && rev.rank() == 20, "reverse ranks");
  o.check(is_consequence(library::lid().poly, {library::di_malcev()}, Ambient::RightAnticommutative, 4).holds,
          "LId from di-Malcev");
  o.check(!is_consequence(library::di_malcev().poly, {library::lid()}, Ambient::RightAnticommutative, 4).holds,
          "di-Malcev from LId");
  return o;
}

Outcome kp_goldens() {
  Outcome o;
  o.absorb(verify::kp_associativity());
  o.absorb(verify::kp_nalt());
  o.absorb(verify::kp_alternative());
  return o;
}

Outcome leibniz() {
  Outcome o;
  o.absorb(verify::leibniz_dicommutator());
  return o;
}

Outcome teichmuller() {
  Outcome o;
  o.absorb(verify::teichmuller());
  o.check(make_basis(5, Ambient::Dialgebra).dimension() == 8400, "degree-5 dialgebra dimension");
  for (const Identity& t : library::teichmuller()) {
    const Polynomial raw = expand_raw(parse_identity(
        t.label == "T1"   ? "al(w -| x, y, z) - al(w, x -| y, z) + al(w, x, y -| z) - (w -| al(x, y, z)) - (al(w, x, y) -| z)"
        : t.label == "T2" ? "al(w |- x, y, z) - ax(w, x -| y, z) + ax(w, x, y -| z) - (w |- al(x, y, z)) - (ax(w, x, y) -| z)"
        : t.label == "T3" ? "ax(w |- x, y, z) - ax(w, x |- y, z) + ar(w, x, y -| z) - (w |- ax(x, y, z)) - (ar(w, x, y) -| z)"
                          : "ar(w |- x, y, z) - ar(w, x |- y, z) + ar(w, x, y |- z) - (w |- ar(x, y, z)) - (ar(w, x, y) |- z)")
                                          .expr);
    const auto row = straighten_sparse(raw, make_basis(Ambient::Dialgebra, raw.variables()));
    o.check(row.empty(), t.label + " straightens to zero in the 8400-dimensional space");
  }
  return o;
}

Outcome bso_goldens() {
  Outcome o;
  o.absorb(verify::dijacobian_bso());
  return o;
}

Outcome nucleus() {
  Outcome o;
  o.absorb(verify::nalt_operators());
  o.absorb(verify::associative_nucleus());
  o.absorb(verify::gan_implies_alternative());
  return o;
}

Outcome flexible() {
  Outcome o;
  o.absorb(verify::flexible_stilde());
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937 rng(2024);
  for (std::size_t n = 2; n <= 5; ++n) {
    o.check(make_basis(n, Ambient::Plain).dimension() == catalan(n - 1) * factorial(n), "plain dimension");
    o.check(make_basis(n, Ambient::Dialgebra).dimension() == catalan(n - 1) * n * factorial(n),
            "dialgebra dimension");
    IdentityModule ideal(make_basis(n, Ambient::Plain));
    if (n >= 3) add_generator(ideal, library::right_anticommutativity().poly);
    o.check(make_basis(n, Ambient::RightAnticommutative).dimension() == ideal.basis().dimension() - ideal.rank(),
            "right-anticommutative dimension " + std::to_string(n));
  }
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Term& t : tagged_trees(default_variables(n)))
      o.check(canonicalize(canonicalize(t)) == canonicalize(t), "canonicalize idempotence");
  const auto plain = make_basis(4, Ambient::Plain);
  const auto ra = ra_degree4_basis();
  std::uniform_int_distribution<std::size_t> pick(0, plain.dimension() - 1);
  for (int k = 0; k < 200; ++k) {
    Polynomial p, q;
    for (int j = 0; j < 5; ++j) {
      p.add(plain.at(pick(rng)), Rational(static_cast<long>(rng() % 7) - 3));
      q.add(plain.at(pick(rng)), ratio(static_cast<long>(rng() % 5) + 1, 2));
    }
    const auto sp = straighten(p, ra), sq = straighten(q, ra), spq = straighten(p + q, ra);
    o.check(straighten(from_coordinates(sp, ra), ra) == sp, "straighten idempotence");
    for (std::size_t i = 0; i < spq.size(); ++i) o.check(spq[i] == sp[i] + sq[i], "straighten linearity");
  }
  for (int k = 0; k < 50; ++k) {
    QMatrix m(6, 7);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 7; ++j) m.at(i, j) = Rational(static_cast<long>(rng() % 5) - 2);
    std::vector<std::size_t> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    QMatrix shuffled(0, 7);
    for (std::size_t i : perm) shuffled.append_row(m.row(i));
    o.check(rref(m).reduced == rref(shuffled).reduced, "rref determinism");
    o.check(rank(m) == rank(m.transpose()), "row rank equals column rank");
  }
  std::vector<Identity> pool = library::alternative_dialgebra();
  for (const Identity& id : library::flexible_dialgebra()) pool.push_back(id);
  for (const Identity& id : library::associative_dialgebra()) pool.push_back(id);
  for (const Identity& f : pool) o.check(is_consequence(f.poly, {f}, Ambient::Dialgebra, 3).holds, "reflexivity");
  for (int k = 0; k < 10; ++k) {
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::vector<Identity> part(pool.begin(), pool.begin() + 1 + static_cast<std::ptrdiff_t>(rng() % 4));
    for (const Identity& t : library::nalt_associator_form()) {
      const bool small = is_consequence(t.poly, part, Ambient::Dialgebra, 3).holds;
      const bool big = is_consequence(t.poly, pool, Ambient::Dialgebra, 3).holds;
      o.check(!small || big, "monotonicity");
    }
  }
  return o;
}

Outcome stretch() {
  Outcome o;
  o.absorb(verify::dimalcev_from_alternative());
  const Polynomial lid = as_dicommutator(library::lid().poly);
  const Verdict v = is_consequence(lid, library::alternative_dialgebra(), Ambient::Dialgebra, 4);
  o.check(v.holds, "LId in the dicommutator also lies in the alternative T-ideal");
  return o;
}

struct Criterion {
  int number;
  std::string title;
  double budget_ms;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "degree-4 right-anticommutative basis", 1000, ra_basis},
      {2, "rank computation 8 / 20 and the consequence pair", 5000, lid_ranks},
      {3, "KP goldens", 1000, kp_goldens},
      {4, "Leibniz identity of the dicommutator", 1000, leibniz},
      {5, "Teichmuller di-identities", 30000, teichmuller},
      {6, "BSO goldens", 1000, bso_goldens},
      {7, "conditional nucleus checks", 30000, nucleus},
      {8, "flexible dialgebra St identity", 1000, flexible},
      {9, "property suites", 60000, properties},
      {10, "di-Malcev from alternative dialgebras", 300000, stretch},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    o.check(ms <= c.budget_ms, "over the runtime budget");
    if (!o.ok) ++failures;
    std::printf("%s criterion %2d: %s (%.0f ms)\n", o.ok ? "PASS" : "FAIL", c.number, c.title.c_str(), ms);
    for (const auto& n : o.notes) std::printf("      %s\n", n.c_str());
  }
  return failures == 0 ? 0 : 1;
}
