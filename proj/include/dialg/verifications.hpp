#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dialg/bso.hpp"
#include "dialg/checker.hpp"
#include "dialg/identities.hpp"
#include "dialg/kp.hpp"
#include "dialg/parser.hpp"

namespace dialg {

struct Report {
  std::string name;
  bool passed = true;
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> dims;
  std::vector<std::string> details;
  double elapsed_ms = 0;
  std::optional<std::string> residual;
  std::optional<QMatrix> matrix;

  Report(std::string n = {}) : name(std::move(n)) {}

  /// Records one sub-check.
  void expect(bool ok, const std::string& what) {
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    passed = passed && ok;
  }
};

namespace verify {

inline bool same_up_to_sign(const Polynomial& p, const Polynomial& q) { return p == q || p == -q; }

inline Report leibniz_dicommutator() {
  Report r{"leibniz-dicommutator"};
  const Polynomial raw = expand_raw(parse_identity("dL(x,y,z)").expr);
  const auto nf = normal_form_assoc_dialgebra(raw);
  r.expect(nf.empty(), "<<x,y>,z> - <<x,z>,y> - <x,<y,z>> has pointed-word normal form " + print(nf));
  const Polynomial pairs = parse_polynomial(
      "(((x -| y) -| z) - (x -| (y -| z))) - (((x -| z) -| y) - (x -| (z |- y)))"
      " - (((y |- x) -| z) - (y |- (x -| z))) - ((y |- (z |- x)) - ((y -| z) |- x))"
      " - ((z |- (x -| y)) - ((z |- x) -| y)) + ((z |- (y |- x)) - ((z |- y) |- x))");
  r.expect(canonicalize(raw) == pairs, "expansion equals the six bracketed differences modulo the bar identities");
  r.dims = {3 * factorial(3)};
  return r;
}

inline Report kp_associativity() {
  Report r{"kp-associativity"};
  const auto res = kp_transform(library::associativity());
  const auto axioms = library::associative_dialgebra();
  r.expect(res.kp_identities.size() == 3, "three KP identities");
  const std::size_t order[] = {0, 2, 1};  // central x, y, z -> left, inner, right
  for (std::size_t i = 0; i < 3 && i < res.kp_identities.size(); ++i) {
    const auto& k = res.kp_identities[i];
    const auto& l = axioms[order[i]];
    r.expect(same_up_to_sign(k.identity.poly, l.poly),
             "central " + k.central.name + ": " + print(k.identity.poly) + " is " + l.label);
  }
  return r;
}

inline Report kp_alternative() {
  Report r{"kp-alternative"};
  std::vector<Identity> kp;
  for (const Identity& alt : library::alternativity()) {
    for (auto& k : kp_transform(alt).kp_identities) kp.push_back(k.identity);
  }
  const Verdict v = are_equivalent(kp, library::alternative_dialgebra(), Ambient::Dialgebra, 3);
  r.ranks = v.ranks;
  r.dims = v.dims;
  r.expect(v.holds, "KP identities of linearized alternativity generate the same S3-module as the alternative "
                    "dialgebra identities (ranks " + std::to_string(v.ranks[0]) + ", " + std::to_string(v.ranks[1]) +
                        ", joint " + std::to_string(v.ranks[2]) + ")");
  return r;
}

inline Report kp_nalt() {
  Report r{"kp-nalt"};
  const auto expanded = library::nalt_expanded();
  const auto expected = library::nalt_kp();
  const auto assoc_form = library::nalt_associator_form();
  const auto order = vars({"a", "x", "y"});
  std::vector<Polynomial> got;
  for (const Identity& id : expanded) {
    for (auto& k : kp_transform(id, order).kp_identities) got.push_back(k.identity.poly);
  }
  r.expect(got.size() == 6, "six KP identities");
  for (std::size_t i = 0; i < 6 && i < got.size(); ++i) {
    r.expect(got[i] == expected[i].poly, "identity " + expected[i].label + " reproduced verbatim");
    r.expect(canonicalize(got[i]) == assoc_form[i].poly, "identity " + expected[i].label + " in associator form");
  }
  const auto zero = zero_identities(2);
  r.expect(zero.size() == 2, "two 0-identities for binary operations");
  const auto bars = library::bar_identities();
  bool bar_match = zero.size() == 2;
  for (const Identity& z : zero) {
    bool found = false;
    for (const Identity& b : bars) found = found || same_up_to_sign(z.poly, b.poly);
    bar_match = bar_match && found;
  }
  r.expect(bar_match, "the 0-identities are the bar identities");
  return r;
}

inline Report gan_implies_alternative() {
  Report r{"gan-implies-alternative"};
  std::vector<Hypothesis> hyps;
  for (const char* e : {"x", "y", "z"}) {
    for (const Identity& g : library::gan(e)) hyps.push_back({g.label, g.poly, {var(e)}});
  }
  for (const Identity& t : library::alternative_dialgebra()) {
    const Verdict v = conditional_consequence(t.poly, hyps, 3);
    r.ranks.push_back(v.ranks[0]);
    r.expect(v.holds, t.label + " follows from GAN for x, y, z");
  }
  r.dims = {make_basis(3, Ambient::Dialgebra).dimension()};
  return r;
}

/// Multiplication-operator identities for elements of N_alt, applied to y.
inline std::vector<std::pair<std::string, Polynomial>> nalt_operator_identities() {
  const Polynomial a = poly("a"), b = poly("b"), x = poly("x"), y = poly("y");
  const Polynomial ab = dicom(a, b);
  std::vector<std::pair<std::string, Polynomial>> out;
  auto add = [&](std::string label, const Operator& lhs, const Operator& rhs) {
    out.emplace_back(std::move(label), canonicalize(lhs(y) - rhs(y)));
  };
  add("L_right(a -| x)", L_right(left(a, x)), L_right(a) * L_right(x) + commutator(R_left(a), L_right(x)));
  add("L_right(x |- a)", L_right(right(x, a)), L_right(x) * L_right(a) + commutator(L_right(x), R_left(a)));
  add("L_left(a -| x)", L_left(left(a, x)), L_left(a) * L_left(x) + commutator(R_right(a), L_right(x)));
  add("L_left(x |- a)", L_left(right(x, a)), L_right(x) * L_left(a) + commutator(L_right(x), R_right(a)));
  add("R_right(a -| x)", R_right(left(a, x)), R_left(x) * R_right(a) + commutator(R_left(x), L_left(a)));
  add("R_right(x |- a)", R_right(right(x, a)), R_right(a) * R_right(x) + commutator(L_left(a), R_left(x)));
  add("R_left(a -| x)", R_left(left(a, x)), R_left(x) * R_left(a) + commutator(R_left(x), L_right(a)));
  add("R_left(x |- a)", R_left(right(x, a)), R_left(a) * R_left(x) + commutator(L_right(a), R_left(x)));
  add("[L_right(a), R_left(b)]", commutator(L_right(a), R_left(b)), commutator(R_left(a), L_right(b)));
  add("[L_left(a), R_left(b)]", commutator(L_left(a), R_left(b)), commutator(R_right(a), L_right(b)));
  add("L_right(<a,b>)", L_right(ab), commutator(L_right(a), L_right(b)) + Rational(2) * commutator(R_left(a), L_right(b)));
  add("L_left(<a,b>)", L_left(ab), commutator(L_left(a), L_right(b)) + Rational(2) * commutator(R_right(a), L_right(b)));
  return out;
}

inline Report nalt_operators() {
  Report r{"nalt-operators"};
  std::vector<Hypothesis> ha, hab;
  for (const Identity& g : library::gan("a")) {
    ha.push_back({g.label, g.poly, {var("a")}});
    hab.push_back(ha.back());
  }
  for (const Identity& g : library::gan("b")) hab.push_back({g.label, g.poly, {var("b")}});
  for (const auto& [label, p] : nalt_operator_identities()) {
    const auto vars = p.variables();
    const bool two = std::find(vars.begin(), vars.end(), var("b")) != vars.end();
    const std::size_t deg = p.degree().value_or(3);
    const Verdict v = conditional_consequence(p, two ? hab : ha, deg);
    r.ranks.push_back(v.ranks[0]);
    r.expect(v.holds, label + " for " + (two ? "a, b" : "a") + " in N_alt (degree " + std::to_string(deg) + ")" +
                          (v.holds ? "" : ", residual " + print(v.residual_poly)));
  }
  return r;
}

inline Report dijacobian_bso() {
  Report r{"dijacobian-bso"};
  const Polynomial jac = parse_polynomial("J(x,y,z)");
  const BSOFamily fam = bso_family(jac);
  const auto shown = library::jacobian_bso();
  for (std::size_t i = 0; i < 3; ++i) {
    r.expect(fam.members[i] == shown[i].poly, shown[i].label + " = " + print(fam.members[i]));
  }
  auto rel = [&](std::size_t idx) -> std::string {
    for (const auto& x : fam.relations) {
      if (x.index == idx) {
        std::string s = "J" + std::to_string(idx + 1) + "(x,y,z) = " + (x.sign < 0 ? "-" : "") + "J" +
                        std::to_string(x.source + 1) + "(";
        for (std::size_t k = 0; k < x.arguments.size(); ++k) s += (k ? "," : "") + x.arguments[k].name;
        return s + ")";
      }
    }
    return "none";
  };
  r.expect(rel(1) == "J2(x,y,z) = J1(y,z,x)", rel(1));
  r.expect(rel(2) == "J3(x,y,z) = J1(z,x,y)", rel(2));
  const auto basis = make_basis(Ambient::RightAnticommutative, vars({"x", "y", "z"}));
  const auto collapsed = straighten(collapse_right_anticommutative(fam.members[0]), basis);
  const auto dij = straighten(library::di_jacobian().poly, basis);
  r.expect(collapsed == dij, "J1 collapses to L(x,y,z) = (xy)z - x(yz) - (xz)y modulo right anticommutativity");
  const BSOFamily com = bso_family(parse_polynomial("com(x,y)"));
  r.expect(com.members[0] == parse_polynomial("dicom(x,y)"), "[x,y]_1 is the dicommutator");
  r.expect(com.members[1] == -rename(com.members[0], {{var("x"), var("y")}, {var("y"), var("x")}}),
           "[x,y]_2 = -[y,x]_1");
  return r;
}

inline Report flexible_stilde() {
  Report r{"flexible-stilde"};
  const VarietyPresentation* flex = find_variety("flexible-dialgebra");
  const Verdict v1 = holds_in_variety(parse_polynomial("St(x,y,z) + St(x,z,y)"), *flex, 3);
  r.expect(v1.holds, "St(x,y,z) = -St(x,z,y)");
  const Verdict v2 = holds_in_variety(parse_polynomial("2*St(x,y,z) - dL(x,y,z)"), *flex, 3);
  r.expect(v2.holds, "2 St(x,y,z) = L_{D^-}(x,y,z)");
  r.ranks = {v1.ranks[0]};
  r.dims = v1.dims;
  const BSOFamily s = bso_family(library::s_expanded().poly);
  r.expect(s.members[0] == library::s_tilde_expanded().poly, "S_1 is St");
  r.expect(s.members[0] == parse_polynomial("St(x,y,z)"), "St = (x,y,z)_-| + (y,z,x)_|- + (z,x,y)_x");
  auto perm = [](const Polynomial& p, const char* a, const char* b, const char* c) {
    return rename(p, {{var("x"), var(a)}, {var("y"), var(b)}, {var("z"), var(c)}});
  };
  r.expect(s.members[0] == perm(s.members[1], "z", "x", "y"), "S_1(x,y,z) = S_2(z,x,y)");
  r.expect(s.members[0] == perm(s.members[2], "y", "z", "x"), "S_1(x,y,z) = S_3(y,z,x)");
  return r;
}

inline Report lid_dimalcev() {
  Report r{"lid-dimalcev"};
  const MonomialBasis basis = ra_degree4_basis();
  const Identity lid = library::lid();
  const Identity dm = library::di_malcev();
  auto orbit_rows = [&](const Polynomial& f) {
    std::map<Variable, Variable> m;
    const auto vs = f.variables();
    for (std::size_t k = 0; k < vs.size(); ++k) m.emplace(vs[k], basis.variables()[k]);
    std::vector<std::vector<Rational>> rows;
    for (const Polynomial& g : sn_orbit(rename(f, m))) rows.push_back(straighten(g, basis));
    return rows;
  };
  const auto lid_rows = orbit_rows(lid.poly);
  const auto dm_rows = orbit_rows(dm.poly);
  QMatrix m(0, basis.dimension());
  for (const auto& row : lid_rows) m.append_row(row);
  const std::size_t r1 = rank(m);
  for (const auto& row : dm_rows) m.append_row(row);
  const std::size_t r2 = rank(m);
  QMatrix rev(0, basis.dimension());
  for (const auto& row : dm_rows) rev.append_row(row);
  const std::size_t q1 = rank(rev);
  for (const auto& row : lid_rows) rev.append_row(row);
  const std::size_t q2 = rank(rev);

  const Polynomial lid_abcd =
      rename(lid.poly, {{var("x1"), var("a")}, {var("x2"), var("b")}, {var("y"), var("c")}, {var("z"), var("d")}});
  const Polynomial dm_abcd =
      rename(dm.poly, {{var("x"), var("a")}, {var("y"), var("b")}, {var("z"), var("c")}, {var("t"), var("d")}});
  const Verdict fwd = is_consequence(lid_abcd, {dm}, Ambient::RightAnticommutative, 4);
  const Verdict back = is_consequence(dm_abcd, {lid}, Ambient::RightAnticommutative, 4);
  r.ranks = {r1, r2, q1, q2};
  r.dims = {m.rows(), m.cols()};
  r.matrix = m;
  r.details.push_back("rank after (LId) rows: " + std::to_string(r1) + "; rank after di-Malcev rows: " +
                      std::to_string(r2) + "; (LId) ⊆ ⟨di-Malcev⟩: " + (fwd.holds ? "yes" : "no") +
                      "; converse: " + (back.holds ? "yes" : "no"));
  r.expect(r1 == 8, "rank of the (LId) orbit is 8");
  r.expect(r2 == 20, "adding the di-Malcev orbit gives rank 20");
  r.expect(q1 == 20 && q2 == 20, "reverse order: rank 20, then no increase");
  r.expect(fwd.holds, "(LId) is a consequence of di-Malcev");
  r.expect(!back.holds && back.ranks[0] == 8 && back.ranks[1] == 9,
           "di-Malcev is not a consequence of (LId) (ranks " + std::to_string(back.ranks[0]) + " vs " +
               std::to_string(back.ranks[1]) + ")");
  if (!back.holds) r.residual = print(back.residual_poly);
  return r;
}

inline Report dimalcev_from_alternative() {
  Report r{"dimalcev-from-alternative"};
  const Identity target = library::di_malcev_dicommutator();
  const Verdict v = is_consequence(target.poly, library::alternative_dialgebra(), Ambient::Dialgebra, 4);
  r.ranks = v.ranks;
  r.dims = v.dims;
  r.expect(v.holds, "di-Malcev in the dicommutator lies in the degree-4 T-ideal of alternative dialgebras (rank " +
                        std::to_string(v.ranks[0]) + " of " + std::to_string(v.dims[0]) + ")");
  if (!v.holds) r.residual = print(v.residual_poly);
  const Polynomial ra = parse_polynomial("dicom(x, dicom(y,z)) + dicom(x, dicom(z,y))");
  r.expect(ra.is_zero(), "right anticommutativity of the dicommutator holds in every 0-dialgebra");
  return r;
}

inline Report teichmuller() {
  Report r{"teichmuller"};
  for (const Identity& t : library::teichmuller()) {
    r.expect(t.poly.is_zero(), t.label + " reduces to 0 in the free 0-dialgebra");
  }
  r.dims = {make_basis(4, Ambient::Dialgebra).dimension()};
  return r;
}

inline Report assoc_di_ideal() {
  Report r{"assoc-di-ideal"};
  for (const Identity& t : library::assoc_di_ideal()) {
    r.expect(t.poly.is_zero(), t.label + " holds in the free 0-dialgebra");
  }
  return r;
}

inline Report associative_nucleus() {
  Report r{"associative-nucleus"};
  std::vector<Hypothesis> hyps;
  for (const Identity& g : library::an("a")) hyps.push_back({g.label, g.poly, {var("a")}});
  for (const Identity& t : library::uno_identities()) {
    const Verdict v = conditional_consequence(t.poly, hyps, 4);
    r.ranks.push_back(v.ranks[0]);
    r.expect(v.holds, t.label + " for a in N(D)" + (v.holds ? "" : ", residual " + print(v.residual_poly)));
  }
  const Identity uniform = library::uno3_uniform_ax();
  const Verdict u = conditional_consequence(uniform.poly, hyps, 4);
  r.expect(!u.holds, uniform.label + " is not a consequence of AN(a)");
  return r;
}

/// Degree-3 identities of the dicommutator in associative dialgebras, computed as a
/// kernel, against the S3-module generated by the Leibniz identity.
inline Report kp_bso_diagram() {
  Report r{"kp-bso-diagram"};
  const MonomialBasis plain = make_basis(3, Ambient::Plain);
  std::vector<PointedWord> words;
  std::map<PointedWord, std::size_t> col;
  std::vector<std::map<std::size_t, Rational>> images;
  for (const Term& m : plain.monomials()) {
    auto rec = [](auto&& self, const Term& t) -> Polynomial {
      if (t.is_leaf()) return poly(t);
      return dicom(self(self, t.child(0)), self(self, t.child(1)));
    };
    std::map<std::size_t, Rational> img;
    for (const auto& [w, q] : normal_form_assoc_dialgebra(rec(rec, m))) {
      auto [it, inserted] = col.try_emplace(w, col.size());
      img[it->second] += q;
    }
    images.push_back(std::move(img));
  }
  QMatrix mt(col.size(), plain.dimension());  // transpose of the bracket map
  for (std::size_t i = 0; i < images.size(); ++i)
    for (const auto& [c, q] : images[i]) mt.at(c, i) = q;
  const auto kernel = null_space(mt);
  IdentityModule leib(plain);
  add_generator(leib, library::leibniz().poly);
  QMatrix k(0, plain.dimension());
  for (const auto& v : kernel) k.append_row(v);
  const QMatrix l = leib.matrix();
  const bool equal = row_space_equal(k, l);
  r.ranks = {kernel.size(), leib.rank()};
  r.dims = {plain.dimension(), 3 * factorial(3)};
  r.expect(equal, "kernel of the dicommutator map (dimension " + std::to_string(kernel.size()) +
                      ") equals the Leibniz S3-module (dimension " + std::to_string(leib.rank()) + ")");
  return r;
}

}  // namespace verify

struct NamedVerification {
  const char* name;
  Report (*run)();
};

inline const std::vector<NamedVerification>& named_verifications() {
  static const std::vector<NamedVerification> all = {
      {"leibniz-dicommutator", verify::leibniz_dicommutator},
      {"kp-associativity", verify::kp_associativity},
      {"kp-alternative", verify::kp_alternative},
      {"kp-nalt", verify::kp_nalt},
      {"gan-implies-alternative", verify::gan_implies_alternative},
      {"nalt-operators", verify::nalt_operators},
      {"dijacobian-bso", verify::dijacobian_bso},
      {"flexible-stilde", verify::flexible_stilde},
      {"lid-dimalcev", verify::lid_dimalcev},
      {"dimalcev-from-alternative", verify::dimalcev_from_alternative},
      {"teichmuller", verify::teichmuller},
      {"assoc-di-ideal", verify::assoc_di_ideal},
      {"associative-nucleus", verify::associative_nucleus},
      {"kp-bso-diagram", verify::kp_bso_diagram},
  };
  return all;
}

/// Runs one verification; unexpected exceptions become a failed report.
inline Report run_verification(const NamedVerification& v) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    r = v.run();
  } catch (const std::exception& e) {
    r = Report{v.name};
    r.expect(false, std::string("error: ") + e.what());
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::optional<Report> run_verification(std::string_view name) {
  for (const auto& v : named_verifications()) {
    if (name == v.name) return run_verification(v);
  }
  return std::nullopt;
}

}  // namespace dialg
