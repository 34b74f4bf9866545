#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dialg/parser.hpp"
#include "dialg/polynomial.hpp"

namespace dialg::library {

inline Identity id(std::string label, std::string_view text) {
  return {std::move(label), parse_polynomial(text), std::nullopt};
}

/// Kept unreduced: canonical forms of the bar identities are zero.
inline std::vector<Identity> bar_identities() {
  auto raw = [](std::string label, std::string_view text) {
    return Identity{std::move(label), expand_raw(parse_identity(text).expr), std::nullopt};
  };
  return {raw("left-bar", "(x -| y) |- z = (x |- y) |- z"), raw("right-bar", "x -| (y -| z) = x -| (y |- z)")};
}

inline Identity associativity() { return id("associativity", "(x*y)*z = x*(y*z)"); }

inline std::vector<Identity> associative_dialgebra() {
  return {id("left-associativity", "(x -| y) -| z = x -| (y -| z)"),
          id("right-associativity", "(x |- y) |- z = x |- (y |- z)"),
          id("inner-associativity", "(x |- y) -| z = x |- (y -| z)")};
}

inline std::vector<Identity> alternative_dialgebra() {
  return {id("alt1", "al(x,y,z) + ar(z,y,x)"), id("alt2", "al(x,y,z) - ar(y,z,x)"),
          id("alt3", "ax(x,y,z) + ar(x,z,y)")};
}

inline std::vector<Identity> flexible_dialgebra() {
  return {id("flex1", "al(x,y,z) + ar(z,y,x)"), id("flex2", "ax(x,y,z) + ax(z,y,x)")};
}

/// (x,x,y) and (x,y,y), with their full linearizations.
inline std::vector<Identity> alternativity() {
  Identity left{"left-alternativity", linearize(parse_polynomial("as(x,x,y)"), var("x")), parse_polynomial("as(x,x,y)")};
  Identity right{"right-alternativity", linearize(parse_polynomial("as(x,y,y)"), var("y")),
                 parse_polynomial("as(x,y,y)")};
  return {left, right};
}

inline std::vector<Identity> nalt_expanded() {
  return {id("nalt1", "((a*x)*y) + ((x*a)*y) - (a*(x*y)) - (x*(a*y))"),
          id("nalt2", "((x*y)*a) + ((x*a)*y) - (x*(y*a)) - (x*(a*y))")};
}

/// The KP identities of the two expanded Nalt identities, labelled 1 to 6.
inline std::vector<Identity> nalt_kp() {
  return {
      id("1", "((a -| x) -| y) + ((x |- a) -| y) - (a -| (x -| y)) - (x |- (a -| y))"),
      id("2", "((a |- x) -| y) + ((x -| a) -| y) - (a |- (x -| y)) - (x -| (a -| y))"),
      id("3", "((a |- x) |- y) + ((x |- a) |- y) - (a |- (x |- y)) - (x |- (a |- y))"),
      id("4", "((x |- y) |- a) + ((x |- a) -| y) - (x |- (y |- a)) - (x |- (a -| y))"),
      id("5", "((x -| y) -| a) + ((x -| a) -| y) - (x -| (y -| a)) - (x -| (a -| y))"),
      id("6", "((x |- y) -| a) + ((x |- a) |- y) - (x |- (y -| a)) - (x |- (a |- y))"),
  };
}

/// (1)-(6) written with dialgebra associators.
inline std::vector<Identity> nalt_associator_form() {
  return {id("1", "al(a,x,y) + ax(x,a,y)"), id("2", "ax(a,x,y) + al(x,a,y)"), id("3", "ar(a,x,y) + ar(x,a,y)"),
          id("4", "ar(x,y,a) + ax(x,a,y)"), id("5", "al(x,y,a) + al(x,a,y)"), id("6", "ax(x,y,a) + ar(x,a,y)")};
}

/// The generalized alternative di-nucleus conditions for the element `a`, with
/// generic variables u, v.
inline std::vector<Identity> gan(std::string_view a) {
  const std::string s(a);
  auto A = [&](const char* m, const std::string& p, const std::string& q, const std::string& r) {
    return std::string(m) + "(" + p + "," + q + "," + r + ")";
  };
  return {id("GAN1(" + s + ")", A("al", s, "u", "v") + " + " + A("ax", "u", s, "v")),
          id("GAN1'(" + s + ")", A("al", s, "u", "v") + " - " + A("ar", "u", "v", s)),
          id("GAN2(" + s + ")", A("ax", s, "u", "v") + " + " + A("al", "u", s, "v")),
          id("GAN2'(" + s + ")", A("ax", s, "u", "v") + " - " + A("al", "u", "v", s)),
          id("GAN3(" + s + ")", A("ar", s, "u", "v") + " + " + A("ar", "u", s, "v")),
          id("GAN3'(" + s + ")", A("ar", s, "u", "v") + " - " + A("ax", "u", "v", s))};
}

/// The associative di-nucleus conditions for the element `a`.
inline std::vector<Identity> an(std::string_view a) {
  const std::string s(a);
  std::vector<Identity> out;
  const char* names[] = {"AN1", "AN2", "AN3"};
  const char* assoc[] = {"al", "ax", "ar"};
  for (int k = 0; k < 3; ++k) {
    const std::string m = assoc[k];
    out.push_back(id(std::string(names[k]) + "(" + s + ",u,v)", m + "(" + s + ",u,v)"));
    out.push_back(id(std::string(names[k]) + "(u," + s + ",v)", m + "(u," + s + ",v)"));
    out.push_back(id(std::string(names[k]) + "(u,v," + s + ")", m + "(u,v," + s + ")"));
  }
  return out;
}

inline std::vector<Identity> jacobian_bso() {
  return {id("J1", "((x -| y) -| z) + ((y |- z) |- x) + ((z |- x) -| y)"),
          id("J2", "((x |- y) -| z) + ((y -| z) -| x) + ((z |- x) |- y)"),
          id("J3", "((x |- y) |- z) + ((y |- z) -| x) + ((z -| x) -| y)")};
}

inline Identity di_jacobian() { return id("L", "((x*y)*z) - (x*(y*z)) - ((x*z)*y)"); }

inline Identity s_expanded() {
  return id("S", "((x*y)*z) - (x*(y*z)) + ((y*z)*x) - (y*(z*x)) + ((z*x)*y) - (z*(x*y))");
}

inline Identity s_tilde_expanded() {
  return id("St", "((x -| y) -| z) - (x -| (y -| z)) + ((y |- z) |- x) - (y |- (z |- x)) + ((z |- x) -| y) - "
                  "(z |- (x -| y))");
}

inline Identity right_anticommutativity() { return id("ra", "x*(y*z) + x*(z*y)"); }

inline Identity di_malcev() {
  return id("di-Malcev", "((x*y)*z)*t - ((x*t)*y)*z - (x*(z*t))*y - (x*z)*(y*t) - x*((y*z)*t)");
}

/// L(y,x,zx) = L(y,z,x)x, linearized in x.
inline Identity lid() {
  const Polynomial nonlinear = parse_polynomial("L(y, x, z*x) - L(y, z, x)*x");
  return {"LId", linearize(nonlinear, var("x")), nonlinear};
}

inline Identity sagle() {
  return id("Sagle", "(x*z)*(y*t) - ((x*y)*z)*t - ((y*z)*t)*x - ((z*t)*x)*y - ((t*x)*y)*z");
}

inline Identity anticommutativity() { return id("anticommutativity", "x*y + y*x"); }

inline Identity leibniz() { return id("Leibniz", "(x*y)*z - (x*z)*y - x*(y*z)"); }

inline std::vector<Identity> teichmuller() {
  return {
      id("T1", "al(w -| x, y, z) - al(w, x -| y, z) + al(w, x, y -| z) = (w -| al(x, y, z)) + (al(w, x, y) -| z)"),
      id("T2", "al(w |- x, y, z) - ax(w, x -| y, z) + ax(w, x, y -| z) = (w |- al(x, y, z)) + (ax(w, x, y) -| z)"),
      id("T3", "ax(w |- x, y, z) - ax(w, x |- y, z) + ar(w, x, y -| z) = (w |- ax(x, y, z)) + (ar(w, x, y) -| z)"),
      id("T4", "ar(w |- x, y, z) - ar(w, x |- y, z) + ar(w, x, y |- z) = (w |- ar(x, y, z)) + (ar(w, x, y) |- z)"),
  };
}

/// Identities showing that sums and right multiples of associators form a di-ideal.
/// The plain-equality lines carry the signs that make them hold identically.
inline std::vector<Identity> assoc_di_ideal() {
  std::vector<Identity> out;
  const char* star[] = {"al", "ax", "ar"};
  for (const char* s : star) {
    const std::string p = std::string(s) + "(x, y, z)";
    out.push_back(id(std::string("right-left[") + s + "]",
                     "(" + p + " -| t) -| u = al(" + p + ", t, u) + (" + p + " -| (t -| u))"));
  }
  out.push_back(id("right-right[ar]", "(ar(x, y, z) |- t) |- u = ar(ar(x, y, z), t, u) + (ar(x, y, z) |- (t |- u))"));
  out.push_back(id("T1[u]", "u -| al(x, y, z) = al(u -| x, y, z) - al(u, x -| y, z) + al(u, x, y -| z) - (al(u, x, y) -| z)"));
  out.push_back(id("T2[u]", "u |- al(x, y, z) = al(u |- x, y, z) - ax(u, x -| y, z) + ax(u, x, y -| z) - (ax(u, x, y) -| z)"));
  out.push_back(id("T3[u]", "u |- ax(x, y, z) = ax(u |- x, y, z) - ax(u, x |- y, z) + ar(u, x, y -| z) - (ar(u, x, y) -| z)"));
  out.push_back(id("T4[u]", "u |- ar(x, y, z) = ar(u |- x, y, z) - ar(u, x |- y, z) + ar(u, x, y |- z) - (ar(u, x, y) |- z)"));
  for (const char* s : star) {
    const std::string p = std::string(s) + "(x, y, z)";
    out.push_back(id(std::string("left-right[") + s + "]",
                     "u |- (" + p + " -| t) = ((u |- " + p + ") -| t) - ax(u, " + p + ", t)"));
  }
  out.push_back(id("left-right-right[ar]", "u |- (ar(x, y, z) |- t) = ((u |- ar(x, y, z)) |- t) - ar(u, ar(x, y, z), t)"));
  out.push_back(id("left-left[al]", "u -| (al(x, y, z) -| t) = ((u -| al(x, y, z)) -| t) - al(u, al(x, y, z), t)"));
  return out;
}

/// Element identities satisfied by a in the associative di-nucleus N(D).
inline std::vector<Identity> uno_identities() {
  std::vector<Identity> out;
  const char* star[] = {"al", "ax", "ar"};
  out.push_back(id("uno1", "al(a -| x, y, z) = a -| al(x, y, z)"));
  for (const char* s : star) {
    out.push_back(id(std::string("uno2[") + s + "]",
                     std::string(s) + "(a |- x, y, z) = a |- " + s + "(x, y, z)"));
  }
  out.push_back(id("uno3[al]", "al(x -| a, y, z) = al(x, a -| y, z)"));
  out.push_back(id("uno3[ax]", "ax(x -| a, y, z) = ax(x, a |- y, z)"));
  out.push_back(id("uno3[ar]", "ar(x -| a, y, z) = ar(x, a -| y, z)"));
  out.push_back(id("uno4", "al(x |- a, y, z) = ax(x, a -| y, z)"));
  for (const char* s : star) {
    out.push_back(id(std::string("uno5[") + s + "]",
                     std::string(s) + "(x, y -| a, z) = " + s + "(x, y, a |- z)"));
  }
  out.push_back(id("uno6", "ax(x, y |- a, z) = ar(x, y, a -| z)"));
  for (const char* s : star) {
    out.push_back(id(std::string("uno7[") + s + "]",
                     std::string(s) + "(x, y, z -| a) = " + s + "(x, y, z) -| a"));
  }
  out.push_back(id("uno8", "ar(x, y, z |- a) = ar(x, y, z) |- a"));
  return out;
}

/// The uniform reading (x -| a, y, z)x = (x, a -| y, z)x, which is not a consequence of AN(a).
inline Identity uno3_uniform_ax() { return id("uno3[ax] uniform", "ax(x -| a, y, z) = ax(x, a -| y, z)"); }

/// di-Malcev polynomial with every product read as the dicommutator.
inline Identity di_malcev_dicommutator() {
  return id("di-Malcev<>",
            "dicom(dicom(dicom(x,y),z),t) - dicom(dicom(dicom(x,t),y),z) - dicom(dicom(x,dicom(z,t)),y)"
            " - dicom(dicom(x,z),dicom(y,t)) - dicom(x,dicom(dicom(y,z),t))");
}

}  // namespace dialg::library
