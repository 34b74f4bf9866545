#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dialg/dialg.hpp"

using namespace dialg;
using json = nlohmann::json;

namespace {

struct Usage : Error {
  using Error::Error;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Ambient ambient_flag(const std::string& s) {
  auto a = parse_ambient(s);
  if (!a) throw Usage("unknown space '" + s + "' (expected plain, dialgebra or ra)");
  return *a;
}

std::size_t degree_flag(std::size_t degree) {
  if (degree < 1) throw Usage("degree must be positive");
  require_degree(degree, effective_degree_cap());
  return degree;
}

json verdict_json(const Verdict& v) {
  json j{{"verdict", v.holds}, {"ranks", v.ranks}, {"dims", v.dims}, {"generators", v.generators}};
  if (!v.holds) {
    json res = json::array();
    for (const auto& [c, q] : v.residual) res.push_back({c, q.get_str()});
    j["residual"] = res;
    j["residual_polynomial"] = print(v.residual_poly);
  }
  return j;
}

void print_verdict(const Verdict& v, bool as_json) {
  if (as_json) {
    json j = verdict_json(v);
    j["schema"] = 1;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "verdict: " << (v.holds ? "true" : "false") << "\n";
  std::cout << "ranks:";
  for (auto r : v.ranks) std::cout << " " << r;
  std::cout << "\ndims:";
  for (auto d : v.dims) std::cout << " " << d;
  std::cout << "\ngenerators:";
  for (const auto& g : v.generators) std::cout << " " << g;
  std::cout << "\n";
  if (!v.holds) std::cout << "residual: " << print(v.residual_poly) << "\n";
}

const IdentityEntry& entry(const IdentityFile& f, const std::string& label) {
  const IdentityEntry* e = f.find(label);
  if (e == nullptr) throw Usage("no identity labelled '" + label + "'");
  return *e;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial identities in nonassociative algebras and dialgebras"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");

  std::string file;
  std::string central = "all";
  std::string center = "all";
  std::size_t degree = 0;
  std::string space;
  std::string variety;
  std::string target;
  std::string generators;
  std::string left_labels, right_labels;
  std::string dump_path;
  std::string name;

  auto* parse_cmd = app.add_subcommand("parse", "parse an identity file and print it normalised");
  parse_cmd->add_option("file", file)->required();

  auto* kp_cmd = app.add_subcommand("kp", "KP identities of every identity in a file");
  kp_cmd->add_option("file", file)->required();
  kp_cmd->add_option("--central", central, "central variable or 'all'");

  auto* bso_cmd = app.add_subcommand("bso", "BSO expansions of every operation in a file");
  bso_cmd->add_option("file", file)->required();
  bso_cmd->add_option("--center", center, "argument index (1-based) or 'all'");

  auto* basis_cmd = app.add_subcommand("basis", "ordered multilinear basis");
  basis_cmd->add_option("--degree", degree)->required();
  basis_cmd->add_option("--space", space)->required();

  auto* cons_cmd = app.add_subcommand("check-consequence", "is one identity a consequence of others");
  cons_cmd->add_option("file", file)->required();
  cons_cmd->add_option("--target", target, "label of the target identity")->required();
  cons_cmd->add_option("--generators", generators, "comma-separated labels (default: all other entries)");
  cons_cmd->add_option("--degree", degree);
  cons_cmd->add_option("--space", space);
  cons_cmd->add_option("--variety", variety, "preset variety; replaces the generators");
  cons_cmd->add_option("--dump-matrix", dump_path);

  auto* eq_cmd = app.add_subcommand("check-equivalence", "do two lists of identities generate the same module");
  eq_cmd->add_option("file", file)->required();
  eq_cmd->add_option("--left", left_labels)->required();
  eq_cmd->add_option("--right", right_labels)->required();
  eq_cmd->add_option("--degree", degree);
  eq_cmd->add_option("--space", space);

  auto* verify_cmd = app.add_subcommand("verify", "run a named verification or 'all'");
  verify_cmd->add_option("name", name)->required();
  verify_cmd->add_option("--dump-matrix", dump_path);

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (parse_cmd->parsed()) {
      const IdentityFile f = load_file(file);
      if (as_json) {
        json ids = json::array();
        for (const auto& e : f.entries) ids.push_back(to_json(e.label, e.parsed.poly));
        std::cout << json{{"schema", 1}, {"signature", to_string(f.signature)}, {"identities", ids}}.dump(2) << "\n";
      } else {
        std::cout << print_file(f);
      }
      return 0;
    }

    if (kp_cmd->parsed()) {
      const IdentityFile f = load_file(file);
      json out = json::array();
      for (const auto& e : f.entries) {
        std::vector<Variable> order;
        if (central != "all") order.push_back(var(central));
        Identity id = e.identity();
        id.poly = multilinear_form(id.poly);
        const KPResult res = kp_transform(id, order);
        json kps = json::array();
        for (const auto& k : res.kp_identities) {
          if (as_json) {
            json j = to_json(k.identity.label, k.identity.poly);
            j["central"] = k.central.name;
            j["duplicate"] = k.duplicate;
            kps.push_back(j);
          } else {
            std::cout << k.identity.label << ": " << print(k.identity.poly) << (k.duplicate ? "  (duplicate)" : "")
                      << "\n";
          }
        }
        if (as_json) {
          json zs = json::array();
          for (const auto& z : res.zero_identities) zs.push_back(to_json(z.label, z.poly));
          out.push_back({{"label", e.label}, {"kp_identities", kps}, {"zero_identities", zs}});
        }
      }
      if (as_json) std::cout << json{{"schema", 1}, {"results", out}}.dump(2) << "\n";
      return 0;
    }

    if (bso_cmd->parsed()) {
      const IdentityFile f = load_file(file);
      json out = json::array();
      for (const auto& e : f.entries) {
        const Polynomial op = multilinear_form(e.parsed.poly);
        const BSOFamily fam = op == e.parsed.poly ? bso_family(op, e.parsed.arguments) : bso_family(op);
        std::vector<std::size_t> which;
        if (center == "all") {
          for (std::size_t i = 1; i <= fam.members.size(); ++i) which.push_back(i);
        } else {
          std::size_t i = 0;
          try {
            i = std::stoul(center);
          } catch (const std::exception&) {
            throw Usage("--center expects an argument index or 'all'");
          }
          if (i < 1 || i > fam.members.size()) throw Usage("--center out of range");
          which.push_back(i);
        }
        json members = json::array();
        for (std::size_t i : which) {
          const std::string lbl = e.label + "_" + std::to_string(i);
          if (as_json) members.push_back(to_json(lbl, fam.members[i - 1]));
          else std::cout << lbl << ": " << print(fam.members[i - 1]) << "\n";
        }
        json rels = json::array();
        for (const auto& r : fam.relations) {
          std::string args;
          for (std::size_t k = 0; k < r.arguments.size(); ++k) args += (k ? "," : "") + r.arguments[k].name;
          std::string lhs_args;
          for (std::size_t k = 0; k < fam.arguments.size(); ++k) lhs_args += (k ? "," : "") + fam.arguments[k].name;
          const std::string text = e.label + "_" + std::to_string(r.index + 1) + "(" + lhs_args + ") = " +
                                   (r.sign < 0 ? "-" : "") + e.label + "_" + std::to_string(r.source + 1) + "(" +
                                   args + ")";
          if (as_json) rels.push_back(text);
          else if (center == "all") std::cout << "  " << text << "\n";
        }
        if (as_json) out.push_back({{"label", e.label}, {"members", members}, {"relations", rels}});
      }
      if (as_json) std::cout << json{{"schema", 1}, {"results", out}}.dump(2) << "\n";
      return 0;
    }

    if (basis_cmd->parsed()) {
      const Ambient a = ambient_flag(space);
      const MonomialBasis b = make_basis(degree_flag(degree), a);
      if (as_json) {
        json monos = json::array();
        for (const Term& t : b.monomials()) monos.push_back(print(t));
        std::cout << json{{"schema", 1}, {"degree", degree}, {"space", to_string(a)}, {"dimension", b.dimension()},
                          {"monomials", monos}}
                         .dump(2)
                  << "\n";
      } else {
        for (const Term& t : b.monomials()) std::cout << (a == Ambient::Dialgebra ? print(t) : print_compact(t)) << "\n";
      }
      return 0;
    }

    if (cons_cmd->parsed()) {
      const IdentityFile f = load_file(file);
      const Polynomial t = multilinear_form(entry(f, target).parsed.poly);
      if (degree == 0) degree = t.degree().value_or(1);
      degree_flag(degree);
      Verdict v;
      if (!variety.empty()) {
        const VarietyPresentation* pv = find_variety(variety);
        if (pv == nullptr) throw Usage("unknown variety '" + variety + "'");
        v = holds_in_variety(t, *pv, degree);
      } else {
        std::vector<Identity> gens;
        if (!generators.empty()) {
          for (const auto& l : split(generators)) gens.push_back(entry(f, l).identity());
        } else {
          for (const auto& e : f.entries) {
            if (e.label != target) gens.push_back(e.identity());
          }
        }
        Ambient a = space.empty() ? (t.signature() == Signature::Dialgebra ? Ambient::Dialgebra : Ambient::Plain)
                                  : ambient_flag(space);
        v = is_consequence(t, gens, a, degree);
        if (!dump_path.empty()) {
          IdentityModule mod(make_basis(a, t.is_zero() ? default_variables(degree) : t.variables()));
          for (const auto& g : gens) add_generator(mod, g.poly);
          dump_matrix(mod.matrix(), dump_path);
        }
      }
      print_verdict(v, as_json);
      return v.holds ? 0 : 1;
    }

    if (eq_cmd->parsed()) {
      const IdentityFile f = load_file(file);
      std::vector<Identity> lhs, rhs;
      for (const auto& l : split(left_labels)) lhs.push_back(entry(f, l).identity());
      for (const auto& l : split(right_labels)) rhs.push_back(entry(f, l).identity());
      if (lhs.empty() || rhs.empty()) throw Usage("--left and --right need at least one label");
      if (degree == 0) {
        for (const auto& id : lhs) degree = std::max(degree, id.poly.degree().value_or(1));
        for (const auto& id : rhs) degree = std::max(degree, id.poly.degree().value_or(1));
      }
      degree_flag(degree);
      const Signature s = lhs.front().poly.signature();
      const Ambient a = space.empty() ? (s == Signature::Dialgebra ? Ambient::Dialgebra : Ambient::Plain)
                                      : ambient_flag(space);
      const Verdict v = are_equivalent(lhs, rhs, a, degree);
      print_verdict(v, as_json);
      return v.holds ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
      std::vector<Report> reports;
      if (name == "all") {
        for (const auto& v : named_verifications()) reports.push_back(run_verification(v));
      } else {
        auto r = run_verification(name);
        if (!r) throw Usage("no verification named '" + name + "'");
        reports.push_back(std::move(*r));
      }
      bool all = true;
      json out = json::array();
      for (const Report& r : reports) {
        all = all && r.passed;
        if (!dump_path.empty() && r.matrix) dump_matrix(*r.matrix, dump_path);
        if (as_json) {
          json j{{"name", r.name}, {"verdict", r.passed}, {"ranks", r.ranks}, {"dims", r.dims},
                 {"details", r.details}};
          if (r.residual) j["residual"] = *r.residual;
          out.push_back(j);
        } else {
          std::cout << r.name << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
          for (const auto& d : r.details) std::cout << "  " << d << "\n";
          if (r.residual) std::cout << "  residual: " << *r.residual << "\n";
        }
      }
      if (as_json) std::cout << json{{"schema", 1}, {"reports", out}}.dump(2) << "\n";
      return all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::string code = "error";
    if (dynamic_cast<const ParseError*>(&e)) code = "parse";
    else if (dynamic_cast<const DegreeError*>(&e)) code = "degree";
    else if (dynamic_cast<const SignatureError*>(&e)) code = "signature";
    else if (dynamic_cast<const MultilinearityError*>(&e)) code = "multilinearity";
    else if (dynamic_cast<const MacroError*>(&e)) code = "macro";
    else if (dynamic_cast<const Usage*>(&e)) code = "usage";
    if (as_json) {
      std::cerr << json{{"schema", 1}, {"error", {{"code", code}, {"message", e.what()}}}}.dump() << "\n";
    } else {
      std::cerr << "dialg: " << e.what() << "\n";
    }
    return 2;
  }
  return 2;
}
