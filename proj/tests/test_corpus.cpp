#include <gtest/gtest.h>

#include "dialg/dialg.hpp"

using namespace dialg;

namespace {

const IdentityFile& algebra() {
  static const IdentityFile f = load_file(DIALG_DATA_DIR "/algebra.ids");
  return f;
}

const IdentityFile& dialgebra() {
  static const IdentityFile f = load_file(DIALG_DATA_DIR "/dialgebra.ids");
  return f;
}

void expect_entry(const IdentityFile& f, const Identity& id, const std::string& label) {
  const IdentityEntry* e = f.find(label);
  ASSERT_NE(e, nullptr) << label;
  EXPECT_EQ(e->parsed.poly, id.poly) << label;
}

}  // namespace

TEST(Corpus, Parses) {
  EXPECT_EQ(algebra().signature, Signature::Plain);
  EXPECT_EQ(dialgebra().signature, Signature::Dialgebra);
  EXPECT_EQ(algebra().entries.size(), 15u);
  EXPECT_EQ(dialgebra().entries.size(), 78u);
}

TEST(Corpus, AlgebraMatchesLibrary) {
  const auto& f = algebra();
  expect_entry(f, library::associativity(), "associativity");
  expect_entry(f, library::nalt_expanded()[0], "nalt1");
  expect_entry(f, library::nalt_expanded()[1], "nalt2");
  expect_entry(f, library::sagle(), "Sagle");
  expect_entry(f, library::leibniz(), "Leibniz");
  expect_entry(f, library::di_jacobian(), "di-Jacobian");
  expect_entry(f, library::s_expanded(), "S");
  expect_entry(f, library::right_anticommutativity(), "right-anticommutativity");
  expect_entry(f, library::di_malcev(), "di-Malcev");
  EXPECT_EQ(f.find("LId")->parsed.poly, *library::lid().nonlinear);
  EXPECT_EQ(linearize_all(f.find("LId")->parsed.poly), library::lid().poly);
}

TEST(Corpus, DialgebraMatchesLibrary) {
  const auto& f = dialgebra();
  for (const Identity& id : library::associative_dialgebra()) expect_entry(f, id, id.label);
  for (const Identity& id : library::alternative_dialgebra()) expect_entry(f, id, id.label);
  for (const Identity& id : library::flexible_dialgebra()) expect_entry(f, id, id.label);
  for (const Identity& id : library::nalt_kp()) expect_entry(f, id, id.label);
  const auto assoc = library::nalt_associator_form();
  for (const Identity& id : assoc) expect_entry(f, id, id.label + "*");
  for (const Identity& id : library::gan("a")) expect_entry(f, id, id.label);
  for (const Identity& id : library::an("a")) expect_entry(f, id, id.label);
  for (const Identity& id : library::jacobian_bso()) expect_entry(f, id, id.label);
  for (const Identity& id : library::teichmuller()) expect_entry(f, id, id.label);
  for (const Identity& id : library::assoc_di_ideal()) expect_entry(f, id, id.label);
  for (const Identity& id : library::uno_identities()) expect_entry(f, id, id.label);
  expect_entry(f, library::di_malcev_dicommutator(), "di-Malcev<>");
  expect_entry(f, library::s_tilde_expanded(), "St");
}

TEST(Corpus, BarIdentitiesReduceToZero) {
  for (const char* label : {"left-bar", "right-bar", "dicommutator"})
    EXPECT_TRUE(dialgebra().find(label)->parsed.poly.is_zero()) << label;
  const Polynomial raw = expand_raw(dialgebra().find("left-bar")->parsed.expr);
  EXPECT_EQ(raw, library::bar_identities()[0].poly);
}

TEST(Corpus, PrintParseIsStable) {
  for (const IdentityFile* f : {&algebra(), &dialgebra()}) {
    const std::string once = print_file(*f);
    EXPECT_EQ(print_file(parse_file(once)), once);
    const IdentityFile again = parse_file(once);
    for (std::size_t i = 0; i < f->entries.size(); ++i)
      EXPECT_EQ(again.entries[i].parsed.poly, f->entries[i].parsed.poly) << f->entries[i].label;
  }
}
