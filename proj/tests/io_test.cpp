#include <gtest/gtest.h>

#include "monoclean/monoclean.hpp"

using namespace monoclean;

namespace {

Monomial m(std::vector<long long> e) {
  std::vector<Exponent> v(e.begin(), e.end());
  return Monomial(std::move(v));
}

}  // namespace

TEST(Parse, IdealFile) {
  auto file = parse_input_string(
      "# a comment\n"
      "vars: x y z\n"
      "gen: x^2*y\n"
      "gen: z   # trailing comment\n");
  EXPECT_EQ(file.vars.names(), (std::vector<std::string>{"x", "y", "z"}));
  auto ideal = file.ideal();
  EXPECT_EQ(ideal.generators(), (std::vector<Monomial>{m({0, 0, 1}), m({2, 1, 0})}));
  EXPECT_FALSE(file.has_adjoins);
}

TEST(Parse, FiltrationFile) {
  auto file = parse_input_string(
      "vars: x y\n"
      "gen: x*y\n"
      "adjoin: x\n"
      "adjoin: 1\n");
  ASSERT_TRUE(file.has_adjoins);
  auto filtration = file.filtration();
  EXPECT_EQ(filtration.length(), 2);
  EXPECT_TRUE(verify(filtration).valid);
}

TEST(Parse, DecompositionFile) {
  auto file = parse_input_string(
      "vars: x y\n"
      "gen: x*y\n"
      "space: x | x\n"
      "space: 1 | y\n");
  ASSERT_TRUE(file.has_spaces);
  auto decomposition = file.decomposition();
  EXPECT_EQ(decomposition.spaces.size(), 2u);
  EXPECT_EQ(decomposition.spaces[0].zvars, std::vector<int>{0});
  EXPECT_TRUE(verify_decomposition(decomposition));
}

TEST(Parse, EmptyZMarker) {
  auto file = parse_input_string("vars: x y\ngen: x*y\nspace: x^3 | -\n");
  EXPECT_TRUE(file.spaces[0].zvars.empty());
  EXPECT_EQ(file.spaces[0].u, m({3, 0}));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_input_string("gen: x\n"), ParseError);            // vars first
  EXPECT_THROW(parse_input_string("vars: x x\n"), ParseError);         // duplicate name
  EXPECT_THROW(parse_input_string("vars: x\ngen: y\n"), ParseError);   // unknown variable
  EXPECT_THROW(parse_input_string("vars: x\ngen: x^a\n"), ParseError); // bad exponent
  EXPECT_THROW(parse_input_string("vars: x\nbogus: x\n"), ParseError); // unknown directive
  EXPECT_THROW(parse_input_string(""), ParseError);                    // no vars at all
  EXPECT_THROW(parse_input_string("vars: x\nspace: x x\n"), ParseError);
}

TEST(Format, MonomialAndIdeal) {
  VariableSet vars({"x", "y"});
  EXPECT_EQ(format_monomial(m({2, 1}), vars), "x^2*y");
  EXPECT_EQ(format_monomial(m({0, 0}), vars), "1");
  MonomialIdeal ideal(vars, {m({2, 0}), m({1, 1})});
  EXPECT_EQ(format_ideal(ideal), "x*y x^2");
  EXPECT_EQ(format_ideal(MonomialIdeal::zero(vars)), "0");
}

TEST(Format, FaceAndPrime) {
  VariableSet vars({"x", "y"});
  Face a({Face::Entry{Exponent(1)}, Face::Entry{}});
  EXPECT_EQ(format_face(a), "(1,inf)");
  EXPECT_EQ(format_prime(PrimeSupport(2, {0, 1}), vars), "(x,y)");
  EXPECT_EQ(format_prime(PrimeSupport(2, {}), vars), "()");
}

TEST(Format, Poly) {
  Poly p;
  poly_add_term(p, 0, 1);
  poly_add_term(p, 2, -1);
  EXPECT_EQ(format_poly(p), "1 - t^2");
  EXPECT_EQ(format_poly(Poly{}), "0");
  Poly q;
  poly_add_term(q, 1, 2);
  EXPECT_EQ(format_poly(q), "2t");
}

TEST(RoundTrip, IdealEmitParse) {
  VariableSet vars({"a", "b", "c", "d"});
  MonomialIdeal ideal(vars, {m({1, 1, 1, 0}), m({2, 0, 0, 1}), m({0, 1, 0, 2})});
  auto file = parse_input_string(emit_ideal_file(ideal));
  EXPECT_EQ(file.ideal(), ideal);
}

TEST(RoundTrip, FiltrationEmitParse) {
  VariableSet vars({"x", "y"});
  PrimeFiltration f(MonomialIdeal(vars, {m({1, 1})}), {m({1, 0}), m({0, 0})});
  auto file = parse_input_string(emit_filtration_file(f));
  auto parsed = file.filtration();
  EXPECT_EQ(parsed.base(), f.base());
  EXPECT_EQ(parsed.adjoined(), f.adjoined());
}

TEST(RoundTrip, DecompositionEmitParse) {
  VariableSet vars({"x", "y"});
  StanleyDecomposition d{MonomialIdeal(vars, {m({1, 1})}),
                         {StanleySpace{m({1, 0}), {0}}, StanleySpace{m({0, 0}), {1}}}};
  auto file = parse_input_string(emit_decomposition_file(d));
  auto parsed = file.decomposition();
  EXPECT_EQ(parsed.ideal, d.ideal);
  ASSERT_EQ(parsed.spaces.size(), 2u);
  EXPECT_EQ(parsed.spaces[0], d.spaces[0]);
  EXPECT_EQ(parsed.spaces[1], d.spaces[1]);
}

TEST(RoundTrip, PolarizeEmitSpecializeRecoversInput) {
  VariableSet vars({"x", "y"});
  MonomialIdeal ideal(vars, {m({2, 0}), m({1, 1})});
  auto [ring, polarized] = polarize_ideal(ideal);
  // emit the polarized ideal, re-parse it in the target ring, specialize
  auto file = parse_input_string(emit_ideal_file(polarized));
  EXPECT_EQ(file.vars, ring.target());
  EXPECT_EQ(specialize(ring, file.ideal()), ideal);
}

TEST(Machine, SortedKeysAndDeterminism) {
  std::map<std::string, std::string> fields{{"b", "2"}, {"a", "1"}, {"c", "3"}};
  EXPECT_EQ(format_machine_report(fields), "a: 1\nb: 2\nc: 3\n");
  EXPECT_EQ(format_machine_report(fields), format_machine_report(fields));
}

TEST(Machine, Digest) {
  EXPECT_EQ(fnv1a_digest("abc"), fnv1a_digest("abc"));
  EXPECT_NE(fnv1a_digest("abc"), fnv1a_digest("abd"));
  EXPECT_EQ(fnv1a_digest("").size(), 16u);
}

TEST(Audit, CleanRunOnSmallParameters) {
  auto result = random_audit(5, 3, 3, 10);
  EXPECT_EQ(result.checked, 10);
  EXPECT_TRUE(result.ok()) << result.violations.front();
}

TEST(Audit, DeterministicAcrossRuns) {
  auto a = random_audit(9, 2, 4, 5);
  auto b = random_audit(9, 2, 4, 5);
  EXPECT_EQ(a.checked, b.checked);
  EXPECT_EQ(a.violations, b.violations);
}
