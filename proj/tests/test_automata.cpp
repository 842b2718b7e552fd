#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "palinlen/automata.hpp"
#include "palinlen/closed_form.hpp"
#include "palinlen/errors.hpp"
#include "palinlen/recursion.hpp"

using namespace palinlen;

namespace {

const char* kTinyDfao = R"(
state even output 1
state odd  output -1
init even
edge even 0 even
edge even 1 odd
edge even 2 even
edge odd  0 odd
edge odd  1 even
edge odd  2 odd
)";

const char* kTinyMorphic = R"(
letter x output 1
letter y output 0
seed x
rule x -> x y x
rule y -> y y y
)";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing fixture file ", path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("automaton parsing") {
  const Dfao a = parse_dfao(kTinyDfao);
  CHECK(a.size() == 2);
  CHECK(a.initial == a.state("even"));
  CHECK(dfao_eval(a, 0) == 1);
  CHECK(dfao_eval(a, 1) == -1);   // "1"
  CHECK(dfao_eval(a, 4) == 1);    // "11"
  CHECK(dfao_eval_digits(a, "001") == -1);
  CHECK_THROWS_AS(dfao_eval_digits(a, "03"), DomainError);

  SUBCASE("rejects malformed input") {
    CHECK_THROWS_AS(parse_dfao(""), DomainError);
    CHECK_THROWS_AS(parse_dfao("state a output 2\ninit a\n"), DomainError);
    CHECK_THROWS_AS(parse_dfao("state a output 1\n"), DomainError);  // no init
    CHECK_THROWS_AS(parse_dfao("bogus a\n"), DomainError);
    CHECK_THROWS_AS(parse_dfao("state a output 1\ninit a\nedge a 0 a\n"),
                    DomainError);  // incomplete table
    CHECK_THROWS_AS(
        parse_dfao("state a output 1\ninit a\nedge a 0 b\nedge a 1 a\n"
                   "edge a 2 a\n"),
        DomainError);  // unknown target
    CHECK_THROWS_AS(
        parse_dfao("state a output 1\nstate a output 0\ninit a\n"),
        DomainError);  // duplicate state
    const std::string dup =
        "state a output 1\ninit a\nedge a 0 a\nedge a 0 a\nedge a 1 a\n"
        "edge a 2 a\n";
    CHECK_THROWS_AS(parse_dfao(dup), DomainError);  // duplicate edge
    CHECK_THROWS_AS(parse_dfao("state a output 1\ninit a\ninit a\nedge a 0 a\n"
                               "edge a 1 a\nedge a 2 a\n"),
                    DomainError);  // duplicate init
  }
}

TEST_CASE("morphic system parsing") {
  const MorphicSystem m = parse_morphic(kTinyMorphic);
  CHECK(m.size() == 2);
  CHECK(m.seed == m.letter("x"));
  CHECK(morphic_output(m, 0) == 1);
  CHECK(morphic_output(m, 1) == 0);
  CHECK(morphic_output(m, 2) == 1);

  SUBCASE("rejects malformed input") {
    CHECK_THROWS_AS(parse_morphic(""), DomainError);
    CHECK_THROWS_AS(parse_morphic("letter x output 1\nseed x\n"),
                    DomainError);  // no rule
    CHECK_THROWS_AS(parse_morphic("letter x output 1\nrule x -> x x x\n"),
                    DomainError);  // no seed
    CHECK_THROWS_AS(
        parse_morphic("letter x output 1\nletter y output 0\nseed x\n"
                      "rule x -> y x x\nrule y -> y y y\n"),
        DomainError);  // seed not prolongable
    CHECK_THROWS_AS(
        parse_morphic("letter x output 1\nseed x\nrule x -> x x\n"),
        DomainError);  // short image
    CHECK_THROWS_AS(
        parse_morphic("letter x output 1\nseed x\nrule x -> x x z\n"),
        DomainError);  // unknown letter
    CHECK_THROWS_AS(parse_morphic("noise\n"), DomainError);
  }
}

TEST_CASE("reference definitions parse and answer point queries") {
  const ReferenceSystems& ref = reference_systems();
  CHECK(ref.dq.size() == 4);
  CHECK(ref.dt.size() == 7);
  CHECK(ref.dp.size() == 10);
  CHECK(ref.delta.size() == 4);
  CHECK(ref.nu.size() == 7);
  CHECK(ref.psi.size() == 10);

  CHECK(dfao_eval(ref.dq, 0) == 1);
  CHECK(dfao_eval(ref.dq, 6) == 1);
  CHECK(dfao_eval(ref.dq, 8) == -1);
  CHECK(dfao_eval(ref.dt, 2) == -1);
  CHECK(dfao_eval(ref.dt, 7) == -1);
  CHECK(dfao_eval(ref.dp, 2) == -1);
  CHECK(dfao_eval(ref.dp, 6) == 1);

  // Spot-check two substitution rules by letter name.
  const int sp = ref.psi.letter("S'");
  REQUIRE(sp >= 0);
  const auto& image = ref.psi.rule[static_cast<std::size_t>(sp)];
  CHECK(image[0] == ref.psi.letter("D"));
  CHECK(image[1] == ref.psi.letter("S"));
  CHECK(image[2] == ref.psi.letter("D~"));
  const int s = ref.nu.letter("S");
  REQUIRE(s >= 0);
  for (int part : ref.nu.rule[static_cast<std::size_t>(s)]) CHECK(part == s);

  // The first nine outputs of the p-difference fixed point.
  FixedPoint psi(ref.psi);
  const std::vector<int> expected{1, 1, -1, 1, 0, 0, 1, -1, -1};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(psi.output(i) == expected[i]);
  }
}

TEST_CASE("fixture files under data/ match the embedded definitions") {
  for (const std::string name : {"dq.dfao", "dt.dfao", "dp.dfao",
                                 "delta.morphic", "nu.morphic", "psi.morphic"}) {
    const std::string on_disk = read_file(std::string(PALINLEN_DATA_DIR) +
                                          "/" + name);
    CHECK_MESSAGE(on_disk == reference_fixture_text(name), name,
                  " differs from the embedded text");
  }
  CHECK_THROWS_AS(reference_fixture_text("nope"), DomainError);
}

TEST_CASE("digit descent equals the materialized fixed point") {
  const ReferenceSystems& ref = reference_systems();
  for (const MorphicSystem* m : {&ref.delta, &ref.nu, &ref.psi}) {
    FixedPoint fp(*m);
    for (std::uint64_t n = 0; n < 729; ++n) {
      CHECK(fp.output(n) == morphic_output(*m, n));
    }
  }
}

TEST_CASE("automata, morphic systems and digit rules agree") {
  const ReferenceSystems& ref = reference_systems();
  FixedPoint delta(ref.delta);
  FixedPoint nu(ref.nu);
  FixedPoint psi(ref.psi);
  for (std::uint64_t n = 0; n < 729; ++n) {
    CHECK(dfao_eval(ref.dq, n) == cf_dq(n));
    CHECK(dfao_eval(ref.dt, n) == cf_dt(n));
    CHECK(dfao_eval(ref.dp, n) == cf_dp(n));
    CHECK(delta.output(n) == cf_dq(n));
    CHECK(nu.output(n) == cf_dt(n));
    CHECK(psi.output(n) == cf_dp(n));
  }
}

TEST_CASE("horizon limits") {
  const ReferenceSystems& ref = reference_systems();
  CHECK_THROWS_AS(morphic_output(ref.psi, 100, 100), ResourceLimitError);
  CHECK(morphic_output(ref.psi, 99, 100) == cf_dp(99));
  FixedPoint fp(ref.psi, 100);
  CHECK_THROWS_AS(fp.ensure(101), ResourceLimitError);
  CHECK(fp.output(99) == cf_dp(99));
}

TEST_CASE("product construction") {
  const ReferenceSystems& ref = reference_systems();
  const ProductSystem prod = build_product(ref.nu, ref.delta);

  SUBCASE("exactly ten reachable pairs") {
    CHECK(prod.combined.size() == 10);
    CHECK(prod.pair_names[0] == std::pair<std::string, std::string>{"A", "D"});
  }

  SUBCASE("codings add componentwise") {
    for (std::size_t i = 0; i < prod.combined.size(); ++i) {
      const auto& [ln, rn] = prod.pair_names[i];
      const int lc = ref.nu.code[static_cast<std::size_t>(ref.nu.letter(ln))];
      const int rc =
          ref.delta.code[static_cast<std::size_t>(ref.delta.letter(rn))];
      CHECK(prod.combined.code[i] == lc + rc);
    }
  }

  SUBCASE("collapsing names reproduces the p-difference system") {
    std::string why;
    CHECK_MESSAGE(equivalent_systems(with_collapsed_names(prod), ref.psi, &why),
                  why);
  }

  SUBCASE("product outputs match the digit rule") {
    FixedPoint fp(prod.combined);
    for (std::uint64_t n = 0; n < 2187; ++n) {
      CHECK(fp.output(n) == cf_dp(n));
    }
  }

  SUBCASE("self-product stays diagonal") {
    const ProductSystem diag = build_product(ref.delta, ref.delta);
    CHECK(diag.combined.size() == ref.delta.size());
    for (const auto& [l, r] : diag.pair_names) CHECK(l == r);
  }
}

TEST_CASE("system equivalence explains mismatches") {
  const MorphicSystem m = parse_morphic(kTinyMorphic);
  MorphicSystem changed = m;
  changed.code[0] = 5;
  std::string why;
  CHECK_FALSE(equivalent_systems(m, changed, &why));
  CHECK(why.find("codings") != std::string::npos);
  CHECK(equivalent_systems(m, m));
}
