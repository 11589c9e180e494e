#include <catch2/catch_amalgamated.hpp>

#include "ctxalg/basis.hpp"
#include "support/generators.hpp"

using namespace ctxalg;

namespace {

LanguagePtr<ScalarSpace> language_ab() {
  return make_language(ScalarSpace{}, make_alphabet({"a", "b"}),
                       std::map<Str, double>{{{"a", "b"}, 1.0}});
}

}  // namespace

TEST_CASE("all four strings of the ab language are independent") {
  // Their context supports are pairwise disjoint, so every string survives.
  auto basis = string_basis(language_ab());
  REQUIRE(basis.strings() == std::vector<Str>{{}, {"a"}, {"b"}, {"a", "b"}});
  REQUIRE(basis.dimension() == 4);
}

TEST_CASE("basis construction is deterministic") {
  CounterRng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    auto language = testgen::random_scalar_language(rng);
    auto b1 = string_basis(language);
    auto b2 = string_basis(language);
    REQUIRE(b1.strings() == b2.strings());
  }
}

TEST_CASE("different orders may pick different strings of equal rank") {
  auto language = make_language(ScalarSpace{}, make_alphabet({"a", "b"}),
                                std::map<Str, double>{{{"a", "b"}, 1.0}, {{"b", "a"}, 1.0}});
  // "a b" and "b a" have the identical context vector {(ε,ε) ↦ 1}.
  auto order1 = enumerate_nonzero_strings(*language);
  auto order2 = order1;
  std::reverse(order2.begin(), order2.end());
  auto b1 = string_basis(language, order1);
  auto b2 = string_basis(language, order2);
  REQUIRE(b1.dimension() == b2.dimension());
  REQUIRE(b1.strings() != b2.strings());
  REQUIRE(b1.dimension() == 4);
}

TEST_CASE("rank is order-invariant on random languages") {
  CounterRng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    auto language = testgen::random_scalar_language(rng);
    auto order = enumerate_nonzero_strings(*language);
    auto b1 = string_basis(language, order);
    // Deterministic shuffle.
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng.below(i)]);
    auto b2 = string_basis(language, order);
    REQUIRE(b1.dimension() == b2.dimension());
  }
}

TEST_CASE("order must be a permutation of the enumeration") {
  auto language = language_ab();
  REQUIRE_THROWS_AS(string_basis(language, std::vector<Str>{{"a"}}), InputError);
}

TEST_CASE("expanding a basis string yields a unit coordinate vector") {
  auto language = language_ab();
  auto basis = string_basis(language);
  for (std::size_t i = 0; i < basis.strings().size(); ++i) {
    auto coords = expand_in_basis(context_vector(*language, basis.strings()[i]), basis);
    for (std::size_t j = 0; j < coords.size(); ++j)
      REQUIRE_THAT(coords[j], Catch::Matchers::WithinAbs(i == j ? 1.0 : 0.0, 1e-12));
  }
}

TEST_CASE("expansion is linear") {
  auto language = language_ab();
  auto basis = string_basis(language);
  auto v = cf_add(cf_scale(2.0, context_vector(*language, {"a"})),
                  cf_scale(3.0, context_vector(*language, {"b"})));
  auto coords = expand_in_basis(v, basis);
  REQUIRE_THAT(coords[0], Catch::Matchers::WithinAbs(0.0, 1e-12));
  REQUIRE_THAT(coords[1], Catch::Matchers::WithinAbs(2.0, 1e-12));
  REQUIRE_THAT(coords[2], Catch::Matchers::WithinAbs(3.0, 1e-12));
  REQUIRE_THAT(coords[3], Catch::Matchers::WithinAbs(0.0, 1e-12));
}

TEST_CASE("vectors outside the span are rejected with the residual") {
  auto language = language_ab();
  auto basis = string_basis(language);
  ContextFunction<ScalarSpace> foreign(ScalarSpace{}, language->alphabet_ptr(),
                                       {{Context{{"b"}, {"b"}}, 1.0}});
  try {
    expand_in_basis(foreign, basis);
    FAIL("expected NotInSpanError");
  } catch (const NotInSpanError& e) {
    REQUIRE(e.residual() == 1.0);
  }
}

TEST_CASE("every enumerated vector expands and reconstructs in any basis") {
  CounterRng rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    auto language = testgen::random_scalar_language(rng);
    auto basis = string_basis(language);
    for (const auto& s : enumerate_nonzero_strings(*language)) {
      auto v = context_vector(*language, s);
      auto coords = expand_in_basis(v, basis);
      ContextFunction<ScalarSpace> rebuilt(ScalarSpace{}, language->alphabet_ptr());
      for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0.0)
          rebuilt = cf_add(rebuilt, cf_scale(coords[i],
                                             context_vector(*language, basis.strings()[i])));
      CAPTURE(to_string(s));
      REQUIRE(cf_max_abs_diff(v, rebuilt) <= 1e-8);
    }
  }
}

TEST_CASE("multiplication is independent of representation") {
  // An element re-expressed through the basis multiplies to the same
  // context function as the element itself.
  CounterRng rng(44);
  for (int trial = 0; trial < 25; ++trial) {
    auto language = testgen::random_scalar_language(rng);
    auto basis = string_basis(language);
    auto u = testgen::random_element(rng, language);
    auto w = testgen::random_element(rng, language);

    auto coords = expand_in_basis(u.context_function(), basis);
    auto direct = multiply(u, w);
    ContextFunction<ScalarSpace> via_basis(ScalarSpace{}, language->alphabet_ptr());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] == 0.0) continue;
      auto term = multiply(element_from_string(language, basis.strings()[i]), w);
      via_basis = cf_add(via_basis, cf_scale(coords[i], term.context_function()));
    }
    REQUIRE(cf_max_abs_diff(direct.context_function(), via_basis) <= 1e-9);
  }
}

TEST_CASE("operator-valued languages admit the same basis machinery") {
  auto universe = Universe::make(
      {Formula::top(), Formula::bot(), parse_formula("p"), parse_formula("q")}, {"p", "q"});
  std::map<Str, DiagOperator> entries;
  entries.emplace(parse_str("s1"), projection_of(parse_formula("p"), universe));
  entries.emplace(parse_str("s1 s2"), projection_of(parse_formula("p & q"), universe));
  auto language = make_language(OperatorSpace(universe), make_alphabet({"s1", "s2"}),
                                std::move(entries));
  auto basis = string_basis(language);
  REQUIRE(basis.dimension() == enumerate_nonzero_strings(*language).size());
  auto coords = expand_in_basis(context_vector(*language, parse_str("s1")), basis);
  ContextFunction<OperatorSpace> rebuilt(OperatorSpace(universe), language->alphabet_ptr());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0.0)
      rebuilt = cf_add(rebuilt,
                       cf_scale(coords[i], context_vector(*language, basis.strings()[i])));
  REQUIRE(cf_max_abs_diff(context_vector(*language, parse_str("s1")), rebuilt) <= 1e-10);
}
