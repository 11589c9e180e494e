#include <catch2/catch_amalgamated.hpp>

#include "ctxalg/algebra.hpp"
#include "ctxalg/context_function.hpp"
#include "ctxalg/language.hpp"
#include "support/generators.hpp"

using namespace ctxalg;

namespace {

LanguagePtr<ScalarSpace> language_ab() {
  return make_language(ScalarSpace{}, make_alphabet({"a", "b"}),
                       std::map<Str, double>{{{"a", "b"}, 1.0}});
}

Context ctx(const char* left, const char* right) {
  return Context{parse_str(left), parse_str(right)};
}

}  // namespace

TEST_CASE("context vector of a single-occurrence factor") {
  auto f = context_vector(*language_ab(), {"a"});
  REQUIRE(f.support().size() == 1);
  REQUIRE(f.at(ctx("", "b")) == 1.0);
}

TEST_CASE("context vector of the empty string enumerates split points") {
  auto f = context_vector(*language_ab(), {});
  REQUIRE(f.support().size() == 3);
  REQUIRE(f.at(ctx("", "a b")) == 1.0);
  REQUIRE(f.at(ctx("a", "b")) == 1.0);
  REQUIRE(f.at(ctx("a b", "")) == 1.0);
}

TEST_CASE("context vector of an absent string is zero") {
  REQUIRE(context_vector(*language_ab(), {"b", "a"}).empty());
  REQUIRE_THROWS_AS(context_vector(*language_ab(), {"c"}), InputError);
}

TEST_CASE("overlapping occurrences each contribute a context") {
  auto language = make_language(ScalarSpace{}, make_alphabet({"a"}),
                                std::map<Str, double>{{{"a", "a"}, 1.0}});
  auto f = context_vector(*language, {"a"});
  REQUIRE(f.support().size() == 2);
  REQUIRE(f.at(ctx("", "a")) == 1.0);
  REQUIRE(f.at(ctx("a", "")) == 1.0);
}

TEST_CASE("enumeration lists factors in length-then-lex order") {
  REQUIRE(enumerate_nonzero_strings(*language_ab()) ==
          std::vector<Str>{{}, {"a"}, {"b"}, {"a", "b"}});

  auto empty = make_language(ScalarSpace{}, make_alphabet({"a"}), std::map<Str, double>{});
  REQUIRE(enumerate_nonzero_strings(*empty).empty());

  auto two = make_language(ScalarSpace{}, make_alphabet({"a", "b"}),
                           std::map<Str, double>{{{"a", "a"}, 1.0}, {{"b"}, 2.0}});
  REQUIRE(enumerate_nonzero_strings(*two) ==
          std::vector<Str>{{}, {"a"}, {"b"}, {"a", "a"}});
}

TEST_CASE("enumerated strings are exactly those with nonzero vectors") {
  CounterRng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto language = testgen::random_scalar_language(rng);
    const auto enumerated = enumerate_nonzero_strings(*language);
    for (const auto& s : enumerated) REQUIRE_FALSE(context_vector(*language, s).empty());
    // A string one symbol past the longest support string is always zero.
    Str too_long(language->max_support_length() + 1, language->alphabet().symbols().front());
    REQUIRE(context_vector(*language, too_long).empty());
  }
}

TEST_CASE("multiplication concatenates strings") {
  auto language = language_ab();
  auto a = element_from_string(language, {"a"});
  auto b = element_from_string(language, {"b"});
  auto ab = multiply(a, b);
  REQUIRE(ab.coeffs() == std::map<Str, double>{{{"a", "b"}, 1.0}});
  REQUIRE(ab.context_function().at(ctx("", "")) == 1.0);
  REQUIRE(ab.context_function().support().size() == 1);

  // b·a concatenates to "b a", whose context vector is zero; it is dropped.
  REQUIRE(multiply(b, a).coeffs().empty());
}

TEST_CASE("unity is the empty-string vector") {
  CounterRng rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    auto language = testgen::random_scalar_language(rng);
    auto e = unity(language);
    auto x = testgen::random_element(rng, language);
    auto left = multiply(e, x);
    auto right = multiply(x, e);
    REQUIRE(cf_max_abs_diff(left.context_function(), x.context_function()) <= 1e-12);
    REQUIRE(cf_max_abs_diff(right.context_function(), x.context_function()) <= 1e-12);
    REQUIRE(left.coeffs() == x.coeffs());
  }
}

TEST_CASE("multiplication is bilinear") {
  CounterRng rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    auto language = testgen::random_scalar_language(rng);
    auto a = testgen::random_element(rng, language);
    auto b = testgen::random_element(rng, language);
    auto c = testgen::random_element(rng, language);
    auto lhs = multiply(add_elements(a, b), c);
    auto rhs = add_elements(multiply(a, c), multiply(b, c));
    REQUIRE(cf_max_abs_diff(lhs.context_function(), rhs.context_function()) <= 1e-9);
  }
}

TEST_CASE("multiplication is associative") {
  CounterRng rng(34);
  for (int trial = 0; trial < 50; ++trial) {
    auto language = testgen::random_scalar_language(rng);
    auto a = testgen::random_element(rng, language);
    auto b = testgen::random_element(rng, language);
    auto c = testgen::random_element(rng, language);
    auto lhs = multiply(multiply(a, b), c);
    auto rhs = multiply(a, multiply(b, c));
    REQUIRE(cf_max_abs_diff(lhs.context_function(), rhs.context_function()) <= 1e-9);
  }
}

TEST_CASE("string products match direct context vectors") {
  CounterRng rng(35);
  for (int trial = 0; trial < 15; ++trial) {
    auto language = testgen::random_scalar_language(rng);
    const auto strings = enumerate_nonzero_strings(*language);
    std::set<Str> enumerated(strings.begin(), strings.end());
    for (const auto& x : strings)
      for (const auto& y : strings) {
        if (!enumerated.count(concat(x, y))) continue;
        auto direct = context_vector(*language, concat(x, y));
        auto product =
            multiply(element_from_string(language, x), element_from_string(language, y));
        REQUIRE(cf_max_abs_diff(product.context_function(), direct) <= 1e-12);
      }
  }
}

TEST_CASE("cached context function matches its recomputation") {
  CounterRng rng(36);
  for (int trial = 0; trial < 20; ++trial) {
    auto language = testgen::random_scalar_language(rng);
    auto x = testgen::random_element(rng, language);
    ContextFunction<ScalarSpace> rebuilt(ScalarSpace{}, language->alphabet_ptr());
    for (const auto& [s, coeff] : x.coeffs())
      rebuilt = cf_add(rebuilt, cf_scale(coeff, context_vector(*language, s)));
    REQUIRE(cf_max_abs_diff(x.context_function(), rebuilt) <= 1e-12);
  }
}

TEST_CASE("pointwise order and lattice on scalar functions") {
  auto alphabet = make_alphabet({"a", "b"});
  auto c1 = ctx("a", "");
  auto c2 = ctx("b", "a");

  ContextFunction<ScalarSpace> f(ScalarSpace{}, alphabet, {{c1, 3.0}});
  ContextFunction<ScalarSpace> g(ScalarSpace{}, alphabet, {{c1, 5.0}, {c2, 1.0}});

  REQUIRE(cf_leq(f, g));
  REQUIRE_FALSE(cf_leq(g, f));

  auto met = cf_meet(f, g);
  REQUIRE(met.support().size() == 1);
  REQUIRE(met.at(c1) == 3.0);  // min against the implicit zero kills c2

  REQUIRE(cf_max_abs_diff(cf_meet(f, f), f) == 0.0);

  auto joined = cf_join(f, g);
  REQUIRE(joined.at(c1) == 5.0);
  REQUIRE(joined.at(c2) == 1.0);
}

TEST_CASE("dominating frequency means order") {
  auto language = make_language(
      ScalarSpace{}, make_alphabet({"a", "b"}),
      std::map<Str, double>{{{"a"}, 1.0}, {{"b"}, 2.0}, {{"a", "b"}, 1.0}});
  auto fa = context_vector(*language, {"a"});
  auto fb = context_vector(*language, {"b"});
  REQUIRE_FALSE(cf_leq(fa, fb));  // disjoint supports are incomparable
  auto joined = cf_join(fa, fb);
  REQUIRE(cf_leq(fa, joined));
  REQUIRE(cf_leq(fb, joined));
}

TEST_CASE("vector space order axioms for context functions") {
  CounterRng rng(37);
  auto alphabet = make_alphabet({"a", "b"});
  for (int trial = 0; trial < 200; ++trial) {
    auto a = testgen::random_scalar_function(rng, alphabet);
    auto lift = testgen::random_scalar_function(rng, alphabet, /*nonnegative=*/true);
    auto b = cf_add(a, lift);
    auto c = testgen::random_scalar_function(rng, alphabet);
    REQUIRE(cf_leq(a, b));
    REQUIRE(cf_leq(cf_add(a, c), cf_add(b, c)));
    const double alpha = rng.uniform(0.0, 3.0);
    REQUIRE(cf_leq(cf_scale(alpha, a), cf_scale(alpha, b)));
  }
}

TEST_CASE("lattice absorption for scalar functions") {
  CounterRng rng(38);
  auto alphabet = make_alphabet({"a", "b"});
  for (int trial = 0; trial < 100; ++trial) {
    auto a = testgen::random_scalar_function(rng, alphabet);
    auto b = testgen::random_scalar_function(rng, alphabet);
    REQUIRE(cf_max_abs_diff(cf_meet(a, cf_join(a, b)), a) == 0.0);
  }
}

TEST_CASE("operations reject mismatched languages") {
  auto language = language_ab();
  auto other = make_language(ScalarSpace{}, make_alphabet({"a", "c"}),
                             std::map<Str, double>{{{"a"}, 1.0}});
  auto x = element_from_string(language, {"a"});
  auto y = element_from_string(other, {"a"});
  REQUIRE_THROWS_AS(multiply(x, y), InputError);
  REQUIRE_THROWS_AS(cf_leq(x.context_function(), y.context_function()), InputError);
}

TEST_CASE("elements prune zero coefficients") {
  auto language = language_ab();
  AlgebraElement<ScalarSpace> x(language, {{{"a"}, 1e-15}, {{"b"}, 1.0}});
  REQUIRE(x.coeffs().size() == 1);
  REQUIRE(x.coeff({"b"}) == 1.0);
  REQUIRE(x.coeff({"a"}) == 0.0);
}
