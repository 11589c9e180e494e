#include <catch2/catch_amalgamated.hpp>

#include "ctxalg/diag_operator.hpp"
#include "ctxalg/parse.hpp"
#include "support/generators.hpp"

using namespace ctxalg;

namespace {

UniversePtr toy_universe() {
  return Universe::make({Formula::top(), Formula::bot(), parse_formula("p"), parse_formula("q"),
                         parse_formula("p & q")},
                        {"p", "q"});
}

}  // namespace

TEST_CASE("projection_of on the toy universe") {
  auto u = toy_universe();
  REQUIRE(projection_of(Formula::top(), u).diag() == std::vector<double>{1, 1, 1, 1, 1});
  REQUIRE(projection_of(parse_formula("p"), u).diag() == std::vector<double>{0, 1, 1, 0, 1});
  REQUIRE(projection_of(Formula::bot(), u).diag() == std::vector<double>{0, 1, 0, 0, 0});
  REQUIRE(projection_of(parse_formula("p"), u).is_projection());
  REQUIRE_THROWS_AS(projection_of(parse_formula("r"), u), InputError);
}

TEST_CASE("composition, unity and idempotence") {
  auto u = toy_universe();
  auto pp = projection_of(parse_formula("p"), u);
  auto pq = projection_of(parse_formula("q"), u);
  auto pand = projection_of(parse_formula("p & q"), u);

  REQUIRE((pp * pq).diag() == pand.diag());
  REQUIRE((pp * DiagOperator::identity(u)).diag() == pp.diag());
  REQUIRE((pp * pp).diag() == pp.diag());
  REQUIRE((pp * pq).diag() == (pq * pp).diag());
}

TEST_CASE("linear operations") {
  auto u = toy_universe();
  auto pp = projection_of(parse_formula("p"), u);
  auto pq = projection_of(parse_formula("q"), u);

  REQUIRE((pp + pq - pp * pq).diag() == std::vector<double>{0, 1, 1, 1, 1});
  REQUIRE(scale(0.0, pp).is_zero());
  REQUIRE((pp - pp).is_zero());
  REQUIRE(scale(2.5, pp).diag() == std::vector<double>{0, 2.5, 2.5, 0, 2.5});
}

TEST_CASE("lattice operations against their algebraic forms") {
  auto u = toy_universe();
  auto pp = projection_of(parse_formula("p"), u);
  auto pq = projection_of(parse_formula("q"), u);

  // On 0/1 entries, min is the product and max is the inclusion-exclusion sum.
  REQUIRE(meet(pp, pq).diag() == (pp * pq).diag());
  REQUIRE(join(pp, pq).diag() == (pp + pq - pp * pq).diag());
  REQUIRE(meet(pp, pp).diag() == pp.diag());

  for (double x : {0.0, 1.0})
    for (double y : {0.0, 1.0}) {
      REQUIRE(std::min(x, y) == x * y);
      REQUIRE(std::max(x, y) == x + y - x * y);
    }
}

TEST_CASE("operator order") {
  auto u = toy_universe();
  auto pp = projection_of(parse_formula("p"), u);
  auto pq = projection_of(parse_formula("q"), u);
  auto pand = projection_of(parse_formula("p & q"), u);

  REQUIRE(leq(pand, pp));
  REQUIRE(leq(pp, pp));
  REQUIRE_FALSE(leq(pp, pq));

  auto other = Universe::make({Formula::top(), Formula::bot()}, {"p"});
  REQUIRE_THROWS_AS(leq(pp, DiagOperator::identity(other)), InputError);
}

TEST_CASE("projection order agrees with entailment (small exhaustive)") {
  CounterRng rng(21);
  for (int trial = 0; trial < 8; ++trial) {
    auto u = testgen::random_universe(rng);
    for (std::size_t i = 0; i < u->size(); ++i) {
      auto pi = projection_of(u->formula(i), u);
      for (std::size_t j = 0; j < u->size(); ++j) {
        auto pj = projection_of(u->formula(j), u);
        CAPTURE(to_string(u->formula(i)), to_string(u->formula(j)));
        REQUIRE(leq(pi, pj) == entails(u->formula(i), u->formula(j), u->atoms()));
      }
    }
  }
}

TEST_CASE("projection order is the projection-product order for projections") {
  CounterRng rng(22);
  auto u = testgen::random_universe(rng);
  for (std::size_t i = 0; i < u->size(); ++i)
    for (std::size_t j = 0; j < u->size(); ++j) {
      auto pi = projection_of(u->formula(i), u);
      auto pj = projection_of(u->formula(j), u);
      const bool product_order = (pi * pj).diag() == pi.diag();
      REQUIRE(leq(pi, pj) == product_order);
    }
}

TEST_CASE("vector space order axioms hold for operators") {
  CounterRng rng(23);
  auto u = toy_universe();
  for (int trial = 0; trial < 200; ++trial) {
    auto a = testgen::random_operator(rng, u);
    auto delta = testgen::random_operator(rng, u);
    // Build b >= a by adding absolute values.
    std::vector<double> lift(u->size());
    for (std::size_t i = 0; i < lift.size(); ++i) lift[i] = std::abs(delta[i]);
    auto b = a + DiagOperator(u, lift);
    auto c = testgen::random_operator(rng, u);
    REQUIRE(leq(a, b));
    REQUIRE(leq(a + c, b + c));
    const double alpha = rng.uniform(0.0, 3.0);
    REQUIRE(leq(scale(alpha, a), scale(alpha, b)));
  }
}

TEST_CASE("check_identities: conjunction and top are exact") {
  CounterRng rng(24);
  auto u = testgen::random_universe(rng, 2);
  std::vector<std::pair<Formula, Formula>> pairs;
  for (int i = 0; i < 10; ++i)
    pairs.emplace_back(testgen::random_formula(rng, u->atoms(), 2),
                       testgen::random_formula(rng, u->atoms(), 2));
  auto report = check_identities(u, pairs);
  REQUIRE(report.conj_exact);
  REQUIRE(report.top_exact);
}

TEST_CASE("negation identity defect on the six-member universe") {
  // Λ = [true, false, p, q, ~q, p & q]. Both true and p satisfy neither q
  // nor ~q, so P_{~q} and 1 - P_q + P_false disagree exactly there.
  auto u = Universe::make({Formula::top(), Formula::bot(), parse_formula("p"), parse_formula("q"),
                           parse_formula("~q"), parse_formula("p & q")},
                          {"p", "q"});
  auto report = check_identities(u, {{parse_formula("q"), parse_formula("q")}});
  REQUIRE(report.neg_defects.at("q") == std::vector<std::size_t>{0, 2});
}

TEST_CASE("disjunction identity defect on the five-member universe") {
  auto u = Universe::make({Formula::top(), Formula::bot(), parse_formula("p"), parse_formula("q"),
                           parse_formula("p | q")},
                          {"p", "q"});
  auto report = check_identities(u, {{parse_formula("p"), parse_formula("q")}});
  REQUIRE(report.disj_defects.at({"p", "q"}) == std::vector<std::size_t>{4});
}

TEST_CASE("defect sets match their oracle characterization") {
  CounterRng rng(25);
  for (int trial = 0; trial < 6; ++trial) {
    auto u = testgen::random_universe(rng, 2);
    std::vector<std::pair<Formula, Formula>> pairs;
    for (int i = 0; i < 6; ++i)
      pairs.emplace_back(testgen::random_formula(rng, u->atoms(), 2),
                         testgen::random_formula(rng, u->atoms(), 2));
    auto report = check_identities(u, pairs);

    for (const auto& [u_text, defects] : report.neg_defects) {
      Formula uf = parse_formula(u_text);
      std::vector<std::size_t> expected;
      for (std::size_t l = 0; l < u->size(); ++l) {
        const bool decided = entails(u->formula(l), uf, u->atoms()) ||
                             entails(u->formula(l), Formula::negation(uf), u->atoms());
        if (u->member_satisfiable(l) && !decided) expected.push_back(l);
      }
      CAPTURE(u_text);
      REQUIRE(defects == expected);
    }

    for (const auto& [pair, defects] : report.disj_defects) {
      Formula uf = parse_formula(pair.first);
      Formula vf = parse_formula(pair.second);
      std::vector<std::size_t> expected;
      for (std::size_t l = 0; l < u->size(); ++l) {
        const bool in_or = entails(u->formula(l), Formula::disjunction(uf, vf), u->atoms());
        const bool in_either = entails(u->formula(l), uf, u->atoms()) ||
                               entails(u->formula(l), vf, u->atoms());
        if (in_or && !in_either) expected.push_back(l);
      }
      CAPTURE(pair.first, pair.second);
      REQUIRE(defects == expected);

      // join(P_u, P_v) always equals the inclusion-exclusion sum, and both
      // equal P_{u|v} exactly when the defect set is empty.
      auto pu = projection_of(uf, u);
      auto pv = projection_of(vf, u);
      REQUIRE(join(pu, pv).diag() == (pu + pv - pu * pv).diag());
      if (defects.empty())
        REQUIRE(projection_of(Formula::disjunction(uf, vf), u).diag() == join(pu, pv).diag());
    }
  }
}

TEST_CASE("negation identity agrees on every decided member") {
  CounterRng rng(26);
  auto u = testgen::random_universe(rng, 2);
  auto one = DiagOperator::identity(u);
  auto p_bot = projection_of(Formula::bot(), u);
  for (int i = 0; i < 20; ++i) {
    Formula f = testgen::random_formula(rng, u->atoms(), 2);
    auto lhs = projection_of(Formula::negation(f), u);
    auto rhs = one - projection_of(f, u) + p_bot;
    for (std::size_t l = 0; l < u->size(); ++l) {
      const bool decided = entails(u->formula(l), f, u->atoms()) ||
                           entails(u->formula(l), Formula::negation(f), u->atoms());
      if (decided) REQUIRE(lhs[l] == rhs[l]);
    }
  }
}

TEST_CASE("operator construction validates the diagonal length") {
  auto u = toy_universe();
  REQUIRE_THROWS_AS(DiagOperator(u, std::vector<double>{1.0}), InputError);
  REQUIRE(DiagOperator::zero(u).is_zero());
  REQUIRE(DiagOperator::identity(u).is_projection());
  REQUIRE_FALSE(DiagOperator(u, {0.5, 0, 0, 0, 0}).is_projection());
}
