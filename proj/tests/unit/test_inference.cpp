#include <doctest.h>

#include <cstdlib>

#include "corpus.hpp"
#include "toto/error.hpp"
#include "toto/inference.hpp"
#include "toto/model_check.hpp"

using namespace toto;
using namespace toto::testing;

namespace {

struct Fixture {
  TypeSystem ts = build_type_system(2);
  ScaledCoeffTable coeffs = compute_scaled_coefficients(ts, 1000);
  TypeEstimates est = estimate_all(ts, coeffs);
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

}  // namespace

TEST_CASE("types of simple sentences") {
  const auto& f = fixture();
  const auto nonempty = types_of_sentence(f.ts, parse_sentence("(E x (= x x))"));
  CHECK(nonempty.size() == f.ts.size() - 1);
  CHECK(std::find(nonempty.begin(), nonempty.end(), f.ts.empty_type) == nonempty.end());
  CHECK(types_of_sentence(f.ts, parse_sentence("(A x (= x x))")).size() == f.ts.size());
  const auto p21 = types_of_sentence(f.ts, parse_sentence("(E x (E y (and (<p x y) (<v y x))))"));
  for (TypeId t = 0; t < f.ts.size(); ++t) {
    const bool in = std::find(p21.begin(), p21.end(), t) != p21.end();
    CHECK(in == contains_pattern(f.ts.reps[t], {2, 1}));
  }
  CHECK_THROWS_AS(types_of_sentence(f.ts, parse_sentence("(E x (E y (E z (= x z))))")), Error);
}

TEST_CASE("limits of reference sentences") {
  const auto& f = fixture();
  const auto corpus = load_corpus(corpus_path());
  const auto max_first = limiting_probability(f.ts, f.est, find_sentence(corpus, "max_first"));
  CHECK(max_first.limit == doctest::Approx(0.25).epsilon(0.02));
  CHECK(max_first.classification == Classification::PositiveLimit);
  CHECK_FALSE(max_first.kappa_bound.has_value());

  const auto p21 = limiting_probability(f.ts, f.est, find_sentence(corpus, "pattern_21"));
  CHECK(std::abs(p21.limit - 1.0) < 1e-3);

  const auto empty = limiting_probability(f.ts, f.est, find_sentence(corpus, "empty"));
  CHECK(empty.classification == Classification::ExponentialDecay);
  CHECK(empty.limit == 0.0);
  REQUIRE(empty.kappa_bound.has_value());
  CHECK(*empty.kappa_bound == 0.0);

  const auto one = limiting_probability(f.ts, f.est, find_sentence(corpus, "exactly_one"));
  CHECK(one.classification == Classification::ExponentialDecay);

  const auto inc = limiting_probability(f.ts, f.est, find_sentence(corpus, "increasing"));
  CHECK(inc.classification == Classification::ExponentialDecay);
  CHECK(*inc.kappa_bound < 4.0);
}

TEST_CASE("complementation and monotonicity over the corpus") {
  const auto& f = fixture();
  const auto corpus = load_corpus(corpus_path());
  for (const auto& s : corpus) {
    const auto r = limiting_probability(f.ts, f.est, s.sentence);
    const auto c = limiting_probability(f.ts, f.est, Formula::negation(s.sentence));
    CHECK_MESSAGE(std::abs(r.limit + c.limit - 1.0) <= r.tolerance + c.tolerance, s.name);
    CHECK(r.limit >= -r.tolerance);
    CHECK(r.limit <= 1 + r.tolerance);
  }
  const auto a = limiting_probability(f.ts, f.est, find_sentence(corpus, "max_first"));
  const auto b = limiting_probability(f.ts, f.est, find_sentence(corpus, "max_first_or_last"));
  CHECK(a.limit <= b.limit + a.tolerance + b.tolerance);
}

TEST_CASE("Monte Carlo") {
  const auto corpus = load_corpus(corpus_path());
  const auto empty = monte_carlo_check(find_sentence(corpus, "empty"), 50, 1000, 1);
  CHECK(empty.empirical == 0.0);
  CHECK(empty.samples == 1000);
  const auto taut = monte_carlo_check(find_sentence(corpus, "tautology"), 50, 1000, 1);
  CHECK(taut.empirical == 1.0);
  // P(max first) at n = 200 is Cat_199 / Cat_200 = 200 / (2 (399)) ... exactly (n+1)/(2(2n-1))
  const double exact = 201.0 / (2.0 * 399.0);
  const auto mf = monte_carlo_check(find_sentence(corpus, "max_first"), 200, 20000, 3);
  CHECK(std::abs(mf.empirical - exact) <= 4 * mf.standard_error);
}

TEST_CASE("Monte Carlo does not depend on the worker count") {
  const auto corpus = load_corpus(corpus_path());
  const Formula& s = find_sentence(corpus, "max_last");
  setenv("TOTO_THREADS", "1", 1);
  const auto a = monte_carlo_check(s, 60, 3000, 17);
  setenv("TOTO_THREADS", "4", 1);
  const auto b = monte_carlo_check(s, 60, 3000, 17);
  unsetenv("TOTO_THREADS");
  CHECK(a.empirical == b.empirical);
  const auto many = monte_carlo_check_many({s, Formula::negation(s)}, 60, 3000, 17);
  CHECK(many[0].empirical == a.empirical);
  CHECK(many[1].empirical == doctest::Approx(1 - a.empirical));
}

TEST_CASE("tau and pi distribution") {
  const auto r = tau_pi_distribution_check({}, 100, 20000, 9);
  CHECK(r.limit == 0.25);
  CHECK(r.exact == doctest::Approx(101.0 / (2.0 * 199.0)));
  CHECK(std::abs(r.tau_frequency - r.exact) <= 4 * r.standard_error);
  CHECK(std::abs(r.pi_frequency - r.exact) <= 4 * r.standard_error);
  const auto one = tau_pi_distribution_check({1}, 100, 0, 9);
  CHECK(one.limit == 0.0625);
  CHECK_THROWS_AS(tau_pi_distribution_check({2, 3, 1}, 10, 10, 1), Error);
}
