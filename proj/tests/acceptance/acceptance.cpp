// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "corpus.hpp"
#include "toto/catalan.hpp"
#include "toto/estimators.hpp"
#include "toto/inference.hpp"
#include "toto/kakeya.hpp"
#include "toto/logic_types.hpp"
#include "toto/model_check.hpp"
#include "toto/sampler.hpp"
#include "toto/series.hpp"
#include "toto/spectral.hpp"
#include "toto/type_system.hpp"

using namespace toto;
using namespace toto::testing;

namespace {

constexpr std::size_t kExactN = 2000;
constexpr std::size_t kScaledN = 4000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::ostringstream time;
  time << std::fixed << std::setprecision(1) << secs;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << title << " -- " << o.detail << " [" << time.str()
            << "s]" << std::endl;
}

struct Level {
  TypeSystem ts;
  CoeffTable exact;
  ScaledCoeffTable scaled;
  TypeEstimates est;
};

Level& level(std::size_t k) {
  static std::map<std::size_t, Level> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  Level l;
  l.ts = build_type_system(k);
  l.exact = compute_coefficients(l.ts, kExactN);
  l.scaled = compute_scaled_coefficients(l.ts, kScaledN);
  l.est = estimate_all(l.ts, l.scaled);
  return cache.emplace(k, std::move(l)).first->second;
}

std::vector<Permutation> all_perms_up_to(std::size_t n) {
  std::vector<Permutation> out;
  for (std::size_t s = 0; s <= n; ++s)
    for (auto& p : enumerate_all(s)) out.push_back(std::move(p));
  return out;
}

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(6);
  const auto corpus = load_corpus(corpus_path());
  const auto extra = load_corpus(extra_corpus_path());

  criterion(1, "conservation sum_t c_t(n) = Cat_n, n <= 2000, k in {1,2}", [] {
    std::ostringstream d;
    bool ok = true;
    for (std::size_t k : {1, 2}) {
      const auto& l = level(k);
      std::size_t bad = 0;
      for (std::size_t n = 0; n <= kExactN; ++n) {
        mpz_class sum = 0;
        for (TypeId t = 0; t < l.exact.types(); ++t) sum += l.exact(t, n);
        if (sum != catalan_binomial(n)) ++bad;
      }
      ok = ok && bad == 0;
      // the long-double table used for N = 4000 must agree with the exact one
      double worst = 0;
      const auto as_scaled = to_scaled(l.exact);
      for (TypeId t = 0; t < l.exact.types(); ++t)
        for (std::size_t n = 0; n <= kExactN; ++n)
          if (as_scaled(t, n) > 0)
            worst = std::max(worst, static_cast<double>(std::abs(l.scaled(t, n) / as_scaled(t, n) - 1)));
      d << "k=" << k << ": " << bad << " mismatches (scaled vs exact rel. dev. " << std::scientific
        << std::setprecision(1) << worst << std::fixed << std::setprecision(6) << "); ";
    }
    return Outcome{ok, d.str()};
  });

  criterion(2, "fingerprint k-equivalence = EF minimax, sizes <= 5, k in {1,2,3}", [] {
    const auto perms = all_perms_up_to(5);
    std::size_t pairs = 0, disagreements = 0;
    for (std::size_t k = 1; k <= 3; ++k) {
      std::vector<TypeFingerprint> fps;
      for (const auto& p : perms) fps.push_back(fingerprint(p, k));
      for (std::size_t i = 0; i < perms.size(); ++i)
        for (std::size_t j = i; j < perms.size(); ++j) {
          ++pairs;
          const bool ef = ef_winner(perms[i], perms[j], k) == EfWinner::Duplicator;
          if (ef != (fps[i] == fps[j])) ++disagreements;
        }
    }
    return Outcome{disagreements == 0,
                   std::to_string(pairs) + " pairs, " + std::to_string(disagreements) + " disagreements"};
  });

  criterion(3, "type-invariance of satisfaction, Av_n(231) n <= 7", [&] {
    std::vector<NamedSentence> all = corpus;
    all.insert(all.end(), extra.begin(), extra.end());
    std::vector<Permutation> perms;
    for (std::size_t n = 0; n <= 7; ++n)
      for (auto& p : enumerate_av231(n)) perms.push_back(std::move(p));
    std::size_t violations = 0;
    bool has_21 = false;
    for (const auto& s : all) {
      if (s.name == "pattern_21") has_21 = true;
      const std::size_t d = std::max<std::size_t>(qdepth(s.sentence), 1);
      const CompiledFormula f(s.sentence);
      std::map<TypeFingerprint, bool> seen;
      for (const auto& p : perms) {
        const bool v = f.evaluate(p);
        auto [it, inserted] = seen.emplace(fingerprint(p, d), v);
        if (!inserted && it->second != v) ++violations;
      }
    }
    const bool ok = violations == 0 && all.size() >= 12 && has_21;
    return Outcome{ok, std::to_string(all.size()) + " sentences over " + std::to_string(perms.size()) +
                           " permutations, " + std::to_string(violations) + " violations"};
  });

  criterion(4, "composition lemma, k=2, exhaustive over components of size <= 4", [] {
    std::vector<Permutation> components;
    for (std::size_t s = 0; s <= 4; ++s)
      for (auto& p : enumerate_av231(s)) components.push_back(std::move(p));
    const auto r = verify_composition_lemma_exhaustive(2, components);
    return Outcome{r.ok() && r.checked > 0,
                   std::to_string(r.checked) + " checks, " + std::to_string(r.violations) + " violations"};
  });

  criterion(5, "unique terminal SCC, empty type in bullet", [] {
    std::ostringstream d;
    bool ok = true;
    for (std::size_t k : {1, 2}) {
      const auto& ts = level(k).ts;
      const bool unique = ts.scc.terminal.size() == 1;
      const bool empty_bullet = !ts.star[ts.empty_type];
      ok = ok && unique && empty_bullet;
      d << "k=" << k << ": |T|=" << ts.size() << ", star " << ts.star_types().size() << ", terminal components "
        << ts.scc.terminal.size() << ", empty " << (empty_bullet ? "bullet" : "STAR") << "; ";
    }
    return Outcome{ok, d.str()};
  });

  criterion(6, "Jacobian column sums = 2zC(z) exactly to order 2000, k in {1,2}", [] {
    std::ostringstream d;
    bool ok = true;
    for (std::size_t k : {1, 2}) {
      const auto& l = level(k);
      const auto r = check_jacobian_column_sums(l.ts, l.exact);
      ok = ok && r.ok && r.max_order == kExactN && r.columns == l.ts.size();
      d << "k=" << k << ": " << r.columns << " columns " << (r.ok ? "exact" : r.first_failure) << "; ";
    }
    return Outcome{ok, d.str()};
  });

  criterion(7, "spectral dichotomy at N=4000: SR(M_bullet) <= 0.98, SR(M) in [0.95, 1]", [] {
    std::ostringstream d;
    bool ok = true;
    for (std::size_t k : {1, 2}) {
      const auto& l = level(k);
      const auto ev = eval_jacobian_at(l.ts, l.scaled, 0.25);
      const double full = spectral_radius(ev.M).radius;
      const double bullet = spectral_radius(restrict_matrix(ev.M, l.ts.bullet_types())).radius;
      ok = ok && bullet <= 0.98 && full >= 0.95 && full <= 1.0;
      d << "k=" << k << ": SR(M)=" << full << ", SR(M_bullet)=" << bullet << "; ";
    }
    return Outcome{ok, d.str()};
  });

  criterion(8, "asymptotics: A = 1/sqrt(pi) (k=1), sum_star A in [0.553, 0.576] and bullet kappa <= 3.95 (k=2)", [] {
    const double target = 1 / std::sqrt(M_PI);
    const auto& l1 = level(1);
    const double a1 = l1.est.A[l1.ts.star_types().front()];
    const auto& l2 = level(2);
    double sum_a = 0, kappa = 0;
    for (TypeId t : l2.ts.star_types()) sum_a += l2.est.A[t];
    for (TypeId t : l2.ts.bullet_types()) kappa = std::max(kappa, l2.est.kappa[t]);
    const bool ok = std::abs(a1 / target - 1) <= 0.01 && sum_a >= 0.553 && sum_a <= 0.576 && kappa <= 3.95;
    std::ostringstream d;
    d << "k=1 A=" << a1 << " (1/sqrt(pi)=" << target << "); k=2 sum A=" << sum_a << ", max bullet kappa=" << kappa;
    return Outcome{ok, d.str()};
  });

  criterion(9, "limits: max first -> 1/4, tau = 1 -> 1/16 (within 5e-3)", [&] {
    const auto& l = level(2);
    const auto mf = limiting_probability(l.ts, l.est, find_sentence(corpus, "max_first"));
    const auto t1 = limiting_probability(l.ts, l.est, find_sentence(corpus, "tau_is_one"));
    const bool ok = std::abs(mf.limit - 0.25) <= 5e-3 && std::abs(t1.limit - 0.0625) <= 5e-3;
    std::ostringstream d;
    d << "max first " << mf.limit << ", tau = 1 " << t1.limit;
    return Outcome{ok, d.str()};
  });

  criterion(10, "Monte Carlo n=1000, 1e5 samples: |emp - limit| <= 3 stderr + 0.02", [&] {
    const auto& l = level(2);
    std::vector<Formula> sentences;
    for (const auto& s : corpus) sentences.push_back(s.sentence);
    const auto mc = monte_carlo_check_many(sentences, 1000, 100000, 20240601);
    std::size_t bad = 0;
    double worst = -1;
    std::string worst_name;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto r = limiting_probability(l.ts, l.est, corpus[i].sentence);
      const double gap = std::abs(mc[i].empirical - r.limit) - 3 * mc[i].standard_error;
      if (gap > 0.02) ++bad;
      if (gap > worst) {
        worst = gap;
        worst_name = corpus[i].name;
      }
    }
    std::ostringstream d;
    d << corpus.size() << " sentences, " << bad << " outside; largest |emp - limit| - 3 stderr = " << worst << " ("
      << worst_name << ")";
    return Outcome{bad == 0, d.str()};
  });

  criterion(11, "sampler chi-square over Av_5(231), 1e5 samples, p > 1e-3", [] {
    Av231Sampler sampler(5);
    std::mt19937_64 rng(77);
    const auto cells = enumerate_av231(5);
    std::map<Permutation, std::size_t> counts;
    const std::size_t samples = 100000;
    for (std::size_t i = 0; i < samples; ++i) ++counts[sampler(5, rng)];
    const double expected = static_cast<double>(samples) / static_cast<double>(cells.size());
    double stat = 0;
    for (const auto& c : cells) {
      const double o = static_cast<double>(counts[c]);
      stat += (o - expected) * (o - expected) / expected;
    }
    const boost::math::chi_squared dist(static_cast<double>(cells.size() - 1));
    const double p = boost::math::cdf(boost::math::complement(dist, stat));
    std::ostringstream d;
    d << cells.size() << " cells, chi2=" << stat << ", p=" << p;
    return Outcome{p > 1e-3 && counts.size() == cells.size(), d.str()};
  });

  criterion(12, "Kakeya grid 0.05j, epsilon 1e-4: sums within epsilon, sentences match oracle on n <= 9", [] {
    std::vector<mpq_class> targets;
    for (int j = 1; j <= 19; ++j) targets.emplace_back(j, 20);
    const auto rows = verify_density_grid(targets, mpq_class(1, 10000), 0, 0, 0, 9);
    std::size_t off = 0, mismatches = 0;
    for (const auto& r : rows) {
      if (!r.within_epsilon) ++off;
      mismatches += r.oracle_mismatches;
    }
    const bool condition = kakeya_condition_holds(30);
    std::ostringstream d;
    d << rows.size() << " targets, " << off << " outside epsilon, " << mismatches
      << " oracle mismatches, Kakeya condition to level 30 " << (condition ? "holds" : "FAILS");
    return Outcome{off == 0 && mismatches == 0 && condition, d.str()};
  });

  criterion(13, "dichotomy: empty / exactly one decay (freq 0 at n=200), pattern 21 -> 1", [&] {
    const auto& l = level(2);
    bool ok = true;
    std::ostringstream d;
    for (const char* name : {"empty", "exactly_one"}) {
      const auto r = limiting_probability(l.ts, l.est, find_sentence(corpus, name));
      const auto mc = monte_carlo_check(find_sentence(corpus, name), 200, 10000, 13);
      ok = ok && r.classification == Classification::ExponentialDecay && mc.empirical == 0.0;
      d << name << ": " << to_string(r.classification) << ", kappa " << r.kappa_bound.value_or(-1) << ", freq "
        << mc.empirical << "; ";
    }
    const auto p21 = limiting_probability(l.ts, l.est, find_sentence(corpus, "pattern_21"));
    ok = ok && p21.classification == Classification::PositiveLimit && std::abs(p21.limit - 1) <= 1e-3;
    d << "pattern 21: " << to_string(p21.classification) << ", limit " << p21.limit;
    return Outcome{ok, d.str()};
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
