#include "toto/kakeya.hpp"

#include <algorithm>
#include <cctype>

#include "toto/catalan.hpp"
#include "toto/error.hpp"
#include "toto/model_check.hpp"

namespace toto {
namespace {

mpq_class quarter_power(std::size_t k) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 4, k);
  return mpq_class(1, den);
}

using Rel = Relation;

Formula less_p(const std::string& a, const std::string& b) { return Formula::atom(Rel::LessPosition, a, b); }
Formula less_v(const std::string& a, const std::string& b) { return Formula::atom(Rel::LessValue, a, b); }
Formula conj(std::vector<Formula> fs) { return fs.size() == 1 ? fs.front() : Formula::conjunction(std::move(fs)); }
Formula disj(std::vector<Formula> fs) { return fs.size() == 1 ? fs.front() : Formula::disjunction(std::move(fs)); }

// No element strictly between a and b in position.
Formula adjacent(const std::string& a, const std::string& b) {
  return Formula::forall("y", Formula::negation(Formula::conjunction({less_p(a, "y"), less_p("y", b)})));
}

std::string var(std::size_t i) { return "x" + std::to_string(i + 1); }

// Value atoms making x1..xr order-isomorphic to rho.
std::vector<Formula> pattern_atoms(const Permutation& rho) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < rho.size(); ++i)
    for (std::size_t j = i + 1; j < rho.size(); ++j)
      out.push_back(rho[i] < rho[j] ? less_v(var(i), var(j)) : less_v(var(j), var(i)));
  return out;
}

// The elements before m are exactly x1 < ... < xr (in position) and form rho.
// Quantifiers run from x_r back to x1 so each one is pinned by its successor.
Formula tau_equals(const Permutation& rho) {
  const std::size_t r = rho.size();
  if (r == 0) return Formula::forall("y", Formula::negation(less_p("y", "m")));
  std::vector<Formula> inner = pattern_atoms(rho);
  inner.insert(inner.begin(), Formula::forall("y", Formula::negation(less_p("y", var(0)))));
  Formula body = conj(std::move(inner));
  for (std::size_t i = 0; i < r; ++i) {
    const std::string next = i + 1 < r ? var(i + 1) : "m";
    body = Formula::exists(var(i), Formula::conjunction({less_p(var(i), next), adjacent(var(i), next), body}));
  }
  return body;
}

// The elements after m are exactly x1 < ... < xr and form rho.
Formula pi_equals(const Permutation& rho) {
  const std::size_t r = rho.size();
  if (r == 0) return Formula::forall("y", Formula::negation(less_p("m", "y")));
  std::vector<Formula> inner = pattern_atoms(rho);
  inner.insert(inner.begin(), Formula::forall("y", Formula::negation(less_p(var(r - 1), "y"))));
  Formula body = conj(std::move(inner));
  for (std::size_t i = r; i-- > 0;) {
    const std::string prev = i > 0 ? var(i - 1) : "m";
    body = Formula::exists(var(i), Formula::conjunction({less_p(prev, var(i)), adjacent(prev, var(i)), body}));
  }
  return body;
}

}  // namespace

mpq_class EventSpec::subsum() const {
  mpq_class s = 0;
  for (const auto& p : F) s += quarter_power(p.size() + 1);
  for (const auto& p : Fprime) s += quarter_power(p.size() + 1);
  return s;
}

mpq_class EventSpec::limit() const { return complement ? mpq_class(1) - subsum() : subsum(); }

std::size_t EventSpec::max_rep_size() const {
  std::size_t m = 0;
  for (const auto& p : F) m = std::max(m, p.size());
  for (const auto& p : Fprime) m = std::max(m, p.size());
  return m;
}

EventSpec greedy_subsum(const mpq_class& target, const mpq_class& epsilon, std::size_t max_levels) {
  if (epsilon <= 0) throw Error("greedy_subsum: epsilon must be positive");
  if (target < 0 || target > 1) throw Error("greedy_subsum: target outside [0, 1]");
  EventSpec spec;
  mpq_class rem = target;
  if (target * 2 > 1) {
    spec.complement = true;
    rem = 1 - target;
  }
  for (std::size_t k = 0; k < max_levels && rem >= epsilon; ++k) {
    const mpq_class w = quarter_power(k + 1);
    const mpq_class ratio = rem / w;
    mpz_class fits;
    mpz_fdiv_q(fits.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
    const mpz_class cat = catalan(k);
    const mpz_class take = std::min<mpz_class>(fits, 2 * cat);
    if (take == 0) continue;
    rem -= w * take;
    const std::size_t total = take.get_ui();
    const std::size_t in_f = std::min<std::size_t>(total, cat.fits_ulong_p() ? cat.get_ui() : total);
    for (auto& p : first_av231(k, in_f)) spec.F.push_back(std::move(p));
    for (auto& p : first_av231(k, total - in_f)) spec.Fprime.push_back(std::move(p));
  }
  if (rem >= epsilon) throw Error("greedy_subsum: defect still at least epsilon after the level cap");
  return spec;
}

Formula emit_event_sentence(const EventSpec& spec) {
  if (spec.F.empty() && spec.Fprime.empty()) {
    const Formula x_eq_x = Formula::atom(Rel::Equal, "x", "x");
    return spec.complement ? Formula::forall("x", x_eq_x) : Formula::exists("x", Formula::negation(x_eq_x));
  }
  std::vector<Formula> cases;
  for (const auto& rho : spec.F) cases.push_back(tau_equals(rho));
  for (const auto& rho : spec.Fprime) cases.push_back(pi_equals(rho));
  const Formula is_max = Formula::forall("y", Formula::negation(less_v("m", "y")));
  Formula event = Formula::exists("m", Formula::conjunction({is_max, disj(std::move(cases))}));
  return spec.complement ? Formula::negation(std::move(event)) : event;
}

bool event_holds(const EventSpec& spec, const Permutation& sigma) {
  bool in = false;
  if (!sigma.empty()) {
    const Decomposition d = decompose(sigma);
    in = std::find(spec.F.begin(), spec.F.end(), d.tau) != spec.F.end() ||
         std::find(spec.Fprime.begin(), spec.Fprime.end(), d.pi) != spec.Fprime.end();
  }
  return in != spec.complement;
}

std::size_t event_sentence_mismatches(const EventSpec& spec, const Formula& sentence, std::size_t max_n) {
  const CompiledFormula compiled(sentence);
  std::size_t bad = 0;
  for (std::size_t n = 0; n <= max_n; ++n)
    for (const auto& sigma : enumerate_av231(n, std::max(max_n, kDefaultEnumerationCap)))
      if (compiled.evaluate(sigma) != event_holds(spec, sigma)) ++bad;
  return bad;
}

mpq_class weight_tail_after(std::size_t k) {
  mpq_class s = 1;
  for (std::size_t j = 0; j <= k; ++j) s -= 2 * mpq_class(catalan(j)) * quarter_power(j + 1);
  return s;
}

bool kakeya_condition_holds(std::size_t levels) {
  mpq_class tail = 1;
  for (std::size_t k = 0; k <= levels; ++k) {
    tail -= 2 * mpq_class(catalan(k)) * quarter_power(k + 1);
    if (quarter_power(k + 1) > tail) return false;
  }
  return true;
}

std::vector<DensityGridRow> verify_density_grid(const std::vector<mpq_class>& targets, const mpq_class& epsilon,
                                                std::size_t n, std::size_t samples, std::uint64_t seed,
                                                std::size_t oracle_max_n) {
  std::vector<DensityGridRow> rows;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    DensityGridRow row;
    row.target = targets[i];
    row.spec = greedy_subsum(row.target, epsilon);
    row.achieved = row.spec.limit();
    row.within_epsilon = abs(row.achieved - row.target) <= epsilon;
    const Formula sentence = emit_event_sentence(row.spec);
    row.oracle_mismatches = event_sentence_mismatches(row.spec, sentence, oracle_max_n);
    if (samples > 0) row.monte_carlo = monte_carlo_check(sentence, n, samples, seed + i);
    rows.push_back(std::move(row));
  }
  return rows;
}

mpq_class parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw ParseError("empty number", 0);
  if (s.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("malformed fraction", 0);
    if (q.get_den() == 0) throw ParseError("zero denominator", s.find('/'));
    q.canonicalize();
    return q;
  }
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long frac = 0;
  bool dot = false;
  for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
    if (s[i] == '.') {
      if (dot) throw ParseError("second decimal point", i);
      dot = true;
    } else {
      digits += s[i];
      if (dot) ++frac;
    }
  }
  if (digits.empty()) throw ParseError("expected digits", i);
  long exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    const std::size_t at = ++i;
    std::size_t used = 0;
    try {
      exponent = std::stol(s.substr(at), &used);
    } catch (const std::exception&) {
      throw ParseError("malformed exponent", at);
    }
    i = at + used;
  }
  if (i != s.size()) throw ParseError("unexpected character", i);
  mpq_class q{mpz_class(digits, 10)};
  const long shift = exponent - frac;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0)
    q *= scale;
  else
    q /= scale;
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

std::string fraction_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace toto
