#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "toto/dlw.hpp"
#include "toto/estimators.hpp"
#include "toto/inference.hpp"
#include "toto/io.hpp"
#include "toto/kakeya.hpp"
#include "toto/model_check.hpp"
#include "toto/permutation.hpp"
#include "toto/sampler.hpp"
#include "toto/series.hpp"
#include "toto/spectral.hpp"
#include "toto/type_system.hpp"

namespace fs = std::filesystem;
using namespace toto;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kComputation = 2;
constexpr int kFinding = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string out_dir = ".";
  std::size_t k = 2;
  std::size_t seed_size = 8;
  std::size_t N = 1000;
  std::uint64_t seed = 1;
  std::size_t n = 0;
  std::size_t count = 1;
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t trials = 2000;
  std::vector<std::size_t> mc;  // n samples
  std::string sentence_file;
  std::string permutation;
  std::string target;
  std::string epsilon = "1e-4";
};

// Files written by this invocation, removed again if a later step fails.
std::vector<fs::path> written;

void emit(const Options& o, const std::string& name, const std::string& contents) {
  fs::create_directories(o.out_dir);
  const fs::path path = fs::path(o.out_dir) / name;
  write_atomically(path, contents);
  written.push_back(path);
}

void emit_config(const Options& o, const std::string& command) {
  RunConfig c;
  c.command = command;
  c.k = o.k;
  c.seed_size = o.seed_size;
  c.N = o.N;
  c.fingerprint_cap = FingerprintLimits{}.max_size;
  c.ef_cap = EfLimits{}.max_size;
  c.seed = o.seed;
  c.output_dir = o.out_dir;
  emit(o, command + ".run_config.json", to_json(c).dump(2) + "\n");
}

std::string read_source(const std::string& file) {
  if (file == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read " + file);
  return {std::istreambuf_iterator<char>(in), {}};
}

TypeSystem types_for(const Options& o) {
  TypeSystemOptions opt;
  opt.seed_size = o.seed_size;
  return build_type_system(o.k, opt);
}

int cmd_enumerate(const Options& o) {
  for (const auto& p : enumerate_av231(o.n, o.cap)) std::cout << p.to_string() << "\n";
  return kOk;
}

int cmd_sample(const Options& o) {
  Av231Sampler sampler(o.n);
  std::mt19937_64 rng(o.seed);
  for (std::size_t i = 0; i < o.count; ++i) std::cout << sampler(o.n, rng).to_string() << "\n";
  return kOk;
}

int cmd_check(const Options& o) {
  const Formula psi = parse_sentence(read_source(o.sentence_file));
  const Permutation sigma = Permutation::parse(o.permutation);
  std::cout << (models(sigma, psi) ? "true" : "false") << "\n";
  return kOk;
}

int cmd_types(const Options& o) {
  const TypeSystem ts = types_for(o);
  const std::string stem = "types_k" + std::to_string(o.k);
  emit(o, stem + ".json", to_json(ts).dump(2) + "\n");
  emit(o, stem + ".dot", to_dot(ts));
  emit_config(o, "types");
  std::cout << "k=" << ts.k << ": " << ts.size() << " types, " << ts.star_types().size() << " star, "
            << ts.scc.members.size() << " components\n";
  return kOk;
}

int cmd_coeffs(const Options& o) {
  const TypeSystem ts = types_for(o);
  const CoeffTable table = compute_coefficients(ts, o.N);
  emit(o, "coeffs_k" + std::to_string(o.k) + "_N" + std::to_string(o.N) + ".csv", to_csv(table));
  emit_config(o, "coeffs");
  std::cout << "wrote " << table.types() << " series to order " << table.N << "\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  const TypeSystem ts = types_for(o);
  bool ok = true;
  Json j;
  j["k"] = ts.k;
  j["types"] = ts.size();
  j["star"] = ts.star_types().size();

  const auto random = verify_composition_lemma(ts, o.trials, o.seed);
  std::vector<Permutation> components;
  for (std::size_t s = 0; s <= 4; ++s)
    for (auto& p : enumerate_av231(s)) components.push_back(std::move(p));
  const auto exhaustive = verify_composition_lemma_exhaustive(ts.k, components);
  j["composition_random"] = to_json(random);
  j["composition_exhaustive"] = to_json(exhaustive);
  ok = ok && random.ok() && exhaustive.ok();

  const auto scaled = compute_scaled_coefficients(ts, o.N);
  const DlwReport dlw = check_dlw_conditions(ts, scaled);
  j["dlw"] = to_json(dlw);
  ok = ok && dlw.all_pass();

  const auto eval = eval_jacobian_at(ts, scaled, 0.25);
  const auto full = spectral_radius(eval.M);
  const auto bullet = ts.bullet_types();
  const auto sb = spectral_radius(restrict_matrix(eval.M, bullet));
  j["spectral"] = {{"full", to_json(full)}, {"bullet", to_json(sb)}, {"tail_bound", eval.tail_bound}};
  const bool spectral_ok = sb.radius < 1.0 && full.radius <= 1.0 && full.radius + eval.tail_bound >= 1.0 - 1e-9;
  j["spectral"]["dichotomy"] = spectral_ok;
  ok = ok && spectral_ok;

  bool aperiodic = true;
  for (TypeId t : ts.star_types()) aperiodic = aperiodic && support_period(scaled.s[t]) == 1;
  j["aperiodic"] = aperiodic;
  j["all_pass"] = ok;
  emit(o, "verify_k" + std::to_string(o.k) + ".json", j.dump(2) + "\n");
  emit_config(o, "verify");

  std::cout << "k=" << ts.k << ": " << ts.size() << " types, " << bullet.size() << " bullet, "
            << ts.star_types().size() << " star\n";
  std::cout << "composition: " << random.checked + exhaustive.checked << " checks, "
            << random.violations + exhaustive.violations << " violations\n";
  for (const auto& c : dlw.checks) std::cout << "dlw (" << c.condition << ") " << (c.pass ? "pass" : "FAIL") << ": " << c.detail << "\n";
  std::cout << "spectral radius M(1/4) = " << full.radius << ", bullet block = " << sb.radius << "\n";
  std::cout << (ok ? "all checks pass" : "verification finding") << "\n";
  return ok ? kOk : kFinding;
}

int cmd_limit(const Options& o) {
  const Formula psi = parse_sentence(read_source(o.sentence_file));
  const TypeSystem ts = types_for(o);
  const auto scaled = compute_scaled_coefficients(ts, o.N);
  LimitReport r = limiting_probability(ts, scaled, psi);
  if (!o.mc.empty()) {
    if (o.mc.size() != 2) throw UsageError("--mc takes two values: n samples");
    r.monte_carlo = monte_carlo_check(psi, o.mc[0], o.mc[1], o.seed);
  }
  emit(o, "limit.json", to_json(r).dump(2) + "\n");
  emit_config(o, "limit");
  std::cout << r.sentence << "\n";
  std::cout << "limit " << r.limit << " +- " << r.tolerance << " (" << to_string(r.classification) << ", "
            << r.t_psi.size() << " of " << ts.size() << " types)\n";
  if (r.kappa_bound) std::cout << "growth bound " << *r.kappa_bound << " (decay ratio " << *r.kappa_bound / 4 << ")\n";
  if (r.monte_carlo)
    std::cout << "monte carlo n=" << r.monte_carlo->n << ": " << r.monte_carlo->empirical << " +- "
              << r.monte_carlo->standard_error << "\n";
  return kOk;
}

int cmd_kakeya(const Options& o) {
  mpq_class target, epsilon;
  try {
    target = parse_rational(o.target);
    epsilon = parse_rational(o.epsilon);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad number: ") + e.what());
  }
  const EventSpec spec = greedy_subsum(target, epsilon);
  const Formula sentence = emit_event_sentence(spec);
  Json j = to_json(spec);
  j["target"] = fraction_string(target);
  j["epsilon"] = fraction_string(epsilon);
  j["sentence"] = sentence.to_string();
  emit(o, "kakeya.json", j.dump(2) + "\n");
  emit(o, "kakeya_sentence.txt", sentence.to_string() + "\n");
  emit_config(o, "kakeya");
  std::cout << "limit " << fraction_string(spec.limit()) << (spec.complement ? " (complement)" : "") << ", |F| = "
            << spec.F.size() << ", |F'| = " << spec.Fprime.size() << ", depth " << qdepth(sentence) << "\n";
  std::cout << sentence.to_string() << "\n";
  return kOk;
}

int cmd_report(const Options& o) {
  Json summary;
  summary["output_dir"] = o.out_dir;
  Json files = Json::object();
  bool findings = false;
  std::vector<fs::path> paths;
  if (fs::is_directory(o.out_dir))
    for (const auto& e : fs::directory_iterator(o.out_dir))
      if (e.path().extension() == ".json" && e.path().filename() != "report.json") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) {
    std::ifstream in(p);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const std::exception&) {
      continue;
    }
    Json entry;
    for (const char* key : {"all_pass", "limit", "classification", "sum", "k", "types", "star"})
      if (doc.is_object() && doc.contains(key) && doc[key].is_primitive()) entry[key] = doc[key];
    if (doc.is_object() && doc.contains("all_pass") && !doc["all_pass"].get<bool>()) findings = true;
    files[p.filename().string()] = entry;
  }
  summary["files"] = files;
  summary["findings"] = findings;
  emit(o, "report.json", summary.dump(2) + "\n");
  for (const auto& [name, entry] : files.items()) std::cout << name << ": " << entry.dump() << "\n";
  std::cout << paths.size() << " outputs summarized" << (findings ? ", with findings" : "") << "\n";
  return findings ? kFinding : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Limiting probabilities of first-order sentences on 231-avoiding permutations"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--out", o.out_dir, "Output directory")->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "List Av_n(231) in lexicographic order");
  enumerate->add_option("n", o.n)->required();
  enumerate->add_option("--cap", o.cap, "Largest n allowed")->capture_default_str();

  auto* sample = app.add_subcommand("sample", "Uniform samples from Av_n(231)");
  sample->add_option("n", o.n)->required();
  sample->add_option("--count", o.count)->capture_default_str();
  sample->add_option("--seed", o.seed)->capture_default_str();

  auto* check = app.add_subcommand("check", "Model-check a sentence on a permutation");
  check->add_option("sentence-file", o.sentence_file, "File with the sentence, - for stdin")->required();
  check->add_option("perm", o.permutation, "One-line notation, comma separated")->required();

  auto* types = app.add_subcommand("types", "Build the type system (JSON + DOT)");
  types->add_option("--k", o.k)->capture_default_str();
  types->add_option("--seed-size", o.seed_size)->capture_default_str();

  auto* coeffs = app.add_subcommand("coeffs", "Exact coefficients per type (CSV)");
  coeffs->add_option("--k", o.k)->capture_default_str();
  coeffs->add_option("--N", o.N)->capture_default_str();
  coeffs->add_option("--seed-size", o.seed_size)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Composition lemma, DLW, spectral and aperiodicity checks");
  verify->add_option("--k", o.k)->capture_default_str();
  verify->add_option("--N", o.N)->capture_default_str();
  verify->add_option("--seed-size", o.seed_size)->capture_default_str();
  verify->add_option("--trials", o.trials, "Random composition checks")->capture_default_str();
  verify->add_option("--seed", o.seed)->capture_default_str();

  auto* limit = app.add_subcommand("limit", "Limiting probability of a sentence");
  limit->add_option("sentence-file", o.sentence_file, "File with the sentence, - for stdin")->required();
  limit->add_option("--k", o.k)->capture_default_str();
  limit->add_option("--N", o.N)->capture_default_str();
  limit->add_option("--seed-size", o.seed_size)->capture_default_str();
  limit->add_option("--mc", o.mc, "Monte-Carlo check: n samples")->expected(2);
  limit->add_option("--seed", o.seed)->capture_default_str();

  auto* kakeya = app.add_subcommand("kakeya", "Event sentence with limit near a target");
  kakeya->add_option("target", o.target, "Rational in [0, 1]")->required();
  kakeya->add_option("--epsilon", o.epsilon)->capture_default_str();

  auto* report = app.add_subcommand("report", "Summarize the JSON outputs in --out");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(o);
    if (*sample) return cmd_sample(o);
    if (*check) return cmd_check(o);
    if (*types) return cmd_types(o);
    if (*coeffs) return cmd_coeffs(o);
    if (*verify) return cmd_verify(o);
    if (*limit) return cmd_limit(o);
    if (*kakeya) return cmd_kakeya(o);
    if (*report) return cmd_report(o);
  } catch (const UsageError& e) {
    for (const auto& p : written) fs::remove(p);
    std::cerr << "toto: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    for (const auto& p : written) fs::remove(p);
    std::cerr << "toto: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnboundVariable& e) {
    for (const auto& p : written) fs::remove(p);
    std::cerr << "toto: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    for (const auto& p : written) fs::remove(p);
    std::cerr << "toto: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    for (const auto& p : written) fs::remove(p);
    std::cerr << "toto: " << e.what() << "\n";
    return kComputation;
  }
  return kUsage;
}
