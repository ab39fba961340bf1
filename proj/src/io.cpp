#include "toto/io.hpp"

#include <fstream>
#include <sstream>

#include "toto/error.hpp"

namespace toto {

Json to_json(const TypeSystem& ts) {
  Json j;
  j["k"] = ts.k;
  Json types = Json::array();
  for (TypeId t = 0; t < ts.size(); ++t)
    types.push_back({{"id", t}, {"rep", ts.reps[t].to_string()}, {"star", static_cast<bool>(ts.star[t])}});
  j["types"] = std::move(types);
  j["H"] = ts.H;
  Json edges = Json::array();
  for (auto [u, t] : ts.edges) edges.push_back({u, t});
  j["edges"] = std::move(edges);
  return j;
}

std::string to_dot(const TypeSystem& ts) {
  std::ostringstream out;
  out << "digraph condensation {\n  rankdir=LR;\n";
  for (std::size_t c = 0; c < ts.scc.members.size(); ++c) {
    const auto& members = ts.scc.members[c];
    const bool star = ts.star[members.front()];
    out << "  c" << c << " [label=\"";
    if (members.size() <= 6) {
      for (std::size_t i = 0; i < members.size(); ++i) out << (i ? "," : "") << members[i];
    } else {
      out << members.size() << " types";
    }
    out << "\"" << (star ? ", style=filled, fillcolor=gold" : "") << "];\n";
  }
  for (auto [a, b] : ts.scc.dag_edges) out << "  c" << a << " -> c" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_csv(const CoeffTable& table) {
  std::ostringstream out;
  out << "n";
  for (std::size_t t = 0; t < table.types(); ++t) out << ",t" << t;
  out << "\n";
  for (std::size_t n = 0; n <= table.N; ++n) {
    out << n;
    for (std::size_t t = 0; t < table.types(); ++t) out << "," << table.c[t][n].get_str();
    out << "\n";
  }
  return out.str();
}

Json to_json(const DlwReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"condition", c.condition}, {"pass", c.pass}, {"detail", c.detail}, {"residual", c.residual}});
  return {{"all_pass", report.all_pass()}, {"checks", std::move(checks)}};
}

Json to_json(const SpectralEstimate& e) {
  return {{"radius", e.radius},
          {"upper_bound", e.upper_bound},
          {"max_column_sum", e.max_column_sum},
          {"iterations", e.iterations},
          {"converged", e.converged}};
}

Json to_json(const MonteCarloResult& r) {
  return {{"n", r.n}, {"samples", r.samples}, {"empirical", r.empirical}, {"stderr", r.standard_error}};
}

Json to_json(const LimitReport& r) {
  Json j;
  j["sentence"] = r.sentence;
  j["k"] = r.k;
  j["t_psi"] = r.t_psi;
  j["limit"] = r.limit;
  j["error"] = r.error;
  j["tolerance"] = r.tolerance;
  j["classification"] = to_string(r.classification);
  j["kappa_bound"] = r.kappa_bound ? Json(*r.kappa_bound) : Json(nullptr);
  j["monte_carlo"] = r.monte_carlo ? to_json(*r.monte_carlo) : Json(nullptr);
  return j;
}

Json to_json(const EventSpec& spec) {
  auto strings = [](const std::vector<Permutation>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
  };
  return {{"F", strings(spec.F)},
          {"Fprime", strings(spec.Fprime)},
          {"complement", spec.complement},
          {"sum", fraction_string(spec.subsum())},
          {"limit", fraction_string(spec.limit())}};
}

Json to_json(const CompositionReport& r) {
  return {{"checked", r.checked}, {"violations", r.violations}, {"examples", r.examples}};
}

Json to_json(const RunConfig& c) {
  return {{"command", c.command},     {"k", c.k},
          {"seed_size", c.seed_size}, {"N", c.N},
          {"fingerprint_cap", c.fingerprint_cap}, {"ef_cap", c.ef_cap},
          {"seed", c.seed},           {"output_dir", c.output_dir}};
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << contents;
    if (!out.flush()) {
      out.close();
      std::filesystem::remove(tmp);
      throw Error("write failed for " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace toto
