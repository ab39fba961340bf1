#pragma once

#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <string>

#include "toto/dlw.hpp"
#include "toto/inference.hpp"
#include "toto/kakeya.hpp"
#include "toto/series.hpp"
#include "toto/spectral.hpp"
#include "toto/type_system.hpp"

namespace toto {

using Json = nlohmann::ordered_json;

Json to_json(const TypeSystem& ts);
/// Condensation DAG of the dependency graph; star component filled.
std::string to_dot(const TypeSystem& ts);
/// Header "n,t0,t1,...", one row per n, exact decimal integers.
std::string to_csv(const CoeffTable& table);

Json to_json(const DlwReport& report);
Json to_json(const SpectralEstimate& estimate);
Json to_json(const MonteCarloResult& result);
Json to_json(const LimitReport& report);
Json to_json(const EventSpec& spec);
Json to_json(const CompositionReport& report);

/// Reproducibility record written next to every CLI output.
struct RunConfig {
  std::string command;
  std::size_t k = 0;
  std::size_t seed_size = 0;
  std::size_t N = 0;
  std::size_t fingerprint_cap = 0;
  std::size_t ef_cap = 0;
  std::uint64_t seed = 0;
  std::string output_dir;
};

Json to_json(const RunConfig& config);

/// Writes through a temporary file and renames, so a failed run leaves no
/// partial output behind.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace toto
