#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srcloc/graph.hpp"

namespace srcloc {

enum class PropModel { SI, SIS, SIR, IC, LT };
enum class EdgeProbRule { InverseTargetDegree, Constant };
enum class ThresholdRule { UniformRandom, Constant };
enum class ObservationMode { FinalState, TimeFraction };

std::string to_string(PropModel m);
PropModel prop_model_from_string(const std::string& s);

struct PropagationConfig {
  PropModel model = PropModel::SI;
  double beta = 0.1;    // infection probability per contact (SI/SIS/SIR)
  double lambda = 0.05; // revert-to-susceptible probability (SIS)
  double gamma = 0.05;  // recovery probability (SIR)
  EdgeProbRule edge_prob_rule = EdgeProbRule::InverseTargetDegree;
  double edge_prob_const = 0.1;
  ThresholdRule threshold_rule = ThresholdRule::UniformRandom;
  double threshold_const = 0.5;
  int max_steps = 100;
  double source_fraction = 0.05;
  ObservationMode observation = ObservationMode::FinalState;
  // time-fraction mode: redefine x* as nodes infected within the first 10%
  // of the propagation span (else x* stays the seeded sources)
  bool redefine_sources_by_time = false;
  double observe_time_fraction = 0.30;
  double source_time_fraction = 0.10;

  void validate() const;
};

inline constexpr int kNeverInfected = -1;

// node states in Cascade::final_state
inline constexpr std::uint8_t kSusceptible = 0;
inline constexpr std::uint8_t kInfected = 1;  // infected / active
inline constexpr std::uint8_t kRecovered = 2;

struct Cascade {
  std::vector<int> sources;            // ascending
  std::vector<int> infection_time;     // step of first infection, -1 if never
  std::vector<std::uint8_t> final_state;
  std::vector<std::uint8_t> ever_infected;
  int steps_run = 0;
};

struct Sample {
  int id = 0;
  PropModel model = PropModel::SI;
  std::vector<std::uint8_t> x_star;  // ground-truth sources
  std::vector<std::uint8_t> y;       // observed infected; x_star subset of y
};

// Synchronous round-based simulation; stops at max_steps or when the process
// reaches an absorbing state.
Cascade simulate(const Graph& g, const std::vector<int>& sources, const PropagationConfig& cfg,
                 std::uint64_t seed);

// Draws ceil(source_fraction*n) sources without replacement and extracts the
// observation. Cascades that never spread beyond the sources are retried with
// a fresh stream (final-state mode; capped), then rejected.
Sample make_sample(const Graph& g, const PropagationConfig& cfg, std::uint64_t seed);
inline constexpr int kMakeSampleRetryCap = 16;

struct WeightedConfig {
  PropagationConfig config;
  double weight = 1.0;
};

struct DatasetMeta {
  std::string graph_path;
  int count = 0;
  std::uint64_t seed = 0;
  std::string config_summary;           // canonical text form of the mixture
  std::vector<std::pair<std::string, int>> model_counts;
};

struct Dataset {
  DatasetMeta meta;
  std::vector<Sample> samples;
};

// Samples model kinds by weight; record i is reproducible from (g, cfgs, seed, i)
// alone, so the file is append-ordered and stable.
Dataset generate_dataset(const Graph& g, const std::vector<WeightedConfig>& cfgs, int count,
                         std::uint64_t seed);

std::string config_summary(const std::vector<WeightedConfig>& cfgs);

// One header line, then "id<TAB>model<TAB>source ids<TAB>observed ids".
void write_dataset(const Dataset& ds, const std::string& path);
Dataset read_dataset(const std::string& path, int node_count);

}  // namespace srcloc
