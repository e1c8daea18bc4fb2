#pragma once

#include <random>
#include <string>
#include <string_view>

#include "perfprof/dataset.hpp"
#include "perfprof/engine.hpp"

namespace perfprof::testing {

/// Car benchmark: three cars, six tracks labelled Road/Wood.
inline constexpr std::string_view kCarsJson = R"({
  "metric" : "time",
  "labels" : ["Road","Wood"],
  "instances" :  [[0],[0],[0,1],[0,1],[1],[1]],
  "data": {
      "Car A": {
        "wheels" : [100,30,40,50,10,20],
        "motor" : [20,3,4,5,1,2]
      },
      "Car B": {
        "wheels" : [10,7,45,55,30,50]
      },
      "Car C" : {
        "wheels" : [15,12,35,40,15,25],
        "motor" : [10,3,4,5,1,2]
      }
  }
})";

Dataset cars();

struct GenLimits {
  std::size_t max_solvers = 8;
  std::size_t max_instances = 50;
  std::size_t max_components = 3;
  std::size_t max_labels = 3;
};

/// Random dataset. Values are uniform in [0,100]; about a third of the
/// datasets use integer values so ties and exact zeros occur.
Dataset random_dataset(std::mt19937_64& rng, const GenLimits& limits = {});

/// Random valid config: non-empty baseline subset, random active labels,
/// random factors in [0,1], random thresholds (each disabled half the time).
AnalysisConfig random_config(std::mt19937_64& rng, const Dataset& dataset);

/// Config with thresholds disabled, all labels active, no scaling.
AnalysisConfig plain_config(const Dataset& dataset, std::vector<std::string> baselines);

}  // namespace perfprof::testing
