#pragma once

#include <string>

#include "tripleline/gaussian/propagator.hpp"
#include "tripleline/series/assemble.hpp"

namespace tripleline::cli {

enum class Format { Json, Csv };

/// Settings of one CLI run, after flags and the config file are merged.
struct RunConfig {
  std::string command;  ///< expand, verify, knots or diagrams
  std::string suite;    ///< verify only: wick, euler, logcheck, bound or propagators
  int kmax = 3;
  int cap = 5;  ///< enumeration cap; at most diagram::kMaxOrder
  int N = 2;
  int d = 1;
  double eps = 0.1;  ///< first epsilon of the extrapolation sequence, or the bound check's epsilon
  series::Convention convention = series::Convention::Action;
  series::SeriesAction action = series::SeriesAction::Standard;
  int threads = 1;
  std::string out = "-";
  Format format = Format::Json;

  /// Throws ValidationError for eps <= 0, threads < 1, kmax < 0 or a bad cap,
  /// and ResourceLimitError when kmax exceeds the cap.
  void validate() const;

  series::AssembleOptions assemble_options() const;
};

}  // namespace tripleline::cli
