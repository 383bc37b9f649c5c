#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cutdg/scenario.hpp"

namespace cutdg::cli {

struct EigenSweep {
  std::vector<int> degrees = {0, 1, 2, 3, 4};
  std::vector<double> alphas = {1e-2, 1e-10};
  std::vector<bool> stabilized = {false, true};
  std::size_t cells = 8;
  CutMode cut = CutMode::Boundary;
  std::string eigenvalues_out;
};

struct TvOptions {
  std::size_t steps = 0;  // 0 runs to t_final
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  bool random_init = false;  // seeded random cell averages instead of u0
};

struct Options {
  RunConfig run;
  EigenSweep eigen;
  TvOptions tv;
  std::string tv_out;
};

/// Reads an INI file with sections [run], [cut], [limiter], [stabilization],
/// [converge], [eigen], [tv]. Unknown sections or keys are rejected.
Options load_config(const std::string& path);

LimiterConfig make_limiter(std::string_view mode, double m);
std::string limiter_name(const LimiterConfig& limiter);
double limiter_m(const LimiterConfig& limiter);

/// Comma separated lists, whitespace tolerated.
std::vector<double> parse_doubles(std::string_view text);
std::vector<std::size_t> parse_sizes(std::string_view text);
std::vector<int> parse_ints(std::string_view text);
std::vector<bool> parse_stabilized(std::string_view text);
bool parse_bool(std::string_view text);

}  // namespace cutdg::cli
