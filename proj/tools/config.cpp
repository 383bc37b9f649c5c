#include "config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <map>
#include <set>
#include <stdexcept>

namespace cutdg::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <typename T>
T number(std::string_view text, std::string_view what) {
  text = trim(text);
  T v{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string(what) + ": expected a number, got '" +
                                std::string(text) + "'");
  }
  return v;
}

template <typename T>
std::vector<T> list_of(std::string_view text, std::string_view what) {
  std::vector<T> out;
  while (!trim(text).empty()) {
    const auto comma = text.find(',');
    out.push_back(number<T>(text.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

using Tree = boost::property_tree::ptree;

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"run", {"problem", "degree", "cells", "cfl", "t_final", "flux", "scheme",
               "snapshots", "out", "tv_out"}},
      {"cut", {"mode", "alpha", "elements", "region", "seed"}},
      {"limiter", {"mode", "m"}},
      {"stabilization", {"enabled", "gamma_m", "gamma_a", "weights"}},
      {"converge", {"cells"}},
      {"eigen", {"degrees", "alphas", "stabilized", "cells", "cut", "eigenvalues_out"}},
      {"tv", {"steps", "trials", "seed", "init"}},
  };
  return keys;
}

void check_keys(const Tree& tree, const std::string& path) {
  for (const auto& [section, body] : tree) {
    const auto it = known_keys().find(section);
    if (it == known_keys().end()) {
      throw std::invalid_argument(path + ": unknown section [" + section + "]");
    }
    for (const auto& [key, value] : body) {
      if (!it->second.count(key)) {
        throw std::invalid_argument(path + ": unknown key '" + key + "' in [" + section + "]");
      }
    }
  }
}

}  // namespace

LimiterConfig make_limiter(std::string_view mode, double m) {
  if (mode == "none") return NoLimiter{};
  if (mode == "tvb") return TvbLimiter{m};
  if (mode == "modified") return ModifiedCutLimiter{m};
  throw std::invalid_argument("limiter: expected none, tvb or modified, got '" +
                              std::string(mode) + "'");
}

std::string limiter_name(const LimiterConfig& limiter) {
  if (std::holds_alternative<TvbLimiter>(limiter)) return "tvb";
  if (std::holds_alternative<ModifiedCutLimiter>(limiter)) return "modified";
  return "none";
}

double limiter_m(const LimiterConfig& limiter) {
  if (const auto* t = std::get_if<TvbLimiter>(&limiter)) return t->m;
  if (const auto* t = std::get_if<ModifiedCutLimiter>(&limiter)) return t->m;
  return 0.0;
}

std::vector<double> parse_doubles(std::string_view text) {
  return list_of<double>(text, "list");
}

std::vector<std::size_t> parse_sizes(std::string_view text) {
  return list_of<std::size_t>(text, "list");
}

std::vector<int> parse_ints(std::string_view text) { return list_of<int>(text, "list"); }

std::vector<bool> parse_stabilized(std::string_view text) {
  text = trim(text);
  if (text == "on") return {true};
  if (text == "off") return {false};
  if (text == "both") return {false, true};
  throw std::invalid_argument("stabilized: expected on, off or both, got '" +
                              std::string(text) + "'");
}

bool parse_bool(std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "on" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "off" || text == "0" || text == "no") return false;
  throw std::invalid_argument("expected a boolean, got '" + std::string(text) + "'");
}

Options load_config(const std::string& path) {
  Tree tree;
  try {
    boost::property_tree::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw std::invalid_argument(path + ": " + e.message() + " (line " +
                                std::to_string(e.line()) + ")");
  }
  check_keys(tree, path);

  Options o;
  RunConfig& c = o.run;
  auto get = [&](const char* key) { return tree.get_optional<std::string>(key); };

  if (auto v = get("run.problem")) c.problem = parse_problem(trim(*v));
  if (auto v = get("run.degree")) c.degree = number<int>(*v, "run.degree");
  if (auto v = get("run.cells")) c.cells = number<std::size_t>(*v, "run.cells");
  if (auto v = get("run.cfl")) c.cfl = number<double>(*v, "run.cfl");
  if (auto v = get("run.t_final")) c.t_final = number<double>(*v, "run.t_final");
  if (auto v = get("run.flux")) c.flux = parse_numerical_flux(trim(*v));
  if (auto v = get("run.scheme")) c.scheme = parse_time_scheme(trim(*v));
  if (auto v = get("run.snapshots")) c.snapshot_times = list_of<double>(*v, "run.snapshots");
  if (auto v = get("run.out")) c.out = trim(*v);
  if (auto v = get("run.tv_out")) o.tv_out = trim(*v);

  if (auto v = get("cut.mode")) c.cut.mode = parse_cut_mode(trim(*v));
  if (auto v = get("cut.alpha")) c.cut.alpha = number<double>(*v, "cut.alpha");
  if (auto v = get("cut.elements")) c.cut.elements = list_of<std::size_t>(*v, "cut.elements");
  if (auto v = get("cut.region")) {
    const auto r = list_of<double>(*v, "cut.region");
    if (r.size() != 2) throw std::invalid_argument("cut.region: expected two numbers a, b");
    c.cut.region = Interval{r[0], r[1]};
  }
  if (auto v = get("cut.seed")) c.cut.seed = number<std::uint64_t>(*v, "cut.seed");

  {
    const std::string mode = tree.get<std::string>("limiter.mode", "none");
    const double m = number<double>(tree.get<std::string>("limiter.m", "0"), "limiter.m");
    c.limiter = make_limiter(trim(mode), m);
  }

  auto& s = c.stabilization;
  if (auto v = get("stabilization.enabled")) s.enabled = parse_bool(*v);
  if (auto v = get("stabilization.gamma_m")) s.gamma_m = number<double>(*v, "stabilization.gamma_m");
  if (auto v = get("stabilization.gamma_a")) s.gamma_a = number<double>(*v, "stabilization.gamma_a");
  if (auto v = get("stabilization.weights")) s.weights = parse_penalty_weights(trim(*v));

  if (auto v = get("converge.cells")) c.converge_cells = list_of<std::size_t>(*v, "converge.cells");

  auto& e = o.eigen;
  if (auto v = get("eigen.degrees")) e.degrees = list_of<int>(*v, "eigen.degrees");
  if (auto v = get("eigen.alphas")) e.alphas = list_of<double>(*v, "eigen.alphas");
  if (auto v = get("eigen.stabilized")) e.stabilized = parse_stabilized(*v);
  if (auto v = get("eigen.cells")) e.cells = number<std::size_t>(*v, "eigen.cells");
  if (auto v = get("eigen.cut")) e.cut = parse_cut_mode(trim(*v));
  if (auto v = get("eigen.eigenvalues_out")) e.eigenvalues_out = trim(*v);

  auto& t = o.tv;
  if (auto v = get("tv.steps")) t.steps = number<std::size_t>(*v, "tv.steps");
  if (auto v = get("tv.trials")) t.trials = number<std::size_t>(*v, "tv.trials");
  if (auto v = get("tv.seed")) t.seed = number<std::uint64_t>(*v, "tv.seed");
  if (auto v = get("tv.init")) {
    const auto init = trim(*v);
    if (init != "problem" && init != "random") {
      throw std::invalid_argument("tv.init: expected problem or random, got '" +
                                  std::string(init) + "'");
    }
    t.random_init = init == "random";
  }
  return o;
}

}  // namespace cutdg::cli
