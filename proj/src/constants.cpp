#include "rpg/constants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rpg/errors.hpp"

namespace rpg {
namespace {

std::size_t ceil_count(double x) {
  // Guard against 0.3 * 10 = 3.0000000000000004 style round-up.
  return static_cast<std::size_t>(std::ceil(x - 1e-9));
}

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw InputError("delta must lie in (0, 0.5), got " + std::to_string(delta));
  }
}

}  // namespace

double theta_of(double delta) {
  check_delta(delta);
  return -std::log(delta);
}

std::size_t cycle_count_t(std::size_t n, double delta) {
  const double theta = theta_of(delta);
  const double nn = static_cast<double>(n);
  const double t = std::min(delta * nn / 260.0, nn / (1000.0 + 200.0 * theta));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(t + 1e-9)));
}

std::size_t packing_edge_budget(std::size_t n, double delta, std::size_t t) {
  return ceil_count((435.0 + 75.0 * theta_of(delta)) * static_cast<double>(t * n));
}

std::size_t packing_color_budget(std::size_t n, double delta) {
  return ceil_count((120.0 + 20.0 * theta_of(delta)) * static_cast<double>(n));
}

std::size_t chunk_size(std::size_t n, double delta) {
  return ceil_count((435.0 + 75.0 * theta_of(delta)) * static_cast<double>(n));
}

std::size_t booster_budget(std::size_t n, double delta) {
  return ceil_count((81.0 + 15.0 * theta_of(delta)) * static_cast<double>(n));
}

std::size_t q1_size(std::size_t n, double delta) {
  return ceil_count((45.0 + 15.0 * theta_of(delta)) * static_cast<double>(n));
}

std::size_t q2_size(std::size_t n) { return 36 * n; }

double q1_fraction(double delta) {
  const double theta = theta_of(delta);
  return (45.0 + 15.0 * theta) / (81.0 + 15.0 * theta);
}

std::size_t three_color_edge_budget(std::size_t n, double delta) {
  check_delta(delta);
  return ceil_count(60.0 / (delta * delta) * std::log(static_cast<double>(n)));
}

PerturbConfig PerturbConfig::make(std::size_t n, double delta, std::size_t m, Color r, Seed seed,
                                  std::size_t complement) {
  PerturbConfig cfg;
  cfg.m = std::min(m, complement);
  cfg.r = r;
  cfg.seed = seed;
  cfg.delta = delta;
  cfg.theta = theta_of(delta);
  cfg.t = cycle_count_t(n, delta);
  return cfg;
}

}  // namespace rpg
