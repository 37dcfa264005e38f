#include "clanforge/powerlaw.hpp"

#include <cmath>
#include <string>

#include "clanforge/error.hpp"

namespace clanforge {

FitReport fit_gamma_mle(std::span<const std::uint64_t> degrees, std::uint64_t xmin) {
  if (xmin == 0) fail(ErrorCode::InvalidArgument, "xmin must be a positive degree");
  const double log_xmin = std::log(static_cast<double>(xmin));
  std::size_t n = 0;
  double log_sum = 0.0;
  for (std::uint64_t x : degrees) {
    if (x < xmin) continue;
    ++n;
    log_sum += std::log(static_cast<double>(x)) - log_xmin;
  }
  if (n < 2) {
    fail(ErrorCode::Domain, "power-law fit needs at least two degrees >= xmin (got " +
                                std::to_string(n) + ")");
  }
  if (!(log_sum > 0.0)) {
    fail(ErrorCode::Domain, "power-law fit undefined: every retained degree equals xmin");
  }
  return FitReport{1.0 + static_cast<double>(n) / log_sum, xmin, n};
}

std::vector<double> model_pmf(double gamma, std::span<const std::uint64_t> degrees) {
  if (!(gamma > 1.0)) fail(ErrorCode::InvalidArgument, "model exponent must exceed 1");
  std::vector<double> out;
  out.reserve(degrees.size());
  for (std::uint64_t k : degrees) {
    if (k < 1) fail(ErrorCode::InvalidArgument, "model degree must be >= 1");
    out.push_back(std::pow(static_cast<double>(k), -gamma));
  }
  return out;
}

}  // namespace clanforge
