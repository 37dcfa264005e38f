#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace clanforge {

struct FitReport {
  double gamma = 0.0;
  std::uint64_t xmin = 1;
  std::size_t sample_count = 0;  // values >= xmin
};

/// Continuous maximum-likelihood exponent
///   gamma = 1 + n / sum(ln(x_i / xmin))
/// over the values x_i >= xmin, applied to integer degrees as-is. Values
/// below xmin (including zero degrees) are ignored.
///
/// Throws Domain with fewer than two retained values or when every retained
/// value equals xmin; InvalidArgument for xmin == 0.
FitReport fit_gamma_mle(std::span<const std::uint64_t> degrees, std::uint64_t xmin = 1);

/// Unnormalised model curve k^-gamma for each requested degree.
std::vector<double> model_pmf(double gamma, std::span<const std::uint64_t> degrees);

}  // namespace clanforge
