#pragma once

#include <string>
#include <vector>

namespace hetnet::hata {

// COST231-Hata inputs, large-city metropolitan branch. Distances in
// the resulting power law ell(d) = A d^beta are in kilometres.
struct HataParams {
  double base_height_m = 30.0;
  double user_height_m = 1.0;
  double frequency_mhz = 1800.0;
  std::string environment = "metropolitan-large-city";
};

struct HataResult {
  double beta = 0.0;
  double A = 0.0;
  std::vector<std::string> warnings;
};

// beta = (44.9 - 6.55 log10 h_b) / 10;
// A = 10^{L0/10}, L0 = 46.3 + 33.9 log10 f - 13.82 log10 h_b - a(h_m) + 3,
// a(h_m) = 3.2 (log10(11.75 h_m))^2 - 4.97.
// Out-of-range inputs produce warnings, not errors; an unsupported
// environment throws.
HataResult hata_params(const HataParams& p);

// Density-weighted mean antenna height.
double average_height(const std::vector<double>& lambdas,
                      const std::vector<double>& heights);

}  // namespace hetnet::hata
