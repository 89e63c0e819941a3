#include "hetnet/hata.hpp"

#include <cmath>
#include <stdexcept>

namespace hetnet::hata {

HataResult hata_params(const HataParams& p) {
  if (p.environment != "metropolitan-large-city")
    throw std::invalid_argument("hata_params: unsupported environment \"" +
                                p.environment + "\"");
  if (!(p.base_height_m > 0.0) || !(p.user_height_m > 0.0) ||
      !(p.frequency_mhz > 0.0))
    throw std::invalid_argument("hata_params: heights and frequency must be > 0");

  HataResult out;
  if (p.base_height_m < 30.0 || p.base_height_m > 200.0)
    out.warnings.push_back(
        "base height outside the nominal COST231-Hata range [30, 200] m");
  if (p.user_height_m < 1.0 || p.user_height_m > 10.0)
    out.warnings.push_back(
        "user height outside the nominal COST231-Hata range [1, 10] m");
  if (p.frequency_mhz < 1500.0 || p.frequency_mhz > 2000.0)
    out.warnings.push_back(
        "frequency outside the nominal COST231-Hata range [1500, 2000] MHz");

  const double log_hb = std::log10(p.base_height_m);
  out.beta = (44.9 - 6.55 * log_hb) / 10.0;

  const double a_hm =
      3.2 * std::pow(std::log10(11.75 * p.user_height_m), 2.0) - 4.97;
  const double metro_correction = 3.0;
  const double l0_db = 46.3 + 33.9 * std::log10(p.frequency_mhz) -
                       13.82 * log_hb - a_hm + metro_correction;
  out.A = std::pow(10.0, l0_db / 10.0);
  return out;
}

double average_height(const std::vector<double>& lambdas,
                      const std::vector<double>& heights) {
  if (lambdas.size() != heights.size() || lambdas.empty())
    throw std::invalid_argument("average_height: length mismatch");
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > 0.0))
      throw std::invalid_argument("average_height: densities must be > 0");
    num += lambdas[i] * heights[i];
    den += lambdas[i];
  }
  return num / den;
}

}  // namespace hetnet::hata
