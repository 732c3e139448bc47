#include "pairlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pairlab/errors.hpp"

namespace pairlab {

namespace {

// Root of sinc^2(x) = 1/2, so that 2*kSincHalfMax/fwhm maps the envelope
// half-maximum to |f - center| = fwhm/2.
constexpr double kSincHalfMax = 1.3915573782515101;

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

std::complex<double> mode_phasor(const SpectralMode& mode, double center_hz, double tau) {
  double f = mode.frequency_hz - center_hz;
  std::complex<double> rate{-std::numbers::pi * mode.linewidth_fwhm_hz,
                            -2.0 * std::numbers::pi * f};
  return mode.amplitude * std::exp(rate * tau);
}

}  // namespace

void CavityArmSpec::validate() const {
  if (!(mode_linewidth_hz > 0.0) || !(fsr_hz > mode_linewidth_hz))
    throw ConfigError("CavityArmSpec: requires fsr > mode_linewidth > 0");
  if (n_modes < 1 || n_modes % 2 == 0)
    throw ConfigError("CavityArmSpec: n_modes must be odd and >= 1");
  if (!std::isfinite(center_frequency_hz))
    throw ConfigError("CavityArmSpec: center frequency must be finite");
}

void EtalonSpec::validate() const {
  if (!(fwhm_hz > 0.0) || !(fsr_hz > fwhm_hz))
    throw ConfigError("EtalonSpec: requires fsr > fwhm > 0");
  if (!(peak_transmission > 0.0 && peak_transmission <= 1.0))
    throw ConfigError("EtalonSpec: peak_transmission must be in (0,1]");
  if (!std::isfinite(detuning_hz)) throw ConfigError("EtalonSpec: detuning must be finite");
}

void PhaseMatchEnvelope::validate() const {
  if (!(fwhm_hz > 0.0)) throw ConfigError("PhaseMatchEnvelope: fwhm must be > 0");
}

void ModeComb::validate() const {
  if (modes.empty()) throw DataError("ModeComb: no modes");
  double w = 0.0;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (!(modes[i].linewidth_fwhm_hz > 0.0))
      throw DataError("ModeComb: mode linewidth must be > 0");
    if (i > 0 && !(modes[i].frequency_hz > modes[i - 1].frequency_hz))
      throw DataError("ModeComb: mode frequencies must be strictly increasing");
    w += std::norm(modes[i].amplitude);
  }
  if (std::abs(w - 1.0) > 1e-12) throw DataError("ModeComb: weights not normalized");
}

double sinc_sq_envelope(const PhaseMatchEnvelope& env, double f_hz) {
  double x = 2.0 * kSincHalfMax * (f_hz - env.center_hz) / env.fwhm_hz;
  double s = sinc(x);
  return s * s;
}

ModeComb build_mode_comb(const CavityArmSpec& arm, const PhaseMatchEnvelope& env) {
  arm.validate();
  env.validate();

  ModeComb comb;
  comb.center_hz = arm.center_frequency_hz;
  comb.modes.reserve(arm.n_modes);
  int half = (arm.n_modes - 1) / 2;
  double total = 0.0;
  for (int k = -half; k <= half; ++k) {
    double f = arm.center_frequency_hz + k * arm.fsr_hz;
    double w = sinc_sq_envelope(env, f);
    comb.modes.push_back({f, arm.mode_linewidth_hz, std::sqrt(w)});
    total += w;
  }
  double inv = 1.0 / std::sqrt(total);
  for (auto& m : comb.modes) m.amplitude *= inv;
  return comb;
}

double etalon_transmission(const EtalonSpec& e, double f_offset_hz) {
  e.validate();
  // Coefficient chosen so that fwhm_hz is exactly the half-maximum width;
  // it equals (2F/pi)^2 with F = fsr/fwhm in the high-finesse limit.
  double half_sine = std::sin(std::numbers::pi * e.fwhm_hz / (2.0 * e.fsr_hz));
  double coef = 1.0 / (half_sine * half_sine);
  double s = std::sin(std::numbers::pi * (f_offset_hz - e.detuning_hz) / e.fsr_hz);
  return e.peak_transmission / (1.0 + coef * s * s);
}

EtalonResult apply_etalon(const ModeComb& comb, const EtalonSpec& e) {
  comb.validate();
  e.validate();
  EtalonResult out{comb, 0.0};
  for (auto& m : out.comb.modes) {
    double t = etalon_transmission(e, m.frequency_hz - comb.center_hz);
    m.amplitude *= std::sqrt(t);
    out.transmitted_weight += std::norm(m.amplitude);
  }
  double inv = 1.0 / std::sqrt(out.transmitted_weight);
  for (auto& m : out.comb.modes) m.amplitude *= inv;
  return out;
}

double g2_side_integral(const ModeComb& comb) {
  // integral_0^inf |sum_m a_m e^{-(i 2pi f_m + pi G_m) tau}|^2 dtau
  //   = sum_{m,n} a_m conj(a_n) / (pi (G_m + G_n) + i 2pi (f_m - f_n))
  std::complex<double> acc{0.0, 0.0};
  for (const auto& m : comb.modes) {
    for (const auto& n : comb.modes) {
      std::complex<double> denom{
          std::numbers::pi * (m.linewidth_fwhm_hz + n.linewidth_fwhm_hz),
          2.0 * std::numbers::pi * (m.frequency_hz - n.frequency_hz)};
      acc += m.amplitude * std::conj(n.amplitude) / denom;
    }
  }
  return acc.real();
}

double g2_analytic(const ModeComb& signal, const ModeComb& idler, double tau_s) {
  double norm = g2_side_integral(signal) + g2_side_integral(idler);
  const ModeComb& side = tau_s >= 0.0 ? signal : idler;
  double t = std::abs(tau_s);
  std::complex<double> amp{0.0, 0.0};
  for (const auto& m : side.modes) amp += mode_phasor(m, side.center_hz, t);
  return std::norm(amp) / norm;
}

}  // namespace pairlab
