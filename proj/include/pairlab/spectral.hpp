#pragma once

#include <complex>
#include <vector>

namespace pairlab {

/// One conjoined-cavity arm: a comb of Lorentzian modes spaced by the
/// cavity FSR around the arm center frequency.
struct CavityArmSpec {
  double center_frequency_hz = 0.0;
  double fsr_hz = 0.0;
  double mode_linewidth_hz = 0.0;  // FWHM of each Lorentzian mode
  int n_modes = 1;                 // odd count, centered on center_frequency_hz

  void validate() const;
};

/// Fabry-Perot filter with periodic Airy transmission. detuning_hz is the
/// offset of the nearest transmission peak from the arm center frequency.
struct EtalonSpec {
  double fsr_hz = 0.0;
  double fwhm_hz = 0.0;
  double peak_transmission = 1.0;
  double detuning_hz = 0.0;

  void validate() const;
};

/// sinc^2 phase-matching envelope (full width at half maximum).
struct PhaseMatchEnvelope {
  double fwhm_hz = 0.0;
  double center_hz = 0.0;

  void validate() const;
};

struct SpectralMode {
  double frequency_hz = 0.0;       // absolute
  double linewidth_fwhm_hz = 0.0;  // Lorentzian FWHM
  std::complex<double> amplitude;  // dimensionless, sum |a|^2 = 1 over the comb
};

/// Spectral mode comb of one output arm. center_hz is kept alongside the
/// modes so downstream code can work in baseband (frequencies relative to
/// the arm center).
struct ModeComb {
  double center_hz = 0.0;
  std::vector<SpectralMode> modes;

  void validate() const;  // normalization within 1e-12, strictly increasing frequencies
};

/// sinc^2 envelope value in [0,1], equal to 1/2 at |f - center| = fwhm/2.
double sinc_sq_envelope(const PhaseMatchEnvelope& env, double f_hz);

/// n_modes modes at center +- k*fsr with |a|^2 proportional to the
/// phase-matching envelope, normalized; amplitudes real nonnegative.
ModeComb build_mode_comb(const CavityArmSpec& arm, const PhaseMatchEnvelope& env);

/// Airy transmission at frequency offset f_offset_hz from the arm center.
/// Peaks (value peak_transmission) sit at detuning_hz + k*fsr_hz; the
/// half-maximum width of each peak is exactly fwhm_hz.
double etalon_transmission(const EtalonSpec& e, double f_offset_hz);

struct EtalonResult {
  ModeComb comb;               // renormalized filtered comb
  double transmitted_weight;   // total weight before renormalization, in (0,1]
};

/// Multiplies each amplitude by sqrt(T(f)) and renormalizes; reports the
/// transmitted weight for rate bookkeeping.
EtalonResult apply_etalon(const ModeComb& comb, const EtalonSpec& e);

/// Two-photon correlation density at tau = t_signal - t_idler (seconds).
/// tau >= 0 decays with the signal comb, tau < 0 with the idler comb; mode
/// frequencies enter relative to the arm center. Normalized to unit
/// two-sided integral.
double g2_analytic(const ModeComb& signal, const ModeComb& idler, double tau_s);

/// One-sided integral of the unnormalized comb intensity
/// |sum_m a_m exp(-(i 2 pi f_m + pi Gamma_m) tau)|^2 over tau in [0, inf).
double g2_side_integral(const ModeComb& comb);

}  // namespace pairlab
