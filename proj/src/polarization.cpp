#include "pairlab/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pairlab/errors.hpp"

namespace pairlab {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};

double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }
}  // namespace

double DensityMatrix::hermiticity_defect() const {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::trace_defect() const { return std::abs(m.trace() - 1.0); }

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Mat4> es(0.5 * (m + m.adjoint()));
  return es.eigenvalues().minCoeff();
}

bool DensityMatrix::is_physical(double herm_tol, double trace_tol, double eig_floor) const {
  return hermiticity_defect() <= herm_tol && trace_defect() <= trace_tol &&
         min_eigenvalue() >= eig_floor;
}

void NoiseParams::validate() const {
  if (!(phase_sigma_rad >= 0.0))
    throw DataError("NoiseParams: phase_sigma_rad must be >= 0");
  if (!(white_noise_p >= 0.0 && white_noise_p <= 1.0))
    throw DataError("NoiseParams: white_noise_p must be in [0,1]");
  if (!std::isfinite(rot_signal_rad) || !std::isfinite(rot_idler_rad))
    throw DataError("NoiseParams: rotation angles must be finite");
}

Port port_from_string(const std::string& s) {
  if (s == "transmit") return Port::Transmit;
  if (s == "reflect") return Port::Reflect;
  throw ConfigError("invalid port '" + s + "' (expected transmit|reflect)");
}

std::string to_string(Port p) { return p == Port::Transmit ? "transmit" : "reflect"; }

Vec4 bell_psi_ket() {
  Vec4 psi = Vec4::Zero();
  psi(kHV) = 1.0 / std::numbers::sqrt2;
  psi(kVH) = 1.0 / std::numbers::sqrt2;
  return psi;
}

DensityMatrix bell_psi() {
  Vec4 psi = bell_psi_ket();
  return DensityMatrix{psi * psi.adjoint()};
}

DensityMatrix apply_noise(const DensityMatrix& rho, const NoiseParams& n) {
  n.validate();

  // Local polarization-plane rotations, idler (x) signal.
  auto rot = [](double theta) {
    Mat2 r;
    r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return r;
  };
  Mat4 u = kron(rot(n.rot_idler_rad), rot(n.rot_signal_rad));
  Mat4 out = u * rho.m * u.adjoint();

  // Gaussian diffusion of the relative phase between the pair-generation
  // paths: average of diag(1,1,e^{i phi},1) over phi ~ N(0, sigma^2).
  // Damps the |HV><VH| coherence (and every other coherence against |VH>)
  // by exp(-sigma^2/2); a mixture of unitaries, so completely positive.
  double damp = std::exp(-0.5 * n.phase_sigma_rad * n.phase_sigma_rad);
  for (int k = 0; k < 4; ++k) {
    if (k == kVH) continue;
    out(k, kVH) *= damp;
    out(kVH, k) *= damp;
  }

  out = (1.0 - n.white_noise_p) * out + (n.white_noise_p / 4.0) * Mat4::Identity();

  DensityMatrix result{out};
  if (result.min_eigenvalue() < -1e-10)
    throw std::logic_error("apply_noise produced a non-PSD state beyond rounding tolerance");
  return result;
}

double fidelity(const DensityMatrix& rho, const Vec4& target) {
  if (std::abs(target.norm() - 1.0) > 1e-9)
    throw DataError("fidelity: target state vector must be normalized");
  double f = std::real((target.adjoint() * rho.m * target)(0, 0));
  return std::clamp(f, 0.0, 1.0);
}

Mat2 hwp_jones(double theta_deg) {
  double t = deg2rad(theta_deg);
  double c = std::cos(2 * t), s = std::sin(2 * t);
  Mat2 m;
  m << c, s, s, -c;
  return m;
}

Mat2 qwp_jones(double theta_deg) {
  double t = deg2rad(theta_deg);
  double c = std::cos(t), s = std::sin(t);
  Mat2 m;
  m << c * c + kI * s * s, (1.0 - kI) * s * c, (1.0 - kI) * s * c, s * s + kI * c * c;
  return m;
}

Mat2 analyzer_projector(double hwp_deg, double qwp_deg, Port port) {
  Mat2 u = qwp_jones(qwp_deg) * hwp_jones(hwp_deg);
  Eigen::Vector2cd pbs = port == Port::Transmit ? Eigen::Vector2cd(1, 0) : Eigen::Vector2cd(0, 1);
  Eigen::Vector2cd v = u.adjoint() * pbs;
  return v * v.adjoint();
}

Mat2 analyzer_projector(const AnalyzerSetting& s) {
  return analyzer_projector(s.hwp_deg, s.qwp_deg, s.port);
}

Mat4 kron(const Mat2& idler, const Mat2& signal) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = idler(i, j) * signal;
  return out;
}

double coincidence_probability(const DensityMatrix& rho, const AnalyzerSetting& idler,
                               const AnalyzerSetting& signal) {
  Mat4 proj = kron(analyzer_projector(idler), analyzer_projector(signal));
  double p = std::real((rho.m * proj).trace());
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace pairlab
