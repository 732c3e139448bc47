#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace pairlab {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;

// Two-qubit polarization basis, idler (880 nm) slot first:
// index 0 = |HH>, 1 = |HV>, 2 = |VH>, 3 = |VV>, with H = (1,0)^T, V = (0,1)^T.
inline constexpr int kHH = 0, kHV = 1, kVH = 2, kVV = 3;

/// Two-qubit polarization density matrix. Physical states are Hermitian,
/// unit trace, and positive semidefinite (eigenvalues >= -1e-10 tolerated
/// as rounding).
struct DensityMatrix {
  Mat4 m = Mat4::Zero();

  double hermiticity_defect() const;    // max |rho - rho^dag| element
  double trace_defect() const;          // |Tr rho - 1|
  double min_eigenvalue() const;
  bool is_physical(double herm_tol = 1e-12, double trace_tol = 1e-12,
                   double eig_floor = -1e-10) const;
};

/// Imperfection-channel parameters: Gaussian dephasing of the |HV><VH|
/// coherence, per-arm polarization rotation, and white-noise admixture.
struct NoiseParams {
  double phase_sigma_rad = 0.0;
  double rot_signal_rad = 0.0;
  double rot_idler_rad = 0.0;
  double white_noise_p = 0.0;

  void validate() const;  // throws DataError on out-of-domain values
};

enum class Port { Transmit, Reflect };

/// One polarization analyzer: the beam passes HWP(hwp), then QWP(qwp),
/// then a PBS; Transmit keeps the H output port, Reflect the V port.
struct AnalyzerSetting {
  double hwp_deg = 0.0;
  double qwp_deg = 0.0;
  Port port = Port::Transmit;
};

Port port_from_string(const std::string& s);  // "transmit" | "reflect"
std::string to_string(Port p);

/// The target Bell state |psi> = (|HV> + |VH>)/sqrt(2) as a ket.
Vec4 bell_psi_ket();

/// |psi><psi| for the target Bell state.
DensityMatrix bell_psi();

/// Applies, in order: local rotation rot_idler (x) rot_signal, Gaussian
/// dephasing that damps the |HV><VH| coherence by exp(-sigma^2/2), and
/// white-noise mixing rho <- (1-p) rho + p I/4.
DensityMatrix apply_noise(const DensityMatrix& rho, const NoiseParams& n);

/// <psi| rho |psi>, clamped to [0,1]. Target must be normalized.
double fidelity(const DensityMatrix& rho, const Vec4& target);

/// Jones matrices, fast axis measured counterclockwise from horizontal,
/// global phase dropped.
Mat2 hwp_jones(double theta_deg);
Mat2 qwp_jones(double theta_deg);

/// Rank-1 projector onto the state selected by the analyzer. With U the
/// optical transfer matrix QWP(qwp) * HWP(hwp) (beam order HWP then QWP),
/// the projector is U^dag |H><H| U for Transmit and U^dag |V><V| U for
/// Reflect.
Mat2 analyzer_projector(double hwp_deg, double qwp_deg, Port port);
Mat2 analyzer_projector(const AnalyzerSetting& s);

/// Kronecker product, idler factor first.
Mat4 kron(const Mat2& idler, const Mat2& signal);

/// Tr(rho . Pi_idler (x) Pi_signal).
double coincidence_probability(const DensityMatrix& rho, const AnalyzerSetting& idler,
                               const AnalyzerSetting& signal);

}  // namespace pairlab
