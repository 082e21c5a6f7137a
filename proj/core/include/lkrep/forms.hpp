#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lkrep/laurent.hpp"
#include "lkrep/reps.hpp"

namespace lkrep {

/// Candidate unitarizing Gram matrix at fixed unit-modulus (q, t).
///
/// gram is Hermitian, scaled to spectral norm 1 with real trace >= 0. The
/// invariance residual is measured and stored, never assumed zero.
struct HermitianForm {
  int n = 0;
  Complex q;
  Complex t;
  Eigen::MatrixXcd gram;
  double residual = 0.0;   // max_i ||A_i^* H A_i - H||_F
  int nullspace_dim = 0;   // singular values <= 1e-8 * largest
};

/// Solves A_i^* H A_i = H for Hermitian H, A_i = rho_n(sigma_i), as the least
/// right singular vector of the stacked real linear system. Throws
/// DomainError off the unit torus and ComputationError when the best
/// candidate has residual above 1e-6.
HermitianForm invariant_form(int n, Complex q, Complex t);

/// Same solver for an arbitrary list of square generator matrices; the
/// returned form has n = 0, q = t = 0.
HermitianForm invariant_form(std::span<const Eigen::MatrixXcd> generators);

/// max_i ||A_i^* H A_i - H||_F
double invariance_residual(const Eigen::MatrixXcd& gram,
                           std::span<const Eigen::MatrixXcd> generators);

struct Definiteness {
  bool definite = false;
  double min_eigenvalue = 0.0;
};

/// Positive definiteness after normalizing to spectral norm 1 and flipping
/// the sign when the trace is negative.
Definiteness is_definite(const HermitianForm& h);
Definiteness is_definite(const Eigen::MatrixXcd& gram);

struct ScanRow {
  int n = 0;
  double theta_t = 0.0;
  double ratio = 0.0;
  Complex q;
  Complex t;
  double residual = 0.0;
  int nullspace_dim = 0;
  bool definite = false;
  double min_eig = 0.0;
};

/// For every (theta_t, ratio): t = -e^{i theta_t}, q = e^{i ratio theta_t}.
/// Rows come back in grid order (theta_t outer, ratio inner).
std::vector<ScanRow> definiteness_scan(int n, std::span<const double> theta_t,
                                       std::span<const double> ratio);

/// Columns: n, theta_t, ratio, q_re, q_im, t_re, t_im, residual,
/// nullspace_dim, definite, min_eig.
std::string scan_csv(std::span<const ScanRow> rows);

/// H^{1/2} M H^{-1/2} with the positive square root. Throws DomainError for
/// an indefinite form.
Eigen::MatrixXcd unitarize(const Eigen::MatrixXcd& m, const HermitianForm& h);
NumericRep unitarize(const NumericRep& m, const HermitianForm& h);

/// The point t = -e^{i theta_t}, q = e^{i ratio theta_t}.
inline Complex scan_q(double theta_t, double ratio) { return std::polar(1.0, ratio * theta_t); }
inline Complex scan_t(double theta_t) { return -std::polar(1.0, theta_t); }

}  // namespace lkrep
