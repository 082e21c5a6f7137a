#include "lkrep/forms.hpp"

#include <cmath>
#include <cstdio>

#include <Eigen/SVD>

#include "lkrep/errors.hpp"
#include "lkrep/tolerances.hpp"
#include "parallel.hpp"

namespace lkrep {

namespace {

void require_unit(Complex z, const char* name) {
  if (std::abs(std::abs(z) - 1.0) > tol::unit_modulus) {
    throw DomainError(std::string("invariant form requires |") + name + "| = 1");
  }
}

// Real basis of p x p Hermitian matrices: diagonal units, then for i < j
// the symmetric and the antisymmetric-imaginary pair.
Eigen::MatrixXcd hermitian_from_coords(const Eigen::VectorXd& x, int p) {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(p, p);
  Eigen::Index k = 0;
  for (int i = 0; i < p; ++i) h(i, i) = x(k++);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      const double re = x(k++);
      const double im = x(k++);
      h(i, j) = Complex(re, im);
      h(j, i) = Complex(re, -im);
    }
  }
  return h;
}

// Candidate solution without the residual cutoff.
HermitianForm solve_candidate(std::span<const Eigen::MatrixXcd> gens) {
  if (gens.empty()) throw DomainError("invariant form needs at least one generator");
  const int p = static_cast<int>(gens.front().rows());
  const Eigen::Index unknowns = static_cast<Eigen::Index>(p) * p;
  const Eigen::Index block = 2 * static_cast<Eigen::Index>(p) * p;
  Eigen::MatrixXd system(block * static_cast<Eigen::Index>(gens.size()), unknowns);

  // Column for basis element E is the stacked (Re, Im) of A^* E A - E.
  auto fill = [&](Eigen::Index col, int i, int j, Complex weight_ij, Complex weight_ji) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto& a = gens[g];
      Eigen::MatrixXcd image = Eigen::MatrixXcd::Zero(p, p);
      // A^* (w e_i e_j^T) A = w * conj(A.row(i))^T A.row(j)
      image += weight_ij * a.row(i).adjoint() * a.row(j);
      if (i != j) image += weight_ji * a.row(j).adjoint() * a.row(i);
      image(i, j) -= weight_ij;
      if (i != j) image(j, i) -= weight_ji;
      const Eigen::Index offset = block * static_cast<Eigen::Index>(g);
      for (int r = 0; r < p; ++r) {
        for (int c = 0; c < p; ++c) {
          const Eigen::Index idx = static_cast<Eigen::Index>(r) * p + c;
          system(offset + idx, col) = image(r, c).real();
          system(offset + static_cast<Eigen::Index>(p) * p + idx, col) = image(r, c).imag();
        }
      }
    }
  };
  Eigen::Index col = 0;
  for (int i = 0; i < p; ++i) fill(col++, i, i, 1.0, 0.0);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      fill(col++, i, j, 1.0, 1.0);
      fill(col++, i, j, Complex(0.0, 1.0), Complex(0.0, -1.0));
    }
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  // Generators are O(1) on the unit torus; the floor keeps an exactly zero
  // system (n = 2) from being judged against round-off.
  double scale = 1.0;
  for (const auto& a : gens) scale = std::max(scale, a.squaredNorm());
  const double largest = std::max(s.size() > 0 ? s(0) : 0.0, scale);
  HermitianForm form;
  form.nullspace_dim = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) <= tol::nullspace_relative * largest) ++form.nullspace_dim;
  }
  Eigen::MatrixXcd h = hermitian_from_coords(svd.matrixV().col(unknowns - 1), p);
  if (h.trace().real() < 0.0) h = -h;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h, Eigen::EigenvaluesOnly);
  const double norm = eig.eigenvalues().cwiseAbs().maxCoeff();
  if (norm > 0.0) h /= norm;
  form.gram = h;
  form.residual = invariance_residual(h, gens);
  return form;
}

std::vector<Eigen::MatrixXcd> lk_generators(int n, Complex q, Complex t) {
  NumericGenerators g(RepKind::lk, n, q, t);
  std::vector<Eigen::MatrixXcd> out;
  for (int i = 1; i <= n - 1; ++i) out.push_back(g.gen(i));
  return out;
}

}  // namespace

double invariance_residual(const Eigen::MatrixXcd& gram, std::span<const Eigen::MatrixXcd> generators) {
  double worst = 0.0;
  for (const auto& a : generators) {
    worst = std::max(worst, (a.adjoint() * gram * a - gram).norm());
  }
  return worst;
}

HermitianForm invariant_form(std::span<const Eigen::MatrixXcd> generators) {
  HermitianForm form = solve_candidate(generators);
  if (form.residual > tol::form_residual_max) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "no invariant form found (residual %.3e)", form.residual);
    throw ComputationError(buf);
  }
  return form;
}

HermitianForm invariant_form(int n, Complex q, Complex t) {
  require_unit(q, "q");
  require_unit(t, "t");
  const auto gens = lk_generators(n, q, t);
  HermitianForm form = invariant_form(gens);
  form.n = n;
  form.q = q;
  form.t = t;
  return form;
}

Definiteness is_definite(const Eigen::MatrixXcd& gram) {
  Eigen::MatrixXcd h = 0.5 * (gram + gram.adjoint());
  if (h.trace().real() < 0.0) h = -h;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h, Eigen::EigenvaluesOnly);
  const auto& values = eig.eigenvalues();
  const double norm = values.cwiseAbs().maxCoeff();
  if (norm == 0.0) return {false, 0.0};
  const double min_eig = values.minCoeff() / norm;
  return {min_eig > tol::definite_min_eig, min_eig};
}

Definiteness is_definite(const HermitianForm& h) { return is_definite(h.gram); }

std::vector<ScanRow> definiteness_scan(int n, std::span<const double> theta_t, std::span<const double> ratio) {
  for (double th : theta_t) {
    if (!(th > 0.0 && th < M_PI)) throw DomainError("theta_t must lie in (0, pi)");
  }
  for (double r : ratio) {
    if (!(r > 0.0)) throw DomainError("ratio must be positive");
  }
  std::vector<ScanRow> rows(theta_t.size() * ratio.size());
  detail::parallel_for(rows.size(), [&](std::size_t idx) {
    const double th = theta_t[idx / ratio.size()];
    const double r = ratio[idx % ratio.size()];
    ScanRow row;
    row.n = n;
    row.theta_t = th;
    row.ratio = r;
    row.q = scan_q(th, r);
    row.t = scan_t(th);
    const auto gens = lk_generators(n, row.q, row.t);
    const HermitianForm form = solve_candidate(gens);
    row.residual = form.residual;
    row.nullspace_dim = form.nullspace_dim;
    const Definiteness d = is_definite(form.gram);
    row.min_eig = d.min_eigenvalue;
    row.definite = d.definite && form.residual <= tol::form_residual_max;
    rows[idx] = row;
  });
  return rows;
}

std::string scan_csv(std::span<const ScanRow> rows) {
  std::string out = "n,theta_t,ratio,q_re,q_im,t_re,t_im,residual,nullspace_dim,definite,min_eig\n";
  char buf[512];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.10g,%.10g,%.12g,%.12g,%.12g,%.12g,%.3e,%d,%s,%.8g\n", r.n,
                  r.theta_t, r.ratio, r.q.real(), r.q.imag(), r.t.real(), r.t.imag(), r.residual,
                  r.nullspace_dim, r.definite ? "true" : "false", r.min_eig);
    out += buf;
  }
  return out;
}

Eigen::MatrixXcd unitarize(const Eigen::MatrixXcd& m, const HermitianForm& h) {
  if (!is_definite(h).definite) throw DomainError("cannot unitarize with an indefinite form");
  Eigen::MatrixXcd gram = 0.5 * (h.gram + h.gram.adjoint());
  if (gram.trace().real() < 0.0) gram = -gram;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram);
  const Eigen::VectorXd roots = eig.eigenvalues().cwiseSqrt();
  const Eigen::MatrixXcd& v = eig.eigenvectors();
  const Eigen::MatrixXcd sqrt_h = v * roots.cast<Complex>().asDiagonal() * v.adjoint();
  const Eigen::MatrixXcd inv_sqrt_h = v * roots.cwiseInverse().cast<Complex>().asDiagonal() * v.adjoint();
  return sqrt_h * m * inv_sqrt_h;
}

NumericRep unitarize(const NumericRep& m, const HermitianForm& h) {
  return {unitarize(m.entries, h), m.basis};
}

}  // namespace lkrep
