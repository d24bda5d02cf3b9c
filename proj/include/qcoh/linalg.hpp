#pragma once

// Complex Hermitian linear algebra for density-matrix numerics:
// validated states, deterministic eigendecomposition, fractional matrix
// powers and Schatten norms.  Everything is dense, double precision,
// desk scale (dim <~ 64).

#include <iosfwd>
#include <string>

#include <Eigen/Dense>

#include "qcoh/errors.hpp"

namespace qcoh {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Eigenvalues at or below this are treated as exactly 0 before fractional
// powers (rho^alpha for alpha < 1 amplifies numerical negatives).
inline constexpr double kEigenZeroClamp = 1e-12;

// Hermiticity tolerance used by operations whose precondition is
// "Hermitian within 1e-9".
inline constexpr double kHermitianTol = 1e-9;

// max_ij |m(i,j) - conj(m(j,i))|
double hermiticity_defect(const ComplexMatrix& m);

// Eigendecomposition of a Hermitian matrix.
//
// Invariants (tested): eigenvalues descending; columns orthonormal,
// ||V*V - I||_F <= 1e-10 dim; reconstruction ||sum_j l_j v_j v_j* - A||_F
// <= 1e-10 dim.  Output is deterministic for identical input: each
// eigenvector's first component above 1e-8 in magnitude is rotated to the
// positive real axis, and exactly equal eigenvalues are ordered by
// lexicographic comparison of the phase-fixed columns.
struct Spectrum {
    RealVector eigenvalues;      // descending
    ComplexMatrix eigenvectors;  // column j pairs with eigenvalues[j]

    // True when the eigenpairs are exact data (diagonal matrices,
    // probability vectors) rather than solver output.  Exact spectra skip
    // the noise clamp: a 1e-16 eigenvalue of a dephased state is a genuine
    // probability whose fractional power matters, while the same magnitude
    // out of the eigensolver is roundoff on a true zero.
    bool exact = false;

    int dim() const { return static_cast<int>(eigenvalues.size()); }

    // l below the noise floor mapped to exactly 0 (no-op for exact spectra)
    double clamped(Eigen::Index j) const {
        const double l = eigenvalues[j];
        if (exact) return l > 0.0 ? l : 0.0;
        return l > kEigenZeroClamp ? l : 0.0;
    }

    // sum_j f(clamped l_j) v_j v_j*
    template <typename F>
    ComplexMatrix apply(F&& f) const {
        RealVector mapped(eigenvalues.size());
        for (Eigen::Index j = 0; j < eigenvalues.size(); ++j) mapped[j] = f(clamped(j));
        return eigenvectors * mapped.asDiagonal() * eigenvectors.adjoint();
    }

    // sum_j l_j^p v_j v_j*, zero eigenvalues contributing 0 (0^p = 0 even
    // for negative p: powers act on the support only).
    ComplexMatrix power(double p) const;
};

// True when every off-diagonal entry is exactly zero.
bool is_exactly_diagonal(const ComplexMatrix& m);

// Throws NotHermitian when the defect exceeds kHermitianTol.
Spectrum hermitian_eig(const ComplexMatrix& m);

// A validated quantum state: Hermitian, PSD, unit trace in the fixed basis.
//
// Construction clamps eigenvalues to [0, inf) and renormalizes the trace
// (user-entered matrices carry decimal rounding), so the stored matrix and
// spectrum always satisfy the invariants exactly up to floating point.
class DensityMatrix {
public:
    DensityMatrix(const ComplexMatrix& m, double tol);

    int dim() const { return static_cast<int>(mat_.rows()); }
    double tol() const { return tol_; }
    const ComplexMatrix& matrix() const { return mat_; }
    const Spectrum& spectrum() const { return spec_; }

    // Diagonal state from a probability vector (sum within 1e-10 of 1).
    static DensityMatrix from_probabilities(const RealVector& probs);

    // |psi><psi| from (not necessarily normalized) amplitudes.
    static DensityMatrix pure(const ComplexVector& amplitudes);

private:
    ComplexMatrix mat_;
    Spectrum spec_;
    double tol_;

    DensityMatrix() = default;
};

// Free-function spelling of the validating constructor.
// Throws NotHermitian / NotPositive / TraceMismatch, each with the measured
// violation in the message.
DensityMatrix validate_density(const ComplexMatrix& m, double tol);

// rho^alpha = sum_j l_j^alpha v_j v_j*, alpha > 0, with 0^alpha = 0.
ComplexMatrix matrix_power(const DensityMatrix& rho, double alpha);

// Sum of singular values (for Hermitian input, sum of |eigenvalues|).
double trace_norm(const ComplexMatrix& m);

// Tr |m|^p = sum_j |l_j|^p over eigenvalues of Hermitian m, p > 0.
double abs_power_trace(const ComplexMatrix& m, double p);

// ---------------------------------------------------------------------------
// Plain-text matrix format.
//
//   # comment lines start with '#'
//   line 1: dim
//   next dim lines: dim whitespace-separated entries, each  re,im
//
// Values are written with 17 significant digits; bit-exact round-trip is
// not guaranteed.

ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const ComplexMatrix& m);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

} // namespace qcoh
