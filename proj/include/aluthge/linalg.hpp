#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace aluthge {

using Complex = std::complex<double>;

/// Dense complex square matrix, the universal carrier of this library.
/// All operations below require (and check) squareness; entries are
/// expected to be finite.
using ComplexMatrix = Eigen::MatrixXcd;

/// Thrown when a numerical kernel cannot deliver its contract
/// (eigensolver non-convergence, spectral gap too small, PSD violation,
/// sampling budget exhausted, ...). Distinct from std::invalid_argument,
/// which signals contract misuse by the caller.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Tolerance knobs shared across the library. Defaults follow the
/// project-wide conventions; every field can be overridden per call site.
struct Tolerances {
    double herm = 1e-10;        // Hermitian-symmetry check, relative
    double psd = 1e-10;         // admissible negative eigenvalue, relative
    double recon = 1e-10;       // residual of factorizations, relative
    double eig_match = 1e-8;    // eigenvalue multiset matching
    double rank = 1e-10;        // numerical-rank threshold, relative to sigma_max
    double inv = 1e-12;         // invertibility: sigma_min / sigma_max above this
    double sylvester_gap = 1e-8; // minimal spectral gap for Sylvester solves
    double conv = 1e-11;        // iteration step-size stopping tolerance
    double norm = 1e-9;         // normality-residual stopping tolerance
    int max_iter = 10000;
};

/// Unitary factor U and positive factor |T| of a polar decomposition
/// T = U |T|. U is always a full unitary; see polar_decompose.
struct PolarParts {
    ComplexMatrix unitary;
    ComplexMatrix modulus;
};

/// Eigenvalues with algebraic multiplicity, sorted lexicographically by
/// (real part, imaginary part). The sorted order is the canonical form
/// used for all multiset comparisons in this library.
struct Spectrum {
    std::vector<Complex> eigenvalues;

    int size() const { return static_cast<int>(eigenvalues.size()); }
};

/// Real inner product Re(tr(b* a)) on matrices; the induced norm is the
/// Frobenius norm. Throws std::invalid_argument on dimension mismatch.
double frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Frobenius norm (2-norm of the entry vector).
double frobenius_norm(const ComplexMatrix& a);

/// Operator norm induced by the Euclidean vector norm, i.e. the largest
/// singular value.
double spectral_norm(const ComplexMatrix& a);

/// Positive semidefinite square root of a Hermitian PSD matrix, via
/// unitary diagonalization with eigenvalue clipping at zero.
/// Rejects inputs that are non-Hermitian beyond tol.herm or have an
/// eigenvalue below -tol.psd (both relative to the matrix scale).
ComplexMatrix hermitian_sqrt(const ComplexMatrix& p, const Tolerances& tol = {});

/// Polar decomposition T = U |T| with U unitary and |T| = (T*T)^{1/2}.
///
/// U is completed to a full unitary from the singular-value factorization
/// T = W S V* as U = W V*; for singular T all completions agree on
/// range(|T|), which is the only part the Aluthge transform sees.
/// The zero matrix gets U = I by convention.
PolarParts polar_decompose(const ComplexMatrix& t);

/// Solves Sylvester's equation a X - X b = y for X.
///
/// Requires the spectra of a and b to be disjoint; if the minimal gap
/// min |lambda_i(a) - lambda_j(b)| falls below
/// tol.sylvester_gap * max(1, |a|_2 + |b|_2) the equation is considered
/// singular and a NumericalError is thrown. Implemented by complex Schur
/// reduction of both coefficients and triangular substitution.
ComplexMatrix sylvester_solve(const ComplexMatrix& a, const ComplexMatrix& b,
                              const ComplexMatrix& y, const Tolerances& tol = {});

/// Eigenvalues of t with algebraic multiplicity, canonically sorted.
Spectrum spectrum(const ComplexMatrix& t);

/// Scale-normalized self-commutator size |t*t - t t*| / max(1, |t|^2),
/// in the operator 2-norm. Zero exactly on normal matrices; used as the
/// numeric proxy for "is normal" throughout.
double normality_residual(const ComplexMatrix& t);

/// Number of singular values above threshold * sigma_max; threshold
/// defaults to the rank tolerance.
int numerical_rank(const ComplexMatrix& a, double rel_threshold = 1e-10);

/// Count of singular values of `a` above an absolute threshold.
int rank_above(const ComplexMatrix& a, double abs_threshold);

/// Sorts eigenvalues lexicographically by (Re, Im); the canonical order.
void sort_spectrum(std::vector<Complex>& values);

/// Max entrywise distance between two canonically sorted spectra of equal
/// length. Throws std::invalid_argument on length mismatch.
double spectrum_distance(const Spectrum& a, const Spectrum& b);

namespace detail {
void require_square(const ComplexMatrix& m, const char* who);
void require_finite(const ComplexMatrix& m, const char* who);
}  // namespace detail

}  // namespace aluthge
