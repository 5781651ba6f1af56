#pragma once

#include <cstdint>
#include <vector>

#include "plap/matrix.hpp"

namespace plap::linalg {

/// Eigenvalues of a self-adjoint operator, ascending with multiplicity.
struct Spectrum {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double min() const { return values.empty() ? 0.0 : values.front(); }
    double sum() const;
    double product() const;
};

// ---------------------------------------------------------------------------
// Exact backend
// ---------------------------------------------------------------------------

struct EchelonForm {
    ExactMatrix reduced;                 // reduced row echelon form
    std::vector<std::size_t> pivot_cols; // ascending
    std::size_t rank = 0;
};

EchelonForm reduced_row_echelon(ExactMatrix a);

/// Exact rank via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
std::size_t rank(const ExactMatrix& a);

Rational determinant(const ExactMatrix& a);

/// Columns span ker(a) exactly; shape cols(a) x nullity.
ExactMatrix kernel_basis(const ExactMatrix& a);

ExactMatrix inverse(const ExactMatrix& a);

/// Solves A X = B exactly. Requires A of full column rank and each column of
/// B in the column space of A; throws SingularMatrixError otherwise.
ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b);

/// Moore-Penrose pseudoinverse via full-rank factorization A = F G,
/// A+ = G^T (G G^T)^-1 (F^T F)^-1 F^T. Satisfies all four Penrose identities
/// exactly; the zero matrix maps to the transposed zero matrix.
ExactMatrix pseudoinverse(const ExactMatrix& a);

/// Generalized Schur complement M/D = A - B D+ C where D is the trailing
/// d x d block. d = 0 returns M, d = dim(M) returns a 0 x 0 matrix.
ExactMatrix schur_complement(const ExactMatrix& m, std::size_t trailing);

/// Columns spanning the orthogonal complement of span(V) w.r.t. the inner
/// product <x,y> = sum_i g_i x_i y_i (g = gram_diag, positive). Deterministic
/// Gram-Schmidt over the canonical basis in order, unnormalized.
/// Throws on dependent columns in V.
ExactMatrix complement_basis_gram(const ExactMatrix& v,
                                  const std::vector<Rational>& gram_diag);

/// Complement w.r.t. the simplex-weight inner product <e_i,e_j> = delta_ij / w_i.
ExactMatrix weighted_complement_basis(const ExactMatrix& v,
                                      const std::vector<Rational>& weights);

/// Exact positive semidefiniteness of a symmetric rational matrix
/// (LDL-style elimination with zero-pivot handling).
bool is_psd(const ExactMatrix& s);

/// True iff the column spans of a and b coincide (exact rank arguments).
bool same_span(const ExactMatrix& a, const ExactMatrix& b);

// ---------------------------------------------------------------------------
// Float backend
// ---------------------------------------------------------------------------

/// Default rank threshold: sigma > max(rows, cols) * eps * sigma_max.
/// Pass rank_tol >= 0 to override the absolute singular-value cutoff.

std::size_t rank(const FloatMatrix& a, double rank_tol = -1.0);
FloatMatrix kernel_basis(const FloatMatrix& a, double rank_tol = -1.0);
FloatMatrix inverse(const FloatMatrix& a);
FloatMatrix solve(const FloatMatrix& a, const FloatMatrix& b);
FloatMatrix pseudoinverse(const FloatMatrix& a, double rank_tol = -1.0);
FloatMatrix schur_complement(const FloatMatrix& m, std::size_t trailing,
                             double rank_tol = -1.0);
FloatMatrix complement_basis_gram(const FloatMatrix& v,
                                  const std::vector<double>& gram_diag);
FloatMatrix weighted_complement_basis(const FloatMatrix& v,
                                      const std::vector<double>& weights);

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    FloatMatrix eigenvectors;         // columns, same order
};

/// Cyclic Jacobi iteration; converges when the off-diagonal Frobenius norm
/// drops below conv_tol * ||S||_F (at most max_sweeps sweeps).
EigenDecomposition jacobi_eigen(FloatMatrix s, double conv_tol = 1e-12,
                                int max_sweeps = 100);

/// Eigenvalues of a symmetric matrix; rejects inputs with
/// max |S - S^T| > sym_tol.
Spectrum symmetric_spectrum(const FloatMatrix& s, double sym_tol = 1e-9);

struct Svd {
    FloatMatrix u;                      // rows(a) x n
    FloatMatrix v;                      // cols(a) x n
    std::vector<double> singular_values;  // descending, length n = cols(a)
};

/// One-sided SVD through the Jacobi eigendecomposition of A^T A.
Svd svd(const FloatMatrix& a);

// ---------------------------------------------------------------------------
// Schur restriction property checks (random exact instances)
// ---------------------------------------------------------------------------

struct SchurPropertyReport {
    bool cancellation_ok = false;        // E^T R (R^-1 E E^T R)+ R^-1 E = E+ E
    bool kernel_projection_ok = false;   // ker(Sch(L,W)) = proj_W(ker L)
    bool factor_restriction_ok = false;  // Sch(f f*, W) = f_W f_W*
    bool extremal_ok = false;            // L >= ext(M) implies Sch >= M (sampled)
    bool basis_independence_ok = false;  // signed-permutation conjugations
    std::size_t extremal_samples = 0;    // candidates that met the hypothesis
    bool all_ok() const {
        return cancellation_ok && kernel_projection_ok && factor_restriction_ok &&
               extremal_ok && basis_independence_ok;
    }
};

SchurPropertyReport verify_schur_properties(std::uint64_t seed, int instances = 25,
                                            std::size_t max_size = 6);

}  // namespace plap::linalg
