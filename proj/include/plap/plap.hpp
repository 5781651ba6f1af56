#pragma once

#include <optional>

#include "plap/chains.hpp"
#include "plap/linalg.hpp"

namespace plap {

enum class LaplacianWhich { Down, Up, Full, EssUp };

/// Everything one persistent-Laplacian computation produces: the three
/// operator matrices on the canonical basis of Im(f_q) plus the intermediate
/// blocks of the down path (N = M^-1 [down Laplacian] M split into X Y Z T)
/// and of the up path (R = (R1 R2), Q = M^-1 [up Laplacian] M split into
/// E F G H, and the essential block SchQ = E - F H+ G).
template <typename M>
struct LaplacianReportT {
    int q = 0;
    std::size_t n = 0;    // dim Im(f_q)
    std::size_t n_p = 0;  // dim f_q(ker boundary_q)
    std::vector<std::size_t> hit;  // canonical basis of Im(f_q): indices into S_q^L
    std::vector<typename M::value_type> image_weights;  // W_Im(f_q) diagonal

    M down, up, full;

    M change_of_basis;  // M_{J u B -> S_q^K}
    M nmat, x, y, z, t;
    M r1, r2, qmat, e, f, g, h, schq;

    std::optional<std::size_t> nullity;  // exact backend only
};

using LaplacianReport = LaplacianReportT<ExactMatrix>;
using FloatLaplacianReport = LaplacianReportT<FloatMatrix>;

/// Runs the full matrix pipeline in exact arithmetic.
/// Throws NotWeightPreservingError unless f is weight preserving at q.
LaplacianReport laplacian_report(const SimplicialMap& f, int q);

/// Same pipeline with every linear-algebra step in binary64 (SVD-based
/// pseudoinverses and rank decisions). Nullity is not populated: ranks from
/// floats are not trustworthy, which is why the exact backend exists.
FloatLaplacianReport laplacian_report_float(const SimplicialMap& f, int q);

ExactMatrix down_persistent_laplacian(const SimplicialMap& f, int q);
ExactMatrix up_persistent_laplacian(const SimplicialMap& f, int q);
ExactMatrix persistent_laplacian(const SimplicialMap& f, int q);

/// The unpadded Schur block Sch(up Laplacian of L, f_q(ker boundary)),
/// n_p x n_p, in the kernel basis R1.
ExactMatrix essential_up_laplacian(const SimplicialMap& f, int q);

/// Exact nullity of the persistent Laplacian = persistent Betti number.
std::size_t persistent_betti(const SimplicialMap& f, int q);

/// Eigenvalues of the symmetrized operator: W^{-1/2} [Delta] W^{1/2} for the
/// padded operators, Gram-conjugated SchQ for the essential block. The exact
/// matrix is checked self-adjoint (w_j Delta_ij = w_i Delta_ji) before any
/// floats are produced.
linalg::Spectrum spectrum(const SimplicialMap& f, int q, LaplacianWhich which,
                          double tol = 1e-9);

/// Same, from an already computed report (saves re-running the pipeline when
/// several spectra of one map are wanted).
linalg::Spectrum spectrum_of(const LaplacianReport& rep, LaplacianWhich which,
                             double tol = 1e-9);

/// Symmetrization helpers shared with tower/oracle checks.
/// Exact self-adjointness w.r.t. <e_i,e_j> = delta_ij / w_i.
bool is_weighted_self_adjoint(const ExactMatrix& a, const std::vector<Rational>& w);
FloatMatrix weighted_symmetrization(const ExactMatrix& a, const std::vector<Rational>& w);

/// Spectrum of an operator given by its matrix in a (possibly non-orthogonal)
/// basis with Gram matrix `gram` (exact, SPD). Checks exact self-adjointness
/// op^T gram = gram op first.
linalg::Spectrum spectrum_in_basis(const ExactMatrix& op, const ExactMatrix& gram,
                                   double tol = 1e-9);

}  // namespace plap
