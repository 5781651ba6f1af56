#include "plap/plap.hpp"

#include <cmath>

#include "plap/errors.hpp"

namespace plap {

namespace {

// backend glue: convert the exact chain-level matrices once, then run the
// whole pipeline in the target scalar type
struct ExactBackend {
    using Mat = ExactMatrix;
    using Weight = Rational;
    static Mat convert(const ExactMatrix& m) { return m; }
    static std::vector<Weight> weights(const std::vector<Rational>& w) { return w; }
    static Weight invert(const Rational& r) { return r.inverse(); }
};

struct FloatBackend {
    using Mat = FloatMatrix;
    using Weight = double;
    static Mat convert(const ExactMatrix& m) { return to_float(m); }
    static std::vector<Weight> weights(const std::vector<Rational>& w) {
        std::vector<double> out(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i].to_double();
        return out;
    }
    static Weight invert(double v) { return 1.0 / v; }
};

template <typename B>
LaplacianReportT<typename B::Mat> compute_report(const SimplicialMap& f, int q) {
    using Mat = typename B::Mat;
    if (q < 0) throw ValidationError("dimension q must be nonnegative");

    BasisDecomposition bd = basis_decomposition(f, q);  // checks wp at q
    const std::size_t n_k = f.domain.count(q);
    const std::size_t n_l = f.codomain.count(q);

    LaplacianReportT<Mat> rep;
    rep.q = q;
    rep.n = bd.n;
    rep.hit = bd.hit;
    const std::size_t n = bd.n;

    Mat cob = B::convert(bd.change_of_basis);
    rep.change_of_basis = cob;
    auto w_im = B::weights(bd.image_weights);
    rep.image_weights = w_im;
    Mat w_diag = Mat::diagonal(w_im);
    std::vector<typename B::Weight> w_inv_diag(w_im.size());
    for (std::size_t i = 0; i < w_im.size(); ++i) w_inv_diag[i] = B::invert(w_im[i]);
    Mat w_inv = Mat::diagonal(w_inv_diag);

    // ---- down path: N = M^-1 [down^K] M, Schur out the B block, conjugate by W
    Mat down_k = B::convert(combinatorial_laplacian(f.domain, q, LaplacianKind::Down));
    rep.nmat = linalg::inverse(cob) * down_k * cob;
    rep.x = rep.nmat.block(0, 0, n, n);
    rep.y = rep.nmat.block(0, n, n, n_k - n);
    rep.z = rep.nmat.block(n, 0, n_k - n, n);
    rep.t = rep.nmat.block(n, n, n_k - n, n_k - n);
    Mat sch_down = linalg::schur_complement(rep.nmat, n_k - n);
    rep.down = w_diag * sch_down * w_inv;

    // ---- up path: R1 spans ker(down) = f_q(ker boundary), R2 its weighted
    // complement inside Im(f_q); conjugate [up^L], Schur onto the R1 block
    rep.r1 = linalg::kernel_basis(rep.down);
    rep.n_p = rep.r1.cols();
    rep.r2 = linalg::weighted_complement_basis(rep.r1, w_im);
    Mat r = Mat::hcat(rep.r1, rep.r2);

    std::vector<bool> is_hit(n_l, false);
    for (std::size_t idx : bd.hit) is_hit[idx] = true;
    Mat full_cob(n_l, n_l);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) full_cob(bd.hit[i], j) = r(i, j);
    {
        std::size_t col = n;
        for (std::size_t idx = 0; idx < n_l; ++idx) {
            if (!is_hit[idx]) full_cob(idx, col++) = typename B::Weight(1);
        }
    }

    Mat up_l = B::convert(combinatorial_laplacian(f.codomain, q, LaplacianKind::Up));
    rep.qmat = linalg::inverse(full_cob) * up_l * full_cob;
    rep.e = rep.qmat.block(0, 0, rep.n_p, rep.n_p);
    rep.f = rep.qmat.block(0, rep.n_p, rep.n_p, n_l - rep.n_p);
    rep.g = rep.qmat.block(rep.n_p, 0, n_l - rep.n_p, rep.n_p);
    rep.h = rep.qmat.block(rep.n_p, rep.n_p, n_l - rep.n_p, n_l - rep.n_p);
    rep.schq = linalg::schur_complement(rep.qmat, n_l - rep.n_p);

    Mat padded(n, n);
    padded.set_block(0, 0, rep.schq);
    rep.up = r * padded * linalg::inverse(r);

    rep.full = rep.down + rep.up;
    return rep;
}

}  // namespace

LaplacianReport laplacian_report(const SimplicialMap& f, int q) {
    LaplacianReport rep = compute_report<ExactBackend>(f, q);
    rep.nullity = rep.n - linalg::rank(rep.full);
    return rep;
}

FloatLaplacianReport laplacian_report_float(const SimplicialMap& f, int q) {
    return compute_report<FloatBackend>(f, q);
}

ExactMatrix down_persistent_laplacian(const SimplicialMap& f, int q) {
    return compute_report<ExactBackend>(f, q).down;
}

ExactMatrix up_persistent_laplacian(const SimplicialMap& f, int q) {
    return compute_report<ExactBackend>(f, q).up;
}

ExactMatrix persistent_laplacian(const SimplicialMap& f, int q) {
    return compute_report<ExactBackend>(f, q).full;
}

ExactMatrix essential_up_laplacian(const SimplicialMap& f, int q) {
    return compute_report<ExactBackend>(f, q).schq;
}

std::size_t persistent_betti(const SimplicialMap& f, int q) {
    ExactMatrix full = compute_report<ExactBackend>(f, q).full;
    return full.rows() - linalg::rank(full);
}

bool is_weighted_self_adjoint(const ExactMatrix& a, const std::vector<Rational>& w) {
    // W^{-1/2} A W^{1/2} symmetric  <=>  a_ij w_j = a_ji w_i
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (a(i, j) * w[j] != a(j, i) * w[i]) return false;
    return true;
}

FloatMatrix weighted_symmetrization(const ExactMatrix& a, const std::vector<Rational>& w) {
    const std::size_t n = a.rows();
    std::vector<double> sqrt_w(n);
    for (std::size_t i = 0; i < n; ++i) sqrt_w[i] = std::sqrt(w[i].to_double());
    FloatMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s(i, j) = a(i, j).to_double() * sqrt_w[j] / sqrt_w[i];
    return s;
}

linalg::Spectrum spectrum_in_basis(const ExactMatrix& op, const ExactMatrix& gram,
                                   double tol) {
    if (op.transpose() * gram != gram * op)
        throw InternalError("spectrum_in_basis: operator not self-adjoint in its Gram");
    if (op.rows() == 0) return {};
    // S = G^{1/2} T G^{-1/2} is symmetric; build the square roots from the
    // eigendecomposition of the (SPD) Gram matrix
    linalg::EigenDecomposition eg = linalg::jacobi_eigen(to_float(gram));
    const std::size_t n = op.rows();
    FloatMatrix half(n, n), half_inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double acc_h = 0.0, acc_i = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                double root = std::sqrt(eg.eigenvalues[k]);
                acc_h += eg.eigenvectors(i, k) * root * eg.eigenvectors(j, k);
                acc_i += eg.eigenvectors(i, k) / root * eg.eigenvectors(j, k);
            }
            half(i, j) = acc_h;
            half_inv(i, j) = acc_i;
        }
    }
    return linalg::symmetric_spectrum(half * to_float(op) * half_inv,
                                      std::max(tol, 1e-7));
}

linalg::Spectrum spectrum_of(const LaplacianReport& rep, LaplacianWhich which,
                             double tol) {
    if (which == LaplacianWhich::EssUp) {
        ExactMatrix w_inv(rep.n, rep.n);
        for (std::size_t i = 0; i < rep.n; ++i) w_inv(i, i) = rep.image_weights[i].inverse();
        ExactMatrix gram = rep.r1.transpose() * w_inv * rep.r1;
        return spectrum_in_basis(rep.schq, gram, tol);
    }
    const ExactMatrix& mat = which == LaplacianWhich::Down  ? rep.down
                             : which == LaplacianWhich::Up ? rep.up
                                                           : rep.full;
    if (!is_weighted_self_adjoint(mat, rep.image_weights))
        throw InternalError("spectrum: persistent Laplacian not W-self-adjoint");
    if (mat.rows() == 0) return {};
    return linalg::symmetric_spectrum(weighted_symmetrization(mat, rep.image_weights),
                                      std::max(tol, 1e-7));
}

linalg::Spectrum spectrum(const SimplicialMap& f, int q, LaplacianWhich which,
                          double tol) {
    return spectrum_of(compute_report<ExactBackend>(f, q), which, tol);
}

}  // namespace plap
