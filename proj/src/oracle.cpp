#include "plap/oracle.hpp"

#include "plap/errors.hpp"
#include "plap/linalg.hpp"
#include "plap/plap.hpp"

namespace plap::oracle {

namespace {

ExactMatrix diag_inverse(const std::vector<Rational>& w) {
    ExactMatrix out(w.size(), w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out(i, i) = w[i].inverse();
    return out;
}

ExactMatrix diag_of(const std::vector<Rational>& w) {
    return ExactMatrix::diagonal(w);
}

}  // namespace

std::size_t oracle_persistent_betti(const SimplicialMap& f, int q) {
    if (q < 0) throw ValidationError("dimension q must be nonnegative");
    ExactMatrix ker_k = linalg::kernel_basis(boundary_matrix(f.domain, q));
    ExactMatrix pushed = induced_chain_map(f, q).matrix * ker_k;
    ExactMatrix im_boundary = boundary_matrix(f.codomain, q + 1);
    // beta = dim(A) - dim(A cap B) = rank[A|B] - rank[B]
    std::size_t joint = linalg::rank(ExactMatrix::hcat(pushed, im_boundary));
    return joint - linalg::rank(im_boundary);
}

std::size_t classical_betti(const SimplicialComplex& k, int q) {
    if (q < 0 || q > k.dim()) return 0;
    std::size_t n = k.count(q);
    return n - linalg::rank(boundary_matrix(k, q)) -
           linalg::rank(boundary_matrix(k, q + 1));
}

ExactMatrix column_space_basis(const ExactMatrix& a) {
    linalg::EchelonForm ef = linalg::reduced_row_echelon(a);
    ExactMatrix out(a.rows(), ef.rank);
    for (std::size_t i = 0; i < ef.rank; ++i)
        for (std::size_t r = 0; r < a.rows(); ++r) out(r, i) = a(r, ef.pivot_cols[i]);
    return out;
}

ExactMatrix preimage_basis(const ExactMatrix& a, const ExactMatrix& s) {
    if (s.cols() == 0) return linalg::kernel_basis(a);
    if (a.rows() != s.rows())
        throw DimensionError("preimage_basis: ambient dimension mismatch");
    ExactMatrix neg_s = Rational(-1) * s;
    ExactMatrix joint = linalg::kernel_basis(ExactMatrix::hcat(a, neg_s));
    // x-parts of the joint kernel are independent because S has independent columns
    return joint.block(0, 0, a.cols(), joint.cols());
}

ExactMatrix pushed_kernel_basis(const SimplicialMap& f, int q) {
    ExactMatrix ker_k = linalg::kernel_basis(boundary_matrix(f.domain, q));
    return column_space_basis(induced_chain_map(f, q).matrix * ker_k);
}

ExactMatrix schur_restriction_direct(const ExactMatrix& f_matrix,
                                     const std::vector<Rational>& domain_weights,
                                     const std::vector<Rational>& codomain_weights,
                                     const ExactMatrix& subspace_basis) {
    if (f_matrix.cols() != domain_weights.size())
        throw DimensionError("schur_restriction_direct: domain weight count mismatch");
    if (f_matrix.rows() != codomain_weights.size())
        throw DimensionError("schur_restriction_direct: codomain weight count mismatch");
    if (subspace_basis.rows() != f_matrix.rows())
        throw DimensionError("schur_restriction_direct: subspace not in the codomain");
    const std::size_t k = subspace_basis.cols();
    ExactMatrix p = preimage_basis(f_matrix, subspace_basis);
    if (p.cols() == 0) return ExactMatrix(k, k);
    // f_W in the bases (P -> subspace_basis)
    ExactMatrix c = linalg::solve(subspace_basis, f_matrix * p);
    ExactMatrix gram_p = p.transpose() * diag_inverse(domain_weights) * p;
    ExactMatrix gram_w =
        subspace_basis.transpose() * diag_inverse(codomain_weights) * subspace_basis;
    // [f_W*] = G_P^{-1} C^T G_W, so f_W f_W* = C G_P^{-1} C^T G_W
    return c * linalg::inverse(gram_p) * c.transpose() * gram_w;
}

CochainDualityResult cochain_duality_check(const SimplicialMap& f, int q) {
    CochainDualityResult res;

    // chain side (the implementation under test)
    LaplacianReport chain = laplacian_report(f, q);

    const auto wl_q = weight_vector(f.codomain, q);
    const auto wl_q1 = weight_vector(f.codomain, q + 1);
    const auto wk_q = weight_vector(f.domain, q);
    const auto wk_qm1 = weight_vector(f.domain, q - 1);

    // cochain-side raw matrices, canonical dual bases:
    //   [f^q] = [f_q]^T ;  [delta^q] = B_{q+1}^T ;
    //   adjoints with Gram(C^q) = diag(w_q):  [T*] = G_dom^{-1} [T]^T G_cod
    ExactMatrix fq = induced_chain_map(f, q).matrix;   // n_l x n_k
    ExactMatrix fq_dual = fq.transpose();              // C^q_L -> C^q_K
    ExactMatrix bq_k = boundary_matrix(f.domain, q);
    ExactMatrix bq1_l = boundary_matrix(f.codomain, q + 1);

    // ker(f^q)^perp inside C^q_L (Gram diag w^L_q)
    ExactMatrix ker_fq_dual = linalg::kernel_basis(fq_dual);
    ExactMatrix kp = linalg::complement_basis_gram(ker_fq_dual, wl_q);

    // j-hat: Im(f_q) -> ker(f^q)^perp, restriction of j_q^L = diag(1/w)
    ExactMatrix j_cols(wl_q.size(), chain.n);
    for (std::size_t i = 0; i < chain.n; ++i)
        j_cols(chain.hit[i], i) = wl_q[chain.hit[i]].inverse();
    ExactMatrix jh;
    try {
        jh = linalg::solve(kp, j_cols);
    } catch (const SingularMatrixError&) {
        return res;  // j image not inside ker(f^q)^perp: duality fails
    }

    try {
        // ---- up operator on ker(f^q)^perp
        // (delta_q^L)^* : C^{q+1}_L -> C^q_L
        ExactMatrix delta_l_adj =
            diag_inverse(wl_q) * bq1_l * diag_of(wl_q1);
        // (f^q)^* : C^q_K -> C^q_L
        ExactMatrix fq_dual_adj = diag_inverse(wl_q) * fq * diag_of(wk_q);
        // ker((delta^{q-1}_K)^*) inside C^q_K
        ExactMatrix delta_km1_adj =
            diag_inverse(wk_qm1) * bq_k * diag_of(wk_q);
        ExactMatrix target = column_space_basis(
            fq_dual_adj * linalg::kernel_basis(delta_km1_adj));
        ExactMatrix cu = preimage_basis(delta_l_adj, target);
        ExactMatrix t1 = linalg::solve(kp, delta_l_adj * cu);
        ExactMatrix gram_cu = cu.transpose() * diag_of(wl_q1) * cu;
        ExactMatrix gram_kp = kp.transpose() * diag_of(wl_q) * kp;
        ExactMatrix up_cochain =
            t1 * linalg::inverse(gram_cu) * t1.transpose() * gram_kp;

        // ---- down operator on ker(f^q)^perp
        // delta^{q-1}_K : C^{q-1}_K -> C^q_K restricted to the preimage of
        // ker((f^q)^*)^perp = Im(f^q)
        ExactMatrix delta_k = bq_k.transpose();
        ExactMatrix ker_fq_dual_adj = linalg::kernel_basis(fq_dual_adj);
        ExactMatrix imq = linalg::complement_basis_gram(ker_fq_dual_adj, wk_q);
        ExactMatrix cd = preimage_basis(delta_k, imq);
        ExactMatrix t2 = linalg::solve(imq, delta_k * cd);
        ExactMatrix gram_cd = cd.transpose() * diag_of(wk_qm1) * cd;
        ExactMatrix gram_imq = imq.transpose() * diag_of(wk_q) * imq;
        ExactMatrix t2_adj_part =
            t2 * linalg::inverse(gram_cd) * t2.transpose() * gram_imq;
        // conjugate by f-hat^q : ker(f^q)^perp -> Im(f^q)
        ExactMatrix fh = linalg::solve(imq, fq_dual * kp);
        ExactMatrix down_cochain = linalg::inverse(fh) * t2_adj_part * fh;

        res.up_ok = jh * chain.up == up_cochain * jh;
        res.down_ok = jh * chain.down == down_cochain * jh;
        res.full_ok = jh * chain.full == (up_cochain + down_cochain) * jh;
    } catch (const SingularMatrixError&) {
        // an inconsistent restriction means the dual diagram does not commute
        return res;
    }
    return res;
}

}  // namespace plap::oracle
