#pragma once

#include <string>
#include <vector>

#include "plap/complex.hpp"
#include "plap/matrix.hpp"

namespace plap {

/// Signed incidence matrix of the boundary operator in canonical bases,
/// shape n_{q-1} x n_q. By convention the 0th boundary maps into the zero
/// space, giving a 0 x n_0 matrix.
ExactMatrix boundary_matrix(const SimplicialComplex& k, int q);

/// Diagonal of simplex weights in canonical order (empty for q out of range).
std::vector<Rational> weight_vector(const SimplicialComplex& k, int q);
ExactMatrix weight_matrix(const SimplicialComplex& k, int q);

struct ChainMapColumn {
    bool killed = false;   // map collapses two vertices of this simplex
    std::size_t target = 0;  // codomain simplex index when not killed
    int sign = 0;            // +1 / -1 when not killed
};

/// Matrix of the induced chain map f_q in canonical bases (n_q^L x n_q^K).
/// Every column has at most one nonzero entry, +/-1.
struct ChainMapMatrix {
    ExactMatrix matrix;
    std::vector<ChainMapColumn> columns;
};

ChainMapMatrix induced_chain_map(const SimplicialMap& f, int q);

struct WpViolation {
    int q = 0;
    Simplex tau;            // codomain simplex (indices into codomain vertices)
    std::string label;      // human-readable simplex name
    Rational expected;      // w_q^L(tau)
    Rational actual;        // sum of preimage weights
};

struct WpReport {
    bool weight_preserving = true;
    std::vector<WpViolation> violations;
};

/// Exact per-dimension weight-preservation check (Def. of weight preserving:
/// each hit simplex's weight equals the sum of its preimages' weights).
WpReport check_weight_preserving(const SimplicialMap& f, int q);
/// All dimensions 0..dim(domain).
WpReport check_weight_preserving(const SimplicialMap& f);

bool is_weight_preserving_at(const SimplicialMap& f, int q);

enum class LaplacianKind { Up, Down, Full };

/// Combinatorial Laplacian in the canonical basis; adjoints are taken with
/// respect to the weighted inner products <s,s> = 1/w(s):
///   up   = B_{q+1} W_{q+1} B_{q+1}^T W_q^{-1}
///   down = W_q B_q^T W_{q-1}^{-1} B_q
ExactMatrix combinatorial_laplacian(const SimplicialComplex& k, int q, LaplacianKind kind);

/// The J/B basis data for ker(f_q)^perp and ker(f_q):
///   J: one chain c_q^tau per hit simplex tau (preimages weighted by w, signed),
///   B: differences sgn(s_1)[s_1] - sgn(s_k)[s_k] per extra preimage, then the
///      killed simplices.
/// Columns of the change-of-basis matrix M are J then B in that order, with
/// coordinates in the canonical basis of C_q^K. The representative s_1 is the
/// lexicographically smallest preimage.
struct BasisDecomposition {
    std::vector<std::size_t> hit;        // indices into S_q^L, ascending
    std::size_t n = 0;                   // |J| = |hit| = dim Im(f_q)
    ExactMatrix change_of_basis;         // n_q^K x n_q^K, invertible
    std::vector<Rational> image_weights; // W_Im(f_q) diagonal, length n
};

/// Requires f weight preserving at dimension q (throws
/// NotWeightPreservingError otherwise: the isometry needs it).
BasisDecomposition basis_decomposition(const SimplicialMap& f, int q);

}  // namespace plap
