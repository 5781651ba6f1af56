#include "plap/chains.hpp"

#include <algorithm>
#include <map>

#include "plap/errors.hpp"

namespace plap {

ExactMatrix boundary_matrix(const SimplicialComplex& k, int q) {
    const std::size_t rows = q >= 1 ? k.count(q - 1) : 0;
    const std::size_t cols = k.count(q);
    ExactMatrix out(rows, cols);
    if (q < 1) return out;
    Simplex face;
    for (std::size_t j = 0; j < cols; ++j) {
        const Simplex& s = k.simplices(q)[j];
        face.assign(s.size() - 1, 0);
        int sign = 1;
        for (std::size_t omit = 0; omit < s.size(); ++omit) {
            std::size_t t = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != omit) face[t++] = s[i];
            auto idx = k.find(q - 1, face);
            if (!idx) throw InternalError("boundary_matrix: complex not face-closed");
            out(*idx, j) += Rational(sign);
            sign = -sign;
        }
    }
    return out;
}

std::vector<Rational> weight_vector(const SimplicialComplex& k, int q) {
    if (q < 0 || q > k.dim()) return {};
    return k.weights_by_dim[q];
}

ExactMatrix weight_matrix(const SimplicialComplex& k, int q) {
    return ExactMatrix::diagonal(weight_vector(k, q));
}

ChainMapMatrix induced_chain_map(const SimplicialMap& f, int q) {
    const std::size_t cols = f.domain.count(q);
    const std::size_t rows = f.codomain.count(q);
    ChainMapMatrix out;
    out.matrix = ExactMatrix(rows, cols);
    out.columns.resize(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        const Simplex& s = f.domain.simplices(q)[j];
        Simplex image(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) image[i] = f.vertex_map[s[i]];
        // sign of the permutation sorting the image tuple; duplicates kill the column
        bool killed = false;
        int sign = 1;
        for (std::size_t a = 0; a < image.size() && !killed; ++a) {
            for (std::size_t b = a + 1; b < image.size(); ++b) {
                if (image[a] == image[b]) {
                    killed = true;
                    break;
                }
                if (image[a] > image[b]) sign = -sign;
            }
        }
        if (killed) {
            out.columns[j].killed = true;
            continue;
        }
        std::sort(image.begin(), image.end());
        auto idx = f.codomain.find(q, image);
        if (!idx) throw MapError("induced_chain_map: invalid simplicial map");
        out.columns[j].target = *idx;
        out.columns[j].sign = sign;
        out.matrix(*idx, j) = Rational(sign);
    }
    return out;
}

WpReport check_weight_preserving(const SimplicialMap& f, int q) {
    WpReport report;
    if (q < 0 || q > f.domain.dim()) return report;  // Im(f_q) empty, vacuously true
    ChainMapMatrix cm = induced_chain_map(f, q);
    std::map<std::size_t, Rational> preimage_sum;
    for (std::size_t j = 0; j < cm.columns.size(); ++j) {
        if (cm.columns[j].killed) continue;
        preimage_sum[cm.columns[j].target] += f.domain.weight(q, j);
    }
    for (const auto& [target, sum] : preimage_sum) {
        const Rational& expected = f.codomain.weight(q, target);
        if (sum != expected) {
            WpViolation v;
            v.q = q;
            v.tau = f.codomain.simplices(q)[target];
            v.label = f.codomain.simplex_label(v.tau);
            v.expected = expected;
            v.actual = sum;
            report.violations.push_back(std::move(v));
            report.weight_preserving = false;
        }
    }
    return report;
}

WpReport check_weight_preserving(const SimplicialMap& f) {
    WpReport report;
    for (int q = 0; q <= f.domain.dim(); ++q) {
        WpReport at_q = check_weight_preserving(f, q);
        if (!at_q.weight_preserving) {
            report.weight_preserving = false;
            for (auto& v : at_q.violations) report.violations.push_back(std::move(v));
        }
    }
    return report;
}

bool is_weight_preserving_at(const SimplicialMap& f, int q) {
    return check_weight_preserving(f, q).weight_preserving;
}

ExactMatrix combinatorial_laplacian(const SimplicialComplex& k, int q,
                                    LaplacianKind kind) {
    const std::size_t n = k.count(q);
    ExactMatrix out(n, n);
    if (n == 0) return out;
    if (kind == LaplacianKind::Full) {
        return combinatorial_laplacian(k, q, LaplacianKind::Up) +
               combinatorial_laplacian(k, q, LaplacianKind::Down);
    }
    if (kind == LaplacianKind::Up) {
        if (k.count(q + 1) == 0) return out;
        ExactMatrix b = boundary_matrix(k, q + 1);
        ExactMatrix wq1 = weight_matrix(k, q + 1);
        ExactMatrix winv = ExactMatrix(n, n);
        for (std::size_t i = 0; i < n; ++i) winv(i, i) = k.weight(q, i).inverse();
        return b * wq1 * b.transpose() * winv;
    }
    // down
    if (q == 0) return out;
    ExactMatrix b = boundary_matrix(k, q);
    ExactMatrix wq = weight_matrix(k, q);
    const std::size_t m = k.count(q - 1);
    ExactMatrix winv(m, m);
    for (std::size_t i = 0; i < m; ++i) winv(i, i) = k.weight(q - 1, i).inverse();
    return wq * b.transpose() * winv * b;
}

BasisDecomposition basis_decomposition(const SimplicialMap& f, int q) {
    WpReport wp = check_weight_preserving(f, q);
    if (!wp.weight_preserving) {
        throw NotWeightPreservingError(
            "basis decomposition needs a weight-preserving map at dimension " +
            std::to_string(q) + " (first violation at " + wp.violations[0].label +
            "); assign weights making the map weight preserving to proceed");
    }
    ChainMapMatrix cm = induced_chain_map(f, q);
    const std::size_t n_k = f.domain.count(q);

    BasisDecomposition out;
    std::map<std::size_t, std::vector<std::size_t>> preimages;  // target -> columns
    std::vector<std::size_t> killed;
    for (std::size_t j = 0; j < n_k; ++j) {
        if (cm.columns[j].killed)
            killed.push_back(j);
        else
            preimages[cm.columns[j].target].push_back(j);
    }
    for (const auto& [target, cols] : preimages) {
        out.hit.push_back(target);
        out.image_weights.push_back(f.codomain.weight(q, target));
    }
    out.n = out.hit.size();

    out.change_of_basis = ExactMatrix(n_k, n_k);
    ExactMatrix& m = out.change_of_basis;
    std::size_t col = 0;
    // J columns: c_q^tau = sum over preimages of sgn * w * [sigma]
    for (std::size_t i = 0; i < out.n; ++i) {
        for (std::size_t j : preimages[out.hit[i]]) {
            m(j, col) = Rational(cm.columns[j].sign) * f.domain.weight(q, j);
        }
        ++col;
    }
    // B columns: differences against the lexicographically smallest preimage
    for (std::size_t i = 0; i < out.n; ++i) {
        const auto& cols = preimages[out.hit[i]];
        for (std::size_t k = 1; k < cols.size(); ++k) {
            m(cols[0], col) = Rational(cm.columns[cols[0]].sign);
            m(cols[k], col) = Rational(-cm.columns[cols[k]].sign);
            ++col;
        }
    }
    // B columns: killed simplices
    for (std::size_t j : killed) {
        m(j, col) = Rational(1);
        ++col;
    }
    if (col != n_k) throw InternalError("basis_decomposition: basis count mismatch");
    return out;
}

}  // namespace plap
