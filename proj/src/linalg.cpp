#include "plap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "plap/errors.hpp"

namespace plap::linalg {

double Spectrum::sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

double Spectrum::product() const {
    double p = 1.0;
    for (double v : values) p *= v;
    return p;
}

// ---------------------------------------------------------------------------
// Exact backend
// ---------------------------------------------------------------------------

EchelonForm reduced_row_echelon(ExactMatrix a) {
    EchelonForm out;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    std::vector<std::size_t> elim_rows;
    std::vector<Rational> factors;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!a(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(pivot, j));
        }
        Rational inv = a(r, col).inverse();
        for (std::size_t j = col; j < cols; ++j) a(r, j) *= inv;
        elim_rows.clear();
        factors.clear();
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && !a(i, col).is_zero()) {
                elim_rows.push_back(i);
                factors.push_back(a(i, col));
            }
        }
        kernels::eliminate_rows(a.data(), cols, elim_rows.data(), elim_rows.size(),
                                factors.data(), r, col);
        out.pivot_cols.push_back(col);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(a);
    return out;
}

std::size_t rank(const ExactMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    if (rows == 0 || cols == 0) return 0;
    // clear denominators row by row; row scaling preserves rank
    std::vector<std::vector<BigInt>> w(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        BigInt l(1);
        for (std::size_t j = 0; j < cols; ++j) l = BigInt::lcm(l, a(i, j).den());
        for (std::size_t j = 0; j < cols; ++j)
            w[i][j] = a(i, j).num() * (l / a(i, j).den());
    }
    // fraction-free Bareiss elimination
    BigInt prev(1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!w[i][col].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        if (pivot != r) std::swap(w[pivot], w[r]);
        const BigInt& p = w[r][col];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                BigInt q, rem;
                BigInt::divmod(p * w[i][j] - w[i][col] * w[r][j], prev, q, rem);
                if (!rem.is_zero())
                    throw InternalError("rank: fraction-free elimination lost exactness");
                w[i][j] = std::move(q);
            }
            w[i][col] = BigInt();
        }
        prev = p;
        ++r;
    }
    return r;
}

Rational determinant(const ExactMatrix& a) {
    if (!a.is_square()) throw DimensionError("determinant: matrix not square");
    const std::size_t n = a.rows();
    ExactMatrix w = a;
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t i = col; i < n; ++i) {
            if (!w(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w(col, j), w(pivot, j));
            det = -det;
        }
        det *= w(col, col);
        Rational inv = w(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (w(i, col).is_zero()) continue;
            Rational f = w(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) w(i, j) -= f * w(col, j);
        }
    }
    return det;
}

ExactMatrix kernel_basis(const ExactMatrix& a) {
    const std::size_t cols = a.cols();
    EchelonForm ef = reduced_row_echelon(a);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : ef.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    ExactMatrix out(cols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        out(f, k) = Rational(1);
        for (std::size_t i = 0; i < ef.pivot_cols.size(); ++i)
            out(ef.pivot_cols[i], k) = -ef.reduced(i, f);
    }
    return out;
}

ExactMatrix inverse(const ExactMatrix& a) {
    if (!a.is_square()) throw DimensionError("inverse: matrix not square");
    const std::size_t n = a.rows();
    ExactMatrix aug = ExactMatrix::hcat(a, ExactMatrix::identity(n));
    EchelonForm ef = reduced_row_echelon(std::move(aug));
    if (ef.rank != n || (n > 0 && ef.pivot_cols.back() >= n))
        throw SingularMatrixError("inverse: singular matrix");
    return ef.reduced.block(0, n, n, n);
}

ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("solve: row mismatch");
    const std::size_t k = a.cols();
    EchelonForm ef = reduced_row_echelon(ExactMatrix::hcat(a, b));
    for (std::size_t c : ef.pivot_cols) {
        if (c >= k) throw SingularMatrixError("solve: inconsistent system");
    }
    if (ef.rank != k) throw SingularMatrixError("solve: rank-deficient system");
    return ef.reduced.block(0, k, k, b.cols());
}

ExactMatrix pseudoinverse(const ExactMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    EchelonForm ef = reduced_row_echelon(a);
    const std::size_t r = ef.rank;
    if (r == 0) return ExactMatrix(n, m);
    // full-rank factorization A = F G: F = pivot columns of A, G = nonzero RREF rows
    ExactMatrix f(m, r), g(r, n);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t row = 0; row < m; ++row) f(row, i) = a(row, ef.pivot_cols[i]);
        for (std::size_t col = 0; col < n; ++col) g(i, col) = ef.reduced(i, col);
    }
    ExactMatrix ft = f.transpose(), gt = g.transpose();
    return gt * inverse(g * gt) * inverse(ft * f) * ft;
}

ExactMatrix schur_complement(const ExactMatrix& m, std::size_t trailing) {
    if (!m.is_square()) throw DimensionError("schur_complement: matrix not square");
    const std::size_t n = m.rows();
    if (trailing > n) throw DimensionError("schur_complement: block too large");
    if (trailing == 0) return m;
    const std::size_t lead = n - trailing;
    ExactMatrix a = m.block(0, 0, lead, lead);
    ExactMatrix b = m.block(0, lead, lead, trailing);
    ExactMatrix c = m.block(lead, 0, trailing, lead);
    ExactMatrix d = m.block(lead, lead, trailing, trailing);
    return a - b * pseudoinverse(d) * c;
}

namespace {

Rational dot_gram(const std::vector<Rational>& x, const std::vector<Rational>& y,
                  const std::vector<Rational>& g) {
    Rational acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero() && !y[i].is_zero()) acc += g[i] * x[i] * y[i];
    }
    return acc;
}

}  // namespace

ExactMatrix complement_basis_gram(const ExactMatrix& v,
                                  const std::vector<Rational>& gram_diag) {
    const std::size_t n = v.rows();
    if (gram_diag.size() != n)
        throw DimensionError("complement_basis_gram: gram size mismatch");
    for (const auto& g : gram_diag) {
        if (!(g > Rational(0)))
            throw ValidationError("complement_basis_gram: gram diagonal not positive");
    }
    // orthogonalize the given columns first; they must be independent
    std::vector<std::vector<Rational>> ortho;
    std::vector<Rational> norms;  // <o,o>
    auto gs_insert = [&](std::vector<Rational> x) -> bool {
        for (std::size_t k = 0; k < ortho.size(); ++k) {
            Rational coef = dot_gram(x, ortho[k], gram_diag) / norms[k];
            if (coef.is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i) x[i] -= coef * ortho[k][i];
        }
        bool nonzero = false;
        for (const auto& xi : x) {
            if (!xi.is_zero()) {
                nonzero = true;
                break;
            }
        }
        if (!nonzero) return false;
        norms.push_back(dot_gram(x, x, gram_diag));
        ortho.push_back(std::move(x));
        return true;
    };
    for (std::size_t j = 0; j < v.cols(); ++j) {
        if (!gs_insert(v.col(j)))
            throw ValidationError("complement_basis_gram: dependent columns in V");
    }
    const std::size_t k0 = v.cols();
    ExactMatrix out(n, n - k0);
    std::size_t written = 0;
    for (std::size_t j = 0; j < n && written < n - k0; ++j) {
        std::vector<Rational> e(n);
        e[j] = Rational(1);
        std::size_t before = ortho.size();
        if (gs_insert(std::move(e))) {
            for (std::size_t i = 0; i < n; ++i) out(i, written) = ortho[before][i];
            ++written;
        }
    }
    return out;
}

ExactMatrix weighted_complement_basis(const ExactMatrix& v,
                                      const std::vector<Rational>& weights) {
    std::vector<Rational> gram(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) gram[i] = weights[i].inverse();
    return complement_basis_gram(v, gram);
}

bool is_psd(const ExactMatrix& s) {
    if (!s.is_square()) throw DimensionError("is_psd: matrix not square");
    const std::size_t n = s.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (s(i, j) != s(j, i)) throw ValidationError("is_psd: matrix not symmetric");
    ExactMatrix w = s;
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& d = w(i, i);
        if (d.is_negative()) return false;
        if (d.is_zero()) {
            // a PSD matrix with zero diagonal entry has a zero row/column
            for (std::size_t j = i + 1; j < n; ++j)
                if (!w(i, j).is_zero()) return false;
            continue;
        }
        for (std::size_t r = i + 1; r < n; ++r) {
            if (w(r, i).is_zero()) continue;
            Rational f = w(r, i) / d;
            for (std::size_t c = i + 1; c < n; ++c) w(r, c) -= f * w(i, c);
        }
        // keep the trailing block symmetric for the next round
        for (std::size_t r = i + 1; r < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c) w(c, r) = w(r, c);
    }
    return true;
}

bool same_span(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) return false;
    std::size_t ra = rank(a), rb = rank(b);
    if (ra != rb) return false;
    if (ra == 0) return true;
    return rank(ExactMatrix::hcat(a, b)) == ra;
}

// ---------------------------------------------------------------------------
// Float backend
// ---------------------------------------------------------------------------

namespace {

double frobenius(const FloatMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

double off_diagonal_norm(const FloatMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

double default_rank_cutoff(const FloatMatrix& a, const std::vector<double>& sigma) {
    double smax = sigma.empty() ? 0.0 : sigma.front();
    return static_cast<double>(std::max(a.rows(), a.cols())) *
           std::numeric_limits<double>::epsilon() * smax;
}

}  // namespace

EigenDecomposition jacobi_eigen(FloatMatrix s, double conv_tol, int max_sweeps) {
    const std::size_t n = s.rows();
    if (!s.is_square()) throw DimensionError("jacobi_eigen: matrix not square");
    FloatMatrix v = FloatMatrix::identity(n);
    const double base = frobenius(s);
    const double target = base > 0.0 ? conv_tol * base : 0.0;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(s) <= target) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = s(p, q);
                if (apq == 0.0) continue;
                double app = s(p, p), aqq = s(q, q);
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double sn = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double skp = s(k, p), skq = s(k, q);
                    s(k, p) = c * skp - sn * skq;
                    s(k, q) = sn * skp + c * skq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double spk = s(p, k), sqk = s(q, k);
                    s(p, k) = c * spk - sn * sqk;
                    s(q, k) = sn * spk + c * sqk;
                }
                s(p, q) = 0.0;
                s(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - sn * vkq;
                    v(k, q) = sn * vkp + c * vkq;
                }
            }
        }
    }
    EigenDecomposition out;
    out.eigenvalues.resize(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return s(i, i) < s(j, j); });
    out.eigenvectors = FloatMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = s(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
    }
    return out;
}

Spectrum symmetric_spectrum(const FloatMatrix& s, double sym_tol) {
    if (!s.is_square()) throw DimensionError("symmetric_spectrum: matrix not square");
    double asym = 0.0;
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = i + 1; j < s.cols(); ++j)
            asym = std::max(asym, std::abs(s(i, j) - s(j, i)));
    if (asym > sym_tol)
        throw ValidationError("symmetric_spectrum: asymmetric input (max |S-S^T| = " +
                              std::to_string(asym) + ")");
    FloatMatrix sym(s.rows(), s.cols());
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) sym(i, j) = 0.5 * (s(i, j) + s(j, i));
    Spectrum out;
    out.values = jacobi_eigen(std::move(sym)).eigenvalues;
    return out;
}

// One-sided Jacobi (Hestenes): orthogonalize the columns of A by plane
// rotations on the right. Small singular values come out with high relative
// accuracy, which the rank threshold depends on.
Svd svd(const FloatMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    Svd out;
    out.u = FloatMatrix(m, n);
    out.v = FloatMatrix(n, n);
    out.singular_values.assign(n, 0.0);
    if (m == 0 || n == 0) return out;
    FloatMatrix u = a;
    FloatMatrix v = FloatMatrix::identity(n);
    const int max_sweeps = 60;
    const double tol = 1e-15;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool converged = true;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t k = 0; k < m; ++k) {
                    alpha += u(k, i) * u(k, i);
                    beta += u(k, j) * u(k, j);
                    gamma += u(k, i) * u(k, j);
                }
                if (gamma == 0.0 || std::abs(gamma) <= tol * std::sqrt(alpha * beta))
                    continue;
                converged = false;
                double zeta = (beta - alpha) / (2.0 * gamma);
                double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = c * t;
                for (std::size_t k = 0; k < m; ++k) {
                    double uki = u(k, i), ukj = u(k, j);
                    u(k, i) = c * uki - s * ukj;
                    u(k, j) = s * uki + c * ukj;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vki = v(k, i), vkj = v(k, j);
                    v(k, i) = c * vki - s * vkj;
                    v(k, j) = s * vki + c * vkj;
                }
            }
        }
        if (converged) break;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < m; ++k) acc += u(k, j) * u(k, j);
        norms[j] = std::sqrt(acc);
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t src = order[j];
        double sigma = norms[src];
        out.singular_values[j] = sigma;
        for (std::size_t k = 0; k < n; ++k) out.v(k, j) = v(k, src);
        if (sigma > 0.0)
            for (std::size_t k = 0; k < m; ++k) out.u(k, j) = u(k, src) / sigma;
    }
    return out;
}

std::size_t rank(const FloatMatrix& a, double rank_tol) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    Svd s = svd(a);
    double cutoff = rank_tol >= 0.0 ? rank_tol : default_rank_cutoff(a, s.singular_values);
    std::size_t r = 0;
    for (double sigma : s.singular_values)
        if (sigma > cutoff) ++r;
    return r;
}

FloatMatrix kernel_basis(const FloatMatrix& a, double rank_tol) {
    const std::size_t n = a.cols();
    if (a.rows() == 0 || n == 0) return FloatMatrix::identity(n);
    Svd s = svd(a);
    double cutoff = rank_tol >= 0.0 ? rank_tol : default_rank_cutoff(a, s.singular_values);
    std::vector<std::size_t> null_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (s.singular_values[j] <= cutoff) null_cols.push_back(j);
    FloatMatrix out(n, null_cols.size());
    for (std::size_t k = 0; k < null_cols.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) out(i, k) = s.v(i, null_cols[k]);
    return out;
}

FloatMatrix inverse(const FloatMatrix& a) {
    if (!a.is_square()) throw DimensionError("inverse: matrix not square");
    const std::size_t n = a.rows();
    FloatMatrix w = FloatMatrix::hcat(a, FloatMatrix::identity(n));
    const std::size_t cols = w.cols();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(w(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (std::abs(w(i, col)) > best) {
                best = std::abs(w(i, col));
                pivot = i;
            }
        }
        if (best == 0.0) throw SingularMatrixError("inverse: singular matrix");
        if (pivot != col)
            for (std::size_t j = 0; j < cols; ++j) std::swap(w(col, j), w(pivot, j));
        double inv = 1.0 / w(col, col);
        for (std::size_t j = col; j < cols; ++j) w(col, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w(i, col) == 0.0) continue;
            double f = w(i, col);
            for (std::size_t j = col; j < cols; ++j) w(i, j) -= f * w(col, j);
        }
    }
    return w.block(0, n, n, n);
}

FloatMatrix solve(const FloatMatrix& a, const FloatMatrix& b) {
    // least-squares via pseudoinverse; exact solve when consistent
    return pseudoinverse(a) * b;
}

FloatMatrix pseudoinverse(const FloatMatrix& a, double rank_tol) {
    const std::size_t m = a.rows(), n = a.cols();
    if (m == 0 || n == 0) return FloatMatrix(n, m);
    Svd s = svd(a);
    double cutoff = rank_tol >= 0.0 ? rank_tol : default_rank_cutoff(a, s.singular_values);
    FloatMatrix out(n, m);
    for (std::size_t j = 0; j < n; ++j) {
        double sigma = s.singular_values[j];
        if (sigma <= cutoff) continue;
        for (std::size_t i = 0; i < n; ++i) {
            double vij = s.v(i, j) / sigma;
            if (vij == 0.0) continue;
            for (std::size_t k = 0; k < m; ++k) out(i, k) += vij * s.u(k, j);
        }
    }
    return out;
}

FloatMatrix schur_complement(const FloatMatrix& m, std::size_t trailing, double rank_tol) {
    if (!m.is_square()) throw DimensionError("schur_complement: matrix not square");
    const std::size_t n = m.rows();
    if (trailing > n) throw DimensionError("schur_complement: block too large");
    if (trailing == 0) return m;
    const std::size_t lead = n - trailing;
    FloatMatrix a = m.block(0, 0, lead, lead);
    FloatMatrix b = m.block(0, lead, lead, trailing);
    FloatMatrix c = m.block(lead, 0, trailing, lead);
    FloatMatrix d = m.block(lead, lead, trailing, trailing);
    // the D block must be thresholded at the scale of the whole matrix:
    // directions of D below M's noise floor are zero, and inverting them
    // would amplify roundoff instead of discarding it
    double cutoff = rank_tol;
    if (cutoff < 0.0) {
        double mmax = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) mmax = std::max(mmax, std::abs(m(i, j)));
        cutoff = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * mmax;
    }
    return a - b * pseudoinverse(d, cutoff) * c;
}

FloatMatrix complement_basis_gram(const FloatMatrix& v,
                                  const std::vector<double>& gram_diag) {
    const std::size_t n = v.rows();
    if (gram_diag.size() != n)
        throw DimensionError("complement_basis_gram: gram size mismatch");
    auto dot = [&](const std::vector<double>& x, const std::vector<double>& y) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += gram_diag[i] * x[i] * y[i];
        return acc;
    };
    std::vector<std::vector<double>> ortho;
    std::vector<double> norms;
    double scale = 0.0;
    auto gs_insert = [&](std::vector<double> x, double drop_tol) -> bool {
        for (std::size_t k = 0; k < ortho.size(); ++k) {
            double coef = dot(x, ortho[k]) / norms[k];
            for (std::size_t i = 0; i < n; ++i) x[i] -= coef * ortho[k][i];
        }
        double nrm = dot(x, x);
        if (nrm <= drop_tol) return false;
        norms.push_back(nrm);
        ortho.push_back(std::move(x));
        return true;
    };
    for (std::size_t j = 0; j < v.cols(); ++j) {
        auto col = v.col(j);
        scale = std::max(scale, dot(col, col));
        if (!gs_insert(std::move(col), scale * 1e-24))
            throw ValidationError("complement_basis_gram: dependent columns in V");
    }
    double drop = std::max(scale, 1.0) * 1e-20;
    const std::size_t k0 = v.cols();
    FloatMatrix out(n, n - k0);
    std::size_t written = 0;
    for (std::size_t j = 0; j < n && written < n - k0; ++j) {
        std::vector<double> e(n, 0.0);
        e[j] = 1.0;
        std::size_t before = ortho.size();
        if (gs_insert(std::move(e), drop)) {
            for (std::size_t i = 0; i < n; ++i) out(i, written) = ortho[before][i];
            ++written;
        }
    }
    if (written != n - k0)
        throw InternalError("complement_basis_gram: complement dimension mismatch");
    return out;
}

FloatMatrix weighted_complement_basis(const FloatMatrix& v,
                                      const std::vector<double>& weights) {
    std::vector<double> gram(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) gram[i] = 1.0 / weights[i];
    return complement_basis_gram(v, gram);
}

// ---------------------------------------------------------------------------
// Schur restriction property checks
// ---------------------------------------------------------------------------

namespace {

std::size_t bounded(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

Rational random_rational(std::mt19937_64& rng, long long max_abs_num = 4,
                         long long max_den = 3) {
    long long num = static_cast<long long>(rng() % (2 * max_abs_num + 1)) - max_abs_num;
    long long den = 1 + static_cast<long long>(rng() % max_den);
    return Rational(num, den);
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    ExactMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = random_rational(rng);
    return out;
}

ExactMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = Rational(static_cast<long long>(rng() % 7) - 3);
        if (rank(m) == n) return m;
    }
}

ExactMatrix extend_by_zeros(const ExactMatrix& m, std::size_t n) {
    ExactMatrix out(n, n);
    out.set_block(0, 0, m);
    return out;
}

// signed permutation matrix of size n
ExactMatrix random_signed_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    ExactMatrix out(n, n);
    for (std::size_t j = 0; j < n; ++j)
        out(perm[j], j) = Rational(rng() % 2 == 0 ? 1 : -1);
    return out;
}

}  // namespace

SchurPropertyReport verify_schur_properties(std::uint64_t seed, int instances,
                                            std::size_t max_size) {
    std::mt19937_64 rng(seed);
    SchurPropertyReport report;
    report.cancellation_ok = true;
    report.kernel_projection_ok = true;
    report.factor_restriction_ok = true;
    report.extremal_ok = true;
    report.basis_independence_ok = true;

    for (int inst = 0; inst < instances; ++inst) {
        // (i) cancellation identity (Lemma: invertible R cancels inside the dagger)
        {
            std::size_t n = bounded(rng, 1, max_size), m = bounded(rng, 1, max_size);
            ExactMatrix e = random_matrix(rng, n, m);
            ExactMatrix r = random_invertible(rng, n);
            ExactMatrix rinv = inverse(r);
            ExactMatrix et = e.transpose();
            ExactMatrix lhs = et * r * pseudoinverse(rinv * e * et * r) * rinv * e;
            ExactMatrix mid = et * pseudoinverse(e * et) * e;
            ExactMatrix rhs = pseudoinverse(e) * e;
            if (lhs != rhs || mid != rhs) report.cancellation_ok = false;
        }

        // shared PSD instance for (ii), (iv), (v)
        std::size_t n = bounded(rng, 2, max_size);
        std::size_t d = bounded(rng, 1, n - 1);
        ExactMatrix a = random_matrix(rng, n, bounded(rng, 1, n));
        ExactMatrix l = a * a.transpose();
        ExactMatrix sch = schur_complement(l, n - d);

        // (ii) ker(Sch(L,W)) = proj_W(ker L)
        {
            ExactMatrix ker_sch = kernel_basis(sch);
            ExactMatrix ker_l = kernel_basis(l);
            ExactMatrix projected(d, ker_l.cols());
            for (std::size_t j = 0; j < ker_l.cols(); ++j)
                for (std::size_t i = 0; i < d; ++i) projected(i, j) = ker_l(i, j);
            if (!same_span(ker_sch, projected)) report.kernel_projection_ok = false;
        }

        // (iii) Sch(f f^T, W) = f_W f_W^* computed from f^{-1}(W) directly
        {
            std::size_t fn = bounded(rng, 2, max_size);
            std::size_t fm = bounded(rng, 1, max_size);
            std::size_t fd = bounded(rng, 1, fn - 1);
            ExactMatrix f = random_matrix(rng, fn, fm);
            ExactMatrix lf = f * f.transpose();
            ExactMatrix sch_f = schur_complement(lf, fn - fd);
            ExactMatrix bottom = f.block(fd, 0, fn - fd, fm);
            ExactMatrix p = kernel_basis(bottom);  // basis of f^{-1}(W)
            ExactMatrix direct(fd, fd);
            if (p.cols() > 0) {
                ExactMatrix c = (f * p).block(0, 0, fd, p.cols());
                ExactMatrix gram = p.transpose() * p;
                direct = c * inverse(gram) * c.transpose();
            }
            if (sch_f != direct) report.factor_restriction_ok = false;
        }

        // (iv) extremal characterization, one-sided sampling
        {
            // feasibility half: L - ext(Sch) must be PSD
            if (!is_psd(l - extend_by_zeros(sch, n))) report.extremal_ok = false;
            // sampled maximality half
            for (int cand = 0; cand < 4; ++cand) {
                ExactMatrix b = random_matrix(rng, d, bounded(rng, 1, d));
                Rational eps(1, 1 + static_cast<long long>(rng() % 4));
                ExactMatrix m_cand = eps * (b * b.transpose());
                if (is_psd(l - extend_by_zeros(m_cand, n))) {
                    ++report.extremal_samples;
                    if (!is_psd(sch - m_cand)) report.extremal_ok = false;
                }
            }
            // scaled copies of Sch itself always satisfy the hypothesis
            for (long long kk = 1; kk <= 2; ++kk) {
                ExactMatrix m_cand = Rational(kk, 2) * sch;
                if (!is_psd(l - extend_by_zeros(m_cand, n))) {
                    report.extremal_ok = false;
                } else {
                    ++report.extremal_samples;
                    if (!is_psd(sch - m_cand)) report.extremal_ok = false;
                }
            }
        }

        // (v) invariance under block-respecting signed-permutation conjugation
        {
            ExactMatrix p1 = random_signed_permutation(rng, d);
            ExactMatrix p2 = random_signed_permutation(rng, n - d);
            ExactMatrix p(n, n);
            p.set_block(0, 0, p1);
            p.set_block(d, d, p2);
            ExactMatrix conj = p.transpose() * l * p;
            ExactMatrix sch_conj = schur_complement(conj, n - d);
            if (sch_conj != p1.transpose() * sch * p1)
                report.basis_independence_ok = false;
        }
    }
    return report;
}

}  // namespace plap::linalg
