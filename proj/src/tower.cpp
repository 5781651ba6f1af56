#include "plap/tower.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "plap/errors.hpp"
#include "plap/oracle.hpp"

namespace plap::tower {

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
    if (!(f.codomain == g.domain))
        throw DimensionError("compose: codomain of the first map is not the domain "
                             "of the second");
    SimplicialMap out;
    out.domain = f.domain;
    out.codomain = g.codomain;
    out.vertex_map.reserve(f.vertex_map.size());
    for (VertexId v : f.vertex_map) out.vertex_map.push_back(g.vertex_map[v]);
    out.validate();
    return out;
}

bool is_inclusion(const SimplicialMap& f) {
    std::set<VertexId> seen;
    for (VertexId v : f.vertex_map)
        if (!seen.insert(v).second) return false;
    for (int q = 0; q <= f.domain.dim(); ++q) {
        for (std::size_t i = 0; i < f.domain.count(q); ++i) {
            Simplex image = f.image_set(f.domain.simplices(q)[i]);
            auto idx = f.codomain.find(q, image);
            if (!idx) return false;
            if (f.codomain.weight(q, *idx) != f.domain.weight(q, i)) return false;
        }
    }
    return true;
}

bool is_surjective(const SimplicialMap& f) {
    SimplicialMap image = image_complex(f);
    if (image.codomain.vertices.size() != f.codomain.vertices.size()) return false;
    for (int q = 0; q <= f.codomain.dim(); ++q) {
        if (image.codomain.count(q) != f.codomain.count(q)) return false;
        if (image.codomain.simplices(q) != f.codomain.simplices(q)) return false;
    }
    return true;
}

void Tower::validate() const {
    for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
        if (!(maps[i].codomain == maps[i + 1].domain))
            throw ValidationError("tower: map " + std::to_string(i + 1) +
                                  " does not start where map " + std::to_string(i) +
                                  " ends");
    }
    for (const auto& f : maps) f.validate();
}

bool MonotonicityReport::all_ok() const {
    for (const auto& triple : triples)
        for (const auto& check : triple.checks)
            if (!check.informational && check.status == CheckStatus::Violated)
                return false;
    return true;
}

linalg::Spectrum essential_up_spectrum_direct(const SimplicialComplex& m, int q,
                                              const ExactMatrix& subspace,
                                              double tol) {
    if (subspace.cols() == 0) return {};
    ExactMatrix op = oracle::schur_restriction_direct(
        boundary_matrix(m, q + 1), weight_vector(m, q + 1), weight_vector(m, q),
        subspace);
    ExactMatrix w_inv(m.count(q), m.count(q));
    for (std::size_t i = 0; i < m.count(q); ++i) w_inv(i, i) = m.weight(q, i).inverse();
    ExactMatrix gram = subspace.transpose() * w_inv * subspace;
    return spectrum_in_basis(op, gram, tol);
}

namespace {

EigenComparison compare_ascending(std::string name, const linalg::Spectrum& lhs,
                                  const linalg::Spectrum& rhs, std::size_t k,
                                  double tol, bool informational = false) {
    if (k > lhs.size() || k > rhs.size())
        throw InternalError("monotonicity: comparing more eigenvalues than exist");
    EigenComparison out;
    out.name = std::move(name);
    out.informational = informational;
    out.k_compared = k;
    out.lhs.assign(lhs.values.begin(), lhs.values.begin() + k);
    out.rhs.assign(rhs.values.begin(), rhs.values.begin() + k);
    double worst = 0.0;
    bool first = true;
    for (std::size_t i = 0; i < k; ++i) {
        double margin = out.lhs[i] - out.rhs[i];
        if (first || margin < worst) worst = margin;
        first = false;
    }
    out.worst_margin = worst;
    out.status = (k == 0 || worst >= -tol) ? CheckStatus::Holds : CheckStatus::Violated;
    return out;
}

EigenComparison skipped(std::string name, std::string reason) {
    EigenComparison out;
    out.name = std::move(name);
    out.status = CheckStatus::Skipped;
    out.reason = std::move(reason);
    return out;
}

}  // namespace

MonotonicityReport monotonicity_report(const Tower& t, int q, double tol) {
    t.validate();
    MonotonicityReport report;
    report.q = q;
    report.tol = tol;
    for (std::size_t i = 0; i + 1 < t.maps.size(); ++i) {
        const SimplicialMap& f = t.maps[i];
        const SimplicialMap& g = t.maps[i + 1];
        SimplicialMap h = compose(f, g);
        TripleReport triple;
        triple.index = i;

        const bool wf = is_weight_preserving_at(f, q);
        const bool wg = is_weight_preserving_at(g, q);
        const bool wh = is_weight_preserving_at(h, q);

        // one pipeline run per map; every check below reads these
        std::optional<LaplacianReport> rep_f, rep_g, rep_h;
        if (wf) rep_f = laplacian_report(f, q);
        if (wg) rep_g = laplacian_report(g, q);
        if (wh) rep_h = laplacian_report(h, q);

        // down persistent eigenvalues: lambda^{K,M} >= lambda^{L,M}, lambda^{K,L}
        if (wf && wg && wh) {
            linalg::Spectrum km = spectrum_of(*rep_h, LaplacianWhich::Down, tol);
            linalg::Spectrum lm = spectrum_of(*rep_g, LaplacianWhich::Down, tol);
            linalg::Spectrum kl = spectrum_of(*rep_f, LaplacianWhich::Down, tol);
            std::size_t k = km.size();
            triple.checks.push_back(compare_ascending("down:KM>=LM", km, lm, k, tol));
            triple.checks.push_back(compare_ascending("down:KM>=KL", km, kl, k, tol));
        } else {
            std::string reason = !wf   ? "f not weight preserving at q"
                                 : !wg ? "g not weight preserving at q"
                                       : "composite not weight preserving at q";
            triple.checks.push_back(skipped("down:KM>=LM", reason));
            triple.checks.push_back(skipped("down:KM>=KL", reason));
        }

        // essential up persistent eigenvalues: need only f, g weight preserving;
        // built directly from the boundary matrix of M, so the composite needs
        // no weight-preservation hypothesis
        if (wf && wg) {
            ExactMatrix s_km = oracle::pushed_kernel_basis(h, q);
            ExactMatrix s_lm = oracle::pushed_kernel_basis(g, q);
            linalg::Spectrum km =
                essential_up_spectrum_direct(g.codomain, q, s_km, tol);
            linalg::Spectrum lm =
                essential_up_spectrum_direct(g.codomain, q, s_lm, tol);
            triple.checks.push_back(
                compare_ascending("ess-up:KM>=LM", km, lm, km.size(), tol));
        } else {
            triple.checks.push_back(skipped("ess-up:KM>=LM",
                                            "f or g not weight preserving at q"));
        }

        // padded up eigenvalues for inclusion pairs
        if (is_inclusion(f) && is_inclusion(g)) {
            linalg::Spectrum km = spectrum_of(*rep_h, LaplacianWhich::Up, tol);
            linalg::Spectrum lm = spectrum_of(*rep_g, LaplacianWhich::Up, tol);
            linalg::Spectrum kl = spectrum_of(*rep_f, LaplacianWhich::Up, tol);
            std::size_t k = km.size();
            triple.checks.push_back(compare_ascending("inc-up:KM>=LM", km, lm, k, tol));
            triple.checks.push_back(compare_ascending("inc-up:KM>=KL", km, kl, k, tol));
        } else {
            triple.checks.push_back(skipped("inc-up:KM>=LM", "maps are not inclusions"));
            triple.checks.push_back(skipped("inc-up:KM>=KL", "maps are not inclusions"));
        }

        // surjective pairs: down^{K,M} - down^{L,M} is PSD (same canonical basis;
        // surjectivity of weight-preserving f and g forces the composite wp)
        if (wf && wg && wh && is_surjective(f) && is_surjective(g)) {
            ExactMatrix diff = rep_h->down - rep_g->down;
            auto w = weight_vector(g.codomain, q);
            EigenComparison check;
            check.name = "surj-down-psd";
            if (!is_weighted_self_adjoint(diff, w)) {
                check.status = CheckStatus::Violated;
                check.reason = "difference not W-self-adjoint";
            } else if (diff.rows() == 0) {
                check.status = CheckStatus::Holds;
            } else {
                linalg::Spectrum s = linalg::symmetric_spectrum(
                    weighted_symmetrization(diff, w), 1e-7);
                check.k_compared = s.size();
                check.worst_margin = s.min();
                check.status =
                    s.min() >= -tol ? CheckStatus::Holds : CheckStatus::Violated;
                check.lhs = s.values;
            }
            triple.checks.push_back(std::move(check));
        } else {
            triple.checks.push_back(
                skipped("surj-down-psd",
                        "maps not both surjective and weight preserving at q"));
        }

        // informational probe: padded up eigenvalues without any hypothesis; the
        // counterexample construction shows these can genuinely decrease
        if (wg && wh) {
            linalg::Spectrum km = spectrum_of(*rep_h, LaplacianWhich::Up, tol);
            linalg::Spectrum lm = spectrum_of(*rep_g, LaplacianWhich::Up, tol);
            triple.checks.push_back(compare_ascending("padded-up-probe:KM>=LM", km, lm,
                                                      km.size(), tol, true));
        } else {
            triple.checks.push_back(
                skipped("padded-up-probe:KM>=LM",
                        "g or composite not weight preserving at q"));
        }

        report.triples.push_back(std::move(triple));
    }
    return report;
}

}  // namespace plap::tower
