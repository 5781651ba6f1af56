#include "plap/json_io.hpp"

#include <sstream>

#include <json.hpp>

namespace plap::io {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const ExactMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json to_json(const FloatMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string dump(const ordered_json& j, int indent) {
    return indent >= 0 ? j.dump(indent) : j.dump();
}

const char* which_name(LaplacianWhich which) {
    switch (which) {
        case LaplacianWhich::Down: return "down";
        case LaplacianWhich::Up: return "up";
        case LaplacianWhich::Full: return "full";
        case LaplacianWhich::EssUp: return "ess-up";
    }
    return "?";
}

template <typename Report>
ordered_json laplacian_to_json(const Report& r, LaplacianWhich which,
                               bool intermediates) {
    ordered_json out;
    out["q"] = r.q;
    out["which"] = which_name(which);
    out["n"] = r.n;
    out["n_p"] = r.n_p;
    switch (which) {
        case LaplacianWhich::Down: out["matrix"] = to_json(r.down); break;
        case LaplacianWhich::Up: out["matrix"] = to_json(r.up); break;
        case LaplacianWhich::Full: out["matrix"] = to_json(r.full); break;
        case LaplacianWhich::EssUp: out["matrix"] = to_json(r.schq); break;
    }
    if (r.nullity) out["nullity"] = *r.nullity;
    if (intermediates) {
        ordered_json inter;
        inter["M"] = to_json(r.change_of_basis);
        inter["N"] = to_json(r.nmat);
        inter["X"] = to_json(r.x);
        inter["Y"] = to_json(r.y);
        inter["Z"] = to_json(r.z);
        inter["T"] = to_json(r.t);
        inter["R1"] = to_json(r.r1);
        inter["R2"] = to_json(r.r2);
        inter["Q"] = to_json(r.qmat);
        inter["E"] = to_json(r.e);
        inter["F"] = to_json(r.f);
        inter["G"] = to_json(r.g);
        inter["H"] = to_json(r.h);
        inter["SchQ"] = to_json(r.schq);
        out["intermediates"] = std::move(inter);
    }
    return out;
}

const char* status_name(tower::CheckStatus s) {
    switch (s) {
        case tower::CheckStatus::Holds: return "holds";
        case tower::CheckStatus::Violated: return "violated";
        case tower::CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

}  // namespace

std::string matrix_json(const ExactMatrix& m, int indent) {
    return dump(to_json(m), indent);
}

std::string matrix_json(const FloatMatrix& m, int indent) {
    return dump(to_json(m), indent);
}

std::string spectrum_json(const linalg::Spectrum& s, int indent) {
    ordered_json out;
    out["eigenvalues"] = s.values;
    return dump(out, indent);
}

std::string wp_report_json(const WpReport& r, int indent) {
    ordered_json out;
    out["weight_preserving"] = r.weight_preserving;
    ordered_json violations = ordered_json::array();
    for (const auto& v : r.violations) {
        ordered_json item;
        item["q"] = v.q;
        item["simplex"] = v.label;
        item["expected"] = v.expected.to_string();
        item["actual"] = v.actual.to_string();
        violations.push_back(std::move(item));
    }
    out["violations"] = std::move(violations);
    return dump(out, indent);
}

std::string laplacian_json(const LaplacianReport& r, LaplacianWhich which,
                           bool intermediates, int indent) {
    return dump(laplacian_to_json(r, which, intermediates), indent);
}

std::string laplacian_json(const FloatLaplacianReport& r, LaplacianWhich which,
                           bool intermediates, int indent) {
    return dump(laplacian_to_json(r, which, intermediates), indent);
}

std::string betti_json(int q, std::size_t betti, std::size_t nullity, int indent) {
    ordered_json out;
    out["q"] = q;
    out["betti"] = betti;
    out["nullity"] = nullity;
    return dump(out, indent);
}

std::string schur_properties_json(const linalg::SchurPropertyReport& r, int indent) {
    ordered_json out;
    out["cancellation"] = r.cancellation_ok;
    out["kernel_projection"] = r.kernel_projection_ok;
    out["factor_restriction"] = r.factor_restriction_ok;
    out["extremal"] = r.extremal_ok;
    out["basis_independence"] = r.basis_independence_ok;
    out["extremal_samples"] = r.extremal_samples;
    out["pass"] = r.all_ok();
    return dump(out, indent);
}

std::string cochain_json(int q, const oracle::CochainDualityResult& r, int indent) {
    ordered_json out;
    out["q"] = q;
    out["up"] = r.up_ok;
    out["down"] = r.down_ok;
    out["full"] = r.full_ok;
    out["pass"] = r.pass();
    return dump(out, indent);
}

namespace {

ordered_json monotonicity_to_json(const tower::MonotonicityReport& r) {
    ordered_json out;
    out["q"] = r.q;
    out["tol"] = r.tol;
    out["all_ok"] = r.all_ok();
    ordered_json triples = ordered_json::array();
    for (const auto& t : r.triples) {
        ordered_json tj;
        tj["triple"] = t.index;
        ordered_json checks = ordered_json::array();
        for (const auto& c : t.checks) {
            ordered_json cj;
            cj["name"] = c.name;
            cj["status"] = status_name(c.status);
            if (!c.reason.empty()) cj["reason"] = c.reason;
            if (c.informational) cj["informational"] = true;
            if (c.status != tower::CheckStatus::Skipped) {
                cj["k"] = c.k_compared;
                cj["worst_margin"] = c.worst_margin;
                cj["lhs"] = c.lhs;
                cj["rhs"] = c.rhs;
            }
            checks.push_back(std::move(cj));
        }
        tj["checks"] = std::move(checks);
        triples.push_back(std::move(tj));
    }
    out["triples"] = std::move(triples);
    return out;
}

}  // namespace

std::string monotonicity_json(const tower::MonotonicityReport& r, int indent) {
    return dump(monotonicity_to_json(r), indent);
}

std::string monotonicity_csv(const tower::MonotonicityReport& r) {
    std::ostringstream out;
    out << "triple,check,status,informational,k,worst_margin,lhs,rhs\n";
    for (const auto& t : r.triples) {
        for (const auto& c : t.checks) {
            out << t.index << ',' << c.name << ',' << status_name(c.status) << ','
                << (c.informational ? 1 : 0) << ',' << c.k_compared << ','
                << c.worst_margin << ',';
            out << '"';
            for (std::size_t i = 0; i < c.lhs.size(); ++i)
                out << (i ? " " : "") << c.lhs[i];
            out << "\",\"";
            for (std::size_t i = 0; i < c.rhs.size(); ++i)
                out << (i ? " " : "") << c.rhs[i];
            out << "\"\n";
        }
    }
    return out.str();
}

std::string monotonicity_pretty(const tower::MonotonicityReport& r) {
    std::ostringstream out;
    out << "monotonicity report, q=" << r.q << ", tol=" << r.tol << "\n";
    for (const auto& t : r.triples) {
        out << "triple " << t.index << ":\n";
        for (const auto& c : t.checks) {
            out << "  " << c.name << ": " << status_name(c.status);
            if (c.informational) out << " (informational)";
            if (c.status == tower::CheckStatus::Skipped)
                out << " (" << c.reason << ")";
            else
                out << "  k=" << c.k_compared << " worst_margin=" << c.worst_margin;
            out << "\n";
        }
    }
    out << (r.all_ok() ? "all applicable checks hold" : "VIOLATIONS PRESENT") << "\n";
    return out.str();
}

}  // namespace plap::io
