// plap: persistent Laplacians, persistent Betti numbers and spectra for
// weight-preserving simplicial maps.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "plap/errors.hpp"
#include "plap/fixtures.hpp"
#include "plap/json_io.hpp"
#include "plap/kernels.hpp"
#include "plap/oracle.hpp"
#include "plap/plap.hpp"
#include "plap/tower.hpp"

namespace fs = std::filesystem;
using namespace plap;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Resolves a --map/--complex argument: plain path or "fixture:NAME".
std::string load_source(const std::string& spec) {
    if (spec.rfind("fixture:", 0) == 0) return fixtures::file_content(spec.substr(8));
    return read_file(spec);
}

/// Loader for complex paths referenced inside a map file, relative to it.
std::function<std::string(const std::string&)> relative_loader(const std::string& spec) {
    if (spec.rfind("fixture:", 0) == 0) return nullptr;  // fixtures are inline-only
    fs::path base = fs::path(spec).parent_path();
    return [base](const std::string& ref) {
        fs::path p(ref);
        if (p.is_relative()) p = base / p;
        return read_file(p.string());
    };
}

SimplicialMap load_map(const std::string& spec) {
    std::string text = load_source(spec);
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("'" + spec + "' is not valid JSON");
    if (j.contains("maps")) {
        // tower file: compose the chain into a single map
        tower::Tower t;
        for (const auto& m : j.at("maps"))
            t.maps.push_back(parse_map(m.dump(), relative_loader(spec)));
        if (t.maps.empty()) throw ParseError("tower file has no maps");
        t.validate();
        SimplicialMap out = t.maps[0];
        for (std::size_t i = 1; i < t.maps.size(); ++i)
            out = tower::compose(out, t.maps[i]);
        return out;
    }
    return parse_map(text, relative_loader(spec));
}

tower::Tower load_tower(const std::vector<std::string>& specs) {
    tower::Tower t;
    for (const std::string& spec : specs) {
        std::string text = load_source(spec);
        auto j = nlohmann::json::parse(text, nullptr, false);
        if (j.is_discarded()) throw ParseError("'" + spec + "' is not valid JSON");
        if (j.contains("maps")) {
            for (const auto& m : j.at("maps"))
                t.maps.push_back(parse_map(m.dump(), relative_loader(spec)));
        } else {
            t.maps.push_back(parse_map(text, relative_loader(spec)));
        }
    }
    t.validate();
    return t;
}

std::vector<int> parse_q_range(const std::string& q_spec) {
    auto dots = q_spec.find("..");
    try {
        if (dots == std::string::npos) return {std::stoi(q_spec)};
        int lo = std::stoi(q_spec.substr(0, dots));
        int hi = std::stoi(q_spec.substr(dots + 2));
        if (lo > hi || lo < 0) throw ParseError("bad --q range '" + q_spec + "'");
        std::vector<int> out;
        for (int q = lo; q <= hi; ++q) out.push_back(q);
        return out;
    } catch (const std::invalid_argument&) {
        throw ParseError("--q expects an integer or a range like 0..2");
    }
}

LaplacianWhich parse_which(const std::string& which) {
    if (which == "down") return LaplacianWhich::Down;
    if (which == "up") return LaplacianWhich::Up;
    if (which == "full") return LaplacianWhich::Full;
    if (which == "ess-up") return LaplacianWhich::EssUp;
    throw ParseError("--which must be one of up|down|full|ess-up");
}

int json_indent(const std::string& format) {
    if (format == "pretty") return 2;
    if (format == "json") return -1;
    throw ParseError("--format " + format + " is not available for this command");
}

/// Runs `body(q)` for every q, possibly in parallel, printing one JSON
/// document (or an array for ranges) in q order.
void run_over_q(const std::vector<int>& qs, int jobs,
                const std::function<std::string(int)>& body) {
    std::vector<std::string> results(qs.size());
    std::vector<std::string> errors(qs.size());
    std::vector<char> internal(qs.size(), 0);
#ifdef PLAP_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, jobs)) \
    if (jobs > 1 && qs.size() > 1)
#endif
    for (long long i = 0; i < static_cast<long long>(qs.size()); ++i) {
        try {
            results[i] = body(qs[i]);
        } catch (const InternalError& e) {
            errors[i] = e.what();
            internal[i] = 1;
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (!errors[i].empty()) {
            if (internal[i]) throw InternalError(errors[i]);
            throw Error(errors[i]);
        }
    }
    if (qs.size() == 1) {
        std::cout << results[0] << "\n";
    } else {
        std::cout << "[";
        for (std::size_t i = 0; i < results.size(); ++i)
            std::cout << (i ? "," : "") << results[i];
        std::cout << "]\n";
    }
}

void self_check_betti(const SimplicialMap& map, int q, std::size_t nullity) {
    std::size_t expected = oracle::oracle_persistent_betti(map, q);
    if (nullity != expected) {
        throw InternalError("self-check failed at q=" + std::to_string(q) +
                            ": nullity " + std::to_string(nullity) +
                            " != oracle persistent Betti " + std::to_string(expected));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"persistent Laplacians for weight-preserving simplicial maps"};
    app.require_subcommand(1);

    std::string map_spec, complex_spec, q_spec = "0", which = "full";
    std::string backend = "exact", format = "json", dump_name, write_dir;
    std::vector<std::string> tower_files;
    std::string report_kind = "monotonicity";
    double tol = 1e-9;
    std::uint64_t seed = 7;
    int jobs = 0, instances = 25;
    bool self_check = false, intermediates = false;

    auto add_common = [&](CLI::App* cmd, bool needs_map) {
        if (needs_map)
            cmd->add_option("--map", map_spec, "map file (or fixture:NAME)")->required();
        cmd->add_option("--format", format, "output format: json|pretty");
        cmd->add_option("--jobs", jobs, "parallel jobs across dimensions");
    };

    CLI::App* validate = app.add_subcommand("validate", "validate a complex or map file");
    validate->add_option("--map", map_spec, "map file (or fixture:NAME)");
    validate->add_option("--complex", complex_spec, "complex file");
    validate->add_option("--format", format, "output format: json|pretty");

    CLI::App* check_wp = app.add_subcommand("check-wp", "weight-preservation report");
    add_common(check_wp, true);
    check_wp->add_option("--q", q_spec, "dimension; default: all dimensions");

    CLI::App* laplacian =
        app.add_subcommand("laplacian", "persistent Laplacian matrix at dimension q");
    add_common(laplacian, true);
    laplacian->add_option("--q", q_spec, "dimension (or range a..b)")->required();
    laplacian->add_option("--which", which, "up|down|full|ess-up");
    laplacian->add_option("--backend", backend, "exact|float");
    laplacian->add_flag("--intermediates", intermediates,
                        "include N,X,Y,Z,T,R1,R2,Q,E,F,G,H,SchQ blocks");
    laplacian->add_flag("--self-check", self_check,
                        "cross-check nullity against the homology oracle");

    CLI::App* betti = app.add_subcommand("betti", "persistent Betti number (exact)");
    add_common(betti, true);
    betti->add_option("--q", q_spec, "dimension (or range a..b)")->required();
    betti->add_option("--backend", backend, "exact only; float is refused");
    betti->add_flag("--self-check", self_check,
                    "cross-check nullity against the homology oracle");

    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "eigenvalues of the symmetrized operator");
    add_common(spectrum_cmd, true);
    spectrum_cmd->add_option("--q", q_spec, "dimension (or range a..b)")->required();
    spectrum_cmd->add_option("--which", which, "up|down|full|ess-up");
    spectrum_cmd->add_option("--tol", tol, "eigensolver/symmetry tolerance");

    CLI::App* tower_cmd =
        app.add_subcommand("tower", "eigenvalue monotonicity along a tower of maps");
    tower_cmd->add_option("files", tower_files, "map/tower files in order")->required();
    tower_cmd->add_option("--q", q_spec, "dimension")->required();
    tower_cmd->add_option("--report", report_kind, "monotonicity");
    tower_cmd->add_option("--tol", tol, "comparison tolerance");
    tower_cmd->add_option("--format", format, "json|csv|pretty");
    tower_cmd->add_option("--jobs", jobs, "kernel threads");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "independent verifiers");
    CLI::App* oracle_betti = oracle_cmd->add_subcommand(
        "betti", "persistent Betti from homology ranks (no Laplacians)");
    add_common(oracle_betti, true);
    oracle_betti->add_option("--q", q_spec, "dimension (or range a..b)")->required();
    CLI::App* oracle_schur =
        oracle_cmd->add_subcommand("schur", "Schur restriction property suite");
    oracle_schur->add_option("--seed", seed, "random seed");
    oracle_schur->add_option("--instances", instances, "random instances");
    oracle_schur->add_option("--format", format, "json|pretty");
    CLI::App* oracle_cochain =
        oracle_cmd->add_subcommand("cochain", "chain/cochain duality cross-check");
    add_common(oracle_cochain, true);
    oracle_cochain->add_option("--q", q_spec, "dimension (or range a..b)")->required();
    oracle_cmd->require_subcommand(1);

    CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "built-in example data");
    fixtures_cmd->add_option("--dump", dump_name, "print one fixture file");
    fixtures_cmd->add_option("--write", write_dir, "write all fixtures into a directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (jobs > 0) kernels::set_thread_count(jobs);
        // csv is a tower-only format; everything else is (possibly pretty) JSON
        int indent = (*tower_cmd && format == "csv") ? -1 : json_indent(format);

        if (*validate) {
            if (map_spec.empty() == complex_spec.empty())
                throw ParseError("validate needs exactly one of --map or --complex");
            if (!complex_spec.empty()) {
                parse_complex(load_source(complex_spec));
            } else {
                load_map(map_spec).validate();
            }
            std::cout << "{\"valid\":true}\n";
        } else if (*check_wp) {
            SimplicialMap f = load_map(map_spec);
            WpReport rep;
            if (check_wp->count("--q")) {
                rep = check_weight_preserving(f, parse_q_range(q_spec)[0]);
            } else {
                rep = check_weight_preserving(f);
            }
            std::cout << io::wp_report_json(rep, indent) << "\n";
        } else if (*laplacian) {
            SimplicialMap f = load_map(map_spec);
            LaplacianWhich w = parse_which(which);
            if (backend != "exact" && backend != "float")
                throw ParseError("--backend must be exact or float");
            if (backend == "float" && self_check)
                throw ParseError("--self-check needs the exact backend: float ranks "
                                 "cannot back a nullity cross-check");
            run_over_q(parse_q_range(q_spec), jobs, [&](int q) {
                if (backend == "float")
                    return io::laplacian_json(laplacian_report_float(f, q), w,
                                              intermediates, indent);
                LaplacianReport rep = laplacian_report(f, q);
                if (self_check) self_check_betti(f, q, *rep.nullity);
                return io::laplacian_json(rep, w, intermediates, indent);
            });
        } else if (*betti) {
            if (backend != "exact")
                throw ParseError("betti refuses --backend float: float ranks are not "
                                 "trustworthy, exact arithmetic is required");
            SimplicialMap f = load_map(map_spec);
            run_over_q(parse_q_range(q_spec), jobs, [&](int q) {
                std::size_t nullity = persistent_betti(f, q);
                if (self_check) self_check_betti(f, q, nullity);
                return io::betti_json(q, nullity, nullity, indent);
            });
        } else if (*spectrum_cmd) {
            SimplicialMap f = load_map(map_spec);
            LaplacianWhich w = parse_which(which);
            run_over_q(parse_q_range(q_spec), jobs, [&](int q) {
                return io::spectrum_json(spectrum(f, q, w, tol), indent);
            });
        } else if (*tower_cmd) {
            if (report_kind != "monotonicity")
                throw ParseError("unknown --report '" + report_kind + "'");
            tower::Tower t = load_tower(tower_files);
            tower::MonotonicityReport rep =
                tower::monotonicity_report(t, parse_q_range(q_spec)[0], tol);
            if (format == "csv")
                std::cout << io::monotonicity_csv(rep);
            else if (format == "pretty")
                std::cout << io::monotonicity_pretty(rep);
            else
                std::cout << io::monotonicity_json(rep, -1) << "\n";
        } else if (*oracle_betti) {
            SimplicialMap f = load_map(map_spec);
            run_over_q(parse_q_range(q_spec), jobs, [&](int q) {
                std::size_t b = oracle::oracle_persistent_betti(f, q);
                return io::betti_json(q, b, b, indent);
            });
        } else if (*oracle_schur) {
            auto rep = linalg::verify_schur_properties(seed, instances);
            std::cout << io::schur_properties_json(rep, indent) << "\n";
            return rep.all_ok() ? 0 : 2;
        } else if (*oracle_cochain) {
            SimplicialMap f = load_map(map_spec);
            run_over_q(parse_q_range(q_spec), jobs, [&](int q) {
                return io::cochain_json(q, oracle::cochain_duality_check(f, q), indent);
            });
        } else if (*fixtures_cmd) {
            if (!dump_name.empty()) {
                std::cout << fixtures::file_content(dump_name) << "\n";
            } else if (!write_dir.empty()) {
                fs::create_directories(write_dir);
                for (const auto& name : fixtures::names()) {
                    std::ofstream out(fs::path(write_dir) / (name + ".json"));
                    out << fixtures::file_content(name);
                }
                std::cout << "{\"written\":" << fixtures::names().size() << "}\n";
            } else {
                nlohmann::ordered_json names = fixtures::names();
                std::cout << names.dump() << "\n";
            }
        }
    } catch (const InternalError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
