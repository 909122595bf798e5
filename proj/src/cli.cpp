#include "ckalg/cli.hpp"

#include "ckalg/classify.hpp"
#include "ckalg/cohomology.hpp"
#include "ckalg/errors.hpp"
#include "ckalg/json_io.hpp"
#include "ckalg/lie_algebra.hpp"
#include "ckalg/matrix.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace ckalg::cli {

using nlohmann::json;

namespace {

constexpr std::size_t max_sq_without_stretch = 2;

const OmegaVector& require_omega(const RunConfig& cfg) {
    if (!cfg.omega) {
        throw InputError("--omega is required for '" + cfg.command + "'");
    }
    return *cfg.omega;
}

void check_size_budget(Family family, std::size_t n, bool stretch) {
    if (family == Family::sq && n > max_sq_without_stretch && !stretch) {
        throw InputError("sq with N > " + std::to_string(max_sq_without_stretch) + " needs --stretch");
    }
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

std::string combination_text(const LinearCombination& lc, const LieAlgebra& algebra) {
    if (lc.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& t : lc) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + t.coeff.to_string() + ")" + algebra.basis()[t.index].to_string();
    }
    return out;
}

constexpr const char* sweep_header = "family,N,omega,n_zeros,dim_z2,dim_b2,dim_h2,predicted,match";

std::string sweep_csv_row(Family family, const SweepRow& row) {
    std::ostringstream s;
    s << to_string(family) << ',' << row.omega.size() << ',' << csv_quote(row.omega.to_string()) << ','
      << row.n_zeros << ',' << row.dim_z2 << ',' << row.dim_b2 << ',' << row.dim_h2 << ',' << row.predicted << ','
      << (row.match ? "true" : "false");
    return s.str();
}

json sweep_row_json(const SweepRow& row) {
    return {{"omega", to_json(row.omega)}, {"n_zeros", row.n_zeros}, {"dim_z2", row.dim_z2},
            {"dim_b2", row.dim_b2},        {"dim_h2", row.dim_h2},   {"predicted", row.predicted},
            {"match", row.match}};
}

SweepRow solve_case(Family family, const OmegaVector& omega) {
    const CohomologySolver solver(build_algebra(family, omega));
    const auto result = solver.compute();
    const auto report = crosscheck(solver, result);
    return {omega, omega.zero_count(), result.dim_z2, result.dim_b2, result.dim_h2, report.predicted, report.match};
}

struct Check {
    std::string name;
    std::string status; // pass, fail, skipped
    std::string detail;
};

std::vector<Check> run_checks(Family family, const OmegaVector& omega) {
    std::vector<Check> checks;
    const auto labels = basis_labels(family, omega.size());
    const auto metric = build_metric(omega);

    std::string bad;
    std::vector<MatrixOverK> matrices;
    for (const auto& label : labels) {
        matrices.push_back(build_generator(family, label, omega));
        if (!is_metric_antihermitian(matrices.back(), metric)) {
            bad += (bad.empty() ? "" : " ") + label.to_string();
        }
    }
    checks.push_back({"antihermitian", bad.empty() ? "pass" : "fail",
                      bad.empty() ? std::to_string(labels.size()) + " generators" : "violated by " + bad});

    if (family == Family::su || family == Family::u) {
        bad.clear();
        std::size_t checked = 0;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i].type == GeneratorType::I) {
                continue;
            }
            ++checked;
            if (!is_traceless(matrices[i])) {
                bad += (bad.empty() ? "" : " ") + labels[i].to_string();
            }
        }
        std::string detail = bad.empty() ? std::to_string(checked) + " generators" : "violated by " + bad;
        if (family == Family::u) {
            detail += "; I skipped";
        }
        checks.push_back({"traceless", bad.empty() ? "pass" : "fail", detail});
    } else {
        checks.push_back({"traceless", "skipped", "only the unitary families impose a trace condition"});
    }

    const auto algebra = build_algebra(family, omega);
    try {
        const auto from_m = from_matrices(family, omega);
        checks.push_back({"closure", "pass", "all commutators decompose in the basis"});
        const bool same = from_m == algebra;
        checks.push_back({"matrix_match", same ? "pass" : "fail",
                          same ? "closed-form and matrix structure constants agree" : "structure constants differ"});
    } catch (const InternalError& e) {
        checks.push_back({"closure", "fail", e.what()});
        checks.push_back({"matrix_match", "skipped", "closure failed"});
    }

    const bool jacobi = verify_jacobi(algebra);
    checks.push_back({"jacobi", jacobi ? "pass" : "fail", ""});

    bad.clear();
    for (std::size_t k = 0; k < algebra.dim(); ++k) {
        if (!is_cocycle(coboundary(OneCochain::unit(algebra.dim(), k), algebra), algebra)) {
            bad += (bad.empty() ? "" : " ") + algebra.basis()[k].to_string();
        }
    }
    checks.push_back({"coboundary_in_cocycle", bad.empty() ? "pass" : "fail",
                      bad.empty() ? "delta(e_k) is a cocycle for every generator" : "fails for " + bad});

    if (family == Family::sq) {
        checks.push_back({"pseudoextension_removal", "skipped", "no type II coefficients"});
    } else {
        std::size_t removed = 0;
        bad.clear();
        for (const auto& entry : predict(family, omega).entries) {
            const auto mu = removal_shift(family, omega, entry.name);
            if (!mu) {
                continue;
            }
            const auto cochain = admissible_cochain(family, omega, entry.name);
            if (!cochain || *cochain != coboundary(*mu, algebra)) {
                bad += (bad.empty() ? "" : " ") + entry.name;
            }
            ++removed;
        }
        checks.push_back({"pseudoextension_removal", bad.empty() ? "pass" : "fail",
                          bad.empty() ? std::to_string(removed) + " coefficients removed by a generator shift"
                                      : "shift does not remove " + bad});
    }
    return checks;
}

} // namespace

std::vector<SweepRow> sweep(Family family, std::size_t n, unsigned jobs) {
    const auto patterns = sign_patterns(n);
    std::vector<std::optional<SweepRow>> rows(patterns.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < patterns.size(); i = next++) {
            try {
                rows[i] = solve_case(family, patterns[i]);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                failure = std::current_exception();
            }
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(patterns.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    std::vector<SweepRow> out;
    out.reserve(rows.size());
    for (auto& r : rows) {
        out.push_back(std::move(*r));
    }
    return out;
}

int cmd_generators(const RunConfig& cfg, std::ostream& out) {
    const auto& omega = require_omega(cfg);
    const auto labels = basis_labels(cfg.family, omega.size());
    std::vector<MatrixOverK> matrices;
    for (const auto& label : labels) {
        matrices.push_back(build_generator(cfg.family, label, omega));
    }
    switch (cfg.format) {
    case Format::json: {
        json gens = json::array();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            gens.push_back({{"label", labels[i].to_string()}, {"matrix", to_json(matrices[i])}});
        }
        json doc = {{"family", to_string(cfg.family)},
                    {"n", omega.size()},
                    {"omega", to_json(omega)},
                    {"dimension", labels.size()},
                    {"generators", std::move(gens)}};
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "label,row,col,w,x,y,z\n";
        for (std::size_t i = 0; i < labels.size(); ++i) {
            const auto& m = matrices[i];
            for (std::size_t r = 0; r < m.dim(); ++r) {
                for (std::size_t c = 0; c < m.dim(); ++c) {
                    const auto& e = m(r, c);
                    if (e.is_zero()) {
                        continue;
                    }
                    out << csv_quote(labels[i].to_string()) << ',' << r << ',' << c << ',' << e.w() << ',' << e.x()
                        << ',' << e.y() << ',' << e.z() << '\n';
                }
            }
        }
        break;
    case Format::text:
        for (std::size_t i = 0; i < labels.size(); ++i) {
            out << labels[i].to_string() << ":\n";
            const auto& m = matrices[i];
            for (std::size_t r = 0; r < m.dim(); ++r) {
                out << " ";
                for (std::size_t c = 0; c < m.dim(); ++c) {
                    out << ' ' << m(r, c).to_string();
                }
                out << '\n';
            }
        }
        break;
    }
    return exit_ok;
}

int cmd_structure(const RunConfig& cfg, std::ostream& out) {
    const auto& omega = require_omega(cfg);
    auto algebra = build_algebra(cfg.family, omega);
    if (cfg.corrupt && !algebra.constants().empty()) {
        // Testing aid: flip the sign of the first stored structure constant.
        auto [key, lc] = *algebra.constants().begin();
        lc.front().coeff = -lc.front().coeff;
        algebra.set_bracket(key.first, key.second, lc);
    }
    const bool jacobi_ok = verify_jacobi(algebra);
    bool matrix_match = false;
    try {
        matrix_match = from_matrices(cfg.family, omega) == algebra;
    } catch (const InternalError&) {
        matrix_match = false;
    }

    switch (cfg.format) {
    case Format::json: {
        json basis = json::array();
        for (const auto& l : algebra.basis()) {
            basis.push_back(l.to_string());
        }
        json doc = {{"family", to_string(cfg.family)}, {"n", omega.size()},
                    {"omega", to_json(omega)},         {"basis", std::move(basis)},
                    {"constants", structure_to_json(algebra)}, {"jacobi_ok", jacobi_ok},
                    {"matrix_match", matrix_match}};
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "i,j,k,label_i,label_j,label_k,c\n";
        for (const auto& [key, lc] : algebra.constants()) {
            for (const auto& t : lc) {
                out << key.first << ',' << key.second << ',' << t.index << ','
                    << csv_quote(algebra.basis()[key.first].to_string()) << ','
                    << csv_quote(algebra.basis()[key.second].to_string()) << ','
                    << csv_quote(algebra.basis()[t.index].to_string()) << ',' << t.coeff << '\n';
            }
        }
        break;
    case Format::text:
        for (const auto& [key, lc] : algebra.constants()) {
            out << '[' << algebra.basis()[key.first].to_string() << ", " << algebra.basis()[key.second].to_string()
                << "] = " << combination_text(lc, algebra) << '\n';
        }
        out << "jacobi_ok: " << (jacobi_ok ? "true" : "false") << '\n'
            << "matrix_match: " << (matrix_match ? "true" : "false") << '\n';
        break;
    }
    return jacobi_ok && matrix_match ? exit_ok : exit_check_failed;
}

int cmd_h2(const RunConfig& cfg, std::ostream& out) {
    const auto& omega = require_omega(cfg);
    check_size_budget(cfg.family, omega.size(), cfg.stretch);
    const CohomologySolver solver(build_algebra(cfg.family, omega));
    const auto result = solver.compute();
    const auto report = crosscheck(solver, result);

    switch (cfg.format) {
    case Format::json: {
        json doc = {{"family", to_string(cfg.family)},
                    {"n", omega.size()},
                    {"omega", to_json(omega)},
                    {"cohomology", to_json(result, solver.algebra())},
                    {"crosscheck", to_json(report)}};
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << sweep_header << '\n'
            << sweep_csv_row(cfg.family, {omega, omega.zero_count(), result.dim_z2, result.dim_b2, result.dim_h2,
                                          report.predicted, report.match})
            << '\n';
        break;
    case Format::text:
        out << to_string(cfg.family) << "_omega(" << omega.size() + 1 << ") omega=(" << omega.to_string() << ")\n"
            << "dim Z2 = " << result.dim_z2 << ", dim B2 = " << result.dim_b2 << ", dim H2 = " << result.dim_h2
            << '\n'
            << "predicted = " << report.predicted << ", match = " << (report.match ? "true" : "false") << '\n';
        for (const auto& v : report.verdicts) {
            out << "  " << v.name << " (type " << to_string(v.type) << ", " << (v.active ? "active" : "inactive")
                << "): " << v.verdict << (v.ok ? "" : "  <-- MISMATCH") << '\n';
        }
        break;
    }
    return report.match ? exit_ok : exit_check_failed;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.n == 0) {
        throw InputError("--n is required for 'sweep'");
    }
    check_size_budget(cfg.family, cfg.n, cfg.stretch);
    const auto rows = sweep(cfg.family, cfg.n, cfg.jobs);
    std::size_t mismatches = 0;
    for (const auto& r : rows) {
        mismatches += r.match ? 0 : 1;
    }
    const std::string summary =
        "cases=" + std::to_string(rows.size()) + " mismatches=" + std::to_string(mismatches);

    switch (cfg.format) {
    case Format::json: {
        json list = json::array();
        for (const auto& r : rows) {
            list.push_back(sweep_row_json(r));
        }
        json doc = {{"family", to_string(cfg.family)},
                    {"n", cfg.n},
                    {"cases", rows.size()},
                    {"mismatches", mismatches},
                    {"rows", std::move(list)}};
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << sweep_header << '\n';
        for (const auto& r : rows) {
            out << sweep_csv_row(cfg.family, r) << '\n';
        }
        err << summary << '\n';
        break;
    case Format::text:
        for (const auto& r : rows) {
            out << "omega=(" << r.omega.to_string() << ") dim_h2=" << r.dim_h2 << " predicted=" << r.predicted
                << (r.match ? "" : "  MISMATCH") << '\n';
        }
        out << summary << '\n';
        break;
    }
    return mismatches == 0 ? exit_ok : exit_check_failed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto& omega = require_omega(cfg);
    check_size_budget(cfg.family, omega.size(), cfg.stretch);
    const auto checks = run_checks(cfg.family, omega);
    bool passed = true;
    for (const auto& c : checks) {
        passed = passed && c.status != "fail";
    }
    switch (cfg.format) {
    case Format::json: {
        json list = json::array();
        for (const auto& c : checks) {
            list.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
        }
        json doc = {{"family", to_string(cfg.family)},
                    {"n", omega.size()},
                    {"omega", to_json(omega)},
                    {"checks", std::move(list)},
                    {"passed", passed}};
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "check,status,detail\n";
        for (const auto& c : checks) {
            out << c.name << ',' << c.status << ',' << csv_quote(c.detail) << '\n';
        }
        break;
    case Format::text:
        for (const auto& c : checks) {
            out << c.status << "  " << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
        }
        out << (passed ? "all checks passed" : "some checks failed") << '\n';
        break;
    }
    return passed ? exit_ok : exit_check_failed;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cayley-Klein Lie algebras and their central extensions"};
    app.require_subcommand(1);

    std::string family_text;
    std::string omega_text;
    std::string format_text = "json";
    std::size_t n = 0;
    RunConfig cfg;
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", family_text, "so, su, u or sq")->required();
        sub->add_option("--n", n, "N, so that matrices are (N+1)x(N+1)");
        sub->add_option("--omega", omega_text, "comma-separated rationals, e.g. 1,0,-1/2");
        sub->add_option("--format", format_text, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", cfg.out_path, "write output to this file");
        sub->add_option("--jobs", cfg.jobs, "worker threads for sweeps");
        sub->add_flag("--stretch", cfg.stretch, "allow sq with N > 2");
    };
    auto* generators = app.add_subcommand("generators", "print the matrix generators");
    auto* structure = app.add_subcommand("structure", "structure constants with Jacobi and matrix checks");
    auto* h2_cmd = app.add_subcommand("h2", "second cohomology and the predictor crosscheck");
    auto* sweep_cmd = app.add_subcommand("sweep", "h2 over all {-1,0,1}^N contraction patterns");
    auto* verify = app.add_subcommand("verify", "run the invariant checks for one algebra");
    for (auto* sub : {generators, structure, h2_cmd, sweep_cmd, verify}) {
        add_common(sub);
    }
    structure->add_flag("--corrupt", cfg.corrupt, "flip one structure constant before checking (testing aid)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        cfg.family = parse_family(family_text);
        cfg.format = format_text == "csv" ? Format::csv : (format_text == "text" ? Format::text : Format::json);
        cfg.jobs = std::max(1u, cfg.jobs);
        if (!omega_text.empty()) {
            cfg.omega = OmegaVector::parse(omega_text);
            if (n != 0 && n != cfg.omega->size()) {
                throw InputError("--n " + std::to_string(n) + " does not match " + std::to_string(cfg.omega->size()) +
                                 " omega coefficients");
            }
            n = cfg.omega->size();
        }
        cfg.n = n;

        std::ofstream file;
        if (!cfg.out_path.empty()) {
            file.open(cfg.out_path);
            if (!file) {
                throw InputError("cannot open '" + cfg.out_path + "' for writing");
            }
        }
        std::ostream& sink = cfg.out_path.empty() ? out : file;

        if (cfg.command == "generators") return cmd_generators(cfg, sink);
        if (cfg.command == "structure") return cmd_structure(cfg, sink);
        if (cfg.command == "h2") return cmd_h2(cfg, sink);
        if (cfg.command == "sweep") return cmd_sweep(cfg, sink, err);
        return cmd_verify(cfg, sink);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}

} // namespace ckalg::cli
