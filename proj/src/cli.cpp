#include "kintraj/cli.hpp"

#include "kintraj/archive.hpp"
#include "kintraj/probe.hpp"
#include "kintraj/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace kintraj {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument("bad number: " + token);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << "\n";
}

std::string probe_text(const ProbeResult& res) {
    std::ostringstream os;
    os << "probe  k=" << res.k << "  kappa=" << res.kappa << "  r0=" << res.r0
       << "  resolution=" << res.resolution << "\n";
    if (!res.geometry_ok) os << "  GEOMETRY VIOLATION: enlarged cylinder too small\n";
    os << "  spec                 eps      lhs          grad_norm    u_norm       ratio\n";
    os.precision(6);
    for (const auto& r : res.rows) {
        os << "  ";
        os.width(20);
        os << std::left << r.spec << std::right << " ";
        os.width(6);
        os << r.eps << " ";
        os.width(12);
        os << r.lhs << " ";
        os.width(12);
        os << r.grad_norm << " ";
        os.width(12);
        os << r.u_norm << " ";
        os.width(12);
        os << r.ratio << "\n";
    }
    os << "  empirical constant: " << res.empirical_constant
       << "  (refined " << res.refined_constant << ", delta " << res.refinement_delta << ")\n";
    return os.str();
}

int cmd_build(int k, const std::string& out_path) {
    const TrajectoryPair pair = build_pair(k);
    const Json doc = pair_to_archive(pair);
    emit(doc.dump(2), out_path);
    return kExitPass;
}

int cmd_verify(int k, double kappa, const std::string& checks, const std::string& input,
               const std::string& out_path, const std::string& format) {
    const TrajectoryPair pair = input.empty() ? build_pair(k) : read_archive(input);
    VerifyOptions opts = checks.empty() ? VerifyOptions{} : VerifyOptions::from_checks(checks);
    opts.kappa = kappa;
    const VerificationReport report = verify_pair(pair, opts);
    emit(format == "text" ? report.to_text() : report.to_json().dump(2), out_path);
    return report.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_constants(int k, const std::string& kappa_csv, const std::string& out_path,
                  const std::string& format) {
    const TrajectoryPair pair = build_pair(k);
    Json table = Json::array();
    for (double kappa : parse_double_list(kappa_csv)) {
        if (kappa <= 0.0) throw std::invalid_argument("kappa must be positive");
        const GapGeometry gap{kappa};
        const ConstantEstimate c0 = estimate_c0(pair, gap);
        const ConstantEstimate c1 = estimate_c1(pair, gap);
        const RadiusReport rr = compute_r0(pair, gap);
        Json row;
        row["kappa"] = kappa;
        row["c0"] = c0.value;
        row["c1"] = c1.value;
        row["r0"] = rr.r0;
        row["r0_theorem"] = rr.r0_theorem;
        row["r0_conjecture"] = rr.r0_conjecture;
        table.push_back(std::move(row));
    }
    Json doc;
    doc["format"] = "kintraj-constants";
    doc["k"] = k;
    doc["rows"] = table;
    if (format == "text") {
        std::ostringstream os;
        os << "constants  k=" << k << "\n";
        os << "  kappa        c0           c1           r0(1-step)   r0(k-step)\n";
        os.precision(6);
        for (const auto& row : doc["rows"]) {
            os << "  ";
            os.width(12);
            os << row["kappa"].get<double>() << " ";
            os.width(12);
            os << row["c0"].get<double>() << " ";
            os.width(12);
            os << row["c1"].get<double>() << " ";
            os.width(12);
            os << row["r0_theorem"].get<double>() << " ";
            os.width(12);
            os << row["r0_conjecture"].get<double>() << "\n";
        }
        emit(os.str(), out_path);
    } else {
        emit(doc.dump(2), out_path);
    }
    return kExitPass;
}

int cmd_probe(int k, double kappa, const std::string& eps_csv, int resolution,
              long long samples, const std::string& specs_csv, bool audits,
              const std::string& out_path, const std::string& format) {
    const TrajectoryPair pair = build_pair(k);
    const GapGeometry gap{kappa};
    const RadiusReport rr = compute_r0(pair, gap);
    const CylinderGeometry geometry = CylinderGeometry::make(k, kappa, rr.r0);

    std::vector<Subsolution> family;
    std::stringstream ss(specs_csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        const SubsolutionKind kind = subsolution_kind_from_string(token);
        std::map<std::string, double> params;
        if (kind == SubsolutionKind::affine_v)
            params["offset"] = geometry.q_tilde.axes.back().second + 1.0;
        if (kind == SubsolutionKind::v_heat) params["center"] = 3.0;
        family.push_back(make_subsolution(kind, params, geometry));
    }

    ProbeResult result = probe_sweep(family, parse_double_list(eps_csv), geometry, resolution,
                                     rr.r0);
    bool pass = result.geometry_ok;
    for (const auto& row : result.rows)
        if (!std::isfinite(row.ratio)) pass = false;

    Json doc = result.to_json();
    if (audits) {
        Json audit_json;
        const auto cov = change_of_variables_audit(pair, 0.5, -1.0 - kappa, 0.3, -0.2, samples);
        audit_json["change_of_variables"] = {{"relative_error", cov.relative_error},
                                             {"det", cov.det_value},
                                             {"acceptance_rate", cov.acceptance_rate},
                                             {"conditioning_warning", cov.conditioning_warning}};
        if (cov.relative_error > 0.02) pass = false;
        for (double k_exp : {0.0, -0.5}) {
            const auto ga =
                trajectory_gradient_audit(pair, family.front(), k_exp, geometry, samples);
            const std::string key =
                k_exp == 0.0 ? "gradient_flat_weight" : "gradient_singular_weight";
            audit_json[key] = {{"j", ga.j_estimate},
                               {"ratio", ga.ratio},
                               {"containment", ga.containment_fraction},
                               {"violations", ga.violations},
                               {"refinement_delta", ga.refinement_delta}};
            if (ga.violations != 0) pass = false;
        }
        doc["audits"] = std::move(audit_json);
    }
    if (format == "text") {
        std::string text = probe_text(result);
        if (audits) text += "  audits: " + doc["audits"].dump() + "\n";
        emit(text, out_path);
    } else {
        emit(doc.dump(2), out_path);
    }
    return pass ? kExitPass : kExitCheckFailure;
}

int cmd_plot_data(int k, int samples, const std::string& end0_csv, const std::string& end1_csv,
                  const std::string& out_path) {
    const TrajectoryPair pair = build_pair(k);
    std::vector<double> e0, e1;
    if (end0_csv.empty()) {
        e0.push_back(0.0);
        for (int i = 0; i < k; ++i) e0.push_back(0.5);
        e0.push_back(0.9);
    } else {
        e0 = parse_double_list(end0_csv);
    }
    if (end1_csv.empty()) {
        e1.push_back(-2.0);
        for (int i = 0; i < k; ++i) e1.push_back(-0.5);
        e1.push_back(0.6);
    } else {
        e1 = parse_double_list(end1_csv);
    }
    const std::size_t need = static_cast<std::size_t>(k) + 2;
    if (e0.size() != need || e1.size() != need)
        throw std::invalid_argument("endpoints need " + std::to_string(need) + " coordinates");
    if (!(e1[0] < e0[0]))
        throw std::invalid_argument("the r = 1 endpoint must lie strictly earlier in time");

    const CompiledPair compiled(pair);
    std::ostringstream os;
    os << "r\tt";
    for (int i = 1; i <= k; ++i) os << "\tx" << i;
    os << "\tv\n";
    os.precision(17);
    std::vector<double> gamma;
    for (int i = 0; i < samples; ++i) {
        const double r = double(i) / double(samples - 1);
        compiled.eval_path(e1, e0, r, gamma);
        os << r;
        for (double c : gamma) os << "\t" << c;
        os << "\n";
    }
    emit(os.str(), out_path);
    return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"kinetic trajectory construction, verification and inequality probing"};
    app.require_subcommand(1);

    int k = 1;
    double kappa = 1.0;
    std::string out_path, format = "structured", checks, input;
    std::string eps_csv = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
    std::string specs_csv = "constant,affine_v,v_heat";
    std::string end0_csv, end1_csv;
    int resolution = 64;
    long long samples = 200000;
    bool audits = false;
    int plot_samples = 201;

    const auto add_common = [&](CLI::App* cmd, bool with_kappa) {
        cmd->add_option("--k", k, "step count")->check(CLI::Range(1, kMaxSteps));
        if (with_kappa)
            cmd->add_option("--kappa", kappa, "time gap parameter")
                ->check(CLI::PositiveNumber);
        cmd->add_option("--out", out_path, "output path (stdout when omitted)");
        cmd->add_option("--format", format, "structured | text")
            ->check(CLI::IsMember({"structured", "text"}));
    };

    CLI::App* build = app.add_subcommand("build", "construct a pair and emit its archive");
    add_common(build, false);

    CLI::App* verify = app.add_subcommand("verify", "run checks and emit a report");
    add_common(verify, true);
    verify->add_option("--checks", checks,
                       "comma list: structural,det,inverse,detb,c0,c1,r0,baseline");
    verify->add_option("--input", input, "verify an existing archive instead of building");

    CLI::App* constants = app.add_subcommand("constants", "estimate c0, c1, r0 over kappa");
    std::string kappa_csv = "0.5,1,2";
    constants->add_option("--k", k, "step count")->check(CLI::Range(1, kMaxSteps));
    constants->add_option("--kappa", kappa_csv, "comma list of gap parameters");
    constants->add_option("--out", out_path, "output path (stdout when omitted)");
    constants->add_option("--format", format, "structured | text")
        ->check(CLI::IsMember({"structured", "text"}));

    CLI::App* probe = app.add_subcommand("probe", "numeric inequality probe");
    add_common(probe, true);
    probe->add_option("--eps", eps_csv, "comma list of epsilons in (0,1)");
    probe->add_option("--resolution", resolution, "quadrature cells per axis")
        ->check(CLI::Range(8, 1024));
    probe->add_option("--samples", samples, "Monte Carlo samples for audits");
    probe->add_option("--specs", specs_csv, "comma list of subsolution kinds");
    probe->add_flag("--audits", audits, "also run the substitution audits");

    CLI::App* plot = app.add_subcommand("plot-data", "sample a path for plotting");
    plot->add_option("--k", k, "step count")->check(CLI::Range(1, kMaxSteps));
    plot->add_option("--samples", plot_samples, "points along the path")
        ->check(CLI::Range(2, 1000000));
    plot->add_option("--end0", end0_csv, "r=0 endpoint: t,x1..xk,v");
    plot->add_option("--end1", end1_csv, "r=1 endpoint: t,x1..xk,v");
    plot->add_option("--out", out_path, "output path (stdout when omitted)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (build->parsed()) return cmd_build(k, out_path);
        if (verify->parsed()) return cmd_verify(k, kappa, checks, input, out_path, format);
        if (constants->parsed()) return cmd_constants(k, kappa_csv, out_path, format);
        if (probe->parsed())
            return cmd_probe(k, kappa, eps_csv, resolution, samples, specs_csv, audits,
                             out_path, format);
        if (plot->parsed()) return cmd_plot_data(k, plot_samples, end0_csv, end1_csv, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args);
}

}  // namespace kintraj
