/*
 * sinetype — batch driver for the zero/reconstruction/stability pipeline.
 *
 * Exit codes: 0 success, 2 validation error (bad flags, malformed input),
 * 3 numerical failure (the error name goes to standard error).  Identical
 * configuration and seed produce byte-identical artifacts.
 */

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sinetype/completion.hpp"
#include "sinetype/csv.hpp"
#include "sinetype/errors.hpp"
#include "sinetype/json_io.hpp"
#include "sinetype/moments.hpp"
#include "sinetype/products.hpp"
#include "sinetype/rng.hpp"
#include "sinetype/stability.hpp"
#include "sinetype/sturm_liouville.hpp"
#include "sinetype/winding.hpp"
#include "sinetype/zero_finder.hpp"

namespace {

using namespace sinetype;

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string joined(const std::string& out_dir, const std::string& name) {
    std::filesystem::create_directories(out_dir);
    return (std::filesystem::path(out_dir) / name).string();
}

MainPart profile_main(int N) {
    std::vector<Complex> coeffs = N == 1 ? std::vector<Complex>{0.0, 1.0}
                                         : std::vector<Complex>{1.0};
    return MainPart(SineTypeBase::sin_scaled(kPi), std::move(coeffs));
}

// ── zeros ───────────────────────────────────────────────────────────────────

int run_zeros(const std::string& fn_path, int n_max, const std::string& out_dir) {
    ThetaFunction theta = read_theta(fn_path);
    LocalizationReport report = localize_zeros(theta, n_max);
    write_text_file(joined(out_dir, "zeros.csv"), zeros_to_csv(report.zeros, theta.main()));
    std::cout << "zeros: " << report.zeros.size() << " entries (head " << report.head_count
              << "), min boundary clearance " << format_real(report.min_boundary_clearance)
              << "\n";
    return 0;
}

// ── reconstruct ─────────────────────────────────────────────────────────────

int run_reconstruct(const std::string& fn_path, const std::string& zeros_path, int M, int K,
                    const std::string& out_dir) {
    ThetaFunction theta = read_theta(fn_path);
    ZeroSequence zeros = zeros_from_csv(read_text_file(zeros_path));
    MomentSystem system = build_moment_system(zeros, theta.main(), M, K);
    FrameEstimate frame = frame_bounds_estimate(system);
    InversionResult inv = invert_to_tail(system);
    write_text_file(joined(out_dir, "tail_recovered.json"), tail_to_json(inv.tail));
    const FourierTail* reference = theta.tail().is_zero() ? nullptr : &theta.tail();
    write_text_file(joined(out_dir, "recon_report.csv"),
                    recon_report_to_csv(inv.residual_norm, frame.m_est, frame.M_est, inv.tail,
                                        reference));
    std::cout << "reconstruct: residual " << format_real(inv.residual_norm) << ", frame ["
              << format_real(frame.m_est) << ", " << format_real(frame.M_est) << "]\n";
    return 0;
}

// ── complete ────────────────────────────────────────────────────────────────

int run_complete(const std::string& fn_path, const std::string& zeros_path, int M,
                 const std::string& out_dir) {
    ThetaFunction theta = read_theta(fn_path);
    ZeroSequence partial = zeros_from_csv(read_text_file(zeros_path));
    if (partial.first_index() < 1) partial = partial.from_index(1);
    ZeroSequence full = complete_zeros(partial, theta.main(), M);
    write_text_file(joined(out_dir, "zeros_completed.csv"), zeros_to_csv(full, theta.main()));
    std::cout << "complete: head indices " << full.first_index() << ".." << 0 << " recovered\n";
    return 0;
}

// ── stability ───────────────────────────────────────────────────────────────

int run_stability(const std::string& fn_path, int profile, std::vector<double> r_values,
                  int trials, std::uint64_t seed, int M, int n_max, double decay,
                  const std::string& out_dir) {
    MainPart main = fn_path.empty() ? profile_main(profile) : read_theta(fn_path).main();
    std::vector<StabilityRecord> all_records;
    std::vector<LipschitzEstimate> summaries;
    for (std::size_t i = 0; i < r_values.size(); ++i) {
        BallSpec spec;
        spec.r = r_values[i];
        spec.n_max = n_max;
        spec.decay_exponent = decay;
        std::uint64_t run_seed = mix_seed(seed, 0x5eedULL + i);
        LipschitzEstimate est = empirical_lipschitz(spec, trials, run_seed, main, M);
        all_records.insert(all_records.end(), est.records.begin(), est.records.end());
        summaries.push_back(std::move(est));
    }
    write_text_file(joined(out_dir, "stability_records.csv"),
                    stability_records_to_csv(all_records));
    write_text_file(joined(out_dir, "c_r_summary.csv"), cr_summary_to_csv(summaries));
    for (const LipschitzEstimate& est : summaries)
        std::cout << "stability: r " << format_real(est.r) << ", kept " << est.records.size()
                  << "/" << est.trials << ", C_r_est " << format_real(est.c_r_est) << "\n";
    return 0;
}

// ── sturm-liouville ─────────────────────────────────────────────────────────

Spectrum spectrum_from_theta(const ThetaFunction& theta, int count) {
    LocalizationReport report = localize_zeros(theta, 2 * count + 1);
    std::vector<Complex> lambdas(count);
    for (int k = 1; k <= count; ++k) {
        Complex plus = report.zeros.at(2 * k);
        Complex minus = report.zeros.at(2 * k + 1);
        lambdas[k - 1] = 0.5 * (plus * plus + minus * minus);
    }
    return Spectrum(std::move(lambdas));
}

int run_sturm(const std::string& spec_a_path, const std::string& spec_b_path,
              const std::string& fixture_path, int count, int profile, int M,
              const std::string& out_dir) {
    std::vector<Theorem12Report> reports;
    if (!fixture_path.empty()) {
        // mode JSON: {"u": [[re,im],...]} or {"v": [[re,im],...]}
        ThetaFunction theta = [&] {
            std::string text = read_text_file(fixture_path);
            auto doc = nlohmann::json::parse(text);
            std::vector<Complex> modes;
            const char* key = doc.contains("u") ? "u" : "v";
            if (!doc.contains(key)) throw std::invalid_argument("fixture needs \"u\" or \"v\"");
            for (const auto& item : doc[key])
                modes.emplace_back(item.at(0).get<double>(), item.at(1).get<double>());
            return doc.contains("u") ? theta_from_u(modes) : theta_from_v(modes);
        }();
        int N = theta.main().degree();
        Spectrum generated = spectrum_from_theta(theta, count);
        reports.push_back(theorem12_experiment(generated, unperturbed_spectrum(count), N, M));
    } else {
        Spectrum a = spectrum_from_csv(read_text_file(spec_a_path));
        Spectrum b = spectrum_from_csv(read_text_file(spec_b_path));
        reports.push_back(theorem12_experiment(a, b, profile, M));
    }
    write_text_file(joined(out_dir, "experiment.csv"), experiments_to_csv(reports));
    for (const Theorem12Report& rep : reports)
        std::cout << "sturm-liouville: lhs " << format_real(rep.lhs) << ", rhs "
                  << format_real(rep.rhs) << ", ratio " << format_real(rep.ratio) << "\n";
    return 0;
}

// ── verify ──────────────────────────────────────────────────────────────────

int run_verify(const std::string& fn_path, int n_max) {
    ThetaFunction theta = read_theta(fn_path);
    const MainPart& main = theta.main();
    int M = theta.tail().cutoff();
    n_max = std::max(n_max, 2 * M + 3);

    int failures = 0;
    auto check = [&](const std::string& name, auto&& body) {
        try {
            bool ok = body();
            std::cout << (ok ? "ok:   " : "FAIL: ") << name << "\n";
            if (!ok) ++failures;
        } catch (const std::exception& e) {
            std::cout << "FAIL: " << name << " (" << e.what() << ")\n";
            ++failures;
        }
    };

    LocalizationReport loc = localize_zeros(theta, n_max);
    ResidualReport res = residuals(loc.zeros, main);

    check("winding count matches localized zeros", [&] {
        double sep = main.base().separation();
        double half = std::abs(main.lattice_point(std::min(n_max, 9))) + 0.5 * sep;
        Rect rect(Complex(-half, -2.0), Complex(half, 2.0));
        int inside = 0;
        for (Complex z : loc.zeros.entries())
            if (rect.contains(z)) ++inside;
        return winding_count([&](Complex z) { return theta.eval(z); }, rect) == inside;
    });

    check("residual tail decreasing with summable profile", [&] {
        for (std::size_t i = 1; i < res.tail_profile.size(); ++i)
            if (res.tail_profile[i] > res.tail_profile[i - 1] + 1e-15) return false;
        return res.l2_norm < 1e6;
    });

    check("product form matches direct evaluation", [&] {
        for (int j = 0; j < 5; ++j) {
            Complex z(0.37 + 0.61 * j, 0.4 - 0.15 * j);
            Complex direct = theta.eval(z);
            Complex prod = product_eval_ratio(main, loc.zeros, z, 1e-4);
            if (std::abs(prod - direct) > 1e-5 * std::max(1.0, std::abs(direct))) return false;
        }
        return true;
    });

    check("moment inversion recovers the tail", [&] {
        InversionResult inv = invert_to_tail(build_moment_system(loc.zeros, main, M));
        double worst = 0.0;
        for (int k = -M; k <= M; ++k)
            worst = std::max(worst, std::abs(inv.tail.mode(k) - theta.tail().mode(k)));
        return worst < 1e-4;
    });

    check("arbitrary-head completion stays in class", [&] {
        if (main.degree() == 0) return true; // no head to vary
        Eq13Report rep = verify_eq13(std::vector<Complex>(std::size_t(main.degree()), 0.31),
                                     loc.zeros.from_index(1), main, M);
        return rep.fit_residual < 1e-3;
    });

    check("tail transform satisfies the Plancherel identity", [&] {
        if (theta.tail().is_zero()) return true;
        ParsevalReport rep = parseval_l2(theta.tail());
        return std::abs(rep.time_side - rep.freq_side) <= 1e-4 * rep.freq_side;
    });

    if (failures > 0) {
        std::cerr << "verify: " << failures << " check(s) failed\n";
        return 1;
    }
    std::cout << "verify: all checks passed\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"laboratory for sine-type functions with integral tails"};
    app.require_subcommand(1);

    std::string fn_path, zeros_path, out_dir = ".";
    std::string spec_a_path, spec_b_path, fixture_path;
    int n_max = 200, M = 16, K = 0, trials = 100, profile = 1, count = 64;
    double decay = 1.0;
    std::vector<double> r_values;
    std::uint64_t seed = 0;
    bool seed_set = false;

    auto* zeros_cmd = app.add_subcommand("zeros", "localize zeros of a function");
    zeros_cmd->add_option("--fn", fn_path, "function JSON")->required();
    zeros_cmd->add_option("--nmax", n_max, "highest zero index");
    zeros_cmd->add_option("--out", out_dir, "output directory");

    auto* rec_cmd = app.add_subcommand("reconstruct", "recover the tail from zeros");
    rec_cmd->add_option("--fn", fn_path, "function JSON")->required();
    rec_cmd->add_option("--zeros", zeros_path, "zeros CSV")->required();
    rec_cmd->add_option("--modes", M, "mode cutoff M");
    rec_cmd->add_option("--kmax", K, "equations to use (0 = all)");
    rec_cmd->add_option("--out", out_dir, "output directory");

    auto* comp_cmd = app.add_subcommand("complete", "recover missing head zeros");
    comp_cmd->add_option("--fn", fn_path, "function JSON")->required();
    comp_cmd->add_option("--zeros", zeros_path, "partial zeros CSV (n >= 1)")->required();
    comp_cmd->add_option("--modes", M, "mode cutoff M");
    comp_cmd->add_option("--out", out_dir, "output directory");

    auto* stab_cmd = app.add_subcommand("stability", "empirical Lipschitz experiment");
    stab_cmd->add_option("--fn", fn_path, "function JSON (overrides --profile)");
    stab_cmd->add_option("--profile", profile, "main-part preset: 0 or 1")
        ->check(CLI::IsMember({0, 1}));
    stab_cmd->add_option("--r", r_values, "ball radius (repeatable)")->required();
    stab_cmd->add_option("--trials", trials, "trials per radius");
    stab_cmd->add_option("--seed", seed, "base seed")->required()
        ->each([&](const std::string&) { seed_set = true; });
    stab_cmd->add_option("--modes", M, "mode cutoff M");
    stab_cmd->add_option("--nmax", n_max, "zeros per sampled sequence");
    stab_cmd->add_option("--decay", decay, "residual envelope exponent");
    stab_cmd->add_option("--out", out_dir, "output directory");

    auto* sl_cmd = app.add_subcommand("sturm-liouville", "spectral stability experiment");
    sl_cmd->add_option("--spec-a", spec_a_path, "spectrum CSV");
    sl_cmd->add_option("--spec-b", spec_b_path, "spectrum CSV");
    sl_cmd->add_option("--fixture", fixture_path, "mode JSON {\"u\": ...} or {\"v\": ...}");
    sl_cmd->add_option("--count", count, "eigenvalues for generated fixtures");
    sl_cmd->add_option("--profile", profile, "0 or 1")->check(CLI::IsMember({0, 1}));
    sl_cmd->add_option("--modes", M, "mode cutoff M");
    sl_cmd->add_option("--out", out_dir, "output directory");

    auto* ver_cmd = app.add_subcommand("verify", "run the invariant suite on a function");
    ver_cmd->add_option("--fn", fn_path, "function JSON")->required();
    ver_cmd->add_option("--nmax", n_max, "zeros to localize");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (zeros_cmd->parsed()) return run_zeros(fn_path, n_max, out_dir);
        if (rec_cmd->parsed()) return run_reconstruct(fn_path, zeros_path, M, K, out_dir);
        if (comp_cmd->parsed()) return run_complete(fn_path, zeros_path, M, out_dir);
        if (stab_cmd->parsed()) {
            if (!seed_set) throw std::invalid_argument("--seed is required");
            return run_stability(fn_path, profile, r_values, trials, seed, M, n_max, decay,
                                 out_dir);
        }
        if (sl_cmd->parsed()) {
            bool have_pair = !spec_a_path.empty() && !spec_b_path.empty();
            if (!have_pair && fixture_path.empty())
                throw std::invalid_argument("need --spec-a/--spec-b or --fixture");
            return run_sturm(spec_a_path, spec_b_path, fixture_path, count, profile, M, out_dir);
        }
        if (ver_cmd->parsed()) return run_verify(fn_path, n_max);
    } catch (const NumericalError& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
