#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qcoh/channels.hpp"
#include "qcoh/coherence.hpp"
#include "qcoh/divergences.hpp"
#include "qcoh/harness.hpp"
#include "qcoh/linalg.hpp"
#include "qcoh/suites.hpp"

namespace qcoh::cli {

namespace {

// 12 significant digits: below double noise, above every test tolerance.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_probs(const RealVector& p) {
    std::string s;
    for (Eigen::Index j = 0; j < p.size(); ++j) {
        if (j) s += " ";
        s += fmt(p[j]);
    }
    return s;
}

CoherenceMeasureId parse_measure(const std::string& name, double alpha, const std::string& fname,
                                 int variant) {
    if (name == "c_rel") return CoherenceMeasureId::c_rel();
    if (name == "cr1") return CoherenceMeasureId::cr1(alpha);
    if (name == "cr2") return CoherenceMeasureId::cr2(alpha);
    if (name == "cr3") return CoherenceMeasureId::cr3(alpha);
    if (name == "ct1") return CoherenceMeasureId::ct1(alpha);
    if (name == "ct2") return CoherenceMeasureId::ct2(alpha);
    if (name == "ct_new") return CoherenceMeasureId::ct_new(alpha);
    if (name == "cr_new") return CoherenceMeasureId::cr_new(alpha);
    if (name == "c_hs") return CoherenceMeasureId::c_hs();
    if (name == "c1_improved") return CoherenceMeasureId::c1_improved(alpha);
    if (name == "c2_improved") return CoherenceMeasureId::c2_improved(alpha);
    if (name == "c_f") {
        const CatalogFunction f = fname == "tsallis_f" ? CatalogFunction::tsallis_f(alpha)
                                                       : CatalogFunction::neg_log();
        return CoherenceMeasureId::c_f(f, variant);
    }
    throw ParamOutOfRange("unknown measure '" + name + "'");
}

struct Options {
    std::string in_path;
    std::string out_path;
    std::string family = "tsallis";
    std::string measure;
    std::string fname = "neg_log";
    std::string suite;
    std::string figure;
    double alpha = 0.5;
    double tol = 1e-9;
    double b = 0.9;
    double resolution = 1e-3;
    bool oracle = false;
    bool alpha_given = false;
    int variant = 1;
    int trials = 200;
    int dim = 3;
    int grid = 101;
    std::uint64_t seed = 42;
};

int run_entropy(const Options& opt, std::ostream& out) {
    const DensityMatrix rho = validate_density(read_matrix_file(opt.in_path), opt.tol);
    double value = 0.0;
    if (opt.family == "vn") {
        value = von_neumann_entropy(rho);
    } else if (opt.family == "tsallis") {
        value = tsallis_entropy(rho, AlphaParam::tsallis(opt.alpha));
    } else if (opt.family == "renyi") {
        value = renyi_entropy(rho, AlphaParam::renyi(opt.alpha));
    } else {
        throw ParamOutOfRange("unknown family '" + opt.family + "'");
    }
    out << fmt(value) << "\n";
    return 0;
}

int run_coherence(const Options& opt, std::ostream& out) {
    const DensityMatrix rho = validate_density(read_matrix_file(opt.in_path), opt.tol);
    const CoherenceMeasureId id = parse_measure(opt.measure, opt.alpha, opt.fname, opt.variant);
    out << fmt(coherence(rho, id)) << "\n";
    return 0;
}

int run_closest(const Options& opt, std::ostream& out) {
    const DensityMatrix rho = validate_density(read_matrix_file(opt.in_path), opt.tol);
    const EntropyFamily family =
        opt.family == "renyi" ? EntropyFamily::Renyi : EntropyFamily::Tsallis;
    if (opt.family != "renyi" && opt.family != "tsallis") {
        throw ParamOutOfRange("closest supports families tsallis|renyi");
    }
    const auto delta = dephase_alpha(rho, opt.alpha);
    const double value = family == EntropyFamily::Tsallis
                             ? coherence(rho, CoherenceMeasureId::ct1(opt.alpha))
                             : coherence(rho, CoherenceMeasureId::cr1(opt.alpha));
    out << "delta_alpha: " << fmt_probs(delta.state.probs) << "\n";
    out << "value: " << fmt(value) << "\n";
    if (opt.oracle) {
        const auto result =
            closest_incoherent_oracle(rho, opt.alpha, family, opt.resolution);
        out << "oracle: " << fmt_probs(result.minimizer.probs) << "\n";
        out << "oracle_value: " << fmt(result.value) << "\n";
        out << "trace_norm_gap: "
            << fmt((result.minimizer.probs - delta.state.probs).cwiseAbs().sum()) << "\n";
        out << "value_gap: " << fmt(std::abs(result.value - value)) << "\n";
    }
    return 0;
}

int run_channel_classify(const Options& opt, std::ostream& out) {
    const KrausChannel ch = read_channel_file(opt.in_path);
    const ChannelClass cls = classify(ch);
    out << "io: " << (cls.is_io ? "true" : "false") << "\n";
    out << "sio: " << (cls.is_sio ? "true" : "false") << "\n";
    out << "dio: " << (cls.is_dio ? "true" : "false") << "\n";
    out << "gio: " << (cls.is_gio ? "true" : "false") << "\n";
    if (opt.alpha_given) {
        if (!cls.is_gio) {
            out << "alpha_gio[" << fmt(opt.alpha) << "]: not applicable (channel is not GIO)\n";
        } else {
            const auto cert = is_alpha_gio(ch, opt.alpha, opt.trials, opt.seed);
            out << "alpha_gio[" << fmt(opt.alpha) << "]: " << (cert.certified ? "true" : "false")
                << " (trials=" << cert.trials << ", max_residual=" << fmt(cert.max_residual)
                << ")\n";
        }
    }
    return 0;
}

int run_check(const Options& opt, std::ostream& out) {
    const suites::Config cfg{opt.trials, opt.dim, opt.seed};
    const CheckReport report = suites::run_suite(opt.suite, cfg);
    out << report << "\n";
    return report.passed() ? 0 : 1;
}

int run_figure(const Options& opt, std::ostream& out) {
    FigureId which;
    if (opt.figure == "FIG1") {
        which = FigureId::Fig1;
    } else if (opt.figure == "FIG2") {
        which = FigureId::Fig2;
    } else if (opt.figure == "FIG3") {
        which = FigureId::Fig3;
    } else {
        throw ParamOutOfRange("figure must be FIG1, FIG2 or FIG3");
    }
    const auto grid = default_alpha_grid(opt.grid);
    const auto records = reproduce_figure(which, grid, opt.b);
    if (opt.out_path.empty()) {
        write_scan_csv(out, records);
    } else {
        std::ofstream file(opt.out_path);
        if (!file) throw Error("cannot open '" + opt.out_path + "' for writing");
        write_scan_csv(file, records);
    }
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"quantum-coherence workbench"};
    app.require_subcommand(1);

    auto* entropy = app.add_subcommand("entropy", "entropy of a state read from a matrix file");
    entropy->add_option("--in", opt.in_path, "matrix file")->required();
    entropy->add_option("--family", opt.family, "tsallis|renyi|vn");
    entropy->add_option("--alpha", opt.alpha, "entropy order");
    entropy->add_option("--tol", opt.tol, "validation tolerance");

    auto* coh = app.add_subcommand("coherence", "coherence measure of a state");
    coh->add_option("--in", opt.in_path, "matrix file")->required();
    coh->add_option("--measure", opt.measure, "measure id")->required();
    coh->add_option("--alpha", opt.alpha, "measure order");
    coh->add_option("--f", opt.fname, "neg_log|tsallis_f (for c_f)");
    coh->add_option("--variant", opt.variant, "f-entropy variant (1|2)");
    coh->add_option("--tol", opt.tol, "validation tolerance");

    auto* closest = app.add_subcommand("closest", "closest incoherent state");
    closest->add_option("--in", opt.in_path, "matrix file")->required();
    closest->add_option("--alpha", opt.alpha, "divergence order")->required();
    closest->add_option("--family", opt.family, "tsallis|renyi");
    closest->add_flag("--oracle", opt.oracle, "also run the brute-force minimizer");
    closest->add_option("--resolution", opt.resolution, "simplex grid step");
    closest->add_option("--tol", opt.tol, "validation tolerance");

    auto* channel = app.add_subcommand("channel", "channel utilities");
    auto* classify_cmd = channel->add_subcommand("classify", "classify a Kraus channel");
    classify_cmd->add_option("--in", opt.in_path, "channel file")->required();
    auto* alpha_opt = classify_cmd->add_option("--alpha", opt.alpha, "alpha-GIO certificate order");
    classify_cmd->add_option("--trials", opt.trials, "certificate trials");
    classify_cmd->add_option("--seed", opt.seed, "certificate seed");

    auto* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("suite", opt.suite, "one of: positivity faithfulness comparison invariance "
                                          "mono-gio strong-mono modified-strong additivity "
                                          "continuity oracle")
        ->required();
    check->add_option("--trials", opt.trials, "trial count");
    check->add_option("--dim", opt.dim, "state dimension");
    check->add_option("--seed", opt.seed, "rng seed");

    auto* figure = app.add_subcommand("figure", "emit a counterexample scan as CSV");
    figure->add_option("figure", opt.figure, "FIG1|FIG2|FIG3")->required();
    figure->add_option("--b", opt.b, "FIG2 parameter b");
    figure->add_option("--grid", opt.grid, "number of alpha grid points");
    figure->add_option("--out", opt.out_path, "output CSV path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    opt.alpha_given = alpha_opt->count() > 0;

    try {
        if (entropy->parsed()) return run_entropy(opt, out);
        if (coh->parsed()) return run_coherence(opt, out);
        if (closest->parsed()) return run_closest(opt, out);
        if (channel->parsed()) {
            if (!classify_cmd->parsed()) {
                err << "channel requires the classify subcommand\n";
                return 2;
            }
            return run_channel_classify(opt, out);
        }
        if (check->parsed()) return run_check(opt, out);
        if (figure->parsed()) return run_figure(opt, out);
        err << "no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const NotHermitian& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const NotPositive& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const TraceMismatch& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const CompletenessViolation& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const DimensionMismatch& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const AlphaOutOfRange& e) {
        err << "flag error: " << e.what() << "\n";
        return 2;
    } catch (const ParamOutOfRange& e) {
        err << "flag error: " << e.what() << "\n";
        return 2;
    } catch (const ResolutionTooCoarse& e) {
        err << "flag error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace qcoh::cli
