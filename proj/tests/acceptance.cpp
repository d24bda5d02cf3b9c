// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Run with no arguments for the full suite or with a criterion number.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcoh/harness.hpp"
#include "qcoh/suites.hpp"

using namespace qcoh;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

Outcome figure_threshold(FigureId which, double alpha, double threshold, double budget_s,
                         double b = 0.9) {
    const auto start = Clock::now();
    const double grid[] = {alpha};
    const auto pts = evaluate_figure(which, grid, b);
    const double elapsed = seconds_since(start);
    const FigurePoint& p = pts.front();
    const double dl = std::abs(p.lhs_closed - p.lhs_pipeline);
    const double dr = std::abs(p.rhs_closed - p.rhs_pipeline);
    const bool paths_ok = dl <= 1e-9 && dr <= 1e-9;
    const bool inequality = p.lhs_pipeline < threshold && threshold < p.rhs_pipeline;
    const bool timed = elapsed < budget_s;
    std::ostringstream os;
    os << "lhs=" << fmt(p.lhs_pipeline) << " rhs=" << fmt(p.rhs_pipeline) << " threshold="
       << fmt(threshold) << " path-deltas=(" << fmt(dl) << "," << fmt(dr) << ") elapsed="
       << fmt(elapsed) << "s";
    if (!inequality) {
        os << "; inequality " << fmt(p.lhs_pipeline) << " < " << fmt(threshold) << " < "
           << fmt(p.rhs_pipeline) << " FAILED";
    }
    return {paths_ok && inequality && timed, os.str()};
}

Outcome criterion1() { return figure_threshold(FigureId::Fig1, 0.2, 0.5, 1.0); }
Outcome criterion2() { return figure_threshold(FigureId::Fig2, 0.21101, 0.35, 1.0, 0.9); }

Outcome criterion3() {
    Outcome out = figure_threshold(FigureId::Fig3, 0.20303, 0.42, 1.0);
    // exact post-measurement data
    ComplexVector v(2);
    v << std::sqrt(0.75), std::sqrt(0.25);
    const auto outcomes = post_measurement(make_fig3_gio(), DensityMatrix::pure(v));
    bool exact = outcomes.size() == 2;
    if (exact) {
        exact = std::abs(outcomes[0].probability - 9.0 / 16.0) <= 1e-12 &&
                std::abs(outcomes[1].probability - 7.0 / 16.0) <= 1e-12;
        const RealVector xi1 = outcomes[0].state.matrix().diagonal().real();
        const RealVector xi2 = outcomes[1].state.matrix().diagonal().real();
        exact = exact && std::abs(xi1[0] - 2.0 / 3.0) <= 1e-12 &&
                std::abs(xi1[1] - 1.0 / 3.0) <= 1e-12 && std::abs(xi2[0] - 6.0 / 7.0) <= 1e-12 &&
                std::abs(xi2[1] - 1.0 / 7.0) <= 1e-12;
    }
    out.pass = out.pass && exact;
    out.detail += exact ? "; p=(9/16,7/16), xi1=(2/3,1/3), xi2=(6/7,1/7) to 1e-12"
                        : "; post-measurement data NOT exact to 1e-12";
    return out;
}

Outcome criterion4() {
    const auto start = Clock::now();
    suites::Config cfg;
    cfg.trials = 200;  // suites::oracle runs trials/2 qubit and trials/4 qutrit states
    cfg.seed = 42;
    const CheckReport report = suites::oracle(cfg);
    const double elapsed = seconds_since(start);
    std::ostringstream os;
    os << report.trials << " states x 5 alphas x 2 families, tolerances 2e-3/1e-5, violations="
       << report.violations.size() << ", elapsed=" << fmt(elapsed) << "s";
    return {report.passed() && elapsed < 120.0, os.str()};
}

Outcome criterion5() {
    SplitMixRng rng(42);
    const double grid[] = {0.2, 0.5, 0.8, 1.3, 1.7, 2.0};
    int checks = 0;
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        SplitMixRng sub = rng.split(static_cast<std::uint64_t>(t));
        const int dim = 2 + static_cast<int>(sub.next_u64() % 3);
        const DensityMatrix rho = random_state(dim, Purity::Mixed, sub);
        for (double a : grid) {
            const double cr_new = coherence(rho, CoherenceMeasureId::cr_new(a));
            const double cr1 = coherence(rho, CoherenceMeasureId::cr1(a));
            const double rel = renyi_relative_entropy(
                rho, dephase_alpha(rho, a).state.to_density(), AlphaParam::renyi(a));
            const double n = dephase_alpha(rho, a).normalization;
            const double tr = std::real(matrix_power(rho, a).trace());
            const double ct_new = coherence(rho, CoherenceMeasureId::ct_new(a));
            const double ct1 = coherence(rho, CoherenceMeasureId::ct1(a));
            worst = std::max({worst, std::abs(cr_new - cr1), std::abs(cr1 - rel),
                              std::abs(ct_new - ct1 * tr / std::pow(n, a))});
            ++checks;
        }
    }
    std::ostringstream os;
    os << checks << " identity checks, worst deviation " << fmt(worst) << " (tol 1e-9)";
    return {worst <= 1e-9, os.str()};
}

Outcome criterion6() {
    SplitMixRng rng(43);
    int violations = 0;
    for (int t = 0; t < 500; ++t) {
        SplitMixRng sub = rng.split(static_cast<std::uint64_t>(t));
        const int dim = 2 + static_cast<int>(sub.next_u64() % 3);
        const DensityMatrix rho = random_state(dim, Purity::Mixed, sub);
        for (double a : {0.2, 0.5, 0.8}) {
            if (coherence(rho, CoherenceMeasureId::ct_new(a)) <
                coherence(rho, CoherenceMeasureId::ct1(a)) - 1e-10)
                ++violations;
        }
        for (double a : {1.3, 1.7, 1.95}) {
            if (coherence(rho, CoherenceMeasureId::ct_new(a)) >
                coherence(rho, CoherenceMeasureId::ct1(a)) + 1e-10)
                ++violations;
        }
    }
    std::ostringstream os;
    os << "500 states x 6 alphas, margin 1e-10, violations=" << violations;
    return {violations == 0, os.str()};
}

Outcome criterion7() {
    SplitMixRng rng(44);
    CheckReport merged;
    merged.name = "continuity";
    int stream = 0;
    for (int d : {2, 3, 4}) {
        for (double a : {0.3, 0.5, 0.8, 1.3, 1.7}) {
            SplitMixRng s1 = rng.split(static_cast<std::uint64_t>(stream++));
            SplitMixRng s2 = rng.split(static_cast<std::uint64_t>(stream++));
            merged.merge(check_continuity(BoundKind::CTPure, a, d, 500, s1));
            merged.merge(check_continuity(BoundKind::CRPure, a, d, 500, s2));
        }
        for (const auto& f : {CatalogFunction::neg_log(), CatalogFunction::tsallis_f(0.5),
                              CatalogFunction::tsallis_f(1.5)}) {
            SplitMixRng s = rng.split(static_cast<std::uint64_t>(stream++));
            merged.merge(check_continuity(BoundKind::FCoherence, f, d, 500, s));
        }
    }
    std::ostringstream os;
    os << merged.trials << " pairs across d={2,3,4}, margin 1e-9, violations="
       << merged.violations.size();
    return {merged.passed(), os.str()};
}

Outcome criterion8() {
    SplitMixRng rng(45);
    std::ostringstream os;
    bool pass = true;

    // diagonal-unitary invariance, 200 trials
    double worst_inv = 0.0;
    for (int t = 0; t < 200; ++t) {
        SplitMixRng sub = rng.split(static_cast<std::uint64_t>(t));
        const DensityMatrix rho = random_state(3, Purity::Mixed, sub);
        const KrausChannel u = random_diag_unitary_mixture(3, 1, sub);
        for (double a : {0.2, 0.5, 0.8, 1.3, 1.7, 2.0}) {
            const CoherenceMeasureId id = CoherenceMeasureId::ct_new(a);
            worst_inv = std::max(
                worst_inv, std::abs(coherence(apply(u, rho), id) - coherence(rho, id)));
        }
    }
    pass = pass && worst_inv <= 1e-9;
    os << "diag-unitary invariance worst=" << fmt(worst_inv);

    // no CT_NEW monotonicity violation under alpha-GIO-certified channels
    std::vector<DensityMatrix> states;
    for (int t = 0; t < 20; ++t) {
        SplitMixRng sub = rng.split(5000 + static_cast<std::uint64_t>(t));
        states.push_back(random_state(3, Purity::Mixed, sub));
    }
    int certified = 0, mono_violations = 0;
    for (int c = 0; c < 30; ++c) {
        SplitMixRng sub = rng.split(6000 + static_cast<std::uint64_t>(c));
        const KrausChannel ch = c % 2 == 0 ? random_diag_unitary_mixture(3, 1, sub)
                                           : random_gio(3, 2, sub);
        for (double a : {0.3, 0.7, 1.5}) {
            if (!is_alpha_gio(ch, a, 40, sub.next_u64()).certified) continue;
            ++certified;
            mono_violations += static_cast<int>(
                check_monotonicity(CoherenceMeasureId::ct_new(a), ch, states)
                    .violations.size());
        }
    }
    pass = pass && certified > 0 && mono_violations == 0;
    os << "; alpha-GIO certified=" << certified << " mono-violations=" << mono_violations;

    // strong-monotonicity equality under diagonal-unitary mixtures
    double worst_eq = 0.0;
    for (int t = 0; t < 200; ++t) {
        SplitMixRng sub = rng.split(7000 + static_cast<std::uint64_t>(t));
        const DensityMatrix rho = random_state(3, Purity::Mixed, sub);
        const KrausChannel mix =
            random_diag_unitary_mixture(3, 2 + static_cast<int>(sub.next_u64() % 3), sub);
        for (double a : {0.3, 0.8, 1.5}) {
            const CoherenceMeasureId id = CoherenceMeasureId::ct_new(a);
            double avg = 0.0;
            for (const auto& o : post_measurement(mix, rho)) {
                avg += o.probability * coherence(o.state, id);
            }
            worst_eq = std::max(worst_eq, std::abs(avg - coherence(rho, id)));
        }
    }
    pass = pass && worst_eq <= 1e-9;
    os << "; mixture equality worst=" << fmt(worst_eq);

    // modified strong monotonicity for CT1 under random IO, 200 trials
    int mod_violations = 0;
    for (int t = 0; t < 200; ++t) {
        SplitMixRng sub = rng.split(8000 + static_cast<std::uint64_t>(t));
        const int dim = 2 + static_cast<int>(sub.next_u64() % 3);
        const KrausChannel ch = random_io(dim, 2, sub);
        const DensityMatrix rho = random_state(dim, Purity::Mixed, sub);
        for (double a : {0.3, 0.7, 1.3, 1.9}) {
            mod_violations += static_cast<int>(
                check_modified_strong_monotonicity_ct1(ch, rho, a).violations.size());
        }
    }
    pass = pass && mod_violations == 0;
    os << "; modified-strong violations=" << mod_violations;
    return {pass, os.str()};
}

Outcome criterion9() {
    SplitMixRng rng(46);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        SplitMixRng sub = rng.split(static_cast<std::uint64_t>(t));
        const int d1 = 2 + static_cast<int>(sub.next_u64() % 2);
        const int d2 = 2 + static_cast<int>(sub.next_u64() % 2);
        const DensityMatrix r1 = random_state(d1, Purity::Mixed, sub);
        const DensityMatrix r2 = random_state(d2, Purity::Mixed, sub);
        const double p1 = 0.05 + 0.9 * sub.next_double();
        const DensityMatrix sum = direct_sum(p1, r1, 1.0 - p1, r2);
        for (double a : {0.3, 0.7, 1.3, 1.9}) {
            const auto ct2 = CoherenceMeasureId::ct2(a);
            worst = std::max(worst,
                             std::abs(coherence(sum, ct2) - std::pow(p1, a) * coherence(r1, ct2) -
                                      std::pow(1.0 - p1, a) * coherence(r2, ct2)));
            for (const auto& id :
                 {CoherenceMeasureId::c1_improved(a), CoherenceMeasureId::c2_improved(a)}) {
                worst = std::max(worst,
                                 std::abs(coherence(sum, id) - p1 * coherence(r1, id) -
                                          (1.0 - p1) * coherence(r2, id)));
            }
        }
    }
    std::ostringstream os;
    os << "100 direct sums x 4 alphas, worst additivity defect " << fmt(worst) << " (tol 1e-9)";
    return {worst <= 1e-9, os.str()};
}

Outcome criterion10() {
    SplitMixRng rng(47);
    const auto ids = suites::measure_catalog();
    double most_negative = 0.0;
    double worst_diagonal = 0.0;
    for (int t = 0; t < 200; ++t) {
        SplitMixRng sub = rng.split(static_cast<std::uint64_t>(t));
        const DensityMatrix rho = random_state(3, Purity::Mixed, sub);
        const DensityMatrix diag = random_diagonal_state(3, sub);
        for (const auto& id : ids) {
            most_negative = std::min(most_negative, coherence(rho, id));
            worst_diagonal = std::max(worst_diagonal, coherence(diag, id));
        }
    }
    std::ostringstream os;
    os << "catalog of " << ids.size() << " measure instances; most negative sampled value "
       << fmt(most_negative) << " (>= -1e-9); worst diagonal value " << fmt(worst_diagonal)
       << " (<= 1e-8)";
    return {most_negative >= -1e-9 && worst_diagonal <= 1e-8, os.str()};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria = {
    {"figure-1 counterexample thresholds (dual path)", criterion1},
    {"figure-2 counterexample thresholds (dual path)", criterion2},
    {"figure-3 counterexample thresholds + exact ensemble", criterion3},
    {"closest-state oracle vs Delta_alpha and closed forms", criterion4},
    {"identity suite (CR_NEW = CR1 = relative entropy; CT_NEW = CT1 Tr/N^a)", criterion5},
    {"order suite (CT_NEW vs CT1 by alpha regime)", criterion6},
    {"continuity suite (pure CT/CR bounds, 2H f-coherence bound)", criterion7},
    {"invariance/monotonicity suite", criterion8},
    {"additivity suite", criterion9},
    {"faithfulness/positivity suite", criterion10},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    int failures = 0;
    for (std::size_t i = 0; i < kCriteria.size(); ++i) {
        const int n = static_cast<int>(i) + 1;
        if (only != 0 && n != only) continue;
        Outcome outcome{false, ""};
        try {
            outcome = kCriteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << "criterion " << n << ": "
                  << kCriteria[i].first << " -- " << outcome.detail << "\n";
        if (!outcome.pass) ++failures;
    }
    return failures;
}
