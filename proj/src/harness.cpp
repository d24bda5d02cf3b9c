#include "qcoh/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <sstream>

namespace qcoh {

// --- generators ---------------------------------------------------------------

DensityMatrix random_state(int dim, Purity purity, SplitMixRng& rng) {
    if (dim < 2) throw ParamOutOfRange("random_state requires dim >= 2");
    if (purity == Purity::Pure) {
        ComplexVector v(dim);
        for (int j = 0; j < dim; ++j) v[j] = rng.next_complex_gaussian();
        return DensityMatrix::pure(v);
    }
    ComplexMatrix g(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = rng.next_complex_gaussian();
    const ComplexMatrix w = g * g.adjoint();
    return DensityMatrix(w / std::real(w.trace()), 1e-9);
}

// Used by channels.cpp for the alpha-GIO certificate.
DensityMatrix random_mixed_state(int dim, SplitMixRng& rng) {
    return random_state(dim, Purity::Mixed, rng);
}

DensityMatrix random_diagonal_state(int dim, SplitMixRng& rng) {
    RealVector p(dim);
    double sum = 0.0;
    for (int j = 0; j < dim; ++j) {
        p[j] = -std::log(1.0 - rng.next_double());
        sum += p[j];
    }
    return DensityMatrix::from_probabilities(p / sum);
}

KrausChannel random_gio(int dim, int n_kraus, SplitMixRng& rng) {
    if (n_kraus < 1) throw ParamOutOfRange("random_gio requires n_kraus >= 1");
    std::vector<ComplexMatrix> kraus(static_cast<std::size_t>(n_kraus),
                                     ComplexMatrix::Zero(dim, dim));
    for (int j = 0; j < dim; ++j) {
        ComplexVector col(n_kraus);
        for (int k = 0; k < n_kraus; ++k) col[k] = rng.next_complex_gaussian();
        col /= col.norm();
        for (int k = 0; k < n_kraus; ++k) kraus[static_cast<std::size_t>(k)](j, j) = col[k];
    }
    return KrausChannel(std::move(kraus), 1e-9);
}

namespace {

KrausChannel random_permutation_io(int dim, int n_kraus, SplitMixRng& rng) {
    std::vector<ComplexMatrix> kraus(static_cast<std::size_t>(n_kraus),
                                     ComplexMatrix::Zero(dim, dim));
    std::vector<std::vector<int>> perm(static_cast<std::size_t>(n_kraus));
    for (auto& p : perm) {
        p.resize(static_cast<std::size_t>(dim));
        std::iota(p.begin(), p.end(), 0);
        for (int j = dim - 1; j > 0; --j) {  // Fisher-Yates
            const int i = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(j + 1));
            std::swap(p[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(i)]);
        }
    }
    for (int c = 0; c < dim; ++c) {
        ComplexVector amp(n_kraus);
        for (int k = 0; k < n_kraus; ++k) amp[k] = rng.next_complex_gaussian();
        amp /= amp.norm();
        for (int k = 0; k < n_kraus; ++k) {
            kraus[static_cast<std::size_t>(k)](perm[static_cast<std::size_t>(k)]
                                                   [static_cast<std::size_t>(c)],
                                               c) = amp[k];
        }
    }
    return KrausChannel(std::move(kraus), 1e-9);
}

// Measure in a Haar-random basis {u_m}, reprepare the incoherent |m>:
// K_m = |m><u_m|.  Incoherent, exactly complete, generally far from SIO.
KrausChannel random_reprepare_io(int dim, SplitMixRng& rng) {
    ComplexMatrix g(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = rng.next_complex_gaussian();
    const Eigen::HouseholderQR<ComplexMatrix> qr(g);
    const ComplexMatrix u = qr.householderQ();
    std::vector<ComplexMatrix> kraus;
    for (int m = 0; m < dim; ++m) {
        ComplexMatrix k = ComplexMatrix::Zero(dim, dim);
        k.row(m) = u.col(m).adjoint();
        kraus.push_back(std::move(k));
    }
    return KrausChannel(std::move(kraus), 1e-9);
}

} // namespace

KrausChannel random_io(int dim, int n_kraus, SplitMixRng& rng) {
    if (n_kraus < 1) throw ParamOutOfRange("random_io requires n_kraus >= 1");
    const double which = rng.next_double();
    if (which < 0.6) return random_permutation_io(dim, n_kraus, rng);
    if (which < 0.85) return random_reprepare_io(dim, rng);
    if (dim == 3) return make_fig2_io(0.1 + 0.89 * rng.next_double());
    return random_permutation_io(dim, n_kraus, rng);
}

KrausChannel random_diag_unitary_mixture(int dim, int n_kraus, SplitMixRng& rng) {
    std::vector<RealVector> phases;
    std::vector<double> weights;
    double sum = 0.0;
    for (int k = 0; k < n_kraus; ++k) {
        RealVector ph(dim);
        for (int j = 0; j < dim; ++j) ph[j] = 6.283185307179586 * rng.next_double();
        phases.push_back(std::move(ph));
        weights.push_back(-std::log(1.0 - rng.next_double()));
        sum += weights.back();
    }
    for (double& w : weights) w /= sum;
    return make_diag_unitary_mixture(phases, weights);
}

// --- reports -------------------------------------------------------------------

std::ostream& operator<<(std::ostream& out, const CheckReport& report) {
    out << report.name << ": " << (report.passed() ? "PASS" : "FAIL") << " (trials="
        << report.trials;
    if (!report.passed()) out << ", violations=" << report.violations.size();
    out << ")";
    const std::size_t shown = std::min<std::size_t>(report.violations.size(), 3);
    for (std::size_t i = 0; i < shown; ++i) {
        const auto& v = report.violations[i];
        out << "\n  violation: " << v.input << "  lhs=" << v.lhs << " rhs=" << v.rhs
            << " margin=" << v.margin;
    }
    if (report.violations.size() > shown) {
        out << "\n  ... " << (report.violations.size() - shown) << " more";
    }
    return out;
}

// --- closest-incoherent oracle ---------------------------------------------------

namespace {

void check_oracle_alpha(double alpha, EntropyFamily family) {
    if (family == EntropyFamily::Tsallis) {
        AlphaParam::tsallis(alpha);
    } else {
        AlphaParam::renyi(alpha);
    }
}

// Diagonal of rho^alpha; the only state-dependent data the divergence needs
// for diagonal delta:  Tr(rho^alpha delta^{1-alpha}) = sum_j a_j d_j^{1-alpha}.
RealVector alpha_diagonal(const DensityMatrix& rho, double alpha) {
    const ComplexMatrix ra = rho.spectrum().power(alpha);
    return ra.diagonal().real().cwiseMax(0.0);
}

double divergence_from_T(double t, double alpha, EntropyFamily family) {
    if (family == EntropyFamily::Tsallis) return (t - 1.0) / (alpha - 1.0);
    if (t <= 0.0) return kInfinity;
    return std::log(t) / (alpha - 1.0);
}

OracleResult oracle_grid(const RealVector& a, double alpha, EntropyFamily family,
                         double resolution, int dim) {
    const int n = static_cast<int>(std::llround(1.0 / resolution));
    // power table over the lattice {0, 1/n, ..., 1}
    std::vector<double> pw(static_cast<std::size_t>(n) + 1);
    pw[0] = alpha < 1.0 ? 0.0 : kInfinity;
    for (int i = 1; i <= n; ++i) {
        pw[static_cast<std::size_t>(i)] = std::pow(static_cast<double>(i) / n, 1.0 - alpha);
    }
    const auto term = [&](double aj, int i) {
        return aj <= 0.0 ? 0.0 : aj * pw[static_cast<std::size_t>(i)];  // 0 * inf = 0
    };
    double best = kInfinity;
    RealVector bestd(dim);
    if (dim == 2) {
        for (int i = 0; i <= n; ++i) {
            const double t = term(a[0], i) + term(a[1], n - i);
            const double val = divergence_from_T(t, alpha, family);
            if (val < best) {
                best = val;
                bestd << static_cast<double>(i) / n, static_cast<double>(n - i) / n;
            }
        }
    } else {
        for (int i = 0; i <= n; ++i) {
            const double t0 = term(a[0], i);
            for (int j = 0; j <= n - i; ++j) {
                const double t = t0 + term(a[1], j) + term(a[2], n - i - j);
                const double val = divergence_from_T(t, alpha, family);
                if (val < best) {
                    best = val;
                    bestd << static_cast<double>(i) / n, static_cast<double>(j) / n,
                        static_cast<double>(n - i - j) / n;
                }
            }
        }
    }
    return {IncoherentState(bestd), best};
}

// Euclidean projection onto the probability simplex.
RealVector project_simplex(RealVector v) {
    const Eigen::Index d = v.size();
    std::vector<double> u(v.data(), v.data() + d);
    std::sort(u.begin(), u.end(), std::greater<>());
    double cssum = 0.0, tau = 0.0;
    int k = 0;
    for (Eigen::Index i = 0; i < d; ++i) {
        cssum += u[static_cast<std::size_t>(i)];
        const double t = (cssum - 1.0) / static_cast<double>(i + 1);
        if (u[static_cast<std::size_t>(i)] - t > 0.0) {
            tau = t;
            k = static_cast<int>(i) + 1;
        }
    }
    (void)k;
    for (Eigen::Index i = 0; i < d; ++i) v[i] = std::max(v[i] - tau, 0.0);
    return v;
}

double oracle_value(const RealVector& a, const RealVector& d, double alpha,
                    EntropyFamily family) {
    double t = 0.0;
    for (Eigen::Index j = 0; j < a.size(); ++j) {
        if (a[j] <= 0.0) continue;
        if (d[j] <= 0.0) {
            if (alpha > 1.0) return kInfinity;
            continue;
        }
        t += a[j] * std::pow(d[j], 1.0 - alpha);
    }
    return divergence_from_T(t, alpha, family);
}

OracleResult oracle_descent(const RealVector& a, double alpha, EntropyFamily family, int dim) {
    const double floor_p = 1e-12;
    const auto clip_interior = [&](RealVector d) {
        for (Eigen::Index j = 0; j < d.size(); ++j) d[j] = std::max(d[j], floor_p);
        return RealVector(d / d.sum());
    };
    SplitMixRng rng(0x51ac0ffee0c0ffeeULL);  // fixed: the oracle is deterministic
    std::vector<RealVector> starts;
    starts.push_back(clip_interior(a / a.sum()));  // dephased diagonal, rescaled
    starts.push_back(RealVector::Constant(dim, 1.0 / dim));
    for (int s = 0; s < 18; ++s) {
        RealVector r(dim);
        for (int j = 0; j < dim; ++j) r[j] = -std::log(1.0 - rng.next_double());
        starts.push_back(clip_interior(r / r.sum()));
    }

    double best = kInfinity;
    RealVector bestd = starts.front();
    for (RealVector d : starts) {
        double val = oracle_value(a, d, alpha, family);
        double step = 0.1;
        for (int it = 0; it < 400 && step > 1e-14; ++it) {
            RealVector grad(dim);
            double t = 0.0;
            for (int j = 0; j < dim; ++j) {
                t += a[j] <= 0.0 ? 0.0 : a[j] * std::pow(d[j], 1.0 - alpha);
            }
            // dV/dd_j = -a_j d_j^{-alpha} (Tsallis); divided by T for Renyi
            for (int j = 0; j < dim; ++j) {
                double g = a[j] <= 0.0 ? 0.0 : -a[j] * std::pow(d[j], -alpha);
                if (family == EntropyFamily::Renyi) g /= t;
                grad[j] = g;
            }
            const RealVector cand = clip_interior(project_simplex(d - step * grad));
            const double cval = oracle_value(a, cand, alpha, family);
            if (cval < val - 1e-16) {
                d = cand;
                val = cval;
                step *= 1.5;
            } else {
                step *= 0.5;
            }
        }
        if (val < best) {
            best = val;
            bestd = d;
        }
    }
    return {IncoherentState(bestd), best};
}

} // namespace

OracleResult closest_incoherent_oracle(const DensityMatrix& rho, double alpha,
                                       EntropyFamily family, double resolution) {
    check_oracle_alpha(alpha, family);
    if (resolution > 0.01) {
        throw ResolutionTooCoarse("resolution " + num_str(resolution) +
                                  " exceeds 0.01");
    }
    if (!(resolution > 0)) throw ParamOutOfRange("resolution must be positive");
    const RealVector a = alpha_diagonal(rho, alpha);
    if (rho.dim() <= 3) return oracle_grid(a, alpha, family, resolution, rho.dim());
    return oracle_descent(a, alpha, family, rho.dim());
}

// --- inequality checkers ----------------------------------------------------------

CheckReport check_monotonicity(const CoherenceMeasureId& id, const KrausChannel& ch,
                               std::span<const DensityMatrix> states) {
    CheckReport report;
    report.name = "monotonicity[" + id.name() + "]";
    for (const DensityMatrix& rho : states) {
        ++report.trials;
        const double before = coherence(rho, id);
        const double after = coherence(apply(ch, rho), id);
        if (after > before + 1e-9) {
            report.note_violation("state #" + std::to_string(report.trials - 1), before, after,
                                  after - before);
        }
    }
    return report;
}

CheckReport check_strong_monotonicity(const CoherenceMeasureId& id, const KrausChannel& ch,
                                      std::span<const DensityMatrix> states) {
    CheckReport report;
    report.name = "strong-monotonicity[" + id.name() + "]";
    for (const DensityMatrix& rho : states) {
        ++report.trials;
        const double before = coherence(rho, id);
        double avg = 0.0;
        for (const auto& outcome : post_measurement(ch, rho)) {
            avg += outcome.probability * coherence(outcome.state, id);
        }
        if (avg > before + 1e-9) {
            report.note_violation("state #" + std::to_string(report.trials - 1), before, avg,
                                  avg - before);
        }
    }
    return report;
}

CheckReport check_modified_strong_monotonicity_ct1(const KrausChannel& ch,
                                                   const DensityMatrix& rho, double alpha) {
    if (!classify(ch).is_io) {
        throw NotIo("modified strong monotonicity is stated for IO channels");
    }
    CheckReport report;
    report.name = "modified-strong-monotonicity[ct1]";
    report.trials = 1;
    const CoherenceMeasureId ct1 = CoherenceMeasureId::ct1(alpha);
    const double before = coherence(rho, ct1);
    const DensityMatrix da = dephase_alpha(rho, alpha).state.to_density();
    double weighted = 0.0;
    for (const auto& k : ch.kraus()) {
        const ComplexMatrix m = k * rho.matrix() * k.adjoint();
        const double p = std::real(m.trace());
        if (p < 1e-12) continue;
        const double c = coherence(DensityMatrix(m / p, 1e-9), ct1);
        if (c <= 0.0) continue;  // term vanishes regardless of q
        const double q = std::real((k * da.matrix() * k.adjoint()).trace());
        const double qf = q <= 0.0 ? (alpha < 1.0 ? 0.0 : kInfinity)
                                   : std::pow(q, 1.0 - alpha);
        weighted += std::pow(p, alpha) * qf * c;
    }
    if (weighted > before + 1e-9) {
        report.note_violation("alpha=" + num_str(alpha), before, weighted,
                              weighted - before);
    }
    return report;
}

// --- continuity ---------------------------------------------------------------------

namespace {

double clamp_eps(double eps, int d) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw ParamOutOfRange("eps must lie in [0,1]");
    if (d < 2) throw ParamOutOfRange("dimension must be >= 2");
    // monotone envelope: H peaks at eps = (d-1)/d for every alpha and
    // every catalog f (the substitution of the pre-dephasing distance is
    // only valid while H is nondecreasing)
    return std::min(eps, (static_cast<double>(d) - 1.0) / d);
}

double h_pure(double eps, double alpha, int d) {
    return 1.0 - std::pow(1.0 - eps, 1.0 / alpha) -
           std::pow(eps, 1.0 / alpha) * std::pow(static_cast<double>(d) - 1.0, 1.0 - 1.0 / alpha);
}

} // namespace

double continuity_bound(BoundKind kind, int d, double alpha, double eps) {
    if (kind != BoundKind::CTPure && kind != BoundKind::CRPure) {
        throw ParamOutOfRange("this overload serves CT_PURE / CR_PURE");
    }
    if (!(alpha > 0.0 && alpha < 2.0) || alpha == 1.0) {
        throw AlphaOutOfRange("pure-state continuity bounds require alpha in (0,2), alpha != 1");
    }
    const double e = clamp_eps(eps, d);
    if (e == 0.0) return 0.0;
    const double h = h_pure(e, alpha, d);
    const double dd = static_cast<double>(d);
    if (kind == BoundKind::CTPure) {
        if (alpha < 1.0) {
            return (std::pow(dd, 1.0 - alpha) - std::pow(std::pow(dd, 1.0 - 1.0 / alpha) + h, -alpha)) /
                   (1.0 - alpha);
        }
        return (1.0 - std::pow(1.0 - h, -alpha)) / (alpha - 1.0);
    }
    if (alpha < 1.0) {
        return alpha / (1.0 - alpha) * std::log(std::pow(dd, 1.0 - 1.0 / alpha) + h) + std::log(dd);
    }
    return alpha / (alpha - 1.0) * std::log(1.0 - h);
}

double continuity_bound(BoundKind kind, int d, const CatalogFunction& f, double eps) {
    const double e = clamp_eps(eps, d);
    const double dd = static_cast<double>(d);
    const auto lemma1 = [&](double ee) {
        return -f.transpose(1.0 - ee) - (dd - 1.0) * f.transpose(ee / (dd - 1.0));
    };
    switch (kind) {
        case BoundKind::FEntropy1:
            return lemma1(e);
        case BoundKind::FEntropy2:
            return f(1.0 / dd) - f.transpose(dd * (1.0 - e)) / dd -
                   (dd - 1.0) / dd * f.transpose(dd * e / (dd - 1.0));
        case BoundKind::FCoherence:
            return 2.0 * lemma1(e);
        default:
            throw ParamOutOfRange("this overload serves F_ENTROPY_1 / F_ENTROPY_2 / F_COHERENCE");
    }
}

namespace {

double half_trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    const double eps = 0.5 * trace_norm(rho.matrix() - sigma.matrix());
    return std::min(std::max(eps, 0.0), 1.0);
}

} // namespace

CheckReport check_continuity(BoundKind kind, double alpha, int dim, int trials,
                             SplitMixRng& rng) {
    if (kind != BoundKind::CTPure && kind != BoundKind::CRPure) {
        throw ParamOutOfRange("this overload serves CT_PURE / CR_PURE");
    }
    CheckReport report;
    report.name = kind == BoundKind::CTPure ? "continuity[ct,pure]" : "continuity[cr,pure]";
    const CoherenceMeasureId id = kind == BoundKind::CTPure ? CoherenceMeasureId::ct_new(alpha)
                                                            : CoherenceMeasureId::cr1(alpha);
    for (int t = 0; t < trials; ++t) {
        SplitMixRng sub = rng.split(static_cast<std::uint64_t>(t));
        const DensityMatrix rho = random_state(dim, Purity::Pure, sub);
        const DensityMatrix sigma = random_state(dim, Purity::Pure, sub);
        const double eps = half_trace_distance(rho, sigma);
        const double diff = std::abs(coherence(rho, id) - coherence(sigma, id));
        const double bound = continuity_bound(kind, dim, alpha, eps);
        ++report.trials;
        if (diff > bound + 1e-9) {
            report.note_violation("pair #" + std::to_string(t) + " eps=" + std::to_string(eps),
                                  bound, diff, diff - bound);
        }
    }
    return report;
}

CheckReport check_continuity(BoundKind kind, const CatalogFunction& f, int dim, int trials,
                             SplitMixRng& rng) {
    CheckReport report;
    report.name = std::string("continuity[") + f.name() + "]";
    for (int t = 0; t < trials; ++t) {
        SplitMixRng sub = rng.split(static_cast<std::uint64_t>(t));
        const DensityMatrix rho = random_state(dim, Purity::Mixed, sub);
        const DensityMatrix sigma = random_state(dim, Purity::Mixed, sub);
        const double eps = half_trace_distance(rho, sigma);
        double diff = 0.0;
        if (kind == BoundKind::FCoherence) {
            const CoherenceMeasureId id = CoherenceMeasureId::c_f(f, 1);
            diff = std::abs(coherence(rho, id) - coherence(sigma, id));
        } else {
            const int variant = kind == BoundKind::FEntropy1 ? 1 : 2;
            diff = std::abs(f_entropy(rho, f, variant) - f_entropy(sigma, f, variant));
        }
        const double bound = continuity_bound(kind, dim, f, eps);
        ++report.trials;
        if (diff > bound + 1e-9) {
            report.note_violation("pair #" + std::to_string(t) + " eps=" + std::to_string(eps),
                                  bound, diff, diff - bound);
        }
    }
    return report;
}

// --- figure scans -------------------------------------------------------------------

double fig_pure_ct_closed(std::span<const double> chi, double alpha) {
    double n = 0.0;
    for (double c : chi) {
        if (c > 0.0) n += std::pow(c, 1.0 / alpha);
    }
    return (std::pow(n, -alpha) - 1.0) / (1.0 - alpha);
}

double fig1_lhs_closed(double alpha) {
    return (4.0 * std::pow(std::pow(3.0, 1.0 / alpha) + 1.0, -alpha) - 1.0) / (1.0 - alpha);
}

double fig1_rhs_closed(double alpha) {
    // analytic eigensystem of Lambda(rho) = [[3/4, a], [a, 1/4]]
    const double a = (3.0 + std::sqrt(3.0)) / (8.0 * std::sqrt(2.0));
    const double disc = std::sqrt(0.25 + 4.0 * a * a);
    const double beta1 = 0.5 * (1.0 + disc);
    const double beta2 = 0.5 * (1.0 - disc);
    const auto overlap0 = [&](double beta) {
        const double y = beta - 0.75;
        return a * a / (a * a + y * y);  // |<0|psi>|^2 for (a, beta-3/4)
    };
    const double o10 = overlap0(beta1), o20 = overlap0(beta2);
    const double b1a = std::pow(beta1, alpha), b2a = std::pow(beta2, alpha);
    const double diag0 = b1a * o10 + b2a * o20;               // <0|(L rho)^alpha|0>
    const double diag1 = b1a * (1.0 - o10) + b2a * (1.0 - o20);
    const double n = std::pow(diag0, 1.0 / alpha) + std::pow(diag1, 1.0 / alpha);
    const double tr = b1a + b2a;
    return (tr / std::pow(n, alpha) - tr) / (1.0 - alpha);
}

double fig2_lhs_closed(double alpha) {
    return 4.0 / (1.0 - alpha) *
           (std::pow(2.0 + std::pow(2.0, 1.0 / alpha), -alpha) - std::pow(2.0, -(1.0 + alpha)));
}

double fig2_rhs_closed(double alpha, double b) {
    const double b2 = b * b;
    return (1.0 + b2) / 4.0 / (1.0 - alpha) *
           ((1.0 + b2) * std::pow(1.0 + std::pow(b2, 1.0 / alpha), -alpha) - 1.0);
}

double fig3_rhs_closed(double alpha) {
    const double chi1[] = {2.0 / 3.0, 1.0 / 3.0};
    const double chi2[] = {6.0 / 7.0, 1.0 / 7.0};
    return 9.0 / 16.0 * fig_pure_ct_closed(chi1, alpha) +
           7.0 / 16.0 * fig_pure_ct_closed(chi2, alpha);
}

std::vector<double> default_alpha_grid(int points) {
    if (points < 2) throw ParamOutOfRange("grid needs at least 2 points");
    std::vector<double> grid;
    const double lo = 0.05, hi = 1.95;
    for (int i = 0; i < points; ++i) {
        const double a = lo + (hi - lo) * i / (points - 1);
        if (std::abs(a - 1.0) < 1e-3) continue;
        grid.push_back(a);
    }
    return grid;
}

namespace {

DensityMatrix fig1_state() {
    ComplexVector v(2);
    v << std::sqrt(0.75), std::sqrt(0.25);
    return DensityMatrix::pure(v);
}

DensityMatrix fig2_state() {
    ComplexMatrix m(3, 3);
    m << 1, 0, 1, 0, 2, 0, 1, 0, 1;
    return DensityMatrix(0.25 * m, 1e-12);
}

} // namespace

std::vector<FigurePoint> evaluate_figure(FigureId which, std::span<const double> alpha_grid,
                                         double b) {
    std::vector<FigurePoint> points;
    points.reserve(alpha_grid.size());
    const KrausChannel ch = which == FigureId::Fig2 ? make_fig2_io(b) : make_fig1_gio();
    const DensityMatrix rho = which == FigureId::Fig2 ? fig2_state() : fig1_state();
    const auto outcomes = post_measurement(ch, rho);
    for (double alpha : alpha_grid) {
        FigurePoint p{};
        p.alpha = alpha;
        const CoherenceMeasureId id = CoherenceMeasureId::ct_new(alpha);
        p.lhs_pipeline = coherence(rho, id);
        switch (which) {
            case FigureId::Fig1:
                p.lhs_closed = fig1_lhs_closed(alpha);
                p.rhs_closed = fig1_rhs_closed(alpha);
                p.rhs_pipeline = coherence(apply(ch, rho), id);
                break;
            case FigureId::Fig2:
                p.lhs_closed = fig2_lhs_closed(alpha);
                p.rhs_closed = fig2_rhs_closed(alpha, b);
                p.rhs_pipeline = 0.0;
                for (const auto& o : outcomes) {
                    p.rhs_pipeline += o.probability * coherence(o.state, id);
                }
                break;
            case FigureId::Fig3:
                p.lhs_closed = fig1_lhs_closed(alpha);
                p.rhs_closed = fig3_rhs_closed(alpha);
                p.rhs_pipeline = 0.0;
                for (const auto& o : outcomes) {
                    p.rhs_pipeline += o.probability * coherence(o.state, id);
                }
                break;
        }
        points.push_back(p);
    }
    return points;
}

std::vector<ScanRecord> reproduce_figure(FigureId which, std::span<const double> alpha_grid,
                                         double b) {
    std::vector<ScanRecord> records;
    for (const FigurePoint& p : evaluate_figure(which, alpha_grid, b)) {
        const double dl = std::abs(p.lhs_closed - p.lhs_pipeline);
        const double dr = std::abs(p.rhs_closed - p.rhs_pipeline);
        if (dl > 1e-9 || dr > 1e-9) {
            throw Error("figure evaluation paths disagree at alpha=" + num_str(p.alpha) +
                        " (lhs delta " + num_str(dl) + ", rhs delta " + num_str(dr) +
                        ")");
        }
        records.push_back(
            {p.alpha, p.lhs_pipeline, p.rhs_pipeline, p.lhs_pipeline < p.rhs_pipeline - 1e-12});
    }
    return records;
}

void write_scan_csv(std::ostream& out, std::span<const ScanRecord> records) {
    out << "alpha,lhs,rhs,violated\n";
    char buf[128];
    for (const ScanRecord& r : records) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%s", r.alpha, r.lhs, r.rhs,
                      r.violated ? "true" : "false");
        out << buf << "\n";
    }
}

// --- randomized alpha-GIO search hook --------------------------------------------

namespace {

// A GIO whose Kraus operators all have constant diagonal magnitude is a
// weighted diagonal unitary; such channels are alpha-GIO trivially.
bool near_unitary_mixture(const KrausChannel& ch) {
    for (const auto& k : ch.kraus()) {
        const RealVector mags = k.diagonal().cwiseAbs();
        if ((mags.array() - mags[0]).abs().maxCoeff() > 1e-6) return false;
    }
    return true;
}

} // namespace

std::vector<KrausChannel> search_alpha_gio(int dim, int n_kraus, double alpha, int n_channels,
                                           int trials_per_channel, std::uint64_t seed) {
    std::vector<KrausChannel> found;
    SplitMixRng rng(seed);
    for (int c = 0; c < n_channels; ++c) {
        SplitMixRng sub = rng.split(static_cast<std::uint64_t>(c));
        KrausChannel ch = random_gio(dim, n_kraus, sub);
        if (near_unitary_mixture(ch)) continue;
        const auto cert =
            is_alpha_gio(ch, alpha, trials_per_channel, sub.next_u64());
        if (cert.certified) found.push_back(std::move(ch));
    }
    return found;
}

} // namespace qcoh
