#pragma once

// Verification engine: seeded generators, the brute-force closest-incoherent
// oracle, inequality checkers, continuity-bound calculators, and the
// figure-scan reproducers.
//
// Every randomized routine derives one RNG substream per trial from
// (seed, trial index), so reports are deterministic and independent of
// execution order.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qcoh/channels.hpp"
#include "qcoh/coherence.hpp"
#include "qcoh/divergences.hpp"
#include "qcoh/rng.hpp"

namespace qcoh {

// --- generators ---------------------------------------------------------------

enum class Purity { Pure, Mixed };

// Pure: Haar-distributed |psi><psi| (normalized complex Gaussian vector).
// Mixed: G G* / Tr(G G*) for a complex Gaussian G (full rank a.s.).
DensityMatrix random_state(int dim, Purity purity, SplitMixRng& rng);

// Diagonal state with Dirichlet(1) probabilities.
DensityMatrix random_diagonal_state(int dim, SplitMixRng& rng);

// Diagonal Kraus operators with sum K*K = I: per basis index j the column
// (K_1[j,j], ..., K_n[j,j]) is a random point on the complex (n-1)-sphere.
KrausChannel random_gio(int dim, int n_kraus, SplitMixRng& rng);

// Random incoherent channel with exact completeness.  Draws from three
// families: permutation-with-scaling Kraus operators (one nonzero per row
// and column), the rotated measure-and-reprepare pair
// K1 = |0><u|, K2 = |1><u_perp| (incoherent but not dephasing-commuting),
// and the 3-dimensional reference pair at random b.
KrausChannel random_io(int dim, int n_kraus, SplitMixRng& rng);

KrausChannel random_diag_unitary_mixture(int dim, int n_kraus, SplitMixRng& rng);

// --- reports -------------------------------------------------------------------

struct CheckViolation {
    std::string input;  // short descriptor of the offending input
    double lhs;
    double rhs;
    double margin;  // amount by which the required inequality failed
};

struct CheckReport {
    std::string name;
    int trials = 0;
    std::vector<CheckViolation> violations;

    bool passed() const { return violations.empty(); }
    void note_violation(std::string input, double lhs, double rhs, double margin) {
        violations.push_back({std::move(input), lhs, rhs, margin});
    }
    void merge(const CheckReport& other) {
        trials += other.trials;
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

std::ostream& operator<<(std::ostream& out, const CheckReport& report);

// --- closest-incoherent oracle ---------------------------------------------------

struct OracleResult {
    IncoherentState minimizer;
    double value;
};

// Brute-force minimizer of S_alpha(rho || delta) over the probability
// simplex.  dim <= 3 uses an exhaustive grid with the given step; larger
// dims use multi-start projected descent (20 starts).  Never consults
// Delta_alpha.  Throws ResolutionTooCoarse for resolution > 0.01.
OracleResult closest_incoherent_oracle(const DensityMatrix& rho, double alpha,
                                       EntropyFamily family, double resolution);

// --- inequality checkers ----------------------------------------------------------

// Violation when measure(Lambda rho) > measure(rho) + 1e-9.
CheckReport check_monotonicity(const CoherenceMeasureId& id, const KrausChannel& ch,
                               std::span<const DensityMatrix> states);

// Violation when sum_n p_n measure(rho_n) > measure(rho) + 1e-9.
CheckReport check_strong_monotonicity(const CoherenceMeasureId& id, const KrausChannel& ch,
                                      std::span<const DensityMatrix> states);

// sum_n p_n^alpha q_n^{1-alpha} CT1(rho_n) <= CT1(rho) + 1e-9 with
// q_n = Tr(K_n Delta_alpha(rho) K_n*).  Requires an IO channel.
CheckReport check_modified_strong_monotonicity_ct1(const KrausChannel& ch,
                                                   const DensityMatrix& rho, double alpha);

// --- continuity ---------------------------------------------------------------------

enum class BoundKind { FEntropy1, FEntropy2, FCoherence, CTPure, CRPure };

// Continuity bound at trace distance eps (in [0,1]) in dimension d.
//
// All moduli are evaluated at min(eps, (d-1)/d), the peak of H; this is the
// monotone envelope, which keeps the bound valid for every eps and
// nondecreasing in eps (it tends to 0 as eps -> 0).
//
//   CT_PURE / CR_PURE:   H(e) = 1 - (1-e)^{1/a} - e^{1/a}(d-1)^{1-1/a},
//     a < 1:  (1/(1-a)) (d^{1-a} - (d^{1-1/a} + H)^{-a})      [CT]
//             (a/(1-a)) log(d^{1-1/a} + H) + log d            [CR]
//     a > 1:  (1/(a-1)) (1 - (1-H)^{-a})                      [CT]
//             (a/(a-1)) log(1 - H)                            [CR]
double continuity_bound(BoundKind kind, int d, double alpha, double eps);

//   F_ENTROPY_1:   -(1-e) f(1/(1-e)) - e f((d-1)/e)
//   F_ENTROPY_2:   f(1/d) - (1-e) f(1/(d(1-e))) - e f((d-1)/(d e))
//   F_COHERENCE:   2 x F_ENTROPY_1 bound
double continuity_bound(BoundKind kind, int d, const CatalogFunction& f, double eps);

// Draws `trials` random pairs (pure for CT_PURE/CR_PURE, mixed for
// F_COHERENCE), sets eps = ||rho - sigma||_1 / 2, and asserts
// |measure(rho) - measure(sigma)| <= bound + 1e-9.
CheckReport check_continuity(BoundKind kind, double alpha, int dim, int trials, SplitMixRng& rng);
CheckReport check_continuity(BoundKind kind, const CatalogFunction& f, int dim, int trials,
                             SplitMixRng& rng);

// --- figure scans -------------------------------------------------------------------

enum class FigureId { Fig1, Fig2, Fig3 };

struct ScanRecord {
    double alpha;
    double lhs;  // the side that should dominate
    double rhs;
    bool violated;  // lhs < rhs - 1e-12
};

// Every grid point evaluated twice: from the closed forms in the analysis
// (analytic eigensystem) and through the generic channel/coherence
// pipeline.
struct FigurePoint {
    double alpha;
    double lhs_closed;
    double rhs_closed;
    double lhs_pipeline;
    double rhs_pipeline;
};

// 101 uniform points on [0.05, 1.95] minus a +-1e-3 window around alpha=1.
std::vector<double> default_alpha_grid(int points = 101);

std::vector<FigurePoint> evaluate_figure(FigureId which, std::span<const double> alpha_grid,
                                         double b = 0.9);

// ScanRecords built from the pipeline values; throws if the two evaluation
// paths disagree beyond 1e-9 anywhere.
std::vector<ScanRecord> reproduce_figure(FigureId which, std::span<const double> alpha_grid,
                                         double b = 0.9);

// header "alpha,lhs,rhs,violated"; floats at 17 significant digits.
void write_scan_csv(std::ostream& out, std::span<const ScanRecord> records);

// Closed forms used by the scans (pure-state CT and the three figures).
double fig_pure_ct_closed(std::span<const double> chi, double alpha);
double fig1_lhs_closed(double alpha);
double fig1_rhs_closed(double alpha);
double fig2_lhs_closed(double alpha);
double fig2_rhs_closed(double alpha, double b);
double fig3_rhs_closed(double alpha);

// --- randomized alpha-GIO search hook --------------------------------------------
// Samples random GIO channels and returns those whose sampling certificate
// passes at the given alpha and that are not trivially near-unitary
// (n_kraus > 1 and Kraus operators not pairwise proportional).  Existence
// of any such channel is an open question; this only searches.
std::vector<KrausChannel> search_alpha_gio(int dim, int n_kraus, double alpha, int n_channels,
                                           int trials_per_channel, std::uint64_t seed);

} // namespace qcoh
