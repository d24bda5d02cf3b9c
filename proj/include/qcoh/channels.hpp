#pragma once

// Quantum channels in Kraus form, their action on states, post-measurement
// ensembles, and classification into the nested incoherent-operation
// classes GIO c SIO c DIO (and IO):
//
//   IO   every Kraus operator has at most one nonzero entry per column
//   SIO  K_n Delta(rho) K_n* = Delta(K_n rho K_n*) for every n
//   DIO  Lambda(Delta(rho)) = Delta(Lambda(rho))
//   GIO  every Kraus operator diagonal (fixes all incoherent states)
//
// SIO/DIO are linear conditions and are checked exactly (up to float) on
// the d^2 matrix-unit basis.  The GIO test inspects the given Kraus
// representation; diagonality of the given representation is sufficient
// for every property verified here.  alpha-GIO (commutation with the
// nonlinear Delta_alpha) admits no finite basis check and is certified by
// randomized sampling.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qcoh/coherence.hpp"
#include "qcoh/linalg.hpp"

namespace qcoh {

class KrausChannel {
public:
    // Validates the completeness relation ||sum K*K - I||_F <= tol.
    explicit KrausChannel(std::vector<ComplexMatrix> kraus, double tol = 1e-9);

    int dim() const { return dim_; }
    double tol() const { return tol_; }
    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

private:
    std::vector<ComplexMatrix> kraus_;
    int dim_;
    double tol_;
};

// Lambda(rho) = sum_n K_n rho K_n*
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

struct MeasurementOutcome {
    double probability;   // Tr(K_n rho K_n*)
    DensityMatrix state;  // K_n rho K_n* / p_n
};

// Outcomes with p_n < 1e-12 are omitted; the returned probabilities sum to
// 1 within 1e-9.
std::vector<MeasurementOutcome> post_measurement(const KrausChannel& ch, const DensityMatrix& rho);

struct ChannelClass {
    bool is_io = false;
    bool is_sio = false;
    bool is_dio = false;
    bool is_gio = false;
    std::map<double, bool> alpha_gio;  // filled on demand via is_alpha_gio
};

ChannelClass classify(const KrausChannel& ch);

// Sampling-based alpha-GIO certificate: true iff
// ||Delta_alpha(Lambda(rho)) - Lambda(Delta_alpha(rho))||_1 <= 1e-8 on
// every one of `trials` random states.  Not a proof.  On failure the first
// witness state and its residual are recorded.
struct AlphaGioCertificate {
    bool certified = false;
    int trials = 0;
    double max_residual = 0.0;
    std::optional<ComplexMatrix> witness;

    explicit operator bool() const { return certified; }
};

// Requires classify(ch).is_gio (throws NotGio otherwise) and
// alpha in (0,2], alpha != 1.
AlphaGioCertificate is_alpha_gio(const KrausChannel& ch, double alpha, int trials,
                                 std::uint64_t seed);

// --- reference channels -----------------------------------------------------

// Two diagonal Kraus operators diag(1/sqrt2, sqrt3/2), diag(1/sqrt2, 1/2).
KrausChannel make_fig1_gio();

// The 3-dimensional incoherent pair parameterized by b (|b| <= 1, and
// a = sqrt(1-b^2) >= 0):
//   K1 = [[0,1,0],[0,0,0],[0,0,a]],  K2 = [[1,0,0],[0,0,b],[0,0,0]]
KrausChannel make_fig2_io(double b);

// Same Kraus pair as make_fig1_gio (the strong-monotonicity scan reuses it).
KrausChannel make_fig3_gio();

// K_k = sqrt(w_k) diag(e^{i phases[k][0]}, ..., e^{i phases[k][d-1]});
// weights nonnegative, summing to 1.
KrausChannel make_diag_unitary_mixture(const std::vector<RealVector>& phases,
                                       const std::vector<double>& weights);

// --- text format -------------------------------------------------------------
// line 1: "dim n_kraus"; then n_kraus blocks in the matrix format.

KrausChannel read_channel(std::istream& in);
KrausChannel read_channel_file(const std::string& path);
void write_channel(std::ostream& out, const KrausChannel& ch);

} // namespace qcoh
