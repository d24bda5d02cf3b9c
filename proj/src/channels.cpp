#include "qcoh/channels.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qcoh/rng.hpp"

namespace qcoh {

// defined in harness.cpp; used here for the sampling certificate
DensityMatrix random_mixed_state(int dim, SplitMixRng& rng);

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus, double tol)
    : kraus_(std::move(kraus)), tol_(tol) {
    if (kraus_.empty()) throw ParamOutOfRange("channel needs at least one Kraus operator");
    dim_ = static_cast<int>(kraus_.front().rows());
    ComplexMatrix sum = ComplexMatrix::Zero(dim_, dim_);
    for (const auto& k : kraus_) {
        if (k.rows() != dim_ || k.cols() != dim_) {
            throw DimensionMismatch("Kraus operators must all be dim x dim");
        }
        sum += k.adjoint() * k;
    }
    const double defect = (sum - ComplexMatrix::Identity(dim_, dim_)).norm();
    if (defect > tol_) {
        throw CompletenessViolation("||sum K*K - I||_F = " + num_str(defect) +
                                    " exceeds tol " + num_str(tol_));
    }
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
    if (rho.dim() != ch.dim()) throw DimensionMismatch("channel/state dimension mismatch");
    ComplexMatrix out = ComplexMatrix::Zero(ch.dim(), ch.dim());
    for (const auto& k : ch.kraus()) out += k * rho.matrix() * k.adjoint();
    return DensityMatrix(out, 1e-9);
}

std::vector<MeasurementOutcome> post_measurement(const KrausChannel& ch,
                                                 const DensityMatrix& rho) {
    if (rho.dim() != ch.dim()) throw DimensionMismatch("channel/state dimension mismatch");
    std::vector<MeasurementOutcome> outcomes;
    for (const auto& k : ch.kraus()) {
        const ComplexMatrix m = k * rho.matrix() * k.adjoint();
        const double p = std::real(m.trace());
        if (p < 1e-12) continue;
        outcomes.push_back({p, DensityMatrix(m / p, 1e-9)});
    }
    return outcomes;
}

namespace {

ComplexMatrix dephase_matrix(const ComplexMatrix& m) {
    ComplexMatrix d = ComplexMatrix::Zero(m.rows(), m.cols());
    d.diagonal() = m.diagonal();
    return d;
}

bool kraus_diagonal(const ComplexMatrix& k, double tol) {
    ComplexMatrix off = k;
    off.diagonal().setZero();
    return off.cwiseAbs().maxCoeff() <= tol;
}

bool kraus_column_incoherent(const ComplexMatrix& k, double tol) {
    for (Eigen::Index c = 0; c < k.cols(); ++c) {
        int nonzero = 0;
        for (Eigen::Index r = 0; r < k.rows(); ++r) {
            if (std::abs(k(r, c)) > tol) ++nonzero;
        }
        if (nonzero > 1) return false;
    }
    return true;
}

} // namespace

ChannelClass classify(const KrausChannel& ch) {
    const double tol = std::max(ch.tol(), 1e-12);
    const int d = ch.dim();
    ChannelClass cls;

    cls.is_gio = true;
    cls.is_io = true;
    for (const auto& k : ch.kraus()) {
        cls.is_gio = cls.is_gio && kraus_diagonal(k, tol);
        cls.is_io = cls.is_io && kraus_column_incoherent(k, tol);
    }

    // SIO / DIO on the matrix-unit basis E_ab (linear in rho, so this is
    // exhaustive up to float error).
    cls.is_sio = true;
    cls.is_dio = true;
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            ComplexMatrix e = ComplexMatrix::Zero(d, d);
            e(a, b) = 1.0;
            const ComplexMatrix de = dephase_matrix(e);
            ComplexMatrix lambda_e = ComplexMatrix::Zero(d, d);
            ComplexMatrix lambda_de = ComplexMatrix::Zero(d, d);
            for (const auto& k : ch.kraus()) {
                const ComplexMatrix keka = k * e * k.adjoint();
                lambda_e += keka;
                lambda_de += k * de * k.adjoint();
                if ((k * de * k.adjoint() - dephase_matrix(keka)).cwiseAbs().maxCoeff() > tol) {
                    cls.is_sio = false;
                }
            }
            if ((lambda_de - dephase_matrix(lambda_e)).cwiseAbs().maxCoeff() > tol) {
                cls.is_dio = false;
            }
        }
    }
    return cls;
}

AlphaGioCertificate is_alpha_gio(const KrausChannel& ch, double alpha, int trials,
                                 std::uint64_t seed) {
    if (!classify(ch).is_gio) {
        throw NotGio("alpha-GIO certificate requires a GIO channel");
    }
    if (!(alpha > 0.0 && alpha <= 2.0) || alpha == 1.0) {
        throw AlphaOutOfRange("alpha-GIO requires alpha in (0,2], alpha != 1");
    }
    AlphaGioCertificate cert;
    cert.trials = trials;
    SplitMixRng rng(seed);
    for (int t = 0; t < trials; ++t) {
        SplitMixRng sub = rng.split(static_cast<std::uint64_t>(t));
        const DensityMatrix rho = random_mixed_state(ch.dim(), sub);
        const IncoherentState lhs = dephase_alpha(apply(ch, rho), alpha).state;
        const DensityMatrix rhs =
            apply(ch, dephase_alpha(rho, alpha).state.to_density());
        // both sides diagonal, so the trace norm is an l1 difference
        const double residual =
            (lhs.probs - rhs.matrix().diagonal().real()).cwiseAbs().sum();
        cert.max_residual = std::max(cert.max_residual, residual);
        if (residual > 1e-8 && !cert.witness) {
            cert.witness = rho.matrix();
        }
    }
    cert.certified = !cert.witness.has_value();
    return cert;
}

KrausChannel make_fig1_gio() {
    ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
    ComplexMatrix k2 = ComplexMatrix::Zero(2, 2);
    k1(0, 0) = 1.0 / std::sqrt(2.0);
    k1(1, 1) = std::sqrt(3.0) / 2.0;
    k2(0, 0) = 1.0 / std::sqrt(2.0);
    k2(1, 1) = 0.5;
    return KrausChannel({k1, k2}, 1e-12);
}

KrausChannel make_fig2_io(double b) {
    if (!(std::abs(b) <= 1.0)) throw ParamOutOfRange("|b| must be <= 1");
    const double a = std::sqrt(1.0 - b * b);
    ComplexMatrix k1 = ComplexMatrix::Zero(3, 3);
    ComplexMatrix k2 = ComplexMatrix::Zero(3, 3);
    k1(0, 1) = 1.0;
    k1(2, 2) = a;
    k2(0, 0) = 1.0;
    k2(1, 2) = b;
    return KrausChannel({k1, k2}, 1e-12);
}

KrausChannel make_fig3_gio() { return make_fig1_gio(); }

KrausChannel make_diag_unitary_mixture(const std::vector<RealVector>& phases,
                                       const std::vector<double>& weights) {
    if (phases.empty() || phases.size() != weights.size()) {
        throw ParamOutOfRange("need matching nonempty phases and weights");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw ParamOutOfRange("mixture weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-10) throw ParamOutOfRange("mixture weights must sum to 1");
    const Eigen::Index d = phases.front().size();
    std::vector<ComplexMatrix> kraus;
    for (std::size_t k = 0; k < phases.size(); ++k) {
        if (phases[k].size() != d) throw DimensionMismatch("phase vectors must share one dim");
        ComplexMatrix m = ComplexMatrix::Zero(d, d);
        for (Eigen::Index j = 0; j < d; ++j) {
            m(j, j) = std::sqrt(weights[k]) * std::exp(Complex(0.0, phases[k][j]));
        }
        kraus.push_back(std::move(m));
    }
    return KrausChannel(std::move(kraus), 1e-9);
}

KrausChannel read_channel(std::istream& in) {
    std::string line;
    int lineno = 0;
    // header: "dim n_kraus" (comments allowed above)
    while (std::getline(in, line)) {
        ++lineno;
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        break;
    }
    std::istringstream header(line);
    long dim = 0, n = 0;
    if (!(header >> dim >> n) || dim < 1 || n < 1) {
        throw ParseError("line " + std::to_string(lineno) + ": expected 'dim n_kraus'");
    }
    std::vector<ComplexMatrix> kraus;
    for (long i = 0; i < n; ++i) {
        ComplexMatrix k = read_matrix(in);
        if (k.rows() != dim) {
            throw ParseError("Kraus block " + std::to_string(i) + " has dim " +
                             std::to_string(k.rows()) + ", header says " + std::to_string(dim));
        }
        kraus.push_back(std::move(k));
    }
    return KrausChannel(std::move(kraus));
}

KrausChannel read_channel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_channel(in);
}

void write_channel(std::ostream& out, const KrausChannel& ch) {
    out << ch.dim() << " " << ch.kraus().size() << "\n";
    for (const auto& k : ch.kraus()) write_matrix(out, k);
}

} // namespace qcoh
