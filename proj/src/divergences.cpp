#include "qcoh/divergences.hpp"

#include <cmath>
#include <string>

namespace qcoh {

AlphaParam AlphaParam::tsallis(double alpha) {
    if (!(alpha > 0.0 && alpha <= 2.0) || alpha == 1.0) {
        throw AlphaOutOfRange("Tsallis alpha must lie in (0,2], alpha != 1; got " +
                              num_str(alpha));
    }
    return AlphaParam(alpha, EntropyFamily::Tsallis);
}

AlphaParam AlphaParam::renyi(double alpha) {
    if (!(alpha > 0.0) || alpha == 1.0) {
        throw AlphaOutOfRange("Renyi alpha must lie in (0,inf), alpha != 1; got " +
                              num_str(alpha));
    }
    return AlphaParam(alpha, EntropyFamily::Renyi);
}

CatalogFunction CatalogFunction::tsallis_f(double alpha) {
    if (!(alpha > 0.0 && alpha < 2.0) || alpha == 1.0) {
        throw AlphaOutOfRange("TSALLIS_F alpha must lie in (0,2), alpha != 1; got " +
                              num_str(alpha));
    }
    return CatalogFunction(Kind::TsallisF, alpha);
}

double CatalogFunction::operator()(double x) const {
    if (kind_ == Kind::NegLog) return -std::log(x);
    return (1.0 - std::pow(x, 1.0 - alpha_)) / (1.0 - alpha_);
}

double CatalogFunction::transpose(double x) const {
    if (x <= 0.0) return 0.0;
    if (kind_ == Kind::NegLog) return x * std::log(x);
    // x f(1/x) = (x - x^alpha) / (1 - alpha)
    return (x - std::pow(x, alpha_)) / (1.0 - alpha_);
}

double CatalogFunction::limit_at_zero() const {
    if (kind_ == Kind::NegLog) return kInfinity;
    return alpha_ < 1.0 ? 1.0 / (1.0 - alpha_) : kInfinity;
}

namespace {

void require_family(const AlphaParam& p, EntropyFamily f, const char* op) {
    if (p.family() != f) {
        throw AlphaOutOfRange(std::string(op) + ": alpha parameter has the wrong family");
    }
}

double clamped_power_sum(const Spectrum& s, double p) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < s.eigenvalues.size(); ++j) {
        const double l = s.clamped(j);
        if (l > 0.0) sum += std::pow(l, p);
    }
    return sum;
}

// Mass of rho on the numerical kernel of sigma.
double kernel_overlap(const DensityMatrix& rho, const DensityMatrix& sigma) {
    const Spectrum& ss = sigma.spectrum();
    double mass = 0.0;
    for (Eigen::Index k = 0; k < ss.eigenvalues.size(); ++k) {
        if (ss.clamped(k) > 0.0) continue;
        const ComplexVector v = ss.eigenvectors.col(k);
        mass += std::real(v.dot(rho.matrix() * v));
    }
    return mass;
}

// Tr(rho^alpha sigma^{1-alpha}) via matrix products of support powers.
// Caller handles the alpha > 1 support condition.
double weighted_power_trace(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha) {
    const ComplexMatrix ra = rho.spectrum().power(alpha);
    const ComplexMatrix sb = sigma.spectrum().power(1.0 - alpha);
    return std::real((ra * sb).trace());
}

} // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
    const Spectrum& spec = rho.spectrum();
    double s = 0.0;
    for (Eigen::Index j = 0; j < spec.eigenvalues.size(); ++j) {
        const double l = spec.clamped(j);
        if (l > 0.0) s -= l * std::log(l);
    }
    return s;
}

double tsallis_entropy(const DensityMatrix& rho, const AlphaParam& alpha) {
    require_family(alpha, EntropyFamily::Tsallis, "tsallis_entropy");
    const double a = alpha.alpha();
    return (clamped_power_sum(rho.spectrum(), a) - 1.0) / (1.0 - a);
}

double renyi_entropy(const DensityMatrix& rho, const AlphaParam& alpha) {
    require_family(alpha, EntropyFamily::Renyi, "renyi_entropy");
    const double a = alpha.alpha();
    return std::log(clamped_power_sum(rho.spectrum(), a)) / (1.0 - a);
}

double tsallis_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                const AlphaParam& alpha) {
    require_family(alpha, EntropyFamily::Tsallis, "tsallis_relative_entropy");
    if (rho.dim() != sigma.dim()) throw DimensionMismatch("state dimensions differ");
    const double a = alpha.alpha();
    if (a > 1.0 && kernel_overlap(rho, sigma) > 1e-12) return kInfinity;
    return (weighted_power_trace(rho, sigma, a) - 1.0) / (a - 1.0);
}

double renyi_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                              const AlphaParam& alpha) {
    require_family(alpha, EntropyFamily::Renyi, "renyi_relative_entropy");
    if (rho.dim() != sigma.dim()) throw DimensionMismatch("state dimensions differ");
    const double a = alpha.alpha();
    if (a > 1.0 && kernel_overlap(rho, sigma) > 1e-12) return kInfinity;
    const double t = weighted_power_trace(rho, sigma, a);
    if (t <= 0.0) return kInfinity;  // disjoint supports, alpha < 1
    return std::log(t) / (a - 1.0);
}

double quasi_relative_entropy(const ComplexMatrix& a, const ComplexMatrix& b,
                              const CatalogFunction& f) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("operator dimensions differ");
    }
    const Spectrum sa = hermitian_eig(a);
    const Spectrum sb = hermitian_eig(b);
    if (sa.eigenvalues[sa.dim() - 1] < -kHermitianTol) {
        throw NotPositive("first argument has eigenvalue " +
                          num_str(sa.eigenvalues[sa.dim() - 1]));
    }
    if (sb.eigenvalues[sb.dim() - 1] < -kHermitianTol) {
        throw NotPositive("second argument has eigenvalue " +
                          num_str(sb.eigenvalues[sb.dim() - 1]));
    }
    double sum = 0.0;
    for (Eigen::Index j = 0; j < sa.dim(); ++j) {
        const double lam = sa.eigenvalues[j];
        if (lam <= kEigenZeroClamp) continue;  // 0 * f = 0
        for (Eigen::Index k = 0; k < sb.dim(); ++k) {
            const double overlap =
                std::norm(sb.eigenvectors.col(k).dot(sa.eigenvectors.col(j)));
            if (overlap <= 1e-14) continue;
            const double mu = sb.eigenvalues[k];
            const double fx = mu > kEigenZeroClamp ? f(mu / lam) : f.limit_at_zero();
            if (std::isinf(fx)) return kInfinity;
            sum += lam * fx * overlap;
        }
    }
    return sum;
}

double f_entropy(const DensityMatrix& rho, const CatalogFunction& f, int variant) {
    if (variant != 1 && variant != 2) {
        throw ParamOutOfRange("f_entropy variant must be 1 or 2");
    }
    const Spectrum& spec = rho.spectrum();
    if (variant == 1) {
        double s = 0.0;
        for (Eigen::Index j = 0; j < spec.eigenvalues.size(); ++j) {
            s -= f.transpose(spec.clamped(j));
        }
        return s;
    }
    const double d = static_cast<double>(rho.dim());
    double s = f(1.0 / d);
    for (Eigen::Index j = 0; j < spec.eigenvalues.size(); ++j) {
        s -= f.transpose(d * spec.clamped(j)) / d;
    }
    return s;
}

} // namespace qcoh
