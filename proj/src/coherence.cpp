#include "qcoh/coherence.hpp"

#include <cmath>
#include <string>

namespace qcoh {

IncoherentState::IncoherentState(RealVector p) : probs(std::move(p)) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < probs.size(); ++j) {
        if (probs[j] < -1e-10) {
            throw NotPositive("incoherent state has negative weight " + num_str(probs[j]));
        }
        probs[j] = std::max(probs[j], 0.0);
        sum += probs[j];
    }
    if (std::abs(sum - 1.0) > 1e-10) {
        throw TraceMismatch("incoherent state weights sum to " + num_str(sum));
    }
}

IncoherentState dephase(const DensityMatrix& rho) {
    return IncoherentState(rho.matrix().diagonal().real());
}

namespace {

void require_delta_alpha_range(double alpha) {
    if (!(alpha > 0.0 && alpha <= 2.0) || alpha == 1.0) {
        throw AlphaOutOfRange("Delta_alpha requires alpha in (0,2], alpha != 1; got " +
                              num_str(alpha));
    }
}

// <j|rho^alpha|j>^{1/alpha} for all j.  Diagonal entries below 1e-300
// contribute 0 (continuous extension).  Diagonal states are an exact fixed
// point: (p^alpha)^{1/alpha} = p, so the weights are read off directly.
RealVector alpha_weights(const DensityMatrix& rho, double alpha) {
    if (is_exactly_diagonal(rho.matrix())) {
        return rho.matrix().diagonal().real().cwiseMax(0.0);
    }
    const ComplexMatrix ra = rho.spectrum().power(alpha);
    RealVector w(rho.dim());
    for (Eigen::Index j = 0; j < w.size(); ++j) {
        const double a = std::max(std::real(ra(j, j)), 0.0);
        w[j] = a < 1e-300 ? 0.0 : std::pow(a, 1.0 / alpha);
    }
    return w;
}

} // namespace

DephasedAlpha dephase_alpha(const DensityMatrix& rho, double alpha) {
    require_delta_alpha_range(alpha);
    if (is_exactly_diagonal(rho.matrix())) {
        // fixed point with N = sum_j p_j = 1 exactly
        return DephasedAlpha{IncoherentState(rho.matrix().diagonal().real()), 1.0};
    }
    RealVector w = alpha_weights(rho, alpha);
    const double n = w.sum();
    return DephasedAlpha{IncoherentState(w / n), n};
}

ComplexMatrix dephase_alpha_unnormalized(const DensityMatrix& rho, double alpha) {
    require_delta_alpha_range(alpha);
    const RealVector w = alpha_weights(rho, alpha);
    ComplexMatrix m = ComplexMatrix::Zero(rho.dim(), rho.dim());
    for (Eigen::Index j = 0; j < w.size(); ++j) m(j, j) = w[j];
    return m;
}

// --- CoherenceMeasureId -----------------------------------------------------

namespace {

double checked_alpha_02(double alpha, const char* which) {
    if (!(alpha > 0.0 && alpha <= 2.0) || alpha == 1.0) {
        throw AlphaOutOfRange(std::string(which) + " requires alpha in (0,2], alpha != 1; got " +
                              num_str(alpha));
    }
    return alpha;
}

} // namespace

CoherenceMeasureId CoherenceMeasureId::c_rel() { return {Measure::CRel, 0.0}; }
CoherenceMeasureId CoherenceMeasureId::cr1(double alpha) {
    return {Measure::CR1, checked_alpha_02(alpha, "CR1")};
}
CoherenceMeasureId CoherenceMeasureId::cr2(double alpha) {
    return {Measure::CR2, checked_alpha_02(alpha, "CR2")};
}
CoherenceMeasureId CoherenceMeasureId::cr3(double alpha) {
    if (!(alpha > 0.0) || alpha == 1.0) {
        throw AlphaOutOfRange("CR3 requires alpha in (0,inf), alpha != 1; got " +
                              num_str(alpha));
    }
    return {Measure::CR3, alpha};
}
CoherenceMeasureId CoherenceMeasureId::ct1(double alpha) {
    return {Measure::CT1, checked_alpha_02(alpha, "CT1")};
}
CoherenceMeasureId CoherenceMeasureId::ct2(double alpha) {
    return {Measure::CT2, checked_alpha_02(alpha, "CT2")};
}
CoherenceMeasureId CoherenceMeasureId::ct_new(double alpha) {
    return {Measure::CTNew, checked_alpha_02(alpha, "CT_NEW")};
}
CoherenceMeasureId CoherenceMeasureId::cr_new(double alpha) {
    return {Measure::CRNew, checked_alpha_02(alpha, "CR_NEW")};
}
CoherenceMeasureId CoherenceMeasureId::c_f(const CatalogFunction& f, int variant) {
    if (variant != 1 && variant != 2) throw ParamOutOfRange("C_F variant must be 1 or 2");
    CoherenceMeasureId id(Measure::CF, f.alpha());
    id.f_ = f;
    id.variant_ = variant;
    return id;
}
CoherenceMeasureId CoherenceMeasureId::c_hs() { return {Measure::CHS, 2.0}; }
CoherenceMeasureId CoherenceMeasureId::c1_improved(double alpha) {
    return {Measure::C1Improved, checked_alpha_02(alpha, "C1_IMPROVED")};
}
CoherenceMeasureId CoherenceMeasureId::c2_improved(double alpha) {
    return {Measure::C2Improved, checked_alpha_02(alpha, "C2_IMPROVED")};
}

std::string CoherenceMeasureId::name() const {
    switch (tag_) {
        case Measure::CRel: return "c_rel";
        case Measure::CR1: return "cr1";
        case Measure::CR2: return "cr2";
        case Measure::CR3: return "cr3";
        case Measure::CT1: return "ct1";
        case Measure::CT2: return "ct2";
        case Measure::CTNew: return "ct_new";
        case Measure::CRNew: return "cr_new";
        case Measure::CF: return std::string("c_f(") + f_->name() + ")";
        case Measure::CHS: return "c_hs";
        case Measure::C1Improved: return "c1_improved";
        case Measure::C2Improved: return "c2_improved";
    }
    return "?";
}

// --- coherence dispatch -----------------------------------------------------

namespace {

double entropy_increment_tsallis(const DensityMatrix& rho, const DensityMatrix& target,
                                 double alpha) {
    const AlphaParam p = AlphaParam::tsallis(alpha);
    return tsallis_entropy(target, p) - tsallis_entropy(rho, p);
}

double entropy_increment_renyi(const DensityMatrix& rho, const DensityMatrix& target,
                               double alpha) {
    const AlphaParam p = AlphaParam::renyi(alpha);
    return renyi_entropy(target, p) - renyi_entropy(rho, p);
}

} // namespace

double coherence(const DensityMatrix& rho, const CoherenceMeasureId& id) {
    // every measure vanishes identically on incoherent states; an exactly
    // diagonal matrix satisfies that hypothesis exactly
    if (is_exactly_diagonal(rho.matrix())) return 0.0;
    switch (id.tag()) {
        case Measure::CRel: {
            const DensityMatrix d = dephase(rho).to_density();
            return von_neumann_entropy(d) - von_neumann_entropy(rho);
        }
        case Measure::CR2:
            return entropy_increment_renyi(rho, dephase(rho).to_density(), id.alpha());
        case Measure::CT2:
            return entropy_increment_tsallis(rho, dephase(rho).to_density(), id.alpha());
        case Measure::CR3:
            return renyi_relative_entropy(rho, dephase(rho).to_density(),
                                          AlphaParam::renyi(id.alpha()));
        case Measure::CR1: {
            const double n = dephase_alpha(rho, id.alpha()).normalization;
            return id.alpha() / (id.alpha() - 1.0) * std::log(n);
        }
        case Measure::CT1: {
            const double n = dephase_alpha(rho, id.alpha()).normalization;
            return (std::pow(n, id.alpha()) - 1.0) / (id.alpha() - 1.0);
        }
        case Measure::CTNew:
            return entropy_increment_tsallis(
                rho, dephase_alpha(rho, id.alpha()).state.to_density(), id.alpha());
        case Measure::CRNew:
            return entropy_increment_renyi(
                rho, dephase_alpha(rho, id.alpha()).state.to_density(), id.alpha());
        case Measure::CF: {
            const DensityMatrix d = dephase(rho).to_density();
            return f_entropy(d, *id.f(), id.variant()) - f_entropy(rho, *id.f(), id.variant());
        }
        case Measure::CHS:
            return entropy_increment_tsallis(rho, dephase(rho).to_density(), 2.0);
        case Measure::C1Improved:
            return trace_norm(dephase_alpha_unnormalized(rho, id.alpha()) - rho.matrix());
        case Measure::C2Improved: {
            const ComplexMatrix ra = matrix_power(rho, id.alpha());
            ComplexMatrix diff = -ra;
            diff.diagonal().setZero();  // Delta(rho^alpha) - rho^alpha
            return abs_power_trace(diff, 1.0 / id.alpha());
        }
    }
    throw MeasureUndefined("unknown measure tag");
}

double pure_state_ct(const IncoherentState& chi, double alpha) {
    require_delta_alpha_range(alpha);
    double n = 0.0;
    for (Eigen::Index j = 0; j < chi.probs.size(); ++j) {
        if (chi.probs[j] > 0.0) n += std::pow(chi.probs[j], 1.0 / alpha);
    }
    return (std::pow(n, -alpha) - 1.0) / (1.0 - alpha);
}

DensityMatrix direct_sum(double p1, const DensityMatrix& rho1, double p2,
                         const DensityMatrix& rho2) {
    if (!(p1 >= 0.0 && p2 >= 0.0) || std::abs(p1 + p2 - 1.0) > 1e-10) {
        throw ParamOutOfRange("direct_sum weights must be nonnegative and sum to 1");
    }
    const int d1 = rho1.dim(), d2 = rho2.dim();
    ComplexMatrix m = ComplexMatrix::Zero(d1 + d2, d1 + d2);
    m.topLeftCorner(d1, d1) = p1 * rho1.matrix();
    m.bottomRightCorner(d2, d2) = p2 * rho2.matrix();
    return DensityMatrix(m, 1e-9);
}

} // namespace qcoh
