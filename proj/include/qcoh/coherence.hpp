#pragma once

// Coherence functionals in the fixed basis: the dephasings Delta, Delta_alpha
// and its unnormalized variant, and the full measure catalog
//
//   C_REL        S(Delta rho) - S(rho)
//   CR1          (alpha/(alpha-1)) log N(rho)            [closed form]
//   CR2          S^R_a(Delta rho) - S^R_a(rho)
//   CR3          S^R_a(rho || Delta rho)
//   CT1          (N(rho)^alpha - 1)/(alpha - 1)          [closed form]
//   CT2          S^T_a(Delta rho) - S^T_a(rho)
//   CT_NEW       S^T_a(Delta_a rho) - S^T_a(rho)
//   CR_NEW       S^R_a(Delta_a rho) - S^R_a(rho)
//   C_F          S_f(Delta rho) - S_f(rho)   (f-entropy variant 1 or 2)
//   C_HS         S^T_2(Delta rho) - S^T_2(rho)  = min_delta ||rho-delta||_2^2
//   C1_IMPROVED  Tr |Delta(rho^alpha)^{1/alpha} - rho|
//   C2_IMPROVED  Tr |Delta(rho^alpha) - rho^alpha|^{1/alpha}
//
// where N(rho) = sum_j <j|rho^alpha|j>^{1/alpha}.

#include <optional>

#include "qcoh/divergences.hpp"
#include "qcoh/linalg.hpp"

namespace qcoh {

// Diagonal of a state in the fixed basis: nonnegative, sums to 1.
struct IncoherentState {
    RealVector probs;

    explicit IncoherentState(RealVector p);
    int dim() const { return static_cast<int>(probs.size()); }
    DensityMatrix to_density() const { return DensityMatrix::from_probabilities(probs); }
};

// Delta(rho): probs[j] = Re <j|rho|j>.  Idempotent.
IncoherentState dephase(const DensityMatrix& rho);

struct DephasedAlpha {
    IncoherentState state;
    double normalization;  // N(rho) > 0
};

// Delta_alpha(rho): the incoherent state closest to rho in Tsallis/Renyi
// relative entropy; probs[j] = <j|rho^alpha|j>^{1/alpha} / N(rho).
// alpha in (0,2], alpha != 1.  Fixed point on diagonal states.
DephasedAlpha dephase_alpha(const DensityMatrix& rho, double alpha);

// Unnormalized variant: sum_j <j|rho^alpha|j>^{1/alpha} |j><j|
//                     = Delta(rho^alpha)^{1/alpha}.
// Its trace equals N(rho).
ComplexMatrix dephase_alpha_unnormalized(const DensityMatrix& rho, double alpha);

enum class Measure {
    CRel,
    CR1,
    CR2,
    CR3,
    CT1,
    CT2,
    CTNew,
    CRNew,
    CF,
    CHS,
    C1Improved,
    C2Improved,
};

// A measure tag plus its parameter, validated against the measure's domain:
// CR1/CT1/CR2/CT2/CT_NEW/CR_NEW/C*_IMPROVED take alpha in (0,2], alpha != 1;
// CR3 takes alpha in (0,inf), alpha != 1; C_F takes a catalog f and variant.
class CoherenceMeasureId {
public:
    static CoherenceMeasureId c_rel();
    static CoherenceMeasureId cr1(double alpha);
    static CoherenceMeasureId cr2(double alpha);
    static CoherenceMeasureId cr3(double alpha);
    static CoherenceMeasureId ct1(double alpha);
    static CoherenceMeasureId ct2(double alpha);
    static CoherenceMeasureId ct_new(double alpha);
    static CoherenceMeasureId cr_new(double alpha);
    static CoherenceMeasureId c_f(const CatalogFunction& f, int variant = 1);
    static CoherenceMeasureId c_hs();
    static CoherenceMeasureId c1_improved(double alpha);
    static CoherenceMeasureId c2_improved(double alpha);

    Measure tag() const { return tag_; }
    double alpha() const { return alpha_; }
    const std::optional<CatalogFunction>& f() const { return f_; }
    int variant() const { return variant_; }
    std::string name() const;

private:
    CoherenceMeasureId(Measure t, double a) : tag_(t), alpha_(a) {}
    Measure tag_;
    double alpha_ = 0.0;
    std::optional<CatalogFunction> f_;
    int variant_ = 1;
};

// Evaluates the measure; >= 0 up to float noise, exactly 0 on diagonal
// states, possibly +inf for CR3 on states with a vanishing diagonal entry
// and alpha > 1.
double coherence(const DensityMatrix& rho, const CoherenceMeasureId& id);

// Closed form for CT_NEW on a pure state with basis overlaps chi_j:
//   (1/(1-alpha)) [ (sum_j chi_j^{1/alpha})^{-alpha} - 1 ]
double pure_state_ct(const IncoherentState& chi, double alpha);

// Block-diagonal p1 rho1 (+) p2 rho2 with the bases concatenated.
DensityMatrix direct_sum(double p1, const DensityMatrix& rho1, double p2,
                         const DensityMatrix& rho2);

} // namespace qcoh
