#pragma once

// Entropies and divergences: von Neumann, Tsallis, Renyi (absolute and
// relative), the quasi-relative entropy S_f for a catalog of admissible
// functions f, and the two f-entropies built from it.
//
// Conventions used throughout (all logs natural):
//   0 log 0 = 0, 0 * f(anything) = 0, and relative entropies return +inf
//   when alpha > 1 and supp(rho) is not contained in supp(sigma).

#include <limits>

#include "qcoh/linalg.hpp"

namespace qcoh {

enum class EntropyFamily { Tsallis, Renyi };

// Tsallis: alpha in (0,2], alpha != 1.  Renyi: alpha in (0,inf), alpha != 1.
// The alpha = 1 limit is exposed only through von_neumann_entropy.
class AlphaParam {
public:
    static AlphaParam tsallis(double alpha);
    static AlphaParam renyi(double alpha);

    double alpha() const { return alpha_; }
    EntropyFamily family() const { return family_; }

private:
    AlphaParam(double a, EntropyFamily f) : alpha_(a), family_(f) {}
    double alpha_;
    EntropyFamily family_;
};

// Admissible functions for the quasi-relative entropy: operator convex,
// operator monotone decreasing, f(1) = 0.  Operator convexity is not
// decidable numerically, so only these two families are constructible:
//
//   NEG_LOG:     f(x) = -log x
//   TSALLIS_F:   f(x) = (1 - x^{1-alpha}) / (1 - alpha),  alpha in (0,2)
class CatalogFunction {
public:
    enum class Kind { NegLog, TsallisF };

    static CatalogFunction neg_log() { return CatalogFunction(Kind::NegLog, 0.0); }
    static CatalogFunction tsallis_f(double alpha);

    // f(x) for x > 0
    double operator()(double x) const;

    // transpose function x f(1/x) on [0,inf); transpose(0) = 0 by the
    // 0*inf = 0 convention
    double transpose(double x) const;

    // lim_{x->0+} f(x); +inf for NEG_LOG and for TSALLIS_F with alpha > 1
    double limit_at_zero() const;

    Kind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    const char* name() const { return kind_ == Kind::NegLog ? "neg_log" : "tsallis_f"; }

private:
    CatalogFunction(Kind k, double a) : kind_(k), alpha_(a) {}
    Kind kind_;
    double alpha_;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// -sum_j l_j log l_j
double von_neumann_entropy(const DensityMatrix& rho);

// (Tr rho^alpha - 1) / (1 - alpha)
double tsallis_entropy(const DensityMatrix& rho, const AlphaParam& alpha);

// log(Tr rho^alpha) / (1 - alpha)
double renyi_entropy(const DensityMatrix& rho, const AlphaParam& alpha);

// (Tr(rho^alpha sigma^{1-alpha}) - 1) / (alpha - 1); +inf on support
// violation for alpha > 1
double tsallis_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                const AlphaParam& alpha);

// log(Tr(rho^alpha sigma^{1-alpha})) / (alpha - 1)
double renyi_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                              const AlphaParam& alpha);

// S_f(A||B) = sum_{j,k} l_j f(m_k / l_j) |<psi_k|phi_j>|^2 over the spectral
// decompositions A = sum l_j phi_j phi_j*, B = sum m_k psi_k psi_k*.
// A, B Hermitian PSD; l_j = 0 terms contribute 0; l_j > 0 with m_k = 0 uses
// lim_{x->0+} f(x) and may produce +inf.
double quasi_relative_entropy(const ComplexMatrix& a, const ComplexMatrix& b,
                              const CatalogFunction& f);

// variant 1:  -sum_j l_j f(1/l_j)                  ( = -S_f(rho || I)   )
// variant 2:  f(1/d) - sum_j l_j f(1/(d l_j))      ( = f(1/d) - S_f(rho || I/d) )
//
// Zero eigenvalues contribute 0 via the transpose function.
double f_entropy(const DensityMatrix& rho, const CatalogFunction& f, int variant);

} // namespace qcoh
