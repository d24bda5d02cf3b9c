#include "qcoh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include <Eigen/SVD>

namespace qcoh {

double hermiticity_defect(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("matrix is not square: " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

// Rotate each column so its first component with |v_i| > 1e-8 is real
// positive.  Preserves orthonormality.
void fix_phases(ComplexMatrix& vecs) {
    for (Eigen::Index c = 0; c < vecs.cols(); ++c) {
        for (Eigen::Index r = 0; r < vecs.rows(); ++r) {
            const double a = std::abs(vecs(r, c));
            if (a > 1e-8) {
                vecs.col(c) *= std::conj(vecs(r, c)) / a;
                break;
            }
        }
    }
}

bool column_less(const ComplexMatrix& vecs, Eigen::Index a, Eigen::Index b) {
    for (Eigen::Index r = 0; r < vecs.rows(); ++r) {
        const Complex x = vecs(r, a), y = vecs(r, b);
        if (x.real() != y.real()) return x.real() < y.real();
        if (x.imag() != y.imag()) return x.imag() < y.imag();
    }
    return false;
}

Spectrum sorted_spectrum(const RealVector& vals, const ComplexMatrix& vecs) {
    ComplexMatrix fixed = vecs;
    fix_phases(fixed);
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(vals.size()));
    std::iota(idx.begin(), idx.end(), Eigen::Index{0});
    std::stable_sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
        if (vals[a] != vals[b]) return vals[a] > vals[b];
        return column_less(fixed, a, b);
    });
    Spectrum s;
    s.eigenvalues.resize(vals.size());
    s.eigenvectors.resize(fixed.rows(), fixed.cols());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        s.eigenvalues[static_cast<Eigen::Index>(k)] = vals[idx[k]];
        s.eigenvectors.col(static_cast<Eigen::Index>(k)) = fixed.col(idx[k]);
    }
    return s;
}

} // namespace

ComplexMatrix Spectrum::power(double p) const {
    return apply([p](double l) { return l == 0.0 ? 0.0 : std::pow(l, p); });
}

bool is_exactly_diagonal(const ComplexMatrix& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (r != c && m(r, c) != Complex(0.0, 0.0)) return false;
        }
    }
    return true;
}

Spectrum hermitian_eig(const ComplexMatrix& m) {
    const double defect = hermiticity_defect(m);
    if (defect > kHermitianTol) {
        throw NotHermitian("hermiticity defect " + num_str(defect) + " exceeds " +
                           num_str(kHermitianTol));
    }
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw Error("eigendecomposition failed to converge");
    }
    return sorted_spectrum(solver.eigenvalues(), solver.eigenvectors());
}

namespace {

// Exact spectrum of a diagonal matrix: basis columns sorted by descending
// entry, index order breaking ties (the lexicographic rule for basis
// columns).
Spectrum diagonal_spectrum(const RealVector& p) {
    const Eigen::Index d = p.size();
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(d));
    std::iota(idx.begin(), idx.end(), Eigen::Index{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return p[a] > p[b]; });
    Spectrum s;
    s.exact = true;
    s.eigenvalues.resize(d);
    s.eigenvectors = ComplexMatrix::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        s.eigenvalues[k] = p[idx[static_cast<std::size_t>(k)]];
        s.eigenvectors(idx[static_cast<std::size_t>(k)], k) = 1.0;
    }
    return s;
}

} // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix& m, double tol) : tol_(tol) {
    if (tol < 0) throw ParamOutOfRange("validation tolerance must be nonnegative");
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw DimensionMismatch("density matrix must be square and nonempty");
    }
    const double defect = hermiticity_defect(m);
    if (defect > tol) {
        throw NotHermitian("hermiticity defect " + num_str(defect) + " exceeds tol " +
                           num_str(tol));
    }

    if (is_exactly_diagonal(m)) {
        // keep diagonal input exactly diagonal: its spectrum is data, not
        // solver output, so remains exempt from the noise clamp
        RealVector p = m.diagonal().real();
        const double min_p = p.minCoeff();
        if (min_p < -tol) {
            throw NotPositive("minimum eigenvalue " + num_str(min_p) + " below -tol " +
                              num_str(-tol));
        }
        const double trace = p.sum();
        if (std::abs(trace - 1.0) > tol) {
            throw TraceMismatch("|Tr - 1| = " + num_str(std::abs(trace - 1.0)) +
                                " exceeds tol " + num_str(tol));
        }
        p = p.cwiseMax(0.0);
        p /= p.sum();
        mat_ = ComplexMatrix::Zero(p.size(), p.size());
        mat_.diagonal() = p.cast<Complex>();
        spec_ = diagonal_spectrum(p);
        return;
    }

    Spectrum s = hermitian_eig(0.5 * (m + m.adjoint()));
    const double min_eig = s.eigenvalues[s.eigenvalues.size() - 1];
    if (min_eig < -tol) {
        throw NotPositive("minimum eigenvalue " + num_str(min_eig) + " below -tol " +
                          num_str(-tol));
    }
    const double trace = s.eigenvalues.sum();
    if (std::abs(trace - 1.0) > tol) {
        throw TraceMismatch("|Tr - 1| = " + num_str(std::abs(trace - 1.0)) +
                            " exceeds tol " + num_str(tol));
    }
    RealVector clamped = s.eigenvalues.cwiseMax(0.0);
    clamped /= clamped.sum();
    s.eigenvalues = clamped;
    ComplexMatrix rebuilt = s.eigenvectors * clamped.asDiagonal() * s.eigenvectors.adjoint();
    mat_ = 0.5 * (rebuilt + rebuilt.adjoint());
    spec_ = std::move(s);
}

DensityMatrix DensityMatrix::from_probabilities(const RealVector& probs) {
    const Eigen::Index d = probs.size();
    if (d < 1) throw DimensionMismatch("empty probability vector");
    double sum = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
        if (probs[j] < -1e-10) {
            throw NotPositive("negative probability " + num_str(probs[j]));
        }
        sum += std::max(probs[j], 0.0);
    }
    if (std::abs(sum - 1.0) > 1e-10) {
        throw TraceMismatch("probabilities sum to " + num_str(sum));
    }
    RealVector p = probs.cwiseMax(0.0) / sum;

    DensityMatrix rho;
    rho.tol_ = 1e-10;
    rho.mat_ = ComplexMatrix::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) rho.mat_(j, j) = p[j];
    rho.spec_ = diagonal_spectrum(p);
    return rho;
}

DensityMatrix DensityMatrix::pure(const ComplexVector& amplitudes) {
    const double n = amplitudes.norm();
    if (n <= 0) throw NotPositive("zero amplitude vector");
    const ComplexVector v = amplitudes / n;
    return DensityMatrix(v * v.adjoint(), 1e-12);
}

DensityMatrix validate_density(const ComplexMatrix& m, double tol) {
    return DensityMatrix(m, tol);
}

ComplexMatrix matrix_power(const DensityMatrix& rho, double alpha) {
    if (!(alpha > 0)) throw ParamOutOfRange("matrix_power requires alpha > 0");
    return rho.spectrum().power(alpha);
}

double trace_norm(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("trace_norm expects a square matrix");
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues().sum();
}

double abs_power_trace(const ComplexMatrix& m, double p) {
    if (!(p > 0)) throw ParamOutOfRange("abs_power_trace requires p > 0");
    const Spectrum s = hermitian_eig(m);
    double sum = 0.0;
    for (Eigen::Index j = 0; j < s.eigenvalues.size(); ++j) {
        const double a = std::abs(s.eigenvalues[j]);
        if (a > 0) sum += std::pow(a, p);
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

// Next line that is neither blank nor a '#' comment; false at EOF.
bool next_content_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

Complex parse_entry(const std::string& tok, int lineno) {
    const auto comma = tok.find(',');
    if (comma == std::string::npos) {
        throw ParseError("line " + std::to_string(lineno) + ": entry '" + tok +
                         "' is not of the form re,im");
    }
    try {
        std::size_t used = 0;
        const double re = std::stod(tok.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("trailing");
        const std::string imtok = tok.substr(comma + 1);
        const double im = std::stod(imtok, &used);
        if (used != imtok.size()) throw std::invalid_argument("trailing");
        return {re, im};
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": cannot parse entry '" + tok + "'");
    }
}

} // namespace

ComplexMatrix read_matrix(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_content_line(in, line, lineno)) {
        throw ParseError("missing dimension line");
    }
    long dim = 0;
    try {
        std::size_t used = 0;
        dim = std::stol(line, &used);
        std::istringstream rest(line.substr(used));
        std::string extra;
        if (rest >> extra) throw std::invalid_argument("extra tokens");
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": expected the matrix dimension, got '" +
                         line + "'");
    }
    if (dim < 1 || dim > 4096) {
        throw ParseError("line " + std::to_string(lineno) + ": dimension " + std::to_string(dim) +
                         " out of range");
    }
    ComplexMatrix m(dim, dim);
    for (long r = 0; r < dim; ++r) {
        if (!next_content_line(in, line, lineno)) {
            throw ParseError("unexpected end of input: expected " + std::to_string(dim) +
                             " matrix rows, got " + std::to_string(r));
        }
        std::istringstream row(line);
        std::string tok;
        for (long c = 0; c < dim; ++c) {
            if (!(row >> tok)) {
                throw ParseError("line " + std::to_string(lineno) + ": row has " +
                                 std::to_string(c) + " entries, expected " + std::to_string(dim));
            }
            m(r, c) = parse_entry(tok, lineno);
        }
        if (row >> tok) {
            throw ParseError("line " + std::to_string(lineno) + ": row has extra entries");
        }
    }
    return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
    out << m.rows() << "\n";
    char buf[64];
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g", m(r, c).real(), m(r, c).imag());
            out << (c ? " " : "") << buf;
        }
        out << "\n";
    }
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_matrix(out, m);
}

} // namespace qcoh
