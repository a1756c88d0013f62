#ifndef SECTORDET_MATRIX_HPP
#define SECTORDET_MATRIX_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "sectordet/errors.hpp"

namespace sectordet {

using Complex = std::complex<double>;
using Cmat = Eigen::MatrixXcd;
using Rmat = Eigen::MatrixXd;
using Rvec = Eigen::VectorXd;

namespace tol {

// Hermitian symmetry slack, scaled by entry magnitude.
inline double herm(const Cmat& m) {
    double mx = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            mx = std::max(mx, std::abs(m(i, j)));
    return 1e-12 * (1.0 + mx);
}

// PSD verdict slack, relative to a spectral-norm estimate.
inline constexpr double psd_rel = 1e-10;

// Leading-block conditioning guard for Schur complements.
inline constexpr double cond = 1e-12;

}  // namespace tol

inline bool all_finite(const Cmat& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
                return false;
    return true;
}

// Dense square complex matrix, the carrier for every A, B, A_i.
// Validates squareness and finiteness on construction; immutable afterwards.
class ComplexMatrix {
public:
    ComplexMatrix() : m_(0, 0) {}

    explicit ComplexMatrix(Cmat m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols())
            throw DimensionError("ComplexMatrix: expected square matrix, got " +
                                 std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
        if (!all_finite(m_))
            throw DomainError("ComplexMatrix: non-finite entry");
    }

    Eigen::Index order() const { return m_.rows(); }
    const Cmat& raw() const { return m_; }
    Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

    static ComplexMatrix identity(Eigen::Index n) {
        return ComplexMatrix(Cmat::Identity(n, n));
    }

private:
    Cmat m_;
};

// Hermitian matrix; symmetry enforced within tol::herm on construction.
class HermitianMatrix {
public:
    HermitianMatrix() : m_(0, 0) {}

    explicit HermitianMatrix(Cmat m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols())
            throw DimensionError("HermitianMatrix: expected square matrix");
        if (!all_finite(m_))
            throw DomainError("HermitianMatrix: non-finite entry");
        const double t = tol::herm(m_);
        for (Eigen::Index j = 0; j < m_.cols(); ++j) {
            for (Eigen::Index i = 0; i <= j; ++i) {
                if (std::abs(m_(i, j) - std::conj(m_(j, i))) > t)
                    throw SymmetryError("HermitianMatrix: entry (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") breaks Hermitian symmetry");
            }
        }
        // Force exact symmetry so downstream solvers see a clean input.
        m_ = Cmat(0.5 * (m_ + m_.adjoint()));
    }

    Eigen::Index order() const { return m_.rows(); }
    const Cmat& raw() const { return m_; }

private:
    Cmat m_;
};

struct PsdVerdict {
    bool is_psd = false;
    double lambda_min = 0.0;
    double threshold = 0.0;  // the tolerance actually applied
};

// A = H + iK with H, K Hermitian: H = (A+A*)/2, K = (A-A*)/(2i).
inline std::pair<HermitianMatrix, HermitianMatrix> cartesian_decomposition(const ComplexMatrix& a) {
    const Cmat& m = a.raw();
    Cmat h = 0.5 * (m + m.adjoint());
    Cmat k = (m - m.adjoint()) / Complex(0.0, 2.0);
    return {HermitianMatrix(std::move(h)), HermitianMatrix(std::move(k))};
}

inline HermitianMatrix real_part(const ComplexMatrix& a) {
    return HermitianMatrix(Cmat(0.5 * (a.raw() + a.raw().adjoint())));
}

inline HermitianMatrix imag_part(const ComplexMatrix& a) {
    return HermitianMatrix(Cmat((a.raw() - a.raw().adjoint()) / Complex(0.0, 2.0)));
}

// Top-left k x k block. k = 0 yields the empty matrix, whose determinant is 1.
inline ComplexMatrix leading_principal_submatrix(const ComplexMatrix& a, Eigen::Index k) {
    if (k < 0 || k > a.order())
        throw DomainError("leading_principal_submatrix: k = " + std::to_string(k) +
                          " outside [0, " + std::to_string(a.order()) + "]");
    return ComplexMatrix(Cmat(a.raw().topLeftCorner(k, k)));
}

inline Rvec hermitian_eigenvalues(const HermitianMatrix& h) {
    Eigen::SelfAdjointEigenSolver<Cmat> es(h.raw(), Eigen::EigenvaluesOnly);
    Rvec ev = es.eigenvalues().reverse();  // descending
    return ev;
}

inline Rvec singular_values(const ComplexMatrix& a) {
    Eigen::JacobiSVD<Cmat> svd(a.raw());
    return svd.singularValues();  // already descending, nonnegative
}

// Verdict on H - floor*I >= 0; lambda_min is reported for the shifted matrix.
inline PsdVerdict psd_check(const HermitianMatrix& h, double floor = 0.0) {
    PsdVerdict v;
    if (h.order() == 0) {
        v.is_psd = true;
        v.threshold = tol::psd_rel;
        return v;
    }
    Rvec ev = hermitian_eigenvalues(h);
    const double spectral = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    v.threshold = tol::psd_rel * std::max(1.0, spectral);
    v.lambda_min = ev(ev.size() - 1) - floor;
    v.is_psd = v.lambda_min >= -v.threshold;
    return v;
}

// A_22 - A_21 A_11^{-1} A_12 for the k x k leading block; guarded against
// ill-conditioned A_11.
inline ComplexMatrix schur_complement(const ComplexMatrix& a, Eigen::Index k) {
    const Eigen::Index n = a.order();
    if (k < 1 || k > n - 1)
        throw DomainError("schur_complement: k = " + std::to_string(k) +
                          " outside [1, " + std::to_string(n - 1) + "]");
    Cmat a11 = a.raw().topLeftCorner(k, k);
    Eigen::JacobiSVD<Cmat> svd(a11, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Rvec& s = svd.singularValues();
    const double smin = s(s.size() - 1);
    if (smin <= 0.0 || s(0) / smin > 1.0 / tol::cond)
        throw SingularBlockError("schur_complement: leading " + std::to_string(k) +
                                 "x" + std::to_string(k) + " block is numerically singular");
    Cmat a12 = a.raw().topRightCorner(k, n - k);
    Cmat a21 = a.raw().bottomLeftCorner(n - k, k);
    Cmat a22 = a.raw().bottomRightCorner(n - k, n - k);
    Cmat x = svd.solve(a12);
    return ComplexMatrix(Cmat(a22 - a21 * x));
}

// log det H for positive definite H via Cholesky.
inline double logdet_pd(const HermitianMatrix& h) {
    if (h.order() == 0) return 0.0;
    PsdVerdict v = psd_check(h);
    if (v.lambda_min <= v.threshold)
        throw DefinitenessError("logdet_pd: matrix is not positive definite (lambda_min = " +
                                std::to_string(v.lambda_min + 0.0) + ")");
    Eigen::LLT<Cmat> llt(h.raw());
    if (llt.info() != Eigen::Success)
        throw DefinitenessError("logdet_pd: Cholesky factorization failed");
    double s = 0.0;
    for (Eigen::Index i = 0; i < h.order(); ++i)
        s += std::log(llt.matrixLLT()(i, i).real());
    return 2.0 * s;
}

struct LogAbsDet {
    double log_abs = 0.0;            // -inf marks a singular matrix
    Complex phase = Complex(1, 0);   // det A / |det A|, or 1 when singular

    double magnitude() const { return std::exp(log_abs); }
    Complex value() const { return magnitude() * phase; }
};

// (log|det A|, phase) from a fully pivoted LU; singular A is a valid input.
inline LogAbsDet logabsdet(const ComplexMatrix& a) {
    LogAbsDet r;
    if (a.order() == 0) return r;  // empty product: det = 1
    Eigen::FullPivLU<Cmat> lu(a.raw());
    Complex perm_sign(static_cast<double>(lu.permutationP().determinant()) *
                          static_cast<double>(lu.permutationQ().determinant()),
                      0.0);
    double log_abs = 0.0;
    Complex phase = perm_sign;
    for (Eigen::Index i = 0; i < a.order(); ++i) {
        const Complex u = lu.matrixLU()(i, i);
        const double au = std::abs(u);
        if (au == 0.0) {
            r.log_abs = -std::numeric_limits<double>::infinity();
            r.phase = Complex(1, 0);
            return r;
        }
        log_abs += std::log(au);
        phase *= u / au;
    }
    r.log_abs = log_abs;
    r.phase = phase;
    return r;
}

// det A / det A_k, evaluated as det of the Schur complement A/A_k rather than
// as a quotient of two determinants. k = 0 returns det A.
inline LogAbsDet det_ratio(const ComplexMatrix& a, Eigen::Index k) {
    if (k < 0 || k > a.order() - 1)
        throw DomainError("det_ratio: k = " + std::to_string(k) + " outside [0, " +
                          std::to_string(a.order() - 1) + "]");
    if (k == 0) return logabsdet(a);
    return logabsdet(schur_complement(a, k));
}

}  // namespace sectordet

#endif
