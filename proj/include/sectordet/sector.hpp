#ifndef SECTORDET_SECTOR_HPP
#define SECTORDET_SECTOR_HPP

#include <cmath>

#include "sectordet/matrix.hpp"

namespace sectordet {

inline constexpr double half_pi = 1.57079632679489661923;

// Evidence for W(A) being contained in the sector of half-angle alpha:
// the smallest eigenvalues of Re A and of tan(alpha)*Re A +/- Im A.
struct SectorCertificate {
    double alpha = 0.0;
    bool member = false;
    double lambda_min_re = 0.0;
    double lambda_min_plus = 0.0;
    double lambda_min_minus = 0.0;
    double threshold = 0.0;
};

// W(A) subset of S_alpha iff Re A is PD and tan(alpha)*Re A +/- Im A are PSD;
// the quadratic form of Re A (Im A) is the real (imaginary) part of x*Ax.
inline SectorCertificate sector_membership(const ComplexMatrix& a, double alpha) {
    if (!(alpha >= 0.0 && alpha < half_pi))
        throw DomainError("sector_membership: alpha must lie in [0, pi/2)");
    SectorCertificate c;
    c.alpha = alpha;
    const HermitianMatrix re = real_part(a);
    const HermitianMatrix im = imag_part(a);
    const double t = std::tan(alpha);
    PsdVerdict vre = psd_check(re);
    PsdVerdict vplus = psd_check(HermitianMatrix(Cmat(t * re.raw() + im.raw())));
    PsdVerdict vminus = psd_check(HermitianMatrix(Cmat(t * re.raw() - im.raw())));
    c.lambda_min_re = vre.lambda_min;
    c.lambda_min_plus = vplus.lambda_min;
    c.lambda_min_minus = vminus.lambda_min;
    c.threshold = std::max({vre.threshold, vplus.threshold, vminus.threshold});
    // Strict positivity on Re A mirrors the strict Re z > 0 in the sector;
    // the two pencil conditions are non-strict.
    c.member = vre.lambda_min > vre.threshold && vplus.is_psd && vminus.is_psd;
    return c;
}

// Least alpha with W(A) in S_alpha: arctan of the spectral radius of
// L^{-1} (Im A) L^{-*} where Re A = L L*.
inline double minimal_sector_angle(const ComplexMatrix& a) {
    const HermitianMatrix re = real_part(a);
    PsdVerdict vre = psd_check(re);
    if (!(vre.lambda_min > vre.threshold))
        throw NotSectorialError("minimal_sector_angle: Re A is not positive definite");
    Eigen::LLT<Cmat> llt(re.raw());
    if (llt.info() != Eigen::Success)
        throw NotSectorialError("minimal_sector_angle: Cholesky of Re A failed");
    const Cmat im = imag_part(a).raw();
    Cmat l = llt.matrixL();
    Cmat t = l.triangularView<Eigen::Lower>().solve(im);
    Cmat pencil = l.triangularView<Eigen::Lower>().solve(Cmat(t.adjoint())).adjoint();
    Eigen::SelfAdjointEigenSolver<Cmat> es(pencil, Eigen::EigenvaluesOnly);
    const Rvec& ev = es.eigenvalues();
    double rho = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    return std::atan(rho);
}

// Largest a with Re A >= a*I, i.e. lambda_min(Re A); may be negative.
inline double real_part_floor(const ComplexMatrix& a) {
    Rvec ev = hermitian_eigenvalues(real_part(a));
    return ev(ev.size() - 1);
}

inline bool is_accretive_dissipative(const ComplexMatrix& a) {
    PsdVerdict vre = psd_check(real_part(a));
    PsdVerdict vim = psd_check(imag_part(a));
    return vre.lambda_min > vre.threshold && vim.lambda_min > vim.threshold;
}

}  // namespace sectordet

#endif
