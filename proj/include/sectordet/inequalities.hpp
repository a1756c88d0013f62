#ifndef SECTORDET_INEQUALITIES_HPP
#define SECTORDET_INEQUALITIES_HPP

#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sectordet/matrix.hpp"
#include "sectordet/sector.hpp"

namespace sectordet {

// Parameter bundle shared by every determinantal inequality: a family of
// matrices A_1..A_m of common order n, per-matrix floors a_i, the leading
// block index k, a sector half-angle alpha, and optional weights.
struct InequalityInstance {
    std::vector<ComplexMatrix> matrices;
    std::vector<double> floors;
    Eigen::Index k = 0;
    double alpha = 0.0;
    std::optional<std::vector<double>> weights;

    Eigen::Index order() const { return matrices.empty() ? 0 : matrices[0].order(); }
    std::size_t family_size() const { return matrices.size(); }

    void validate_shape() const {
        if (matrices.empty())
            throw DomainError("instance: empty matrix family (m = 0) is rejected");
        const Eigen::Index n = matrices[0].order();
        if (n < 1) throw DomainError("instance: matrix order must be >= 1");
        for (const auto& m : matrices)
            if (m.order() != n)
                throw DimensionError("instance: matrices have mixed orders");
        if (floors.size() != matrices.size())
            throw DimensionError("instance: floors length != family size");
        for (double a : floors)
            if (!(a >= 0.0))
                throw DomainError("instance: floors must be nonnegative");
        if (k < 0 || k > n - 1)
            throw DomainError("instance: k = " + std::to_string(k) + " outside [0, " +
                              std::to_string(n - 1) + "]");
        if (!(alpha >= 0.0 && alpha < half_pi))
            throw DomainError("instance: alpha outside [0, pi/2)");
        if (weights) {
            if (weights->size() != matrices.size())
                throw DimensionError("instance: weights length != family size");
            for (double w : *weights)
                if (!(w >= 0.0))
                    throw DomainError("instance: weights must be nonnegative");
        }
    }
};

struct InequalityReport {
    std::string id;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
    double rel_gap = 0.0;
    bool holds = false;
    int clamped_terms = 0;
    std::string notes;
};

inline constexpr double default_tol_verdict = 1e-8;
inline constexpr double equality_rel_gap = 1e-10;

// Scalar grid for the Minkowski-complement inequality: rows must satisfy
// x_{i1}^p >= sum_{j>=2} x_{ij}^p.
struct ScalarGrid {
    Rmat x;      // m rows, n columns, all nonnegative
    double p = 2.0;
};

namespace detail {

inline void append_note(std::string& notes, const std::string& s) {
    if (!notes.empty()) notes += "; ";
    notes += s;
}

inline InequalityReport finalize(std::string id, double lhs, double rhs, int clamped,
                                 std::string notes, double tol = default_tol_verdict) {
    InequalityReport r;
    r.id = std::move(id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.gap = lhs - rhs;
    r.rel_gap = r.gap / std::max({1.0, std::abs(lhs), std::abs(rhs)});
    r.holds = r.gap >= -tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
    r.clamped_terms = clamped;
    r.notes = std::move(notes);
    if (std::abs(r.rel_gap) <= equality_rel_gap) append_note(r.notes, "equality case");
    return r;
}

inline double abs_det_ratio(const ComplexMatrix& a, Eigen::Index k) {
    return det_ratio(a, k).magnitude();
}

// Positive determinant of a Hermitian-PD matrix (product of eigenvalues).
inline double det_hermitian(const HermitianMatrix& h) {
    if (h.order() == 0) return 1.0;
    Rvec ev = hermitian_eigenvalues(h);
    double d = 1.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) d *= ev(i);
    return d;
}

inline HermitianMatrix as_hermitian(const ComplexMatrix& a, const std::string& who) {
    try {
        return HermitianMatrix(a.raw());
    } catch (const SymmetryError&) {
        throw HypothesisError(who + ": matrix is not Hermitian");
    }
}

inline void require_psd(const ComplexMatrix& a, const std::string& who) {
    HermitianMatrix h = as_hermitian(a, who);
    if (!psd_check(h).is_psd)
        throw HypothesisError(who + ": matrix is not positive semidefinite");
}

inline void require_pd_with_floor(const ComplexMatrix& a, double floor, const std::string& who) {
    HermitianMatrix h = as_hermitian(a, who);
    PsdVerdict v = psd_check(h);
    if (!(v.lambda_min > v.threshold))
        throw HypothesisError(who + ": matrix is not positive definite");
    if (!psd_check(h, floor).is_psd)
        throw HypothesisError(who + ": floor violated, A >= aI fails for a = " +
                              std::to_string(floor));
}

inline void require_sector_with_floor(const ComplexMatrix& a, double alpha, double floor,
                                      const std::string& who) {
    SectorCertificate c = sector_membership(a, alpha);
    if (!c.member)
        throw HypothesisError(who + ": sector membership failed at alpha = " +
                              std::to_string(alpha));
    if (!psd_check(real_part(a), floor).is_psd)
        throw HypothesisError(who + ": real-part floor violated, Re A >= aI fails for a = " +
                              std::to_string(floor));
}

// Clamp a bracket that should be nonnegative under the hypotheses but may
// dip below zero in floating point (or genuinely, on the RHS).
inline double clamp_bracket(double x, int& clamped) {
    if (x < 0.0) {
        ++clamped;
        return 0.0;
    }
    return x;
}

inline double root(double x, double p) { return std::pow(x, 1.0 / p); }

inline Cmat family_sum(const std::vector<ComplexMatrix>& ms) {
    Cmat s = ms[0].raw();
    for (std::size_t i = 1; i < ms.size(); ++i) s += ms[i].raw();
    return s;
}

}  // namespace detail

// --- Pairwise positive-(semi)definite inequalities -------------------------

// det(A+B) >= det A + det B on the PSD cone.
inline InequalityReport check_det_superadditivity(const ComplexMatrix& a,
                                                  const ComplexMatrix& b) {
    if (a.order() != b.order()) throw DimensionError("det_superadditivity: order mismatch");
    detail::require_psd(a, "det_superadditivity A");
    detail::require_psd(b, "det_superadditivity B");
    HermitianMatrix ha(a.raw()), hb(b.raw()), hs(Cmat(a.raw() + b.raw()));
    double lhs = detail::det_hermitian(hs);
    double rhs = detail::det_hermitian(ha) + detail::det_hermitian(hb);
    return detail::finalize("det_superadditivity", lhs, rhs, 0, "");
}

// det(A+B)^{1/n} >= det A^{1/n} + det B^{1/n}.
inline InequalityReport check_brunn_minkowski(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.order() != b.order()) throw DimensionError("brunn_minkowski: order mismatch");
    detail::require_psd(a, "brunn_minkowski A");
    detail::require_psd(b, "brunn_minkowski B");
    const double n = static_cast<double>(a.order());
    HermitianMatrix ha(a.raw()), hb(b.raw()), hs(Cmat(a.raw() + b.raw()));
    double lhs = detail::root(detail::det_hermitian(hs), n);
    double rhs = detail::root(detail::det_hermitian(ha), n) +
                 detail::root(detail::det_hermitian(hb), n);
    return detail::finalize("brunn_minkowski", lhs, rhs, 0, "");
}

// Ky Fan: (det(A+B)/det(A_k+B_k))^{1/(n-k)} >= per-matrix ratio roots.
inline InequalityReport check_ky_fan(const ComplexMatrix& a, const ComplexMatrix& b,
                                     Eigen::Index k) {
    if (a.order() != b.order()) throw DimensionError("ky_fan: order mismatch");
    detail::require_pd_with_floor(a, 0.0, "ky_fan A");
    detail::require_pd_with_floor(b, 0.0, "ky_fan B");
    const double p = static_cast<double>(a.order() - k);
    ComplexMatrix sum(Cmat(a.raw() + b.raw()));
    double lhs = detail::root(detail::abs_det_ratio(sum, k), p);
    double rhs = detail::root(detail::abs_det_ratio(a, k), p) +
                 detail::root(detail::abs_det_ratio(b, k), p);
    return detail::finalize("ky_fan", lhs, rhs, 0, "");
}

// Bergstrom: the same ratios without the (n-k)-th roots.
inline InequalityReport check_bergstrom(const ComplexMatrix& a, const ComplexMatrix& b,
                                        Eigen::Index k) {
    if (a.order() != b.order()) throw DimensionError("bergstrom: order mismatch");
    detail::require_pd_with_floor(a, 0.0, "bergstrom A");
    detail::require_pd_with_floor(b, 0.0, "bergstrom B");
    ComplexMatrix sum(Cmat(a.raw() + b.raw()));
    double lhs = detail::abs_det_ratio(sum, k);
    double rhs = detail::abs_det_ratio(a, k) + detail::abs_det_ratio(b, k);
    return detail::finalize("bergstrom", lhs, rhs, 0, "");
}

// Yuan-Leng: Ky Fan with the floors a, b subtracted inside the brackets.
inline InequalityReport check_yuan_leng(const ComplexMatrix& a, const ComplexMatrix& b,
                                        double fa, double fb, Eigen::Index k) {
    if (a.order() != b.order()) throw DimensionError("yuan_leng: order mismatch");
    if (!(fa >= 0.0 && fb >= 0.0)) throw DomainError("yuan_leng: floors must be nonnegative");
    detail::require_pd_with_floor(a, fa, "yuan_leng A");
    detail::require_pd_with_floor(b, fb, "yuan_leng B");
    const double p = static_cast<double>(a.order() - k);
    ComplexMatrix sum(Cmat(a.raw() + b.raw()));
    int clamped = 0;
    std::string notes;
    double lb = detail::abs_det_ratio(sum, k) - std::pow(fa + fb, p);
    if (lb < 0.0) {
        detail::append_note(notes, "lhs bracket clamped at 0");
        lb = 0.0;
    }
    double lhs = detail::root(lb, p);
    double rhs = detail::root(detail::clamp_bracket(
                     detail::abs_det_ratio(a, k) - std::pow(fa, p), clamped), p) +
                 detail::root(detail::clamp_bracket(
                     detail::abs_det_ratio(b, k) - std::pow(fb, p), clamped), p);
    return detail::finalize("yuan_leng", lhs, rhs, clamped, notes);
}

// Liu's sector extension with the (cos a)^{(n+k)/(n-k)} coefficient.
inline InequalityReport check_liu(const ComplexMatrix& a, const ComplexMatrix& b, double fa,
                                  double fb, Eigen::Index k, double alpha) {
    if (a.order() != b.order()) throw DimensionError("liu: order mismatch");
    if (!(fa >= 0.0 && fb >= 0.0)) throw DomainError("liu: floors must be nonnegative");
    detail::require_sector_with_floor(a, alpha, fa, "liu A");
    detail::require_sector_with_floor(b, alpha, fb, "liu B");
    const double n = static_cast<double>(a.order());
    const double p = n - static_cast<double>(k);
    const double c = std::cos(alpha);
    ComplexMatrix sum(Cmat(a.raw() + b.raw()));
    int clamped = 0;
    std::string notes;
    double lb = detail::abs_det_ratio(sum, k) -
                std::pow(c, static_cast<double>(k)) * std::pow(fa + fb, p);
    if (lb < 0.0) {
        detail::append_note(notes, "lhs bracket clamped at 0");
        lb = 0.0;
    }
    double lhs = detail::root(lb, p);
    const double coeff = std::pow(c, (n + static_cast<double>(k)) / p);
    const double cn = std::pow(c, n);
    double rhs = coeff * detail::root(detail::clamp_bracket(
                             detail::abs_det_ratio(a, k) - std::pow(fa, p) / cn, clamped), p) +
                 coeff * detail::root(detail::clamp_bracket(
                             detail::abs_det_ratio(b, k) - std::pow(fb, p) / cn, clamped), p);
    return detail::finalize("liu", lhs, rhs, clamped, notes);
}

// --- Single-matrix lemma checks --------------------------------------------

// Ostrowski-Taussky: lambda_i(Re A) <= s_i(A), and for PD real part
// det Re A + |det Im A| <= |det A|.
inline InequalityReport check_ostrowski_taussky(const ComplexMatrix& a) {
    Rvec sv = singular_values(a);
    HermitianMatrix re = real_part(a);
    HermitianMatrix im = imag_part(a);
    Rvec ev = hermitian_eigenvalues(re);
    double spectral_min = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        spectral_min = std::min(spectral_min, sv(i) - ev(i));
    PsdVerdict vre = psd_check(re);
    std::string notes = "spectral part min_i(s_i - lambda_i(Re A)) = " +
                        std::to_string(spectral_min);
    if (!(vre.lambda_min > vre.threshold)) {
        detail::append_note(notes, "Re A not positive definite: spectral part only");
        return detail::finalize("ostrowski_taussky", spectral_min, 0.0, 0, notes);
    }
    double lhs = logabsdet(a).magnitude();
    double rhs = detail::det_hermitian(re) + std::abs(detail::det_hermitian(im));
    InequalityReport r = detail::finalize("ostrowski_taussky", lhs, rhs, 0, notes);
    const double scale = std::max(1.0, sv(0));
    r.holds = r.holds && spectral_min >= -default_tol_verdict * scale;
    return r;
}

// Reverse Ostrowski-Taussky on a sector: |det A| <= (sec a)^n det Re A.
inline InequalityReport check_sector_reverse_det(const ComplexMatrix& a, double alpha) {
    detail::require_sector_with_floor(a, alpha, 0.0, "sector_reverse_det");
    const double n = static_cast<double>(a.order());
    double lhs = std::pow(1.0 / std::cos(alpha), n) * detail::det_hermitian(real_part(a));
    double rhs = logabsdet(a).magnitude();
    return detail::finalize("sector_reverse_det", lhs, rhs, 0, "");
}

// Both the leading block and its Schur complement inherit the sector.
inline InequalityReport check_schur_sector_inheritance(const ComplexMatrix& a, double alpha,
                                                       Eigen::Index k) {
    if (k < 1 || k > a.order() - 1)
        throw DomainError("schur_sector_inheritance: k outside [1, n-1]");
    detail::require_sector_with_floor(a, alpha, 0.0, "schur_sector_inheritance");
    SectorCertificate cb = sector_membership(leading_principal_submatrix(a, k), alpha);
    SectorCertificate cs = sector_membership(schur_complement(a, k), alpha);
    double lhs = std::min({cb.lambda_min_re, cb.lambda_min_plus, cb.lambda_min_minus,
                           cs.lambda_min_re, cs.lambda_min_plus, cs.lambda_min_minus});
    std::string notes = std::string("block member = ") + (cb.member ? "yes" : "no") +
                        ", schur member = " + (cs.member ? "yes" : "no");
    InequalityReport r = detail::finalize("schur_sector_inheritance", lhs, 0.0, 0, notes);
    r.holds = cb.member && cs.member;
    return r;
}

// Re(A/A_k) >= (Re A)/(Re A_k) when Re A is positive definite.
inline InequalityReport check_schur_real_part_dominance(const ComplexMatrix& a, Eigen::Index k) {
    if (k < 1 || k > a.order() - 1)
        throw DomainError("schur_real_part_dominance: k outside [1, n-1]");
    HermitianMatrix re = real_part(a);
    PsdVerdict vre = psd_check(re);
    if (!(vre.lambda_min > vre.threshold))
        throw HypothesisError("schur_real_part_dominance: Re A not positive definite");
    Cmat schur_re_of_a = 0.5 * (schur_complement(a, k).raw() +
                                schur_complement(a, k).raw().adjoint());
    Cmat re_schur = schur_complement(ComplexMatrix(re.raw()), k).raw();
    HermitianMatrix diff(Cmat(schur_re_of_a - re_schur));
    double lhs = psd_check(diff).lambda_min;
    return detail::finalize("schur_real_part_dominance", lhs, 0.0, 0, "");
}

// |det A / det A_k| >= det Re A / det Re A_k.
inline InequalityReport check_det_ratio_real_part(const ComplexMatrix& a, Eigen::Index k) {
    HermitianMatrix re = real_part(a);
    PsdVerdict vre = psd_check(re);
    if (!(vre.lambda_min > vre.threshold))
        throw HypothesisError("det_ratio_real_part: Re A not positive definite");
    double lhs = detail::abs_det_ratio(a, k);
    double rhs = detail::abs_det_ratio(ComplexMatrix(re.raw()), k);
    return detail::finalize("det_ratio_real_part", lhs, rhs, 0, "");
}

// --- Scalar Minkowski-complement inequality --------------------------------

inline InequalityReport check_minkowski_complement(const ScalarGrid& grid) {
    const Eigen::Index m = grid.x.rows();
    const Eigen::Index n = grid.x.cols();
    if (m < 1 || n < 1) throw DomainError("minkowski_complement: empty grid");
    if (!(grid.p >= 1.0)) throw DomainError("minkowski_complement: p must be >= 1");
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (!(grid.x(i, j) >= 0.0))
                throw DomainError("minkowski_complement: entries must be nonnegative");
    const double p = grid.p;
    double rhs = 0.0;
    int clamped = 0;
    std::string notes;
    for (Eigen::Index i = 0; i < m; ++i) {
        double row = std::pow(grid.x(i, 0), p);
        for (Eigen::Index j = 1; j < n; ++j) row -= std::pow(grid.x(i, j), p);
        if (row < -1e-12 * (1.0 + std::pow(grid.x(i, 0), p)))
            throw HypothesisError("minkowski_complement: row " + std::to_string(i) +
                                  " violates x_{i1}^p >= sum_{j>=2} x_{ij}^p");
        rhs += detail::root(detail::clamp_bracket(row, clamped), p);
    }
    Rvec col_sums = grid.x.colwise().sum();
    double lb = std::pow(col_sums(0), p);
    for (Eigen::Index j = 1; j < n; ++j) lb -= std::pow(col_sums(j), p);
    if (lb < 0.0) {
        detail::append_note(notes, "lhs bracket clamped at 0");
        lb = 0.0;
    }
    double lhs = detail::root(lb, p);
    return detail::finalize("minkowski_complement", lhs, rhs, clamped, notes);
}

// --- Multi-matrix extensions -----------------------------------------------

// Multi-matrix Ky Fan over a PD family.
inline InequalityReport check_multi_ky_fan(const InequalityInstance& inst) {
    inst.validate_shape();
    for (std::size_t i = 0; i < inst.family_size(); ++i)
        detail::require_pd_with_floor(inst.matrices[i], 0.0,
                                      "multi_ky_fan A_" + std::to_string(i + 1));
    const double p = static_cast<double>(inst.order() - inst.k);
    ComplexMatrix sum(detail::family_sum(inst.matrices));
    double lhs = detail::root(detail::abs_det_ratio(sum, inst.k), p);
    double rhs = 0.0;
    for (const auto& m : inst.matrices)
        rhs += detail::root(detail::abs_det_ratio(m, inst.k), p);
    return detail::finalize("multi_ky_fan", lhs, rhs, 0, "");
}

// Multi-matrix Yuan-Leng over a PD family with floors.
inline InequalityReport check_multi_yuan_leng(const InequalityInstance& inst) {
    inst.validate_shape();
    for (std::size_t i = 0; i < inst.family_size(); ++i)
        detail::require_pd_with_floor(inst.matrices[i], inst.floors[i],
                                      "multi_yuan_leng A_" + std::to_string(i + 1));
    const double p = static_cast<double>(inst.order() - inst.k);
    ComplexMatrix sum(detail::family_sum(inst.matrices));
    const double floor_sum = std::accumulate(inst.floors.begin(), inst.floors.end(), 0.0);
    int clamped = 0;
    std::string notes;
    double lb = detail::abs_det_ratio(sum, inst.k) - std::pow(floor_sum, p);
    if (lb < 0.0) {
        detail::append_note(notes, "lhs bracket clamped at 0");
        lb = 0.0;
    }
    double lhs = detail::root(lb, p);
    double rhs = 0.0;
    for (std::size_t i = 0; i < inst.family_size(); ++i)
        rhs += detail::root(detail::clamp_bracket(detail::abs_det_ratio(inst.matrices[i], inst.k) -
                                                      std::pow(inst.floors[i], p),
                                                  clamped), p);
    return detail::finalize("multi_yuan_leng", lhs, rhs, clamped, notes);
}

namespace detail {

// Shared RHS/LHS assembly for the sector-family inequality; also used for the
// accretive-dissipative corollary after rotation.
inline InequalityReport eval_multi_sector(const std::string& id, const InequalityInstance& inst,
                                          std::string notes) {
    const double n = static_cast<double>(inst.order());
    const double p = n - static_cast<double>(inst.k);
    const double c = std::cos(inst.alpha);
    const double cn = std::pow(c, n);
    ComplexMatrix sum(family_sum(inst.matrices));
    const double floor_sum = std::accumulate(inst.floors.begin(), inst.floors.end(), 0.0);
    int clamped = 0;
    double lb = abs_det_ratio(sum, inst.k) - std::pow(floor_sum, p);
    if (lb < 0.0) {
        append_note(notes, "lhs bracket clamped at 0");
        lb = 0.0;
    }
    double lhs = root(lb, p);
    double rhs = 0.0;
    for (std::size_t i = 0; i < inst.family_size(); ++i)
        rhs += root(clamp_bracket(abs_det_ratio(inst.matrices[i], inst.k) -
                                      std::pow(inst.floors[i], p) / cn,
                                  clamped), p);
    rhs *= std::pow(c, n / p);
    return finalize(id, lhs, rhs, clamped, std::move(notes));
}

}  // namespace detail

// Sector-family Brunn-Minkowski extension with the (cos a)^{n/(n-k)}
// coefficient; negative RHS brackets are clamped at 0 and counted.
inline InequalityReport check_multi_sector(const InequalityInstance& inst) {
    inst.validate_shape();
    for (std::size_t i = 0; i < inst.family_size(); ++i)
        detail::require_sector_with_floor(inst.matrices[i], inst.alpha, inst.floors[i],
                                          "multi_sector A_" + std::to_string(i + 1));
    return detail::eval_multi_sector("multi_sector", inst, "");
}

// Accretive-dissipative corollary: rotate by e^{-i pi/4} into the pi/4 sector
// and apply the sector-family inequality, which produces the 2^{n/2} constants.
// Floors are interpreted against the rotated real parts.
inline InequalityReport check_accretive_dissipative(const InequalityInstance& inst) {
    inst.validate_shape();
    const Complex rot = std::polar(1.0, -half_pi / 2.0);
    InequalityInstance rotated;
    rotated.floors = inst.floors;
    rotated.k = inst.k;
    rotated.alpha = half_pi / 2.0;
    for (std::size_t i = 0; i < inst.family_size(); ++i) {
        if (!is_accretive_dissipative(inst.matrices[i]))
            throw HypothesisError("accretive_dissipative: A_" + std::to_string(i + 1) +
                                  " is not accretive-dissipative");
        ComplexMatrix r(Cmat(rot * inst.matrices[i].raw()));
        if (!psd_check(real_part(r), inst.floors[i]).is_psd)
            throw HypothesisError("accretive_dissipative: rotated real-part floor violated for A_" +
                                  std::to_string(i + 1));
        rotated.matrices.push_back(std::move(r));
    }
    InequalityReport r = detail::eval_multi_sector("accretive_dissipative", rotated,
                                                   "evaluated on e^{-i pi/4}-rotated family");
    return r;
}

// Weighted form: replace A_i by w_i A_i and a_i by w_i a_i; w_i >= 0 with a
// positive total, the coefficient stays (cos a)^{n/(n-k)}.
inline InequalityReport check_weighted_multi_sector(const InequalityInstance& inst) {
    inst.validate_shape();
    if (!inst.weights) throw DomainError("weighted_multi_sector: weights are required");
    const auto& w = *inst.weights;
    const double wsum = std::accumulate(w.begin(), w.end(), 0.0);
    if (!(wsum > 0.0))
        throw DomainError("weighted_multi_sector: weights must not all be zero");
    for (std::size_t i = 0; i < inst.family_size(); ++i)
        detail::require_sector_with_floor(inst.matrices[i], inst.alpha, inst.floors[i],
                                          "weighted_multi_sector A_" + std::to_string(i + 1));
    const double n = static_cast<double>(inst.order());
    const double p = n - static_cast<double>(inst.k);
    const double c = std::cos(inst.alpha);
    const double cn = std::pow(c, n);
    Cmat sum = w[0] * inst.matrices[0].raw();
    double floor_sum = w[0] * inst.floors[0];
    for (std::size_t i = 1; i < inst.family_size(); ++i) {
        sum += w[i] * inst.matrices[i].raw();
        floor_sum += w[i] * inst.floors[i];
    }
    int clamped = 0;
    std::string notes;
    double lb = detail::abs_det_ratio(ComplexMatrix(sum), inst.k) - std::pow(floor_sum, p);
    if (lb < 0.0) {
        detail::append_note(notes, "lhs bracket clamped at 0");
        lb = 0.0;
    }
    double lhs = detail::root(lb, p);
    double rhs = 0.0;
    for (std::size_t i = 0; i < inst.family_size(); ++i) {
        if (w[i] == 0.0) continue;  // zero-weight terms contribute nothing
        rhs += w[i] * detail::root(detail::clamp_bracket(
                          detail::abs_det_ratio(inst.matrices[i], inst.k) -
                              std::pow(inst.floors[i], p) / cn,
                          clamped), p);
    }
    rhs *= std::pow(c, n / p);
    return detail::finalize("weighted_multi_sector", lhs, rhs, clamped, notes);
}

namespace detail {

inline InequalityReport eval_amgm(const std::string& id, const InequalityInstance& inst,
                                  Eigen::Index k) {
    if (!inst.weights) throw DomainError(id + ": weights are required");
    const auto& w = *inst.weights;
    const double wsum = std::accumulate(w.begin(), w.end(), 0.0);
    if (std::abs(wsum - 1.0) > 1e-12)
        throw DomainError(id + ": weights must sum to 1");
    for (std::size_t i = 0; i < inst.family_size(); ++i)
        require_sector_with_floor(inst.matrices[i], inst.alpha, inst.floors[i],
                                  id + " A_" + std::to_string(i + 1));
    const double n = static_cast<double>(inst.order());
    const double p = n - static_cast<double>(k);
    const double c = std::cos(inst.alpha);
    const double cn = std::pow(c, n);
    Cmat sum = w[0] * inst.matrices[0].raw();
    double floor_sum = w[0] * inst.floors[0];
    for (std::size_t i = 1; i < inst.family_size(); ++i) {
        sum += w[i] * inst.matrices[i].raw();
        floor_sum += w[i] * inst.floors[i];
    }
    double lhs = abs_det_ratio(ComplexMatrix(sum), k) - std::pow(floor_sum, p);
    int clamped = 0;
    std::string notes;
    double log_prod = 0.0;
    bool zeroed = false;
    for (std::size_t i = 0; i < inst.family_size(); ++i) {
        double bracket = abs_det_ratio(inst.matrices[i], k) - std::pow(inst.floors[i], p) / cn;
        if (bracket <= 0.0) {
            if (bracket < 0.0) {
                ++clamped;
                append_note(notes, "negative product factor clamped, rhs = 0");
            }
            if (w[i] > 0.0) zeroed = true;
            continue;
        }
        log_prod += w[i] * std::log(bracket);
    }
    double rhs = zeroed ? 0.0 : cn * std::exp(log_prod);
    return finalize(id, lhs, rhs, clamped, std::move(notes));
}

}  // namespace detail

// Weighted AM-GM form: product of brackets with exponents w_i summing to 1.
inline InequalityReport check_amgm_multi_sector(const InequalityInstance& inst) {
    inst.validate_shape();
    return detail::eval_amgm("amgm_multi_sector", inst, inst.k);
}

// k = 0 specialization of the AM-GM form: log-concavity of |det| over the
// sector class, with the floors subtracted.
inline InequalityReport check_logconcavity_sector(const InequalityInstance& inst) {
    inst.validate_shape();
    if (inst.k != 0)
        throw DomainError("logconcavity_sector: k must be 0");
    return detail::eval_amgm("logconcavity_sector", inst, 0);
}

// --- Theorem comparison ----------------------------------------------------

struct ComparisonResult {
    InequalityReport thm_multi;  // m = 2 sector-family inequality
    InequalityReport liu;
    double delta = 0.0;  // thm_multi.rhs - liu.rhs
};

// The m = 2 sector-family bound against Liu's: same brackets, coefficient
// (cos a)^{n/(n-k)} vs (cos a)^{(n+k)/(n-k)}, so the new RHS dominates.
inline ComparisonResult compare_thm29_vs_liu(const ComplexMatrix& a, const ComplexMatrix& b,
                                             double fa, double fb, Eigen::Index k, double alpha) {
    if (k < 1)
        throw DomainError("compare_thm29_vs_liu: k must be >= 1");
    InequalityInstance inst;
    inst.matrices = {a, b};
    inst.floors = {fa, fb};
    inst.k = k;
    inst.alpha = alpha;
    ComparisonResult r;
    r.thm_multi = check_multi_sector(inst);
    r.liu = check_liu(a, b, fa, fb, k, alpha);
    r.delta = r.thm_multi.rhs - r.liu.rhs;
    return r;
}

}  // namespace sectordet

#endif
