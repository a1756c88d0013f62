#ifndef SECTORDET_GENERATORS_HPP
#define SECTORDET_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>

#include "sectordet/inequalities.hpp"
#include "sectordet/matrix.hpp"
#include "sectordet/sector.hpp"

namespace sectordet {

enum class GeneratorKind {
    pd_with_floor,
    sector,
    accretive_dissipative,
    diagonal,
    proportional,
};

enum class FloorPolicy {
    zero,
    random_fraction_of_lambda_min,
    saturating,
};

struct GeneratorSpec {
    Eigen::Index n = 3;
    std::size_t m = 2;
    GeneratorKind kind = GeneratorKind::pd_with_floor;
    double alpha_target = 0.0;
    FloorPolicy floor_policy = FloorPolicy::random_fraction_of_lambda_min;
    std::uint64_t seed = 0;
    double condition_cap = 100.0;

    void validate() const {
        if (n < 1) throw DomainError("GeneratorSpec: n must be >= 1");
        if (m < 1) throw DomainError("GeneratorSpec: m must be >= 1");
        if (!(alpha_target >= 0.0 && alpha_target < half_pi))
            throw DomainError("GeneratorSpec: alpha_target outside [0, pi/2)");
        if (!(condition_cap >= 1.0)) throw DomainError("GeneratorSpec: condition_cap < 1");
    }
};

// Deterministic RNG wrapper. Gaussian sampling is hand-rolled Box-Muller on
// top of mt19937_64's specified output stream, so identical seeds produce
// bit-identical matrices on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Stream derivation: (master seed, index) -> independent per-instance seed.
    static std::uint64_t derive(std::uint64_t master, std::uint64_t index) {
        std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() {  // in (0, 1)
        return (static_cast<double>(eng_() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = uniform(), v = uniform();
        double r = std::sqrt(-2.0 * std::log(u));
        double t = 2.0 * half_pi * 2.0 * v;  // 2*pi*v
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    Complex complex_gaussian() {
        double re = gaussian();
        double im = gaussian();
        return Complex(re, im);
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

namespace gen_detail {

inline Cmat gaussian_matrix(Eigen::Index n, Rng& rng) {
    Cmat g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            g(i, j) = rng.complex_gaussian();
    return g;
}

// Haar-ish random unitary: QR of a complex Gaussian matrix with the phases of
// R's diagonal folded into Q.
inline Cmat random_unitary(Eigen::Index n, Rng& rng) {
    Cmat g = gaussian_matrix(n, rng);
    Eigen::HouseholderQR<Cmat> qr(g);
    Cmat q = qr.householderQ();
    Cmat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < n; ++i) {
        Complex d = r(i, i);
        double ad = std::abs(d);
        q.col(i) *= ad > 0.0 ? d / ad : Complex(1, 0);
    }
    return q;
}

// Eigenvalues log-uniform in [1/sqrt(cap), sqrt(cap)] so all leading blocks
// stay within the conditioning budget.
inline Rvec random_spectrum(Eigen::Index n, double condition_cap, Rng& rng) {
    const double half_log = 0.5 * std::log(condition_cap);
    Rvec d(n);
    for (Eigen::Index i = 0; i < n; ++i)
        d(i) = std::exp(rng.uniform(-half_log, half_log));
    return d;
}

inline Cmat random_pd(Eigen::Index n, double condition_cap, Rng& rng) {
    Cmat q = random_unitary(n, rng);
    Rvec d = random_spectrum(n, condition_cap, rng);
    Cmat m = q * d.asDiagonal() * q.adjoint();
    return Cmat(0.5 * (m + m.adjoint()));
}

// Random Hermitian with spectral norm exactly `norm`.
inline Cmat random_hermitian_with_norm(Eigen::Index n, double norm, Rng& rng) {
    Cmat g = gaussian_matrix(n, rng);
    Cmat h = 0.5 * (g + g.adjoint());
    Eigen::SelfAdjointEigenSolver<Cmat> es(h, Eigen::EigenvaluesOnly);
    const Rvec& ev = es.eigenvalues();
    double rho = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    if (rho == 0.0 || norm == 0.0) return Cmat::Zero(n, n);
    return Cmat(h * (norm / rho));
}

}  // namespace gen_detail

// A = Q D Q* + aI with positive D: guarantees A >= aI strictly.
inline ComplexMatrix gen_pd_with_floor(Eigen::Index n, double floor, Rng& rng,
                                       double condition_cap = 100.0) {
    if (!(floor >= 0.0)) throw DomainError("gen_pd_with_floor: floor must be nonnegative");
    Cmat m = gen_detail::random_pd(n, condition_cap, rng);
    m += floor * Cmat::Identity(n, n);
    return ComplexMatrix(Cmat(0.5 * (m + m.adjoint())));
}

// Re A random PD, Im A = (Re A)^{1/2} S (Re A)^{1/2} with ||S|| = tan(alpha):
// tan(alpha) Re A +/- Im A >= 0 by congruence, and the pencil's extreme
// eigenvalue makes the minimal sector angle land on alpha_target.
inline ComplexMatrix gen_sector(Eigen::Index n, double alpha_target, Rng& rng,
                                double condition_cap = 100.0) {
    if (!(alpha_target >= 0.0 && alpha_target < half_pi))
        throw DomainError("gen_sector: alpha_target outside [0, pi/2)");
    Cmat re = gen_detail::random_pd(n, condition_cap, rng);
    Eigen::SelfAdjointEigenSolver<Cmat> es(re);
    Cmat sqrt_re = es.operatorSqrt();
    Cmat s = gen_detail::random_hermitian_with_norm(n, std::tan(alpha_target), rng);
    Cmat im = sqrt_re * s * sqrt_re;
    im = 0.5 * (im + im.adjoint());
    return ComplexMatrix(Cmat(re + Complex(0, 1) * im));
}

inline ComplexMatrix gen_accretive_dissipative(Eigen::Index n, Rng& rng,
                                               double condition_cap = 100.0) {
    Cmat re = gen_detail::random_pd(n, condition_cap, rng);
    Cmat im = gen_detail::random_pd(n, condition_cap, rng);
    return ComplexMatrix(Cmat(re + Complex(0, 1) * im));
}

// Floor per policy: zero, u * lambda_min(Re A) with u uniform, or saturated.
inline double pick_floor(const ComplexMatrix& a, FloorPolicy policy, Rng& rng) {
    switch (policy) {
        case FloorPolicy::zero:
            return 0.0;
        case FloorPolicy::random_fraction_of_lambda_min:
            return rng.uniform() * std::max(0.0, real_part_floor(a));
        case FloorPolicy::saturating:
            return std::max(0.0, real_part_floor(a));
    }
    return 0.0;
}

// Curated equality families for tightness testing.
inline InequalityInstance gen_equality_family(GeneratorKind kind, Eigen::Index n, std::size_t m,
                                              Rng& rng, double alpha = 0.0) {
    InequalityInstance inst;
    switch (kind) {
        case GeneratorKind::proportional: {
            ComplexMatrix base = gen_pd_with_floor(n, 0.0, rng);
            for (std::size_t i = 0; i < m; ++i) {
                double c = rng.uniform(0.5, 2.0);
                inst.matrices.emplace_back(Cmat(c * base.raw()));
                inst.floors.push_back(0.0);
            }
            inst.k = 0;
            break;
        }
        case GeneratorKind::diagonal: {
            for (std::size_t i = 0; i < m; ++i) {
                Rvec d = gen_detail::random_spectrum(n, 100.0, rng);
                Cmat mat = Cmat::Zero(n, n);
                for (Eigen::Index j = 0; j < n; ++j) mat(j, j) = d(j);
                inst.matrices.emplace_back(std::move(mat));
                inst.floors.push_back(0.0);
            }
            inst.k = n - 1;
            break;
        }
        case GeneratorKind::sector: {
            // e^{i alpha} I: W(A) is the single point e^{i alpha}.
            Complex z = std::polar(1.0, alpha);
            for (std::size_t i = 0; i < m; ++i) {
                inst.matrices.emplace_back(Cmat(z * Cmat::Identity(n, n)));
                inst.floors.push_back(0.0);
            }
            inst.k = 0;
            inst.alpha = alpha;
            break;
        }
        default: {
            // Saturated floors: A_i = a_i I.
            for (std::size_t i = 0; i < m; ++i) {
                double a = rng.uniform(0.5, 2.0);
                inst.matrices.emplace_back(Cmat(a * Cmat::Identity(n, n)));
                inst.floors.push_back(a);
            }
            inst.k = 0;
            break;
        }
    }
    return inst;
}

// Full instance per spec: matrices drawn by kind, floors by policy, weights
// left unset (campaign fills them for the weighted inequalities).
inline InequalityInstance gen_instance(const GeneratorSpec& spec, std::uint64_t index,
                                       Eigen::Index k) {
    spec.validate();
    Rng rng(Rng::derive(spec.seed, index));
    InequalityInstance inst;
    inst.k = k;
    inst.alpha = spec.alpha_target;
    for (std::size_t i = 0; i < spec.m; ++i) {
        ComplexMatrix a = [&] {
            switch (spec.kind) {
                case GeneratorKind::sector:
                    return gen_sector(spec.n, spec.alpha_target, rng, spec.condition_cap);
                case GeneratorKind::accretive_dissipative:
                    return gen_accretive_dissipative(spec.n, rng, spec.condition_cap);
                case GeneratorKind::pd_with_floor:
                default:
                    return gen_pd_with_floor(spec.n, 0.0, rng, spec.condition_cap);
            }
        }();
        inst.floors.push_back(pick_floor(a, spec.floor_policy, rng));
        inst.matrices.push_back(std::move(a));
    }
    return inst;
}

inline std::string to_string(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::pd_with_floor: return "pd_with_floor";
        case GeneratorKind::sector: return "sector";
        case GeneratorKind::accretive_dissipative: return "accretive_dissipative";
        case GeneratorKind::diagonal: return "diagonal";
        case GeneratorKind::proportional: return "proportional";
    }
    return "pd_with_floor";
}

inline GeneratorKind generator_kind_from_string(const std::string& s) {
    if (s == "pd_with_floor" || s == "pd") return GeneratorKind::pd_with_floor;
    if (s == "sector") return GeneratorKind::sector;
    if (s == "accretive_dissipative") return GeneratorKind::accretive_dissipative;
    if (s == "diagonal") return GeneratorKind::diagonal;
    if (s == "proportional") return GeneratorKind::proportional;
    throw ParseError("unknown generator kind: " + s);
}

inline std::string to_string(FloorPolicy p) {
    switch (p) {
        case FloorPolicy::zero: return "zero";
        case FloorPolicy::random_fraction_of_lambda_min: return "random_fraction_of_lambda_min";
        case FloorPolicy::saturating: return "saturating";
    }
    return "zero";
}

inline FloorPolicy floor_policy_from_string(const std::string& s) {
    if (s == "zero") return FloorPolicy::zero;
    if (s == "random_fraction_of_lambda_min") return FloorPolicy::random_fraction_of_lambda_min;
    if (s == "saturating") return FloorPolicy::saturating;
    throw ParseError("unknown floor policy: " + s);
}

}  // namespace sectordet

#endif
