#ifndef SECTORDET_CAMPAIGN_HPP
#define SECTORDET_CAMPAIGN_HPP

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>
#include <vector>

#include "sectordet/generators.hpp"
#include "sectordet/inequalities.hpp"
#include "sectordet/json_io.hpp"

namespace sectordet {

inline const std::vector<std::string>& inequality_ids() {
    static const std::vector<std::string> ids = {
        "det_superadditivity", "brunn_minkowski", "ky_fan", "bergstrom", "yuan_leng", "liu",
        "ostrowski_taussky", "sector_reverse_det", "schur_sector_inheritance",
        "schur_real_part_dominance", "det_ratio_real_part", "minkowski_complement",
        "multi_ky_fan", "multi_yuan_leng", "multi_sector", "accretive_dissipative",
        "weighted_multi_sector", "amgm_multi_sector", "logconcavity_sector",
    };
    return ids;
}

inline bool is_known_inequality(const std::string& id) {
    const auto& ids = inequality_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end() || id == "compare_thm29_vs_liu";
}

inline bool is_sector_id(const std::string& id) {
    return id == "liu" || id == "ostrowski_taussky" || id == "sector_reverse_det" ||
           id == "schur_sector_inheritance" || id == "schur_real_part_dominance" ||
           id == "det_ratio_real_part" || id == "multi_sector" ||
           id == "weighted_multi_sector" || id == "amgm_multi_sector" ||
           id == "logconcavity_sector" || id == "compare_thm29_vs_liu";
}

// Valid k values for an inequality at order n.
inline std::vector<Eigen::Index> valid_ks(const std::string& id, Eigen::Index n) {
    std::vector<Eigen::Index> ks;
    if (id == "det_superadditivity" || id == "brunn_minkowski" || id == "ostrowski_taussky" ||
        id == "sector_reverse_det" || id == "minkowski_complement" ||
        id == "logconcavity_sector") {
        ks.push_back(0);
    } else if (id == "schur_sector_inheritance" || id == "schur_real_part_dominance" ||
               id == "compare_thm29_vs_liu") {
        for (Eigen::Index k = 1; k <= n - 1; ++k) ks.push_back(k);
        if (ks.empty()) ks.push_back(0);  // n = 1 has no interior k; skip upstream
    } else {
        for (Eigen::Index k = 0; k <= n - 1; ++k) ks.push_back(k);
    }
    return ks;
}

// Dispatch a matrix-family inequality by id.
inline InequalityReport evaluate_inequality(const std::string& id,
                                            const InequalityInstance& inst) {
    auto pair = [&]() -> std::pair<const ComplexMatrix&, const ComplexMatrix&> {
        if (inst.family_size() != 2)
            throw DomainError(id + ": requires exactly two matrices");
        return {inst.matrices[0], inst.matrices[1]};
    };
    if (id == "det_superadditivity") {
        auto [a, b] = pair();
        return check_det_superadditivity(a, b);
    }
    if (id == "brunn_minkowski") {
        auto [a, b] = pair();
        return check_brunn_minkowski(a, b);
    }
    if (id == "ky_fan") {
        auto [a, b] = pair();
        return check_ky_fan(a, b, inst.k);
    }
    if (id == "bergstrom") {
        auto [a, b] = pair();
        return check_bergstrom(a, b, inst.k);
    }
    if (id == "yuan_leng") {
        auto [a, b] = pair();
        return check_yuan_leng(a, b, inst.floors[0], inst.floors[1], inst.k);
    }
    if (id == "liu") {
        auto [a, b] = pair();
        return check_liu(a, b, inst.floors[0], inst.floors[1], inst.k, inst.alpha);
    }
    if (id == "ostrowski_taussky") return check_ostrowski_taussky(inst.matrices.at(0));
    if (id == "sector_reverse_det")
        return check_sector_reverse_det(inst.matrices.at(0), inst.alpha);
    if (id == "schur_sector_inheritance")
        return check_schur_sector_inheritance(inst.matrices.at(0), inst.alpha, inst.k);
    if (id == "schur_real_part_dominance")
        return check_schur_real_part_dominance(inst.matrices.at(0), inst.k);
    if (id == "det_ratio_real_part")
        return check_det_ratio_real_part(inst.matrices.at(0), inst.k);
    if (id == "multi_ky_fan") return check_multi_ky_fan(inst);
    if (id == "multi_yuan_leng") return check_multi_yuan_leng(inst);
    if (id == "multi_sector") return check_multi_sector(inst);
    if (id == "accretive_dissipative") return check_accretive_dissipative(inst);
    if (id == "weighted_multi_sector") return check_weighted_multi_sector(inst);
    if (id == "amgm_multi_sector") return check_amgm_multi_sector(inst);
    if (id == "logconcavity_sector") return check_logconcavity_sector(inst);
    if (id == "compare_thm29_vs_liu") {
        auto [a, b] = pair();
        ComparisonResult c =
            compare_thm29_vs_liu(a, b, inst.floors[0], inst.floors[1], inst.k, inst.alpha);
        InequalityReport r;
        r.id = "compare_thm29_vs_liu";
        r.lhs = c.thm_multi.rhs;
        r.rhs = c.liu.rhs;
        r.gap = c.delta;
        r.rel_gap = c.delta / std::max({1.0, std::abs(r.lhs), std::abs(r.rhs)});
        r.holds = c.delta >= -default_tol_verdict * std::max({1.0, std::abs(r.lhs),
                                                              std::abs(r.rhs)});
        r.clamped_terms = c.thm_multi.clamped_terms + c.liu.clamped_terms;
        r.notes = "delta = thm29_rhs - liu_rhs";
        return r;
    }
    throw DomainError("unknown inequality id: " + id);
}

struct CampaignConfig {
    std::vector<std::string> inequalities;
    GeneratorSpec generator;
    int trials = 100;
    std::vector<Eigen::Index> dims = {2, 3, 4};
    std::vector<Eigen::Index> ks;  // empty = all valid k
    double tol_verdict = default_tol_verdict;
    std::string output_format = "json";
    std::string output_path;
    int jobs = 1;

    void validate() const {
        if (trials < 1) throw DomainError("campaign: trials must be >= 1");
        if (!(tol_verdict > 0.0)) throw DomainError("campaign: tol_verdict must be positive");
        if (output_format != "json" && output_format != "csv")
            throw DomainError("campaign: output_format must be json or csv");
        for (const auto& id : inequalities)
            if (!is_known_inequality(id))
                throw DomainError("campaign: unknown inequality id: " + id);
        for (Eigen::Index n : dims)
            if (n < 1) throw DomainError("campaign: dims must be >= 1");
    }
};

struct CampaignRow {
    std::string inequality_id;
    Eigen::Index n = 0;
    Eigen::Index k = 0;
    std::size_t m = 0;
    double alpha = 0.0;
    std::uint64_t seed_index = 0;
    InequalityReport report;
    std::string error;  // nonempty when the trial failed outside the inequality
};

struct CampaignAggregate {
    int trials = 0;
    int violations = 0;
    double worst_rel_gap = std::numeric_limits<double>::infinity();
    int equality_cases = 0;
    int clamp_count = 0;
    double min_gap = std::numeric_limits<double>::infinity();
    double median_gap = 0.0;
    int errors = 0;
};

struct CampaignReport {
    CampaignConfig config;
    std::vector<CampaignRow> rows;
    std::map<std::string, CampaignAggregate> aggregates;
    double wall_time_ms = 0.0;  // sidecar only; excluded from determinism
};

namespace campaign_detail {

inline std::uint64_t id_salt(const std::string& id) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : id) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

// Feasible scalar grid: column 1 is lifted so each row satisfies
// x_{i1}^p >= sum_{j>=2} x_{ij}^p.
inline ScalarGrid gen_feasible_grid(Rng& rng) {
    ScalarGrid g;
    const Eigen::Index m = 1 + static_cast<Eigen::Index>(rng.uniform() * 6.0);
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.uniform() * 6.0);
    g.p = rng.uniform(1.0, 5.0);
    g.x.resize(m, n);
    for (Eigen::Index i = 0; i < m; ++i) {
        double tail = 0.0;
        for (Eigen::Index j = 1; j < n; ++j) {
            g.x(i, j) = rng.uniform(0.0, 3.0);
            tail += std::pow(g.x(i, j), g.p);
        }
        // headroom factor in [1, 2]
        g.x(i, 0) = std::pow(tail * rng.uniform(1.0, 2.0) + rng.uniform(0.0, 1.0), 1.0 / g.p);
    }
    return g;
}

// Draw one instance matching the hypothesis class of `id`.
inline InequalityInstance build_instance(const std::string& id, const GeneratorSpec& gspec,
                                         Eigen::Index n, Eigen::Index k, std::uint64_t index) {
    Rng rng(Rng::derive(gspec.seed ^ id_salt(id), index));
    const bool sector = is_sector_id(id);
    const bool pairwise = id == "det_superadditivity" || id == "brunn_minkowski" ||
                          id == "ky_fan" || id == "bergstrom" || id == "yuan_leng" ||
                          id == "liu" || id == "compare_thm29_vs_liu";
    const bool single = id == "ostrowski_taussky" || id == "sector_reverse_det" ||
                        id == "schur_sector_inheritance" || id == "schur_real_part_dominance" ||
                        id == "det_ratio_real_part";
    std::size_t m = pairwise ? 2 : (single ? 1 : 1 + static_cast<std::size_t>(
                                                      rng.uniform() * static_cast<double>(gspec.m)));
    m = std::min<std::size_t>(m, std::max<std::size_t>(gspec.m, pairwise ? 2 : 1));

    InequalityInstance inst;
    inst.k = k;
    double alpha = 0.0;
    if (sector) {
        const double amax = gspec.alpha_target > 0.0 ? gspec.alpha_target : 1.2;
        alpha = rng.uniform(0.0, amax);
    }
    inst.alpha = alpha;

    const bool acc = id == "accretive_dissipative";
    const bool zero_floor = id == "ky_fan" || id == "bergstrom" || id == "multi_ky_fan" ||
                            id == "det_superadditivity" || id == "brunn_minkowski" ||
                            id == "ostrowski_taussky" || id == "sector_reverse_det" ||
                            id == "schur_sector_inheritance" ||
                            id == "schur_real_part_dominance" || id == "det_ratio_real_part";
    for (std::size_t i = 0; i < m; ++i) {
        ComplexMatrix a = acc ? gen_accretive_dissipative(n, rng, gspec.condition_cap)
                          : sector ? gen_sector(n, alpha, rng, gspec.condition_cap)
                                   : gen_pd_with_floor(n, 0.0, rng, gspec.condition_cap);
        double floor = 0.0;
        if (!zero_floor) {
            if (acc) {
                const Complex rot = std::polar(1.0, -half_pi / 2.0);
                ComplexMatrix r(Cmat(rot * a.raw()));
                floor = rng.uniform() * std::max(0.0, real_part_floor(r));
            } else {
                floor = pick_floor(a, gspec.floor_policy, rng);
            }
        }
        inst.floors.push_back(floor);
        inst.matrices.push_back(std::move(a));
    }
    if (id == "weighted_multi_sector" || id == "amgm_multi_sector" ||
        id == "logconcavity_sector") {
        std::vector<double> w(m);
        double sum = 0.0;
        for (auto& x : w) {
            x = rng.uniform();
            sum += x;
        }
        if (id != "weighted_multi_sector")
            for (auto& x : w) x /= sum;  // normalize to sum 1 for the AM-GM forms
        inst.weights = std::move(w);
    }
    return inst;
}

}  // namespace campaign_detail

// Run the configured campaign. Rows are indexed up front and evaluated into a
// preallocated vector, so parallel and serial execution produce identical
// reports for a fixed seed.
inline CampaignReport run_campaign(const CampaignConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    CampaignReport rep;
    rep.config = cfg;

    struct Job {
        std::string id;
        Eigen::Index n, k;
        std::uint64_t index;
    };
    std::vector<Job> jobs;
    for (const auto& id : cfg.inequalities) {
        std::uint64_t index = 0;
        for (Eigen::Index n : cfg.dims) {
            if (n < 2 && (id == "schur_sector_inheritance" || id == "schur_real_part_dominance" ||
                          id == "compare_thm29_vs_liu"))
                continue;  // no interior k at n = 1
            std::vector<Eigen::Index> ks = cfg.ks.empty() ? valid_ks(id, n) : cfg.ks;
            for (Eigen::Index k : ks) {
                if (k < 0 || k > n - 1) continue;
                auto all = valid_ks(id, n);
                if (std::find(all.begin(), all.end(), k) == all.end()) continue;
                for (int t = 0; t < cfg.trials; ++t)
                    jobs.push_back({id, n, k, index++});
            }
        }
    }

    rep.rows.resize(jobs.size());
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const Job& jb = jobs[i];
            CampaignRow& row = rep.rows[i];
            row.inequality_id = jb.id;
            row.n = jb.n;
            row.k = jb.k;
            row.seed_index = jb.index;
            try {
                if (jb.id == "minkowski_complement") {
                    Rng rng(Rng::derive(cfg.generator.seed ^
                                            campaign_detail::id_salt(jb.id), jb.index));
                    ScalarGrid g = campaign_detail::gen_feasible_grid(rng);
                    row.m = static_cast<std::size_t>(g.x.rows());
                    row.report = check_minkowski_complement(g);
                } else {
                    InequalityInstance inst = campaign_detail::build_instance(
                        jb.id, cfg.generator, jb.n, jb.k, jb.index);
                    row.m = inst.family_size();
                    row.alpha = inst.alpha;
                    row.report = evaluate_inequality(jb.id, inst);
                }
                const double scale =
                    std::max({1.0, std::abs(row.report.lhs), std::abs(row.report.rhs)});
                row.report.holds = row.report.gap >= -cfg.tol_verdict * scale;
            } catch (const Error& e) {
                row.error = e.what();
            }
        }
    };

    const int nthreads = std::max(1, cfg.jobs);
    if (nthreads == 1 || jobs.size() < 2) {
        work(0, jobs.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (jobs.size() + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            std::size_t lo = t * chunk, hi = std::min(jobs.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    std::map<std::string, std::vector<double>> gaps;
    for (const auto& row : rep.rows) {
        CampaignAggregate& agg = rep.aggregates[row.inequality_id];
        ++agg.trials;
        if (!row.error.empty()) {
            ++agg.errors;
            continue;
        }
        if (!row.report.holds) {
            ++agg.violations;
            agg.worst_rel_gap = std::min(agg.worst_rel_gap, row.report.rel_gap);
        }
        if (std::abs(row.report.rel_gap) <= equality_rel_gap) ++agg.equality_cases;
        agg.clamp_count += row.report.clamped_terms;
        agg.min_gap = std::min(agg.min_gap, row.report.gap);
        gaps[row.inequality_id].push_back(row.report.gap);
    }
    for (auto& [id, agg] : rep.aggregates) {
        auto& g = gaps[id];
        if (!g.empty()) {
            std::sort(g.begin(), g.end());
            agg.median_gap = g[g.size() / 2];
        }
        if (agg.violations == 0) agg.worst_rel_gap = 0.0;
    }
    rep.wall_time_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline int total_violations(const CampaignReport& rep) {
    int v = 0;
    for (const auto& [id, agg] : rep.aggregates) v += agg.violations + agg.errors;
    return v;
}

inline Json campaign_config_to_json(const CampaignConfig& cfg) {
    Json j;
    j["inequalities"] = cfg.inequalities;
    j["generator"] = to_json(cfg.generator);
    j["trials"] = cfg.trials;
    j["dims"] = cfg.dims;
    if (!cfg.ks.empty()) j["ks"] = cfg.ks;
    j["tol_verdict"] = cfg.tol_verdict;
    j["output_format"] = cfg.output_format;
    if (!cfg.output_path.empty()) j["output_path"] = cfg.output_path;
    j["jobs"] = cfg.jobs;
    return j;
}

inline CampaignConfig campaign_config_from_json(const Json& j) {
    CampaignConfig cfg;
    if (j.contains("inequalities")) {
        const Json& ineq = j.at("inequalities");
        if (ineq.is_string() && ineq.get<std::string>() == "all")
            cfg.inequalities = inequality_ids();
        else
            cfg.inequalities = ineq.get<std::vector<std::string>>();
    }
    if (j.contains("generator")) cfg.generator = generator_spec_from_json(j.at("generator"));
    cfg.trials = j.value("trials", cfg.trials);
    if (j.contains("dims")) cfg.dims = j.at("dims").get<std::vector<Eigen::Index>>();
    if (j.contains("ks") && !(j.at("ks").is_string()))  // "all" == empty
        cfg.ks = j.at("ks").get<std::vector<Eigen::Index>>();
    cfg.tol_verdict = j.value("tol_verdict", cfg.tol_verdict);
    cfg.output_format = j.value("output_format", cfg.output_format);
    cfg.output_path = j.value("output_path", cfg.output_path);
    cfg.jobs = j.value("jobs", cfg.jobs);
    cfg.validate();
    return cfg;
}

// Deterministic body of the report; wall time and timestamps live in the
// caller-added "meta" sidecar, which determinism checks exclude.
inline Json campaign_report_to_json(const CampaignReport& rep, bool include_rows = true) {
    Json j;
    j["config"] = campaign_config_to_json(rep.config);
    Json aggs;
    for (const auto& [id, agg] : rep.aggregates) {
        aggs[id] = Json{{"trials", agg.trials},
                        {"violations", agg.violations},
                        {"worst_rel_gap", agg.worst_rel_gap},
                        {"equality_cases", agg.equality_cases},
                        {"clamp_count", agg.clamp_count},
                        {"min_gap", agg.min_gap},
                        {"median_gap", agg.median_gap},
                        {"errors", agg.errors}};
    }
    j["aggregates"] = std::move(aggs);
    if (include_rows) {
        Json rows = Json::array();
        for (const auto& row : rep.rows) {
            Json r{{"inequality_id", row.inequality_id},
                   {"n", row.n},
                   {"k", row.k},
                   {"m", row.m},
                   {"alpha", row.alpha},
                   {"seed_index", row.seed_index}};
            if (row.error.empty()) {
                r["lhs"] = row.report.lhs;
                r["rhs"] = row.report.rhs;
                r["gap"] = row.report.gap;
                r["rel_gap"] = row.report.rel_gap;
                r["holds"] = row.report.holds;
                r["clamped_terms"] = row.report.clamped_terms;
            } else {
                r["error"] = row.error;
            }
            rows.push_back(std::move(r));
        }
        j["rows"] = std::move(rows);
    }
    return j;
}

// Fixed column order: inequality_id,n,k,m,alpha,seed_index,lhs,rhs,gap,
// rel_gap,holds,clamped_terms.
inline std::string campaign_report_to_csv(const CampaignReport& rep) {
    std::ostringstream out;
    out.precision(17);
    out << "inequality_id,n,k,m,alpha,seed_index,lhs,rhs,gap,rel_gap,holds,clamped_terms\n";
    for (const auto& row : rep.rows) {
        if (!row.error.empty()) continue;
        out << row.inequality_id << ',' << row.n << ',' << row.k << ',' << row.m << ','
            << row.alpha << ',' << row.seed_index << ',' << row.report.lhs << ','
            << row.report.rhs << ',' << row.report.gap << ',' << row.report.rel_gap << ','
            << (row.report.holds ? 1 : 0) << ',' << row.report.clamped_terms << '\n';
    }
    return out.str();
}

}  // namespace sectordet

#endif
