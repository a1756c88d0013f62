// Command-line front end: single-instance checks, instance generation,
// randomized campaigns, and the multi-matrix vs two-matrix bound comparison.
//
// Exit codes: 0 = inequality holds / campaign clean, 2 = violation found,
// 1 = input or usage error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sectordet/campaign.hpp"
#include "sectordet/json_io.hpp"

using namespace sectordet;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SECTOR_DET_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

int cmd_check(const std::string& id, const std::string& path, double tol) {
    Json j = load_json_file(path);
    InequalityReport rep;
    if (id == "minkowski_complement") {
        rep = check_minkowski_complement(grid_from_json(j));
    } else {
        InequalityInstance inst = instance_from_json(j);
        rep = evaluate_inequality(id, inst);
    }
    const double scale = std::max({1.0, std::abs(rep.lhs), std::abs(rep.rhs)});
    rep.holds = rep.gap >= -tol * scale;
    std::cout << to_json(rep).dump(2) << "\n";
    return rep.holds ? 0 : 2;
}

int cmd_compare(const std::string& path, double tol) {
    Json j = load_json_file(path);
    InequalityInstance inst = instance_from_json(j);
    if (inst.family_size() != 2)
        throw DomainError("compare: instance must contain exactly two matrices");
    ComparisonResult c = compare_thm29_vs_liu(inst.matrices[0], inst.matrices[1],
                                              inst.floors[0], inst.floors[1], inst.k,
                                              inst.alpha);
    Json out;
    out["thm29"] = to_json(c.thm_multi);
    out["liu"] = to_json(c.liu);
    out["delta"] = c.delta;
    std::cout << out.dump(2) << "\n";
    const double scale = std::max({1.0, std::abs(c.thm_multi.rhs), std::abs(c.liu.rhs)});
    return c.delta >= -tol * scale && c.thm_multi.holds && c.liu.holds ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Determinantal inequality checker for positive-definite and sector matrices"};
    app.require_subcommand(1);

    // --- check -------------------------------------------------------------
    auto* check = app.add_subcommand("check", "Evaluate one inequality on an instance file");
    std::string check_id, check_file;
    double check_tol = default_tol_verdict;
    check->add_option("inequality", check_id, "Inequality id")->required();
    check->add_option("instance", check_file, "Instance JSON file")->required();
    check->add_option("--tol", check_tol, "Verdict tolerance (relative)");

    // --- gen ---------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Generate an instance file for a hypothesis class");
    GeneratorSpec gspec;
    gspec.seed = default_seed();
    std::string gen_kind = "pd_with_floor", gen_policy = "random_fraction_of_lambda_min";
    std::string gen_out = "instance.json";
    long long gen_n = 3, gen_m = 2, gen_k = 0;
    double gen_alpha = 0.0, gen_cond = 100.0;
    std::uint64_t gen_seed = gspec.seed;
    gen->add_option("--kind", gen_kind, "pd_with_floor|sector|accretive_dissipative");
    gen->add_option("--n", gen_n, "Matrix order");
    gen->add_option("--m", gen_m, "Family size");
    gen->add_option("--k", gen_k, "Leading block index");
    gen->add_option("--alpha", gen_alpha, "Sector half-angle (radians)");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--cond", gen_cond, "Condition cap for generated spectra");
    gen->add_option("--floor-policy", gen_policy,
                    "zero|random_fraction_of_lambda_min|saturating");
    gen->add_option("--out", gen_out, "Output path");

    // --- campaign ----------------------------------------------------------
    auto* camp = app.add_subcommand("campaign", "Run a randomized verification campaign");
    std::string camp_config;
    long long camp_trials = -1, camp_n = -1, camp_k = -1, camp_m = -1, camp_jobs = -1;
    double camp_tol = -1.0, camp_alpha = -1.0;
    std::uint64_t camp_seed = 0;
    bool camp_seed_set = false;
    std::string camp_format, camp_out;
    std::vector<std::string> camp_ineqs;
    camp->add_option("config", camp_config, "Campaign config JSON file");
    camp->add_option("--inequality", camp_ineqs, "Inequality ids (or 'all')");
    camp->add_option("--trials", camp_trials, "Trials per (inequality, n, k)");
    camp->add_option("--n", camp_n, "Single matrix order (overrides config dims)");
    camp->add_option("--k", camp_k, "Single k (overrides config ks)");
    camp->add_option("--m", camp_m, "Max family size");
    camp->add_option("--alpha", camp_alpha, "Sector half-angle cap");
    camp->add_option("--tol", camp_tol, "Verdict tolerance");
    camp->add_option("--jobs", camp_jobs, "Worker threads");
    camp->add_option("--format", camp_format, "json|csv");
    camp->add_option("--out", camp_out, "Report output path");
    auto* seed_opt = camp->add_option("--seed", camp_seed, "Master seed");

    // --- compare -----------------------------------------------------------
    auto* comp = app.add_subcommand("compare", "multi-matrix sector bound (m=2) vs the earlier two-matrix bound on one instance");
    std::string comp_file;
    double comp_tol = default_tol_verdict;
    comp->add_option("instance", comp_file, "Instance JSON file (two matrices)")->required();
    comp->add_option("--tol", comp_tol, "Verdict tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    camp_seed_set = seed_opt->count() > 0;

    try {
        if (check->parsed()) {
            if (!is_known_inequality(check_id))
                throw DomainError("unknown inequality id: " + check_id);
            return cmd_check(check_id, check_file, check_tol);
        }
        if (gen->parsed()) {
            gspec.n = gen_n;
            gspec.m = static_cast<std::size_t>(gen_m);
            gspec.kind = generator_kind_from_string(gen_kind);
            gspec.alpha_target = gen_alpha;
            gspec.floor_policy = floor_policy_from_string(gen_policy);
            gspec.seed = gen_seed;
            gspec.condition_cap = gen_cond;
            InequalityInstance inst = gen_instance(gspec, 0, gen_k);
            save_json_file(gen_out, to_json(inst));
            std::cout << "wrote " << gen_out << "\n";
            return 0;
        }
        if (camp->parsed()) {
            CampaignConfig cfg;
            if (!camp_config.empty())
                cfg = campaign_config_from_json(load_json_file(camp_config));
            // Flags take precedence over the config file.
            if (!camp_ineqs.empty()) {
                if (camp_ineqs.size() == 1 && camp_ineqs[0] == "all")
                    cfg.inequalities = inequality_ids();
                else
                    cfg.inequalities = camp_ineqs;
            }
            if (cfg.inequalities.empty()) cfg.inequalities = inequality_ids();
            if (camp_trials > 0) cfg.trials = static_cast<int>(camp_trials);
            if (camp_n > 0) cfg.dims = {camp_n};
            if (camp_k >= 0) cfg.ks = {camp_k};
            if (camp_m > 0) cfg.generator.m = static_cast<std::size_t>(camp_m);
            if (camp_alpha >= 0.0) cfg.generator.alpha_target = camp_alpha;
            if (camp_tol > 0.0) cfg.tol_verdict = camp_tol;
            if (camp_jobs > 0) cfg.jobs = static_cast<int>(camp_jobs);
            if (!camp_format.empty()) cfg.output_format = camp_format;
            if (!camp_out.empty()) cfg.output_path = camp_out;
            if (camp_seed_set)
                cfg.generator.seed = camp_seed;
            else if (camp_config.empty())
                cfg.generator.seed = default_seed();
            cfg.validate();

            CampaignReport rep = run_campaign(cfg);
            if (!cfg.output_path.empty()) {
                if (cfg.output_format == "csv") {
                    std::ofstream out(cfg.output_path);
                    if (!out) throw ParseError("cannot write " + cfg.output_path);
                    out << campaign_report_to_csv(rep);
                } else {
                    Json j = campaign_report_to_json(rep);
                    j["meta"] = Json{{"wall_time_ms", rep.wall_time_ms}};
                    save_json_file(cfg.output_path, j);
                }
            }
            Json summary = campaign_report_to_json(rep, /*include_rows=*/false);
            std::cout << summary.dump(2) << "\n";
            return total_violations(rep) == 0 ? 0 : 2;
        }
        if (comp->parsed()) return cmd_compare(comp_file, comp_tol);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
