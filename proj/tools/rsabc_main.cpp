// Command-line front end: instance generation, solving, oracle checks,
// cut audits, non-implication witnesses, and the benchmark sweeps.

#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "rsabc/appconfig.hpp"
#include "rsabc/bench.hpp"
#include "rsabc/bnc.hpp"
#include "rsabc/model.hpp"
#include "rsabc/oracle.hpp"
#include "rsabc/separation.hpp"
#include "rsabc/symmetry.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInternal = 4;

struct SolveFlags {
    std::string instance_path;
    std::string config_file;
    std::string out_path;
    std::string presort_file;
    std::string export_stats;
    std::string families = "";
    std::string strategy = "";
    std::vector<std::string> eps_entries;
    double time_limit = -1.0;
    int h = -1;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool no_optimality = false;
    bool no_static = false;
    bool serial = false;
    bool dump_model = false;
    bool log = false;
};

rsabc::BncConfig make_config(const SolveFlags& f) {
    rsabc::BncConfig cfg;
    if (!f.config_file.empty())
        rsabc::apply_key_values(cfg, rsabc::parse_key_value_file(f.config_file));
    if (f.time_limit >= 0.0) cfg.time_limit_minutes = f.time_limit;
    if (!f.strategy.empty()) {
        auto kind = rsabc::strategy_from_name(f.strategy);
        if (!kind) throw CLI::ValidationError("--strategy", "unknown strategy " + f.strategy);
        cfg.strategy.kind = *kind;
    }
    if (f.h >= 1) cfg.strategy.h = f.h;
    if (f.seed_given) cfg.seed = f.seed;
    if (!f.families.empty()) cfg.enabled_families = rsabc::parse_families(f.families);
    for (const auto& entry : f.eps_entries) {
        auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--eps", "expected family=value");
        std::string fam = entry.substr(0, eq);
        if (!rsabc::is_family_tag(fam))
            throw CLI::ValidationError("--eps", "unknown family " + fam);
        cfg.eps[fam] = std::stod(entry.substr(eq + 1));
    }
    if (f.no_optimality) cfg.use_optimality_cuts = false;
    if (f.no_static) cfg.static_rows = false;
    if (f.serial) cfg.exec = rsabc::Exec::serial;
    if (!f.presort_file.empty()) cfg.strategy.presorted = rsabc::load_presort_csv(f.presort_file);
    return cfg;
}

int cmd_solve(const SolveFlags& flags) {
    rsabc::Instance inst = rsabc::parse_instance_file(flags.instance_path);
    rsabc::BncConfig cfg = make_config(flags);
    if (flags.dump_model) {
        rsabc::ModelOptions mopts;
        mopts.static_optimality_rows = cfg.static_rows && cfg.use_optimality_cuts;
        rsabc::dump_model(rsabc::build_model(inst, mopts), std::cout);
        return kExitOk;
    }
    if (flags.log) cfg.log = &std::cerr;

    rsabc::SolveResult res = rsabc::solve_bnc(inst, cfg);
    std::cout << "instance " << inst.name << "\n"
              << "status " << rsabc::to_string(res.status) << "\n";
    if (res.has_incumbent()) std::cout << "objective " << res.objective << "\n";
    std::cout << "bound " << res.bound << "\n"
              << "gap " << res.gap << "\n"
              << "nodes " << res.nodes << "\n"
              << "cuts " << res.total_cuts << "\n"
              << "wall_minutes " << res.wall_minutes << "\n";
    for (const auto& [fam, n] : res.cuts_per_family)
        if (n > 0) std::cout << "cuts[" << fam << "] " << n << "\n";

    if (!flags.out_path.empty() && res.has_incumbent()) {
        std::ofstream out(flags.out_path);
        if (res.solution) {
            const auto& sol = *res.solution;
            for (std::size_t d = 0; d < sol.assignments.size(); ++d) {
                const auto& a = sol.assignments[d];
                out << "d " << d << " path";
                for (int e : a.path) out << " " << e;
                out << " slots " << a.start_slot << " "
                    << a.start_slot + inst.demands[d].volume - 1 << "\n";
            }
        } else {
            out << "# incumbent is not canonical; raw nonzero variables\n";
            rsabc::VarSpace vars{static_cast<int>(inst.demands.size()),
                                 inst.graph.arc_count(), inst.slots};
            for (int i = 0; i < vars.count(); ++i)
                if (res.incumbent_point[i] > 0.5)
                    out << "u " << vars.demand_of(i) << " " << vars.arc_of(i) << " "
                        << vars.slot_of(i) << "\n";
        }
    }
    if (!flags.export_stats.empty()) rsabc::save_stats_csv(res.family_stats, flags.export_stats);
    switch (res.status) {
        case rsabc::SolveStatus::optimal: return kExitOk;
        case rsabc::SolveStatus::infeasible: return kExitInfeasible;
        default: return kExitTimeout;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"branch-and-cut solver for routing and spectrum allocation"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    rsabc::GeneratorParams gp;
    std::string gen_out;
    std::string gen_name;
    gen->add_option("--nodes", gp.nodes, "node count")->required();
    gen->add_option("--density", gp.density, "arc probability in (0,1]")->required();
    gen->add_option("--demands", gp.demand_count, "demand count")->required();
    gen->add_option("--vmin", gp.volume_min, "minimum volume");
    gen->add_option("--vmax", gp.volume_max, "maximum volume");
    gen->add_option("--slots", gp.slots, "available slots")->required();
    gen->add_option("--seed", gp.seed, "random seed");
    gen->add_option("--retries", gp.retry_budget, "endpoint retry budget");
    gen->add_option("--out", gen_out, "output file (default stdout)");
    gen->add_option("--name", gen_name, "instance label");

    // solve
    SolveFlags sf;
    auto* solve = app.add_subcommand("solve", "run the branch-and-cut solver");
    solve->add_option("instance", sf.instance_path, "instance file")->required();
    solve->add_option("--config", sf.config_file, "key=value config file");
    solve->add_option("--time-limit", sf.time_limit, "time limit in minutes");
    solve->add_option("--strategy", sf.strategy,
                      "brute-force | rnd | eff | eff-rnd | weighted");
    solve->add_option("--h", sf.h, "stop separating after h productive families");
    auto* seed_opt = solve->add_option("--seed", sf.seed, "random seed");
    solve->add_option("--eps", sf.eps_entries, "family=value violation threshold")
        ->take_all();
    solve->add_option("--families", sf.families, "all | none | comma-separated tags");
    solve->add_flag("--no-optimality-cuts", sf.no_optimality,
                    "restrict to valid inequalities");
    solve->add_flag("--no-static-rows", sf.no_static, "skip build-time equation rows");
    solve->add_flag("--serial", sf.serial, "serial separation kernels");
    solve->add_flag("--dump-model", sf.dump_model, "print the model rows and exit");
    solve->add_flag("--log", sf.log, "progress log to stderr");
    solve->add_option("--presort", sf.presort_file, "presorted family order (csv)");
    solve->add_option("--export-stats", sf.export_stats,
                      "write per-family effectiveness coefficients (csv)");
    solve->add_option("--out", sf.out_path, "solution output file");

    // oracle
    std::string oracle_path;
    auto* orc = app.add_subcommand("oracle", "exact optimum by brute-force enumeration");
    orc->add_option("instance", oracle_path, "instance file")->required();

    // audit
    std::string audit_path, audit_out, audit_families = "all";
    int audit_points = 100;
    std::uint64_t audit_seed = 0;
    auto* audit = app.add_subcommand("audit", "audit separated cuts against the oracle");
    audit->add_option("instance", audit_path, "instance file")->required();
    audit->add_option("--families", audit_families, "all | comma-separated tags");
    audit->add_option("--points", audit_points, "random fractional points per family");
    audit->add_option("--seed", audit_seed, "random seed");
    audit->add_option("--out", audit_out, "audit csv (default stdout)");

    // witness
    std::string wit_path, wit_base = "", wit_target, wit_out;
    int wit_index = -1;
    auto* wit = app.add_subcommand("witness", "search a non-implication witness point");
    wit->add_option("instance", wit_path, "instance file")->required();
    wit->add_option("--base", wit_base, "comma-separated base families (model always in)");
    wit->add_option("--target", wit_target, "target family tag")->required();
    wit->add_option("--target-index", wit_index, "restrict to one row of the family");
    wit->add_option("--out", wit_out, "write the witness point");

    // calibrate
    std::string cal_suite, cal_family, cal_out, cal_grid;
    double cal_tl = 4.0;
    int cal_runs = 3;
    std::uint64_t cal_seed = 0;
    auto* cal = app.add_subcommand("calibrate", "epsilon sweep for one family");
    cal->add_option("--suite", cal_suite, "suite file")->required();
    cal->add_option("--family", cal_family, "family tag")->required();
    cal->add_option("--grid", cal_grid, "comma-separated epsilon values");
    cal->add_option("--time-limit", cal_tl, "per-run limit in minutes");
    cal->add_option("--runs", cal_runs, "runs per instance (best kept)");
    cal->add_option("--seed", cal_seed, "base seed");
    cal->add_option("--out", cal_out, "csv output (default stdout)");

    // compare
    std::string cmp_suite, cmp_out, cmp_strategies = "brute-force,rnd,eff,eff-rnd,weighted";
    std::string cmp_h = "5,10,15,20,25,30";
    double cmp_tl = 10.0;
    int cmp_runs = 2;
    std::uint64_t cmp_seed = 0;
    bool cmp_no_bnb = false;
    auto* cmp = app.add_subcommand("compare", "strategy and h sweep");
    cmp->add_option("--suite", cmp_suite, "suite file")->required();
    cmp->add_option("--strategies", cmp_strategies, "comma-separated strategy names");
    cmp->add_option("--h", cmp_h, "comma-separated h values");
    cmp->add_option("--time-limit", cmp_tl, "per-run limit in minutes");
    cmp->add_option("--runs", cmp_runs, "runs per configuration (best kept)");
    cmp->add_option("--seed", cmp_seed, "base seed");
    cmp->add_flag("--no-bnb", cmp_no_bnb, "skip the plain branch-and-bound baseline");
    cmp->add_option("--out", cmp_out, "csv output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            rsabc::Instance inst = rsabc::generate_instance(gp);
            if (!gen_name.empty()) inst.name = gen_name;
            if (gen_out.empty()) {
                rsabc::serialize_instance(inst, std::cout);
            } else {
                std::ofstream out(gen_out);
                if (!out) throw std::runtime_error("cannot write " + gen_out);
                rsabc::serialize_instance(inst, out);
            }
            return kExitOk;
        }
        if (solve->parsed()) {
            sf.seed_given = seed_opt->count() > 0;
            return cmd_solve(sf);
        }
        if (orc->parsed()) {
            rsabc::Instance inst = rsabc::parse_instance_file(oracle_path);
            rsabc::OracleOptimum opt = rsabc::oracle_optimum(inst);
            if (!opt.feasible) {
                std::cout << "status Infeasible\n";
                return kExitInfeasible;
            }
            std::cout << "status Optimal\nobjective " << opt.objective << "\noptima "
                      << opt.optima.size() << "\n";
            return kExitOk;
        }
        if (audit->parsed()) {
            rsabc::Instance inst = rsabc::parse_instance_file(audit_path);
            auto families = rsabc::parse_families(audit_families);
            std::vector<std::string> tags =
                families ? *families : rsabc::all_family_tags();
            rsabc::StructurePools pools = rsabc::build_pools(inst, {});
            rsabc::OracleEnumeration enumr = rsabc::enumerate_canonical(inst);
            rsabc::VarSpace vars{static_cast<int>(inst.demands.size()),
                                 inst.graph.arc_count(), inst.slots};
            std::ostream* out = &std::cout;
            std::ofstream file;
            if (!audit_out.empty()) {
                file.open(audit_out);
                if (!file) throw std::runtime_error("cannot write " + audit_out);
                out = &file;
            }
            (*out) << "family,instance,cuts_audited,failures\n";
            long total_failures = 0;
            std::mt19937_64 rng(audit_seed);
            std::uniform_real_distribution<double> uni(0.0, 1.0);
            for (const auto& tag : tags) {
                long audited = 0, failures = 0;
                for (int p = 0; p < audit_points; ++p) {
                    rsabc::FractionalPoint x(vars.count());
                    for (auto& v : x) v = uni(rng);
                    rsabc::SepOptions sopts;
                    sopts.seed = rng();
                    auto cuts = rsabc::separate_family(tag, inst, pools, x, sopts);
                    auto audits = rsabc::audit_cuts(enumr, inst, cuts);
                    for (std::size_t i = 0; i < cuts.size(); ++i) {
                        ++audited;
                        if (!rsabc::audit_passes(audits[i], cuts[i].kind)) ++failures;
                    }
                }
                total_failures += failures;
                (*out) << tag << "," << inst.name << "," << audited << "," << failures << "\n";
            }
            std::cerr << "audit failures: " << total_failures << "\n";
            return kExitOk;
        }
        if (wit->parsed()) {
            rsabc::Instance inst = rsabc::parse_instance_file(wit_path);
            if (!rsabc::is_family_tag(wit_target))
                throw CLI::ValidationError("--target", "unknown family " + wit_target);
            rsabc::StructurePools pools = rsabc::build_pools(inst, {});
            std::vector<std::string> base_families;
            if (!wit_base.empty()) {
                auto parsed = rsabc::parse_families(wit_base);
                base_families = parsed ? *parsed : rsabc::all_family_tags();
            }
            rsabc::WitnessQuery query;
            query.inst = &inst;
            query.base_rows = rsabc::build_witness_base(inst, pools, base_families);
            auto targets = rsabc::enumerate_family_rows(wit_target, inst, pools, true);
            rsabc::WitnessResult best;
            int best_index = -1;
            for (int i = 0; i < static_cast<int>(targets.size()); ++i) {
                if (wit_index >= 0 && i != wit_index) continue;
                query.target = targets[i];
                auto res = rsabc::find_witness(query);
                if (res.base_infeasible) {
                    std::cout << "vacuous: base rows are infeasible\n";
                    return kExitOk;
                }
                if (res.found && res.violation > best.violation) {
                    best = res;
                    best_index = i;
                }
            }
            if (best_index < 0) {
                std::cout << "none\n";
                return kExitOk;
            }
            std::cout << "witness target_index " << best_index << " violation "
                      << best.violation << "\n";
            if (!wit_out.empty()) {
                std::ofstream out(wit_out);
                rsabc::VarSpace vars{static_cast<int>(inst.demands.size()),
                                     inst.graph.arc_count(), inst.slots};
                out << "# witness for " << wit_target << " row " << best_index
                    << " violation " << best.violation << "\n";
                for (int i = 0; i < vars.count(); ++i)
                    if (best.point[i] > 1e-9)
                        out << "u " << vars.demand_of(i) << " " << vars.arc_of(i) << " "
                            << vars.slot_of(i) << " " << best.point[i] << "\n";
            }
            return kExitOk;
        }
        if (cal->parsed()) {
            if (!rsabc::is_family_tag(cal_family))
                throw CLI::ValidationError("--family", "unknown family " + cal_family);
            auto suite = rsabc::load_suite(cal_suite);
            std::vector<double> grid;
            if (cal_grid.empty()) {
                grid = rsabc::default_eps_grid();
            } else {
                std::istringstream ss(cal_grid);
                std::string item;
                while (std::getline(ss, item, ',')) grid.push_back(std::stod(item));
            }
            rsabc::BncConfig base;
            base.time_limit_minutes = cal_tl;
            base.seed = cal_seed;
            auto rows = rsabc::calibrate_eps(suite, cal_family, grid, base, cal_runs);
            if (cal_out.empty()) {
                rsabc::write_calibration_csv(rows, std::cout);
            } else {
                std::ofstream out(cal_out);
                rsabc::write_calibration_csv(rows, out);
            }
            return kExitOk;
        }
        if (cmp->parsed()) {
            auto suite = rsabc::load_suite(cmp_suite);
            std::vector<rsabc::StrategyKind> strategies;
            {
                std::istringstream ss(cmp_strategies);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto kind = rsabc::strategy_from_name(item);
                    if (!kind)
                        throw CLI::ValidationError("--strategies", "unknown strategy " + item);
                    strategies.push_back(*kind);
                }
            }
            std::vector<int> hs;
            {
                std::istringstream ss(cmp_h);
                std::string item;
                while (std::getline(ss, item, ',')) hs.push_back(std::stoi(item));
            }
            rsabc::BncConfig base;
            base.seed = cmp_seed;
            auto rows = rsabc::compare_strategies(suite, strategies, hs, cmp_tl, base, cmp_runs,
                                                  !cmp_no_bnb);
            if (cmp_out.empty()) {
                rsabc::write_comparison_csv(rows, std::cout);
            } else {
                std::ofstream out(cmp_out);
                rsabc::write_comparison_csv(rows, out);
            }
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rsabc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rsabc::SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
