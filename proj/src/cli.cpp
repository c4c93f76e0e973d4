#include "primecomp/cli.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <CLI11.hpp>

#include "primecomp/artifact_io.hpp"
#include "primecomp/goldbach.hpp"
#include "primecomp/numtheory.hpp"
#include "primecomp/randcomplement.hpp"
#include "primecomp/sieve.hpp"
#include "primecomp/tune.hpp"
#include "primecomp/verify.hpp"

namespace primecomp {

namespace {

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::pair<std::uint64_t, std::string>>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << header << "\n";
    for (const auto& [x, v] : rows) out << x << "," << v << "\n";
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

SparseComplement load_set(const std::string& path) {
    return complement_from_json(read_json_file(path));
}

}  // namespace

int cli_run(const std::vector<std::string>& args) {
    CLI::App app{"randomized sparse prime complements: construction and verification"};
    app.require_subcommand(1);

    unsigned threads = 0;
    app.add_option("--threads", threads, "thread budget (0 = hardware)");

    struct {
        std::int64_t lo = 0, hi = 0, count_at = -1;
    } sieve_opt;
    auto* cmd_sieve = app.add_subcommand("sieve", "sieve a range and count primes");
    cmd_sieve->add_option("--lo", sieve_opt.lo)->required()->check(CLI::NonNegativeNumber);
    cmd_sieve->add_option("--hi", sieve_opt.hi)->required()->check(CLI::NonNegativeNumber);
    cmd_sieve->add_option("--count-at", sieve_opt.count_at);

    struct {
        std::int64_t n = 0;
        double tol = 1e-9;
    } ss_opt;
    auto* cmd_ss = app.add_subcommand("singular-series", "evaluate C(n)");
    cmd_ss->add_option("--n", ss_opt.n)->required()->check(CLI::PositiveNumber);
    cmd_ss->add_option("--tol", ss_opt.tol);

    struct {
        std::string fn;
        std::int64_t n = 0;
    } arith_opt;
    auto* cmd_arith = app.add_subcommand("arith", "arithmetic functions");
    cmd_arith->add_option("--fn", arith_opt.fn)
        ->required()
        ->check(CLI::IsMember({"tau", "phi", "omega"}));
    cmd_arith->add_option("--n", arith_opt.n)->required()->check(CLI::PositiveNumber);

    struct {
        std::int64_t x = 0, M = 0, y = 0;
        double cstar = 0.5;
        std::string out;
    } gs_opt;
    auto* cmd_gs = app.add_subcommand("goldbach-stats", "short-interval exceptional-set scan");
    cmd_gs->add_option("--x", gs_opt.x)->required()->check(CLI::PositiveNumber);
    cmd_gs->add_option("--M", gs_opt.M)->required()->check(CLI::PositiveNumber);
    cmd_gs->add_option("--y", gs_opt.y)->required()->check(CLI::NonNegativeNumber);
    cmd_gs->add_option("--cstar", gs_opt.cstar);
    cmd_gs->add_option("--out", gs_opt.out)->required();

    struct {
        double c = 1;
        std::int64_t max = 0, seed = 0;
        std::string out;
    } ba_opt;
    auto* cmd_ba = app.add_subcommand("build-a", "sample the order-2 complement A");
    cmd_ba->add_option("--c", ba_opt.c)->required();
    cmd_ba->add_option("--max", ba_opt.max)->required()->check(CLI::PositiveNumber);
    cmd_ba->add_option("--seed", ba_opt.seed)->required()->check(CLI::NonNegativeNumber);
    cmd_ba->add_option("--out", ba_opt.out)->required();

    struct {
        std::int64_t N = 0, seed = 0;
        double K = 1, c0 = 0.5;
        std::string out;
    } bb_opt;
    auto* cmd_bb = app.add_subcommand("build-b", "sample one block of the almost-complement B");
    cmd_bb->add_option("--N", bb_opt.N)->required()->check(CLI::PositiveNumber);
    cmd_bb->add_option("--K", bb_opt.K)->required();
    cmd_bb->add_option("--c0", bb_opt.c0);
    cmd_bb->add_option("--seed", bb_opt.seed)->required()->check(CLI::NonNegativeNumber);
    cmd_bb->add_option("--out", bb_opt.out)->required();

    struct {
        std::string schedule, out;
        std::int64_t seed = 0;
    } asm_opt;
    auto* cmd_asm = app.add_subcommand("assemble-b", "assemble B across a scale schedule");
    cmd_asm->add_option("--schedule", asm_opt.schedule)->required();
    cmd_asm->add_option("--seed", asm_opt.seed)->required()->check(CLI::NonNegativeNumber);
    cmd_asm->add_option("--out", asm_opt.out)->required();

    struct {
        std::string set, out, csv, parity = "odd";
        std::int64_t lo = 0, hi = 0;
    } va_opt;
    auto* cmd_va = app.add_subcommand("verify-a", "coverage report for n = a1 + a2 + p");
    cmd_va->add_option("--set", va_opt.set)->required();
    cmd_va->add_option("--lo", va_opt.lo)->required()->check(CLI::PositiveNumber);
    cmd_va->add_option("--hi", va_opt.hi)->required()->check(CLI::PositiveNumber);
    cmd_va->add_option("--out", va_opt.out)->required();
    cmd_va->add_option("--csv", va_opt.csv);
    cmd_va->add_option("--parity", va_opt.parity)->check(CLI::IsMember({"odd", "even"}));

    struct {
        std::string set, out, csv;
        std::int64_t x = 0;
        double eps = 0.1, c1 = 0.7;
        bool grid = false;
    } vb_opt;
    auto* cmd_vb = app.add_subcommand("verify-b", "density of P + B");
    cmd_vb->add_option("--set", vb_opt.set)->required();
    cmd_vb->add_option("--x", vb_opt.x)->required()->check(CLI::PositiveNumber);
    cmd_vb->add_option("--eps", vb_opt.eps);
    cmd_vb->add_option("--c1", vb_opt.c1);
    cmd_vb->add_flag("--grid", vb_opt.grid, "emit the x_j = N/eta^j density grid");
    cmd_vb->add_option("--out", vb_opt.out);
    cmd_vb->add_option("--csv", vb_opt.csv);

    struct {
        double E = 0, delta = 0, eps = 0;
    } ja_opt;
    auto* cmd_ja = app.add_subcommand("janson", "lower-tail bound certificate");
    cmd_ja->add_option("--E", ja_opt.E)->required();
    cmd_ja->add_option("--delta", ja_opt.delta)->required();
    cmd_ja->add_option("--eps", ja_opt.eps)->required();

    struct {
        std::int64_t n = 0;
        double c = 1, eps = 0.3;
    } eyd_opt;
    auto* cmd_eyd = app.add_subcommand("eyd", "exact E(Y*) and Delta by enumeration");
    cmd_eyd->add_option("--n", eyd_opt.n)->required()->check(CLI::PositiveNumber);
    cmd_eyd->add_option("--c", eyd_opt.c)->required();
    cmd_eyd->add_option("--eps", eyd_opt.eps);

    struct {
        std::int64_t max = 0, seeds = 10;
        double target = 0.5, c_floor = 0.25, c_ceiling = 512.0;
        std::string out;
    } tc_opt;
    auto* cmd_tc = app.add_subcommand("tune-c", "search the smallest covering density constant");
    cmd_tc->add_option("--max", tc_opt.max)->required()->check(CLI::PositiveNumber);
    cmd_tc->add_option("--seeds", tc_opt.seeds)->check(CLI::PositiveNumber);
    cmd_tc->add_option("--target-success", tc_opt.target);
    cmd_tc->add_option("--c-floor", tc_opt.c_floor);
    cmd_tc->add_option("--c-ceiling", tc_opt.c_ceiling);
    cmd_tc->add_option("--out", tc_opt.out);

    struct {
        std::string in, reemit;
    } rp_opt;
    auto* cmd_rp = app.add_subcommand("report", "summarize or re-emit a persisted artifact");
    cmd_rp->add_option("--in", rp_opt.in)->required();
    cmd_rp->add_option("--reemit", rp_opt.reemit);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    set_thread_budget(threads);

    try {
        if (cmd_sieve->parsed()) {
            auto table = sieve_range(static_cast<std::uint64_t>(sieve_opt.lo),
                                     static_cast<std::uint64_t>(sieve_opt.hi));
            std::uint64_t at = sieve_opt.count_at >= 0 ? static_cast<std::uint64_t>(sieve_opt.count_at)
                                                       : table.hi();
            std::printf("%" PRIu64 "\n", table.count_primes(at));
        } else if (cmd_ss->parsed()) {
            const std::uint64_t n = static_cast<std::uint64_t>(ss_opt.n);
            if (n < 2) throw std::invalid_argument("singular-series: n < 2");
            if (n % 2 != 0) {
                std::printf("0\n");
                return 0;
            }
            SmallestFactorTable fact(n);
            double corr = 1.0;
            for (auto [p, e] : fact.factorize(n))
                if (p > 2) corr *= static_cast<double>(p - 1) / static_cast<double>(p - 2);
            SingularSeries series({0, ss_opt.tol}, corr);
            std::printf("%s\n", fmt_double(series.eval(n, fact)).c_str());
        } else if (cmd_arith->parsed()) {
            const std::uint64_t n = static_cast<std::uint64_t>(arith_opt.n);
            SmallestFactorTable fact(n);
            std::uint64_t v = 0;
            if (arith_opt.fn == "tau")
                v = tau(n, fact);
            else if (arith_opt.fn == "phi")
                v = euler_phi(n, fact);
            else
                v = omega(n, fact);
            std::printf("%" PRIu64 "\n", v);
        } else if (cmd_gs->parsed()) {
            IntervalPairQuery q;
            q.x = static_cast<std::uint64_t>(gs_opt.x);
            q.M = static_cast<std::uint64_t>(gs_opt.M);
            q.y = static_cast<std::uint64_t>(gs_opt.y);
            q.cstar = gs_opt.cstar;
            auto table = sieve_range(0, q.x + q.M);
            SmallestFactorTable fact(q.x + q.M);
            SingularSeries series({0, 1e-6}, 8.0);
            auto rep = exceptional_set(q, table, series, fact);
            json j = exceptional_report_to_json(rep);
            json cfg;
            cfg["x"] = q.x;
            cfg["M"] = q.M;
            cfg["y"] = q.y;
            cfg["cstar"] = q.cstar;
            j.update(artifact_envelope("goldbach-stats", cfg));
            write_artifact(gs_opt.out, j);
        } else if (cmd_ba->parsed()) {
            SamplerConfigA cfg;
            cfg.c = ba_opt.c;
            cfg.range_max = static_cast<std::uint64_t>(ba_opt.max);
            cfg.seed = static_cast<std::uint64_t>(ba_opt.seed);
            auto table = sieve_range(0, cfg.range_max);
            write_artifact(ba_opt.out, complement_to_json(sample_A(cfg, table), "build-a"));
        } else if (cmd_bb->parsed()) {
            SamplerConfigB cfg;
            cfg.N = static_cast<std::uint64_t>(bb_opt.N);
            cfg.K = bb_opt.K;
            cfg.c0 = bb_opt.c0;
            cfg.seed = static_cast<std::uint64_t>(bb_opt.seed);
            const std::uint64_t M = static_cast<std::uint64_t>(
                int_threshold_floor(std::pow(static_cast<double>(cfg.N), cfg.c0)));
            auto table = sieve_range(0, 2 * M + 1);
            write_artifact(bb_opt.out, complement_to_json(sample_B_block(cfg, table), "build-b"));
        } else if (cmd_asm->parsed()) {
            ScaleSchedule schedule = schedule_from_json(read_json_file(asm_opt.schedule));
            const std::uint64_t n_last = schedule.N_sequence.back();
            const std::uint64_t m_last = static_cast<std::uint64_t>(
                int_threshold_floor(std::pow(static_cast<double>(n_last), schedule.c0)));
            auto table = sieve_range(0, 2 * m_last + 1);
            auto set = assemble_B(schedule, static_cast<std::uint64_t>(asm_opt.seed), table);
            json j = complement_to_json(set, "assemble-b");
            json loss = json::array();
            for (const auto& row : truncation_loss_annotations(schedule)) {
                json r;
                r["block"] = row.block;
                r["x"] = row.x;
                r["loss_bound"] = row.loss_bound;
                r["eps_budget"] = row.eps_budget;
                loss.push_back(r);
            }
            j["truncation_loss"] = loss;
            write_artifact(asm_opt.out, j);
        } else if (cmd_va->parsed()) {
            auto set = load_set(va_opt.set);
            const std::uint64_t lo = static_cast<std::uint64_t>(va_opt.lo);
            const std::uint64_t hi = static_cast<std::uint64_t>(va_opt.hi);
            auto table = sieve_range(0, hi);
            CoverageOptions opts;
            opts.parity = va_opt.parity == "even" ? Parity::Even : Parity::Odd;
            auto rep = coverage_scan(set, lo, hi, table, opts);
            json j = coverage_report_to_json(rep);
            json cfg;
            cfg["set"] = va_opt.set;
            cfg["lo"] = lo;
            cfg["hi"] = hi;
            cfg["parity"] = va_opt.parity;
            j.update(artifact_envelope("verify-a", cfg));
            j["seed"] = set.seed;
            write_artifact(va_opt.out, j);
            if (!va_opt.csv.empty()) {
                std::vector<std::pair<std::uint64_t, std::string>> rows;
                std::uint64_t first = rep.n_lo + ((rep.parity == Parity::Odd ? 1 : 0) + 2 -
                                                  rep.n_lo % 2) % 2;
                for (std::size_t k = 0; k < rep.counts.size(); k++)
                    rows.emplace_back(first + 2 * k, std::to_string(rep.counts[k]));
                write_csv(va_opt.csv, "n,count", rows);
            }
        } else if (cmd_vb->parsed()) {
            auto set = load_set(vb_opt.set);
            const std::uint64_t x = static_cast<std::uint64_t>(vb_opt.x);
            auto table = sieve_range(0, x);
            json cfg;
            cfg["set"] = vb_opt.set;
            cfg["x"] = x;
            cfg["eps"] = vb_opt.eps;
            cfg["c1"] = vb_opt.c1;
            if (vb_opt.grid) {
                auto grid = density_grid(set, x, vb_opt.eps, vb_opt.c1, table);
                json j = density_grid_to_json(grid);
                j.update(artifact_envelope("verify-b", cfg));
                j["seed"] = set.seed;
                j["literal_density"] = sumset_density(set, x, table);
                if (!vb_opt.out.empty()) write_artifact(vb_opt.out, j);
                for (std::size_t k = 0; k < grid.x_values.size(); k++)
                    std::printf("%" PRIu64 " %s\n", grid.x_values[k],
                                fmt_double(grid.densities[k]).c_str());
                if (!vb_opt.csv.empty()) {
                    std::vector<std::pair<std::uint64_t, std::string>> rows;
                    for (std::size_t k = 0; k < grid.x_values.size(); k++)
                        rows.emplace_back(grid.x_values[k], fmt_double(grid.densities[k]));
                    write_csv(vb_opt.csv, "x,density", rows);
                }
            } else {
                double density = sumset_density(set, x, table);
                std::printf("%s\n", fmt_double(density).c_str());
                if (!vb_opt.out.empty()) {
                    json j = artifact_envelope("verify-b", cfg);
                    j["seed"] = set.seed;
                    j["density"] = density;
                    write_artifact(vb_opt.out, j);
                }
            }
        } else if (cmd_ja->parsed()) {
            auto cert = janson_bound(ja_opt.E, ja_opt.delta, ja_opt.eps);
            std::printf("%s\n", fmt_double(cert.bound).c_str());
        } else if (cmd_eyd->parsed()) {
            const std::uint64_t n = static_cast<std::uint64_t>(eyd_opt.n);
            auto table = sieve_range(0, n);
            auto r = exact_ey_delta(n, eyd_opt.c, eyd_opt.eps, table);
            json j;
            j["expected"] = r.expected;
            j["delta"] = r.delta;
            j["x_size"] = r.x_size;
            std::printf("%s\n", j.dump().c_str());
        } else if (cmd_tc->parsed()) {
            const std::uint64_t max = static_cast<std::uint64_t>(tc_opt.max);
            auto table = sieve_range(0, max);
            std::vector<std::uint64_t> seeds;
            for (std::int64_t s = 1; s <= tc_opt.seeds; s++)
                seeds.push_back(static_cast<std::uint64_t>(s));
            auto result = tune_c(max, seeds, tc_opt.target, table, tc_opt.c_floor,
                                 tc_opt.c_ceiling);
            if (!result.attained) {
                std::printf("unattained\n");
            } else {
                std::printf("%s\n", fmt_double(result.c).c_str());
            }
            if (!tc_opt.out.empty()) {
                json cfg;
                cfg["max"] = max;
                cfg["seeds"] = seeds;
                cfg["target_success"] = tc_opt.target;
                json j = artifact_envelope("tune-c", cfg);
                j["attained"] = result.attained;
                j["c"] = result.c;
                j["success"] = result.success;
                json trace = json::array();
                for (auto [c, f] : result.trace) {
                    json t;
                    t["c"] = c;
                    t["success"] = f;
                    trace.push_back(t);
                }
                j["trace"] = trace;
                json outcomes = json::array();
                for (const auto& o : result.outcomes) {
                    json t;
                    t["seed"] = o.seed;
                    t["success"] = o.success;
                    t["largest_failure"] = o.largest_failure;
                    t["set_size"] = o.set_size;
                    outcomes.push_back(t);
                }
                j["outcomes"] = outcomes;
                write_artifact(tc_opt.out, j);
            }
        } else if (cmd_rp->parsed()) {
            json j = read_json_file(rp_opt.in);
            std::string command = j.value("command", "?");
            std::string version = j.value("version", "?");
            std::printf("command=%s version=%s", command.c_str(), version.c_str());
            if (j.contains("kind"))
                std::printf(" kind=%s elements=%zu", j["kind"].get<std::string>().c_str(),
                            j["elements"].size());
            std::printf("\n");
            if (!rp_opt.reemit.empty()) write_artifact(rp_opt.reemit, j);
        }
        return 0;
    } catch (const ResourceLimitError& e) {
        json err;
        err["error"] = e.what();
        err["status"] = 3;
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        return 3;
    } catch (const std::invalid_argument& e) {
        json err;
        err["error"] = e.what();
        err["status"] = 2;
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        return 2;
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        err["status"] = 4;
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        return 4;
    }
}

}  // namespace primecomp
