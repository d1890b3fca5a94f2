// snblock: sorted-neighborhood and traditional blocking workbench CLI.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <span>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "snb/errors.hpp"
#include "snb/mapreduce.hpp"
#include "snb/pipeline.hpp"
#include "snb/reductions.hpp"
#include "snb/workbench.hpp"

namespace {

using nlohmann::json;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw snb::contract_error("cannot open " + path + " for writing");
    return out;
}

snb::ScoringHeuristic parse_heuristic(const std::string& text) {
    if (text == "token-jaccard") return snb::ScoringHeuristic::token_jaccard();
    if (text == "cosine-tf") return snb::ScoringHeuristic::cosine_tf();
    if (text.rfind("table:", 0) == 0) {
        auto table = std::make_shared<snb::LookupTable>(
            snb::LookupTable::read_file(text.substr(6)));
        return snb::ScoringHeuristic::lookup(std::move(table));
    }
    throw snb::contract_error("unknown heuristic '" + text +
                              "' (token-jaccard | cosine-tf | table:PATH)");
}

std::unique_ptr<snb::MaxTourSolver> make_solver(const std::string& name, int cutoff) {
    if (name == "exact") return std::make_unique<snb::ExactTourSolver>();
    if (name == "greedy") return std::make_unique<snb::GreedyTourSolver>();
    if (name == "auto") return std::make_unique<snb::ThresholdTourSolver>(cutoff);
    throw snb::contract_error("unknown solver '" + name + "' (exact | greedy | auto)");
}

snb::Distribution parse_dist(const std::string& name) {
    if (name == "uniform") return snb::Distribution::Uniform;
    if (name == "zipf") return snb::Distribution::Zipf;
    throw snb::contract_error("unknown distribution '" + name + "'");
}

struct BlockArgs {
    std::string in;
    bool header = false;
    std::string mode = "sn-local";
    std::string key = "initials";
    std::string heuristic = "token-jaccard";
    std::vector<std::string> passes;  // KEY|HEURISTIC per pass (sn-multi)
    std::string out;
    std::string report;
    std::string truth;
    std::string solver = "auto";
    int exact_cutoff = 12;
    int window = 2;
    int mappers = 1;
    int reducers = 1;
    std::uint64_t shard_seed = 0;
};

void emit_pairs_file(const std::string& path, std::span<const snb::IdPair> pairs,
                     const snb::ScoringHeuristic* f, const snb::Dataset* ds) {
    if (path.empty()) return;
    auto out = open_out(path);
    if (f && ds) {
        std::function<double(const snb::IdPair&)> scorer = [&](const snb::IdPair& p) {
            return snb::score_pair(*f, ds->by_id(p.lo), ds->by_id(p.hi));
        };
        snb::write_pairs(out, pairs, &scorer);
    } else {
        snb::write_pairs(out, pairs);
    }
}

void attach_pc(json& report, std::span<const snb::IdPair> pairs, const std::string& truth_path) {
    if (truth_path.empty()) return;
    std::ifstream in(truth_path);
    if (!in) throw snb::contract_error("cannot open " + truth_path);
    const snb::GroundTruth truth = snb::read_truth(in);
    snb::CandidateSet cs;
    cs.pairs.assign(pairs.begin(), pairs.end());
    const snb::PcResult pc = snb::pairs_completeness(cs, truth);
    report["pairs_completeness"] = pc.pc;
    report["true_positives"] = pc.true_positives;
    if (pc.recall_defined) report["recall_non_paper"] = pc.recall;
}

int run_block(const BlockArgs& args) {
    const snb::Dataset ds = snb::read_csv_file(args.in, args.header);
    const auto solver = make_solver(args.solver, args.exact_cutoff);
    json report;
    report["mode"] = args.mode;
    report["records"] = ds.size();
    const snb::ApproxProfile profile = solver->profile();
    report["solver"] = {{"name", profile.name},
                        {"ratio", profile.ratio},
                        {"exponent", profile.exponent}};
    const auto t0 = std::chrono::steady_clock::now();
    auto wall_ms = [&t0] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    if (args.mode == "sn-local" || args.mode == "sn-global") {
        const snb::BlockingKeySpec key = snb::BlockingKeySpec::parse(args.key);
        snb::ScoringHeuristic f = parse_heuristic(args.heuristic);
        snb::SnRunResult run;
        if (args.mode == "sn-local") {
            f = snb::localize(std::move(f), key);
            run = snb::single_pass_local(ds, key, f, *solver, {args.window});
        } else {
            run = snb::single_pass_global(ds, key, f, *solver);
        }
        report["w"] = args.mode == "sn-local" ? args.window : 2;
        report["candidates"] = run.candidates.pairs.size();
        report["score"] = run.candidates.score;
        report["scores"] = {{"F1", run.trace.f1}, {"F2", run.trace.f2}, {"F3", run.trace.f3}};
        report["chosen_set"] = run.trace.chosen;
        json sizes = json::array();
        for (std::size_t i = 0; i < run.trace.block_count(); ++i)
            sizes.push_back(run.trace.block(i).size());
        report["block_sizes"] = sizes;
        emit_pairs_file(args.out, run.candidates.pairs, &f, &ds);
        attach_pc(report, run.candidates.pairs, args.truth);
    } else if (args.mode == "sn-multi") {
        if (args.passes.empty())
            throw snb::contract_error("sn-multi needs at least one --pass KEY|HEURISTIC");
        snb::PassSpec spec;
        for (const std::string& p : args.passes) {
            const auto sep = p.find('|');
            if (sep == std::string::npos)
                throw snb::contract_error("--pass expects KEY|HEURISTIC, got '" + p + "'");
            const snb::BlockingKeySpec key = snb::BlockingKeySpec::parse(p.substr(0, sep));
            snb::ScoringHeuristic f = parse_heuristic(p.substr(sep + 1));
            spec.passes.emplace_back(key, snb::localize(std::move(f), key));
        }
        const snb::MultiPassResult run = snb::multi_pass(ds, spec, *solver, {args.window});
        report["w"] = args.window;
        report["passes"] = spec.passes.size();
        report["candidates"] = run.pairs.size();
        report["per_pass_sizes"] = run.per_pass_sizes;
        emit_pairs_file(args.out, run.pairs, nullptr, nullptr);
        attach_pc(report, run.pairs, args.truth);
    } else if (args.mode == "traditional" || args.mode == "mapreduce") {
        const snb::BlockingKeySpec key = snb::BlockingKeySpec::parse(args.key);
        const snb::ScoringHeuristic f = parse_heuristic(args.heuristic);
        snb::MapReduceResult run;
        if (args.mode == "traditional") {
            run = snb::run_traditional_serial(ds, key, f, *solver);
        } else {
            const snb::MapReduceConfig config{args.mappers, args.reducers, args.shard_seed};
            run = snb::run_mapreduce_blocking(ds, key, f, config, *solver);
            report["mappers"] = args.mappers;
            report["reducers"] = args.reducers;
            report["shard_seed"] = args.shard_seed;
        }
        report["w"] = 2;
        report["candidates"] = run.scored.size();
        report["reducer_block_sizes"] = run.report.reducer_block_sizes;
        report["critical_path_units"] = run.report.critical_path_units;
        report["wall_map_ms"] = run.report.wall_map_ms;
        report["wall_reduce_ms"] = run.report.wall_reduce_ms;
        if (!args.out.empty()) {
            auto out = open_out(args.out);
            snb::write_scored_pairs(out, run.scored);
        }
        std::vector<snb::IdPair> pairs;
        pairs.reserve(run.scored.size());
        for (const auto& sp : run.scored) pairs.push_back(sp.pair);
        snb::canonicalize_pairs(pairs);
        attach_pc(report, pairs, args.truth);
    } else {
        throw snb::contract_error("unknown mode '" + args.mode + "'");
    }
    report["wall_ms"] = wall_ms();
    if (!args.report.empty()) {
        auto out = open_out(args.report);
        out << report.dump(2) << '\n';
    }
    std::cout << report.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sorted-neighborhood / traditional blocking workbench"};
    app.set_config("--config", "", "line-based key = value configuration file");
    app.fallthrough();
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "emit a synthetic dataset and ground truth");
    std::uint64_t gen_n = 100, gen_seed = 1;
    int gen_u = 10;
    std::string gen_dist = "uniform", gen_out = "records.csv", gen_truth;
    double gen_dup = 0.1;
    gen->add_option("--n", gen_n, "record count");
    gen->add_option("--u", gen_u, "block count");
    gen->add_option("--dist", gen_dist, "uniform | zipf");
    gen->add_option("--dup-rate", gen_dup, "fraction of records that are mutated copies");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "records CSV path");
    gen->add_option("--truth", gen_truth, "ground-truth pairs path");

    // block
    auto* block = app.add_subcommand("block", "run a blocking pipeline");
    BlockArgs ba;
    block->add_option("--in", ba.in, "records CSV")->required();
    block->add_flag("--header", ba.header, "input has a header row");
    block->add_option("--mode", ba.mode, "sn-local | sn-global | sn-multi | traditional | mapreduce");
    block->add_option("--key", ba.key, "blocking key spec");
    block->add_option("--heuristic", ba.heuristic, "token-jaccard | cosine-tf | table:PATH");
    block->add_option("--pass", ba.passes, "sn-multi pass KEY|HEURISTIC (repeatable)");
    block->add_option("--out", ba.out, "candidate pairs output");
    block->add_option("--report", ba.report, "JSON run report output");
    block->add_option("--truth", ba.truth, "ground truth for PC");
    block->add_option("--solver", ba.solver, "exact | greedy | auto");
    block->add_option("--exact-cutoff", ba.exact_cutoff, "auto solver: exact up to this block size");
    block->add_option("--window", ba.window, "window size w (sn-local / sn-multi)");
    block->add_option("--mappers", ba.mappers, "mapreduce: map shards");
    block->add_option("--reducers", ba.reducers, "mapreduce: reducer workers");
    block->add_option("--shard-seed", ba.shard_seed, "mapreduce: shard assignment seed");

    // order-block
    auto* ob = app.add_subcommand("order-block", "maximum-score 2-ordering of one block");
    std::string ob_in, ob_heuristic = "token-jaccard", ob_solver = "auto", ob_out, ob_dump;
    bool ob_header = false;
    int ob_cutoff = 12;
    ob->add_option("--in", ob_in, "records CSV (treated as a single block)")->required();
    ob->add_flag("--header", ob_header, "input has a header row");
    ob->add_option("--heuristic", ob_heuristic, "scoring heuristic");
    ob->add_option("--solver", ob_solver, "exact | greedy | auto");
    ob->add_option("--exact-cutoff", ob_cutoff, "auto solver cutoff");
    ob->add_option("--out", ob_out, "ordered id list output");
    ob->add_option("--dump-graph", ob_dump, "write the dummy graph as 'i j weight' lines");

    // reduce-verify
    auto* rv = app.add_subcommand("reduce-verify", "run a reduction equivalence verifier");
    int rv_theorem_seeds = 50, rv_max_m = 6, rv_w = 3, rv_m = 3;
    std::string rv_theorem = "2";
    std::uint64_t rv_seed0 = 1;
    double rv_mutate = 0.0;
    rv->add_option("--theorem", rv_theorem, "2 | cor1 | 3")->required();
    rv->add_option("--seeds", rv_theorem_seeds, "seed count");
    rv->add_option("--seed0", rv_seed0, "first seed");
    rv->add_option("--max-m", rv_max_m, "largest source instance");
    rv->add_option("--m", rv_m, "theorem 3: source record count");
    rv->add_option("--w", rv_w, "theorem 3: window constant");
    rv->add_option("--mutate-kprime", rv_mutate, "offset k' to demonstrate verifier sensitivity");

    // bench
    auto* be = app.add_subcommand("bench", "wall-clock and skew table over a size grid");
    std::string be_module = "sn", be_dist = "both", be_sizes = "1000,2000,5000", be_out;
    int be_u = 50;
    double be_dup = 0.1;
    std::uint64_t be_seed = 1;
    be->add_option("--module", be_module, "sn | mapreduce");
    be->add_option("--dist", be_dist, "uniform | zipf | both");
    be->add_option("--sizes", be_sizes, "comma-separated n grid");
    be->add_option("--u", be_u, "block count");
    be->add_option("--dup-rate", be_dup, "duplicate rate");
    be->add_option("--seed", be_seed, "seed");
    be->add_option("--out", be_out, "TSV output path (default stdout)");

    // score
    auto* sc = app.add_subcommand("score", "pairs completeness of a candidate file");
    std::string sc_pairs, sc_truth, sc_format = "pairs";
    sc->add_option("--pairs", sc_pairs, "candidate pairs file")->required();
    sc->add_option("--truth", sc_truth, "ground truth pairs file")->required();
    sc->add_option("--format", sc_format,
                   "pairs (id1,id2[,score]) | scored (score,id1,id2)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            const snb::GeneratedData data =
                snb::generate_dataset(gen_n, gen_u, parse_dist(gen_dist), gen_dup, gen_seed);
            auto out = open_out(gen_out);
            snb::write_csv(out, data.dataset);
            if (!gen_truth.empty()) {
                auto tout = open_out(gen_truth);
                snb::write_truth(tout, data.truth);
            }
            json report;
            report["records"] = data.dataset.size();
            report["blocks"] = data.planted_sizes.size();
            report["planted_sizes"] = data.planted_sizes;
            report["truth_pairs"] = data.truth.pairs.size();
            std::cout << report.dump(2) << '\n';
            return 0;
        }
        if (block->parsed()) return run_block(ba);
        if (ob->parsed()) {
            const snb::Dataset ds = snb::read_csv_file(ob_in, ob_header);
            std::vector<snb::RecordId> ids;
            for (const auto& r : ds.records()) ids.push_back(r.id);
            const auto solver = make_solver(ob_solver, ob_cutoff);
            const snb::ScoringHeuristic heuristic = parse_heuristic(ob_heuristic);
            if (!ob_dump.empty()) {
                auto out = open_out(ob_dump);
                snb::write_graph(out, snb::records_to_graph(ids, heuristic, ds, true));
            }
            const snb::OrderingResult result =
                snb::order_block_tsp(ids, heuristic, ds, *solver);
            json report;
            report["score"] = result.score;
            report["optimal"] = result.optimal;
            report["list"] = result.list;
            if (!ob_out.empty()) {
                auto out = open_out(ob_out);
                for (snb::RecordId id : result.list) out << id << '\n';
            }
            std::cout << report.dump(2) << '\n';
            return 0;
        }
        if (rv->parsed()) {
            snb::EquivalenceReport report;
            if (rv_theorem == "2") {
                report = snb::verify_theorem2(rv_seed0, rv_theorem_seeds, rv_max_m, rv_mutate);
            } else if (rv_theorem == "cor1") {
                report = snb::verify_corollary1(rv_seed0, rv_theorem_seeds,
                                                std::min(rv_max_m, 6), rv_mutate);
            } else if (rv_theorem == "3") {
                report = snb::verify_theorem3(rv_seed0, rv_theorem_seeds, rv_m, rv_w, rv_mutate);
            } else {
                throw snb::contract_error("unknown theorem '" + rv_theorem + "'");
            }
            std::cout << snb::format_report(report);
            return report.all_agree() ? 0 : 1;
        }
        if (be->parsed()) {
            std::vector<std::uint64_t> sizes;
            std::stringstream ss(be_sizes);
            std::string tok;
            while (std::getline(ss, tok, ',')) sizes.push_back(std::stoull(tok));
            std::vector<snb::BenchRow> rows;
            const std::vector<std::string> dists =
                be_dist == "both" ? std::vector<std::string>{"uniform", "zipf"}
                                  : std::vector<std::string>{be_dist};
            for (const std::string& d : dists) {
                snb::BenchScenario scenario;
                scenario.module = be_module;
                scenario.sizes = sizes;
                scenario.u = be_u;
                scenario.dist = parse_dist(d);
                scenario.dup_rate = be_dup;
                scenario.seed = be_seed;
                const auto part = snb::bench(scenario);
                rows.insert(rows.end(), part.begin(), part.end());
            }
            if (be_out.empty()) {
                snb::write_bench_table(std::cout, rows);
            } else {
                auto out = open_out(be_out);
                snb::write_bench_table(out, rows);
            }
            return 0;
        }
        if (sc->parsed()) {
            std::ifstream pin(sc_pairs);
            if (!pin) throw snb::contract_error("cannot open " + sc_pairs);
            std::ifstream tin(sc_truth);
            if (!tin) throw snb::contract_error("cannot open " + sc_truth);
            snb::CandidateSet cs;
            if (sc_format == "scored") {
                std::string line;
                std::vector<snb::IdPair> pairs;
                while (std::getline(pin, line)) {
                    if (line.empty()) continue;
                    double s;
                    snb::RecordId a, b;
                    char c1, c2;
                    std::istringstream ls(line);
                    if (!(ls >> s >> c1 >> a >> c2 >> b) || c1 != ',' || c2 != ',')
                        throw snb::contract_error("bad scored pair line: '" + line + "'");
                    pairs.push_back(snb::make_id_pair(a, b));
                }
                snb::canonicalize_pairs(pairs);
                cs.pairs = std::move(pairs);
            } else if (sc_format == "pairs") {
                cs.pairs = snb::read_pairs(pin);
            } else {
                throw snb::contract_error("unknown --format '" + sc_format + "'");
            }
            const snb::GroundTruth truth = snb::read_truth(tin);
            const snb::PcResult pc = snb::pairs_completeness(cs, truth);
            std::cout << "candidates = " << cs.pairs.size() << '\n'
                      << "true_positives = " << pc.true_positives << '\n'
                      << "pairs_completeness = " << pc.pc << '\n';
            if (pc.recall_defined) std::cout << "recall_non_paper = " << pc.recall << '\n';
            return 0;
        }
    } catch (const snb::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 2;
    } catch (const snb::contract_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
