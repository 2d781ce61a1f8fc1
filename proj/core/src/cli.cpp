#include "kmm/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kmm/diagonal.hpp"
#include "kmm/generate.hpp"
#include "kmm/json_io.hpp"
#include "kmm/la/axioms.hpp"
#include "kmm/la/catalog.hpp"
#include "kmm/la/parser.hpp"
#include "kmm/oracle.hpp"
#include "kmm/solver.hpp"

namespace kmm::cli {

namespace {

struct Io {
    std::istream* in;
    std::ostream* out;
    std::ostream* err;
    std::string input_path;
    std::string out_path;
    bool pretty = false;

    std::string read_input() const {
        if (!input_path.empty()) {
            std::ifstream f(input_path);
            if (!f) throw invalid_input("cannot open input file '" + input_path + "'");
            std::ostringstream ss;
            ss << f.rdbuf();
            return ss.str();
        }
        std::ostringstream ss;
        ss << in->rdbuf();
        return ss.str();
    }

    void emit(const json& j) const {
        std::string text = pretty ? j.dump(2) : j.dump();
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f) throw invalid_input("cannot open output file '" + out_path + "'");
            f << text << "\n";
        } else {
            *out << text << "\n";
        }
    }
};

json paths_to_json(const PathCollection& pc) {
    json out = json::array();
    for (const auto& p : pc.paths()) {
        json seq = json::array();
        for (index_t v : p) seq.push_back(v + 1);
        out.push_back(std::move(seq));
    }
    return out;
}

json cut_to_json(const EdgeCut& cut) {
    json out = json::array();
    for (const Edge& e : cut.edges()) out.push_back(json::array({e.first + 1, e.second + 1}));
    return out;
}

json stats_to_json(const SolveStats& st) {
    return json{{"bii_conflicts", st.bii_conflicts},
                {"bii_repairs", st.bii_repairs},
                {"oracle_fallbacks", st.oracle_fallbacks}};
}

int cmd_gen(const Io& io, const std::string& kind, index_t n, double density,
            std::uint64_t seed, bool bipartite_terminals) {
    Rng rng(seed);
    if (kind == "matrix") {
        io.emit(to_json(random_matrix(n, n, density, rng)));
    } else if (kind == "graph") {
        if (bipartite_terminals) {
            if (n < 4 || n % 2 != 0)
                throw invalid_input("gen graph --bipartite-terminals needs an even n >= 4");
            BoolMatrix a = random_matrix(n / 2 - 1, n / 2 - 1, density, rng);
            io.emit(to_json(build_a_double_prime(a)));
        } else {
            io.emit(to_json(random_graph(n, density, rng)));
        }
    } else if (kind == "set-system") {
        io.emit(to_json(random_set_system(n, density, rng)));
    } else if (kind == "poset") {
        io.emit(poset_to_json(random_poset(n, density, rng)));
    } else {
        throw invalid_input("unknown instance kind '" + kind + "'");
    }
    return exit_ok;
}

int cmd_solve(const Io& io, index_t cap, bool with_stats) {
    BoolMatrix a = bool_matrix_from_json(parse_json(io.read_input()));
    SolveStats stats;
    SolverOptions opts;
    opts.recursion_cap = cap;
    opts.stats = &stats;
    KmmReport rep = kmm_check(a, opts);
    json j = to_json(rep);
    if (with_stats) j["stats"] = stats_to_json(stats);
    io.emit(j);
    return exit_ok;
}

int cmd_diagonalize(const Io& io) {
    BoolMatrix a = bool_matrix_from_json(parse_json(io.read_input()));
    DiagonalizationResult r = diagonalize(a);
    json p = json::array(), q = json::array();
    for (index_t i = 0; i < r.p.size(); ++i) p.push_back(r.p.apply(i) + 1);
    for (index_t i = 0; i < r.q.size(); ++i) q.push_back(r.q.apply(i) + 1);
    io.emit(json{{"format", 1},
                 {"p", std::move(p)},
                 {"q", std::move(q)},
                 {"transformed", to_json(r.transformed)},
                 {"diagonal_property", has_diagonal_property(r.transformed)}});
    return exit_ok;
}

int cmd_oracle(const Io& io, const std::string& which, index_t budget_n) {
    OracleBudget budget;
    if (budget_n) budget.max_dimension = budget_n;
    if (budget_n) budget.max_elements = budget_n;
    json input = parse_json(io.read_input());
    if (which == "min-cover") {
        Cover c = oracle_min_cover(bool_matrix_from_json(input), budget);
        io.emit(json{{"format", 1}, {"size", c.size()}, {"cover", to_json(c)}});
    } else if (which == "max-selection") {
        Selection s = oracle_max_selection(bool_matrix_from_json(input), budget);
        io.emit(json{{"format", 1}, {"size", s.size()}, {"selection", to_json(s)}});
    } else if (which == "menger") {
        MengerOracleResult r = oracle_menger(graph_from_json(input), budget);
        io.emit(json{{"format", 1},
                     {"lambda", r.lambda},
                     {"kappa", r.kappa},
                     {"paths", paths_to_json(r.paths)},
                     {"cut", cut_to_json(r.cut)}});
    } else if (which == "hall") {
        HallOracleResult r = oracle_hall(set_system_from_json(input), budget);
        json sdr;
        if (r.sdr) {
            sdr = json::array();
            for (index_t a : r.sdr->assignment()) sdr.push_back(a + 1);
        }
        io.emit(json{{"format", 1}, {"union_property", r.union_prop}, {"sdr", std::move(sdr)}});
    } else if (which == "dilworth") {
        DilworthOracleResult r = oracle_dilworth(poset_from_json(input), budget);
        json anti = json::array();
        for (index_t e : r.antichain.elements()) anti.push_back(e + 1);
        json chains = json::array();
        for (const auto& ch : r.chains.chains()) {
            json c = json::array();
            for (index_t e : ch) c.push_back(e + 1);
            chains.push_back(std::move(c));
        }
        io.emit(json{{"format", 1},
                     {"lambda", r.lambda},
                     {"kappa", r.kappa},
                     {"antichain", std::move(anti)},
                     {"chains", std::move(chains)}});
    } else {
        throw invalid_input("unknown oracle '" + which + "'");
    }
    return exit_ok;
}

json verify_one(const BoolMatrix& a, const SolverOptions& opts, const OracleBudget& budget,
                bool* agree) {
    KmmReport rep = kmm_check(a, opts);
    Cover oc = oracle_min_cover(a, budget);
    Selection os = oracle_max_selection(a, budget);
    bool ok = rep.equal && rep.l == oc.size() && rep.o == os.size();
    *agree = ok;
    json j{{"l", rep.l}, {"o", rep.o}, {"oracle_l", oc.size()}, {"oracle_o", os.size()},
           {"agree", ok}};
    if (!ok) {
        j["matrix"] = to_json(a);
        j["cover"] = to_json(rep.cover);
        j["selection"] = to_json(rep.selection);
        j["oracle_cover"] = to_json(oc);
        j["oracle_selection"] = to_json(os);
    }
    return j;
}

int cmd_verify(const Io& io, index_t exhaustive_n, bool has_exhaustive, index_t random_count,
               index_t random_n, std::uint64_t seed, index_t budget_n, index_t cap,
               bool with_stats) {
    SolveStats stats;
    SolverOptions opts;
    opts.recursion_cap = cap;
    opts.stats = &stats;
    OracleBudget budget;
    if (budget_n) budget.max_dimension = budget_n;

    json result;
    bool all_agree = true;
    if (has_exhaustive) {
        if (exhaustive_n > 4)
            throw invalid_input("--exhaustive supports n <= 4 (2^(n^2) matrices)");
        const index_t n = exhaustive_n;
        const std::uint64_t total = std::uint64_t{1} << (n * n);
        std::uint64_t checked = 0, disagreements = 0;
        json first_bad;
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            BoolMatrix a(n, n);
            for (index_t k = 0; k < n * n; ++k)
                if ((bits >> k) & 1) a.set(k / n, k % n, true);
            bool agree = false;
            json one = verify_one(a, opts, budget, &agree);
            ++checked;
            if (!agree) {
                ++disagreements;
                all_agree = false;
                if (first_bad.is_null()) first_bad = std::move(one);
            }
        }
        result = json{{"format", 1},
                      {"mode", "exhaustive"},
                      {"n", n},
                      {"checked", checked},
                      {"disagreements", disagreements}};
        if (!first_bad.is_null()) result["first_disagreement"] = std::move(first_bad);
    } else if (random_count > 0) {
        Rng rng(seed);
        std::uint64_t disagreements = 0;
        json first_bad;
        for (index_t t = 0; t < random_count; ++t) {
            double density = 0.05 + 0.9 * (rng.next() % 1000) / 1000.0;
            BoolMatrix a = random_matrix(random_n, random_n, density, rng);
            bool agree = false;
            json one = verify_one(a, opts, budget, &agree);
            if (!agree) {
                ++disagreements;
                all_agree = false;
                if (first_bad.is_null()) first_bad = std::move(one);
            }
        }
        result = json{{"format", 1},
                      {"mode", "random"},
                      {"n", random_n},
                      {"count", random_count},
                      {"seed", seed},
                      {"disagreements", disagreements}};
        if (!first_bad.is_null()) result["first_disagreement"] = std::move(first_bad);
    } else {
        BoolMatrix a = bool_matrix_from_json(parse_json(io.read_input()));
        bool agree = false;
        result = verify_one(a, opts, budget, &agree);
        result["format"] = 1;
        all_agree = agree;
    }
    if (with_stats) result["stats"] = stats_to_json(stats);
    io.emit(result);
    return all_agree ? exit_ok : exit_mismatch;
}

int cmd_reduce_menger(const Io& io, index_t budget_n, index_t cap) {
    BoolMatrix a = bool_matrix_from_json(parse_json(io.read_input()));
    OracleBudget budget;
    if (budget_n) budget.max_dimension = budget_n;
    SolverOptions opts;
    opts.recursion_cap = cap;

    TerminalGraph g = build_a_double_prime(a);
    MengerOracleResult mr = oracle_menger(g, budget);
    Cover cover = min_cover(a, opts);
    Selection sel = max_selection(a, opts);

    json notes = json::array();
    json cover_cut;
    try {
        cover_cut = cut_to_json(cover_to_cut(a, cover));
    } catch (const construction_failure& e) {
        notes.push_back(std::string("cover-to-cut translation is not a cut: ") + e.what());
    }
    json sel_paths = paths_to_json(selection_to_paths(a, sel));

    io.emit(json{{"format", 1},
                 {"graph", to_json(g)},
                 {"lambda", mr.lambda},
                 {"kappa", mr.kappa},
                 {"paths", paths_to_json(mr.paths)},
                 {"cut", cut_to_json(mr.cut)},
                 {"restricted", is_restricted_pair(g, budget)},
                 {"l", cover.size()},
                 {"o", sel.size()},
                 {"cover", to_json(cover)},
                 {"selection", to_json(sel)},
                 {"cover_cut", std::move(cover_cut)},
                 {"selection_paths", std::move(sel_paths)},
                 {"notes", std::move(notes)}});
    return exit_ok;
}

int cmd_reduce_hall(const Io& io, index_t budget_n, index_t cap) {
    SetSystem s = set_system_from_json(parse_json(io.read_input()));
    OracleBudget budget;
    if (budget_n) budget.max_elements = budget_n;
    SolverOptions opts;
    opts.recursion_cap = cap;

    bool up = union_property(s);
    KmmReport rep = kmm_check(s.incidence(), opts);
    json sdr;
    json notes = json::array();
    if (up && rep.o == s.n()) {
        SdrAssignment assignment = sdr_from_selection(s, opts);
        sdr = json::array();
        for (index_t a : assignment.assignment()) sdr.push_back(a + 1);
    } else if (!up) {
        notes.push_back("union property fails; no SDR exists");
    }

    HallBlocks blocks = hall_block_decomposition(s.incidence(), rep.cover, opts);
    io.emit(json{{"format", 1},
                 {"union_property", up},
                 {"term_rank", rep.o},
                 {"l", rep.l},
                 {"sdr", std::move(sdr)},
                 {"blocks",
                  json{{"e", blocks.e},
                       {"f", blocks.f},
                       {"a2_rows_union_property", union_property_rows(blocks.a2)},
                       {"a3_cols_union_property", union_property_rows(blocks.a3.transpose())}}},
                 {"notes", std::move(notes)}});
    return exit_ok;
}

int cmd_reduce_dilworth(const Io& io, index_t budget_n, index_t cap) {
    Poset p = poset_from_json(parse_json(io.read_input()));
    OracleBudget budget;
    if (budget_n) budget.max_elements = budget_n;
    SolverOptions opts;
    opts.recursion_cap = cap;

    DilworthOracleResult dr = oracle_dilworth(p, budget);
    BoolMatrix inc = chains_element_incidence(p, dr.chains).padded_to(p.n(), p.n());
    KmmReport rep = kmm_check(inc, opts);

    json anti = json::array();
    for (index_t e : dr.antichain.elements()) anti.push_back(e + 1);
    json chains = json::array();
    for (const auto& ch : dr.chains.chains()) {
        json c = json::array();
        for (index_t e : ch) c.push_back(e + 1);
        chains.push_back(std::move(c));
    }
    io.emit(json{{"format", 1},
                 {"lambda", dr.lambda},
                 {"kappa", dr.kappa},
                 {"antichain", std::move(anti)},
                 {"chains", std::move(chains)},
                 {"incidence_term_rank", rep.o},
                 {"incidence_cover", rep.l}});
    return exit_ok;
}

int cmd_eval(const Io& io, const std::string& text, const std::string& env_path,
             index_t matrix_dim) {
    la::Environment env;
    if (!env_path.empty()) {
        std::ifstream f(env_path);
        if (!f) throw invalid_input("cannot open environment file '" + env_path + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        env = environment_from_json(parse_json(ss.str()));
    }
    la::EvalBudget budget;
    if (matrix_dim) budget.max_matrix_quantifier_dim = matrix_dim;

    auto parsed = la::parse_any(text);
    if (std::holds_alternative<la::FormulaPtr>(parsed)) {
        auto f = std::get<la::FormulaPtr>(parsed);
        bool v = la::eval_formula(f, env, budget);
        io.emit(json{{"format", 1}, {"kind", "formula"}, {"input", la::print_formula(f)},
                     {"value", v}});
        return exit_ok;
    }
    auto t = std::get<la::TermPtr>(parsed);
    la::Value v = la::eval_term(t, env, budget);
    json value;
    const char* sort = nullptr;
    switch (la::value_sort(v)) {
        case la::Sort::Index:
            sort = "index";
            value = std::get<la::IndexValue>(v);
            break;
        case la::Sort::Ring:
            sort = "ring";
            value = std::get<la::RingValue>(v);
            break;
        case la::Sort::Matrix:
            sort = "matrix";
            value = to_json(std::get<la::IntMatrix>(v));
            break;
    }
    io.emit(json{{"format", 1}, {"kind", "term"}, {"input", la::print_term(t)}, {"sort", sort},
                 {"value", std::move(value)}});
    return exit_ok;
}

int cmd_axioms(const Io& io, unsigned trials, std::uint64_t seed) {
    la::AxiomReport rep = la::check_axioms(trials, seed);
    json axioms = json::array();
    for (const auto& r : rep.results) {
        json one{{"name", r.name}, {"trials", r.trials}, {"failures", r.failures}};
        if (!r.first_failure.empty()) one["first_failure"] = r.first_failure;
        axioms.push_back(std::move(one));
    }
    io.emit(json{{"format", 1},
                 {"trials", rep.trials_per_axiom},
                 {"seed", rep.seed},
                 {"all_ok", rep.all_ok()},
                 {"results", std::move(axioms)}});
    return rep.all_ok() ? exit_ok : exit_mismatch;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"executable min-max matrix theory: covers, selections, reductions, "
                 "and the three-sorted term language"};
    app.require_subcommand(1);
    app.fallthrough();  // --out / --json-pretty may follow the subcommand

    Io io{&in, &out, &err, "", "", false};
    app.add_option("--out", io.out_path, "write the JSON result to a file");
    app.add_flag("--json-pretty", io.pretty, "indent JSON output");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    std::string gen_kind;
    index_t gen_n = 4;
    double gen_density = 0.5;
    std::uint64_t gen_seed = 1;
    bool gen_bip = false;
    gen->add_option("kind", gen_kind, "matrix | graph | set-system | poset")->required();
    gen->add_option("--n", gen_n, "instance size");
    gen->add_option("--density", gen_density, "expected fill ratio");
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_flag("--bipartite-terminals", gen_bip,
                  "graphs only: emit the bordered bipartite double graph of a random matrix");

    // solve
    auto* solve = app.add_subcommand("solve", "min cover + max selection of a 0-1 matrix");
    index_t solve_cap = 16;
    bool solve_stats = false;
    solve->add_option("--input", io.input_path, "matrix JSON (default: stdin)");
    solve->add_option("--recursion-cap", solve_cap, "largest admissible side length");
    solve->add_flag("--stats", solve_stats, "include selection-repair statistics");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive ground-truth solvers");
    std::string oracle_which;
    index_t oracle_budget = 0;
    oracle->add_option("which", oracle_which,
                       "min-cover | max-selection | menger | hall | dilworth")
        ->required();
    oracle->add_option("--input", io.input_path, "instance JSON (default: stdin)");
    oracle->add_option("--budget-n", oracle_budget, "override the oracle dimension budget");

    // verify
    auto* verify = app.add_subcommand("verify", "solver vs oracle agreement");
    index_t verify_exhaustive = 0, verify_count = 0, verify_n = 6, verify_budget = 0,
            verify_cap = 16;
    std::uint64_t verify_seed = 1;
    bool verify_stats = false;
    auto* vex = verify->add_option("--exhaustive", verify_exhaustive,
                                   "sweep every n x n 0-1 matrix (n <= 4)");
    verify->add_option("--random", verify_count, "number of random instances");
    verify->add_option("--n", verify_n, "random instance size");
    verify->add_option("--seed", verify_seed, "rng seed");
    verify->add_option("--budget-n", verify_budget, "oracle budget override");
    verify->add_option("--recursion-cap", verify_cap, "solver cap");
    verify->add_option("--input", io.input_path, "single matrix JSON (default: stdin)");
    verify->add_flag("--stats", verify_stats, "include selection-repair statistics");

    // diagonalize
    auto* diag = app.add_subcommand("diagonalize", "permute a matrix into diagonal form");
    diag->add_option("--input", io.input_path, "matrix JSON (default: stdin)");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "materialize a related-theorem instance");
    std::string reduce_which;
    index_t reduce_budget = 0, reduce_cap = 16;
    reduce->add_option("which", reduce_which, "menger | hall | dilworth")->required();
    reduce->add_option("--input", io.input_path, "instance JSON (default: stdin)");
    reduce->add_option("--budget-n", reduce_budget, "oracle budget override");
    reduce->add_option("--recursion-cap", reduce_cap, "solver cap");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a term or formula of the matrix language");
    std::string eval_text, eval_env;
    index_t eval_dim = 0;
    eval->add_option("text", eval_text, "term or formula")->required();
    eval->add_option("--env", eval_env, "environment JSON file");
    eval->add_option("--matrix-dim", eval_dim, "matrix quantifier budget override");

    // axioms
    auto* axioms = app.add_subcommand("axioms", "randomized axiom validity suite");
    unsigned axioms_trials = 1000;
    std::uint64_t axioms_seed = 1;
    axioms->add_option("--trials", axioms_trials, "instances per axiom");
    axioms->add_option("--seed", axioms_seed, "rng seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_schema;
    }

    try {
        if (gen->parsed()) return cmd_gen(io, gen_kind, gen_n, gen_density, gen_seed, gen_bip);
        if (solve->parsed()) return cmd_solve(io, solve_cap, solve_stats);
        if (oracle->parsed()) return cmd_oracle(io, oracle_which, oracle_budget);
        if (verify->parsed())
            return cmd_verify(io, verify_exhaustive, !vex->empty(), verify_count, verify_n,
                              verify_seed, verify_budget, verify_cap, verify_stats);
        if (diag->parsed()) return cmd_diagonalize(io);
        if (reduce->parsed()) {
            if (reduce_which == "menger") return cmd_reduce_menger(io, reduce_budget, reduce_cap);
            if (reduce_which == "hall") return cmd_reduce_hall(io, reduce_budget, reduce_cap);
            if (reduce_which == "dilworth")
                return cmd_reduce_dilworth(io, reduce_budget, reduce_cap);
            throw invalid_input("unknown reduction '" + reduce_which + "'");
        }
        if (eval->parsed()) return cmd_eval(io, eval_text, eval_env, eval_dim);
        if (axioms->parsed()) return cmd_axioms(io, axioms_trials, axioms_seed);
        err << "error: no subcommand\n";
        return exit_schema;
    } catch (const budget_exceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const invalid_input& e) {
        err << "invalid input: " << e.what() << "\n";
        return exit_schema;
    } catch (const construction_failure& e) {
        err << "construction failed: " << e.what() << "\n";
        return exit_mismatch;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

} // namespace kmm::cli
