#include <rdom/constructive.hh>
#include <rdom/enumerate.hh>
#include <rdom/family.hh>
#include <rdom/graph6.hh>
#include <rdom/report_json.hh>
#include <rdom/solver.hh>
#include <rdom/verify.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using std::cerr;
using std::cout;
using std::string;
using std::vector;

namespace
{
    constexpr int exit_pass = 0, exit_violation = 1, exit_usage = 2;

    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    auto read_input(const string & path) -> rdom::Graph6Stream
    {
        if (path.empty() || path == "-")
            return rdom::read_graph6_stream(std::cin);
        std::ifstream in(path);
        if (! in)
            throw UsageError{"cannot open " + path};
        return rdom::read_graph6_stream(in);
    }

    auto report_failures(const rdom::Graph6Stream & s) -> void
    {
        for (auto & f : s.failures)
            cerr << "line " << f.line_number << ": " << f.message << "\n";
    }

    auto parse_ids(const string & text) -> rdom::VertexSet
    {
        rdom::VertexSet result;
        std::stringstream in(text);
        string item;
        while (std::getline(in, item, ',')) {
            if (item.empty())
                continue;
            try {
                std::size_t used = 0;
                int v = std::stoi(item, &used);
                if (used != item.size() || v < 0 || v >= rdom::max_order)
                    throw UsageError{"bad vertex id '" + item + "'"};
                result.insert(v);
            }
            catch (const std::logic_error &) {
                throw UsageError{"bad vertex id '" + item + "'"};
            }
        }
        return result;
    }

    auto emit_reports(const vector<rdom::VerificationReport> & reports) -> int
    {
        json out = json::array();
        bool all_pass = true;
        for (auto & r : reports) {
            out.push_back(rdom::to_json(r));
            all_pass = all_pass && r.passed();
            cerr << (r.passed() ? "PASS " : "FAIL ") << r.claim_id << ": " << r.checked << " checked, " << r.violations.size()
                 << " violations, " << r.elapsed_seconds << " s  [" << r.scope << "]\n";
            for (auto & v : r.violations)
                cerr << "    " << v.graph6 << "  " << v.details << "\n";
        }
        cout << out.dump(2) << "\n";
        return all_pass ? exit_pass : exit_violation;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Restrained domination toolkit for small graphs"};
    app.require_subcommand(1);

    int jobs = 1;
    bool as_json = false;
    auto add_common = [&](CLI::App * c) {
        c->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
        c->add_flag("--json", as_json, "emit JSON records on standard output");
    };

    auto family_cmd = app.add_subcommand("family", "Print R1..R10 as graph6 lines, or their metadata with --json");
    add_common(family_cmd);

    string solve_input, nerd_variant, nerd_x;
    bool domination_only = false;
    auto solve_cmd = app.add_subcommand("solve", "Exact restrained domination number of each graph6 line");
    solve_cmd->add_option("input", solve_input, "graph6 file (default: standard input)");
    solve_cmd->add_option("--nerd", nerd_variant, "NeRD variant")->check(CLI::IsMember({"ndom", "dom"}));
    solve_cmd->add_option("--x", nerd_x, "comma-separated exempt vertex ids");
    solve_cmd->add_flag("--domination", domination_only, "solve plain domination instead");
    add_common(solve_cmd);

    string formula_kind;
    int formula_n = 0;
    auto formulas_cmd = app.add_subcommand("formulas", "Closed-form gamma_r of paths and cycles");
    formulas_cmd->add_option("kind", formula_kind)->required()->check(CLI::IsMember({"path", "cycle"}));
    formulas_cmd->add_option("--n", formula_n)->required();
    add_common(formulas_cmd);

    string lemma_input;
    auto lemma_cmd = app.add_subcommand("lemma1", "RD-set construction for degree-bipartite graphs");
    lemma_cmd->add_option("input", lemma_input, "graph6 file (default: standard input)");
    add_common(lemma_cmd);

    string class_name;
    int enum_n = 0;
    bool connected = false;
    auto enumerate_cmd = app.add_subcommand("enumerate", "Isomorph-free graph6 stream");
    enumerate_cmd->add_option("--class", class_name)->required()->check(CLI::IsMember({"cubic", "special-subcubic", "degree-bipartite", "any"}));
    enumerate_cmd->add_option("--n", enum_n)->required();
    enumerate_cmd->add_flag("--connected", connected);
    add_common(enumerate_cmd);

    auto verify_cmd = app.add_subcommand("verify", "Machine-check claims; JSON on stdout, summary on stderr");
    verify_cmd->require_subcommand(1);
    int max_n = 0;
    string cubic_input;
    auto v_obs = verify_cmd->add_subcommand("observations", "Family observations on R1..R10 and their subdivisions");
    add_common(v_obs);
    auto v_key = verify_cmd->add_subcommand("key-theorem", "10 gamma_r <= w over connected special subcubic graphs");
    v_key->add_option("--max-n", max_n)->required();
    add_common(v_key);
    auto v_cubic = verify_cmd->add_subcommand("cubic-bound", "gamma_r <= 2n/5 over connected cubic graphs");
    auto cubic_source = v_cubic->add_option_group("source");
    cubic_source->add_option("--max-n", max_n);
    cubic_source->add_option("--input", cubic_input);
    cubic_source->require_option(1);
    add_common(v_cubic);
    auto v_known = verify_cmd->add_subcommand("known-bounds", "Star and minimum-degree-2 bounds over connected graphs");
    v_known->add_option("--max-n", max_n)->required();
    add_common(v_known);
    auto v_lemma = verify_cmd->add_subcommand("lemma1", "RD-set construction over degree-bipartite graphs");
    v_lemma->add_option("--max-n", max_n)->required();
    add_common(v_lemma);

    string extremal_class;
    int extremal_n = 0;
    auto extremal_cmd = app.add_subcommand("extremal", "Cubic graphs with gamma_r = floor(2n/5)");
    extremal_cmd->add_option("--class", extremal_class)->required()->check(CLI::IsMember({"cubic"}));
    extremal_cmd->add_option("--n", extremal_n)->required();
    add_common(extremal_cmd);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (family_cmd->parsed()) {
            for (auto & m : rdom::family()) {
                if (as_json) {
                    auto record = rdom::to_json(m);
                    record["graph6"] = rdom::write_graph6(m.graph);
                    cout << record.dump() << "\n";
                }
                else
                    cout << rdom::write_graph6(m.graph) << "\n";
            }
            return exit_pass;
        }

        if (solve_cmd->parsed()) {
            auto input = read_input(solve_input);
            report_failures(input);
            if (! nerd_x.empty() && nerd_variant.empty())
                throw UsageError{"--x needs --nerd"};
            auto x = parse_ids(nerd_x);
            vector<json> records(input.graphs.size());
            rdom::parallel_map(input.graphs.size(), jobs, [&](std::size_t i) -> std::optional<string> {
                auto & g = input.graphs[i].graph;
                auto start = std::chrono::steady_clock::now();
                rdom::SolveOutcome outcome;
                if (domination_only)
                    outcome = rdom::gamma_exact(g);
                else if (nerd_variant.empty())
                    outcome = rdom::gamma_r_exact(g);
                else {
                    if (! x.subset_of(g.vertices()))
                        return "exempt set names vertices outside the graph on line " + std::to_string(input.graphs[i].line_number);
                    auto variant = nerd_variant == "ndom" ? rdom::NerdVariant::Type1 : rdom::NerdVariant::Type2;
                    outcome = rdom::gamma_r_nerd_exact(g, rdom::NerdQuery{x, variant});
                }
                auto micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
                records[i] = rdom::solve_record(g, outcome, static_cast<long>(micros));
                return std::nullopt;
            });
            bool bad_query = false;
            for (auto & r : records) {
                if (r.is_null()) {
                    bad_query = true;
                    continue;
                }
                cout << r.dump() << "\n";
            }
            if (bad_query)
                throw UsageError{"exempt set names vertices outside some input graph"};
            return input.failures.empty() ? exit_pass : exit_usage;
        }

        if (formulas_cmd->parsed()) {
            int value = formula_kind == "path" ? rdom::gamma_r_path(formula_n) : rdom::gamma_r_cycle(formula_n);
            if (as_json)
                cout << json{{"kind", formula_kind}, {"n", formula_n}, {"gamma_r", value}}.dump() << "\n";
            else
                cout << value << "\n";
            return exit_pass;
        }

        if (lemma_cmd->parsed()) {
            auto input = read_input(lemma_input);
            report_failures(input);
            bool all_ok = true;
            for (auto & line : input.graphs) {
                auto result = rdom::lemma1_construct(line.graph);
                auto failures = rdom::check_lemma1_trace(line.graph, result.trace);
                all_ok = all_ok && failures.empty();
                cout << json{
                    {"graph6", rdom::write_graph6(line.graph)},
                    {"D", result.d.to_vector()},
                    {"size", result.d.size()},
                    {"large", result.trace.large.size()},
                    {"valid", rdom::is_restrained_dominating(line.graph, result.d)},
                    {"trace_failures", failures},
                    {"trace", rdom::to_json(result.trace)},
                }.dump() << "\n";
            }
            if (! input.failures.empty())
                return exit_usage;
            return all_ok ? exit_pass : exit_violation;
        }

        if (enumerate_cmd->parsed()) {
            auto c = *rdom::parse_graph_class(class_name);
            rdom::enumerate(rdom::EnumSpec{enum_n, c, connected}, [&](const rdom::Graph & g) {
                if (as_json)
                    cout << json{{"graph6", rdom::write_graph6(g)}, {"n", g.order()}, {"m", g.size()}}.dump() << "\n";
                else
                    cout << rdom::write_graph6(g) << "\n";
            });
            return exit_pass;
        }

        if (verify_cmd->parsed()) {
            if (v_obs->parsed()) {
                auto reports = rdom::verify_observation_1();
                for (auto & r : rdom::verify_observations_2_to_6())
                    reports.push_back(std::move(r));
                return emit_reports(reports);
            }
            if (v_key->parsed()) {
                if (max_n > rdom::enumeration_cap(rdom::GraphClass::SpecialSubcubic))
                    throw UsageError{"--max-n above the special subcubic enumeration cap"};
                return emit_reports({rdom::verify_key_theorem(max_n, jobs)});
            }
            if (v_cubic->parsed()) {
                if (! cubic_input.empty()) {
                    std::ifstream in(cubic_input);
                    if (! in)
                        throw UsageError{"cannot open " + cubic_input};
                    auto stream = rdom::read_graph6_stream(in);
                    if (! stream.failures.empty()) {
                        report_failures(stream);
                        return exit_usage;
                    }
                    return emit_reports({rdom::verify_cubic_bound(stream.graphs, jobs)});
                }
                if (max_n > rdom::enumeration_cap(rdom::GraphClass::Cubic))
                    throw UsageError{"--max-n above the cubic enumeration cap"};
                return emit_reports({rdom::verify_cubic_bound(max_n, jobs)});
            }
            if (v_known->parsed()) {
                if (max_n > rdom::enumeration_cap(rdom::GraphClass::Any))
                    throw UsageError{"--max-n above 9"};
                return emit_reports({rdom::verify_known_bounds(max_n, jobs)});
            }
            if (v_lemma->parsed()) {
                if (max_n > rdom::enumeration_cap(rdom::GraphClass::DegreeBipartite))
                    throw UsageError{"--max-n above the degree-bipartite enumeration cap"};
                return emit_reports({rdom::verify_lemma1(max_n)});
            }
        }

        if (extremal_cmd->parsed()) {
            auto found = rdom::extremal_cubic(extremal_n, jobs);
            for (auto & e : found) {
                if (as_json)
                    cout << json{{"graph6", rdom::write_graph6(e.graph)}, {"n", e.graph.order()}, {"gamma_r", e.gamma_r}}.dump() << "\n";
                else
                    cout << rdom::write_graph6(e.graph) << "\n";
            }
            cerr << found.size() << " connected cubic graphs of order " << extremal_n << " with gamma_r = " << 2 * extremal_n / 5 << "\n";
            return exit_pass;
        }
    }
    catch (const UsageError & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const rdom::EnumerationError & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const rdom::VerificationError & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const rdom::GraphError & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
