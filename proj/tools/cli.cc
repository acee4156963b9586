#include "cli.hh"

#include <ttm/abelian.hh>
#include <ttm/cayley.hh>
#include <ttm/delta.hh>
#include <ttm/graph_io.hh>
#include <ttm/hom.hh>
#include <ttm/named_graphs.hh>
#include <ttm/random_lab.hh>
#include <ttm/search.hh>
#include <ttm/suite.hh>
#include <ttm/tt.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

namespace ttm
{
    namespace
    {
        struct Globals
        {
            bool json_output = false;
            std::uint64_t budget = 0;
            std::uint64_t seed = 1;
            int threads = 1;
        };

        /// What a verb hands back; printed as JSON or as a few plain lines.
        struct Outcome
        {
            json result;
            optional<string> witness;
            string proof_status = "n/a";   // exhaustive, budget or n/a
            string out_path;               // witness is also written here when set
        };

        struct UsageError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        auto load_graph(const string & arg) -> Digraph
        {
            if (std::filesystem::is_regular_file(arg))
                return parse_graph(read_text_file(arg), std::filesystem::path(arg).stem().string());
            if (auto g = named_graph(arg))
                return *g;
            throw UsageError("no graph file or built-in graph named '" + arg + "'");
        }

        auto load_map(const string & path, const Digraph & g) -> EdgeMap
        {
            return parse_edge_map(read_text_file(path), g.num_edges());
        }

        auto cyclic(const string & group) -> Cyclic
        {
            return reduce(parse_group(group));
        }

        auto limits(const Globals & globals) -> SearchLimits
        {
            return {globals.budget, globals.threads};
        }

        auto status_outcome(SearchStatus s) -> string
        {
            return s == SearchStatus::unknown ? "budget" : "exhaustive";
        }

        auto parse_list(const string & text) -> vector<std::int64_t>
        {
            vector<std::int64_t> out;
            std::stringstream in(text);
            string item;
            while (std::getline(in, item, ','))
                out.push_back(std::stoll(item));
            if (out.empty())
                throw UsageError("empty list '" + text + "'");
            return out;
        }

        auto print(const string & verb, const json & params, const Outcome & o, double seconds, bool as_json, std::ostream & out) -> void
        {
            if (as_json) {
                json doc{{"verb", verb}, {"params", params}, {"result", o.result}, {"proof_status", o.proof_status},
                    {"seconds", seconds}};
                doc["witness"] = o.witness ? json(*o.witness) : json(nullptr);
                out << doc.dump(2) << '\n';
                return;
            }
            if (o.result.is_object())
                for (auto & [k, v] : o.result.items())
                    out << k << ": " << (v.is_string() ? v.get<string>() : v.dump()) << '\n';
            else
                out << "result: " << (o.result.is_string() ? o.result.get<string>() : o.result.dump()) << '\n';
            out << "proof: " << o.proof_status << '\n';
            if (o.witness && o.out_path.empty())
                out << o.witness.value();
        }
    }

    auto run_cli(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Tension-continuous maps between graphs"};
        // -h would clash with the target-graph option --h
        app.set_help_flag("--help", "print this help");
        app.require_subcommand(1);
        app.fallthrough();
        Globals globals;
        app.add_flag("--json", globals.json_output, "machine-readable output");
        app.add_option("--budget-nodes", globals.budget, "search node budget, 0 for none");
        app.add_option("--seed", globals.seed, "random seed");
        app.add_option("--threads", globals.threads, "worker threads")->check(CLI::PositiveNumber);

        string g_arg, h_arg, map_arg, group_arg = "Z_2", out_arg, base_arg, method = "lift";
        json params;
        std::function<Outcome()> action;
        string verb;

        auto graph_opt = [&](CLI::App * sub, const char * name, string & target, const char * help) {
            sub->add_option(name, target, help)->required();
        };
        auto add = [&](const char * name, const char * help, std::function<Outcome()> body) -> CLI::App * {
            auto * sub = app.add_subcommand(name, help);
            sub->callback([&verb, &action, name, body] {
                verb = name;
                action = body;
            });
            return sub;
        };

        // ---- TT predicates
        auto * check_tt = add("check-tt", "is the edge map TT over the group", [&] {
            auto g = load_graph(g_arg), h = load_graph(h_arg);
            auto f = load_map(map_arg, g);
            validate(f, g, h);
            params = {{"g", g_arg}, {"h", h_arg}, {"map", map_arg}, {"group", group_arg}};
            return Outcome{is_tt(f, g, h, parse_group(group_arg)), {}, "n/a", {}};
        });
        graph_opt(check_tt, "--g", g_arg, "source graph");
        graph_opt(check_tt, "--h", h_arg, "target graph");
        graph_opt(check_tt, "--map", map_arg, "edge map file");
        check_tt->add_option("--group", group_arg, "abelian group, e.g. Z_2 or ZxZ_4");

        auto * check_cut = add("check-cut-tt", "does every unit cut tension pull back to one (over Z)", [&] {
            auto g = load_graph(g_arg), h = load_graph(h_arg);
            auto f = load_map(map_arg, g);
            validate(f, g, h);
            params = {{"g", g_arg}, {"h", h_arg}, {"map", map_arg}};
            // over Z an undirected graph is read with its stored orientation
            return Outcome{is_cut_tt_integers(f, g.as_directed(), h.as_directed()), {}, "n/a", {}};
        });
        graph_opt(check_cut, "--g", g_arg, "source graph");
        graph_opt(check_cut, "--h", h_arg, "target graph");
        graph_opt(check_cut, "--map", map_arg, "edge map file");

        std::int64_t upto = 30;
        auto * divisor = add("divisor-set", "TT(f,G,H), or TT(G,H) when no map is given", [&] {
            auto g = load_graph(g_arg), h = load_graph(h_arg);
            params = {{"g", g_arg}, {"h", h_arg}, {"upto", upto}};
            if (! map_arg.empty()) {
                auto f = load_map(map_arg, g);
                validate(f, g, h);
                params["map"] = map_arg;
                auto s = tt_divisor_set(f, g, h);
                return Outcome{{{"set", s.to_string()}, {"members", s.members_up_to(upto)}}, {}, "exhaustive", {}};
            }
            auto r = tt_set(g, h);
            if (r.status == SearchStatus::unknown)
                return Outcome{{{"set", nullptr}}, {}, "budget", {}};
            return Outcome{{{"set", r.set.to_string()}, {"members", r.set.members_up_to(upto)}}, {}, "exhaustive", {}};
        });
        graph_opt(divisor, "--g", g_arg, "source graph");
        graph_opt(divisor, "--h", h_arg, "target graph");
        divisor->add_option("--map", map_arg, "edge map file");
        divisor->add_option("--upto", upto, "list members up to this bound");

        auto * find = add("find-tt", "search for a TT map", [&] {
            auto g = load_graph(g_arg), h = load_graph(h_arg);
            auto group = cyclic(group_arg);
            params = {{"g", g_arg}, {"h", h_arg}, {"group", group_arg}, {"method", method}};
            auto r = method == "direct" ? find_tt(g, h, group, limits(globals)) : tt_exists_via_hom(g, h, group, limits(globals));
            Outcome o{{{"status", to_string(r.status)}, {"nodes", r.nodes}}, {}, status_outcome(r.status), out_arg};
            if (r.witness)
                o.witness = format_edge_map(*r.witness);
            return o;
        });
        graph_opt(find, "--g", g_arg, "source graph");
        graph_opt(find, "--h", h_arg, "target graph");
        find->add_option("--group", group_arg, "abelian group");
        find->add_option("--method", method, "lift or direct")->check(CLI::IsMember({"lift", "direct"}));
        find->add_option("--out", out_arg, "write the witness map here");

        auto * cmp = add("compare", "TT order between two graphs", [&] {
            auto g = load_graph(g_arg), h = load_graph(h_arg);
            params = {{"g", g_arg}, {"h", h_arg}, {"group", group_arg}};
            auto c = compare(g, h, cyclic(group_arg), limits(globals));
            bool budget = c.relation == Relation::unknown;
            return Outcome{{{"relation", to_string(c.relation)}, {"forward", to_string(c.forward.status)},
                               {"backward", to_string(c.backward.status)}},
                {}, budget ? "budget" : "exhaustive", {}};
        });
        graph_opt(cmp, "--g", g_arg, "first graph");
        graph_opt(cmp, "--h", h_arg, "second graph");
        cmp->add_option("--group", group_arg, "abelian group");

        auto * rigid = add("rigid", "is the identity the only TT self-map", [&] {
            auto g = load_graph(g_arg);
            params = {{"g", g_arg}, {"group", group_arg}};
            auto r = is_tt_rigid(g, cyclic(group_arg), limits(globals));
            return Outcome{r ? json(*r) : json(nullptr), {}, r ? "exhaustive" : "budget", {}};
        });
        graph_opt(rigid, "--g", g_arg, "graph");
        rigid->add_option("--group", group_arg, "abelian group");

        auto * gm = add("gm", "shortest circuit whose imbalance the group does not kill", [&] {
            auto g = load_graph(g_arg);
            params = {{"g", g_arg}, {"group", group_arg}};
            auto r = g_invariant(g, parse_group(group_arg));
            return Outcome{r ? json(*r) : json("infinity"), {}, "exhaustive", {}};
        });
        graph_opt(gm, "--g", g_arg, "graph");
        gm->add_option("--group", group_arg, "abelian group");

        // ---- homomorphisms
        auto * hom = add("find-hom", "search for a homomorphism", [&] {
            auto g = load_graph(g_arg), h = load_graph(h_arg);
            params = {{"g", g_arg}, {"h", h_arg}};
            HomOptions options;
            options.limits = limits(globals);
            auto r = find_hom(g, h, options);
            Outcome o{{{"status", to_string(r.status)}, {"nodes", r.nodes}}, {}, status_outcome(r.status), out_arg};
            if (r.witness)
                o.witness = format_vertex_map(*r.witness);
            return o;
        });
        graph_opt(hom, "--g", g_arg, "source graph");
        graph_opt(hom, "--h", h_arg, "target graph");
        hom->add_option("--out", out_arg, "write the vertex map here");

        auto * chi = add("chi", "chromatic number", [&] {
            params = {{"g", g_arg}};
            return Outcome{chromatic_number(load_graph(g_arg)), {}, "exhaustive", {}};
        });
        graph_opt(chi, "--g", g_arg, "graph");

        int nmax = 12;
        auto * chitt = add("chi-tt", "least n with a TT_2 map into K_n", [&] {
            params = {{"g", g_arg}, {"nmax", nmax}};
            auto r = chi_tt(load_graph(g_arg), nmax, limits(globals));
            return Outcome{r.value ? json(*r.value) : json(nullptr), {}, r.exhaustive ? "exhaustive" : "budget", {}};
        });
        graph_opt(chitt, "--g", g_arg, "graph");
        chitt->add_option("--nmax", nmax, "largest n tried (at most 12)");

        auto * nice = add("nice", "the clique-richness conditions", [&] {
            params = {{"g", g_arg}};
            auto r = is_nice(load_graph(g_arg));
            json result{{"nice", r.nice}, {"failed_condition", r.failed_condition}};
            Outcome o{result, {}, "exhaustive", {}};
            if (! r.nice) {
                string w;
                for (auto v : r.witness)
                    w += std::to_string(v) + ' ';
                if (! w.empty())
                    w.back() = '\n';
                o.witness = w;
            }
            return o;
        });
        graph_opt(nice, "--g", g_arg, "graph");

        auto universal = [&](const UniversalCheck & u) {
            Outcome o{{{"holds", u.holds ? json(*u.holds) : json(nullptr)}, {"maps", u.maps}}, {}, u.holds ? "exhaustive" : "budget", out_arg};
            if (u.counterexample)
                o.witness = format_edge_map(*u.counterexample);
            return o;
        };
        auto * pair = add("homotens-pair", "is every TT_2 map G -> H induced by a homomorphism", [&] {
            auto g = load_graph(g_arg), h = load_graph(h_arg);
            params = {{"g", g_arg}, {"h", h_arg}};
            return universal(homotens_pair(g, h, limits(globals)));
        });
        graph_opt(pair, "--g", g_arg, "source graph");
        graph_opt(pair, "--h", h_arg, "target graph");
        pair->add_option("--out", out_arg, "write a counterexample here");

        auto * k5 = add("k5-check", "every TT_2 map from K_5 induced by exactly one injective vertex map", [&] {
            auto h = load_graph(h_arg);
            params = {{"h", h_arg}};
            return universal(k5_target_check(h, limits(globals)));
        });
        graph_opt(k5, "--h", h_arg, "target graph");
        k5->add_option("--out", out_arg, "write a counterexample here");

        // ---- constructions
        auto graph_outcome = [&](const Digraph & d) {
            auto c = components(d);
            return Outcome{{{"vertices", d.num_vertices()}, {"edges", d.num_edges()}, {"components", c.count}},
                format_edge_list(d), "n/a", out_arg};
        };
        auto * del = add("delta", "the subset graph delta(H)", [&] {
            params = {{"h", h_arg}};
            return graph_outcome(delta(load_graph(h_arg)));
        });
        graph_opt(del, "--h", h_arg, "graph with at most 16 vertices");
        del->add_option("--out", out_arg, "write the graph here");

        auto * functor = add("functor-f", "F(G) for a rigid base", [&] {
            auto g = load_graph(g_arg);
            auto base = parse_rigid_base(read_text_file(base_arg));
            validate(base);
            params = {{"g", g_arg}, {"base", base_arg}};
            return graph_outcome(functor_f(g, base));
        });
        graph_opt(functor, "--g", g_arg, "undirected graph");
        graph_opt(functor, "--base", base_arg, "rigid base file (edge list then 'marks p q r s')");
        functor->add_option("--out", out_arg, "write the graph here");

        int max_vertices = 12;
        RigidConstraints constraints;
        auto * rsearch = add("rigid-search", "look for a TT_2-rigid base graph", [&] {
            params = {{"max", max_vertices}, {"min", constraints.min_vertices}, {"samples", constraints.samples_per_order},
                {"seed", globals.seed}};
            if (globals.budget)
                constraints.nodes_per_candidate = globals.budget;
            auto r = rigid_search(max_vertices, constraints, globals.seed);
            Outcome o{{{"status", to_string(r.status)}, {"candidates", r.candidates}, {"undecided", r.undecided}}, {},
                r.status == SearchStatus::found || (r.status == SearchStatus::none && r.undecided == 0) ? "exhaustive" : "budget",
                out_arg};
            if (r.status == SearchStatus::none && max_vertices > constraints.exhaustive_up_to)
                o.proof_status = "budget";  // sampled orders prove nothing
            if (r.base)
                o.witness = format_rigid_base(*r.base);
            return o;
        });
        rsearch->add_option("--max", max_vertices, "largest order");
        rsearch->add_option("--min", constraints.min_vertices, "smallest order");
        rsearch->add_option("--samples", constraints.samples_per_order, "random graphs per order above the exhaustive range");
        rsearch->add_option("--exhaustive-up-to", constraints.exhaustive_up_to, "orders enumerated completely");
        rsearch->add_option("--out", out_arg, "write the base here");

        string a_arg, b_arg;
        std::int64_t cone_n = 0;
        auto * cone = add("cone", "is a a sum of members of B and copies of n", [&] {
            params = {{"a", a_arg}, {"b", b_arg}, {"n", cone_n}};
            auto a = parse_list(a_arg), b = parse_list(b_arg);
            if (a.size() != 1)
                throw UsageError("--a takes a single integer");
            return Outcome{integer_cone_member(a[0], b, cone_n), {}, "exhaustive", {}};
        });
        cone->add_option("--a", a_arg, "the integer")->required();
        cone->add_option("--b", b_arg, "generators, comma separated")->required();
        cone->add_option("--n", cone_n, "modulus");

        std::int64_t circuits_nmax = 30;
        string generators_arg;
        auto * circuits = add("tt-set-circuits", "TT between unions of circuits via the cone criterion", [&] {
            if (! generators_arg.empty()) {
                if (! a_arg.empty() || ! b_arg.empty())
                    throw UsageError("--generators replaces --a and --b");
                params = {{"generators", generators_arg}, {"nmax", circuits_nmax}};
                auto pair = prescribed_pair(parse_list(generators_arg));
                auto r = tt_set_circuit_union(pair.a, pair.b, circuits_nmax);
                return Outcome{{{"p", pair.p}, {"p_prime", pair.p_prime}, {"a", pair.a}, {"b", pair.b},
                                   {"integers", r.integers}, {"members", r.members}},
                    {}, "exhaustive", {}};
            }
            if (a_arg.empty() || b_arg.empty())
                throw UsageError("need --a and --b, or --generators");
            params = {{"a", a_arg}, {"b", b_arg}, {"nmax", circuits_nmax}};
            auto r = tt_set_circuit_union(parse_list(a_arg), parse_list(b_arg), circuits_nmax);
            return Outcome{{{"integers", r.integers}, {"members", r.members}}, {}, "exhaustive", {}};
        });
        circuits->add_option("--a", a_arg, "source circuit lengths, comma separated");
        circuits->add_option("--b", b_arg, "target circuit lengths, comma separated");
        circuits->add_option("--generators", generators_arg, "build circuits whose TT set is the divisors of these");
        circuits->add_option("--nmax", circuits_nmax, "largest n listed");

        Experiment experiment;
        string predicate = "nice", failures_dir;
        auto * exp = add("experiment", "fraction of random graphs with a property", [&] {
            experiment.predicate = parse_predicate(predicate);
            experiment.seed = globals.seed;
            experiment.threads = globals.threads;
            if (globals.budget)
                experiment.nodes_per_trial = globals.budget;
            params = {{"n", experiment.n}, {"p", experiment.p}, {"trials", experiment.trials}, {"seed", experiment.seed},
                {"predicate", predicate}};
            auto r = estimate_fraction(experiment);
            json failures = json::array();
            for (auto & f : r.failures) {
                failures.push_back({{"trial", f.trial}, {"graph6", f.graph6}, {"reason", f.reason}});
                if (! failures_dir.empty()) {
                    std::filesystem::create_directories(failures_dir);
                    write_text_file(failures_dir + "/trial_" + std::to_string(f.trial) + ".g6", f.graph6 + "\n");
                }
            }
            string label = experiment.predicate == Predicate::nice ? "nice (=> homotens)" : to_string(experiment.predicate);
            return Outcome{{{"property", label}, {"hits", r.hits}, {"misses", r.misses}, {"unknown", r.unknown},
                               {"fraction", r.fraction}, {"lower", r.lower}, {"upper", r.upper}, {"failures", failures}},
                {}, r.unknown ? "budget" : "exhaustive", {}};
        });
        exp->add_option("--n", experiment.n, "vertices")->check(CLI::PositiveNumber);
        exp->add_option("--p", experiment.p, "edge probability")->check(CLI::Range(0.0, 1.0));
        exp->add_option("--trials", experiment.trials, "samples")->check(CLI::PositiveNumber);
        exp->add_option("--predicate", predicate, "nice or tt-rigid-bounded");
        exp->add_option("--failures-dir", failures_dir, "write failing graphs here as graph6");

        auto * construct = app.add_subcommand("construct", "gadget graphs");
        construct->require_subcommand(1);
        int subdivide_p = 3;
        string r_arg, lengths_arg;
        auto * subdivide = construct->add_subcommand("subdivide", "balanced subdivision");
        subdivide->callback([&] {
            verb = "construct subdivide";
            action = [&] {
                params = {{"h", h_arg}, {"p", subdivide_p}};
                return graph_outcome(subdivide_balanced(load_graph(h_arg), subdivide_p));
            };
        });
        graph_opt(subdivide, "--h", h_arg, "graph");
        subdivide->add_option("--p", subdivide_p, "edges per subdivided edge, odd and at least 3");
        subdivide->add_option("--out", out_arg, "write the graph here");
        auto * prod = construct->add_subcommand("product", "edge product H x R");
        prod->callback([&] {
            verb = "construct product";
            action = [&] {
                params = {{"h", h_arg}, {"r", r_arg}};
                return graph_outcome(product(load_graph(h_arg), load_graph(r_arg)));
            };
        });
        graph_opt(prod, "--h", h_arg, "first factor");
        graph_opt(prod, "--r", r_arg, "second factor");
        prod->add_option("--out", out_arg, "write the graph here");
        auto * circ = construct->add_subcommand("circuits", "disjoint union of oriented circuits");
        circ->callback([&] {
            verb = "construct circuits";
            action = [&] {
                params = {{"lengths", lengths_arg}};
                vector<int> lengths;
                for (auto x : parse_list(lengths_arg))
                    lengths.push_back(static_cast<int>(x));
                return graph_outcome(circuit_union(lengths));
            };
        });
        circ->add_option("--lengths", lengths_arg, "comma separated circuit lengths")->required();
        circ->add_option("--out", out_arg, "write the graph here");

        SuiteOptions suite;
        auto * battery = add("paper-suite", "run the acceptance battery", [&] {
            if (app.get_option("--seed")->count())
                suite.seed = globals.seed;
            suite.threads = globals.threads;
            suite.rigid_base_path = base_arg;
            params = {{"seed", suite.seed}};
            json rows = json::array();
            int passed = 0;
            auto results = run_suite(suite, [&](const CriterionResult & r) {
                if (! globals.json_output)
                    out << format_result(r) << std::endl;
            });
            for (auto & r : results) {
                passed += r.pass;
                rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"seconds", r.seconds},
                    {"limit_seconds", r.limit_seconds}, {"detail", r.detail}});
            }
            return Outcome{{{"passed", passed}, {"total", results.size()}, {"criteria", rows}}, {}, "n/a", {}};
        });
        battery->add_option("--only", suite.only, "criterion ids to run");
        battery->add_option("--base", base_arg, "rigid base file");

        vector<string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return 0;
        }
        catch (const CLI::ParseError & e) {
            err << "error: " << e.what() << '\n';
            return 1;
        }
        if (! action) {
            err << "error: no command\n";
            return 1;
        }

        try {
            auto start = std::chrono::steady_clock::now();
            auto outcome = action();
            double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (outcome.witness && ! outcome.out_path.empty())
                write_text_file(outcome.out_path, *outcome.witness);
            print(verb, params, outcome, seconds, globals.json_output, out);
            return outcome.proof_status == "budget" ? 2 : 0;
        }
        catch (const UsageError & e) {
            err << "error: " << e.what() << '\n';
        }
        catch (const ParseError & e) {
            err << "parse error: " << e.what() << '\n';
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
        }
        return 1;
    }
}
