#include <ttm/suite.hh>

#include <ttm/abelian.hh>
#include <ttm/cayley.hh>
#include <ttm/delta.hh>
#include <ttm/graph_io.hh>
#include <ttm/hom.hh>
#include <ttm/named_graphs.hh>
#include <ttm/random_lab.hh>
#include <ttm/search.hh>
#include <ttm/tt.hh>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#ifndef TTM_DATA_DIR
#define TTM_DATA_DIR "data"
#endif

using std::optional;
using std::string;
using std::vector;

namespace ttm
{
    namespace
    {
        struct Witness
        {
            Digraph g, h;
            Cyclic group;
            string label;
        };

        struct Context
        {
            const SuiteOptions & options;
            vector<Witness> witnesses;
            std::mt19937_64 rng;

            auto witness(const Digraph & g, const Digraph & h, const Cyclic & group, string label) -> void
            {
                witnesses.push_back({g, h, group, std::move(label)});
            }
        };

        auto fmt(double x, int digits = 2) -> string
        {
            std::ostringstream out;
            out << std::fixed << std::setprecision(digits) << x;
            return out.str();
        }

        auto join(const vector<std::int64_t> & xs) -> string
        {
            string out = "{";
            for (std::size_t i = 0; i < xs.size(); ++i)
                out += (i ? "," : "") + std::to_string(xs[i]);
            return out + "}";
        }

        auto uniform(std::mt19937_64 & rng, int lo, int hi) -> int
        {
            return std::uniform_int_distribution<int>(lo, hi)(rng);
        }

        auto random_digraph(std::mt19937_64 & rng, int vertices, int edges) -> Digraph
        {
            vector<Edge> es;
            for (int i = 0; i < edges; ++i) {
                int a = uniform(rng, 0, vertices - 1), b = uniform(rng, 0, vertices - 2);
                if (b >= a)
                    ++b;
                es.push_back({a, b});
            }
            return Digraph(vertices, std::move(es));
        }

        auto random_map(std::mt19937_64 & rng, const Digraph & g, const Digraph & h) -> EdgeMap
        {
            EdgeMap f;
            for (int i = 0; i < g.num_edges(); ++i)
                f.image.push_back(uniform(rng, 0, h.num_edges() - 1));
            return f;
        }

        auto random_tree(std::mt19937_64 & rng, int vertices) -> Digraph
        {
            vector<Edge> es;
            for (int v = 1; v < vertices; ++v) {
                int u = uniform(rng, 0, v - 1);
                if (uniform(rng, 0, 1))
                    es.push_back({u, v});
                else
                    es.push_back({v, u});
            }
            return Digraph(vertices, std::move(es));
        }

        /// Odometer over every map E(G) -> E(H); visit returns false to stop.
        auto for_each_map(const Digraph & g, const Digraph & h, const std::function<bool(const EdgeMap &)> & visit) -> void
        {
            if (h.num_edges() == 0 && g.num_edges() > 0)
                return;
            EdgeMap f;
            f.image.assign(g.num_edges(), 0);
            while (true) {
                if (! visit(f))
                    return;
                int i = 0;
                for (; i < g.num_edges(); ++i) {
                    if (++f.image[i] < h.num_edges())
                        break;
                    f.image[i] = 0;
                }
                if (i == g.num_edges())
                    return;
            }
        }

        /// Z_2 chains of the images of G's fundamental circuits; TT_2 maps with equal signatures
        /// cannot be told apart by any tension.
        auto cycle_signature(const EdgeMap & f, const Digraph & g, const Digraph & h) -> vector<vector<bool>>
        {
            vector<vector<bool>> out;
            for (auto & c : fundamental_circuits(g, spanning_forest(g))) {
                vector<bool> parity(h.num_edges(), false);
                for (auto & ce : c.edges)
                    parity[f.image[ce.edge]] = ! parity[f.image[ce.edge]];
                out.push_back(std::move(parity));
            }
            return out;
        }

        /// Vertices at distance exactly two in the n-cube, distances found by breadth-first search.
        auto cube_square(int n) -> Digraph
        {
            auto q = hypercube(n);
            vector<Edge> es;
            for (int s = 0; s < q.num_vertices(); ++s) {
                vector<int> dist(q.num_vertices(), -1);
                vector<int> queue{s};
                dist[s] = 0;
                for (std::size_t i = 0; i < queue.size(); ++i)
                    for (auto w : q.neighbours(queue[i]))
                        if (dist[w] < 0) {
                            dist[w] = dist[queue[i]] + 1;
                            queue.push_back(w);
                        }
                for (int t = s + 1; t < q.num_vertices(); ++t)
                    if (dist[t] == 2)
                        es.push_back({s, t});
            }
            return Digraph(q.num_vertices(), std::move(es), true);
        }

        auto one_factorization_map(const Digraph & k4) -> EdgeMap
        {
            // the three perfect matchings of K_4, each sent to its own edge of K_3
            EdgeMap f;
            for (auto & e : k4.edges()) {
                int a = std::min(e.tail, e.head), b = std::max(e.tail, e.head);
                int partner = (a == 0) ? b : 6 - a - b;  // the vertex matched with 0
                f.image.push_back(partner - 1);
            }
            return f;
        }

        auto c1(Context & ctx) -> std::pair<bool, string>
        {
            auto k4 = complete_graph(4), k3 = complete_graph(3);
            auto f = one_factorization_map(k4);
            bool tt = is_tt(f, k4, k3, Cyclic{2});
            auto induced = is_hom_induced(f, k4, k3);
            bool cut = is_cut_tt_integers(f, k4.as_directed(), k3.as_directed());
            if (tt)
                ctx.witness(k4, k3, Cyclic{2}, "1-factorization");
            return {tt && ! induced && ! cut, "TT_2 " + std::to_string(tt) + ", hom-induced " + (induced ? "yes" : "no")
                + ", cut-TT over Z " + std::to_string(cut)};
        }

        auto c2(Context & ctx) -> std::pair<bool, string>
        {
            auto c5 = cycle_graph(5);
            auto target = delta(c5);
            bool ok = true;
            string detail;
            for (auto x : {petersen_graph(), clebsch_graph(), grotzsch_graph(), dodecahedron_graph()}) {
                auto cmp = compare(x, c5, Cyclic{2});
                auto hom = find_hom(x, target);
                bool good = cmp.relation == Relation::equivalent && hom.status == SearchStatus::found;
                if (cmp.forward.witness)
                    ctx.witness(x, c5, Cyclic{2}, x.name() + " -> c_5");
                if (cmp.backward.witness)
                    ctx.witness(c5, x, Cyclic{2}, "c_5 -> " + x.name());
                ok = ok && good;
                detail += x.name() + " " + to_string(cmp.relation) + "; ";
            }
            return {ok, detail + "homs into delta(c_5) found"};
        }

        auto c3(Context & ctx) -> std::pair<bool, string>
        {
            auto k = [](int n) { return complete_graph(n); };
            auto cmp = compare(k(3), k(4), Cyclic{2});
            if (cmp.forward.witness)
                ctx.witness(k(3), k(4), Cyclic{2}, "k_3 -> k_4");
            if (cmp.backward.witness)
                ctx.witness(k(4), k(3), Cyclic{2}, "k_4 -> k_3");
            auto k54 = tt_exists_via_hom(k(5), k(4), Cyclic{2});
            auto k65 = tt_exists_via_hom(k(6), k(5), Cyclic{2});
            auto h54 = find_hom(k(5), delta(k(4)));
            auto h65 = find_hom(k(6), delta(k(5)));
            bool chain = cmp.relation == Relation::equivalent && k54.status == SearchStatus::none
                && k65.status == SearchStatus::none && h54.status == SearchStatus::none && h65.status == SearchStatus::none;
            bool nice = ! is_nice(k(4)).nice;
            for (int n = 5; n <= 8; ++n)
                nice = nice && is_nice(k(n)).nice;
            return {chain && nice, "k_3 vs k_4 " + to_string(cmp.relation) + ", k_5->k_4 " + to_string(k54.status)
                + ", k_6->k_5 " + to_string(k65.status) + ", nice k_5..k_8 and not k_4: " + std::to_string(nice)};
        }

        auto c4(Context & ctx) -> std::pair<bool, string>
        {
            auto c9 = directed_cycle(9), k2 = *named_graph("dk_2");
            auto set = tt_divisor_set(constant_map(c9, 0), c9, k2);
            auto members = set.members_up_to(30);
            bool ok = members == vector<std::int64_t>{1, 3, 9};
            string detail = "const dc_9 -> dk_2: " + join(members);

            auto & rng = ctx.rng;
            int mismatches = 0, finite = 0;
            for (int trial = 0; trial < 100; ++trial) {
                auto g = random_digraph(rng, uniform(rng, 2, 4), uniform(rng, 1, 8));
                auto h = random_digraph(rng, uniform(rng, 2, 4), uniform(rng, 1, 8));
                auto f = random_map(rng, g, h);
                vector<std::int64_t> brute;
                for (int n = 1; n <= 30; ++n)
                    if (is_tt_via_tensions(f, g, h, Cyclic{n}))
                        brute.push_back(n);
                auto s = tt_divisor_set(f, g, h);
                finite += s.kind == DivisorSet::Kind::finite;
                if (s.members_up_to(30) != brute)
                    ++mismatches;
                for (auto n : brute)
                    if (n > 1 && n <= 4)
                        ctx.witness(g, h, Cyclic{n}, "fuzz");
            }
            ok = ok && mismatches == 0;
            return {ok, detail + "; fuzz mismatches " + std::to_string(mismatches) + "/100 (" + std::to_string(finite) + " finite sets)"};
        }

        auto c5(Context & ctx) -> std::pair<bool, string>
        {
            auto c9 = directed_cycle(9), c7 = directed_cycle(7);
            vector<std::int64_t> a{9}, b{7};
            auto cone = tt_set_circuit_union(a, b, 6);
            bool ok = true;
            string detail;
            for (std::int64_t n : {2, 3, 6}) {
                auto direct = find_tt(c9, c7, Cyclic{n});
                auto lift = tt_exists_via_hom(c9, c7, Cyclic{n});
                bool in_cone = std::find(cone.members.begin(), cone.members.end(), n) != cone.members.end();
                bool d = direct.status == SearchStatus::found, l = lift.status == SearchStatus::found;
                bool decided = direct.status != SearchStatus::unknown && lift.status != SearchStatus::unknown;
                bool expected = n != 6;
                ok = ok && decided && d == l && l == in_cone && d == expected;
                for (auto * w : {&direct.witness, &lift.witness})
                    if (*w) {
                        ok = ok && is_tt(**w, c9, c7, Cyclic{n});
                        ctx.witness(c9, c7, Cyclic{n}, "dc_9 -> dc_7");
                    }
                detail += "Z_" + std::to_string(n) + " " + to_string(direct.status) + "/" + to_string(lift.status) + "/"
                    + (in_cone ? "cone" : "not cone") + "; ";
            }
            return {ok, detail};
        }

        auto c6(Context & ctx) -> std::pair<bool, string>
        {
            auto & rng = ctx.rng;
            int count_mismatch = 0, group_mismatch = 0;
            std::uint64_t total_z6 = 0, checked = 0;
            struct Case
            {
                string text;
                std::int64_t n;
                vector<std::int64_t> factors;
            };
            vector<Case> groups{{"Z_2xZ_3", 6, {2, 3}}, {"Z_4xZ_2", 4, {4, 2}}, {"Z_2^3", 2, {2}}};
            for (auto & c : groups)
                if (reduce(parse_group(c.text)).modulus != c.n)
                    ++group_mismatch;

            for (int trial = 0; trial < 20; ++trial) {
                auto g = random_digraph(rng, uniform(rng, 2, 4), uniform(rng, 1, 6));
                auto h = random_digraph(rng, uniform(rng, 2, 4), uniform(rng, 1, 6));
                std::uint64_t both = 0;
                for_each_map(g, h, [&](const EdgeMap & f) {
                    bool t2 = is_tt_via_tensions(f, g, h, Cyclic{2}), t3 = is_tt_via_tensions(f, g, h, Cyclic{3});
                    both += t2 && t3;
                    if (uniform(rng, 0, 15) == 0) {
                        ++checked;
                        for (auto & c : groups) {
                            bool oracle = true;
                            for (auto m : c.factors)
                                oracle = oracle && is_tt_via_tensions(f, g, h, Cyclic{m});
                            bool via_group = is_tt(f, g, h, parse_group(c.text));
                            if (via_group != oracle || via_group != is_tt(f, g, h, Cyclic{c.n}))
                                ++group_mismatch;
                        }
                    }
                    return true;
                });
                std::uint64_t z6 = 0;
                bool first = true;
                auto r = enumerate_tt_direct(g, h, Cyclic{6}, [&](const EdgeMap &) {
                    ++z6;
                    if (first)
                        ctx.witness(g, h, Cyclic{6}, "counting");
                    first = false;
                    return true;
                });
                total_z6 += z6;
                if (! r.complete || z6 != both)
                    ++count_mismatch;
            }
            return {count_mismatch == 0 && group_mismatch == 0, "count mismatches " + std::to_string(count_mismatch)
                + "/20 (" + std::to_string(total_z6) + " TT_6 maps), group mismatches " + std::to_string(group_mismatch)
                + " over " + std::to_string(checked) + " sampled maps"};
        }

        auto c7(Context & ctx) -> std::pair<bool, string>
        {
            int violations = 0;
            string first;
            for (auto & w : ctx.witnesses) {
                auto a = g_invariant(w.g, w.group), b = g_invariant(w.h, w.group);
                bool holds = ! a || (b && *a >= *b);
                if (! holds) {
                    if (first.empty())
                        first = " first: " + w.label;
                    ++violations;
                }
            }
            return {violations == 0 && ! ctx.witnesses.empty(),
                std::to_string(ctx.witnesses.size()) + " witnesses, " + std::to_string(violations) + " violations" + first};
        }

        auto c8(Context &) -> std::pair<bool, string>
        {
            auto d = delta(cycle_graph(5));
            auto comps = components(d);
            bool ok = comps.count == 2;
            string detail = std::to_string(comps.count) + " components";
            if (ok) {
                int other = -1;
                for (int v = 0; v < d.num_vertices(); ++v)
                    if (comps.of[v] != comps.of[0]) {
                        other = v;
                        break;
                    }
                auto a = component_of(d, 0), b = component_of(d, other);
                bool regular = true;
                for (auto * c : {&a, &b})
                    for (int v = 0; v < c->num_vertices(); ++v)
                        regular = regular && c->degree(v) == 5;
                ok = a.num_vertices() == 16 && b.num_vertices() == 16 && regular && isomorphic(a, b)
                    && isomorphic(a, clebsch_graph());
                detail += ok ? ", both 16-vertex 5-regular clebsch" : ", structure mismatch";
            }
            for (int n = 3; n <= 5; ++n) {
                bool same = isomorphic(delta(complete_graph(n)), cube_square(n));
                ok = ok && same;
                detail += "; delta(k_" + std::to_string(n) + ") = Q_" + std::to_string(n) + "^(2): " + std::to_string(same);
            }
            return {ok, detail};
        }

        auto c9(Context &) -> std::pair<bool, string>
        {
            struct Case
            {
                Digraph g;
                int expected; // 0: only the sandwich is checked
            };
            vector<Case> cases{{path_graph(3), 2}, {cycle_graph(6), 2}, {hypercube(3), 2}, {cycle_graph(5), 3},
                {petersen_graph(), 3}, {complete_graph(5), 5}, {complete_graph(3), 0}, {complete_graph(4), 0},
                {cycle_graph(7), 0}, {grotzsch_graph(), 0}, {clebsch_graph(), 0}};
            bool ok = true;
            string detail;
            for (auto & c : cases) {
                auto r = chi_tt(c.g, 12);
                int chi = chromatic_number(c.g);
                bool good = r.value && r.exhaustive && *r.value <= chi && chi < 2 * *r.value
                    && (c.expected == 0 || *r.value == c.expected);
                ok = ok && good;
                detail += c.g.name() + " " + (r.value ? std::to_string(*r.value) : "?") + "/" + std::to_string(chi) + " ";
            }
            detail += "(chi_tt/chi);";
            for (int n = 3; n <= 5; ++n) {
                double ratio = static_cast<double>(chromatic_number(delta(complete_graph(n)))) / n;
                ok = ok && ratio >= 1 && ratio <= 2;
                detail += " chi(delta(k_" + std::to_string(n) + "))/" + std::to_string(n) + " = " + fmt(ratio, 3);
            }
            return {ok, detail};
        }

        /// G with a vertex map onto H, some components reversed, and the induced edge map.
        struct Induced
        {
            Digraph g, h;
            EdgeMap f;
        };

        auto random_induced(std::mt19937_64 & rng) -> Induced
        {
            int gv = uniform(rng, 2, 6), hv = uniform(rng, 2, 6);
            auto base = random_digraph(rng, gv, uniform(rng, 1, 7));
            vector<int> phi(gv);
            for (auto & x : phi)
                x = uniform(rng, 0, hv - 1);
            auto comps = components(base);
            vector<bool> flip(comps.count);
            for (auto && x : flip)
                x = uniform(rng, 0, 1);
            vector<Edge> g_edges, h_edges;
            EdgeMap f;
            for (auto & e : base.edges()) {
                if (phi[e.tail] == phi[e.head])
                    continue;
                g_edges.push_back(e);
                int a = phi[e.tail], b = phi[e.head];
                if (flip[comps.of[e.tail]])
                    std::swap(a, b);
                auto it = std::find(h_edges.begin(), h_edges.end(), Edge{a, b});
                f.image.push_back(static_cast<int>(it - h_edges.begin()));
                if (it == h_edges.end())
                    h_edges.push_back({a, b});
            }
            // some spare edges in H
            for (int extra = uniform(rng, 0, 3); extra > 0; --extra) {
                int a = uniform(rng, 0, hv - 1), b = uniform(rng, 0, hv - 2);
                if (b >= a)
                    ++b;
                h_edges.push_back({a, b});
            }
            if (g_edges.empty())
                return random_induced(rng);
            return {Digraph(gv, std::move(g_edges)), Digraph(hv, std::move(h_edges)), std::move(f)};
        }

        auto c10(Context & ctx) -> std::pair<bool, string>
        {
            auto & rng = ctx.rng;
            int counterexamples = 0, cut_maps = 0, induced_not_cut = 0;
            for (int trial = 0; trial < 500; ++trial) {
                Digraph g, h;
                EdgeMap f;
                int kind = trial % 3;
                if (kind == 0) {
                    g = random_digraph(rng, uniform(rng, 2, 6), uniform(rng, 1, 7));
                    h = random_digraph(rng, uniform(rng, 2, 6), uniform(rng, 1, 7));
                    f = random_map(rng, g, h);
                }
                else {
                    auto x = random_induced(rng);
                    g = std::move(x.g);
                    h = std::move(x.h);
                    f = std::move(x.f);
                    if (kind == 2)
                        f.image[uniform(rng, 0, g.num_edges() - 1)] = uniform(rng, 0, h.num_edges() - 1);
                }
                bool cut = is_cut_tt_integers(f, g, h);
                cut_maps += cut;
                if (cut && ! is_hom_induced(f, g, h))
                    ++counterexamples;
                if (kind == 1 && ! cut)
                    ++induced_not_cut;
                if (cut)
                    ctx.witness(g, h, Cyclic{0}, "cut-TT");
            }
            return {counterexamples == 0 && induced_not_cut == 0, std::to_string(cut_maps) + "/500 cut-TT, "
                + std::to_string(counterexamples) + " not induced, " + std::to_string(induced_not_cut) + " induced but not cut-TT"};
        }

        auto c11(Context & ctx) -> std::pair<bool, string>
        {
            auto run = [&](int n, std::uint64_t salt) {
                Experiment e;
                e.n = n;
                e.p = 0.5;
                e.trials = 200;
                e.seed = ctx.options.seed + salt;
                e.predicate = Predicate::nice;
                e.threads = ctx.options.threads;
                return estimate_fraction(e);
            };
            auto r40 = run(40, 40), r20 = run(20, 20), r50 = run(50, 50);
            bool ok = r40.fraction >= 0.90 && r50.fraction >= r20.fraction;
            return {ok, "nice fraction n=40 " + fmt(r40.fraction, 3) + " [" + fmt(r40.lower, 3) + "," + fmt(r40.upper, 3)
                + "] (need >= 0.900); n=20 " + fmt(r20.fraction, 3) + ", n=50 " + fmt(r50.fraction, 3)};
        }

        auto c12(Context & ctx) -> std::pair<bool, string>
        {
            auto & rng = ctx.rng;
            int tree_failures = 0, perm_failures = 0, perms = 0;
            for (int trial = 0; trial < 100; ++trial) {
                auto g = random_tree(rng, uniform(rng, 2, 10)), h = random_tree(rng, uniform(rng, 2, 10));
                auto f = random_map(rng, g, h);
                if (! is_tt(f, g, h, Cyclic{0}) || tt_divisor_set(f, g, h) != DivisorSet::all_n())
                    ++tree_failures;
                else if (trial < 10)
                    ctx.witness(g, h, Cyclic{0}, "trees");
            }
            auto c5 = directed_cycle(5);
            EdgeMap f = identity_map(c5);
            do {
                ++perms;
                if (tt_divisor_set(f, c5, c5) != DivisorSet::all_n())
                    ++perm_failures;
            } while (std::next_permutation(f.image.begin(), f.image.end()));
            ctx.witness(c5, c5, Cyclic{0}, "permutation");
            return {tree_failures == 0 && perm_failures == 0 && perms == 120, std::to_string(tree_failures)
                + "/100 tree maps not TT_Z, " + std::to_string(perm_failures) + "/" + std::to_string(perms) + " permutations not AllN"};
        }

        auto c13(Context & ctx) -> std::pair<bool, string>
        {
            auto & rng = ctx.rng;
            auto k2 = complete_graph(2);
            int missing = 0, graphs = 0;
            std::uint64_t trial = 0;
            while (graphs < 100) {
                int n = uniform(rng, 2, 14);
                double p = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
                auto g = sample_gnp(n, p, ctx.options.seed + 13, trial++);
                if (g.num_edges() == 0)
                    continue;
                ++graphs;
                auto r = tt_exists_via_hom(k2, g, Cyclic{2});
                if (r.status != SearchStatus::found || ! is_tt(*r.witness, k2, g, Cyclic{2}))
                    ++missing;
                else
                    ctx.witness(k2, g, Cyclic{2}, "gap");
            }
            return {missing == 0, std::to_string(100 - missing) + "/100 graphs receive a TT_2 map from k_2"};
        }

        auto c14(Context & ctx) -> std::pair<bool, string>
        {
            auto path = ctx.options.rigid_base_path.empty() ? string(TTM_DATA_DIR) + "/rigid_base.txt" : ctx.options.rigid_base_path;
            auto base = parse_rigid_base(read_text_file(path));
            validate(base);
            auto rigid = is_tt_rigid(base.graph, Cyclic{2});
            if (! rigid || ! *rigid)
                return {false, "base in " + path + " is not TT_2-rigid"};

            constexpr std::uint64_t pair_budget = 1000000;
            constexpr std::uint64_t backward_budget = 100000000;
            vector<Digraph> family{complete_graph(1), complete_graph(2), path_graph(3), cycle_graph(5)};
            vector<Digraph> images;
            for (auto & g : family)
                images.push_back(functor_f(g, base));

            int forward_failures = 0, incomplete = 0;
            std::uint64_t homs = 0, found = 0, literal = 0, unexplained = 0;
            for (std::size_t i = 0; i < family.size(); ++i)
                for (std::size_t j = 0; j < family.size(); ++j) {
                    auto & g = family[i];
                    auto & h = family[j];
                    std::set<EdgeMap> exact;
                    std::set<vector<vector<bool>>> signatures;
                    enumerate_homs(g, h, [&](const VertexMap & m) {
                        auto e = functor_f_map(m, g, h, base);
                        ++homs;
                        if (! is_tt(e, images[i], images[j], Cyclic{2}))
                            ++forward_failures;
                        else if (exact.empty())
                            ctx.witness(images[i], images[j], Cyclic{2}, "F(" + g.name() + ") -> F(" + h.name() + ")");
                        exact.insert(e);
                        signatures.insert(cycle_signature(e, images[i], images[j]));
                        return true;
                    });
                    SearchLimits limits;
                    limits.max_nodes = pair_budget;
                    auto r = enumerate_tt_lift(images[i], images[j], Cyclic{2}, [&](const EdgeMap & f) {
                        ++found;
                        if (exact.count(f))
                            ++literal;
                        else if (! signatures.count(cycle_signature(f, images[i], images[j])))
                            ++unexplained;
                        return true;
                    }, limits);
                    incomplete += ! r.complete;
                }

            SearchLimits limits;
            limits.max_nodes = backward_budget;
            limits.threads = ctx.options.threads;
            auto back = tt_exists_via_hom(functor_f(complete_graph(3), base), images[1], Cyclic{2}, limits);

            bool ok = forward_failures == 0 && back.status != SearchStatus::found && unexplained == 0;
            return {ok, std::to_string(homs) + " homs, forward failures " + std::to_string(forward_failures)
                + "; F(k_3)->F(k_2) " + to_string(back.status) + " after " + std::to_string(back.nodes) + " nodes; "
                + std::to_string(found) + " TT_2 maps between images (" + std::to_string(incomplete) + "/16 pairs cut by budget): "
                + std::to_string(literal) + " equal F(f), " + std::to_string(found - literal - unexplained)
                + " agree with F(f) on every circuit, " + std::to_string(unexplained) + " unexplained"};
        }

        struct Criterion
        {
            int id;
            const char * title;
            double limit;
            std::pair<bool, string> (*run)(Context &);
        };

        const Criterion criteria[] = {
            {1, "One-factorization map", 1, c1},
            {2, "Petersen family ~ C_5", 60, c2},
            {3, "Complete-graph chain", 120, c3},
            {4, "Divisor sets", 60, c4},
            {5, "dc_9 vs dc_7", 120, c5},
            {6, "Group reduction and counting", 60, c6},
            {8, "Delta structure", 30, c8},
            {9, "chi_TT", 300, c9},
            {10, "Cut-TT maps are induced", 60, c10},
            {11, "Nice-graph prevalence", 300, c11},
            {12, "Trees and permutations over Z", 30, c12},
            {13, "Gap between K_1 and K_2", 10, c13},
            {14, "Functor F", 1800, c14},
            {7, "Monotone invariant over witnesses", 60, c7},
        };
    }

    auto run_suite(const SuiteOptions & options, const std::function<void(const CriterionResult &)> & report)
        -> vector<CriterionResult>
    {
        Context ctx{options, {}, std::mt19937_64(options.seed)};
        vector<CriterionResult> results;
        for (auto & c : criteria) {
            if (! options.only.empty() && std::find(options.only.begin(), options.only.end(), c.id) == options.only.end())
                continue;
            CriterionResult r;
            r.id = c.id;
            r.title = c.title;
            r.limit_seconds = c.limit;
            // each criterion draws from its own stream so that running a subset changes nothing
            ctx.rng.seed(options.seed * 1000003 + static_cast<std::uint64_t>(c.id));
            auto start = std::chrono::steady_clock::now();
            try {
                auto [pass, detail] = c.run(ctx);
                r.pass = pass;
                r.detail = std::move(detail);
            }
            catch (const std::exception & e) {
                r.pass = false;
                r.detail = string("error: ") + e.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (r.seconds > r.limit_seconds) {
                r.pass = false;
                r.detail += " [over time]";
            }
            if (report)
                report(r);
            results.push_back(std::move(r));
        }
        std::sort(results.begin(), results.end(), [](auto & a, auto & b) { return a.id < b.id; });
        return results;
    }

    auto format_result(const CriterionResult & r) -> string
    {
        std::ostringstream out;
        out << (r.pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << "  " << r.title << "  (" << fmt(r.seconds)
            << " s / " << fmt(r.limit_seconds, 0) << " s)  " << r.detail;
        return out.str();
    }
}
