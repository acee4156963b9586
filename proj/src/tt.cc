#include <ttm/tt.hh>

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

using std::int64_t;
using std::optional;
using std::vector;

namespace ttm
{
    auto algebraic_image(const EdgeMap & f, const Digraph & g, const Digraph & h, const EdgeFunction & phi) -> EdgeFunction
    {
        validate(f, g, h);
        if (static_cast<int>(phi.values.size()) != g.num_edges())
            throw std::invalid_argument("edge function does not live on the source graph");
        EdgeFunction result;
        result.values.assign(h.num_edges(), 0);
        for (int e = 0; e < g.num_edges(); ++e)
            result.values[f.image[e]] = checked_add(result.values[f.image[e]], phi.values[e]);
        return result;
    }

    auto conservation_defects(const EdgeMap & f, const Digraph & g, const Digraph & h) -> vector<vector<int64_t>>
    {
        validate(f, g, h);
        vector<vector<int64_t>> result;
        for (auto & c : fundamental_circuits(g, spanning_forest(g))) {
            vector<int64_t> defect(h.num_vertices(), 0);
            for (auto [id, sign] : c.edges) {
                auto & target = h.edge(f.image[id]);
                defect[target.head] += sign;
                defect[target.tail] -= sign;
            }
            result.push_back(std::move(defect));
        }
        return result;
    }

    auto is_tt(const EdgeMap & f, const Digraph & g, const Digraph & h, const Cyclic & group) -> bool
    {
        require_orientation_free(g, group);
        require_orientation_free(h, group);
        validate(f, g, h);
        if (group.modulus == 1)
            return true;
        for (auto & row : conservation_defects(f, g, h))
            for (auto x : row)
                if (! group.is_zero(x))
                    return false;
        return true;
    }

    auto is_tt(const EdgeMap & f, const Digraph & g, const Digraph & h, const GroupSpec & group) -> bool
    {
        return is_tt(f, g, h, reduce(group));
    }

    auto is_tt_via_tensions(const EdgeMap & f, const Digraph & g, const Digraph & h, const Cyclic & group) -> bool
    {
        require_orientation_free(g, group);
        require_orientation_free(h, group);
        validate(f, g, h);
        for (int v = 0; v < h.num_vertices(); ++v) {
            vector<bool> star(h.num_vertices(), false);
            star[v] = true;
            auto tau = elementary_tension(h, star, 1, group);
            EdgeFunction pulled;
            for (auto e : f.image)
                pulled.values.push_back(tau.values[e]);
            if (! is_tension(g, pulled, group))
                return false;
        }
        return true;
    }

    namespace
    {
        /// Is tau = phi^1_{[Y, Ybar]} for some vertex set Y?
        auto is_unit_cut_tension(const Digraph & g, const vector<int> & tau) -> bool
        {
            int n = g.num_vertices();
            vector<int> p(n, 0);
            vector<bool> seen(n, false);
            for (int s = 0; s < n; ++s) {
                if (seen[s])
                    continue;
                seen[s] = true;
                int lo = 0, hi = 0;
                std::deque<int> queue{s};
                while (! queue.empty()) {
                    int v = queue.front();
                    queue.pop_front();
                    for (auto id : g.incident(v)) {
                        auto & e = g.edge(id);
                        int w = e.other(v);
                        int expected = (e.head == w) ? p[v] + tau[id] : p[v] - tau[id];
                        if (! seen[w]) {
                            seen[w] = true;
                            p[w] = expected;
                            lo = std::min(lo, expected);
                            hi = std::max(hi, expected);
                            queue.push_back(w);
                        }
                        else if (p[w] != expected)
                            return false;
                    }
                }
                if (hi - lo > 1)
                    return false;
            }
            return true;
        }
    }

    auto is_cut_tt_integers(const EdgeMap & f, const Digraph & g, const Digraph & h) -> bool
    {
        require_orientation_free(g, Cyclic{0});
        require_orientation_free(h, Cyclic{0});
        validate(f, g, h);
        int n = h.num_vertices();
        if (n > 20)
            throw std::invalid_argument("cut enumeration is limited to 20 target vertices");

        vector<int> tau(g.num_edges());
        for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x) {
            for (int e = 0; e < g.num_edges(); ++e) {
                auto & target = h.edge(f.image[e]);
                bool t = (x >> target.tail) & 1, hd = (x >> target.head) & 1;
                tau[e] = (t && ! hd) ? 1 : (! t && hd) ? -1 : 0;
            }
            if (! is_unit_cut_tension(g, tau))
                return false;
        }
        return true;
    }

    auto tt_divisor_set(const EdgeMap & f, const Digraph & g, const Digraph & h) -> DivisorSet
    {
        require_orientation_free(g, Cyclic{0});
        require_orientation_free(h, Cyclic{0});
        int64_t d = 0;
        for (auto & row : conservation_defects(f, g, h))
            for (auto x : row)
                d = std::gcd(d, x < 0 ? -x : x);
        return d == 0 ? DivisorSet::all_n() : DivisorSet::divisors_of(d);
    }

    auto g_invariant(const Digraph & g, const Cyclic & group) -> optional<int>
    {
        require_orientation_free(g, group);
        if (group.modulus == 1)
            return std::nullopt;

        int n = g.num_vertices();
        // Closed walks of length <= n have |imbalance| <= n, so residues mod 2n+1 detect nonzero exactly.
        int64_t m = (group.modulus == 0 || group.modulus > 2 * n + 1) ? 2 * n + 1 : group.modulus;
        auto unbalanced = [&](int64_t r) { return r % m != 0; };

        optional<int> best;
        vector<int> dist(static_cast<std::size_t>(n) * m);
        for (int s = 0; s < n; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            std::deque<std::pair<int, int64_t>> queue;
            dist[s * m] = 0;
            queue.emplace_back(s, 0);
            while (! queue.empty()) {
                auto [v, r] = queue.front();
                queue.pop_front();
                int d = dist[v * m + r];
                if (d >= n || (best && d + 1 >= *best))
                    break;
                for (auto id : g.incident(v)) {
                    auto & e = g.edge(id);
                    int w = e.other(v);
                    int64_t r2 = ((r + (e.tail == v ? 1 : -1)) % m + m) % m;
                    if (w == s && unbalanced(r2)) {
                        if (! best || d + 1 < *best)
                            best = d + 1;
                        continue;
                    }
                    if (dist[w * m + r2] == -1) {
                        dist[w * m + r2] = d + 1;
                        queue.emplace_back(w, r2);
                    }
                }
            }
        }
        return best;
    }

    auto g_invariant(const Digraph & g, const GroupSpec & group) -> optional<int>
    {
        return g_invariant(g, reduce(group));
    }
}
