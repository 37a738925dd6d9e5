#include "multidb/graphcycles.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "multidb/sequences.hpp"

namespace multidb {

long long NuGraph::outdeg(long long x) const {
    long long d = 0;
    for (const auto& e : edges)
        if (e.tail == x) d += nu.at(e.id);
    return d;
}

long long NuGraph::indeg(long long x) const {
    long long d = 0;
    for (const auto& e : edges)
        if (e.head == x) d += nu.at(e.id);
    return d;
}

bool NuGraph::is_balanced() const {
    for (long long x = 0; x < vertices; ++x)
        if (indeg(x) != outdeg(x)) return false;
    return true;
}

NuGraph parse_graph(const std::string& text) {
    NuGraph g;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        long long tail, head, id, mult;
        if (!(row >> tail >> head >> id >> mult) || tail < 0 || head < 0 || mult < 0)
            throw std::invalid_argument("bad graph line: " + line);
        if (g.nu.count(id)) throw std::invalid_argument("duplicate edge id");
        g.edges.push_back({tail, head, id});
        g.nu[id] = mult;
        g.vertices = std::max({g.vertices, tail + 1, head + 1});
    }
    return g;
}

std::string format_graph(const NuGraph& g) {
    std::ostringstream out;
    for (const auto& e : g.edges)
        out << e.tail << ' ' << e.head << ' ' << e.id << ' ' << g.nu.at(e.id) << '\n';
    return out.str();
}

long long Multigraph::outdeg(long long x) const {
    long long d = 0;
    for (const auto& e : edges)
        if (e.tail == x) ++d;
    return d;
}

long long Multigraph::indeg(long long x) const {
    long long d = 0;
    for (const auto& e : edges)
        if (e.head == x) ++d;
    return d;
}

bool Multigraph::is_balanced() const {
    for (long long x = 0; x < vertices; ++x)
        if (indeg(x) != outdeg(x)) return false;
    return true;
}

Multigraph expand(const NuGraph& g) {
    Multigraph h;
    h.vertices = g.vertices;
    for (const auto& e : g.edges)
        for (long long c = 0; c < g.nu.at(e.id); ++c)
            h.edges.push_back({e.tail, e.head, e.id, c});
    return h;
}

Count count_cycle_partitions(const Multigraph& h) {
    if (!h.is_balanced()) throw std::invalid_argument("graph not balanced");
    Count total = 1;
    for (long long x = 0; x < h.vertices; ++x) total *= factorial(h.outdeg(x));
    return total;
}

void enumerate_successor_maps(const Multigraph& h, const Count& cap,
                              const std::function<bool(const SuccessorMap&)>& sink) {
    if (count_cycle_partitions(h) > cap)
        throw std::length_error("successor map count exceeds cap");
    size_t n = h.edges.size();
    std::vector<std::vector<long long>> in(static_cast<size_t>(h.vertices));
    std::vector<std::vector<long long>> out(static_cast<size_t>(h.vertices));
    for (size_t e = 0; e < n; ++e) {
        in[static_cast<size_t>(h.edges[e].head)].push_back(static_cast<long long>(e));
        out[static_cast<size_t>(h.edges[e].tail)].push_back(static_cast<long long>(e));
    }
    // perm[x] permutes out[x]; In(x)[i] maps to Out(x)[perm[x][i]].
    std::vector<std::vector<size_t>> perm(static_cast<size_t>(h.vertices));
    for (long long x = 0; x < h.vertices; ++x) {
        perm[static_cast<size_t>(x)].resize(out[static_cast<size_t>(x)].size());
        std::iota(perm[static_cast<size_t>(x)].begin(), perm[static_cast<size_t>(x)].end(),
                  size_t{0});
    }
    SuccessorMap f(n);
    for (;;) {
        for (long long x = 0; x < h.vertices; ++x)
            for (size_t i = 0; i < in[static_cast<size_t>(x)].size(); ++i)
                f[static_cast<size_t>(in[static_cast<size_t>(x)][i])] =
                    out[static_cast<size_t>(x)][perm[static_cast<size_t>(x)][i]];
        if (!sink(f)) return;
        long long x = h.vertices - 1;
        while (x >= 0 && !std::next_permutation(perm[static_cast<size_t>(x)].begin(),
                                                perm[static_cast<size_t>(x)].end()))
            --x;
        if (x < 0) return;
    }
}

std::vector<EdgeCycle> partition_from_successor(const SuccessorMap& f) {
    std::vector<EdgeCycle> cycles;
    std::vector<bool> seen(f.size(), false);
    for (size_t start = 0; start < f.size(); ++start) {
        if (seen[start]) continue;
        EdgeCycle c;
        size_t e = start;
        do {
            seen[e] = true;
            c.push_back(static_cast<long long>(e));
            e = static_cast<size_t>(f[e]);
        } while (e != start);
        cycles.push_back(std::move(c));
    }
    return cycles;
}

SuccessorMap successor_from_partition(size_t edge_count, const std::vector<EdgeCycle>& cycles) {
    SuccessorMap f(edge_count, -1);
    for (const auto& c : cycles)
        for (size_t i = 0; i < c.size(); ++i)
            f[static_cast<size_t>(c[i])] = c[(i + 1) % c.size()];
    for (long long v : f)
        if (v < 0) throw std::invalid_argument("cycles do not cover all edges");
    return f;
}

std::vector<EdgeCycle> project(const Multigraph& h, const std::vector<EdgeCycle>& cycles) {
    std::vector<EdgeCycle> out;
    for (const auto& c : cycles) {
        EdgeCycle p;
        for (long long e : c) p.push_back(h.edges[static_cast<size_t>(e)].source);
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

EdgeCycle least_rotation_cycle(const EdgeCycle& c) {
    EdgeCycle best = c;
    EdgeCycle cur = c;
    for (size_t i = 1; i < c.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

}  // namespace

std::vector<EdgeCycle> split_aperiodic(const std::vector<EdgeCycle>& cycles) {
    std::vector<EdgeCycle> out;
    for (const auto& c : cycles) {
        size_t n = c.size();
        size_t p = n;
        for (size_t cand = 1; cand < n; ++cand) {
            if (n % cand != 0) continue;
            bool periodic = true;
            for (size_t i = 0; i + cand < n && periodic; ++i)
                periodic = (c[i] == c[i + cand]);
            if (periodic) { p = cand; break; }
        }
        EdgeCycle rep = least_rotation_cycle(EdgeCycle(c.begin(), c.begin() + p));
        for (size_t i = 0; i < n / p; ++i) out.push_back(rep);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Count count_aperiodic_multisets(const NuGraph& g) {
    if (!g.is_balanced()) throw std::invalid_argument("graph not balanced");
    Count num = 1;
    for (long long x = 0; x < g.vertices; ++x) num *= factorial(g.outdeg(x));
    Count den = 1;
    for (const auto& [id, mult] : g.nu) den *= factorial(mult);
    return exact_div(num, den);
}

std::set<std::vector<EdgeCycle>> brute_force_aperiodic_multisets(const NuGraph& g,
                                                                 const Count& cap) {
    Multigraph h = expand(g);
    std::set<std::vector<EdgeCycle>> out;
    enumerate_successor_maps(h, cap, [&](const SuccessorMap& f) {
        out.insert(split_aperiodic(project(h, partition_from_successor(f))));
        return true;
    });
    return out;
}

namespace {

long long eulerian_extensions(const Multigraph& h, std::vector<bool>& used, long long at,
                              long long start, size_t remaining) {
    if (remaining == 0) return at == start ? 1 : 0;
    long long total = 0;
    for (size_t e = 0; e < h.edges.size(); ++e) {
        if (used[e] || h.edges[e].tail != at) continue;
        used[e] = true;
        total += eulerian_extensions(h, used, h.edges[e].head, start, remaining - 1);
        used[e] = false;
    }
    return total;
}

}  // namespace

Count brute_force_eulerian_count(const Multigraph& h, long long first_edge) {
    if (h.edges.size() > 24) throw std::length_error("too many edges for brute force");
    if (first_edge < 0 || static_cast<size_t>(first_edge) >= h.edges.size())
        throw std::invalid_argument("bad edge index");
    std::vector<bool> used(h.edges.size(), false);
    used[static_cast<size_t>(first_edge)] = true;
    const auto& e0 = h.edges[static_cast<size_t>(first_edge)];
    return Count(eulerian_extensions(h, used, e0.head, e0.tail, h.edges.size() - 1));
}

Count brute_force_arborescences(const Multigraph& h, long long root) {
    if (h.vertices > 12) throw std::length_error("too many vertices for brute force");
    std::vector<std::vector<long long>> out(static_cast<size_t>(h.vertices));
    for (size_t e = 0; e < h.edges.size(); ++e)
        out[static_cast<size_t>(h.edges[e].tail)].push_back(static_cast<long long>(e));
    std::vector<long long> nonroot;
    for (long long x = 0; x < h.vertices; ++x)
        if (x != root) nonroot.push_back(x);
    // One out-edge per non-root vertex; count the choices whose chains all
    // reach the root without looping.
    std::vector<size_t> choice(nonroot.size(), 0);
    Count total = 0;
    for (;;) {
        std::vector<long long> next(static_cast<size_t>(h.vertices), -1);
        bool feasible = true;
        for (size_t i = 0; i < nonroot.size(); ++i) {
            const auto& opts = out[static_cast<size_t>(nonroot[i])];
            if (opts.empty()) { feasible = false; break; }
            next[static_cast<size_t>(nonroot[i])] =
                h.edges[static_cast<size_t>(opts[choice[i]])].head;
        }
        if (feasible) {
            bool tree = true;
            for (long long x : nonroot) {
                long long v = x;
                for (long long steps = 0; v != root; ++steps) {
                    if (steps > h.vertices) { tree = false; break; }
                    v = next[static_cast<size_t>(v)];
                }
                if (!tree) break;
            }
            if (tree) ++total;
        }
        long long i = static_cast<long long>(nonroot.size()) - 1;
        while (i >= 0) {
            const auto& opts = out[static_cast<size_t>(nonroot[static_cast<size_t>(i)])];
            if (opts.empty() || ++choice[static_cast<size_t>(i)] < opts.size()) break;
            choice[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0 || out[static_cast<size_t>(nonroot[static_cast<size_t>(i)])].empty()) break;
    }
    return total;
}

NuGraph de_bruijn_graph(long long m, long long q, long long k) {
    NuGraph g;
    g.vertices = Params::ipow(q, k - 1);
    for (long long u = 0; u < g.vertices; ++u) {
        for (long long a = 0; a < q; ++a) {
            long long id = u * q + a;
            g.edges.push_back({u, (u * q + a) % g.vertices, id});
            g.nu[id] = m;
        }
    }
    return g;
}

NuGraph two_cycle_graph(long long a, long long b) {
    NuGraph g;
    g.vertices = 5;
    g.edges = {{2, 0, 1}, {0, 1, 2}, {1, 2, 3}, {3, 0, 4}, {0, 4, 5}, {4, 1, 6}, {1, 3, 7}};
    for (long long id : {1, 2, 3}) g.nu[id] = a;
    for (long long id : {4, 5, 6, 7}) g.nu[id] = b;
    return g;
}

std::vector<std::vector<Count>> adjacency_power(const Multigraph& h, long long p) {
    size_t n = static_cast<size_t>(h.vertices);
    std::vector<std::vector<Count>> acc(n, std::vector<Count>(n, 0));
    for (size_t i = 0; i < n; ++i) acc[i][i] = 1;
    std::vector<std::vector<Count>> a(n, std::vector<Count>(n, 0));
    for (const auto& e : h.edges)
        ++a[static_cast<size_t>(e.tail)][static_cast<size_t>(e.head)];
    for (long long step = 0; step < p; ++step) {
        std::vector<std::vector<Count>> next(n, std::vector<Count>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t t = 0; t < n; ++t) {
                if (acc[i][t] == 0) continue;
                for (size_t j = 0; j < n; ++j) next[i][j] += acc[i][t] * a[t][j];
            }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace multidb
