#include "multidb/randomgen.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "multidb/counting.hpp"
#include "multidb/ebwt.hpp"

namespace multidb {

std::uint64_t RngState::uniform_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("zero bound");
    // Rejection on the largest multiple of bound below 2^64.
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    for (;;) {
        std::uint64_t r = engine_();
        if (r <= limit) return r % bound;
    }
}

Count RngState::uniform_below(const Count& bound) {
    if (bound <= 0) throw std::invalid_argument("zero bound");
    unsigned bits = boost::multiprecision::msb(bound) + 1;
    unsigned words = (bits + 63) / 64;
    for (;;) {
        Count r = 0;
        for (unsigned i = 0; i < words; ++i) {
            r <<= 64;
            r |= Count(engine_());
        }
        r >>= words * 64 - bits;
        if (r < bound) return r;
    }
}

void RngState::shuffle(Seq& s) {
    for (size_t i = s.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(uniform_below(static_cast<std::uint64_t>(i)));
        std::swap(s[i - 1], s[j]);
    }
}

// Liveness guard only; at desk scale the cover time is nowhere near this.
static constexpr long long kWalkStepCap = 1'000'000'000;

Arborescence random_arborescence(long long q, long long k, const Seq& root, RngState& rng) {
    if (static_cast<long long>(root.size()) != k - 1)
        throw std::invalid_argument("root must be a (k-1)-mer");
    Arborescence tree;
    long long n = Params::ipow(q, k - 1);
    if (n == 1) return tree;  // single vertex, empty tree

    std::map<Seq, bool> visited;
    visited[root] = true;
    long long seen = 1;
    Seq v = root;
    for (long long step = 0; seen < n; ++step) {
        if (step >= kWalkStepCap)
            throw std::runtime_error("arborescence walk exceeded step cap");
        // Walk backwards: predecessor u satisfies edge u -> v, so u is a
        // fresh uniform symbol followed by v minus its last symbol.
        int b = rng.uniform_symbol(q);
        Seq u;
        u.reserve(root.size());
        u.push_back(b);
        u.insert(u.end(), v.begin(), v.end() - 1);
        if (!visited[u]) {
            visited[u] = true;
            ++seen;
            tree[u] = v.back();  // u's out-edge toward the root spells u + v.back()
        }
        v = std::move(u);
    }
    return tree;
}

static Seq constrained_codeword(const Params& p, int forced, bool forced_first, RngState& rng) {
    Seq rest;
    for (int a = 0; a < p.q; ++a)
        rest.insert(rest.end(), static_cast<size_t>(p.m), a);
    rest.erase(std::find(rest.begin(), rest.end(), forced));
    rng.shuffle(rest);
    if (forced_first)
        rest.insert(rest.begin(), forced);
    else
        rest.push_back(forced);
    return rest;
}

ExitOrders random_exit_orders(const Params& p, const Seq& y, const Arborescence& tree,
                              RngState& rng) {
    if (static_cast<long long>(y.size()) != p.k)
        throw std::invalid_argument("initial k-mer has wrong length");
    Seq root(y.begin(), y.end() - 1);
    ExitOrders g;
    g[root] = constrained_codeword(p, y.back(), /*forced_first=*/true, rng);
    for (const auto& [x, b] : tree)
        g[x] = constrained_codeword(p, b, /*forced_first=*/false, rng);
    return g;
}

Seq spell_from_exit_orders(const Params& p, const Seq& y, const ExitOrders& g) {
    Seq root(y.begin(), y.end() - 1);
    Seq out = root;
    std::map<Seq, long long> exits_taken;
    Seq x = root;
    for (;;) {
        long long j = exits_taken[x]++;
        if (j >= p.m * p.q) {
            if (x != root) throw std::logic_error("traversal stuck away from the start vertex");
            break;
        }
        int c = g.at(x)[static_cast<size_t>(j)];
        out.push_back(c);
        if (p.k > 1) {
            x.erase(x.begin());
            x.push_back(c);
        }
    }
    return out;
}

Seq random_linear(const Params& p, RngState& rng) {
    Seq y(static_cast<size_t>(p.k));
    for (auto& a : y) a = rng.uniform_symbol(p.q);
    Seq root(y.begin(), y.end() - 1);
    Arborescence tree = random_arborescence(p.q, p.k, root, rng);
    ExitOrders g = random_exit_orders(p, y, tree, rng);
    return spell_from_exit_orders(p, y, g);
}

Seq random_linearized(const Params& p, const Seq& y, RngState& rng) {
    if (static_cast<long long>(y.size()) != p.k)
        throw std::invalid_argument("initial k-mer has wrong length");
    Seq root(y.begin(), y.end() - 1);
    Arborescence tree = random_arborescence(p.q, p.k, root, rng);
    ExitOrders g = random_exit_orders(p, y, tree, rng);
    Seq s = spell_from_exit_orders(p, y, g);
    s.resize(s.size() - static_cast<size_t>(p.k - 1));
    return s;
}

std::map<long long, Count> cyclic_mixture_weights(const Params& p) {
    std::map<long long, Count> w;
    for (long long r : divisors(p.m))
        w[r] = Count(totient(p.m / r)) * count_linearized_starting(Params(r, p.q, p.k));
    return w;
}

CyclicSeq random_cyclic(const Params& p, RngState& rng) {
    auto weights = cyclic_mixture_weights(p);
    Count total = 0;
    for (const auto& [r, w] : weights) total += w;
    Count pick = rng.uniform_below(total);
    long long r = 0;
    for (const auto& [div, w] : weights) {
        if (pick < w) { r = div; break; }
        pick -= w;
    }
    Seq y(static_cast<size_t>(p.k), 0);
    Seq t = random_linearized(Params(r, p.q, p.k), y, rng);
    return CyclicSeq(concat_power(t, p.m / r));
}

MultiCyclicSeq random_multicyclic(const Params& p, RngState& rng) {
    Seq w;
    for (long long i = 0; i < p.qk1(); ++i) {
        // A uniform multiset shuffle is uniform over the codeword set.
        Seq cw;
        for (int a = 0; a < p.q; ++a)
            cw.insert(cw.end(), static_cast<size_t>(p.m), a);
        rng.shuffle(cw);
        w.insert(w.end(), cw.begin(), cw.end());
    }
    return inverse_ebwt(w);
}

}  // namespace multidb
