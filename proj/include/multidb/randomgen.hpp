#ifndef MULTIDB_RANDOMGEN_HPP
#define MULTIDB_RANDOMGEN_HPP

#include <cstdint>
#include <map>
#include <random>

#include "multidb/numtheory.hpp"
#include "multidb/sequences.hpp"

namespace multidb {

// Seeded generator with explicit state; identical seeds replay identical
// draws. Bounded draws use rejection from fixed-width blocks so the exact
// integer weights are respected.
class RngState {
public:
    explicit RngState(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t uniform_below(std::uint64_t bound);
    Count uniform_below(const Count& bound);
    int uniform_symbol(long long q) { return static_cast<int>(uniform_below(static_cast<std::uint64_t>(q))); }

    // Unbiased Fisher-Yates shuffle.
    void shuffle(Seq& s);

private:
    std::mt19937_64 engine_;
};

// Tree-edge symbol of each non-root (k-1)-mer: vertex x exits on symbol
// tree[x] toward the root. Vertices are encoded base q.
using Arborescence = std::map<Seq, int>;

// Backward random walk from the root over G(1,q,k); uniform over
// arborescences toward the root.
Arborescence random_arborescence(long long q, long long k, const Seq& root, RngState& rng);

// Exit-order codeword per vertex: g(root) starts with y's last symbol,
// g(x) ends with x's tree-edge symbol, rest a uniform multiset shuffle.
using ExitOrders = std::map<Seq, Seq>;
ExitOrders random_exit_orders(const Params& p, const Seq& y, const Arborescence& tree,
                              RngState& rng);

// BEST-bijection traversal: walk the de Bruijn graph consuming exit
// symbols; yields a linear multi de Bruijn sequence starting with y.
Seq spell_from_exit_orders(const Params& p, const Seq& y, const ExitOrders& g);

Seq random_linear(const Params& p, RngState& rng);
Seq random_linearized(const Params& p, const Seq& y, RngState& rng);

// Integer mixture weights w_r = phi(m/r) * |LC_y(r,q,k)| over divisors r|m;
// normalizing by their sum gives the divisor law p(r).
std::map<long long, Count> cyclic_mixture_weights(const Params& p);

CyclicSeq random_cyclic(const Params& p, RngState& rng);
MultiCyclicSeq random_multicyclic(const Params& p, RngState& rng);

}  // namespace multidb

#endif
