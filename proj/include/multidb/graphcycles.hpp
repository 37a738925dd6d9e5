#ifndef MULTIDB_GRAPHCYCLES_HPP
#define MULTIDB_GRAPHCYCLES_HPP

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "multidb/numtheory.hpp"

namespace multidb {

// Directed multigraph with an integer multiplicity nu_e per edge.
// Vertices are 0..vertices-1; edge ids are arbitrary but unique.
struct GraphEdge {
    long long tail;
    long long head;
    long long id;
};

struct NuGraph {
    long long vertices = 0;
    std::vector<GraphEdge> edges;
    std::map<long long, long long> nu;

    long long outdeg(long long x) const;  // nu-weighted
    long long indeg(long long x) const;
    bool is_balanced() const;
};

// Text fixture: one edge per line, "tail head edge_id nu".
NuGraph parse_graph(const std::string& text);
std::string format_graph(const NuGraph& g);

// Expanded graph: each edge of G replicated nu_e times into
// distinguishable copies. Edges are addressed by position.
struct ExpandedEdge {
    long long tail;
    long long head;
    long long source;  // originating edge id in G
    long long copy;    // 0-based copy index
};

struct Multigraph {
    long long vertices = 0;
    std::vector<ExpandedEdge> edges;

    long long outdeg(long long x) const;
    long long indeg(long long x) const;
    bool is_balanced() const;
};

Multigraph expand(const NuGraph& g);

// Product over vertices of outdeg!; the number of edge successor maps
// (equivalently cycle partitions) of a balanced multigraph.
Count count_cycle_partitions(const Multigraph& h);

// f maps each edge index to the next edge index; Head(e) = Tail(f(e)).
using SuccessorMap = std::vector<long long>;
using EdgeCycle = std::vector<long long>;

// Every successor map exactly once, as the cartesian product of the
// per-vertex In -> Out bijections. Sink returns false to stop.
void enumerate_successor_maps(const Multigraph& h, const Count& cap,
                              const std::function<bool(const SuccessorMap&)>& sink);

// Cycle form of f over edge indices; uses every edge exactly once.
std::vector<EdgeCycle> partition_from_successor(const SuccessorMap& f);
SuccessorMap successor_from_partition(size_t edge_count, const std::vector<EdgeCycle>& cycles);

// Replace each edge index by its source edge id in G.
std::vector<EdgeCycle> project(const Multigraph& h, const std::vector<EdgeCycle>& cycles);

// Replace each cycle of period p and length n by n/p copies of its
// aperiodic root; canonicalize by least rotation and sort the multiset.
std::vector<EdgeCycle> split_aperiodic(const std::vector<EdgeCycle>& cycles);

// Product over vertices of (nu-weighted outdeg)! divided by the product
// of nu_e!; counts multisets of aperiodic edge cycles covering nu.
Count count_aperiodic_multisets(const NuGraph& g);

// Oracle: push all successor maps of expand(g) through project+split and
// deduplicate. Refuses when the map count exceeds cap.
std::set<std::vector<EdgeCycle>> brute_force_aperiodic_multisets(const NuGraph& g,
                                                                 const Count& cap);

// Backtracking counts for small graphs; size-guarded.
Count brute_force_eulerian_count(const Multigraph& h, long long first_edge);
Count brute_force_arborescences(const Multigraph& h, long long root);

// G(m,q,k): vertices are (k-1)-mers encoded base q, one edge per
// extension symbol, every multiplicity m.
NuGraph de_bruijn_graph(long long m, long long q, long long k);

// Two cycles through shared vertices 0 and 1: a triangle 2->0->1->2 with
// multiplicity a and a square 3->0->4->1->3 with multiplicity b.
NuGraph two_cycle_graph(long long a, long long b);

// Entry (i,j) of A^p where A counts parallel edges of h.
std::vector<std::vector<Count>> adjacency_power(const Multigraph& h, long long p);

}  // namespace multidb

#endif
