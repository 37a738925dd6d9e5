#ifndef MULTIDB_ENUMERATE_HPP
#define MULTIDB_ENUMERATE_HPP

#include <functional>
#include <optional>

#include "multidb/numtheory.hpp"
#include "multidb/sequences.hpp"

namespace multidb {

struct SearchBudget {
    // Refuse searches larger than 2^max_space_bits candidate prefixes.
    long long max_space_bits = 32;
    // Stop after emitting this many results.
    std::optional<long long> limit;
    // Extra k'-mer pruning for k' < k; off exposes the raw search to oracles.
    bool short_kmer_pruning = true;
};

// Consumers return false to stop the stream early.
using CyclicSink = std::function<bool(const CyclicSeq&)>;
using SeqSink = std::function<bool(const Seq&)>;
using MultiCyclicSink = std::function<bool(const MultiCyclicSeq&)>;

// Pruned base-q scan over linearizations starting with 0^k; emits each
// cyclic multi de Bruijn sequence once, by ascending least rotation.
void enumerate_cyclic(const Params& p, const SearchBudget& budget, const CyclicSink& sink);

// All of LC_y(m,q,k), ascending. y must have length k.
void enumerate_linearized_starting(const Params& p, const Seq& y, const SearchBudget& budget,
                                   const SeqSink& sink);

// All of L(m,q,k): the linearized sets for every initial k-mer, extended.
void enumerate_linear(const Params& p, const SearchBudget& budget, const SeqSink& sink);

// Inverse EBWT image of all q^(k-1)-tuples of codewords, in tuple order.
void enumerate_multicyclic(const Params& p, const SearchBudget& budget,
                           const MultiCyclicSink& sink);

// Ascending list of the codeword set W_{m,q} (permutations of 0^m...(q-1)^m).
std::vector<Seq> codewords(long long m, long long q);

}  // namespace multidb

#endif
