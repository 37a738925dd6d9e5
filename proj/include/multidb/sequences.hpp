#ifndef MULTIDB_SEQUENCES_HPP
#define MULTIDB_SEQUENCES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace multidb {

// Word over the integer alphabet {0,...,q-1}.
using Seq = std::vector<int>;

// (m, q, k): multiplicity, alphabet size, word size.
struct Params {
    long long m = 1;
    long long q = 1;
    long long k = 1;

    Params() = default;
    Params(long long m_, long long q_, long long k_);

    // q^e, checked against 64-bit overflow.
    static long long ipow(long long base, long long e);

    long long qk() const { return ipow(q, k); }
    long long qk1() const { return ipow(q, k - 1); }
    // Linearized / cyclic length l = m*q^k.
    long long ell() const { return m * qk(); }
    // Linear length l' = m*q^k + k - 1.
    long long ell_linear() const { return ell() + k - 1; }
};

enum class SeqClass { Linear, Linearized, Cyclic, Multicyclic };

Seq rotate(const Seq& s, long long i);
long long rotation_order(const Seq& s);
Seq root(const Seq& s);
bool is_primitive(const Seq& s);
bool is_lyndon(const Seq& s);

// Least rotation of s (Booth-style linear scan is overkill at desk scale;
// we take the minimum over all rotations).
Seq least_rotation(const Seq& s);

Seq concat_power(const Seq& s, long long d);

// Cycle canonicalized to the lexicographically least rotation.
struct CyclicSeq {
    Seq rep;

    CyclicSeq() = default;
    explicit CyclicSeq(const Seq& s) : rep(least_rotation(s)) {}

    size_t size() const { return rep.size(); }
    bool operator==(const CyclicSeq& o) const { return rep == o.rep; }
    bool operator<(const CyclicSeq& o) const { return rep < o.rep; }
};

inline CyclicSeq canonical_cycle(const Seq& s) { return CyclicSeq(s); }

// Multiset of aperiodic cycles, stored as sorted Lyndon representatives.
struct MultiCyclicSeq {
    std::vector<Seq> cycles;

    MultiCyclicSeq() = default;
    // Canonicalizes: each cycle to its Lyndon rotation, then sorts.
    // Rejects non-primitive cycles.
    explicit MultiCyclicSeq(std::vector<Seq> raw);

    size_t total_length() const;
    // Multiplies every cycle's multiplicity by d.
    MultiCyclicSeq power(long long d) const;

    bool operator==(const MultiCyclicSeq& o) const { return cycles == o.cycles; }
    bool operator<(const MultiCyclicSeq& o) const { return cycles < o.cycles; }
};

// Occurrences of w in the cycle (c): positions j with w a prefix of the
// periodic extension of rotation j. The cycle may be shorter than w.
long long count_occurrences_cyclic(const CyclicSeq& c, const Seq& w);
long long count_occurrences_multicyclic(const MultiCyclicSeq& sigma, const Seq& w);

bool is_member_linear(const Seq& s, const Params& p);
bool is_member_linearized(const Seq& s, const Params& p);
bool is_member_cyclic(const CyclicSeq& c, const Params& p);
bool is_member_multicyclic(const MultiCyclicSeq& sigma, const Params& p);

// Append / drop the first k-1 characters at the end; mutually inverse
// bijection between linearized and linear multi de Bruijn sequences.
Seq linearized_to_linear(const Seq& s, const Params& p);
Seq linear_to_linearized(const Seq& s, const Params& p);

}  // namespace multidb

#endif
