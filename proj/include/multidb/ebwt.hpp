#ifndef MULTIDB_EBWT_HPP
#define MULTIDB_EBWT_HPP

#include <optional>
#include <vector>

#include "multidb/sequences.hpp"

namespace multidb {

// Sorted-position view of a word: pi(H_i + j) is the position of the j-th
// occurrence of symbol i, ascending.
struct StandardPermutation {
    std::vector<long long> pi;
    std::vector<long long> bucket_start;  // H_0 <= ... <= H_q = n
};

struct EbwtTable {
    std::vector<Seq> rows;  // lexicographically nondecreasing
    Seq last_column() const;
};

// Forward transform: last column of the sorted table of periodic
// extensions of all cycle rotations (multiplicity included).
Seq ebwt(const MultiCyclicSeq& sigma);

// The materialized n x lcm table backing the forward transform.
EbwtTable ebwt_table(const MultiCyclicSeq& sigma);

StandardPermutation standard_permutation(const Seq& w);

// Inverse via the standard permutation; total on all words.
MultiCyclicSeq inverse_ebwt(const Seq& w);

// Inverse via iterated column insertion; diagnostic oracle for the above.
EbwtTable inverse_ebwt_table(const Seq& w);
// Lyndon primitive roots of the table rows, as a multicyclic sequence.
MultiCyclicSeq multicyclic_from_table(const EbwtTable& table);

Seq bwt(const Seq& s);
// Exists iff inverse_ebwt(w) is a single cycle with a multiplicity; the
// returned representative is the Lyndon rotation, powered.
std::optional<Seq> inverse_bwt(const Seq& w);

// Each symbol repeated d times in place.
Seq power_word(const Seq& w, long long d);

// True iff w is not a_1^i a_2^i ... for any block size i > 1.
bool is_nod(const Seq& w);

}  // namespace multidb

#endif
