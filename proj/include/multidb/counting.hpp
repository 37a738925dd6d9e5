#ifndef MULTIDB_COUNTING_HPP
#define MULTIDB_COUNTING_HPP

#include "multidb/numtheory.hpp"
#include "multidb/sequences.hpp"

namespace multidb {

// W(m,q,k) = ((mq)!/m!^q)^(q^(k-1))
Count count_W(const Params& p);

Count count_linear(const Params& p);
Count count_linearized(const Params& p);
Count count_multicyclic(const Params& p);

// |LC_y(m,q,k)| = W(m,q,k)/q^k for any fixed initial k-mer y.
Count count_linearized_starting(const Params& p);

// |C(m,q,k)| = (1/(m q^k)) sum_{r|m} phi(m/r) W(r,q,k)
Count count_cyclic(const Params& p);

// Sequences of rotation order exactly d (d must divide m).
Count count_cyclic_order(const Params& p, long long d);
Count count_linearized_starting_order(const Params& p, long long d);

// Arborescences of G(m,q,k) toward any fixed root: (mq)^(q^(k-1)-1) / q^(k-1)
Count count_spanning_trees(const Params& p);

// Eulerian cycles of G(m,q,k) with a fixed initial edge:
// (mq)!^(q^(k-1)) / (m q^k)
Count count_eulerian_fixed_edge(const Params& p);

}  // namespace multidb

#endif
