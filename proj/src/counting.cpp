#include "multidb/counting.hpp"

#include <stdexcept>

namespace multidb {

Count count_W(const Params& p) {
    return pow_count(multinomial_equal(p.m, p.q), p.qk1());
}

Count count_linear(const Params& p) { return count_W(p); }
Count count_linearized(const Params& p) { return count_W(p); }
Count count_multicyclic(const Params& p) { return count_W(p); }

Count count_linearized_starting(const Params& p) {
    return exact_div(count_W(p), Count(p.qk()));
}

Count count_cyclic(const Params& p) {
    Count sum = 0;
    for (long long r : divisors(p.m))
        sum += Count(totient(p.m / r)) * count_W(Params(r, p.q, p.k));
    return exact_div(sum, Count(p.m) * p.qk());
}

static void require_order(const Params& p, long long d) {
    if (d < 1 || p.m % d != 0)
        throw std::invalid_argument("order must divide multiplicity");
}

Count count_cyclic_order(const Params& p, long long d) {
    require_order(p, d);
    long long md = p.m / d;
    Count sum = 0;
    for (long long r : divisors(md))
        sum += Count(mobius(r)) * count_W(Params(md / r, p.q, p.k));
    return exact_div(sum, Count(md) * p.qk());
}

Count count_linearized_starting_order(const Params& p, long long d) {
    require_order(p, d);
    return Count(p.m / d) * count_cyclic_order(p, d);
}

Count count_spanning_trees(const Params& p) {
    return exact_div(pow_count(Count(p.m * p.q), p.qk1() - 1), Count(p.qk1()));
}

Count count_eulerian_fixed_edge(const Params& p) {
    return exact_div(pow_count(factorial(p.m * p.q), p.qk1()), Count(p.m) * p.qk());
}

}  // namespace multidb
