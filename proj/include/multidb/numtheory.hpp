#ifndef MULTIDB_NUMTHEORY_HPP
#define MULTIDB_NUMTHEORY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace multidb {

// Exact nonnegative integer; every counting formula stays in this type.
using Count = boost::multiprecision::cpp_int;

std::vector<long long> divisors(long long n);
int mobius(long long n);
long long totient(long long n);

Count factorial(long long n);
// (mq)! / (m!)^q
Count multinomial_equal(long long m, long long q);

Count pow_count(const Count& base, long long e);
// Division that must be exact; throws on a nonzero remainder.
Count exact_div(const Count& num, const Count& den);

std::string to_decimal(const Count& c);

}  // namespace multidb

#endif
