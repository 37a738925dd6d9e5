#ifndef MULTIDB_TEXTIO_HPP
#define MULTIDB_TEXTIO_HPP

#include <string>

#include "multidb/sequences.hpp"

namespace multidb {

// Symbols render as single digits for alphabets up to size 10 and as
// bracketed comma-separated decimals beyond, e.g. [0,11,3].
std::string to_string(const Seq& s);
std::string to_string(const CyclicSeq& c);       // "(symbols)"
std::string to_string(const MultiCyclicSeq& mc); // "(...)(...)" in canonical order

Seq parse_seq(const std::string& text);
CyclicSeq parse_cyclic(const std::string& text);
// Whitespace between groups is ignored.
MultiCyclicSeq parse_multicyclic(const std::string& text);

}  // namespace multidb

#endif
