#include "multidb/sequences.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace multidb {

Params::Params(long long m_, long long q_, long long k_) : m(m_), q(q_), k(k_) {
    if (m < 1 || q < 1 || k < 1)
        throw std::invalid_argument("params require m,q,k >= 1");
}

long long Params::ipow(long long base, long long e) {
    long long r = 1;
    for (long long i = 0; i < e; ++i) {
        if (base != 0 && r > std::numeric_limits<long long>::max() / base)
            throw std::overflow_error("integer power overflow");
        r *= base;
    }
    return r;
}

static void require_nonempty(const Seq& s) {
    if (s.empty()) throw std::invalid_argument("empty sequence");
}

Seq rotate(const Seq& s, long long i) {
    require_nonempty(s);
    long long n = static_cast<long long>(s.size());
    long long r = ((i % n) + n) % n;
    // rho moves the last symbol to the front, so rho^r moves the last r.
    Seq out(s.end() - r, s.end());
    out.insert(out.end(), s.begin(), s.end() - r);
    return out;
}

long long rotation_order(const Seq& s) {
    require_nonempty(s);
    long long n = static_cast<long long>(s.size());
    // Smallest period p dividing n; order is n/p.
    for (long long p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (long long i = p; i < n && periodic; ++i)
            periodic = (s[i] == s[i - p]);
        if (periodic) return n / p;
    }
    return 1;  // unreachable
}

Seq root(const Seq& s) {
    long long d = rotation_order(s);
    return Seq(s.begin(), s.begin() + static_cast<long long>(s.size()) / d);
}

bool is_primitive(const Seq& s) { return rotation_order(s) == 1; }

bool is_lyndon(const Seq& s) {
    if (!is_primitive(s)) return false;
    long long n = static_cast<long long>(s.size());
    for (long long i = 1; i < n; ++i)
        if (!(s < rotate(s, i))) return false;
    return true;
}

Seq least_rotation(const Seq& s) {
    require_nonempty(s);
    Seq best = s;
    for (size_t i = 1; i < s.size(); ++i) {
        Seq r = rotate(s, static_cast<long long>(i));
        if (r < best) best = r;
    }
    return best;
}

Seq concat_power(const Seq& s, long long d) {
    Seq out;
    out.reserve(s.size() * static_cast<size_t>(d));
    for (long long i = 0; i < d; ++i) out.insert(out.end(), s.begin(), s.end());
    return out;
}

MultiCyclicSeq::MultiCyclicSeq(std::vector<Seq> raw) {
    cycles.reserve(raw.size());
    for (auto& c : raw) {
        if (!is_primitive(c))
            throw std::invalid_argument("multicyclic sequence requires aperiodic cycles");
        cycles.push_back(least_rotation(c));  // Lyndon representative
    }
    std::sort(cycles.begin(), cycles.end());
}

size_t MultiCyclicSeq::total_length() const {
    size_t n = 0;
    for (const auto& c : cycles) n += c.size();
    return n;
}

MultiCyclicSeq MultiCyclicSeq::power(long long d) const {
    MultiCyclicSeq out;
    for (const auto& c : cycles)
        for (long long i = 0; i < d; ++i) out.cycles.push_back(c);
    std::sort(out.cycles.begin(), out.cycles.end());
    return out;
}

long long count_occurrences_cyclic(const CyclicSeq& c, const Seq& w) {
    require_nonempty(w);
    if (c.rep.empty()) throw std::invalid_argument("empty cycle");
    long long n = static_cast<long long>(c.rep.size());
    long long count = 0;
    for (long long j = 0; j < n; ++j) {
        bool match = true;
        for (size_t i = 0; i < w.size() && match; ++i)
            match = (w[i] == c.rep[(j + static_cast<long long>(i)) % n]);
        if (match) ++count;
    }
    return count;
}

long long count_occurrences_multicyclic(const MultiCyclicSeq& sigma, const Seq& w) {
    long long total = 0;
    for (const auto& c : sigma.cycles) total += count_occurrences_cyclic(CyclicSeq(c), w);
    return total;
}

static void require_alphabet(const Seq& s, long long q) {
    for (int a : s)
        if (a < 0 || a >= q) throw std::invalid_argument("symbol out of range");
}

// Tallies the k-mers read off every position of the cycle (wrapping, with
// positions reused when the cycle is shorter than k).
static void tally_cyclic_kmers(const Seq& c, long long k, std::map<Seq, long long>& counts) {
    long long n = static_cast<long long>(c.size());
    for (long long j = 0; j < n; ++j) {
        Seq kmer(static_cast<size_t>(k));
        for (long long i = 0; i < k; ++i) kmer[static_cast<size_t>(i)] = c[(j + i) % n];
        ++counts[kmer];
    }
}

static bool counts_are_exactly_m(const std::map<Seq, long long>& counts, const Params& p) {
    if (static_cast<long long>(counts.size()) != p.qk()) return false;
    for (const auto& [kmer, c] : counts)
        if (c != p.m) return false;
    return true;
}

bool is_member_linear(const Seq& s, const Params& p) {
    require_alphabet(s, p.q);
    if (static_cast<long long>(s.size()) != p.ell_linear()) return false;
    std::map<Seq, long long> counts;
    for (size_t j = 0; j + static_cast<size_t>(p.k) <= s.size(); ++j)
        ++counts[Seq(s.begin() + j, s.begin() + j + p.k)];
    return counts_are_exactly_m(counts, p);
}

bool is_member_linearized(const Seq& s, const Params& p) {
    require_alphabet(s, p.q);
    if (static_cast<long long>(s.size()) != p.ell()) return false;
    std::map<Seq, long long> counts;
    tally_cyclic_kmers(s, p.k, counts);
    return counts_are_exactly_m(counts, p);
}

bool is_member_cyclic(const CyclicSeq& c, const Params& p) {
    return is_member_linearized(c.rep, p);
}

bool is_member_multicyclic(const MultiCyclicSeq& sigma, const Params& p) {
    for (const auto& c : sigma.cycles) require_alphabet(c, p.q);
    if (static_cast<long long>(sigma.total_length()) != p.ell()) return false;
    std::map<Seq, long long> counts;
    for (const auto& c : sigma.cycles) tally_cyclic_kmers(c, p.k, counts);
    return counts_are_exactly_m(counts, p);
}

Seq linearized_to_linear(const Seq& s, const Params& p) {
    if (!is_member_linearized(s, p))
        throw std::invalid_argument("not a multi de Bruijn sequence");
    Seq out = s;
    out.insert(out.end(), s.begin(), s.begin() + (p.k - 1));
    return out;
}

Seq linear_to_linearized(const Seq& s, const Params& p) {
    if (!is_member_linear(s, p))
        throw std::invalid_argument("not a multi de Bruijn sequence");
    return Seq(s.begin(), s.end() - (p.k - 1));
}

}  // namespace multidb
