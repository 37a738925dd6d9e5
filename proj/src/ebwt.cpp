#include "multidb/ebwt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace multidb {

Seq EbwtTable::last_column() const {
    Seq out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.back());
    return out;
}

namespace {

// One table row, unmaterialized: rotation j of cycle s extended periodically.
struct RowRef {
    const Seq* cycle;
    long long rot;  // rho^rot

    int at(long long t) const {
        long long n = static_cast<long long>(cycle->size());
        return (*cycle)[static_cast<size_t>(((n - rot) % n + t) % n)];
    }
};

// Two periodic rows agree everywhere iff they agree on lcm of their periods.
bool row_less(const RowRef& a, const RowRef& b) {
    long long la = static_cast<long long>(a.cycle->size());
    long long lb = static_cast<long long>(b.cycle->size());
    long long span = std::lcm(la, lb);
    for (long long t = 0; t < span; ++t) {
        int x = a.at(t), y = b.at(t);
        if (x != y) return x < y;
    }
    return false;
}

std::vector<RowRef> sorted_rows(const MultiCyclicSeq& sigma) {
    std::vector<RowRef> rows;
    for (const auto& c : sigma.cycles)
        for (long long j = 0; j < static_cast<long long>(c.size()); ++j)
            rows.push_back({&c, j});
    std::stable_sort(rows.begin(), rows.end(), row_less);
    return rows;
}

long long table_width(const MultiCyclicSeq& sigma) {
    long long c = 1;
    for (const auto& cyc : sigma.cycles) {
        c = std::lcm(c, static_cast<long long>(cyc.size()));
        if (c > 1'000'000) throw std::length_error("ebwt table width exceeds guard");
    }
    return c;
}

}  // namespace

Seq ebwt(const MultiCyclicSeq& sigma) {
    if (sigma.cycles.empty()) return {};
    long long c = table_width(sigma);
    Seq out;
    for (const auto& row : sorted_rows(sigma)) out.push_back(row.at(c - 1));
    return out;
}

EbwtTable ebwt_table(const MultiCyclicSeq& sigma) {
    EbwtTable table;
    if (sigma.cycles.empty()) return table;
    long long c = table_width(sigma);
    for (const auto& row : sorted_rows(sigma)) {
        Seq r(static_cast<size_t>(c));
        for (long long t = 0; t < c; ++t) r[static_cast<size_t>(t)] = row.at(t);
        table.rows.push_back(std::move(r));
    }
    return table;
}

StandardPermutation standard_permutation(const Seq& w) {
    int q = 0;
    for (int a : w) q = std::max(q, a + 1);
    StandardPermutation sp;
    sp.pi.resize(w.size());
    sp.bucket_start.assign(static_cast<size_t>(q) + 1, 0);
    for (int a : w) ++sp.bucket_start[static_cast<size_t>(a) + 1];
    for (int i = 0; i < q; ++i) sp.bucket_start[i + 1] += sp.bucket_start[i];
    std::vector<long long> next(sp.bucket_start.begin(), sp.bucket_start.end() - 1);
    for (size_t pos = 0; pos < w.size(); ++pos)
        sp.pi[static_cast<size_t>(next[static_cast<size_t>(w[pos])]++)] =
            static_cast<long long>(pos);
    return sp;
}

MultiCyclicSeq inverse_ebwt(const Seq& w) {
    StandardPermutation sp = standard_permutation(w);
    size_t n = w.size();
    // Entry e carries the bucket symbol i with H_i <= e < H_{i+1}.
    std::vector<int> symbol(n);
    for (size_t i = 0; i + 1 < sp.bucket_start.size(); ++i)
        for (long long e = sp.bucket_start[i]; e < sp.bucket_start[i + 1]; ++e)
            symbol[static_cast<size_t>(e)] = static_cast<int>(i);

    std::vector<Seq> cycles;
    std::vector<bool> seen(n, false);
    for (size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        Seq word;
        size_t e = start;
        do {
            seen[e] = true;
            word.push_back(symbol[e]);
            e = static_cast<size_t>(sp.pi[e]);
        } while (e != start);
        cycles.push_back(std::move(word));
    }
    return MultiCyclicSeq(std::move(cycles));
}

EbwtTable inverse_ebwt_table(const Seq& w) {
    if (w.empty()) throw std::invalid_argument("empty sequence");
    EbwtTable table;
    table.rows.assign(w.size(), Seq{});
    for (long long c = 1;; ++c) {
        if (c > 1'000'000) throw std::length_error("inverse ebwt table width exceeds guard");
        for (size_t i = 0; i < w.size(); ++i)
            table.rows[i].insert(table.rows[i].begin(), w[i]);
        std::stable_sort(table.rows.begin(), table.rows.end());
        if (table.last_column() == w) return table;
    }
}

MultiCyclicSeq multicyclic_from_table(const EbwtTable& table) {
    std::vector<Seq> cycles;
    for (const auto& r : table.rows) {
        Seq t = root(r);
        if (is_lyndon(t)) cycles.push_back(std::move(t));
    }
    return MultiCyclicSeq(std::move(cycles));
}

Seq bwt(const Seq& s) {
    if (s.empty()) throw std::invalid_argument("empty sequence");
    long long n = static_cast<long long>(s.size());
    std::vector<Seq> rows;
    rows.reserve(static_cast<size_t>(n));
    for (long long j = 0; j < n; ++j) rows.push_back(rotate(s, j));
    std::stable_sort(rows.begin(), rows.end());
    Seq out;
    for (const auto& r : rows) out.push_back(r.back());
    return out;
}

std::optional<Seq> inverse_bwt(const Seq& w) {
    MultiCyclicSeq sigma = inverse_ebwt(w);
    if (sigma.cycles.empty()) return std::nullopt;
    const Seq& t = sigma.cycles.front();
    for (const auto& c : sigma.cycles)
        if (c != t) return std::nullopt;
    return concat_power(t, static_cast<long long>(sigma.cycles.size()));
}

Seq power_word(const Seq& w, long long d) {
    Seq out;
    out.reserve(w.size() * static_cast<size_t>(d));
    for (int a : w)
        for (long long i = 0; i < d; ++i) out.push_back(a);
    return out;
}

bool is_nod(const Seq& w) {
    long long n = static_cast<long long>(w.size());
    for (long long i = 2; i <= n; ++i) {
        if (n % i != 0) continue;
        bool blocky = true;
        for (long long b = 0; b < n && blocky; b += i)
            for (long long t = 1; t < i && blocky; ++t)
                blocky = (w[static_cast<size_t>(b + t)] == w[static_cast<size_t>(b)]);
        if (blocky) return false;
    }
    return true;
}

}  // namespace multidb
