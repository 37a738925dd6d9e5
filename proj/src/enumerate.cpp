#include "multidb/enumerate.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "multidb/ebwt.hpp"

namespace multidb {

namespace {

void check_budget(const Count& space, const SearchBudget& budget) {
    if (space > pow_count(Count(2), budget.max_space_bits)) {
        long long bits = space == 0 ? 0 : static_cast<long long>(boost::multiprecision::msb(space)) + 1;
        throw std::length_error("search space needs " + std::to_string(bits) +
                                " bits, budget allows " + std::to_string(budget.max_space_bits));
    }
}

// Pruned base-q depth-first scan over linearizations with a fixed k-prefix,
// ascending. Emits every s whose cycle has each k-mer exactly m times.
class PrunedScan {
public:
    PrunedScan(const Params& p, const Seq& prefix, bool short_kmer_pruning)
        : p_(p), ell_(p.ell()) {
        s_.assign(static_cast<size_t>(ell_), 0);
        std::copy(prefix.begin(), prefix.end(), s_.begin());
        long long lo = short_kmer_pruning ? 1 : p.k;
        for (long long L = lo; L <= p.k; ++L) {
            trackers_.push_back({L,
                                 p.m * Params::ipow(p.q, p.k - L),
                                 std::vector<long long>(static_cast<size_t>(Params::ipow(p.q, L)), 0)});
        }
    }

    // sink returns false to stop; run returns false when stopped early.
    bool run(const std::function<bool(const Seq&)>& sink) {
        // Tally the windows fully inside the prefix.
        for (long long j = 0; j < p_.k; ++j)
            if (!place(j)) { unplace_through(j - 1); return true; }
        return descend(p_.k, sink);
    }

private:
    struct Tracker {
        long long len;
        long long threshold;  // m * q^(k - len)
        std::vector<long long> counts;
    };

    long long encode(long long start, long long len) const {
        long long code = 0;
        for (long long t = 0; t < len; ++t)
            code = code * p_.q + s_[static_cast<size_t>((start + t) % ell_)];
        return code;
    }

    // Counts the windows ending at position j (non-wrapping). Returns false
    // and rolls back its own increments if a count exceeds its threshold.
    bool place(long long j) {
        for (size_t ti = 0; ti < trackers_.size(); ++ti) {
            Tracker& tr = trackers_[ti];
            if (j - tr.len + 1 < 0) continue;
            long long code = encode(j - tr.len + 1, tr.len);
            if (++tr.counts[static_cast<size_t>(code)] > tr.threshold) {
                --tr.counts[static_cast<size_t>(code)];
                rollback(j, ti);
                return false;
            }
        }
        return true;
    }

    void rollback(long long j, size_t upto) {
        for (size_t ti = 0; ti < upto; ++ti) {
            Tracker& tr = trackers_[ti];
            if (j - tr.len + 1 < 0) continue;
            --tr.counts[static_cast<size_t>(encode(j - tr.len + 1, tr.len))];
        }
    }

    void unplace(long long j) { rollback(j, trackers_.size()); }

    void unplace_through(long long j) {
        for (long long t = j; t >= 0; --t) unplace(t);
    }

    // True while the cyclic closure keeps every window within threshold.
    // Increments stay applied on success; rolled back by close_undo.
    bool close() {
        for (size_t ti = 0; ti < trackers_.size(); ++ti) {
            Tracker& tr = trackers_[ti];
            for (long long start = ell_ - tr.len + 1; start < ell_; ++start) {
                if (start < 0) continue;  // window already counted linearly
                long long code = encode(start, tr.len);
                if (++tr.counts[static_cast<size_t>(code)] > tr.threshold) {
                    --tr.counts[static_cast<size_t>(code)];
                    close_undo(ti, start - 1);
                    return false;
                }
            }
        }
        return true;
    }

    void close_undo(size_t last_tracker, long long last_start) {
        for (size_t ti = 0; ti <= last_tracker; ++ti) {
            Tracker& tr = trackers_[ti];
            long long stop = (ti == last_tracker) ? last_start : ell_ - 1;
            for (long long start = ell_ - tr.len + 1; start <= stop; ++start) {
                if (start < 0) continue;
                --tr.counts[static_cast<size_t>(encode(start, tr.len))];
            }
        }
    }

    bool descend(long long j, const std::function<bool(const Seq&)>& sink) {
        if (j == ell_) {
            if (!close()) return true;
            // All l windows counted, none above m, so all are exactly m.
            bool go = sink(s_);
            close_undo(trackers_.size() - 1, ell_ - 1);
            return go;
        }
        for (int d = 0; d < p_.q; ++d) {
            s_[static_cast<size_t>(j)] = d;
            if (!place(j)) continue;
            bool go = descend(j + 1, sink);
            unplace(j);
            if (!go) return false;
        }
        s_[static_cast<size_t>(j)] = 0;
        return true;
    }

    Params p_;
    long long ell_;
    Seq s_;
    std::vector<Tracker> trackers_;
};

bool is_least_rotation(const Seq& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (rotate(s, static_cast<long long>(i)) < s) return false;
    return true;
}

template <class Sink>
auto with_limit(const SearchBudget& budget, const Sink& sink) {
    auto remaining = std::make_shared<long long>(budget.limit.value_or(-1));
    return [remaining, sink](const auto& item) {
        if (*remaining == 0) return false;
        bool go = sink(item);
        if (*remaining > 0 && --*remaining == 0) return false;
        return go;
    };
}

void scan_budget_check(const Params& p, const SearchBudget& budget) {
    check_budget(pow_count(Count(p.q), p.ell() - p.k + 1), budget);
}

}  // namespace

void enumerate_cyclic(const Params& p, const SearchBudget& budget, const CyclicSink& sink) {
    auto limited = with_limit(budget, sink);
    if (p.q == 1) {
        limited(CyclicSeq(Seq(static_cast<size_t>(p.m), 0)));
        return;
    }
    scan_budget_check(p, budget);
    PrunedScan scan(p, Seq(static_cast<size_t>(p.k), 0), budget.short_kmer_pruning);
    scan.run([&](const Seq& s) {
        if (!is_least_rotation(s)) return true;
        return limited(CyclicSeq(s));
    });
}

void enumerate_linearized_starting(const Params& p, const Seq& y, const SearchBudget& budget,
                                   const SeqSink& sink) {
    if (static_cast<long long>(y.size()) != p.k)
        throw std::invalid_argument("initial k-mer has wrong length");
    for (int a : y)
        if (a < 0 || a >= p.q) throw std::invalid_argument("symbol out of range");
    auto limited = with_limit(budget, sink);
    if (p.q == 1) {
        limited(Seq(static_cast<size_t>(p.m), 0));
        return;
    }
    scan_budget_check(p, budget);
    PrunedScan scan(p, y, budget.short_kmer_pruning);
    scan.run(limited);
}

void enumerate_linear(const Params& p, const SearchBudget& budget, const SeqSink& sink) {
    auto limited = with_limit(budget, sink);
    if (p.q == 1) {
        limited(Seq(static_cast<size_t>(p.m + p.k - 1), 0));
        return;
    }
    scan_budget_check(p, budget);
    Seq y(static_cast<size_t>(p.k), 0);
    bool stopped = false;
    do {
        PrunedScan scan(p, y, budget.short_kmer_pruning);
        stopped = !scan.run([&](const Seq& s) {
            Seq lin = s;
            lin.insert(lin.end(), s.begin(), s.begin() + (p.k - 1));
            return limited(lin);
        });
        // Next initial k-mer, ascending.
        long long j = p.k - 1;
        while (j >= 0 && y[static_cast<size_t>(j)] == p.q - 1) y[static_cast<size_t>(j--)] = 0;
        if (j < 0) break;
        ++y[static_cast<size_t>(j)];
    } while (!stopped);
}

std::vector<Seq> codewords(long long m, long long q) {
    Seq base;
    for (int a = 0; a < q; ++a) base.insert(base.end(), static_cast<size_t>(m), a);
    std::vector<Seq> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

void enumerate_multicyclic(const Params& p, const SearchBudget& budget,
                           const MultiCyclicSink& sink) {
    std::vector<Seq> cw = codewords(p.m, p.q);
    long long n = p.qk1();
    check_budget(pow_count(Count(static_cast<long long>(cw.size())), n), budget);
    auto limited = with_limit(budget, sink);
    std::vector<size_t> idx(static_cast<size_t>(n), 0);
    for (;;) {
        Seq w;
        for (size_t i : idx) w.insert(w.end(), cw[i].begin(), cw[i].end());
        if (!limited(inverse_ebwt(w))) return;
        long long j = n - 1;
        while (j >= 0 && idx[static_cast<size_t>(j)] == cw.size() - 1)
            idx[static_cast<size_t>(j--)] = 0;
        if (j < 0) return;
        ++idx[static_cast<size_t>(j)];
    }
}

}  // namespace multidb
