#include "toppcomb/toppling.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace toppcomb {

namespace {

// Flat two-slot board reused across simulations. lo/hi hold chip labels, 0 = empty;
// lo < hi whenever both slots are filled.
struct Board {
    int n = -1;
    int size = 0;
    int off = 0;  // array index of position 0
    std::vector<int> lo, hi;

    void prepare(int instance) {
        n = instance;
        off = (n + 1) / 2;
        size = n + 2;  // positions -floor((n+1)/2) .. floor(n/2)+1
        lo.assign(size, 0);
        hi.assign(size, 0);
    }

    void load(const int* word, int r) {
        std::fill(lo.begin(), lo.end(), 0);
        std::fill(hi.begin(), hi.end(), 0);
        const int first = off - (n - 1) / 2;
        for (int i = 0; i < n; ++i) {
            const int v = word[i];
            lo[first + i] = v < r ? v : v + 1;
        }
        // chip r joins the resident of the origin
        const int o = off;
        if (lo[o] < r) {
            hi[o] = r;
        } else {
            hi[o] = lo[o];
            lo[o] = r;
        }
    }

    bool doubled(int i) const { return hi[i] != 0; }

    void drop(int i, int label) {
        if (lo[i] == 0) {
            lo[i] = label;
        } else if (lo[i] < label) {
            hi[i] = label;
        } else {
            hi[i] = lo[i];
            lo[i] = label;
        }
    }

    // Smaller chip one site left, larger one site right.
    void topple(int i) {
        const int a = lo[i], b = hi[i];
        lo[i] = hi[i] = 0;
        drop(i - 1, a);
        drop(i + 1, b);
    }

    // One deterministic pass from a pass boundary; 0 when frozen.
    int pass() {
        const int o = off;
        if (!doubled(o)) return 0;
        int topples = 1;
        topple(o);
        for (int i = o - 1; i > 0 && doubled(i); --i, ++topples) topple(i);
        for (int i = o + 1; i + 1 < size && doubled(i); ++i, ++topples) topple(i);
        return topples;
    }

    bool any_doubled() const {
        for (int i = 0; i < size; ++i)
            if (hi[i]) return true;
        return false;
    }

    // True iff the chips read 1..n+1 left to right.
    bool sorted() const {
        int expect = 1;
        for (int i = 0; i < size; ++i)
            if (lo[i] && lo[i] != expect++) return false;
        return expect == n + 2;
    }

    std::vector<int> read() const {
        std::vector<int> out;
        out.reserve(n + 1);
        for (int i = 0; i < size; ++i)
            if (lo[i]) out.push_back(lo[i]);
        return out;
    }
};

bool board_r_toppleable(Board& b, const int* word, int n, int r) {
    if (b.n != n) b.prepare(n);
    b.load(word, r);
    while (b.pass() != 0) {
    }
    return b.sorted();
}

bool board_toppleable(Board& b, const int* word, int n) {
    for (int r = 1; r <= n + 1; ++r)
        if (!board_r_toppleable(b, word, n, r)) return false;
    return true;
}

// Scans every word of S_n with first entry in [first_lo, first_hi], counting those
// accepted by pred(word).
template <typename Pred>
unsigned long long scan_words(int n, int first_lo, int first_hi, Pred pred) {
    unsigned long long count = 0;
    std::vector<int> word(n);
    for (int first = first_lo; first <= first_hi; ++first) {
        word[0] = first;
        int k = 1;
        for (int v = 1; v <= n; ++v)
            if (v != first) word[k++] = v;
        do {
            if (pred(word)) ++count;
        } while (std::next_permutation(word.begin() + 1, word.end()));
    }
    return count;
}

template <typename Pred>
Count parallel_scan(int n, int workers, Pred pred) {
    workers = std::max(1, std::min(workers, n));
    if (workers == 1)
        return scan_words(n, 1, n, pred);
    std::vector<unsigned long long> partial(workers, 0);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        const int lo = 1 + w * n / workers;
        const int hi = (w + 1) * n / workers;
        pool.emplace_back([&partial, w, n, lo, hi, pred] { partial[w] = scan_words(n, lo, hi, pred); });
    }
    for (auto& t : pool) t.join();
    Count total = 0;
    for (auto c : partial) total += c;
    return total;
}

}  // namespace

ChipConfiguration::ChipConfiguration(int n) : n_(n), offset_((n + 1) / 2), sites_(n + 2, {0, 0}) {}

int ChipConfiguration::count_at(int pos) const {
    if (pos < min_pos() || pos > max_pos()) return 0;
    const auto& s = sites_[idx(pos)];
    return (s[0] != 0) + (s[1] != 0);
}

std::vector<int> ChipConfiguration::chips_at(int pos) const {
    std::vector<int> out;
    if (pos < min_pos() || pos > max_pos()) return out;
    const auto& s = sites_[idx(pos)];
    if (s[0]) out.push_back(s[0]);
    if (s[1]) out.push_back(s[1]);
    return out;
}

bool ChipConfiguration::frozen() const {
    for (const auto& s : sites_)
        if (s[1]) return false;
    return true;
}

void ChipConfiguration::add_chip(int pos, int label) {
    auto& s = sites_[idx(pos)];
    if (s[0] == 0) {
        s[0] = label;
    } else if (s[0] < label) {
        s[1] = label;
    } else {
        s[1] = s[0];
        s[0] = label;
    }
}

void ChipConfiguration::topple_at(int pos) {
    if (pos < min_pos() || pos > max_pos() || sites_[idx(pos)][1] == 0)
        throw std::invalid_argument("topple_at: site does not hold two chips");
    auto& s = sites_[idx(pos)];
    const int a = s[0], b = s[1];
    s = {0, 0};
    add_chip(pos - 1, a);
    add_chip(pos + 1, b);
}

std::string ChipConfiguration::str() const {
    std::string out = "(";
    for (int pos = min_pos(); pos <= max_pos(); ++pos) {
        if (pos != min_pos()) out += ',';
        const auto& s = sites_[idx(pos)];
        if (s[1]) {
            out += '(' + std::to_string(s[0]) + ',' + std::to_string(s[1]) + ')';
        } else if (s[0]) {
            out += std::to_string(s[0]);
        } else {
            out += '_';
        }
    }
    out += ')';
    return out;
}

ChipConfiguration make_config(const Permutation& p, int r) {
    const int n = p.size();
    if (r < 1 || r > n + 1) throw std::invalid_argument("make_config: r out of range");
    ChipConfiguration c(n);
    const int first = -(n - 1) / 2;
    for (int i = 1; i <= n; ++i) {
        const int v = p.at(i);
        c.add_chip(first + i - 1, v < r ? v : v + 1);
    }
    c.add_chip(0, r);
    return c;
}

ChipConfiguration topple_once(const ChipConfiguration& c, int pos) {
    ChipConfiguration out = c;
    out.topple_at(pos);
    return out;
}

ChipConfiguration run_pass(const ChipConfiguration& c) {
    if (c.frozen()) return c;
    if (c.count_at(0) != 2)
        throw std::invalid_argument("run_pass: not a pass boundary (origin not doubled)");
    ChipConfiguration out = c;
    out.topple_at(0);
    for (int pos = -1; pos >= out.min_pos() && out.count_at(pos) == 2; --pos) out.topple_at(pos);
    for (int pos = 1; pos <= out.max_pos() && out.count_at(pos) == 2; ++pos) out.topple_at(pos);
    return out;
}

ToppleOutcome run_toppling(const Permutation& p, int r, const ToppleOptions& options) {
    const int n = p.size();
    const int cap = n * (n + 3);
    ChipConfiguration c = make_config(p, r);
    int topples = 0;
    std::vector<ChipConfiguration> trace;

    if (options.schedule == ToppleSchedule::Pass) {
        while (!c.frozen()) {
            c.topple_at(0);
            ++topples;
            for (int pos = -1; pos >= c.min_pos() && c.count_at(pos) == 2; --pos, ++topples)
                c.topple_at(pos);
            for (int pos = 1; pos <= c.max_pos() && c.count_at(pos) == 2; ++pos, ++topples)
                c.topple_at(pos);
            if (options.keep_trace) trace.push_back(c);
            if (topples > cap) throw std::runtime_error("run_toppling: topple cap exceeded");
        }
    } else {
        std::mt19937_64 rng(options.seed);
        while (!c.frozen()) {
            std::vector<int> candidates;
            for (int pos = c.min_pos(); pos <= c.max_pos(); ++pos)
                if (c.count_at(pos) == 2) candidates.push_back(pos);
            std::uniform_int_distribution<size_t> pick(0, candidates.size() - 1);
            c.topple_at(candidates[pick(rng)]);
            if (++topples > cap) throw std::runtime_error("run_toppling: topple cap exceeded");
        }
    }

    std::vector<int> word;
    for (int pos = c.min_pos(); pos <= c.max_pos(); ++pos)
        for (int v : c.chips_at(pos)) word.push_back(v);
    ToppleOutcome out{Permutation(std::move(word)), topples, std::move(trace)};
    return out;
}

bool is_r_toppleable(const Permutation& p, int r) {
    if (r < 1 || r > p.size() + 1) throw std::invalid_argument("is_r_toppleable: r out of range");
    Board b;
    return board_r_toppleable(b, p.word().data(), p.size(), r);
}

bool is_toppleable(const Permutation& p) {
    Board b;
    return board_toppleable(b, p.word().data(), p.size());
}

bool is_structurally_toppleable(const Permutation& p) {
    const int n = p.size();
    const int m = n / 2;
    const int half = (n + 1) / 2;  // last index of the "upper bound" side
    for (int i = 1; i <= half; ++i)
        if (p.at(i) > m + i) return false;
    const int shift = (n % 2 == 1) ? m : m - 1;
    for (int i = half + 1; i <= n; ++i)
        if (p.at(i) < i - shift) return false;
    return true;
}

Count count_r_toppleable(int n, int r, int workers) {
    if (n < 1) throw std::invalid_argument("count_r_toppleable: n must be positive");
    if (r < 1 || r > n + 1) throw std::invalid_argument("count_r_toppleable: r out of range");
    return parallel_scan(n, workers, [n, r, b = Board{}](const std::vector<int>& w) mutable {
        return board_r_toppleable(b, w.data(), n, r);
    });
}

Count count_toppleable_by_simulation(int n, int workers) {
    if (n < 1) throw std::invalid_argument("count_toppleable_by_simulation: n must be positive");
    return parallel_scan(n, workers, [n, b = Board{}](const std::vector<int>& w) mutable {
        return board_toppleable(b, w.data(), n);
    });
}

}
