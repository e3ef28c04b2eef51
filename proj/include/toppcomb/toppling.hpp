#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "toppcomb/count.hpp"
#include "toppcomb/perm.hpp"

namespace toppcomb {

// Labeled chips on the segment L_n = {-floor((n+1)/2), ..., floor(n/2)+1}.
// No site ever holds more than two chips; labels come from [n+1].
class ChipConfiguration {
public:
    int instance_size() const { return n_; }
    int min_pos() const { return -offset_; }
    int max_pos() const { return n_ / 2 + 1; }
    int count_at(int pos) const;
    std::vector<int> chips_at(int pos) const;  // ascending
    bool frozen() const;                       // no doubly occupied site

    // Topples a doubly occupied site: the smaller chip moves one site left,
    // the larger one site right. Throws if the site does not hold two chips.
    void topple_at(int pos);

    // "(_,4,(1,2),5,3,_)": every site of L_n, '_' for empty.
    std::string str() const;

    friend bool operator==(const ChipConfiguration&, const ChipConfiguration&) = default;

private:
    explicit ChipConfiguration(int n);
    int idx(int pos) const { return pos + offset_; }
    void add_chip(int pos, int label);

    int n_ = 0;
    int offset_ = 0;
    std::vector<std::array<int, 2>> sites_;  // {0,0} empty, {a,0} single, {a,b} with a<b

    friend ChipConfiguration make_config(const Permutation&, int);
};

// Places the entries of p at positions -floor((n-1)/2)..floor(n/2), relabeling
// values >= r up by one, and drops chip r on the origin. Requires 1 <= r <= n+1.
ChipConfiguration make_config(const Permutation& p, int r);

// Functional single topple.
ChipConfiguration topple_once(const ChipConfiguration& c, int pos);

// One pass of the deterministic schedule: topple the origin, then sweep the
// doubled sites outward on both flanks, leaving the origin alone until the next
// pass. No-op on frozen configurations; only pass-boundary configurations (as
// produced by make_config or previous passes) are otherwise meaningful.
ChipConfiguration run_pass(const ChipConfiguration& c);

enum class ToppleSchedule { Pass, Random };

struct ToppleOptions {
    ToppleSchedule schedule = ToppleSchedule::Pass;
    std::uint64_t seed = 0;   // random schedule only
    bool keep_trace = false;  // pass schedule only: snapshot after every pass
};

struct ToppleOutcome {
    Permutation result;  // the permutation of [n+1] read off the frozen configuration
    int topple_count = 0;
    std::vector<ChipConfiguration> pass_trace;
};

// Runs the evolution of make_config(p, r) to its frozen configuration.
// The outcome is schedule-independent; a hard cap of n*(n+3) topples guards
// against runaway schedules.
ToppleOutcome run_toppling(const Permutation& p, int r, const ToppleOptions& options = {});

bool is_r_toppleable(const Permutation& p, int r);
// True iff p is r-toppleable for every r in [n+1].
bool is_toppleable(const Permutation& p);

// The two-sided band test: with m = floor(n/2), requires p_i <= m+i on the left
// half and p_i >= i-m (n odd) resp. i-m+1 (n even) on the right half. Equivalent
// to toppleability at the middle value r = floor(n/2)+1.
bool is_structurally_toppleable(const Permutation& p);

// Exhaustive scans over S_n by simulation. Workers partition the word space on
// the first entry; the merge is a deterministic sum.
Count count_r_toppleable(int n, int r, int workers = 1);
Count count_toppleable_by_simulation(int n, int workers = 1);

}
