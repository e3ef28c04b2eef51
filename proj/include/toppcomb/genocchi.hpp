#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toppcomb/count.hpp"
#include "toppcomb/perm.hpp"

namespace toppcomb {

// Boustrophedon triangle whose extreme entries carry the Genocchi numbers of the
// first and second kind. Row n holds columns k = 2 .. floor((n+3)/2), seeded with
// a single 1 in row 1; even rows accumulate from the right, odd rows from the left.
class SeidelTriangle {
public:
    explicit SeidelTriangle(int rows);

    int rows() const { return static_cast<int>(rows_.size()); }
    static int max_col(int n) { return (n + 3) / 2; }
    // Zero outside the band.
    Count at(int n, int k) const;

private:
    std::vector<std::vector<Count>> rows_;  // rows_[n-1][k-2]
};

Count genocchi_first(int n);      // g_{2n}: 1, 1, 3, 17, 155, ...
Count genocchi_median(int n);     // H_{2n-1}: 1, 2, 8, 56, 608, ...
Count normalized_median(int n);   // h_n = H_{2n+1} / 2^n; throws if the division is not exact

// A permutation of [n] is collapsed when every value k sits in the position band
// lo(k)..hi(k) with hi(k) = ceil(n/2)+floor(k/2) and lo(k) = ceil(k/2) for odd n,
// 1+floor(k/2) for even n.
class CollapsedPermutation {
public:
    explicit CollapsedPermutation(Permutation p);  // validates the bands
    const Permutation& perm() const { return perm_; }
    static bool is_collapsed(const Permutation& p);

    friend bool operator==(const CollapsedPermutation&, const CollapsedPermutation&) = default;

private:
    Permutation perm_;
};

// All collapsed permutations of [n], lexicographic. |result| is a Genocchi number:
// g_{2n+4} for odd sizes 2n+1, H_{2n-1} for even sizes 2n.
std::vector<CollapsedPermutation> enumerate_collapsed(int n);

// 2n x n grid with one point per row, two points per column, and column j only
// in rows j..n+j.
class DellacConfiguration {
public:
    DellacConfiguration(int order, std::vector<std::pair<int, int>> points);  // validates
    int order() const { return order_; }
    // Sorted (row, column) pairs, 1-indexed.
    const std::vector<std::pair<int, int>>& points() const { return points_; }
    std::string str() const;  // "(1,1)(2,2)(3,1)..."

    friend bool operator==(const DellacConfiguration&, const DellacConfiguration&) = default;

private:
    int order_ = 0;
    std::vector<std::pair<int, int>> points_;
};

std::vector<DellacConfiguration> enumerate_dellac(int n);

// Interleaving bijection between collapsed permutations of odd size 2n+1 and
// permutations of [2n+1] with excedance set {1,3,...,2n-1}.
Permutation collapsed_to_excedance(const CollapsedPermutation& p);
CollapsedPermutation excedance_to_collapsed(const Permutation& s);

// Bijection between collapsed permutations of even size 2n with every 2i left of
// 2i+1 and Dellac configurations of order n-1.
DellacConfiguration collapsed_to_dellac(const CollapsedPermutation& p);
CollapsedPermutation dellac_to_collapsed(const DellacConfiguration& c);

}
