#pragma once

#include <vector>

#include "toppcomb/count.hpp"
#include "toppcomb/perm.hpp"

namespace toppcomb {

// Permutations of [n] whose excedance set is exactly {1, ..., m} (empty for m = 0).
struct ExcedanceClass {
    int n = 0;
    int m = 0;
};

// All members of the class in lexicographic order of the word.
std::vector<Permutation> enumerate_class(const ExcedanceClass& cls);

// Stirling number of the second kind, exact.
Count stirling2(int n, int k);

// |{p in S_{m+rest} : excedance set of p = {1..m}}| via the alternating
// Stirling sum; rest >= 1.
Count count_class_formula(int m, int rest);

// Number of toppleable permutations of [n]: the class count at m = floor((n-1)/2).
Count toppleable_count(int n);

}
