#pragma once

#include <vector>

#include "toppcomb/count.hpp"

namespace toppcomb {

Count factorial(int n);
Count binomial(int n, int k);
// Multinomial coefficient; the parts must sum to top.
Count multinomial(int top, const std::vector<int>& parts);

// Acyclic orientations of K_{m,n} with no sink in the m-side:
// n! n^m - sum_{j=1}^{n-1} (-1)^{j-1} (n-j)! (n-j)^m S(n, n-j).
Count count_R_bipartite(int m, int n);

// Acyclic orientations of the complete multipartite graph with the given parts
// (any N >= 1; a single part means an edgeless graph):
// sum over k_i in [1..n_i] for i >= 2 of
//   (-1)^{|n|-|k|} (1+|k|)^{n_1} |k|! prod S(n_i, k_i),
// where |n| and |k| sum the entries from the second part on.
Count count_ao_multipartite(const std::vector<int>& parts);

// Acyclic orientations of that graph counted up to the action that permutes
// same-part right-side vertices freely: (1+|n|)^{n_1} * multinomial(|n|; n_2..n_N).
Count count_ao_unlabeled(const std::vector<int>& parts);

// Unique-sink acyclic orientations with a fixed sink in the first part; the part
// list is the actual one (first entry >= 1), the formula runs with n_1 = parts[0]-1
// and |k|^{n_1} in place of (1+|k|)^{n_1}. Independent of which part is first.
Count count_auso_multipartite(const std::vector<int>& parts);

// The alternating binomial identity that sits under the AO count: replacing one
// part's size by every smaller value with sign must cancel the count itself.
// Zero-size parts are dropped; the empty part list counts 1.
bool stanley_recurrence_check(const std::vector<int>& parts);

// Part sizes of the Turan graph T(n, r): r parts, n mod r of size ceil(n/r).
std::vector<int> turan_parts(int n, int r);

// u_{n,r} = unique-sink acyclic orientations of T(n, r) with a fixed sink.
// Uses the closed form when n - r <= r, the part-vector sum otherwise; the
// two routes agree on the overlap (cross-checked by the verification suites).
Count turan_u(int n, int r);

// Closed form for u_{r+k,r} when 0 <= k <= r: (r-1)! at k = 0, otherwise
// sum over (j_2..j_k) in {1,2}^{k-1} of (-1)^s (s+r-k)(s+r-k)! where
// s = j_2 + ... + j_k (the empty sum at k = 1 leaves the single term (r-1)(r-1)!).
Count turan_u_closed(int r, int k);

// k-th forward difference of (n-1)! evaluated so that delta_factorial(k, r+k)
// equals u_{r+k,r} for r >= k: sum_{i=0}^{k} (-1)^i C(k,i) (n-i-1)!.
Count delta_factorial(int k, int n);

}
