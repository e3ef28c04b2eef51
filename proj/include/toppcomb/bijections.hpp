#pragma once

#include "toppcomb/graph.hpp"
#include "toppcomb/perm.hpp"

namespace toppcomb {

// Index/value flip carrying the structurally toppleable permutations of [n] onto
// the permutations with excedance set {1..floor((n-1)/2)}. The same formula is its
// own inverse; the two names differ only in which precondition they check.
Permutation topp_to_exc(const Permutation& p);
Permutation exc_to_topp(const Permutation& s);

// From a permutation with excedance set {1..m} (m inferred) to an acyclic
// orientation of K_{m,n-m} with no sink in the left part 1..m: write the canonical
// cycle form, erase the parentheses, read the word as a topological sort.
Orientation exc_to_auso(const Permutation& s);

// Inverse: take the unique topological sort with incomparable left-part vertices
// increasing and incomparable right-part vertices decreasing, then cut the word
// before each left-to-right minimum to recover the cycles. The graph must be
// K_{m,n} on parts 1..m and m+1..m+n; o must be acyclic with no sink in 1..m.
Permutation auso_to_exc(const Orientation& o, int m, int n);

// Adds vertex m+1 to the left part as a forced sink (old right-part labels shift
// up by one): an orientation of K_{m,n} with no sink on the left becomes the
// unique-sink acyclic orientation of K_{m+1,n} with sink m+1, and conversely.
Orientation extend_to_auso(const Orientation& o, int m, int n);
Orientation restrict_from_auso(const Orientation& o, int m_plus_one, int n);

}
