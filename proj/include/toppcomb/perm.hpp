#pragma once

#include <string>
#include <vector>

namespace toppcomb {

// A permutation of [n] in one-line notation. Positions and values are 1-indexed
// at the interface; storage is a plain word.
class Permutation {
public:
    explicit Permutation(std::vector<int> word);
    static Permutation identity(int n);
    // Parses a comma-separated word, e.g. "3,1,4,2".
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(word_.size()); }
    // Value at 1-indexed position pos.
    int at(int pos) const { return word_[pos - 1]; }
    const std::vector<int>& word() const { return word_; }
    bool is_identity() const;
    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> word_;
};

// Positions i with p(i) > i, in increasing order. Position n never qualifies.
std::vector<int> excedance_set(const Permutation& p);

Permutation inverse(const Permutation& p);

// The involution p -> (n+1-p_n, ..., n+1-p_1): reverse the word, complement the values.
Permutation reverse_complement(const Permutation& p);

// Disjoint cycles. The canonical presentation produced by to_cycles puts the least
// element of each cycle first and orders cycles by decreasing least element.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;

    // "(8)(5)(47)(13629)"; elements are space-separated inside cycles once n > 9,
    // e.g. "(4 7)(1 3 6 2 9)".
    std::string str() const;

    friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

CycleDecomposition to_cycles(const Permutation& p);
// Accepts any cycle list whose elements partition [n]; throws otherwise.
Permutation from_cycles(const CycleDecomposition& c);

}
