#include "toppcomb/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace toppcomb {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    if (n == 0) throw std::invalid_argument("permutation: empty word");
    std::vector<char> seen(n + 1, 0);
    for (int v : word_) {
        if (v < 1 || v > n) throw std::invalid_argument("permutation: value out of range");
        if (seen[v]++) throw std::invalid_argument("permutation: repeated value");
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> w;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("permutation: bad entry '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("permutation: bad entry '" + item + "'");
        w.push_back(v);
    }
    return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (word_[i] != i + 1) return false;
    return true;
}

std::string Permutation::str() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (i) out += ',';
        out += std::to_string(word_[i]);
    }
    return out;
}

std::vector<int> excedance_set(const Permutation& p) {
    std::vector<int> out;
    for (int i = 1; i <= p.size(); ++i)
        if (p.at(i) > i) out.push_back(i);
    return out;
}

Permutation inverse(const Permutation& p) {
    std::vector<int> w(p.size());
    for (int i = 1; i <= p.size(); ++i) w[p.at(i) - 1] = i;
    return Permutation(std::move(w));
}

Permutation reverse_complement(const Permutation& p) {
    const int n = p.size();
    std::vector<int> w(n);
    for (int i = 1; i <= n; ++i) w[i - 1] = n + 1 - p.at(n + 1 - i);
    return Permutation(std::move(w));
}

std::string CycleDecomposition::str() const {
    int n = 0;
    for (const auto& c : cycles) n += static_cast<int>(c.size());
    const bool spaced = n > 9;
    std::string out;
    for (const auto& c : cycles) {
        out += '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i && spaced) out += ' ';
            out += std::to_string(c[i]);
        }
        out += ')';
    }
    return out;
}

CycleDecomposition to_cycles(const Permutation& p) {
    const int n = p.size();
    std::vector<char> used(n + 1, 0);
    std::vector<std::vector<int>> cycles;
    for (int s = 1; s <= n; ++s) {
        if (used[s]) continue;
        std::vector<int> cyc;
        int v = s;
        do {
            used[v] = 1;
            cyc.push_back(v);
            v = p.at(v);
        } while (v != s);
        cycles.push_back(std::move(cyc));
    }
    // Least elements are the start of each cycle and increase over the loop above;
    // the canonical presentation wants them decreasing left to right.
    std::reverse(cycles.begin(), cycles.end());
    return CycleDecomposition{std::move(cycles)};
}

Permutation from_cycles(const CycleDecomposition& c) {
    int n = 0;
    for (const auto& cyc : c.cycles) n += static_cast<int>(cyc.size());
    if (n == 0) throw std::invalid_argument("cycles: empty");
    std::vector<int> w(n, 0);
    std::vector<char> seen(n + 1, 0);
    for (const auto& cyc : c.cycles) {
        for (int v : cyc) {
            if (v < 1 || v > n) throw std::invalid_argument("cycles: value out of range");
            if (seen[v]++) throw std::invalid_argument("cycles: repeated value");
        }
        for (size_t i = 0; i < cyc.size(); ++i)
            w[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
    }
    return Permutation(std::move(w));
}

}
