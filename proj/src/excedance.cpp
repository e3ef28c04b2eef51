#include "toppcomb/excedance.hpp"

#include <stdexcept>

namespace toppcomb {

namespace {

void extend_word(std::vector<int>& word, std::vector<char>& used, int n, int m,
                 std::vector<Permutation>& out) {
    const int i = static_cast<int>(word.size()) + 1;
    if (i > n) {
        out.emplace_back(word);
        return;
    }
    // Positions up to m must exceed, later ones must not; trying values in
    // increasing order makes the output lexicographic.
    const int lo = i <= m ? i + 1 : 1;
    const int hi = i <= m ? n : i;
    for (int v = lo; v <= hi; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        word.push_back(v);
        extend_word(word, used, n, m, out);
        word.pop_back();
        used[v] = 0;
    }
}

}  // namespace

std::vector<Permutation> enumerate_class(const ExcedanceClass& cls) {
    if (cls.n < 1) throw std::invalid_argument("enumerate_class: n must be positive");
    if (cls.m < 0 || cls.m >= cls.n) throw std::invalid_argument("enumerate_class: need 0 <= m < n");
    std::vector<Permutation> out;
    std::vector<int> word;
    std::vector<char> used(cls.n + 1, 0);
    extend_word(word, used, cls.n, cls.m, out);
    return out;
}

Count stirling2(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
    if (k > n) return 0;
    if (n == 0) return 1;  // k == 0 here
    if (k == 0) return 0;
    // Row-by-row table; kept thread-local so concurrent scans each grow their own.
    thread_local std::vector<std::vector<Count>> rows = {{1}};  // rows[n][k], k <= n
    while (static_cast<int>(rows.size()) <= n) {
        const int r = static_cast<int>(rows.size());
        std::vector<Count> row(r + 1);
        row[0] = 0;
        for (int j = 1; j < r; ++j) row[j] = rows[r - 1][j - 1] + j * rows[r - 1][j];
        row[r] = 1;
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

Count count_class_formula(int m, int rest) {
    if (m < 0 || rest < 1) throw std::invalid_argument("count_class_formula: need m >= 0, rest >= 1");
    Count total = 0;
    for (int i = 1; i <= m + 1; ++i) {
        Count term = stirling2(m + 1, i);
        for (int f = 2; f <= i; ++f) term *= f;  // i!
        for (int e = 0; e < rest - 1; ++e) term *= i;
        if ((m + 1 - i) % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

Count toppleable_count(int n) {
    if (n < 1) throw std::invalid_argument("toppleable_count: n must be positive");
    const int m = (n - 1) / 2;
    return count_class_formula(m, n - m);
}

}
