#include "toppcomb/genocchi.hpp"

#include <algorithm>
#include <stdexcept>

namespace toppcomb {

SeidelTriangle::SeidelTriangle(int rows) {
    if (rows < 1) throw std::invalid_argument("seidel: need at least one row");
    rows_.reserve(rows);
    rows_.push_back({Count(1)});  // row 1 is the single seed entry at k = 2
    for (int n = 2; n <= rows; ++n) {
        const int cols = max_col(n) - 1;  // k = 2 .. max_col(n)
        std::vector<Count> row(cols);
        const auto& prev = rows_.back();
        auto prev_at = [&](int k) -> Count {
            const int j = k - 2;
            return (j >= 0 && j < static_cast<int>(prev.size())) ? prev[j] : Count(0);
        };
        if (n % 2 == 0) {
            // Even rows accumulate the previous row from the right.
            Count acc = 0;
            for (int k = cols + 1; k >= 2; --k) {
                acc += prev_at(k);
                row[k - 2] = acc;
            }
        } else {
            Count acc = 0;
            for (int k = 2; k <= cols + 1; ++k) {
                acc += prev_at(k);
                row[k - 2] = acc;
            }
        }
        rows_.push_back(std::move(row));
    }
}

Count SeidelTriangle::at(int n, int k) const {
    if (n < 1 || n > rows()) throw std::invalid_argument("seidel: row out of range");
    const int j = k - 2;
    if (j < 0 || j >= static_cast<int>(rows_[n - 1].size())) return 0;
    return rows_[n - 1][j];
}

Count genocchi_first(int n) {
    if (n < 1) throw std::invalid_argument("genocchi_first: n must be positive");
    SeidelTriangle t(2 * n - 1);
    return t.at(2 * n - 1, n + 1);
}

Count genocchi_median(int n) {
    if (n < 1) throw std::invalid_argument("genocchi_median: n must be positive");
    SeidelTriangle t(2 * n);
    return t.at(2 * n, 2);
}

Count normalized_median(int n) {
    if (n < 0) throw std::invalid_argument("normalized_median: n must be nonnegative");
    const Count h = genocchi_median(n + 1);
    const Count pow2 = Count(1) << n;
    if (h % pow2 != 0) throw std::runtime_error("normalized_median: median not divisible by 2^n");
    return h / pow2;
}

namespace {

// Position band for value k in a collapsed permutation of [n].
void collapsed_band(int n, int k, int& lo, int& hi) {
    lo = (n % 2 == 1) ? (k + 1) / 2 : 1 + k / 2;
    hi = (n + 1) / 2 + k / 2;
}

void extend_collapsed(std::vector<int>& word, std::vector<char>& used, int n,
                      std::vector<CollapsedPermutation>& out) {
    const int i = static_cast<int>(word.size()) + 1;
    if (i > n) {
        out.emplace_back(Permutation(word));
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (used[v]) continue;
        int lo, hi;
        collapsed_band(n, v, lo, hi);
        if (i < lo || i > hi) continue;
        used[v] = 1;
        word.push_back(v);
        extend_collapsed(word, used, n, out);
        word.pop_back();
        used[v] = 0;
    }
}

}  // namespace

CollapsedPermutation::CollapsedPermutation(Permutation p) : perm_(std::move(p)) {
    if (!is_collapsed(perm_)) throw std::invalid_argument("collapsed: position bands violated");
}

bool CollapsedPermutation::is_collapsed(const Permutation& p) {
    const int n = p.size();
    for (int i = 1; i <= n; ++i) {
        int lo, hi;
        collapsed_band(n, p.at(i), lo, hi);
        if (i < lo || i > hi) return false;
    }
    return true;
}

std::vector<CollapsedPermutation> enumerate_collapsed(int n) {
    if (n < 2) throw std::invalid_argument("enumerate_collapsed: need n >= 2");
    std::vector<CollapsedPermutation> out;
    std::vector<int> word;
    std::vector<char> used(n + 1, 0);
    extend_collapsed(word, used, n, out);
    return out;
}

DellacConfiguration::DellacConfiguration(int order, std::vector<std::pair<int, int>> points)
    : order_(order), points_(std::move(points)) {
    if (order_ < 1) throw std::invalid_argument("dellac: order must be positive");
    std::sort(points_.begin(), points_.end());
    if (static_cast<int>(points_.size()) != 2 * order_)
        throw std::invalid_argument("dellac: expected 2n points");
    std::vector<int> col_uses(order_ + 1, 0);
    for (int i = 0; i < 2 * order_; ++i) {
        const auto [r, c] = points_[i];
        if (r != i + 1) throw std::invalid_argument("dellac: need exactly one point per row");
        if (c < 1 || c > order_) throw std::invalid_argument("dellac: column out of range");
        if (r < c || r > order_ + c) throw std::invalid_argument("dellac: point outside the band");
        ++col_uses[c];
    }
    for (int c = 1; c <= order_; ++c)
        if (col_uses[c] != 2) throw std::invalid_argument("dellac: need exactly two points per column");
}

std::string DellacConfiguration::str() const {
    std::string out;
    for (const auto& [r, c] : points_)
        out += '(' + std::to_string(r) + ',' + std::to_string(c) + ')';
    return out;
}

namespace {

void extend_dellac(int n, int row, std::vector<int>& cols, std::vector<int>& col_uses,
                   std::vector<DellacConfiguration>& out) {
    if (row > 2 * n) {
        std::vector<std::pair<int, int>> pts;
        pts.reserve(2 * n);
        for (int r = 1; r <= 2 * n; ++r) pts.emplace_back(r, cols[r]);
        out.emplace_back(n, std::move(pts));
        return;
    }
    for (int c = std::max(1, row - n); c <= std::min(n, row); ++c) {
        if (col_uses[c] == 2) continue;
        // If some column's last admissible row is `row` and it still needs two
        // points, or needs one and we place elsewhere, the branch is dead.
        bool dead = false;
        for (int d = std::max(1, row - n); d <= std::min(n, row); ++d) {
            const int deadline = n + d;
            const int needed = 2 - col_uses[d] - (d == c ? 1 : 0);
            if (needed > deadline - row) dead = true;
        }
        if (dead) continue;
        col_uses[c] += 1;
        cols[row] = c;
        extend_dellac(n, row + 1, cols, col_uses, out);
        col_uses[c] -= 1;
    }
}

}  // namespace

std::vector<DellacConfiguration> enumerate_dellac(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_dellac: order must be positive");
    std::vector<DellacConfiguration> out;
    std::vector<int> cols(2 * n + 1, 0);
    std::vector<int> col_uses(n + 1, 0);
    extend_dellac(n, 1, cols, col_uses, out);
    return out;
}

Permutation collapsed_to_excedance(const CollapsedPermutation& p) {
    const int size = p.perm().size();
    if (size % 2 == 0) throw std::invalid_argument("collapsed_to_excedance: size must be odd");
    const int n = (size - 1) / 2;
    std::vector<int> s(size);
    for (int i = 1; i <= n; ++i) {
        s[2 * i - 1] = p.perm().at(i);          // sigma_{2i} = pi_i
        s[2 * i - 2] = p.perm().at(n + 1 + i);  // sigma_{2i-1} = pi_{n+1+i}
    }
    s[2 * n] = p.perm().at(n + 1);  // sigma_{2n+1} = pi_{n+1}
    return Permutation(std::move(s));
}

CollapsedPermutation excedance_to_collapsed(const Permutation& s) {
    const int size = s.size();
    if (size % 2 == 0) throw std::invalid_argument("excedance_to_collapsed: size must be odd");
    const int n = (size - 1) / 2;
    std::vector<int> expected;
    for (int i = 1; i <= 2 * n - 1; i += 2) expected.push_back(i);
    if (excedance_set(s) != expected)
        throw std::invalid_argument("excedance_to_collapsed: excedance set is not {1,3,...,2n-1}");
    std::vector<int> w(size);
    for (int i = 1; i <= n; ++i) {
        w[i - 1] = s.at(2 * i);
        w[n + i] = s.at(2 * i - 1);
    }
    w[n] = s.at(2 * n + 1);
    return CollapsedPermutation(Permutation(std::move(w)));
}

DellacConfiguration collapsed_to_dellac(const CollapsedPermutation& p) {
    const int size = p.perm().size();
    if (size % 2 == 1 || size < 4) throw std::invalid_argument("collapsed_to_dellac: size must be even, >= 4");
    const int n = size / 2;
    const Permutation inv = inverse(p.perm());
    for (int i = 1; i <= n - 1; ++i)
        if (inv.at(2 * i) > inv.at(2 * i + 1))
            throw std::invalid_argument("collapsed_to_dellac: needs every 2i left of 2i+1");
    std::vector<std::pair<int, int>> pts;
    pts.reserve(2 * (n - 1));
    for (int i = 2; i <= 2 * n - 1; ++i) pts.emplace_back(i - 1, p.perm().at(i) / 2);
    return DellacConfiguration(n - 1, std::move(pts));
}

CollapsedPermutation dellac_to_collapsed(const DellacConfiguration& c) {
    const int n = c.order() + 1;
    // Label the two points of column j with 2j and 2j+1, top to bottom, then read
    // the labels row by row and pad with the forced endpoints 1 and 2n.
    std::vector<int> seen(c.order() + 1, 0);
    std::vector<int> w(2 * n);
    w[0] = 1;
    w[2 * n - 1] = 2 * n;
    for (const auto& [row, col] : c.points()) {
        w[row] = 2 * col + seen[col];  // w index row = permutation position row+1
        seen[col] += 1;
    }
    return CollapsedPermutation(Permutation(std::move(w)));
}

}
