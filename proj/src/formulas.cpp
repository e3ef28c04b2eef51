#include "toppcomb/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "toppcomb/excedance.hpp"

namespace toppcomb {

Count factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Count out = 1;
    for (int f = 2; f <= n; ++f) out *= f;
    return out;
}

Count binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: negative argument");
    if (k < 0 || k > n) return 0;
    Count out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

Count multinomial(int top, const std::vector<int>& parts) {
    int sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        sum += p;
    }
    if (sum != top) throw std::invalid_argument("multinomial: parts must sum to top");
    Count out = 1;
    int upto = 0;
    for (int p : parts) {
        upto += p;
        out *= binomial(upto, p);
    }
    return out;
}

namespace {

Count int_pow(Count base, int exp) {
    Count out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// Shared kernel of the two multipartite counts: sum over k_i in [1..n_i], i >= 2,
// of (-1)^{|n|-|k|} * first(|k|) * |k|! * prod S(n_i, k_i).
template <typename FirstFactor>
Count multipartite_sum(const std::vector<int>& rest, FirstFactor first) {
    const int total = std::accumulate(rest.begin(), rest.end(), 0);
    std::vector<int> k(rest.size(), 1);
    Count sum = 0;
    while (true) {
        int ksum = 0;
        Count prod = 1;
        for (size_t i = 0; i < rest.size(); ++i) {
            ksum += k[i];
            prod *= stirling2(rest[i], k[i]);
        }
        Count term = first(ksum) * factorial(ksum) * prod;
        if ((total - ksum) % 2)
            sum -= term;
        else
            sum += term;
        // odometer over the k ranges
        size_t i = 0;
        while (i < k.size() && k[i] == rest[i]) k[i++] = 1;
        if (i == k.size()) break;
        ++k[i];
    }
    return sum;
}

}  // namespace

Count count_R_bipartite(int m, int n) {
    if (m < 0 || n < 1) throw std::invalid_argument("count_R_bipartite: need m >= 0, n >= 1");
    Count out = factorial(n) * int_pow(n, m);
    for (int j = 1; j <= n - 1; ++j) {
        const Count term = factorial(n - j) * int_pow(n - j, m) * stirling2(n, n - j);
        if (j % 2)
            out -= term;
        else
            out += term;
    }
    return out;
}

Count count_ao_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) return 1;  // empty graph on zero vertices
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("count_ao_multipartite: part sizes must be positive");
    const int n1 = parts[0];
    const std::vector<int> rest(parts.begin() + 1, parts.end());
    if (rest.empty()) return 1;  // edgeless
    return multipartite_sum(rest, [n1](int ksum) { return int_pow(1 + ksum, n1); });
}

Count count_ao_unlabeled(const std::vector<int>& parts) {
    if (parts.size() < 2) throw std::invalid_argument("count_ao_unlabeled: need at least two parts");
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("count_ao_unlabeled: part sizes must be positive");
    const int n1 = parts[0];
    const std::vector<int> rest(parts.begin() + 1, parts.end());
    const int total = std::accumulate(rest.begin(), rest.end(), 0);
    return int_pow(1 + total, n1) * multinomial(total, rest);
}

Count count_auso_multipartite(const std::vector<int>& parts) {
    if (parts.empty() || parts[0] < 1)
        throw std::invalid_argument("count_auso_multipartite: first part must be >= 1");
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("count_auso_multipartite: part sizes must be positive");
    const int n1 = parts[0] - 1;  // the fixed sink leaves n_1 = parts[0]-1 companions
    const std::vector<int> rest(parts.begin() + 1, parts.end());
    if (rest.empty()) return parts[0] == 1 ? 1 : 0;  // edgeless: only the 1-vertex graph has one sink
    return multipartite_sum(rest, [n1](int ksum) { return int_pow(ksum, n1); });
}

bool stanley_recurrence_check(const std::vector<int>& parts) {
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("stanley_recurrence_check: part sizes must be positive");
    auto dropped_count = [](std::vector<int> v) {
        v.erase(std::remove(v.begin(), v.end(), 0), v.end());
        return count_ao_multipartite(v);
    };
    Count sum = count_ao_multipartite(parts);
    for (size_t p = 0; p < parts.size(); ++p) {
        std::vector<int> mod = parts;
        for (int l = 0; l < parts[p]; ++l) {
            mod[p] = l;
            const Count term = binomial(parts[p], l) * dropped_count(mod);
            if ((parts[p] - l) % 2)
                sum -= term;
            else
                sum += term;
        }
    }
    return sum == 0;
}

std::vector<int> turan_parts(int n, int r) {
    if (r < 1 || n < r) throw std::invalid_argument("turan_parts: need 1 <= r <= n");
    std::vector<int> parts(r, n / r);
    for (int i = 0; i < n % r; ++i) ++parts[i];
    return parts;
}

Count turan_u(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("turan_u: need 1 <= r <= n");
    if (n - r <= r) return turan_u_closed(r, n - r);
    return count_auso_multipartite(turan_parts(n, r));
}

Count turan_u_closed(int r, int k) {
    if (k < 0 || k > r) throw std::invalid_argument("turan_u_closed: need 0 <= k <= r");
    if (k == 0) return factorial(r - 1);
    // Odometer over (j_2..j_k) in {1,2}^{k-1}; s = j_2 + ... + j_k.
    std::vector<int> j(k - 1, 1);
    Count sum = 0;
    while (true) {
        const int s = std::accumulate(j.begin(), j.end(), 0);
        const Count term = Count(s + r - k) * factorial(s + r - k);
        if (s % 2)
            sum -= term;
        else
            sum += term;
        size_t i = 0;
        while (i < j.size() && j[i] == 2) j[i++] = 1;
        if (i == j.size()) break;
        ++j[i];
    }
    return sum;
}

Count delta_factorial(int k, int n) {
    if (k < 0 || n - k < 1) throw std::invalid_argument("delta_factorial: need k >= 0 and n-k >= 1");
    Count sum = 0;
    for (int i = 0; i <= k; ++i) {
        const Count term = binomial(k, i) * factorial(n - i - 1);
        if (i % 2)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

}
