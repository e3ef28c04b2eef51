#include "toppcomb/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "toppcomb/bijections.hpp"
#include "toppcomb/excedance.hpp"
#include "toppcomb/extremal.hpp"
#include "toppcomb/formulas.hpp"
#include "toppcomb/genocchi.hpp"
#include "toppcomb/graph.hpp"
#include "toppcomb/toppling.hpp"

namespace toppcomb {

namespace {

// Reference rows n = 3..8, r = 1..n+1, as printed.
const std::vector<std::vector<long long>> kTable1 = {
    {4, 3, 3, 4},
    {14, 10, 7, 7, 8},
    {46, 38, 31, 31, 38, 46},
    {230, 184, 146, 115, 115, 130, 146},
    {1066, 920, 790, 675, 675, 790, 920, 1066},
    {6902, 5836, 4916, 4126, 3451, 3451, 3842, 4264, 4718},
};

// t(n) for n = 2..8.
const std::vector<long long> kHeadline = {1, 3, 7, 31, 115, 675, 3451};

// Reference rows n = 1..7, r = 1..n.
const std::vector<std::vector<long long>> kTable2 = {
    {1},
    {0, 1},
    {0, 1, 2},
    {0, 3, 4, 6},
    {0, 7, 14, 18, 24},
    {0, 31, 64, 78, 96, 120},
    {0, 115, 284, 426, 504, 600, 720},
};

// Boustrophedon triangle rows 1..10, columns k = 2 upward.
const std::vector<std::vector<long long>> kTable3 = {
    {1},
    {1},
    {1, 1},
    {2, 1},
    {2, 3, 3},
    {8, 6, 3},
    {8, 14, 17, 17},
    {56, 48, 34, 17},
    {56, 104, 138, 155, 155},
    {608, 552, 448, 310, 155},
};

const std::vector<long long> kGenocchiFirst = {1, 1, 3, 17, 155, 2073, 38227, 929569};
const std::vector<long long> kGenocchiMedian = {1, 2, 8, 56, 608, 9440, 198272, 5410688};
const std::vector<long long> kNormalizedMedian = {1, 1, 2, 7, 38, 295, 3098, 42271};

// |G_n| for n = 3..8.
const std::vector<long long> kCollapsedCounts = {3, 2, 17, 8, 155, 56};

struct Checker {
    long long checks = 0;
    bool ok = true;
    std::string first_fail;

    void expect(bool cond, const std::string& label) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            first_fail = label;
        }
    }
};

VerifyResult finish(int id, const std::string& name, const Checker& c, const std::string& scope) {
    VerifyResult r{id, name, c.ok, ""};
    if (c.ok)
        r.detail = std::to_string(c.checks) + " checks over " + scope;
    else
        r.detail = "failed: " + c.first_fail;
    return r;
}

int cap(int full, int max_n) { return max_n > 0 ? std::min(full, max_n) : full; }

template <typename Fn>
void for_each_word(int n, Fn fn) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        fn(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

std::string dirs_key(const Orientation& o) {
    std::string key;
    key.reserve(o.dir.size());
    for (auto d : o.dir) key += d ? '1' : '0';
    return key;
}

// All orientations of K_{m,n} that are acyclic with no sink in 1..m.
std::vector<Orientation> restricted_orientations(int m, int n) {
    const Graph g = m == 0 ? Graph(n, {}) : CompleteMultipartiteGraph({m, n}).to_graph();
    const int e = g.edge_count();
    std::vector<Orientation> out;
    for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
        std::vector<std::uint8_t> dir(e);
        for (int i = 0; i < e; ++i) dir[i] = (mask >> i) & 1;
        Orientation o{g, std::move(dir)};
        if (!is_acyclic(o)) continue;
        bool left_sink = false;
        for (int v : sinks(o))
            if (v <= m) left_sink = true;
        if (!left_sink) out.push_back(std::move(o));
    }
    return out;
}

// Ordered part vectors (every part >= 1) summing to total.
void compositions(int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (total == 0) {
        if (!cur.empty()) out.push_back(cur);
        return;
    }
    for (int p = 1; p <= total; ++p) {
        cur.push_back(p);
        compositions(total - p, cur, out);
        cur.pop_back();
    }
}

int multipartite_edges(const std::vector<int>& parts) {
    int s = 0, sq = 0;
    for (int p : parts) {
        s += p;
        sq += p * p;
    }
    return (s * s - sq) / 2;
}

}  // namespace

VerifyResult verify_table1(const VerifyOptions& opt) {
    Checker c;
    const int max_n = cap(8, opt.max_n);
    for (int n = 3; n <= max_n; ++n) {
        const auto& row = kTable1[n - 3];
        for (int r = 1; r <= n + 1; ++r)
            c.expect(count_r_toppleable(n, r, opt.workers) == row[r - 1],
                     "t_" + std::to_string(r) + "(" + std::to_string(n) + ")");
    }
    return finish(1, "table1", c, "rows n=3.." + std::to_string(max_n));
}

VerifyResult verify_headline(const VerifyOptions& opt) {
    Checker c;
    const int max_n = cap(8, opt.max_n);
    for (int n = 2; n <= max_n; ++n) {
        const Count expected = kHeadline[n - 2];
        c.expect(count_toppleable_by_simulation(n, opt.workers) == expected,
                 "simulation count at n=" + std::to_string(n));
        long long structural = 0;
        for_each_word(n, [&](const std::vector<int>& w) {
            if (is_structurally_toppleable(Permutation(w))) ++structural;
        });
        c.expect(structural == kHeadline[n - 2], "structural count at n=" + std::to_string(n));
        c.expect(toppleable_count(n) == expected, "class formula at n=" + std::to_string(n));
    }
    return finish(2, "headline", c, "n=2.." + std::to_string(max_n) + ", three routes");
}

VerifyResult verify_schedule(const VerifyOptions& opt) {
    Checker c;
    const int max_n = cap(6, opt.max_n);
    for (int n = 2; n <= max_n; ++n) {
        for_each_word(n, [&](const std::vector<int>& w) {
            const Permutation p(w);
            for (int r = 1; r <= n + 1; ++r) {
                const Permutation base = run_toppling(p, r).result;
                for (std::uint64_t seed = 1; seed <= 20; ++seed) {
                    ToppleOptions o;
                    o.schedule = ToppleSchedule::Random;
                    o.seed = seed;
                    c.expect(run_toppling(p, r, o).result == base,
                             "random schedule diverges at n=" + std::to_string(n) + " perm " + p.str() +
                                 " r=" + std::to_string(r) + " seed=" + std::to_string(seed));
                }
            }
        });
    }
    return finish(3, "schedule", c, "all (perm, r) with n<=" + std::to_string(max_n) + ", 20 seeds");
}

VerifyResult verify_monotonicity(const VerifyOptions& opt) {
    Checker c;
    const int max_n = cap(7, opt.max_n);
    for (int n = 2; n <= max_n; ++n) {
        const int mid = n / 2 + 1;
        for_each_word(n, [&](const std::vector<int>& w) {
            const Permutation p(w);
            std::vector<char> topp(n + 2, 0);
            for (int r = 1; r <= n + 1; ++r) topp[r] = is_r_toppleable(p, r);
            bool good = true;
            for (int r = 2; r <= mid; ++r)
                if (topp[r] && !topp[r - 1]) good = false;
            for (int r = mid + 1; r <= n; ++r)
                if (topp[r] && !topp[r + 1]) good = false;
            if (topp[mid] != topp[mid + 1]) good = false;
            c.expect(good, "ladder breaks for perm " + p.str());
        });
    }
    return finish(4, "monotonicity", c, "all (perm, r) with n<=" + std::to_string(max_n));
}

VerifyResult verify_symmetry(const VerifyOptions& opt) {
    Checker c;
    const int max_n = cap(7, opt.max_n);
    for (int n = 3; n <= max_n; n += 2) {
        std::vector<Count> t(n + 2);
        for (int r = 1; r <= n + 1; ++r) t[r] = count_r_toppleable(n, r, opt.workers);
        for (int r = 1; r <= n + 1; ++r) {
            c.expect(t[r] == t[n + 2 - r],
                     "t_" + std::to_string(r) + " vs t_" + std::to_string(n + 2 - r) + " at n=" + std::to_string(n));
            if (n >= 3 && n <= 8)
                c.expect(t[r] == kTable1[n - 3][r - 1], "mirrored row vs reference at n=" + std::to_string(n));
        }
        // The pairing beneath the count identity.
        for_each_word(n, [&](const std::vector<int>& w) {
            const Permutation p(w);
            const Permutation q = reverse_complement(p);
            for (int r = 1; r <= n + 1; ++r)
                c.expect(is_r_toppleable(p, r) == is_r_toppleable(q, n + 2 - r),
                         "pairing breaks for perm " + p.str() + " r=" + std::to_string(r));
        });
    }
    return finish(5, "symmetry", c, "odd n<=" + std::to_string(max_n));
}

VerifyResult verify_genocchi(const VerifyOptions& opt) {
    (void)opt;
    Checker c;
    SeidelTriangle t(16);
    for (int n = 1; n <= 10; ++n) {
        const auto& row = kTable3[n - 1];
        for (int k = 2; k < 2 + static_cast<int>(row.size()); ++k)
            c.expect(t.at(n, k) == row[k - 2],
                     "triangle entry (" + std::to_string(n) + "," + std::to_string(k) + ")");
        c.expect(t.at(n, 2 + static_cast<int>(row.size())) == 0, "band zero in row " + std::to_string(n));
    }
    for (int n = 1; n <= 8; ++n) {
        c.expect(genocchi_first(n) == kGenocchiFirst[n - 1], "g_" + std::to_string(2 * n));
        c.expect(genocchi_median(n) == kGenocchiMedian[n - 1], "H_" + std::to_string(2 * n - 1));
    }
    for (int n = 0; n <= 7; ++n)
        c.expect(normalized_median(n) == kNormalizedMedian[n], "h_" + std::to_string(n));
    return finish(6, "genocchi", c, "triangle rows 1-10 and three sequences");
}

VerifyResult verify_collapsed(const VerifyOptions& opt) {
    Checker c;
    const int max_n = cap(8, opt.max_n);
    for (int n = 3; n <= max_n; ++n) {
        const auto family = enumerate_collapsed(n);
        c.expect(static_cast<long long>(family.size()) == kCollapsedCounts[n - 3],
                 "|G_" + std::to_string(n) + "|");
        long long brute = 0;
        for_each_word(n, [&](const std::vector<int>& w) {
            if (CollapsedPermutation::is_collapsed(Permutation(w))) ++brute;
        });
        c.expect(brute == kCollapsedCounts[n - 3], "exhaustive scan |G_" + std::to_string(n) + "|");
        if (n % 2 == 1) {
            const int half = (n - 1) / 2;
            c.expect(Count(kCollapsedCounts[n - 3]) == genocchi_first(half + 2),
                     "|G_" + std::to_string(n) + "| vs first-kind diagonal");
            // interleave bijection round-trip
            std::set<std::string> images;
            for (const auto& p : family) {
                const Permutation s = collapsed_to_excedance(p);
                const auto exc = excedance_set(s);
                bool odd_set = static_cast<int>(exc.size()) == half;
                for (int i = 0; i < static_cast<int>(exc.size()) && odd_set; ++i)
                    if (exc[i] != 2 * i + 1) odd_set = false;
                c.expect(odd_set, "image excedance set for " + p.perm().str());
                c.expect(excedance_to_collapsed(s) == p, "interleave round trip for " + p.perm().str());
                images.insert(s.str());
            }
            c.expect(images.size() == family.size(), "interleave injectivity at n=" + std::to_string(n));
        } else {
            c.expect(Count(kCollapsedCounts[n - 3]) == genocchi_median(n / 2),
                     "|G_" + std::to_string(n) + "| vs median diagonal");
            if (n >= 4) {
                std::set<std::string> images;
                long long admissible = 0;
                for (const auto& p : family) {
                    const Permutation inv = inverse(p.perm());
                    bool adm = true;
                    for (int i = 1; i <= n / 2 - 1; ++i)
                        if (inv.at(2 * i) > inv.at(2 * i + 1)) adm = false;
                    if (!adm) continue;
                    ++admissible;
                    const DellacConfiguration d = collapsed_to_dellac(p);
                    c.expect(dellac_to_collapsed(d) == p, "dellac round trip for " + p.perm().str());
                    images.insert(d.str());
                }
                c.expect(images.size() == static_cast<size_t>(admissible),
                         "dellac injectivity at n=" + std::to_string(n));
                c.expect(Count(admissible) == normalized_median(n / 2 - 1),
                         "admissible count vs h at n=" + std::to_string(n));
            }
        }
    }
    for (int k = 1; k <= 5; ++k)
        c.expect(Count(enumerate_dellac(k).size()) == kNormalizedMedian[k],
                 "dellac enumeration order " + std::to_string(k));
    return finish(7, "collapsed", c, "G_3..G_" + std::to_string(max_n) + " plus dellac orders 1-5");
}

VerifyResult verify_ursell(const VerifyOptions& opt) {
    Checker c;
    const int max_n = cap(8, opt.max_n);
    for (int n = 2; n <= max_n; ++n) {
        const int m = (n - 1) / 2;
        const int rest = n - m;
        std::set<std::string> images;
        long long toppleable = 0;
        Graph big = CompleteMultipartiteGraph({m + 1, rest}).to_graph();
        for_each_word(n, [&](const std::vector<int>& w) {
            const Permutation p(w);
            if (!is_structurally_toppleable(p)) return;
            ++toppleable;
            const Permutation s = topp_to_exc(p);
            const Orientation o = exc_to_auso(s);
            const Orientation a = extend_to_auso(o, m, rest);
            c.expect(sinks(a) == std::vector<int>{m + 1}, "extended sink for " + p.str());
            c.expect(restrict_from_auso(a, m + 1, rest) == o, "extend/restrict round trip for " + p.str());
            c.expect(auso_to_exc(o, m, rest) == s, "orientation round trip for " + p.str());
            c.expect(exc_to_topp(s) == p, "flip round trip for " + p.str());
            images.insert(dirs_key(a));
        });
        c.expect(toppleable == kHeadline[n - 2], "toppleable count at n=" + std::to_string(n));
        c.expect(images.size() == static_cast<size_t>(kHeadline[n - 2]),
                 "distinct extended orientations at n=" + std::to_string(n));
        c.expect(count_auso_brute(big, m + 1) == kHeadline[n - 2],
                 "brute unique-sink count of K_{" + std::to_string(m + 1) + "," + std::to_string(rest) + "}");
    }
    // f / f^{-1} exhaustively in both directions.
    for (int total = 1; total <= max_n; ++total) {
        for (int m = 0; m < total; ++m) {
            const int rest = total - m;
            const auto members = enumerate_class({total, m});
            std::set<std::string> images;
            for (const auto& s : members) {
                const Orientation o = exc_to_auso(s);
                c.expect(auso_to_exc(o, m, rest) == s, "f round trip for " + s.str());
                images.insert(dirs_key(o));
            }
            c.expect(images.size() == members.size(),
                     "f injectivity at (" + std::to_string(m) + "," + std::to_string(rest) + ")");
            const auto all = restricted_orientations(m, rest);
            c.expect(all.size() == members.size(),
                     "restricted orientation count at (" + std::to_string(m) + "," + std::to_string(rest) + ")");
            for (const auto& o : all) {
                const Permutation s = auso_to_exc(o, m, rest);
                c.expect(exc_to_auso(s) == o, "f^{-1} round trip at (" + std::to_string(m) + "," +
                                                  std::to_string(rest) + ")");
            }
        }
    }
    return finish(8, "ursell", c, "chain n=2.." + std::to_string(max_n) + " and m+n<=" + std::to_string(max_n));
}

VerifyResult verify_formulas(const VerifyOptions& opt) {
    Checker c;
    const int max_total = cap(8, opt.max_n);
    std::vector<std::vector<int>> parts_list;
    std::vector<int> cur;
    for (int total = 1; total <= max_total; ++total) compositions(total, cur, parts_list);
    for (const auto& parts : parts_list) {
        if (multipartite_edges(parts) > 18) continue;
        const Graph g = CompleteMultipartiteGraph(parts).to_graph();
        std::string label;
        for (int p : parts) label += std::to_string(p) + ",";
        c.expect(count_ao_multipartite(parts) == count_ao_brute(g), "AO formula vs brute at parts " + label);
        c.expect(count_auso_multipartite(parts) == count_auso_brute(g, 1),
                 "AUSO formula vs brute at parts " + label);
    }
    c.expect(count_R_bipartite(2, 3) == 31, "restricted bipartite count (2,3)");
    c.expect(count_R_bipartite(3, 4) == 675, "restricted bipartite count (3,4)");
    c.expect(Count(restricted_orientations(2, 3).size()) == 31, "restricted scan (2,3)");
    c.expect(Count(restricted_orientations(3, 4).size()) == 675, "restricted scan (3,4)");
    return finish(9, "formulas", c, "part vectors with <=" + std::to_string(max_total) + " vertices, <=18 edges");
}

VerifyResult verify_stanley(const VerifyOptions& opt) {
    Checker c;
    const int max_v = cap(5, opt.max_n);
    for (int v = 1; v <= max_v; ++v) {
        std::vector<Edge> all;
        for (int a = 1; a <= v; ++a)
            for (int b = a + 1; b <= v; ++b) all.emplace_back(a, b);
        ChromaticMemo memo;
        const int full = static_cast<int>(all.size());
        for (std::uint32_t mask = 0; mask < (1u << full); ++mask) {
            std::vector<Edge> edges;
            for (int i = 0; i < full; ++i)
                if ((mask >> i) & 1) edges.push_back(all[i]);
            const Graph g(v, std::move(edges));
            const auto poly = chromatic_polynomial(g, memo);
            Count at = 0, sign = 1;
            for (const auto& coeff : poly) {
                at += coeff * sign;
                sign = -sign;
            }
            c.expect(abs(at) == count_ao_brute(g), "chi(-1) vs AO at v=" + std::to_string(v) +
                                                       " mask=" + std::to_string(mask));
            const Count lin = abs(poly[1]);
            for (int s = 1; s <= v; ++s)
                c.expect(count_auso_brute(g, s) == lin, "linear coefficient vs AUSO sink " + std::to_string(s) +
                                                            " at v=" + std::to_string(v) +
                                                            " mask=" + std::to_string(mask));
        }
    }
    return finish(10, "stanley", c, "all graphs on <=" + std::to_string(max_v) + " vertices, every sink");
}

VerifyResult verify_turan(const VerifyOptions& opt) {
    Checker c;
    const int max_n = cap(7, opt.max_n);
    for (int n = 1; n <= max_n; ++n)
        for (int r = 1; r <= n; ++r)
            c.expect(turan_u(n, r) == kTable2[n - 1][r - 1],
                     "u_{" + std::to_string(n) + "," + std::to_string(r) + "}");
    for (int r = 1; r <= 8; ++r)
        for (int k = 0; k <= r && r + k <= 12; ++k)
            c.expect(turan_u_closed(r, k) == count_auso_multipartite(turan_parts(r + k, r)),
                     "closed form at r=" + std::to_string(r) + " k=" + std::to_string(k));
    for (int k = 0; k <= 4; ++k)
        for (int r = std::max(k, 1); r + k <= 12; ++r)
            c.expect(delta_factorial(k, r + k) == turan_u(r + k, r),
                     "difference operator at r=" + std::to_string(r) + " k=" + std::to_string(k));
    return finish(11, "turan", c, "table rows n<=" + std::to_string(max_n) + ", closed form, differences");
}

VerifyResult verify_extremal(const VerifyOptions& opt) {
    Checker c;
    const int max_scan = cap(6, opt.max_n);
    for (int n = 2; n <= max_scan; ++n) {
        const int full = n * (n - 1) / 2;
        for (int m = full - n / 2; m <= full; ++m) {
            const auto res = find_max_ao(n, m);
            const Graph cm = complement_of_matching(n, m);
            c.expect(count_ao_brute(cm) == res.max_ao,
                     "matching complement falls short at n=" + std::to_string(n) + " m=" + std::to_string(m));
            c.expect(std::find(res.maximizers.begin(), res.maximizers.end(), cm) != res.maximizers.end(),
                     "matching complement missing from maximizers at n=" + std::to_string(n) +
                         " m=" + std::to_string(m));
        }
    }
    const int max_slide = cap(5, opt.max_n);
    for (int v = 2; v <= max_slide; ++v) {
        std::vector<Edge> all;
        for (int a = 1; a <= v; ++a)
            for (int b = a + 1; b <= v; ++b) all.emplace_back(a, b);
        const int full = static_cast<int>(all.size());
        std::map<Edge, int> index;
        for (int i = 0; i < full; ++i) index[all[i]] = i;
        std::vector<unsigned long long> ao(1u << full, 0);
        for (std::uint32_t mask = 0; mask < (1u << full); ++mask) {
            std::vector<Edge> edges;
            for (int i = 0; i < full; ++i)
                if ((mask >> i) & 1) edges.push_back(all[i]);
            Count cnt = count_ao_brute(Graph(v, std::move(edges)));
            ao[mask] = cnt.convert_to<unsigned long long>();
        }
        for (std::uint32_t mask = 0; mask < (1u << full); ++mask) {
            std::vector<Edge> edges;
            for (int i = 0; i < full; ++i)
                if ((mask >> i) & 1) edges.push_back(all[i]);
            const Graph g(v, edges);
            for (const auto& [x, y] : edges) {
                for (const auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
                    for (int cc = 1; cc <= v; ++cc) {
                        if (!slide_applicable(g, {a, b}, cc)) continue;
                        const Graph h = apply_slide(g, {a, b}, cc);
                        std::uint32_t hmask = 0;
                        for (const auto& [hu, hv] : h.edges()) hmask |= 1u << index[{hu, hv}];
                        c.expect(ao[mask] <= ao[hmask],
                                 "slide decreases AO count at v=" + std::to_string(v) +
                                     " mask=" + std::to_string(mask));
                    }
                }
            }
        }
    }
    return finish(12, "extremal", c,
                  "scans n<=" + std::to_string(max_scan) + ", slides v<=" + std::to_string(max_slide));
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "table1",  "headline",  "schedule", "monotonicity", "symmetry", "genocchi",
        "collapsed", "ursell", "formulas", "stanley", "turan", "extremal",
    };
    return names;
}

VerifyResult run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "table1") return verify_table1(opt);
    if (name == "headline") return verify_headline(opt);
    if (name == "schedule") return verify_schedule(opt);
    if (name == "monotonicity") return verify_monotonicity(opt);
    if (name == "symmetry") return verify_symmetry(opt);
    if (name == "genocchi") return verify_genocchi(opt);
    if (name == "collapsed") return verify_collapsed(opt);
    if (name == "ursell") return verify_ursell(opt);
    if (name == "formulas") return verify_formulas(opt);
    if (name == "stanley") return verify_stanley(opt);
    if (name == "turan") return verify_turan(opt);
    if (name == "extremal") return verify_extremal(opt);
    throw std::invalid_argument("unknown verification suite '" + name + "'");
}

std::vector<VerifyResult> verify_all(const VerifyOptions& opt) {
    std::vector<VerifyResult> out;
    int id = 0;
    for (const auto& name : verify_suite_names()) {
        ++id;
        try {
            out.push_back(run_suite(name, opt));
        } catch (const std::exception& e) {
            out.push_back({id, name, false, std::string("exception: ") + e.what()});
        }
    }
    return out;
}

}
