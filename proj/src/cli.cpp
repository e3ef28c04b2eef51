#include "toppcomb/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "toppcomb/bijections.hpp"
#include "toppcomb/emit.hpp"
#include "toppcomb/excedance.hpp"
#include "toppcomb/extremal.hpp"
#include "toppcomb/formulas.hpp"
#include "toppcomb/genocchi.hpp"
#include "toppcomb/graph.hpp"
#include "toppcomb/perm.hpp"
#include "toppcomb/toppling.hpp"
#include "toppcomb/verify.hpp"

namespace toppcomb {

namespace {

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse part sizes '" + text + "'");
        }
        if (used != item.size() || value < 1)
            throw std::invalid_argument("cannot parse part sizes '" + text + "'");
        parts.push_back(value);
    }
    if (parts.empty()) throw std::invalid_argument("empty part list");
    return parts;
}

std::string count_str(const Count& c) { return c.str(); }

void print_table(const Table& t, const std::string& format) { std::cout << emit(t, parse_format(format)); }

int cmd_topple(const std::string& perm_str, int r, bool trace, const std::string& schedule,
               std::uint64_t seed) {
    const Permutation p = Permutation::parse(perm_str);
    ToppleOptions opt;
    opt.schedule = schedule == "random" ? ToppleSchedule::Random : ToppleSchedule::Pass;
    opt.seed = seed;
    opt.keep_trace = trace;
    if (trace && opt.schedule != ToppleSchedule::Pass)
        throw std::invalid_argument("--trace requires the pass schedule");
    const ToppleOutcome out = run_toppling(p, r, opt);
    if (trace) {
        std::cout << make_config(p, r).str() << '\n';
        for (const auto& c : out.pass_trace) std::cout << c.str() << '\n';
    }
    std::cout << "result: " << out.result.str() << '\n';
    std::cout << "topples: " << out.topple_count << '\n';
    std::cout << "sorted: " << (out.result.is_identity() ? "yes" : "no") << '\n';
    return 0;
}

int cmd_count_exc(int n, int m) {
    if (n < 1 || m < 0 || m >= n) throw std::invalid_argument("need n >= 1 and 0 <= m < n");
    std::cout << count_str(count_class_formula(m, n - m)) << '\n';
    return 0;
}

int cmd_count_ao(const std::string& parts_str, const std::string& method) {
    const auto parts = parse_parts(parts_str);
    Count result;
    if (method == "formula") {
        result = count_ao_multipartite(parts);
    } else if (method == "brute") {
        result = count_ao_brute(CompleteMultipartiteGraph(parts).to_graph());
    } else {
        result = static_cast<long long>(canonical_sorts(CompleteMultipartiteGraph(parts)).size());
    }
    std::cout << count_str(result) << '\n';
    return 0;
}

int cmd_count_auso(const std::string& parts_str, int sink, const std::string& method) {
    const auto parts = parse_parts(parts_str);
    const CompleteMultipartiteGraph k(parts);
    if (sink < 1 || sink > k.vertex_count()) throw std::invalid_argument("sink out of range");
    Count result;
    if (method == "formula") {
        // The closed form fixes the sink's part as the first part.
        const int sink_part = k.part_of(sink) - 1;
        std::vector<int> rotated{parts[sink_part]};
        for (int i = 0; i < static_cast<int>(parts.size()); ++i)
            if (i != sink_part) rotated.push_back(parts[i]);
        result = count_auso_multipartite(rotated);
    } else if (method == "brute") {
        result = count_auso_brute(k.to_graph(), sink);
    } else {
        const Graph g = k.to_graph();
        long long total = 0;
        for (const auto& order : canonical_sorts(k)) {
            const Orientation o = orientation_from_sort(g, order);
            if (sinks(o) == std::vector<int>{sink}) ++total;
        }
        result = total;
    }
    std::cout << count_str(result) << '\n';
    return 0;
}

int cmd_table_t(int n_max, const std::string& format) {
    Table t;
    t.columns = {"n", "t"};
    for (int n = 2; n <= n_max; ++n)
        t.rows.push_back({std::to_string(n), count_str(toppleable_count(n))});
    print_table(t, format);
    return 0;
}

int cmd_table_t_r(int n_max, const std::string& format, int workers) {
    if (n_max > 10) throw std::invalid_argument("n-max above 10 exceeds the exhaustive-scan budget");
    Table t;
    t.columns = {"n"};
    for (int r = 1; r <= n_max + 1; ++r) t.columns.push_back("r=" + std::to_string(r));
    for (int n = 3; n <= n_max; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        for (int r = 1; r <= n + 1; ++r) row.push_back(count_str(count_r_toppleable(n, r, workers)));
        row.resize(t.columns.size());
        t.rows.push_back(std::move(row));
    }
    print_table(t, format);
    return 0;
}

int cmd_table_turan(int n_max, const std::string& format) {
    Table t;
    t.columns = {"n"};
    for (int r = 1; r <= n_max; ++r) t.columns.push_back("r=" + std::to_string(r));
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        for (int r = 1; r <= n; ++r) row.push_back(count_str(turan_u(n, r)));
        row.resize(t.columns.size());
        t.rows.push_back(std::move(row));
    }
    print_table(t, format);
    return 0;
}

int cmd_seidel(int rows, const std::string& format) {
    if (rows < 1) throw std::invalid_argument("need at least one row");
    const SeidelTriangle tri(rows);
    Table t;
    t.columns = {"n"};
    for (int k = 2; k <= SeidelTriangle::max_col(rows); ++k) t.columns.push_back("k=" + std::to_string(k));
    for (int n = 1; n <= rows; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        for (int k = 2; k <= SeidelTriangle::max_col(n); ++k) row.push_back(count_str(tri.at(n, k)));
        row.resize(t.columns.size());
        t.rows.push_back(std::move(row));
    }
    print_table(t, format);
    return 0;
}

int cmd_collapsed(int n, bool list, const std::string& format) {
    const auto family = enumerate_collapsed(n);
    Table t;
    if (list) {
        t.columns = {"perm"};
        for (const auto& p : family) t.rows.push_back({p.perm().str()});
    } else {
        t.columns = {"n", "count"};
        t.rows.push_back({std::to_string(n), std::to_string(family.size())});
    }
    print_table(t, format);
    return 0;
}

int cmd_dellac(int order, bool list, const std::string& format) {
    const auto family = enumerate_dellac(order);
    Table t;
    if (list) {
        t.columns = {"config"};
        for (const auto& d : family) t.rows.push_back({d.str()});
    } else {
        t.columns = {"order", "count"};
        t.rows.push_back({std::to_string(order), std::to_string(family.size())});
    }
    print_table(t, format);
    return 0;
}

int cmd_bij_topp2exc(const std::string& perm_str) {
    std::cout << topp_to_exc(Permutation::parse(perm_str)).str() << '\n';
    return 0;
}

int cmd_bij_exc2auso(const std::string& perm_str, int m_flag, int n_flag) {
    const Permutation s = Permutation::parse(perm_str);
    const int m = static_cast<int>(excedance_set(s).size());
    if (m_flag >= 0 && m_flag != m)
        throw std::invalid_argument("--m does not match the excedance set of the permutation");
    if (n_flag >= 0 && n_flag != s.size() - m)
        throw std::invalid_argument("--n does not match the permutation");
    const Orientation o = exc_to_auso(s);
    std::cout << "sort:";
    for (const auto& cycle : to_cycles(s).cycles)
        for (int v : cycle) std::cout << ' ' << v;
    std::cout << '\n';
    for (int e = 0; e < o.graph.edge_count(); ++e)
        std::cout << o.tail(e) << "->" << o.head(e) << '\n';
    return 0;
}

int cmd_bij_roundtrip(int m, int n) {
    if (m < 0 || n < 1) throw std::invalid_argument("need m >= 0 and n >= 1");
    if (m * n > 20) throw std::invalid_argument("m*n above 20 exceeds the orientation-scan budget");
    long long forward = 0;
    for (const auto& s : enumerate_class({m + n, m})) {
        if (auso_to_exc(exc_to_auso(s), m, n) != s) {
            std::cout << "FAIL forward at " << s.str() << '\n';
            return 1;
        }
        ++forward;
    }
    const Graph g = m == 0 ? Graph(n, {}) : CompleteMultipartiteGraph({m, n}).to_graph();
    const int edges = g.edge_count();
    long long reverse = 0;
    for (std::uint32_t mask = 0; mask < (1u << edges); ++mask) {
        std::vector<std::uint8_t> dir(edges);
        for (int i = 0; i < edges; ++i) dir[i] = (mask >> i) & 1;
        const Orientation o{g, std::move(dir)};
        if (!is_acyclic(o)) continue;
        bool left_sink = false;
        for (int v : sinks(o))
            if (v <= m) left_sink = true;
        if (left_sink) continue;
        if (exc_to_auso(auso_to_exc(o, m, n)) != o) {
            std::cout << "FAIL reverse at orientation mask " << mask << '\n';
            return 1;
        }
        ++reverse;
    }
    if (forward != reverse) {
        std::cout << "FAIL: " << forward << " permutations vs " << reverse << " orientations\n";
        return 1;
    }
    std::cout << "roundtrip ok: " << forward << " permutations, " << reverse << " orientations\n";
    return 0;
}

int cmd_turan(int n, int r) {
    std::cout << count_str(turan_u(n, r)) << '\n';
    return 0;
}

int cmd_extremal(int n, int m, bool report_all) {
    const MaxAoResult res = find_max_ao(n, m);
    std::map<std::vector<int>, std::vector<const Graph*>> classes;
    for (const auto& g : res.maximizers) {
        std::vector<int> degrees;
        for (int v = 1; v <= g.vertex_count(); ++v)
            degrees.push_back(static_cast<int>(g.neighbors(v).size()));
        std::sort(degrees.begin(), degrees.end());
        classes[degrees].push_back(&g);
    }
    std::cout << "max ao: " << count_str(res.max_ao) << '\n';
    std::cout << "labeled maximizers: " << res.maximizers.size() << '\n';
    std::cout << "degree classes: " << classes.size() << '\n';
    for (const auto& [degrees, members] : classes) {
        std::cout << "\ndegrees";
        for (int d : degrees) std::cout << ' ' << d;
        std::cout << " (" << members.size() << " labeled graph" << (members.size() == 1 ? "" : "s");
        if (!report_all) std::cout << ", showing first";
        std::cout << ")\n";
        if (report_all) {
            for (size_t i = 0; i < members.size(); ++i) {
                if (i) std::cout << '\n';
                std::cout << members[i]->str();
            }
        } else {
            std::cout << members.front()->str();
        }
    }
    return 0;
}

int cmd_chromatic(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    const Graph g = Graph::parse(in);
    if (g.vertex_count() < 1) throw std::invalid_argument("graph must have at least one vertex");
    const auto poly = chromatic_polynomial(g);
    std::cout << "coefficients (constant term first):";
    for (const auto& c : poly) std::cout << ' ' << count_str(c);
    std::cout << '\n';
    Count at = 0, sign = 1;
    for (const auto& c : poly) {
        at += c * sign;
        sign = -sign;
    }
    std::cout << "acyclic orientations: " << count_str(abs(at)) << '\n';
    std::cout << "unique-sink acyclic orientations per sink: " << count_str(abs(poly[1])) << '\n';
    return 0;
}

int cmd_verify(const std::string& suite, int max_n, int workers) {
    VerifyOptions opt;
    opt.max_n = max_n;
    opt.workers = workers;
    std::vector<VerifyResult> results;
    if (suite == "all")
        results = verify_all(opt);
    else
        results.push_back(run_suite(suite, opt));
    int passed = 0;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << std::left
                  << std::setw(14) << r.name << std::right << "  " << r.detail << '\n';
        if (r.passed) ++passed;
    }
    std::cout << "passed " << passed << "/" << results.size() << " suites\n";
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"toppling, excedance, and acyclic-orientation combinatorics"};
    app.require_subcommand(1);

    auto* topple = app.add_subcommand("topple", "run the chip dynamics for one permutation");
    std::string topple_perm;
    int topple_r = 0;
    bool topple_trace = false;
    std::string topple_schedule = "pass";
    std::uint64_t topple_seed = 0;
    topple->add_option("--perm", topple_perm, "comma-separated permutation, e.g. 3,1,4,2")->required();
    topple->add_option("--r", topple_r, "extra chip label, 1..n+1")->required();
    topple->add_flag("--trace", topple_trace, "print the configuration after every pass");
    topple->add_option("--schedule", topple_schedule, "topple order")
        ->check(CLI::IsMember({"pass", "random"}));
    topple->add_option("--seed", topple_seed, "seed for the random schedule");

    auto* count = app.add_subcommand("count", "count one family");
    count->require_subcommand(1);
    auto* count_exc = count->add_subcommand("exc", "permutations of [n] with excedance set 1..m");
    int exc_n = 0, exc_m = -1;
    count_exc->add_option("--n", exc_n)->required();
    count_exc->add_option("--m", exc_m)->required();
    auto* count_ao = count->add_subcommand("ao", "acyclic orientations of a complete multipartite graph");
    std::string ao_parts, ao_method = "formula";
    count_ao->add_option("--parts", ao_parts, "part sizes, e.g. 3,3")->required();
    count_ao->add_option("--method", ao_method)->check(CLI::IsMember({"brute", "sorts", "formula"}));
    auto* count_auso = count->add_subcommand("auso", "acyclic orientations with one fixed unique sink");
    std::string auso_parts, auso_method = "formula";
    int auso_sink = 1;
    count_auso->add_option("--parts", auso_parts, "part sizes, e.g. 3,3")->required();
    count_auso->add_option("--sink", auso_sink, "sink vertex (default 1)");
    count_auso->add_option("--method", auso_method)->check(CLI::IsMember({"brute", "sorts", "formula"}));

    auto* table = app.add_subcommand("table", "reproduce a whole table");
    table->require_subcommand(1);
    auto* table_t = table->add_subcommand("t", "toppleable counts t(n), n = 2..n-max");
    int t_nmax = 8;
    std::string t_format = "csv";
    table_t->add_option("--n-max", t_nmax);
    table_t->add_option("--format", t_format)->check(CLI::IsMember({"json", "csv", "bfile"}));
    auto* table_tr = table->add_subcommand("t_r", "r-toppleable counts t_r(n), n = 3..n-max");
    int tr_nmax = 8, tr_workers = 1;
    std::string tr_format = "csv";
    table_tr->add_option("--n-max", tr_nmax);
    table_tr->add_option("--format", tr_format)->check(CLI::IsMember({"json", "csv", "bfile"}));
    table_tr->add_option("--workers", tr_workers, "threads for the permutation scan");
    auto* table_turan = table->add_subcommand("turan", "unique-sink counts u_{n,r}, n = 1..n-max");
    int turan_nmax = 7;
    std::string turan_format = "csv";
    table_turan->add_option("--n-max", turan_nmax);
    table_turan->add_option("--format", turan_format)->check(CLI::IsMember({"json", "csv", "bfile"}));

    auto* seidel = app.add_subcommand("seidel", "boustrophedon triangle rows");
    int seidel_rows = 10;
    std::string seidel_format = "csv";
    seidel->add_option("--rows", seidel_rows);
    seidel->add_option("--format", seidel_format)->check(CLI::IsMember({"json", "csv", "bfile"}));

    auto* collapsed = app.add_subcommand("collapsed", "collapsed permutations of [n]");
    int collapsed_n = 0;
    bool collapsed_count = false, collapsed_list = false;
    std::string collapsed_format = "csv";
    collapsed->add_option("--n", collapsed_n)->required();
    collapsed->add_flag("--count", collapsed_count, "print the count (default)");
    collapsed->add_flag("--list", collapsed_list, "print every member");
    collapsed->add_option("--format", collapsed_format)->check(CLI::IsMember({"json", "csv", "bfile"}));

    auto* dellac = app.add_subcommand("dellac", "Dellac configurations of one order");
    int dellac_order = 0;
    bool dellac_count = false, dellac_list = false;
    std::string dellac_format = "csv";
    dellac->add_option("--order", dellac_order)->required();
    dellac->add_flag("--count", dellac_count, "print the count (default)");
    dellac->add_flag("--list", dellac_list, "print every member");
    dellac->add_option("--format", dellac_format)->check(CLI::IsMember({"json", "csv", "bfile"}));

    auto* bij = app.add_subcommand("bij", "apply or stress one bijection");
    bij->require_subcommand(1);
    auto* bij_t2e = bij->add_subcommand("topp2exc", "toppleable permutation -> excedance class");
    std::string t2e_perm;
    bij_t2e->add_option("--perm", t2e_perm)->required();
    auto* bij_e2a = bij->add_subcommand("exc2auso", "excedance class -> acyclic orientation");
    std::string e2a_perm;
    int e2a_m = -1, e2a_n = -1;
    bij_e2a->add_option("--perm", e2a_perm)->required();
    bij_e2a->add_option("--m", e2a_m, "expected left part size (checked)");
    bij_e2a->add_option("--n", e2a_n, "expected right part size (checked)");
    auto* bij_rt = bij->add_subcommand("roundtrip", "exhaustive both-direction check for one (m,n)");
    int rt_m = -1, rt_n = -1;
    bij_rt->add_option("--m", rt_m)->required();
    bij_rt->add_option("--n", rt_n)->required();

    auto* turan = app.add_subcommand("turan", "one unique-sink count u_{n,r}");
    int turan_n = 0, turan_r = 0;
    turan->add_option("--n", turan_n)->required();
    turan->add_option("--r", turan_r)->required();

    auto* extremal = app.add_subcommand("extremal", "graphs with the most acyclic orientations");
    int extremal_n = 0, extremal_m = 0;
    bool extremal_all = false;
    extremal->add_option("--n", extremal_n, "vertices")->required();
    extremal->add_option("--m", extremal_m, "edges")->required();
    extremal->add_flag("--report-all", extremal_all, "print every labeled maximizer");

    auto* chromatic = app.add_subcommand("chromatic", "chromatic polynomial of a graph file");
    std::string chromatic_graph;
    chromatic->add_option("--graph", chromatic_graph, "file: first line 'n m', then edge lines 'u v'")
        ->required();

    auto* verify = app.add_subcommand("verify", "run the cross-verification suites");
    std::string verify_suite = "all";
    int verify_max_n = 0, verify_workers = 1;
    std::vector<std::string> suite_choices = verify_suite_names();
    suite_choices.insert(suite_choices.begin(), "all");
    verify->add_option("suite", verify_suite, "suite name or 'all'")
        ->check(CLI::IsMember(suite_choices));
    verify->add_option("--max-n", verify_max_n, "cap the scan sizes (0 = full documented range)");
    verify->add_option("--workers", verify_workers, "threads for the permutation scans");

    try {
        std::vector<const char*> argv;
        argv.push_back("toppcomb");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (topple->parsed())
            return cmd_topple(topple_perm, topple_r, topple_trace, topple_schedule, topple_seed);
        if (count->parsed()) {
            if (count_exc->parsed()) return cmd_count_exc(exc_n, exc_m);
            if (count_ao->parsed()) return cmd_count_ao(ao_parts, ao_method);
            return cmd_count_auso(auso_parts, auso_sink, auso_method);
        }
        if (table->parsed()) {
            if (table_t->parsed()) return cmd_table_t(t_nmax, t_format);
            if (table_tr->parsed()) return cmd_table_t_r(tr_nmax, tr_format, tr_workers);
            return cmd_table_turan(turan_nmax, turan_format);
        }
        if (seidel->parsed()) return cmd_seidel(seidel_rows, seidel_format);
        if (collapsed->parsed()) {
            if (collapsed_count && collapsed_list)
                throw std::invalid_argument("--count and --list are mutually exclusive");
            return cmd_collapsed(collapsed_n, collapsed_list, collapsed_format);
        }
        if (dellac->parsed()) {
            if (dellac_count && dellac_list)
                throw std::invalid_argument("--count and --list are mutually exclusive");
            return cmd_dellac(dellac_order, dellac_list, dellac_format);
        }
        if (bij->parsed()) {
            if (bij_t2e->parsed()) return cmd_bij_topp2exc(t2e_perm);
            if (bij_e2a->parsed()) return cmd_bij_exc2auso(e2a_perm, e2a_m, e2a_n);
            return cmd_bij_roundtrip(rt_m, rt_n);
        }
        if (turan->parsed()) return cmd_turan(turan_n, turan_r);
        if (extremal->parsed()) return cmd_extremal(extremal_n, extremal_m, extremal_all);
        if (chromatic->parsed()) return cmd_chromatic(chromatic_graph);
        return cmd_verify(verify_suite, verify_max_n, verify_workers);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

}
