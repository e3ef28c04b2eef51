#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "toppcomb/cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    auto* old_out = std::cout.rdbuf(out.rdbuf());
    auto* old_err = std::cerr.rdbuf(err.rdbuf());
    int code = -1;
    try {
        code = toppcomb::run_cli(args);
    } catch (...) {
        std::cout.rdbuf(old_out);
        std::cerr.rdbuf(old_err);
        throw;
    }
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("topple command") {
    const auto traced = run({"topple", "--perm", "3,1,4,2", "--r", "2", "--trace"});
    CHECK(traced.code == 0);
    CHECK(contains(traced.out, "(_,4,(1,2),5,3,_)"));
    CHECK(contains(traced.out, "(1,_,(2,4),3,_,5)"));
    CHECK(contains(traced.out, "(1,2,3,_,4,5)"));
    CHECK(contains(traced.out, "result: 1,2,3,4,5"));
    CHECK(contains(traced.out, "topples: 6"));
    CHECK(contains(traced.out, "sorted: yes"));

    const auto plain = run({"topple", "--perm", "2,5,1,3,4", "--r", "2"});
    CHECK(plain.code == 0);
    CHECK(contains(plain.out, "result: 1,2,3,4,6,5"));
    CHECK(contains(plain.out, "topples: 9"));
    CHECK(contains(plain.out, "sorted: no"));

    const auto random = run({"topple", "--perm", "3,1,4,2", "--r", "2",
                             "--schedule", "random", "--seed", "7"});
    CHECK(random.code == 0);
    CHECK(contains(random.out, "result: 1,2,3,4,5"));
    CHECK(contains(random.out, "sorted: yes"));

    const auto bad_r = run({"topple", "--perm", "3,1,4,2", "--r", "9"});
    CHECK(bad_r.code == 2);
    CHECK(contains(bad_r.err, "error:"));

    CHECK(run({"topple", "--perm", "3,1,4,2", "--r", "2", "--trace",
               "--schedule", "random"}).code == 2);
}

TEST_CASE("count commands") {
    const auto exc = run({"count", "exc", "--n", "8", "--m", "3"});
    CHECK(exc.code == 0);
    CHECK(exc.out == "3451\n");

    for (const std::string method : {"formula", "brute", "sorts"}) {
        const auto ao = run({"count", "ao", "--parts", "2,2", "--method", method});
        CHECK(ao.code == 0);
        CHECK(ao.out == "14\n");
    }

    for (const std::string method : {"formula", "brute", "sorts"}) {
        const auto auso = run({"count", "auso", "--parts", "3,3", "--sink", "4",
                               "--method", method});
        CHECK(auso.code == 0);
        CHECK(auso.out == "31\n");
    }

    // A sink outside the first part exercises the part rotation.
    for (const std::string method : {"formula", "brute"}) {
        const auto rotated = run({"count", "auso", "--parts", "3,4", "--sink", "5",
                                  "--method", method});
        CHECK(rotated.code == 0);
        CHECK(rotated.out == "115\n");
    }

    const auto triple = run({"count", "auso", "--parts", "2,2,2"});
    CHECK(triple.code == 0);
    CHECK(triple.out == "64\n");

    CHECK(run({"count", "exc", "--n", "3", "--m", "5"}).code == 2);
    CHECK(run({"count", "ao", "--parts", "2,2", "--method", "magic"}).code == 2);
}

TEST_CASE("table commands") {
    const auto t = run({"table", "t", "--n-max", "8", "--format", "bfile"});
    CHECK(t.code == 0);
    CHECK(t.out == "2 1\n3 3\n4 7\n5 31\n6 115\n7 675\n8 3451\n");

    const auto tr = run({"table", "t_r", "--n-max", "4", "--format", "csv"});
    CHECK(tr.code == 0);
    CHECK(tr.out == "n,r=1,r=2,r=3,r=4,r=5\n3,4,3,3,4,\n4,14,10,7,7,8\n");

    CHECK(run({"table", "t_r", "--n-max", "4", "--format", "bfile"}).code == 2);
    CHECK(run({"table", "t_r", "--n-max", "11"}).code == 2);

    const auto turan = run({"table", "turan", "--n-max", "5", "--format", "csv"});
    CHECK(turan.code == 0);
    CHECK(contains(turan.out, "5,0,7,14,18,24"));

    const auto json_a = run({"table", "t", "--n-max", "6", "--format", "json"});
    const auto json_b = run({"table", "t", "--n-max", "6", "--format", "json"});
    CHECK(json_a.code == 0);
    CHECK(json_a.out == json_b.out);
    CHECK(contains(json_a.out, "{\"n\":2,\"t\":1}\n"));
}

TEST_CASE("seidel command") {
    const auto r = run({"seidel", "--rows", "5", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,k=2,k=3,k=4\n1,1,,\n2,1,,\n3,1,1,\n4,2,1,\n5,2,3,3\n");
}

TEST_CASE("collapsed and dellac commands") {
    const auto count = run({"collapsed", "--n", "5", "--format", "bfile"});
    CHECK(count.code == 0);
    CHECK(count.out == "5 17\n");

    const auto list = run({"collapsed", "--n", "4", "--list", "--format", "csv"});
    CHECK(list.code == 0);
    CHECK(list.out == "perm\n\"1,2,3,4\"\n\"1,3,2,4\"\n");

    const auto dcount = run({"dellac", "--order", "3", "--format", "bfile"});
    CHECK(dcount.code == 0);
    CHECK(dcount.out == "3 7\n");

    const auto dlist = run({"dellac", "--order", "2", "--list", "--format", "csv"});
    CHECK(dlist.code == 0);
    CHECK(dlist.out == "config\n\"(1,1)(2,1)(3,2)(4,2)\"\n\"(1,1)(2,2)(3,1)(4,2)\"\n");

    CHECK(run({"collapsed", "--n", "4", "--count", "--list"}).code == 2);
    CHECK(run({"dellac", "--order", "0"}).code == 2);
}

TEST_CASE("bijection commands") {
    const auto flip = run({"bij", "topp2exc", "--perm", "3,1,5,2,4"});
    CHECK(flip.code == 0);
    CHECK(flip.out == "5,3,2,4,1\n");

    const auto auso = run({"bij", "exc2auso", "--perm", "3,9,6,7,5,2,4,8,1",
                           "--m", "4", "--n", "5"});
    CHECK(auso.code == 0);
    CHECK(contains(auso.out, "sort: 8 5 4 7 1 3 6 2 9"));
    CHECK(contains(auso.out, "4->7"));
    CHECK(contains(auso.out, "1->6"));
    CHECK(contains(auso.out, "5->3"));  // 5 precedes 3 in the sort
    CHECK(contains(auso.out, "8->1"));

    CHECK(run({"bij", "exc2auso", "--perm", "3,9,6,7,5,2,4,8,1",
               "--m", "3", "--n", "6"}).code == 2);

    const auto rt = run({"bij", "roundtrip", "--m", "2", "--n", "3"});
    CHECK(rt.code == 0);
    CHECK(contains(rt.out, "roundtrip ok: 31 permutations, 31 orientations"));

    CHECK(run({"bij", "roundtrip", "--m", "5", "--n", "5"}).code == 2);
}

TEST_CASE("turan command") {
    const auto r = run({"turan", "--n", "7", "--r", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "504\n");
    CHECK(run({"turan", "--n", "3", "--r", "4"}).code == 2);
}

TEST_CASE("extremal command") {
    const auto near = run({"extremal", "--n", "4", "--m", "5"});
    CHECK(near.code == 0);
    CHECK(contains(near.out, "max ao: 18"));
    CHECK(contains(near.out, "labeled maximizers: 6"));

    const auto full = run({"extremal", "--n", "4", "--m", "6"});
    CHECK(full.code == 0);
    CHECK(contains(full.out, "max ao: 24"));
    CHECK(contains(full.out, "labeled maximizers: 1"));
}

TEST_CASE("chromatic command") {
    const auto path = std::filesystem::temp_directory_path() / "toppcomb_cli_graph.txt";
    {
        std::ofstream f(path);
        f << "4 4\n1 3\n1 4\n2 3\n2 4\n";
    }
    const auto r = run({"chromatic", "--graph", path.string()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "coefficients (constant term first): 0 -3 6 -4 1"));
    CHECK(contains(r.out, "acyclic orientations: 14"));
    CHECK(contains(r.out, "unique-sink acyclic orientations per sink: 3"));
    std::filesystem::remove(path);

    CHECK(run({"chromatic", "--graph", (path.parent_path() / "missing.txt").string()}).code == 2);
}

TEST_CASE("verify command") {
    const auto genocchi = run({"verify", "genocchi"});
    CHECK(genocchi.code == 0);
    CHECK(contains(genocchi.out, "PASS"));
    CHECK(contains(genocchi.out, "passed 1/1"));

    const auto turan = run({"verify", "turan"});
    CHECK(turan.code == 0);
    CHECK(contains(turan.out, "PASS"));

    const auto schedule = run({"verify", "schedule", "--max-n", "3"});
    CHECK(schedule.code == 0);

    CHECK(run({"verify", "nosuchsuite"}).code == 2);
}

TEST_CASE("usage errors and help") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"table", "t", "--format", "xml"}).code == 2);
    CHECK(run({"topple", "--r", "2"}).code == 2);  // missing --perm
}
