#pragma once

#include <string>
#include <vector>

namespace toppcomb {

struct VerifyOptions {
    int max_n = 0;    // 0 = each suite's full documented range; otherwise a cap
    int workers = 1;  // for the permutation scans
};

struct VerifyResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // what was checked, or the first failure
};

// The twelve cross-verification suites. Each one re-derives its expected values
// from an independent route (frozen reference tables, brute-force scans, or a
// second formula) and never trusts the code path under test.
VerifyResult verify_table1(const VerifyOptions& opt = {});        //  1 per-value toppling counts
VerifyResult verify_headline(const VerifyOptions& opt = {});      //  2 simulation = band test = class formula
VerifyResult verify_schedule(const VerifyOptions& opt = {});      //  3 schedule independence
VerifyResult verify_monotonicity(const VerifyOptions& opt = {});  //  4 r-toppleability ladders
VerifyResult verify_symmetry(const VerifyOptions& opt = {});      //  5 reverse-complement symmetry, odd n
VerifyResult verify_genocchi(const VerifyOptions& opt = {});      //  6 triangle rows and both Genocchi kinds
VerifyResult verify_collapsed(const VerifyOptions& opt = {});     //  7 collapsed counts and both bijections
VerifyResult verify_ursell(const VerifyOptions& opt = {});        //  8 toppleable <-> unique-sink orientations
VerifyResult verify_formulas(const VerifyOptions& opt = {});      //  9 multipartite counts vs brute force
VerifyResult verify_stanley(const VerifyOptions& opt = {});       // 10 chromatic evaluations vs orientation scans
VerifyResult verify_turan(const VerifyOptions& opt = {});         // 11 Turan table, closed form, differences
VerifyResult verify_extremal(const VerifyOptions& opt = {});      // 12 slides and maximizer scans

const std::vector<std::string>& verify_suite_names();
VerifyResult run_suite(const std::string& name, const VerifyOptions& opt = {});
std::vector<VerifyResult> verify_all(const VerifyOptions& opt = {});

}
