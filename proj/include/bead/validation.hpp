#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bead {

struct CheckResult {
    std::string suite, check;
    bool passed = false;
    double measure = 0, threshold = 0;
    std::string note;
};

enum class Level { quick, full };

struct ValidationOptions {
    Level level = Level::full;
    std::uint64_t seed = 20240611;
    unsigned threads = 1;
    std::string svg_path;  // where the shape check writes its figure; empty = skip the file
};

// one function per numbered acceptance criterion; each returns its sub-checks
std::vector<CheckResult> check_uniform_case(const ValidationOptions& o);        // 1
std::vector<CheckResult> check_two_line_density(const ValidationOptions& o);    // 2
std::vector<CheckResult> check_first_line_law(const ValidationOptions& o);      // 3
std::vector<CheckResult> check_interlacing(const ValidationOptions& o);         // 4
std::vector<CheckResult> check_counting(const ValidationOptions& o);            // 5
std::vector<CheckResult> check_projection(const ValidationOptions& o);          // 6
std::vector<CheckResult> check_joint_oracle(const ValidationOptions& o);        // 7
std::vector<CheckResult> check_l_ensemble(const ValidationOptions& o);          // 8
std::vector<CheckResult> check_discrete(const ValidationOptions& o);            // 9
std::vector<CheckResult> check_asymptotics(const ValidationOptions& o);         // 10
std::vector<CheckResult> check_bulk(const ValidationOptions& o);                // 11
std::vector<CheckResult> check_global_shape(const ValidationOptions& o);        // 12
std::vector<CheckResult> check_boutillier(const ValidationOptions& o);          // 13

// suite names: kernel, sampler, discrete, asymptotics, bulk, all
std::vector<CheckResult> run_suite(const std::string& suite, const ValidationOptions& o);
bool known_suite(const std::string& suite);

// windowed asymptotic error: max over m in [n, n + n/4) of |approx - exact| / envelope
double windowed_asymptotic_error(int n, double alpha, double beta, double a, double b, double z);

}  // namespace bead
