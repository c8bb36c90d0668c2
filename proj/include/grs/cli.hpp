#pragma once

/*
 * Command front end: each command builds a document describing one
 * system (or a table of systems) and renders it as text, json or csv.
 * Exit codes: 0 success, 1 verification or count failure, 2 invalid
 * input, 3 state cap reached.
 */

#include <array>
#include <cstdint>
#include <string>

namespace grs {

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
    std::array<int64_t, 3> a{1, 1, 1};
    OutputFormat format = OutputFormat::Text;
    uint64_t state_cap = 10000000;
    uint64_t seed = 0;
    int64_t amax = 5;
};

struct RunResult {
    int exit_code = 0;
    std::string document;
};

extern const int kExitSuccess;
extern const int kExitCheckFailed;
extern const int kExitInvalidInput;
extern const int kExitStateCap;

/* System summary plus the pairing, Euler, Coxeter and twist matrices. */
RunResult cmd_info(const RunConfig& cfg);

/* All verification suites for one system; exit 1 on any failed check. */
RunResult cmd_verify(const RunConfig& cfg);

/* Orbit enumeration against the degree formula; exit 3 when capped,
 * exit 1 on a mismatch. */
RunResult cmd_count(const RunConfig& cfg);

/* One row per valid non-decreasing triple with entries up to amax;
 * rows whose formula value fits under the state cap also carry the
 * enumerated count. */
RunResult cmd_table(const RunConfig& cfg);

} // namespace grs
