#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cxh/solver.hpp"

namespace cxh {

// Outcome of one catalog check.  Inconclusive means the search budget ran
// out before the check could decide; it never counts as passed.
enum class CheckStatus { Passed, Failed, Inconclusive };
const char* check_status_name(CheckStatus s);

// A catalog entry to run.  Instance ranges live in the catalog itself;
// max_order caps (or raises) each check's principal size knob, with 0
// keeping the check's default.  Checks built on exhaustive
// isomorphism-free enumeration clamp the knob to 6.
struct TheoremCheck {
    std::string id;
    std::uint64_t seed = 42;
    int max_order = 0;
    SearchBudget budget;  // per-instance solver budget; {} = solver defaults
};

// A failed check embeds everything needed to replay the failure without
// the generator: the offending graphs as edge-list text, the vertex sets
// involved, and a message with the mismatching values.
struct Counterexample {
    std::string detail;
    std::vector<std::string> graphs;
    std::vector<std::string> sets;
};

struct TheoremReport {
    std::string id;
    CheckStatus status = CheckStatus::Passed;
    bool passed = false;
    int instances_run = 0;
    double wallclock = 0.0;  // seconds; the only field allowed to differ between equal runs
    std::string note;
    std::optional<Counterexample> counterexample;
};

// Ids of the standard suite, sorted.  The negative control "NEG-control"
// (a deliberately false assertion proving the harness can fail) is
// addressable by id but excluded here.
std::vector<std::string> catalog_ids();
bool catalog_has(const std::string& id);

// Runs one check.  Unknown id or an id/size combination that generates no
// instances throws invalid_argument.  Deterministic given seed and budget.
TheoremReport run_check(const TheoremCheck& check);

struct SuiteConfig {
    std::uint64_t seed = 42;
    int max_order = 0;
    int parallelism = 1;
    SearchBudget budget;
};

// Runs the given checks (duplicates collapsed) and returns reports sorted
// by id.  Each check draws its randomness from (seed, id) only, so the
// reports do not depend on parallelism or completion order.
std::vector<TheoremReport> run_suite(const std::vector<std::string>& ids,
                                     const SuiteConfig& config = {});

// JSON round-trip for reports: parse(emit(r)) reproduces r exactly.
std::string reports_to_json(const std::vector<TheoremReport>& reports);
std::vector<TheoremReport> reports_from_json(const std::string& text);

}  // namespace cxh
