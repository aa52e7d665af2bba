#pragma once

// Executable theorem suites. Theorem suites compare classifier predictions
// with oracle factor sets degree by degree; the combinatorial and oracle
// self-audit suites check internal invariants exhaustively.

#include <optional>
#include <string>
#include <vector>

#include "schurkit/json_io.hpp"
#include "schurkit/oracle.hpp"
#include "schurkit/partition.hpp"

namespace schurkit {

struct Discrepancy {
    std::string check;
    Partition partition;
    std::string expected;
    std::string actual;
};

/// One row per partition in the union of predicted and observed sets.
struct SetRow {
    int degree = 0;
    Partition partition;
    bool in_theorem = false;
    bool in_oracle = false;
};

/// A named anchor value observed along the way. A required witness that does
/// not hold is also a discrepancy; the others are recorded facts.
struct Witness {
    std::string claim;
    Partition partition;
    int degree = 0;
    bool holds = false;
    bool required = true;
};

struct SubReport {
    std::string name;
    bool skipped = false;
    std::string note;
    std::size_t checked = 0;
    std::size_t failures = 0;
};

struct SuiteReport {
    std::string suite;
    json params = json::object();
    std::vector<Discrepancy> discrepancies;
    std::vector<SubReport> subs;
    std::vector<Witness> witnesses;
    std::vector<SetRow> rows;
    double elapsed_seconds = 0;
    std::optional<OracleStats> oracle_stats;

    bool pass() const noexcept { return discrepancies.empty(); }
    /// Report document; elapsed time is omitted when `with_elapsed` is false
    /// so that two runs can be compared byte for byte.
    json to_json(bool with_elapsed = true) const;
};

/// Factor sets of S(E)⊗S(E) against standard partitions.
SuiteReport suite_thm_2good(int p, int n, int rmax, SimpleTable& table, unsigned threads = 1);
/// Factor sets of S̄(E)⊗S̄(E)⊗Λ(E) against μ + ω_s with μ 2-special.
SuiteReport suite_thm_21special(int p, int n, int rmax, SimpleTable& table, unsigned threads = 1);
/// Factor sets of S̄(E) against (p-1)^k a.
SuiteReport suite_1special(int p, int n, int rmax, SimpleTable& table, unsigned threads = 1);
/// Exhaustive invariants of the partition calculus and the classification.
SuiteReport suite_combinatorial(int p, int bound);
/// Steinberg, semisimple, block, dimension, stability and restricted
/// good = special audits for all weights of degree <= rmax.
SuiteReport suite_oracle_self(int p, int n, int rmax, SimpleTable& table, unsigned threads = 1);

/// Sanity, Steinberg, semisimple, block and dimension audits on every simple
/// character currently stored in the table.
SuiteReport audit_table(SimpleTable& table);

/// Rim-hook removal on the diagram, independent of the abacus: the set of
/// partitions reachable by removing every rim p-hook in every order.
std::vector<Partition> rim_hook_removals(const Partition& lambda, int p);

struct SuiteConfig {
    int p = 2;
    int n = 1;
    int rmax = 0;
};

enum class Tier { Fast, Extended };

/// Named degree budgets. For the combinatorial suite n is unused and rmax is
/// the degree bound.
std::vector<SuiteConfig> tier_configs(const std::string& suite, Tier tier);
const std::vector<std::string>& suite_names();

/// Dispatch by name; the table must match (p, n) for oracle-backed suites.
SuiteReport run_suite(const std::string& suite, const SuiteConfig& config, SimpleTable* table, unsigned threads = 1);

} // namespace schurkit
