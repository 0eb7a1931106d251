#ifndef RADO_SOLVER_HPP
#define RADO_SOLVER_HPP

#include <chrono>
#include <map>
#include <optional>
#include <set>

#include "rado/coloring.hpp"
#include "rado/equation.hpp"

namespace rado {

/// "At least one member gets the demanded color." A Blue-demand clause
/// encodes that an e0 solution must not be all Red, and symmetrically.
struct Clause {
    Color demanded;
    std::vector<Int> members; // sorted, deduplicated, nonempty

    bool operator==(const Clause&) const = default;
};

struct ClauseBuildOptions {
    // Drop clauses whose member set is a superset of a same-demand clause.
    bool subsume = false;
    // Record, per clause, which members the pairwise forcing rules may
    // color (everything except the z-slot of the generating solutions).
    bool track_forceable = false;
};

/// Incremental clause database for a fixed equation pair. Clauses are kept
/// in order of increasing maximum member, so the clauses relevant to a
/// sub-interval [1,N] form a prefix.
class ClauseSet {
  public:
    ClauseSet(LinearEquation e0, LinearEquation e1, ClauseBuildOptions options = {},
              EnumerationLimits limits = {});

    void extend_to(Int n);
    Int horizon() const { return horizon_; }

    const LinearEquation& e0() const { return e0_; }
    const LinearEquation& e1() const { return e1_; }

    const std::vector<Clause>& clauses() const { return clauses_; }
    /// Number of clauses whose members all lie in [1,n]; a prefix length.
    std::size_t active_count(Int n) const;
    /// Members of clause ci that a forcing step may color (only meaningful
    /// when built with track_forceable).
    const std::vector<Int>& forceable(std::size_t ci) const { return forceable_[ci]; }

  private:
    void add_solution(const SolutionTuple& sol, Color demanded);

    LinearEquation e0_, e1_;
    ClauseBuildOptions options_;
    EnumerationLimits limits_;
    Int horizon_ = 0;
    std::vector<Clause> clauses_;
    std::vector<std::vector<Int>> forceable_;
    std::map<std::pair<int, std::vector<Int>>, std::size_t> index_; // (demand, members) -> slot
};

/// Clauses for the pair at horizon N: one per distinct value-set per
/// equation, e0 solutions demanding Blue and e1 solutions demanding Red.
std::vector<Clause> build_clauses(const LinearEquation& e0, const LinearEquation& e1, Int n,
                                  const EnumerationLimits& limits = {});

struct SolverStats {
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t conflicts = 0;

    SolverStats& operator+=(const SolverStats& o) {
        decisions += o.decisions;
        propagations += o.propagations;
        conflicts += o.conflicts;
        return *this;
    }
};

/// Unit propagation to fixpoint from seed sets.
struct PropagationOutcome {
    bool conflict = false;
    // Forced assignments beyond the seeds, in derivation order.
    std::vector<std::pair<Int, Color>> forced;
};

/// When pair_rules_only is set, a clause never forces the z-slot member of
/// its generating solutions, mirroring the literal forcing rules (which
/// only ever derive smaller elements).
PropagationOutcome propagate_fixpoint(const LinearEquation& e0, const LinearEquation& e1, Int n,
                                      const std::vector<Int>& red_seed,
                                      const std::vector<Int>& blue_seed,
                                      bool pair_rules_only = false);

/// One round of the six literal forcing rules for the pair
/// (tx+qy=z Red-avoiding, tx+sy=z Blue-avoiding) over ordered pairs from R
/// and from B inside [1,N].
struct ForcingRound {
    std::vector<Int> forced_red;
    std::vector<Int> forced_blue;
    std::optional<Int> contradiction; // element forced to its opposite color
};

ForcingRound schaal_force(Int t, Int q, Int s, const std::set<Int>& red,
                          const std::set<Int>& blue, Int n);

/// schaal_force rounds iterated to fixpoint.
struct ForcingFixpoint {
    std::set<Int> red;
    std::set<Int> blue;
    bool contradiction = false;
};

ForcingFixpoint schaal_fixpoint(Int t, Int q, Int s, std::set<Int> red, std::set<Int> blue,
                                Int n);

enum class Verdict { Satisfiable, Unsatisfiable, Indeterminate };

struct SolveOptions {
    std::chrono::milliseconds budget{300'000}; // per (instance, N)
    EnumerationLimits limits{};
};

struct SolveResult {
    Verdict verdict = Verdict::Indeterminate;
    std::optional<Coloring> witness; // present iff Satisfiable, oracle-checked
    SolverStats stats;
};

/// Propagation-based chronological backtracking over [1,N]. Deterministic:
/// branch on the lowest constrained unset position, Red before Blue.
SolveResult solve(const LinearEquation& e0, const LinearEquation& e1, Int n,
                  const SolveOptions& options = {});

/// Same search against an already-built clause database (shared across an
/// upward scan); only clauses inside [1,n] participate.
SolveResult solve(const ClauseSet& clauses, Int n, const SolveOptions& options = {});

struct RRResult {
    Int value = 0;
    std::optional<Coloring> witness; // valid coloring of [1, value-1]
    SolverStats stats;               // aggregated over the whole scan
    std::chrono::milliseconds elapsed{0};
};

struct ComputeOptions {
    Int cap = 100'000;                                 // largest N tried
    std::chrono::milliseconds per_n_budget{300'000};   // per solve call
    std::chrono::milliseconds total_budget{0};         // 0 = unlimited
    EnumerationLimits limits{};
};

struct ComputeOutcome {
    std::optional<RRResult> result;       // present iff the value is exact
    Int best_lower_bound = 0;             // RR >= this much is proven
    std::optional<Coloring> best_witness; // certificate for the bound
    SolverStats stats;
    std::chrono::milliseconds elapsed{0};
};

/// Exact RR by scanning N upward. The scan first verifies satisfiability at
/// start_hint-1 and backs down if that fails, so a wrong hint cannot
/// corrupt the answer.
ComputeOutcome compute_rr(const LinearEquation& e0, const LinearEquation& e1, Int start_hint,
                          const ComputeOptions& options = {});

} // namespace rado

#endif
