#include "rado/solver.hpp"

#include <algorithm>
#include <map>

#include "rado/errors.hpp"
#include "rado/oracle.hpp"

namespace rado {

namespace {

std::vector<Int> sorted_unique(const SolutionTuple& sol) {
    std::vector<Int> out = sol;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

ClauseSet::ClauseSet(LinearEquation e0, LinearEquation e1, ClauseBuildOptions options,
                     EnumerationLimits limits)
    : e0_(std::move(e0)), e1_(std::move(e1)), options_(options), limits_(limits) {}

void ClauseSet::add_solution(const SolutionTuple& sol, Color demanded) {
    std::vector<Int> members = sorted_unique(sol);
    std::vector<Int> forceable;
    if (options_.track_forceable) {
        // Everything except the z-slot values: the literal rules only ever
        // color a positive-coefficient slot.
        const LinearEquation& eq = demanded == Color::Blue ? e0_ : e1_;
        for (std::size_t i = 0; i < sol.size(); ++i)
            if (eq.coeffs()[i] > 0)
                forceable.push_back(sol[i]);
        forceable = sorted_unique(forceable);
    }

    auto key = std::make_pair(static_cast<int>(demanded), members);
    if (auto it = index_.find(key); it != index_.end()) {
        if (options_.track_forceable) {
            auto& existing = forceable_[it->second];
            std::vector<Int> merged;
            std::set_union(existing.begin(), existing.end(), forceable.begin(), forceable.end(),
                           std::back_inserter(merged));
            existing = std::move(merged);
        }
        return;
    }
    if (options_.subsume && members.size() <= 16) {
        // Drop the new clause if any sub-set of it is already demanded.
        std::size_t k = members.size();
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
            std::vector<Int> subset;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::size_t{1} << i))
                    subset.push_back(members[i]);
            if (index_.count({static_cast<int>(demanded), subset}))
                return;
        }
    }
    index_.emplace(std::move(key), clauses_.size());
    clauses_.push_back(Clause{demanded, std::move(members)});
    forceable_.push_back(std::move(forceable));
}

void ClauseSet::extend_to(Int n) {
    for (Int m = horizon_ + 1; m <= n; ++m) {
        for (const SolutionTuple& sol : solutions_involving(e0_, m, m, limits_))
            add_solution(sol, Color::Blue);
        for (const SolutionTuple& sol : solutions_involving(e1_, m, m, limits_))
            add_solution(sol, Color::Red);
    }
    horizon_ = std::max(horizon_, n);
}

std::size_t ClauseSet::active_count(Int n) const {
    auto it = std::upper_bound(clauses_.begin(), clauses_.end(), n,
                               [](Int v, const Clause& c) { return v < c.members.back(); });
    return static_cast<std::size_t>(it - clauses_.begin());
}

std::vector<Clause> build_clauses(const LinearEquation& e0, const LinearEquation& e1, Int n,
                                  const EnumerationLimits& limits) {
    ClauseSet cs(e0, e1, ClauseBuildOptions{}, limits);
    cs.extend_to(n);
    return cs.clauses();
}

namespace {

constexpr std::uint8_t kUnset = 2;

/// Counter-based unit propagation plus chronological DFS over one prefix
/// of a clause database.
class Search {
  public:
    Search(const ClauseSet& cs, Int n, bool pair_rules_only)
        : cs_(cs), n_(n), pair_rules_only_(pair_rules_only),
          active_(cs.active_count(n)) {
        cell_.assign(static_cast<std::size_t>(n) + 1, kUnset);
        num_sat_.assign(active_, 0);
        num_against_.assign(active_, 0);
        occ_.assign(static_cast<std::size_t>(n) + 1, {});
        for (std::size_t ci = 0; ci < active_; ++ci)
            for (Int m : cs.clauses()[ci].members)
                occ_[static_cast<std::size_t>(m)].push_back(static_cast<std::uint32_t>(ci));
        for (Int p = 1; p <= n; ++p)
            if (!occ_[static_cast<std::size_t>(p)].empty())
                constrained_.push_back(p);
    }

    bool is_set(Int pos) const { return cell_[static_cast<std::size_t>(pos)] != kUnset; }
    Color color_at(Int pos) const {
        return static_cast<Color>(cell_[static_cast<std::size_t>(pos)]);
    }

    // Counters are kept in sync here and in undo_to so that an early conflict
    // return from propagate never leaves them half-updated.
    void assign(Int pos, Color c) {
        cell_[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(c);
        trail_.push_back({pos, c});
        for (std::uint32_t ci : occ_[static_cast<std::size_t>(pos)]) {
            if (c == cs_.clauses()[ci].demanded)
                ++num_sat_[ci];
            else
                ++num_against_[ci];
        }
    }

    /// Seeds an initial assignment; false means the position already holds
    /// the opposite color.
    bool seed(Int pos, Color c) {
        if (is_set(pos))
            return color_at(pos) == c;
        assign(pos, c);
        return true;
    }

    bool propagate(SolverStats& stats) { // false on conflict
        while (prop_head_ < trail_.size()) {
            auto [pos, color] = trail_[prop_head_++];
            for (std::uint32_t ci : occ_[static_cast<std::size_t>(pos)]) {
                const Clause& c = cs_.clauses()[ci];
                if (color == c.demanded)
                    continue;
                auto size = static_cast<std::uint32_t>(c.members.size());
                if (num_against_[ci] == size) {
                    ++stats.conflicts;
                    return false;
                }
                if (num_sat_[ci] == 0 && num_against_[ci] == size - 1) {
                    Int u = 0;
                    for (Int m : c.members)
                        if (!is_set(m)) {
                            u = m;
                            break;
                        }
                    if (u == 0)
                        continue; // counters say otherwise; unreachable
                    if (pair_rules_only_) {
                        const auto& ok = cs_.forceable(ci);
                        if (!std::binary_search(ok.begin(), ok.end(), u))
                            continue;
                    }
                    assign(u, c.demanded);
                    ++stats.propagations;
                }
            }
        }
        return true;
    }

    const std::vector<std::pair<Int, Color>>& trail() const { return trail_; }

    SolveResult run(std::chrono::steady_clock::time_point deadline) {
        SolveResult result;
        if (!propagate(result.stats)) {
            result.verdict = Verdict::Unsatisfiable;
            return result;
        }
        struct Frame {
            std::size_t trail_mark;
            Int pos;
            bool tried_blue;
        };
        std::vector<Frame> decisions;
        for (;;) {
            if (std::chrono::steady_clock::now() > deadline) {
                result.verdict = Verdict::Indeterminate;
                return result;
            }
            Int pos = 0;
            for (Int p : constrained_)
                if (!is_set(p)) {
                    pos = p;
                    break;
                }
            if (pos == 0) {
                result.verdict = Verdict::Satisfiable;
                result.witness = extract_coloring();
                return result;
            }
            decisions.push_back({trail_.size(), pos, false});
            ++result.stats.decisions;
            assign(pos, Color::Red);
            while (!propagate(result.stats)) {
                if ((result.stats.conflicts & 1023) == 0 &&
                    std::chrono::steady_clock::now() > deadline) {
                    result.verdict = Verdict::Indeterminate;
                    return result;
                }
                bool recovered = false;
                while (!decisions.empty()) {
                    Frame& f = decisions.back();
                    undo_to(f.trail_mark);
                    if (!f.tried_blue) {
                        f.tried_blue = true;
                        ++result.stats.decisions;
                        assign(f.pos, Color::Blue);
                        recovered = true;
                        break;
                    }
                    decisions.pop_back();
                }
                if (!recovered) {
                    result.verdict = Verdict::Unsatisfiable;
                    return result;
                }
            }
        }
    }

  private:
    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            auto [pos, color] = trail_.back();
            trail_.pop_back();
            for (std::uint32_t ci : occ_[static_cast<std::size_t>(pos)]) {
                if (color == cs_.clauses()[ci].demanded)
                    --num_sat_[ci];
                else
                    --num_against_[ci];
            }
            cell_[static_cast<std::size_t>(pos)] = kUnset;
        }
        prop_head_ = mark;
    }

    Coloring extract_coloring() const {
        std::vector<Color> cells(static_cast<std::size_t>(n_), Color::Red);
        for (Int p = 1; p <= n_; ++p)
            if (is_set(p))
                cells[static_cast<std::size_t>(p - 1)] = color_at(p);
        return Coloring(std::move(cells));
    }

    const ClauseSet& cs_;
    Int n_;
    bool pair_rules_only_;
    std::size_t active_;
    std::vector<std::uint8_t> cell_;
    std::vector<std::uint32_t> num_sat_, num_against_;
    std::vector<std::vector<std::uint32_t>> occ_;
    std::vector<Int> constrained_;
    std::vector<std::pair<Int, Color>> trail_;
    std::size_t prop_head_ = 0;
};

} // namespace

PropagationOutcome propagate_fixpoint(const LinearEquation& e0, const LinearEquation& e1, Int n,
                                      const std::vector<Int>& red_seed,
                                      const std::vector<Int>& blue_seed, bool pair_rules_only) {
    for (Int v : red_seed)
        if (std::find(blue_seed.begin(), blue_seed.end(), v) != blue_seed.end())
            throw PreconditionError("seed sets must be disjoint");
    ClauseSet cs(e0, e1, ClauseBuildOptions{.subsume = false, .track_forceable = pair_rules_only});
    cs.extend_to(n);
    Search search(cs, n, pair_rules_only);
    PropagationOutcome out;
    for (Int v : red_seed)
        search.seed(v, Color::Red);
    for (Int v : blue_seed)
        search.seed(v, Color::Blue);
    std::size_t seeds = search.trail().size();
    SolverStats stats;
    out.conflict = !search.propagate(stats);
    out.forced.assign(search.trail().begin() + static_cast<std::ptrdiff_t>(seeds),
                      search.trail().end());
    return out;
}

ForcingRound schaal_force(Int t, Int q, Int s, const std::set<Int>& red,
                          const std::set<Int>& blue, Int n) {
    if (t < 1 || q < 1 || s < 1)
        throw PreconditionError("schaal_force requires positive t, q, s");
    auto in_window = [&](const std::set<Int>& set) {
        return set.empty() || (*set.begin() >= 1 && *set.rbegin() <= n);
    };
    if (!in_window(red) || !in_window(blue))
        throw PreconditionError("schaal_force seed sets must lie in [1,N]");
    for (Int v : red)
        if (blue.count(v))
            throw PreconditionError("schaal_force seed sets must be disjoint");

    ForcingRound round;
    std::set<Int> new_red, new_blue;
    auto force = [&](Int w, Color c) {
        if (round.contradiction)
            return;
        const std::set<Int>& opposite = c == Color::Red ? blue : red;
        if (opposite.count(w)) {
            round.contradiction = w;
            return;
        }
        const std::set<Int>& same = c == Color::Red ? red : blue;
        auto& fresh = c == Color::Red ? new_red : new_blue;
        if (!same.count(w))
            fresh.insert(w);
    };
    auto one_side = [&](const std::set<Int>& from, Int j, Color to) {
        // j is q on the red side, s on the blue side.
        for (Int x : from) {
            for (Int y : from) {
                Int d1 = checked_sub(y, checked_mul(t, x));
                if (d1 > 0 && d1 % j == 0)
                    force(d1 / j, to); // rule 1
                Int d2 = checked_sub(y, checked_mul(j, x));
                if (d2 > 0 && d2 % t == 0)
                    force(d2 / t, to); // rule 2
            }
            if (x % (j + t) == 0)
                force(x / (j + t), to); // rule 3
        }
    };
    one_side(red, q, Color::Blue);
    one_side(blue, s, Color::Red);
    round.forced_red.assign(new_red.begin(), new_red.end());
    round.forced_blue.assign(new_blue.begin(), new_blue.end());
    return round;
}

ForcingFixpoint schaal_fixpoint(Int t, Int q, Int s, std::set<Int> red, std::set<Int> blue,
                                Int n) {
    ForcingFixpoint fix;
    for (;;) {
        ForcingRound round = schaal_force(t, q, s, red, blue, n);
        if (round.contradiction) {
            fix.contradiction = true;
            break;
        }
        bool grew = false;
        for (Int v : round.forced_red)
            grew |= red.insert(v).second;
        for (Int v : round.forced_blue)
            grew |= blue.insert(v).second;
        bool overlap = std::any_of(round.forced_red.begin(), round.forced_red.end(),
                                   [&](Int v) { return blue.count(v) != 0; });
        if (overlap) {
            fix.contradiction = true;
            break;
        }
        if (!grew)
            break;
    }
    fix.red = std::move(red);
    fix.blue = std::move(blue);
    return fix;
}

SolveResult solve(const ClauseSet& clauses, Int n, const SolveOptions& options) {
    if (clauses.horizon() < n)
        throw PreconditionError("clause set horizon below requested N");
    Search search(clauses, n, false);
    auto deadline = std::chrono::steady_clock::now() + options.budget;
    SolveResult result = search.run(deadline);
    if (result.verdict == Verdict::Satisfiable) {
        ValidityReport report =
            check_valid(*result.witness, clauses.e0(), clauses.e1(), options.limits);
        if (!report.valid)
            throw Error("internal: solver returned a coloring the oracle rejects");
    }
    return result;
}

SolveResult solve(const LinearEquation& e0, const LinearEquation& e1, Int n,
                  const SolveOptions& options) {
    ClauseSet cs(e0, e1, ClauseBuildOptions{.subsume = true}, options.limits);
    cs.extend_to(n);
    return solve(cs, n, options);
}

ComputeOutcome compute_rr(const LinearEquation& e0, const LinearEquation& e1, Int start_hint,
                          const ComputeOptions& options) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    auto total_deadline = options.total_budget.count() > 0
                              ? t0 + options.total_budget
                              : clock::time_point::max();
    ComputeOutcome out;
    auto finish = [&](std::optional<RRResult> result) {
        out.elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0);
        if (result) {
            result->stats = out.stats;
            result->elapsed = out.elapsed;
            out.best_lower_bound = result->value;
            out.best_witness = result->witness;
            out.result = std::move(result);
        }
        return out;
    };

    ClauseSet cs(e0, e1, ClauseBuildOptions{.subsume = true}, options.limits);
    auto run_at = [&](Int n) {
        cs.extend_to(n);
        SolveOptions so;
        so.limits = options.limits;
        so.budget = options.per_n_budget;
        auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
            total_deadline - clock::now());
        if (remaining < so.budget)
            so.budget = std::max(remaining, std::chrono::milliseconds(0));
        SolveResult r = solve(cs, n, so);
        out.stats += r.stats;
        return r;
    };

    // Find a satisfiable base below the hint; hints are not trusted.
    Int base = std::max<Int>(start_hint, 2) - 1;
    std::optional<Coloring> witness;
    while (base >= 1) {
        SolveResult r = run_at(base);
        if (r.verdict == Verdict::Indeterminate)
            return finish(std::nullopt);
        if (r.verdict == Verdict::Satisfiable) {
            witness = std::move(r.witness);
            break;
        }
        --base;
    }
    if (base == 0) // even [1,1] admits no valid coloring
        return finish(RRResult{1, std::nullopt, {}, {}});

    out.best_lower_bound = base + 1;
    out.best_witness = witness;
    for (Int n = base + 1; n <= options.cap; ++n) {
        SolveResult r = run_at(n);
        if (r.verdict == Verdict::Unsatisfiable)
            return finish(RRResult{n, witness, {}, {}});
        if (r.verdict == Verdict::Indeterminate)
            return finish(std::nullopt);
        witness = std::move(r.witness);
        out.best_lower_bound = n + 1;
        out.best_witness = witness;
    }
    return finish(std::nullopt); // cap exhausted
}

} // namespace rado
