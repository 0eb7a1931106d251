// Command-line front end: compute off-diagonal Rado numbers, verify and
// emit witness colorings, evaluate closed-form bounds, and reproduce the
// published value table into a resumable JSONL catalog.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 indeterminate (budget or cap), 4 internal self-check failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rado/catalog.hpp"
#include "rado/closed_forms.hpp"
#include "rado/coloring.hpp"
#include "rado/errors.hpp"
#include "rado/oracle.hpp"
#include "rado/solver.hpp"
#include "rado/witness.hpp"

namespace fs = std::filesystem;
using namespace rado;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;
constexpr int kIndeterminate = 3;
constexpr int kSelfCheck = 4;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& bytes) {
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write " + path.string());
    out << bytes;
    if (!out)
        throw IoError("write failed: " + path.string());
}

std::string sanitize(const std::string& eq_text) {
    std::string out;
    for (char c : eq_text)
        out += c == ',' ? '.' : (c == '-' ? 'm' : c);
    return out;
}

std::string tuple_line(const SolutionTuple& sol) {
    std::string out;
    for (std::size_t i = 0; i < sol.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(sol[i]);
    }
    return out;
}

bool cor32_shape(const LinearEquation& eq) {
    const auto& c = eq.coeffs();
    if (c.size() < 3 || c.front() != 1 || c.back() != -1)
        return false;
    return std::all_of(c.begin() + 1, c.end() - 1, [](Int x) { return x >= 1; });
}

// Best closed-form scan hint for the pair; 2 when no formula applies.
Int default_hint(const LinearEquation& e0, const LinearEquation& e1) {
    auto f0 = FForm::from_equation(e0);
    auto f1 = FForm::from_equation(e1);
    if (f0 && f1 && f0->t == f1->t) {
        Int t = f0->t;
        Int q = std::max(f0->j, f1->j);
        Int s = std::min(f0->j, f1->j);
        return s >= t ? lower_bound_thm22(t, q, s) : lower_bound_thm21(t, q, s);
    }
    if (cor32_shape(e0) && cor32_shape(e1)) {
        auto middle_sum = [](const LinearEquation& eq) {
            Int sum = 0;
            for (std::size_t i = 1; i + 1 < eq.coeffs().size(); ++i)
                sum = checked_add(sum, eq.coeffs()[i]);
            return sum;
        };
        Int a = middle_sum(e0), b = middle_sum(e1);
        if (a >= b && b >= 1)
            return exact_rr1(a, b);
    }
    return 2;
}

struct ComputeRecord {
    ComputeOutcome outcome;
    CatalogEntry entry;
};

// Runs one computation and prepares its catalog entry (witness file
// included when exact).
ComputeRecord run_compute(const LinearEquation& e0, const LinearEquation& e1, Int hint,
                          const ComputeOptions& options, const fs::path& witness_path) {
    ComputeRecord rec{compute_rr(e0, e1, hint, options), {}};
    rec.entry.e0 = render_equation(e0);
    rec.entry.e1 = render_equation(e1);
    auto f0 = FForm::from_equation(e0);
    auto f1 = FForm::from_equation(e1);
    if (f0 && f1 && f0->t == f1->t) {
        rec.entry.t = f0->t;
        rec.entry.q = f0->j;
        rec.entry.s = f1->j;
    }
    rec.entry.elapsed_ms = rec.outcome.elapsed.count();
    rec.entry.decisions = rec.outcome.stats.decisions;
    rec.entry.propagations = rec.outcome.stats.propagations;
    rec.entry.conflicts = rec.outcome.stats.conflicts;
    if (rec.outcome.result) {
        rec.entry.status = "exact";
        rec.entry.value = rec.outcome.result->value;
        if (rec.outcome.result->witness) {
            write_file(witness_path, write_coloring(*rec.outcome.result->witness));
            rec.entry.witness_path = witness_path.string();
        }
    } else {
        rec.entry.status = "indeterminate";
        rec.entry.value = rec.outcome.best_lower_bound;
    }
    return rec;
}

int cmd_compute(const std::string& e0_text, const std::string& e1_text, Int t, Int q, Int s,
                Int hint, double budget_s, double total_budget_s, Int cap,
                const fs::path& catalog_path, std::string witness_out) {
    LinearEquation e0 = t > 0 ? FForm(t, q).to_equation() : parse_equation(e0_text);
    LinearEquation e1 = t > 0 ? FForm(t, s).to_equation() : parse_equation(e1_text);
    if (hint <= 0)
        hint = default_hint(e0, e1);
    ComputeOptions options;
    options.cap = cap;
    options.per_n_budget = std::chrono::milliseconds(static_cast<Int>(budget_s * 1000));
    options.total_budget = std::chrono::milliseconds(static_cast<Int>(total_budget_s * 1000));
    fs::path witness_path = witness_out.empty()
                                ? catalog_path.parent_path() /
                                      ("witness_" + sanitize(render_equation(e0)) + "__" +
                                       sanitize(render_equation(e1)) + ".col")
                                : fs::path(witness_out);
    ComputeRecord rec = run_compute(e0, e1, hint, options, witness_path);
    Catalog(catalog_path).append(rec.entry);
    if (rec.entry.status != "exact") {
        std::cerr << "indeterminate; proven RR >= " << rec.outcome.best_lower_bound << "\n";
        return kIndeterminate;
    }
    std::cout << rec.entry.value << "\n";
    return kOk;
}

int cmd_verify(const fs::path& coloring_path, const std::string& e0_text,
               const std::string& e1_text) {
    Coloring coloring = read_coloring(read_file(coloring_path));
    LinearEquation e0 = parse_equation(e0_text);
    LinearEquation e1 = parse_equation(e1_text);
    ValidityReport report = check_valid(coloring, e0, e1);
    if (report.valid) {
        std::cout << "VALID\n";
        return kOk;
    }
    for (const SolutionTuple& sol : report.red_violations)
        std::cout << tuple_line(sol) << "\n";
    for (const SolutionTuple& sol : report.blue_violations)
        std::cout << tuple_line(sol) << "\n";
    return kInvalid;
}

int cmd_witness(const std::string& construction, Int t, Int q, Int s, std::string out_path) {
    WitnessCertificate cert = [&] {
        if (construction == "thm21")
            return witness_thm21(t, q, s);
        if (construction == "thm22")
            return witness_thm22(t, q, s);
        if (construction == "gamma")
            return witness_gamma_s1(q);
        if (construction == "anomalous")
            return witness_anomalous(t);
        if (construction == "remark-t6")
            return witness_remark_t6();
        throw PreconditionError("unknown construction: " + construction);
    }();
    if (!check_valid(cert.coloring, cert.e0, cert.e1).valid) {
        std::cerr << "self-verification failed for construction " << construction << "\n";
        return kSelfCheck;
    }
    if (out_path.empty()) {
        std::ostringstream name;
        name << "witness-" << construction;
        if (construction == "thm21" || construction == "thm22")
            name << "-t" << t << "-q" << q << "-s" << s;
        else if (construction == "gamma")
            name << "-q" << q;
        else if (construction == "anomalous")
            name << "-t" << t;
        name << ".col";
        out_path = name.str();
    }
    write_file(out_path, write_coloring(cert.coloring));
    std::cerr << "wrote " << out_path << " (domain [1," << cert.coloring.domain_size()
              << "])\n";
    return kOk;
}

std::pair<Int, Int> parse_range(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos) {
        Int v = std::stoll(text);
        return {v, v};
    }
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
}

int cmd_table(const std::string& t_range, Int q_max, double budget_s, bool resume,
              const fs::path& catalog_path, std::string witness_dir) {
    auto [t_lo, t_hi] = parse_range(t_range);
    if (t_lo < 1 || t_hi < t_lo)
        throw PreconditionError("bad --t-range");
    Catalog catalog(catalog_path);
    fs::path wdir = witness_dir.empty() ? catalog_path.parent_path() : fs::path(witness_dir);
    bool any_indeterminate = false;
    std::cout << "t q s computed table thm22 note\n";
    for (Int t = t_lo; t <= t_hi; ++t) {
        for (Int q = t + 1; q <= q_max; ++q) {
            for (Int s = t; s < q; ++s) {
                std::string e0 = render_equation(FForm(t, q).to_equation());
                std::string e1 = render_equation(FForm(t, s).to_equation());
                Int bound = lower_bound_thm22(t, q, s);
                auto row = table1_lookup(t, q, s);
                std::optional<Int> computed;
                std::optional<CatalogEntry> prior;
                if (resume)
                    prior = catalog.find_exact(e0, e1);
                if (prior) {
                    computed = prior->value;
                } else {
                    ComputeOptions options;
                    options.per_n_budget =
                        std::chrono::milliseconds(static_cast<Int>(budget_s * 1000));
                    options.total_budget = options.per_n_budget;
                    std::ostringstream wname;
                    wname << "witness_t" << t << "_q" << q << "_s" << s << ".col";
                    ComputeRecord rec = run_compute(parse_equation(e0), parse_equation(e1),
                                                    bound, options, wdir / wname.str());
                    // Store the bare filename so catalogs are relocatable and
                    // runs in different directories compare equal.
                    if (rec.entry.witness_path)
                        rec.entry.witness_path = wname.str();
                    catalog.append(rec.entry);
                    if (rec.entry.status == "exact")
                        computed = rec.entry.value;
                }
                std::vector<std::string> notes;
                if (!computed) {
                    any_indeterminate = true;
                    notes.push_back("indeterminate");
                }
                if (!row)
                    notes.push_back("no-table-row");
                if (computed && row && *computed != row->value)
                    notes.push_back("computed!=table");
                if (row && row->value != bound)
                    notes.push_back("table!=thm22");
                std::cout << t << " " << q << " " << s << " "
                          << (computed ? std::to_string(*computed) : "?") << " "
                          << (row ? std::to_string(row->value) : "-") << " " << bound << " ";
                if (notes.empty()) {
                    std::cout << "ok";
                } else {
                    for (std::size_t i = 0; i < notes.size(); ++i)
                        std::cout << (i ? "," : "") << notes[i];
                }
                std::cout << "\n";
            }
        }
    }
    return any_indeterminate ? kIndeterminate : kOk;
}

int cmd_bounds(Int t, Int q, Int s, const std::string& a_text, const std::string& b_text) {
    bool printed = false;
    auto line = [&](const char* name, Int value) {
        std::cout << name << " " << value << "\n";
        printed = true;
    };
    if (!a_text.empty() && !b_text.empty()) {
        auto a = parse_equation(a_text).coeffs();
        auto b = parse_equation(b_text).coeffs();
        line("exact_multivar_rr1", exact_multivar_rr1(a, b));
    }
    if (t >= 1 && q >= 1) {
        if (s >= 1) {
            if (q >= s)
                line("thm21", lower_bound_thm21(t, q, s));
            if (q >= s && s >= t)
                line("thm22", lower_bound_thm22(t, q, s));
            if (t == 1 && s <= q)
                line("exact_rr1", exact_rr1(q, s));
            if (q == s)
                line("diagonal_exact", diagonal_exact(t, q));
            if (t >= 3 && q == 2 * t + 1 && s == t)
                line("anomalous", lower_bound_anomalous(t));
        } else {
            line("diagonal_exact", diagonal_exact(t, q));
        }
    }
    if (!printed) {
        std::cerr << "no formula applies to the given parameters\n";
        return kUsage;
    }
    return kOk;
}

int cmd_oracle(const std::string& e0_text, const std::string& e1_text, Int cap) {
    LinearEquation e0 = parse_equation(e0_text);
    LinearEquation e1 = parse_equation(e1_text);
    auto value = exhaustive_rr(e0, e1, cap);
    if (!value) {
        std::cout << "none\n";
        return kIndeterminate;
    }
    std::cout << *value << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact two-color off-diagonal Rado-type number engine"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "Compute RR(e0,e1) exactly");
    std::string c_e0, c_e1;
    Int c_t = 0, c_q = 0, c_s = 0, c_hint = 0, c_cap = 100000;
    double c_budget = 300.0, c_total = 0.0;
    std::string c_catalog = "./rado-catalog.jsonl", c_witness;
    compute->add_option("--e0", c_e0, "Red-avoided equation, e.g. 2,3,-1");
    compute->add_option("--e1", c_e1, "Blue-avoided equation");
    compute->add_option("--t", c_t, "F-form t (with --q and --s)");
    compute->add_option("--q", c_q, "F-form q (e0 = tx+qy=z)");
    compute->add_option("--s", c_s, "F-form s (e1 = tx+sy=z)");
    compute->add_option("--hint", c_hint, "Scan start hint (default: best closed form)");
    compute->add_option("--cap", c_cap, "Largest N tried");
    compute->add_option("--budget-seconds", c_budget, "Per-N solver budget");
    compute->add_option("--total-budget-seconds", c_total, "Whole-scan budget (0 = unlimited)");
    compute->add_option("--catalog", c_catalog, "JSONL results catalog path");
    compute->add_option("--witness-out", c_witness, "Witness coloring output path");

    // verify
    auto* verify = app.add_subcommand("verify", "Verify a coloring file against a pair");
    std::string v_coloring, v_e0, v_e1;
    verify->add_option("--coloring", v_coloring)->required();
    verify->add_option("--e0", v_e0)->required();
    verify->add_option("--e1", v_e1)->required();

    // witness
    auto* witness = app.add_subcommand("witness", "Emit a constructed witness coloring");
    std::string w_construction, w_out;
    Int w_t = 0, w_q = 0, w_s = 0;
    witness->add_option("--construction", w_construction)
        ->required()
        ->check(CLI::IsMember({"thm21", "thm22", "gamma", "anomalous", "remark-t6"}));
    witness->add_option("--t", w_t);
    witness->add_option("--q", w_q);
    witness->add_option("--s", w_s);
    witness->add_option("--out", w_out, "Output path (default: derived name)");

    // table
    auto* table = app.add_subcommand("table", "Reproduce the published value table");
    std::string tb_range = "2";
    Int tb_qmax = 10;
    double tb_budget = 300.0;
    bool tb_resume = false;
    std::string tb_catalog = "./rado-catalog.jsonl", tb_wdir;
    table->add_option("--t-range", tb_range, "t or t_lo:t_hi");
    table->add_option("--q-max", tb_qmax);
    table->add_option("--budget-seconds", tb_budget, "Budget per entry");
    table->add_flag("--resume", tb_resume, "Skip entries already exact in the catalog");
    table->add_option("--catalog", tb_catalog);
    table->add_option("--witness-dir", tb_wdir);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Evaluate closed-form bounds/exact values");
    Int b_t = 0, b_q = 0, b_s = 0;
    std::string b_a, b_b;
    bounds->add_option("--t", b_t);
    bounds->add_option("--q", b_q);
    bounds->add_option("--s", b_s);
    bounds->add_option("--a", b_a, "Multivariable a-coefficients, e.g. 2,1");
    bounds->add_option("--b", b_b, "Multivariable b-coefficients");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Brute-force RR for tiny caps (<= 25)");
    std::string o_e0, o_e1;
    Int o_cap = 25;
    oracle->add_option("--e0", o_e0)->required();
    oracle->add_option("--e1", o_e1)->required();
    oracle->add_option("--cap", o_cap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (compute->parsed()) {
            bool fform = c_t > 0 || c_q > 0 || c_s > 0;
            if (fform && (c_t < 1 || c_q < 1 || c_s < 1)) {
                std::cerr << "--t, --q, --s must all be given and positive\n";
                return kUsage;
            }
            if (!fform && (c_e0.empty() || c_e1.empty())) {
                std::cerr << "give either --e0/--e1 or --t/--q/--s\n";
                return kUsage;
            }
            return cmd_compute(c_e0, c_e1, c_t, c_q, c_s, c_hint, c_budget, c_total, c_cap,
                               c_catalog, c_witness);
        }
        if (verify->parsed())
            return cmd_verify(v_coloring, v_e0, v_e1);
        if (witness->parsed())
            return cmd_witness(w_construction, w_t, w_q, w_s, w_out);
        if (table->parsed())
            return cmd_table(tb_range, tb_qmax, tb_budget, tb_resume, tb_catalog, tb_wdir);
        if (bounds->parsed())
            return cmd_bounds(b_t, b_q, b_s, b_a, b_b);
        if (oracle->parsed())
            return cmd_oracle(o_e0, o_e1, o_cap);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIndeterminate;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kSelfCheck;
    }
    return kUsage;
}
