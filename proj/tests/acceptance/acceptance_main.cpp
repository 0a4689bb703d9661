// Acceptance suite: one pass/fail line per criterion, exit code equal to the
// number of failed criteria. Every tolerance is exact integer equality; each
// criterion also carries a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "vnum/checks.hpp"
#include "vnum/eval.hpp"
#include "vnum/report_io.hpp"

using namespace vnum;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool all_agree(const std::vector<CheckReport>& reports, std::string& detail) {
    int agree = 0;
    for (const auto& r : reports) {
        if (r.status == CheckReport::Status::Agree) {
            ++agree;
            continue;
        }
        if (r.status == CheckReport::Status::Disagree) {
            std::ostringstream os;
            os << "unexpected disagreement: " << reports_to_table({r});
            detail += os.str();
            return false;
        }
    }
    detail += std::to_string(agree) + " instances agree";
    return true;
}

// -- criterion 1 ------------------------------------------------------------

bool criterion_path_formula(std::string& detail) {
    for (int n = 2; n <= 16; ++n) {
        auto ideal = edge_ideal(path(n));
        int expected = path_v(n);
        for (VMethod method : {VMethod::StableSet, VMethod::Colon, VMethod::WitnessScan}) {
            int v = v_number(ideal, method).value;
            if (v != expected) {
                detail = "n = " + std::to_string(n) + ", method " + to_string(method) + ": v = " +
                         std::to_string(v) + " but the closed form gives " + std::to_string(expected);
                return false;
            }
        }
    }
    detail = "n = 2..16, three methods, all equal to the closed form";
    return true;
}

// -- criterion 2 ------------------------------------------------------------

bool criterion_mixed_products(std::string& detail) {
    auto mixed = run_check("thm-3.1-mixed");  // n, m = 2..5, cases 1..6 (3 terms)
    if (!all_agree(mixed, detail)) {
        return false;
    }
    detail += " for the six v formulas; ";
    auto reg = run_check("lem-3.3+thm-3.4-reg");
    std::string reg_detail;
    if (!all_agree(reg, reg_detail)) {
        detail += reg_detail;
        return false;
    }
    detail += reg_detail + " for the regularity bound";
    return true;
}

// -- criterion 3 ------------------------------------------------------------

bool criterion_squared_paths_cycles(std::string& detail) {
    bool ceiling_fails_somewhere = false;
    for (int n = 4; n <= 20; ++n) {
        int computed = v_number(edge_ideal(graph_power(path(n), 2)), VMethod::StableSet).value;
        if (computed != path_square_v(n, Bracket::Floor)) {
            detail = "floor form fails at n = " + std::to_string(n);
            return false;
        }
        if (computed != path_square_v(n, Bracket::Ceil)) {
            ceiling_fails_somewhere = true;
        }
    }
    if (!ceiling_fails_somewhere) {
        detail = "both bracket interpretations fit; expected floor to be the only one";
        return false;
    }
    for (int n = 7; n <= 14; ++n) {
        int lhs = v_number(edge_ideal(graph_power(cycle(n), 2)), VMethod::StableSet).value;
        int rhs = v_number(edge_ideal(graph_power(path(n - 5), 2)), VMethod::StableSet).value;
        if (lhs != rhs + 1) {
            detail = "offset identity fails at n = " + std::to_string(n);
            return false;
        }
    }
    detail = "squared paths n = 4..20 match the floor form only; cycle offset holds for n = 7..14";
    return true;
}

// -- criterion 4 ------------------------------------------------------------

bool criterion_power_sandwich(std::string& detail) {
    std::vector<std::pair<std::string, Graph>> families;
    for (int n = 4; n <= 8; ++n) {
        families.emplace_back("L_" + std::to_string(n), path(n));
    }
    for (int n = 4; n <= 6; ++n) {
        families.emplace_back("C_" + std::to_string(n), cycle(n));
    }
    for (int n = 3; n <= 5; ++n) {
        families.emplace_back("K_" + std::to_string(n), complete(n));
    }
    int checked = 0;
    for (const auto& [name, graph] : families) {
        auto base = edge_ideal(graph);
        int previous = v_number(base).value;
        for (int k = 1; k <= 3; ++k) {
            int next = v_number(power(base, k + 1)).value;
            if (!(previous + 1 <= next && next <= previous + 2)) {
                detail = name + " at k = " + std::to_string(k) + ": v(I^k) = " +
                         std::to_string(previous) + " but v of the next power is " +
                         std::to_string(next);
                return false;
            }
            previous = next;
            ++checked;
        }
    }
    detail = std::to_string(checked) + " sandwich steps hold";
    return true;
}

// -- criterion 5 ------------------------------------------------------------

bool criterion_sqfree_powers(std::string& detail) {
    for (int n = 4; n <= 10; ++n) {
        auto base = edge_ideal(path(n));
        for (int k = 1; k <= n / 2; ++k) {
            int computed = v_number(squarefree_power(base, k)).value;
            if (computed != sqfree_power_path_v(n, k, Bracket::Floor)) {
                detail = "n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                         ": v = " + std::to_string(computed) + " but the floor form gives " +
                         std::to_string(sqfree_power_path_v(n, k, Bracket::Floor));
                return false;
            }
        }
    }
    // evidence table for ordinary vs square-free powers; reported, not asserted
    auto evidence = run_check("conj-5.10-sqfree-vs-power");
    int agree = 0;
    int differ = 0;
    for (const auto& r : evidence) {
        (r.status == CheckReport::Status::Agree ? agree : differ) += 1;
    }
    std::printf("%s", reports_to_table(evidence).c_str());
    detail = "closed form matches for n = 4..10, k <= floor(n/2); evidence table: v(I^k) = "
             "v(I^[k]) on " +
             std::to_string(agree) + " of " + std::to_string(agree + differ) + " instances";
    return true;
}

// -- criterion 6 ------------------------------------------------------------

bool criterion_symbolic_powers(std::string& detail) {
    int boundary_count = 0;
    for (int n = 3; n <= 5; ++n) {
        auto base = edge_ideal(complete(n));
        for (int k = 1; k <= 4; ++k) {
            int computed = v_number(symbolic_power(base, k)).value;
            if (computed != complete_symbolic_v_exact(n, k)) {
                detail = "exact closed form fails at n = " + std::to_string(n) + ", k = " +
                         std::to_string(k);
                return false;
            }
            bool boundary = (k == 1) || ((k - 1) % (n - 1) == 0);
            int bracket_form = complete_symbolic_v(n, k, Bracket::Floor);
            if (!boundary && k >= 2 && bracket_form != computed) {
                detail = "bracket form fails off the boundary at n = " + std::to_string(n) +
                         ", k = " + std::to_string(k);
                return false;
            }
            if (boundary) {
                // the bracket form overshoots by exactly one here; the
                // harness must record it as a known issue
                if (bracket_form != computed + 1) {
                    detail = "boundary overshoot is not exactly one at n = " + std::to_string(n) +
                             ", k = " + std::to_string(k);
                    return false;
                }
                ++boundary_count;
            }
        }
    }
    auto reports = run_check("thm-5.14-complete-symbolic");
    for (const auto& r : reports) {
        if (r.status == CheckReport::Status::Disagree && !r.known_issue) {
            detail = "harness left a boundary mismatch unflagged";
            return false;
        }
    }

    // symbolic sandwich on K_3, K_4, L_4, C_4
    std::vector<std::pair<std::string, Graph>> instances = {
        {"K_3", complete(3)}, {"K_4", complete(4)}, {"L_4", path(4)}, {"C_4", cycle(4)}};
    for (const auto& [name, graph] : instances) {
        auto base = edge_ideal(graph);
        int prime_count = int(minimal_primes_squarefree(base).size());
        int previous = v_number(symbolic_power(base, 1)).value;
        for (int k = 1; k <= 3; ++k) {
            int next = v_number(symbolic_power(base, k + 1)).value;
            if (!(previous + 1 <= next && next <= previous + prime_count)) {
                detail = name + " violates the symbolic sandwich at k = " + std::to_string(k);
                return false;
            }
            previous = next;
        }
    }
    detail = "exact closed form matches for n = 3..5, k = 1..4 (" +
             std::to_string(boundary_count) +
             " bracket-form boundary overshoots recorded as known issues); sandwich holds on "
             "K_3, K_4, L_4, C_4";
    return true;
}

// -- criterion 7 ------------------------------------------------------------

bool criterion_structural_oracles(std::string& detail) {
    // colon/intersection/membership adjunction on the 6-variable, cap-3 grid
    VarSet v6 = VarSet::standard(6);
    auto embed6 = [&](const MonomialIdeal& ideal) {
        std::vector<Monomial> gens;
        for (const auto& g : ideal.gens()) {
            std::vector<Exp> e(6, 0);
            for (int i = 0; i < g.nvars(); ++i) {
                e[size_t(i)] = g.exponent(i);
            }
            gens.emplace_back(std::move(e));
        }
        return MonomialIdeal::make(v6, std::move(gens));
    };
    std::vector<std::pair<MonomialIdeal, MonomialIdeal>> pairs = {
        {embed6(edge_ideal(path(6))), embed6(edge_ideal(cycle(6)))},
        {embed6(power(edge_ideal(path(5)), 2)), embed6(edge_ideal(path(5)))},
        {embed6(symbolic_power(edge_ideal(cycle(5)), 2)), embed6(edge_ideal(complete(4)))},
        {embed6(eval_text("(x1^2, x1*x2, x3^3*x4)")), embed6(eval_text("(x1, x2*x4, x5^2)"))},
        {embed6(power(edge_ideal(complete(3)), 2)), embed6(eval_text("(x1*x2^2, x2*x3^2, x6)"))},
    };
    long long grid_points = 0;
    for (const auto& [a, b] : pairs) {
        auto quotient = colon(a, b);
        auto meet = intersect(a, b);
        std::vector<Exp> caps(6, 3);
        for (int degree = 0; degree <= 18; ++degree) {
            bool ok = true;
            detail::for_each_capped_monomial_of_degree(caps, degree, [&](const std::vector<Exp>& e) {
                Monomial h{std::vector<Exp>(e)};
                bool colon_member = true;
                for (const auto& g : b.gens()) {
                    if (!a.contains(h * g)) {
                        colon_member = false;
                        break;
                    }
                }
                if (quotient.contains(h) != colon_member ||
                    meet.contains(h) != (a.contains(h) && b.contains(h))) {
                    ok = false;
                    return false;
                }
                ++grid_points;
                return true;
            });
            if (!ok) {
                detail = "adjunction or meet property failed on the grid";
                return false;
            }
        }
    }

    auto even = run_check("lem-2.9-even-connection");
    std::string part;
    if (!all_agree(even, part)) {
        detail = "even-connection equation: " + part;
        return false;
    }
    auto recursion = run_check("lem-2.23-forest-recursion");
    part.clear();
    if (!all_agree(recursion, part)) {
        detail = "forest recursion: " + part;
        return false;
    }
    auto pol = run_check("lem-2.12-polarization");
    part.clear();
    if (!all_agree(pol, part)) {
        detail = "polarization comparison: " + part;
        return false;
    }
    detail = std::to_string(grid_points) + " grid memberships cross-checked; even-connection, "
             "forest recursion, and polarization sweeps all agree";
    return true;
}

// -- criterion 8 ------------------------------------------------------------

bool criterion_known_issue_ledger(std::string& detail) {
    RangeMap ranges{{"path_n", {8, 8}}, {"k", {1, 1}}, {"tree_trial", {1, 0}}};
    auto reports = run_check("prop-5.11-forest", ranges);
    if (reports.size() != 1) {
        detail = "expected exactly one report";
        return false;
    }
    const auto& r = reports[0];
    if (r.status != CheckReport::Status::Disagree || !r.known_issue) {
        detail = "the L_8, k = 1 instance must be a flagged disagreement";
        return false;
    }
    if (!(r.formula == 1 && r.computed.size() == 1 && r.computed[0].second == 2)) {
        detail = "expected the claimed value 1 against the computed value 2";
        return false;
    }
    if (exit_code_for(reports) != 0) {
        detail = "a flagged known issue must not flip the exit code";
        return false;
    }
    detail = "L_8 at k = 1 reports DISAGREE under the known-issue flag and the run exits 0";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "path formula by all three methods", 5.0, criterion_path_formula},
        {2, "mixed products: six v formulas and the regularity bound", 60.0,
         criterion_mixed_products},
        {3, "squared paths and cycles", 60.0, criterion_squared_paths_cycles},
        {4, "power sandwich", 600.0, criterion_power_sandwich},
        {5, "square-free powers of paths", 120.0, criterion_sqfree_powers},
        {6, "symbolic powers of complete graphs", 300.0, criterion_symbolic_powers},
        {7, "structural oracles", 300.0, criterion_structural_oracles},
        {8, "known-issue ledger", 60.0, criterion_known_issue_ledger},
    };

    int failures = 0;
    for (auto& criterion : criteria) {
        std::string detail;
        auto start = Clock::now();
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        if (ok && elapsed >= criterion.budget_seconds) {
            ok = false;
            detail += " [exceeded the " + std::to_string(criterion.budget_seconds) + " s budget]";
        }
        std::printf("criterion %d [%s]: %s (%.2f s) -- %s\n", criterion.number,
                    criterion.title.c_str(), ok ? "PASS" : "FAIL", elapsed, detail.c_str());
        std::fflush(stdout);
        if (!ok) {
            ++failures;
        }
    }
    if (failures == 0) {
        std::printf("acceptance: all %zu criteria pass\n", criteria.size());
    } else {
        std::printf("acceptance: %d criteria FAILED\n", failures);
    }
    return failures;
}
