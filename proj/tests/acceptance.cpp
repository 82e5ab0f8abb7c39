// Runs the fourteen acceptance criteria at their stated truncations and
// prints one PASS/FAIL line per criterion. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "artifact/depthgraded.hpp"
#include "artifact/invariants.hpp"
#include "artifact/lowerbound.hpp"

using namespace artifact;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<std::vector<CheckReport>()> run;
};

bool has_note(const CheckReport& r, const std::string& prefix)
{
    for (auto& n : r.notes)
        if (n.rfind(prefix, 0) == 0) return true;
    return false;
}

} // namespace

int main()
{
    std::vector<Criterion> criteria{
        {1, "weight-10 relation among sigma~2..sigma~6 vanishes", 1,
         [] { return std::vector{inv::verify_presentation_A(10)}; }},
        {2, "Molien series of A, 72-term sum and Reynolds ranks, weight <= 20", 30,
         [] { return std::vector{inv::verify_molien(20)}; }},
        {3, "sigma~i in (sigma~3, sigma~5) for odd 7 <= i <= 17, P_5i series to t^17", 60,
         [] { return std::vector{inv::verify_ideal_i35(17)}; }},
        {4, "lambda_3 | lambda_i at B' = 0 with even quotient, odd i <= 21", 5,
         [] { return std::vector{lb::verify_lambda_divisibility(21)}; }},
        {5, "Cond_ij for odd pairs with i + j <= 16", 120, [] { return std::vector{lb::verify_cond_all(16)}; }},
        {6, "(sigma~4 - sigma~2^2/4) tau_35 in I M at weight 12", 5,
         [] { return std::vector{lb::verify_sigma4_annihilates(12)}; }},
        {7, "dim M_0^min (weight <= 20), dim R_n = dim Sigma_n (even n <= 24)", 60,
         [] { return std::vector{lb::verify_m0_hilbert(20), lb::verify_period_dims(24)}; }},
        {8, "bigraded dims of M^min and phi, weight <= 18, Sigma-degree <= 3", 300,
         [] { return std::vector{lb::verify_mmin_hilbert(18, 3), lb::verify_phi(18, 3)}; }},
        {9, "action of sigma_k and {sigma_i, sigma_j} against xi_3, xi_5, one convention", 120,
         [] {
             CheckReport r = lb::verify_action_formula(18, 3, 14);
             r.expect(has_note(r, "consistent convention:"), "report does not name a consistent convention");
             return std::vector{r};
         }},
        {10, "M_k^min pure of depth k + 2, k <= 3, weight <= 18", 60,
         [] { return std::vector{lb::verify_purity(18, 3)}; }},
        {11, "dim Lie(W)[k] for k = 1, 2, 3 at weights <= 21, 20, 19", 300,
         [] { return std::vector{dg::verify_liew_dims(21, 20, 19)}; }},
        {12, "Lie(W)[2] equals the explicit model and M_0^min, weight <= 20", 60,
         [] { return std::vector{dg::verify_depth2_explicit(20)}; }},
        {13, "complex exact at the ends with H = t^17/... (weight <= 23), depth-3 sequence (<= 19)", 300,
         [] { return std::vector{dg::verify_complex_homology(23), dg::verify_depth3_sequence(19)}; }},
        {14, "<,> against the star bracket through lcs classes, <s(u), s(v)> = c(u, v), weight <= 12", 120,
         [] { return std::vector{lb::verify_lcs_star(12), lb::verify_section_cocycle(12)}; }},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<CheckReport> reps;
        std::string witness;
        try {
            reps = c.run();
        } catch (const std::exception& e) {
            witness = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = witness.empty();
        std::size_t rows = 0;
        for (auto& r : reps) {
            rows += r.weights.size();
            if (!r.passed() && ok) {
                ok = false;
                witness = r.check_id + ": " + r.witness.value_or("failed");
            }
        }
        if (!ok) ++failures;
        std::printf("[%s] criterion %2d: %s (%zu rows, %.1f s of %.0f s budget)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), rows, secs, c.budget_s, ok ? "" : " witness: ", ok ? "" : witness.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
