#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artifact/invariants.hpp"
#include "artifact/lowerbound.hpp"

using namespace artifact;
using namespace artifact::lb;

namespace {

const PolyABAB A = PolyABAB::var(0);
const PolyABAB B = PolyABAB::var(1);
const PolyABAB Ap = PolyABAB::var(2);
const PolyABAB Bp = PolyABAB::var(3);

PolyABAB mono(int a, int b) { return PolyABAB::monomial({a, b, 0, 0}); }

// Random element of V of the given weight.
PolyABAB random_v(std::mt19937& rng, int weight)
{
    std::uniform_int_distribution<int> coef(-4, 4);
    PolyABAB v;
    for (int a = 1; a < weight; ++a) v += mono(a, weight - a) * Rational(coef(rng));
    return v;
}

PolyABAB exchange_rows(const PolyABAB& p) { return substitute(p, std::array<PolyABAB, 4>{Ap, Bp, A, B}); }

// dim of cusp forms of weight n for SL2(Z).
std::size_t cusp_dim(int n)
{
    if (n < 12 || n % 2 != 0) return 0;
    return static_cast<std::size_t>(n % 12 == 2 ? n / 12 - 1 : n / 12);
}

// Number of (a, b) with 2a + 6b = m.
std::size_t count_26(int m)
{
    if (m < 0) return 0;
    std::size_t c = 0;
    for (int b = 0; 6 * b <= m; ++b)
        if ((m - 6 * b) % 2 == 0) ++c;
    return c;
}

// Number of (a, b, c, d) with 2a + 3b + 5c + 6d = m and b + c = k.
std::size_t count_2356(int m, int k)
{
    std::size_t c = 0;
    for (int b = 0; b <= k; ++b) {
        int rest = m - 3 * b - 5 * (k - b);
        if (rest >= 0) c += count_26(rest);
    }
    return c;
}

// sigma~_k at B = B' = 0.
PolyABAB at_BBp0(const PolyABAB& p) { return p.at_zero(1).at_zero(3); }

} // namespace

TEST_CASE("delta and lambda on small elements")
{
    CHECK(delta(A * B) == A * Bp + Ap * B);
    CHECK(delta(A * A * B) == (A + Ap) * (A + Ap) * (B + Bp) - A * A * B - Ap * Ap * Bp);
    CHECK(lambda_k(3).at_zero(3) == Ap * B * (Ap + A * Rational(2) + B) * Rational(3));
    CHECK(lambda_map(A * B).at_zero(3) == delta(A * B).at_zero(3) * Rational(-1, 2));
    CHECK(lambda0(A * B).is_zero());
    CHECK_THROWS_AS(delta(Ap), std::invalid_argument);
    CHECK_THROWS_AS(delta(A * A), std::invalid_argument);
}

TEST_CASE("power sums in V")
{
    for (int k = 3; k <= 11; k += 2) {
        CHECK(in_V(sigma_k(k)));
        CHECK(delta(sigma_k(k)) == inv::sigma_tilde(k) * Rational(-1));
        CHECK(lambda_map(sigma_k(k)) * Rational(2) == lambda_k(k));
    }
    CHECK_FALSE(in_V(sigma_k(2)));
}

TEST_CASE("cocycle values lie in M and are antisymmetric")
{
    std::mt19937 rng(11);
    for (int round = 0; round < 6; ++round) {
        PolyABAB u = random_v(rng, 2 + round % 3), v = random_v(rng, 3 + round % 2);
        PolyABAB c = cocycle_c(u, v);
        CHECK(in_M(c));
        CHECK(cocycle_c(v, u) == -c);
        CHECK(exchange_rows(c) == -c);
        CHECK(cocycle_c(u, u).is_zero());
    }
}

TEST_CASE("c(sigma_i, sigma_j) is -1/2 tau_ij, not -2 tau_ij")
{
    for (int i : {3, 5, 7})
        for (int j : {5, 7, 9}) {
            if (i >= j) continue;
            PolyABAB c = cocycle_c(sigma_k(i), sigma_k(j));
            CHECK(c == tau(i, j) * Rational(-1, 2));
            CHECK(c != tau(i, j) * Rational(-2));
        }
}

TEST_CASE("tau_ij basics")
{
    CHECK(tau(3, 3).is_zero());
    CHECK(tau(5, 3) == -tau(3, 5));
    CHECK(in_M(tau(3, 5)));
    CHECK(tau(3, 5) == inv::sigma_tilde(3) * lambda_k(5) - inv::sigma_tilde(5) * lambda_k(3));
    CHECK(has_symmetry(tau(3, 7), Symmetry::ASxAS));
}

TEST_CASE("section bracket: free and polynomial routes on small generators")
{
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
            PolyABAB u = mono(a + 1, b + 1), v = mono(1, 2);
            CHECK(section_bracket_free(u, v) == section_bracket_poly(u, v));
        }
    CHECK(section_bracket_free(A * B, A * B).is_zero());
}

TEST_CASE("Q[sigma, p] coordinates")
{
    // p^3 + sigma p^2 - pi = 0 for p = AB, sigma = A^2 + AB + B^2.
    PolyABAB p = A * B, s = A * A + A * B + B * B;
    CHECK(p * p * p + s * p * p == inv::pi_of_AB());
    PolyABAB f = s * s + A * A * B * B * Rational(3);
    CHECK(sigma_p_to_AB(to_sigma_p(f)) == f);
    CHECK_THROWS_AS(to_sigma_p(A), std::invalid_argument);
    CHECK_THROWS_AS(to_sigma_p(A * A), std::invalid_argument);
}

TEST_CASE("bold P_ij")
{
    CHECK(p_bold(3, 5) == PolyX(1));
    for (int i : {3, 5, 7}) CHECK(p_bold(i, i).is_zero());
    CHECK(p_bold(5, 3) == -p_bold(3, 5));
    CHECK(p_bold(7, 3) == -p_bold(3, 7));
}

TEST_CASE("bold P_ij against the evaluation at B = B' = 0")
{
    // The evaluation kills I M, so it sends tau_ij to P_ij(sigma~2|, sigma~6|) times the image of tau_35.
    std::array<PolyABAB, 4> images{at_BBp0(inv::sigma_tilde(2)), PolyABAB(), PolyABAB(), at_BBp0(inv::sigma_tilde(6))};
    PolyABAB t35 = evaluation_BBp0(tau(3, 5));
    for (auto [i, j] : std::vector<std::pair<int, int>>{{3, 7}, {3, 9}, {5, 7}, {3, 11}, {5, 9}})
        CHECK(evaluation_BBp0(tau(i, j)) == substitute(p_bold(i, j), images) * t35);
}

TEST_CASE("evaluation at B = B' = 0")
{
    CHECK(evaluation_BBp0(tau(3, 5)) ==
          A * Ap * B * Bp * (A * A - Ap * Ap) * (A * A * Rational(2) + A * Ap * Rational(5) + Ap * Ap * Rational(2)) *
              Rational(30));
    CHECK(evaluation_BBp0(inv::sigma_tilde(3) * tau(3, 5)).is_zero());
    CHECK(evaluation_BBp0(inv::sigma_tilde(5) * tau(3, 7)).is_zero());
    CHECK_THROWS_AS(evaluation_BBp0(A * B), std::invalid_argument);
}

TEST_CASE("characterization of im(r)")
{
    CHECK_FALSE(im_r_characterization(A));
    CHECK(im_r_characterization(PolyABAB()));
    for (auto [i, j] : std::vector<std::pair<int, int>>{{3, 5}, {3, 7}, {5, 7}}) {
        PolyABAB pi = tau(i, j).at_zero(3);
        CHECK(im_r_characterization(pi));
        PolyABAB f = im_r_preimage(pi);
        CHECK(f.at_zero(3) == pi);
        CHECK(exchange_rows(f) == -f);
    }
    CHECK_THROWS_AS(im_r_characterization(Bp), std::invalid_argument);
}

TEST_CASE("period polynomials: slash relations and dimensions")
{
    for (int n : {8, 12, 16}) {
        int w = n - 2;
        for (int e = 0; e <= w; ++e) {
            PolyPeriod P = PolyPeriod::monomial({e});
            CHECK(slash(slash(P, n, 0, -1, 1, 0), n, 0, -1, 1, 0) == P);
            PolyPeriod u = slash(P, n, 1, -1, 1, 0);
            CHECK(slash(slash(u, n, 1, -1, 1, 0), n, 1, -1, 1, 0) == P);
        }
    }
    for (int n = 4; n <= 24; n += 2) {
        PeriodDims d = period_dims(n);
        CHECK(d.r_dim == cusp_dim(n));
        CHECK(d.sigma == cusp_dim(n));
        CHECK(d.w_plus == cusp_dim(n) + 1);
        std::size_t pairs = 0;
        for (int i = 3; 2 * i < n; i += 2) ++pairs;
        CHECK(d.a_dim == pairs);
    }
    CHECK(period_dims(12).r_dim == 1);
    CHECK(period_dims(14).r_dim == 0);
    CHECK(period_dims(8).a_dim == 1);
}

TEST_CASE("M_0^min and M_1^min dimensions")
{
    auto& ctx = asxas_context();
    for (int n = 6; n <= 16; ++n) {
        CHECK(ctx.mmin_dim(0, n) == (n >= 8 ? count_26(n - 8) : 0));
        CHECK(ctx.mmin_dim(1, n) == (n >= 8 ? count_2356(n - 8, 1) : 0));
    }
    CHECK(ctx.mmin_dim(1, 11) == 1);
    CHECK(ctx.mmin_dim(1, 9) == 0);
}

TEST_CASE("x monomials and the phi lift")
{
    for (int w = 0; w <= 12; ++w)
        for (int k = 0; k <= 2; ++k) CHECK(x_monomials(w, k).size() == count_2356(w, k));
    CHECK(phi_lift(PolyX(1)) == tau(3, 5));
    CHECK(phi_lift(PolyX::var(1)) == inv::sigma_tilde(3) * tau(3, 5));
}

TEST_CASE("report checks at small sizes")
{
    std::vector<CheckReport> reps{verify_cocycle_in_m(8),        verify_section_cocycle(8),   verify_lcs_star(8),
                                  verify_lambda_divisibility(9), verify_genfun_xy(10),        verify_aux(12),
                                  verify_cond_all(12),           verify_sigma4_annihilates(12), verify_m0_cyclic(12),
                                  verify_m0_hilbert(12),         verify_period_dims(16),      verify_mmin_hilbert(13, 1),
                                  verify_phi(13, 1),             verify_action_formula(13, 1, 12), verify_purity(13, 1)};
    for (auto& r : reps) CHECK_MESSAGE(r.passed(), r.summary_line());
}
