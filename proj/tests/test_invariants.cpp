#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "artifact/invariants.hpp"

using namespace artifact;
using namespace artifact::inv;

namespace {

const PolyABAB A = PolyABAB::var(0);
const PolyABAB B = PolyABAB::var(1);
const PolyABAB Ap = PolyABAB::var(2);
const PolyABAB Bp = PolyABAB::var(3);

PolyABAB random_homogeneous(std::mt19937& rng, int deg, int nterms)
{
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> var(0, 3);
    PolyABAB p;
    for (int t = 0; t < nterms; ++t) {
        std::array<int, 4> e{};
        for (int k = 0; k < deg; ++k) ++e[var(rng)];
        p += PolyABAB::monomial(e, Rational(coef(rng)));
    }
    return p;
}

LinearSubstitution matmul(const LinearSubstitution& a, const LinearSubstitution& b)
{
    LinearSubstitution r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

// Number of (a, b, c, d) with 2a + 3b + 4c + 6d = n.
long long count_2346(int n)
{
    if (n < 0) return 0;
    long long c = 0;
    for (int a = 0; 2 * a <= n; ++a)
        for (int b = 0; 2 * a + 3 * b <= n; ++b)
            for (int d = 0; 2 * a + 3 * b + 6 * d <= n; ++d)
                if ((n - 2 * a - 3 * b - 6 * d) % 4 == 0) ++c;
    return c;
}

Rational R(std::size_t x) { return Rational(static_cast<long long>(x)); }

int min_depth(const PolyABAB& p)
{
    int d = 1 << 20;
    for (auto& [k, c] : p.terms()) {
        Monomial<VarsABAB> m(k);
        d = std::min(d, m.exponent(1) + m.exponent(3));
    }
    return d;
}

} // namespace

TEST_CASE("group has 72 elements and the generators reach all of them")
{
    std::set<LinearSubstitution> direct;
    for (auto& g : group_elements()) direct.insert(substitution(g));
    CHECK(group_elements().size() == 72);
    CHECK(direct.size() == 72);
    auto gen = generated_substitutions();
    CHECK(gen.size() == 72);
    CHECK(std::set<LinearSubstitution>(gen.begin(), gen.end()) == direct);
}

TEST_CASE("generators are the listed replacements")
{
    auto gens = group_generators();
    auto images = [](const GroupElement& g) {
        std::array<PolyABAB, 4> out;
        for (int v = 0; v < 4; ++v) out[v] = group_act(g, PolyABAB::var(v));
        return out;
    };
    CHECK(images(gens[0]) == std::array<PolyABAB, 4>{B, A, Bp, Ap});
    CHECK(images(gens[1]) == std::array<PolyABAB, 4>{B, -A - B, Bp, -Ap - Bp});
    CHECK(images(gens[2]) == std::array<PolyABAB, 4>{A, Ap, B, Bp});
}

TEST_CASE("group_act examples")
{
    std::mt19937 rng(3);
    PolyABAB p = random_homogeneous(rng, 4, 6);
    CHECK(group_act(group_identity(), p) == p);
    CHECK(group_act(group_generators()[0], A * Bp) == Ap * B);
    for (auto& g : group_generators())
        for (int k = 0; k <= 8; ++k) CHECK(group_act(g, sigma_tilde(k)) == sigma_tilde(k));
}

TEST_CASE("group action is a ring automorphism and respects composition")
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, 71);
    const auto& el = group_elements();
    for (int trial = 0; trial < 20; ++trial) {
        PolyABAB p = random_homogeneous(rng, 3, 5), q = random_homogeneous(rng, 2, 4);
        const auto& g = el[pick(rng)];
        const auto& h = el[pick(rng)];
        CHECK(group_act(g, p * q) == group_act(g, p) * group_act(g, q));
        CHECK(group_act(g, p + q) == group_act(g, p) + group_act(g, q));
        CHECK(group_act(g, group_act(h, p)) == act(matmul(substitution(h), substitution(g)), p));
    }
}

TEST_CASE("reynolds operator")
{
    CHECK(reynolds(sigma_tilde(4)) == sigma_tilde(4));
    CHECK(reynolds(A).is_zero());
    std::mt19937 rng(5);
    for (int trial = 0; trial < 3; ++trial) {
        PolyABAB r = reynolds(random_homogeneous(rng, 4, 5));
        for (auto& g : group_elements()) CHECK(group_act(g, r) == r);
        CHECK(reynolds(r) == r);
    }
}

TEST_CASE("power sums")
{
    CHECK(sigma_tilde(1).is_zero());
    CHECK(sigma_tilde(0) == PolyABAB(9));
    // Hand expansion of sigma~2 from the nine entries.
    PolyABAB s2 = Rational(4) * (A * A + B * B + Ap * Ap + Bp * Bp) + Rational(4) * (A * B + Ap * Bp) +
                  Rational(4) * (A * Ap + B * Bp) + Rational(2) * (A * Bp + Ap * B);
    CHECK(sigma_tilde(2) == s2);
    for (int k = 3; k <= 11; k += 2) {
        CHECK(sigma_tilde(k).at_zero(1).at_zero(3).is_zero());
        CHECK(sigma_tilde(k).at_zero(2).at_zero(3).is_zero());
        CHECK(is_invariant(sigma_tilde(k)));
    }
}

TEST_CASE("Molien series by the 72-term sum against independent expansions")
{
    auto sum = molien_series(20);
    auto closed = molien_closed_form(20);
    std::vector<int> first{1, 0, 1, 1, 2, 2, 4};
    for (int n = 0; n < 7; ++n) CHECK(sum[n] == Rational(first[n]));
    for (int n = 0; n <= 20; ++n) {
        CHECK(closed[n] == Rational(count_2346(n) + count_2346(n - 5)));
        CHECK(sum[n] == closed[n]);
    }
}

TEST_CASE("Reynolds span ranks")
{
    CHECK(reynolds_span_dim_exact(5) == 2);
    CHECK(reynolds_span_dim_exact(4) == 2);
    auto closed = molien_closed_form(12);
    for (int n = 0; n <= 12; ++n) CHECK(R(reynolds_span_dim_sampled(n, 77 + n)) == closed[n]);
}

TEST_CASE("presentation of the invariant ring")
{
    CHECK(presentation_relation().is_zero());
    auto molien = molien_closed_form(10);
    CHECK(R(sigma_rank(10, sigma_monomials(10))) == molien[10]);
    CHECK(R(sigma_rank(5, sigma_monomials(5, {2, 3, 4, 6})) + 1) == molien[5]);
    auto rep = verify_presentation_A(14);
    CHECK_MESSAGE(rep.passed(), rep.summary_line());
    // A perturbed relation must be caught.
    PolyABAB wrong = presentation_relation() + sigma_tilde(4) * sigma_tilde(6) * Rational(1, 1000);
    CHECK_FALSE(wrong.is_zero());
}

TEST_CASE("invariant bases have Molien size")
{
    auto molien = molien_closed_form(16);
    for (int n = 0; n <= 16; ++n) {
        CHECK(R(invariant_basis(n).size()) == molien[n]);
        for (auto& m : invariant_basis(n)) CHECK(m.weight() == n);
    }
}

TEST_CASE("decompose_in_I35")
{
    auto d3 = decompose_in_I35(3);
    CHECK(d3.p3 == PolyABAB(1));
    CHECK(d3.p5.is_zero());
    auto d5 = decompose_in_I35(5);
    CHECK(d5.p3.is_zero());
    CHECK(d5.p5 == PolyABAB(1));
    auto d7 = decompose_in_I35(7);
    CHECK(d7.p3 * sigma_tilde(3) + d7.p5 * sigma_tilde(5) == sigma_tilde(7));
    // t^7 coefficient of (3/5) Y/D by hand: (3/5)((5/3) 4 sigma - 2 sigma) = 14 sigma / 5.
    CHECK(d7.p5.at_zero(2).at_zero(3) == Rational(14, 5) * (A * A + A * B + B * B));
    CHECK_THROWS_AS(decompose_in_I35(4), std::invalid_argument);
    CHECK_THROWS_AS(decompose_in_I35(1), std::invalid_argument);
    CHECK_THROWS_AS(decompose_in_I35(7, 1), std::out_of_range);
}

TEST_CASE("decomposition choice does not change the specialization")
{
    REQUIRE(decomposition_kernel_dim(11) >= 1);
    auto d0 = decompose_in_I35(11, 0);
    auto d1 = decompose_in_I35(11, 1);
    CHECK(d0.p3 != d1.p3);
    CHECK(d1.p3 * sigma_tilde(3) + d1.p5 * sigma_tilde(5) == sigma_tilde(11));
    CHECK(d0.p5.at_zero(2).at_zero(3) == d1.p5.at_zero(2).at_zero(3));
    auto rep = verify_p5i_series(13, 1);
    CHECK_MESSAGE(rep.passed(), rep.summary_line());
}

TEST_CASE("P_i5 specialization series")
{
    auto rep = verify_ideal_i35(13);
    CHECK_MESSAGE(rep.passed(), rep.summary_line());
}

TEST_CASE("ideal generated by sigma~3, sigma~5 and its powers")
{
    auto rep = verify_ideal_generation(14);
    CHECK_MESSAGE(rep.passed(), rep.summary_line());
}

TEST_CASE("gr_sigma_A examples")
{
    auto gr0 = gr_sigma_A(0, 16);
    CHECK(gr0[3] == 0);
    CHECK(gr0[4] == 2);
    std::size_t free10 = sigma_monomials(10, {2, 4, 6}).size();
    CHECK(gr0[10] + 1 == free10);
    auto closed = gr0_closed_form(16);
    for (int n = 0; n <= 16; ++n) CHECK(R(gr0[n]) == closed[n]);
    auto molien = molien_closed_form(16);
    for (int n = 0; n <= 16; ++n) {
        std::size_t total = 0;
        for (int k = 0; 3 * k <= n; ++k) total += gr_sigma_A(k, n)[n];
        CHECK(R(total) == molien[n]);
    }
}

TEST_CASE("gr0 presentation and polynomial structure of gr")
{
    auto r0 = verify_gr0A_presentation(16);
    CHECK_MESSAGE(r0.passed(), r0.summary_line());
    auto r1 = verify_grA_polynomial(14);
    CHECK_MESSAGE(r1.passed(), r1.summary_line());
    bool found = false;
    for (auto& row : r1.weights)
        if (row.w == 8 && row.d == 2 && row.label == "gr vs gr0[x3,x5]") {
            found = true;
            CHECK(row.ok);
        }
    CHECK(found);
}

TEST_CASE("depth filtration is multiplicative on invariants")
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 4; ++trial) {
        PolyABAB p = reynolds(random_homogeneous(rng, 3, 3));
        PolyABAB q = reynolds(random_homogeneous(rng, 4, 3));
        if (p.is_zero() || q.is_zero()) continue;
        PolyABAB pq = p * q;
        if (pq.is_zero()) continue;
        CHECK(min_depth(pq) >= min_depth(p) + min_depth(q));
    }
}

TEST_CASE("report JSON")
{
    auto rep = verify_presentation_A(10);
    auto j = rep.to_json();
    CHECK(j["check"] == "a-presentation");
    CHECK(j["status"] == "pass");
    CHECK(j["witness"].is_null());
}
