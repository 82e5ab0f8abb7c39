#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artifact/linalg.hpp"
#include "artifact/poly.hpp"
#include "artifact/polyspace.hpp"
#include "artifact/serialize.hpp"
#include "artifact/series.hpp"

using namespace artifact;

namespace {

const PolyABAB A = PolyABAB::var(0);
const PolyABAB B = PolyABAB::var(1);
const PolyABAB Ap = PolyABAB::var(2);
const PolyABAB Bp = PolyABAB::var(3);

PolyABAB random_poly(std::mt19937& rng, int max_deg, int nterms)
{
    std::uniform_int_distribution<int> ed(0, max_deg);
    std::uniform_int_distribution<int> cd(-9, 9);
    std::vector<PolyABAB::Term> terms;
    for (int k = 0; k < nterms; ++k) {
        std::array<int, 4> e{ed(rng), ed(rng), ed(rng), ed(rng)};
        int den = std::abs(cd(rng)) + 1;
        terms.emplace_back(Monomial<VarsABAB>::from_exponents(e).key(), Rational(cd(rng), den));
    }
    return PolyABAB::from_terms(terms);
}

// Rank over Q by plain Gaussian elimination on mpq_class, used as an oracle
// for the echelon engine.
std::size_t oracle_rank(std::vector<std::vector<mpq_class>> m)
{
    std::size_t rank = 0;
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("rational canonical form and parsing")
{
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 7).str() == "0/1");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(0).inverse());
}

TEST_CASE("rational arithmetic agrees with GMP across the overflow boundary")
{
    std::mt19937_64 rng(7);
    Rational x(1);
    mpq_class y(1);
    for (int step = 0; step < 400; ++step) {
        long n = static_cast<long>(rng() % 2000003) - 1000001;
        long d = static_cast<long>(rng() % 999983) + 1;
        Rational r(n, d);
        mpq_class q(n, d);
        q.canonicalize();
        switch (step % 4) {
        case 0: x += r; y += q; break;
        case 1: x *= r; y *= q; break;
        case 2: x -= r; y -= q; break;
        case 3:
            if (n != 0) {
                x /= r;
                y /= q;
            }
            break;
        }
        REQUIRE(x.to_mpq() == y);
        if (step % 50 == 49) {
            x = Rational(static_cast<long>(mpz_class(y.get_num() % 1000).get_si()) + 1, 7);
            y = x.to_mpq();
        }
    }
    // Values that must promote to GMP and demote again.
    Rational big(std::numeric_limits<long long>::max());
    Rational sq = big * big;
    CHECK_FALSE(sq.is_small());
    CHECK((sq / big) == big);
    CHECK((sq / big).is_small());
    Rational s = big;
    s.add_mul(big, Rational(3));
    CHECK(s.to_mpq() == mpq_class(mpz_class("36893488147419103228")));
}

TEST_CASE("poly_arith examples")
{
    CHECK((A + B) * (A - B) == A * A - B * B);
    PolyABAB s = A * Bp + Ap * B;
    CHECK(s.size() == 2);
    CHECK(s.coefficient({1, 0, 0, 1}) == Rational(1));
    std::mt19937 rng(3);
    CHECK((random_poly(rng, 3, 5) * PolyABAB()).is_zero());
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937 rng(11);
    for (int k = 0; k < 30; ++k) {
        PolyABAB p = random_poly(rng, 3, 6), q = random_poly(rng, 3, 5), r = random_poly(rng, 2, 4);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
        CHECK(p + q == q + p);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("monomial order is graded lex with A < B < A' < B'")
{
    using M = Monomial<VarsABAB>;
    CHECK(M::var(0) < M::var(1));
    CHECK(M::var(1) < M::var(2));
    CHECK(M::var(2) < M::var(3));
    CHECK(M::var(3) < M::var(0, 2));
    PolyABAB p = Bp + A * A + A;
    CHECK(p.leading_monomial() == M::var(0, 2));
}

TEST_CASE("substitute is a ring homomorphism")
{
    std::mt19937 rng(5);
    std::array<PolyABAB, 4> images{A + Ap, B + Bp, Ap, Bp};
    std::array<PolyABAB, 4> ident{A, B, Ap, Bp};
    for (int k = 0; k < 20; ++k) {
        PolyABAB p = random_poly(rng, 3, 4), q = random_poly(rng, 3, 4);
        CHECK(substitute(p * q, images) == substitute(p, images) * substitute(q, images));
        CHECK(substitute(p, ident) == p);
    }
    // A^2 B under (A,B) -> (A+A', B+B'), checked against a hand expansion.
    PolyABAB v = A * A * B;
    PolyABAB expected = A * A * B + A * A * Bp + Rational(2) * A * Ap * B + Rational(2) * A * Ap * Bp + Ap * Ap * B + Ap * Ap * Bp;
    CHECK(substitute(v, images) == expected);

    std::array<std::optional<PolyABAB>, 4> partial{A, B, std::nullopt, std::nullopt};
    CHECK(substitute_partial(A * B, partial) == A * B);
    CHECK_THROWS_AS(substitute_partial(A * Ap, partial), std::invalid_argument);

    // Cross-universe substitution x2 -> sigma-tilde-like images.
    PolyX x = PolyX::var(0) * PolyX::var(3);
    std::array<PolyABAB, 4> ximg{A, B, Ap, Bp};
    CHECK(substitute(x, ximg) == A * Bp);
}

TEST_CASE("exact_divide")
{
    auto q = (A * A - B * B).exact_divide(A - B);
    REQUIRE(q);
    CHECK(*q == A + B);
    CHECK_FALSE(A.exact_divide(B));
    CHECK_THROWS(A.exact_divide(PolyABAB()));
    std::mt19937 rng(2);
    for (int k = 0; k < 20; ++k) {
        PolyABAB p = random_poly(rng, 3, 5), d = random_poly(rng, 2, 3);
        if (d.is_zero()) continue;
        auto r = (p * d).exact_divide(d);
        REQUIRE(r);
        CHECK(*r == p);
    }
}

TEST_CASE("univariate and bivariate truncated series")
{
    TruncSeries<Rational> s(4);
    s[0] = 1;
    s[1] = -1;
    auto inv = s.invert();
    for (int i = 0; i <= 4; ++i) CHECK(inv[i] == Rational(1));
    auto c = TruncSeries<Rational>::monomial(7, 3, Rational(1, 3)).t_log_derivative();
    CHECK(c[3] == Rational(1));
    CHECK_THROWS(TruncSeries<Rational>(3).invert());

    std::mt19937 rng(9);
    for (int k = 0; k < 10; ++k) {
        TruncSeries2<PolyABAB> f(6);
        f = f + TruncSeries2<PolyABAB>::monomial(6, 0, 0, PolyABAB(Rational(static_cast<int>(rng() % 5) + 1)));
        for (int i = 0; i <= 6; ++i)
            for (int j = 0; i + j <= 6; ++j)
                if (i + j > 0) f = f + TruncSeries2<PolyABAB>::monomial(6, i, j, random_poly(rng, 1, 2));
        auto prod = f * f.invert();
        CHECK(prod == TruncSeries2<PolyABAB>::monomial(6, 0, 0, PolyABAB(1)));
    }
}

TEST_CASE("closed-form Hilbert expansion matches series products")
{
    // (1+t^5)/((1-t^2)(1-t^3)(1-t^4)(1-t^6)) via running sums and via
    // explicit series inversion.
    auto h = expand_hilbert({{1, 0}, {1, 5}}, {2, 3, 4, 6}, 20);
    TruncSeries<Rational> num(20), den = TruncSeries<Rational>::monomial(20, 0, Rational(1));
    num[0] = 1;
    num[5] = 1;
    for (int d : {2, 3, 4, 6}) {
        TruncSeries<Rational> f(20);
        f[0] = 1;
        f[d] = -1;
        den = den * f;
    }
    auto q = num * den.invert();
    for (int n = 0; n <= 20; ++n) CHECK(h[n] == q[n]);
    std::vector<int> first{1, 0, 1, 1, 2, 2, 4};
    for (int n = 0; n < 7; ++n) CHECK(h[n] == Rational(first[n]));

    auto h2 = expand_hilbert2({{1, 8, 2}}, {{2, 0}, {6, 0}, {3, 1}, {5, 1}}, 18, 6);
    CHECK(h2[8][2] == Rational(1));
    CHECK(h2[11][3] == Rational(1));
    for (int d = 0; d <= 6; ++d) CHECK(h2[9][d] == Rational(0));
}

TEST_CASE("echelon ranks agree with an independent elimination")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const uint32_t n = 12;
        std::vector<std::vector<mpq_class>> dense;
        Echelon e(n);
        int rows = 3 + trial % 10;
        std::vector<SparseVec> vs;
        for (int r = 0; r < rows; ++r) {
            SparseVec v;
            std::vector<mpq_class> d(n);
            for (uint32_t c = 0; c < n; ++c) {
                if (rng() % 3 != 0) continue;
                int val = static_cast<int>(rng() % 7) - 3;
                if (val == 0) continue;
                v.emplace_back(c, Rational(val));
                d[c] = val;
            }
            // Occasionally a combination of earlier rows.
            if (r > 2 && rng() % 3 == 0) {
                v = sparse_add(vs[0], vs[1], Rational(2, 3));
                for (auto& x : d) x = 0;
                for (auto& [c, val] : v) d[c] = val.to_mpq();
            }
            vs.push_back(v);
            dense.push_back(d);
            e.insert(v);
        }
        CHECK(e.rank() == oracle_rank(dense));
        for (auto& v : vs) CHECK(e.contains(v));
        auto rr = e.rref();
        CHECK(rr.size() == e.rank());
        for (std::size_t i = 0; i < rr.size(); ++i)
            for (std::size_t j = 0; j < rr.size(); ++j)
                if (i != j)
                    for (auto& [c, v] : rr[j]) CHECK_FALSE(c == rr[i].back().first);
    }
}

TEST_CASE("subspace operations")
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const uint32_t n = 10;
        Echelon x(n), y(n);
        for (int r = 0; r < 5; ++r) {
            SparseVec v, w;
            for (uint32_t c = 0; c < n; ++c) {
                if (rng() % 2) v.emplace_back(c, Rational(static_cast<int>(rng() % 5) - 2));
                if (rng() % 2) w.emplace_back(c, Rational(static_cast<int>(rng() % 5) - 2));
            }
            std::erase_if(v, [](auto& p) { return p.second.is_zero(); });
            std::erase_if(w, [](auto& p) { return p.second.is_zero(); });
            x.insert(v);
            if (r < 2) y.insert(v);
            y.insert(w);
        }
        Echelon s = sum(x, y), i = intersect(x, y);
        CHECK(s.rank() == x.rank() + y.rank() - i.rank());
        for (auto& r : i.rows()) {
            CHECK(x.contains(r));
            CHECK(y.contains(r));
        }
        CHECK(intersect(x, x).rank() == x.rank());
        CHECK(intersect(x, Echelon(n)).rank() == 0);
    }

    GradedSubspace g;
    g.declare({4, -1}, 5);
    g.insert({4, -1}, {{0, Rational(1)}, {3, Rational(2)}});
    GradedSubspace h;
    h.declare({4, -1}, 5);
    h.insert({4, -1}, {{1, Rational(1)}});
    CHECK(GradedSubspace::sum(g, h).dim({4, -1}) == 2);
    CHECK(GradedSubspace::intersect(g, h).dim({4, -1}) == 0);
    CHECK(GradedSubspace::quotient_dims(g, h).at({4, -1}) == 1);
    CHECK(g.contains({4, -1}, {{0, Rational(2)}, {3, Rational(4)}}));
}

TEST_CASE("combination solver")
{
    CombinationSolver s(4);
    s.add({{0, Rational(1)}, {1, Rational(1)}});
    s.add({{1, Rational(1)}, {2, Rational(1)}});
    s.add({{0, Rational(1)}, {2, Rational(-1)}});
    CHECK(s.rank() == 2);
    auto x = s.solve({{0, Rational(2)}, {1, Rational(3)}, {2, Rational(1)}});
    REQUIRE(x);
    SparseVec back;
    back = sparse_add(back, {{0, Rational(1)}, {1, Rational(1)}}, (*x)[0]);
    back = sparse_add(back, {{1, Rational(1)}, {2, Rational(1)}}, (*x)[1]);
    back = sparse_add(back, {{0, Rational(1)}, {2, Rational(-1)}}, (*x)[2]);
    CHECK(back == SparseVec{{0, Rational(2)}, {1, Rational(3)}, {2, Rational(1)}});
    CHECK_FALSE(s.solve({{3, Rational(1)}}));
    CHECK(s.kernel().size() == 1);
}

TEST_CASE("polynomial spaces with symmetry")
{
    PolyABAB m = A * B * Ap * Bp * (A * A * Bp - Ap * Ap * B);
    PolySpace as(7, Symmetry::AS, true);
    CHECK(as.contains_poly(m));
    CHECK(as.poly(as.coords(m)) == m);
    CHECK_FALSE(as.contains_poly(A * B * Ap * Bp * A));
    PolyABAB proj = project(A * A * Bp, Symmetry::ASxAS);
    CHECK(has_symmetry(proj, Symmetry::ASxAS));
    PolySpace axa(3, Symmetry::ASxAS, false);
    CHECK(axa.poly(axa.coords(proj)) == proj);
    // Dimension counts: monomials of degree 4 split into s1-orbits.
    PolySpace none(4, Symmetry::None, false);
    CHECK(none.dim() == 35);
    PolySpace sym(4, Symmetry::SYM, false), anti(4, Symmetry::AS, false);
    CHECK(sym.dim() + anti.dim() == 35);
}

TEST_CASE("polynomial JSON round trip")
{
    PolyABAB p = A * Bp * Rational(3, 4) - Ap * B;
    auto j = poly_to_json(p);
    CHECK(j["vars"][2] == "Ap");
    CHECK(j["terms"][0]["c"] == "-1/1");
    CHECK(j["terms"][1]["c"] == "3/4");
    CHECK(poly_from_json<VarsABAB>(j) == p);
}
