#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artifact/depthgraded.hpp"

using namespace artifact;
using namespace artifact::dg;

namespace {

const PolyABAB A = PolyABAB::var(0);
const PolyABAB B = PolyABAB::var(1);
const PolyABAB Ap = PolyABAB::var(2);
const PolyABAB Bp = PolyABAB::var(3);

lie::LieElt br(const lie::LieElt& a, const lie::LieElt& b) { return lie::lie_bracket(a, b); }

// Number of (a, b) with 2a + 6b = m.
long long count_26(int m)
{
    if (m < 0) return 0;
    long long c = 0;
    for (int b = 0; 6 * b <= m; ++b)
        if ((m - 6 * b) % 2 == 0) ++c;
    return c;
}

// Number of (a, b, c) with 2a + 4b + 6c = m.
long long count_246(int m)
{
    if (m < 0) return 0;
    long long c = 0;
    for (int b = 0; 4 * b <= m; ++b)
        for (int d = 0; 4 * b + 6 * d <= m; ++d)
            if ((m - 4 * b - 6 * d) % 2 == 0) ++c;
    return c;
}

// Dimension of the degree-3 part of the free Lie algebra on V+ (one
// generator in each weight >= 2) at weight n: (1/3)(#ordered triples - #(a,a,a)).
long long lie3_plus(int n)
{
    long long triples = 0;
    for (int a = 2; a <= n; ++a)
        for (int b = 2; a + b <= n - 2; ++b) ++triples;
    long long diag = (n % 3 == 0 && n / 3 >= 2) ? 1 : 0;
    return (triples - diag) / 3;
}

} // namespace

TEST_CASE("xi generators")
{
    CHECK(xi(0) == lie::lie_y());
    CHECK(xi(1) == br(lie::lie_x(), lie::lie_y()));
    CHECK(xi(3) == br(lie::lie_x(), br(lie::lie_x(), br(lie::lie_x(), lie::lie_y()))));
    for (int a = 0; a <= 6; ++a) {
        auto g = lie::bigrades(xi(a));
        REQUIRE(g.size() == 1);
        CHECK(g[0].weight == a + 1);
        CHECK(g[0].depth == 1);
    }
    CHECK_THROWS_AS(xi(-1), std::invalid_argument);
}

TEST_CASE("Lyndon coordinates")
{
    for (int n = 2; n <= 12; ++n) CHECK(LyndonCoords(n, 2).dim() == static_cast<uint32_t>((n - 1) / 2));
    LyndonCoords lc(6, 2);
    lie::LieElt f = br(xi(1), xi(3)) * Rational(3) - br(xi(0), xi(4));
    CHECK(lc.element(lc.coords(f)) == f);
    CHECK_THROWS_AS(lc.coords(xi(5)), std::invalid_argument);
}

TEST_CASE("depth-2 split and model")
{
    Depth2Parts p = split_depth2(br(xi(1), xi(2)));
    CHECK(p.xi0_part.is_zero());
    CHECK(p.model == A * B * Ap * Bp * (Ap - A));
    Depth2Parts q = split_depth2(br(xi(0), xi(3)));
    CHECK(q.model.is_zero());
    CHECK(q.xi0_part == br(xi(0), xi(3)));
    lie::LieElt f = br(xi(2), xi(4)) - br(xi(1), xi(5)) * Rational(2) + br(xi(0), xi(6));
    Depth2Parts r = split_depth2(f);
    CHECK(depth2_from_model(r.model) + r.xi0_part == f);
    CHECK_THROWS_AS(depth2_from_model(A * B * Ap * Bp * A), std::invalid_argument);
    CHECK_THROWS_AS(split_depth2(xi(3)), std::invalid_argument);
}

TEST_CASE("depth-3 split and dimensions")
{
    Depth3Parts p = split_depth3(br(xi(1), br(xi(0), xi(2))));
    CHECK(p.middle == A * B * Ap * Ap * Bp * Bp);
    CHECK(p.xi0xi0_part.is_zero());
    CHECK(p.plus_part.is_zero());
    CHECK(split_depth3(br(xi(0), br(xi(0), xi(1)))).xi0xi0_part == br(xi(0), br(xi(0), xi(1))));
    lie::LieElt plus = br(xi(1), br(xi(1), xi(2)));
    CHECK(split_depth3(plus).plus_part == plus);
    // [xi0, [xi1, xi2]] = [xi1, [xi0, xi2]] - [xi2, [xi0, xi1]].
    Depth3Parts j = split_depth3(br(xi(0), br(xi(1), xi(2))));
    CHECK(j.middle == A * B * Ap * Ap * Bp * Bp - A * A * B * Ap * Bp * Bp);
    CHECK(depth3_from_middle(j.middle) == br(xi(0), br(xi(1), xi(2))));
    for (int n = 5; n <= 14; ++n) {
        Depth3Dims d = depth3_dims(n);
        CHECK(d.xi0xi0 == 1);
        CHECK(d.middle == static_cast<std::size_t>(n - 4));
        CHECK(static_cast<long long>(d.plus) == lie3_plus(n));
        CHECK(d.total == d.xi0xi0 + d.middle + d.plus);
    }
}

TEST_CASE("Lie(W) dimensions against direct counts")
{
    auto w1 = lie_w(1, 15), w2 = lie_w(2, 16), w3 = lie_w(3, 17);
    for (int n = 0; n <= 15; ++n) CHECK(w1.dims()[n] == ((n >= 3 && n % 2 == 1) ? 1u : 0u));
    for (int n = 0; n <= 16; ++n) CHECK(static_cast<long long>(w2.dims()[n]) == count_26(n - 8));
    for (int n = 0; n <= 17; ++n)
        CHECK(static_cast<long long>(w3.dims()[n]) == count_246(n - 11) + count_246(n - 13) - count_246(n - 15));
    CHECK(w1.dims()[3] == 1);
    CHECK(w2.dims()[12] == 1);
    CHECK(w2.dims()[14] == 2);
    CHECK(w3.dims()[11] == 1);
    CHECK(w2.dims()[9] == 0);
    CHECK_THROWS_AS(lie_w(0, 5), std::invalid_argument);
}

TEST_CASE("<xi[2], xi[4]> lies in the explicit depth-2 model")
{
    lie::LieElt b = lie::ihara_bracket(xi(2), xi(4));
    Depth2Parts p = split_depth2(b);
    CHECK(p.xi0_part.is_zero());
    auto basis = depth2_model_basis(8);
    REQUIRE(basis.size() == 1);
    auto q = p.model.exact_divide(basis[0]);
    REQUIRE(q.has_value());
    CHECK(q->degree() == 0);
    CHECK(depth2_model_basis(9).empty());
}

TEST_CASE("mu and the test map")
{
    PolyABAB g = Ap - A;
    CHECK(mu_map(PolyABAB(), g).is_zero());
    CHECK(mu_map(A, g) == -A * (A * B * Ap * Bp * Bp) * g);
    CHECK(test_map(3, g) == mu_map(A * A * Rational(3), g));
    CHECK(test_map(5, g) == mu_map(A * A * A * A * Rational(5), g));
    CHECK(test_map(3, PolyABAB()).is_zero());
    CHECK_THROWS_AS(test_map(7, g), std::invalid_argument);
    CHECK_THROWS_AS(mu_map(A, A), std::invalid_argument);
    CHECK_THROWS_AS(mu_map(A + B, g), std::invalid_argument);
    CHECK(depth3_component(A * B * Ap * Bp * Bp + A * B * B * Ap * Bp) == A * B * Ap * Bp * Bp);
}

TEST_CASE("the complex at small weights")
{
    ComplexDims d15 = complex_dims(15);
    CHECK(d15.lambda3 == 1);
    CHECK(d15.homology == 0);
    CHECK(d15.rank_first == 1);
    CHECK(complex_dims(17).homology == 1);
    for (int n = 0; n < 15; ++n) {
        ComplexDims d = complex_dims(n);
        CHECK(d.lambda3 == 0);
        CHECK(d.middle == d.m1);
        CHECK(d.homology == 0);
    }
}

TEST_CASE("report checks at small sizes")
{
    std::vector<CheckReport> reps{verify_liew_dims(13, 14, 15), verify_depth2_explicit(14),
                                  verify_test_map_injectivity(17), verify_complex_homology(17),
                                  verify_depth3_sequence(17)};
    for (auto& r : reps) CHECK_MESSAGE(r.passed(), r.summary_line());
}
