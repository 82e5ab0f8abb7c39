#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <string>

#include "artifact/freelie.hpp"

using namespace artifact;
using namespace artifact::lie;

namespace {

// Brute-force free associative algebra on strings, used as an independent
// expansion of bracket expressions.
using Str = std::map<std::string, mpq_class>;

Str str_mul(const Str& a, const Str& b)
{
    Str r;
    for (auto& [u, cu] : a)
        for (auto& [v, cv] : b) r[u + v] += cu * cv;
    std::erase_if(r, [](auto& t) { return t.second == 0; });
    return r;
}

Str str_br(const Str& a, const Str& b)
{
    Str r = str_mul(a, b);
    for (auto& [w, c] : str_mul(b, a)) r[w] -= c;
    std::erase_if(r, [](auto& t) { return t.second == 0; });
    return r;
}

Str to_str(const AssocElt& a)
{
    Str r;
    for (auto& [w, c] : a.terms()) r[word_to_string(w)] = c.to_mpq();
    return r;
}

const LieElt X = lie_x();
const LieElt Y = lie_y();

LieElt br(const LieElt& a, const LieElt& b) { return lie_bracket(a, b); }

LieElt ad_pow(const LieElt& z, int k, const LieElt& f)
{
    LieElt r = f;
    for (int i = 0; i < k; ++i) r = br(z, r);
    return r;
}

LieElt g(int a, int b) { return gen({a, b}); }

// Random element of the free Lie algebra with support in bigrade (w, d).
LieElt random_lie(std::mt19937& rng, int w, int d)
{
    auto words = lyndon_words(w, d);
    std::vector<LieElt::Term> t;
    for (auto lw : words)
        if (rng() % 2) t.emplace_back(lw, Rational(static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 3) + 1));
    return make_lie(std::move(t));
}

// Random homogeneous element of the i-th filtration step: a combination of
// g-Lyndon words of length >= i + 1.
// Words of length exactly i + 1 always get a nonzero coefficient, so the
// class in L^i / L^(i+1) is nonzero whenever such words exist.
LieElt random_filtered(std::mt19937& rng, int w, int d, int i)
{
    LieElt r;
    for (auto& gw : g_lyndon_words(w, d)) {
        int len = static_cast<int>(gw.size());
        if (len < i + 1) continue;
        int c = static_cast<int>(rng() % 5) - 2;
        if (len == i + 1 && c == 0) c = 1;
        r += expand_gword(gw) * Rational(c);
    }
    return r;
}

} // namespace

TEST_CASE("words and Lyndon enumeration")
{
    CHECK(word_to_string(word_from_string("xxyxy")) == "xxyxy");
    CHECK(is_lyndon(word_from_string("xxy")));
    CHECK_FALSE(is_lyndon(word_from_string("xyx")));
    CHECK_FALSE(is_lyndon(word_from_string("xyxy")));
    // Witt's formula for the number of Lyndon words of length n over two letters.
    const int witt[] = {0, 2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335};
    for (int n = 1; n <= 12; ++n) {
        std::size_t total = 0;
        for (int d = 0; d <= n; ++d) total += lyndon_words(n, d).size();
        CHECK(total == static_cast<std::size_t>(witt[n]));
    }
    auto [u, v] = standard_factorization(word_from_string("xxyxy"));
    CHECK(word_to_string(u) == "xxy");
    CHECK(word_to_string(v) == "xy");
    auto [u2, v2] = standard_factorization(word_from_string("xyy"));
    CHECK(word_to_string(u2) == "xy");
    CHECK(word_to_string(v2) == "y");
}

TEST_CASE("lie_bracket examples")
{
    CHECK(br(X, X).is_zero());
    LieElt xy = br(X, Y);
    CHECK(xy == LieElt(word_from_string("xy"), Rational(1)));
    // [[x,y],[x,[x,y]]] against a brute-force associative expansion.
    Str sx{{"x", 1}}, sy{{"y", 1}};
    Str sxy = str_br(sx, sy);
    Str oracle = str_br(sxy, str_br(sx, sxy));
    LieElt lhs = br(g(0, 0), g(1, 0));
    CHECK(to_str(expand(lhs)) == oracle);
    CHECK_FALSE(lhs.is_zero());
    CHECK(lhs == br(xy, br(X, xy)));
}

TEST_CASE("to_lyndon rejects non-Lie polynomials")
{
    AssocElt a(word_from_string("xy"), Rational(1));
    CHECK_THROWS_AS(to_lyndon(a), std::invalid_argument);
    CHECK_THROWS_AS(lyndon_element(word_from_string("yx")), std::invalid_argument);
}

TEST_CASE("antisymmetry and Jacobi for both brackets")
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        LieElt a = random_lie(rng, 2 + trial % 3, 1), b = random_lie(rng, 3, 1 + trial % 2),
               c = random_lie(rng, 2 + trial % 4, 1);
        if (trial % 4 == 0) a += X;
        if (trial % 5 == 0) c += Y;
        CHECK(br(a, b) == -br(b, a));
        CHECK((br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))).is_zero());
        CHECK(ihara_bracket(a, b) == -ihara_bracket(b, a));
        CHECK((ihara_bracket(a, ihara_bracket(b, c)) + ihara_bracket(b, ihara_bracket(c, a)) +
               ihara_bracket(c, ihara_bracket(a, b)))
                  .is_zero());
        CHECK(ihara_bracket(a, a).is_zero());
    }
}

TEST_CASE("derivation examples")
{
    std::mt19937 rng(3);
    for (int k = 0; k < 5; ++k) CHECK(derivation_apply(random_lie(rng, 4, 2), X).is_zero());
    CHECK(derivation_apply(br(X, Y), Y) == br(Y, br(X, Y)));
    CHECK(ihara_bracket(g(0, 0), g(0, 0)).is_zero());
}

TEST_CASE("D_f is a derivation of the bracket")
{
    std::mt19937 rng(41);
    for (int k = 0; k < 10; ++k) {
        LieElt f = random_lie(rng, 3, 1 + k % 2), a = random_lie(rng, 2 + k % 3, 1), b = random_lie(rng, 3, 2);
        CHECK(derivation_apply(f, br(a, b)) == br(derivation_apply(f, a), b) + br(a, derivation_apply(f, b)));
    }
}

TEST_CASE("f -> D_f is a Lie homomorphism for the Ihara bracket")
{
    std::mt19937 rng(43);
    for (int k = 0; k < 10; ++k) {
        LieElt f = random_lie(rng, 2 + k % 3, 1), h = random_lie(rng, 3 + k % 2, 1 + k % 2);
        LieElt fh = ihara_bracket(f, h);
        for (const LieElt& z : {X, Y, random_lie(rng, 3, 1)}) {
            CHECK(derivation_apply(fh, z) ==
                  derivation_apply(f, derivation_apply(h, z)) - derivation_apply(h, derivation_apply(f, z)));
        }
    }
}

TEST_CASE("two-part expansion of D_{g_ij}(g_i'j')")
{
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j)
            for (int ip = 0; ip <= 1; ++ip)
                for (int jp = 0; jp <= 2; ++jp) {
                    LieElt f = g(i, j);
                    LieElt xy = br(X, Y);
                    LieElt first;
                    for (int alpha = 0; alpha <= jp - 1; ++alpha) {
                        LieElt inner = br(br(Y, f), ad_pow(Y, jp - 1 - alpha, xy));
                        first += ad_pow(X, ip, ad_pow(Y, alpha, inner));
                    }
                    LieElt last = ad_pow(X, ip, ad_pow(Y, jp, br(X, br(Y, f))));
                    CHECK(derivation_apply(f, g(ip, jp)) == first + last);
                    // The first sum lies in the first filtration step, the last
                    // term maps to the product of A^(i+1)B^(j+1) and A^(i'+1)B^(j'+1).
                    if (!first.is_zero()) CHECK(lcs_filtration_member(first, 1));
                    TensorElt cls = lcs_class(last, 0);
                    CHECK(cls == TensorElt(make_tensor_key({{i + ip + 2, j + jp + 2}}), Rational(1)));
                }
}

TEST_CASE("generators and elimination")
{
    CHECK(gen_id({0, 0}) == 0);
    CHECK(gen_id({1, 0}) == 1);
    CHECK(gen_id({0, 1}) == 2);
    for (int id = 0; id < 50; ++id) CHECK(gen_id(gen_of(id)) == id);

    LieElt xy = br(X, Y);
    EliminatedElt e = eliminate(br(X, br(Y, xy)));
    CHECK(e == EliminatedElt(GWord{static_cast<uint16_t>(gen_id({1, 1}))}, Rational(1)));
    CHECK(eliminate(br(X, xy)) == EliminatedElt(GWord{static_cast<uint16_t>(gen_id({1, 0}))}, Rational(1)));
    GWord w{static_cast<uint16_t>(gen_id({0, 0})), static_cast<uint16_t>(gen_id({0, 1}))};
    CHECK(eliminate(br(xy, br(Y, xy))) == EliminatedElt(w, Rational(1)));
    CHECK_THROWS_AS(eliminate(X), std::invalid_argument);
    CHECK_THROWS_AS(eliminate(xy + Y), std::invalid_argument);
    CHECK_THROWS_AS(eliminate(lyndon_element(word_from_string("xxxy")) * Rational(0) + X), std::invalid_argument);

    // Dimension count: g-Lyndon words and xy-Lyndon words agree per bigrade.
    for (int wt = 2; wt <= 10; ++wt)
        for (int d = 1; d < wt; ++d) CHECK(g_lyndon_words(wt, d).size() == lyndon_words(wt, d).size());
}

TEST_CASE("eliminate is inverse to expansion")
{
    std::mt19937 rng(47);
    for (int wt = 2; wt <= 9; ++wt)
        for (int d = 1; d < wt; ++d) {
            LieElt f = random_lie(rng, wt, d);
            EliminatedElt e = eliminate(f);
            CHECK(expand(e) == f);
            CHECK(eliminate(expand(e)) == e);
        }
}

TEST_CASE("lower central series membership")
{
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            CHECK(lcs_filtration_member(g(a, b), 0));
            CHECK_FALSE(lcs_filtration_member(g(a, b), 1));
        }
    CHECK(lcs_filtration_member(br(g(0, 0), g(1, 0)), 1));
    CHECK(lcs_filtration_member(ihara_bracket(g(0, 0), g(0, 1)), 1));
    CHECK_FALSE(ihara_bracket(g(0, 0), g(0, 1)).is_zero());
}

TEST_CASE("lcs classes")
{
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            CHECK(lcs_class(g(a, b), 0) == TensorElt(make_tensor_key({{a + 1, b + 1}}), Rational(1)));
    TensorElt ab = TensorElt(make_tensor_key({{1, 1}}), Rational(1));
    TensorElt a2b = TensorElt(make_tensor_key({{2, 1}}), Rational(1));
    CHECK(lcs_class(br(g(0, 0), g(1, 0)), 1) == tensor_bracket(ab, a2b));
    CHECK(lcs_class(br(g(0, 0), g(1, 0)), 0).is_zero());
    CHECK_THROWS_AS(lcs_class(g(0, 0), 1), std::invalid_argument);
}

TEST_CASE("filtration compatibility of both brackets")
{
    std::mt19937 rng(53);
    for (int trial = 0; trial < 8; ++trial) {
        int i = trial % 2, j = (trial / 2) % 2;
        LieElt f = random_filtered(rng, 4 + i * 2, 2, i), h = random_filtered(rng, 4 + j, 2, j);
        if (f.is_zero() || h.is_zero()) continue;
        CHECK(lcs_filtration_member(ihara_bracket(f, h), i + j));
        CHECK(lcs_filtration_member(br(f, h), i + j + 1));
    }
}

TEST_CASE("star operations")
{
    PolyABAB A = PolyABAB::var(0), B = PolyABAB::var(1), Ap = PolyABAB::var(2), Bp = PolyABAB::var(3);
    TensorElt p = tensor_from_poly(A * B * A), q = tensor_from_poly(A * B * B + A * A * B);
    CHECK(star_bracket(p, q).is_zero());
    CHECK(star(p, A * B * B) == tensor_from_poly(A * A * A * B * B * B));
    CHECK_THROWS(tensor_from_poly(A * A));
    CHECK_THROWS(tensor_from_poly(A * Bp));

    // Rank two: P ⊛ g is the product with g(A + A', B + B'), checked with an
    // independent substitution.
    std::array<PolyABAB, 4> co{A + Ap, B + Bp, Ap, Bp};
    for (auto gpoly : {A * B, A * A * B, A * B * B * B, A * B + A * A * B * B * Rational(3)}) {
        TensorElt f = tensor_bracket(tensor_from_poly(A * B), tensor_from_poly(A * A * B));
        PolyABAB lhs = tensor2_to_poly(star(f, gpoly));
        PolyABAB rhs = substitute(gpoly, co) * tensor2_to_poly(f);
        CHECK(lhs == rhs);
    }
    CHECK(poly_to_tensor2(tensor2_to_poly(tensor_bracket(p, q))) == tensor_bracket(p, q));

    // P ⊛ [q1, q2] = [P ⊛ q1, q2] + [q1, P ⊛ q2] for P of rank one.
    TensorElt q1 = tensor_from_poly(A * B), q2 = tensor_from_poly(A * B * B);
    PolyABAB pp = A * A * B;
    CHECK(star(tensor_from_poly(pp), tensor_bracket(q1, q2)) ==
          tensor_bracket(star(tensor_from_poly(pp), q1), q2) + tensor_bracket(q1, star(tensor_from_poly(pp), q2)));
}

TEST_CASE("lcs classes intertwine the Ihara bracket with the star bracket")
{
    std::mt19937 rng(59);
    int checked = 0;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 1; ++j)
            for (int wf = 2 * (i + 1); wf <= 7; ++wf)
                for (int wg = 2 * (j + 1); wf + wg <= 10; ++wg)
                    for (int df = 1; df < wf; ++df)
                        for (int dg = 1; dg < wg; ++dg) {
                            LieElt f = random_filtered(rng, wf, df, i), h = random_filtered(rng, wg, dg, j);
                            if (lcs_class(f, i).is_zero() || lcs_class(h, j).is_zero()) continue;
                            TensorElt lhs = lcs_class(ihara_bracket(f, h), i + j);
                            TensorElt rhs = star_bracket(lcs_class(f, i), lcs_class(h, j));
                            CHECK(lhs == rhs);
                            ++checked;
                        }
    CHECK(checked >= 100);
}

TEST_CASE("depth components")
{
    CHECK(depth_component(X, 0) == X);
    CHECK(depth_component(X, 1).is_zero());
    LieElt xy = br(X, Y);
    CHECK(depth_component(xy, 1) == xy);
    CHECK(depth_component(xy, 0).is_zero());
    CHECK(depth_component(xy, 2).is_zero());
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            LieElt r = ihara_bracket(ad_pow(X, a, Y), ad_pow(X, b, Y));
            auto bg = bigrades(r);
            CHECK(bg.size() <= 1);
            for (auto gr : bg) {
                CHECK(gr.depth == 2);
                CHECK(gr.weight == a + b + 2);
            }
        }
}

TEST_CASE("JSON dump of Lie elements")
{
    auto j = to_json(br(X, br(X, Y)));
    CHECK(j["basis"] == "lyndon-xy");
    CHECK(j["terms"][0]["word"] == "xxy");
    CHECK(j["terms"][0]["c"] == "1/1");
    auto je = to_json(eliminate(br(g(0, 0), g(1, 0))));
    CHECK(je["basis"] == "lyndon-g");
    CHECK(je["terms"][0]["word"] == "g(0,0)g(1,0)");
}
