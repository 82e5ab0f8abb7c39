#ifndef ARTIFACT_INVARIANTS_HPP
#define ARTIFACT_INVARIANTS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "artifact/linalg.hpp"
#include "artifact/poly.hpp"
#include "artifact/polyspace.hpp"
#include "artifact/report.hpp"
#include "artifact/series.hpp"

namespace artifact::inv {

// ---------------------------------------------------------------------------
// The group G = S3 wr S2 acting on the 3x3 matrices with zero row and column
// sums whose upper-left 2x2 block is (A B; A' B').

// g permutes rows by `row`, columns by `col`, then transposes if `transpose`.
// The entry at position (i, j) of g.M is M(row[i'], col[j']) where
// (i', j') = (i, j), or (j, i) when transposed.
struct GroupElement {
    std::array<int, 3> row{0, 1, 2};
    std::array<int, 3> col{0, 1, 2};
    bool transpose = false;

    friend bool operator==(const GroupElement& a, const GroupElement& b)
    {
        return a.row == b.row && a.col == b.col && a.transpose == b.transpose;
    }
};

// 4x4 integer matrix L with (image of variable i) = sum_j L[i][j] var_j, in
// the variable order (A, B, A', B').
using LinearSubstitution = std::array<std::array<int, 4>, 4>;

GroupElement group_identity();
// The three generators: (B, A, B', A'), (B, -A-B, B', -A'-B'), (A, A', B, B').
std::vector<GroupElement> group_generators();
LinearSubstitution substitution(const GroupElement& g);
// All 72 elements by direct enumeration of (row, col, transpose).
const std::vector<GroupElement>& group_elements();
// Distinct substitutions reached by closing the generators under
// composition. The closure has 72 elements.
std::vector<LinearSubstitution> generated_substitutions();

// p(image of A, image of B, ...). act(g, act(h, p)) equals act(L_h L_g, p)
// for the substitution matrices L_g, L_h.
PolyABAB group_act(const GroupElement& g, const PolyABAB& p);
PolyABAB act(const LinearSubstitution& l, const PolyABAB& p);
bool is_invariant(const PolyABAB& p);
// Average over the 72 images.
PolyABAB reynolds(const PolyABAB& p);

// Coefficients of t^0..t^order of (1/72) sum_g 1/det(1 - t L_g).
std::vector<Rational> molien_series(int order);
// Expansion of (1 + t^5) / ((1 - t^2)(1 - t^3)(1 - t^4)(1 - t^6)).
std::vector<Rational> molien_closed_form(int order);
// dim of the span of the Reynolds images of all weight-n monomials, computed
// as the rank mod 2^61 - 1 of their evaluations at random points. This is a
// lower bound that is exact with overwhelming probability; points are added
// until the rank has been stable for `stable_rounds` consecutive points.
std::size_t reynolds_span_dim_sampled(int n, uint64_t seed = 1, int stable_rounds = 8);
// Same dimension from exact symbolic Reynolds images (small weights only).
std::size_t reynolds_span_dim_exact(int n);

// ---------------------------------------------------------------------------
// Power sums and the subring they generate.

// The 9-term power sum of the matrix entries; cached.
const PolyABAB& sigma_tilde(int k);

// Exponents of sigma~2, sigma~3, sigma~4, sigma~5, sigma~6.
struct SigmaMono {
    std::array<int, 5> e{};
    int weight() const { return 2 * e[0] + 3 * e[1] + 4 * e[2] + 5 * e[3] + 6 * e[4]; }
    friend bool operator<(const SigmaMono& a, const SigmaMono& b) { return a.e < b.e; }
    friend bool operator==(const SigmaMono& a, const SigmaMono& b) { return a.e == b.e; }
    friend SigmaMono operator*(SigmaMono a, const SigmaMono& b)
    {
        for (int i = 0; i < 5; ++i) a.e[i] += b.e[i];
        return a;
    }
    std::string str() const;
};

SigmaMono sigma_var(int k, int power = 1); // k in {2,3,4,5,6}
// The product of power sums; cached.
PolyABAB sigma_mono_poly(const SigmaMono& m);
// All monomials of the given weight in the allowed generators (subset of
// {2,3,4,5,6}), in increasing exponent order.
std::vector<SigmaMono> sigma_monomials(int weight, const std::vector<int>& generators = {2, 3, 4, 5, 6});

// Coordinates of the invariant weight-n space (invariants are symmetric
// under the exchange (A,B) <-> (A',B'), so they live in the SYM piece).
const PolySpace& invariant_ambient(int n);
// Rank of the given monomials as polynomials.
std::size_t sigma_rank(int weight, const std::vector<SigmaMono>& monos);
// A basis of the weight-n piece of A: the first linearly independent
// monomials of sigma_monomials(n). Cached.
const std::vector<SigmaMono>& invariant_basis(int n);

// The weight-10 relation among sigma~2..sigma~6, as a polynomial in A,B,A',B'
// (its vanishing is the check).
PolyABAB presentation_relation();

CheckReport verify_presentation_A(int N);
CheckReport verify_molien(int N, bool sampled_reynolds = true);

// ---------------------------------------------------------------------------
// The ideal I = (sigma~3, sigma~5) and its powers.

struct Decomposition {
    int i = 0;
    PolyABAB p3;
    PolyABAB p5;
    // Coefficients of p3 on invariant_basis(i - 3) and p5 on invariant_basis(i - 5).
    std::vector<SigmaMono> basis3;
    std::vector<SigmaMono> basis5;
    std::vector<Rational> c3;
    std::vector<Rational> c5;
};

// sigma~i = p3 sigma~3 + p5 sigma~5 for odd i >= 3. Variant 0 is the
// particular solution of the echelonized system; variant v > 0 adds the v-th
// kernel vector. Throws std::invalid_argument for even or small i,
// std::out_of_range for a variant beyond the kernel, std::logic_error if no
// solution exists or the identity fails to multiply back.
Decomposition decompose_in_I35(int i, int variant = 0);
// Dimension of the solution space's kernel at weight i.
std::size_t decomposition_kernel_dim(int i);

// Spanning set of I^k at weight n: sigma~3^a sigma~5^b times
// invariant_basis(n - 3a - 5b) with a + b = k.
std::vector<SigmaMono> ideal_power_spanning(int k, int n);
// Echelon of I^k in invariant_ambient(n) coordinates; cached.
const Echelon& ideal_power(int k, int n);
// The ideal generated by all sigma~i, odd 3 <= i <= n, at weight n.
Echelon ideal_from_all_odd(int n);
// dim gr^k = dim I^k - dim I^(k+1) at weights 0..N.
std::vector<std::size_t> gr_sigma_A(int k, int N);
// Expansion of (1 - t^10) / ((1 - t^2)(1 - t^4)(1 - t^6)).
std::vector<Rational> gr0_closed_form(int order);
// Count of monomials xi2^a xi4^b xi6^c of weight n not divisible by xi4 xi6.
std::size_t gr0_presented_dim(int n);
// (sigma~4 - sigma~2^2/4)(-125/432 sigma~2^3 + 175/72 sigma~2 sigma~4 - 25/6 sigma~6).
PolyABAB gr0_relation_lift();

CheckReport verify_ideal_generation(int N);
CheckReport verify_gr0A_presentation(int N);
CheckReport verify_grA_polynomial(int N);

// ---------------------------------------------------------------------------
// Specialization at A' = B' = 0.

// X, Y, D as truncated series in t with coefficients in Q[sigma, pi].
struct XYD {
    TruncSeries<PolySigmaPi> X, Y, D;
};
XYD xyd_series(int order);
// sigma = A^2 + AB + B^2, pi = (AB)^2 sigma + (AB)^3 as polynomials in A, B.
PolyABAB sigma_of_AB();
PolyABAB pi_of_AB();
PolyABAB sigma_pi_to_AB(const PolySigmaPi& p);

// Compares sum_i P_i5(A,B,0,0) t^i (odd 3 <= i <= order, from
// decompose_in_I35(i, variant)) with (3/5) Y/D up to t^order.
CheckReport verify_p5i_series(int order, int variant = 0);
// Decompositions for odd 7 <= i <= max_i multiply back, plus verify_p5i_series.
CheckReport verify_ideal_i35(int max_i);

} // namespace artifact::inv

#endif
