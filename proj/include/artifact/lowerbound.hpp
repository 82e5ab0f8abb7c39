#ifndef ARTIFACT_LOWERBOUND_HPP
#define ARTIFACT_LOWERBOUND_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artifact/linalg.hpp"
#include "artifact/poly.hpp"
#include "artifact/polyspace.hpp"
#include "artifact/report.hpp"
#include "artifact/series.hpp"

namespace artifact::lb {

// ---------------------------------------------------------------------------
// V = AB Q[A,B], the module M = ABA'B' Q[A,B,A',B']^as and the maps between
// them. Elements of V are PolyABAB in A and B only.

// A^k + B^k + (-A-B)^k.
PolyABAB sigma_k(int k);
// Polynomial in A, B only with every monomial divisible by AB.
bool in_V(const PolyABAB& v);
// Divisible by ABA'B' and antisymmetric under (A,B) <-> (A',B').
bool in_M(const PolyABAB& m);

// v(A+A', B+B') - v(A,B) - v(A',B'). Throws std::invalid_argument outside V.
PolyABAB delta(const PolyABAB& v);
// The antisymmetric six-term combination lambda_v.
PolyABAB lambda_map(const PolyABAB& v);
// (A+B+A')^k - (A+A'+B')^k - (A+B+B')^k + (B+A'+B')^k + (A+B')^k - (A'+B)^k; cached.
const PolyABAB& lambda_k(int k);
// lambda^0_u. Both difference quotients are divided exactly; a failed
// division throws std::logic_error.
PolyABAB lambda0(const PolyABAB& u);
// delta_v lambda_w - delta_w lambda_v.
PolyABAB cocycle_c(const PolyABAB& v, const PolyABAB& w);
// sigma~_i lambda_j - sigma~_j lambda_i for odd i, j >= 3; cached.
const PolyABAB& tau(int i, int j);

// <s_0(u), s_0(v)> for monomials u = A^(a+1) B^(b+1), v likewise, computed
// with the Ihara bracket of the generators g_ab in the free Lie algebra and
// mapped to M through its lower central series class.
PolyABAB section_bracket_free(const PolyABAB& u, const PolyABAB& v);
// The same bracket from the polynomial formulas:
// delta_u (lambda_v + lambda0_v) - delta_v (lambda_u + lambda0_u).
PolyABAB section_bracket_poly(const PolyABAB& u, const PolyABAB& v);

// Generators A^k B^l (k, l >= 1) of V of weight <= n, increasing.
std::vector<PolyABAB> v_generators(int max_weight);

// c lies in M, vanishes at A, B, A', B' = 0, satisfies the cocycle identity,
// delta_{sigma_k} = -sigma~_k, lambda_k = 2 lambda_{sigma_k},
// c(sigma_i, sigma_j) = -tau_ij / 2 and tau_ij is antisymmetric under both
// exchanges. Pairs and triples of generators of total weight <= N.
CheckReport verify_cocycle_in_m(int N);
// <s(u), s(v)> = c(u, v) with s = s_0 + lambda0 for generator pairs of total
// weight <= N, both recurrences for Phi(u) = <s_0(AB), s_0(u)> and Psi(u),
// the closed form of Psi(AB^l), and Phi = Psi on all pairs.
CheckReport verify_section_cocycle(int N);
// lcs class of <f, h> (f in L^i, h in L^j, class taken in L^(i+j)) equals the
// star bracket of the classes, for every pair
// of g-Lyndon basis elements of total weight <= N.
CheckReport verify_lcs_star(int N);

// ---------------------------------------------------------------------------
// Generating series at B' = 0 and A' = B' = 0.

// (lambda_i)|_{B'=0}.
PolyABAB lambda_restricted(int i);
// (lambda_i)|_{B'=0} / (lambda_3)|_{B'=0}, exact; throws std::logic_error otherwise.
PolyABAB lambda_ratio(int i);
// (lambda_ratio(i))|_{A'=0} + (A <-> B).
PolyABAB lambda_ratio_sym(int i);
// The numerator Num_1(A,B,A',t) as a list of t-coefficients (t^0..t^7).
std::vector<PolyABAB> num1_coefficients();

// Divisibility and evenness for odd 3 <= i <= N, lambda_k = 2 lambda_{sigma_k},
// and the generating-series identity for the ratios to order N.
CheckReport verify_lambda_divisibility(int N);

// f = c0 + c1 p + c2 p^2 with c_i in Q[sigma, pi].
struct SigmaPDecomposition {
    PolySigmaPi c0, c1, c2;
};
// Coordinates in Q[sigma, p] (sigma = A^2+AB+B^2, p = AB) of a polynomial in
// A, B that is even and symmetric; throws std::invalid_argument otherwise.
PolySigmaP to_sigma_p(const PolyABAB& f);
// Division with remainder by the minimal polynomial p^3 + sigma p^2 - pi.
SigmaPDecomposition decompose_sigma_p(const PolySigmaP& f);
PolyABAB sigma_p_to_AB(const PolySigmaP& f);

// The decomposition of the symmetrized ratios against X/D, Y/D and 0 to order
// N, and the specializations of sigma~2 and sigma~6.
CheckReport verify_genfun_xy(int N);

// Bold P_ij in Q[x2, x6] (as a PolyX without x3, x5).
PolyX p_bold(int i, int j);
// Image of a polynomial in x2, x3, x5, x6 under x_k -> sigma~_k.
PolyABAB x_to_sigma(const PolyX& p);
// Image under x2 -> 4 sigma, x6 -> 6 pi + 4 sigma^3, as a polynomial in A, B.
PolyABAB x_to_sigma_AB(const PolyX& p);

// Aux_ij for odd 3 <= i < j with i + j <= N (plus antisymmetry and weights of P_ij).
CheckReport verify_aux(int N);

// ---------------------------------------------------------------------------
// Coordinates for homogeneous pieces of M.

// Weight-n elements of M (sym = AS) or of ABA'B' Q[...]^{as x as} (sym = ASxAS).
// With depth_order set (AS only), coordinates are sorted by decreasing depth
// so that F^d (depth >= d) is spanned by the first depth_prefix(d) coordinates.
class MSpace {
public:
    MSpace(int weight, Symmetry sym, bool depth_order);

    int weight() const { return space_.weight(); }
    Symmetry symmetry() const { return space_.symmetry(); }
    uint32_t dim() const { return space_.dim(); }
    bool contains_poly(const PolyABAB& p) const { return space_.contains_poly(p); }
    // Throws std::invalid_argument if p is not in the space.
    SparseVec coords(const PolyABAB& p) const;
    // Coordinates without the membership check (p must be in the space).
    SparseVec coords_unchecked(const PolyABAB& p) const;
    PolyABAB poly(const SparseVec& v) const;
    PolyABAB basis_element(uint32_t i) const;
    // Number of coordinates of depth >= d.
    uint32_t depth_prefix(int d) const;

private:
    PolySpace space_;
    bool depth_order_;
    std::vector<uint32_t> to_new_;
    std::vector<uint32_t> to_old_;
    std::vector<int> depth_of_new_;
};

// Cached tower of I^k M in one coordinate system. I is generated by sigma~3
// and sigma~5, so I^k M at weight n is spanned by sigma~3 and sigma~5 times
// I^(k-1) M at weights n - 3 and n - 5. Thread-safe.
class MContext {
public:
    MContext(Symmetry sym, bool depth_order);

    const MSpace& space(int n);
    // Echelon of I^k M at weight n (k = 0 gives the whole space).
    const Echelon& ideal_power(int k, int n);
    // Normal form modulo I^(k+1) M; p must lie in the space.
    SparseVec normal_form(int k, int n, const PolyABAB& p);
    bool in_ideal_power(int k, int n, const PolyABAB& p);
    // Products of k odd sigma~'s times tau_ij (i < j), of total weight n.
    std::vector<PolyABAB> mmin_lifts(int k, int n);
    // Echelon of the classes of mmin_lifts modulo I^(k+1) M.
    const Echelon& mmin(int k, int n);
    std::size_t mmin_dim(int k, int n) { return mmin(k, n).rank(); }

private:
    Symmetry sym_;
    bool depth_order_;
    std::recursive_mutex mu_;
    std::map<int, std::unique_ptr<MSpace>> spaces_;
    std::map<std::pair<int, int>, std::unique_ptr<Echelon>> ideals_;
    std::map<std::pair<int, int>, std::unique_ptr<Echelon>> mmins_;
};

// Shared contexts: as x as coordinates, and AS coordinates in depth order.
MContext& asxas_context();
MContext& depth_context();

// ---------------------------------------------------------------------------
// Cond_ij and the characterization of im(r).

// tau_ij - P_ij(sigma~2, sigma~6) tau_35 modulo I ABA'B' Q[...]^{as x as}.
CheckReport verify_cond(int i, int j);
// All odd 3 <= i < j with i + j <= N.
CheckReport verify_cond_all(int N);

// Conditions (1)-(3) on Pi in Q[A,B,A'] (a PolyABAB without B').
bool im_r_characterization(const PolyABAB& pi);
// The fourteen-term F with F|_{B'=0} = Pi when the conditions hold.
PolyABAB im_r_preimage(const PolyABAB& pi);

// AA'BB' (m / AA'BB')|_{B=B'=0}: the terms of m of degree one in B and in B'.
PolyABAB evaluation_BBp0(const PolyABAB& m);

// (sigma~4 - sigma~2^2/4) tau_35 in I M at weight 12, with the identities of
// its proof; also P tau_ij in I M for odd pairs with i + j + 4 <= N.
CheckReport verify_sigma4_annihilates(int N);

// ---------------------------------------------------------------------------
// M_0^min and period polynomials.

// M_0^min = gr0(A) tau_35 at weights <= N, the cyclic module is free over
// Q[x2, x6] (shift 8), and the image of tau_35 under evaluation_BBp0.
CheckReport verify_m0_cyclic(int N);
// dim M_0^min against t^8 / ((1 - t^2)(1 - t^6)) for weights <= N.
CheckReport verify_m0_hilbert(int N);

struct PeriodDims {
    int n = 0;
    std::size_t w_plus = 0;  // W_n^+
    std::size_t sigma = 0;   // Sigma_n
    std::size_t a_dim = 0;   // A_n (antisymmetric families a_ij, i + j = n)
    std::size_t r_dim = 0;   // relations among the tau-bar_ij
};
PeriodDims period_dims(int n);
// P|gamma for gamma in SL2(Z) acting in weight n - 2.
PolyPeriod slash(const PolyPeriod& p, int n, int a, int b, int c, int d);
// The displayed P_ij(A, A') (in A and A').
PolyABAB p_small(int i, int j);
CheckReport verify_period_dims(int N);

// ---------------------------------------------------------------------------
// M^min, phi, the action, purity.

// phi(P) lift: P(sigma~2, sigma~6, sigma~3, sigma~5) tau_35.
PolyABAB phi_lift(const PolyX& p);
// Monomials x2^a x6^b x3^c x5^d of weight w and x3,x5-degree k.
std::vector<PolyX> x_monomials(int weight, int k);

struct MminData {
    int N = 0;
    int K = 0;
    // dims[k][n] = dim M_k^min at weight n.
    std::vector<std::vector<std::size_t>> dims;
    CheckReport report;
};
MminData mmin_build(int N, int K);

CheckReport verify_phi(int N, int K);

// d(x2, x6, t) and xi_3, xi_5 with the sign s = +1 or -1 in front of t^3/3
// and t^5/5.
TruncSeries<PolyX> d_series(int order);
TruncSeries<PolyX> xi3_series(int order, int sign);
TruncSeries<PolyX> xi5_series(int order, int sign);

// Action of sigma_k (odd k, k + 8 <= N) on phi of monomials, Sigma-degree of
// the result <= K, under both signs; brackets {sigma_i, sigma_j} for
// i + j <= bracket_N; and the D(t) congruences.
CheckReport verify_action_formula(int N, int K, int bracket_N = 14);
CheckReport verify_purity(int N, int K);
CheckReport verify_mmin_hilbert(int N, int K);

} // namespace artifact::lb

#endif
