#ifndef ARTIFACT_DEPTHGRADED_HPP
#define ARTIFACT_DEPTHGRADED_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "artifact/freelie.hpp"
#include "artifact/linalg.hpp"
#include "artifact/poly.hpp"
#include "artifact/report.hpp"

namespace artifact::dg {

// xi[a] = (ad x)^a (y): weight a + 1, depth 1. Throws std::invalid_argument for a < 0.
const lie::LieElt& xi(int a);

// Index of a Lyndon word of the given weight and depth among lyndon_words(weight, depth).
class LyndonCoords {
public:
    LyndonCoords(int weight, int depth);
    int weight() const { return weight_; }
    int depth() const { return depth_; }
    uint32_t dim() const { return static_cast<uint32_t>(words_.size()); }
    // Throws std::invalid_argument if f has a term outside this bigrade.
    SparseVec coords(const lie::LieElt& f) const;
    lie::LieElt element(const SparseVec& v) const;

private:
    int weight_;
    int depth_;
    std::vector<lie::Word> words_;
    std::map<lie::Word, uint32_t> index_;
};

// ---------------------------------------------------------------------------
// The decompositions L_2(V) = [xi[0], V+] + L_2(V+) and
// L_3(V) = [xi[0], [xi[0], V+]] + [V+, [xi[0], V+]] + L_3(V+), with the
// polynomial models
//   [xi[k+1], xi[l+1]]          <-> ABA'B' (A^k A'^l - A^l A'^k),
//   [xi[k+1], [xi[0], xi[l+1]]] <-> A^(k+1) B A'^(l+1) B'^2.

struct Depth2Parts {
    lie::LieElt xi0_part; // component in [xi[0], V+]
    PolyABAB model;       // component in L_2(V+), as ABA'B' Q[A,A']^as
};
struct Depth3Parts {
    lie::LieElt xi0xi0_part; // component in [xi[0], [xi[0], V+]]
    PolyABAB middle;         // component in [V+, [xi[0], V+]], as ABA'(B')^2 Q[A,A']
    lie::LieElt plus_part;   // component in L_3(V+)
};

// f must be homogeneous of depth 2 (resp. 3) and a single weight; throws
// std::invalid_argument otherwise.
Depth2Parts split_depth2(const lie::LieElt& f);
Depth3Parts split_depth3(const lie::LieElt& f);
// Inverses of the polynomial models; throw std::invalid_argument outside
// ABA'B' Q[A,A']^as (resp. ABA'(B')^2 Q[A,A']).
lie::LieElt depth2_from_model(const PolyABAB& p);
lie::LieElt depth3_from_middle(const PolyABAB& p);

// Dimensions of the summands of L_3(V) at weight n (in the order above) and of
// L_3(V) itself from the Lyndon words with three y's.
struct Depth3Dims {
    std::size_t xi0xi0 = 0, middle = 0, plus = 0, total = 0;
};
Depth3Dims depth3_dims(int n);

// ---------------------------------------------------------------------------
// Lie(W), the Lie subalgebra for < , > generated by the xi[a], a even > 0.

struct DepthKSpace {
    int k = 0;
    int N = 0;
    // basis[n]: independent brackets spanning Lie(W)[k] at weight n.
    std::vector<std::vector<lie::LieElt>> basis;
    std::vector<std::size_t> dims() const;
};

// Lie(W)[k] at weights <= N, spanned by <xi[a], Lie(W)[k-1]> (a even > 0).
// Weights are cached, so growing N reuses earlier work. Throws
// std::invalid_argument for k < 1.
DepthKSpace lie_w(int k, int N);
// The series t^3/(1-t^2), t^8/((1-t^2)(1-t^6)) and
// t^11(1+t^2-t^4)/((1-t^2)(1-t^4)(1-t^6)) for k = 1, 2, 3.
std::vector<Rational> lie_w_series(int k, int N);

// Dims against the series for k = 1 (weight <= n1), 2 (<= n2), 3 (<= n3),
// purity of depth of every bracket, and the dimension count of the
// decomposition of L_3(V).
CheckReport verify_liew_dims(int n1, int n2, int n3);

// ---------------------------------------------------------------------------
// Depth 2: the explicit model.

// ABA'B'(A-A')(A+A')(A+2A')(2A+A') s2^a s6^b with s2 = A^2+A'^2+(A+A')^2,
// s6 = A^6+A'^6+(A+A')^6, of weight n.
std::vector<PolyABAB> depth2_model_basis(int n);

// Lie(W)[2] has no [xi[0], V+] component and its model equals the explicit
// subspace; the depth-2 images of the tau_ij equal it as well and are
// independent modulo I M (so M_0^min maps isomorphically); weights <= N.
CheckReport verify_depth2_explicit(int N);

// ---------------------------------------------------------------------------
// Depth 3: mu, the test map, the complex and the exact sequence.

// ABA'(B')^2 (f(A') - f(A+A')) g(A, A') for f in A Q[A] and g in Q[A, A']
// antisymmetric under A <-> A'. Throws std::invalid_argument otherwise.
PolyABAB mu_map(const PolyABAB& f, const PolyABAB& g);
// i ABA'(B')^2 ((A')^(i-1) - (A+A')^(i-1)) g(A, A') for i in {3, 5}; g as in mu_map.
PolyABAB test_map(int i, const PolyABAB& g);
// Terms of p of degree 1 in B and 2 in B'.
PolyABAB depth3_component(const PolyABAB& p);

// Rank of the test map on sigma_3 and sigma_5 tensor the model at each odd
// weight <= N against t^8(t^3+t^5)/((1-t^2)(1-t^6)); also the depth-3
// component of sigma~_k tau_ij against mu of the depth-1 part of sigma_k.
CheckReport verify_test_map_injectivity(int N);

struct ComplexDims {
    int n = 0;
    std::size_t lambda3 = 0;      // Lambda^3(Sigma)
    std::size_t middle = 0;       // Sigma tensor M_0^min
    std::size_t m1 = 0;           // M_1^min
    std::size_t rank_first = 0;   // rank of id tensor { , }
    std::size_t rank_second = 0;  // rank of the action
    std::size_t homology = 0;     // middle - rank_first - rank_second
};
// The complex Lambda^3 Sigma -> Sigma (x) M_0^min -> M_1^min at weight n.
// The first map sends s_a ^ s_b ^ s_c to the cyclic sum of s_a (x) c(s_b, s_c).
ComplexDims complex_dims(int n);
std::vector<Rational> homology_series(int N);
// Composition zero (exactly in M), first map injective, second surjective,
// homology against t^17/((1-t^2)(1-t^4)(1-t^6)), weights <= N.
CheckReport verify_complex_homology(int N);

// Per weight <= N: dim Lie(W)[3] = dim(projection to [V+, [xi[0], V+]]) +
// dim(Lie(W)[3] meet L_3(V+)), the three dims against their series, no
// [xi[0], [xi[0], V+]] component, the projection image equal to the test
// map image, and dim(Lie(W)[3] meet L_3(V+)) equal to dim H of the complex.
CheckReport verify_depth3_sequence(int N);

} // namespace artifact::dg

#endif
