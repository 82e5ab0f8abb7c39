#ifndef ARTIFACT_FREELIE_HPP
#define ARTIFACT_FREELIE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "artifact/lincomb.hpp"
#include "artifact/linalg.hpp"
#include "artifact/poly.hpp"

namespace artifact::lie {

// ---------------------------------------------------------------------------
// Words over {x, y}. A word is packed as (length << 40) | bits with x = 0,
// y = 1 and the first letter in the most significant bit, so comparing packed
// words orders them by length and then lexicographically (x < y).

using Word = uint64_t;
constexpr int kMaxWordLength = 40;

Word make_word(int length, uint64_t bits);
inline int word_length(Word w) { return static_cast<int>(w >> 40); }
inline uint64_t word_bits(Word w) { return w & ((uint64_t{1} << 40) - 1); }
inline int word_depth(Word w) { return __builtin_popcountll(word_bits(w)); }
Word concat(Word u, Word v);
Word word_from_string(std::string_view s);
std::string word_to_string(Word w);

bool is_lyndon(Word w);
// w = uv with v the longest proper Lyndon suffix of w.
std::pair<Word, Word> standard_factorization(Word w);
// Lyndon words of the given length and y-degree, in increasing order.
std::vector<Word> lyndon_words(int length, int depth);

struct AssocTag {};
struct LyndonTag {};

// Element of the free associative algebra Q<x,y>.
using AssocElt = LinComb<Word, AssocTag>;
// Element of the free Lie algebra on {x,y} in the Lyndon basis: the key w
// stands for the standard bracketing of the Lyndon word w.
using LieElt = LinComb<Word, LyndonTag>;

AssocElt assoc_mul(const AssocElt& a, const AssocElt& b);
AssocElt assoc_commutator(const AssocElt& a, const AssocElt& b);

LieElt lie_x();
LieElt lie_y();
// The standard bracketing of a Lyndon word; throws if w is not Lyndon.
LieElt lyndon_element(Word w);
// Builds a Lie element from Lyndon-word terms; throws on a non-Lyndon key.
LieElt make_lie(std::vector<LieElt::Term> terms);

// Image in the associative algebra. The expansion of each basis element is
// cached process-wide behind a lock.
AssocElt expand(const LieElt& f);
const AssocElt& lyndon_polynomial(Word w);
// Lyndon coordinates of a Lie polynomial; throws std::invalid_argument if
// the input is not a Lie polynomial.
LieElt to_lyndon(const AssocElt& a);

LieElt lie_bracket(const LieElt& f, const LieElt& g);
// D_f(g) for the derivation with D_f(x) = 0, D_f(y) = [y, f].
LieElt derivation_apply(const LieElt& f, const LieElt& g);
// <f, g> = [f, g] + D_f(g) - D_g(f).
LieElt ihara_bracket(const LieElt& f, const LieElt& g);

LieElt depth_component(const LieElt& f, int depth);
LieElt weight_component(const LieElt& f, int weight);
// Bigrades (weight, depth) present in the support, increasing.
std::vector<Bigrade> bigrades(const LieElt& f);

std::string to_string(const LieElt& f);
nlohmann::ordered_json to_json(const LieElt& f);

// ---------------------------------------------------------------------------
// The generators g_ab = (ad x)^a (ad y)^b ([x, y]) of the free Lie algebra
// on the degree >= 2 part.

struct GenIndex {
    int a = 0;
    int b = 0;
    int weight() const { return a + b + 2; }
    int depth() const { return b + 1; }
    friend bool operator==(const GenIndex& l, const GenIndex& r) { return l.a == r.a && l.b == r.b; }
};

// Letters are numbered in the order (a + b, b, a).
int gen_id(GenIndex g);
GenIndex gen_of(int id);
LieElt gen(GenIndex g);

// A word over the g-alphabet, as letter ids.
using GWord = std::vector<uint16_t>;
struct GTag {};
// Element of the free Lie algebra on the g_ab in its Lyndon basis.
using EliminatedElt = LinComb<GWord, GTag>;

bool is_lyndon(const GWord& w);
std::pair<GWord, GWord> standard_factorization(const GWord& w);
int gword_weight(const GWord& w);
int gword_depth(const GWord& w);
// Lyndon words over the g-alphabet of total weight and depth, increasing.
std::vector<GWord> g_lyndon_words(int weight, int depth);
std::string gword_to_string(const GWord& w);

LieElt expand_gword(const GWord& w);
LieElt expand(const EliminatedElt& e);
// Coordinates in the Lyndon basis over the g_ab. Throws
// std::invalid_argument when f has a component in weight < 2 or a pure
// x / pure y component.
EliminatedElt eliminate(const LieElt& f);

// f lies in the i-th term of the lower central series filtration, i.e. every
// g-Lyndon word of eliminate(f) has length >= i + 1.
bool lcs_filtration_member(const LieElt& f, int i);

std::string to_string(const EliminatedElt& e);
nlohmann::ordered_json to_json(const EliminatedElt& e);

// ---------------------------------------------------------------------------
// Tensor algebra T(V) over V = AB Q[A, B]. A basis tensor is a sequence of
// monomials A^a B^b, packed as a slot count in the top four bits and one
// 10-bit field (a << 5 | b) per slot, first slot most significant. At most
// six slots, exponents at most 31.

using TensorKey = uint64_t;
constexpr int kMaxSlots = 6;
constexpr int kMaxSlotExponent = 31;

TensorKey make_tensor_key(const std::vector<std::pair<int, int>>& slots);
std::vector<std::pair<int, int>> tensor_slots(TensorKey k);
inline int tensor_rank(TensorKey k) { return static_cast<int>(k >> 60); }

struct TensorTag {};
using TensorElt = LinComb<TensorKey, TensorTag>;

// Degree-one tensor of q in V; throws unless q is a polynomial in A, B
// divisible by AB.
TensorElt tensor_from_poly(const PolyABAB& q);
TensorElt tensor_mul(const TensorElt& p, const TensorElt& q);
TensorElt tensor_bracket(const TensorElt& p, const TensorElt& q);
// P ⊛ q: multiplies slot k of every tensor by the k-th tensor factor of
// q(A_1 + ... + A_i, B_1 + ... + B_i). q is a polynomial in A and B.
TensorElt star(const TensorElt& p, const PolyABAB& q);
// P ⊛ Q: the derivation extension over the factors of Q.
TensorElt star(const TensorElt& p, const TensorElt& q);
// <P, Q> = P ⊛ Q - Q ⊛ P.
TensorElt star_bracket(const TensorElt& p, const TensorElt& q);

// Rank-two tensors as polynomials: slot 1 in (A, B), slot 2 in (A', B').
PolyABAB tensor2_to_poly(const TensorElt& t);
TensorElt poly_to_tensor2(const PolyABAB& p);

// Class of f in L^i / L^(i+1), as an element of the degree i+1 part of the
// free Lie algebra on V inside T(V). Throws std::invalid_argument unless
// lcs_filtration_member(f, i).
TensorElt lcs_class(const LieElt& f, int i);
// The standard bracketing of a g-Lyndon word with g_ab -> A^(a+1) B^(b+1).
TensorElt tensor_of_gword(const GWord& w);

std::string to_string(const TensorElt& t);

} // namespace artifact::lie

#endif
