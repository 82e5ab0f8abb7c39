#ifndef ARTIFACT_POLYSPACE_HPP
#define ARTIFACT_POLYSPACE_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "artifact/linalg.hpp"
#include "artifact/poly.hpp"

namespace artifact {

// Symmetry types under the exchanges s1: (A,B) <-> (A',B') and
// s2: (A,A') <-> (B,B').
enum class Symmetry {
    None,
    AS,    // antisymmetric under s1
    SYM,   // symmetric under s1
    ASxAS  // antisymmetric under s1 and under s2
};

PolyABAB swap_primed(const PolyABAB& p);      // s1
PolyABAB swap_letters(const PolyABAB& p);     // s2
PolyABAB project(const PolyABAB& p, Symmetry sym);
bool has_symmetry(const PolyABAB& p, Symmetry sym);

// The homogeneous piece of weight w of Q[A,B,A',B'] with a given symmetry,
// optionally restricted to multiples of ABA'B' and to a fixed depth
// (B,B'-degree). Coordinates are the coefficients at orbit representatives
// (the smallest monomial of each orbit), listed in increasing monomial order.
class PolySpace {
public:
    PolySpace(int weight, Symmetry sym, bool divisible_by_abab, int depth = -1);

    int weight() const { return weight_; }
    Symmetry symmetry() const { return sym_; }
    uint32_t dim() const { return static_cast<uint32_t>(reps_.size()); }

    bool contains_poly(const PolyABAB& p) const;
    // Coordinates of p; throws std::invalid_argument if p is not in the space.
    SparseVec coords(const PolyABAB& p) const;
    // Coordinates without the membership check (p must be in the space).
    SparseVec coords_unchecked(const PolyABAB& p) const;
    PolyABAB poly(const SparseVec& v) const;
    PolyABAB basis_element(uint32_t i) const;

private:
    int weight_;
    Symmetry sym_;
    bool divisible_;
    int depth_;
    std::vector<uint64_t> reps_;
    std::unordered_map<uint64_t, uint32_t> index_;
};

} // namespace artifact

#endif
