#ifndef ARTIFACT_LINALG_HPP
#define ARTIFACT_LINALG_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "artifact/rational.hpp"

namespace artifact {

// Sparse vector: (index, value) pairs sorted by index, no zero values.
using SparseVec = std::vector<std::pair<uint32_t, Rational>>;

SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rational& scale_b = Rational(1));
SparseVec sparse_scale(SparseVec v, const Rational& c);
// Copies `v` shifted by `offset` indices.
SparseVec sparse_shift(const SparseVec& v, uint32_t offset);

// Row space of a rational matrix kept in semi-echelon form: every row has a
// distinct pivot (its largest nonzero index) with pivot coefficient 1.
// reduce() sweeps columns from the top down, so it returns the unique normal
// form of a vector modulo the span: the representative whose entries vanish
// in every pivot column.
class Echelon {
public:
    explicit Echelon(uint32_t ambient_dim = 0) : n_(ambient_dim), pivot_row_(ambient_dim, -1) {}

    uint32_t ambient_dim() const { return n_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<SparseVec>& rows() const { return rows_; }
    bool is_pivot(uint32_t col) const { return pivot_row_[col] >= 0; }
    const SparseVec& pivot_row(uint32_t col) const { return rows_[pivot_row_[col]]; }
    std::vector<uint32_t> pivots() const;

    // Adds v to the span; returns true when the rank grows.
    bool insert(const SparseVec& v);
    // Normal form of v, eliminating only pivots with index >= floor.
    SparseVec reduce(const SparseVec& v, uint32_t floor = 0) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    // Fully reduced row-echelon basis, sorted by pivot.
    std::vector<SparseVec> rref() const;

private:
    uint32_t n_;
    std::vector<SparseVec> rows_;
    std::vector<int32_t> pivot_row_;
};

// Span of `vectors` intersected with span of `others`, both in dimension n
// (Zassenhaus). Returns an echelon basis of the intersection.
Echelon intersect(const Echelon& a, const Echelon& b);
Echelon sum(const Echelon& a, const Echelon& b);

// Linear solver for combinations of a fixed list of generators. Generators
// are added one at a time; solve() returns coefficients x with
// sum x_i g_i = target, choosing the particular solution produced by the
// echelon order (deterministic, not necessarily unique).
class CombinationSolver {
public:
    explicit CombinationSolver(uint32_t ambient_dim) : n_(ambient_dim), ech_(0) {}
    // Returns the index of the generator.
    std::size_t add(const SparseVec& g);
    std::size_t size() const { return gens_.size(); }
    std::size_t rank();
    std::optional<std::vector<Rational>> solve(const SparseVec& target);
    // Basis of the space of relations sum x_i g_i = 0.
    std::vector<std::vector<Rational>> kernel();

private:
    void build();
    uint32_t n_;
    std::vector<SparseVec> gens_;
    Echelon ech_;
    bool built_ = false;
};

// Graded subspace: one echelon block per bigrade (weight, depth). Depth -1
// means "not graded by depth" and is used for spaces that are only graded by
// weight. All blocks of two subspaces combined by an operation must live in
// ambient spaces of the same dimension.
struct Bigrade {
    int weight;
    int depth;
    friend bool operator<(const Bigrade& a, const Bigrade& b)
    {
        return a.weight != b.weight ? a.weight < b.weight : a.depth < b.depth;
    }
    friend bool operator==(const Bigrade& a, const Bigrade& b) { return a.weight == b.weight && a.depth == b.depth; }
};

class GradedSubspace {
public:
    GradedSubspace() = default;

    // Declares the ambient dimension of a bigrade (an empty block).
    void declare(Bigrade g, uint32_t ambient_dim);
    bool insert(Bigrade g, const SparseVec& v);
    bool contains(Bigrade g, const SparseVec& v) const;
    SparseVec reduce(Bigrade g, const SparseVec& v) const;
    std::size_t dim(Bigrade g) const;
    uint32_t ambient_dim(Bigrade g) const;
    const Echelon& block(Bigrade g) const;
    std::vector<Bigrade> bigrades() const;

    static GradedSubspace sum(const GradedSubspace& x, const GradedSubspace& y);
    static GradedSubspace intersect(const GradedSubspace& x, const GradedSubspace& y);
    // dim X - dim(X ∩ Y) per bigrade.
    static std::map<Bigrade, std::size_t> quotient_dims(const GradedSubspace& x, const GradedSubspace& y);
    // Image under a bigrade-preserving linear map given on vectors.
    GradedSubspace image_under(const std::function<SparseVec(Bigrade, const SparseVec&)>& f,
                               const std::function<uint32_t(Bigrade)>& target_dim) const;

private:
    std::map<Bigrade, Echelon> blocks_;
};

} // namespace artifact

#endif
