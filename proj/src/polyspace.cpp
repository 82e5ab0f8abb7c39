#include "artifact/polyspace.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace artifact {

namespace {

using Mono = Monomial<VarsABAB>;

// Variable permutations: target index of each variable.
constexpr std::array<int, 4> kS1{2, 3, 0, 1};
constexpr std::array<int, 4> kS2{1, 0, 3, 2};
constexpr std::array<int, 4> kS12{3, 2, 1, 0};

Mono permute(Mono m, const std::array<int, 4>& target)
{
    std::array<int, 4> e{};
    for (int i = 0; i < 4; ++i) e[target[i]] = m.exponent(i);
    return Mono::from_exponents(e);
}

struct SignedPerm {
    std::array<int, 4> target;
    int sign;
};

std::vector<SignedPerm> group_of(Symmetry sym)
{
    const std::array<int, 4> id{0, 1, 2, 3};
    switch (sym) {
    case Symmetry::None: return {{id, 1}};
    case Symmetry::AS: return {{id, 1}, {kS1, -1}};
    case Symmetry::SYM: return {{id, 1}, {kS1, 1}};
    case Symmetry::ASxAS: return {{id, 1}, {kS1, -1}, {kS2, -1}, {kS12, 1}};
    }
    return {{id, 1}};
}

} // namespace

PolyABAB swap_primed(const PolyABAB& p) { return p.permute_variables(kS1); }
PolyABAB swap_letters(const PolyABAB& p) { return p.permute_variables(kS2); }

PolyABAB project(const PolyABAB& p, Symmetry sym)
{
    auto g = group_of(sym);
    PolyABAB r;
    for (auto& e : g) {
        PolyABAB q = p.permute_variables(e.target);
        if (e.sign < 0) r -= q;
        else r += q;
    }
    return r * Rational(1, static_cast<long long>(g.size()));
}

bool has_symmetry(const PolyABAB& p, Symmetry sym) { return project(p, sym) == p; }

PolySpace::PolySpace(int weight, Symmetry sym, bool divisible_by_abab, int depth)
    : weight_(weight), sym_(sym), divisible_(divisible_by_abab), depth_(depth)
{
    if (depth >= 0 && sym == Symmetry::ASxAS)
        throw std::invalid_argument("PolySpace: the letter exchange does not preserve depth");
    auto g = group_of(sym);
    const int lo = divisible_by_abab ? 1 : 0;
    for (int a = lo; a <= weight; ++a)
        for (int b = lo; a + b <= weight; ++b)
            for (int c = lo; a + b + c <= weight; ++c) {
                int d = weight - a - b - c;
                if (d < lo) continue;
                if (depth >= 0 && b + d != depth) continue;
                Mono m = Mono::from_exponents({a, b, c, d});
                bool is_rep = true, killed = false;
                for (auto& e : g) {
                    Mono gm = permute(m, e.target);
                    if (gm < m) is_rep = false;
                    if (gm == m && e.sign < 0) killed = true;
                }
                if (is_rep && !killed) reps_.push_back(m.key());
            }
    std::sort(reps_.begin(), reps_.end());
    for (uint32_t i = 0; i < reps_.size(); ++i) index_.emplace(reps_[i], i);
}

bool PolySpace::contains_poly(const PolyABAB& p) const
{
    for (auto& t : p.terms()) {
        Mono m(t.first);
        if (m.degree() != weight_) return false;
        if (divisible_ && (m.exponent(0) == 0 || m.exponent(1) == 0 || m.exponent(2) == 0 || m.exponent(3) == 0))
            return false;
        if (depth_ >= 0 && m.exponent(1) + m.exponent(3) != depth_) return false;
    }
    return has_symmetry(p, sym_);
}

SparseVec PolySpace::coords_unchecked(const PolyABAB& p) const
{
    SparseVec v;
    for (auto& t : p.terms()) {
        auto it = index_.find(t.first);
        if (it != index_.end()) v.emplace_back(it->second, t.second);
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
}

SparseVec PolySpace::coords(const PolyABAB& p) const
{
    if (!contains_poly(p)) throw std::invalid_argument("PolySpace::coords: polynomial not in the space");
    return coords_unchecked(p);
}

PolyABAB PolySpace::basis_element(uint32_t i) const
{
    Mono m(reps_.at(i));
    std::vector<PolyABAB::Term> terms;
    std::vector<uint64_t> seen;
    for (auto& e : group_of(sym_)) {
        Mono gm = permute(m, e.target);
        if (std::find(seen.begin(), seen.end(), gm.key()) != seen.end()) continue;
        seen.push_back(gm.key());
        terms.emplace_back(gm.key(), Rational(e.sign));
    }
    return PolyABAB::from_terms(std::move(terms));
}

PolyABAB PolySpace::poly(const SparseVec& v) const
{
    std::vector<PolyABAB::Term> terms;
    for (auto& [i, c] : v) {
        PolyABAB b = basis_element(i);
        for (auto& t : b.terms()) terms.emplace_back(t.first, t.second * c);
    }
    return PolyABAB::from_terms(std::move(terms));
}

} // namespace artifact
