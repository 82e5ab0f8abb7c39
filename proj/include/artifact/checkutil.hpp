#ifndef ARTIFACT_CHECKUTIL_HPP
#define ARTIFACT_CHECKUTIL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "artifact/linalg.hpp"
#include "artifact/poly.hpp"
#include "artifact/report.hpp"

namespace artifact {

// Coordinates on the union of the supports of a family of polynomials.
template <class U>
class CoordMap {
public:
    explicit CoordMap(const std::vector<Poly<U>>& family)
    {
        for (auto& p : family)
            for (auto& t : p.terms()) index_.emplace(t.first, 0);
        uint32_t i = 0;
        for (auto& kv : index_) kv.second = i++;
    }
    uint32_t dim() const { return static_cast<uint32_t>(index_.size()); }
    SparseVec operator()(const Poly<U>& p) const
    {
        SparseVec v;
        v.reserve(p.size());
        for (auto& t : p.terms()) v.emplace_back(index_.at(t.first), t.second);
        return v;
    }

private:
    std::map<uint64_t, uint32_t> index_;
};

template <class U>
std::size_t poly_rank(const std::vector<Poly<U>>& family)
{
    CoordMap<U> cm(family);
    Echelon e(cm.dim());
    for (auto& p : family) e.insert(cm(p));
    return e.rank();
}

// Dimension of the space of linear relations among the family.
template <class U>
std::size_t relation_dim(const std::vector<Poly<U>>& family)
{
    return family.size() - poly_rank(family);
}

// Per-weight pass counts of a family of identities. The first failure
// becomes the report witness.
class Tally {
public:
    Tally(CheckReport& rep, std::string label) : rep_(rep), label_(std::move(label)) {}
    ~Tally() { flush(); }

    template <class F>
    bool record(int w, bool ok, F&& witness)
    {
        auto& slot = counts_[w];
        ++slot.second;
        if (ok) ++slot.first;
        else rep_.fail(label_ + ": " + witness());
        return ok;
    }
    bool record(int w, bool ok) { return record(w, ok, [] { return std::string("failed"); }); }

    void flush()
    {
        for (auto& [w, c] : counts_)
            rep_.add_row(WeightRow{w, -1, label_, std::to_string(c.first) + "/" + std::to_string(c.second),
                                   std::to_string(c.second) + "/" + std::to_string(c.second), c.first == c.second});
        counts_.clear();
    }

private:
    CheckReport& rep_;
    std::string label_;
    std::map<int, std::pair<std::size_t, std::size_t>> counts_;
};

} // namespace artifact

#endif
