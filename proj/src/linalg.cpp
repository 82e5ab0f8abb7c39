#include "artifact/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace artifact {

SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rational& scale_b)
{
    SparseVec r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rational c = b[j].second * scale_b;
            if (!c.is_zero()) r.emplace_back(b[j].first, std::move(c));
            ++j;
        } else {
            Rational c = a[i].second;
            c.add_mul(b[j].second, scale_b);
            if (!c.is_zero()) r.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return r;
}

SparseVec sparse_scale(SparseVec v, const Rational& c)
{
    if (c.is_zero()) return {};
    for (auto& e : v) e.second *= c;
    return v;
}

SparseVec sparse_shift(const SparseVec& v, uint32_t offset)
{
    SparseVec r;
    r.reserve(v.size());
    for (auto& e : v) r.emplace_back(e.first + offset, e.second);
    return r;
}

std::vector<uint32_t> Echelon::pivots() const
{
    std::vector<uint32_t> p;
    for (uint32_t c = 0; c < n_; ++c)
        if (pivot_row_[c] >= 0) p.push_back(c);
    return p;
}

SparseVec Echelon::reduce(const SparseVec& v, uint32_t floor) const
{
    if (v.empty()) return {};
    if (v.back().first >= n_) throw std::out_of_range("Echelon::reduce: index beyond ambient dimension");
    // Fast exit: no pivot among the entries means v is already reduced,
    // since later eliminations can only touch columns below a pivot.
    bool any = false;
    for (auto& e : v)
        if (e.first >= floor && pivot_row_[e.first] >= 0) {
            any = true;
            break;
        }
    if (!any) return v;

    uint32_t top = v.back().first;
    std::vector<Rational> acc(top + 1);
    std::vector<unsigned char> nz(top + 1, 0);
    for (auto& e : v) {
        acc[e.first] = e.second;
        nz[e.first] = 1;
    }
    for (int64_t col = top; col >= static_cast<int64_t>(floor); --col) {
        if (!nz[col] || pivot_row_[col] < 0 || acc[col].is_zero()) continue;
        const SparseVec& row = rows_[pivot_row_[col]];
        const Rational c = acc[col];
        for (auto& e : row) {
            acc[e.first].sub_mul(c, e.second);
            nz[e.first] = 1;
        }
    }
    SparseVec out;
    for (uint32_t i = 0; i <= top; ++i)
        if (nz[i] && !acc[i].is_zero()) out.emplace_back(i, std::move(acc[i]));
    return out;
}

bool Echelon::insert(const SparseVec& v)
{
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    Rational inv = r.back().second.inverse();
    for (auto& e : r) e.second *= inv;
    pivot_row_[r.back().first] = static_cast<int32_t>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

std::vector<SparseVec> Echelon::rref() const
{
    std::vector<uint32_t> piv = pivots();
    Echelon done(n_);
    std::vector<SparseVec> out;
    for (uint32_t p : piv) {
        const SparseVec& row = pivot_row(p);
        SparseVec tail(row.begin(), row.end() - 1);
        SparseVec red = done.reduce(tail);
        red.emplace_back(p, Rational(1));
        done.pivot_row_[p] = static_cast<int32_t>(done.rows_.size());
        done.rows_.push_back(red);
        out.push_back(std::move(red));
    }
    return out;
}

Echelon sum(const Echelon& a, const Echelon& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
    Echelon s = a;
    for (auto& r : b.rows()) s.insert(r);
    return s;
}

Echelon intersect(const Echelon& a, const Echelon& b)
{
    const uint32_t n = a.ambient_dim();
    if (n != b.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
    // Zassenhaus: rows (u | u) for u in a, (w | 0) for w in b, with the
    // first block placed at the high indices so it is eliminated first.
    Echelon z(2 * n);
    for (auto& r : a.rows()) {
        SparseVec v = r;
        SparseVec hi = sparse_shift(r, n);
        v.insert(v.end(), hi.begin(), hi.end());
        z.insert(v);
    }
    for (auto& r : b.rows()) z.insert(sparse_shift(r, n));
    Echelon out(n);
    for (auto& r : z.rows())
        if (r.back().first < n) out.insert(r);
    return out;
}

std::size_t CombinationSolver::add(const SparseVec& g)
{
    gens_.push_back(g);
    built_ = false;
    return gens_.size() - 1;
}

void CombinationSolver::build()
{
    if (built_) return;
    const uint32_t m = static_cast<uint32_t>(gens_.size());
    ech_ = Echelon(n_ + m);
    for (uint32_t i = 0; i < m; ++i) {
        SparseVec v;
        v.emplace_back(i, Rational(1));
        SparseVec hi = sparse_shift(gens_[i], m);
        v.insert(v.end(), hi.begin(), hi.end());
        ech_.insert(v);
    }
    built_ = true;
}

std::size_t CombinationSolver::rank()
{
    build();
    const uint32_t m = static_cast<uint32_t>(gens_.size());
    std::size_t r = 0;
    for (auto& row : ech_.rows())
        if (row.back().first >= m) ++r;
    return r;
}

std::optional<std::vector<Rational>> CombinationSolver::solve(const SparseVec& target)
{
    build();
    const uint32_t m = static_cast<uint32_t>(gens_.size());
    SparseVec red = ech_.reduce(sparse_shift(target, m), m);
    if (!red.empty() && red.back().first >= m) return std::nullopt;
    std::vector<Rational> x(m);
    for (auto& e : red) x[e.first] = -e.second;
    return x;
}

std::vector<std::vector<Rational>> CombinationSolver::kernel()
{
    build();
    const uint32_t m = static_cast<uint32_t>(gens_.size());
    std::vector<std::vector<Rational>> out;
    for (auto& row : ech_.rows()) {
        if (row.back().first >= m) continue;
        std::vector<Rational> x(m);
        for (auto& e : row) x[e.first] = e.second;
        out.push_back(std::move(x));
    }
    return out;
}

void GradedSubspace::declare(Bigrade g, uint32_t ambient_dim)
{
    auto it = blocks_.find(g);
    if (it == blocks_.end()) blocks_.emplace(g, Echelon(ambient_dim));
    else if (it->second.ambient_dim() != ambient_dim) throw std::invalid_argument("GradedSubspace: ambient mismatch");
}

bool GradedSubspace::insert(Bigrade g, const SparseVec& v)
{
    auto it = blocks_.find(g);
    if (it == blocks_.end()) throw std::invalid_argument("GradedSubspace: undeclared bigrade");
    return it->second.insert(v);
}

const Echelon& GradedSubspace::block(Bigrade g) const
{
    auto it = blocks_.find(g);
    if (it == blocks_.end()) throw std::invalid_argument("GradedSubspace: undeclared bigrade");
    return it->second;
}

bool GradedSubspace::contains(Bigrade g, const SparseVec& v) const { return block(g).contains(v); }
SparseVec GradedSubspace::reduce(Bigrade g, const SparseVec& v) const { return block(g).reduce(v); }
std::size_t GradedSubspace::dim(Bigrade g) const
{
    auto it = blocks_.find(g);
    return it == blocks_.end() ? 0 : it->second.rank();
}
uint32_t GradedSubspace::ambient_dim(Bigrade g) const { return block(g).ambient_dim(); }

std::vector<Bigrade> GradedSubspace::bigrades() const
{
    std::vector<Bigrade> out;
    for (auto& kv : blocks_) out.push_back(kv.first);
    return out;
}

GradedSubspace GradedSubspace::sum(const GradedSubspace& x, const GradedSubspace& y)
{
    GradedSubspace s = x;
    for (auto& [g, e] : y.blocks_) {
        auto it = s.blocks_.find(g);
        if (it == s.blocks_.end()) s.blocks_.emplace(g, e);
        else it->second = artifact::sum(it->second, e);
    }
    return s;
}

GradedSubspace GradedSubspace::intersect(const GradedSubspace& x, const GradedSubspace& y)
{
    GradedSubspace s;
    for (auto& [g, e] : x.blocks_) {
        auto it = y.blocks_.find(g);
        if (it == y.blocks_.end()) s.blocks_.emplace(g, Echelon(e.ambient_dim()));
        else s.blocks_.emplace(g, artifact::intersect(e, it->second));
    }
    return s;
}

std::map<Bigrade, std::size_t> GradedSubspace::quotient_dims(const GradedSubspace& x, const GradedSubspace& y)
{
    std::map<Bigrade, std::size_t> out;
    GradedSubspace i = intersect(x, y);
    for (auto& [g, e] : x.blocks_) out[g] = e.rank() - i.dim(g);
    return out;
}

GradedSubspace GradedSubspace::image_under(const std::function<SparseVec(Bigrade, const SparseVec&)>& f,
                                           const std::function<uint32_t(Bigrade)>& target_dim) const
{
    GradedSubspace out;
    for (auto& [g, e] : blocks_) {
        out.declare(g, target_dim(g));
        for (auto& r : e.rows()) out.insert(g, f(g, r));
    }
    return out;
}

} // namespace artifact
