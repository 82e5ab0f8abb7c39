#include "artifact/poly.hpp"

namespace artifact {

namespace {
inline std::size_t mix(uint64_t k)
{
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
}
} // namespace

TermAccumulator::TermAccumulator(std::size_t expected)
{
    std::size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    keys_.assign(cap, 0);
    vals_.assign(cap, Rational());
    used_.assign(cap, 0);
    mask_ = cap - 1;
}

void TermAccumulator::grow()
{
    std::vector<uint64_t> keys = std::move(keys_);
    std::vector<Rational> vals = std::move(vals_);
    std::vector<unsigned char> used = std::move(used_);
    std::size_t cap = (mask_ + 1) * 2;
    keys_.assign(cap, 0);
    vals_.assign(cap, Rational());
    used_.assign(cap, 0);
    mask_ = cap - 1;
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (!used[i]) continue;
        std::size_t h = mix(keys[i]) & mask_;
        while (used_[h]) h = (h + 1) & mask_;
        used_[h] = 1;
        keys_[h] = keys[i];
        vals_[h] = std::move(vals[i]);
    }
}

Rational& TermAccumulator::slot(uint64_t key)
{
    std::size_t h = mix(key) & mask_;
    while (used_[h]) {
        if (keys_[h] == key) return vals_[h];
        h = (h + 1) & mask_;
    }
    if ((count_ + 1) * 2 > mask_ + 1) {
        grow();
        return slot(key);
    }
    used_[h] = 1;
    keys_[h] = key;
    ++count_;
    return vals_[h];
}

std::vector<std::pair<uint64_t, Rational>> TermAccumulator::take_sorted()
{
    std::vector<std::pair<uint64_t, Rational>> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < used_.size(); ++i) {
        if (!used_[i]) continue;
        if (!vals_[i].is_zero()) out.emplace_back(keys_[i], std::move(vals_[i]));
        vals_[i] = Rational();
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::fill(used_.begin(), used_.end(), 0);
    count_ = 0;
    return out;
}

} // namespace artifact
