#include "artifact/freelie.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace artifact::lie {

// ---------------------------------------------------------------------------
// Words

Word make_word(int length, uint64_t bits)
{
    if (length < 0 || length > kMaxWordLength) throw std::length_error("word length out of range");
    return (static_cast<uint64_t>(length) << 40) | bits;
}

Word concat(Word u, Word v)
{
    return make_word(word_length(u) + word_length(v), (word_bits(u) << word_length(v)) | word_bits(v));
}

Word word_from_string(std::string_view s)
{
    uint64_t bits = 0;
    for (char c : s) {
        if (c != 'x' && c != 'y') throw std::invalid_argument("word letters must be x or y");
        bits = (bits << 1) | (c == 'y' ? 1u : 0u);
    }
    return make_word(static_cast<int>(s.size()), bits);
}

std::string word_to_string(Word w)
{
    std::string s;
    const int n = word_length(w);
    for (int i = n - 1; i >= 0; --i) s += ((word_bits(w) >> i) & 1u) ? 'y' : 'x';
    return s;
}

bool is_lyndon(Word w)
{
    const int n = word_length(w);
    if (n == 0) return false;
    const uint64_t bits = word_bits(w);
    const uint64_t mask = (uint64_t{1} << n) - 1;
    for (int i = 1; i < n; ++i) {
        uint64_t rot = ((bits << i) | (bits >> (n - i))) & mask;
        if (rot <= bits) return false;
    }
    return true;
}

std::pair<Word, Word> standard_factorization(Word w)
{
    const int n = word_length(w);
    const uint64_t bits = word_bits(w);
    for (int i = 1; i < n; ++i) {
        Word v = make_word(n - i, bits & ((uint64_t{1} << (n - i)) - 1));
        if (is_lyndon(v)) return {make_word(i, bits >> (n - i)), v};
    }
    throw std::invalid_argument("standard_factorization: word of length < 2");
}

std::vector<Word> lyndon_words(int length, int depth)
{
    std::vector<Word> out;
    if (length <= 0 || depth < 0 || depth > length) return out;
    if (depth == 0) {
        if (length == 1) out.push_back(make_word(1, 0));
        return out;
    }
    // Gosper's hack enumerates bit patterns of fixed popcount in increasing order.
    uint64_t v = (uint64_t{1} << depth) - 1;
    const uint64_t limit = uint64_t{1} << length;
    while (v < limit) {
        Word w = make_word(length, v);
        if (is_lyndon(w)) out.push_back(w);
        uint64_t t = v | (v - 1);
        v = (t + 1) | (((~t & -~t) - 1) >> (__builtin_ctzll(v) + 1));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Associative algebra

AssocElt assoc_mul(const AssocElt& a, const AssocElt& b)
{
    if (a.is_zero() || b.is_zero()) return AssocElt();
    TermAccumulator acc(std::min<std::size_t>(a.size() * b.size(), 1u << 16));
    for (auto& [u, cu] : a.terms())
        for (auto& [v, cv] : b.terms()) acc.add_mul(concat(u, v), cu, cv);
    return AssocElt::from_sorted_unchecked(acc.take_sorted());
}

AssocElt assoc_commutator(const AssocElt& a, const AssocElt& b) { return assoc_mul(a, b) - assoc_mul(b, a); }

LieElt lie_x() { return LieElt(make_word(1, 0), Rational(1)); }
LieElt lie_y() { return LieElt(make_word(1, 1), Rational(1)); }

LieElt lyndon_element(Word w)
{
    if (!is_lyndon(w)) throw std::invalid_argument("not a Lyndon word: " + word_to_string(w));
    return LieElt(w, Rational(1));
}

LieElt make_lie(std::vector<LieElt::Term> terms)
{
    for (auto& t : terms)
        if (!is_lyndon(t.first)) throw std::invalid_argument("not a Lyndon word: " + word_to_string(t.first));
    return LieElt::from_terms(std::move(terms));
}

namespace {

struct LyndonCache {
    std::shared_mutex mutex;
    std::unordered_map<Word, std::unique_ptr<AssocElt>> table;
};

LyndonCache& lyndon_cache()
{
    static LyndonCache cache;
    return cache;
}

} // namespace

const AssocElt& lyndon_polynomial(Word w)
{
    auto& cache = lyndon_cache();
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.table.find(w);
        if (it != cache.table.end()) return *it->second;
    }
    if (!is_lyndon(w)) throw std::invalid_argument("not a Lyndon word: " + word_to_string(w));
    AssocElt p;
    if (word_length(w) == 1) {
        p = AssocElt(w, Rational(1));
    } else {
        auto [u, v] = standard_factorization(w);
        p = assoc_commutator(lyndon_polynomial(u), lyndon_polynomial(v));
    }
    std::unique_lock lock(cache.mutex);
    auto [it, inserted] = cache.table.emplace(w, std::make_unique<AssocElt>(std::move(p)));
    return *it->second;
}

AssocElt expand(const LieElt& f)
{
    TermAccumulator acc(64);
    for (auto& [w, c] : f.terms())
        for (auto& [u, cu] : lyndon_polynomial(w).terms()) acc.add_mul(u, c, cu);
    return AssocElt::from_sorted_unchecked(acc.take_sorted());
}

// The smallest word in the support of a Lie polynomial is Lyndon and the
// expansion of a Lyndon word w is w plus larger words of the same length,
// so peeling off the smallest word recovers the coordinates.
LieElt to_lyndon(const AssocElt& a)
{
    std::map<Word, Rational> work;
    for (auto& t : a.terms()) work.emplace(t.first, t.second);
    std::vector<LieElt::Term> out;
    while (!work.empty()) {
        auto it = work.begin();
        Word w = it->first;
        Rational c = it->second;
        if (!is_lyndon(w)) throw std::invalid_argument("to_lyndon: not a Lie polynomial");
        for (auto& [u, cu] : lyndon_polynomial(w).terms()) {
            auto [jt, inserted] = work.try_emplace(u);
            jt->second.sub_mul(c, cu);
            if (jt->second.is_zero()) work.erase(jt);
        }
        out.emplace_back(w, std::move(c));
    }
    return LieElt::from_sorted_unchecked(std::move(out));
}

LieElt lie_bracket(const LieElt& f, const LieElt& g)
{
    if (f.is_zero() || g.is_zero()) return LieElt();
    return to_lyndon(assoc_commutator(expand(f), expand(g)));
}

namespace {

// Derivation of the free associative algebra with x -> 0, y -> [y, f],
// applied to an associative element.
AssocElt assoc_derivation(const AssocElt& fexp, const AssocElt& g)
{
    TermAccumulator acc(256);
    const Word ylet = make_word(1, 1);
    for (auto& [w, cw] : g.terms()) {
        const int n = word_length(w);
        const uint64_t bits = word_bits(w);
        for (int pos = 0; pos < n; ++pos) {
            // pos counts letters from the left.
            const int shift = n - 1 - pos;
            if (((bits >> shift) & 1u) == 0) continue;
            Word prefix = make_word(pos, bits >> (shift + 1));
            Word suffix = make_word(shift, bits & ((uint64_t{1} << shift) - 1));
            for (auto& [v, cv] : fexp.terms()) {
                acc.add_mul(concat(concat(prefix, concat(ylet, v)), suffix), cw, cv);
                acc.add_mul(concat(concat(prefix, concat(v, ylet)), suffix), -cw, cv);
            }
        }
    }
    return AssocElt::from_sorted_unchecked(acc.take_sorted());
}

} // namespace

LieElt derivation_apply(const LieElt& f, const LieElt& g)
{
    if (f.is_zero() || g.is_zero()) return LieElt();
    return to_lyndon(assoc_derivation(expand(f), expand(g)));
}

LieElt ihara_bracket(const LieElt& f, const LieElt& g)
{
    if (f.is_zero() || g.is_zero()) return LieElt();
    AssocElt ef = expand(f), eg = expand(g);
    AssocElt r = assoc_commutator(ef, eg) + assoc_derivation(ef, eg) - assoc_derivation(eg, ef);
    return to_lyndon(r);
}

LieElt depth_component(const LieElt& f, int depth)
{
    return f.filter([depth](Word w) { return word_depth(w) == depth; });
}

LieElt weight_component(const LieElt& f, int weight)
{
    return f.filter([weight](Word w) { return word_length(w) == weight; });
}

std::vector<Bigrade> bigrades(const LieElt& f)
{
    std::vector<Bigrade> out;
    for (auto& t : f.terms()) {
        Bigrade g{word_length(t.first), word_depth(t.first)};
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string bracketing(Word w)
{
    if (word_length(w) == 1) return word_to_string(w);
    auto [u, v] = standard_factorization(w);
    return "[" + bracketing(u) + "," + bracketing(v) + "]";
}

template <class Elt, class KeyStr>
std::string combination_string(const Elt& e, KeyStr key_str)
{
    if (e.is_zero()) return "0";
    std::string s;
    for (auto& [k, c] : e.terms()) {
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        if (!a.is_one()) s += a.pretty() + "*";
        s += key_str(k);
    }
    return s;
}

} // namespace

std::string to_string(const LieElt& f) { return combination_string(f, bracketing); }

nlohmann::ordered_json to_json(const LieElt& f)
{
    nlohmann::ordered_json j;
    j["basis"] = "lyndon-xy";
    j["terms"] = nlohmann::ordered_json::array();
    for (auto& [w, c] : f.terms()) j["terms"].push_back({{"word", word_to_string(w)}, {"c", c.str()}});
    return j;
}

// ---------------------------------------------------------------------------
// The g-alphabet

int gen_id(GenIndex g)
{
    if (g.a < 0 || g.b < 0) throw std::invalid_argument("generator indices must be non-negative");
    const int s = g.a + g.b;
    return s * (s + 1) / 2 + g.b;
}

GenIndex gen_of(int id)
{
    int s = 0;
    while ((s + 1) * (s + 2) / 2 <= id) ++s;
    const int b = id - s * (s + 1) / 2;
    return {s - b, b};
}

LieElt gen(GenIndex g)
{
    LieElt r = lie_bracket(lie_x(), lie_y());
    for (int k = 0; k < g.b; ++k) r = lie_bracket(lie_y(), r);
    for (int k = 0; k < g.a; ++k) r = lie_bracket(lie_x(), r);
    return r;
}

bool is_lyndon(const GWord& w)
{
    const std::size_t n = w.size();
    if (n == 0) return false;
    for (std::size_t i = 1; i < n; ++i) {
        // Compare the rotation starting at i with w.
        int cmp = 0;
        for (std::size_t k = 0; k < n && cmp == 0; ++k) {
            uint16_t r = w[(i + k) % n];
            if (r != w[k]) cmp = r < w[k] ? -1 : 1;
        }
        if (cmp <= 0) return false;
    }
    return true;
}

std::pair<GWord, GWord> standard_factorization(const GWord& w)
{
    for (std::size_t i = 1; i < w.size(); ++i) {
        GWord v(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
        if (is_lyndon(v)) return {GWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), v};
    }
    throw std::invalid_argument("standard_factorization: word of length < 2");
}

int gword_weight(const GWord& w)
{
    int s = 0;
    for (auto l : w) s += gen_of(l).weight();
    return s;
}

int gword_depth(const GWord& w)
{
    int s = 0;
    for (auto l : w) s += gen_of(l).depth();
    return s;
}

namespace {

void extend_gwords(int weight, int depth, GWord& cur, std::vector<GWord>& out)
{
    if (weight == 0 && depth == 0) {
        if (is_lyndon(cur)) out.push_back(cur);
        return;
    }
    for (int n = 2; n <= weight; ++n)
        for (int d = 1; d <= n - 1 && d <= depth; ++d) {
            int rw = weight - n, rd = depth - d;
            if (!((rw == 0 && rd == 0) || (rw >= 2 && rd >= 1 && rd < rw))) continue;
            cur.push_back(static_cast<uint16_t>(gen_id({n - 1 - d, d - 1})));
            extend_gwords(rw, rd, cur, out);
            cur.pop_back();
        }
}

} // namespace

std::vector<GWord> g_lyndon_words(int weight, int depth)
{
    std::vector<GWord> out;
    if (weight < 2 || depth < 1 || depth >= weight) return out;
    GWord cur;
    extend_gwords(weight, depth, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string gword_to_string(const GWord& w)
{
    std::string s;
    for (auto l : w) {
        GenIndex g = gen_of(l);
        s += "g(" + std::to_string(g.a) + "," + std::to_string(g.b) + ")";
    }
    return s;
}

LieElt expand_gword(const GWord& w)
{
    if (w.empty()) throw std::invalid_argument("expand_gword: empty word");
    if (w.size() == 1) return gen(gen_of(w[0]));
    auto [u, v] = standard_factorization(w);
    return lie_bracket(expand_gword(u), expand_gword(v));
}

LieElt expand(const EliminatedElt& e)
{
    LieElt r;
    for (auto& [w, c] : e.terms()) r += expand_gword(w) * c;
    return r;
}

namespace {

// Per-bigrade linear system: columns are the expansions of the g-Lyndon words
// in the Lyndon basis over {x, y}.
struct EliminationTable {
    std::vector<GWord> gwords;
    std::unordered_map<Word, uint32_t> index;
    std::mutex solve_mutex;
    CombinationSolver solver{0};
};

struct EliminationCache {
    std::mutex mutex;
    std::map<Bigrade, std::unique_ptr<EliminationTable>> tables;
};

EliminationCache& elimination_cache()
{
    static EliminationCache cache;
    return cache;
}

EliminationTable& elimination_table(Bigrade g)
{
    auto& cache = elimination_cache();
    {
        std::lock_guard lock(cache.mutex);
        auto it = cache.tables.find(g);
        if (it != cache.tables.end()) return *it->second;
    }
    auto table = std::make_unique<EliminationTable>();
    auto words = lyndon_words(g.weight, g.depth);
    for (uint32_t i = 0; i < words.size(); ++i) table->index.emplace(words[i], i);
    table->gwords = g_lyndon_words(g.weight, g.depth);
    if (table->gwords.size() != words.size())
        throw std::logic_error("eliminate: generator count differs from the Lyndon basis size");
    table->solver = CombinationSolver(static_cast<uint32_t>(words.size()));
    for (auto& gw : table->gwords) {
        SparseVec v;
        const LieElt image = expand_gword(gw);
        for (auto& [w, c] : image.terms()) v.emplace_back(table->index.at(w), c);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        table->solver.add(v);
    }
    if (table->solver.rank() != words.size()) throw std::logic_error("eliminate: expansion map is not invertible");
    std::lock_guard lock(cache.mutex);
    auto [it, inserted] = cache.tables.emplace(g, std::move(table));
    return *it->second;
}

} // namespace

EliminatedElt eliminate(const LieElt& f)
{
    std::vector<EliminatedElt::Term> out;
    for (Bigrade g : bigrades(f)) {
        if (g.weight < 2 || g.depth < 1 || g.depth >= g.weight)
            throw std::invalid_argument("eliminate: element has a component outside the degree >= 2 part");
        LieElt part = f.filter([g](Word w) { return word_length(w) == g.weight && word_depth(w) == g.depth; });
        auto& table = elimination_table(g);
        SparseVec target;
        for (auto& [w, c] : part.terms()) target.emplace_back(table.index.at(w), c);
        std::sort(target.begin(), target.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::optional<std::vector<Rational>> x;
        {
            std::lock_guard lock(table.solve_mutex);
            x = table.solver.solve(target);
        }
        if (!x) throw std::logic_error("eliminate: no solution in a full-rank system");
        for (std::size_t i = 0; i < x->size(); ++i)
            if (!(*x)[i].is_zero()) out.emplace_back(table.gwords[i], (*x)[i]);
    }
    return EliminatedElt::from_terms(std::move(out));
}

bool lcs_filtration_member(const LieElt& f, int i)
{
    const EliminatedElt e = eliminate(f);
    for (auto& t : e.terms())
        if (static_cast<int>(t.first.size()) < i + 1) return false;
    return true;
}

std::string to_string(const EliminatedElt& e)
{
    std::function<std::string(const GWord&)> br = [&](const GWord& w) -> std::string {
        if (w.size() == 1) return gword_to_string(w);
        auto [u, v] = standard_factorization(w);
        return "[" + br(u) + "," + br(v) + "]";
    };
    return combination_string(e, br);
}

nlohmann::ordered_json to_json(const EliminatedElt& e)
{
    nlohmann::ordered_json j;
    j["basis"] = "lyndon-g";
    j["terms"] = nlohmann::ordered_json::array();
    for (auto& [w, c] : e.terms()) j["terms"].push_back({{"word", gword_to_string(w)}, {"c", c.str()}});
    return j;
}

// ---------------------------------------------------------------------------
// Tensor algebra over V

TensorKey make_tensor_key(const std::vector<std::pair<int, int>>& slots)
{
    if (slots.size() > kMaxSlots) throw std::length_error("tensor has more than six factors");
    TensorKey k = static_cast<TensorKey>(slots.size()) << 60;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        auto [a, b] = slots[i];
        if (a < 0 || b < 0 || a > kMaxSlotExponent || b > kMaxSlotExponent)
            throw std::length_error("tensor slot exponent out of range");
        k |= static_cast<TensorKey>((a << 5) | b) << (50 - 10 * i);
    }
    return k;
}

std::vector<std::pair<int, int>> tensor_slots(TensorKey k)
{
    std::vector<std::pair<int, int>> out;
    const int n = tensor_rank(k);
    for (int i = 0; i < n; ++i) {
        int f = static_cast<int>((k >> (50 - 10 * i)) & 1023u);
        out.emplace_back(f >> 5, f & 31);
    }
    return out;
}

TensorElt tensor_from_poly(const PolyABAB& q)
{
    std::vector<TensorElt::Term> terms;
    for (auto& [key, c] : q.terms()) {
        Monomial<VarsABAB> m(key);
        if (m.exponent(2) || m.exponent(3)) throw std::invalid_argument("tensor_from_poly: polynomial involves A', B'");
        if (m.exponent(0) == 0 || m.exponent(1) == 0)
            throw std::invalid_argument("tensor_from_poly: polynomial not divisible by AB");
        terms.emplace_back(make_tensor_key({{m.exponent(0), m.exponent(1)}}), c);
    }
    return TensorElt::from_terms(std::move(terms));
}

TensorElt tensor_mul(const TensorElt& p, const TensorElt& q)
{
    std::vector<TensorElt::Term> terms;
    for (auto& [kp, cp] : p.terms())
        for (auto& [kq, cq] : q.terms()) {
            auto s = tensor_slots(kp);
            auto t = tensor_slots(kq);
            s.insert(s.end(), t.begin(), t.end());
            terms.emplace_back(make_tensor_key(s), cp * cq);
        }
    return TensorElt::from_terms(std::move(terms));
}

TensorElt tensor_bracket(const TensorElt& p, const TensorElt& q) { return tensor_mul(p, q) - tensor_mul(q, p); }

namespace {

Rational binomial(int n, int k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

// Terms of (X_1 + ... + X_i)^e: each composition of e into i parts with its
// multinomial coefficient.
void compositions(int e, int parts, std::vector<int>& cur, const Rational& coeff,
                  std::vector<std::pair<std::vector<int>, Rational>>& out)
{
    if (parts == 1) {
        cur.push_back(e);
        out.emplace_back(cur, coeff);
        cur.pop_back();
        return;
    }
    for (int k = 0; k <= e; ++k) {
        cur.push_back(k);
        compositions(e - k, parts - 1, cur, coeff * binomial(e, k), out);
        cur.pop_back();
    }
}

// q(A_1 + ... + A_i, B_1 + ... + B_i) as a rank-i tensor of monomials
// (without the AB divisibility requirement on the factors).
std::vector<std::pair<std::vector<std::pair<int, int>>, Rational>> coproduct(int a, int b, int i)
{
    std::vector<std::pair<std::vector<int>, Rational>> ca, cb;
    std::vector<int> cur;
    compositions(a, i, cur, Rational(1), ca);
    compositions(b, i, cur, Rational(1), cb);
    std::vector<std::pair<std::vector<std::pair<int, int>>, Rational>> out;
    for (auto& [pa, xa] : ca)
        for (auto& [pb, xb] : cb) {
            std::vector<std::pair<int, int>> s(i);
            for (int k = 0; k < i; ++k) s[k] = {pa[k], pb[k]};
            out.emplace_back(std::move(s), xa * xb);
        }
    return out;
}

} // namespace

TensorElt star(const TensorElt& p, const PolyABAB& q)
{
    std::vector<TensorElt::Term> terms;
    for (auto& [qk, qc] : q.terms()) {
        Monomial<VarsABAB> m(qk);
        if (m.exponent(2) || m.exponent(3)) throw std::invalid_argument("star: q involves A', B'");
        for (auto& [pk, pc] : p.terms()) {
            auto slots = tensor_slots(pk);
            const int i = static_cast<int>(slots.size());
            for (auto& [cs, cc] : coproduct(m.exponent(0), m.exponent(1), i)) {
                auto s = slots;
                for (int k = 0; k < i; ++k) {
                    s[k].first += cs[k].first;
                    s[k].second += cs[k].second;
                }
                terms.emplace_back(make_tensor_key(s), pc * qc * cc);
            }
        }
    }
    return TensorElt::from_terms(std::move(terms));
}

TensorElt star(const TensorElt& p, const TensorElt& q)
{
    std::vector<TensorElt::Term> terms;
    for (auto& [qk, qc] : q.terms()) {
        auto qs = tensor_slots(qk);
        for (std::size_t alpha = 0; alpha < qs.size(); ++alpha) {
            PolyABAB qa = PolyABAB::monomial({qs[alpha].first, qs[alpha].second, 0, 0});
            TensorElt inner = star(p, qa);
            for (auto& [ik, ic] : inner.terms()) {
                std::vector<std::pair<int, int>> s(qs.begin(), qs.begin() + static_cast<std::ptrdiff_t>(alpha));
                auto is = tensor_slots(ik);
                s.insert(s.end(), is.begin(), is.end());
                s.insert(s.end(), qs.begin() + static_cast<std::ptrdiff_t>(alpha) + 1, qs.end());
                terms.emplace_back(make_tensor_key(s), qc * ic);
            }
        }
    }
    return TensorElt::from_terms(std::move(terms));
}

TensorElt star_bracket(const TensorElt& p, const TensorElt& q) { return star(p, q) - star(q, p); }

PolyABAB tensor2_to_poly(const TensorElt& t)
{
    std::vector<PolyABAB::Term> terms;
    for (auto& [k, c] : t.terms()) {
        if (tensor_rank(k) != 2) throw std::invalid_argument("tensor2_to_poly: tensor of rank other than 2");
        auto s = tensor_slots(k);
        terms.emplace_back(Monomial<VarsABAB>::from_exponents({s[0].first, s[0].second, s[1].first, s[1].second}).key(), c);
    }
    return PolyABAB::from_terms(std::move(terms));
}

TensorElt poly_to_tensor2(const PolyABAB& p)
{
    std::vector<TensorElt::Term> terms;
    for (auto& [key, c] : p.terms()) {
        Monomial<VarsABAB> m(key);
        terms.emplace_back(make_tensor_key({{m.exponent(0), m.exponent(1)}, {m.exponent(2), m.exponent(3)}}), c);
    }
    return TensorElt::from_terms(std::move(terms));
}

TensorElt tensor_of_gword(const GWord& w)
{
    if (w.empty()) throw std::invalid_argument("tensor_of_gword: empty word");
    if (w.size() == 1) {
        GenIndex g = gen_of(w[0]);
        return TensorElt(make_tensor_key({{g.a + 1, g.b + 1}}), Rational(1));
    }
    auto [u, v] = standard_factorization(w);
    return tensor_bracket(tensor_of_gword(u), tensor_of_gword(v));
}

TensorElt lcs_class(const LieElt& f, int i)
{
    TensorElt r;
    const EliminatedElt e = eliminate(f);
    for (auto& [w, c] : e.terms()) {
        const int len = static_cast<int>(w.size());
        if (len < i + 1) throw std::invalid_argument("lcs_class: element is not in the requested filtration step");
        if (len == i + 1) r += tensor_of_gword(w) * c;
    }
    return r;
}

std::string to_string(const TensorElt& t)
{
    return combination_string(t, [](TensorKey k) {
        std::string s;
        for (auto [a, b] : tensor_slots(k)) {
            if (!s.empty()) s += "(x)";
            s += "A^" + std::to_string(a) + "B^" + std::to_string(b);
        }
        return s;
    });
}

} // namespace artifact::lie
