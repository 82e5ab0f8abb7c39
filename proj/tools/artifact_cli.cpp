#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "artifact/depthgraded.hpp"
#include "artifact/invariants.hpp"
#include "artifact/lowerbound.hpp"
#include "artifact/serialize.hpp"
#include "artifact/series.hpp"

using namespace artifact;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxBasisWeight = 40;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    int max_weight = 12;
    int threads = 1;
    int sigma_degree = -1;
    int i = 0;
    int j = 0;
    int k = 0;
    int bracket_weight = 14;
    int weight = -1;
    int depth = -1;
    bool two_var = false;
    std::string out;
};

// ---------------------------------------------------------------------------
// verify

using CheckFn = std::function<CheckReport(const Options&)>;

int default_sigma_degree(const Options& o)
{
    return o.sigma_degree >= 0 ? o.sigma_degree : std::max(0, (o.max_weight - 8) / 3);
}

CheckReport run_cond(const Options& o)
{
    if (o.i == 0 && o.j == 0) return lb::verify_cond_all(o.max_weight);
    if (o.i < 3 || o.j <= o.i || o.i % 2 == 0 || o.j % 2 == 0)
        throw UsageError("cond-ij: --i and --j must be odd with 3 <= i < j");
    if (o.i + o.j > o.max_weight)
        throw UsageError("cond-ij: i + j exceeds --max-weight " + std::to_string(o.max_weight));
    return lb::verify_cond(o.i, o.j);
}

const std::vector<std::pair<std::string, CheckFn>>& checks()
{
    static const std::vector<std::pair<std::string, CheckFn>> table{
        {"a-presentation", [](const Options& o) { return inv::verify_presentation_A(o.max_weight); }},
        {"molien", [](const Options& o) { return inv::verify_molien(o.max_weight); }},
        {"ideal-i35", [](const Options& o) { return inv::verify_ideal_i35(o.max_weight); }},
        {"ideal-generation", [](const Options& o) { return inv::verify_ideal_generation(o.max_weight); }},
        {"p5i-series", [](const Options& o) { return inv::verify_p5i_series(o.max_weight); }},
        {"gr0a-presentation", [](const Options& o) { return inv::verify_gr0A_presentation(o.max_weight); }},
        {"gra-polynomial", [](const Options& o) { return inv::verify_grA_polynomial(o.max_weight); }},
        {"cocycle-in-m", [](const Options& o) { return lb::verify_cocycle_in_m(o.max_weight); }},
        {"section-cocycle", [](const Options& o) { return lb::verify_section_cocycle(o.max_weight); }},
        {"lcs-star", [](const Options& o) { return lb::verify_lcs_star(o.max_weight); }},
        {"lambda-divisibility", [](const Options& o) { return lb::verify_lambda_divisibility(o.max_weight); }},
        {"genfun-xy", [](const Options& o) { return lb::verify_genfun_xy(o.max_weight); }},
        {"aux-ij", [](const Options& o) { return lb::verify_aux(o.max_weight); }},
        {"cond-ij", run_cond},
        {"sigma4-annihilates", [](const Options& o) { return lb::verify_sigma4_annihilates(o.max_weight); }},
        {"m0-cyclic", [](const Options& o) { return lb::verify_m0_cyclic(o.max_weight); }},
        {"m0-hilbert", [](const Options& o) { return lb::verify_m0_hilbert(o.max_weight); }},
        {"period-dims", [](const Options& o) { return lb::verify_period_dims(o.max_weight); }},
        {"mmin-hilbert",
         [](const Options& o) { return lb::verify_mmin_hilbert(o.max_weight, default_sigma_degree(o)); }},
        {"phi-iso", [](const Options& o) { return lb::verify_phi(o.max_weight, default_sigma_degree(o)); }},
        {"action-formula",
         [](const Options& o) {
             return lb::verify_action_formula(o.max_weight, default_sigma_degree(o), o.bracket_weight);
         }},
        {"purity", [](const Options& o) { return lb::verify_purity(o.max_weight, default_sigma_degree(o)); }},
        {"liew-dims", [](const Options& o) { return dg::verify_liew_dims(o.max_weight, o.max_weight, o.max_weight); }},
        {"depth2-explicit", [](const Options& o) { return dg::verify_depth2_explicit(o.max_weight); }},
        {"test-map-injectivity", [](const Options& o) { return dg::verify_test_map_injectivity(o.max_weight); }},
        {"complex-homology", [](const Options& o) { return dg::verify_complex_homology(o.max_weight); }},
        {"depth3-sequence", [](const Options& o) { return dg::verify_depth3_sequence(o.max_weight); }},
    };
    return table;
}

const CheckFn* find_check(const std::string& id)
{
    for (auto& [name, fn] : checks())
        if (name == id) return &fn;
    return nullptr;
}

// Runs fn, turning library exceptions into a failed report. Usage errors propagate.
CheckReport run_guarded(const std::string& id, const CheckFn& fn, const Options& o)
{
    try {
        return fn(o);
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(id + ": " + e.what());
    } catch (const std::exception& e) {
        CheckReport rep;
        rep.check_id = id;
        rep.params["N"] = o.max_weight;
        rep.fail(std::string("exception: ") + e.what());
        return rep;
    }
}

// ---------------------------------------------------------------------------
// Rendering

std::string pad(const std::string& s, std::size_t width)
{
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string render_text(const CheckReport& rep)
{
    std::ostringstream os;
    os << rep.check_id << ": " << to_string(rep.status) << " (" << rep.weights.size() << " rows)\n";
    if (rep.witness) os << "  witness: " << *rep.witness << "\n";
    if (!rep.params.empty()) os << "  params: " << rep.params.dump() << "\n";
    std::size_t wl = 5, cl = 8, el = 8;
    for (auto& r : rep.weights) {
        wl = std::max(wl, r.label.size());
        cl = std::max(cl, r.computed.size());
        el = std::max(el, r.expected.size());
    }
    if (!rep.weights.empty())
        os << "  " << pad("w", 4) << pad("d", 4) << pad("label", wl + 2) << pad("computed", cl + 2)
           << pad("expected", el + 2) << "ok\n";
    for (auto& r : rep.weights)
        os << "  " << pad(std::to_string(r.w), 4) << pad(r.d >= 0 ? std::to_string(r.d) : "-", 4)
           << pad(r.label, wl + 2) << pad(r.computed, cl + 2) << pad(r.expected, el + 2) << (r.ok ? "yes" : "NO")
           << "\n";
    for (auto& n : rep.notes) os << "  note: " << n << "\n";
    return os.str();
}

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot open --out file " + o.out);
    f << text;
}

std::string render_reports(const Options& o, const std::vector<CheckReport>& reps)
{
    if (o.json) {
        if (reps.size() == 1) return reps[0].to_json().dump(2) + "\n";
        json arr = json::array();
        for (auto& r : reps) arr.push_back(r.to_json());
        return arr.dump(2) + "\n";
    }
    std::string s;
    for (auto& r : reps) s += render_text(r);
    return s;
}

int exit_code(const std::vector<CheckReport>& reps)
{
    for (auto& r : reps)
        if (!r.passed()) return kExitFail;
    return kExitPass;
}

int cmd_verify(const Options& o, std::vector<std::string> ids)
{
    if (ids.size() == 1 && ids[0] == "all") {
        ids.clear();
        for (auto& [name, fn] : checks()) ids.push_back(name);
    }
    std::vector<const CheckFn*> fns;
    for (auto& id : ids) {
        const CheckFn* fn = find_check(id);
        if (!fn) throw UsageError("unknown check id '" + id + "'");
        fns.push_back(fn);
    }
    std::vector<CheckReport> reps(ids.size());
    std::vector<std::string> usage(ids.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < ids.size(); t = next++) {
            try {
                reps[t] = run_guarded(ids[t], *fns[t], o);
            } catch (const UsageError& e) {
                usage[t] = e.what();
            }
        }
    };
    std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, o.threads)), ids.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (auto& u : usage)
        if (!u.empty()) throw UsageError(u);
    emit(o, render_reports(o, reps));
    return exit_code(reps);
}

// ---------------------------------------------------------------------------
// hilbert

long long as_ll(const Rational& r)
{
    if (!r.is_integer()) throw std::logic_error("non-integral series coefficient " + r.str());
    return r.numerator().get_si();
}

const std::vector<std::string> kSpaces{"A", "gr0A", "grA", "M0min", "Mmin", "lieW1", "lieW2", "lieW3", "H-complex"};

CheckReport hilbert_table(const Options& o, const std::string& space)
{
    const int N = o.max_weight;
    CheckReport rep;
    rep.check_id = "hilbert " + space;
    rep.params["max_weight"] = N;
    rep.params["two_var"] = o.two_var;
    bool depth_filtered = space == "grA" || space == "Mmin" || space.rfind("lieW", 0) == 0;
    if (o.two_var && !depth_filtered) throw UsageError("hilbert: --two-var is not supported for " + space);
    ReportTimer timer(rep);
    if (space == "A") {
        auto expected = inv::molien_closed_form(N);
        for (int n = 0; n <= N; ++n)
            rep.add_row(n, -1, static_cast<long long>(inv::invariant_basis(n).size()), as_ll(expected[n]), "dim A");
    } else if (space == "gr0A") {
        auto dims = inv::gr_sigma_A(0, N);
        auto expected = inv::gr0_closed_form(N);
        for (int n = 0; n <= N; ++n)
            rep.add_row(n, -1, static_cast<long long>(dims[n]), as_ll(expected[n]), "dim gr0 A");
    } else if (space == "grA") {
        const int K = N / 3;
        std::vector<std::vector<std::size_t>> dims;
        for (int k = 0; k <= K; ++k) dims.push_back(inv::gr_sigma_A(k, N));
        if (o.two_var) {
            auto expected = expand_hilbert2({{1, 0, 0}, {-1, 10, 0}}, {{2, 0}, {4, 0}, {6, 0}, {3, 1}, {5, 1}}, N, K);
            for (int n = 0; n <= N; ++n)
                for (int k = 0; k <= K; ++k)
                    rep.add_row(n, k, static_cast<long long>(dims[k][n]), as_ll(expected[n][k]), "dim gr^k A");
        } else {
            auto expected = expand_hilbert({{1, 0}, {-1, 10}}, {2, 3, 4, 5, 6}, N);
            for (int n = 0; n <= N; ++n) {
                long long total = 0;
                for (int k = 0; k <= K; ++k) total += static_cast<long long>(dims[k][n]);
                rep.add_row(n, -1, total, as_ll(expected[n]), "dim gr A");
            }
        }
    } else if (space == "M0min") {
        auto expected = expand_hilbert({{1, 8}}, {2, 6}, N);
        auto& ctx = lb::asxas_context();
        for (int n = 0; n <= N; ++n)
            rep.add_row(n, -1, static_cast<long long>(ctx.mmin_dim(0, n)), as_ll(expected[n]), "dim M_0^min");
    } else if (space == "Mmin") {
        const int K = o.two_var ? default_sigma_degree(o) : std::max(0, (N - 8) / 3);
        auto& ctx = lb::asxas_context();
        if (o.two_var) {
            auto expected = expand_hilbert2({{1, 8, 2}}, {{2, 0}, {6, 0}, {3, 1}, {5, 1}}, N, K + 2);
            for (int n = 0; n <= N; ++n)
                for (int k = 0; k <= K; ++k)
                    rep.add_row(n, k + 2, static_cast<long long>(ctx.mmin_dim(k, n)), as_ll(expected[n][k + 2]),
                                "dim M_k^min");
        } else {
            auto expected = expand_hilbert({{1, 8}}, {2, 3, 5, 6}, N);
            for (int n = 0; n <= N; ++n) {
                long long total = 0;
                for (int k = 0; k <= K; ++k) total += static_cast<long long>(ctx.mmin_dim(k, n));
                rep.add_row(n, -1, total, as_ll(expected[n]), "dim M^min");
            }
        }
    } else if (space == "lieW1" || space == "lieW2" || space == "lieW3") {
        int k = space.back() - '0';
        auto dims = dg::lie_w(k, N).dims();
        auto expected = dg::lie_w_series(k, N);
        for (int n = 0; n <= N; ++n)
            rep.add_row(n, o.two_var ? k : -1, static_cast<long long>(dims[n]), as_ll(expected[n]), "dim Lie(W)[k]");
    } else if (space == "H-complex") {
        auto expected = dg::homology_series(N);
        for (int n = 0; n <= N; ++n)
            rep.add_row(n, -1, static_cast<long long>(dg::complex_dims(n).homology), as_ll(expected[n]),
                        "dim H");
    } else {
        throw UsageError("unknown space '" + space + "'");
    }
    timer.finish();
    return rep;
}

int cmd_hilbert(const Options& o, const std::string& space)
{
    if (o.max_weight < 0) throw UsageError("--max-weight must be non-negative");
    CheckReport rep = hilbert_table(o, space);
    emit(o, render_reports(o, {rep}));
    return exit_code({rep});
}

// ---------------------------------------------------------------------------
// basis

struct BasisEntry {
    std::string name;
    json value;
    std::string text;
};

std::vector<BasisEntry> mmin_basis(int w, int k)
{
    std::vector<BasisEntry> out;
    for (auto& m : lb::x_monomials(w - 8, k)) {
        std::string name = m == PolyX(1) ? "tau_35" : m.str() + " * tau_35";
        PolyABAB p = lb::phi_lift(m);
        out.push_back({name, poly_to_json(p), p.str()});
    }
    return out;
}

int cmd_basis(const Options& o, const std::string& space)
{
    const int w = o.weight;
    if (w < 0 || w > kMaxBasisWeight)
        throw UsageError("basis: --weight must be in [0, " + std::to_string(kMaxBasisWeight) + "]");
    std::vector<BasisEntry> entries;
    int depth = o.depth;
    if (space == "A") {
        for (auto& m : inv::invariant_basis(w)) {
            PolyABAB p = inv::sigma_mono_poly(m);
            entries.push_back({m.str(), poly_to_json(p), p.str()});
        }
    } else if (space == "M0min") {
        if (depth >= 0 && depth != 2) throw UsageError("basis: M0min is pure of depth 2");
        entries = mmin_basis(w, 0);
    } else if (space == "Mmin") {
        if (depth >= 0) {
            if (depth < 2) throw UsageError("basis: Mmin has depth >= 2");
            entries = mmin_basis(w, depth - 2);
        } else {
            for (int k = 0; 3 * k <= w - 8; ++k)
                for (auto& e : mmin_basis(w, k)) entries.push_back(std::move(e));
        }
    } else if (space == "lieW1" || space == "lieW2" || space == "lieW3") {
        int k = space.back() - '0';
        if (depth >= 0 && depth != k) throw UsageError("basis: " + space + " is pure of depth " + std::to_string(k));
        auto sp = dg::lie_w(k, w);
        for (auto& e : sp.basis[w]) entries.push_back({lie::to_string(e), lie::to_json(e), lie::to_string(e)});
        if (k == 1 && !entries.empty()) entries[0].name = "xi[" + std::to_string(w - 1) + "]";
    } else if (std::find(kSpaces.begin(), kSpaces.end(), space) != kSpaces.end()) {
        throw UsageError("basis: extraction is not supported for " + space);
    } else {
        throw UsageError("unknown space '" + space + "'");
    }
    std::string s;
    if (o.json) {
        json j;
        j["space"] = space;
        j["weight"] = w;
        if (depth >= 0) j["depth"] = depth;
        else j["depth"] = nullptr;
        j["basis"] = json::array();
        for (auto& e : entries) j["basis"].push_back({{"name", e.name}, {"value", e.value}});
        s = j.dump(2) + "\n";
    } else {
        s = space + " weight " + std::to_string(w) + ": " + std::to_string(entries.size()) + " element(s)\n";
        for (auto& e : entries) s += "  " + e.name + " = " + e.text + "\n";
    }
    emit(o, s);
    return kExitPass;
}

// ---------------------------------------------------------------------------
// dump-poly

const std::vector<std::string> kPolys{"sigma-tilde", "sigma", "lambda", "tau", "cocycle", "relation", "gr0-relation"};

int odd_at_least_3(int v, const char* flag)
{
    if (v < 3 || v % 2 == 0) throw UsageError(std::string("dump-poly: ") + flag + " must be odd and >= 3");
    return v;
}

int cmd_dump_poly(const Options& o, const std::string& name)
{
    PolyABAB p;
    if (name == "sigma-tilde") {
        if (o.k < 2) throw UsageError("dump-poly: --k must be >= 2");
        p = inv::sigma_tilde(o.k);
    } else if (name == "sigma") {
        if (o.k < 2) throw UsageError("dump-poly: --k must be >= 2");
        p = lb::sigma_k(o.k);
    } else if (name == "lambda") {
        p = lb::lambda_k(odd_at_least_3(o.k, "--k"));
    } else if (name == "tau") {
        p = lb::tau(odd_at_least_3(o.i, "--i"), odd_at_least_3(o.j, "--j"));
    } else if (name == "cocycle") {
        p = lb::cocycle_c(lb::sigma_k(odd_at_least_3(o.i, "--i")), lb::sigma_k(odd_at_least_3(o.j, "--j")));
    } else if (name == "relation") {
        p = inv::presentation_relation();
    } else if (name == "gr0-relation") {
        p = inv::gr0_relation_lift();
    } else {
        throw UsageError("unknown polynomial '" + name + "'");
    }
    std::string s;
    if (o.json) {
        json j;
        j["name"] = name;
        j["poly"] = poly_to_json(p);
        s = j.dump(2) + "\n";
    } else {
        s = p.is_zero() ? "0\n" : p.str() + "\n";
    }
    emit(o, s);
    return kExitPass;
}

std::string join(const std::vector<std::string>& v)
{
    std::string s;
    for (auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return s;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of the invariant ring, M^min and Lie(W) computations"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Emit JSON instead of aligned text");
    app.add_option("--max-weight", o.max_weight, "Weight truncation")->capture_default_str();
    app.add_option("--threads", o.threads, "Checks run concurrently by verify")->check(CLI::PositiveNumber);
    app.add_option("--sigma-degree", o.sigma_degree, "Sigma-degree truncation (default (max-weight - 8) / 3)");
    app.add_option("--i", o.i, "Index i");
    app.add_option("--j", o.j, "Index j");
    app.add_option("--k", o.k, "Index k (dump-poly)");
    app.add_option("--bracket-weight", o.bracket_weight, "Bound on i + j for brackets in action-formula")
        ->capture_default_str();
    app.add_option("--out", o.out, "Write the output to this file");

    std::vector<std::string> ids;
    std::vector<std::string> check_names;
    for (auto& [name, fn] : checks()) check_names.push_back(name);
    auto* verify = app.add_subcommand("verify", "Run named checks (or 'all'); ids: " + join(check_names));
    verify->add_option("check", ids, "Check ids")->required();

    std::string space;
    auto* hilbert = app.add_subcommand("hilbert", "Dimension table against the closed-form series");
    hilbert->add_option("space", space, "One of " + join(kSpaces))->required();
    hilbert->add_flag("--two-var", o.two_var, "Split by depth or Sigma-degree (grA, Mmin, lieW1-3)");

    auto* basis = app.add_subcommand("basis", "Basis of a graded piece (A, M0min, Mmin, lieW1-3)");
    basis->add_option("space", space, "Space")->required();
    basis->add_option("--weight", o.weight, "Weight")->required();
    basis->add_option("--depth", o.depth, "Depth");

    std::string poly_name;
    auto* dump = app.add_subcommand("dump-poly", "Print a named polynomial in A, B, A', B'");
    dump->add_option("name", poly_name, "One of " + join(kPolys))->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(o, ids);
        if (*hilbert) return cmd_hilbert(o, space);
        if (*basis) return cmd_basis(o, space);
        if (*dump) return cmd_dump_poly(o, poly_name);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
