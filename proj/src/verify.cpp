#include "schurkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "schurkit/classification.hpp"
#include "schurkit/error.hpp"

namespace schurkit {

namespace {

constexpr std::size_t kMaxListed = 100;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Sub-report that stays in construction order inside the suite report.
class SubCheck {
  public:
    SubCheck(SuiteReport& report, std::string name) : report_(report), index_(report.subs.size()) {
        report_.subs.push_back({std::move(name), false, {}, 0, 0});
    }
    SubCheck(const SubCheck&) = delete;
    SubCheck& operator=(const SubCheck&) = delete;

    void check(bool ok, const Partition& lambda, const std::string& expected, const std::string& actual) {
        SubReport& sub = report_.subs[index_];
        ++sub.checked;
        if (ok)
            return;
        ++sub.failures;
        if (sub.failures <= kMaxListed)
            report_.discrepancies.push_back({sub.name, lambda, expected, actual});
    }
    void skip(std::string note) {
        report_.subs[index_].skipped = true;
        report_.subs[index_].note = std::move(note);
    }

  private:
    SuiteReport& report_;
    std::size_t index_;
};

std::string char_text(const SymChar& chi) { return to_json(chi.coeffs()).dump(); }

std::vector<Partition> weights_up_to(int rmax, int n) { return partitions_up_to(rmax, n); }

void prefetch_if_parallel(int rmax, SimpleTable& table, unsigned threads) {
    if (threads > 1)
        prefetch_simple_chars(weights_up_to(rmax, table.n()), table, threads);
}

struct Anchor {
    const char* suite;
    int p;
    Partition lambda;
    bool expect_factor;
    const char* claim;
};

const std::vector<Anchor>& anchors() {
    static const std::vector<Anchor> list = {
        {"thm-2good", 3, {2, 2, 2}, true, "(2,2,2) = (p-1)^3 is a factor of S(E)⊗S(E)"},
        {"thm-2good", 5, {2, 2, 2}, false, "(2,2,2) is not a factor of S(E)⊗S(E)"},
        {"thm-2good", 3, {1, 1, 1}, true, "(1,1,1) is a factor of S(E)⊗S(E)"},
        {"thm-2good", 2, {6, 4, 2}, true, "index-1 primitive (6,4,2) is a factor of S(E)⊗S(E)"},
        {"thm-2good", 3, {7, 4, 3}, true, "index-1 primitive (7,4,3) is a factor of S(E)⊗S(E)"},
        {"thm-21special", 3, {2, 2, 2}, true, "(2,2,2) is a factor of S̄(E)⊗S̄(E)⊗Λ(E)"},
    };
    return list;
}

SuiteReport theorem_suite(const std::string& name, Family family, const std::function<bool(const Partition&, int)>& predicate,
                          int p, int n, int rmax, SimpleTable& table, unsigned threads) {
    if (table.p() != p || table.n() != n)
        throw Error(Errc::InvalidArgument, "oracle table does not match (p, n)");
    const auto start = Clock::now();
    SuiteReport report;
    report.suite = name;
    report.params = {{"p", p}, {"n", n}, {"rmax", rmax}};
    prefetch_if_parallel(rmax, table, threads);

    std::map<int, std::set<Partition>> observed_by_degree;
    {
        SubCheck sets(report, "set-equality");
        SubCheck dims(report, "dimension");
        for (int r = 0; r <= rmax; ++r) {
            const SymChar chi = family_char(family, r, p, n);
            const FactorMultiset factors = decompose_simples(chi, table);
            dims.check(dimension_check(chi, factors, table), Partition::omega(0), "dimensions agree at degree " + std::to_string(r),
                       "mismatch");
            std::set<Partition> observed;
            for (const auto& kv : factors)
                observed.insert(kv.first);
            std::set<Partition> predicted;
            for (auto& lambda : partitions_of(r, n))
                if (predicate(lambda, p))
                    predicted.insert(std::move(lambda));
            std::set<Partition> all = observed;
            all.insert(predicted.begin(), predicted.end());
            for (auto it = all.rbegin(); it != all.rend(); ++it) {
                const bool in_theorem = predicted.count(*it) > 0;
                const bool in_oracle = observed.count(*it) > 0;
                report.rows.push_back({r, *it, in_theorem, in_oracle});
                sets.check(in_theorem == in_oracle, *it, in_theorem ? "factor" : "not a factor",
                           in_oracle ? "factor" : "not a factor");
            }
            observed_by_degree[r] = std::move(observed);
        }
    }

    for (const auto& anchor : anchors()) {
        if (anchor.suite != name || anchor.p != p || anchor.lambda.length() > n || anchor.lambda.degree() > rmax)
            continue;
        const int r = anchor.lambda.degree();
        const bool holds = (observed_by_degree[r].count(anchor.lambda) > 0) == anchor.expect_factor;
        report.witnesses.push_back({anchor.claim, anchor.lambda, r, holds, true});
        if (!holds)
            report.discrepancies.push_back({"witness", anchor.lambda, anchor.claim, "does not hold"});
        if (name == "thm-21special")
            report.witnesses.push_back({"2-good", anchor.lambda, r, is_2good(anchor.lambda, p), false});
    }
    report.oracle_stats = table.stats();
    report.elapsed_seconds = seconds_since(start);
    return report;
}

void audit_into(SuiteReport& report, SimpleTable& table) {
    const int p = table.p();
    const int n = table.n();
    const auto keys = table.keys();
    SubCheck sanity(report, "sanity");
    SubCheck steinberg(report, "steinberg");
    SubCheck semisimple(report, "semisimple");
    SubCheck block(report, "block");
    SubCheck dims(report, "dimension");
    for (const auto& lambda : keys) {
        const SymChar chi = simple_char(lambda, table);
        bool ok = chi[lambda] == 1;
        for (const auto& [mu, c] : chi.coeffs())
            ok = ok && dominance_leq(mu, lambda) == Dominance::LessOrEqual && c > 0 && c <= kostka(lambda, mu);
        sanity.check(ok, lambda, "highest weight 1, support below λ, 0 < coeff <= Kostka", char_text(chi));

        if (!is_restricted(lambda, p)) {
            const auto [low, high] = digit_split(lambda, p);
            const SymChar product = multiply(simple_char(low, table), frobenius_twist(simple_char(high, table), p));
            steinberg.check(product == chi, lambda, char_text(product), char_text(chi));
        }
        if (lambda.degree() < p) {
            const SymChar weyl = schur_char(lambda, n);
            semisimple.check(weyl == chi, lambda, char_text(weyl), char_text(chi));
        }

        const SymChar weyl = schur_char(lambda, n);
        const FactorMultiset factors = decompose_simples(weyl, table);
        const Partition core = p_core(lambda, p);
        for (const auto& kv : factors) {
            const Partition other = p_core(kv.first, p);
            block.check(other == core, kv.first, "p-core " + core.str() + " of " + lambda.str(), "p-core " + other.str());
        }
        dims.check(dimension_check(weyl, factors, table), lambda, "Σ mult·dim L = dim Δ(λ)", "mismatch");
    }
}

} // namespace

json SuiteReport::to_json(bool with_elapsed) const {
    json out;
    out["suite"] = suite;
    out["params"] = params;
    out["verdict"] = pass() ? "pass" : "fail";
    json disc = json::array();
    for (const auto& d : discrepancies)
        disc.push_back({{"check", d.check}, {"partition", schurkit::to_json(d.partition)}, {"expected", d.expected}, {"actual", d.actual}});
    out["discrepancies"] = disc;
    if (!subs.empty()) {
        json list = json::array();
        for (const auto& s : subs) {
            json entry = {{"name", s.name},
                          {"status", s.skipped ? "skipped" : (s.failures ? "fail" : "pass")},
                          {"checked", s.checked},
                          {"failures", s.failures}};
            if (!s.note.empty())
                entry["note"] = s.note;
            list.push_back(entry);
        }
        out["subSuites"] = list;
    }
    if (!witnesses.empty()) {
        json list = json::array();
        for (const auto& w : witnesses)
            list.push_back({{"claim", w.claim},
                            {"partition", schurkit::to_json(w.partition)},
                            {"degree", w.degree},
                            {"holds", w.holds},
                            {"required", w.required}});
        out["witnesses"] = list;
    }
    if (!rows.empty()) {
        std::map<int, std::pair<int, int>> counts;
        for (const auto& row : rows) {
            auto& c = counts[row.degree];
            c.first += row.in_theorem;
            c.second += row.in_oracle;
        }
        json list = json::array();
        for (const auto& [r, c] : counts)
            list.push_back({{"degree", r}, {"theorem", c.first}, {"oracle", c.second}});
        out["degrees"] = list;
    }
    if (oracle_stats)
        out["oracleStats"] = {{"computed", oracle_stats->computed},
                              {"cacheHits", oracle_stats->cache_hits},
                              {"loaded", oracle_stats->loaded},
                              {"maxWeightSpace", oracle_stats->max_weight_space}};
    if (with_elapsed)
        out["elapsed"] = elapsed_seconds;
    return out;
}

SuiteReport suite_thm_2good(int p, int n, int rmax, SimpleTable& table, unsigned threads) {
    return theorem_suite("thm-2good", Family::SS, is_2good, p, n, rmax, table, threads);
}

SuiteReport suite_thm_21special(int p, int n, int rmax, SimpleTable& table, unsigned threads) {
    return theorem_suite("thm-21special", Family::SbarSbarWedge, is_21special, p, n, rmax, table, threads);
}

SuiteReport suite_1special(int p, int n, int rmax, SimpleTable& table, unsigned threads) {
    return theorem_suite("1special", Family::Sbar, is_1special, p, n, rmax, table, threads);
}

SuiteReport audit_table(SimpleTable& table) {
    const auto start = Clock::now();
    SuiteReport report;
    report.suite = "oracle-audit";
    report.params = {{"p", table.p()}, {"n", table.n()}, {"weights", table.keys().size()}};
    audit_into(report, table);
    report.oracle_stats = table.stats();
    report.elapsed_seconds = seconds_since(start);
    return report;
}

SuiteReport suite_oracle_self(int p, int n, int rmax, SimpleTable& table, unsigned threads) {
    if (table.p() != p || table.n() != n)
        throw Error(Errc::InvalidArgument, "oracle table does not match (p, n)");
    const auto start = Clock::now();
    SuiteReport report;
    report.suite = "oracle-self";
    report.params = {{"p", p}, {"n", n}, {"rmax", rmax}};
    prefetch_simple_chars(weights_up_to(rmax, n), table, threads);
    audit_into(report, table);

    const std::vector<std::pair<Family, const char*>> families = {
        {Family::SS, "SS"}, {Family::SbarSbar, "SbarSbar"}, {Family::SbarSbarWedge, "SbarSbarWedge"}, {Family::Sbar, "Sbar"}, {Family::S, "S"}};
    {
        SubCheck stability(report, "stability");
        if (n + 1 > 4) {
            stability.skip("needs n + 1 <= 4");
        } else {
            SimpleTable wider(p, n + 1, table.config());
            for (const auto& [family, label] : families)
                for (int r = 0; r <= std::min(rmax, 8); ++r) {
                    std::set<Partition> narrow;
                    for (const auto& lambda : enumerate_factors(family, r, table))
                        narrow.insert(lambda);
                    std::set<Partition> wide;
                    for (const auto& lambda : enumerate_factors(family, r, wider))
                        if (lambda.length() <= n)
                            wide.insert(lambda);
                    std::set<Partition> all = narrow;
                    all.insert(wide.begin(), wide.end());
                    for (const auto& lambda : all)
                        stability.check(narrow.count(lambda) == wide.count(lambda), lambda,
                                        std::string(label) + " factor for n=" + std::to_string(n + 1) + ": " + yes_no(wide.count(lambda)),
                                        "for n=" + std::to_string(n) + ": " + yes_no(narrow.count(lambda)));
                }
        }
    }
    {
        SubCheck good_special(report, "restricted-good-special");
        for (int r = 0; r <= rmax; ++r) {
            std::set<Partition> ss;
            std::set<Partition> bars;
            for (const auto& lambda : enumerate_factors(Family::SS, r, table))
                if (is_restricted(lambda, p))
                    ss.insert(lambda);
            for (const auto& lambda : enumerate_factors(Family::SbarSbar, r, table))
                if (is_restricted(lambda, p))
                    bars.insert(lambda);
            std::set<Partition> all = ss;
            all.insert(bars.begin(), bars.end());
            for (const auto& lambda : all)
                good_special.check(ss.count(lambda) == bars.count(lambda), lambda, "S⊗S factor: " + yes_no(ss.count(lambda)),
                                   "S̄⊗S̄ factor: " + yes_no(bars.count(lambda)));
        }
    }
    report.oracle_stats = table.stats();
    report.elapsed_seconds = seconds_since(start);
    return report;
}

// ---------------------------------------------------------------------------
// combinatorial invariants

namespace {

// ν obtained by removing the rim hook whose corner is the box (i, j).
std::optional<Partition> remove_rim_hook(const Partition& lambda, int i, int j, int p) {
    const Partition conj = transpose(lambda);
    const int leg_end = conj(j);
    if (lambda(i) - j + leg_end - i + 1 != p)
        return std::nullopt;
    std::vector<int> parts = lambda.vec();
    for (int k = i; k < leg_end; ++k)
        parts[static_cast<std::size_t>(k - 1)] = lambda(k + 1) - 1;
    parts[static_cast<std::size_t>(leg_end - 1)] = j - 1;
    return Partition(std::move(parts));
}

const std::set<Partition>& terminal_cores(const Partition& lambda, int p, std::map<Partition, std::set<Partition>>& memo) {
    if (auto it = memo.find(lambda); it != memo.end())
        return it->second;
    std::set<Partition> out;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda(i); ++j)
            if (auto smaller = remove_rim_hook(lambda, i, j, p)) {
                const auto& below = terminal_cores(*smaller, p, memo);
                out.insert(below.begin(), below.end());
            }
    if (out.empty())
        out.insert(lambda);
    return memo.emplace(lambda, std::move(out)).first->second;
}

// Number of sequences of restricted partitions d_0, d_1, ... (trailing zeros
// ignored) with Σ p^i d_i = λ.
long count_digit_sequences(const Partition& lambda, int p, std::map<Partition, long>& memo) {
    if (lambda.is_zero())
        return 1;
    if (auto it = memo.find(lambda); it != memo.end())
        return it->second;
    long total = 0;
    const int len = lambda.length();
    std::vector<int> digit(static_cast<std::size_t>(len));
    // Row by row from the bottom: d_i ≡ λ_i mod p and d_i - d_{i+1} in [0, p).
    std::function<void(int)> walk = [&](int i) {
        if (i == 0) {
            std::vector<int> rest(static_cast<std::size_t>(len));
            for (int k = 0; k < len; ++k)
                rest[static_cast<std::size_t>(k)] = (lambda(k + 1) - digit[static_cast<std::size_t>(k)]) / p;
            if (!std::is_sorted(rest.rbegin(), rest.rend()))
                return;
            total += count_digit_sequences(Partition(std::move(rest)), p, memo);
            return;
        }
        const int below = i < len ? digit[static_cast<std::size_t>(i)] : 0;
        for (int v = lambda(i) % p; v <= lambda(i); v += p)
            if (v >= below && v - below < p) {
                digit[static_cast<std::size_t>(i - 1)] = v;
                walk(i - 1);
            }
    };
    walk(len);
    memo.emplace(lambda, total);
    return total;
}

std::set<std::pair<int, int>> suitable_with_residue(const Partition& lambda, int p, bool negate) {
    std::set<std::pair<int, int>> out;
    const auto all = nodes(lambda, p);
    auto res = [&](const NodeInfo& node) { return negate ? (p - node.residue) % p : node.residue; };
    for (const auto& r : all) {
        if (r.kind != NodeKind::Removable)
            continue;
        bool ok = true;
        for (const auto& a : all)
            if (a.kind == NodeKind::Addable && a.row > r.row && res(a) == res(r))
                ok = false;
        if (ok)
            out.emplace(r.row, r.col);
    }
    return out;
}

} // namespace

std::vector<Partition> rim_hook_removals(const Partition& lambda, int p) {
    std::map<Partition, std::set<Partition>> memo;
    const auto& cores = terminal_cores(lambda, p, memo);
    return {cores.begin(), cores.end()};
}

SuiteReport suite_combinatorial(int p, int bound) {
    const auto start = Clock::now();
    SuiteReport report;
    report.suite = "combinatorial";
    report.params = {{"p", p}, {"bound", bound}};
    auto upto = [&](int cap) { return partitions_up_to(std::min(bound, cap)); };

    {
        SubCheck sub(report, "parse-uniqueness");
        for (const auto& lambda : upto(30)) {
            const auto parses = standard_parses(lambda, p);
            sub.check(parses.size() <= 1, lambda, "at most one standard parse", std::to_string(parses.size()) + " parses");
            for (const auto& parse : parses)
                sub.check(parse.recombine(p) == lambda, lambda, "parse recombines to λ", parse.recombine(p).str());
        }
    }
    {
        SubCheck sub(report, "dagger-reciprocity");
        for (int n = 1; n <= 6; ++n)
            for (const auto& lambda : partitions_up_to(n * (2 * p - 1), n, 2 * p - 1)) {
                const Partition image = dagger(lambda, 2, 1, p, n);
                sub.check(is_21special(lambda, p) == is_21special(image, p), lambda,
                          "(2,1)-special: " + yes_no(is_21special(lambda, p)),
                          "dagger " + image.str() + " for n=" + std::to_string(n) + ": " + yes_no(is_21special(image, p)));
            }
    }
    {
        SubCheck sub(report, "row-removal");
        const std::vector<std::pair<const char*, bool (*)(const Partition&, int)>> predicates = {
            {"(2,1)-special", is_21special}, {"2-special", is_2special}, {"2-good", is_2good}};
        for (const auto& lambda : upto(bound)) {
            if (lambda.is_zero())
                continue;
            const Partition top = rows(lambda, 1, lambda.length() - 1);
            const Partition bottom = rows(lambda, 2, lambda.length());
            for (const auto& [label, pred] : predicates)
                if (pred(lambda, p))
                    sub.check(pred(top, p) && pred(bottom, p), lambda, std::string(label) + " after removing a row",
                              top.str() + ": " + yes_no(pred(top, p)) + ", " + bottom.str() + ": " + yes_no(pred(bottom, p)));
        }
    }
    {
        SubCheck sub(report, "full-first-row");
        for (const auto& lambda : upto(bound))
            if (lambda.first() == 2 * p - 1) {
                const Partition rest = rows(lambda, 2, lambda.length());
                sub.check(is_21special(lambda, p) == is_21special(rest, p), lambda, "same as " + rest.str() + ": " + yes_no(is_21special(rest, p)),
                          yes_no(is_21special(lambda, p)));
            }
    }
    {
        SubCheck sub(report, "additivity");
        const int cap = std::min(bound, 20);
        for (const auto& lambda : partitions_up_to(cap)) {
            if (!is_2special(lambda, p))
                continue;
            for (int s = 0; lambda.degree() + s <= cap; ++s) {
                const Partition sum = add(lambda, Partition::omega(s));
                sub.check(is_21special(sum, p), sum, "(2,1)-special as " + lambda.str() + " + ω_" + std::to_string(s), "not (2,1)-special");
            }
        }
    }
    {
        SubCheck sub(report, "piecewise");
        if (p <= 2) {
            sub.skip("skipped-by-precondition p>2");
        } else {
            for (const auto& lambda : upto(25))
                if (is_restricted(lambda, p))
                    sub.check(is_21good_piecewise(lambda, p) == is_21special(lambda, p), lambda,
                              "(2,1)-special: " + yes_no(is_21special(lambda, p)), "piecewise: " + yes_no(is_21good_piecewise(lambda, p)));
        }
    }
    {
        SubCheck sub(report, "p-core-gate");
        for (const auto& lambda : upto(bound))
            if (is_21special(lambda, p)) {
                const Partition core = p_core(lambda, p);
                sub.check(is_bounded(core, 2, 1), lambda, "p-core (2,1)-bounded", core.str());
            }
    }
    {
        SubCheck sub(report, "suitable-node-closure");
        for (const auto& lambda : upto(20)) {
            if (!is_21special(lambda, p))
                continue;
            for (const auto& node : suitable_nodes(lambda, p)) {
                const Partition smaller = remove_node(lambda, node);
                sub.check(is_21special(smaller, p), smaller,
                          "(2,1)-special after removing (" + std::to_string(node.row) + "," + std::to_string(node.col) + ") from " + lambda.str(),
                          "not (2,1)-special");
            }
        }
    }
    {
        SubCheck sub(report, "2special-standard");
        for (const auto& lambda : upto(30))
            if (is_2special(lambda, p))
                sub.check(is_2good(lambda, p), lambda, "standard", "no standard parse");
    }
    {
        SubCheck sub(report, "partition-core");
        for (const auto& lambda : upto(30))
            sub.check(transpose(transpose(lambda)) == lambda, lambda, "transpose involution", transpose(transpose(lambda)).str());
        for (const auto& lambda : upto(25))
            for (int a = 0; a <= 4; ++a)
                for (int b = 0; b <= 4; ++b)
                    sub.check(is_bounded(lambda, a, b) == is_bounded(transpose(lambda), b, a), lambda,
                              "(" + std::to_string(a) + "," + std::to_string(b) + ")-bounded iff transpose is (b,a)-bounded", "differs");
        std::map<Partition, std::set<Partition>> hook_memo;
        std::map<Partition, long> digit_memo;
        for (const auto& lambda : upto(20)) {
            const Partition core = p_core(lambda, p);
            sub.check(p_core(core, p) == core, lambda, "p-core idempotent", p_core(core, p).str());
            const int removed = lambda.degree() - core.degree();
            sub.check(removed >= 0 && removed % p == 0, lambda, "degree drop a multiple of p", std::to_string(removed));
            const auto& cores = terminal_cores(lambda, p, hook_memo);
            sub.check(cores.size() == 1 && *cores.begin() == core, lambda, "every rim-hook order ends at " + core.str(),
                      std::to_string(cores.size()) + " terminal partitions, first " + cores.begin()->str());

            const auto digits = p_adic_digits(lambda, p);
            bool restricted = true;
            for (const auto& d : digits.digits)
                restricted = restricted && is_restricted(d, p);
            sub.check(digits.recombine() == lambda && restricted, lambda, "digits restricted and recombine", digits.recombine().str());
            const long count = count_digit_sequences(lambda, p, digit_memo);
            sub.check(count == 1, lambda, "unique restricted digit sequence", std::to_string(count));

            sub.check(suitable_with_residue(lambda, p, false) == suitable_with_residue(lambda, p, true), lambda,
                      "suitable nodes independent of residue sign", "differ");
            std::set<std::pair<int, int>> listed;
            for (const auto& node : suitable_nodes(lambda, p))
                listed.emplace(node.row, node.col);
            sub.check(listed == suitable_with_residue(lambda, p, false), lambda, "suitable_nodes matches definition", "differs");
        }
        for (int n = 1; n <= 6; ++n)
            for (int a = 0; a <= 2; ++a)
                for (int b = 0; b <= 2; ++b) {
                    const int c = a * (p - 1) + b;
                    for (const auto& lambda : partitions_up_to(n * c, n, c)) {
                        const Partition twice = dagger(dagger(lambda, a, b, p, n), a, b, p, n);
                        sub.check(twice == lambda, lambda, "dagger involution", twice.str());
                    }
                }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

// ---------------------------------------------------------------------------
// tiers and dispatch

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"thm-2good", "thm-21special", "1special", "combinatorial", "oracle-self"};
    return names;
}

std::vector<SuiteConfig> tier_configs(const std::string& suite, Tier tier) {
    const bool fast = tier == Tier::Fast;
    if (suite == "thm-2good")
        return fast ? std::vector<SuiteConfig>{{2, 2, 14}, {2, 3, 12}, {3, 2, 14}, {3, 3, 12}, {5, 2, 12}, {5, 3, 10}}
                    : std::vector<SuiteConfig>{{2, 2, 20}, {2, 3, 14}, {3, 2, 20}, {3, 3, 14}, {5, 2, 16}, {5, 3, 12}, {2, 4, 10}, {3, 4, 9}};
    if (suite == "thm-21special")
        return fast ? std::vector<SuiteConfig>{{2, 3, 10}, {3, 3, 10}, {5, 2, 10}}
                    : std::vector<SuiteConfig>{{2, 3, 12}, {3, 3, 12}, {5, 2, 14}, {5, 3, 10}, {3, 4, 8}};
    if (suite == "1special") {
        std::vector<SuiteConfig> out;
        for (int p : {2, 3, 5})
            for (int n = 1; n <= 4; ++n)
                out.push_back({p, n, fast ? 8 : 12});
        return out;
    }
    if (suite == "combinatorial")
        return {{2, 0, 30}, {3, 0, 30}, {5, 0, 30}, {7, 0, 30}};
    if (suite == "oracle-self")
        return fast ? std::vector<SuiteConfig>{{2, 2, 10}, {3, 3, 9}, {5, 2, 8}}
                    : std::vector<SuiteConfig>{{2, 2, 16}, {2, 3, 12}, {3, 3, 12}, {5, 3, 10}};
    throw Error(Errc::InvalidArgument, "unknown suite '" + suite + "'");
}

SuiteReport run_suite(const std::string& suite, const SuiteConfig& config, SimpleTable* table, unsigned threads) {
    if (suite == "combinatorial")
        return suite_combinatorial(config.p, config.rmax);
    if (!table)
        throw Error(Errc::InvalidArgument, "suite '" + suite + "' needs an oracle table");
    if (suite == "thm-2good")
        return suite_thm_2good(config.p, config.n, config.rmax, *table, threads);
    if (suite == "thm-21special")
        return suite_thm_21special(config.p, config.n, config.rmax, *table, threads);
    if (suite == "1special")
        return suite_1special(config.p, config.n, config.rmax, *table, threads);
    if (suite == "oracle-self")
        return suite_oracle_self(config.p, config.n, config.rmax, *table, threads);
    throw Error(Errc::InvalidArgument, "unknown suite '" + suite + "'");
}

} // namespace schurkit
