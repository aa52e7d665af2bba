#pragma once

// Brute-force reference implementations used only by the tests. None of them
// shares code paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "schurkit/characters.hpp"
#include "schurkit/partition.hpp"

namespace oracle {

using schurkit::Coeff;
using schurkit::Partition;
using schurkit::SymChar;

inline std::vector<int> padded(const Partition& lambda, std::size_t len) {
    std::vector<int> v(lambda.parts().begin(), lambda.parts().end());
    v.resize(std::max(len, v.size()), 0);
    return v;
}

inline Partition from_vector(std::vector<int> v) {
    while (!v.empty() && v.back() == 0)
        v.pop_back();
    return Partition(std::move(v));
}

// Rim cells ordered from the top-right end of the rim to the bottom-left end.
inline std::vector<std::pair<int, int>> rim(const std::vector<int>& rows) {
    std::vector<std::pair<int, int>> out;
    const int len = static_cast<int>(rows.size());
    for (int i = 0; i < len; ++i) {
        const int next = i + 1 < len ? rows[static_cast<std::size_t>(i + 1)] : 0;
        // Cells (i, j) with (i+1, j+1) outside the diagram, right to left.
        for (int j = rows[static_cast<std::size_t>(i)] - 1; j >= std::max(0, next - 1); --j)
            out.emplace_back(i, j);
    }
    return out;
}

// Every partition obtained from λ by deleting one rim p-hook, found by
// trying each contiguous run of p rim cells.
inline std::vector<Partition> rim_hook_children(const Partition& lambda, int p) {
    const std::vector<int> rows = padded(lambda, 0);
    const auto cells = rim(rows);
    std::set<Partition> out;
    for (std::size_t start = 0; start + static_cast<std::size_t>(p) <= cells.size(); ++start) {
        std::vector<int> next = rows;
        for (std::size_t t = start; t < start + static_cast<std::size_t>(p); ++t)
            --next[static_cast<std::size_t>(cells[t].first)];
        // The run must be contiguous along the rim as cells.
        bool connected = true;
        for (std::size_t t = start + 1; t < start + static_cast<std::size_t>(p); ++t) {
            const auto [r0, c0] = cells[t - 1];
            const auto [r1, c1] = cells[t];
            connected = connected && ((r1 == r0 && c1 == c0 - 1) || (r1 == r0 + 1 && c1 == c0));
        }
        if (!connected || !std::is_sorted(next.rbegin(), next.rend()) || next.back() < 0)
            continue;
        // Removed cells must be exactly the row ends.
        bool valid = true;
        std::map<int, int> removed;
        for (std::size_t t = start; t < start + static_cast<std::size_t>(p); ++t)
            ++removed[cells[t].first];
        for (const auto& [r, count] : removed) {
            int rightmost = -1;
            for (std::size_t t = start; t < start + static_cast<std::size_t>(p); ++t)
                if (cells[t].first == r)
                    rightmost = std::max(rightmost, cells[t].second);
            valid = valid && rightmost == rows[static_cast<std::size_t>(r)] - 1 && count <= rows[static_cast<std::size_t>(r)];
        }
        if (valid)
            out.insert(from_vector(next));
    }
    return {out.begin(), out.end()};
}

/// Core reached by removing random rim hooks until none is left.
inline Partition random_core(Partition lambda, int p, std::mt19937& rng) {
    while (true) {
        const auto children = rim_hook_children(lambda, p);
        if (children.empty())
            return lambda;
        std::uniform_int_distribution<std::size_t> pick(0, children.size() - 1);
        lambda = children[pick(rng)];
    }
}

/// Semistandard tableaux of shape λ and content μ, filled cell by cell.
inline Coeff count_ssyt(const Partition& lambda, const Partition& mu) {
    if (lambda.degree() != mu.degree())
        return 0;
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda(i + 1); ++j)
            cells.emplace_back(i, j);
    std::vector<std::vector<int>> t(static_cast<std::size_t>(lambda.length()));
    for (int i = 0; i < lambda.length(); ++i)
        t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lambda(i + 1)), 0);
    std::vector<int> left(mu.parts().begin(), mu.parts().end());
    Coeff count = 0;
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        const auto [i, j] = cells[k];
        for (int v = 1; v <= static_cast<int>(left.size()); ++v) {
            if (left[static_cast<std::size_t>(v - 1)] == 0)
                continue;
            if (j > 0 && t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] > v)
                continue;
            if (i > 0 && t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] >= v)
                continue;
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            --left[static_cast<std::size_t>(v - 1)];
            fill(k + 1);
            ++left[static_cast<std::size_t>(v - 1)];
        }
    };
    fill(0);
    return count;
}

/// Full polynomial in n variables: exponent vector -> coefficient.
using Polynomial = std::map<std::vector<int>, Coeff>;

inline Polynomial expand(const SymChar& chi) {
    Polynomial out;
    for (const auto& [mu, c] : chi.coeffs()) {
        std::vector<int> w = padded(mu, static_cast<std::size_t>(chi.n()));
        std::sort(w.begin(), w.end());
        do {
            out[w] += c;
        } while (std::next_permutation(w.begin(), w.end()));
    }
    return out;
}

inline Polynomial times(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            std::vector<int> w(wa.size());
            for (std::size_t i = 0; i < w.size(); ++i)
                w[i] = wa[i] + wb[i];
            out[w] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

/// Dominant part of a symmetric polynomial.
inline std::map<Partition, Coeff> dominant(const Polynomial& f) {
    std::map<Partition, Coeff> out;
    for (const auto& [w, c] : f)
        if (std::is_sorted(w.rbegin(), w.rend()) && c != 0)
            out.emplace(from_vector(w), c);
    return out;
}

/// Restricted digit sequences recombining to λ, by brute force over all
/// sequences of restricted partitions contained in λ.
inline int count_restricted_expansions(const Partition& lambda, int p) {
    if (lambda.is_zero())
        return 1;
    int total = 0;
    const int len = lambda.length();
    for (const auto& d : schurkit::partitions_up_to(lambda.degree(), len, lambda.first())) {
        if (!schurkit::is_restricted(d, p))
            continue;
        std::vector<int> rest(static_cast<std::size_t>(len));
        bool ok = true;
        for (int i = 1; i <= len; ++i) {
            const int diff = lambda(i) - d(i);
            ok = ok && diff >= 0 && diff % p == 0;
            rest[static_cast<std::size_t>(i - 1)] = diff / p;
        }
        if (!ok || !std::is_sorted(rest.rbegin(), rest.rend()))
            continue;
        total += count_restricted_expansions(from_vector(rest), p);
    }
    return total;
}

// Generated classification sets, independent of the pattern matchers.

inline std::vector<int> repeat(int value, int k) { return std::vector<int>(static_cast<std::size_t>(std::max(0, k)), value); }

inline std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline void insert_if_partition(std::set<Partition>& out, std::vector<int> v, int max_degree) {
    if (!std::is_sorted(v.rbegin(), v.rend()))
        return;
    int deg = 0;
    for (int x : v)
        deg += x;
    if (deg <= max_degree && (v.empty() || v.back() >= 0))
        out.insert(from_vector(std::move(v)));
}

/// (p-1)^k a with 0 <= a < p-1.
inline std::set<Partition> one_special_set(int p, int max_degree) {
    std::set<Partition> out;
    for (int k = 0; k * (p - 1) <= max_degree; ++k)
        for (int a = 0; a < p - 1; ++a)
            insert_if_partition(out, concat(repeat(p - 1, k), {a}), max_degree);
    return out;
}

/// (p-2)^k a b with p-2 > a >= b >= 0.
inline std::set<Partition> strict_beginning_set(int p, int max_degree) {
    std::set<Partition> out;
    for (int k = 0; k * std::max(1, p - 2) <= max_degree + 1; ++k)
        for (int a = 0; a < p - 2; ++a)
            for (int b = 0; b <= a; ++b)
                insert_if_partition(out, concat(repeat(p - 2, k), {a, b}), max_degree);
    if (p == 2)
        out.insert(Partition{});
    return out;
}

/// 2-special partitions of degree <= max_degree, generated from the
/// restricted forms and the non-restricted form λ⁰ + pω_s.
inline std::set<Partition> two_special_set(int p, int max_degree) {
    std::set<Partition> restricted;
    // Sums of two 1-special partitions, which include the (2(p-1))^j ... form.
    const auto ones = one_special_set(p, max_degree);
    for (const auto& x : ones)
        for (const auto& y : ones)
            if (x.degree() + y.degree() <= max_degree) {
                const Partition s = schurkit::add(x, y);
                if (schurkit::is_restricted(s, p))
                    restricted.insert(s);
            }
    for (const auto& b : strict_beginning_set(p, max_degree))
        restricted.insert(b);
    std::set<Partition> out = restricted;
    for (const auto& low : strict_beginning_set(p, max_degree))
        for (int s = 1; low.degree() + p * s <= max_degree; ++s)
            out.insert(schurkit::add(low, schurkit::scale(Partition::omega(s), p)));
    return out;
}

/// Simple GL_2 characters by the tensor product of twisted restricted
/// Weyl characters; for n = 2 a restricted Weyl module is simple.
inline SymChar gl2_simple(const Partition& lambda, int p) {
    SymChar chi = SymChar::from_coeffs(2, {{Partition{}, 1}});
    Partition rest = lambda;
    int scale = 1;
    while (!rest.is_zero()) {
        const int a = rest(1), b = rest(2);
        const int d1 = (a - b) % p;
        const int d2 = b % p;
        const Partition digit = from_vector({d1 + d2, d2});
        chi = schurkit::multiply(chi, schurkit::frobenius_twist(schurkit::schur_char(digit, 2), scale));
        rest = from_vector({(a - d1 - d2) / p, (b - d2) / p});
        scale *= p;
    }
    return chi;
}

} // namespace oracle
