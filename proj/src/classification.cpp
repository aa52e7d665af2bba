#include "schurkit/classification.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "schurkit/error.hpp"

namespace schurkit {

namespace {

void require_prime(int p) {
    if (p < 2)
        throw Error(Errc::PrimeTooSmall, "p must be at least 2");
}

// (p-1)^k a with 0 <= a < p-1 and k >= min_k.
bool is_pm1_run(const Partition& lambda, int p, int min_k) {
    int k = 0;
    while (k < lambda.length() && lambda(k + 1) == p - 1)
        ++k;
    if (k < min_k)
        return false;
    const int rest = lambda.length() - k;
    return rest == 0 || (rest == 1 && lambda(k + 1) < p - 1);
}

// The literal second family of restricted 2-special partitions:
// (2(p-1))^j (p-1+a) (p-1)^k b.
bool is_two_row_run_form(const Partition& lambda, int p) {
    const int len = lambda.length();
    int j = 0;
    while (j < len && lambda(j + 1) == 2 * (p - 1))
        ++j;
    const int a = lambda(j + 1) - (p - 1);
    if (a < 0 || a > p - 2)
        return false;
    int k = 0;
    while (lambda(j + 2 + k) == p - 1 && j + 2 + k <= len)
        ++k;
    const int b = lambda(j + 2 + k);
    if (b > p - 2 || j + 2 + k < len)
        return false;
    return k >= 1 || a <= b;
}

bool matches_beginning_plus_omega(const Partition& lambda, int p, int min_r) {
    for (int r = min_r; r <= lambda.length(); ++r)
        if (auto mu = subtract_omega(lambda, r); mu && is_beginning_term(*mu, p))
            return true;
    return false;
}

} // namespace

Partition StandardParse::recombine(int p) const {
    Partition total;
    for (const auto& block : blocks) {
        int weight = 1;
        for (int i = 0; i < block.shift; ++i)
            weight *= p;
        total = add(total, scale(block.primitive, weight));
    }
    return total;
}

bool is_1special(const Partition& lambda, int p) {
    require_prime(p);
    return is_pm1_run(lambda, p, 0);
}

bool is_beginning_term(const Partition& lambda, int p) {
    require_prime(p);
    const int len = lambda.length();
    for (int i = 1; i <= len; ++i) {
        if (lambda(i) > p - 2)
            return false;
        if (i <= len - 2 && lambda(i) != p - 2)
            return false;
    }
    return true;
}

bool is_2special(const Partition& lambda, int p) {
    require_prime(p);
    if (is_restricted(lambda, p))
        return is_beginning_term(lambda, p) || is_two_row_run_form(lambda, p);
    auto [low, high] = digit_split(lambda, p);
    return is_beginning_term(low, p) && high.length() >= 1 && high == Partition::omega(high.length());
}

std::optional<std::pair<Partition, int>> twenty_one_special_witness(const Partition& lambda, int p) {
    require_prime(p);
    if (lambda.first() > 2 * p - 1)
        return std::nullopt;
    for (int s = 0; s <= lambda.length(); ++s)
        if (auto mu = subtract_omega(lambda, s); mu && is_2special(*mu, p))
            return std::make_pair(*mu, s);
    return std::nullopt;
}

bool is_21special(const Partition& lambda, int p) { return twenty_one_special_witness(lambda, p).has_value(); }

bool is_21good_piecewise(const Partition& lambda, int p) {
    if (p <= 2)
        throw Error(Errc::PrimeTooSmall, "the piecewise description needs p > 2");
    if (!is_restricted(lambda, p))
        throw Error(Errc::NotRestricted, lambda.str());
    const int first = lambda.first();
    const int len = lambda.length();

    if (first <= p - 1) {
        // (p-2)^k a b + ω_r, p-2 > a >= b.
        return matches_beginning_plus_omega(lambda, p, 0);
    }
    if (first == p) {
        // (p-1)^k a + ω_r, k >= 1, r >= 1.
        for (int r = 1; r <= len; ++r)
            if (auto mu = subtract_omega(lambda, r); mu && is_pm1_run(*mu, p, 1))
                return true;
        return false;
    }
    if (first < 2 * p - 2) {
        // (p-1)^k a + (b) + ω_r, k >= 1, 0 < b < p-1, r > 0 when b = 1.
        for (int r = 0; r <= len; ++r) {
            auto mu = subtract_omega(lambda, r);
            if (!mu)
                continue;
            for (int b = 1; b < p - 1; ++b) {
                if (b == 1 && r == 0)
                    continue;
                if (auto nu = subtract(*mu, Partition{b}); nu && is_pm1_run(*nu, p, 1))
                    return true;
            }
        }
        return false;
    }
    if (first == 2 * p - 2) {
        // (p-1)^k a + (p-1)^m b with k, m >= 1 ...
        for (int m = 1; m <= len; ++m) {
            for (int b = 0; b < p - 1; ++b) {
                std::vector<int> run(static_cast<std::size_t>(m), p - 1);
                run.push_back(b);
                if (auto nu = subtract(lambda, Partition(run)); nu && is_pm1_run(*nu, p, 1))
                    return true;
            }
        }
        // ... or (p-1)^k a + (p-2) + ω_r with k >= 1, r >= 1.
        for (int r = 1; r <= len; ++r) {
            auto mu = subtract_omega(lambda, r);
            if (!mu)
                continue;
            if (auto nu = subtract(*mu, Partition{p - 2}); nu && is_pm1_run(*nu, p, 1))
                return true;
        }
        return false;
    }
    if (first == 2 * p - 1) {
        // (p-1)^k a + (p-1)^m b + ω_r with k, m >= 1.
        for (int r = 0; r <= len; ++r) {
            auto mu = subtract_omega(lambda, r);
            if (!mu)
                continue;
            for (int m = 1; m <= len; ++m) {
                for (int b = 0; b < p - 1; ++b) {
                    std::vector<int> run(static_cast<std::size_t>(m), p - 1);
                    run.push_back(b);
                    if (auto nu = subtract(*mu, Partition(run)); nu && is_pm1_run(*nu, p, 1))
                        return true;
                }
            }
        }
        return false;
    }
    return false;
}

TermKind classify_term(const Partition& delta, int p) {
    require_prime(p);
    TermKind kind;
    kind.beginning = is_beginning_term(delta, p);
    kind.middle = !kind.beginning && matches_beginning_plus_omega(delta, p, 1);
    const bool restricted = is_restricted(delta, p);
    const bool special = is_2special(delta, p);
    kind.restricted_two_special = restricted && special;
    if (restricted && !special) {
        for (int r = 1; r <= delta.length() && !kind.end; ++r)
            if (auto mu = subtract_omega(delta, r); mu && is_2special(*mu, p))
                kind.end = true;
    }
    return kind;
}

std::optional<int> primitive_index(const Partition& lambda, int p) {
    require_prime(p);
    if (is_restricted(lambda, p) && is_2special(lambda, p))
        return 0;
    const auto digits = p_adic_digits(lambda, p).digits;
    const int m = static_cast<int>(digits.size()) - 1;
    if (m < 1)
        return std::nullopt;
    if (!classify_term(digits.front(), p).beginning)
        return std::nullopt;
    for (int i = 1; i < m; ++i)
        if (!classify_term(digits[static_cast<std::size_t>(i)], p).middle)
            return std::nullopt;
    if (!classify_term(digits.back(), p).end)
        return std::nullopt;
    return m;
}

std::vector<StandardParse> standard_parses(const Partition& lambda, int p) {
    require_prime(p);
    const auto digits = p_adic_digits(lambda, p).digits;
    const int count = static_cast<int>(digits.size());
    std::vector<TermKind> kinds;
    kinds.reserve(digits.size());
    for (const auto& d : digits)
        kinds.push_back(classify_term(d, p));

    // tails[h] = every parse of the digits h..count-1, built right to left.
    std::vector<std::vector<std::vector<ParseBlock>>> tails(static_cast<std::size_t>(count + 1));
    tails[static_cast<std::size_t>(count)].emplace_back();
    for (int h = count - 1; h >= 0; --h) {
        auto& here = tails[static_cast<std::size_t>(h)];
        auto extend = [&](ParseBlock block, int next) {
            for (const auto& tail : tails[static_cast<std::size_t>(next)]) {
                std::vector<ParseBlock> parse{block};
                parse.insert(parse.end(), tail.begin(), tail.end());
                here.push_back(std::move(parse));
            }
        };
        const auto& kind = kinds[static_cast<std::size_t>(h)];
        if (kind.restricted_two_special)
            extend({digits[static_cast<std::size_t>(h)], 0, h}, h + 1);
        if (!kind.beginning)
            continue;
        for (int m = 1; h + m < count; ++m) {
            const auto& last = kinds[static_cast<std::size_t>(h + m)];
            if (last.end) {
                PAdicDigits chunk{{digits.begin() + h, digits.begin() + h + m + 1}, p};
                extend({chunk.recombine(), m, h}, h + m + 1);
            }
            if (!last.middle)
                break;
        }
    }

    std::vector<StandardParse> out;
    for (auto& blocks : tails.front())
        out.push_back({std::move(blocks)});
    return out;
}

bool is_2good(const Partition& lambda, int p) { return !standard_parses(lambda, p).empty(); }

bool specht_d_lower(const Partition& lambda, int p) {
    require_prime(p);
    if (!is_restricted(lambda, p))
        throw Error(Errc::NotRestricted, lambda.str());
    return is_21special(lambda, p);
}

bool specht_d_upper(const Partition& lambda, int p) {
    require_prime(p);
    if (!is_regular(lambda, p))
        throw Error(Errc::NotRegular, lambda.str());
    return specht_d_lower(transpose(lambda), p);
}

namespace {

void require_gl3(const Partition& lambda) {
    if (lambda.length() > 3)
        throw Error(Errc::LengthExceedsN, lambda.str() + " has more than 3 parts");
}

} // namespace

bool is_critical_n3(const Partition& lambda, int p) {
    require_gl3(lambda);
    return is_2good(lambda, p);
}

int divisibility_index_n3(const Partition& lambda, int p) {
    require_gl3(lambda);
    const Partition det = Partition::omega(3);
    Partition current = lambda;
    for (int j = 0; j <= lambda(3); ++j) {
        if (is_critical_n3(current, p))
            return j;
        if (j < lambda(3))
            current = *subtract(current, det);
    }
    throw Error(Errc::NoCriticalAncestor, lambda.str() + " at p=" + std::to_string(p));
}

bool g1_inj_n3(const Partition& lambda, int p) {
    require_gl3(lambda);
    const auto [low, high] = digit_split(lambda, p);
    const int head = low.first();
    if (head >= 2 * p - 2)
        return true;
    if (head >= p - 2)
        return !is_critical_n3(high, p);
    if (is_critical_n3(high, p))
        return false;
    // No partition λ̄ - ω_3 exists when λ̄_3 = 0; that clause then holds.
    const auto shifted = subtract(high, Partition::omega(3));
    return !shifted || !is_critical_n3(*shifted, p);
}

} // namespace schurkit
