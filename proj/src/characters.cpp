#include "schurkit/characters.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "schurkit/error.hpp"

namespace schurkit {

Coeff checked_add(Coeff a, Coeff b) {
    Coeff out;
    if (__builtin_add_overflow(a, b, &out))
        throw Error(Errc::Overflow, "integer overflow in character arithmetic");
    return out;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff out;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error(Errc::Overflow, "integer overflow in character arithmetic");
    return out;
}

SymChar::SymChar(int n, int degree) : n_(n), degree_(degree) {
    if (n < 1)
        throw Error(Errc::InvalidArgument, "a character needs n >= 1");
}

SymChar SymChar::from_coeffs(int n, std::map<Partition, Coeff> coeffs) {
    std::erase_if(coeffs, [](const auto& kv) { return kv.second == 0; });
    const int degree = coeffs.empty() ? 0 : coeffs.begin()->first.degree();
    SymChar out(n, degree);
    for (const auto& [mu, c] : coeffs) {
        if (mu.degree() != degree)
            throw Error(Errc::DegreeMixed, mu.str() + " has degree " + std::to_string(mu.degree()) +
                                               ", expected " + std::to_string(degree));
        if (mu.length() > n)
            throw Error(Errc::LengthExceedsN, mu.str());
    }
    out.coeffs_ = std::move(coeffs);
    return out;
}

Coeff SymChar::operator[](const Partition& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? 0 : it->second;
}

SymChar& SymChar::add_scaled(const SymChar& other, Coeff c) {
    if (other.n_ != n_)
        throw Error(Errc::VariableCountMismatch, std::to_string(n_) + " vs " + std::to_string(other.n_));
    if (other.empty() || c == 0)
        return *this;
    if (empty())
        degree_ = other.degree_;
    else if (other.degree_ != degree_)
        throw Error(Errc::DegreeMixed, "adding characters of degrees " + std::to_string(degree_) + " and " +
                                           std::to_string(other.degree_));
    for (const auto& [mu, v] : other.coeffs_) {
        Coeff& slot = coeffs_[mu];
        slot = checked_add(slot, checked_mul(c, v));
        if (slot == 0)
            coeffs_.erase(mu);
    }
    return *this;
}

Coeff kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.degree() != mu.degree())
        return 0;
    const auto content = mu.vec();
    std::map<std::pair<std::vector<int>, int>, Coeff> memo;
    // Entries equal to k form a horizontal strip shape/ν of size content[k-1].
    std::function<Coeff(const std::vector<int>&, int)> count = [&](const std::vector<int>& shape, int k) -> Coeff {
        if (k == 0)
            return shape.empty() ? 1 : 0;
        if (static_cast<int>(shape.size()) > k)
            return 0;
        auto key = std::make_pair(shape, k);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        Coeff total = 0;
        std::vector<int> inner(shape.size());
        std::function<void(std::size_t, int)> strip = [&](std::size_t i, int left) {
            if (i == shape.size()) {
                if (left == 0) {
                    std::vector<int> trimmed = inner;
                    while (!trimmed.empty() && trimmed.back() == 0)
                        trimmed.pop_back();
                    total = checked_add(total, count(trimmed, k - 1));
                }
                return;
            }
            const int below = i + 1 < shape.size() ? shape[i + 1] : 0;
            for (int v = shape[i]; v >= below && shape[i] - v <= left; --v) {
                inner[i] = v;
                strip(i + 1, left - (shape[i] - v));
            }
        };
        strip(0, content[static_cast<std::size_t>(k - 1)]);
        memo.emplace(std::move(key), total);
        return total;
    };
    return count(lambda.vec(), static_cast<int>(content.size()));
}

SymChar schur_char(const Partition& lambda, int n) {
    if (lambda.length() > n)
        throw Error(Errc::LengthExceedsN, lambda.str() + " has more than " + std::to_string(n) + " parts");
    std::map<Partition, Coeff> coeffs;
    for (auto& mu : partitions_of(lambda.degree(), n))
        if (dominance_leq(mu, lambda) == Dominance::LessOrEqual)
            if (Coeff k = kostka(lambda, mu))
                coeffs.emplace(std::move(mu), k);
    SymChar out = SymChar::from_coeffs(n, std::move(coeffs));
    return out.empty() ? SymChar(n, lambda.degree()) : out;
}

SymChar power_char(PowerKind kind, int r, int n, std::optional<int> p) {
    if ((kind == PowerKind::Truncated) != p.has_value())
        throw Error(Errc::InvalidArgument, "a prime is required exactly for truncated powers");
    if (r < 0)
        throw Error(Errc::InvalidArgument, "negative degree");
    std::map<Partition, Coeff> coeffs;
    switch (kind) {
    case PowerKind::Complete:
        for (auto& mu : partitions_of(r, n))
            coeffs.emplace(std::move(mu), 1);
        break;
    case PowerKind::Truncated:
        for (auto& mu : partitions_of(r, n, *p - 1))
            coeffs.emplace(std::move(mu), 1);
        break;
    case PowerKind::Exterior:
        if (r <= n)
            coeffs.emplace(Partition::omega(r), 1);
        break;
    }
    SymChar out = SymChar::from_coeffs(n, std::move(coeffs));
    return out.empty() ? SymChar(n, r) : out;
}

namespace {

Partition sorted_weight(std::vector<int> w) {
    std::sort(w.rbegin(), w.rend());
    return Partition(std::move(w));
}

} // namespace

SymChar multiply(const SymChar& a, const SymChar& b) {
    if (a.n() != b.n())
        throw Error(Errc::VariableCountMismatch, std::to_string(a.n()) + " vs " + std::to_string(b.n()));
    const int n = a.n();
    const int degree = a.degree() + b.degree();
    if (a.empty() || b.empty())
        return SymChar(n, degree);

    // c(τ) = Σ_α a(α) b(τ - α) over weights α <= τ of degree deg(a); a weight's
    // multiplicity is the coefficient of its dominant rearrangement.
    std::map<Partition, Coeff> coeffs;
    std::vector<int> alpha(static_cast<std::size_t>(n));
    for (auto& tau : partitions_of(degree, n)) {
        Coeff total = 0;
        std::function<void(int, int)> walk = [&](int i, int left) {
            if (i == n - 1) {
                if (left > tau(n))
                    return;
                alpha[static_cast<std::size_t>(i)] = left;
                const Coeff ca = a[sorted_weight(alpha)];
                if (ca == 0)
                    return;
                std::vector<int> rest(static_cast<std::size_t>(n));
                for (int j = 0; j < n; ++j)
                    rest[static_cast<std::size_t>(j)] = tau(j + 1) - alpha[static_cast<std::size_t>(j)];
                const Coeff cb = b[sorted_weight(std::move(rest))];
                if (cb != 0)
                    total = checked_add(total, checked_mul(ca, cb));
                return;
            }
            for (int v = std::min(left, tau(i + 1)); v >= 0; --v) {
                alpha[static_cast<std::size_t>(i)] = v;
                walk(i + 1, left - v);
            }
        };
        walk(0, a.degree());
        if (total != 0)
            coeffs.emplace(std::move(tau), total);
    }
    SymChar out = SymChar::from_coeffs(n, std::move(coeffs));
    return out.empty() ? SymChar(n, degree) : out;
}

std::map<Partition, Coeff> decompose_schur(const SymChar& chi) {
    std::map<Partition, Coeff> out;
    SymChar residual = chi;
    while (!residual.empty()) {
        // The lexicographically greatest weight is dominance-maximal.
        const auto [top, c] = *residual.coeffs().rbegin();
        out.emplace(top, c);
        residual.add_scaled(schur_char(top, chi.n()), -c);
    }
    return out;
}

bool is_deficient(const SymChar& chi, int a, int b) {
    for (const auto& [lambda, c] : decompose_schur(chi))
        if (c != 0 && is_bounded(lambda, a, b))
            return false;
    return true;
}

SymChar frobenius_twist(const SymChar& chi, int p) {
    std::map<Partition, Coeff> coeffs;
    for (const auto& [mu, c] : chi.coeffs())
        coeffs.emplace(scale(mu, p), c);
    SymChar out = SymChar::from_coeffs(chi.n(), std::move(coeffs));
    return out.empty() ? SymChar(chi.n(), chi.degree() * p) : out;
}

Coeff orbit_size(const Partition& mu, int n) {
    std::vector<int> w(mu.parts().begin(), mu.parts().end());
    w.resize(static_cast<std::size_t>(n), 0);
    // n! / Π (multiplicity)!, built as a product of binomials.
    Coeff out = 1;
    int placed = 0;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        for (std::size_t t = 1; t <= j - i; ++t) {
            ++placed;
            out = checked_mul(out, placed);
            out /= static_cast<Coeff>(t);
        }
        i = j;
    }
    return out;
}

Coeff dimension(const SymChar& chi) {
    Coeff total = 0;
    for (const auto& [mu, c] : chi.coeffs())
        total = checked_add(total, checked_mul(c, orbit_size(mu, chi.n())));
    return total;
}

SymChar parse_char_expr(const std::string& expr, int n) {
    auto fail = [&](const std::string& why) -> SymChar {
        throw Error(Errc::ParseError, "cannot parse character expression '" + expr + "': " + why);
    };
    std::optional<SymChar> product;
    std::size_t start = 0;
    while (start <= expr.size()) {
        std::size_t stop = expr.find('*', start);
        if (stop == std::string::npos)
            stop = expr.size();
        std::string atom = expr.substr(start, stop - start);
        std::erase_if(atom, [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
        if (atom.empty())
            return fail("empty factor");

        auto number = [&](const std::string& digits) -> int {
            if (digits.empty() || digits.size() > 6 ||
                !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
                fail("bad integer '" + digits + "'");
            return std::stoi(digits);
        };

        SymChar factor;
        if (atom.rfind("sbar", 0) == 0) {
            const auto at = atom.find('@');
            if (at == std::string::npos)
                return fail("sbar needs @p");
            const int p = number(atom.substr(at + 1));
            if (p < 2)
                return fail("p must be at least 2");
            factor = power_char(PowerKind::Truncated, number(atom.substr(4, at - 4)), n, p);
        } else if (atom[0] == 'h') {
            factor = power_char(PowerKind::Complete, number(atom.substr(1)), n);
        } else if (atom[0] == 'e') {
            factor = power_char(PowerKind::Exterior, number(atom.substr(1)), n);
        } else if (atom[0] == 's' && atom.size() > 1 && atom[1] == '[') {
            factor = schur_char(parse_partition(atom.substr(1)), n);
        } else {
            return fail("unknown atom '" + atom + "'");
        }
        product = product ? multiply(*product, factor) : factor;
        start = stop + 1;
    }
    return *product;
}

} // namespace schurkit
