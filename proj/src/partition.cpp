#include "schurkit/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "schurkit/error.hpp"

namespace schurkit {

std::string_view to_string(Errc code) {
    switch (code) {
    case Errc::InputNotWeaklyDecreasing: return "InputNotWeaklyDecreasing";
    case Errc::NegativePart: return "NegativePart";
    case Errc::NotRemovable: return "NotRemovable";
    case Errc::FirstPartExceedsBound: return "FirstPartExceedsBound";
    case Errc::LengthExceedsN: return "LengthExceedsN";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NotRestricted: return "NotRestricted";
    case Errc::PrimeTooSmall: return "PrimeTooSmall";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NoCriticalAncestor: return "NoCriticalAncestor";
    case Errc::VariableCountMismatch: return "VariableCountMismatch";
    case Errc::DegreeMixed: return "DegreeMixed";
    case Errc::Overflow: return "Overflow";
    case Errc::ParseError: return "ParseError";
    case Errc::ResourceBudgetExceeded: return "ResourceBudgetExceeded";
    case Errc::NegativeResidual: return "NegativeResidual";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw Error(Errc::NegativePart, "negative part in " + str());
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw Error(Errc::InputNotWeaklyDecreasing, str());
    }
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
}

Partition Partition::omega(int s) {
    if (s < 0)
        throw Error(Errc::InvalidArgument, "omega index must be nonnegative");
    return Partition(std::vector<int>(static_cast<std::size_t>(s), 1));
}

int Partition::degree() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ']';
    return os.str();
}

Partition transpose(const Partition& lambda) {
    std::vector<int> out(static_cast<std::size_t>(lambda.first()), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

Partition add(const Partition& lambda, const Partition& mu) {
    const int len = std::max(lambda.length(), mu.length());
    std::vector<int> out(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i)
        out[static_cast<std::size_t>(i - 1)] = lambda(i) + mu(i);
    return Partition(std::move(out));
}

Partition scale(const Partition& lambda, int k) {
    std::vector<int> out(lambda.parts().begin(), lambda.parts().end());
    for (int& x : out)
        x *= k;
    return Partition(std::move(out));
}

std::optional<Partition> subtract(const Partition& lambda, const Partition& mu) {
    const int len = std::max(lambda.length(), mu.length());
    std::vector<int> out(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i) {
        const int v = lambda(i) - mu(i);
        if (v < 0 || (i > 1 && v > out[static_cast<std::size_t>(i - 2)]))
            return std::nullopt;
        out[static_cast<std::size_t>(i - 1)] = v;
    }
    return Partition(std::move(out));
}

std::optional<Partition> subtract_omega(const Partition& lambda, int s) {
    if (s < 0 || s > lambda.length())
        return std::nullopt;
    if (s > 0 && lambda(s) - 1 < lambda(s + 1))
        return std::nullopt;
    std::vector<int> out = lambda.vec();
    for (int i = 0; i < s; ++i)
        --out[static_cast<std::size_t>(i)];
    return Partition(std::move(out));
}

Partition rows(const Partition& lambda, int from, int to) {
    std::vector<int> out;
    for (int i = std::max(from, 1); i <= to; ++i)
        out.push_back(lambda(i));
    return Partition(std::move(out));
}

bool is_restricted(const Partition& lambda, int p) {
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda(i) - lambda(i + 1) > p - 1)
            return false;
    return true;
}

bool is_regular(const Partition& lambda, int p) {
    auto parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        if (static_cast<int>(j - i) >= p)
            return false;
        i = j;
    }
    return true;
}

bool is_bounded(const Partition& lambda, int a, int b) { return lambda(a + 1) <= b; }

Partition PAdicDigits::recombine() const {
    Partition total;
    int weight = 1;
    for (const auto& d : digits) {
        total = add(total, scale(d, weight));
        weight *= prime;
    }
    return total;
}

PAdicDigits p_adic_digits(const Partition& lambda, int p) {
    if (p < 2)
        throw Error(Errc::PrimeTooSmall, "p must be at least 2");
    // Expand each successive difference λ_i - λ_{i+1} in base p; digit j is
    // the partition whose differences are the j-th base-p digits.
    std::vector<int> diffs(static_cast<std::size_t>(lambda.length()));
    for (int i = 1; i <= lambda.length(); ++i)
        diffs[static_cast<std::size_t>(i - 1)] = lambda(i) - lambda(i + 1);

    PAdicDigits out;
    out.prime = p;
    while (std::any_of(diffs.begin(), diffs.end(), [](int d) { return d > 0; })) {
        std::vector<int> parts(diffs.size());
        int running = 0;
        for (std::size_t i = diffs.size(); i-- > 0;) {
            running += diffs[i] % p;
            parts[i] = running;
            diffs[i] /= p;
        }
        out.digits.emplace_back(std::move(parts));
    }
    return out;
}

std::pair<Partition, Partition> digit_split(const Partition& lambda, int p) {
    auto digits = p_adic_digits(lambda, p);
    if (digits.digits.empty())
        return {Partition{}, Partition{}};
    Partition low = digits.digits.front();
    digits.digits.erase(digits.digits.begin());
    return {low, digits.recombine()};
}

Partition p_core(const Partition& lambda, int p) {
    if (p < 2)
        throw Error(Errc::PrimeTooSmall, "p must be at least 2");
    // Beta-numbers β_i = λ_i + (L - i) on a p-runner abacus; slide every bead
    // as far up its runner as it goes.
    const int len = lambda.length();
    std::vector<int> beads_on_runner(static_cast<std::size_t>(p), 0);
    for (int i = 1; i <= len; ++i)
        ++beads_on_runner[static_cast<std::size_t>((lambda(i) + len - i) % p)];
    std::vector<int> beta;
    for (int runner = 0; runner < p; ++runner)
        for (int k = 0; k < beads_on_runner[static_cast<std::size_t>(runner)]; ++k)
            beta.push_back(runner + k * p);
    std::sort(beta.rbegin(), beta.rend());
    std::vector<int> parts(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i)
        parts[static_cast<std::size_t>(i - 1)] = beta[static_cast<std::size_t>(i - 1)] - (len - i);
    return Partition(std::move(parts));
}

int residue(int row, int col, int p) {
    const int r = (row - col) % p;
    return r < 0 ? r + p : r;
}

std::vector<NodeInfo> nodes(const Partition& lambda, int p) {
    if (p < 2)
        throw Error(Errc::PrimeTooSmall, "p must be at least 2");
    std::vector<NodeInfo> out;
    const int len = lambda.length();
    for (int i = 1; i <= len + 1; ++i) {
        if (i <= len && (i == len || lambda(i) > lambda(i + 1)))
            out.push_back({i, lambda(i), NodeKind::Removable, residue(i, lambda(i), p)});
        if (i == 1 || lambda(i - 1) > lambda(i))
            out.push_back({i, lambda(i) + 1, NodeKind::Addable, residue(i, lambda(i) + 1, p)});
    }
    return out;
}

std::vector<NodeInfo> suitable_nodes(const Partition& lambda, int p) {
    const auto all = nodes(lambda, p);
    std::vector<NodeInfo> out;
    for (const auto& r : all) {
        if (r.kind != NodeKind::Removable)
            continue;
        const bool clash = std::any_of(all.begin(), all.end(), [&](const NodeInfo& a) {
            return a.kind == NodeKind::Addable && a.row > r.row && a.residue == r.residue;
        });
        if (!clash)
            out.push_back(r);
    }
    return out;
}

Partition remove_node(const Partition& lambda, const NodeInfo& node) {
    const int i = node.row;
    if (i < 1 || i > lambda.length() || node.col != lambda(i) || lambda(i) <= lambda(i + 1))
        throw Error(Errc::NotRemovable, "(" + std::to_string(node.row) + "," + std::to_string(node.col) +
                                            ") in " + lambda.str());
    std::vector<int> parts = lambda.vec();
    --parts[static_cast<std::size_t>(i - 1)];
    return Partition(std::move(parts));
}

Partition dagger(const Partition& lambda, int a, int b, int p, int n) {
    const int c = a * (p - 1) + b;
    if (lambda.length() > n)
        throw Error(Errc::LengthExceedsN, lambda.str() + " has more than " + std::to_string(n) + " parts");
    if (lambda.first() > c)
        throw Error(Errc::FirstPartExceedsBound, lambda.str() + " exceeds " + std::to_string(c));
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        parts[static_cast<std::size_t>(i - 1)] = c - lambda(n + 1 - i);
    return Partition(std::move(parts));
}

Dominance dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.degree() != lambda.degree())
        throw Error(Errc::DegreeMismatch, mu.str() + " vs " + lambda.str());
    bool leq = true, geq = true;
    int sm = 0, sl = 0;
    const int len = std::max(mu.length(), lambda.length());
    for (int k = 1; k <= len; ++k) {
        sm += mu(k);
        sl += lambda(k);
        leq = leq && sm <= sl;
        geq = geq && sm >= sl;
    }
    if (leq)
        return Dominance::LessOrEqual;
    return geq ? Dominance::Greater : Dominance::Incomparable;
}

namespace {

void generate(int remaining, int max_part, int max_len, std::vector<int>& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    if (max_len == 0)
        return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        generate(remaining - part, part, max_len - 1, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int r, int max_len, int max_part) {
    std::vector<Partition> out;
    if (r < 0)
        return out;
    std::vector<int> current;
    generate(r, max_part < 0 ? r : max_part, max_len < 0 ? r : max_len, current, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_degree, int max_len, int max_part) {
    std::vector<Partition> out;
    for (int r = 0; r <= max_degree; ++r) {
        auto batch = partitions_of(r, max_len, max_part);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto fail = [&](const std::string& why) -> Partition {
        throw Error(Errc::ParseError, "cannot parse partition '" + text + "': " + why);
    };
    skip();
    if (pos >= text.size() || text[pos] != '[')
        return fail("expected '['");
    ++pos;
    std::vector<int> parts;
    skip();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            skip();
            bool negative = false;
            if (pos < text.size() && text[pos] == '-') {
                negative = true;
                ++pos;
            }
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                return fail("expected an integer");
            long value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos++] - '0');
                if (value > 1'000'000)
                    return fail("part too large");
            }
            parts.push_back(static_cast<int>(negative ? -value : value));
            skip();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
                break;
            }
            return fail("expected ',' or ']'");
        }
    }
    skip();
    if (pos != text.size())
        return fail("trailing characters");
    return Partition(std::move(parts));
}

} // namespace schurkit
