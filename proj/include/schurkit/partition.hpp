#pragma once

// Partitions and the diagram calculus shared by every other module.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace schurkit {

/// A weakly decreasing sequence of positive integers, padded by zeros on the
/// right. The empty sequence is the zero partition.
class Partition {
  public:
    Partition() = default;

    /// Strips trailing zeros. Throws Errc::NegativePart or
    /// Errc::InputNotWeaklyDecreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// ω_s = (1^s); ω_0 = 0.
    static Partition omega(int s);

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }

    /// 1-based part λ_i, zero beyond the length.
    int operator()(int i) const noexcept {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    int first() const noexcept { return (*this)(1); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int degree() const noexcept;
    bool is_zero() const noexcept { return parts_.empty(); }

    std::string str() const;

    // Lexicographic on parts; 0 < (1) < (1,1) < (2).
    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

  private:
    std::vector<int> parts_;
};

enum class NodeKind { Removable, Addable };

struct NodeInfo {
    int row = 0; // 1-based
    int col = 0; // 1-based
    NodeKind kind = NodeKind::Removable;
    int residue = 0; // (row - col) mod p, in [0, p)

    friend bool operator==(const NodeInfo&, const NodeInfo&) = default;
};

/// Expansion λ = Σ p^i digits[i] into restricted partitions.
struct PAdicDigits {
    std::vector<Partition> digits;
    int prime = 2;

    Partition recombine() const;
};

enum class Dominance { LessOrEqual, Greater, Incomparable };

Partition transpose(const Partition& lambda);
Partition add(const Partition& lambda, const Partition& mu);
/// k·λ, entrywise.
Partition scale(const Partition& lambda, int k);
/// λ - μ entrywise if the result is a partition.
std::optional<Partition> subtract(const Partition& lambda, const Partition& mu);
/// λ - ω_s, when that is still a partition.
std::optional<Partition> subtract_omega(const Partition& lambda, int s);
/// (λ_from, ..., λ_to), 1-based inclusive.
Partition rows(const Partition& lambda, int from, int to);

bool is_restricted(const Partition& lambda, int p);
/// No part value repeated p or more times.
bool is_regular(const Partition& lambda, int p);
bool is_bounded(const Partition& lambda, int a, int b);

PAdicDigits p_adic_digits(const Partition& lambda, int p);
/// λ = λ⁰ + p·λ̄ with λ⁰ restricted; returns {λ⁰, λ̄}.
std::pair<Partition, Partition> digit_split(const Partition& lambda, int p);

Partition p_core(const Partition& lambda, int p);

std::vector<NodeInfo> nodes(const Partition& lambda, int p);
std::vector<NodeInfo> suitable_nodes(const Partition& lambda, int p);
int residue(int row, int col, int p);
Partition remove_node(const Partition& lambda, const NodeInfo& node);

/// The complement (c - λ_n, ..., c - λ_1) with c = a(p-1) + b.
Partition dagger(const Partition& lambda, int a, int b, int p, int n);

/// Compares μ against λ in the dominance order. Throws Errc::DegreeMismatch.
Dominance dominance_leq(const Partition& mu, const Partition& lambda);

/// All partitions of r with at most max_len parts, each at most max_part,
/// in decreasing lexicographic order. Negative bounds mean unbounded.
std::vector<Partition> partitions_of(int r, int max_len = -1, int max_part = -1);
/// Partitions of every degree 0..max_degree, ascending degree.
std::vector<Partition> partitions_up_to(int max_degree, int max_len = -1, int max_part = -1);

/// Parses "[4,2,1]" (whitespace tolerated). Throws Errc::ParseError or the
/// constructor's errors.
Partition parse_partition(const std::string& text);

} // namespace schurkit
