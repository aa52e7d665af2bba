#pragma once

// Formal characters of polynomial GL_n-modules, stored in the monomial
// symmetric basis keyed by dominant weights.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "schurkit/partition.hpp"

namespace schurkit {

using Coeff = std::int64_t;

class SymChar {
  public:
    SymChar() = default;
    /// The zero character of the given degree.
    SymChar(int n, int degree);

    /// Validates keys (degree, length <= n) and drops zero coefficients.
    /// Throws Errc::DegreeMixed or Errc::LengthExceedsN.
    static SymChar from_coeffs(int n, std::map<Partition, Coeff> coeffs);

    int n() const noexcept { return n_; }
    int degree() const noexcept { return degree_; }
    const std::map<Partition, Coeff>& coeffs() const noexcept { return coeffs_; }
    Coeff operator[](const Partition& mu) const;
    bool empty() const noexcept { return coeffs_.empty(); }

    /// Adds c·other in place; degrees must agree unless one side is empty.
    SymChar& add_scaled(const SymChar& other, Coeff c);

    friend bool operator==(const SymChar&, const SymChar&) = default;

  private:
    int n_ = 1;
    int degree_ = 0;
    std::map<Partition, Coeff> coeffs_;
};

enum class PowerKind { Complete, Exterior, Truncated };

/// Kostka number: semistandard tableaux of shape λ and content μ.
Coeff kostka(const Partition& lambda, const Partition& mu);

SymChar schur_char(const Partition& lambda, int n);
/// p must be given iff kind == Truncated.
SymChar power_char(PowerKind kind, int r, int n, std::optional<int> p = std::nullopt);
SymChar multiply(const SymChar& a, const SymChar& b);
std::map<Partition, Coeff> decompose_schur(const SymChar& chi);
bool is_deficient(const SymChar& chi, int a, int b);
SymChar frobenius_twist(const SymChar& chi, int p);

/// Number of distinct rearrangements of μ padded to n entries.
Coeff orbit_size(const Partition& mu, int n);
/// Dimension of the module: the character evaluated at the identity.
Coeff dimension(const SymChar& chi);

/// Products of atoms h<r>, e<r>, sbar<r>@p, s[λ] joined by '*'.
SymChar parse_char_expr(const std::string& expr, int n);

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

} // namespace schurkit
