#pragma once

// Brute-force modular characters. The simple module L(λ) is the quotient of
// the submodule M ⊂ Λ^{h_1}E ⊗ ... ⊗ Λ^{h_c}E generated by the highest weight
// vector (h_j the column lengths of λ) by the radical of the contravariant
// form; dim L(λ)_μ is the rank over F_p of the form on M_μ.
//
// M is generated by a highest weight vector and the form restricted to M is
// contravariant with ⟨v_λ, v_λ⟩ = 1, so its radical is the unique maximal
// submodule and M / rad is simple with highest weight λ.

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "schurkit/characters.hpp"
#include "schurkit/partition.hpp"

namespace schurkit {

/// An element of E^{⊗r} with integer coefficients. Words use letters 1..n.
struct TensorVector {
    int n = 1;
    std::map<std::vector<int>, Coeff> entries;

    /// Content of the words; empty for the zero vector.
    std::vector<int> weight() const;
    bool is_zero() const noexcept { return entries.empty(); }
    /// Coefficients reduced into [0, p), zeros dropped.
    TensorVector reduced(int p) const;

    friend bool operator==(const TensorVector&, const TensorVector&) = default;
};

/// Product over the columns of λ (longest first) of the antisymmetrized
/// words on 1..height.
TensorVector highest_weight_vector(const Partition& lambda, int n);

/// Divided power f_i^{(k)}: every k-subset of slots holding i is moved to i+1.
TensorVector apply_lowering(const TensorVector& v, int i, int k);

/// Column-antisymmetric tensors stored by their column-increasing words. A
/// basis key packs one n-bit subset per column of λ; coefficients are in F_p.
/// The wedge-orthonormal form is the word form divided by Π h_c!.
class WedgeSpace {
  public:
    using Key = std::uint64_t;
    using Vector = std::vector<std::pair<Key, std::uint32_t>>; // sorted by key

    WedgeSpace(const Partition& lambda, int n, int p);

    int n() const noexcept { return n_; }
    int p() const noexcept { return p_; }
    const std::vector<int>& column_heights() const noexcept { return heights_; }

    Vector highest_weight_vector() const;
    /// f_i^{(k)} in the wedge basis; 1 <= i < n.
    Vector lower(const Vector& v, int i, int k, std::size_t support_cap) const;
    std::uint32_t dot(const Vector& a, const Vector& b) const;
    std::vector<int> weight_of(Key key) const;
    /// Expansion of a wedge vector into signed words of E^{⊗r}, mod p.
    TensorVector expand(const Vector& v) const;

  private:
    int n_;
    int p_;
    std::vector<int> heights_;
};

struct OracleConfig {
    std::size_t max_weight_space = 300'000;
    /// Compute non-restricted simple characters through the Steinberg
    /// factorization instead of Gram ranks.
    bool steinberg_shortcut = false;
};

struct OracleStats {
    std::uint64_t computed = 0;
    std::uint64_t cache_hits = 0;
    std::uint64_t loaded = 0;
    std::size_t max_weight_space = 0;
};

/// Characters of simple modules L(λ) for fixed (p, n). Safe for concurrent
/// use; the first published value for a key wins, and a diverging second
/// computation is a fatal invariant violation.
class SimpleTable {
  public:
    SimpleTable(int p, int n, OracleConfig config = {});

    int p() const noexcept { return p_; }
    int n() const noexcept { return n_; }
    const OracleConfig& config() const noexcept { return config_; }

    std::optional<SymChar> find(const Partition& lambda) const;
    /// Returns the stored character (which may be a previously published one).
    SymChar publish(const Partition& lambda, SymChar chi);
    std::vector<Partition> keys() const;
    OracleStats stats() const;
    void note_cache_hit();
    void note_weight_space(std::size_t dim);

    /// One JSON record per line: {"lambda":[...],"char":{"[μ]":mult}}.
    void load(const std::filesystem::path& file);
    void save(const std::filesystem::path& file) const;

  private:
    int p_;
    int n_;
    OracleConfig config_;
    mutable std::shared_mutex mutex_;
    std::map<Partition, SymChar> cache_;
    OracleStats stats_;
};

using FactorMultiset = std::map<Partition, Coeff>;

enum class FactorKind { S, Sbar, Wedge };
enum class Family { SS, SbarSbar, SbarSbarWedge, Sbar, S };

/// Character of L(λ) by Gram ranks (cached in the table).
SymChar simple_char(const Partition& lambda, SimpleTable& table);
SymChar simple_char(const Partition& lambda, int p, int n, SimpleTable& table);

/// Greedy expansion in simple characters. Throws Errc::NegativeResidual.
FactorMultiset decompose_simples(const SymChar& chi, SimpleTable& table);

/// Σ mult · dim L(λ) == dim χ.
bool dimension_check(const SymChar& chi, const FactorMultiset& factors, SimpleTable& table);

SymChar module_char(const std::vector<std::pair<FactorKind, int>>& spec, int p, int n);
FactorMultiset composition_factors(const std::vector<std::pair<FactorKind, int>>& spec, SimpleTable& table);

/// Character of the degree-r component of a family's module.
SymChar family_char(Family family, int r, int p, int n);
std::vector<Partition> enumerate_factors(Family family, int r, SimpleTable& table);

/// Computes simple characters for several weights, on up to `threads` threads.
void prefetch_simple_chars(const std::vector<Partition>& weights, SimpleTable& table, unsigned threads);

} // namespace schurkit
