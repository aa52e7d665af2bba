#pragma once

// Combinatorial descriptions of the highest weights of composition factors of
// S̄(E)^{⊗a} ⊗ Λ(E)^{⊗b} and S(E)^{⊗2}: special, good, primitive and standard
// partitions, plus the GL_3 criticality / divisibility / G_1-injectivity tests.

#include <optional>
#include <utility>
#include <vector>

#include "schurkit/partition.hpp"

namespace schurkit {

struct TermKind {
    bool beginning = false;
    bool middle = false;
    bool end = false;
    bool restricted_two_special = false;

    friend bool operator==(const TermKind&, const TermKind&) = default;
};

struct ParseBlock {
    Partition primitive;
    int index = 0;
    int shift = 0;

    friend bool operator==(const ParseBlock&, const ParseBlock&) = default;
};

/// λ = Σ p^{shift_i} primitive_i, blocks occupying consecutive digit ranges.
struct StandardParse {
    std::vector<ParseBlock> blocks;

    Partition recombine(int p) const;
    friend bool operator==(const StandardParse&, const StandardParse&) = default;
};

/// (p-1)^k a with 0 <= a < p-1.
bool is_1special(const Partition& lambda, int p);
/// (p-2)^k a b with p-2 >= a >= b >= 0.
bool is_beginning_term(const Partition& lambda, int p);
bool is_2special(const Partition& lambda, int p);

/// Witness μ, s with λ = μ + ω_s and μ 2-special (smallest s first).
std::optional<std::pair<Partition, int>> twenty_one_special_witness(const Partition& lambda, int p);
bool is_21special(const Partition& lambda, int p);

/// Piecewise description by first row; requires p > 2 and λ restricted.
bool is_21good_piecewise(const Partition& lambda, int p);

TermKind classify_term(const Partition& delta, int p);
std::optional<int> primitive_index(const Partition& lambda, int p);

std::vector<StandardParse> standard_parses(const Partition& lambda, int p);
bool is_2good(const Partition& lambda, int p);

/// D_λ is a factor of some Sp(μ) with μ (2,1)-bounded. λ restricted.
bool specht_d_lower(const Partition& lambda, int p);
/// D^λ is a factor of some Sp(μ) with μ (1,2)-bounded. λ p-regular.
bool specht_d_upper(const Partition& lambda, int p);

bool is_critical_n3(const Partition& lambda, int p);
int divisibility_index_n3(const Partition& lambda, int p);
bool g1_inj_n3(const Partition& lambda, int p);

} // namespace schurkit
