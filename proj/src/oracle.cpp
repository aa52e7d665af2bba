#include "schurkit/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <thread>

#include "schurkit/error.hpp"
#include "schurkit/json_io.hpp"

namespace schurkit {

// ---------------------------------------------------------------------------
// TensorVector

std::vector<int> TensorVector::weight() const {
    if (entries.empty())
        return {};
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (int letter : entries.begin()->first)
        ++w[static_cast<std::size_t>(letter - 1)];
    return w;
}

TensorVector TensorVector::reduced(int p) const {
    TensorVector out{n, {}};
    for (const auto& [word, c] : entries) {
        Coeff r = c % p;
        if (r < 0)
            r += p;
        if (r != 0)
            out.entries.emplace(word, r);
    }
    return out;
}

namespace {

// Signed permutations of a strictly increasing list of letters.
void for_each_signed_permutation(std::vector<int> letters, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> index(letters.size());
    std::iota(index.begin(), index.end(), 0);
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < index.size(); ++a)
            for (std::size_t b = a + 1; b < index.size(); ++b)
                inversions += index[a] > index[b];
        std::vector<int> word(letters.size());
        for (std::size_t a = 0; a < index.size(); ++a)
            word[a] = letters[static_cast<std::size_t>(index[a])];
        fn(word, inversions % 2 ? -1 : 1);
    } while (std::next_permutation(index.begin(), index.end()));
}

// Tensor product of vectors living in consecutive slot blocks.
TensorVector concatenate(const TensorVector& a, const TensorVector& b) {
    TensorVector out{a.n, {}};
    for (const auto& [wa, ca] : a.entries)
        for (const auto& [wb, cb] : b.entries) {
            std::vector<int> word = wa;
            word.insert(word.end(), wb.begin(), wb.end());
            out.entries[word] += ca * cb;
        }
    std::erase_if(out.entries, [](const auto& kv) { return kv.second == 0; });
    return out;
}

} // namespace

TensorVector highest_weight_vector(const Partition& lambda, int n) {
    if (lambda.length() > n)
        throw Error(Errc::LengthExceedsN, lambda.str() + " has more than " + std::to_string(n) + " parts");
    TensorVector out{n, {{std::vector<int>{}, 1}}};
    const Partition columns = transpose(lambda);
    for (int height : columns.parts()) {
        std::vector<int> letters(static_cast<std::size_t>(height));
        std::iota(letters.begin(), letters.end(), 1);
        TensorVector column{n, {}};
        for_each_signed_permutation(letters, [&](const std::vector<int>& word, int sign) { column.entries[word] += sign; });
        out = concatenate(out, column);
    }
    return out;
}

TensorVector apply_lowering(const TensorVector& v, int i, int k) {
    if (i < 1 || i >= v.n)
        throw Error(Errc::InvalidArgument, "simple root index out of range");
    TensorVector out{v.n, {}};
    for (const auto& [word, c] : v.entries) {
        std::vector<std::size_t> slots;
        for (std::size_t s = 0; s < word.size(); ++s)
            if (word[s] == i)
                slots.push_back(s);
        if (static_cast<int>(slots.size()) < k)
            continue;
        std::vector<bool> pick(slots.size(), false);
        std::fill(pick.begin(), pick.begin() + k, true);
        do {
            std::vector<int> image = word;
            for (std::size_t t = 0; t < slots.size(); ++t)
                if (pick[t])
                    image[slots[t]] = i + 1;
            out.entries[image] += c;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    std::erase_if(out.entries, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// ---------------------------------------------------------------------------
// WedgeSpace

WedgeSpace::WedgeSpace(const Partition& lambda, int n, int p) : n_(n), p_(p) {
    if (lambda.length() > n)
        throw Error(Errc::LengthExceedsN, lambda.str() + " has more than " + std::to_string(n) + " parts");
    if (p < 2)
        throw Error(Errc::PrimeTooSmall, "p must be at least 2");
    auto cols = transpose(lambda).vec();
    heights_.assign(cols.begin(), cols.end());
    if (heights_.size() * static_cast<std::size_t>(n) > 64)
        throw Error(Errc::ResourceBudgetExceeded,
                    lambda.str() + ": " + std::to_string(heights_.size()) + " columns × n=" + std::to_string(n) +
                        " exceed the 64-bit basis key");
}

WedgeSpace::Vector WedgeSpace::highest_weight_vector() const {
    Key key = 0;
    for (std::size_t c = 0; c < heights_.size(); ++c)
        key |= ((Key{1} << heights_[c]) - 1) << (c * static_cast<std::size_t>(n_));
    return {{key, 1}};
}

WedgeSpace::Vector WedgeSpace::lower(const Vector& v, int i, int k, std::size_t support_cap) const {
    const std::size_t cols = heights_.size();
    const Key letter_bit = Key{1} << (i - 1);
    const Key swap_bits = Key{3} << (i - 1);
    std::vector<std::pair<Key, std::uint32_t>> raw;
    std::vector<Key> eligible;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (const auto& [key, coeff] : v) {
        eligible.clear();
        for (std::size_t c = 0; c < cols; ++c) {
            const std::size_t shift = c * static_cast<std::size_t>(n_);
            const Key column = key >> shift;
            // Moving i -> i+1 inside a column that already holds i+1 repeats a
            // letter, which antisymmetrizes to zero.
            if ((column & letter_bit) && !(column & (letter_bit << 1)))
                eligible.push_back(swap_bits << shift);
        }
        const int m = static_cast<int>(eligible.size());
        if (m < k)
            continue;
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            Key image = key;
            for (int t : pick)
                image ^= eligible[static_cast<std::size_t>(t)];
            raw.emplace_back(image, coeff);
            int t = k - 1;
            while (t >= 0 && pick[static_cast<std::size_t>(t)] == m - k + t)
                --t;
            if (t < 0)
                break;
            ++pick[static_cast<std::size_t>(t)];
            for (int u = t + 1; u < k; ++u)
                pick[static_cast<std::size_t>(u)] = pick[static_cast<std::size_t>(u - 1)] + 1;
        }
    }
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Vector out;
    for (std::size_t a = 0; a < raw.size();) {
        std::uint64_t total = 0;
        std::size_t b = a;
        while (b < raw.size() && raw[b].first == raw[a].first)
            total += raw[b++].second;
        if (const auto r = static_cast<std::uint32_t>(total % static_cast<std::uint64_t>(p_)))
            out.emplace_back(raw[a].first, r);
        a = b;
    }
    if (out.size() > support_cap)
        throw Error(Errc::ResourceBudgetExceeded,
                    "weight-space support " + std::to_string(out.size()) + " exceeds cap " + std::to_string(support_cap));
    return out;
}

std::uint32_t WedgeSpace::dot(const Vector& a, const Vector& b) const {
    std::uint64_t total = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            total = (total + static_cast<std::uint64_t>(ia->second) * ib->second) % static_cast<std::uint64_t>(p_);
            ++ia;
            ++ib;
        }
    }
    return static_cast<std::uint32_t>(total);
}

std::vector<int> WedgeSpace::weight_of(Key key) const {
    std::vector<int> w(static_cast<std::size_t>(n_), 0);
    for (std::size_t c = 0; c < heights_.size(); ++c)
        for (int letter = 0; letter < n_; ++letter)
            if ((key >> (c * static_cast<std::size_t>(n_) + static_cast<std::size_t>(letter))) & 1)
                ++w[static_cast<std::size_t>(letter)];
    return w;
}

TensorVector WedgeSpace::expand(const Vector& v) const {
    TensorVector out{n_, {}};
    for (const auto& [key, coeff] : v) {
        TensorVector term{n_, {{std::vector<int>{}, static_cast<Coeff>(coeff)}}};
        for (std::size_t c = 0; c < heights_.size(); ++c) {
            std::vector<int> letters;
            for (int letter = 0; letter < n_; ++letter)
                if ((key >> (c * static_cast<std::size_t>(n_) + static_cast<std::size_t>(letter))) & 1)
                    letters.push_back(letter + 1);
            TensorVector column{n_, {}};
            for_each_signed_permutation(letters, [&](const std::vector<int>& word, int sign) { column.entries[word] += sign; });
            term = concatenate(term, column);
        }
        for (const auto& [word, c] : term.entries)
            out.entries[word] += c;
    }
    return out.reduced(p_);
}

// ---------------------------------------------------------------------------
// SimpleTable

SimpleTable::SimpleTable(int p, int n, OracleConfig config) : p_(p), n_(n), config_(config) {
    if (p < 2)
        throw Error(Errc::PrimeTooSmall, "p must be at least 2");
    if (n < 1)
        throw Error(Errc::InvalidArgument, "n must be positive");
}

std::optional<SymChar> SimpleTable::find(const Partition& lambda) const {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(lambda); it != cache_.end())
        return it->second;
    return std::nullopt;
}

SymChar SimpleTable::publish(const Partition& lambda, SymChar chi) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_.emplace(lambda, std::move(chi));
    if (inserted) {
        ++stats_.computed;
    } else if (!(it->second == chi)) {
        std::cerr << "fatal: diverging simple characters for " << lambda.str() << '\n';
        std::abort();
    }
    return it->second;
}

std::vector<Partition> SimpleTable::keys() const {
    std::shared_lock lock(mutex_);
    std::vector<Partition> out;
    for (const auto& kv : cache_)
        out.push_back(kv.first);
    return out;
}

OracleStats SimpleTable::stats() const {
    std::shared_lock lock(mutex_);
    return stats_;
}

void SimpleTable::note_cache_hit() {
    std::unique_lock lock(mutex_);
    ++stats_.cache_hits;
}

void SimpleTable::note_weight_space(std::size_t dim) {
    std::unique_lock lock(mutex_);
    stats_.max_weight_space = std::max(stats_.max_weight_space, dim);
}

void SimpleTable::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        return;
    std::string line;
    std::unique_lock lock(mutex_);
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        Partition lambda;
        SymChar chi;
        try {
            const json record = json::parse(line);
            lambda = partition_from_json(record.at("lambda"));
            chi = SymChar::from_coeffs(n_, coeff_map_from_json(record.at("char")));
        } catch (const json::exception& e) {
            throw Error(Errc::ParseError, file.string() + ": " + e.what());
        }
        if (cache_.emplace(std::move(lambda), std::move(chi)).second)
            ++stats_.loaded;
    }
}

void SimpleTable::save(const std::filesystem::path& file) const {
    if (file.has_parent_path())
        std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::trunc);
    std::shared_lock lock(mutex_);
    for (const auto& [lambda, chi] : cache_) {
        json record;
        record["lambda"] = to_json(lambda);
        record["char"] = to_json(chi.coeffs());
        out << record.dump() << '\n';
    }
}

// ---------------------------------------------------------------------------
// simple characters

namespace {

// Rows of the Gram matrix that are linearly independent over F_p, greedily in
// order.
std::vector<std::size_t> independent_rows(const std::vector<std::vector<std::uint32_t>>& gram, int p) {
    const std::size_t m = gram.size();
    const std::uint64_t mod = static_cast<std::uint64_t>(p);
    auto inverse = [&](std::uint64_t a) {
        std::uint64_t result = 1, base = a % mod, e = mod - 2;
        while (e) {
            if (e & 1)
                result = result * base % mod;
            base = base * base % mod;
            e >>= 1;
        }
        return result;
    };
    std::vector<std::vector<std::uint64_t>> basis; // normalized, pivot value 1
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> chosen;
    for (std::size_t r = 0; r < m; ++r) {
        std::vector<std::uint64_t> row(gram[r].begin(), gram[r].end());
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const std::uint64_t f = row[pivots[b]];
            if (f == 0)
                continue;
            for (std::size_t c = 0; c < m; ++c)
                row[c] = (row[c] + (mod - f) * basis[b][c]) % mod;
        }
        const auto lead = std::find_if(row.begin(), row.end(), [](std::uint64_t x) { return x != 0; });
        if (lead == row.end())
            continue;
        const std::size_t col = static_cast<std::size_t>(lead - row.begin());
        const std::uint64_t inv = inverse(*lead);
        for (auto& x : row)
            x = x * inv % mod;
        basis.push_back(std::move(row));
        pivots.push_back(col);
        chosen.push_back(r);
    }
    return chosen;
}

SymChar gram_rank_char(const Partition& lambda, SimpleTable& table) {
    const int n = table.n();
    const int p = table.p();
    const WedgeSpace space(lambda, n, p);
    const std::size_t cap = table.config().max_weight_space;

    // Weights μ = λ - Σ c_i α_i with every c_i >= 0, ordered by depth Σ c_i.
    struct Weight {
        int depth;
        std::vector<int> mu;
    };
    std::vector<Weight> weights;
    std::vector<int> mu(static_cast<std::size_t>(n));
    std::function<void(int, int, int)> walk = [&](int i, int prefix_gap, int depth) {
        // prefix_gap = Σ_{j<i} (λ_j - μ_j) >= 0.
        if (i == n - 1) {
            const int last = lambda(n) + prefix_gap;
            mu[static_cast<std::size_t>(i)] = last;
            weights.push_back({depth, mu});
            return;
        }
        for (int v = lambda(i + 1) + prefix_gap; v >= 0; --v) {
            mu[static_cast<std::size_t>(i)] = v;
            const int gap = prefix_gap + lambda(i + 1) - v;
            walk(i + 1, gap, depth + gap);
        }
    };
    walk(0, 0, 0);
    std::stable_sort(weights.begin(), weights.end(), [](const Weight& a, const Weight& b) {
        return a.depth != b.depth ? a.depth < b.depth : a.mu > b.mu;
    });

    std::map<std::vector<int>, std::vector<WedgeSpace::Vector>> basis;
    std::vector<int> top(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        top[static_cast<std::size_t>(i)] = lambda(i + 1);
    basis[top] = {space.highest_weight_vector()};

    std::size_t largest = 1;
    for (const auto& w : weights) {
        if (w.mu == top)
            continue;
        std::vector<WedgeSpace::Vector> candidates;
        for (int i = 1; i < n; ++i) {
            for (int k = 1; k <= w.mu[static_cast<std::size_t>(i)]; ++k) {
                std::vector<int> parent = w.mu;
                parent[static_cast<std::size_t>(i - 1)] += k;
                parent[static_cast<std::size_t>(i)] -= k;
                auto it = basis.find(parent);
                if (it == basis.end())
                    continue;
                for (const auto& rep : it->second) {
                    auto image = space.lower(rep, i, k, cap);
                    largest = std::max(largest, image.size());
                    if (!image.empty())
                        candidates.push_back(std::move(image));
                }
            }
        }
        if (candidates.empty())
            continue;
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        const std::size_t m = candidates.size();
        std::vector<std::vector<std::uint32_t>> gram(m, std::vector<std::uint32_t>(m));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a; b < m; ++b)
                gram[a][b] = gram[b][a] = space.dot(candidates[a], candidates[b]);
        std::vector<WedgeSpace::Vector> kept;
        for (std::size_t r : independent_rows(gram, p))
            kept.push_back(std::move(candidates[r]));
        if (!kept.empty())
            basis[w.mu] = std::move(kept);
    }
    table.note_weight_space(largest);

    std::map<Partition, Coeff> coeffs;
    for (const auto& [weight, reps] : basis)
        if (std::is_sorted(weight.rbegin(), weight.rend()))
            coeffs.emplace(Partition(weight), static_cast<Coeff>(reps.size()));
    return SymChar::from_coeffs(n, std::move(coeffs));
}

} // namespace

SymChar simple_char(const Partition& lambda, SimpleTable& table) {
    if (lambda.length() > table.n())
        throw Error(Errc::LengthExceedsN, lambda.str() + " has more than " + std::to_string(table.n()) + " parts");
    if (auto hit = table.find(lambda)) {
        table.note_cache_hit();
        return *hit;
    }
    if (table.config().steinberg_shortcut && !is_restricted(lambda, table.p())) {
        const auto [low, high] = digit_split(lambda, table.p());
        SymChar chi = multiply(simple_char(low, table), frobenius_twist(simple_char(high, table), table.p()));
        return table.publish(lambda, std::move(chi));
    }
    return table.publish(lambda, gram_rank_char(lambda, table));
}

SymChar simple_char(const Partition& lambda, int p, int n, SimpleTable& table) {
    if (p != table.p() || n != table.n())
        throw Error(Errc::InvalidArgument, "table is for different (p, n)");
    return simple_char(lambda, table);
}

FactorMultiset decompose_simples(const SymChar& chi, SimpleTable& table) {
    if (chi.n() != table.n())
        throw Error(Errc::VariableCountMismatch, std::to_string(chi.n()) + " vs " + std::to_string(table.n()));
    FactorMultiset out;
    SymChar residual = chi;
    while (!residual.empty()) {
        const auto [top, c] = *residual.coeffs().rbegin();
        if (c < 0)
            throw Error(Errc::NegativeResidual, "residual coefficient " + std::to_string(c) + " at " + top.str());
        out.emplace(top, c);
        residual.add_scaled(simple_char(top, table), -c);
    }
    return out;
}

bool dimension_check(const SymChar& chi, const FactorMultiset& factors, SimpleTable& table) {
    Coeff total = 0;
    for (const auto& [lambda, mult] : factors)
        total = checked_add(total, checked_mul(mult, dimension(simple_char(lambda, table))));
    return total == dimension(chi);
}

SymChar module_char(const std::vector<std::pair<FactorKind, int>>& spec, int p, int n) {
    SymChar out = SymChar::from_coeffs(n, {{Partition{}, 1}});
    for (const auto& [kind, r] : spec) {
        SymChar factor;
        switch (kind) {
        case FactorKind::S: factor = power_char(PowerKind::Complete, r, n); break;
        case FactorKind::Sbar: factor = power_char(PowerKind::Truncated, r, n, p); break;
        case FactorKind::Wedge: factor = power_char(PowerKind::Exterior, r, n); break;
        }
        out = multiply(out, factor);
    }
    return out;
}

FactorMultiset composition_factors(const std::vector<std::pair<FactorKind, int>>& spec, SimpleTable& table) {
    return decompose_simples(module_char(spec, table.p(), table.n()), table);
}

SymChar family_char(Family family, int r, int p, int n) {
    SymChar total(n, r);
    switch (family) {
    case Family::S: return module_char({{FactorKind::S, r}}, p, n);
    case Family::Sbar: return module_char({{FactorKind::Sbar, r}}, p, n);
    case Family::SS:
        for (int a = 0; a <= r; ++a)
            total.add_scaled(module_char({{FactorKind::S, a}, {FactorKind::S, r - a}}, p, n), 1);
        return total;
    case Family::SbarSbar:
        for (int a = 0; a <= r; ++a)
            total.add_scaled(module_char({{FactorKind::Sbar, a}, {FactorKind::Sbar, r - a}}, p, n), 1);
        return total;
    case Family::SbarSbarWedge:
        for (int c = 0; c <= std::min(r, n); ++c)
            for (int a = 0; a <= r - c; ++a)
                total.add_scaled(
                    module_char({{FactorKind::Sbar, a}, {FactorKind::Sbar, r - c - a}, {FactorKind::Wedge, c}}, p, n), 1);
        return total;
    }
    return total;
}

std::vector<Partition> enumerate_factors(Family family, int r, SimpleTable& table) {
    const auto factors = decompose_simples(family_char(family, r, table.p(), table.n()), table);
    std::vector<Partition> out;
    for (const auto& kv : factors)
        out.push_back(kv.first);
    std::reverse(out.begin(), out.end());
    return out;
}

void prefetch_simple_chars(const std::vector<Partition>& weights, SimpleTable& table, unsigned threads) {
    threads = std::max(1u, threads);
    if (threads == 1) {
        for (const auto& lambda : weights)
            simple_char(lambda, table);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            try {
                for (std::size_t i = next++; i < weights.size(); i = next++)
                    simple_char(weights[i], table);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace schurkit
