#pragma once

#include "dyckres/cache.hpp"
#include "dyckres/enumeration.hpp"
#include "dyckres/errors.hpp"
#include "dyckres/partition.hpp"
#include "dyckres/series.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace dyckres {

using LRExpansion = std::map<Partition, Integer>;

/// s_lambda * s_mu restricted to shapes with at most max_rows rows, by
/// enumerating Littlewood-Richardson tableaux of shape nu/lambda and content
/// mu. Letter k is added as a horizontal strip; the lattice condition is
/// checked row by row: the k's in rows 1..r may not outnumber the (k-1)'s in
/// rows 1..r-1.
inline LRExpansion lr_expand(const Partition& lambda, const Partition& mu, int max_rows)
{
    LRExpansion out;
    const int rows = std::min(max_rows, lambda.length() + mu.length());
    if (lambda.length() > rows || mu.length() > rows)
        return out;

    std::vector<int> shape(static_cast<std::size_t>(rows), 0);
    for (int r = 1; r <= lambda.length(); ++r)
        shape[static_cast<std::size_t>(r - 1)] = lambda.part(r);

    const int letters = mu.length();
    // counts[k][r]: number of letter k+1 placed in row r+1
    std::vector<std::vector<int>> counts(static_cast<std::size_t>(letters), std::vector<int>(static_cast<std::size_t>(rows), 0));

    std::function<void(int)> place_letter;
    std::function<void(int, int, int, int, int, const std::vector<int>&)> place_row;

    place_letter = [&](int k) {
        if (k == letters) {
            out[Partition(shape)] += 1;
            return;
        }
        const std::vector<int> before = shape;
        place_row(k, 0, mu.part(k + 1), 0, 0, before);
    };

    // Distribute `remaining` copies of letter k over rows r.. ; `placed` and
    // `prev_prefix` are the running totals of letters k and k-1 in rows < r.
    place_row = [&](int k, int r, int remaining, int placed, int prev_prefix, const std::vector<int>& before) {
        if (r == rows) {
            if (remaining == 0)
                place_letter(k + 1);
            return;
        }
        const std::size_t ri = static_cast<std::size_t>(r);
        int cap = remaining;
        if (r > 0)
            cap = std::min(cap, before[ri - 1] - before[ri]);
        if (k > 0)
            cap = std::min(cap, prev_prefix - placed);
        const int next_prev = k > 0 ? prev_prefix + counts[static_cast<std::size_t>(k - 1)][ri] : 0;
        for (int a = cap; a >= 0; --a) {
            counts[static_cast<std::size_t>(k)][ri] = a;
            shape[ri] = before[ri] + a;
            place_row(k, r + 1, remaining - a, placed + a, next_prev, before);
        }
        counts[static_cast<std::size_t>(k)][ri] = 0;
        shape[ri] = before[ri];
    };

    place_letter(0);
    return out;
}

/// Pairs (delta, delta') with |delta| = s, delta inside the m x n box, from
/// the decomposition of the s-th exterior power of W0 (x) W1. Ordered with
/// delta lexicographically decreasing.
inline std::vector<std::pair<Partition, Partition>> exterior_cauchy(int s, int m, int n)
{
    std::vector<std::pair<Partition, Partition>> out;
    if (s < 0)
        throw BadArgs("exterior power index must be >= 0");
    for (const Partition& delta : partitions_of(s, m, n))
        out.emplace_back(delta, conjugate(delta));
    return out;
}

namespace detail {

inline void check_shape(const Partition& lambda, int m, int n)
{
    if (n < 1)
        throw BadShape("n must be >= 1");
    if (m < n)
        throw BadShape("m >= n is required (m = " + std::to_string(m) + ", n = " + std::to_string(n) + ")");
    if (lambda.length() > n)
        throw TooManyRows("(" + to_string(lambda) + ") has more than n = " + std::to_string(n) + " parts");
}

} // namespace detail

/// dim S_lambda C^m * dim S_lambda C^n * t^|lambda| * (1+t)^(mn)
inline GradedSeries kac_hilbert(const Partition& lambda, int m, int n)
{
    detail::check_shape(lambda, m, n);
    const Integer generators = schur_dimension(lambda, m) * schur_dimension(lambda, n);
    return GradedSeries::one_plus_t_power(m * n).shifted(lambda.size()) * generators;
}

/// Memoizing engine for Kac and simple characters. Simple modules are
/// obtained by inverting the Kac composition series:
///
///   L_mu = K_mu - sum over nonempty D in K(mu; n) of L_mu(D).
///
/// The sum runs upward without end, but L_mu lives in degrees
/// |mu| .. |mu| + mn, so everything is computed truncated at that degree and
/// any L_nu with |nu| past the truncation contributes nothing.
///
/// Not thread-safe; use one engine per thread.
class CharacterEngine {
public:
    explicit CharacterEngine(int slack = 0) : slack_(slack)
    {
        if (auto dir = PersistentCache::directory_from_env())
            cache_.emplace(*dir);
    }

    CharacterEngine(int slack, std::optional<std::string> cache_dir) : slack_(slack)
    {
        if (cache_dir)
            cache_.emplace(*cache_dir);
    }

    int slack() const { return slack_; }

    /// sum over D in K(lambda; n) of [L_lambda(D)]
    const K0Class& kac_composition(const Partition& lambda, int n)
    {
        auto key = std::make_pair(lambda, n);
        if (auto it = compositions_.find(key); it != compositions_.end())
            return it->second;
        K0Class cls;
        for (const PatternEntry& e : enumerate_K(lambda, n, slack_))
            cls.add(e.shape, 1);
        return compositions_.emplace(std::move(key), std::move(cls)).first->second;
    }

    const LRExpansion& lr(const Partition& a, const Partition& b, int rows)
    {
        auto key = std::make_tuple(a, b, rows);
        if (auto it = lr_cache_.find(key); it != lr_cache_.end())
            return it->second;
        return lr_cache_.emplace(std::move(key), lr_expand(a, b, rows)).first->second;
    }

    /// Character of K_lambda, optionally only through degree max_degree.
    GLCharacter kac_character(const Partition& lambda, int m, int n, int max_degree = INT_MAX)
    {
        detail::check_shape(lambda, m, n);
        GLCharacter out(m, n);
        for (int s = 0; s <= m * n; ++s) {
            if (max_degree != INT_MAX && lambda.size() + s > max_degree)
                break;
            for (const auto& [delta, delta_conj] : exterior_cauchy(s, m, n)) {
                const LRExpansion& left = lr(delta, lambda, m);
                const LRExpansion& right = lr(delta_conj, lambda, n);
                for (const auto& [alpha, a] : left)
                    for (const auto& [beta, b] : right)
                        out.add(alpha, beta, a * b);
            }
        }
        return out;
    }

    GLCharacter simple_character(const Partition& mu, int m, int n)
    {
        detail::check_shape(mu, m, n);
        return simple_character_upto(mu, m, n, mu.size() + m * n);
    }

    GradedSeries simple_hilbert(const Partition& mu, int m, int n)
    {
        detail::check_shape(mu, m, n);
        return simple_hilbert_upto(mu, m, n, mu.size() + m * n);
    }

private:
    template <class Value>
    struct Truncated {
        int through = 0; // valid through this degree
        Value value;
    };
    using Key = std::tuple<Partition, int, int>;

    GradedSeries simple_hilbert_upto(const Partition& nu, int m, int n, int through)
    {
        if (nu.size() > through)
            return {};
        through = std::min(through, nu.size() + m * n);
        const bool complete = through == nu.size() + m * n;
        Key key{nu, m, n};
        if (auto it = hilbert_memo_.find(key); it != hilbert_memo_.end() && it->second.through >= through)
            return it->second.value.truncated(through);
        if (complete && cache_) {
            if (auto hit = cache_->load_hilbert(nu, m, n)) {
                hilbert_memo_[key] = {through, *hit};
                return *hit;
            }
        }

        GradedSeries result = kac_hilbert(nu, m, n).truncated(through);
        for (const auto& [shape, mult] : kac_composition(nu, n).terms()) {
            if (shape == nu)
                continue;
            result -= simple_hilbert_upto(shape, m, n, through) * mult;
        }
        if (!result.nonnegative())
            throw ConsistencyError("negative coefficient in Hilbert series of L(" + to_string(nu) + ")");
        if (complete && cache_)
            cache_->store_hilbert(nu, m, n, result);
        hilbert_memo_[key] = {through, result};
        return result;
    }

    GLCharacter simple_character_upto(const Partition& nu, int m, int n, int through)
    {
        if (nu.size() > through)
            return GLCharacter(m, n);
        through = std::min(through, nu.size() + m * n);
        const bool complete = through == nu.size() + m * n;
        Key key{nu, m, n};
        if (auto it = character_memo_.find(key); it != character_memo_.end() && it->second.through >= through)
            return it->second.value.truncated(through);
        if (complete && cache_) {
            if (auto hit = cache_->load_character(nu, m, n)) {
                character_memo_[key] = {through, *hit};
                return *hit;
            }
        }

        GLCharacter result = kac_character(nu, m, n, through);
        for (const auto& [shape, mult] : kac_composition(nu, n).terms()) {
            if (shape == nu)
                continue;
            GLCharacter sub = simple_character_upto(shape, m, n, through);
            sub *= mult;
            result -= sub;
        }
        if (!result.nonnegative())
            throw ConsistencyError("negative multiplicity in character of L(" + to_string(nu) + ")");
        if (complete && cache_)
            cache_->store_character(nu, m, n, result);
        character_memo_[key] = {through, result};
        return result;
    }

    int slack_ = 0;
    std::optional<PersistentCache> cache_;
    std::map<std::pair<Partition, int>, K0Class> compositions_;
    std::map<std::tuple<Partition, Partition, int>, LRExpansion> lr_cache_;
    std::map<Key, Truncated<GradedSeries>> hilbert_memo_;
    std::map<Key, Truncated<GLCharacter>> character_memo_;
};

/// Per-thread engine behind the free functions below.
inline CharacterEngine& default_engine()
{
    thread_local CharacterEngine engine;
    return engine;
}

inline GLCharacter kac_character(const Partition& lambda, int m, int n) { return default_engine().kac_character(lambda, m, n); }

inline K0Class kac_composition(const Partition& lambda, int n)
{
    if (n < 1)
        throw BadArgs("n must be >= 1");
    if (lambda.length() > n)
        throw TooManyRows("lambda has more than n parts");
    return default_engine().kac_composition(lambda, n);
}

inline GLCharacter simple_character(const Partition& mu, int m, int n) { return default_engine().simple_character(mu, m, n); }

inline GradedSeries simple_hilbert(const Partition& mu, int m, int n) { return default_engine().simple_hilbert(mu, m, n); }

} // namespace dyckres
