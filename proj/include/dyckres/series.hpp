#pragma once

#include "dyckres/integer.hpp"
#include "dyckres/partition.hpp"

#include <map>
#include <string>
#include <utility>

namespace dyckres {

/// Finitely supported integer polynomial in one variable. Used for Hilbert
/// series in t, Gauss polynomials in q and Betti polynomials in w alike.
/// Zero coefficients are never stored.
class GradedSeries {
public:
    using Terms = std::map<int, Integer>;

    GradedSeries() = default;
    explicit GradedSeries(Terms terms) : terms_(std::move(terms)) { prune(); }

    static GradedSeries monomial(int degree, Integer coefficient = 1)
    {
        GradedSeries s;
        s.add(degree, std::move(coefficient));
        return s;
    }

    /// (1 + t)^exponent
    static GradedSeries one_plus_t_power(int exponent)
    {
        GradedSeries s;
        for (int k = 0; k <= exponent; ++k)
            s.add(k, binomial(exponent, k));
        return s;
    }

    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool empty() const { return terms_.empty(); }

    Integer coefficient(int degree) const
    {
        const auto it = terms_.find(degree);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add(int degree, const Integer& coefficient)
    {
        if (coefficient == 0)
            return;
        Integer& slot = terms_[degree];
        slot += coefficient;
        if (slot == 0)
            terms_.erase(degree);
    }

    int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    /// Value at 1, i.e. the total dimension for a Hilbert series.
    Integer total() const
    {
        Integer sum = 0;
        for (const auto& [d, c] : terms_)
            sum += c;
        return sum;
    }

    bool nonnegative() const
    {
        for (const auto& [d, c] : terms_)
            if (c < 0)
                return false;
        return true;
    }

    GradedSeries truncated(int max_degree) const
    {
        GradedSeries out;
        for (const auto& [d, c] : terms_)
            if (d <= max_degree)
                out.terms_.emplace(d, c);
        return out;
    }

    GradedSeries shifted(int by) const
    {
        GradedSeries out;
        for (const auto& [d, c] : terms_)
            out.terms_.emplace(d + by, c);
        return out;
    }

    /// p(t) -> p(t^k)
    GradedSeries substitute_power(int k) const
    {
        GradedSeries out;
        for (const auto& [d, c] : terms_)
            out.terms_.emplace(d * k, c);
        return out;
    }

    GradedSeries& operator+=(const GradedSeries& other)
    {
        for (const auto& [d, c] : other.terms_)
            add(d, c);
        return *this;
    }

    GradedSeries& operator-=(const GradedSeries& other)
    {
        for (const auto& [d, c] : other.terms_)
            add(d, -c);
        return *this;
    }

    GradedSeries& operator*=(const Integer& scalar)
    {
        if (scalar == 0)
            terms_.clear();
        for (auto& [d, c] : terms_)
            c *= scalar;
        return *this;
    }

    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
    friend GradedSeries operator*(GradedSeries a, const Integer& s) { return a *= s; }

    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b)
    {
        GradedSeries out;
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_)
                out.add(da + db, ca * cb);
        return out;
    }

    friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

private:
    void prune()
    {
        std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
    }

    Terms terms_;
};

/// "225t^5 + 1132t^6", "0" when empty.
inline std::string to_string(const GradedSeries& s, const std::string& var = "t")
{
    if (s.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : s.terms()) {
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (d == 0) {
            out += mag.str();
            continue;
        }
        if (mag != 1)
            out += mag.str();
        out += var;
        if (d != 1)
            out += "^" + std::to_string(d);
    }
    return out;
}

/// Element of the Grothendieck group written in the basis of simple classes
/// [L_mu]; also used for plain multisets of partitions.
class K0Class {
public:
    using Terms = std::map<Partition, Integer>;

    K0Class() = default;
    explicit K0Class(Terms terms) : terms_(std::move(terms))
    {
        std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
    }

    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool empty() const { return terms_.empty(); }

    void add(const Partition& mu, const Integer& c)
    {
        if (c == 0)
            return;
        Integer& slot = terms_[mu];
        slot += c;
        if (slot == 0)
            terms_.erase(mu);
    }

    Integer coefficient(const Partition& mu) const
    {
        const auto it = terms_.find(mu);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    K0Class& operator+=(const K0Class& other)
    {
        for (const auto& [mu, c] : other.terms_)
            add(mu, c);
        return *this;
    }

    friend bool operator==(const K0Class&, const K0Class&) = default;

private:
    Terms terms_;
};

inline std::string to_string(const K0Class& cls)
{
    if (cls.empty())
        return "0";
    std::string out;
    for (const auto& [mu, c] : cls.terms()) {
        if (!out.empty())
            out += " + ";
        if (c != 1)
            out += c.str() + "*";
        out += "[L(" + to_string(mu) + ")]";
    }
    return out;
}

/// A g0-character: multiplicities of S_alpha W0 (x) S_beta W1. The degree of
/// a constituent is |alpha| (= |beta|).
class GLCharacter {
public:
    using Key = std::pair<Partition, Partition>;
    using Terms = std::map<Key, Integer>;

    GLCharacter() = default;
    GLCharacter(int m, int n) : m_(m), n_(n) {}
    GLCharacter(int m, int n, Terms terms) : m_(m), n_(n), terms_(std::move(terms))
    {
        std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
    }

    int m() const { return m_; }
    int n() const { return n_; }
    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool empty() const { return terms_.empty(); }

    void add(const Partition& alpha, const Partition& beta, const Integer& c)
    {
        if (c == 0)
            return;
        Key key{alpha, beta};
        auto [it, inserted] = terms_.try_emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Integer multiplicity(const Partition& alpha, const Partition& beta) const
    {
        const auto it = terms_.find(Key{alpha, beta});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    GLCharacter& operator+=(const GLCharacter& other)
    {
        for (const auto& [k, c] : other.terms_)
            add(k.first, k.second, c);
        return *this;
    }

    GLCharacter& operator-=(const GLCharacter& other)
    {
        for (const auto& [k, c] : other.terms_)
            add(k.first, k.second, -c);
        return *this;
    }

    GLCharacter& operator*=(const Integer& scalar)
    {
        if (scalar == 0)
            terms_.clear();
        for (auto& [k, c] : terms_)
            c *= scalar;
        return *this;
    }

    GLCharacter truncated(int max_degree) const
    {
        GLCharacter out(m_, n_);
        for (const auto& [k, c] : terms_)
            if (k.first.size() <= max_degree)
                out.terms_.emplace(k, c);
        return out;
    }

    GLCharacter degree_slice(int degree) const
    {
        GLCharacter out(m_, n_);
        for (const auto& [k, c] : terms_)
            if (k.first.size() == degree)
                out.terms_.emplace(k, c);
        return out;
    }

    bool nonnegative() const
    {
        for (const auto& [k, c] : terms_)
            if (c < 0)
                return false;
        return true;
    }

    /// Degree-wise dimensions.
    GradedSeries hilbert() const
    {
        GradedSeries out;
        for (const auto& [k, c] : terms_)
            out.add(k.first.size(), c * schur_dimension(k.first, m_) * schur_dimension(k.second, n_));
        return out;
    }

    Integer dimension() const { return hilbert().total(); }

    friend bool operator==(const GLCharacter&, const GLCharacter&) = default;

private:
    int m_ = 0;
    int n_ = 0;
    Terms terms_;
};

} // namespace dyckres
