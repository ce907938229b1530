#pragma once

#include "dyckres/characters.hpp"
#include "dyckres/enumeration.hpp"
#include "dyckres/errors.hpp"
#include "dyckres/partition.hpp"
#include "dyckres/series.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dyckres {

/// Terms L_mu * w^d with multiplicities; one unit per pattern of A(lambda; n).
class BettiPolynomial {
public:
    using Key = std::pair<Partition, int>;
    using Terms = std::map<Key, Integer>;

    BettiPolynomial() = default;
    explicit BettiPolynomial(Terms terms) : terms_(std::move(terms))
    {
        std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
    }

    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool empty() const { return terms_.empty(); }

    void add(const Partition& mu, int d, const Integer& c)
    {
        if (c == 0)
            return;
        Integer& slot = terms_[Key{mu, d}];
        slot += c;
        if (slot == 0)
            terms_.erase(Key{mu, d});
    }

    Integer coefficient(const Partition& mu, int d) const
    {
        const auto it = terms_.find(Key{mu, d});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    friend bool operator==(const BettiPolynomial&, const BettiPolynomial&) = default;

private:
    Terms terms_;
};

/// "L(3,2) + L(4,4)w^3 + ..."
inline std::string to_string(const BettiPolynomial& p)
{
    if (p.empty())
        return "0";
    std::string out;
    for (const auto& [key, c] : p.terms()) {
        if (!out.empty())
            out += " + ";
        if (c != 1)
            out += c.str() + "*";
        out += "L(" + to_string(key.first) + ")";
        if (key.second == 1)
            out += "w";
        else if (key.second > 1)
            out += "w^" + std::to_string(key.second);
    }
    return out;
}

/// Numerical Betti table: entry (r, i) is beta_{i,i+r}. Rows run from
/// first_row to last_row, columns from 0 to columns-1.
struct BettiTable {
    Partition lambda;
    int m = 0;
    int n = 0;
    bool conjectural = true;
    int first_row = 0;
    int last_row = 0;
    int columns = 0;
    std::map<std::pair<int, int>, Integer> entries; // (row, column), nonzero only

    Integer at(int row, int column) const
    {
        const auto it = entries.find({row, column});
        return it == entries.end() ? Integer(0) : it->second;
    }

    void add(int row, int column, const Integer& c)
    {
        if (c == 0)
            return;
        Integer& slot = entries[{row, column}];
        slot += c;
        if (slot == 0)
            entries.erase({row, column});
        first_row = std::min(first_row, row);
        last_row = std::max(last_row, row);
        columns = std::max(columns, column + 1);
    }

    std::vector<Integer> row(int r) const
    {
        std::vector<Integer> out(static_cast<std::size_t>(columns));
        for (int i = 0; i < columns; ++i)
            out[static_cast<std::size_t>(i)] = at(r, i);
        return out;
    }

    friend bool operator==(const BettiTable& a, const BettiTable& b)
    {
        return a.lambda == b.lambda && a.m == b.m && a.n == b.n && a.conjectural == b.conjectural && a.first_row == b.first_row &&
            a.last_row == b.last_row && a.columns == b.columns && a.entries == b.entries;
    }
};

namespace detail {

inline bool is_rectangle(const Partition& lambda)
{
    return lambda.empty() || lambda.part(lambda.length()) == lambda.first();
}

} // namespace detail

inline BettiPolynomial betti_polynomial(const Partition& lambda, int m, int n, int slack = 0, int jobs = 1)
{
    detail::check_shape(lambda, m, n);
    BettiPolynomial out;
    for (const PatternEntry& e : enumerate_A(lambda, n, slack, jobs))
        out.add(e.shape, e.size.dyck, 1);
    return out;
}

/// Sum of [L_lambda(D)] over the patterns of A(lambda; n) with b bullets.
inline K0Class strand_classes(const Partition& lambda, int m, int n, int b, int slack = 0, int jobs = 1)
{
    detail::check_shape(lambda, m, n);
    if (b < 0)
        throw BadArgs("bullet count b must be >= 0");
    K0Class out;
    for (const PatternEntry& e : enumerate_A(lambda, n, slack, jobs))
        if (e.size.bullet == b)
            out.add(e.shape, 1);
    return out;
}

inline K0Class first_strand(const Partition& lambda, int m, int n, int slack = 0, int jobs = 1)
{
    detail::check_shape(lambda, m, n);
    K0Class out;
    for (const PatternEntry& e : enumerate_A0(lambda, n, slack, jobs))
        out.add(e.shape, 1);
    return out;
}

inline int regularity_enum(const Partition& lambda, int n, int slack = 0, int jobs = 1)
{
    int max_b = 0;
    for (const PatternEntry& e : enumerate_A(lambda, n, slack, jobs))
        max_b = std::max(max_b, e.size.bullet);
    return lambda.size() + max_b;
}

/// max over rows p with lambda_p > lambda_{p+1} (lambda_{n+1} = -1) of
/// n * lambda_p + (p - 2)(n - p).
inline int regularity_closed(const Partition& lambda, int n)
{
    if (n < 1)
        throw BadArgs("n must be >= 1");
    if (lambda.length() > n)
        throw TooManyRows("lambda has more than n parts");
    int best = 0;
    bool any = false;
    for (int p = 1; p <= n; ++p) {
        const int next = p == n ? -1 : lambda.part(p + 1);
        if (lambda.part(p) <= next)
            continue;
        const int value = n * lambda.part(p) + (p - 2) * (n - p);
        best = any ? std::max(best, value) : value;
        any = true;
    }
    return best;
}

/// Row r = |lambda| + b of a term (mu, d) takes the Hilbert series of L_mu,
/// the coefficient of t^(i+r) landing in column i.
inline BettiTable betti_table(const Partition& lambda, int m, int n, int slack = 0, int jobs = 1)
{
    const BettiPolynomial poly = betti_polynomial(lambda, m, n, slack, jobs);
    BettiTable table;
    table.lambda = lambda;
    table.m = m;
    table.n = n;
    table.conjectural = !detail::is_rectangle(lambda);
    table.first_row = table.last_row = lambda.size();
    for (const auto& [key, mult] : poly.terms()) {
        const auto& [mu, d] = key;
        const int row = mu.size() - d;
        const GradedSeries hs = simple_hilbert(mu, m, n);
        for (const auto& [deg, c] : hs.terms())
            table.add(row, deg - row, c * mult);
        table.last_row = std::max(table.last_row, row);
    }
    return table;
}

/// Entry (row, column) is the g0-character whose dimension is the
/// corresponding Betti number.
inline std::map<std::pair<int, int>, GLCharacter> equivariant_betti(const Partition& lambda, int m, int n, int slack = 0, int jobs = 1)
{
    const BettiPolynomial poly = betti_polynomial(lambda, m, n, slack, jobs);
    std::map<std::pair<int, int>, GLCharacter> out;
    for (const auto& [key, mult] : poly.terms()) {
        const auto& [mu, d] = key;
        const int row = mu.size() - d;
        const GLCharacter ch = simple_character(mu, m, n);
        for (const auto& [pair, c] : ch.terms()) {
            const int column = pair.first.size() - row;
            auto it = out.try_emplace({row, column}, m, n).first;
            it->second.add(pair.first, pair.second, c * mult);
        }
    }
    return out;
}

/// Gaussian binomial coefficient [top choose bottom]_q.
inline GradedSeries gauss_binomial(int top, int bottom)
{
    if (bottom < 0 || top < 0 || bottom > top)
        throw BadArgs("gauss_binomial needs 0 <= bottom <= top");
    // row[k] = [j choose k]_q, built up j = 0..top
    std::vector<GradedSeries> row(static_cast<std::size_t>(bottom) + 1);
    row[0] = GradedSeries::monomial(0);
    for (int j = 1; j <= top; ++j)
        for (int k = std::min(j, bottom); k >= 1; --k) {
            const auto ki = static_cast<std::size_t>(k);
            row[ki] = row[ki - 1] + row[ki].shifted(k);
        }
    return row[static_cast<std::size_t>(bottom)];
}

/// Closed form for a rectangle a x b:
///   sum_{q=0}^{n-a} L_{(a+q)x(b+q)} w^(q^2+2q) [q+min(a,b)-1 choose q]_{w^2}
inline BettiPolynomial rectangular_betti(int a, int b, int m, int n)
{
    if (n < 1 || a < 1 || a > n || b < 1 || m < n)
        throw BadArgs("rectangular_betti needs 1 <= a <= n <= m and b >= 1");
    BettiPolynomial out;
    const int side = std::min(a, b);
    for (int q = 0; q <= n - a; ++q) {
        const Partition mu = Partition::rectangle(a + q, b + q);
        const GradedSeries gauss = gauss_binomial(q + side - 1, q).substitute_power(2).shifted(q * q + 2 * q);
        for (const auto& [d, c] : gauss.terms())
            out.add(mu, d, c);
    }
    return out;
}

struct ReconstructionReport {
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Rebuilds the table from the strand classes and the simple Hilbert series
/// alone (no d values) and lists every cell that disagrees with betti_table.
inline ReconstructionReport hs_reconstruction_check(const Partition& lambda, int m, int n, int slack = 0, int jobs = 1)
{
    const BettiTable table = betti_table(lambda, m, n, slack, jobs);
    std::map<std::pair<int, int>, Integer> rebuilt;
    for (int b = 0; lambda.size() + b <= table.last_row; ++b) {
        const int row = lambda.size() + b;
        const K0Class strand = strand_classes(lambda, m, n, b, slack, jobs);
        for (const auto& [mu, mult] : strand.terms()) {
            const GradedSeries hs = simple_hilbert(mu, m, n);
            for (const auto& [deg, c] : hs.terms())
                rebuilt[{row, deg - row}] += c * mult;
        }
    }
    std::erase_if(rebuilt, [](const auto& kv) { return kv.second == 0; });

    ReconstructionReport report;
    auto cells = rebuilt;
    for (const auto& [cell, c] : table.entries)
        cells.try_emplace(cell, 0);
    for (const auto& [cell, unused] : cells) {
        const auto it = rebuilt.find(cell);
        const Integer expected = it == rebuilt.end() ? Integer(0) : it->second;
        const Integer actual = table.at(cell.first, cell.second);
        if (expected != actual)
            report.mismatches.push_back("row " + std::to_string(cell.first) + " column " + std::to_string(cell.second) + ": table " +
                actual.str() + ", strands " + expected.str());
    }
    return report;
}

/// Macaulay2-style layout: a header of column indices, then one "r:" line per
/// row with zeros shown as ".", every column right-aligned.
inline std::string render_betti_table(const BettiTable& table)
{
    std::vector<std::string> labels;
    for (int r = table.first_row; r <= table.last_row; ++r)
        labels.push_back(std::to_string(r) + ":");
    std::size_t label_width = 0;
    for (const auto& l : labels)
        label_width = std::max(label_width, l.size());

    std::vector<std::size_t> widths(static_cast<std::size_t>(table.columns));
    auto cell = [&](int r, int i) {
        const Integer v = table.at(r, i);
        return v == 0 ? std::string(".") : v.str();
    };
    for (int i = 0; i < table.columns; ++i) {
        std::size_t w = std::to_string(i).size();
        for (int r = table.first_row; r <= table.last_row; ++r)
            w = std::max(w, cell(r, i).size());
        widths[static_cast<std::size_t>(i)] = w;
    }

    auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
    std::string out = std::string(label_width, ' ');
    for (int i = 0; i < table.columns; ++i)
        out += " " + pad(std::to_string(i), widths[static_cast<std::size_t>(i)]);
    out += "\n";
    for (int r = table.first_row; r <= table.last_row; ++r) {
        out += pad(labels[static_cast<std::size_t>(r - table.first_row)], label_width);
        for (int i = 0; i < table.columns; ++i)
            out += " " + pad(cell(r, i), widths[static_cast<std::size_t>(i)]);
        out += "\n";
    }
    return out;
}

} // namespace dyckres
