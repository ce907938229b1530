#pragma once

#include "dyckres/errors.hpp"
#include "dyckres/integer.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyckres {

/// A box of the grid, indexed by the coordinates of its upper right corner:
/// `x` is the column, `y` the row. Row 1 is the bottom row, rows grow upward.
struct Box {
    int x = 1;
    int y = 1;

    friend constexpr auto operator<=>(const Box&, const Box&) = default;
};

inline Box north(Box b) { return {b.x, b.y + 1}; }
inline Box east(Box b) { return {b.x + 1, b.y}; }
inline Box north_east(Box b) { return {b.x + 1, b.y + 1}; }

/// Weakly decreasing sequence of positive parts. Trailing zeros are dropped
/// on construction, so `(4,2,2,1,0,0)` and `(4,2,2,1)` compare equal.
class Partition {
public:
    Partition() = default;

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw MalformedPartition("negative part in partition");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw MalformedPartition("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
    }

    /// Rectangle with `rows` parts equal to `cols`.
    static Partition rectangle(int rows, int cols)
    {
        if (rows < 0 || cols < 0)
            throw MalformedPartition("negative rectangle side");
        if (rows == 0 || cols == 0)
            return {};
        return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
    }

    /// Number of nonzero parts.
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// |lambda|
    int size() const
    {
        int total = 0;
        for (int p : parts_)
            total += p;
        return total;
    }

    /// 1-based access; rows past the last part read as zero.
    int part(int row) const
    {
        if (row < 1 || row > length())
            return 0;
        return parts_[static_cast<std::size_t>(row - 1)];
    }

    int first() const { return part(1); }

    std::span<const int> parts() const { return parts_; }

    bool contains_box(Box b) const { return b.x >= 1 && b.y >= 1 && b.x <= part(b.y); }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

inline Partition make_partition(std::vector<int> parts) { return Partition(std::move(parts)); }

/// All boxes of the Young diagram, row by row from the bottom.
inline std::vector<Box> boxes(const Partition& lambda)
{
    std::vector<Box> out;
    out.reserve(static_cast<std::size_t>(lambda.size()));
    for (int y = 1; y <= lambda.length(); ++y)
        for (int x = 1; x <= lambda.part(y); ++x)
            out.push_back({x, y});
    return out;
}

/// Corners (lambda_p, p) with lambda_p > lambda_{p+1}, by increasing p.
inline std::vector<Box> corners(const Partition& lambda)
{
    std::vector<Box> out;
    for (int p = 1; p <= lambda.length(); ++p)
        if (lambda.part(p) > lambda.part(p + 1))
            out.push_back({lambda.part(p), p});
    return out;
}

/// True iff mu fits inside lambda.
inline bool contains(const Partition& lambda, const Partition& mu)
{
    if (mu.length() > lambda.length())
        return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > lambda.part(i))
            return false;
    return true;
}

inline Partition conjugate(const Partition& lambda)
{
    std::vector<int> out(static_cast<std::size_t>(lambda.first()), 0);
    for (int p : lambda.parts())
        for (int i = 0; i < p; ++i)
            ++out[static_cast<std::size_t>(i)];
    return Partition(std::move(out));
}

/// dim S_lambda(C^N) by the hook-content formula. Numerator and denominator
/// are accumulated separately so the single division at the end is exact.
inline Integer schur_dimension(const Partition& lambda, int N)
{
    if (N < 1)
        throw BadArgs("schur_dimension needs N >= 1");
    if (lambda.length() > N)
        return 0;
    const Partition conj = conjugate(lambda);
    Integer numerator = 1;
    Integer denominator = 1;
    for (int row = 1; row <= lambda.length(); ++row) {
        for (int col = 1; col <= lambda.part(row); ++col) {
            const int arm = lambda.part(row) - col;
            const int leg = conj.part(col) - row;
            numerator *= N + col - row;
            denominator *= arm + leg + 1;
        }
    }
    return numerator / denominator;
}

/// Comma-separated parts, "" for the empty partition.
inline std::string to_string(const Partition& lambda)
{
    std::string out;
    for (int i = 1; i <= lambda.length(); ++i) {
        if (i > 1)
            out += ',';
        out += std::to_string(lambda.part(i));
    }
    return out;
}

/// Inverse of to_string. Whitespace around tokens is tolerated, as are
/// surrounding parentheses. Throws MalformedPartition on bad input.
inline Partition parse_partition(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
        text = trim(text.substr(1, text.size() - 2));
    std::vector<int> parts;
    if (text.empty())
        return {};
    while (true) {
        const auto comma = text.find(',');
        const std::string_view token = trim(text.substr(0, comma));
        int value = 0;
        const auto* begin = token.data();
        const auto* end = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (token.empty() || ec != std::errc() || ptr != end)
            throw MalformedPartition("not a partition part: '" + std::string(token) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

/// Visits every partition with at most `rows` parts and first part at most
/// `cols`, in lexicographic order of the part vectors.
inline void for_each_partition_in_box(int rows, int cols, const std::function<void(const Partition&)>& visit)
{
    std::vector<int> parts(static_cast<std::size_t>(std::max(rows, 0)), 0);
    std::function<void(int, int)> rec = [&](int index, int bound) {
        if (index == rows) {
            visit(Partition(parts));
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            parts[static_cast<std::size_t>(index)] = v;
            rec(index + 1, v);
        }
        parts[static_cast<std::size_t>(index)] = 0;
    };
    rec(0, cols);
}

inline std::vector<Partition> partitions_in_box(int rows, int cols)
{
    std::vector<Partition> out;
    for_each_partition_in_box(rows, cols, [&](const Partition& p) { out.push_back(p); });
    std::sort(out.begin(), out.end());
    return out;
}

/// Partitions of `total` with at most `max_rows` parts, each part at most `max_col`.
inline std::vector<Partition> partitions_of(int total, int max_rows, int max_col)
{
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int bound) {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        if (static_cast<int>(parts.size()) == max_rows)
            return;
        for (int v = std::min(remaining, bound); v >= 1; --v) {
            parts.push_back(v);
            rec(remaining - v, v);
            parts.pop_back();
        }
    };
    if (total >= 0)
        rec(total, max_col);
    return out;
}

} // namespace dyckres
