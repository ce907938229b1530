#pragma once

// Exhaustive pattern enumeration: every Dyck path in the search rectangle,
// every set of pairwise disjoint ones, bullets taken as the south-west
// closure, admissibility checked directly from the four conditions. Slow,
// but shares nothing with the library's search besides the rectangle.

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using Cell = std::pair<int, int>; // (x, y)
using Path = std::vector<Cell>;

struct BrutePattern {
    std::vector<int> shape; // lambda(D), no trailing zeros
    int d = 0;
    int b = 0;
    std::vector<Path> paths; // sorted

    auto key() const { return std::tie(shape, d, b, paths); }
    friend bool operator<(const BrutePattern& l, const BrutePattern& r) { return l.key() < r.key(); }
    friend bool operator==(const BrutePattern& l, const BrutePattern& r) { return l.key() == r.key(); }
};

inline bool in_lambda(const std::vector<int>& lambda, Cell c)
{
    return c.second >= 1 && c.second <= static_cast<int>(lambda.size()) && c.first >= 1 && c.first <= lambda[static_cast<std::size_t>(c.second - 1)];
}

inline std::vector<Path> all_dyck_paths(const std::vector<int>& lambda, int rows, int cols)
{
    std::vector<Path> out;
    for (int y = 1; y <= rows; ++y)
        for (int x = 1; x <= cols; ++x) {
            if (in_lambda(lambda, {x, y}))
                continue;
            const int level = x + y;
            Path p{{x, y}};
            auto grow = [&](auto&& self) -> void {
                const Cell last = p.back();
                if (last.first + last.second == level)
                    out.push_back(p);
                for (const Cell& next : {Cell{last.first + 1, last.second}, Cell{last.first, last.second - 1}}) {
                    if (next.first > cols || next.second < 1 || next.first + next.second < level || in_lambda(lambda, next))
                        continue;
                    p.push_back(next);
                    self(self);
                    p.pop_back();
                }
            };
            grow(grow);
        }
    return out;
}

inline std::set<Cell> ne_of(const Path& p)
{
    std::set<Cell> out;
    for (const auto& [x, y] : p)
        for (const Cell& c : {Cell{x, y + 1}, Cell{x + 1, y}, Cell{x + 1, y + 1}})
            if (std::find(p.begin(), p.end(), c) == p.end())
                out.insert(c);
    return out;
}

/// Returns false if the chosen paths do not form an admissible pattern;
/// otherwise fills `out`.
inline bool evaluate(const std::vector<int>& lambda, const std::vector<Path>& paths, BrutePattern& out)
{
    std::set<Cell> path_cells;
    int top = static_cast<int>(lambda.size());
    for (const Path& p : paths)
        for (const Cell& c : p) {
            path_cells.insert(c);
            top = std::max(top, c.second);
        }
    // closure: every cell weakly south-west of a path cell, plus lambda
    std::vector<int> shape(static_cast<std::size_t>(top), 0);
    for (int y = 1; y <= top; ++y)
        shape[static_cast<std::size_t>(y - 1)] = y <= static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(y - 1)] : 0;
    for (const Cell& c : path_cells)
        for (int y = 1; y <= c.second; ++y)
            shape[static_cast<std::size_t>(y - 1)] = std::max(shape[static_cast<std::size_t>(y - 1)], c.first);
    for (std::size_t i = 0; i + 1 < shape.size(); ++i)
        if (shape[i] < shape[i + 1])
            return false;
    std::set<Cell> bullets;
    for (int y = 1; y <= top; ++y)
        for (int x = 1; x <= shape[static_cast<std::size_t>(y - 1)]; ++x)
            if (!in_lambda(lambda, {x, y}) && !path_cells.contains({x, y}))
                bullets.insert({x, y});

    // every bullet must sit in the head run or tail run of some path
    for (const Cell& c : bullets) {
        bool covered = false;
        for (const Path& p : paths) {
            const Cell s = p.front();
            const Cell e = p.back();
            if (c.second == s.second && c.first < s.first) {
                bool run = true;
                for (int x = c.first; x < s.first; ++x)
                    run = run && bullets.contains({x, c.second});
                covered = covered || run;
            }
            if (c.first == e.first && c.second < e.second) {
                bool run = true;
                for (int y = c.second; y < e.second; ++y)
                    run = run && bullets.contains({c.first, y});
                covered = covered || run;
            }
        }
        if (!covered)
            return false;
    }

    for (std::size_t i = 0; i < paths.size(); ++i) {
        const std::set<Cell> ni = ne_of(paths[i]);
        for (const Cell& c : ni)
            if (bullets.contains(c))
                return false;
        for (std::size_t j = 0; j < paths.size(); ++j) {
            if (i == j)
                continue;
            const Path& pj = paths[j];
            const bool touches = std::any_of(pj.begin(), pj.end(), [&](Cell c) { return ni.contains(c); });
            if (!touches)
                continue;
            for (const Cell& c : ni)
                if (std::find(pj.begin(), pj.end(), c) == pj.end())
                    return false;
        }
    }

    while (!shape.empty() && shape.back() == 0)
        shape.pop_back();
    out.shape = shape;
    out.d = static_cast<int>(path_cells.size());
    out.b = static_cast<int>(bullets.size());
    out.paths = paths;
    std::sort(out.paths.begin(), out.paths.end());
    return true;
}

enum class Family { K, A, A0 };

/// All admissible patterns with lambda(D) in `rows` rows and paths inside
/// columns 1..cols, filtered to the family.
inline std::vector<BrutePattern> brute_enumerate(const std::vector<int>& lambda, int rows, int cols, Family family)
{
    const std::vector<Path> candidates = all_dyck_paths(lambda, rows, cols);
    std::vector<BrutePattern> out;
    std::vector<Path> chosen;
    std::set<Cell> used;
    auto choose = [&](auto&& self, std::size_t from) -> void {
        BrutePattern bp;
        if (evaluate(lambda, chosen, bp)) {
            bool keep = static_cast<int>(bp.shape.size()) <= rows;
            const bool long_paths = std::all_of(chosen.begin(), chosen.end(), [](const Path& p) { return p.size() >= 3; });
            if (family == Family::K)
                keep = keep && bp.b == 0;
            else if (family == Family::A)
                keep = keep && long_paths;
            else
                keep = keep && long_paths && bp.b == 0;
            if (keep)
                out.push_back(bp);
        }
        for (std::size_t i = from; i < candidates.size(); ++i) {
            const Path& p = candidates[i];
            if (std::any_of(p.begin(), p.end(), [&](Cell c) { return used.contains(c); }))
                continue;
            for (const Cell& c : p)
                used.insert(c);
            chosen.push_back(p);
            self(self, i + 1);
            chosen.pop_back();
            for (const Cell& c : p)
                used.erase(c);
        }
    };
    choose(choose, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle
