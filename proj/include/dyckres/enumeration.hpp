#pragma once

#include "dyckres/dyck.hpp"
#include "dyckres/errors.hpp"
#include "dyckres/partition.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>
#include <string>
#include <vector>

namespace dyckres {

/// Rows 1..max_row, columns 1..max_col. The column bound lambda_1 + n is not
/// proved sufficient; `slack` widens it so stability can be tested.
struct SearchRegion {
    int max_row = 1;
    int max_col = 1;
    int slack = 0;

    static SearchRegion for_lambda(const Partition& lambda, int n, int slack = 0)
    {
        return {n, lambda.first() + n + slack, slack};
    }

    bool contains(Box b) const { return b.x >= 1 && b.y >= 1 && b.x <= max_col && b.y <= max_row; }
};

/// Which family of patterns to enumerate.
///   K  - no bullets, paths of any length (composition factors of Kac modules)
///   A  - bullets allowed, every path of length >= 3
///   A0 - A without bullets
enum class PatternSet { K, A, A0 };

inline const char* to_string(PatternSet s)
{
    switch (s) {
    case PatternSet::K:
        return "K";
    case PatternSet::A:
        return "A";
    case PatternSet::A0:
        return "A0";
    }
    return "?";
}

/// A pattern together with lambda(D) and its sizes.
struct PatternEntry {
    DyckPattern pattern;
    Partition shape;
    PatternSizes size;

    friend bool operator==(const PatternEntry&, const PatternEntry&) = default;
};

/// Output order: |lambda(D)|, then lambda(D) lexicographically, then d, then
/// the path boxes.
inline bool entry_less(const PatternEntry& a, const PatternEntry& b)
{
    if (a.shape.size() != b.shape.size())
        return a.shape.size() < b.shape.size();
    if (a.shape != b.shape)
        return a.shape < b.shape;
    if (a.size.dyck != b.size.dyck)
        return a.size.dyck < b.size.dyck;
    const auto pa = a.pattern.paths();
    const auto pb = b.pattern.paths();
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end(), [](const DyckPath& x, const DyckPath& y) {
        return std::lexicographical_compare(x.boxes().begin(), x.boxes().end(), y.boxes().begin(), y.boxes().end());
    });
}

namespace detail {

/// Visits every Dyck path of length >= min_len that starts at `start` and
/// whose boxes all satisfy `usable`.
template <class Usable, class Visit>
void for_each_dyck_path_from(Box start, int min_len, Usable&& usable, Visit&& visit)
{
    if (!usable(start))
        return;
    const int level = start.x + start.y;
    std::vector<Box> current{start};
    std::function<void()> grow = [&]() {
        const Box last = current.back();
        if (last.x + last.y == level && static_cast<int>(current.size()) >= min_len)
            visit(current);
        const Box e{last.x + 1, last.y};
        if (usable(e)) {
            current.push_back(e);
            grow();
            current.pop_back();
        }
        const Box s{last.x, last.y - 1};
        if (s.x + s.y >= level && usable(s)) {
            current.push_back(s);
            grow();
            current.pop_back();
        }
    };
    grow();
}

/// Splits the skew shape target/lambda into Dyck paths (and, when allowed,
/// bullets) by deciding each free box in canonical order: top row first,
/// left to right. The first undecided box is always a path start or a
/// bullet, because its possible predecessors have already been decided.
class ShapeDecomposer {
public:
    ShapeDecomposer(const Partition& lambda, const Partition& target, int min_len, bool allow_bullets)
        : lambda_(lambda), target_(target), min_len_(min_len), allow_bullets_(allow_bullets),
          width_(target.first()), height_(target.length()),
          cells_(static_cast<std::size_t>((width_ + 2) * (height_ + 2)), kOutside)
    {
        for (int y = height_; y >= 1; --y)
            for (int x = lambda.part(y) + 1; x <= target.part(y); ++x) {
                cell({x, y}) = kFree;
                order_.push_back({x, y});
            }
    }

    void run(const std::function<void(DyckPattern)>& emit)
    {
        emit_ = &emit;
        step(0);
    }

private:
    static constexpr int kOutside = -3;
    static constexpr int kFree = -2;
    static constexpr int kBullet = -1;

    int& cell(Box b) { return cells_[static_cast<std::size_t>(b.y * (width_ + 2) + b.x)]; }
    int state(Box b) const
    {
        if (b.x < 0 || b.y < 0 || b.x > width_ + 1 || b.y > height_ + 1)
            return kOutside;
        return cells_[static_cast<std::size_t>(b.y * (width_ + 2) + b.x)];
    }
    bool is_path(Box b) const { return state(b) >= 0; }

    void step(std::size_t k)
    {
        while (k < order_.size() && state(order_[k]) != kFree)
            ++k;
        if (k == order_.size()) {
            finish();
            return;
        }
        const Box c = order_[k];

        auto usable = [&](Box b) { return state(b) == kFree; };
        for_each_dyck_path_from(c, min_len_, usable, [&](const std::vector<Box>& boxes) {
            DyckPath path = DyckPath::from_boxes(boxes);
            if (!compatible(path))
                return;
            const int id = static_cast<int>(paths_.size());
            for (const Box& b : path.boxes())
                cell(b) = id;
            neighbours_.push_back(ne_neighbours(path));
            paths_.push_back(std::move(path));
            step(k + 1);
            paths_.pop_back();
            neighbours_.pop_back();
            for (const Box& b : boxes)
                cell(b) = kFree;
        });

        if (allow_bullets_ && bullet_allowed(c)) {
            cell(c) = kBullet;
            step(k + 1);
            cell(c) = kFree;
        }
    }

    // Conditions (3) and (4) against everything placed so far.
    bool compatible(const DyckPath& path) const
    {
        const std::set<Box> ns = ne_neighbours(path);
        for (const Box& b : ns)
            if (state(b) == kBullet)
                return false;
        for (std::size_t j = 0; j < paths_.size(); ++j) {
            if (!neighbour_rule_holds(path, ns, paths_[j]))
                return false;
            if (!neighbour_rule_holds(paths_[j], neighbours_[j], path))
                return false;
        }
        return true;
    }

    bool bullet_allowed(Box c) const
    {
        // Condition (4): no path box directly S, W or SW of a bullet.
        if (is_path({c.x, c.y - 1}) || is_path({c.x - 1, c.y}) || is_path({c.x - 1, c.y - 1}))
            return false;
        // A tail hangs below the last box of a path.
        Box up{c.x, c.y + 1};
        while (state(up) == kBullet)
            ++up.y;
        if (is_path(up) && paths_[static_cast<std::size_t>(state(up))].end() == up)
            return true;
        // Otherwise it must be a head, continued to the east by more head
        // bullets and finally a path start, all still undecided.
        return state({c.x + 1, c.y}) == kFree;
    }

    void finish()
    {
        std::vector<Box> bullets;
        for (const Box& b : order_)
            if (state(b) == kBullet)
                bullets.push_back(b);
        DyckPattern pattern(paths_, std::move(bullets));
        if (check_admissible(lambda_, pattern))
            (*emit_)(std::move(pattern));
    }

    const Partition& lambda_;
    const Partition& target_;
    int min_len_;
    bool allow_bullets_;
    int width_;
    int height_;
    std::vector<int> cells_;
    std::vector<Box> order_;
    std::vector<DyckPath> paths_;
    std::vector<std::set<Box>> neighbours_;
    const std::function<void(DyckPattern)>* emit_ = nullptr;
};

inline std::vector<PatternEntry> enumerate_patterns(const Partition& lambda, int n, PatternSet set, int slack, int jobs)
{
    if (n < 1)
        throw BadArgs("n must be >= 1");
    if (slack < 0)
        throw BadArgs("slack must be >= 0");
    if (lambda.length() > n)
        throw TooManyRows("lambda has " + std::to_string(lambda.length()) + " parts but n = " + std::to_string(n));

    const SearchRegion region = SearchRegion::for_lambda(lambda, n, slack);
    const bool bullets = set == PatternSet::A;
    const int min_len = set == PatternSet::K ? 1 : 3;

    // Candidate shapes: lambda <= nu inside the region.
    std::vector<Partition> targets;
    {
        std::vector<int> parts(static_cast<std::size_t>(n), 0);
        std::function<void(int, int)> rec = [&](int row, int bound) {
            if (row > n) {
                targets.emplace_back(parts);
                return;
            }
            for (int v = lambda.part(row); v <= bound; ++v) {
                parts[static_cast<std::size_t>(row - 1)] = v;
                rec(row + 1, v);
            }
        };
        rec(1, region.max_col);
    }

    auto work = [&](std::size_t begin, std::size_t stride) {
        std::vector<PatternEntry> found;
        for (std::size_t i = begin; i < targets.size(); i += stride) {
            const Partition& target = targets[i];
            ShapeDecomposer decomposer(lambda, target, min_len, bullets);
            decomposer.run([&](DyckPattern pattern) {
                PatternEntry e{std::move(pattern), target, {}};
                e.size = sizes(e.pattern);
                found.push_back(std::move(e));
            });
        }
        return found;
    };

    std::vector<PatternEntry> out;
    const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1) {
        out = work(0, 1);
    } else {
        std::vector<std::future<std::vector<PatternEntry>>> parts;
        for (std::size_t w = 0; w < workers; ++w)
            parts.push_back(std::async(std::launch::async, work, w, workers));
        for (auto& f : parts) {
            auto chunk = f.get();
            out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
        }
    }

    if (set == PatternSet::A0)
        std::erase_if(out, [](const PatternEntry& e) { return e.size.bullet != 0; });
    std::sort(out.begin(), out.end(), entry_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace detail

/// Every Dyck path inside the region, disjoint from lambda, of length at
/// least min_len. A superset of the paths of any admissible pattern there.
inline std::vector<DyckPath> enumerate_candidate_paths(const Partition& lambda, const SearchRegion& region, int min_len)
{
    std::vector<DyckPath> out;
    auto usable = [&](Box b) { return region.contains(b) && !lambda.contains_box(b); };
    for (int y = region.max_row; y >= 1; --y)
        for (int x = 1; x <= region.max_col; ++x)
            detail::for_each_dyck_path_from({x, y}, std::max(min_len, 1), usable,
                                            [&](const std::vector<Box>& bs) { out.push_back(DyckPath::from_boxes(bs)); });
    std::sort(out.begin(), out.end(), [](const DyckPath& a, const DyckPath& b) { return canonical_less(a, b); });
    return out;
}

/// lambda-admissible bulletless patterns, paths of any length, at most n rows.
inline std::vector<PatternEntry> enumerate_K(const Partition& lambda, int n, int slack = 0, int jobs = 1)
{
    return detail::enumerate_patterns(lambda, n, PatternSet::K, slack, jobs);
}

/// lambda-admissible augmented patterns with no path of length one.
inline std::vector<PatternEntry> enumerate_A(const Partition& lambda, int n, int slack = 0, int jobs = 1)
{
    return detail::enumerate_patterns(lambda, n, PatternSet::A, slack, jobs);
}

/// The bulletless part of enumerate_A.
inline std::vector<PatternEntry> enumerate_A0(const Partition& lambda, int n, int slack = 0, int jobs = 1)
{
    return detail::enumerate_patterns(lambda, n, PatternSet::A0, slack, jobs);
}

inline std::vector<PatternEntry> enumerate(const Partition& lambda, int n, PatternSet set, int slack = 0, int jobs = 1)
{
    return detail::enumerate_patterns(lambda, n, set, slack, jobs);
}

/// Hooks of lengths 3, 5, ..., 2(n-p)+1 wrapped around the corner
/// (lambda_p, p); bullets are whatever lambda and the hooks force. Row n+1 is
/// taken to have length -1, so p = n always qualifies.
inline PatternEntry corner_hook_pattern(const Partition& lambda, int n, int p)
{
    if (lambda.length() > n)
        throw TooManyRows("lambda has more than n parts");
    if (p < 1 || p > n)
        throw BadArgs("corner row must satisfy 1 <= p <= n");
    const int next = p == n ? -1 : lambda.part(p + 1);
    const int lp = lambda.part(p);
    if (lp <= next)
        throw NotACorner("(lambda_p, p) is not a corner for p = " + std::to_string(p));

    std::vector<DyckPath> hooks;
    for (int i = 1; i <= n - p; ++i) {
        std::vector<Box> bs;
        for (int j = i; j >= 0; --j)
            bs.push_back({lp + i - j, p + i});
        for (int j = 1; j <= i; ++j)
            bs.push_back({lp + i, p + i - j});
        hooks.push_back(DyckPath::from_boxes(std::move(bs)));
    }
    Closure closure = lambda_of(lambda, hooks);
    PatternEntry e{DyckPattern(std::move(hooks), std::move(closure.bullets)), std::move(closure.shape), {}};
    e.size = sizes(e.pattern);
    if (!check_admissible(lambda, e.pattern))
        throw ConsistencyError("corner hook pattern is not admissible: " + check_admissible(lambda, e.pattern).reason());
    return e;
}

} // namespace dyckres
