#pragma once

#include "dyckres/errors.hpp"
#include "dyckres/partition.hpp"

#include <algorithm>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dyckres {

enum class Step : char { East = 'E', South = 'S' };

/// A path of boxes moving east or south at each step, starting and ending on
/// the same antidiagonal x + y = level and never dipping below it.
class DyckPath {
public:
    /// Validates a box sequence. Throws NotDyck.
    static DyckPath from_boxes(std::vector<Box> boxes)
    {
        if (boxes.empty())
            throw NotDyck("a Dyck path needs at least one box");
        for (const Box& b : boxes)
            if (b.x < 1 || b.y < 1)
                throw NotDyck("box coordinates must be >= 1");
        for (std::size_t i = 0; i + 1 < boxes.size(); ++i) {
            const Box& a = boxes[i];
            const Box& b = boxes[i + 1];
            const bool step_east = b.x == a.x + 1 && b.y == a.y;
            const bool step_south = b.x == a.x && b.y == a.y - 1;
            if (!step_east && !step_south)
                throw NotDyck("consecutive boxes must differ by an east or south step");
        }
        const int level = boxes.front().x + boxes.front().y;
        if (boxes.back().x + boxes.back().y != level)
            throw NotDyck("endpoints lie on different antidiagonals");
        for (const Box& b : boxes)
            if (b.x + b.y < level)
                throw NotDyck("path dips below its level");
        DyckPath path;
        path.boxes_ = std::move(boxes);
        path.level_ = level;
        return path;
    }

    std::span<const Box> boxes() const { return boxes_; }
    int length() const { return static_cast<int>(boxes_.size()); }
    int level() const { return level_; }
    Box start() const { return boxes_.front(); }
    Box end() const { return boxes_.back(); }

    bool contains(Box b) const { return std::find(boxes_.begin(), boxes_.end(), b) != boxes_.end(); }

    /// Index of `b` within the path, or -1.
    int index_of(Box b) const
    {
        const auto it = std::find(boxes_.begin(), boxes_.end(), b);
        return it == boxes_.end() ? -1 : static_cast<int>(it - boxes_.begin());
    }

    std::vector<Step> steps() const
    {
        std::vector<Step> out;
        for (std::size_t i = 0; i + 1 < boxes_.size(); ++i)
            out.push_back(boxes_[i + 1].x > boxes_[i].x ? Step::East : Step::South);
        return out;
    }

    friend bool operator==(const DyckPath& a, const DyckPath& b) { return a.boxes_ == b.boxes_; }

private:
    DyckPath() = default;

    std::vector<Box> boxes_;
    int level_ = 0;
};

inline DyckPath make_dyck_path(Box start, std::span<const Step> steps)
{
    if (start.x < 1 || start.y < 1)
        throw NotDyck("start box coordinates must be >= 1");
    std::vector<Box> path{start};
    for (Step s : steps) {
        Box next = path.back();
        if (s == Step::East)
            ++next.x;
        else
            --next.y;
        path.push_back(next);
    }
    return DyckPath::from_boxes(std::move(path));
}

inline DyckPath make_dyck_path(Box start, std::initializer_list<Step> steps)
{
    return make_dyck_path(start, std::span<const Step>(steps.begin(), steps.size()));
}

/// Canonical order of paths in a pattern: start row descending, then start
/// column ascending. Disjoint paths never share a start, so this is total.
inline bool canonical_less(const DyckPath& a, const DyckPath& b)
{
    if (a.start().y != b.start().y)
        return a.start().y > b.start().y;
    if (a.start().x != b.start().x)
        return a.start().x < b.start().x;
    return std::lexicographical_compare(a.boxes().begin(), a.boxes().end(), b.boxes().begin(), b.boxes().end());
}

/// Dyck paths together with their bullet boxes. Paths are kept in canonical
/// order and bullets sorted, so two equal patterns compare equal.
class DyckPattern {
public:
    DyckPattern() = default;

    DyckPattern(std::vector<DyckPath> paths, std::vector<Box> bullets) : paths_(std::move(paths)), bullets_(std::move(bullets))
    {
        std::sort(paths_.begin(), paths_.end(), canonical_less);
        std::sort(bullets_.begin(), bullets_.end());
        bullets_.erase(std::unique(bullets_.begin(), bullets_.end()), bullets_.end());
    }

    std::span<const DyckPath> paths() const { return paths_; }
    std::span<const Box> bullets() const { return bullets_; }
    bool empty() const { return paths_.empty() && bullets_.empty(); }

    /// Boxes of all paths followed by bullets.
    std::vector<Box> support() const
    {
        std::vector<Box> out;
        for (const DyckPath& p : paths_)
            out.insert(out.end(), p.boxes().begin(), p.boxes().end());
        out.insert(out.end(), bullets_.begin(), bullets_.end());
        return out;
    }

    int min_path_length() const
    {
        int best = 0;
        for (const DyckPath& p : paths_)
            best = best == 0 ? p.length() : std::min(best, p.length());
        return best;
    }

    friend bool operator==(const DyckPattern&, const DyckPattern&) = default;

private:
    std::vector<DyckPath> paths_;
    std::vector<Box> bullets_;
};

struct PatternSizes {
    int dyck = 0;   // d: total path length
    int bullet = 0; // b: number of bullets
    int total = 0;  // d + b

    friend bool operator==(const PatternSizes&, const PatternSizes&) = default;
};

inline PatternSizes sizes(const DyckPattern& pattern)
{
    PatternSizes s;
    for (const DyckPath& p : pattern.paths())
        s.dyck += p.length();
    s.bullet = static_cast<int>(pattern.bullets().size());
    s.total = s.dyck + s.bullet;
    return s;
}

struct Closure {
    Partition shape;          // lambda(D)
    std::vector<Box> bullets; // shape minus lambda minus path boxes, sorted
};

/// lambda(D) reconstructed from lambda and the paths alone: a box belongs to
/// it iff it lies in lambda or weakly south-west of some path box. Throws
/// OverlapError when paths meet each other or lambda.
inline Closure lambda_of(const Partition& lambda, std::span<const DyckPath> paths)
{
    std::set<Box> path_boxes;
    int top = lambda.length();
    for (const DyckPath& p : paths) {
        for (const Box& b : p.boxes()) {
            if (lambda.contains_box(b))
                throw OverlapError("path box lies inside lambda");
            if (!path_boxes.insert(b).second)
                throw OverlapError("paths are not pairwise disjoint");
            top = std::max(top, b.y);
        }
    }
    std::vector<int> rows(static_cast<std::size_t>(top), 0);
    for (int y = 1; y <= top; ++y)
        rows[static_cast<std::size_t>(y - 1)] = lambda.part(y);
    for (const Box& b : path_boxes)
        for (int y = 1; y <= b.y; ++y)
            rows[static_cast<std::size_t>(y - 1)] = std::max(rows[static_cast<std::size_t>(y - 1)], b.x);
    Closure out{Partition(std::move(rows)), {}};
    for (const Box& b : boxes(out.shape))
        if (!lambda.contains_box(b) && !path_boxes.contains(b))
            out.bullets.push_back(b);
    return out;
}

inline Closure lambda_of(const Partition& lambda, const DyckPattern& pattern) { return lambda_of(lambda, pattern.paths()); }

/// Pattern whose bullets are the ones forced by lambda and the paths.
inline DyckPattern derive_pattern(const Partition& lambda, std::vector<DyckPath> paths)
{
    Closure c = lambda_of(lambda, paths);
    return DyckPattern(std::move(paths), std::move(c.bullets));
}

enum class Violation {
    None,
    Overlap,             // paths/bullets not pairwise disjoint
    MeetsLambda,         // condition (1)
    NotPartition,        // condition (2)
    BulletDecomposition, // bullets are not heads/tails of the paths
    NeighborRule,        // condition (3)
    BulletNeighbor,      // condition (4)
};

inline const char* to_string(Violation v)
{
    switch (v) {
    case Violation::None:
        return "admissible";
    case Violation::Overlap:
        return "paths and bullets are not pairwise disjoint";
    case Violation::MeetsLambda:
        return "condition (1): support meets lambda";
    case Violation::NotPartition:
        return "condition (2): lambda(D) is not a partition";
    case Violation::BulletDecomposition:
        return "bullets do not split into heads and tails of the paths";
    case Violation::NeighborRule:
        return "condition (3): N/E/NE neighbour rule between two paths";
    case Violation::BulletNeighbor:
        return "condition (4): bullet directly N, E or NE of a path box";
    }
    return "?";
}

struct Admissibility {
    Violation violation = Violation::None;

    bool admissible() const { return violation == Violation::None; }
    explicit operator bool() const { return admissible(); }
    std::string reason() const { return to_string(violation); }
};

namespace detail {

inline std::set<Box> ne_neighbours(const DyckPath& p)
{
    std::set<Box> out;
    for (const Box& b : p.boxes()) {
        out.insert(north(b));
        out.insert(east(b));
        out.insert(north_east(b));
    }
    return out;
}

/// The neighbour rule for one ordered pair (i, j): if some box of `other`
/// touches `path` from the N, E or NE, every such neighbour of `path` must lie
/// in `path` or `other`.
inline bool neighbour_rule_holds(const DyckPath& path, const std::set<Box>& path_neighbours, const DyckPath& other)
{
    bool touches = false;
    for (const Box& b : other.boxes())
        if (path_neighbours.contains(b)) {
            touches = true;
            break;
        }
    if (!touches)
        return true;
    for (const Box& b : path_neighbours)
        if (!path.contains(b) && !other.contains(b))
            return false;
    return true;
}

/// Extends heads leftward and tails downward as far as the bullet set allows
/// and reports whether that covers every bullet. Heads and tails are straight
/// runs anchored at the path ends, so maximal claiming loses nothing.
inline bool bullets_decompose(std::span<const DyckPath> paths, const std::set<Box>& bullets)
{
    std::set<Box> claimed;
    for (const DyckPath& p : paths) {
        for (Box b{p.start().x - 1, p.start().y}; bullets.contains(b); --b.x)
            claimed.insert(b);
        for (Box b{p.end().x, p.end().y - 1}; bullets.contains(b); --b.y)
            claimed.insert(b);
    }
    return claimed.size() == bullets.size();
}

} // namespace detail

/// Checks lambda-admissibility, naming the first violated condition.
inline Admissibility check_admissible(const Partition& lambda, const DyckPattern& pattern)
{
    std::set<Box> seen;
    for (const Box& b : pattern.support())
        if (!seen.insert(b).second)
            return {Violation::Overlap};

    for (const Box& b : seen)
        if (lambda.contains_box(b))
            return {Violation::MeetsLambda};

    // lambda u supp must be closed under moving west or south.
    for (const Box& b : seen) {
        const Box west{b.x - 1, b.y};
        const Box south{b.x, b.y - 1};
        if (west.x >= 1 && !lambda.contains_box(west) && !seen.contains(west))
            return {Violation::NotPartition};
        if (south.y >= 1 && !lambda.contains_box(south) && !seen.contains(south))
            return {Violation::NotPartition};
    }

    const std::set<Box> bullets(pattern.bullets().begin(), pattern.bullets().end());
    if (!detail::bullets_decompose(pattern.paths(), bullets))
        return {Violation::BulletDecomposition};

    const auto paths = pattern.paths();
    std::vector<std::set<Box>> neighbours;
    neighbours.reserve(paths.size());
    for (const DyckPath& p : paths)
        neighbours.push_back(detail::ne_neighbours(p));

    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = 0; j < paths.size(); ++j)
            if (i != j && !detail::neighbour_rule_holds(paths[i], neighbours[i], paths[j]))
                return {Violation::NeighborRule};

    for (const auto& ns : neighbours)
        for (const Box& b : ns)
            if (bullets.contains(b))
                return {Violation::BulletNeighbor};

    return {};
}

inline bool is_admissible(const Partition& lambda, const DyckPattern& pattern)
{
    return check_admissible(lambda, pattern).admissible();
}

/// ASCII picture in the style of the figures: lambda boxes as 'x', path boxes
/// as '#' joined by '-' (east steps) and '|' (south steps), bullets as 'o'.
/// The top row is printed first; trailing blanks are trimmed.
inline std::string render_pattern(const Partition& lambda, const DyckPattern& pattern)
{
    const Closure closure = lambda_of(lambda, pattern);
    int width = closure.shape.first();
    int height = closure.shape.length();
    for (const Box& b : pattern.bullets()) {
        width = std::max(width, b.x);
        height = std::max(height, b.y);
    }
    if (width == 0 || height == 0)
        return {};

    // Each box occupies column 2x-2 of a (2*width-1)-wide canvas; rows of
    // boxes alternate with connector rows.
    const int cols = 2 * width - 1;
    const int lines = 2 * height - 1;
    std::vector<std::string> canvas(static_cast<std::size_t>(lines), std::string(static_cast<std::size_t>(cols), ' '));
    auto at = [&](int line, int col) -> char& { return canvas[static_cast<std::size_t>(line)][static_cast<std::size_t>(col)]; };
    auto line_of = [&](int y) { return 2 * (height - y); };

    for (const Box& b : boxes(lambda))
        at(line_of(b.y), 2 * b.x - 2) = 'x';
    for (const Box& b : pattern.bullets())
        at(line_of(b.y), 2 * b.x - 2) = 'o';
    for (const DyckPath& p : pattern.paths()) {
        const auto bs = p.boxes();
        for (std::size_t i = 0; i < bs.size(); ++i) {
            at(line_of(bs[i].y), 2 * bs[i].x - 2) = '#';
            if (i + 1 < bs.size()) {
                if (bs[i + 1].x > bs[i].x)
                    at(line_of(bs[i].y), 2 * bs[i].x - 1) = '-';
                else
                    at(line_of(bs[i].y) + 1, 2 * bs[i].x - 2) = '|';
            }
        }
    }

    std::string out;
    for (std::string& line : canvas) {
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace dyckres
