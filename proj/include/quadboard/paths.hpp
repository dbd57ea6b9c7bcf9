#pragma once

// Checkerboard paths as direction sequences, exhaustive enumeration, bend
// bookkeeping and per-path amplitudes on the quadratic lattice.
//
// A path runs from the origin with P Right segments (increasing r) and Q Left
// segments (increasing l). On the quadratic lattice the j-th segment on a side
// has length (2j - 1) * eps0, and every bend contributes i times the length of
// the segment just before it. The last bend is fixed by the endpoint and does
// not enter the product, so a path with R >= 1 bends contributes a single
// monomial of order R - 1.

#include <string>
#include <string_view>
#include <vector>

#include "quadboard/amplitude.hpp"
#include "quadboard/errors.hpp"
#include "quadboard/rational.hpp"

namespace quadboard {

enum class Direction : unsigned char { Right, Left };

inline char to_char(Direction d) { return d == Direction::Right ? 'R' : 'L'; }

inline Direction opposite(Direction d) { return d == Direction::Right ? Direction::Left : Direction::Right; }

inline Direction parse_direction(std::string_view s) {
    if (s == "R" || s == "Right" || s == "right" || s == "+") return Direction::Right;
    if (s == "L" || s == "Left" || s == "left" || s == "-") return Direction::Left;
    throw invalid_parameter("unknown direction '" + std::string(s) + "' (expected R or L)");
}

class LatticePath {
public:
    explicit LatticePath(std::vector<Direction> segments) : segments_(std::move(segments)) {
        if (segments_.empty()) throw invalid_parameter("a path needs at least one segment");
    }

    static LatticePath parse(std::string_view text) {
        std::vector<Direction> segs;
        segs.reserve(text.size());
        for (char c : text) segs.push_back(parse_direction(std::string_view(&c, 1)));
        return LatticePath(std::move(segs));
    }

    const std::vector<Direction>& segments() const { return segments_; }
    Direction start_dir() const { return segments_.front(); }
    Direction end_dir() const { return segments_.back(); }
    unsigned size() const { return static_cast<unsigned>(segments_.size()); }

    unsigned right_count() const {
        unsigned n = 0;
        for (auto d : segments_) n += d == Direction::Right;
        return n;
    }
    unsigned left_count() const { return size() - right_count(); }

    /// R: number of adjacent unequal pairs.
    unsigned bends() const {
        unsigned r = 0;
        for (std::size_t i = 1; i < segments_.size(); ++i) r += segments_[i] != segments_[i - 1];
        return r;
    }

    /// Bends turning toward Right (after a Left segment).
    unsigned bends_to_right() const {
        unsigned r = 0;
        for (std::size_t i = 1; i < segments_.size(); ++i)
            r += segments_[i - 1] == Direction::Left && segments_[i] == Direction::Right;
        return r;
    }
    unsigned bends_to_left() const { return bends() - bends_to_right(); }

    std::string str() const {
        std::string s;
        s.reserve(segments_.size());
        for (auto d : segments_) s.push_back(to_char(d));
        return s;
    }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;

private:
    std::vector<Direction> segments_;
};

/// One bend. `side` is the direction of the segment just before it and
/// `coord` that segment's index among same-side segments (1-based).
struct BendRecord {
    Direction side;
    unsigned coord;
    bool counted;

    friend bool operator==(const BendRecord&, const BendRecord&) = default;
};

inline std::vector<BendRecord> bend_records(const LatticePath& path) {
    std::vector<BendRecord> out;
    unsigned rights = 0, lefts = 0;
    const auto& segs = path.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
        unsigned& side_count = segs[i] == Direction::Right ? rights : lefts;
        ++side_count;
        if (i + 1 < segs.size() && segs[i + 1] != segs[i]) out.push_back({segs[i], side_count, true});
    }
    if (!out.empty()) out.back().counted = false;
    return out;
}

/// c * (i eps0)^(R-1) with c the product of (2 coord - 1) over counted bends;
/// the constant 1 for R = 0 and R = 1.
inline AmplitudePolynomial path_amplitude(const LatticePath& path) {
    Integer c = 1;
    unsigned order = 0;
    for (const auto& b : bend_records(path)) {
        if (!b.counted) continue;
        c *= 2 * b.coord - 1;
        ++order;
    }
    return AmplitudePolynomial::monomial(order, c);
}

inline constexpr unsigned kDefaultEnumerationCap = 24;

namespace detail {

inline void check_sector_args(unsigned P, unsigned Q, unsigned cap) {
    if (P < 1 || Q < 1) throw invalid_parameter("P and Q must both be >= 1");
    if (P + Q > cap)
        throw resource_limit("path enumeration limited to P+Q <= " + std::to_string(cap) + " (got " +
                                 std::to_string(P + Q) + ")",
                             cap);
}

template <class Visitor>
void fill_middle(std::vector<Direction>& segs, std::size_t pos, unsigned rights, unsigned lefts, Visitor& visit) {
    if (rights == 0 && lefts == 0) {
        visit(static_cast<const std::vector<Direction>&>(segs));
        return;
    }
    if (rights > 0) {
        segs[pos] = Direction::Right;
        fill_middle(segs, pos + 1, rights - 1, lefts, visit);
    }
    if (lefts > 0) {
        segs[pos] = Direction::Left;
        fill_middle(segs, pos + 1, rights, lefts - 1, visit);
    }
}

} // namespace detail

/// Calls visit(const LatticePath&) for every interleaving of P Rights and Q
/// Lefts that starts with `start` and ends with `end`, in lexicographic order
/// with Right before Left.
template <class Visitor>
void for_each_path(unsigned P, unsigned Q, Direction start, Direction end, Visitor&& visit,
                   unsigned cap = kDefaultEnumerationCap) {
    detail::check_sector_args(P, Q, cap);
    int rights = static_cast<int>(P) - (start == Direction::Right) - (end == Direction::Right);
    int lefts = static_cast<int>(Q) - (start == Direction::Left) - (end == Direction::Left);
    if (rights < 0 || lefts < 0) return;
    std::vector<Direction> segs(P + Q);
    segs.front() = start;
    segs.back() = end;
    auto emit = [&](const std::vector<Direction>& s) { visit(LatticePath(s)); };
    detail::fill_middle(segs, 1, static_cast<unsigned>(rights), static_cast<unsigned>(lefts), emit);
}

inline std::vector<LatticePath> enumerate_paths(unsigned P, unsigned Q, Direction start, Direction end,
                                                unsigned cap = kDefaultEnumerationCap) {
    std::vector<LatticePath> out;
    for_each_path(P, Q, start, end, [&](const LatticePath& p) { out.push_back(p); }, cap);
    return out;
}

/// Binomial coefficient, zero outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer c = 1;
    for (long i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

/// Number of paths in the (start, end) sector with exactly R bends, from run
/// compositions: a sector with a Right runs and b Left runs has
/// C(P-1, a-1) * C(Q-1, b-1) members.
inline Integer count_paths(unsigned P, unsigned Q, Direction start, Direction end, unsigned R) {
    if (P + Q == 0) return 0;
    if (R == 0) {
        if (start != end) return 0;
        return (start == Direction::Right ? Q == 0 : P == 0) ? 1 : 0;
    }
    long runs = static_cast<long>(R) + 1;
    long right_runs, left_runs;
    if (start != end) {
        if (R % 2 == 0) return 0;
        right_runs = left_runs = runs / 2;
    } else {
        if (R % 2 == 1) return 0;
        long major = runs / 2 + 1, minor = runs / 2;
        right_runs = start == Direction::Right ? major : minor;
        left_runs = start == Direction::Right ? minor : major;
    }
    return binomial(static_cast<long>(P) - 1, right_runs - 1) * binomial(static_cast<long>(Q) - 1, left_runs - 1);
}

/// Sum of path_amplitude over the whole sector by exhaustive enumeration.
inline AmplitudePolynomial sector_sum_bruteforce(unsigned P, unsigned Q, Direction start, Direction end,
                                                 unsigned cap = kDefaultEnumerationCap) {
    AmplitudePolynomial sum;
    for_each_path(P, Q, start, end, [&](const LatticePath& p) { sum += path_amplitude(p); }, cap);
    return sum;
}

} // namespace quadboard
