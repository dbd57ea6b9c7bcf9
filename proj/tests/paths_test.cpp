#include <gtest/gtest.h>

#include <set>

#include "quadboard/paths.hpp"

using namespace quadboard;

namespace {

constexpr Direction Rt = Direction::Right;
constexpr Direction Lf = Direction::Left;

std::vector<std::string> strings(const std::vector<LatticePath>& paths) {
    std::vector<std::string> out;
    for (const auto& p : paths) out.push_back(p.str());
    return out;
}

// One of the sector's R = 5 paths with P = 5, Q = 3.
const LatticePath kFigurePath = LatticePath::parse("RRLRRLRL");

} // namespace

TEST(LatticePath, Bookkeeping) {
    auto p = LatticePath::parse("RLRL");
    EXPECT_EQ(p.start_dir(), Rt);
    EXPECT_EQ(p.end_dir(), Lf);
    EXPECT_EQ(p.right_count(), 2u);
    EXPECT_EQ(p.left_count(), 2u);
    EXPECT_EQ(p.bends(), 3u);
    EXPECT_THROW(LatticePath({}), invalid_parameter);
    EXPECT_THROW(LatticePath::parse("RXL"), invalid_parameter);
}

TEST(LatticePath, FigureFixture) {
    EXPECT_EQ(kFigurePath.size(), 8u);
    EXPECT_EQ(kFigurePath.right_count(), 5u);
    EXPECT_EQ(kFigurePath.left_count(), 3u);
    EXPECT_EQ(kFigurePath.bends(), 5u);
    EXPECT_EQ(kFigurePath.bends_to_right(), 2u);
    EXPECT_EQ(kFigurePath.bends_to_left(), 3u);
}

TEST(EnumeratePaths, Examples) {
    EXPECT_EQ(strings(enumerate_paths(2, 1, Rt, Lf)), std::vector<std::string>{"RRL"});
    EXPECT_EQ(strings(enumerate_paths(2, 2, Rt, Lf)), (std::vector<std::string>{"RRLL", "RLRL"}));
    auto fig = strings(enumerate_paths(5, 3, Rt, Lf));
    EXPECT_NE(std::find(fig.begin(), fig.end(), kFigurePath.str()), fig.end());
}

TEST(EnumeratePaths, LexicographicAndDistinct) {
    auto paths = strings(enumerate_paths(4, 4, Lf, Rt));
    std::vector<std::string> keyed = paths;
    // 'R' < 'L' in the enumeration order; map to '0'/'1' to compare
    for (auto& s : keyed)
        for (auto& c : s) c = c == 'R' ? '0' : '1';
    EXPECT_TRUE(std::is_sorted(keyed.begin(), keyed.end()));
    EXPECT_EQ(std::set<std::string>(paths.begin(), paths.end()).size(), paths.size());
    for (const auto& s : paths) {
        EXPECT_EQ(s.front(), 'L');
        EXPECT_EQ(s.back(), 'R');
    }
}

TEST(EnumeratePaths, Errors) {
    EXPECT_THROW(enumerate_paths(0, 3, Rt, Lf), invalid_parameter);
    EXPECT_THROW(enumerate_paths(3, 0, Rt, Lf), invalid_parameter);
    try {
        enumerate_paths(13, 12, Rt, Lf);
        FAIL() << "expected resource_limit";
    } catch (const resource_limit& e) {
        EXPECT_EQ(e.cap(), 24u);
        EXPECT_NE(std::string(e.what()).find("24"), std::string::npos);
    }
    EXPECT_THROW(enumerate_paths(5, 5, Rt, Lf, 9), resource_limit);
    EXPECT_EQ(enumerate_paths(5, 5, Rt, Lf, 10).size(), 70u);
}

TEST(CountPaths, Examples) {
    EXPECT_EQ(count_paths(5, 3, Rt, Lf, 5), 6);
    EXPECT_EQ(count_paths(2, 1, Rt, Lf, 1), 1);
    EXPECT_EQ(count_paths(3, 3, Rt, Lf, 2), 0);
    EXPECT_EQ(count_paths(3, 0, Rt, Rt, 0), 1);
    EXPECT_EQ(count_paths(3, 0, Lf, Lf, 0), 0);
    EXPECT_EQ(count_paths(0, 0, Rt, Rt, 0), 0);
}

TEST(CountPaths, MatchesEnumeration) {
    for (unsigned P = 1; P <= 7; ++P)
        for (unsigned Q = 1; Q <= 7; ++Q)
            for (auto start : {Rt, Lf})
                for (auto end : {Rt, Lf}) {
                    std::vector<Integer> by_bends(P + Q, 0);
                    std::size_t total = 0;
                    for_each_path(P, Q, start, end, [&](const LatticePath& p) {
                        ++by_bends[p.bends()];
                        ++total;
                    });
                    Integer sum = 0;
                    for (unsigned R = 0; R < P + Q; ++R) {
                        EXPECT_EQ(count_paths(P, Q, start, end, R), by_bends[R])
                            << P << "," << Q << " R=" << R;
                        sum += count_paths(P, Q, start, end, R);
                    }
                    EXPECT_EQ(sum, total);
                    // interior is a free interleaving of the remaining segments
                    unsigned inner_r = P - (start == Rt) - (end == Rt);
                    unsigned inner_l = Q - (start == Lf) - (end == Lf);
                    EXPECT_EQ(Integer(total), binomial(inner_r + inner_l, inner_r));
                }
}

TEST(BendRecords, Examples) {
    EXPECT_EQ(bend_records(LatticePath::parse("RRLL")), (std::vector<BendRecord>{{Rt, 2, false}}));
    EXPECT_EQ(bend_records(LatticePath::parse("RLRL")),
              (std::vector<BendRecord>{{Rt, 1, true}, {Lf, 1, true}, {Rt, 2, false}}));
    auto fig = bend_records(kFigurePath);
    ASSERT_EQ(fig.size(), 5u);
    EXPECT_EQ(std::count_if(fig.begin(), fig.end(), [](const BendRecord& b) { return b.counted; }), 4);
    EXPECT_TRUE(bend_records(LatticePath::parse("RRR")).empty());
}

TEST(BendRecords, CoordinateInvariants) {
    for (unsigned P = 1; P <= 7; ++P)
        for (unsigned Q = 1; Q <= 7; ++Q)
            for (auto start : {Rt, Lf})
                for (auto end : {Rt, Lf})
                    for_each_path(P, Q, start, end, [&](const LatticePath& path) {
                        auto records = bend_records(path);
                        ASSERT_EQ(records.size(), path.bends());
                        unsigned last_r = 0, last_l = 0, uncounted = 0;
                        for (const auto& b : records) {
                            unsigned& last = b.side == Rt ? last_r : last_l;
                            EXPECT_GT(b.coord, last);
                            last = b.coord;
                            EXPECT_LE(b.coord, b.side == Rt ? P : Q);
                            if (!b.counted) {
                                ++uncounted;
                                // the determined bend closes the last run of its side
                                EXPECT_EQ(b.side, opposite(end));
                                EXPECT_EQ(b.coord, b.side == Rt ? P : Q);
                            } else {
                                EXPECT_LE(b.coord, (b.side == Rt ? P : Q) - 1);
                            }
                        }
                        EXPECT_EQ(uncounted, 1u);
                        EXPECT_FALSE(records.back().counted);
                    });
}

TEST(BendRecords, CountedCoordinatesDeterminePath) {
    for (unsigned P = 1; P <= 7; ++P)
        for (unsigned Q = 1; Q <= 7; ++Q)
            for (auto start : {Rt, Lf})
                for (auto end : {Rt, Lf}) {
                    std::set<std::pair<std::vector<unsigned>, std::vector<unsigned>>> seen;
                    std::size_t total = 0;
                    for_each_path(P, Q, start, end, [&](const LatticePath& path) {
                        std::vector<unsigned> rs, ls;
                        for (const auto& b : bend_records(path))
                            if (b.counted) (b.side == Rt ? rs : ls).push_back(b.coord);
                        seen.insert({rs, ls});
                        ++total;
                    });
                    EXPECT_EQ(seen.size(), total);
                }
}

TEST(PathAmplitude, Examples) {
    EXPECT_EQ(path_amplitude(LatticePath::parse("RRL")), AmplitudePolynomial::monomial(0, 1));
    EXPECT_EQ(path_amplitude(LatticePath::parse("RLRL")), AmplitudePolynomial::monomial(2, 1));
    EXPECT_EQ(path_amplitude(LatticePath::parse("RRLRLL")), AmplitudePolynomial::monomial(2, 3));
    EXPECT_EQ(path_amplitude(LatticePath::parse("RRRR")), AmplitudePolynomial::monomial(0, 1));
    // counted bends of the figure path: (R,2) (L,1) (R,4) (L,2)
    EXPECT_EQ(path_amplitude(kFigurePath), AmplitudePolynomial::monomial(4, 3 * 1 * 7 * 3));
}

TEST(SectorSum, Examples) {
    EXPECT_EQ(sector_sum_bruteforce(2, 1, Rt, Lf), AmplitudePolynomial::monomial(0, 1));
    auto two_two = AmplitudePolynomial::monomial(0, 1);
    two_two.add(2, 1);
    EXPECT_EQ(sector_sum_bruteforce(2, 2, Rt, Lf), two_two);
    EXPECT_EQ(sector_sum_bruteforce(2, 1, Rt, Rt), AmplitudePolynomial::monomial(1, 1));
}

TEST(SectorSum, CoefficientsPositive) {
    for (unsigned P = 1; P <= 6; ++P)
        for (unsigned Q = 1; Q <= 6; ++Q)
            for (auto start : {Rt, Lf})
                for (auto end : {Rt, Lf}) {
                    const auto sum = sector_sum_bruteforce(P, Q, start, end);
                    for (const auto& [order, c] : sum.terms()) EXPECT_GT(c, 0);
                }
}

TEST(AmplitudePolynomial, ExactAndFloatingEvaluationAgree) {
    auto poly = AmplitudePolynomial::monomial(0, 1);
    poly.add(1, 3);
    poly.add(2, 5);
    poly.add(3, 7);
    // 1 + 3 i e - 5 e^2 - 7 i e^3 at e = 1/2
    auto exact = poly.evaluate(Rational(1, 2));
    EXPECT_EQ(exact.re, Rational(-1, 4));
    EXPECT_EQ(exact.im, Rational(5, 8));
    auto approx = poly.evaluate(0.5L);
    EXPECT_DOUBLE_EQ(static_cast<double>(approx.real()), -0.25);
    EXPECT_DOUBLE_EQ(static_cast<double>(approx.imag()), 0.625);
    EXPECT_EQ(to_string(poly), "7*(i*e0)^3 + 5*(i*e0)^2 + 3*(i*e0)^1 + 1");
}

TEST(AmplitudePolynomial, CancellingTermsAreDropped) {
    AmplitudePolynomial p = AmplitudePolynomial::monomial(2, 4);
    p.add(2, -4);
    EXPECT_TRUE(p.empty());
    EXPECT_EQ(p.coefficient(2), 0);
}
