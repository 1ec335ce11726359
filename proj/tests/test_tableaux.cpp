#include <doctest.h>

#include <numeric>
#include <set>

#include "asfc/tableau.hpp"
#include "oracles.hpp"

using namespace asfc;

namespace {

long long r_oracle(Box x, int n, int m, int b) {
    const long long s = static_cast<long long>(m) * n + b;
    return s * n - s * (x.i + 1) - static_cast<long long>(n) * (x.j + 1);
}

std::vector<int> dd_oracle(const Tableau& s, int m, int b) {
    const int n = s.n();
    std::vector<Box> box_of(n + 1);
    for (int row = 0; row < n; ++row)
        box_of[s.at(row)] = s.shape().box(row);
    std::vector<int> out;
    for (int a = 1; a < n; ++a)
        if (r_oracle(box_of[a], n, m, b) > r_oracle(box_of[a + 1], n, m, b))
            out.push_back(a);
    return out;
}

}  // namespace

TEST_CASE("partition basics") {
    const Partition p{3, 1, 0};
    CHECK(p == Partition{3, 1});
    CHECK(p.size() == 4);
    CHECK(p.conjugate() == Partition{2, 1, 1});
    CHECK(p.to_string() == "(3,1)");
    CHECK(Partition{}.to_string() == "()");
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(parse_partition("3, 1") == Partition{3, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK_THROWS_AS(parse_partition("1,x"), std::invalid_argument);
    CHECK(Partition{4, 3}.contains(Partition{2, 2}));
    CHECK_FALSE(Partition{2}.contains(Partition{1, 1}));
}

TEST_CASE("partitions_of and subpartitions are complete and reverse-lexicographic") {
    CHECK(partitions_of(4) ==
          std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    // counts of partitions of n: 1 1 2 3 5 7 11
    const int expect[] = {1, 1, 2, 3, 5, 7, 11};
    for (int n = 0; n <= 6; ++n)
        CHECK(partitions_of(n).size() == static_cast<std::size_t>(expect[n]));

    const auto subs = subpartitions(Partition{2, 1, 1});
    const std::set<Partition> got(subs.begin(), subs.end());
    const std::set<Partition> want{{}, {1}, {2}, {1, 1}, {2, 1}, {1, 1, 1}, {2, 1, 1}};
    CHECK(got == want);
    CHECK(subs.size() == want.size());
    CHECK(std::is_sorted(subs.begin(), subs.end(), std::greater<>()));
}

TEST_CASE("skew shape boxes") {
    auto as_set = [](const std::vector<Box>& v) { return std::set<Box>(v.begin(), v.end()); };
    CHECK(as_set(skew_shape(Partition{3, 1}, 5).boxes()) ==
          std::set<Box>{{0, 3}, {1, 1}, {2, 0}, {3, 0}, {4, 0}});
    CHECK(as_set(skew_shape(Partition{}, 2).boxes()) == std::set<Box>{{0, 0}, {1, 0}});
    CHECK(as_set(skew_shape(Partition{2, 1}, 5).boxes()) ==
          std::set<Box>{{0, 2}, {1, 1}, {2, 0}, {3, 0}, {4, 0}});
    CHECK(skew_shape(Partition{2, 1}, 5).row_of({1, 1}) == 1);
    CHECK(skew_shape(Partition{2, 1}, 5).row_of({1, 0}) == -1);
    CHECK_THROWS_AS(skew_shape(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("semistandard enumeration by content") {
    CHECK(enumerate_tableaux(skew_shape({}, 2), Sign::positive, std::vector<int>{1, 1}).size() == 1);
    const auto neg =
        enumerate_tableaux(skew_shape(Partition{1}, 2), Sign::negative, std::vector<int>{2, 0});
    REQUIRE(neg.size() == 1);
    CHECK(neg[0].entries() == std::vector<int>{1, 1});
    CHECK(enumerate_tableaux(skew_shape(Partition{1}, 2), Sign::positive, std::vector<int>{1, 1})
              .size() == 2);
    CHECK_THROWS_AS(
        enumerate_tableaux(skew_shape(Partition{1}, 2), Sign::positive, std::vector<int>{1, 0}),
        std::invalid_argument);
}

TEST_CASE("tableau enumeration agrees with a cell-by-cell filter") {
    for (int n = 2; n <= 5; ++n)
        for (const Partition& lambda : subpartitions(Partition(std::vector<int>(n - 1, n - 1))))
            for (Sign sign : {Sign::positive, Sign::negative}) {
                long long brute = 0;
                oracle::all_words(n, n, [&](std::span<const int> w) {
                    brute += oracle::semistandard(lambda, n, sign, w);
                });
                CHECK(enumerate_tableaux(skew_shape(lambda, n), sign, n).size() ==
                      static_cast<std::size_t>(brute));
            }
}

TEST_CASE("tableau constructor rejects non-semistandard fillings") {
    CHECK_THROWS_AS(Tableau(skew_shape({}, 3), Sign::positive, {1, 1, 2}), std::invalid_argument);
    CHECK_NOTHROW(Tableau(skew_shape({}, 3), Sign::negative, {1, 1, 2}));
    CHECK_THROWS_AS(Tableau(skew_shape({}, 3), Sign::negative, {2, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Tableau(skew_shape({}, 2), Sign::positive, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Tableau(skew_shape({}, 2), Sign::positive, {0, 1}), std::invalid_argument);
}

TEST_CASE("standardization") {
    const StatCtx ctx(2, 1, 1);
    const Tableau col(skew_shape({}, 2), Sign::positive, {1, 2});
    CHECK(standardize(col, ctx) == col);

    const Tableau flat(skew_shape(Partition{1}, 2), Sign::negative, {1, 1});
    const Tableau s = standardize(flat, ctx);
    CHECK(s.is_standard());
    CHECK(d_descents(s, ctx) == dd_oracle(s, 1, 1));
    CHECK(d_descents(s, ctx) == std::vector<int>{1});
}

TEST_CASE("standardization invariants over a sweep") {
    const std::vector<StatCtx> ctxs{{3, 1, 1}, {3, 1, 2}, {3, 2, 1}, {4, 1, 1}, {4, 1, 3}, {5, 0, 3}};
    for (const StatCtx& ctx : ctxs)
        for (const Partition& lambda : subpartitions(staircase(ctx)))
            for (Sign sign : {Sign::positive, Sign::negative})
                for (const Tableau& t : enumerate_tableaux(skew_shape(lambda, ctx.n()), sign, ctx.n())) {
                    const Tableau s = standardize(t, ctx);
                    REQUIRE(s.is_standard());
                    const auto word = standardization_word(t, ctx);
                    CHECK(std::is_sorted(word.begin(), word.end()));
                    CHECK(relabel(s, word, sign) == t);
                    const auto dd = dd_oracle(s, ctx.m(), ctx.b());
                    CHECK(d_descents(s, ctx) == dd);
                    // inside a run of equal letters: no d-descent (positive),
                    // every position a d-descent (negative)
                    const std::set<int> dds(dd.begin(), dd.end());
                    for (int a = 1; a < ctx.n(); ++a)
                        if (word[a - 1] == word[a])
                            CHECK(dds.count(a) == (sign == Sign::negative ? 1u : 0u));
                }
}

TEST_CASE("d-descents of the five-box m=1 example") {
    const StatCtx ctx(5, 1, 1);
    const Tableau t(skew_shape(Partition{3, 1}, 5), Sign::positive, {3, 1, 2, 4, 5});
    CHECK(t.is_standard());
    CHECK(standardize(t, ctx) == t);
    CHECK(d_descents(t, ctx) == dd_oracle(t, 1, 1));
    // r-values by row: 4, 8, 7, 1, -5, so labels 1..5 sit at r = 8, 7, 4,
    // 1, -5: strictly decreasing, every position is a d-descent.
    CHECK(d_descents(t, ctx) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("column of two boxes: d-descent iff 1 sits on top") {
    const StatCtx ctx(2, 1, 1);
    CHECK(r_oracle({0, 0}, 2, 1, 1) == 1);
    CHECK(r_oracle({1, 0}, 2, 1, 1) == -2);
    const Tableau t(skew_shape({}, 2), Sign::positive, {1, 2});
    CHECK(d_descents(t, ctx) == std::vector<int>{1});
    for (const Tableau& s : enumerate_tableaux(skew_shape(Partition{1}, 2), Sign::positive, std::vector<int>{1, 1})) {
        const auto dd = d_descents(s, ctx);
        CHECK(dd.size() <= 1);
        CHECK(dd == dd_oracle(s, 1, 1));
    }
}
