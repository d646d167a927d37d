#include <doctest.h>

#include "support.hpp"
#include "weylord/boards.hpp"

using namespace weylord;
using namespace weylord::test;

TEST_CASE("board construction") {
    CHECK(FerrersBoard({3, 2, 0}).columns == std::vector<unsigned>{3, 2});
    CHECK_THROWS_AS(FerrersBoard({1, 2}), std::invalid_argument);
    CHECK(FerrersBoard({3, 2, 2, 1}).cells() == 8);
    CHECK(FerrersBoard({3, 1}).transpose() == FerrersBoard({2, 1, 1}));
}

TEST_CASE("word_to_board") {
    CHECK(word_to_board(Word("DUDDUDU")) == FerrersBoard({3, 2, 2, 1}));
    CHECK(word_to_board(Word("UD")).empty());
    CHECK(word_to_board(Word("DDUU")) == FerrersBoard({2, 2}));
    CHECK(word_to_board(Word("")).empty());
}

TEST_CASE("board_to_word") {
    CHECK(board_to_word({}, 1, 1) == Word("UD"));
    CHECK(board_to_word(FerrersBoard({3, 2, 2, 1}), 3, 4) == Word("DUDDUDU"));
    CHECK(board_to_word(FerrersBoard({1, 1}), 1, 2) == Word("DDU"));
    CHECK_THROWS_AS(board_to_word(FerrersBoard({3}), 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(board_to_word(FerrersBoard({1, 1, 1}), 2, 2), std::invalid_argument);
}

TEST_CASE("word/board round trips") {
    for (unsigned n = 0; n <= 4; ++n)
        for (unsigned m = 0; m <= 4; ++m)
            for (const auto& b : enumerate_boards(n, m)) CHECK(word_to_board(board_to_word(b, n, m)) == b);
    for (unsigned n = 0; n <= 4; ++n)
        for (const Word& w : balanced_words(n)) CHECK(board_to_word(word_to_board(w), n, n) == w);
}

TEST_CASE("rook numbers") {
    CHECK(rook_numbers({}).r == ints({1}));
    CHECK(rook_numbers(FerrersBoard({1})).r == ints({1, 1}));
    const FerrersBoard fig1({3, 2, 2, 1});
    CHECK(rook_subset_oracle(fig1) == ints({1, 8, 14, 4}));
    CHECK(rook_numbers(fig1).r == ints({1, 8, 14, 4}));
    CHECK(rook_numbers(fig1).at(4) == 0);
}

TEST_CASE("naive rook numbers") {
    CHECK(rook_subset_oracle(FerrersBoard({2, 2})) == ints({1, 4, 2}));
    CHECK(rook_numbers_naive(FerrersBoard({2, 2})).r == ints({1, 4, 2}));
    CHECK(rook_subset_oracle(FerrersBoard({1, 1, 1})) == ints({1, 3}));
    CHECK(trimmed(rook_numbers_naive(FerrersBoard({1, 1, 1})).r) == ints({1, 3}));
    CHECK(rook_numbers_naive({}).r == ints({1}));
    CHECK_THROWS_AS(rook_numbers_naive(FerrersBoard({8, 8, 8, 8})), ResourceLimit);
}

TEST_CASE("DP agrees with exhaustive counts") {
    for (const auto& b : enumerate_boards(5, 5)) {
        CHECK(rook_numbers(b) == rook_numbers_naive(b));
        if (b.cells() <= 16) CHECK(trimmed(rook_numbers(b).r) == rook_subset_oracle(b));
    }
    for (int t = 0; t < 200; ++t) {
        FerrersBoard b = random_board(8, 8);
        while (b.cells() > 20) b = random_board(8, 8);
        const RookVector r = rook_numbers(b);
        CHECK(r == rook_numbers_naive(b));
        CHECK(r.r[0] == 1);
        CHECK(r.at(1) == b.cells());
    }
}

TEST_CASE("rook numbers are invariant under transposition") {
    for (const auto& b : enumerate_boards(4, 4)) CHECK(trimmed(rook_numbers(b).r) == trimmed(rook_numbers(b.transpose()).r));
}

TEST_CASE("enumerate_boards") {
    CHECK(enumerate_boards(0) == std::vector<FerrersBoard>{FerrersBoard{}});
    CHECK(enumerate_boards(1) == std::vector<FerrersBoard>{FerrersBoard{}, FerrersBoard({1})});
    const std::vector<FerrersBoard> two{FerrersBoard{},        FerrersBoard({1}),    FerrersBoard({2}),
                                        FerrersBoard({1, 1}), FerrersBoard({2, 1}), FerrersBoard({2, 2})};
    CHECK(enumerate_boards(2) == two);
    for (unsigned n = 0; n <= 7; ++n) CHECK(Integer(static_cast<unsigned long>(enumerate_boards(n).size())) == binomial(2 * n, n));
    CHECK_THROWS_AS(enumerate_boards(11), ResourceLimit);
}

TEST_CASE("aggregate rook identity") {
    CHECK(aggregate_rook(2, 0) == 6);
    CHECK(aggregate_rook(2, 1) == 12);
    CHECK(aggregate_rook(2, 2) == 3);
    CHECK(aggregate_rook(3, 3) == 15);
    CHECK(aggregate_rook_closed(3, 3) == 15);
    for (unsigned n = 0; n <= 7; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(aggregate_rook(n, k) == aggregate_rook_closed(n, k));
    CHECK_THROWS_AS(aggregate_rook(2, 3), std::invalid_argument);
}

TEST_CASE("board text syntax") {
    CHECK(parse_board("3,2,2,1") == FerrersBoard({3, 2, 2, 1}));
    CHECK(parse_board("-").empty());
    CHECK(parse_board("2,0") == FerrersBoard({2}));
    CHECK(to_string(FerrersBoard({3, 2, 2, 1})) == "3,2,2,1");
    CHECK(to_string(FerrersBoard{}) == "-");
    for (const char* bad : {"", "1,,2", "1,2", "a", "1;2", "-1", "3,"})
        CHECK_THROWS_AS(parse_board(bad), std::invalid_argument);
}
