#pragma once

// Ferrers boards and rook numbers.
//
// A board is a weakly decreasing list of positive column heights, left to
// right. Reading a word from the start height #U, every D adds a column of
// the current height and every U lowers the height by one; the resulting
// board has one cell per DU pair of the word.

#include <string>
#include <vector>

#include "weylord/arith.hpp"
#include "weylord/weyl.hpp"

namespace weylord {

struct FerrersBoard {
    FerrersBoard() = default;
    /// Drops zero heights. Throws std::invalid_argument if the remaining
    /// heights are not weakly decreasing.
    explicit FerrersBoard(std::vector<unsigned> heights);

    std::vector<unsigned> columns;

    bool empty() const { return columns.empty(); }
    unsigned width() const { return static_cast<unsigned>(columns.size()); }
    unsigned height() const { return columns.empty() ? 0 : columns.front(); }
    unsigned cells() const;

    /// Conjugate partition (rows become columns).
    FerrersBoard transpose() const;

    friend bool operator==(const FerrersBoard&, const FerrersBoard&) = default;
};

/// r[k] = number of placements of k non-attacking rooks, k = 0..min(width, height).
struct RookVector {
    std::vector<Integer> r;

    /// Zero past the stored range.
    Integer at(std::size_t k) const { return k < r.size() ? r[k] : Integer(0); }

    friend bool operator==(const RookVector&, const RookVector&) = default;
};

FerrersBoard word_to_board(const Word& w);

/// The word with n_u U's and m_d D's whose board is b. Throws
/// std::invalid_argument if b does not fit in the n_u by m_d box.
Word board_to_word(const FerrersBoard& b, unsigned n_u, unsigned m_d);

/// Column-by-column recurrence over increasing heights.
RookVector rook_numbers(const FerrersBoard& b);

inline constexpr unsigned naive_rook_max_cells = 30;

/// Exhaustive count of non-attacking placements. Throws ResourceLimit above
/// naive_rook_max_cells cells.
RookVector rook_numbers_naive(const FerrersBoard& b);

inline constexpr unsigned max_enumeration_box = 10;

/// Every board inside a rows x cols box (at most cols columns, each at most
/// rows high), ordered by cell count then descending lexicographic.
std::vector<FerrersBoard> enumerate_boards(unsigned rows, unsigned cols);

/// All C(2n, n) boards in the n x n box. Throws ResourceLimit for n > 10.
std::vector<FerrersBoard> enumerate_boards(unsigned n);

/// sum over boards B in the n x n box of r_k(B). Throws std::invalid_argument for k > n.
Integer aggregate_rook(unsigned n, unsigned k);
Integer aggregate_rook(unsigned n, unsigned k, const RookFunction& rook);

/// (2n)! / (2^k k! (n-k)!^2)
Integer aggregate_rook_closed(unsigned n, unsigned k);

/// "3,2,2,1"; the empty board is "-".
FerrersBoard parse_board(const std::string& text);
std::string to_string(const FerrersBoard& b);

}  // namespace weylord
