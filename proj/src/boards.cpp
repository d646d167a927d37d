#include "weylord/boards.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace weylord {

FerrersBoard::FerrersBoard(std::vector<unsigned> heights) : columns(std::move(heights)) {
    if (!std::is_sorted(columns.begin(), columns.end(), std::greater<>{}))
        throw std::invalid_argument("board column heights must be weakly decreasing");
    while (!columns.empty() && columns.back() == 0) columns.pop_back();
}

unsigned FerrersBoard::cells() const { return std::accumulate(columns.begin(), columns.end(), 0u); }

FerrersBoard FerrersBoard::transpose() const {
    std::vector<unsigned> rows(height(), 0);
    for (unsigned h : columns)
        for (unsigned y = 0; y < h; ++y) ++rows[y];
    return FerrersBoard(std::move(rows));
}

FerrersBoard word_to_board(const Word& w) {
    unsigned level = w.count_u();
    std::vector<unsigned> heights;
    for (char c : w.letters()) {
        if (c == 'U') {
            --level;
        } else if (level > 0) {
            heights.push_back(level);
        }
    }
    return FerrersBoard(std::move(heights));
}

Word board_to_word(const FerrersBoard& b, unsigned n_u, unsigned m_d) {
    if (b.width() > m_d || b.height() > n_u)
        throw std::invalid_argument("board " + to_string(b) + " does not fit in a " + std::to_string(n_u) + "x" +
                                    std::to_string(m_d) + " box");
    std::string letters;
    letters.reserve(n_u + m_d);
    unsigned level = n_u;
    for (unsigned col = 0; col < m_d; ++col) {
        const unsigned h = col < b.width() ? b.columns[col] : 0;
        for (; level > h; --level) letters += 'U';
        letters += 'D';
    }
    letters.append(level, 'U');
    return Word(std::move(letters));
}

RookVector rook_numbers(const FerrersBoard& b) {
    const std::size_t kmax = std::min(b.width(), b.height());
    std::vector<Integer> r(kmax + 1, 0);
    r[0] = 1;
    // Shorter columns first: every rook already placed sits in a row below
    // the current column's top, so a column of height h leaves h - (k-1)
    // free cells for the k-th rook.
    for (auto it = b.columns.rbegin(); it != b.columns.rend(); ++it) {
        const long h = *it;
        for (std::size_t k = kmax; k >= 1; --k) {
            const long free = h - static_cast<long>(k - 1);
            if (free > 0) r[k] += r[k - 1] * free;
        }
    }
    return {std::move(r)};
}

RookVector rook_numbers_naive(const FerrersBoard& b) {
    if (b.cells() > naive_rook_max_cells)
        throw ResourceLimit("naive rook count limited to " + std::to_string(naive_rook_max_cells) + " cells, board has " +
                            std::to_string(b.cells()));
    const std::size_t kmax = std::min(b.width(), b.height());
    std::vector<std::uint64_t> counts(kmax + 1, 0);
    std::vector<bool> row_used(b.height(), false);

    // Each placement takes at most one cell per column; walk the columns and
    // try every free row, tallying each complete placement once.
    std::function<void(unsigned, unsigned)> place = [&](unsigned col, unsigned rooks) {
        if (col == b.width()) {
            ++counts[rooks];
            return;
        }
        place(col + 1, rooks);
        for (unsigned y = 0; y < b.columns[col]; ++y) {
            if (row_used[y]) continue;
            row_used[y] = true;
            place(col + 1, rooks + 1);
            row_used[y] = false;
        }
    };
    place(0, 0);

    RookVector out;
    for (auto c : counts) out.r.emplace_back(static_cast<unsigned long>(c));
    return out;
}

std::vector<FerrersBoard> enumerate_boards(unsigned rows, unsigned cols) {
    std::vector<FerrersBoard> boards;
    std::vector<unsigned> current;
    std::function<void(unsigned)> extend = [&](unsigned cap) {
        boards.emplace_back(current);
        if (current.size() == cols) return;
        for (unsigned h = 1; h <= cap; ++h) {
            current.push_back(h);
            extend(h);
            current.pop_back();
        }
    };
    extend(rows);
    std::sort(boards.begin(), boards.end(), [](const FerrersBoard& a, const FerrersBoard& b) {
        const unsigned ca = a.cells(), cb = b.cells();
        if (ca != cb) return ca < cb;
        return a.columns > b.columns;
    });
    return boards;
}

std::vector<FerrersBoard> enumerate_boards(unsigned n) {
    if (n > max_enumeration_box)
        throw ResourceLimit("board enumeration limited to a " + std::to_string(max_enumeration_box) + "x" +
                            std::to_string(max_enumeration_box) + " box");
    return enumerate_boards(n, n);
}

Integer aggregate_rook(unsigned n, unsigned k) { return aggregate_rook(n, k, rook_numbers); }

Integer aggregate_rook(unsigned n, unsigned k, const RookFunction& rook) {
    if (k > n) throw std::invalid_argument("aggregate_rook: k must not exceed n");
    Integer total = 0;
    for (const auto& b : enumerate_boards(n)) total += rook(b).at(k);
    return total;
}

Integer aggregate_rook_closed(unsigned n, unsigned k) {
    if (k > n) throw std::invalid_argument("aggregate_rook_closed: k must not exceed n");
    const Integer nk = factorial(n - k);
    const Integer den = (Integer(1) << k) * factorial(k) * nk * nk;
    const Integer top = factorial(2 * n);
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), den.get_mpz_t());
    return q;
}

FerrersBoard parse_board(const std::string& text) {
    if (text == "-") return {};
    std::vector<unsigned> heights;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const std::string field = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (field.empty() || field.size() > 9 || !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("bad board heights: '" + text + "'");
        heights.push_back(static_cast<unsigned>(std::stoul(field)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return FerrersBoard(std::move(heights));
}

std::string to_string(const FerrersBoard& b) {
    if (b.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < b.columns.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(b.columns[i]);
    }
    return out;
}

}  // namespace weylord
