#pragma once

// Board geometry and the brute-force placement counter that serves as ground
// truth for every counting formula. Squares are (col, row), 1-based, with row
// 1 at the bottom.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exact.hpp"

namespace riders {

struct Square {
    int col = 0;
    int row = 0;

    auto operator<=>(const Square&) const = default;
};

struct Move {
    int dc = 0;
    int dr = 0;

    bool operator==(const Move&) const = default;
};

/// Basic moves of a rider: nonzero, pairwise non-parallel, coprime vectors.
class MoveSet {
public:
    explicit MoveSet(std::vector<Move> moves) : moves_(std::move(moves))
    {
        for (std::size_t i = 0; i < moves_.size(); ++i) {
            const Move& a = moves_[i];
            if (a.dc == 0 && a.dr == 0)
                throw std::invalid_argument("MoveSet: zero move vector");
            if (std::gcd(a.dc, a.dr) != 1)
                throw std::invalid_argument("MoveSet: move coordinates must be coprime");
            for (std::size_t j = 0; j < i; ++j) {
                const Move& b = moves_[j];
                if (a.dc * b.dr == a.dr * b.dc)
                    throw std::invalid_argument("MoveSet: parallel move vectors");
            }
        }
    }

    std::span<const Move> moves() const { return moves_; }

    static MoveSet bishop() { return MoveSet({{1, 1}, {-1, 1}}); }
    static MoveSet anassa() { return MoveSet({{0, 1}, {1, 1}}); }

private:
    std::vector<Move> moves_;
};

enum class Piece { bishop, anassa };
enum class Color { white, black };

inline MoveSet moves_of(Piece piece) { return piece == Piece::bishop ? MoveSet::bishop() : MoveSet::anassa(); }

inline std::string to_string(Piece piece) { return piece == Piece::bishop ? "bishop" : "anassa"; }

class Board {
public:
    Board() = default;

    Board(int size, std::set<Square> squares) : size_(size), squares_(std::move(squares))
    {
        if (size < 0)
            throw std::invalid_argument("Board: negative size");
        for (const Square& s : squares_)
            if (!inside(s))
                throw std::invalid_argument("Board: square outside [1," + std::to_string(size) + "]^2");
    }

    int size() const { return size_; }
    const std::set<Square>& squares() const { return squares_; }
    std::size_t count() const { return squares_.size(); }
    bool contains(Square s) const { return squares_.count(s) != 0; }
    bool inside(Square s) const { return s.col >= 1 && s.col <= size_ && s.row >= 1 && s.row <= size_; }

    Board minus(const Board& other) const
    {
        std::set<Square> rest;
        std::set_difference(squares_.begin(), squares_.end(), other.squares_.begin(), other.squares_.end(),
                            std::inserter(rest, rest.end()));
        return Board(size_, std::move(rest));
    }

private:
    int size_ = 0;
    std::set<Square> squares_;
};

/// Pairwise nonattacking set of occupied squares.
struct Placement {
    std::set<Square> occupied;
};

/// True iff b - a is a nonzero multiple of some move. Blocking is ignored.
inline bool attacks(Square a, Square b, const MoveSet& ms)
{
    if (a == b)
        throw std::invalid_argument("attacks: squares coincide");
    const int dc = b.col - a.col;
    const int dr = b.row - a.row;
    for (const Move& m : ms.moves())
        if (dc * m.dr == dr * m.dc)
            return true;
    return false;
}

inline bool is_nonattacking(const Placement& p, const MoveSet& ms)
{
    for (auto i = p.occupied.begin(); i != p.occupied.end(); ++i)
        for (auto j = std::next(i); j != p.occupied.end(); ++j)
            if (attacks(*i, *j, ms))
                return false;
    return true;
}

inline Board square_board(int m)
{
    if (m < 0)
        throw std::invalid_argument("square_board: negative size");
    std::set<Square> squares;
    for (int c = 1; c <= m; ++c)
        for (int r = 1; r <= m; ++r)
            squares.insert({c, r});
    return Board(m, std::move(squares));
}

/// White squares have even col + row, so the white board of S_1 is {(1,1)}.
inline Board bishop_color_board(int m, Color color)
{
    std::set<Square> squares;
    const int want = color == Color::white ? 0 : 1;
    const Board full = square_board(m);
    for (const Square& s : full.squares())
        if ((s.col + s.row) % 2 == want)
            squares.insert(s);
    return Board(m, std::move(squares));
}

/// Bishop: main diagonal plus the squares directly above it.
/// Anassa: main diagonal plus the last file below its diagonal square.
inline Board inductive_subset(int m, Piece piece)
{
    if (m < 1)
        throw std::invalid_argument("inductive_subset: board size must be at least 1");
    std::set<Square> squares;
    for (int i = 1; i <= m; ++i)
        squares.insert({i, i});
    for (int i = 1; i < m; ++i)
        squares.insert(piece == Piece::bishop ? Square{i, i + 1} : Square{m, i});
    return Board(m, std::move(squares));
}

/// Image of a square of S_m outside the inductive subset on S_{m-1}.
inline std::optional<Square> collapse_map(int m, Piece piece, Square s)
{
    if (!square_board(m).contains(s) || inductive_subset(m, piece).contains(s))
        return std::nullopt;
    if (piece == Piece::bishop) {
        if (s.col > s.row)
            return Square{s.col - 1, s.row};
        return Square{s.col, s.row - 1};
    }
    if (s.row > s.col)
        return Square{s.col, s.row - 1};
    return s;
}

/// Checks that collapse_map is a bijection S_m - I_m -> S_{m-1} under which
/// two squares attack each other exactly when their images do.
inline bool is_collapsible(int m, Piece piece)
{
    const MoveSet ms = moves_of(piece);
    const Board rest = square_board(m).minus(inductive_subset(m, piece));
    const Board target = square_board(m - 1);
    std::vector<std::pair<Square, Square>> pairs;
    std::set<Square> image;
    for (const Square& s : rest.squares()) {
        const auto t = collapse_map(m, piece, s);
        if (!t || !target.contains(*t))
            return false;
        image.insert(*t);
        pairs.emplace_back(s, *t);
    }
    if (image != target.squares())
        return false;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (attacks(pairs[i].first, pairs[j].first, ms) != attacks(pairs[i].second, pairs[j].second, ms))
                return false;
    return true;
}

namespace detail {

// Each move (dc, dr) partitions the plane into lines col*dr - row*dc = const.
// The counter marks occupied lines per move family and walks squares in
// column-major order, so each placement is generated exactly once.
class PlacementCounter {
public:
    PlacementCounter(const Board& board, const MoveSet& ms, int k_limit, bool split_below_diagonal)
        : k_limit_(k_limit), split_(split_below_diagonal)
    {
        for (const Move& m : ms.moves()) {
            Family f;
            f.move = m;
            int lo = 0;
            int hi = 0;
            bool first = true;
            for (const Square& s : board.squares()) {
                const int id = line_id(m, s);
                lo = first ? id : std::min(lo, id);
                hi = first ? id : std::max(hi, id);
                first = false;
            }
            f.offset = lo;
            f.used.assign(static_cast<std::size_t>(hi - lo + 1), 0);
            families_.push_back(std::move(f));
        }
        squares_.assign(board.squares().begin(), board.squares().end());
        counts_.assign(static_cast<std::size_t>(k_limit_ + 1),
                       std::vector<Integer>(static_cast<std::size_t>(k_limit_ + 1), 0));
    }

    // counts()[k][p]: placements of k pieces with p of them strictly below
    // the main diagonal (p is always 0 unless splitting).
    const std::vector<std::vector<Integer>>& run()
    {
        visit(0, 0, 0);
        return counts_;
    }

private:
    struct Family {
        Move move;
        int offset = 0;
        std::vector<unsigned char> used;
    };

    static int line_id(const Move& m, const Square& s) { return s.col * m.dr - s.row * m.dc; }

    void visit(std::size_t from, int placed, int below)
    {
        counts_[static_cast<std::size_t>(placed)][static_cast<std::size_t>(below)] += 1;
        if (placed == k_limit_)
            return;
        for (std::size_t i = from; i < squares_.size(); ++i) {
            const Square& s = squares_[i];
            bool free = true;
            for (const Family& f : families_)
                if (f.used[static_cast<std::size_t>(line_id(f.move, s) - f.offset)]) {
                    free = false;
                    break;
                }
            if (!free)
                continue;
            for (Family& f : families_)
                f.used[static_cast<std::size_t>(line_id(f.move, s) - f.offset)] = 1;
            visit(i + 1, placed + 1, below + (split_ && s.row < s.col ? 1 : 0));
            for (Family& f : families_)
                f.used[static_cast<std::size_t>(line_id(f.move, s) - f.offset)] = 0;
        }
    }

    int k_limit_;
    bool split_;
    std::vector<Family> families_;
    std::vector<Square> squares_;
    std::vector<std::vector<Integer>> counts_;
};

} // namespace detail

/// Number of nonattacking placements of k pieces on the board for each
/// k = 0..k_limit (default: number of squares).
inline std::vector<Integer> placement_profile(const Board& board, const MoveSet& ms, int k_limit = -1)
{
    if (k_limit < 0)
        k_limit = static_cast<int>(board.count());
    detail::PlacementCounter counter(board, ms, k_limit, false);
    const auto& grid = counter.run();
    std::vector<Integer> profile;
    profile.reserve(grid.size());
    for (const auto& row : grid)
        profile.push_back(row[0]);
    return profile;
}

inline Integer count_nonattacking(const Board& board, const MoveSet& ms, int k)
{
    if (k < 0)
        throw std::invalid_argument("count_nonattacking: negative k");
    if (k > static_cast<int>(board.count()))
        return 0;
    return placement_profile(board, ms, k)[static_cast<std::size_t>(k)];
}

/// result[k][p]: anassa placements on S_m with k pieces, p of them on squares
/// with row < col.
inline std::vector<std::vector<Integer>> below_diagonal_profile(int m)
{
    detail::PlacementCounter counter(square_board(m), MoveSet::anassa(), m, true);
    return counter.run();
}

inline Integer count_nonattacking_below_diag(int m, int k, int p)
{
    if (m < 0 || k < 0 || p < 0)
        throw std::invalid_argument("count_nonattacking_below_diag: negative argument");
    if (k > m || p > k)
        return 0;
    return below_diagonal_profile(m)[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
}

/// Largest k with a nonzero count on S_m.
inline int feasible_k_max(Piece piece, int m)
{
    if (piece == Piece::anassa || m <= 1)
        return std::max(m, 0);
    return 2 * m - 2;
}

/// Compares placement counts on S_m minus the inductive subset with counts on
/// S_{m-1} for every k = 0..k_max.
inline bool verify_collapse(int m, Piece piece, int k_max)
{
    if (m < 1)
        throw std::invalid_argument("verify_collapse: board size must be at least 1");
    const MoveSet ms = moves_of(piece);
    const Board reduced = square_board(m).minus(inductive_subset(m, piece));
    const auto lhs = placement_profile(reduced, ms, k_max);
    const auto rhs = placement_profile(square_board(m - 1), ms, k_max);
    return lhs == rhs;
}

} // namespace riders
