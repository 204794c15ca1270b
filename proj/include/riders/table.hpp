#pragma once

// Count triangles and their text serializations: csv/tsv rows, OEIS-style
// b-files and JSON. Exact values are always written as decimal strings.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "board.hpp"
#include "counting.hpp"
#include "exact.hpp"
#include "quasipoly.hpp"

namespace riders {

/// What a table or coefficient vector counts: bishops or anassas on S_m, or
/// rooks on the white / black color board of S_m.
enum class Family { bishop, anassa, white, black };

inline std::string to_string(Family f)
{
    switch (f) {
    case Family::bishop: return "bishop";
    case Family::anassa: return "anassa";
    case Family::white: return "white";
    case Family::black: return "black";
    }
    return "?";
}

inline std::optional<Family> parse_family(const std::string& name)
{
    if (name == "bishop")
        return Family::bishop;
    if (name == "anassa")
        return Family::anassa;
    if (name == "white")
        return Family::white;
    if (name == "black")
        return Family::black;
    return std::nullopt;
}

enum class Format { csv, tsv, bfile, json };

inline std::optional<Format> parse_format(const std::string& name)
{
    if (name == "csv")
        return Format::csv;
    if (name == "tsv")
        return Format::tsv;
    if (name == "bfile")
        return Format::bfile;
    if (name == "json")
        return Format::json;
    return std::nullopt;
}

inline Integer count_closed(Family f, std::int64_t m, std::int64_t k)
{
    switch (f) {
    case Family::bishop: return bishops_closed(m, k);
    case Family::anassa: return anassa_closed(m, k);
    case Family::white: return rw_closed(m, k);
    case Family::black: return rk_closed(m, k);
    }
    return 0;
}

/// Largest k with a nonzero count on the size-m board.
inline std::int64_t feasible_k_max(Family f, std::int64_t m)
{
    if (m <= 0)
        return 0;
    switch (f) {
    case Family::bishop: return feasible_k_max(Piece::bishop, static_cast<int>(m));
    case Family::anassa: return feasible_k_max(Piece::anassa, static_cast<int>(m));
    case Family::white: return m == 1 ? 1 : m - 1;
    case Family::black: return m == 1 ? 0 : m - 1;
    }
    return 0;
}

inline QuasiPolynomial quasipolynomial(Family f, std::int64_t k)
{
    switch (f) {
    case Family::bishop: return bishop_quasipolynomial(k);
    case Family::anassa: return anassa_quasipolynomial(k);
    case Family::white: return white_rook_quasipolynomial(k);
    case Family::black: return black_rook_quasipolynomial(k);
    }
    return {};
}

struct CountTable {
    Family family = Family::bishop;
    /// rows[m][k], m = 0..m_max.
    std::vector<std::vector<Integer>> rows;

    bool operator==(const CountTable&) const = default;
};

/// Rows m = 0..m_max truncated at the feasibility bound, or padded with zeros
/// to a common width when `rectangular` is set.
inline CountTable build_table(Family f, std::int64_t m_max, bool rectangular = false)
{
    if (m_max < 0)
        throw std::invalid_argument("build_table: negative m_max");
    std::int64_t width = 0;
    for (std::int64_t m = 0; m <= m_max; ++m)
        width = std::max(width, feasible_k_max(f, m));
    CountTable table{f, {}};
    for (std::int64_t m = 0; m <= m_max; ++m) {
        const std::int64_t last = rectangular ? width : feasible_k_max(f, m);
        std::vector<Integer> row;
        for (std::int64_t k = 0; k <= last; ++k)
            row.push_back(count_closed(f, m, k));
        table.rows.push_back(std::move(row));
    }
    return table;
}

/// split[m][k][p] = A_S(m,k,p) for m = 0..m_max, 0 <= p <= k <= m.
inline std::vector<std::vector<std::vector<Integer>>> anassa_split_table(std::int64_t m_max)
{
    std::vector<std::vector<std::vector<Integer>>> split;
    for (std::int64_t m = 0; m <= m_max; ++m) {
        std::vector<std::vector<Integer>> by_k;
        for (std::int64_t k = 0; k <= m; ++k) {
            std::vector<Integer> by_p;
            for (std::int64_t p = 0; p <= k; ++p)
                by_p.push_back(anassa_pk_closed(m, k, p));
            by_k.push_back(std::move(by_p));
        }
        split.push_back(std::move(by_k));
    }
    return split;
}

namespace detail {

template <class T>
std::string join(const std::vector<T>& values, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += to_string(values[i]);
    }
    return out;
}

} // namespace detail

struct BfileOptions {
    std::int64_t offset = 0;
    std::string sequence_id;
};

/// b-file of a triangle read row by row (m ascending, k ascending within a
/// row). The header records the offset and row lengths so the file can be
/// folded back into the same table.
inline std::string write_bfile(const CountTable& table, const BfileOptions& options = {})
{
    std::ostringstream out;
    out << "# " << (options.sequence_id.empty() ? "" : options.sequence_id + " ") << to_string(table.family)
        << " nonattacking placements T(m,k) on the m x m board\n";
    out << "# rows m = 0.." << (table.rows.empty() ? 0 : table.rows.size() - 1)
        << ", k ascending within each row; index runs over rows in order\n";
    out << "# offset " << options.offset << "\n";
    out << "# row lengths:";
    for (const auto& row : table.rows)
        out << ' ' << row.size();
    out << "\n";
    std::int64_t index = options.offset;
    for (const auto& row : table.rows)
        for (const Integer& v : row)
            out << index++ << ' ' << v.str() << '\n';
    return out.str();
}

struct ParsedBfile {
    std::int64_t offset = 0;
    std::vector<std::size_t> row_lengths;
    std::vector<Integer> values;
};

inline ParsedBfile parse_bfile(const std::string& text)
{
    ParsedBfile parsed;
    bool have_offset = false;
    std::optional<std::int64_t> expected;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line[0] == '#') {
            std::istringstream header(line.substr(1));
            std::string word;
            header >> word;
            if (word == "offset") {
                header >> parsed.offset;
                have_offset = true;
            } else if (word == "row") {
                std::string lengths;
                header >> lengths;
                std::size_t n = 0;
                while (header >> n)
                    parsed.row_lengths.push_back(n);
            }
            continue;
        }
        std::istringstream body(line);
        std::int64_t index = 0;
        std::string value;
        if (!(body >> index >> value))
            throw std::runtime_error("b-file: malformed line '" + line + "'");
        if (!expected)
            expected = have_offset ? parsed.offset : index;
        if (index != *expected)
            throw std::runtime_error("b-file: index " + std::to_string(index) + " out of sequence");
        ++*expected;
        parsed.values.emplace_back(value);
    }
    return parsed;
}

inline CountTable read_bfile_table(Family f, const std::string& text)
{
    const ParsedBfile parsed = parse_bfile(text);
    CountTable table{f, {}};
    std::size_t next = 0;
    for (std::size_t len : parsed.row_lengths) {
        if (next + len > parsed.values.size())
            throw std::runtime_error("b-file: row lengths exceed number of values");
        table.rows.emplace_back(parsed.values.begin() + static_cast<std::ptrdiff_t>(next),
                                parsed.values.begin() + static_cast<std::ptrdiff_t>(next + len));
        next += len;
    }
    if (next != parsed.values.size())
        throw std::runtime_error("b-file: row lengths do not cover all values");
    return table;
}

inline std::string write_table(const CountTable& table, Format format, const BfileOptions& options = {})
{
    switch (format) {
    case Format::csv:
    case Format::tsv: {
        const std::string sep = format == Format::csv ? "," : "\t";
        std::string out;
        for (const auto& row : table.rows)
            out += detail::join(row, sep) + "\n";
        return out;
    }
    case Format::bfile: return write_bfile(table, options);
    case Format::json: {
        nlohmann::ordered_json j;
        j["piece"] = to_string(table.family);
        j["m_max"] = table.rows.empty() ? 0 : table.rows.size() - 1;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            auto r = nlohmann::ordered_json::array();
            for (const Integer& v : row)
                r.push_back(v.str());
            rows.push_back(std::move(r));
        }
        j["rows"] = std::move(rows);
        return j.dump(2) + "\n";
    }
    }
    return {};
}

/// JSON schema: { piece, k, period, coeffs: [residue][degree] as "num/den" }.
inline std::string coefficients_json(Family f, std::int64_t k, const QuasiPolynomial& qp)
{
    nlohmann::ordered_json j;
    j["piece"] = to_string(f);
    j["k"] = k;
    j["period"] = qp.period;
    auto classes = nlohmann::ordered_json::array();
    for (const auto& c : qp.coeffs) {
        auto v = nlohmann::ordered_json::array();
        for (const Rational& x : c)
            v.push_back(to_string(x));
        classes.push_back(std::move(v));
    }
    j["coeffs"] = std::move(classes);
    return j.dump(2) + "\n";
}

/// csv renders one residue class per line as "c0, c1, ..."; tsv uses tabs.
inline std::string write_coefficients(Family f, std::int64_t k, const QuasiPolynomial& qp, Format format)
{
    switch (format) {
    case Format::csv:
    case Format::tsv: {
        const std::string sep = format == Format::csv ? ", " : "\t";
        std::string out;
        for (const auto& c : qp.coeffs)
            out += detail::join(c, sep) + "\n";
        return out;
    }
    case Format::json: return coefficients_json(f, k, qp);
    case Format::bfile: throw std::invalid_argument("coefficient tables have no b-file form");
    }
    return {};
}

} // namespace riders
