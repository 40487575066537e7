#include "supmod/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace supmod {

namespace {

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size()) lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

long long parse_digits(std::string_view digits, int line_no, int col_no) {
    __int128 v = 0;
    for (char c : digits) {
        v = v * 10 + (c - '0');
        if (v > std::numeric_limits<long long>::max())
            throw ParseError("numeric literal too large", line_no, col_no);
    }
    return static_cast<long long>(v);
}

long long pow10_ll(std::size_t k, int line_no, int col_no) {
    __int128 v = 1;
    for (std::size_t i = 0; i < k; ++i) {
        v *= 10;
        if (v > std::numeric_limits<long long>::max())
            throw ParseError("decimal literal has too many digits", line_no, col_no);
    }
    return static_cast<long long>(v);
}

// Token grammar: -?[0-9]+ ( /[1-9][0-9]* | .[0-9]+ )?
Rational parse_scalar_token(std::string_view tok, int line_no, int col_no) {
    std::size_t p = 0;
    bool negative = false;
    if (p < tok.size() && tok[p] == '-') {
        negative = true;
        ++p;
    }
    std::size_t int_start = p;
    while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) ++p;
    if (p == int_start)
        throw ParseError("expected a number, got '" + std::string(tok) + "'", line_no, col_no);
    long long int_part = parse_digits(tok.substr(int_start, p - int_start), line_no, col_no);

    if (p == tok.size()) {
        return negative ? Rational(-int_part) : Rational(int_part);
    }

    if (tok[p] == '/') {
        ++p;
        std::size_t den_start = p;
        while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) ++p;
        if (p != tok.size() || p == den_start || tok[den_start] == '0')
            throw ParseError("malformed fraction '" + std::string(tok) + "'", line_no, col_no);
        long long den = parse_digits(tok.substr(den_start, p - den_start), line_no, col_no);
        return Rational::fraction(negative ? -int_part : int_part, den);
    }

    if (tok[p] == '.') {
        ++p;
        std::size_t frac_start = p;
        while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) ++p;
        if (p != tok.size() || p == frac_start)
            throw ParseError("malformed decimal '" + std::string(tok) + "'", line_no, col_no);
        std::string_view frac = tok.substr(frac_start, p - frac_start);
        long long scale = pow10_ll(frac.size(), line_no, col_no);
        __int128 num = static_cast<__int128>(int_part) * scale +
                       parse_digits(frac, line_no, col_no);
        if (num > std::numeric_limits<long long>::max())
            throw ParseError("decimal literal too large", line_no, col_no);
        long long n = static_cast<long long>(num);
        return Rational::fraction(negative ? -n : n, scale);
    }

    throw ParseError("unexpected character in '" + std::string(tok) + "'", line_no, col_no);
}

struct ParsedGrid {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> entries;
};

ParsedGrid parse_grid(std::string_view text) {
    ParsedGrid grid;
    auto lines = split_lines(text);

    int line_no = 0;
    bool body_started = false;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::string_view line = lines[li];
        line_no = static_cast<int>(li) + 1;
        if (is_blank(line)) {
            if (!body_started) continue;  // leading blank lines are fine
            // A blank line ends the matrix; anything after it is an error.
            for (std::size_t rest = li + 1; rest < lines.size(); ++rest)
                if (!is_blank(lines[rest]))
                    throw ParseError("unexpected content after blank line",
                                     static_cast<int>(rest) + 1, 1);
            break;
        }
        body_started = true;

        std::vector<Rational> row;
        std::size_t p = 0;
        while (p < line.size()) {
            if (line[p] == ' ' || line[p] == '\t' || line[p] == '\r') {
                ++p;
                continue;
            }
            std::size_t start = p;
            while (p < line.size() && line[p] != ' ' && line[p] != '\t' && line[p] != '\r') ++p;
            int col_no = static_cast<int>(start) + 1;
            row.push_back(parse_scalar_token(line.substr(start, p - start), line_no, col_no));
        }

        if (grid.rows == 0) {
            grid.cols = static_cast<int>(row.size());
        } else if (static_cast<int>(row.size()) != grid.cols) {
            throw DimensionError("ragged matrix: line " + std::to_string(line_no) + " has " +
                                 std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(grid.cols));
        }
        grid.entries.insert(grid.entries.end(), row.begin(), row.end());
        ++grid.rows;
    }

    if (grid.rows == 0) throw ParseError("empty matrix", 1, 1);
    return grid;
}

}  // namespace

Matrix::Matrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ < 1 || cols_ < 1)
        throw DimensionError("matrix dimensions must be at least 1x1");
    if (entries_.size() != static_cast<std::size_t>(rows_) * cols_)
        throw DimensionError("matrix entry count " + std::to_string(entries_.size()) +
                             " does not match " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
}

PermPattern::PermPattern(int rows, int cols, std::vector<int> ranks)
    : rows_(rows), cols_(cols), ranks_(std::move(ranks)) {
    if (rows_ < 1 || cols_ < 1)
        throw DimensionError("pattern dimensions must be at least 1x1");
    const int n = rows_ * cols_;
    if (ranks_.size() != static_cast<std::size_t>(n))
        throw DimensionError("pattern entry count " + std::to_string(ranks_.size()) +
                             " does not match " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int r : ranks_) {
        if (r < 1 || r > n)
            throw ValidationError("rank " + std::to_string(r) + " outside 1.." +
                                  std::to_string(n));
        if (seen[static_cast<std::size_t>(r)])
            throw ValidationError("duplicate rank " + std::to_string(r));
        seen[static_cast<std::size_t>(r)] = true;
    }
}

SortedEntries sort_entries(const Matrix& a) {
    SortedEntries s{a.entries()};
    std::sort(s.values.begin(), s.values.end());
    return s;
}

Matrix apply_permutation(const SortedEntries& sorted, const PermPattern& sigma) {
    if (sorted.values.size() != static_cast<std::size_t>(sigma.size()))
        throw DimensionError("entry count " + std::to_string(sorted.values.size()) +
                             " does not match pattern size " + std::to_string(sigma.size()));
    std::vector<Rational> out(sorted.values.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = sorted.values[static_cast<std::size_t>(sigma.ranks()[k]) - 1];
    return Matrix(sigma.rows(), sigma.cols(), std::move(out));
}

Matrix apply_permutation(const Matrix& a, const PermPattern& sigma) {
    if (a.rows() != sigma.rows() || a.cols() != sigma.cols())
        throw DimensionError("matrix is " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " but pattern is " +
                             std::to_string(sigma.rows()) + "x" +
                             std::to_string(sigma.cols()));
    return apply_permutation(sort_entries(a), sigma);
}

Matrix transpose(const Matrix& a) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(a.size()));
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i) out.push_back(a(i, j));
    return Matrix(a.cols(), a.rows(), std::move(out));
}

PermPattern transpose(const PermPattern& sigma) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(sigma.size()));
    for (int j = 0; j < sigma.cols(); ++j)
        for (int i = 0; i < sigma.rows(); ++i) out.push_back(sigma.rank(i, j));
    return PermPattern(sigma.cols(), sigma.rows(), std::move(out));
}

PermPattern rotate180(const PermPattern& sigma) {
    std::vector<int> out(sigma.ranks().rbegin(), sigma.ranks().rend());
    return PermPattern(sigma.rows(), sigma.cols(), std::move(out));
}

Matrix parse_matrix(std::string_view text) {
    ParsedGrid g = parse_grid(text);
    return Matrix(g.rows, g.cols, std::move(g.entries));
}

PermPattern parse_pattern(std::string_view text) {
    ParsedGrid g = parse_grid(text);
    std::vector<int> ranks;
    ranks.reserve(g.entries.size());
    for (const Rational& v : g.entries) {
        if (!v.is_integer() || v.num() < 1 || v.num() > g.rows * g.cols)
            throw ValidationError("pattern entry " + v.to_string() +
                                  " is not a rank in 1.." +
                                  std::to_string(g.rows * g.cols));
        ranks.push_back(static_cast<int>(v.num()));
    }
    return PermPattern(g.rows, g.cols, std::move(ranks));
}

std::vector<Rational> parse_scalars(std::string_view text) {
    std::vector<Rational> out;
    auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::string_view line = lines[li];
        std::size_t p = 0;
        while (p < line.size()) {
            if (line[p] == ' ' || line[p] == '\t' || line[p] == '\r') {
                ++p;
                continue;
            }
            std::size_t start = p;
            while (p < line.size() && line[p] != ' ' && line[p] != '\t' && line[p] != '\r') ++p;
            out.push_back(parse_scalar_token(line.substr(start, p - start),
                                             static_cast<int>(li) + 1,
                                             static_cast<int>(start) + 1));
        }
    }
    return out;
}

std::vector<std::string> split_blocks(std::string_view text) {
    std::vector<std::string> blocks;
    std::string current;
    for (std::string_view line : split_lines(text)) {
        if (is_blank(line)) {
            if (!current.empty()) {
                blocks.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.append(line);
            current.push_back('\n');
        }
    }
    if (!current.empty()) blocks.push_back(std::move(current));
    return blocks;
}

std::string to_text(const Matrix& a) {
    std::string out;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (j > 0) out += ' ';
            out += a(i, j).to_string();
        }
        out += '\n';
    }
    return out;
}

std::string to_text(const PermPattern& sigma) {
    std::string out;
    for (int i = 0; i < sigma.rows(); ++i) {
        for (int j = 0; j < sigma.cols(); ++j) {
            if (j > 0) out += ' ';
            out += std::to_string(sigma.rank(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string to_text(const SortedEntries& entries) {
    std::string out;
    for (std::size_t k = 0; k < entries.values.size(); ++k) {
        if (k > 0) out += ' ';
        out += entries.values[k].to_string();
    }
    out += '\n';
    return out;
}

}  // namespace supmod
