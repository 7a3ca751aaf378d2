#include "specsketch/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "specsketch/errors.hpp"

namespace specsketch {

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open file: " + path);
    return in;
}

}  // namespace

SymmetricMatrix read_dense_matrix(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream ls(line);
        std::vector<double> row;
        double v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) throw InvalidInputError("dense matrix: unparseable token");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InvalidInputError("dense matrix: empty input");
    const std::size_t d = rows.size();
    for (const auto& r : rows)
        if (r.size() != d) throw InvalidInputError("dense matrix: not square");
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = rows[i][j];
    return SymmetricMatrix::from_dense(std::move(m));
}

SymmetricMatrix read_dense_matrix_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_dense_matrix(in);
}

SymmetricMatrix read_matrix_market(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("%%MatrixMarket", 0) != 0)
        throw InvalidInputError("MatrixMarket: missing header");
    std::istringstream hs(header);
    std::string tag, object, format, field, symmetry;
    hs >> tag >> object >> format >> field >> symmetry;
    object = lowercase(object);
    format = lowercase(format);
    field = lowercase(field);
    symmetry = lowercase(symmetry);
    if (object != "matrix" || format != "coordinate")
        throw InvalidInputError("MatrixMarket: expected coordinate matrix");
    if (field != "real" && field != "integer")
        throw InvalidInputError("MatrixMarket: expected real entries");
    const bool symmetric_tag = symmetry == "symmetric";
    if (!symmetric_tag && symmetry != "general")
        throw InvalidInputError("MatrixMarket: unsupported symmetry '" + symmetry + "'");

    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '%') continue;
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) break;
    }
    std::istringstream ss(line);
    std::size_t nrows = 0, ncols = 0, count = 0;
    if (!(ss >> nrows >> ncols >> count))
        throw InvalidInputError("MatrixMarket: bad size line");
    if (nrows != ncols) throw InvalidInputError("MatrixMarket: matrix not square");

    std::vector<SparseEntry> entries;
    entries.reserve(count);
    std::map<std::pair<std::size_t, std::size_t>, double> general_seen;
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t i = 0, j = 0;
        double v = 0.0;
        if (!(in >> i >> j >> v)) throw InvalidInputError("MatrixMarket: truncated entries");
        if (i == 0 || j == 0 || i > nrows || j > ncols)
            throw InvalidInputError("MatrixMarket: index out of range");
        --i;
        --j;
        if (symmetric_tag) {
            entries.push_back({i, j, v});
        } else {
            general_seen[{i, j}] = v;
        }
    }
    if (!symmetric_tag) {
        // A general file must carry both triangles consistently.
        for (const auto& [key, v] : general_seen) {
            const auto [i, j] = key;
            if (i == j) {
                entries.push_back({i, j, v});
                continue;
            }
            auto mirror = general_seen.find({j, i});
            if (mirror == general_seen.end() || std::abs(mirror->second - v) > 1e-8 * std::abs(v))
                throw InvalidInputError("MatrixMarket: general file is not symmetric");
            if (i < j) entries.push_back({i, j, v});
        }
    }
    return SymmetricMatrix::from_sparse(nrows, std::move(entries));
}

SymmetricMatrix read_matrix_market_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_matrix_market(in);
}

void write_dense_matrix(std::ostream& out, const SymmetricMatrix& a) {
    const Matrix m = a.to_dense();
    out << std::setprecision(17);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
}

void write_matrix_market(std::ostream& out, const SymmetricMatrix& a) {
    out << "%%MatrixMarket matrix coordinate real symmetric\n";
    out << std::setprecision(17);
    if (a.is_sparse()) {
        out << a.dim() << ' ' << a.dim() << ' ' << a.entries().size() << '\n';
        // Stored triangle is upper; MatrixMarket wants row >= col, so mirror.
        for (const auto& e : a.entries())
            out << (e.col + 1) << ' ' << (e.row + 1) << ' ' << e.value << '\n';
    } else {
        const Matrix& m = a.dense();
        std::size_t count = 0;
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if (m(i, j) != 0.0) ++count;
        out << a.dim() << ' ' << a.dim() << ' ' << count << '\n';
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if (m(i, j) != 0.0) out << (i + 1) << ' ' << (j + 1) << ' ' << m(i, j) << '\n';
    }
}

}  // namespace specsketch
