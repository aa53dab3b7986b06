/**
 * Text formats. A matrix file is zero or more `# note` lines, a header
 * `ring p=<p> s=<s> n=<n> rows=<r>`, then r rows of n integers; entries
 * may be negative on input and are reduced. A map-table file is notes, a
 * header `graymap variant=<eta|xi|classic> s=<s> entries=<e>`, then lines
 * `u a b` with u ascending from zero. Serialization is canonical: parsing
 * a canonical file and serializing it again reproduces the bytes.
 */

#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace ringcode {

struct MatrixFile {
    std::vector<std::string> notes;
    RingMatrix matrix;
};

struct GrayTableFile {
    std::vector<std::string> notes;
    std::string variant;
    unsigned s = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;
};

namespace detail {

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

inline std::size_t consume_notes(const std::vector<std::string>& lines, std::vector<std::string>& notes) {
    std::size_t i = 0;
    while (i < lines.size() && !lines[i].empty() && lines[i][0] == '#') {
        std::string body = lines[i].substr(1);
        if (!body.empty() && body[0] == ' ') body.erase(0, 1);
        notes.push_back(body);
        ++i;
    }
    return i;
}

inline std::uint64_t parse_field(const std::string& token, const std::string& key) {
    const std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0) {
        throw std::invalid_argument("malformed header: expected " + key + "=<value>, got '" + token + "'");
    }
    const std::string value = token.substr(prefix.size());
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("malformed header: " + key + " must be a nonnegative integer");
    }
    return std::stoull(value);
}

}  // namespace detail

inline MatrixFile parse_matrix_file(const std::string& text) {
    auto lines = detail::split_lines(text);
    std::vector<std::string> notes;
    std::size_t i = detail::consume_notes(lines, notes);
    if (i >= lines.size()) throw std::invalid_argument("matrix file: missing header line");

    std::istringstream header(lines[i]);
    std::string tag, pf, sf, nf, rf;
    header >> tag >> pf >> sf >> nf >> rf;
    if (tag != "ring" || header.fail()) {
        throw std::invalid_argument("matrix file: header must read 'ring p=<p> s=<s> n=<n> rows=<r>'");
    }
    const std::uint64_t p = detail::parse_field(pf, "p");
    const std::uint64_t s = detail::parse_field(sf, "s");
    const std::uint64_t n = detail::parse_field(nf, "n");
    const std::uint64_t r = detail::parse_field(rf, "rows");
    if (s > 64) throw std::invalid_argument("matrix file: exponent s is implausibly large");

    RingSpec spec(p, static_cast<unsigned>(s));
    RingMatrix matrix(spec, n);
    ++i;
    for (std::uint64_t row = 0; row < r; ++row, ++i) {
        if (i >= lines.size()) throw std::invalid_argument("matrix file: fewer rows than the header promises");
        std::istringstream ls(lines[i]);
        std::vector<long long> entries;
        long long v;
        while (ls >> v) entries.push_back(v);
        if (!ls.eof()) throw std::invalid_argument("matrix file: row " + std::to_string(row) + " has a bad token");
        if (entries.size() != n) {
            throw std::invalid_argument("matrix file: row " + std::to_string(row) + " has " +
                                        std::to_string(entries.size()) + " entries, expected " + std::to_string(n));
        }
        matrix.append_row(RingVector(spec, entries));
    }
    for (; i < lines.size(); ++i) {
        if (!lines[i].empty()) throw std::invalid_argument("matrix file: trailing content after the last row");
    }
    return MatrixFile{std::move(notes), std::move(matrix)};
}

inline std::string serialize(const MatrixFile& mf) {
    std::ostringstream out;
    for (const auto& note : mf.notes) out << "# " << note << "\n";
    const RingMatrix& M = mf.matrix;
    out << "ring p=" << M.spec().p() << " s=" << M.spec().s() << " n=" << M.cols() << " rows=" << M.row_count()
        << "\n";
    for (std::size_t i = 0; i < M.row_count(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if (j) out << ' ';
            out << M.at(i, j);
        }
        out << "\n";
    }
    return out.str();
}

inline GrayTableFile parse_table_file(const std::string& text) {
    auto lines = detail::split_lines(text);
    GrayTableFile tf;
    std::size_t i = detail::consume_notes(lines, tf.notes);
    if (i >= lines.size()) throw std::invalid_argument("table file: missing header line");

    std::istringstream header(lines[i]);
    std::string tag, vf, sf, ef;
    header >> tag >> vf >> sf >> ef;
    if (tag != "graymap" || header.fail()) {
        throw std::invalid_argument("table file: header must read 'graymap variant=<v> s=<s> entries=<e>'");
    }
    if (vf.rfind("variant=", 0) != 0) throw std::invalid_argument("table file: missing variant field");
    tf.variant = vf.substr(8);
    if (tf.variant != "eta" && tf.variant != "xi" && tf.variant != "classic") {
        throw std::invalid_argument("table file: variant must be eta, xi or classic");
    }
    tf.s = static_cast<unsigned>(detail::parse_field(sf, "s"));
    const std::uint64_t count = detail::parse_field(ef, "entries");

    ++i;
    for (std::uint64_t e = 0; e < count; ++e, ++i) {
        if (i >= lines.size()) throw std::invalid_argument("table file: fewer entries than the header promises");
        std::istringstream ls(lines[i]);
        std::uint64_t u, a, b;
        if (!(ls >> u >> a >> b)) throw std::invalid_argument("table file: entry lines must read 'u a b'");
        std::string rest;
        if (ls >> rest) throw std::invalid_argument("table file: entry line has trailing tokens");
        if (u != e) throw std::invalid_argument("table file: inputs must ascend from zero without gaps");
        tf.entries.emplace_back(a, b);
    }
    for (; i < lines.size(); ++i) {
        if (!lines[i].empty()) throw std::invalid_argument("table file: trailing content after the last entry");
    }
    return tf;
}

inline std::string serialize(const GrayTableFile& tf) {
    std::ostringstream out;
    for (const auto& note : tf.notes) out << "# " << note << "\n";
    out << "graymap variant=" << tf.variant << " s=" << tf.s << " entries=" << tf.entries.size() << "\n";
    for (std::size_t u = 0; u < tf.entries.size(); ++u) {
        out << u << ' ' << tf.entries[u].first << ' ' << tf.entries[u].second << "\n";
    }
    return out.str();
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

/// FNV-1a over the raw bytes, rendered as 16 hex digits.
inline std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace ringcode
