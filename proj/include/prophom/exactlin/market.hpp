#pragma once

#include <prophom/exactlin/complex_window.hpp>

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace prophom::exactlin {

/// Plain-text dump: "rows cols nnz", then one "row col num/den" line per entry, 1-based.
inline void write_market(std::ostream& os, const SparseMatrix& m)
{
    os << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
    for (const auto& [rc, v] : m.entries())
        os << rc.first + 1 << ' ' << rc.second + 1 << ' ' << v.get_num().get_str() << '/'
           << v.get_den().get_str() << '\n';
}

inline SparseMatrix read_market(std::istream& is)
{
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(is >> rows >> cols >> nnz))
        throw Error("market: bad header");
    SparseMatrix m(rows, cols);
    for (std::size_t k = 0; k < nnz; ++k) {
        std::size_t r = 0, c = 0;
        std::string v;
        if (!(is >> r >> c >> v) || r == 0 || c == 0 || r > rows || c > cols)
            throw Error("market: bad entry line " + std::to_string(k + 1));
        if (m.get(r - 1, c - 1) != 0)
            throw Error("market: repeated entry");
        m.set(r - 1, c - 1, parse_rational(v));
    }
    return m;
}

inline std::string market_text(const SparseMatrix& m)
{
    std::ostringstream os;
    write_market(os, m);
    return os.str();
}

/**
 * Window dump:
 *   window <lo> <hi> <step> <closed_below> <closed_above> <name>
 *   space <p> <dim>, followed by dim label lines
 *   differential <p>, followed by a matrix dump
 */
inline void write_window(std::ostream& os, const ComplexWindow& w)
{
    os << "window " << w.lo() << ' ' << w.hi() << ' ' << w.step() << ' ' << w.closed_below() << ' '
       << w.closed_above() << ' ' << w.name() << '\n';
    for (int p = w.lo(); p <= w.hi(); ++p) {
        os << "space " << p << ' ' << w.dim(p) << '\n';
        for (const auto& l : w.labels(p))
            os << l << '\n';
    }
    for (int p = w.lo(); p <= w.hi(); ++p)
        if (w.has_differential(p)) {
            os << "differential " << p << '\n';
            write_market(os, w.differential(p));
        }
}

inline ComplexWindow read_window(std::istream& is)
{
    std::string tag, name;
    int lo = 0, hi = 0, step = 1;
    bool below = false, above = false;
    if (!(is >> tag >> lo >> hi >> step >> below >> above) || tag != "window")
        throw Error("window dump: bad header");
    std::getline(is >> std::ws, name);
    ComplexWindow w(name, lo, hi, step, below, above);
    while (is >> tag) {
        int p = 0;
        if (!(is >> p))
            throw Error("window dump: missing degree");
        if (tag == "space") {
            std::size_t dim = 0;
            is >> dim;
            is.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
            std::vector<std::string> labels(dim);
            for (auto& l : labels)
                if (!std::getline(is, l))
                    throw Error("window dump: missing label");
            w.set_space(p, std::move(labels));
        } else if (tag == "differential") {
            w.set_differential(p, read_market(is));
        } else {
            throw Error("window dump: unknown section " + tag);
        }
    }
    w.validate();
    return w;
}

}  // namespace prophom::exactlin
