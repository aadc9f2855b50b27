#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "ripcert/errors.hpp"
#include "ripcert/rip.hpp"

namespace ripcert::rip {

SensingMatrix read_matrix(std::istream& in) {
    long long rows = 0;
    long long cols = 0;
    if (!(in >> rows >> cols)) {
        throw ParseError("matrix header must be \"m n\"", 1);
    }
    if (rows <= 0 || cols <= 0) {
        throw ParseError("matrix dimensions must be positive", 1);
    }
    Eigen::MatrixXd m(rows, cols);
    for (long long i = 0; i < rows; ++i) {
        for (long long j = 0; j < cols; ++j) {
            double value = 0.0;
            if (!(in >> value)) {
                throw ParseError("expected " + std::to_string(rows * cols) +
                                     " matrix entries, ran out at row " + std::to_string(i),
                                 static_cast<int>(i) + 2);
            }
            m(i, j) = value;
        }
    }
    return SensingMatrix(std::move(m));
}

SensingMatrix read_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open matrix file " + path.string());
    }
    return read_matrix(in);
}

void write_matrix(const SensingMatrix& m, std::ostream& out) {
    out << m.rows() << ' ' << m.cols() << '\n';
    char buf[64];
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            // 17 significant digits reproduce the double exactly on re-read.
            std::snprintf(buf, sizeof(buf), "%.17g", m.matrix()(i, j));
            out << buf << (j + 1 == m.cols() ? '\n' : ' ');
        }
    }
}

void write_matrix(const SensingMatrix& m, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open matrix file " + path.string() + " for writing");
    }
    write_matrix(m, out);
    if (!out) {
        throw ParseError("failed writing matrix file " + path.string());
    }
}

}  // namespace ripcert::rip
