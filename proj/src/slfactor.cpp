#include "laurin/slfactor.hpp"

#include <sstream>

#include "laurin/textio.hpp"

namespace laurin {

namespace {

// Signed first-row cofactors: adj[j][0], so that sum_j M[0][j] * cof[j]
// equals det(M). Self-certifying input for zero_dim_reduce.
Row first_row_cofactors(const Matrix& M) {
    int n = static_cast<int>(M.size());
    const RingPtr& R = M[0][0].ring();
    Row cof;
    for (int j = 0; j < n; ++j) {
        Matrix minor;
        for (int r = 1; r < n; ++r) {
            Row row;
            for (int c = 0; c < n; ++c)
                if (c != j) row.push_back(M[r][c]);
            minor.push_back(std::move(row));
        }
        LaurentPoly d = minor.empty() ? LaurentPoly::one(R) : determinant(minor);
        cof.push_back(j % 2 == 0 ? d : -d);
    }
    return cof;
}

Transcript factor_sl_rec(const Matrix& M, const SlFactorOptions& opts) {
    const RingPtr& R = M[0][0].ring();
    int n = static_cast<int>(M.size());
    Transcript out(R, n);
    if (n == 1) {
        check(M[0][0] == LaurentPoly::one(R), ErrorKind::Internal,
              "factor_sl: 1x1 block must be the identity");
        return out;
    }

    // reduce the first row to e_1 with cofactors from the adjugate
    UmRow row(M[0], first_row_cofactors(M));
    ReductionOutcome red = zero_dim_reduce(row, opts.budget);
    Matrix M1 = matrix_multiply(M, matrix_of(red.transcript));
    // M1 has first row e_1; clear the first column below the pivot by left
    // multiplications L = prod (I - M1[i][0] e_{i,1})
    std::vector<LaurentPoly> col;
    for (int i = 1; i < n; ++i) col.push_back(M1[i][0]);

    // the (n-1)-block recursion
    Matrix block(n - 1, Row());
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) block[i - 1].push_back(M1[i][j]);
    SlFactorOptions sub = opts;
    Transcript inner = factor_sl_rec(block, sub);

    // M = L^{-1} * lift(inner) * E^{-1} with E = matrix_of(red.transcript)
    for (int i = 1; i < n; ++i)
        if (!col[i - 1].is_zero()) out.push(i + 1, 1, col[i - 1]);
    for (const auto& op : inner.ops()) out.push(op.i + 1, op.j + 1, op.h);
    out.append(invert(red.transcript));
    return out;
}

} // namespace

Transcript factor_sl(const Matrix& M, const SlFactorOptions& opts) {
    check(!M.empty() && M.size() == M[0].size(), ErrorKind::Precondition,
          "factor_sl: matrix must be square");
    int n = static_cast<int>(M.size());
    check(n >= 2, ErrorKind::Precondition, "factor_sl: n >= 2 required");
    check(n <= opts.max_n, ErrorKind::Precondition,
          "factor_sl: n exceeds the configured cap");
    const RingPtr& R = M[0][0].ring();
    check(R->zero_dimensional(), ErrorKind::Precondition,
          "factor_sl: coefficient ring must be zero-dimensional, got " + R->to_text());
    check(determinant(M) == LaurentPoly::one(R), ErrorKind::Precondition,
          "factor_sl: determinant must be exactly 1");

    Transcript out = factor_sl_rec(M, opts);
    check(matrix_of(out) == M, ErrorKind::Internal,
          "factor_sl: factorization replay does not equal the input");
    return out;
}

std::string matrix_to_text(const Matrix& m) {
    std::ostringstream os;
    os << "ring " << m[0][0].ring()->to_text() << "\n";
    os << "n " << m.size() << "\n";
    for (const auto& row : m)
        for (const auto& f : row) os << "entry " << f.to_text() << "\n";
    return os.str();
}

Matrix matrix_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    RingPtr ring;
    int n = -1;
    std::vector<LaurentPoly> entries;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest;
        std::getline(ls, rest);
        if (key == "ring") {
            ring = parse_ring(rest);
        } else if (key == "n") {
            n = std::stoi(rest);
        } else if (key == "entry") {
            check(ring != nullptr, ErrorKind::Parse, "matrix file: 'entry' before 'ring'");
            entries.push_back(parse_poly(ring, rest));
        } else {
            parse_error("matrix file: unknown key '" + key + "'");
        }
    }
    check(ring != nullptr && n >= 1, ErrorKind::Parse, "matrix file: missing header");
    check(static_cast<int>(entries.size()) == n * n, ErrorKind::Parse,
          "matrix file: expected n*n entries");
    Matrix m(n, Row());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i].push_back(entries[i * n + j]);
    return m;
}

} // namespace laurin
