#include "laurin/transcript.hpp"

#include <json.hpp>

#include "laurin/textio.hpp"

namespace laurin {

void Transcript::push(const ElementaryOp& op) {
    check(op.i >= 1 && op.i <= n_ && op.j >= 1 && op.j <= n_, ErrorKind::Precondition,
          "elementary op index out of range");
    check(op.i != op.j, ErrorKind::Precondition, "elementary op requires i != j");
    check(op.h.ring()->equals(*ring_), ErrorKind::Precondition, "op polynomial ring mismatch");
    if (op.h.is_zero()) return; // identity op, skip
    ops_.push_back(op);
}

void Transcript::annotate(const std::string& label) {
    annotations_.push_back({ops_.size(), label});
}

void Transcript::append(const Transcript& other) {
    check(other.ring_->equals(*ring_) && other.n_ == n_, ErrorKind::Precondition,
          "transcript append shape mismatch");
    std::size_t base = ops_.size();
    for (const auto& a : other.annotations_) annotations_.push_back({base + a.op_index, a.label});
    for (const auto& op : other.ops_) ops_.push_back(op);
}

Row apply(const Row& row, const ElementaryOp& op) {
    check(op.i >= 1 && op.j >= 1 && op.i <= static_cast<int>(row.size()) &&
              op.j <= static_cast<int>(row.size()),
          ErrorKind::Precondition, "op index out of range for row");
    check(op.h.ring()->equals(*row[0].ring()), ErrorKind::Precondition,
          "op ring does not match row ring");
    Row out = row;
    out[op.j - 1] = out[op.j - 1] + op.h * out[op.i - 1];
    return out;
}

Row apply(const Row& row, const Transcript& t) {
    check(static_cast<int>(row.size()) == t.n(), ErrorKind::Precondition,
          "row length does not match transcript");
    Row out = row;
    for (const auto& op : t.ops()) out = laurin::apply(out, op);
    return out;
}

Matrix identity_matrix(const RingPtr& ring, int n) {
    Matrix m(n, Row(n, LaurentPoly::zero(ring)));
    for (int i = 0; i < n; ++i) m[i][i] = LaurentPoly::one(ring);
    return m;
}

Matrix matrix_of(const Transcript& t) {
    Matrix m = identity_matrix(t.ring(), t.n());
    // right-multiplying by I + h e_{ij} adds h * column i to column j
    for (const auto& op : t.ops())
        for (int r = 0; r < t.n(); ++r)
            m[r][op.j - 1] = m[r][op.j - 1] + op.h * m[r][op.i - 1];
    return m;
}

Matrix matrix_multiply(const Matrix& a, const Matrix& b) {
    const RingPtr& R = a[0][0].ring();
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int m = static_cast<int>(b[0].size());
    Matrix out(n, Row(m, LaurentPoly::zero(R)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c)
            for (int t = 0; t < k; ++t) out[r][c] = out[r][c] + a[r][t] * b[t][c];
    return out;
}

Row row_times_matrix(const Row& row, const Matrix& m) {
    const RingPtr& R = row[0].ring();
    int n = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    Row out(cols, LaurentPoly::zero(R));
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < n; ++r) out[c] = out[c] + row[r] * m[r][c];
    return out;
}

Transcript invert(const Transcript& t) {
    Transcript out(t.ring(), t.n());
    for (auto it = t.ops().rbegin(); it != t.ops().rend(); ++it)
        out.push(it->i, it->j, -it->h);
    return out;
}

bool verify(const Row& row, const Transcript& t, const Row& target) {
    if (row.size() != target.size() || static_cast<int>(row.size()) != t.n()) return false;
    Row got = laurin::apply(row, t);
    for (std::size_t k = 0; k < got.size(); ++k)
        if (got[k] != target[k]) return false;
    return true;
}

Row unit_row(const RingPtr& ring, int n) {
    Row r(n, LaurentPoly::zero(ring));
    r[0] = LaurentPoly::one(ring);
    return r;
}

LaurentPoly determinant(const Matrix& m) {
    int n = static_cast<int>(m.size());
    const RingPtr& R = m[0][0].ring();
    if (n == 1) return m[0][0];
    LaurentPoly det = LaurentPoly::zero(R);
    for (int c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        Matrix minor(n - 1, Row());
        for (int r = 1; r < n; ++r) {
            minor[r - 1].reserve(n - 1);
            for (int cc = 0; cc < n; ++cc)
                if (cc != c) minor[r - 1].push_back(m[r][cc]);
        }
        LaurentPoly term = m[0][c] * determinant(minor);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

std::string transcript_to_json(const Transcript& t) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["ring"] = t.ring()->to_text();
    j["n"] = t.n();
    j["ops"] = nlohmann::ordered_json::array();
    for (const auto& op : t.ops()) {
        nlohmann::ordered_json o;
        o["i"] = op.i;
        o["j"] = op.j;
        o["h"] = op.h.to_text();
        j["ops"].push_back(o);
    }
    j["annotations"] = nlohmann::ordered_json::array();
    for (const auto& a : t.annotations()) {
        nlohmann::ordered_json o;
        o["op_index"] = a.op_index;
        o["label"] = a.label;
        j["annotations"].push_back(o);
    }
    return j.dump(2) + "\n";
}

Transcript transcript_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        parse_error(std::string("transcript JSON: ") + e.what());
    }
    check(j.contains("ring") && j.contains("n") && j.contains("ops"), ErrorKind::Parse,
          "transcript JSON missing required fields");
    RingPtr ring = parse_ring(j["ring"].get<std::string>());
    Transcript t(ring, j["n"].get<int>());
    for (const auto& o : j["ops"]) {
        t.push(o["i"].get<int>(), o["j"].get<int>(),
               parse_poly(ring, o["h"].get<std::string>()));
    }
    if (j.contains("annotations"))
        for (const auto& a : j["annotations"])
            t.add_annotation(a["op_index"].get<std::size_t>(), a["label"].get<std::string>());
    return t;
}

} // namespace laurin
