#include "laurin/umrow.hpp"

#include <sstream>

#include "laurin/textio.hpp"

namespace laurin {

UmRow::UmRow(Row entries, Row cofactors)
    : entries_(std::move(entries)), cofactors_(std::move(cofactors)) {
    check(entries_.size() >= 2, ErrorKind::Precondition, "unimodular rows need length >= 2");
    check(entries_.size() == cofactors_.size(), ErrorKind::Precondition,
          "cofactor count must match entry count");
    ring_ = entries_[0].ring();
    for (const auto& f : entries_)
        check(f.ring()->equals(*ring_), ErrorKind::Precondition, "row entry ring mismatch");
    for (const auto& g : cofactors_)
        check(g.ring()->equals(*ring_), ErrorKind::Precondition, "cofactor ring mismatch");
    check(verify_certificate(), ErrorKind::Precondition,
          "certificate does not verify: sum f_i g_i != 1");
}

UmRow UmRow::unit(const RingPtr& ring, int n) {
    return UmRow(unit_row(ring, n), unit_row(ring, n));
}

bool UmRow::verify_certificate() const {
    LaurentPoly sum = LaurentPoly::zero(ring_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        sum = sum + entries_[k] * cofactors_[k];
    return sum == LaurentPoly::one(ring_);
}

void UmRow::apply_op(const ElementaryOp& op) {
    // (f E)(E^{-1} g) = f g: entry j gains h * entry i, cofactor i loses
    // h * cofactor j.
    entries_[op.j - 1] = entries_[op.j - 1] + op.h * entries_[op.i - 1];
    cofactors_[op.i - 1] = cofactors_[op.i - 1] - op.h * cofactors_[op.j - 1];
}

void UmRow::apply_transcript(const Transcript& t) {
    check(t.n() == n(), ErrorKind::Precondition, "transcript/row length mismatch");
    for (const auto& op : t.ops()) apply_op(op);
}

void UmRow::set_cofactors(Row cofactors) {
    Row old = std::move(cofactors_);
    cofactors_ = std::move(cofactors);
    if (!verify_certificate()) {
        cofactors_ = std::move(old);
        precondition_error("replacement cofactors do not verify");
    }
}

ScrambleResult random_unimodular(const RingPtr& ring, const ScrambleParams& params) {
    check(params.n >= 2, ErrorKind::Precondition, "scramble needs n >= 2");
    std::mt19937_64 rng(params.seed);
    auto next = [&rng](std::uint64_t bound) { return rng() % bound; };

    UmRow row = UmRow::unit(ring, params.n);
    Transcript t(ring, params.n);
    for (int k = 0; k < params.ops; ++k) {
        int i = static_cast<int>(next(params.n)) + 1;
        int j = static_cast<int>(next(params.n - 1)) + 1;
        if (j >= i) ++j;
        std::int64_t e = static_cast<std::int64_t>(next(2 * params.degree_window + 1)) -
                         params.degree_window;
        Int c = Int(static_cast<long long>(next(2 * params.coeff_bound)) - params.coeff_bound);
        if (c >= 0) c += 1; // skip zero
        RElem coeff = ring->from_int(c);
        if (coeff.is_zero()) coeff = ring->one(); // collapse in small moduli
        ElementaryOp op{i, j, LaurentPoly::monomial(coeff, e)};
        if (op.h.is_zero()) continue; // trivial ring
        row.apply_op(op);
        t.push(op);
    }
    return {row, t};
}

Matrix complete_row(const UmRow& row, const Transcript& t) {
    check(verify(row.entries(), t, unit_row(row.ring(), row.n())), ErrorKind::Precondition,
          "complete_row: transcript does not reduce the row to e_1");
    Matrix m = matrix_of(invert(t));
    // first row of M is e_1 * M = row
    return m;
}

std::string umrow_to_text(const UmRow& row) {
    std::ostringstream os;
    os << "ring " << row.ring()->to_text() << "\n";
    os << "n " << row.n() << "\n";
    for (const auto& f : row.entries()) os << "entry " << f.to_text() << "\n";
    for (const auto& g : row.cofactors()) os << "cofactor " << g.to_text() << "\n";
    return os.str();
}

UmRow umrow_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    RingPtr ring;
    int n = -1;
    Row entries, cofactors;
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
            check(ring != nullptr, ErrorKind::Parse, "row file: 'entry' before 'ring'");
            entries.push_back(parse_poly(ring, rest));
        } else if (key == "cofactor") {
            check(ring != nullptr, ErrorKind::Parse, "row file: 'cofactor' before 'ring'");
            cofactors.push_back(parse_poly(ring, rest));
        } else {
            parse_error("row file: unknown key '" + key + "'");
        }
    }
    check(ring != nullptr, ErrorKind::Parse, "row file: missing ring");
    check(n == static_cast<int>(entries.size()), ErrorKind::Parse,
          "row file: n does not match entry count");
    return UmRow(std::move(entries), std::move(cofactors));
}

} // namespace laurin
