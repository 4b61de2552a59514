#ifndef LAURIN_TRANSCRIPT_HPP
#define LAURIN_TRANSCRIPT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "laurin/laurent.hpp"

namespace laurin {

using Row = std::vector<LaurentPoly>;
using Matrix = std::vector<Row>;

// I + h*e_{ij} acting on row vectors on the right: entry j gains h * entry i.
// Indices are 1-based throughout, matching the e_1 target convention.
struct ElementaryOp {
    int i = 0, j = 0;
    LaurentPoly h;
};

struct Annotation {
    std::size_t op_index; // position in ops() the label refers to
    std::string label;
};

class Transcript {
public:
    Transcript(RingPtr ring, int n) : ring_(std::move(ring)), n_(n) {}

    const RingPtr& ring() const { return ring_; }
    int n() const { return n_; }
    const std::vector<ElementaryOp>& ops() const { return ops_; }
    const std::vector<Annotation>& annotations() const { return annotations_; }

    void push(const ElementaryOp& op);
    void push(int i, int j, const LaurentPoly& h) { push({i, j, h}); }
    // Marks the next op to be pushed with a macro label (audit only).
    void annotate(const std::string& label);
    void add_annotation(std::size_t op_index, const std::string& label) {
        annotations_.push_back({op_index, label});
    }
    void strip_annotations() { annotations_.clear(); }
    void append(const Transcript& other); // same ring and n

    std::size_t size() const { return ops_.size(); }

private:
    RingPtr ring_;
    int n_;
    std::vector<ElementaryOp> ops_;
    std::vector<Annotation> annotations_;
};

Row apply(const Row& row, const ElementaryOp& op);
Row apply(const Row& row, const Transcript& t);

Matrix identity_matrix(const RingPtr& ring, int n);
Matrix matrix_of(const Transcript& t);
Matrix matrix_multiply(const Matrix& a, const Matrix& b);
Row row_times_matrix(const Row& row, const Matrix& m);

Transcript invert(const Transcript& t);

bool verify(const Row& row, const Transcript& t, const Row& target);

// e_1 as a row of length n.
Row unit_row(const RingPtr& ring, int n);

LaurentPoly determinant(const Matrix& m); // exact cofactor expansion

// Serialization (stable JSON layout: {version, ring, n, ops, annotations}).
std::string transcript_to_json(const Transcript& t);
Transcript transcript_from_json(const std::string& text);

} // namespace laurin

#endif
