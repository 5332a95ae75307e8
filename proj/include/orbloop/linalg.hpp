#pragma once

#include "orbloop/field.hpp"

#include <vector>

namespace orbloop {

/// Incremental exact Gaussian elimination. Rows are kept in reduced
/// echelon form; usable both for rank/span queries and for extracting
/// null spaces of constraint systems.
class RowReducer {
public:
    explicit RowReducer(const FieldSpec& field, std::size_t columns)
        : field_(field), cols_(columns) {}

    /// Reduces the row against the pivots; if a nonzero residual remains it
    /// becomes a new pivot row. Returns true iff the rank increased.
    bool add_row(std::vector<Scalar> row);

    /// Residual of v after elimination against the current pivot rows.
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;

    bool in_span(const std::vector<Scalar>& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t columns() const { return cols_; }

private:
    FieldSpec field_;
    std::size_t cols_;
    std::vector<std::vector<Scalar>> rows_;  // pivot rows, normalized
    std::vector<std::size_t> pivot_col_;     // strictly increasing? no: per row
};

/// Basis of { x : A x = 0 }, columns of A indexed 0..columns-1.
/// Basis vectors are normalized with leading coefficient 1, ordered by
/// their free-variable index.
std::vector<std::vector<Scalar>> null_space(const FieldSpec& field,
                                            const std::vector<std::vector<Scalar>>& equations,
                                            std::size_t columns);

}  // namespace orbloop
