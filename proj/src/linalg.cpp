#include "orbloop/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace orbloop {

namespace {

std::size_t leading_column(const std::vector<Scalar>& row) {
    for (std::size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) return j;
    return row.size();
}

void axpy(std::vector<Scalar>& target, const Scalar& factor,
          const std::vector<Scalar>& source, std::size_t from) {
    for (std::size_t j = from; j < target.size(); ++j)
        if (!source[j].is_zero()) target[j] = target[j] + factor * source[j];
}

}  // namespace

std::vector<Scalar> RowReducer::reduce(std::vector<Scalar> v) const {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivot_col_[r];
        if (!v[p].is_zero()) axpy(v, -v[p], rows_[r], p);
    }
    return v;
}

bool RowReducer::add_row(std::vector<Scalar> row) {
    row = reduce(std::move(row));
    const std::size_t lead = leading_column(row);
    if (lead == cols_) return false;
    const Scalar inv = row[lead].inverse();
    for (std::size_t j = lead; j < cols_; ++j) row[j] = row[j] * inv;
    // back-substitute into existing pivot rows to keep them fully reduced
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (!rows_[r][lead].is_zero()) axpy(rows_[r], -rows_[r][lead], row, lead);
    rows_.push_back(std::move(row));
    pivot_col_.push_back(lead);
    return true;
}

bool RowReducer::in_span(const std::vector<Scalar>& v) const {
    auto residual = reduce(v);
    return leading_column(residual) == cols_;
}

std::vector<std::vector<Scalar>> null_space(const FieldSpec& field,
                                            const std::vector<std::vector<Scalar>>& equations,
                                            std::size_t columns) {
    // RREF kept fully reduced: pivot column -> normalized row.
    std::map<std::size_t, std::vector<Scalar>> pivots;
    for (std::vector<Scalar> eq : equations) {
        if (eq.size() != columns) throw std::invalid_argument("equation length mismatch");
        for (const auto& [pc, row] : pivots)
            if (!eq[pc].is_zero()) axpy(eq, -eq[pc], row, pc);
        const std::size_t lead = leading_column(eq);
        if (lead == columns) continue;
        const Scalar inv = eq[lead].inverse();
        for (std::size_t j = lead; j < columns; ++j) eq[j] = eq[j] * inv;
        for (auto& [pc, row] : pivots)
            if (!row[lead].is_zero()) axpy(row, -row[lead], eq, lead);
        pivots[lead] = std::move(eq);
    }

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t j = 0; j < columns; ++j) {
        if (pivots.count(j)) continue;  // pivot variable
        std::vector<Scalar> v(columns, Scalar::zero(field));
        v[j] = Scalar::one(field);
        for (const auto& [pc, row] : pivots) v[pc] = -row[j];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace orbloop
