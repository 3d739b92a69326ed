#include "linalg.hpp"

namespace gring::linalg {

std::vector<std::size_t> rref(Mat& m, const RingPtr&) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = row; i < rows; ++i)
            if (!m[i][col].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        Scalar inv = scalar_inverse(m[row][col]);
        for (std::size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Scalar factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = m[i][j] - factor * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<Vec> kernel(Mat m, const RingPtr& field, std::size_t cols) {
    if (m.empty()) m.push_back(Vec(cols, Scalar::zero(field)));
    std::vector<std::size_t> pivots = rref(m, field);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec x(cols, Scalar::zero(field));
        x[free] = Scalar::one(field);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = -m[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<Vec> solve(Mat m, Vec b, const RingPtr& field) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m.front().size() : 0;
    for (std::size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
    std::vector<std::size_t> pivots = rref(m, field);
    // inconsistent iff some pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Vec x(cols, Scalar::zero(field));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
    return x;
}

}  // namespace gring::linalg
