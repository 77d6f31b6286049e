#include "superck/linalg.hpp"

namespace sck {

namespace {

// Reduced row echelon form; returns pivot column per row.
std::vector<int> rref(QMat& a, QVec* b) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        if (b) std::swap((*b)[p], (*b)[r]);
        Rat inv = Rat(1) / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        if (b) (*b)[r] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            if (b) (*b)[i] -= f * (*b)[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

bool solve_linear(QMat a, QVec b, QVec& x) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivots = rref(a, &b);
    int rank = static_cast<int>(pivots.size());
    for (int i = rank; i < rows; ++i)
        if (b[i] != 0) return false;
    x.assign(cols, Rat(0));
    for (int i = 0; i < rank; ++i) x[pivots[i]] = b[i];
    return true;
}

std::vector<QVec> null_space(QMat a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivots = rref(a, nullptr);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sck
