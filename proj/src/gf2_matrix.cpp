#include "relaysched/gf2_matrix.hpp"

#include <algorithm>

#include "relaysched/errors.hpp"

namespace relaysched {

Gf2Matrix::Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw input_error("matrix dimensions must be non-negative");
    words_ = (cols + 63) / 64;
    bits_.assign(static_cast<std::size_t>(rows) * words_, 0);
}

void Gf2Matrix::set(int r, int c, bool v) {
    auto& w = bits_[static_cast<std::size_t>(r) * words_ + c / 64];
    const std::uint64_t bit = 1ull << (c % 64);
    if (v)
        w |= bit;
    else
        w &= ~bit;
}

int Gf2Matrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    std::vector<std::uint64_t> work(bits_);
    auto row = [&](int r) { return work.data() + static_cast<std::size_t>(r) * words_; };
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        const int w = c / 64;
        const std::uint64_t bit = 1ull << (c % 64);
        int pivot = -1;
        for (int r = rank; r < rows_; ++r) {
            if (row(r)[w] & bit) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            std::swap_ranges(row(pivot), row(pivot) + words_, row(rank));
        for (int r = rank + 1; r < rows_; ++r) {
            if (row(r)[w] & bit) {
                const std::uint64_t* src = row(rank);
                std::uint64_t* dst = row(r);
                for (int k = w; k < words_; ++k) dst[k] ^= src[k];
            }
        }
        ++rank;
    }
    return rank;
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) out.set(c, r, true);
    return out;
}

std::string Gf2Matrix::to_grid_string() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(rows_) * (cols_ + 1));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out += get(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

Gf2Matrix shift_block(int eta, int m) {
    if (m < 0 || eta < 0 || m > eta)
        throw input_error("shift_block requires 0 <= m <= eta");
    Gf2Matrix out(eta, eta);
    for (int k = 0; k < m; ++k) out.set(eta - m + k, k, true);
    return out;
}

Gf2Matrix hstack(const std::vector<Gf2Matrix>& blocks) {
    if (blocks.empty()) return {};
    const int rows = blocks.front().rows();
    int cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw input_error("hstack: row count mismatch");
        cols += b.cols();
    }
    Gf2Matrix out(rows, cols);
    int base = 0;
    for (const auto& b : blocks) {
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < b.cols(); ++c)
                if (b.get(r, c)) out.set(r, base + c, true);
        base += b.cols();
    }
    return out;
}

Gf2Matrix vstack(const std::vector<Gf2Matrix>& blocks) {
    if (blocks.empty()) return {};
    const int cols = blocks.front().cols();
    int rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw input_error("vstack: column count mismatch");
        rows += b.rows();
    }
    Gf2Matrix out(rows, cols);
    std::size_t at = 0;
    for (const auto& b : blocks) {
        std::copy(b.bits_.begin(), b.bits_.end(), out.bits_.begin() + at);
        at += b.bits_.size();
    }
    return out;
}

Gf2Matrix block_assemble(const std::vector<std::vector<Gf2Matrix>>& grid) {
    std::vector<Gf2Matrix> bands;
    bands.reserve(grid.size());
    for (const auto& band : grid) bands.push_back(hstack(band));
    return vstack(bands);
}

} // namespace relaysched
