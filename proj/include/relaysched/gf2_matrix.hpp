#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace relaysched {

/// Dense binary matrix with bit-packed rows (64 entries per word).
/// Unused tail bits of each row are kept zero.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const {
        return (word(r, c / 64) >> (c % 64)) & 1u;
    }
    void set(int r, int c, bool v);

    /// Rank over GF(2) by word-wide row elimination. Works on an internal
    /// copy; the matrix itself is not mutated.
    int rank() const;

    Gf2Matrix transposed() const;

    bool operator==(const Gf2Matrix& other) const = default;

    /// One text line per row, '0'/'1' per entry (debug / CLI output).
    std::string to_grid_string() const;

private:
    std::uint64_t word(int r, int w) const { return bits_[static_cast<std::size_t>(r) * words_ + w]; }

    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;                    // words per row
    std::vector<std::uint64_t> bits_;  // rows_ * words_

    friend Gf2Matrix hstack(const std::vector<Gf2Matrix>& blocks);
    friend Gf2Matrix vstack(const std::vector<Gf2Matrix>& blocks);
};

/// The eta x eta block passing the top m bits of its input: identity of
/// size m in the lower-left corner, zero elsewhere; entry
/// (eta - m + k, k) = 1 for k in [0, m). Requires 0 <= m <= eta.
Gf2Matrix shift_block(int eta, int m);

/// Concatenate side by side (equal row counts required).
Gf2Matrix hstack(const std::vector<Gf2Matrix>& blocks);

/// Stack top to bottom (equal column counts required).
Gf2Matrix vstack(const std::vector<Gf2Matrix>& blocks);

/// Assemble a 2-D grid of blocks; dimensions must conform along each band.
Gf2Matrix block_assemble(const std::vector<std::vector<Gf2Matrix>>& grid);

} // namespace relaysched
