#pragma once

#include <initializer_list>
#include <vector>

#include "lscat/rational.hpp"

namespace lscat {

// Dense rational matrix, row-major. Zero rows and/or columns are legal and
// represent maps to/from the zero space.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
    Mat(std::initializer_list<std::initializer_list<Rational>> rows);

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }
    // Assembles a block matrix from a grid; block (i,j) must have rowHeights[i]
    // rows and colWidths[j] columns, or be empty (treated as a zero block).
    static Mat fromBlocks(const std::vector<int>& rowHeights, const std::vector<int>& colWidths,
                          const std::vector<std::vector<Mat>>& blocks);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    Mat operator*(const Mat& o) const;  // throws std::invalid_argument on shape mismatch
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const;
    Mat scaled(const Rational& c) const;
    bool isZero() const;

    // [first, first+count) column slice.
    Mat colRange(int first, int count) const;
    Mat rowRange(int first, int count) const;
    Mat col(int j) const { return colRange(j, 1); }

    static Mat hcat(const Mat& a, const Mat& b);
    static Mat vcat(const Mat& a, const Mat& b);

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

}  // namespace lscat
