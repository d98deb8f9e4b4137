#include "lscat/matrix.hpp"

#include <stdexcept>

namespace lscat {

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    a_.reserve(std::size_t(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("Mat: ragged initializer");
        for (const auto& x : r) a_.push_back(x);
    }
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Mat Mat::fromBlocks(const std::vector<int>& rowHeights, const std::vector<int>& colWidths,
                    const std::vector<std::vector<Mat>>& blocks) {
    int totalRows = 0, totalCols = 0;
    for (int h : rowHeights) totalRows += h;
    for (int w : colWidths) totalCols += w;
    Mat out(totalRows, totalCols);
    int r0 = 0;
    for (std::size_t bi = 0; bi < rowHeights.size(); ++bi) {
        int c0 = 0;
        for (std::size_t bj = 0; bj < colWidths.size(); ++bj) {
            const Mat* blk = nullptr;
            if (bi < blocks.size() && bj < blocks[bi].size()) blk = &blocks[bi][bj];
            if (blk && !(blk->rows() == 0 && blk->cols() == 0)) {
                if (blk->rows() != rowHeights[bi] || blk->cols() != colWidths[bj])
                    throw std::invalid_argument("Mat::fromBlocks: block shape mismatch");
                for (int i = 0; i < blk->rows(); ++i)
                    for (int j = 0; j < blk->cols(); ++j) out.at(r0 + i, c0 + j) = blk->at(i, j);
            }
            c0 += colWidths[bj];
        }
        r0 += rowHeights[bi];
    }
    return out;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: product shape mismatch");
    Mat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (x.isZero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& y = o.at(k, j);
                if (!y.isZero()) out.at(i, j) += x * y;
            }
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: sum shape mismatch");
    Mat out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: diff shape mismatch");
    Mat out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

Mat Mat::operator-() const {
    Mat out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
    return out;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Mat Mat::scaled(const Rational& c) const {
    Mat out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
    return out;
}

bool Mat::isZero() const {
    for (const auto& x : a_)
        if (!x.isZero()) return false;
    return true;
}

Mat Mat::colRange(int first, int count) const {
    if (first < 0 || count < 0 || first + count > cols_)
        throw std::invalid_argument("Mat::colRange: out of range");
    Mat out(rows_, count);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < count; ++j) out.at(i, j) = at(i, first + j);
    return out;
}

Mat Mat::rowRange(int first, int count) const {
    if (first < 0 || count < 0 || first + count > rows_)
        throw std::invalid_argument("Mat::rowRange: out of range");
    Mat out(count, cols_);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(first + i, j);
    return out;
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("Mat::hcat: row mismatch");
    Mat out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

Mat Mat::vcat(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("Mat::vcat: col mismatch");
    Mat out(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

}  // namespace lscat
