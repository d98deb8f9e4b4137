#include "lscat/linsolve.hpp"

#include <stdexcept>

namespace lscat {

Rref rref(Mat m) {
    Rref out;
    int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (!m.at(i, c).isZero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        Rational inv = m.at(r, c).inverse();
        for (int j = c; j < cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).isZero()) continue;
            Rational factor = m.at(i, c);
            for (int j = c; j < cols; ++j) m.at(i, j) -= factor * m.at(r, j);
        }
        out.pivotCols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.m = std::move(m);
    return out;
}

int rank(const Mat& m) { return rref(m).rank; }

Mat kernelBasis(const Mat& m) {
    Rref rr = rref(m);
    int cols = m.cols();
    std::vector<bool> isPivot(cols, false);
    for (int c : rr.pivotCols) isPivot[c] = true;
    std::vector<int> freeCols;
    for (int c = 0; c < cols; ++c)
        if (!isPivot[c]) freeCols.push_back(c);
    Mat basis(cols, static_cast<int>(freeCols.size()));
    for (std::size_t k = 0; k < freeCols.size(); ++k) {
        int fc = freeCols[k];
        basis.at(fc, static_cast<int>(k)) = Rational(1);
        for (int pr = 0; pr < rr.rank; ++pr) basis.at(rr.pivotCols[pr], static_cast<int>(k)) = -rr.m.at(pr, fc);
    }
    return basis;
}

std::optional<Mat> solveLinear(const Mat& m, const Mat& rhs) {
    if (m.rows() != rhs.rows()) throw std::invalid_argument("solveLinear: row count mismatch");
    Rref rr = rref(Mat::hcat(m, rhs));
    // any pivot inside the rhs block means inconsistency
    for (int c : rr.pivotCols)
        if (c >= m.cols()) return std::nullopt;
    Mat x(m.cols(), rhs.cols());
    for (std::size_t pr = 0; pr < rr.pivotCols.size(); ++pr) {
        int pc = rr.pivotCols[pr];
        for (int j = 0; j < rhs.cols(); ++j) x.at(pc, j) = rr.m.at(static_cast<int>(pr), m.cols() + j);
    }
    return x;
}

Mat columnSpaceBasis(const Mat& m) {
    Rref rr = rref(m);
    Mat out(m.rows(), rr.rank);
    for (int k = 0; k < rr.rank; ++k)
        for (int i = 0; i < m.rows(); ++i) out.at(i, k) = m.at(i, rr.pivotCols[k]);
    return out;
}

Mat complementBasis(const Mat& s) {
    int dim = s.rows();
    Mat acc = s;
    int baseRank = rank(acc);
    std::vector<int> chosen;
    for (int j = 0; j < dim && baseRank + static_cast<int>(chosen.size()) < dim; ++j) {
        Mat e(dim, 1);
        e.at(j, 0) = Rational(1);
        Mat cand = Mat::hcat(acc, e);
        if (rank(cand) > baseRank + static_cast<int>(chosen.size())) {
            acc = std::move(cand);
            chosen.push_back(j);
        }
    }
    Mat out(dim, static_cast<int>(chosen.size()));
    for (std::size_t k = 0; k < chosen.size(); ++k) out.at(chosen[k], static_cast<int>(k)) = Rational(1);
    return out;
}

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    auto x = solveLinear(m, Mat::identity(m.rows()));
    if (!x || rank(m) != m.rows()) throw std::invalid_argument("inverse: singular matrix");
    return *x;
}

std::optional<std::vector<Mat>> solveAffineSystem(const std::vector<std::pair<int, int>>& unknownShape,
                                                  const std::vector<AffineConstraint>& equations) {
    std::vector<int> offset(unknownShape.size() + 1, 0);
    for (std::size_t k = 0; k < unknownShape.size(); ++k)
        offset[k + 1] = offset[k] + unknownShape[k].first * unknownShape[k].second;
    int nVars = offset.back();

    int nEqs = 0;
    for (const auto& eq : equations) nEqs += eq.constant.rows() * eq.constant.cols();

    Mat system(nEqs, nVars);
    Mat rhs(nEqs, 1);
    int row0 = 0;
    for (const auto& eq : equations) {
        int r = eq.constant.rows(), c = eq.constant.cols();
        for (const auto& term : eq.terms) {
            if (term.unknown >= unknownShape.size())
                throw std::invalid_argument("solveAffineSystem: unknown index out of range");
            auto [ur, uc] = unknownShape[term.unknown];
            if (term.left.rows() != r || term.left.cols() != ur || term.right.rows() != uc ||
                term.right.cols() != c)
                throw std::invalid_argument("solveAffineSystem: term shape mismatch");
            // (L X R)(i,j) = sum_{a,b} L(i,a) X(a,b) R(b,j)
            for (int i = 0; i < r; ++i)
                for (int a = 0; a < ur; ++a) {
                    const Rational& l = term.left.at(i, a);
                    if (l.isZero()) continue;
                    for (int b = 0; b < uc; ++b)
                        for (int j = 0; j < c; ++j) {
                            const Rational& rr = term.right.at(b, j);
                            if (rr.isZero()) continue;
                            system.at(row0 + i * c + j, offset[term.unknown] + a * uc + b) += l * rr;
                        }
                }
        }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) rhs.at(row0 + i * c + j, 0) = -eq.constant.at(i, j);
        row0 += r * c;
    }

    auto flat = solveLinear(system, rhs);
    if (!flat) return std::nullopt;
    std::vector<Mat> out;
    out.reserve(unknownShape.size());
    for (std::size_t k = 0; k < unknownShape.size(); ++k) {
        auto [ur, uc] = unknownShape[k];
        Mat x(ur, uc);
        for (int a = 0; a < ur; ++a)
            for (int b = 0; b < uc; ++b) x.at(a, b) = flat->at(offset[k] + a * uc + b, 0);
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace lscat
