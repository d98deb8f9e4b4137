#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lscat/matrix.hpp"

namespace lscat {

// Exact Gaussian elimination with deterministic pivoting (first nonzero in
// column order), so every derived basis is reproducible bit-for-bit.

struct Rref {
    Mat m;
    std::vector<int> pivotCols;  // ascending
    int rank = 0;
};

Rref rref(Mat m);

int rank(const Mat& m);

// Columns form a basis of ker(m); column count = cols(m) - rank(m).
Mat kernelBasis(const Mat& m);

// Some X with m * X = rhs (free variables set to zero), or absent when the
// system is inconsistent. Throws std::invalid_argument on row mismatch.
std::optional<Mat> solveLinear(const Mat& m, const Mat& rhs);

// Basis of the column space: the columns of m at the rref pivot positions.
Mat columnSpaceBasis(const Mat& m);

// Given a full-column-rank S (m x r), greedily completes it with standard
// basis vectors to a basis of the ambient space; returns the m x (m-r)
// complement block.
Mat complementBasis(const Mat& s);

Mat inverse(const Mat& m);  // throws std::invalid_argument if singular

// One summand  left * X[unknown] * right  of an affine constraint.
struct AffineTerm {
    std::size_t unknown;
    Mat left;
    Mat right;
};

// sum of terms + constant = 0, shape-checked against the declared unknowns.
struct AffineConstraint {
    std::vector<AffineTerm> terms;
    Mat constant;
};

// Exact solution of a linear system in matrix unknowns, or absent when the
// flattened system is inconsistent. The workhorse behind every strict
// diagram-existence question (sections, lifts, chain-map fillers).
std::optional<std::vector<Mat>> solveAffineSystem(const std::vector<std::pair<int, int>>& unknownShape,
                                                  const std::vector<AffineConstraint>& equations);

}  // namespace lscat
