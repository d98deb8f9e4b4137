#pragma once

#include <optional>

#include "lscat/chain_map.hpp"
#include "lscat/linsolve.hpp"

namespace lscat {

// Decides strict existence questions about an unknown chain map u: S -> T.
// Commutation with the differentials is always imposed; composition
// constraints are added on top, and the whole thing is flattened into one
// exact affine system. Degrees where either endpoint vanishes are fixed zero
// blocks, not unknowns.
class MapSolver {
public:
    MapSolver(Complex source, Complex target) : src_(std::move(source)), tgt_(std::move(target)) {
        std::map<int, bool> degs;
        for (int n : src_.support()) degs[n] = true;
        for (int n : tgt_.support()) degs[n] = true;
        for (const auto& [n, _] : degs) {
            if (src_.dim(n) > 0 && tgt_.dim(n) > 0) {
                index_[n] = shapes_.size();
                shapes_.push_back({tgt_.dim(n), src_.dim(n)});
            }
        }
        // d_T u_n = u_{n-1} d_S in every relevant degree
        for (const auto& [n, _] : degs) {
            int rows = tgt_.dim(n - 1), cols = src_.dim(n);
            if (rows == 0 || cols == 0) continue;
            AffineConstraint eq;
            eq.constant = Mat::zero(rows, cols);
            if (auto it = index_.find(n); it != index_.end())
                eq.terms.push_back({it->second, tgt_.d(n), Mat::identity(cols)});
            if (auto it = index_.find(n - 1); it != index_.end())
                eq.terms.push_back({it->second, -Mat::identity(rows), src_.d(n)});
            if (!eq.terms.empty()) eqs_.push_back(std::move(eq));
        }
    }

    // L * u = g where L: T -> W and g: S -> W.
    void requireLeftComposite(const ChainMap& l, const ChainMap& g) {
        for (int n : src_.support()) {
            int rows = l.target().dim(n);
            if (rows == 0) continue;
            AffineConstraint eq;
            eq.constant = -g.comp(n);
            if (auto it = index_.find(n); it != index_.end())
                eq.terms.push_back({it->second, l.comp(n), Mat::identity(src_.dim(n))});
            eqs_.push_back(std::move(eq));
        }
    }

    // u * r = g where r: V -> S and g: V -> T.
    void requireRightComposite(const ChainMap& r, const ChainMap& g) {
        for (int n : r.source().support()) {
            int rows = tgt_.dim(n);
            if (rows == 0) continue;
            AffineConstraint eq;
            eq.constant = -g.comp(n);
            if (auto it = index_.find(n); it != index_.end())
                eq.terms.push_back({it->second, Mat::identity(rows), r.comp(n)});
            eqs_.push_back(std::move(eq));
        }
    }

    std::optional<ChainMap> solve() const {
        auto sol = solveAffineSystem(shapes_, eqs_);
        if (!sol) return std::nullopt;
        std::map<int, Mat> comps;
        for (const auto& [n, k] : index_) comps[n] = (*sol)[k];
        return ChainMap::create(src_, tgt_, std::move(comps));
    }

private:
    Complex src_, tgt_;
    std::vector<std::pair<int, int>> shapes_;
    std::map<int, std::size_t> index_;
    std::vector<AffineConstraint> eqs_;
};

}  // namespace lscat
