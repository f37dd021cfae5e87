#pragma once

// Test-only exact linear-feasibility oracle. Deliberately independent of the
// production Radon criterion: convex-hull intersection is decided by phase-1
// simplex over rationals, so the two routes share no code beyond the types.

#include <vector>

#include <rsc/errors.hpp>
#include <rsc/geometry.hpp>

namespace rsc::testsupport {

// Is {x >= 0 : A x = b} nonempty? Phase-1 simplex with Bland's rule, exact
// arithmetic, artificial columns barred from re-entering the basis.
inline bool lp_feasible(MatQ A, VecQ b) {
    const int rows = static_cast<int>(A.rows());
    const int cols = static_cast<int>(A.cols());
    for (int r = 0; r < rows; ++r)
        if (b(r) < 0) {
            for (int c = 0; c < cols; ++c) A(r, c) = -A(r, c);
            b(r) = -b(r);
        }

    const int total = cols + rows; // real variables then artificials
    MatQ T = MatQ::Zero(rows, total + 1);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) T(r, c) = A(r, c);
        T(r, cols + r) = 1;
        T(r, total) = b(r);
    }
    std::vector<int> basis(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) basis[static_cast<std::size_t>(r)] = cols + r;

    // objective: minimize the artificial sum, expressed over nonbasic columns
    std::vector<Rational> obj(static_cast<std::size_t>(total), Rational(0));
    Rational objval = 0;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) obj[static_cast<std::size_t>(c)] += T(r, c);
        objval += T(r, total);
    }
    std::vector<bool> banned(static_cast<std::size_t>(total), false);

    while (true) {
        int enter = -1;
        for (int c = 0; c < total; ++c) {
            if (banned[static_cast<std::size_t>(c)]) continue;
            bool in_basis = false;
            for (int r = 0; r < rows; ++r)
                if (basis[static_cast<std::size_t>(r)] == c) in_basis = true;
            if (!in_basis && obj[static_cast<std::size_t>(c)] > 0) {
                enter = c; // Bland: smallest improving index
                break;
            }
        }
        if (enter < 0) break;

        int leave = -1;
        Rational best_ratio = 0;
        for (int r = 0; r < rows; ++r) {
            if (T(r, enter) <= 0) continue;
            Rational ratio = T(r, total) / T(r, enter);
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave < 0) break; // unbounded improving direction cannot happen here

        Rational pivot = T(leave, enter);
        for (int c = 0; c <= total; ++c) T(leave, c) /= pivot;
        for (int r = 0; r < rows; ++r) {
            if (r == leave) continue;
            Rational factor = T(r, enter);
            if (factor == 0) continue;
            for (int c = 0; c <= total; ++c) T(r, c) -= factor * T(leave, c);
        }
        Rational ofact = obj[static_cast<std::size_t>(enter)];
        for (int c = 0; c < total; ++c) obj[static_cast<std::size_t>(c)] -= ofact * T(leave, c);
        objval -= ofact * T(leave, total);

        if (basis[static_cast<std::size_t>(leave)] >= cols)
            banned[static_cast<std::size_t>(basis[static_cast<std::size_t>(leave)])] = true;
        basis[static_cast<std::size_t>(leave)] = enter;
    }
    return objval == 0;
}

// conv(points[a]) and conv(points[b]) intersect? Solved as feasibility of
// convex weights lambda, mu >= 0 with equal weighted sums and both summing
// to one.
inline bool hulls_intersect(const PointConfiguration& c, const std::vector<int>& a,
                            const std::vector<int>& b) {
    if (a.empty() || b.empty())
        throw PreconditionError("hulls_intersect: empty vertex set");
    const int ka = static_cast<int>(a.size());
    const int kb = static_cast<int>(b.size());
    MatQ A = MatQ::Zero(c.m + 2, ka + kb);
    VecQ rhs = VecQ::Zero(c.m + 2);
    for (int j = 0; j < ka; ++j) {
        const VecQ& p = c.points[static_cast<std::size_t>(a[static_cast<std::size_t>(j)])];
        for (int i = 0; i < c.m; ++i) A(i, j) = p(i);
        A(c.m, j) = 1;
    }
    for (int j = 0; j < kb; ++j) {
        const VecQ& p = c.points[static_cast<std::size_t>(b[static_cast<std::size_t>(j)])];
        for (int i = 0; i < c.m; ++i) A(i, ka + j) = -p(i);
        A(c.m + 1, ka + j) = 1;
    }
    rhs(c.m) = 1;
    rhs(c.m + 1) = 1;
    return lp_feasible(std::move(A), std::move(rhs));
}

} // namespace rsc::testsupport
