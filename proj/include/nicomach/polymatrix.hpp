#pragma once

#include "nicomach/mpoly.hpp"

#include <stdexcept>
#include <vector>

namespace nicomach {

// Rectangular grid of polynomials sharing one variable set.
template <class C>
class PolyMatrix {
  public:
    PolyMatrix(std::size_t rows, std::size_t cols, std::vector<std::string> vars)
        : rows_(rows), cols_(cols), vars_(std::move(vars)),
          e_(rows * cols, MPoly<C>(vars_)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<std::string>& vars() const { return vars_; }

    MPoly<C>& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const MPoly<C>& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    PolyMatrix remove_row(std::size_t r) const {
        PolyMatrix out(rows_ - 1, cols_, vars_);
        for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0; j < cols_; ++j) out.at(oi, j) = at(i, j);
            ++oi;
        }
        return out;
    }

    PolyMatrix keep_cols(const std::vector<std::size_t>& cols) const {
        PolyMatrix out(rows_, cols.size(), vars_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(i, cols[j]);
        return out;
    }

    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::domain_error("PolyMatrix: shape mismatch");
        PolyMatrix out(a.rows_, a.cols_, a.vars_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] - b.e_[i];
        return out;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    // Matrix * column vector of polynomials.
    std::vector<MPoly<C>> apply(const std::vector<MPoly<C>>& v) const {
        if (v.size() != cols_) throw std::domain_error("PolyMatrix: vector arity mismatch");
        std::vector<MPoly<C>> out(rows_, MPoly<C>(vars_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
        return out;
    }

    // Row vector * matrix.
    std::vector<MPoly<C>> apply_left(const std::vector<MPoly<C>>& v) const {
        if (v.size() != rows_) throw std::domain_error("PolyMatrix: vector arity mismatch");
        std::vector<MPoly<C>> out(cols_, MPoly<C>(vars_));
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows_; ++i) out[j] += v[i] * at(i, j);
        return out;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<std::string> vars_;
    std::vector<MPoly<C>> e_;
};

// Exact determinant by fraction-free (Bareiss) elimination: every division is
// by a previous pivot and exact over the coefficient ring, which keeps
// intermediate entries at minor-of-the-input size instead of exploding.
template <class C>
MPoly<C> det(const PolyMatrix<C>& M) {
    if (M.rows() != M.cols()) throw std::domain_error("det: matrix not square");
    std::size_t n = M.rows();
    if (n == 0) return MPoly<C>::constant(M.vars(), C(1));
    PolyMatrix<C> B = M;
    bool negate = false;
    MPoly<C> prev = MPoly<C>::constant(M.vars(), C(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (B.at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && B.at(r, k).is_zero()) ++r;
            if (r == n) return MPoly<C>(M.vars());
            for (std::size_t j = 0; j < n; ++j) std::swap(B.at(k, j), B.at(r, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MPoly<C> t = B.at(k, k) * B.at(i, j) - B.at(i, k) * B.at(k, j);
                auto q = MPoly<C>::divide_exact(t, prev);
                if (!q) throw std::runtime_error("det: fraction-free division failed");
                B.at(i, j) = std::move(*q);
            }
            B.at(i, k) = MPoly<C>(M.vars());
        }
        prev = B.at(k, k);
    }
    MPoly<C> d = B.at(n - 1, n - 1);
    return negate ? -d : d;
}

// Sylvester-matrix resultant eliminating `var`.
template <class C>
MPoly<C> resultant(const MPoly<C>& p, const MPoly<C>& q, const std::string& var) {
    if (p.is_zero() || q.is_zero())
        throw std::domain_error("resultant: zero polynomial input");
    int dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp < 1 || dq < 1)
        throw std::domain_error("resultant: inputs must have positive degree in " + var);
    std::size_t n = std::size_t(dp + dq);
    PolyMatrix<C> S(n, n, p.vars());
    for (int r = 0; r < dq; ++r)
        for (int i = 0; i <= dp; ++i) S.at(r, r + i) = p.coeff_of(var, unsigned(dp - i));
    for (int r = 0; r < dp; ++r)
        for (int i = 0; i <= dq; ++i) S.at(dq + r, r + i) = q.coeff_of(var, unsigned(dq - i));
    return det(S);
}

// (-1)^{d(d-1)/2} * resultant(p, p', var) / leadingCoefficient(p, var).
// For Rational coefficients the content is pulled out first (disc(c*p) =
// c^{2d-2} disc(p)), so the elimination below runs on integer coefficients.
template <class C>
MPoly<C> discriminant(const MPoly<C>& p, const std::string& var) {
    int d = p.degree_in(var);
    if (d < 2) throw std::domain_error("discriminant: degree in " + var + " is below 2");
    MPoly<C> work = p;
    C scale(1);
    if constexpr (std::is_same_v<C, Rational>) {
        Rational cont = p.content();
        if (!(cont == Rational(1))) {
            auto prim = MPoly<C>::divide_exact(p, MPoly<C>::constant(p.vars(), cont));
            work = *prim;
            scale = cont.pow(unsigned(2 * d - 2));
        }
    }
    MPoly<C> res = resultant(work, work.derivative(var), var);
    auto q = MPoly<C>::divide_exact(res, work.leading_coeff_in(var));
    if (!q) throw std::runtime_error("discriminant: leading-coefficient division failed");
    MPoly<C> out = *q * scale;
    return (std::uint64_t(d) * (d - 1) / 2) % 2 ? -out : out;
}

}  // namespace nicomach
