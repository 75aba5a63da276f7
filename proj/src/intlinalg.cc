// Copyright 2026 The cellcss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cellcss/intlinalg.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "cellcss/error.h"

namespace cellcss {

namespace {

void require_same_shape(const IntMatrix &a, const IntMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::LengthMismatch, std::string("shape mismatch in ") + op);
    }
}

// Floor division, so that value - q * pivot lands in [0, |pivot|) for positive pivots.
Integer floor_div(const Integer &value, const Integer &pivot) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_mpz_t(), pivot.get_mpz_t());
    return q;
}

Integer trunc_div(const Integer &value, const Integer &pivot) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), value.get_mpz_t(), pivot.get_mpz_t());
    return q;
}

}  // namespace

IntMatrix::IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw Error(ErrorCode::LengthMismatch, "ragged matrix literal");
        }
        for (long v : r) {
            data_.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>> &rows, size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw Error(ErrorCode::LengthMismatch, "row " + std::to_string(r) + " has wrong length");
        }
        for (size_t c = 0; c < cols; c++) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Integer>> &cols, size_t rows) {
    return from_rows(cols, rows).transpose();
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

IntMatrix IntMatrix::column_range(size_t begin, size_t end) const {
    IntMatrix m(rows_, end - begin);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = begin; c < end; c++) {
            m(r, c - begin) = (*this)(r, c);
        }
    }
    return m;
}

IntMatrix IntMatrix::row_range(size_t begin, size_t end) const {
    IntMatrix m(end - begin, cols_);
    for (size_t r = begin; r < end; r++) {
        for (size_t c = 0; c < cols_; c++) {
            m(r - begin, c) = (*this)(r, c);
        }
    }
    return m;
}

std::vector<Integer> IntMatrix::column(size_t c) const {
    std::vector<Integer> v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        v[r] = (*this)(r, c);
    }
    return v;
}

std::vector<Integer> IntMatrix::row(size_t r) const {
    return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer &x) { return sgn(x) == 0; });
}

void IntMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t c = 0; c < cols_; c++) {
        std::swap((*this)(a, c), (*this)(b, c));
    }
}

void IntMatrix::swap_cols(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t r = 0; r < rows_; r++) {
        std::swap((*this)(r, a), (*this)(r, b));
    }
}

void IntMatrix::add_row_multiple(size_t dst, size_t src, const Integer &factor) {
    if (sgn(factor) == 0) {
        return;
    }
    for (size_t c = 0; c < cols_; c++) {
        (*this)(dst, c) += factor * (*this)(src, c);
    }
}

void IntMatrix::add_col_multiple(size_t dst, size_t src, const Integer &factor) {
    if (sgn(factor) == 0) {
        return;
    }
    for (size_t r = 0; r < rows_; r++) {
        (*this)(r, dst) += factor * (*this)(r, src);
    }
}

void IntMatrix::negate_row(size_t r) {
    for (size_t c = 0; c < cols_; c++) {
        (*this)(r, c) = -(*this)(r, c);
    }
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    if (rows_ == 0 || cols_ == 0) {
        out << "[] (" << rows_ << "x" << cols_ << ")";
        return out.str();
    }
    out << "[";
    for (size_t r = 0; r < rows_; r++) {
        out << (r ? ", [" : "[");
        for (size_t c = 0; c < cols_; c++) {
            out << (c ? ", " : "") << (*this)(r, c).get_str();
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

bool IntMatrix::operator==(const IntMatrix &other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorCode::LengthMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                   std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                                   "x" + std::to_string(b.cols()));
    }
    IntMatrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t k = 0; k < a.cols(); k++) {
            const Integer &x = a(i, k);
            if (sgn(x) == 0) {
                continue;
            }
            for (size_t j = 0; j < b.cols(); j++) {
                out(i, j) += x * b(k, j);
            }
        }
    }
    return out;
}

IntMatrix operator+(const IntMatrix &a, const IntMatrix &b) {
    require_same_shape(a, b, "+");
    IntMatrix out = a;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(r, c) += b(r, c);
        }
    }
    return out;
}

IntMatrix operator-(const IntMatrix &a, const IntMatrix &b) {
    require_same_shape(a, b, "-");
    IntMatrix out = a;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(r, c) -= b(r, c);
        }
    }
    return out;
}

IntMatrix operator*(const Integer &k, const IntMatrix &a) {
    IntMatrix out = a;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(r, c) *= k;
        }
    }
    return out;
}

std::vector<Integer> operator*(const IntMatrix &a, std::span<const Integer> x) {
    if (a.cols() != x.size()) {
        throw Error(ErrorCode::LengthMismatch, "matrix-vector length mismatch");
    }
    std::vector<Integer> out(a.rows());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out[r] += a(r, c) * x[c];
        }
    }
    return out;
}

IntMatrix hstack(const IntMatrix &a, const IntMatrix &b) {
    if (a.rows() != b.rows()) {
        throw Error(ErrorCode::LengthMismatch, "hstack row mismatch");
    }
    IntMatrix out(a.rows(), a.cols() + b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(r, c) = a(r, c);
        }
        for (size_t c = 0; c < b.cols(); c++) {
            out(r, a.cols() + c) = b(r, c);
        }
    }
    return out;
}

IntMatrix vstack(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols() != b.cols()) {
        throw Error(ErrorCode::LengthMismatch, "vstack column mismatch");
    }
    IntMatrix out(a.rows() + b.rows(), a.cols());
    for (size_t c = 0; c < a.cols(); c++) {
        for (size_t r = 0; r < a.rows(); r++) {
            out(r, c) = a(r, c);
        }
        for (size_t r = 0; r < b.rows(); r++) {
            out(a.rows() + r, c) = b(r, c);
        }
    }
    return out;
}

IntMatrix block_diagonal(const IntMatrix &a, const IntMatrix &b) {
    IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(r, c) = a(r, c);
        }
    }
    for (size_t r = 0; r < b.rows(); r++) {
        for (size_t c = 0; c < b.cols(); c++) {
            out(a.rows() + r, a.cols() + c) = b(r, c);
        }
    }
    return out;
}

HermiteDecomposition hermite_decompose(const IntMatrix &a) {
    const size_t m = a.rows();
    const size_t n = a.cols();
    HermiteDecomposition out{a, IntMatrix::identity(m), 0};
    IntMatrix &h = out.h;
    IntMatrix &u = out.u;
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; c++) {
        // Euclid on column c using the smallest nonzero entry as pivot.
        while (true) {
            size_t best = m;
            for (size_t i = r; i < m; i++) {
                if (sgn(h(i, c)) != 0 && (best == m || abs(h(i, c)) < abs(h(best, c)))) {
                    best = i;
                }
            }
            if (best == m) {
                break;
            }
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            bool cleared = true;
            for (size_t i = r + 1; i < m; i++) {
                if (sgn(h(i, c)) == 0) {
                    continue;
                }
                Integer q = trunc_div(h(i, c), h(r, c));
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (sgn(h(i, c)) != 0) {
                    cleared = false;
                }
            }
            if (cleared) {
                break;
            }
        }
        if (sgn(h(r, c)) == 0) {
            continue;
        }
        if (sgn(h(r, c)) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (size_t i = 0; i < r; i++) {
            Integer q = floor_div(h(i, c), h(r, c));
            h.add_row_multiple(i, r, -q);
            u.add_row_multiple(i, r, -q);
        }
        r++;
    }
    out.rank = r;
    return out;
}

IntMatrix hermite_form(const IntMatrix &a) {
    return hermite_decompose(a).h;
}

size_t rank(const IntMatrix &a) {
    return hermite_decompose(a).rank;
}

Integer determinant(const IntMatrix &a) {
    if (a.rows() != a.cols()) {
        throw Error(ErrorCode::LengthMismatch, "determinant of non-square matrix");
    }
    const size_t n = a.rows();
    if (n == 0) {
        return 1;
    }
    // Fraction-free Bareiss elimination.
    IntMatrix m = a;
    Integer sign = 1;
    Integer prev = 1;
    for (size_t k = 0; k + 1 < n; k++) {
        if (sgn(m(k, k)) == 0) {
            size_t p = k + 1;
            while (p < n && sgn(m(p, k)) == 0) {
                p++;
            }
            if (p == n) {
                return 0;
            }
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; i++) {
            for (size_t j = k + 1; j < n; j++) {
                Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

SmithForm smith_form(const IntMatrix &a) {
    const size_t m = a.rows();
    const size_t n = a.cols();
    SmithForm out{IntMatrix::identity(m), a, IntMatrix::identity(n), {}};
    IntMatrix &s = out.s;
    IntMatrix &u = out.u;
    IntMatrix &v = out.v;

    auto move_to_pivot = [&](size_t t, size_t i, size_t j) {
        s.swap_rows(t, i);
        u.swap_rows(t, i);
        s.swap_cols(t, j);
        v.swap_cols(t, j);
    };

    for (size_t t = 0; t < std::min(m, n); t++) {
        size_t bi = m, bj = n;
        for (size_t i = t; i < m; i++) {
            for (size_t j = t; j < n; j++) {
                if (sgn(s(i, j)) != 0 && (bi == m || abs(s(i, j)) < abs(s(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
            }
        }
        if (bi == m) {
            break;
        }
        move_to_pivot(t, bi, bj);

        while (true) {
            bool dirty = false;
            for (size_t i = t + 1; i < m; i++) {
                if (sgn(s(i, t)) != 0) {
                    Integer q = trunc_div(s(i, t), s(t, t));
                    s.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                    dirty |= sgn(s(i, t)) != 0;
                }
            }
            for (size_t j = t + 1; j < n; j++) {
                if (sgn(s(t, j)) != 0) {
                    Integer q = trunc_div(s(t, j), s(t, t));
                    s.add_col_multiple(j, t, -q);
                    v.add_col_multiple(j, t, -q);
                    dirty |= sgn(s(t, j)) != 0;
                }
            }
            if (dirty) {
                // A remainder survived; it is smaller than the pivot, so promote it.
                size_t pi = t, pj = t;
                for (size_t i = t + 1; i < m; i++) {
                    if (sgn(s(i, t)) != 0 && abs(s(i, t)) < abs(s(pi, pj))) {
                        pi = i;
                        pj = t;
                    }
                }
                for (size_t j = t + 1; j < n; j++) {
                    if (sgn(s(t, j)) != 0 && abs(s(t, j)) < abs(s(pi, pj))) {
                        pi = t;
                        pj = j;
                    }
                }
                move_to_pivot(t, pi, pj);
                continue;
            }
            // Row and column are clear; enforce divisibility of the remaining block.
            size_t offender = m;
            for (size_t i = t + 1; i < m && offender == m; i++) {
                for (size_t j = t + 1; j < n; j++) {
                    if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
                        offender = i;
                        break;
                    }
                }
            }
            if (offender == m) {
                break;
            }
            s.add_row_multiple(t, offender, 1);
            u.add_row_multiple(t, offender, 1);
        }
        if (sgn(s(t, t)) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
        out.factors.push_back(s(t, t));
    }
    return out;
}

IntMatrix kernel_basis(const IntMatrix &a) {
    HermiteDecomposition hd = hermite_decompose(a.transpose());
    const size_t n = a.cols();
    IntMatrix rows = hd.u.row_range(hd.rank, n);
    return hermite_form(rows).transpose();
}

IntMatrix image_basis(const IntMatrix &a) {
    HermiteDecomposition hd = hermite_decompose(a.transpose());
    return hd.h.row_range(0, hd.rank).transpose();
}

IntMatrix solve_in_lattice(const IntMatrix &basis, const IntMatrix &target) {
    if (basis.rows() != target.rows()) {
        throw Error(ErrorCode::LengthMismatch, "basis and target have different row counts");
    }
    SmithForm sf = smith_form(basis);
    const size_t k = basis.cols();
    const size_t r = sf.factors.size();
    IntMatrix ut = sf.u * target;
    IntMatrix z(k, target.cols());
    for (size_t c = 0; c < target.cols(); c++) {
        for (size_t i = 0; i < ut.rows(); i++) {
            if (i < r) {
                if (!mpz_divisible_p(ut(i, c).get_mpz_t(), sf.factors[i].get_mpz_t())) {
                    throw Error(ErrorCode::NotInLattice, "target column " + std::to_string(c) + " is not in the lattice");
                }
                mpz_divexact(z(i, c).get_mpz_t(), ut(i, c).get_mpz_t(), sf.factors[i].get_mpz_t());
            } else if (sgn(ut(i, c)) != 0) {
                throw Error(ErrorCode::NotInLattice, "target column " + std::to_string(c) + " is not in the lattice");
            }
        }
    }
    return sf.v * z;
}

bool in_lattice(const IntMatrix &basis, std::span<const Integer> vec) {
    IntMatrix target(vec.size(), 1);
    for (size_t i = 0; i < vec.size(); i++) {
        target(i, 0) = vec[i];
    }
    try {
        solve_in_lattice(basis, target);
        return true;
    } catch (const Error &e) {
        if (e.code() == ErrorCode::NotInLattice) {
            return false;
        }
        throw;
    }
}

IntMatrix unimodular_inverse(const IntMatrix &u) {
    return solve_in_lattice(u, IntMatrix::identity(u.rows()));
}

int64_t mod_floor(int64_t value, int64_t modulus) {
    int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

int64_t mod_floor(const Integer &value, int64_t modulus) {
    return static_cast<int64_t>(mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(modulus)));
}

static void check_modulus(int64_t modulus) {
    if (modulus < 2) {
        throw Error(ErrorCode::BadModulus, "modulus must be at least 2, got " + std::to_string(modulus));
    }
}

ModMatrix::ModMatrix(int64_t modulus, size_t rows, size_t cols)
    : modulus_(modulus), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    check_modulus(modulus);
}

ModMatrix ModMatrix::from_rows(int64_t modulus, const std::vector<std::vector<int64_t>> &rows, size_t cols) {
    ModMatrix m(modulus, rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw Error(ErrorCode::LengthMismatch, "row " + std::to_string(r) + " has wrong length");
        }
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

void ModMatrix::set(size_t r, size_t c, int64_t value) {
    data_[r * cols_ + c] = mod_floor(value, modulus_);
}

std::vector<int64_t> ModMatrix::column(size_t c) const {
    std::vector<int64_t> v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        v[r] = (*this)(r, c);
    }
    return v;
}

ModMatrix ModMatrix::transpose() const {
    ModMatrix t(modulus_, cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t.data_[c * rows_ + r] = (*this)(r, c);
        }
    }
    return t;
}

bool ModMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](int64_t x) { return x == 0; });
}

IntMatrix ModMatrix::lift() const {
    IntMatrix m(rows_, cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            m(r, c) = static_cast<long>((*this)(r, c));
        }
    }
    return m;
}

std::string ModMatrix::to_string() const {
    return lift().to_string() + " mod " + std::to_string(modulus_);
}

ModMatrix operator*(const ModMatrix &a, const ModMatrix &b) {
    if (a.modulus() != b.modulus()) {
        throw Error(ErrorCode::ModulusMismatch, "cannot multiply matrices over different moduli");
    }
    if (a.cols() != b.rows()) {
        throw Error(ErrorCode::LengthMismatch, "modular matrix shape mismatch");
    }
    ModMatrix out(a.modulus(), a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < b.cols(); j++) {
            __int128 acc = 0;
            for (size_t k = 0; k < a.cols(); k++) {
                acc += static_cast<__int128>(a(i, k)) * b(k, j);
            }
            out.set(i, j, static_cast<int64_t>(acc % a.modulus()));
        }
    }
    return out;
}

std::vector<int64_t> operator*(const ModMatrix &a, std::span<const int64_t> x) {
    if (a.cols() != x.size()) {
        throw Error(ErrorCode::LengthMismatch, "expected vector of length " + std::to_string(a.cols()) + ", got " +
                                                   std::to_string(x.size()));
    }
    std::vector<int64_t> out(a.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        __int128 acc = 0;
        for (size_t k = 0; k < a.cols(); k++) {
            acc += static_cast<__int128>(a(i, k)) * x[k];
        }
        int64_t r = static_cast<int64_t>(acc % a.modulus());
        out[i] = r < 0 ? r + a.modulus() : r;
    }
    return out;
}

ModMatrix reduce_mod(const IntMatrix &a, int64_t modulus) {
    check_modulus(modulus);
    ModMatrix out(modulus, a.rows(), a.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out.set(r, c, mod_floor(a(r, c), modulus));
        }
    }
    return out;
}

bool is_prime(int64_t n) {
    if (n < 2) {
        return false;
    }
    for (int64_t p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            return false;
        }
    }
    return true;
}

static int64_t inverse_mod_prime(int64_t x, int64_t p) {
    int64_t result = 1;
    int64_t base = x % p;
    int64_t e = p - 2;
    while (e > 0) {
        if (e & 1) {
            result = static_cast<int64_t>(static_cast<__int128>(result) * base % p);
        }
        base = static_cast<int64_t>(static_cast<__int128>(base) * base % p);
        e >>= 1;
    }
    return result;
}

size_t rank_mod_prime(const ModMatrix &a) {
    const int64_t p = a.modulus();
    if (!is_prime(p)) {
        throw Error(ErrorCode::BadModulus, "rank over Z_" + std::to_string(p) + " needs a prime modulus");
    }
    std::vector<std::vector<int64_t>> rows(a.rows());
    for (size_t r = 0; r < a.rows(); r++) {
        rows[r].assign(a.row(r).begin(), a.row(r).end());
    }
    size_t rank = 0;
    for (size_t c = 0; c < a.cols() && rank < rows.size(); c++) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        int64_t inv = inverse_mod_prime(rows[rank][c], p);
        for (size_t i = rank + 1; i < rows.size(); i++) {
            if (rows[i][c] == 0) {
                continue;
            }
            int64_t f = static_cast<int64_t>(static_cast<__int128>(rows[i][c]) * inv % p);
            for (size_t j = c; j < a.cols(); j++) {
                rows[i][j] = mod_floor(rows[i][j] - static_cast<int64_t>(static_cast<__int128>(f) * rows[rank][j] % p), p);
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace cellcss
