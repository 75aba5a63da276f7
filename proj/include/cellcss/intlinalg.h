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

#ifndef CELLCSS_INTLINALG_H
#define CELLCSS_INTLINALG_H

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cellcss {

using Integer = mpz_class;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>> &rows, size_t cols);
    static IntMatrix from_columns(const std::vector<std::vector<Integer>> &cols, size_t rows);

    size_t rows() const noexcept {
        return rows_;
    }
    size_t cols() const noexcept {
        return cols_;
    }
    Integer &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const Integer &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    std::span<const Integer> entries() const noexcept {
        return data_;
    }

    IntMatrix transpose() const;
    /// Columns [begin, end) as a new matrix.
    IntMatrix column_range(size_t begin, size_t end) const;
    IntMatrix row_range(size_t begin, size_t end) const;
    std::vector<Integer> column(size_t c) const;
    std::vector<Integer> row(size_t r) const;
    bool is_zero() const;

    void swap_rows(size_t a, size_t b);
    void swap_cols(size_t a, size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(size_t dst, size_t src, const Integer &factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(size_t dst, size_t src, const Integer &factor);
    void negate_row(size_t r);

    /// Canonical text form, e.g. "[[1, 0], [-2, 3]]". Empty shapes print as "[]" with
    /// the shape appended: "[] (0x3)".
    std::string to_string() const;

    bool operator==(const IntMatrix &other) const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
IntMatrix operator+(const IntMatrix &a, const IntMatrix &b);
IntMatrix operator-(const IntMatrix &a, const IntMatrix &b);
IntMatrix operator*(const Integer &k, const IntMatrix &a);
std::vector<Integer> operator*(const IntMatrix &a, std::span<const Integer> x);

IntMatrix hstack(const IntMatrix &a, const IntMatrix &b);
IntMatrix vstack(const IntMatrix &a, const IntMatrix &b);
IntMatrix block_diagonal(const IntMatrix &a, const IntMatrix &b);

/// u * a = h with u unimodular and h in row Hermite normal form.
struct HermiteDecomposition {
    IntMatrix h;
    IntMatrix u;
    size_t rank = 0;
};

/// u * a * v = s with s diagonal; factors are the nonzero diagonal entries.
struct SmithForm {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;
    std::vector<Integer> factors;
};

/// Row-style Hermite normal form: row echelon, positive pivots, entries above a
/// pivot reduced into [0, pivot). Zero rows are kept at the bottom so the shape
/// matches the input.
IntMatrix hermite_form(const IntMatrix &a);
HermiteDecomposition hermite_decompose(const IntMatrix &a);

SmithForm smith_form(const IntMatrix &a);

size_t rank(const IntMatrix &a);
Integer determinant(const IntMatrix &a);

/// Columns form a saturated basis of {x : a x = 0}, column-Hermite-reduced.
IntMatrix kernel_basis(const IntMatrix &a);
/// Columns form a basis of the image lattice a Z^cols, column-Hermite-reduced.
IntMatrix image_basis(const IntMatrix &a);

/// Returns y with basis * y = target. The basis columns need not be independent.
/// Throws NotInLattice naming the first target column outside the span.
IntMatrix solve_in_lattice(const IntMatrix &basis, const IntMatrix &target);
bool in_lattice(const IntMatrix &basis, std::span<const Integer> vec);

/// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix &u);

/// Matrix over Z_d with entries stored as residues in [0, d).
class ModMatrix {
   public:
    ModMatrix() = default;
    ModMatrix(int64_t modulus, size_t rows, size_t cols);

    static ModMatrix from_rows(int64_t modulus, const std::vector<std::vector<int64_t>> &rows, size_t cols);

    int64_t modulus() const noexcept {
        return modulus_;
    }
    size_t rows() const noexcept {
        return rows_;
    }
    size_t cols() const noexcept {
        return cols_;
    }
    int64_t operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    /// Stores value reduced into [0, d).
    void set(size_t r, size_t c, int64_t value);

    std::span<const int64_t> row(size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::vector<int64_t> column(size_t c) const;

    ModMatrix transpose() const;
    bool is_zero() const;
    IntMatrix lift() const;
    std::string to_string() const;

    bool operator==(const ModMatrix &other) const = default;

   private:
    int64_t modulus_ = 2;
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<int64_t> data_;
};

ModMatrix operator*(const ModMatrix &a, const ModMatrix &b);
std::vector<int64_t> operator*(const ModMatrix &a, std::span<const int64_t> x);

/// Mathematical residue in [0, d).
int64_t mod_floor(int64_t value, int64_t modulus);
int64_t mod_floor(const Integer &value, int64_t modulus);

/// Entrywise residues in [0, d). Throws BadModulus for d < 2.
ModMatrix reduce_mod(const IntMatrix &a, int64_t modulus);

/// Rank over the field Z_p. The modulus must be prime.
size_t rank_mod_prime(const ModMatrix &a);

bool is_prime(int64_t n);

}  // namespace cellcss

#endif
