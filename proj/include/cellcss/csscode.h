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

#ifndef CELLCSS_CSSCODE_H
#define CELLCSS_CSSCODE_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cellcss/chaincomplex.h"
#include "cellcss/intlinalg.h"

namespace cellcss {

enum class PauliType { X, Z };

char pauli_char(PauliType t);

/// Tensor product of powers of a single generalized Pauli, one exponent per qudit.
struct PauliVector {
    PauliType type = PauliType::Z;
    int64_t modulus = 2;
    std::vector<int64_t> exponents;

    /// Reduces the exponents into [0, d).
    static PauliVector make(PauliType type, int64_t modulus, std::vector<int64_t> exponents);
    bool is_identity() const;
    size_t weight() const;
    std::string to_string() const;

    bool operator==(const PauliVector &other) const = default;
};

struct Syndrome {
    int64_t modulus = 2;
    std::vector<int64_t> values;

    bool is_zero() const;
    std::string to_string() const;

    bool operator==(const Syndrome &other) const = default;
};

struct CssCode {
    int64_t modulus = 2;
    /// Checks measured by X-type generators (rows act on qudits as X powers).
    ModMatrix p_x;
    /// Checks measured by Z-type generators.
    ModMatrix p_z;
    std::vector<std::string> qudit_labels;
    std::vector<std::string> x_check_labels;
    std::vector<std::string> z_check_labels;
    /// Degrees above 2 that were dropped when the code was built.
    size_t truncated_degrees = 0;

    size_t n() const {
        return p_x.cols();
    }
};

/// Checks that p_x * p_z^T vanishes mod d. Labels default to 1-based indices.
CssCode make_css(ModMatrix p_x, ModMatrix p_z);
/// P_X from the degree-1 differential, P_Z from the transpose of the degree-2 one.
CssCode css_from_chain(const ChainComplex &c, int64_t modulus);
/// The same code with the roles of X and Z exchanged.
CssCode swap_roles(const CssCode &code);

struct Commutation {
    bool commutes = true;
    /// Exponent of omega picked up when moving the Z operator past the X operator.
    int64_t phase = 0;
};
Commutation commutes(const PauliVector &z, const PauliVector &x);

/// Outcomes of the X-type checks for a Z error.
Syndrome syndrome_x(const CssCode &code, const PauliVector &z_error);
/// Outcomes of the Z-type checks for an X error.
Syndrome syndrome_z(const CssCode &code, const PauliVector &x_error);
/// Z-check outcomes followed by X-check outcomes. Checks whose residue row repeats
/// an earlier row of the same type are measured once.
Syndrome combined_syndrome(const CssCode &code, const PauliVector &x_error, const PauliVector &z_error);

enum class OpClass { DetectableError, Stabilizer, Logical };
std::string op_class_name(OpClass c);

OpClass classify(const CssCode &code, const PauliVector &op);

/// Size of the group of logical operators of the given type, i.e. cycles modulo
/// stabilizers. 1 means the code has no logical operators of that type.
Integer logical_class_count(const CssCode &code, PauliType type);

struct Distance {
    enum class Kind { Exact, LowerBound, NoLogical };
    Kind kind = Kind::NoLogical;
    /// The distance for Exact; for LowerBound the distance exceeds this value.
    size_t value = 0;
    std::optional<PauliVector> witness;

    std::string to_string() const;
};

/// Minimum number of qudits touched by a logical operator of the given type, by
/// enumeration in order of weight. jobs > 1 splits each weight across threads.
Distance distance(const CssCode &code, PauliType type, std::optional<size_t> max_weight = std::nullopt,
                  size_t jobs = 1);
Distance distance_z(const CssCode &code, std::optional<size_t> max_weight = std::nullopt, size_t jobs = 1);
Distance distance_x(const CssCode &code, std::optional<size_t> max_weight = std::nullopt, size_t jobs = 1);

struct MatrixWeights {
    std::vector<size_t> row_weights;
    std::vector<size_t> col_weights;
    size_t max_row = 0;
    size_t max_col = 0;
    double mean_row = 0;
    double mean_col = 0;
    /// Indices of all-zero rows; such checks measure nothing.
    std::vector<size_t> degenerate_rows;
};
MatrixWeights matrix_weights(const ModMatrix &m);

struct LdpcProfile {
    MatrixWeights x;
    MatrixWeights z;
};
LdpcProfile ldpc_profile(const CssCode &code);

/// One line per distinct Z check then per distinct X check, e.g. "Z ⊗ Z^-1 ⊗ 1".
/// Exponents above d/2 are written as negative powers.
std::vector<std::string> render_stabilizers(const CssCode &code);
std::string render_pauli(PauliType type, int64_t modulus, std::span<const int64_t> exponents);

/// Row indices of m, skipping rows equal to an earlier row.
std::vector<size_t> distinct_rows(const ModMatrix &m);

struct ClassicalCode {
    ModMatrix parity;
};

struct SyndromeGroup {
    std::vector<int64_t> syndrome;
    /// Words ordered by weight, then lexicographically.
    std::vector<std::vector<int64_t>> words;
};

/// Every binary word grouped by its syndrome, groups in lexicographic syndrome order.
std::vector<SyndromeGroup> classical_syndrome_table(const ClassicalCode &cc);

struct ClassicalMetrics {
    size_t n = 0;
    size_t k = 0;
    /// Empty when the code has no nonzero codeword.
    std::optional<size_t> distance;

    std::string to_string() const;
};
ClassicalMetrics classical_metrics(const ClassicalCode &cc);

/// Parses a CSV of 0/1 rows.
ClassicalCode parse_parity_csv(const std::string &text);

}  // namespace cellcss

#endif
