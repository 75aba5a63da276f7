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

#include "cellcss/csscode.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "cellcss/error.h"

namespace cellcss {

namespace {

void require_modulus(int64_t modulus) {
    if (modulus < 2) {
        throw Error(ErrorCode::BadModulus, "modulus must be at least 2, got " + std::to_string(modulus));
    }
}

void require_fits(const CssCode &code, const PauliVector &op, PauliType expected) {
    if (op.type != expected) {
        throw Error(ErrorCode::TypeMismatch, std::string("expected a ") + pauli_char(expected) + "-type operator, got " +
                                                 pauli_char(op.type) + "-type");
    }
    if (op.modulus != code.modulus) {
        throw Error(ErrorCode::ModulusMismatch, "operator is over Z_" + std::to_string(op.modulus) +
                                                    " but the code is over Z_" + std::to_string(code.modulus));
    }
    if (op.exponents.size() != code.n()) {
        throw Error(ErrorCode::LengthMismatch, "operator has length " + std::to_string(op.exponents.size()) +
                                                   " but the code has " + std::to_string(code.n()) + " qudits");
    }
}

std::string join(const std::vector<int64_t> &v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); i++) {
        out += (i ? ", " : "") + std::to_string(v[i]);
    }
    return out + ")";
}

// Lattice spanned by some rows over Z_d together with d Z^n, kept as a full-rank
// upper triangular Hermite basis so membership is a single forward sweep.
class ResidueLattice {
   public:
    ResidueLattice(const ModMatrix &rows) : modulus_(rows.modulus()), n_(rows.cols()), basis_(n_ * n_) {
        IntMatrix scaled = Integer(modulus_) * IntMatrix::identity(n_);
        IntMatrix h = hermite_form(vstack(rows.lift(), scaled));
        index_ = 1;
        for (size_t r = 0; r < n_; r++) {
            for (size_t c = 0; c < n_; c++) {
                basis_[r * n_ + c] = h(r, c).get_si();
            }
            index_ *= h(r, r);
        }
    }

    bool contains(std::vector<int64_t> v) const {
        for (auto &x : v) {
            x = mod_floor(x, modulus_);
        }
        for (size_t c = 0; c < n_; c++) {
            const int64_t *row = &basis_[c * n_];
            const int64_t pivot = row[c];
            if (v[c] % pivot != 0) {
                return false;
            }
            const int64_t q = v[c] / pivot;
            if (q == 0) {
                continue;
            }
            for (size_t k = c; k < n_; k++) {
                v[k] = mod_floor(v[k] - q * row[k], modulus_);
            }
        }
        return true;
    }

    /// Index of the lattice in Z^n.
    const Integer &index() const {
        return index_;
    }

   private:
    int64_t modulus_;
    size_t n_;
    std::vector<int64_t> basis_;
    Integer index_;
};

Syndrome apply_checks(const ModMatrix &checks, const PauliVector &op) {
    return {checks.modulus(), checks * std::span<const int64_t>(op.exponents)};
}

}  // namespace

char pauli_char(PauliType t) {
    return t == PauliType::X ? 'X' : 'Z';
}

PauliVector PauliVector::make(PauliType type, int64_t modulus, std::vector<int64_t> exponents) {
    require_modulus(modulus);
    for (auto &e : exponents) {
        e = mod_floor(e, modulus);
    }
    return {type, modulus, std::move(exponents)};
}

bool PauliVector::is_identity() const {
    return weight() == 0;
}

size_t PauliVector::weight() const {
    return static_cast<size_t>(std::count_if(exponents.begin(), exponents.end(), [](int64_t e) { return e != 0; }));
}

std::string PauliVector::to_string() const {
    return render_pauli(type, modulus, exponents);
}

bool Syndrome::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](int64_t v) { return v == 0; });
}

std::string Syndrome::to_string() const {
    return join(values);
}

CssCode make_css(ModMatrix p_x, ModMatrix p_z) {
    if (p_x.modulus() != p_z.modulus()) {
        throw Error(ErrorCode::ModulusMismatch, "P_X and P_Z use different moduli");
    }
    if (p_x.cols() != p_z.cols()) {
        throw Error(ErrorCode::LengthMismatch, "P_X has " + std::to_string(p_x.cols()) + " columns but P_Z has " +
                                                   std::to_string(p_z.cols()));
    }
    ModMatrix product = p_x * p_z.transpose();
    for (size_t r = 0; r < product.rows(); r++) {
        for (size_t c = 0; c < product.cols(); c++) {
            if (product(r, c) != 0) {
                throw Error(ErrorCode::InvariantViolation, "X check " + std::to_string(r + 1) + " and Z check " +
                                                               std::to_string(c + 1) + " do not commute");
            }
        }
    }
    CssCode code;
    code.modulus = p_x.modulus();
    for (size_t i = 0; i < p_x.cols(); i++) {
        code.qudit_labels.push_back(std::to_string(i + 1));
    }
    for (size_t i = 0; i < p_x.rows(); i++) {
        code.x_check_labels.push_back(std::to_string(i + 1));
    }
    for (size_t i = 0; i < p_z.rows(); i++) {
        code.z_check_labels.push_back(std::to_string(i + 1));
    }
    code.p_x = std::move(p_x);
    code.p_z = std::move(p_z);
    return code;
}

CssCode css_from_chain(const ChainComplex &c, int64_t modulus) {
    require_modulus(modulus);
    if (c.top_degree() < 2) {
        throw Error(ErrorCode::TooShort, "a CSS code needs a complex with top degree at least 2, got " +
                                             std::to_string(c.top_degree()));
    }
    CssCode code = make_css(reduce_mod(c.boundary(1), modulus), reduce_mod(c.boundary(2).transpose(), modulus));
    code.qudit_labels = c.labels(1);
    code.x_check_labels = c.labels(0);
    code.z_check_labels = c.labels(2);
    code.truncated_degrees = c.top_degree() - 2;
    return code;
}

CssCode swap_roles(const CssCode &code) {
    CssCode out = code;
    std::swap(out.p_x, out.p_z);
    std::swap(out.x_check_labels, out.z_check_labels);
    return out;
}

Commutation commutes(const PauliVector &z, const PauliVector &x) {
    if (z.type != PauliType::Z || x.type != PauliType::X) {
        throw Error(ErrorCode::TypeMismatch, "commutes expects a Z-type and an X-type operator");
    }
    if (z.modulus != x.modulus) {
        throw Error(ErrorCode::ModulusMismatch, "operators use different moduli");
    }
    if (z.exponents.size() != x.exponents.size()) {
        throw Error(ErrorCode::LengthMismatch, "operators have different lengths");
    }
    int64_t phase = 0;
    for (size_t i = 0; i < z.exponents.size(); i++) {
        phase = mod_floor(phase + mod_floor(z.exponents[i], z.modulus) * mod_floor(x.exponents[i], z.modulus),
                          z.modulus);
    }
    return {phase == 0, phase};
}

Syndrome syndrome_x(const CssCode &code, const PauliVector &z_error) {
    require_fits(code, z_error, PauliType::Z);
    return apply_checks(code.p_x, z_error);
}

Syndrome syndrome_z(const CssCode &code, const PauliVector &x_error) {
    require_fits(code, x_error, PauliType::X);
    return apply_checks(code.p_z, x_error);
}

std::vector<size_t> distinct_rows(const ModMatrix &m) {
    std::vector<size_t> out;
    for (size_t r = 0; r < m.rows(); r++) {
        bool repeat = false;
        for (size_t k : out) {
            if (std::equal(m.row(r).begin(), m.row(r).end(), m.row(k).begin())) {
                repeat = true;
                break;
            }
        }
        if (!repeat) {
            out.push_back(r);
        }
    }
    return out;
}

Syndrome combined_syndrome(const CssCode &code, const PauliVector &x_error, const PauliVector &z_error) {
    Syndrome sz = syndrome_z(code, x_error);
    Syndrome sx = syndrome_x(code, z_error);
    Syndrome out{code.modulus, {}};
    for (size_t r : distinct_rows(code.p_z)) {
        out.values.push_back(sz.values[r]);
    }
    for (size_t r : distinct_rows(code.p_x)) {
        out.values.push_back(sx.values[r]);
    }
    return out;
}

std::string op_class_name(OpClass c) {
    switch (c) {
        case OpClass::DetectableError:
            return "detectable-error";
        case OpClass::Stabilizer:
            return "stabilizer";
        case OpClass::Logical:
            return "logical";
    }
    return "unknown";
}

OpClass classify(const CssCode &code, const PauliVector &op) {
    const bool is_z = op.type == PauliType::Z;
    Syndrome s = is_z ? syndrome_x(code, op) : syndrome_z(code, op);
    if (!s.is_zero()) {
        return OpClass::DetectableError;
    }
    ResidueLattice stabilizers(is_z ? code.p_z : code.p_x);
    return stabilizers.contains(op.exponents) ? OpClass::Stabilizer : OpClass::Logical;
}

Integer logical_class_count(const CssCode &code, PauliType type) {
    const ModMatrix &checks = type == PauliType::Z ? code.p_x : code.p_z;
    const ModMatrix &stabs = type == PauliType::Z ? code.p_z : code.p_x;
    // |cycles| = d^n / |image of checks|, |stabilizers| = d^n / [Z^n : stab lattice],
    // |image of checks| = d^m / [Z^m : column lattice of checks].
    ResidueLattice stab_lattice(stabs);
    ResidueLattice column_lattice(checks.transpose());
    Integer d_m = 1;
    for (size_t i = 0; i < checks.rows(); i++) {
        d_m *= code.modulus;
    }
    Integer numerator = stab_lattice.index() * column_lattice.index();
    Integer out;
    mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), d_m.get_mpz_t());
    return out;
}

std::string Distance::to_string() const {
    switch (kind) {
        case Kind::Exact:
            return std::to_string(value);
        case Kind::LowerBound:
            return "> " + std::to_string(value);
        case Kind::NoLogical:
            return "no logical operators";
    }
    return "";
}

Distance distance(const CssCode &code, PauliType type, std::optional<size_t> max_weight, size_t jobs) {
    Distance out;
    if (logical_class_count(code, type) == 1) {
        return out;
    }
    const ModMatrix &checks = type == PauliType::Z ? code.p_x : code.p_z;
    const ResidueLattice stabilizers(type == PauliType::Z ? code.p_z : code.p_x);
    const size_t n = code.n();
    const int64_t d = code.modulus;
    const size_t m = checks.rows();
    const size_t limit = std::min(n, max_weight.value_or(n));
    jobs = std::max<size_t>(jobs, 1);

    std::vector<std::vector<int64_t>> columns(n);
    for (size_t c = 0; c < n; c++) {
        columns[c] = checks.column(c);
    }

    for (size_t w = 1; w <= limit; w++) {
        std::atomic<uint64_t> best_rank{std::numeric_limits<uint64_t>::max()};
        std::vector<std::vector<int64_t>> found(jobs);
        std::vector<uint64_t> found_rank(jobs, std::numeric_limits<uint64_t>::max());

        auto worker = [&](size_t job) {
            std::vector<size_t> support(w);
            for (size_t i = 0; i < w; i++) {
                support[i] = i;
            }
            std::vector<int64_t> exps(w), syndrome(m), vec(n);
            for (uint64_t rank = 0;; rank++) {
                if (rank > best_rank.load(std::memory_order_relaxed)) {
                    return;
                }
                if (rank % jobs == job) {
                    std::fill(exps.begin(), exps.end(), 1);
                    while (true) {
                        std::fill(syndrome.begin(), syndrome.end(), 0);
                        for (size_t i = 0; i < w; i++) {
                            const auto &col = columns[support[i]];
                            for (size_t r = 0; r < m; r++) {
                                syndrome[r] = (syndrome[r] + exps[i] * col[r]) % d;
                            }
                        }
                        if (std::all_of(syndrome.begin(), syndrome.end(), [](int64_t v) { return v == 0; })) {
                            std::fill(vec.begin(), vec.end(), 0);
                            for (size_t i = 0; i < w; i++) {
                                vec[support[i]] = exps[i];
                            }
                            if (!stabilizers.contains(vec)) {
                                found[job] = vec;
                                found_rank[job] = rank;
                                uint64_t cur = best_rank.load();
                                while (rank < cur && !best_rank.compare_exchange_weak(cur, rank)) {
                                }
                                return;
                            }
                        }
                        size_t i = w;
                        while (i > 0 && exps[i - 1] == d - 1) {
                            exps[i - 1] = 1;
                            i--;
                        }
                        if (i == 0) {
                            break;
                        }
                        exps[i - 1]++;
                    }
                }
                // Next support in lexicographic order.
                size_t i = w;
                while (i > 0 && support[i - 1] == n - w + i - 1) {
                    i--;
                }
                if (i == 0) {
                    return;
                }
                support[i - 1]++;
                for (size_t k = i; k < w; k++) {
                    support[k] = support[k - 1] + 1;
                }
            }
        };

        if (jobs == 1) {
            worker(0);
        } else {
            std::vector<std::thread> threads;
            for (size_t j = 0; j < jobs; j++) {
                threads.emplace_back(worker, j);
            }
            for (auto &t : threads) {
                t.join();
            }
        }
        size_t winner = jobs;
        for (size_t j = 0; j < jobs; j++) {
            if (found_rank[j] != std::numeric_limits<uint64_t>::max() &&
                (winner == jobs || found_rank[j] < found_rank[winner])) {
                winner = j;
            }
        }
        if (winner != jobs) {
            out.kind = Distance::Kind::Exact;
            out.value = w;
            out.witness = PauliVector{type, d, found[winner]};
            return out;
        }
    }
    out.kind = Distance::Kind::LowerBound;
    out.value = limit;
    return out;
}

Distance distance_z(const CssCode &code, std::optional<size_t> max_weight, size_t jobs) {
    return distance(code, PauliType::Z, max_weight, jobs);
}

Distance distance_x(const CssCode &code, std::optional<size_t> max_weight, size_t jobs) {
    return distance(code, PauliType::X, max_weight, jobs);
}

MatrixWeights matrix_weights(const ModMatrix &m) {
    MatrixWeights out;
    out.row_weights.assign(m.rows(), 0);
    out.col_weights.assign(m.cols(), 0);
    size_t total = 0;
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            if (m(r, c) != 0) {
                out.row_weights[r]++;
                out.col_weights[c]++;
                total++;
            }
        }
        if (out.row_weights[r] == 0) {
            out.degenerate_rows.push_back(r);
        }
    }
    if (m.rows()) {
        out.max_row = *std::max_element(out.row_weights.begin(), out.row_weights.end());
        out.mean_row = static_cast<double>(total) / static_cast<double>(m.rows());
    }
    if (m.cols()) {
        out.max_col = *std::max_element(out.col_weights.begin(), out.col_weights.end());
        out.mean_col = static_cast<double>(total) / static_cast<double>(m.cols());
    }
    return out;
}

LdpcProfile ldpc_profile(const CssCode &code) {
    return {matrix_weights(code.p_x), matrix_weights(code.p_z)};
}

std::string render_pauli(PauliType type, int64_t modulus, std::span<const int64_t> exponents) {
    const char letter = pauli_char(type);
    std::string out;
    for (size_t i = 0; i < exponents.size(); i++) {
        if (i) {
            out += " ⊗ ";
        }
        int64_t e = mod_floor(exponents[i], modulus);
        if (2 * e > modulus) {
            e -= modulus;
        }
        if (e == 0) {
            out += "1";
        } else if (e == 1) {
            out += letter;
        } else {
            out += letter + std::string("^") + std::to_string(e);
        }
    }
    return out;
}

std::vector<std::string> render_stabilizers(const CssCode &code) {
    std::vector<std::string> out;
    for (size_t r : distinct_rows(code.p_z)) {
        out.push_back(render_pauli(PauliType::Z, code.modulus, code.p_z.row(r)));
    }
    for (size_t r : distinct_rows(code.p_x)) {
        out.push_back(render_pauli(PauliType::X, code.modulus, code.p_x.row(r)));
    }
    return out;
}

}  // namespace cellcss
