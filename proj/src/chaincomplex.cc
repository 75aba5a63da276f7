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

#include "cellcss/chaincomplex.h"

#include "cellcss/error.h"

namespace cellcss {

ChainComplex::ChainComplex(std::vector<std::vector<std::string>> labels, std::vector<IntMatrix> diffs)
    : labels_(std::move(labels)), diffs_(std::move(diffs)) {
    if (labels_.empty()) {
        labels_.emplace_back();
    }
    if (diffs_.size() != labels_.size() - 1) {
        throw Error(ErrorCode::LengthMismatch, "a complex with top degree " + std::to_string(labels_.size() - 1) +
                                                   " needs " + std::to_string(labels_.size() - 1) +
                                                   " differentials, got " + std::to_string(diffs_.size()));
    }
    for (size_t n = 1; n < labels_.size(); n++) {
        const IntMatrix &d = diffs_[n - 1];
        if (d.rows() != labels_[n - 1].size() || d.cols() != labels_[n].size()) {
            throw Error(ErrorCode::LengthMismatch, "differential " + std::to_string(n) + " has shape " +
                                                       std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                                                       ", expected " + std::to_string(labels_[n - 1].size()) + "x" +
                                                       std::to_string(labels_[n].size()));
        }
    }
}

const std::vector<std::string> &ChainComplex::labels(size_t n) const {
    static const std::vector<std::string> none;
    return n < labels_.size() ? labels_[n] : none;
}

IntMatrix ChainComplex::boundary(size_t n) const {
    if (n >= 1 && n < labels_.size()) {
        return diffs_[n - 1];
    }
    return IntMatrix(n == 0 ? 0 : rank(n - 1), rank(n));
}

std::string ChainViolation::to_string() const {
    return "boundary " + std::to_string(degree) + " * boundary " + std::to_string(degree + 1) + " has entry " +
           value.get_str() + " at (" + std::to_string(row) + ", " + std::to_string(col) + ")";
}

std::optional<ChainViolation> verify(const ChainComplex &c) {
    for (size_t n = 1; n < c.top_degree(); n++) {
        IntMatrix product = c.boundary(n) * c.boundary(n + 1);
        for (size_t r = 0; r < product.rows(); r++) {
            for (size_t k = 0; k < product.cols(); k++) {
                if (sgn(product(r, k)) != 0) {
                    return ChainViolation{n, r, k, product(r, k)};
                }
            }
        }
    }
    return std::nullopt;
}

ChainComplex from_cell_complex(const CellComplex &x) {
    require_valid(x);
    std::vector<std::string> edge_names, face_names;
    IntMatrix d1(x.vertices.size(), x.edges.size());
    for (size_t j = 0; j < x.edges.size(); j++) {
        const Edge &e = x.edges[j];
        edge_names.push_back(e.name);
        d1(*x.vertex_index(e.target), j) += 1;
        d1(*x.vertex_index(e.source), j) -= 1;
    }
    IntMatrix d2(x.edges.size(), x.faces.size());
    for (size_t j = 0; j < x.faces.size(); j++) {
        face_names.push_back(x.faces[j].name);
        for (const auto &ref : x.faces[j].boundary) {
            d2(*x.edge_index(ref.cell), j) += ref.sign;
        }
    }
    return ChainComplex({x.vertices, edge_names, face_names}, {d1, d2});
}

ChainComplex tensor(const ChainComplex &c, const ChainComplex &e) {
    const size_t top = c.top_degree() + e.top_degree();
    // offset[n][i] is where the block C_i (x) E_{n-i} starts inside P_n.
    std::vector<std::vector<size_t>> offset(top + 1);
    std::vector<std::vector<std::string>> labels(top + 1);
    for (size_t n = 0; n <= top; n++) {
        size_t at = 0;
        offset[n].assign(c.top_degree() + 1, SIZE_MAX);
        for (size_t i = 0; i <= c.top_degree(); i++) {
            if (n < i || n - i > e.top_degree()) {
                continue;
            }
            offset[n][i] = at;
            for (const auto &a : c.labels(i)) {
                for (const auto &b : e.labels(n - i)) {
                    labels[n].push_back(a + "⊗" + b);
                }
            }
            at += c.rank(i) * e.rank(n - i);
        }
    }

    std::vector<IntMatrix> diffs;
    for (size_t n = 1; n <= top; n++) {
        IntMatrix d(labels[n - 1].size(), labels[n].size());
        for (size_t i = 0; i <= c.top_degree(); i++) {
            if (offset[n][i] == SIZE_MAX) {
                continue;
            }
            const size_t j = n - i;
            const size_t rj = e.rank(j);
            const IntMatrix dc = c.boundary(i);
            const IntMatrix de = e.boundary(j);
            for (size_t a = 0; a < c.rank(i); a++) {
                for (size_t b = 0; b < rj; b++) {
                    const size_t col = offset[n][i] + a * rj + b;
                    // d(a (x) b) = da (x) b + (-1)^i a (x) db
                    if (i >= 1) {
                        for (size_t a2 = 0; a2 < c.rank(i - 1); a2++) {
                            if (sgn(dc(a2, a)) != 0) {
                                d(offset[n - 1][i - 1] + a2 * rj + b, col) += dc(a2, a);
                            }
                        }
                    }
                    if (j >= 1) {
                        const size_t rj2 = e.rank(j - 1);
                        for (size_t b2 = 0; b2 < rj2; b2++) {
                            if (sgn(de(b2, b)) != 0) {
                                Integer v = de(b2, b);
                                d(offset[n - 1][i] + a * rj2 + b2, col) += (i % 2 == 0) ? v : Integer(-v);
                            }
                        }
                    }
                }
            }
        }
        diffs.push_back(std::move(d));
    }
    return ChainComplex(labels, diffs);
}

ChainComplex direct_sum(const ChainComplex &c, const ChainComplex &e) {
    const size_t top = std::max(c.top_degree(), e.top_degree());
    std::vector<std::vector<std::string>> labels(top + 1);
    std::vector<IntMatrix> diffs;
    for (size_t n = 0; n <= top; n++) {
        labels[n] = c.labels(n);
        labels[n].insert(labels[n].end(), e.labels(n).begin(), e.labels(n).end());
        if (n >= 1) {
            diffs.push_back(block_diagonal(c.boundary(n), e.boundary(n)));
        }
    }
    return ChainComplex(labels, diffs);
}

ChainComplex dual(const ChainComplex &c) {
    const size_t top = c.top_degree();
    std::vector<std::vector<std::string>> labels(top + 1);
    std::vector<IntMatrix> diffs;
    for (size_t k = 0; k <= top; k++) {
        labels[k] = c.labels(top - k);
        if (k >= 1) {
            diffs.push_back(c.boundary(top - k + 1).transpose());
        }
    }
    return ChainComplex(labels, diffs);
}

ChainComplex truncate(const ChainComplex &c, size_t n) {
    if (n >= c.top_degree()) {
        return c;
    }
    std::vector<std::vector<std::string>> labels;
    std::vector<IntMatrix> diffs;
    for (size_t k = 0; k <= n; k++) {
        labels.push_back(c.labels(k));
        if (k >= 1) {
            diffs.push_back(c.boundary(k));
        }
    }
    return ChainComplex(labels, diffs);
}

ModChainComplex::ModChainComplex(int64_t modulus, std::vector<std::vector<std::string>> labels,
                                 std::vector<ModMatrix> diffs)
    : modulus_(modulus), labels_(std::move(labels)), diffs_(std::move(diffs)) {
    if (modulus < 2) {
        throw Error(ErrorCode::BadModulus, "modulus must be at least 2, got " + std::to_string(modulus));
    }
    if (labels_.empty() || diffs_.size() != labels_.size() - 1) {
        throw Error(ErrorCode::LengthMismatch, "differential count does not match degree count");
    }
}

bool ModChainComplex::is_chain_complex() const {
    for (size_t n = 1; n < diffs_.size(); n++) {
        if (!(diffs_[n - 1] * diffs_[n]).is_zero()) {
            return false;
        }
    }
    return true;
}

ModChainComplex change_ring(const ChainComplex &c, int64_t modulus) {
    std::vector<std::vector<std::string>> labels;
    std::vector<ModMatrix> diffs;
    for (size_t n = 0; n <= c.top_degree(); n++) {
        labels.push_back(c.labels(n));
        if (n >= 1) {
            diffs.push_back(reduce_mod(c.boundary(n), modulus));
        }
    }
    if (diffs.empty() && modulus < 2) {
        throw Error(ErrorCode::BadModulus, "modulus must be at least 2, got " + std::to_string(modulus));
    }
    return ModChainComplex(modulus, labels, diffs);
}

}  // namespace cellcss
