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

#ifndef CELLCSS_CHAINCOMPLEX_H
#define CELLCSS_CHAINCOMPLEX_H

#include <optional>
#include <string>
#include <vector>

#include "cellcss/cellcomplex.h"
#include "cellcss/intlinalg.h"

namespace cellcss {

/// Free chain complex over Z in degrees 0..top_degree with labeled bases.
class ChainComplex {
   public:
    ChainComplex() = default;
    /// diffs[n - 1] maps degree n to degree n - 1. Only shapes are checked here;
    /// use verify() for the boundary-of-boundary condition.
    ChainComplex(std::vector<std::vector<std::string>> labels, std::vector<IntMatrix> diffs);

    size_t top_degree() const {
        return labels_.empty() ? 0 : labels_.size() - 1;
    }
    size_t rank(size_t n) const {
        return n < labels_.size() ? labels_[n].size() : 0;
    }
    const std::vector<std::string> &labels(size_t n) const;
    /// Differential from degree n to degree n - 1. Degrees outside the complex give
    /// a zero matrix of the matching shape.
    IntMatrix boundary(size_t n) const;

    bool operator==(const ChainComplex &other) const = default;

   private:
    std::vector<std::vector<std::string>> labels_;
    std::vector<IntMatrix> diffs_;
};

struct ChainViolation {
    /// The failing product is boundary(degree) * boundary(degree + 1).
    size_t degree = 0;
    size_t row = 0;
    size_t col = 0;
    Integer value;

    std::string to_string() const;
};

/// First place where consecutive differentials fail to compose to zero.
std::optional<ChainViolation> verify(const ChainComplex &c);

ChainComplex from_cell_complex(const CellComplex &x);

/// Koszul-signed tensor product. Basis of degree n is ordered by (left degree,
/// left index, right index) and labeled "a⊗b".
ChainComplex tensor(const ChainComplex &c, const ChainComplex &e);
ChainComplex direct_sum(const ChainComplex &c, const ChainComplex &e);
/// Degrees reversed, differentials transposed.
ChainComplex dual(const ChainComplex &c);
/// Keeps degrees 0..n.
ChainComplex truncate(const ChainComplex &c, size_t n);

class ModChainComplex {
   public:
    ModChainComplex(int64_t modulus, std::vector<std::vector<std::string>> labels, std::vector<ModMatrix> diffs);

    int64_t modulus() const {
        return modulus_;
    }
    size_t top_degree() const {
        return labels_.empty() ? 0 : labels_.size() - 1;
    }
    const std::vector<std::string> &labels(size_t n) const {
        return labels_.at(n);
    }
    const ModMatrix &boundary(size_t n) const {
        return diffs_.at(n - 1);
    }
    bool is_chain_complex() const;

    bool operator==(const ModChainComplex &other) const = default;

   private:
    int64_t modulus_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<ModMatrix> diffs_;
};

ModChainComplex change_ring(const ChainComplex &c, int64_t modulus);

}  // namespace cellcss

#endif
