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

#ifndef CELLCSS_HOMOLOGY_H
#define CELLCSS_HOMOLOGY_H

#include <cstdint>
#include <vector>

#include "cellcss/chaincomplex.h"
#include "cellcss/intlinalg.h"

namespace cellcss {

/// H_n over Z as Z^free_rank plus Z/f for each invariant factor f > 1.
struct HomologyDecomposition {
    size_t degree = 0;
    size_t free_rank = 0;
    std::vector<Integer> invariant_factors;
    /// One cycle per generator, free generators first, then torsion generators in
    /// the order of invariant_factors.
    IntMatrix representatives;

    std::string to_string() const;
};

HomologyDecomposition homology_z(const ChainComplex &c, size_t n);

/// Rank of H_0, i.e. the number of connected components of a cellular complex.
size_t h0_components(const ChainComplex &c);

/// Degree-1 homology over Z_d: free_qudits copies of Z_d plus Z_t for each t in
/// torsion_dims.
struct LogicalSpace {
    int64_t modulus = 2;
    size_t free_qudits = 0;
    std::vector<int64_t> torsion_dims;

    /// Number of elements, d^free_qudits times the product of torsion_dims.
    Integer order() const;
    /// Prime power decomposition of the group, ascending.
    std::vector<int64_t> elementary_divisors() const;
    std::string to_string() const;

    bool operator==(const LogicalSpace &other) const = default;
};

/// Requires H_0 of c to be free, which always holds for cellular complexes.
LogicalSpace logical_space(const ChainComplex &c, int64_t modulus);

/// Prime power decomposition of Z/a_1 + ... + Z/a_k, ascending.
std::vector<int64_t> elementary_divisors_of(const std::vector<int64_t> &cyclic_orders);

struct ModHomologyCount {
    uint64_t kernel_size = 0;
    uint64_t image_size = 0;
    uint64_t order = 0;
    std::vector<int64_t> elementary_divisors;
};

/// Enumerates Z_d^{rank C_n} to count ker/im of the reduced differentials and reads
/// off the quotient's structure from how many classes are killed by each p^k.
ModHomologyCount homology_mod_oracle(const ChainComplex &c, size_t n, int64_t modulus,
                                     uint64_t limit = 10'000'000);

}  // namespace cellcss

#endif
