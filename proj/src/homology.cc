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

#include "cellcss/homology.h"

#include <algorithm>
#include <numeric>

#include "cellcss/error.h"

namespace cellcss {

namespace {

IntMatrix column_hermite(const IntMatrix &m) {
    return hermite_form(m.transpose()).transpose();
}

std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

std::string join_factors(const std::vector<Integer> &factors) {
    if (factors.empty()) {
        return "none";
    }
    std::string out;
    for (size_t i = 0; i < factors.size(); i++) {
        out += (i ? ", " : "") + factors[i].get_str();
    }
    return out;
}

}  // namespace

std::string HomologyDecomposition::to_string() const {
    return "free rank " + std::to_string(free_rank) + "; invariant factors: " + join_factors(invariant_factors);
}

HomologyDecomposition homology_z(const ChainComplex &c, size_t n) {
    if (n > c.top_degree()) {
        throw Error(ErrorCode::InvalidArgument, "degree " + std::to_string(n) + " exceeds the top degree " +
                                                    std::to_string(c.top_degree()));
    }
    IntMatrix cycles = kernel_basis(c.boundary(n));
    IntMatrix boundaries = image_basis(c.boundary(n + 1));
    IntMatrix coords = solve_in_lattice(cycles, boundaries);
    SmithForm sf = smith_form(coords);

    // boundaries * v = (cycles * u^-1) * s, so the columns of cycles * u^-1 split
    // into torsion generators (factor > 1), trivial ones (factor 1) and free ones.
    IntMatrix gens = cycles * unimodular_inverse(sf.u);
    const size_t k = cycles.cols();
    const size_t r = sf.factors.size();

    HomologyDecomposition out;
    out.degree = n;
    out.free_rank = k - r;
    IntMatrix free_block = column_hermite(gens.column_range(r, k));
    IntMatrix reps = free_block;
    size_t i = 0;
    while (i < r) {
        if (sf.factors[i] == 1) {
            i++;
            continue;
        }
        size_t j = i;
        while (j < r && sf.factors[j] == sf.factors[i]) {
            out.invariant_factors.push_back(sf.factors[j]);
            j++;
        }
        reps = hstack(reps, column_hermite(gens.column_range(i, j)));
        i = j;
    }
    out.representatives = reps;
    return out;
}

size_t h0_components(const ChainComplex &c) {
    HomologyDecomposition h = homology_z(c, 0);
    if (!h.invariant_factors.empty()) {
        throw Error(ErrorCode::InvariantViolation, "degree-0 homology has torsion " + join_factors(h.invariant_factors));
    }
    return h.free_rank;
}

Integer LogicalSpace::order() const {
    Integer out = 1;
    for (size_t i = 0; i < free_qudits; i++) {
        out *= modulus;
    }
    for (int64_t t : torsion_dims) {
        out *= t;
    }
    return out;
}

std::vector<int64_t> LogicalSpace::elementary_divisors() const {
    std::vector<int64_t> orders(free_qudits, modulus);
    orders.insert(orders.end(), torsion_dims.begin(), torsion_dims.end());
    return elementary_divisors_of(orders);
}

std::string LogicalSpace::to_string() const {
    std::string out = "k' = " + std::to_string(free_qudits) + " qudit(s) of dimension " + std::to_string(modulus) +
                      "; torsion: ";
    if (torsion_dims.empty()) {
        return out + "none";
    }
    for (size_t i = 0; i < torsion_dims.size(); i++) {
        out += (i ? " + Z_" : "Z_") + std::to_string(torsion_dims[i]);
    }
    return out;
}

LogicalSpace logical_space(const ChainComplex &c, int64_t modulus) {
    if (modulus < 2) {
        throw Error(ErrorCode::BadModulus, "modulus must be at least 2, got " + std::to_string(modulus));
    }
    if (c.top_degree() < 1) {
        throw Error(ErrorCode::TooShort, "logical space needs a complex with degree-1 cells");
    }
    HomologyDecomposition h0 = homology_z(c, 0);
    if (!h0.invariant_factors.empty()) {
        throw Error(ErrorCode::InvariantViolation,
                    "degree-0 homology has torsion " + join_factors(h0.invariant_factors) +
                        ", so H_1 over Z_d is not H_1 tensor Z_d");
    }
    HomologyDecomposition h1 = homology_z(c, 1);
    LogicalSpace out;
    out.modulus = modulus;
    out.free_qudits = h1.free_rank;
    for (const auto &q : h1.invariant_factors) {
        Integer g = gcd(q, Integer(modulus));
        if (g == modulus) {
            out.free_qudits++;
        } else if (g > 1) {
            out.torsion_dims.push_back(g.get_si());
        }
    }
    std::sort(out.torsion_dims.begin(), out.torsion_dims.end());
    return out;
}

std::vector<int64_t> elementary_divisors_of(const std::vector<int64_t> &cyclic_orders) {
    std::vector<int64_t> out;
    for (int64_t a : cyclic_orders) {
        for (int64_t p : prime_factors(a)) {
            int64_t q = 1;
            while (a % p == 0) {
                a /= p;
                q *= p;
            }
            out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ModHomologyCount homology_mod_oracle(const ChainComplex &c, size_t n, int64_t modulus, uint64_t limit) {
    if (modulus < 2) {
        throw Error(ErrorCode::BadModulus, "modulus must be at least 2, got " + std::to_string(modulus));
    }
    if (n > c.top_degree()) {
        throw Error(ErrorCode::InvalidArgument, "degree " + std::to_string(n) + " exceeds the top degree");
    }
    const size_t len = c.rank(n);
    const uint64_t d = static_cast<uint64_t>(modulus);
    uint64_t total = 1;
    for (size_t i = 0; i < len; i++) {
        if (total > limit / d) {
            throw Error(ErrorCode::TooLarge, "enumerating " + std::to_string(modulus) + "^" + std::to_string(len) +
                                                 " vectors exceeds the limit " + std::to_string(limit));
        }
        total *= d;
    }
    ModMatrix out_map = reduce_mod(c.boundary(n), modulus);
    ModMatrix in_map = reduce_mod(c.boundary(n + 1), modulus);

    // Vectors are encoded in base d, coordinate 0 least significant.
    auto decode = [&](uint64_t code, std::vector<int64_t> &digits) {
        for (size_t i = 0; i < len; i++) {
            digits[i] = static_cast<int64_t>(code % d);
            code /= d;
        }
    };
    auto encode = [&](const std::vector<int64_t> &digits) {
        uint64_t code = 0;
        for (size_t i = len; i-- > 0;) {
            code = code * d + static_cast<uint64_t>(digits[i]);
        }
        return code;
    };

    // Kernel: walk all vectors like an odometer, keeping the image under out_map up to date.
    std::vector<bool> in_kernel(total, false);
    {
        std::vector<int64_t> digits(len, 0);
        std::vector<int64_t> image(out_map.rows(), 0);
        for (uint64_t code = 0; code < total; code++) {
            in_kernel[code] = std::all_of(image.begin(), image.end(), [](int64_t v) { return v == 0; });
            for (size_t i = 0; i < len; i++) {
                digits[i] = (digits[i] + 1) % modulus;
                for (size_t r = 0; r < out_map.rows(); r++) {
                    image[r] = (image[r] + out_map(r, i)) % modulus;
                }
                if (digits[i] != 0) {
                    break;
                }
            }
        }
    }

    // Image: subgroup generated by the columns of in_map.
    std::vector<bool> in_image(total, false);
    std::vector<uint64_t> image_elems = {0};
    in_image[0] = true;
    std::vector<int64_t> a(len), b(len);
    for (size_t g = 0; g < in_map.cols(); g++) {
        std::vector<int64_t> gen = in_map.column(g);
        size_t snapshot = image_elems.size();
        for (size_t s = 0; s < snapshot; s++) {
            decode(image_elems[s], a);
            while (true) {
                for (size_t i = 0; i < len; i++) {
                    a[i] = (a[i] + gen[i]) % modulus;
                }
                uint64_t code = encode(a);
                if (in_image[code]) {
                    break;
                }
                in_image[code] = true;
                image_elems.push_back(code);
            }
        }
    }

    ModHomologyCount out;
    for (uint64_t code = 0; code < total; code++) {
        out.kernel_size += in_kernel[code];
    }
    out.image_size = image_elems.size();
    for (uint64_t code : image_elems) {
        if (!in_kernel[code]) {
            throw Error(ErrorCode::InvariantViolation, "reduced differentials do not compose to zero");
        }
    }
    out.order = out.kernel_size / out.image_size;

    // For each prime p of d, count cycles x with p^k x a boundary. The number of
    // such classes is p^(sum_j min(a_j, k)) over the cyclic factors Z/p^a_j.
    for (int64_t p : prime_factors(modulus)) {
        std::vector<int> exponent_sum = {0};
        int64_t pk = 1;
        while (modulus % (pk * p) == 0) {
            pk *= p;
            uint64_t killed = 0;
            for (uint64_t code = 0; code < total; code++) {
                if (!in_kernel[code]) {
                    continue;
                }
                decode(code, b);
                for (size_t i = 0; i < len; i++) {
                    b[i] = (b[i] * pk) % modulus;
                }
                killed += in_image[encode(b)];
            }
            uint64_t classes = killed / out.image_size;
            int e = 0;
            while (classes % static_cast<uint64_t>(p) == 0 && classes > 1) {
                classes /= static_cast<uint64_t>(p);
                e++;
            }
            if (classes != 1) {
                throw Error(ErrorCode::InvariantViolation, "torsion count is not a prime power");
            }
            exponent_sum.push_back(e);
        }
        const size_t top = exponent_sum.size() - 1;
        std::vector<int> at_least(top + 2, 0);
        for (size_t k = 1; k <= top; k++) {
            at_least[k] = exponent_sum[k] - exponent_sum[k - 1];
        }
        for (size_t k = 1; k <= top; k++) {
            int exactly = at_least[k] - at_least[k + 1];
            int64_t q = 1;
            for (size_t i = 0; i < k; i++) {
                q *= p;
            }
            for (int j = 0; j < exactly; j++) {
                out.elementary_divisors.push_back(q);
            }
        }
    }
    std::sort(out.elementary_divisors.begin(), out.elementary_divisors.end());
    return out;
}

}  // namespace cellcss
