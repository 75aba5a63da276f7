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

#include <doctest.h>

#include <random>

#include "cellcss/chaincomplex.h"
#include "cellcss/error.h"
#include "cellcss/homology.h"
#include "test_util.h"

using namespace cellcss;

namespace {

ChainComplex chain(const std::string &name, std::optional<int64_t> param = std::nullopt) {
    return from_cell_complex(builtin(name, param));
}

}  // namespace

TEST_CASE("homology_z goldens") {
    ChainComplex t = chain("torus");
    HomologyDecomposition h = homology_z(t, 1);
    CHECK(h.free_rank == 2);
    CHECK(h.invariant_factors.empty());
    CHECK(h.to_string() == "free rank 2; invariant factors: none");
    // Same classes as e1 + e2 and e4 + e5 once boundaries are added.
    IntMatrix boundaries = image_basis(t.boundary(2));
    IntMatrix expected = testutil::column_matrix({{1, 1, 0, 0, 0}, {0, 0, 0, 1, 1}}, 5);
    CHECK(testutil::same_lattice(hstack(h.representatives, boundaries), hstack(expected, boundaries)));

    HomologyDecomposition r = homology_z(chain("rp2_halfsphere"), 1);
    CHECK(r.free_rank == 0);
    REQUIRE(r.invariant_factors.size() == 1);
    CHECK(r.invariant_factors[0] == 2);

    for (int q = 2; q <= 6; q++) {
        HomologyDecomposition p = homology_z(chain("polygon_torsion", q), 1);
        CHECK(p.free_rank == 0);
        REQUIRE(p.invariant_factors.size() == 1);
        CHECK(p.invariant_factors[0] == q);
    }
    CHECK(homology_z(chain("torus_filled"), 1).free_rank == 1);
    CHECK(homology_z(chain("torus"), 2).free_rank == 1);
    CHECK(homology_z(chain("klein"), 1).free_rank == 1);
    CHECK(homology_z(chain("klein"), 1).invariant_factors == std::vector<Integer>{2});
}

TEST_CASE("torsion representatives") {
    for (const auto &[name, x] : testutil::all_builtins()) {
        ChainComplex c = from_cell_complex(x);
        for (size_t n = 0; n <= c.top_degree(); n++) {
            INFO(name << " degree " << n);
            HomologyDecomposition h = homology_z(c, n);
            IntMatrix boundaries = image_basis(c.boundary(n + 1));
            REQUIRE(h.representatives.cols() == h.free_rank + h.invariant_factors.size());
            CHECK((c.boundary(n) * h.representatives).is_zero());
            for (size_t i = 0; i < h.representatives.cols(); i++) {
                std::vector<Integer> r = h.representatives.column(i);
                CHECK_FALSE(in_lattice(boundaries, r));
                if (i >= h.free_rank) {
                    Integer f = h.invariant_factors[i - h.free_rank];
                    for (auto &v : r) {
                        v *= f;
                    }
                    CHECK(in_lattice(boundaries, r));
                }
            }
        }
    }
}

TEST_CASE("homology respects direct sums") {
    auto builtins = testutil::all_builtins();
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; trial++) {
        const auto &a = builtins[rng() % builtins.size()].second;
        const auto &b = builtins[rng() % builtins.size()].second;
        ChainComplex ca = from_cell_complex(a), cb = from_cell_complex(b);
        ChainComplex s = direct_sum(ca, cb);
        for (size_t n = 0; n <= 2; n++) {
            HomologyDecomposition ha = homology_z(ca, n), hb = homology_z(cb, n), hs = homology_z(s, n);
            CHECK(hs.free_rank == ha.free_rank + hb.free_rank);
            std::vector<int64_t> merged;
            for (const auto &f : ha.invariant_factors) {
                merged.push_back(f.get_si());
            }
            for (const auto &f : hb.invariant_factors) {
                merged.push_back(f.get_si());
            }
            std::vector<int64_t> got;
            for (const auto &f : hs.invariant_factors) {
                got.push_back(f.get_si());
            }
            CHECK(elementary_divisors_of(got) == elementary_divisors_of(merged));
        }
    }
}

TEST_CASE("h0_components") {
    CHECK(h0_components(chain("torus")) == 1);
    CHECK(h0_components(from_cell_complex(direct_sum(builtin("torus"), builtin("rp2_halfsphere")))) == 2);
    CellComplex dots;
    dots.vertices = {"a", "b", "c"};
    CHECK(h0_components(from_cell_complex(dots)) == 3);
}

TEST_CASE("logical_space") {
    ChainComplex rp = chain("rp2_halfsphere");
    CHECK(logical_space(rp, 2) == LogicalSpace{2, 1, {}});
    CHECK(logical_space(rp, 3) == LogicalSpace{3, 0, {}});
    CHECK(logical_space(rp, 4) == LogicalSpace{4, 0, {2}});
    CHECK(logical_space(chain("polygon_torsion", 3), 6) == LogicalSpace{6, 0, {3}});
    for (int64_t d = 2; d <= 9; d++) {
        CHECK(logical_space(chain("torus"), d) == LogicalSpace{d, 2, {}});
    }
    CHECK(logical_space(rp, 2).to_string() == "k' = 1 qudit(s) of dimension 2; torsion: none");
    CHECK(logical_space(rp, 4).to_string() == "k' = 0 qudit(s) of dimension 4; torsion: Z_2");
    CHECK_THROWS_AS(logical_space(rp, 1), Error);

    // Prime d leaves no torsion.
    for (const auto &[name, x] : testutil::all_builtins()) {
        for (int64_t p : {2, 3, 5, 7}) {
            CHECK(logical_space(from_cell_complex(x), p).torsion_dims.empty());
        }
    }
}

TEST_CASE("logical_space refuses complexes with torsion in degree 0") {
    ChainComplex c({{"v"}, {"e"}, {}}, {IntMatrix{{2}}, IntMatrix(1, 0)});
    try {
        logical_space(c, 2);
        FAIL("expected InvariantViolation");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::InvariantViolation);
    }
}

TEST_CASE("homology_mod_oracle examples") {
    ModHomologyCount r = homology_mod_oracle(chain("rp2_halfsphere"), 1, 2);
    CHECK(r.kernel_size == 16);
    CHECK(r.image_size == 8);
    CHECK(r.order == 2);
    CHECK(r.elementary_divisors == std::vector<int64_t>{2});

    ModHomologyCount p = homology_mod_oracle(chain("polygon_torsion", 3), 1, 3);
    CHECK(p.order == 3);
    CHECK(p.elementary_divisors == std::vector<int64_t>{3});

    ModHomologyCount t = homology_mod_oracle(chain("torus"), 1, 2);
    CHECK(t.order == 4);
    CHECK(t.elementary_divisors == std::vector<int64_t>{2, 2});

    ModHomologyCount t4 = homology_mod_oracle(chain("torus"), 1, 4);
    CHECK(t4.elementary_divisors == std::vector<int64_t>{4, 4});

    try {
        homology_mod_oracle(chain("rp2_halfsphere"), 1, 6, 1000);
        FAIL("expected TooLarge");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}

TEST_CASE("elementary_divisors_of") {
    CHECK(elementary_divisors_of({6, 4}) == std::vector<int64_t>{2, 3, 4});
    CHECK(elementary_divisors_of({1}).empty());
    CHECK(LogicalSpace{6, 1, {2}}.elementary_divisors() == std::vector<int64_t>{2, 2, 3});
    CHECK(LogicalSpace{6, 1, {2}}.order() == 12);
}
