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

// Runs the acceptance criteria and prints one PASS/FAIL line for each. Exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cellcss/acc_format.h"
#include "cellcss/cellcomplex.h"
#include "cellcss/chaincomplex.h"
#include "cellcss/cli.h"
#include "cellcss/csscode.h"
#include "cellcss/error.h"
#include "cellcss/homology.h"
#include "cellcss/intlinalg.h"
#include "oracles.h"
#include "test_util.h"

using namespace cellcss;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string &why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
    void expect(bool ok, const std::string &why) {
        if (!ok) {
            fail(why);
        }
    }
};

ChainComplex chain(const std::string &name, std::optional<int64_t> param = std::nullopt) {
    return from_cell_complex(builtin(name, param));
}

std::string ints(const std::vector<Integer> &v) {
    std::string out;
    for (const auto &x : v) {
        out += (out.empty() ? "" : ",") + x.get_str();
    }
    return "[" + out + "]";
}

Outcome golden_matrices() {
    Outcome o;
    const IntMatrix toric_d2{{0, 0}, {0, 0}, {-1, 1}, {1, -1}, {1, -1}};
    const IntMatrix toric_d1{{-1, 1, 0, 0, 0}, {1, -1, 0, -1, 1}, {0, 0, 0, 1, -1}};
    const IntMatrix rp2_d2{{1, 0, 0, -1}, {1, 0, 0, 1}, {0, 1, 0, -1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 1, -1}};
    const IntMatrix rp2_d1{{-1, 1, 0, 0, -1, 1}, {1, -1, -1, 1, 0, 0}, {0, 0, 1, -1, 1, -1}};
    ChainComplex t = chain("torus");
    ChainComplex r = chain("rp2_halfsphere");
    o.expect(t.boundary(2).to_string() == toric_d2.to_string(), "toric boundary 2 differs");
    o.expect(t.boundary(1).to_string() == toric_d1.to_string(), "toric boundary 1 differs");
    o.expect(r.boundary(2).to_string() == rp2_d2.to_string(), "rp2 boundary 2 differs");
    o.expect(r.boundary(1).to_string() == rp2_d1.to_string(), "rp2 boundary 1 differs");
    o.expect(t.boundary(2) == toric_d2 && t.boundary(1) == toric_d1 && r.boundary(2) == rp2_d2 &&
                 r.boundary(1) == rp2_d1,
             "entrywise mismatch");
    return o;
}

Outcome homology_goldens() {
    Outcome o;
    auto h1 = [](const ChainComplex &c) { return homology_z(c, 1); };
    HomologyDecomposition t = h1(chain("torus"));
    o.expect(t.free_rank == 2 && t.invariant_factors.empty(), "torus H1: " + t.to_string());
    HomologyDecomposition tf = h1(chain("torus_filled"));
    o.expect(tf.free_rank == 1 && tf.invariant_factors.empty(), "torus_filled H1: " + tf.to_string());
    HomologyDecomposition r = h1(chain("rp2_halfsphere"));
    o.expect(r.free_rank == 0 && r.invariant_factors == std::vector<Integer>{2}, "rp2 H1: " + r.to_string());
    for (int64_t q = 2; q <= 6; q++) {
        HomologyDecomposition p = h1(chain("polygon_torsion", q));
        o.expect(p.free_rank == 0 && p.invariant_factors == std::vector<Integer>{Integer(static_cast<long>(q))},
                 "polygon_torsion(" + std::to_string(q) + ") H1: " + p.to_string());
    }

    auto pool = testutil::all_builtins();
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 25; trial++) {
        size_t parts = 2 + rng() % 3;
        CellComplex x = pool[rng() % pool.size()].second;
        for (size_t i = 1; i < parts; i++) {
            x = direct_sum(x, pool[rng() % pool.size()].second);
        }
        std::vector<std::pair<size_t, size_t>> edges;
        for (const auto &e : x.edges) {
            edges.push_back({*x.vertex_index(e.source), *x.vertex_index(e.target)});
        }
        size_t expected = oracle::bfs_components(x.vertices.size(), edges);
        HomologyDecomposition h0 = homology_z(from_cell_complex(x), 0);
        o.expect(h0.free_rank == expected && h0.invariant_factors.empty(),
                 "H0 of random sum " + std::to_string(trial) + " is " + h0.to_string() + ", expected rank " +
                     std::to_string(expected));
    }
    if (o.pass) {
        o.detail = "25 random sums checked";
    }
    return o;
}

Outcome kernel_image_golden() {
    Outcome o;
    ChainComplex r = chain("rp2_halfsphere");
    IntMatrix ker = testutil::column_matrix(
        {{1, 1, 0, 0, 0, 0}, {0, 1, 0, 1, 0, -1}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}}, 6);
    IntMatrix im = testutil::column_matrix(
        {{1, 1, 0, 0, 0, 0}, {0, 2, 0, 2, 0, -2}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}}, 6);
    auto mutual = [](const IntMatrix &a, const IntMatrix &b) {
        try {
            solve_in_lattice(a, b);
            solve_in_lattice(b, a);
            return true;
        } catch (const Error &) {
            return false;
        }
    };
    o.expect(mutual(kernel_basis(r.boundary(1)), ker), "kernel lattice differs");
    o.expect(mutual(image_basis(r.boundary(2)), im), "image lattice differs");
    return o;
}

Outcome structure_theorem_vs_oracle() {
    Outcome o;
    size_t pairs = 0;
    for (const auto &[name, x] : testutil::all_builtins()) {
        ChainComplex c = from_cell_complex(x);
        for (int64_t d = 2; d <= 6; d++) {
            if (std::pow(static_cast<double>(d), static_cast<double>(c.rank(1))) > 1e7) {
                continue;
            }
            std::string tag = name + " d=" + std::to_string(d);
            try {
                LogicalSpace ls = logical_space(c, d);
                ModHomologyCount oc = homology_mod_oracle(c, 1, d);
                o.expect(ls.order() == Integer(static_cast<unsigned long>(oc.order)), tag + ": order differs");
                o.expect(ls.elementary_divisors() == oc.elementary_divisors, tag + ": elementary divisors differ");
            } catch (const Error &e) {
                o.fail(tag + ": " + e.what());
            }
            pairs++;
        }
    }
    o.expect(pairs >= 30, "only " + std::to_string(pairs) + " pairs");
    if (o.pass) {
        o.detail = std::to_string(pairs) + " (complex, d) pairs";
    }
    return o;
}

Outcome syndrome_goldens() {
    Outcome o;
    for (int64_t d : {3, 5, 7}) {
        CssCode rp = css_from_chain(chain("rp2_halfsphere"), d);
        Syndrome s = syndrome_x(rp, PauliVector::make(PauliType::Z, d, {1, 0, 2, 0, 0, 0}));
        o.expect(s.values == std::vector<int64_t>{d - 1, d - 1, 2}, "rp2 d=" + std::to_string(d) + ": " + s.to_string());
    }
    CssCode rp5 = css_from_chain(chain("rp2_halfsphere"), 5);
    o.expect(syndrome_x(rp5, PauliVector::make(PauliType::Z, 5, {1, 0, 2, 0, 0, 0})).to_string() == "(4, 4, 2)",
             "rp2 d=5 rendering");
    CssCode t = css_from_chain(chain("torus"), 2);
    Syndrome c = combined_syndrome(t, PauliVector::make(PauliType::X, 2, {0, 0, 0, 0, 0}),
                                   PauliVector::make(PauliType::Z, 2, {1, 0, 0, 0, 0}));
    o.expect(c.values == std::vector<int64_t>{0, 1, 1, 0}, "toric combined: " + c.to_string());
    return o;
}

Outcome stabilizer_rendering() {
    Outcome o;
    std::vector<std::string> toric = {
        "1 ⊗ 1 ⊗ Z ⊗ Z ⊗ Z",
        "X ⊗ X ⊗ 1 ⊗ 1 ⊗ 1",
        "X ⊗ X ⊗ 1 ⊗ X ⊗ X",
        "1 ⊗ 1 ⊗ 1 ⊗ X ⊗ X",
    };
    std::vector<std::string> rp2 = {
        "Z ⊗ Z ⊗ 1 ⊗ 1 ⊗ 1 ⊗ 1",
        "1 ⊗ 1 ⊗ Z ⊗ Z ⊗ 1 ⊗ 1",
        "1 ⊗ 1 ⊗ 1 ⊗ 1 ⊗ Z ⊗ Z",
        "Z^-1 ⊗ Z ⊗ Z^-1 ⊗ Z ⊗ Z ⊗ Z^-1",
        "X^-1 ⊗ X ⊗ 1 ⊗ 1 ⊗ X^-1 ⊗ X",
        "X ⊗ X^-1 ⊗ X^-1 ⊗ X ⊗ 1 ⊗ 1",
        "1 ⊗ 1 ⊗ X ⊗ X^-1 ⊗ X ⊗ X^-1",
    };
    o.expect(render_stabilizers(css_from_chain(chain("torus"), 2)) == toric, "toric table differs");
    for (int64_t d : {3, 5, 7}) {
        o.expect(render_stabilizers(css_from_chain(chain("rp2_halfsphere"), d)) == rp2,
                 "rp2 table differs for d=" + std::to_string(d));
    }
    return o;
}

Outcome commutation() {
    Outcome o;
    std::mt19937_64 rng(1000);
    size_t failures = 0;
    for (int trial = 0; trial < 1000; trial++) {
        int64_t d = 2 + static_cast<int64_t>(rng() % 8);
        size_t n = 1 + rng() % 10;
        std::vector<int64_t> z(n), x(n);
        for (size_t i = 0; i < n; i++) {
            z[i] = static_cast<int64_t>(rng() % d);
            x[i] = static_cast<int64_t>(rng() % d);
        }
        Commutation c = commutes(PauliVector::make(PauliType::Z, d, z), PauliVector::make(PauliType::X, d, x));
        int64_t expected = oracle::omega_exponent_by_action(z, x, d);
        failures += c.phase != expected || c.commutes != (expected == 0);
    }
    o.expect(failures == 0, std::to_string(failures) + " random disagreements");
    size_t codes = 0;
    for (const auto &[name, x] : testutil::all_builtins()) {
        ChainComplex c = from_cell_complex(x);
        if (c.top_degree() < 2) {
            continue;
        }
        for (int64_t d = 2; d <= 9; d++) {
            CssCode code = css_from_chain(c, d);
            codes++;
            for (size_t i = 0; i < code.p_z.rows(); i++) {
                for (size_t j = 0; j < code.p_x.rows(); j++) {
                    auto zr = code.p_z.row(i);
                    auto xr = code.p_x.row(j);
                    bool ok = commutes(PauliVector::make(PauliType::Z, d, {zr.begin(), zr.end()}),
                                       PauliVector::make(PauliType::X, d, {xr.begin(), xr.end()}))
                                  .commutes;
                    o.expect(ok, name + " d=" + std::to_string(d) + ": generators do not commute");
                }
            }
        }
    }
    if (o.pass) {
        o.detail = "1000 random triples, " + std::to_string(codes) + " codes";
    }
    return o;
}

Outcome classical_goldens() {
    Outcome o;
    using W = std::vector<std::vector<int64_t>>;
    auto table = classical_syndrome_table({ModMatrix::from_rows(2, {{1, 1, 0}, {1, 0, 1}}, 3)});
    std::vector<std::pair<std::vector<int64_t>, W>> expected = {
        {{0, 0}, {{0, 0, 0}, {1, 1, 1}}},
        {{0, 1}, {{0, 0, 1}, {1, 1, 0}}},
        {{1, 0}, {{0, 1, 0}, {1, 0, 1}}},
        {{1, 1}, {{1, 0, 0}, {0, 1, 1}}},
    };
    o.expect(table.size() == expected.size(), "table has " + std::to_string(table.size()) + " groups");
    for (size_t i = 0; i < std::min(table.size(), expected.size()); i++) {
        W got = table[i].words;
        W want = expected[i].second;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        o.expect(table[i].syndrome == expected[i].first && got == want, "group " + std::to_string(i) + " differs");
    }

    ModMatrix h = ModMatrix::from_rows(2, {{1, 1, 0, 1, 1, 0, 0}, {1, 0, 1, 1, 0, 1, 0}, {0, 1, 1, 1, 0, 0, 1}}, 7);
    std::vector<std::vector<int64_t>> singles;
    for (size_t b = 0; b < 7; b++) {
        std::vector<int64_t> e(7, 0);
        e[b] = 1;
        std::vector<int64_t> s = h * std::span<const int64_t>(e);
        std::vector<int64_t> col;
        for (size_t r = 0; r < h.rows(); r++) {
            col.push_back(h(r, b));
        }
        o.expect(s == col, "single-bit syndrome " + std::to_string(b + 1) + " is not column of P");
        o.expect(std::find(singles.begin(), singles.end(), s) == singles.end(), "single-bit syndromes repeat");
        singles.push_back(s);
    }
    std::vector<int64_t> w = {1, 1, 1, 0, 0, 0, 0};
    o.expect(h * std::span<const int64_t>(w) == std::vector<int64_t>{0, 0, 0}, "P(e1+e2+e3) != 0");
    ClassicalMetrics m = classical_metrics({h});
    o.expect(m.n == 7 && m.k == 4 && m.distance == 3, "Hamming metrics " + m.to_string());
    return o;
}

Outcome distances() {
    Outcome o;
    struct Case {
        std::string name;
        PauliType type;
        size_t expected;
    };
    std::vector<Case> cases = {
        {"torus", PauliType::Z, 1},
        {"torus", PauliType::X, 2},
        {"rp2_halfsphere", PauliType::Z, 3},
        {"rp2_halfsphere", PauliType::X, 2},
    };
    std::string found;
    for (const auto &cs : cases) {
        CssCode code = css_from_chain(chain(cs.name), 2);
        Distance got = distance(code, cs.type);
        const ModMatrix &checks = cs.type == PauliType::Z ? code.p_x : code.p_z;
        const ModMatrix &stabs = cs.type == PauliType::Z ? code.p_z : code.p_x;
        size_t brute = oracle::coset_enumeration(testutil::to_mat(checks), testutil::to_mat(stabs), code.n(), 2)
                           .min_logical_weight;
        std::string tag = cs.name + " d_" + pauli_char(cs.type);
        found += (found.empty() ? "" : ", ") + tag + "=" + got.to_string() + "/" + std::to_string(brute);
        o.expect(got.kind == Distance::Kind::Exact && got.value == cs.expected,
                 tag + ": search gives " + got.to_string() + ", expected " + std::to_string(cs.expected));
        o.expect(brute == cs.expected,
                 tag + ": coset enumeration gives " + std::to_string(brute) + ", expected " +
                     std::to_string(cs.expected));
        o.expect(got.kind == Distance::Kind::Exact && got.value == brute, tag + ": search and enumeration disagree");
    }
    o.detail = o.pass ? found : o.detail + " (search/enumeration: " + found + ")";
    return o;
}

Outcome chain_properties() {
    Outcome o;
    auto check = [&](const ChainComplex &c, const std::string &tag) {
        if (auto v = verify(c)) {
            o.fail(tag + ": " + v->to_string());
        }
    };
    for (const auto &[name, x] : testutil::all_builtins()) {
        check(from_cell_complex(x), name);
    }
    std::mt19937_64 rng(50);
    for (int trial = 0; trial < 50; trial++) {
        testutil::RandomGluing g = testutil::random_polygon_gluing(rng);
        try {
            check(from_cell_complex(quotient(g.polygon, g.glue)), "gluing " + std::to_string(trial));
        } catch (const Error &e) {
            o.fail("gluing " + std::to_string(trial) + ": " + e.what());
        }
    }
    std::vector<CellComplex> one_dim;
    for (int64_t k = 1; k <= 3; k++) {
        one_dim.push_back(builtin("circle", k));
        one_dim.push_back(builtin("line", k));
    }
    for (const auto &a : one_dim) {
        for (const auto &b : one_dim) {
            check(tensor(from_cell_complex(a), from_cell_complex(b)), "chain tensor");
            check(from_cell_complex(tensor_product_1d(a, b)), "cell tensor");
        }
    }
    for (int64_t m = 1; m <= 3; m++) {
        for (int64_t n = 1; n <= 3; n++) {
            HomologyDecomposition h = homology_z(tensor(chain("circle", m), chain("circle", n)), 1);
            o.expect(h.free_rank == 2 && h.invariant_factors.empty(),
                     "circle(" + std::to_string(m) + ")⊗circle(" + std::to_string(n) + ") H1: " + h.to_string() +
                         " " + ints(h.invariant_factors));
        }
    }
    return o;
}

Outcome round_trip() {
    Outcome o;
    for (const auto &[name, x] : testutil::all_builtins()) {
        std::string text = serialize_acc(x);
        AccDocument doc = parse_acc(text);
        o.expect(doc.complex == x && serialize_acc(doc) == text, name + " does not round-trip");
    }
    auto run = [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return std::pair{code, out.str()};
    };
    for (const std::string name : {"torus", "rp2_halfsphere", "klein"}) {
        std::string path = (std::filesystem::temp_directory_path() / ("cellcss_acceptance_" + name + ".acc")).string();
        auto written = run({"builtin", name, "--out", path});
        o.expect(written.first == 0, "cannot write " + path);
        auto a = run({"css", path, "--d", "3", "--format", "json"});
        auto b = run({"css", path, "--d", "3", "--format", "json"});
        o.expect(a.first == 0 && !a.second.empty() && a.second == b.second, name + ": json differs between runs");
    }
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"golden boundary matrices", golden_matrices},
        {"homology goldens and H0 components", homology_goldens},
        {"rp2 kernel and image lattices", kernel_image_golden},
        {"logical space vs enumeration oracle", structure_theorem_vs_oracle},
        {"syndrome goldens", syndrome_goldens},
        {"stabilizer rendering", stabilizer_rendering},
        {"commutation", commutation},
        {"classical goldens", classical_goldens},
        {"distances by brute force", distances},
        {"chain and tensor properties", chain_properties},
        {"round trip and stable json", round_trip},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.pass;
        std::ostringstream line;
        line << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": " << criteria[i].first;
        if (!o.detail.empty()) {
            line << " (" << o.detail << ")";
        }
        line.precision(2);
        line << std::fixed << " [" << secs << "s]";
        std::cout << line.str() << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
