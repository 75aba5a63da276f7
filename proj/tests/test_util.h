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

#ifndef CELLCSS_TESTS_TEST_UTIL_H
#define CELLCSS_TESTS_TEST_UTIL_H

#include <random>

#include "cellcss/cellcomplex.h"
#include "cellcss/chaincomplex.h"
#include "cellcss/intlinalg.h"
#include "oracles.h"

namespace testutil {

inline oracle::Mat to_mat(const cellcss::IntMatrix &m) {
    oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out[r][c] = m(r, c).get_si();
        }
    }
    return out;
}

inline oracle::Mat to_mat(const cellcss::ModMatrix &m) {
    return to_mat(m.lift());
}

inline cellcss::IntMatrix from_mat(const oracle::Mat &m, size_t cols) {
    cellcss::IntMatrix out(m.size(), cols);
    for (size_t r = 0; r < m.size(); r++) {
        for (size_t c = 0; c < cols; c++) {
            out(r, c) = static_cast<long>(m[r][c]);
        }
    }
    return out;
}

inline cellcss::IntMatrix column_matrix(const std::vector<std::vector<long>> &cols, size_t rows) {
    cellcss::IntMatrix out(rows, cols.size());
    for (size_t c = 0; c < cols.size(); c++) {
        for (size_t r = 0; r < rows; r++) {
            out(r, c) = cols[c][r];
        }
    }
    return out;
}

/// Column spans agree as lattices.
inline bool same_lattice(const cellcss::IntMatrix &a, const cellcss::IntMatrix &b) {
    for (size_t c = 0; c < b.cols(); c++) {
        if (!cellcss::in_lattice(a, b.column(c))) {
            return false;
        }
    }
    for (size_t c = 0; c < a.cols(); c++) {
        if (!cellcss::in_lattice(b, a.column(c))) {
            return false;
        }
    }
    return true;
}

/// Two triangles sharing the diagonal e2 of a square.
inline cellcss::CellComplex two_triangle_square() {
    cellcss::CellComplex x;
    x.vertices = {"v1", "v2", "v3", "v4"};
    x.edges = {{"e1", "v1", "v2"}, {"e2", "v2", "v4"}, {"e3", "v4", "v1"}, {"e4", "v2", "v3"}, {"e5", "v3", "v4"}};
    x.faces = {{"f1", {{1, "e1"}, {1, "e2"}, {1, "e3"}}}, {"f2", {{-1, "e2"}, {1, "e4"}, {1, "e5"}}}};
    return x;
}

/// Every builtin, with small parameters for the parametrized ones.
inline std::vector<std::pair<std::string, cellcss::CellComplex>> all_builtins() {
    std::vector<std::pair<std::string, cellcss::CellComplex>> out;
    for (const auto &name : cellcss::builtin_names()) {
        if (!cellcss::builtin_takes_param(name)) {
            out.emplace_back(name, cellcss::builtin(name));
        }
    }
    for (int q = 2; q <= 6; q++) {
        out.emplace_back("polygon_torsion(" + std::to_string(q) + ")", cellcss::builtin("polygon_torsion", q));
    }
    for (int n = 1; n <= 4; n++) {
        out.emplace_back("circle(" + std::to_string(n) + ")", cellcss::builtin("circle", n));
        out.emplace_back("line(" + std::to_string(n) + ")", cellcss::builtin("line", n));
    }
    return out;
}

/// A random polygon with 2..max_sides edges, the edges oriented at random and then
/// glued pairwise with random signs that are forced to be coherent.
struct RandomGluing {
    cellcss::CellComplex polygon;
    cellcss::GluingSpec glue;
};

inline RandomGluing random_polygon_gluing(std::mt19937_64 &rng, int max_sides = 8) {
    std::uniform_int_distribution<int> sides_dist(2, max_sides);
    const int sides = sides_dist(rng);
    RandomGluing out;
    for (int i = 0; i < sides; i++) {
        out.polygon.vertices.push_back("v" + std::to_string(i + 1));
    }
    cellcss::Face face{"f1", {}};
    for (int i = 0; i < sides; i++) {
        std::string a = out.polygon.vertices[i];
        std::string b = out.polygon.vertices[(i + 1) % sides];
        std::string name = "e" + std::to_string(i + 1);
        if (rng() % 2) {
            out.polygon.edges.push_back({name, a, b});
            face.boundary.push_back({1, name});
        } else {
            out.polygon.edges.push_back({name, b, a});
            face.boundary.push_back({-1, name});
        }
    }
    out.polygon.faces.push_back(face);
    std::vector<int> order(sides);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 0; i + 1 < sides; i += 2) {
        if (rng() % 3 == 0) {
            continue;
        }
        out.glue.edge_pairs.push_back(
            {{1, out.polygon.edges[order[i]].name}, {rng() % 2 ? 1 : -1, out.polygon.edges[order[i + 1]].name}});
    }
    return out;
}

}  // namespace testutil

#endif
