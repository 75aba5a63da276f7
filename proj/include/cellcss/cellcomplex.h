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

#ifndef CELLCSS_CELLCOMPLEX_H
#define CELLCSS_CELLCOMPLEX_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cellcss/intlinalg.h"

namespace cellcss {

/// A cell name with an orientation sign of +1 or -1.
struct OrientedRef {
    int sign = 1;
    std::string cell;

    OrientedRef negated() const {
        return {-sign, cell};
    }
    std::string to_string() const;
    bool operator==(const OrientedRef &other) const = default;
};

using BoundaryCircle = std::vector<OrientedRef>;

/// Traverses the circle backwards with every sign flipped.
BoundaryCircle negate_circle(const BoundaryCircle &circle);
/// Equality up to cyclic rotation.
bool circles_equal(const BoundaryCircle &a, const BoundaryCircle &b);
std::string circle_to_string(const BoundaryCircle &circle);

struct Edge {
    std::string name;
    std::string source;
    std::string target;
    bool operator==(const Edge &other) const = default;
};

struct Face {
    std::string name;
    BoundaryCircle boundary;
    bool operator==(const Face &other) const = default;
};

/// Finite abstract 2-dimensional cell complex. Cells keep their insertion order,
/// which fixes the basis order of every derived matrix.
struct CellComplex {
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<Face> faces;

    size_t cell_count() const {
        return vertices.size() + edges.size() + faces.size();
    }
    std::optional<size_t> vertex_index(const std::string &name) const;
    std::optional<size_t> edge_index(const std::string &name) const;
    std::optional<size_t> face_index(const std::string &name) const;

    /// Source and target of an oriented edge reference.
    std::string start_of(const OrientedRef &ref) const;
    std::string end_of(const OrientedRef &ref) const;

    bool operator==(const CellComplex &other) const = default;
};

template <typename T>
struct Glued {
    T a;
    T b;
    /// Source line of the directive, or 0 when built programmatically.
    int line = 0;
};

struct GluingSpec {
    std::vector<Glued<std::string>> vertex_pairs;
    std::vector<Glued<OrientedRef>> edge_pairs;
    std::vector<Glued<OrientedRef>> face_pairs;

    bool empty() const {
        return vertex_pairs.empty() && edge_pairs.empty() && face_pairs.empty();
    }
};

/// Returns one message per violated invariant, in cell order. Empty means valid.
std::vector<std::string> validate(const CellComplex &x);
/// Throws InvalidComplex carrying the first diagnostic.
void require_valid(const CellComplex &x);

/// Coherence closure of the gluing followed by the quotient. Each class keeps its
/// earliest member, positively oriented.
CellComplex quotient(const CellComplex &x, const GluingSpec &g);

/// Disjoint union. When any name is shared, every cell is renamed "L.name" or "R.name".
CellComplex direct_sum(const CellComplex &x, const CellComplex &y);

/// Product of two complexes without faces. Product cells are named "a_x_b".
CellComplex tensor_product_1d(const CellComplex &x, const CellComplex &y);

struct Components {
    size_t count = 0;
    /// Component index of each vertex, numbered by first appearance.
    std::vector<size_t> component_of;
};
Components connected_components(const CellComplex &x);

/// Lifts a binary parity check matrix with column weights 1 or 2 to a graph.
/// Weight-1 columns attach to an extra vertex "v_inf".
CellComplex lift_classical(const ModMatrix &parity);

/// Names: square, cylinder, moebius, torus, torus_filled, klein, rp2_square,
/// rp2_halfsphere, polygon_torsion (q >= 2), circle (n >= 1), line (n >= 1).
CellComplex builtin(const std::string &name, std::optional<int64_t> param = std::nullopt);
const std::vector<std::string> &builtin_names();
bool builtin_takes_param(const std::string &name);

}  // namespace cellcss

#endif
