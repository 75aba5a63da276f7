# Copyright 2026 The cellcss Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import itertools

import pytest

import cellcss


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def test_builtins_are_chain_complexes():
    for name in cellcss.builtin_names():
        try:
            x = cellcss.builtin(name)
        except cellcss.CellcssError:
            x = cellcss.builtin(name, 3)
        c = cellcss.chain_complex(x)
        assert c.verify()
        if c.top_degree == 2 and c.rank(2) and c.rank(0):
            product = matmul(c.boundary(1), c.boundary(2))
            assert all(v == 0 for row in product for v in row)


def test_toric_matrices_and_homology():
    c = cellcss.chain_complex(cellcss.builtin("torus"))
    assert c.boundary(2) == [[0, 0], [0, 0], [-1, 1], [1, -1], [1, -1]]
    assert c.boundary(1) == [[-1, 1, 0, 0, 0], [1, -1, 0, -1, 1], [0, 0, 0, 1, -1]]
    h = cellcss.homology(c, 1)
    assert h["free_rank"] == 2
    assert h["invariant_factors"] == []


def test_rp2_torsion_and_logical_space():
    c = cellcss.chain_complex(cellcss.builtin("rp2_halfsphere"))
    assert cellcss.homology(c, 1)["invariant_factors"] == [2]
    ls = cellcss.logical_space(c, 2)
    assert ls["free_qudits"] == 1
    assert ls["text"] == "k' = 1 qudit(s) of dimension 2; torsion: none"
    assert cellcss.logical_space(c, 3)["order"] == 1


def test_css_code_operations():
    code = cellcss.css_code(cellcss.chain_complex(cellcss.builtin("rp2_halfsphere")), 5)
    assert code.n == 6
    assert cellcss.syndrome(code, "z", [1, 0, 2, 0, 0, 0]) == [4, 4, 2]
    assert "Z^-1 ⊗ Z ⊗ Z^-1 ⊗ Z ⊗ Z ⊗ Z^-1" in cellcss.render_stabilizers(code)
    for row in code.p_z:
        assert cellcss.classify(code, "z", row) == "stabilizer"
    d2 = cellcss.css_code(cellcss.chain_complex(cellcss.builtin("rp2_halfsphere")), 2)
    dz = cellcss.distance(d2, "z")
    assert dz["kind"] == "exact" and dz["value"] == 3
    assert cellcss.classify(d2, "z", dz["witness"]) == "logical"
    assert cellcss.distance(code, "x", jobs=2)["kind"] == "no-logical"


def test_commutes_matches_phase_sum():
    for d in (2, 3, 5):
        for z, x in itertools.product(itertools.product(range(d), repeat=2), repeat=2):
            ok, phase = cellcss.commutes(list(z), list(x), d)
            expected = sum(a * b for a, b in zip(z, x)) % d
            assert phase == expected
            assert ok == (expected == 0)


def test_smith_and_hermite_with_big_integers():
    big = 10**30
    assert cellcss.smith_form([[2, 4], [6, 8]])["factors"] == [2, 4]
    s = cellcss.smith_form([[big, 0], [0, 3 * big]])
    assert s["factors"] == [big, 3 * big]
    assert matmul(matmul(s["u"], [[big, 0], [0, 3 * big]]), s["v"]) == s["s"]
    h = cellcss.hermite_form([[big, big + 1]])
    assert h in ([[big, big + 1]], [[-big, -big - 1]])
    k = cellcss.kernel_basis([[1, 1, 1]])
    assert len(k) == 2
    assert all(sum(v) == 0 for v in k)


def test_acc_round_trip_and_errors():
    x = cellcss.builtin("klein")
    assert cellcss.parse_acc(x.to_acc()) == x
    with pytest.raises(cellcss.CellcssError, match="line 2"):
        cellcss.parse_acc("vertex v1\nface f1\n")
    with pytest.raises(ValueError):
        cellcss.builtin("dodecahedron")


def test_products_and_sums():
    c3 = cellcss.chain_complex(cellcss.builtin("circle", 3))
    c2 = cellcss.chain_complex(cellcss.builtin("circle", 2))
    t = cellcss.tensor(c3, c2)
    assert cellcss.homology(t, 1)["free_rank"] == 2
    assert cellcss.homology(t, 2)["free_rank"] == 1
    cell = cellcss.cell_tensor(cellcss.builtin("circle", 3), cellcss.builtin("circle", 2))
    assert cellcss.chain_complex(cell).boundary(2) == t.boundary(2)
    s = cellcss.direct_sum(c3, c2)
    assert cellcss.homology(s, 0)["free_rank"] == 2
    d = cellcss.dual(cellcss.chain_complex(cellcss.builtin("torus")))
    assert d.boundary(1) == [list(r) for r in zip(*cellcss.chain_complex(cellcss.builtin("torus")).boundary(2))]
