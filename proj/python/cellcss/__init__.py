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

"""Cell complexes, integer homology and qudit CSS codes."""

from cellcss._core import (
    CellComplex,
    CellcssError,
    ChainComplex,
    CssCode,
    builtin,
    builtin_names,
    cell_direct_sum,
    cell_tensor,
    chain_complex,
    classify,
    commutes,
    css_code,
    direct_sum,
    distance,
    dual,
    hermite_form,
    homology,
    kernel_basis,
    logical_space,
    parse_acc,
    render_stabilizers,
    serialize_acc,
    smith_form,
    syndrome,
    tensor,
)

__all__ = [
    "CellComplex",
    "CellcssError",
    "ChainComplex",
    "CssCode",
    "builtin",
    "builtin_names",
    "cell_direct_sum",
    "cell_tensor",
    "chain_complex",
    "classify",
    "commutes",
    "css_code",
    "direct_sum",
    "distance",
    "dual",
    "hermite_form",
    "homology",
    "kernel_basis",
    "logical_space",
    "parse_acc",
    "render_stabilizers",
    "serialize_acc",
    "smith_form",
    "syndrome",
    "tensor",
]
