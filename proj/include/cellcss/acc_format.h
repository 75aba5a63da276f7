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

#ifndef CELLCSS_ACC_FORMAT_H
#define CELLCSS_ACC_FORMAT_H

#include <string>

#include "cellcss/cellcomplex.h"

namespace cellcss {

/// Text form of a cell complex plus gluing directives, one statement per line:
///
///     # comment
///     vertex v1
///     edge e1 v1 v2
///     face f1 e1 -e2 +e3
///     glue vertex v1 v2
///     glue edge e1 -e3
///     glue face f1 -f2
///
/// Statements may come in any order; references are resolved after the whole text
/// has been read.
struct AccDocument {
    CellComplex complex;
    GluingSpec glue;
};

/// Throws ParseError with the line number.
AccDocument parse_acc(const std::string &text);
std::string serialize_acc(const CellComplex &x, const GluingSpec &glue = {});
std::string serialize_acc(const AccDocument &doc);

bool is_valid_name(const std::string &name);

/// Validates the raw complex and applies its gluing unless apply_glue is false.
CellComplex resolve(const AccDocument &doc, bool apply_glue = true);

}  // namespace cellcss

#endif
