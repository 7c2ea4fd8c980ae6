// Copyright 2026 The mulmap Authors
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

// JSON documents for fields, matrices, words, expressions, reports and
// verdicts. Scalars are written as strings in the parse_scalar grammar; keys
// are emitted in sorted order.

#ifndef MULMAP_JSON_IO_HPP_
#define MULMAP_JSON_IO_HPP_

#include <string_view>

#include "json.hpp"
#include "mulmap/classify.hpp"
#include "mulmap/verify.hpp"

namespace mulmap {

using Json = nlohmann::json;

// Parses text; syntax errors become ParseError with the byte offset.
Json parse_json(std::string_view text);

Json field_to_json(const FieldDescriptor& fd);
FieldDescriptor field_from_json(const Json& j);

// {"field": ..., "n": ..., "entries": [[...]]}
Json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const Json& j);
// Bare entry rows, as used in probe logs.
Json entries_to_json(const Matrix& a);

Json word_to_json(const TransvectionWord& w);
TransvectionWord word_from_json(const Json& j, const FieldDescriptor& fd);

Json character_to_json(const ScalarCharacter& c);
ScalarCharacter character_from_json(const Json& j);

Json table_to_json(const RingHom::Table& t);

Json expr_to_json(const MapExpr& e);
MapExpr expr_from_json(const Json& j);

Json form_to_json(const CanonicalForm& f);
Json report_to_json(const ClassifyReport& r);
Json verdict_to_json(const Verdict& v);

}  // namespace mulmap

#endif  // MULMAP_JSON_IO_HPP_
