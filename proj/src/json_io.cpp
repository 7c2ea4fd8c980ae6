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


#include "mulmap/json_io.hpp"

#include <string>

#include "mulmap/error.hpp"

namespace mulmap {

namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kParseError, "malformed document: " + what);
}

const Json& Get(const Json& j, const char* key) {
  if (!j.is_object()) Malformed(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) Malformed(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t GetSize(const Json& j, const char* key) {
  const Json& v = Get(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    Malformed(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

long GetLong(const Json& j, const char* key) {
  const Json& v = Get(j, key);
  if (!v.is_number_integer()) Malformed(std::string("\"") + key + "\" must be an integer");
  return v.get<long>();
}

std::string GetString(const Json& j, const char* key) {
  const Json& v = Get(j, key);
  if (!v.is_string()) Malformed(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

FieldElem ScalarFromJson(const Json& v, const FieldDescriptor& fd) {
  if (v.is_string()) return parse_scalar(v.get<std::string>(), fd);
  if (v.is_number_integer()) return FieldElem::FromInt(fd, v.get<long>());
  Malformed("scalars must be strings or integers");
}

Matrix EntriesFromJson(const Json& rows, std::size_t n, const FieldDescriptor& fd) {
  if (!rows.is_array() || rows.size() != n) Malformed("\"entries\" must hold n rows");
  std::vector<FieldElem> entries;
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != n) Malformed("every row must hold n entries");
    for (const Json& v : row) entries.push_back(ScalarFromJson(v, fd));
  }
  return Matrix(n, fd, std::move(entries));
}

Json HomToJson(const RingHom& h) {
  if (h.is_registered()) return std::string(hom_name(h.kind()));
  return Json{{"sampled", table_to_json(h.table())}};
}

const char* EpsName(Eps e) { return e == Eps::kPlain ? "plain" : "cofactor"; }

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON", e.byte == 0 ? 0 : e.byte - 1);
  }
}

Json field_to_json(const FieldDescriptor& fd) {
  if (!fd.is_quadratic()) return Json{{"kind", "rational"}};
  return Json{{"kind", "quadratic"}, {"d", fd.d()}};
}

FieldDescriptor field_from_json(const Json& j) {
  if (j.is_string()) return FieldDescriptor::FromString(j.get<std::string>());
  const std::string kind = GetString(j, "kind");
  if (kind == "rational") return FieldDescriptor::Rational();
  if (kind == "quadratic") return FieldDescriptor::Quadratic(GetLong(j, "d"));
  Malformed("unknown field kind \"" + kind + "\"");
}

Json entries_to_json(const Matrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.n(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.n(); ++j) row.push_back(format_scalar(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_to_json(const Matrix& a) {
  return Json{{"field", field_to_json(a.field())}, {"n", a.n()}, {"entries", entries_to_json(a)}};
}

Matrix matrix_from_json(const Json& j) {
  const FieldDescriptor fd = j.contains("field") ? field_from_json(j["field"]) : FieldDescriptor::Rational();
  const Json& rows = Get(j, "entries");
  const std::size_t n = j.contains("n") ? GetSize(j, "n") : rows.size();
  return EntriesFromJson(rows, n, fd);
}

Json word_to_json(const TransvectionWord& w) {
  Json gens = Json::array();
  for (const ElementaryGen& g : w) {
    switch (g.kind) {
      case GenKind::kTransvection:
        gens.push_back({{"type", "P"}, {"i", g.i}, {"j", g.j}, {"k", format_scalar(g.k)}});
        break;
      case GenKind::kDiagUnit:
        gens.push_back({{"type", "D"}, {"i", g.i}, {"k", format_scalar(g.k)}});
        break;
      case GenKind::kSwap:
        gens.push_back({{"type", "S"}, {"i", g.i}, {"j", g.j}});
        break;
    }
  }
  return Json{{"gens", std::move(gens)}};
}

TransvectionWord word_from_json(const Json& j, const FieldDescriptor& fd) {
  const Json& gens = Get(j, "gens");
  if (!gens.is_array()) Malformed("\"gens\" must be an array");
  TransvectionWord w;
  for (const Json& g : gens) {
    const std::string type = GetString(g, "type");
    if (type == "P") {
      w.push_back(ElementaryGen::P(GetSize(g, "i"), GetSize(g, "j"), ScalarFromJson(Get(g, "k"), fd)));
    } else if (type == "D") {
      w.push_back(ElementaryGen::D(GetSize(g, "i"), ScalarFromJson(Get(g, "k"), fd)));
    } else if (type == "S") {
      w.push_back(ElementaryGen::S(GetSize(g, "i"), GetSize(g, "j"), fd));
    } else {
      Malformed("unknown generator type \"" + type + "\"");
    }
  }
  return w;
}

Json character_to_json(const ScalarCharacter& c) {
  Json out = Json::array();
  for (const auto& [h, p] : c.factors()) out.push_back({{"phi", hom_name(h)}, {"pow", p}});
  return out;
}

ScalarCharacter character_from_json(const Json& j) {
  if (!j.is_array()) Malformed("a character is an array of {\"phi\", \"pow\"} factors");
  ScalarCharacter c;
  for (const Json& f : j) {
    HomKind h = hom_kind_from_name(GetString(f, "phi"));
    if (h == HomKind::kSampled) Malformed("characters use registered homs only");
    c = c * ScalarCharacter::Power(GetLong(f, "pow"), h);
  }
  return c;
}

Json table_to_json(const RingHom::Table& t) {
  Json out = Json::array();
  for (const auto& [x, y] : t) out.push_back(Json::array({format_scalar(x), format_scalar(y)}));
  return out;
}

Json expr_to_json(const MapExpr& e) {
  Json atoms = Json::array();
  for (const MapAtom& atom : e.atoms) {
    if (const auto* c = std::get_if<ConjAtom>(&atom)) {
      atoms.push_back({{"atom", "conj"}, {"R", matrix_to_json(c->r)}});
    } else if (std::holds_alternative<CofAtom>(atom)) {
      atoms.push_back({{"atom", "cof"}});
    } else if (const auto* h = std::get_if<HomAtom>(&atom)) {
      atoms.push_back({{"atom", "hom"}, {"phi", HomToJson(h->phi)}});
    } else if (const auto* d = std::get_if<DetScaleAtom>(&atom)) {
      atoms.push_back({{"atom", "detscale"}, {"lambda", character_to_json(d->lambda)}});
    } else {
      const auto& t = std::get<TrivialDetAtom>(atom);
      Json chars = Json::array();
      for (const auto& ch : t.chars) chars.push_back(character_to_json(ch));
      atoms.push_back({{"atom", "trivialdet"}, {"chars", chars}, {"zeroPad", t.zero_pad}, {"onePad", t.one_pad}});
    }
  }
  return Json{{"n", e.n}, {"field", field_to_json(e.field)}, {"atoms", atoms}, {"order", "apply-last-first"}};
}

MapExpr expr_from_json(const Json& j) {
  MapExpr e{GetSize(j, "n"), field_from_json(Get(j, "field")), {}};
  if (j.contains("order") && j["order"] != "apply-last-first") Malformed("\"order\" must be \"apply-last-first\"");
  const Json& atoms = Get(j, "atoms");
  if (!atoms.is_array()) Malformed("\"atoms\" must be an array");
  for (const Json& a : atoms) {
    const std::string kind = GetString(a, "atom");
    if (kind == "conj") {
      Matrix r = matrix_from_json(Get(a, "R"));
      e.atoms.push_back(ConjAtom{std::move(r)});
    } else if (kind == "cof") {
      e.atoms.push_back(CofAtom{});
    } else if (kind == "hom") {
      const std::string name = GetString(a, "phi");
      HomKind h = hom_kind_from_name(name);
      if (h == HomKind::kSampled) Malformed("expressions use registered homs only");
      e.atoms.push_back(HomAtom{h == HomKind::kIdentity ? RingHom::Identity() : RingHom::QuadConjugation()});
    } else if (kind == "detscale") {
      e.atoms.push_back(DetScaleAtom{character_from_json(Get(a, "lambda"))});
    } else if (kind == "trivialdet") {
      TrivialDetAtom t;
      const Json& chars = Get(a, "chars");
      if (!chars.is_array()) Malformed("\"chars\" must be an array");
      for (const Json& c : chars) t.chars.push_back(character_from_json(c));
      t.zero_pad = a.contains("zeroPad") ? GetSize(a, "zeroPad") : 0;
      t.one_pad = a.contains("onePad") ? GetSize(a, "onePad") : 0;
      e.atoms.push_back(std::move(t));
    } else {
      Malformed("unknown atom \"" + kind + "\"");
    }
  }
  e.validate();
  return e;
}

Json form_to_json(const CanonicalForm& f) {
  Json out{{"class", map_class_name(f.cls)}, {"n", f.n}, {"k", f.k}, {"field", field_to_json(f.field)}};
  if (f.cls == MapClass::kTrivial) {
    out["phi"] = nullptr;
    out["lambda"] = nullptr;
    out["eps"] = nullptr;
    out["R"] = nullptr;
    if (f.trivial_table) {
      Json table = Json::array();
      for (const auto& [x, img] : *f.trivial_table) table.push_back(Json::array({format_scalar(x), entries_to_json(img)}));
      out["chars"] = Json{{"sampled", table}};
    } else {
      Json chars = Json::array();
      for (const auto& c : f.chars) chars.push_back(character_to_json(c));
      out["chars"] = chars;
    }
    out["zeroPad"] = f.zero_pad;
    out["onePad"] = f.one_pad;
    return out;
  }
  out["phi"] = HomToJson(f.phi);
  out["lambda"] = f.lambda_table ? Json{{"sampled", table_to_json(*f.lambda_table)}} : character_to_json(f.lambda);
  out["eps"] = EpsName(f.eps);
  out["R"] = f.r ? matrix_to_json(*f.r) : Json(nullptr);
  return out;
}

Json report_to_json(const ClassifyReport& r) {
  Json out = form_to_json(r.form);
  out["s"] = r.s;
  out["l"] = r.l;
  out["preConjugator"] = matrix_to_json(r.pre_conjugator);
  out["flagged"] = r.flagged;
  out["verifiedSamples"] = r.verified_samples;
  Json log = Json::array();
  for (const ProbeRecord& p : r.probe_log) log.push_back({{"in", entries_to_json(p.input)}, {"out", entries_to_json(p.output)}});
  out["probeLog"] = std::move(log);
  return out;
}

Json verdict_to_json(const Verdict& v) {
  Json out{{"pass", v.pass}, {"samples", v.samples}, {"seed", v.seed}};
  if (v.counterexample) {
    Json cx{{"A", matrix_to_json(v.counterexample->a)}};
    cx["B"] = v.counterexample->b ? matrix_to_json(*v.counterexample->b) : Json(nullptr);
    out["counterexample"] = std::move(cx);
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

}  // namespace mulmap
