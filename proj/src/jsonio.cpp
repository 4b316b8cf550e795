// Copyright 2026 The pcf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pcf/jsonio.hpp"

#include <limits>

namespace pcf {

namespace {

const Int kI64Min = Int(std::numeric_limits<std::int64_t>::min());
const Int kI64Max = Int(std::numeric_limits<std::int64_t>::max());

}  // namespace

Json int_to_json(const Int& v) {
  if (v >= kI64Min && v <= kI64Max) return v.convert_to<std::int64_t>();
  return v.str();
}

Int int_from_json(const Json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<std::int64_t>());
}

Json word_to_json(const CFWord& w) {
  Json arr = Json::array();
  for (const Int& d : w.digits) arr.push_back(int_to_json(d));
  return arr;
}

CFWord word_from_json(const Json& j) {
  CFWord w;
  for (const auto& d : j) w.digits.push_back(int_from_json(d));
  return w;
}

Json expansion_to_json(const CFExpansion& e) {
  Json out;
  out["preperiod"] = word_to_json(e.preperiod);
  out["period"] = word_to_json(e.period);
  return out;
}

Json mat2_to_json(const Mat2& m) {
  return Json::array({Json::array({int_to_json(m.a), int_to_json(m.b)}),
                      Json::array({int_to_json(m.c), int_to_json(m.d)})});
}

Mat2 mat2_from_json(const Json& j) {
  return Mat2(int_from_json(j[0][0]), int_from_json(j[0][1]),
              int_from_json(j[1][0]), int_from_json(j[1][1]));
}

Json surd_to_json(const QuadraticSurd& x) {
  Json out;
  out["p"] = int_to_json(x.p());
  out["q"] = int_to_json(x.q());
  out["d"] = int_to_json(x.d());
  out["r"] = int_to_json(x.r());
  out["text"] = x.str();
  return out;
}

Json rank1_to_json(const Rank1Factorization& f) {
  Json out;
  out["P"] = word_to_json(f.p_word);
  out["e"] = int_to_json(f.e);
  out["Q"] = word_to_json(f.q_word);
  return out;
}

Json pell_to_json(const PellSolution& s) {
  Json out;
  out["x"] = int_to_json(s.x);
  out["y"] = int_to_json(s.y);
  out["rhs"] = s.rhs;
  return out;
}

Json unit_matrix_to_json(const UnitMatrix& u) {
  Json out;
  out["U"] = mat2_to_json(u.U);
  out["delta"] = int_to_json(u.delta);
  out["power"] = u.power;
  return out;
}

Json family_spec_to_json(const FamilySpec& spec) {
  Json out;
  out["B"] = word_to_json(spec.B_word);
  out["C"] = word_to_json(spec.C_word);
  out["A"] = word_to_json(spec.A_word);
  out["transposeC"] = spec.transpose_C;
  out["field"] = int_to_json(spec.field);
  out["bound"] = int_to_json(spec.max_digit_bound);
  out["provenance"] = provenance_name(spec.provenance);
  return out;
}

FamilySpec family_spec_from_json(const Json& j) {
  FamilySpec spec;
  spec.B_word = word_from_json(j.at("B"));
  spec.C_word = word_from_json(j.at("C"));
  spec.A_word = word_from_json(j.at("A"));
  spec.transpose_C = j.value("transposeC", false);
  spec.field = int_from_json(j.at("field"));
  spec.max_digit_bound = int_from_json(j.at("bound"));
  std::string prov = j.value("provenance", "mn");
  for (Provenance p :
       {Provenance::MN, Provenance::SuitesIjM, Provenance::SuiteSym,
        Provenance::Suite12s, Provenance::Wilson, Provenance::Zaremba}) {
    if (provenance_name(p) == prov) spec.provenance = p;
  }
  return spec;
}

Json certify_row_to_json(const CertifyRow& row) {
  Json out;
  out["n"] = row.n;
  out["word"] = word_to_json(row.word);
  out["length"] = row.length;
  out["discr"] = int_to_json(row.discr);
  out["field"] = int_to_json(row.field);
  out["cofactor"] = int_to_json(row.cofactor);
  out["field_ok"] = row.field_ok;
  out["digits_ok"] = row.digits_ok;
  return out;
}

Json zaremba_instance_to_json(const ZarembaInstance& z) {
  Json out;
  out["a"] = int_to_json(z.a);
  out["b"] = int_to_json(z.b);
  out["c"] = int_to_json(z.c);
  out["delta"] = int_to_json(z.delta);
  out["word"] = word_to_json(z.word);
  out["surd"] = surd_to_json(z.surd);
  out["matrix"] = mat2_to_json(z.product);
  out["sign"] = z.sign;
  return out;
}

Json zaremba_result_to_json(const ZarembaResult& r) {
  Json out;
  out["q"] = int_to_json(r.q);
  out["m"] = int_to_json(r.m);
  out["constrained"] = r.constrained;
  out["found"] = r.p.has_value();
  if (r.p) {
    out["p"] = int_to_json(*r.p);
    out["word"] = word_to_json(*r.word);
  }
  return out;
}

Json conj12_row_to_json(const Conj12Row& row) {
  Json out;
  out["delta"] = int_to_json(row.delta);
  out["resolved"] = row.resolved;
  if (row.resolved) {
    out["witness"] = word_to_json(row.witness);
    out["a"] = int_to_json(row.a);
    out["b"] = int_to_json(row.b);
    out["c"] = int_to_json(row.c);
  }
  out["visited"] = row.visited;
  out["pell_index"] = row.pell_index;
  return out;
}

Json density_to_json(const DensityReport& r) {
  Json out;
  out["N"] = int_to_json(r.N);
  out["count_squarefree"] = int_to_json(r.count_squarefree);
  out["count_bounded"] = int_to_json(r.count_bounded);
  out["bound_m"] = int_to_json(r.bound_m);
  return out;
}

Json fib_report_to_json(const FibReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr;
    jr["n"] = row.n;
    jr["fib_n"] = int_to_json(row.fib_n);
    jr["fib_n_plus_2"] = int_to_json(row.fib_n2);
    jr["field"] = int_to_json(row.field);
    rows.push_back(jr);
  }
  Json divs = Json::array();
  for (const auto& d : r.div_checks) {
    Json jd;
    jd["p"] = d.p;
    jd["group_order"] = int_to_json(d.group_order);
    jd["divides"] = d.divides;
    divs.push_back(jd);
  }
  Json pads = Json::array();
  for (const auto& p : r.padic_checks) {
    Json jp;
    jp["p"] = p.p;
    jp["n"] = p.n;
    jp["valuation"] = p.val;
    jp["step_holds"] = p.step_holds;
    pads.push_back(jp);
  }
  Json out;
  out["rows"] = rows;
  out["divisibility"] = divs;
  out["padic"] = pads;
  out["truncated"] = r.truncated;
  if (r.truncated) out["notice"] = r.notice;
  return out;
}

bool validate_against(const Json& payload, const std::vector<SchemaField>& schema,
                      std::string* error) {
  for (const auto& field : schema) {
    if (!payload.contains(field.key)) {
      if (field.required) {
        if (error) *error = std::string("missing required key: ") + field.key;
        return false;
      }
      continue;
    }
    const Json& v = payload.at(field.key);
    std::string t = field.type;
    bool ok = (t == "int" && (v.is_number_integer() || v.is_string())) ||
              (t == "number" && v.is_number()) ||
              (t == "string" && v.is_string()) ||
              (t == "bool" && v.is_boolean()) ||
              (t == "array" && v.is_array()) ||
              (t == "object" && v.is_object());
    if (!ok) {
      if (error) {
        *error = std::string("key ") + field.key + " has wrong type";
      }
      return false;
    }
  }
  return true;
}

}  // namespace pcf
