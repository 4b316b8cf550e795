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

#ifndef PCF_JSONIO_HPP
#define PCF_JSONIO_HPP

#include <json.hpp>

#include "pcf/families.hpp"
#include "pcf/matmonoid.hpp"
#include "pcf/pell.hpp"
#include "pcf/searchlab.hpp"

namespace pcf {

using Json = nlohmann::ordered_json;

// Unbounded integers are emitted as JSON numbers when they fit in 64 bits
// and as decimal strings otherwise, so payloads stay lossless.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json word_to_json(const CFWord& w);
CFWord word_from_json(const Json& j);

Json expansion_to_json(const CFExpansion& e);  // {"preperiod":[...],"period":[...]}

Json mat2_to_json(const Mat2& m);  // [[a,b],[c,d]]
Mat2 mat2_from_json(const Json& j);

Json surd_to_json(const QuadraticSurd& x);  // {"p":..,"q":..,"d":..,"r":..,"text":..}

Json rank1_to_json(const Rank1Factorization& f);  // {"P":word,"e":int,"Q":word}

Json pell_to_json(const PellSolution& s);  // {"x":..,"y":..,"rhs":..}

Json unit_matrix_to_json(const UnitMatrix& u);

Json family_spec_to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const Json& j);

Json certify_row_to_json(const CertifyRow& row);

Json zaremba_instance_to_json(const ZarembaInstance& z);

Json zaremba_result_to_json(const ZarembaResult& r);

Json conj12_row_to_json(const Conj12Row& row);

Json density_to_json(const DensityReport& r);

Json fib_report_to_json(const FibReport& r);

/// Minimal structural validation: every payload emitted by the CLI is
/// checked against its subcommand schema before printing.
struct SchemaField {
  const char* key;
  const char* type;  // "int" | "string" | "bool" | "array" | "object" | "number"
  bool required;
};

bool validate_against(const Json& payload, const std::vector<SchemaField>& schema,
                      std::string* error);

}  // namespace pcf

#endif  // PCF_JSONIO_HPP
