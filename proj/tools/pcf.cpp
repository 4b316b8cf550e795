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

// Command-line front end. Every subcommand emits a JSON payload (--json)
// or a short human rendering; payloads are validated against their schema
// before printing and are byte-stable for deterministic subcommands.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "pcf/jsonio.hpp"

namespace {

using pcf::CFWord;
using pcf::Int;
using pcf::Json;
using pcf::Mat2;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBudget = 2;

CFWord parse_word(const std::string& text) {
  CFWord w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::domain_error("empty digit in word: " + text);
    w.digits.push_back(Int(item));
  }
  if (w.empty()) throw std::domain_error("empty word");
  return w;
}

Mat2 parse_matrix(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) {
    throw std::domain_error("matrix must be a,b;c,d");
  }
  CFWord top = parse_word(text.substr(0, semi));
  CFWord bottom = parse_word(text.substr(semi + 1));
  if (top.size() != 2 || bottom.size() != 2) {
    throw std::domain_error("matrix must be a,b;c,d");
  }
  return Mat2(top.digits[0], top.digits[1], bottom.digits[0], bottom.digits[1]);
}

struct Output {
  bool json = false;
  std::string out_file;
  std::ostringstream buffer;

  void line(const std::string& s) { buffer << s << "\n"; }
  void emit_json(const Json& j) { buffer << j.dump() << "\n"; }

  int flush() {
    std::cout << buffer.str();
    if (!out_file.empty()) {
      std::ofstream f(out_file);
      if (!f) {
        std::cerr << "error: cannot open " << out_file << "\n";
        return kExitError;
      }
      f << buffer.str();
    }
    return kExitOk;
  }
};

void validate_or_die(const Json& payload,
                     const std::vector<pcf::SchemaField>& schema) {
  std::string err;
  if (!pcf::validate_against(payload, schema, &err)) {
    throw std::logic_error("payload failed schema validation: " + err);
  }
}

Json schema_to_json(const std::vector<pcf::SchemaField>& schema) {
  Json fields = Json::array();
  for (const auto& f : schema) {
    Json jf;
    jf["key"] = f.key;
    jf["type"] = f.type;
    jf["required"] = f.required;
    fields.push_back(jf);
  }
  Json out;
  out["schema_version"] = 1;
  out["fields"] = fields;
  return out;
}

// Per-subcommand payload schemas, dumped by --schema and enforced on emit.
const std::vector<pcf::SchemaField> kExpandSchema = {
    {"kind", "string", true},  {"input", "string", true},
    {"word", "array", false},  {"preperiod", "array", false},
    {"period", "array", false}, {"text", "string", true}};
const std::vector<pcf::SchemaField> kEvalSchema = {
    {"word", "array", true}, {"value", "object", true}, {"field", "int", true}};
const std::vector<pcf::SchemaField> kFieldSchema = {{"word", "array", true},
                                                    {"discr", "int", true},
                                                    {"field", "int", true},
                                                    {"cofactor", "int", true}};
const std::vector<pcf::SchemaField> kFactorizeSchema = {
    {"matrix", "array", true}, {"word", "array", true}};
const std::vector<pcf::SchemaField> kPellSchema = {{"delta", "int", true},
                                                   {"solution", "object", true},
                                                   {"unit", "object", false},
                                                   {"traces", "array", false}};
const std::vector<pcf::SchemaField> kConstructSchema = {
    {"spec", "object", false},   {"word", "array", false},
    {"field", "int", false},     {"instance", "object", false},
    {"s", "int", false}};
const std::vector<pcf::SchemaField> kCertifyRowSchema = {
    {"n", "int", true},     {"word", "array", true},  {"length", "int", true},
    {"discr", "int", true}, {"field", "int", true},   {"cofactor", "int", true},
    {"field_ok", "bool", true}, {"digits_ok", "bool", true}};
const std::vector<pcf::SchemaField> kZarembaSchema = {
    {"q", "int", true}, {"m", "int", true}, {"constrained", "bool", true},
    {"found", "bool", true}, {"p", "int", false}, {"word", "array", false}};
const std::vector<pcf::SchemaField> kConj12RowSchema = {
    {"delta", "int", true},   {"resolved", "bool", true},
    {"witness", "array", false}, {"visited", "int", true},
    {"pell_index", "int", true}};
const std::vector<pcf::SchemaField> kDensitySchema = {
    {"N", "int", true},
    {"count_squarefree", "int", true},
    {"count_bounded", "int", true},
    {"bound_m", "int", true}};
const std::vector<pcf::SchemaField> kFibSchema = {
    {"rows", "array", true},
    {"divisibility", "array", true},
    {"padic", "array", true},
    {"truncated", "bool", true}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"periodic continued fractions in real quadratic fields"};
  app.require_subcommand(1);

  Output out;
  unsigned threads = 1;
  std::uint64_t seed = 12345;
  bool dump_schema = false;
  app.add_flag("--json", out.json, "machine-readable JSON output");
  app.add_option("--threads", threads, "worker threads for search subcommands");
  app.add_option("--seed", seed, "seed for randomized subcommands");
  app.add_option("--out", out.out_file, "also write the output to a file");
  app.add_flag("--schema", dump_schema, "print the subcommand's payload schema");

  // expand
  std::string expand_arg;
  auto* cmd_expand = app.add_subcommand(
      "expand", "continued fraction of num/den or of a surd p,q,d,r");
  cmd_expand->add_option("value", expand_arg)->required();

  // eval
  std::string eval_arg;
  auto* cmd_eval =
      app.add_subcommand("eval", "value of a purely periodic word");
  cmd_eval->add_option("word", eval_arg)->required();

  // field
  std::string field_arg;
  auto* cmd_field =
      app.add_subcommand("field", "quadratic field of a periodic word");
  cmd_field->add_option("word", field_arg)->required();

  // factorize
  std::string fact_arg;
  auto* cmd_fact = app.add_subcommand(
      "factorize", "generator word of a positive matrix a,b;c,d");
  cmd_fact->add_option("matrix", fact_arg)->required();

  // pell
  std::string pell_delta;
  bool pell_pm4 = false, pell_unit = false;
  unsigned pell_traces = 0;
  auto* cmd_pell = app.add_subcommand("pell", "fundamental Pell solutions");
  cmd_pell->add_option("delta", pell_delta)->required();
  cmd_pell->add_flag("--pm4", pell_pm4, "solve x^2 - delta y^2 = +-4");
  cmd_pell->add_flag("--unit", pell_unit, "include the unit matrix");
  cmd_pell->add_option("--traces", pell_traces, "list Tr(U^n) for n = 1..N");

  // construct
  auto* cmd_construct =
      app.add_subcommand("construct", "build a certified family or word");
  cmd_construct->require_subcommand(1);

  std::string mn_m, mn_n, mn_seed;
  bool mn_random = false;
  std::string mn_max_digit = "4";
  auto* cc_mn = cmd_construct->add_subcommand("mn", "B A^n C tA^n family");
  cc_mn->add_option("--m-word", mn_m, "symmetric word for M");
  cc_mn->add_option("--n-word", mn_n, "symmetric word for N");
  cc_mn->add_option("--seed-word", mn_seed, "quasi-palindromic seed word");
  cc_mn->add_flag("--random", mn_random, "random symmetric seed (uses --seed)");
  cc_mn->add_option("--max-digit", mn_max_digit, "digit cap for --random");

  std::string ij_i, ij_j = "1", ij_pattern;
  unsigned ij_n = 0;
  int ij_variant = 1;
  auto* cc_ij = cmd_construct->add_subcommand("ij", "i/j template families");
  cc_ij->add_option("--i", ij_i)->required();
  cc_ij->add_option("--j", ij_j);
  cc_ij->add_option("--pattern", ij_pattern, "palindromic pattern");
  cc_ij->add_option("--n", ij_n)->required();
  cc_ij->add_option("--variant", ij_variant,
                    "1 = i-powers, 2 = with j, 3 = with pattern");

  std::string sym_pattern;
  unsigned sym_n = 0;
  auto* cc_sym = cmd_construct->add_subcommand("sym", "symmetric-pattern family");
  cc_sym->add_option("--pattern", sym_pattern, "palindromic pattern (may be empty)");
  cc_sym->add_option("--n", sym_n)->required();

  std::string s12_delta;
  unsigned s12_n = 0;
  auto* cc_12s = cmd_construct->add_subcommand("12s", "three-digit {1,2,s} family");
  cc_12s->add_option("--delta", s12_delta)->required();
  cc_12s->add_option("--n", s12_n)->required();

  std::string wil_s;
  unsigned wil_n = 0;
  std::string wil_variant = "original";
  auto* cc_wil = cmd_construct->add_subcommand("wilson", "Wilson-type family");
  cc_wil->add_option("--s", wil_s)->required();
  cc_wil->add_option("--n", wil_n)->required();
  cc_wil->add_option("--variant", wil_variant, "original | small-digits");

  std::string za, zb, zc, zdelta;
  auto* cc_zar = cmd_construct->add_subcommand(
      "zaremba", "periodic word from a rational and a Pell pair");
  cc_zar->add_option("--a", za)->required();
  cc_zar->add_option("--b", zb)->required();
  cc_zar->add_option("--c", zc)->required();
  cc_zar->add_option("--delta", zdelta)->required();

  // certify
  std::string certify_file;
  unsigned certify_nmax = 4;
  auto* cmd_certify =
      app.add_subcommand("certify", "verify a family spec for n = 0..nmax");
  cmd_certify->add_option("spec", certify_file, "family spec JSON file")->required();
  cmd_certify->add_option("--nmax", certify_nmax);

  // zaremba
  std::string zq, zm = "5";
  bool z_constrained = false;
  auto* cmd_zar = app.add_subcommand("zaremba", "bounded-digit numerator search");
  cmd_zar->add_option("q", zq)->required();
  cmd_zar->add_option("--m", zm, "digit bound");
  cmd_zar->add_flag("--constrained", z_constrained, "alphabet {1,2}, endpoints 2");

  // verify-conj12
  std::string vc_max = "60", vc_resume;
  std::uint64_t vc_budget = 800'000'000;
  auto* cmd_vc = app.add_subcommand(
      "verify-conj12", "search {1,2}-digit periodic words per field");
  cmd_vc->add_option("--max", vc_max, "scan squarefree delta < max");
  cmd_vc->add_option("--budget", vc_budget, "DFS node budget per delta");
  cmd_vc->add_option("--resume", vc_resume, "checkpoint file (read + write)");

  // density
  std::string dn_N = "2000", dn_m = "50";
  auto* cmd_density =
      app.add_subcommand("density", "squarefree n^2-1 sieve + bounded words");
  cmd_density->add_option("--N", dn_N);
  cmd_density->add_option("--m", dn_m);

  // fib
  unsigned fib_max = 30;
  auto* cmd_fib = app.add_subcommand("fib", "Fibonacci fields and divisibility");
  cmd_fib->add_option("--max", fib_max);

  // Global flags (--json, --threads, ...) are accepted after subcommands too.
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_expand->parsed()) {
      if (dump_schema) {
        out.emit_json(schema_to_json(kExpandSchema));
        return out.flush();
      }
      Json payload;
      payload["kind"] = "";
      payload["input"] = expand_arg;
      std::string text;
      if (expand_arg.find('/') != std::string::npos) {
        auto pos = expand_arg.find('/');
        Int num(expand_arg.substr(0, pos));
        Int den(expand_arg.substr(pos + 1));
        CFWord w = pcf::expand_rational(num, den);
        payload["kind"] = "rational";
        payload["word"] = pcf::word_to_json(w);
        std::ostringstream os;
        os << "[" << w.digits[0];
        for (std::size_t i = 1; i < w.size(); ++i) {
          os << (i == 1 ? "; " : ", ") << w.digits[i];
        }
        os << "]";
        text = os.str();
      } else {
        CFWord parts = parse_word(expand_arg);
        if (parts.size() != 4) {
          throw std::domain_error("surd must be p,q,d,r");
        }
        pcf::QuadraticSurd x(parts.digits[0], parts.digits[1], parts.digits[2],
                             parts.digits[3]);
        pcf::CFExpansion e = pcf::expand_surd(x);
        payload["kind"] = "surd";
        payload["preperiod"] = pcf::word_to_json(e.preperiod);
        payload["period"] = pcf::word_to_json(e.period);
        text = e.str();
      }
      payload["text"] = text;
      validate_or_die(payload, kExpandSchema);
      if (out.json) {
        out.emit_json(payload);
      } else {
        out.line(text);
      }
      return out.flush();
    }

    if (cmd_eval->parsed()) {
      if (dump_schema) {
        out.emit_json(schema_to_json(kEvalSchema));
        return out.flush();
      }
      CFWord w = parse_word(eval_arg);
      pcf::QuadraticSurd x = pcf::eval_periodic(w);
      Json payload;
      payload["word"] = pcf::word_to_json(w);
      payload["value"] = pcf::surd_to_json(x);
      payload["field"] = pcf::int_to_json(x.d());
      validate_or_die(payload, kEvalSchema);
      if (out.json) {
        out.emit_json(payload);
      } else {
        out.line(x.str());
      }
      return out.flush();
    }

    if (cmd_field->parsed()) {
      if (dump_schema) {
        out.emit_json(schema_to_json(kFieldSchema));
        return out.flush();
      }
      CFWord w = parse_word(field_arg);
      pcf::FieldInfo fi =
          pcf::discr_and_field(pcf::word_to_matrix(pcf::normalize(w)));
      Json payload;
      payload["word"] = pcf::word_to_json(w);
      payload["discr"] = pcf::int_to_json(fi.discr);
      payload["field"] = pcf::int_to_json(fi.field);
      payload["cofactor"] = pcf::int_to_json(fi.cofactor);
      validate_or_die(payload, kFieldSchema);
      if (out.json) {
        out.emit_json(payload);
      } else {
        out.line(fi.field.str());
      }
      return out.flush();
    }

    if (cmd_fact->parsed()) {
      if (dump_schema) {
        out.emit_json(schema_to_json(kFactorizeSchema));
        return out.flush();
      }
      Mat2 m = parse_matrix(fact_arg);
      CFWord w = pcf::factorize(m);
      Json payload;
      payload["matrix"] = pcf::mat2_to_json(m);
      payload["word"] = pcf::word_to_json(w);
      validate_or_die(payload, kFactorizeSchema);
      if (out.json) {
        out.emit_json(payload);
      } else {
        out.line(w.str());
      }
      return out.flush();
    }

    if (cmd_pell->parsed()) {
      if (dump_schema) {
        out.emit_json(schema_to_json(kPellSchema));
        return out.flush();
      }
      Int delta(pell_delta);
      pcf::PellSolution sol =
          pell_pm4 ? pcf::fundamental_pm4(delta) : pcf::fundamental_pm1(delta);
      Json payload;
      payload["delta"] = pcf::int_to_json(delta);
      payload["solution"] = pcf::pell_to_json(sol);
      if (pell_unit || pell_traces > 0) {
        payload["unit"] = pcf::unit_matrix_to_json(pcf::unit_matrix(delta));
      }
      if (pell_traces > 0) {
        Json traces = Json::array();
        for (const Int& t : pcf::trace_solutions(delta, pell_traces)) {
          traces.push_back(pcf::int_to_json(t));
        }
        payload["traces"] = traces;
      }
      validate_or_die(payload, kPellSchema);
      if (out.json) {
        out.emit_json(payload);
      } else {
        std::ostringstream os;
        os << "x=" << sol.x << " y=" << sol.y << " rhs=" << sol.rhs;
        out.line(os.str());
      }
      return out.flush();
    }

    if (cmd_construct->parsed()) {
      if (dump_schema) {
        out.emit_json(schema_to_json(kConstructSchema));
        return out.flush();
      }
      Json payload;
      std::string human;
      if (cc_mn->parsed()) {
        pcf::FamilySpec spec;
        if (mn_random) {
          std::mt19937_64 rng(seed);
          int cap = std::stoi(mn_max_digit);
          std::uniform_int_distribution<int> digit(1, cap);
          std::uniform_int_distribution<int> half_len(0, 2);
          auto palindrome = [&](bool odd_len) {
            std::vector<Int> half;
            int h = half_len(rng);
            for (int i = 0; i < h; ++i) half.push_back(digit(rng));
            std::vector<Int> w(half);
            if (odd_len) w.push_back(digit(rng));
            for (auto it = half.rbegin(); it != half.rend(); ++it) {
              w.push_back(*it);
            }
            return CFWord{std::move(w)};
          };
          CFWord mw = palindrome(true);  // odd length: determinant -1
          CFWord nw = palindrome(half_len(rng) % 2 == 0);
          spec = pcf::mn_construct(pcf::word_to_matrix(mw),
                                   pcf::word_to_matrix(nw));
        } else if (!mn_seed.empty()) {
          spec = pcf::mn_from_seed(parse_word(mn_seed));
        } else if (!mn_m.empty() && !mn_n.empty()) {
          spec = pcf::mn_construct(pcf::word_to_matrix(parse_word(mn_m)),
                                   pcf::word_to_matrix(parse_word(mn_n)));
        } else {
          throw std::domain_error(
              "construct mn: need --seed-word, --random, or --m-word + --n-word");
        }
        payload["spec"] = pcf::family_spec_to_json(spec);
        human = "field " + spec.field.str() + ", B=[" + spec.B_word.str() +
                "], C=[" + spec.C_word.str() + "], A=[" + spec.A_word.str() + "]";
      } else if (cc_ij->parsed()) {
        pcf::IjmTemplate variant = ij_variant == 1 ? pcf::IjmTemplate::PlainPowers
                                   : ij_variant == 2 ? pcf::IjmTemplate::WithJ
                                                     : pcf::IjmTemplate::WithPattern;
        CFWord pattern;
        if (!ij_pattern.empty()) pattern = parse_word(ij_pattern);
        pcf::CertifiedWord cw =
            pcf::suites_ijM(Int(ij_i), Int(ij_j), pattern, ij_n, variant);
        payload["word"] = pcf::word_to_json(cw.word);
        payload["field"] = pcf::int_to_json(cw.field);
        human = "[" + cw.word.str() + "] in Q[sqrt(" + cw.field.str() + ")]";
      } else if (cc_sym->parsed()) {
        CFWord pattern;
        if (!sym_pattern.empty()) pattern = parse_word(sym_pattern);
        pcf::CertifiedWord cw = pcf::suite_sym(pattern, sym_n);
        payload["word"] = pcf::word_to_json(cw.word);
        payload["field"] = pcf::int_to_json(cw.field);
        human = "[" + cw.word.str() + "] in Q[sqrt(" + cw.field.str() + ")]";
      } else if (cc_12s->parsed()) {
        pcf::Suite12sResult r = pcf::suite_12s(Int(s12_delta), s12_n);
        payload["s"] = pcf::int_to_json(r.s);
        payload["word"] = pcf::word_to_json(r.word);
        payload["field"] = pcf::int_to_json(r.field);
        human = "s=" + r.s.str() + " [" + r.word.str() + "] in Q[sqrt(" +
                r.field.str() + ")]";
      } else if (cc_wil->parsed()) {
        pcf::WilsonVariant variant = wil_variant == "original"
                                         ? pcf::WilsonVariant::Original
                                         : pcf::WilsonVariant::SmallDigits;
        pcf::CertifiedWord cw = pcf::wilson_family(Int(wil_s), wil_n, variant);
        payload["word"] = pcf::word_to_json(cw.word);
        payload["field"] = pcf::int_to_json(cw.field);
        human = "[" + cw.word.str() + "] in Q[sqrt(" + cw.field.str() + ")]";
      } else if (cc_zar->parsed()) {
        pcf::ZarembaInstance inst =
            pcf::zaremba_to_periodic(Int(za), Int(zb), Int(zc), Int(zdelta));
        payload["instance"] = pcf::zaremba_instance_to_json(inst);
        payload["word"] = pcf::word_to_json(inst.word);
        payload["field"] =
            pcf::int_to_json(pcf::squarefree_split(inst.delta).delta);
        human = "[" + inst.word.str() + "] = " + inst.surd.str();
      }
      validate_or_die(payload, kConstructSchema);
      if (out.json) {
        out.emit_json(payload);
      } else {
        out.line(human);
      }
      return out.flush();
    }

    if (cmd_certify->parsed()) {
      if (dump_schema) {
        out.emit_json(schema_to_json(kCertifyRowSchema));
        return out.flush();
      }
      std::ifstream in(certify_file);
      if (!in) throw std::domain_error("cannot open " + certify_file);
      Json doc = Json::parse(in);
      pcf::FamilySpec spec = pcf::family_spec_from_json(doc);
      pcf::CertifyReport rep = pcf::certify_family(spec, certify_nmax, threads);
      for (const auto& row : rep.rows) {
        Json jr = pcf::certify_row_to_json(row);
        validate_or_die(jr, kCertifyRowSchema);
        if (out.json) {
          out.emit_json(jr);
        } else {
          std::ostringstream os;
          os << "n=" << row.n << " length=" << row.length << " field="
             << row.field << (row.field_ok && row.digits_ok ? " ok" : " FAIL");
          out.line(os.str());
        }
      }
      Json summary;
      summary["ok"] = rep.ok;
      if (!rep.ok) summary["failure"] = rep.failure;
      if (out.json) {
        out.emit_json(summary);
      } else {
        out.line(rep.ok ? "certified" : "FAILED: " + rep.failure);
      }
      int rc = out.flush();
      return rc != kExitOk ? rc : (rep.ok ? kExitOk : kExitError);
    }

    if (cmd_zar->parsed()) {
      if (dump_schema) {
        out.emit_json(schema_to_json(kZarembaSchema));
        return out.flush();
      }
      pcf::ZarembaResult res = z_constrained
                                   ? pcf::zaremba_constrained(Int(zq))
                                   : pcf::zaremba_search(Int(zq), Int(zm));
      Json payload = pcf::zaremba_result_to_json(res);
      validate_or_die(payload, kZarembaSchema);
      if (out.json) {
        out.emit_json(payload);
      } else if (res.p) {
        out.line("p=" + res.p->str() + " word=[" + res.word->str() + "]");
      } else {
        out.line("absent");
      }
      return out.flush();
    }

    if (cmd_vc->parsed()) {
      if (dump_schema) {
        out.emit_json(schema_to_json(kConj12RowSchema));
        return out.flush();
      }
      pcf::Conj12Report rep =
          pcf::verify_conj12(Int(vc_max), vc_budget, vc_resume, threads);
      for (const auto& row : rep.rows) {
        Json jr = pcf::conj12_row_to_json(row);
        validate_or_die(jr, kConj12RowSchema);
        if (out.json) {
          out.emit_json(jr);
        } else {
          std::ostringstream os;
          os << "delta=" << row.delta << " "
             << (row.resolved ? "witness=[" + row.witness.str() + "]"
                              : "unresolved")
             << " visited=" << row.visited;
          out.line(os.str());
        }
      }
      if (!out.json) {
        out.line(rep.all_resolved ? "all resolved" : "budget exhausted somewhere");
      }
      int rc = out.flush();
      return rc != kExitOk ? rc : (rep.all_resolved ? kExitOk : kExitBudget);
    }

    if (cmd_density->parsed()) {
      if (dump_schema) {
        out.emit_json(schema_to_json(kDensitySchema));
        return out.flush();
      }
      pcf::DensityReport rep = pcf::density_scan(Int(dn_N), Int(dn_m), threads);
      Json payload = pcf::density_to_json(rep);
      validate_or_die(payload, kDensitySchema);
      if (out.json) {
        out.emit_json(payload);
      } else {
        std::ostringstream os;
        os << "squarefree=" << rep.count_squarefree
           << " bounded=" << rep.count_bounded << " (N=" << rep.N
           << ", m=" << rep.bound_m << ")";
        out.line(os.str());
      }
      return out.flush();
    }

    if (cmd_fib->parsed()) {
      if (dump_schema) {
        out.emit_json(schema_to_json(kFibSchema));
        return out.flush();
      }
      pcf::FibReport rep = pcf::fib_fields(fib_max);
      Json payload = pcf::fib_report_to_json(rep);
      validate_or_die(payload, kFibSchema);
      if (out.json) {
        out.emit_json(payload);
      } else {
        for (const auto& row : rep.rows) {
          std::ostringstream os;
          os << "n=" << row.n << " f_n=" << row.fib_n << " f_{n+2}="
             << row.fib_n2 << " field=" << row.field;
          out.line(os.str());
        }
      }
      return out.flush();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
