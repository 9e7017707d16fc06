#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "amzeta/automata.hpp"
#include "amzeta/errors.hpp"
#include "amzeta/fixed_points.hpp"
#include "amzeta/numtheory.hpp"
#include "amzeta/witness.hpp"
#include "amzeta/zeta.hpp"
#include "map_spec_parse.hpp"

namespace amzeta::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

MethodRequest parse_method(const std::string& s) {
  if (s == "oracle") return MethodRequest::oracle;
  if (s == "closed") return MethodRequest::closed;
  if (s == "both") return MethodRequest::both;
  throw InvalidArgument("--method must be oracle, closed or both");
}

std::vector<std::uint64_t> index_range(std::uint64_t lo, std::uint64_t hi) {
  if (hi - lo >= 10'000'000) throw ResourceLimit("index range too long", std::to_string(hi - lo + 1));
  std::vector<std::uint64_t> ns(hi - lo + 1);
  std::iota(ns.begin(), ns.end(), lo);
  return ns;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit_dfao(const Dfao& a, const std::string& out_path, std::ostream& out) {
  const std::string text = dfao_to_json(a);
  if (out_path.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw InvalidArgument("cannot write '" + out_path + "'");
  f << text << '\n';
}

std::string symbol_string(const Symbol& s) {
  std::string r = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) r += ",";
    r += std::to_string(s[i]);
  }
  return r + "]";
}

std::vector<std::string> q_strings(std::span<const mpq_class> v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c.get_str());
  return out;
}

// -- an ------------------------------------------------------------------

struct AnOptions {
  std::string map;
  std::string n = "1..8";
  std::string method = "both";
  std::size_t degree_cap = kDefaultDegreeCap;
  bool exact_period = false;
  bool json = false;
};

void run_an(const AnOptions& o, std::ostream& out) {
  const MapSpec f = parse_map_spec(o.map);
  const auto [lo, hi] = parse_range(o.n);
  if (lo < 1) throw InvalidArgument("--n starts at 1");
  const auto ns = index_range(o.exact_period ? 1 : lo, hi);
  const FixSeq seq = compute_fix_seq(f, ns, parse_method(o.method), o.degree_cap);
  std::vector<PeriodCount> periods;
  if (o.exact_period) periods = exact_period_counts(seq);

  for (std::size_t i = 0; i < seq.entries.size(); ++i) {
    const FixEntry& e = seq.entries[i];
    if (e.n < lo) continue;
    if (o.json) {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["n"] = e.n;
      j["a_n"] = e.value.get_str();
      j["method"] = to_string(e.method);
      if (o.exact_period) j["b_n"] = periods[i].count.get_str();
      out << j.dump() << '\n';
    } else {
      out << "a_" << e.n << " = " << e.value.get_str();
      if (o.exact_period) out << "  b_" << e.n << " = " << periods[i].count.get_str();
      out << "  (" << to_string(e.method) << ")\n";
    }
  }
}

// -- zeta ----------------------------------------------------------------

struct ZetaOptions {
  std::string map;
  std::size_t order = 24;
  std::size_t max_order = 6;
  std::string method = "both";
  std::size_t degree_cap = kDefaultDegreeCap;
  bool detect = false;
  bool json = false;
};

void run_zeta(const ZetaOptions& o, std::ostream& out) {
  if (o.order < 1) throw InvalidArgument("--order must be at least 1");
  const MapSpec f = parse_map_spec(o.map);
  const auto ns = index_range(1, o.order);
  const FixSeq seq = compute_fix_seq(f, ns, parse_method(o.method), o.degree_cap);
  const ZetaSeries z = zeta_from_counts(seq, o.order);

  Json j;
  j["schema_version"] = kSchemaVersion;
  j["map"] = f.describe();
  j["order"] = o.order;
  j["coeffs"] = q_strings(z.coeffs);
  if (!o.json) {
    for (std::size_t k = 0; k < z.coeffs.size(); ++k) {
      out << "c_" << k << " = " << z.coeffs[k].get_str() << '\n';
    }
  }
  if (!o.detect) {
    if (o.json) out << j.dump() << '\n';
    return;
  }

  // The detector needs a window of twice the order it searches.
  const std::size_t L = std::min(o.max_order, o.order / 2);
  const auto rec = detect_linear_recurrence(std::span<const mpz_class>(z.counts), L);
  j["max_order"] = L;
  if (!rec) {
    j["recurrence"] = nullptr;
    if (o.json) {
      out << j.dump() << '\n';
    } else {
      out << "no linear recurrence of order <= " << L << " fits a_1..a_" << o.order << '\n';
    }
    return;
  }
  std::vector<mpq_class> initial(z.counts.begin(), z.counts.end());
  const RationalForms forms = recurrence_to_rational(*rec, initial);
  j["recurrence"] = {{"order", rec->order()}, {"coeffs", q_strings(rec->coeffs)}};
  j["generating"] = forms.generating.to_string();
  j["zeta"] = forms.zeta ? Json(forms.zeta->to_string()) : Json(nullptr);
  if (o.json) {
    out << j.dump() << '\n';
    return;
  }
  out << "recurrence: " << rec->to_string() << '\n';
  out << "sum a_n t^(n-1) = " << forms.generating.to_string() << '\n';
  if (forms.zeta) {
    out << "zeta = " << forms.zeta->to_string() << '\n';
  } else {
    out << "zeta: generating function is not a logarithmic derivative of a rational function\n";
  }
}

// -- dfao ----------------------------------------------------------------

struct DfaoOptions {
  unsigned p = 2;
  unsigned d = 2;
  std::uint64_t modulus = 2;
  std::string outputs;
  std::string accept;
  std::vector<std::string> files;
  std::string n = "1..16";
  std::uint64_t stride = 1;
  std::uint64_t offset = 0;
  std::string out_path;
  bool json = false;
};

Dfao load_dfao(const std::string& path) { return dfao_from_json(read_file(path)); }

void run_dfao_vp(const DfaoOptions& o, std::ostream& out) {
  if (!nt::is_prime(o.p)) throw InvalidArgument("--p must be prime");
  if (o.d < 1) throw InvalidArgument("--d must be at least 1");
  const auto outputs = parse_int_list(o.outputs);
  emit_dfao(build_vp_mod_dfao(o.p, o.d, outputs), o.out_path, out);
}

void run_dfao_congruence(const DfaoOptions& o, std::ostream& out) {
  if (o.p < 2) throw InvalidArgument("--p must be at least 2");
  if (o.modulus < 1) throw InvalidArgument("--mod must be at least 1");
  const auto targets = parse_uint_list(o.accept);
  emit_dfao(build_congruence_dfao(o.p, o.modulus, targets), o.out_path, out);
}

void run_dfao_run(const DfaoOptions& o, std::ostream& out) {
  if (o.files.size() != 1) throw InvalidArgument("dfao run takes one --file");
  const Dfao a = load_dfao(o.files.front());
  const auto [lo, hi] = parse_range(o.n);
  for (std::uint64_t n = lo;; ++n) {
    const Symbol& s = a.run(mpz_class(static_cast<unsigned long>(n)));
    if (o.json) {
      out << Json{{"schema_version", kSchemaVersion}, {"n", n}, {"output", s}}.dump() << '\n';
    } else {
      out << n << ": " << symbol_string(s) << '\n';
    }
    if (n == hi) break;
  }
}

void run_dfao_product(const DfaoOptions& o, std::ostream& out) {
  if (o.files.size() != 2) throw InvalidArgument("dfao product takes two --file options");
  emit_dfao(dfao_product(load_dfao(o.files[0]), load_dfao(o.files[1])), o.out_path, out);
}

void run_dfao_subsequence(const DfaoOptions& o, std::ostream& out) {
  if (o.files.size() != 1) throw InvalidArgument("dfao subsequence takes one --file");
  if (o.stride < 1) throw InvalidArgument("--a must be at least 1");
  emit_dfao(dfao_subsequence(load_dfao(o.files.front()), o.stride, o.offset), o.out_path, out);
}

// -- periodicity ---------------------------------------------------------

struct PeriodicityOptions {
  std::string values;
  std::string file;
  std::string n = "1..1024";
  std::size_t max_period = 64;
  std::size_t max_preperiod = 256;
  bool json = false;
};

void run_periodicity(const PeriodicityOptions& o, std::ostream& out) {
  std::vector<std::int64_t> seq;
  if (!o.file.empty()) {
    if (!o.values.empty()) throw InvalidArgument("give either --values or --file");
    const Dfao a = load_dfao(o.file);
    const auto [lo, hi] = parse_range(o.n);
    // Symbols are numbered by first appearance so that tuples compare as a whole.
    std::map<Symbol, std::int64_t> ids;
    for (std::uint64_t n = lo;; ++n) {
      const Symbol& s = a.run(mpz_class(static_cast<unsigned long>(n)));
      const auto [it, fresh] = ids.try_emplace(s, static_cast<std::int64_t>(ids.size()));
      seq.push_back(it->second);
      if (n == hi) break;
    }
  } else {
    seq = parse_int_list(o.values);
  }
  const auto found = detect_eventual_period(seq, o.max_preperiod, o.max_period);
  if (o.json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["terms"] = seq.size();
    j["max_preperiod"] = o.max_preperiod;
    j["max_period"] = o.max_period;
    if (found) {
      j["preperiod"] = found->preperiod;
      j["period"] = found->period;
    } else {
      j["preperiod"] = nullptr;
      j["period"] = nullptr;
    }
    out << j.dump() << '\n';
  } else if (found) {
    out << "eventually periodic: preperiod " << found->preperiod << ", period " << found->period
        << '\n';
  } else {
    out << "none: no preperiod <= " << o.max_preperiod << " with period <= " << o.max_period
        << " fits " << seq.size() << " terms\n";
  }
}

// -- witness -------------------------------------------------------------

struct WitnessOptions {
  std::uint64_t p = 3;
  std::uint64_t m = 3;
  std::uint64_t q = 3;
  std::string a = "1";
  std::uint64_t range = 64;
  std::uint64_t membership_range = 10'000;
  std::uint64_t max_period = 64;
  std::size_t degree_cap = kDefaultDegreeCap;
  bool json = false;
};

int print_report(const WitnessReport& r, bool json, std::ostream& out, std::ostream& err) {
  if (json) {
    out << witness_to_json(r) << '\n';
  } else {
    out << "scenario: " << r.scenario << '\n';
    for (const auto& [k, v] : r.params) out << "  " << k << " = " << v << '\n';
    out << "range: 1.." << r.range << '\n';
    for (const auto& id : r.identities) {
      out << (id.holds() ? "  [ok]   " : "  [FAIL] ") << id.name << ": " << id.verified << "/"
          << id.checked << '\n';
    }
    for (const auto& ce : r.counterexamples) {
      out << "  k=" << ce.k.get_str() << " n=" << ce.n.get_str() << " a=" << ce.a.get_str()
          << " n+ak=" << ce.n_plus_ak.get_str() << " v=(" << ce.v_left << "," << ce.v_right
          << ")\n";
    }
  }
  if (!r.all_hold()) {
    err << "witness: some identities failed\n";
    return kInternal;
  }
  return kOk;
}

int run_case1(const WitnessOptions& o, std::ostream& out, std::ostream& err) {
  WitnessReport r = case1_sequence(o.m, o.q, o.range, o.degree_cap);
  add_counterexamples(r, case1_setup(o.m, o.q), o.max_period);
  return print_report(r, o.json, out, err);
}

int run_case2(const WitnessOptions& o, std::ostream& out, std::ostream& err) {
  const Case2Params params = case2_setup(o.p, o.m);
  WitnessReport r = case2_sequence(params, o.range, o.membership_range);
  add_counterexamples(r, params, o.max_period);
  return print_report(r, o.json, out, err);
}

int run_thm2(const WitnessOptions& o, std::ostream& out, std::ostream& err) {
  if (o.p > 0xffffffffULL || o.m > kMaxExtensionDegree) {
    throw InvalidArgument("thm2 needs p < 2^32 and m <= " + std::to_string(kMaxExtensionDegree));
  }
  const FieldDesc& field =
      FieldDesc::get(static_cast<std::uint32_t>(o.p), static_cast<unsigned>(o.m));
  WitnessReport r = thm2_sequence(parse_element(o.a, field), o.range, o.degree_cap);
  add_counterexamples(r, thm2_setup(o.p, static_cast<unsigned>(o.m)), o.max_period);
  return print_report(r, o.json, out, err);
}

// -- census --------------------------------------------------------------

struct CensusOptions {
  std::string map;
  std::string field;
  bool json = false;
};

void run_census(const CensusOptions& o, std::ostream& out) {
  const MapSpec f = parse_map_spec(o.map);
  std::uint32_t p = f.field().characteristic();
  unsigned k = f.field().degree();
  if (!o.field.empty()) std::tie(p, k) = parse_field(o.field);
  const CycleCensus c = cycle_census(f.poly(), p, k);
  if (o.json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["field"] = std::to_string(p) + "^" + std::to_string(k);
    j["points"] = c.points;
    Json lengths = Json::object();
    for (const auto& [len, count] : c.cycle_lengths) lengths[std::to_string(len)] = count;
    j["cycle_lengths"] = std::move(lengths);
    j["periodic_points"] = c.periodic_points();
    j["tails"] = c.tails;
    j["components"] = c.components;
    out << j.dump() << '\n';
    return;
  }
  out << "field: F_" << p << "^" << k << " (" << c.points << " points)\n";
  out << "cycles:";
  for (const auto& [len, count] : c.cycle_lengths) out << ' ' << len << 'x' << count;
  out << '\n';
  out << "periodic points: " << c.periodic_points() << '\n';
  out << "tail points: " << c.tails << '\n';
  out << "components: " << c.components << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed-point counts, zeta series and automata for polynomial maps over F_p-bar",
               "amzeta"};
  app.require_subcommand(1);

  AnOptions an;
  auto* an_cmd = app.add_subcommand("an", "fixed-point counts a_n = #Fix(f^n)");
  an_cmd->add_option("--map", an.map, "map spec")->required();
  an_cmd->add_option("--n", an.n, "index or range lo..hi");
  an_cmd->add_option("--method", an.method, "oracle | closed | both");
  an_cmd->add_option("--degree-cap", an.degree_cap, "largest polynomial degree the oracle may build");
  an_cmd->add_flag("--exact-period", an.exact_period, "also print exact-period counts b_n");
  an_cmd->add_flag("--json", an.json, "one JSON object per line");

  ZetaOptions zo;
  auto* zeta_cmd = app.add_subcommand("zeta", "zeta series coefficients");
  zeta_cmd->add_option("--map", zo.map, "map spec")->required();
  zeta_cmd->add_option("--order", zo.order, "truncation order K");
  zeta_cmd->add_option("--max-order", zo.max_order, "largest recurrence order to try");
  zeta_cmd->add_option("--method", zo.method, "oracle | closed | both");
  zeta_cmd->add_option("--degree-cap", zo.degree_cap, "oracle degree cap");
  zeta_cmd->add_flag("--detect-rational", zo.detect, "search for a linear recurrence");
  zeta_cmd->add_flag("--json", zo.json, "JSON output");

  DfaoOptions dz;
  auto* dfao_cmd = app.add_subcommand("dfao", "build, combine and run automata");
  dfao_cmd->require_subcommand(1);
  auto* build_cmd = dfao_cmd->add_subcommand("build", "construct an automaton");
  build_cmd->require_subcommand(1);
  auto* vp_cmd = build_cmd->add_subcommand("vp-mod", "output indexed by v_p(n) mod d");
  vp_cmd->add_option("--p", dz.p, "prime base")->required();
  vp_cmd->add_option("--d", dz.d, "modulus of the valuation")->required();
  vp_cmd->add_option("--outputs", dz.outputs, "comma-separated outputs for residues 0..d-1");
  vp_cmd->add_option("--out", dz.out_path, "write JSON here instead of stdout");
  auto* cong_cmd = build_cmd->add_subcommand("congruence", "accepts n with n mod M in a set");
  cong_cmd->add_option("--p", dz.p, "digit base")->required();
  cong_cmd->add_option("--mod", dz.modulus, "modulus M")->required();
  cong_cmd->add_option("--accept", dz.accept, "comma-separated accepted residues")->required();
  cong_cmd->add_option("--out", dz.out_path, "write JSON here instead of stdout");
  auto* run_cmd = dfao_cmd->add_subcommand("run", "evaluate an automaton");
  run_cmd->add_option("--file", dz.files, "automaton JSON")->required();
  run_cmd->add_option("--n", dz.n, "index or range lo..hi");
  run_cmd->add_flag("--json", dz.json, "JSON lines");
  auto* prod_cmd = dfao_cmd->add_subcommand("product", "product automaton of two inputs");
  prod_cmd->add_option("--file", dz.files, "automaton JSON (give twice)")->required();
  prod_cmd->add_option("--out", dz.out_path, "write JSON here instead of stdout");
  auto* sub_cmd = dfao_cmd->add_subcommand("subsequence", "automaton for n -> A(a*n + b)");
  sub_cmd->add_option("--file", dz.files, "automaton JSON")->required();
  sub_cmd->add_option("--a", dz.stride, "stride")->required();
  sub_cmd->add_option("--b", dz.offset, "offset");
  sub_cmd->add_option("--out", dz.out_path, "write JSON here instead of stdout");

  PeriodicityOptions po;
  auto* per_cmd = app.add_subcommand("periodicity", "eventual-period detection on a prefix");
  per_cmd->add_option("--values", po.values, "comma-separated sequence");
  per_cmd->add_option("--file", po.file, "automaton JSON whose outputs form the sequence");
  per_cmd->add_option("--n", po.n, "index range for --file");
  per_cmd->add_option("--max-period", po.max_period, "largest period K");
  per_cmd->add_option("--max-preperiod", po.max_preperiod, "largest preperiod P");
  per_cmd->add_flag("--json", po.json, "JSON output");

  WitnessOptions wo;
  auto* wit_cmd = app.add_subcommand("witness", "finite-scale reduction witnesses");
  wit_cmd->require_subcommand(1);
  auto add_common = [&](CLI::App* c) {
    c->add_option("--range", wo.range, "check identities for 1 <= n <= range");
    c->add_option("--max-period", wo.max_period, "counterexamples for k = 1..K");
    c->add_flag("--json", wo.json, "JSON output");
  };
  auto* case1_cmd = wit_cmd->add_subcommand("case1", "x^m over F_2-bar, m odd");
  case1_cmd->add_option("--m", wo.m, "odd exponent m >= 3")->required();
  case1_cmd->add_option("--q", wo.q, "odd prime dividing m")->required();
  case1_cmd->add_option("--degree-cap", wo.degree_cap, "oracle degree cap");
  add_common(case1_cmd);
  auto* case2_cmd = wit_cmd->add_subcommand("case2", "x^m over F_p-bar, p odd");
  case2_cmd->add_option("--p", wo.p, "odd prime")->required();
  case2_cmd->add_option("--m", wo.m, "exponent not divisible by p")->required();
  case2_cmd->add_option("--membership-range", wo.membership_range,
                        "compare automaton and valuation membership up to this n");
  add_common(case2_cmd);
  auto* thm2_cmd = wit_cmd->add_subcommand("thm2", "x^(p^m) + a*x over F_p-bar, p odd");
  thm2_cmd->add_option("--p", wo.p, "odd prime")->required();
  thm2_cmd->add_option("--m", wo.m, "extension degree")->required();
  thm2_cmd->add_option("--a", wo.a, "nonzero element of F_(p^m)");
  thm2_cmd->add_option("--degree-cap", wo.degree_cap, "oracle degree cap");
  add_common(thm2_cmd);

  CensusOptions co;
  auto* census_cmd = app.add_subcommand("census", "functional graph of f on a finite field");
  census_cmd->add_option("--map", co.map, "map spec")->required();
  census_cmd->add_option("--field", co.field, "p^k; defaults to the map's field");
  census_cmd->add_flag("--json", co.json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArgument;
  }

  try {
    if (an_cmd->parsed()) run_an(an, out);
    if (zeta_cmd->parsed()) run_zeta(zo, out);
    if (vp_cmd->parsed()) run_dfao_vp(dz, out);
    if (cong_cmd->parsed()) run_dfao_congruence(dz, out);
    if (run_cmd->parsed()) run_dfao_run(dz, out);
    if (prod_cmd->parsed()) run_dfao_product(dz, out);
    if (sub_cmd->parsed()) run_dfao_subsequence(dz, out);
    if (per_cmd->parsed()) run_periodicity(po, out);
    if (case1_cmd->parsed()) return run_case1(wo, out, err);
    if (case2_cmd->parsed()) return run_case2(wo, out, err);
    if (thm2_cmd->parsed()) return run_thm2(wo, out, err);
    if (census_cmd->parsed()) run_census(co, out);
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kInvalidArgument;
  } catch (const DivisionByZero& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kInvalidArgument;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << " (required: " << e.required() << ")\n";
    return kResourceLimit;
  } catch (const SearchExhausted& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace amzeta::cli
