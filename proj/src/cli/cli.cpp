#include "dtrip/cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dtrip/hypothesis/hypothesis.hpp"
#include "dtrip/search/search.hpp"
#include "json.hpp"

namespace dtrip::cli {

namespace {

using nlohmann::ordered_json;

std::string dec(const Integer& v) { return v.get_str(); }
std::string dec(const Rational& v) { return v.get_str(); }

ordered_json coords_json(const std::vector<Rational>& c) {
  ordered_json a = ordered_json::array();
  for (const auto& v : c) a.push_back(dec(v));
  return a;
}

ordered_json ints_json(const std::vector<Integer>& c) {
  ordered_json a = ordered_json::array();
  for (const auto& v : c) a.push_back(dec(v));
  return a;
}

ordered_json longs_json(const std::vector<long>& c) {
  ordered_json a = ordered_json::array();
  for (long v : c) a.push_back(std::to_string(v));
  return a;
}

ordered_json box_json(const ComplexBox& b) {
  ordered_json j;
  j["re_lo"] = to_decimal(b.re_lo, 20);
  j["re_hi"] = to_decimal(b.re_hi, 20);
  if (!b.is_real()) {
    j["im_lo"] = to_decimal(b.im_lo, 20);
    j["im_hi"] = to_decimal(b.im_hi, 20);
  }
  return j;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  ordered_json input = ordered_json::object();
  ordered_json result = ordered_json::object();
  std::string status = "ok";
  std::optional<Table> table;
  // replaces the generic key: value rendering in plain mode
  std::optional<std::string> plain;
  int exit_code = ExitCode::ok;
};

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += scalar_text(v[i]);
    }
    return s;
  }
  return v.dump();
}

void render_plain(std::ostream& os, const ordered_json& obj, const std::string& prefix) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      render_plain(os, *it, key);
    } else if (it->is_array() && !it->empty() && (*it)[0].is_object()) {
      for (std::size_t i = 0; i < it->size(); ++i) render_plain(os, (*it)[i], key + "[" + std::to_string(i) + "]");
    } else {
      os << key << ": " << scalar_text(*it) << "\n";
    }
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void render(std::ostream& os, const std::string& format, const std::string& command, const Output& o) {
  if (format == "json") {
    ordered_json j;
    j["command"] = command;
    j["input"] = o.input;
    j["result"] = o.result;
    j["status"] = o.status;
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    if (o.table) {
      for (std::size_t i = 0; i < o.table->header.size(); ++i) os << (i ? "," : "") << o.table->header[i];
      os << "\n";
      for (const auto& row : o.table->rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << "\n";
      }
    } else {
      std::ostringstream flat;
      render_plain(flat, o.result, "");
      os << "key,value\n";
      std::istringstream lines(flat.str());
      std::string line;
      while (std::getline(lines, line)) {
        auto pos = line.find(": ");
        os << csv_cell(line.substr(0, pos)) << "," << csv_cell(line.substr(pos + 2)) << "\n";
      }
    }
  } else if (o.plain) {
    os << *o.plain << "\n";
  } else {
    render_plain(os, o.result, "");
    os << "status: " << o.status << "\n";
  }
}

struct PolyInput {
  std::string poly;
  std::string coeffs;

  void add_to(CLI::App* app) {
    auto* p = app->add_option("--poly", poly, "polynomial, e.g. \"x^3-x-1\"");
    auto* c = app->add_option("--coeffs", coeffs, "ascending integer coefficients, e.g. -1,-1,0,1");
    p->excludes(c);
  }

  IntPoly get(ordered_json& input) const {
    if (poly.empty() && coeffs.empty()) throw DomainError("one of --poly or --coeffs is required");
    IntPoly p = poly.empty() ? parse_coeff_list(coeffs) : parse_int_poly(poly);
    input["poly"] = to_string(p);
    return p;
  }
};

struct SpecInput {
  PolyInput poly;
  std::string init;

  void add_to(CLI::App* app) {
    poly.add_to(app);
    app->add_option("--init", init, "initial values F_0,...,F_{k-1}")->required();
  }

  RecurrenceSpec get(ordered_json& input) const {
    IntPoly p = poly.get(input);
    auto v = parse_integer_list(init);
    input["init"] = ints_json(v);
    return make_spec(std::move(p), std::move(v));
  }
};

std::pair<long, long> parse_range(const std::string& s) {
  auto v = parse_integer_list(s);
  if (v.size() != 2) throw DomainError("range must be LO,HI, got '" + s + "'");
  if (!v[0].fits_slong_p() || !v[1].fits_slong_p()) throw DomainError("range bound too large: '" + s + "'");
  return {v[0].get_si(), v[1].get_si()};
}

ordered_json verdict_json(const SquarenessVerdict& v, const FieldPtr& witness_field) {
  ordered_json j;
  j["status"] = to_string(v.status);
  if (v.obstruction) j["obstruction"] = to_string(*v.obstruction);
  if (v.witness) {
    j["witness"] = coords_json(v.witness->coords());
    j["witness_field"] = v.witness_in_base_field ? "Q(alpha)" : "splitting field";
    if (!v.witness_in_base_field && witness_field) j["witness_field_poly"] = to_string(witness_field->defining_poly());
  }
  if (v.norm) j["norm"] = dec(*v.norm);
  if (v.degree_ratio) j["degree_ratio"] = std::to_string(*v.degree_ratio);
  if (v.embedding_index) j["embedding_index"] = std::to_string(*v.embedding_index);
  if (v.splitting_degree) j["splitting_degree"] = std::to_string(*v.splitting_degree);
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    Integer n = parse_integer(v);
    if (!n.fits_slong_p()) throw DomainError("");
    return n.get_si();
  } catch (const DomainError&) {
    throw DomainError(std::string("environment variable ") + name + " is not an integer: '" + v + "'");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::stop_token stop) {
  CLI::App app{"Pisot recurrences, number fields and Diophantine triple search", "dtrip"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "plain";
  std::string out_file;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--out", out_file, "write output to FILE");

  std::string command;
  std::function<Output()> action;
  auto bind = [&](CLI::App* sub, std::string name, std::function<Output()> fn) {
    sub->callback([&, name = std::move(name), fn = std::move(fn)] {
      command = name;
      action = fn;
    });
  };

  // pisot
  auto* pisot = app.add_subcommand("pisot", "Pisot certification and families");
  pisot->require_subcommand(1);
  PolyInput certify_poly;
  unsigned long certify_bits = 64;
  auto* certify = pisot->add_subcommand("certify", "certify the Pisot property");
  certify_poly.add_to(certify);
  certify->add_option("--bits", certify_bits, "initial isolation precision in bits");
  bind(certify, "pisot certify", [&] {
    Output o;
    IntPoly p = certify_poly.get(o.input);
    PisotResult r = certify_pisot(p, certify_bits);
    if (auto* rej = std::get_if<PisotRejection>(&r)) {
      o.status = "rejected";
      o.result["accepted"] = false;
      o.result["reason"] = to_string(*rej);
      return o;
    }
    const auto& c = std::get<PisotCertificate>(r);
    o.result["accepted"] = true;
    o.result["degree"] = std::to_string(p.degree());
    o.result["dominant"] = box_json(c.dominant_box);
    o.result["dominant_approx"] = describe(c.dominant_box, 20);
    ordered_json conj = ordered_json::array();
    for (const auto& b : c.conjugate_boxes) {
      ordered_json bj = box_json(b);
      bj["modulus_upper"] = to_decimal(sqrt_upper(b.modulus_sq_upper(), 64), 12);
      conj.push_back(bj);
    }
    o.result["conjugates"] = conj;
    o.result["is_unit"] = c.is_unit;
    o.result["precision_bits"] = std::to_string(c.precision_bits);
    return o;
  });

  std::string family_name;
  int family_k = 3;
  bool family_certify = false;
  auto* family = pisot->add_subcommand("family", "expand a Pisot family polynomial");
  family->add_option("--family", family_name, "tower-a | tower-b | fib-perturbed")->required();
  family->add_option("--k", family_k, "family parameter (k >= 3)")->required();
  family->add_flag("--certify", family_certify, "also run the Pisot certification");
  bind(family, "pisot family", [&] {
    Output o;
    o.input["family"] = family_name;
    o.input["k"] = std::to_string(family_k);
    IntPoly p = family_poly(parse_family(family_name), family_k);
    o.result["poly"] = to_string(p);
    o.result["coeffs"] = ints_json(p.coeffs());
    if (family_certify) {
      PisotResult r = certify_pisot(p);
      if (auto* rej = std::get_if<PisotRejection>(&r)) {
        o.result["pisot"] = false;
        o.result["reason"] = to_string(*rej);
      } else {
        o.result["pisot"] = true;
        o.result["dominant_approx"] = describe(std::get<PisotCertificate>(r).dominant_box, 20);
      }
    }
    return o;
  });

  // rec
  auto* rec = app.add_subcommand("rec", "recurrence sequences");
  rec->require_subcommand(1);
  SpecInput eval_spec;
  std::string eval_range_text;
  std::string eval_point;
  auto* eval = rec->add_subcommand("eval", "evaluate F_n exactly");
  eval_spec.add_to(eval);
  auto* range_opt = eval->add_option("--range", eval_range_text, "LO,HI");
  auto* n_opt = eval->add_option("--n", eval_point, "single index (companion-matrix powering)");
  range_opt->excludes(n_opt);
  bind(eval, "rec eval", [&] {
    Output o;
    RecurrenceSpec spec = eval_spec.get(o.input);
    long lo = 0;
    long hi = 0;
    std::vector<Integer> values;
    if (!eval_point.empty()) {
      Integer n = parse_integer(eval_point);
      if (n < 0 || !n.fits_ulong_p()) throw DomainError("index must be a non-negative integer, got " + eval_point);
      lo = hi = static_cast<long>(n.get_ui());
      values.push_back(eval_at(spec, n.get_ui()));
    } else {
      if (eval_range_text.empty()) throw DomainError("one of --range or --n is required");
      std::tie(lo, hi) = parse_range(eval_range_text);
      values = eval_range(spec, lo, hi);
    }
    o.input["range"] = {std::to_string(lo), std::to_string(hi)};
    o.result["values"] = ints_json(values);
    Table t{{"n", "value"}, {}};
    for (std::size_t i = 0; i < values.size(); ++i) t.rows.push_back({std::to_string(lo + static_cast<long>(i)), dec(values[i])});
    o.table = t;
    o.plain = scalar_text(o.result["values"]);
    return o;
  });

  SpecInput binet_spec;
  auto* binet = rec->add_subcommand("binet", "leading Binet coefficient f1 = f/d");
  binet_spec.add_to(binet);
  bind(binet, "rec binet", [&] {
    Output o;
    RecurrenceSpec spec = binet_spec.get(o.input);
    validate_pisot_type(spec);
    BinetData b = binet_coefficients(spec);
    o.result["f1"] = coords_json(b.f1.coords());
    o.result["f1_text"] = to_string(b.f1, "alpha");
    o.result["d"] = dec(b.d);
    o.result["f"] = coords_json(b.f.coords());
    o.result["verified_up_to"] = std::to_string(std::max(2 * spec.order(), 20));
    return o;
  });

  PolyInput trace_poly;
  std::string trace_f;
  std::string trace_d = "1";
  auto* from_trace = rec->add_subcommand("from-trace", "initial values from d F_n = Tr(f alpha^n)");
  trace_poly.add_to(from_trace);
  from_trace->add_option("--f", trace_f, "integer power-basis coordinates of f")->required();
  from_trace->add_option("--d", trace_d, "positive integer divisor");
  bind(from_trace, "rec from-trace", [&] {
    Output o;
    IntPoly p = trace_poly.get(o.input);
    auto f = parse_integer_list(trace_f);
    Integer d = parse_integer(trace_d);
    o.input["f"] = ints_json(f);
    o.input["d"] = dec(d);
    RecurrenceSpec spec = build_from_trace(p, f, d);
    o.result["init"] = ints_json(spec.initial_values);
    o.plain = scalar_text(o.result["init"]);
    return o;
  });

  // hyp
  auto* hyp = app.add_subcommand("hyp", "theorem applicability");
  hyp->require_subcommand(1);
  SpecInput hyp_spec;
  long degree_cap = kDefaultDegreeCap;
  bool force = false;
  auto* check = hyp->add_subcommand("check", "decide which finiteness clause applies");
  hyp_spec.add_to(check);
  auto* cap_opt = check->add_option("--cap", degree_cap, "splitting-field degree cap");
  check->add_flag("--force-squareness", force, "run the squareness test even when a degree clause decides");
  bind(check, "hyp check", [&] {
    Output o;
    RecurrenceSpec spec = hyp_spec.get(o.input);
    if (cap_opt->count() == 0) degree_cap = env_long("DTRIP_DEGREE_CAP", kDefaultDegreeCap);
    if (degree_cap < 1 || degree_cap > 100000) throw DomainError("degree cap out of range");
    o.input["cap"] = std::to_string(degree_cap);
    ApplicabilityReport r = theorem_applicability(spec, static_cast<int>(degree_cap), force, stop);
    o.result["k"] = std::to_string(r.k);
    o.result["alpha_is_unit"] = r.alpha_is_unit;
    o.result["f1"] = coords_json(r.binet.f1.coords());
    FieldPtr kfield;
    bool undecided = false;
    for (const auto* v : {&r.nonsquare_f1, &r.nonsquare_f1alpha}) {
      if (*v && (*v)->witness && !(*v)->witness_in_base_field) kfield = (*v)->witness->field();
      if (*v && (*v)->status == SquareStatus::undecided) undecided = true;
    }
    if (r.nonsquare_f1) o.result["f1_squareness"] = verdict_json(*r.nonsquare_f1, kfield);
    if (r.nonsquare_f1alpha) o.result["f1alpha_squareness"] = verdict_json(*r.nonsquare_f1alpha, kfield);
    o.result["verdict"] = to_string(r.verdict);
    ordered_json cites = ordered_json::array();
    for (const auto& c : r.clause_citations) cites.push_back(c);
    o.result["clauses"] = cites;
    if (r.verdict == Verdict::unknown && undecided) {
      o.status = "undecided";
      o.exit_code = ExitCode::limit_reached;
    }
    return o;
  });

  // search
  auto* search = app.add_subcommand("search", "triple search and gcd scan");
  search->require_subcommand(1);
  SpecInput triple_spec;
  long c_max = 0;
  int a_min = 1;
  unsigned workers = 1;
  long budget_ms = kDefaultFactorBudgetMs;
  auto* triples = search->add_subcommand("triples", "all triples a<b<c<=cmax with ab+1, ac+1, bc+1 in the sequence");
  triple_spec.add_to(triples);
  triples->add_option("--cmax", c_max, "largest c")->required();
  triples->add_option("--amin", a_min, "smallest a (1 or 2)")->check(CLI::IsMember({1, 2}));
  triples->add_option("--workers", workers, "worker threads")->check(CLI::Range(1U, 256U));
  auto* budget_opt = triples->add_option("--budget-ms", budget_ms, "factorization budget per value");
  bind(triples, "search triples", [&] {
    Output o;
    RecurrenceSpec spec = triple_spec.get(o.input);
    if (budget_opt->count() == 0) budget_ms = env_long("DTRIP_FACTOR_BUDGET_MS", kDefaultFactorBudgetMs);
    o.input["cmax"] = std::to_string(c_max);
    o.input["amin"] = std::to_string(a_min);
    SearchOptions opts;
    opts.factor_budget_ms = budget_ms;
    opts.workers = workers;
    opts.stop = stop;
    auto hits = find_triples(spec, c_max, a_min, opts);
    ordered_json arr = ordered_json::array();
    Table t{{"a", "b", "c", "x", "y", "z", "increasing_witness"}, {}};
    for (const auto& h : hits) {
      ordered_json j;
      j["a"] = std::to_string(h.a);
      j["b"] = std::to_string(h.b);
      j["c"] = std::to_string(h.c);
      j["x"] = longs_json(h.xs);
      j["y"] = longs_json(h.ys);
      j["z"] = longs_json(h.zs);
      j["increasing_witness"] = h.increasing_witness;
      arr.push_back(j);
      t.rows.push_back({std::to_string(h.a), std::to_string(h.b), std::to_string(h.c), scalar_text(j["x"]),
                        scalar_text(j["y"]), scalar_text(j["z"]), h.increasing_witness ? "true" : "false"});
    }
    o.result["count"] = std::to_string(hits.size());
    o.result["triples"] = arr;
    o.table = t;
    std::ostringstream plain;
    plain << "count: " << hits.size();
    for (const auto& row : t.rows) {
      plain << "\n(" << row[0] << "," << row[1] << "," << row[2] << ") x=" << row[3] << " y=" << row[4]
            << " z=" << row[5];
    }
    o.plain = plain.str();
    return o;
  });

  SpecInput gcd_spec;
  long y_lo = 0;
  long z_hi = 0;
  unsigned gcd_workers = 1;
  auto* gcd_cmd = search->add_subcommand("gcd-scan", "gcd(F_y - 1, F_z - 1) against alpha^(k z/(k+1))");
  gcd_spec.add_to(gcd_cmd);
  gcd_cmd->add_option("--ylo", y_lo, "smallest y")->required();
  gcd_cmd->add_option("--zhi", z_hi, "largest z")->required();
  gcd_cmd->add_option("--workers", gcd_workers, "worker threads")->check(CLI::Range(1U, 256U));
  bind(gcd_cmd, "search gcd-scan", [&] {
    Output o;
    RecurrenceSpec spec = gcd_spec.get(o.input);
    o.input["ylo"] = std::to_string(y_lo);
    o.input["zhi"] = std::to_string(z_hi);
    GcdScanReport r = gcd_scan(spec, y_lo, z_hi, gcd_workers);
    auto fmt = [](double v) {
      std::ostringstream s;
      s.precision(12);
      s << v;
      return s.str();
    };
    o.result["k"] = std::to_string(r.k);
    o.result["kappa"] = std::to_string(r.k) + "/" + std::to_string(r.k + 1);
    o.result["pairs"] = std::to_string(r.records.size());
    o.result["max_ratio"] = fmt(r.max_ratio);
    o.result["max_ratio_at"] = {std::to_string(r.max_ratio_y), std::to_string(r.max_ratio_z)};
    o.result["fitted_slack"] = fmt(r.fitted_slack);
    o.result["log_alpha"] = r.log_alpha;
    Table t{{"y", "z", "g", "ratio"}, {}};
    for (const auto& rec_row : r.records) {
      t.rows.push_back({std::to_string(rec_row.y), std::to_string(rec_row.z), dec(rec_row.g), fmt(rec_row.ratio)});
    }
    o.table = t;
    return o;
  });

  // quad
  auto* quad = app.add_subcommand("quad", "classical Diophantine quadruple formulas");
  quad->require_subcommand(1);
  std::vector<std::string> euler_args;
  auto* euler = quad->add_subcommand("euler", "(a, b, a+b+2r, 4r(a+r)(b+r)) with r^2 = ab+1");
  euler->add_option("values", euler_args, "a b")->expected(2)->required();
  bind(euler, "quad euler", [&] {
    Output o;
    Integer a = parse_integer(euler_args[0]);
    Integer b = parse_integer(euler_args[1]);
    o.input["a"] = dec(a);
    o.input["b"] = dec(b);
    Quadruple q = euler_quadruple(a, b);
    o.result["quadruple"] = ints_json({q.a, q.b, q.c, q.d});
    o.result["verified"] = true;
    o.plain = scalar_text(o.result["quadruple"]);
    return o;
  });
  std::vector<std::string> dplus_args;
  auto* dplus = quad->add_subcommand("dplus", "d_+ = a+b+c+2abc+2rst");
  dplus->add_option("values", dplus_args, "a b c")->expected(3)->required();
  bind(dplus, "quad dplus", [&] {
    Output o;
    Integer a = parse_integer(dplus_args[0]);
    Integer b = parse_integer(dplus_args[1]);
    Integer c = parse_integer(dplus_args[2]);
    o.input["triple"] = ints_json({a, b, c});
    Integer d = dplus_extension(a, b, c);
    o.result["d_plus"] = dec(d);
    o.result["verified"] = true;
    o.plain = dec(d);
    return o;
  });

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::domain_error;
  }
  if (!action) {
    err << "error: no command given\n";
    return ExitCode::domain_error;
  }

  std::ofstream file;
  if (!out_file.empty()) {
    file.open(out_file);
    if (!file) {
      err << "error: cannot open " << out_file << "\n";
      return ExitCode::domain_error;
    }
  }
  std::ostream& sink = out_file.empty() ? out : file;

  auto fail = [&](const std::string& status, const std::string& msg, int code) {
    err << "error: " << msg << "\n";
    if (format == "json") {
      ordered_json j;
      j["command"] = command;
      j["input"] = ordered_json::object();
      j["result"] = nullptr;
      j["status"] = status;
      j["message"] = msg;
      sink << j.dump(2) << "\n";
    }
    return code;
  };

  try {
    Output o = action();
    render(sink, format, command, o);
    return o.exit_code;
  } catch (const DomainError& e) {
    return fail("error", e.what(), ExitCode::domain_error);
  } catch (const SearchInterrupted& e) {
    err << "checkpoint: F_z - 1 <= " << e.checkpoint_value().get_str() << " completed\n";
    return fail("interrupted", e.what(), ExitCode::limit_reached);
  } catch (const LimitError& e) {
    return fail("undecided", e.what(), ExitCode::limit_reached);
  } catch (const std::exception& e) {
    return fail("internal-error", e.what(), ExitCode::internal_error);
  }
}

}  // namespace dtrip::cli
