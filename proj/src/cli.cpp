#include "pentparity/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "pentparity/errors.hpp"
#include "pentparity/factor.hpp"
#include "pentparity/intpoly.hpp"
#include "pentparity/search.hpp"
#include "pentparity/swan.hpp"
#include "pentparity/verify.hpp"

namespace pentparity::cli {
namespace {

using json = nlohmann::ordered_json;

// Raised for flag combinations rejected before any computation.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a cross-check inside a subcommand disagrees.
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { human, csv, json };

Format parse_format(const std::string& f, bool allow_csv) {
  if (f == "human") return Format::human;
  if (f == "json") return Format::json;
  if (f == "csv" && allow_csv) return Format::csv;
  throw UsageError("unsupported --format '" + f + "'");
}

// Where a polynomial comes from: --poly, --n with --s (pentanomial) or --n
// with --k (trinomial).
struct PolyArgs {
  CLI::Option* n_opt = nullptr;
  CLI::Option* s_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* poly_opt = nullptr;
  int n = 0;
  int s = 0;
  int k = 0;
  std::string hex;

  void attach(CLI::App* app, bool with_k) {
    n_opt = app->add_option("--n", n, "degree n");
    s_opt = app->add_option("--s", s, "pentanomial gap s");
    if (with_k) k_opt = app->add_option("--k", k, "trinomial middle exponent k");
    poly_opt = app->add_option("--poly", hex, "polynomial as little-endian hex");
  }
  bool has_shape() const { return s_opt->count() > 0; }
  bool has_trinomial() const { return k_opt != nullptr && k_opt->count() > 0; }
  bool has_poly() const { return poly_opt->count() > 0; }

  void validate() const {
    const int sources = int(has_shape()) + int(has_trinomial()) + int(has_poly());
    if (sources != 1) throw UsageError("give exactly one of --poly, --n/--s, --n/--k");
    if ((has_shape() || has_trinomial()) && n_opt->count() == 0) {
      throw UsageError("--n is required with --s or --k");
    }
    if (has_poly() && n_opt->count() > 0) throw UsageError("--n cannot be combined with --poly");
  }

  PentShape shape() const { return PentShape::create(n, s); }

  BitPoly poly() const {
    if (has_poly()) return BitPoly::from_hex(hex);
    if (has_shape()) return pent_poly(shape());
    if (!(n > k && k > 0)) throw UsageError("trinomial needs n > k > 0");
    return BitPoly::from_exponents({n, k, 0});
  }
};

SumModulus parse_modulus(const std::string& m) {
  if (m == "exact") return SumModulus::exact();
  if (m.size() > 2 && m.compare(0, 2, "2^") == 0) {
    const std::string digits = m.substr(2);
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 4) {
      const int k = std::stoi(digits);
      if (k >= 1) return SumModulus::pow2(k);
    }
  }
  throw UsageError("--mod must be 'exact' or '2^k' with k >= 1, got '" + m + "'");
}

std::string degree_summary(const FactorCount& fc) {
  std::string out;
  for (const auto& [deg, count] : fc.by_degree) {
    if (!out.empty()) out += ' ';
    out += std::to_string(deg) + "x" + std::to_string(count);
  }
  return out;
}

// ---------------------------------------------------------------- predict ---

int cmd_predict(const PolyArgs& pa, Format fmt, std::ostream& out) {
  if (pa.has_poly()) throw UsageError("predict takes --n with --s or --k");
  json j;
  std::vector<std::string> lines;
  if (pa.has_shape()) {
    const PentShape shape = pa.shape();
    j["n"] = shape.n();
    j["s"] = shape.s();
    lines.push_back(pent_certificate_reason(shape));
    if (shape.s() % 2 == 0) {
      j["certified_reducible"] = pent_certified_reducible(shape);
      if (shape.n() % 2 != 0) {
        const ParityVerdict v = pent_parity(shape);
        j["parity"] = to_string(v.parity);
        j["discriminant_mod8"] = pent_discriminant_closed_form(shape);
        j["inconclusive"] = v.inconclusive();
        lines.push_back("factor-count parity: " + std::string(to_string(v.parity)) +
                        " (discriminant ≡ " +
                        std::to_string(pent_discriminant_closed_form(shape)) + " mod 8)");
        if (v.inconclusive()) {
          lines.push_back("irreducibility: inconclusive (odd parity is necessary, not sufficient)");
        }
      }
    } else {
      j["certified_reducible"] = nullptr;
    }
  } else {
    int n = pa.n;
    int k = pa.k;
    if (!(n > k && k > 0)) throw UsageError("trinomial needs n > k > 0");
    j["n"] = n;
    j["k"] = k;
    if (n % 2 == 0 && k % 2 == 0) {
      j["certified_reducible"] = true;
      j["parity"] = nullptr;
      lines.push_back("reducible (n and k even: square of X^" + std::to_string(n / 2) + "+X^" +
                      std::to_string(k / 2) + "+1)");
    } else {
      if (n % 2 != 0 && k % 2 != 0) {
        lines.push_back("both exponents odd: using the reciprocal X^" + std::to_string(n) + "+X^" +
                        std::to_string(n - k) + "+1 (same factor count)");
        k = n - k;
        j["reciprocal_k"] = k;
      }
      const ParityVerdict v = trinomial_parity(n, k);
      j["certified_reducible"] = v.implies_reducible;
      j["parity"] = to_string(v.parity);
      if (v.implies_reducible) {
        lines.push_back("reducible (Swan: even number of factors)");
      } else {
        lines.push_back("odd number of factors (Swan); irreducibility inconclusive");
      }
    }
  }
  if (fmt == Format::json) {
    out << j.dump() << '\n';
  } else {
    for (const auto& l : lines) out << l << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------- test ---

int cmd_test(const PolyArgs& pa, Format fmt, std::ostream& out) {
  const BitPoly p = pa.poly();
  if (p.degree() < 1) throw UsageError("polynomial must have degree >= 1");
  const bool irreducible = is_irreducible(p);
  const FactorCount fc = factor_count(p);
  const bool squarefree = is_squarefree(p);
  if (irreducible != (fc.total == 1)) {
    throw InvariantViolation("Rabin test and factor count disagree on " + p.to_hex());
  }
  if (fmt == Format::json) {
    json j;
    j["poly"] = p.to_hex();
    j["degree"] = p.degree();
    j["irreducible"] = irreducible;
    j["factors"] = fc.total;
    j["parity"] = to_string(fc.parity().parity);
    j["squarefree"] = squarefree;
    json degs = json::object();
    for (const auto& [d, c] : fc.by_degree) degs[std::to_string(d)] = c;
    j["by_degree"] = degs;
    out << j.dump() << '\n';
    return kExitOk;
  }
  if (irreducible) {
    out << "irreducible, 1 factor\n";
  } else {
    out << "reducible, " << fc.total << " factors (parity " << to_string(fc.parity().parity)
        << ")\n";
    out << "factor degrees: " << degree_summary(fc) << '\n';
  }
  if (!squarefree) out << "not squarefree (factors counted with multiplicity)\n";
  return kExitOk;
}

// ------------------------------------------------------------------- disc ---

int cmd_disc(const PolyArgs& pa, const std::string& oracle, Format fmt, std::ostream& out) {
  if (oracle != "closed" && oracle != "resultant" && oracle != "both") {
    throw UsageError("--oracle must be closed, resultant or both");
  }
  if (pa.has_trinomial()) throw UsageError("disc takes --n/--s or --poly");
  const bool want_closed = oracle != "resultant";
  const bool want_res = oracle != "closed";
  if (want_closed && !pa.has_shape()) {
    throw UsageError("the closed form needs a pentanomial (--n/--s)");
  }
  std::optional<PentShape> shape;
  if (pa.has_shape()) shape = pa.shape();
  const BitPoly p = pa.poly();
  if (!p.constant_term() || p.degree() < 1) {
    throw UsageError("discriminant needs a polynomial of degree >= 1 with constant term 1");
  }

  json j;
  std::optional<int> closed;
  std::optional<int> via_h;
  std::optional<int> via_deriv;
  if (want_closed) {
    closed = pent_discriminant_closed_form(*shape);  // OutOfTheoryError for odd n / odd s
    j["closed_form"] = *closed;
  }
  if (want_res) {
    const IntPoly f = lift(p);
    via_h = discriminant_mod8(f);
    via_deriv = discriminant_mod8_classic(f);
    j["resultant"] = *via_h;
    j["resultant_derivative"] = *via_deriv;
  }
  bool agree = true;
  if (via_h && via_deriv && *via_h != *via_deriv) agree = false;
  if (closed && via_h && *closed != *via_h) agree = false;
  const int d = closed ? *closed : *via_h;
  if (d % 2 != 0) {
    const ParityVerdict v = parity_from_discriminant(p.degree(), d);
    j["parity"] = to_string(v.parity);
  } else {
    j["parity"] = nullptr;
  }
  j["agree"] = agree;

  if (fmt == Format::json) {
    out << j.dump() << '\n';
  } else {
    if (closed) out << "closed form: " << *closed << '\n';
    if (via_h) out << "resultant: " << *via_h << '\n';
    if (via_deriv) out << "resultant (F'): " << *via_deriv << '\n';
    if (d % 2 != 0) {
      out << "factor-count parity: " << to_string(parity_from_discriminant(p.degree(), d).parity)
          << '\n';
    } else {
      out << "discriminant even: the binary polynomial is not squarefree\n";
    }
    out << (agree ? "agree" : "DISAGREE") << '\n';
  }
  if (!agree) throw InvariantViolation("discriminant routes disagree");
  return kExitOk;
}

// -------------------------------------------------------------- powersums ---

int cmd_powersums(const PolyArgs& pa, int upto, const std::string& mod, Format fmt,
                  std::ostream& out) {
  if (pa.has_trinomial()) throw UsageError("powersums takes --n/--s or --poly");
  const SumModulus modulus = parse_modulus(mod);
  const BitPoly p = pa.poly();
  if (p.degree() < 1) throw UsageError("polynomial must have degree >= 1");
  const int limit = upto >= 0 ? upto : 2 * p.degree();
  const PowerSumTable t = power_sums(lift(p), limit, modulus);
  if (fmt == Format::json) {
    json j;
    j["modulus"] = modulus.to_string();
    json vals = json::array();
    for (const auto& v : t.values()) vals.push_back(v.get_str());
    j["S"] = vals;
    out << j.dump() << '\n';
  } else if (fmt == Format::csv) {
    out << "m,S_m\n";
    for (int m = 0; m <= limit; ++m) out << m << ',' << t[m].get_str() << '\n';
  } else {
    out << "power sums of " << p.to_string() << " (" << modulus.to_string() << ")\n";
    for (int m = 0; m <= limit; ++m) out << "S_" << m << " = " << t[m].get_str() << '\n';
  }
  return kExitOk;
}

// ----------------------------------------------------------------- search ---

struct SearchArgs {
  int n_min = 7;
  int n_max = 300;
  std::string s_parity = "even";
  std::string n_parity = "odd";
  int prefilter_depth = 13;
  bool no_prune = false;
  int jobs = 0;
  std::string out_path;
  bool resume = false;
};

int cmd_search(const SearchArgs& a, Format fmt, std::ostream& out, std::ostream& err) {
  if (a.s_parity != "even" && a.s_parity != "odd") throw UsageError("--s-parity must be even or odd");
  if (a.n_parity != "odd" && a.n_parity != "all") throw UsageError("--n-parity must be odd or all");
  if (a.n_min < 7) throw UsageError("--n-min must be >= 7");
  if (a.prefilter_depth < 0) throw UsageError("--prefilter-depth must be >= 0");
  if (a.jobs < 0) throw UsageError("--jobs must be >= 0");
  if (fmt == Format::human) throw UsageError("search writes csv or json");
  if (a.resume && (a.out_path.empty() || fmt != Format::csv)) {
    throw UsageError("--resume needs --out with csv output");
  }

  const SParity sp = a.s_parity == "even" ? SParity::even : SParity::odd;
  const NFilter nf = a.n_parity == "odd" ? NFilter::odd_only : NFilter::all;
  ShapeRange range = enumerate(a.n_min, a.n_max, sp, nf);

  SurveyOptions opts;
  opts.prune = !a.no_prune;
  opts.prefilter_depth = a.prefilter_depth;
  opts.jobs = a.jobs > 0 ? a.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  std::ofstream file;
  std::ostream* sink = &out;
  std::uint64_t kept = 0;
  std::vector<SearchRecord> all;
  if (!a.out_path.empty()) {
    if (a.resume) {
      std::vector<SearchRecord> existing;
      {
        std::ifstream in(a.out_path, std::ios::binary);
        if (in) {
          std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
          // An interrupted run can leave a torn last line.
          text.resize(text.rfind('\n') == std::string::npos ? 0 : text.rfind('\n') + 1);
          if (!text.empty()) {
            std::istringstream body(text);
            existing = read_csv(body);
          }
        }
      }
      const ResumePoint rp = plan_resume(existing, range);
      existing.resize(rp.keep_records);
      {
        std::ofstream rewrite(a.out_path, std::ios::trunc);
        write_csv_header(rewrite);
        write_csv(rewrite, existing);
      }
      kept = existing.size();
      all = std::move(existing);
      range = enumerate(std::max(rp.next_n, a.n_min), a.n_max, sp, nf);
      file.open(a.out_path, std::ios::app);
    } else {
      file.open(a.out_path, std::ios::trunc);
    }
    if (!file) throw UsageError("cannot open " + a.out_path + " for writing");
    sink = &file;
  }
  if (fmt == Format::csv && !a.resume) write_csv_header(*sink);

  survey(range, opts, [&](std::span<const SearchRecord> col) {
    if (fmt == Format::csv) {
      write_csv(*sink, col);
    } else {
      write_jsonl(*sink, col);
    }
    sink->flush();
    all.insert(all.end(), col.begin(), col.end());
  });

  const SurveyStats st = stats(all);
  err << "searched " << st.total_checked << " shapes (" << kept << " resumed), "
      << st.total_irreducible << " irreducible\n";
  std::uint64_t errors = 0;
  for (const auto& r : all) errors += r.outcome == Outcome::error;
  const auto violations = certificate_violations(all);
  if (!violations.empty()) {
    err << "invariant violation: irreducible with even s and n not ±1 mod 8 at (" << violations[0].n
        << "," << violations[0].s << ")\n";
    return kExitInvariant;
  }
  if (errors > 0) {
    err << "invariant violation: " << errors << " shapes could not be evaluated\n";
    return kExitInvariant;
  }
  return kExitOk;
}

// ------------------------------------------------------------------ stats ---

int cmd_stats(const std::string& in_path, Format fmt, std::ostream& out) {
  std::vector<SearchRecord> recs;
  if (in_path == "-") {
    recs = read_csv(std::cin);
  } else {
    std::ifstream in(in_path);
    if (!in) throw UsageError("cannot open " + in_path);
    recs = read_csv(in);
  }
  const SurveyStats st = stats(recs);
  if (fmt == Format::json) {
    out << stats_json(st) << '\n';
    return kExitOk;
  }
  out << "checked: " << st.total_checked << '\n';
  out << "irreducible: " << st.total_irreducible << '\n';
  out << "irreducible by n mod 8:";
  for (std::size_t r = 0; r < 8; ++r) out << ' ' << r << ':' << st.n_mod8[r];
  out << "\nirreducible by s mod 8:";
  for (std::size_t r = 0; r < 8; ++r) out << ' ' << r << ':' << st.s_mod8[r];
  out << "\ndistinct n checked: " << st.distinct_n_checked << '\n';
  out << "distinct n with an irreducible: " << st.distinct_n_with_irr << '\n';
  std::ostringstream freq;
  freq.precision(4);
  freq << std::fixed << 100.0 * st.frequency() << "% overall, " << 100.0 * st.frequency_n_pm1()
       << "% among n ≡ ±1 mod 8 (arbitrary polynomials: ~"
       << 100.0 * kArbitraryPolynomialBaseline << "%)";
  out << "frequency: " << freq.str() << '\n';
  return kExitOk;
}

// ----------------------------------------------------------------- verify ---

int cmd_verify(const VerifyBounds& b, Format fmt, std::ostream& out) {
  const auto results = verify_all(b);
  bool ok = true;
  json arr = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed();
    if (fmt == Format::json) {
      json j;
      j["suite"] = r.name;
      j["passed"] = r.passed();
      j["cases"] = r.cases;
      j["failures"] = r.failures;
      j["skipped"] = r.skipped;
      if (!r.passed()) j["first_failure"] = r.first_failure;
      arr.push_back(j);
    } else {
      out << (r.passed() ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.cases << " cases";
      if (r.skipped) out << ", " << r.skipped << " skipped as non-squarefree";
      if (!r.passed()) out << ", " << r.failures << " failures, first " << r.first_failure;
      out << ")\n";
    }
  }
  if (fmt == Format::json) out << arr.dump(2) << '\n';
  return ok ? kExitOk : kExitInvariant;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factor-count parity and irreducibility of class 2 pentanomials over GF(2)",
               "pentparity"};
  app.require_subcommand(1);

  std::string format = "human";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "human, csv or json");
  };

  CLI::App* predict = app.add_subcommand("predict", "closed-form parity and reducibility verdicts");
  PolyArgs predict_args;
  predict_args.attach(predict, true);
  add_format(predict);

  CLI::App* test = app.add_subcommand("test", "brute-force irreducibility and factor count");
  PolyArgs test_args;
  test_args.attach(test, true);
  add_format(test);

  CLI::App* disc = app.add_subcommand("disc", "discriminant of the 0/1 lift mod 8");
  PolyArgs disc_args;
  disc_args.attach(disc, false);
  std::string oracle = "both";
  disc->add_option("--oracle", oracle, "closed, resultant or both");
  add_format(disc);

  CLI::App* ps = app.add_subcommand("powersums", "Newton power-sum table of the 0/1 lift");
  PolyArgs ps_args;
  ps_args.attach(ps, false);
  int upto = -1;
  std::string mod = "exact";
  ps->add_option("--upto", upto, "largest index m (default 2n)");
  ps->add_option("--mod", mod, "exact or 2^k");
  add_format(ps);

  CLI::App* search = app.add_subcommand("search", "survey class 2 pentanomials over a range of n");
  SearchArgs sa;
  search->add_option("--n-min", sa.n_min, "smallest n (inclusive)");
  search->add_option("--n-max", sa.n_max, "largest n (exclusive)");
  search->add_option("--s-parity", sa.s_parity, "even or odd");
  search->add_option("--n-parity", sa.n_parity, "odd or all");
  search->add_option("--prefilter-depth", sa.prefilter_depth, "small-factor prefilter depth, 0 disables");
  search->add_flag("--no-prune", sa.no_prune, "skip the closed-form reducibility certificate");
  search->add_option("--jobs", sa.jobs, "worker threads (default: hardware threads)");
  search->add_option("--out", sa.out_path, "output file (default: standard output)");
  search->add_flag("--resume", sa.resume, "continue an interrupted --out file");
  std::string search_format = "csv";
  search->add_option("--format", search_format, "csv or json (JSON lines)");

  CLI::App* st = app.add_subcommand("stats", "aggregate a search CSV");
  std::string in_path;
  st->add_option("--in", in_path, "search CSV ('-' for standard input)")->required();
  add_format(st);

  CLI::App* verify = app.add_subcommand("verify", "run the oracle-agreement suites");
  VerifyBounds vb;
  verify->add_option("--n-max", vb.pent_n_max, "pentanomial parity / certificate bound (exclusive)");
  verify->add_option("--trinomial-n-max", vb.trinomial_n_max, "trinomial bound (inclusive)");
  verify->add_option("--disc-n-max", vb.disc_n_max, "discriminant bound (inclusive)");
  verify->add_option("--powersum-n-max", vb.power_sum_n_max, "power-sum identity bound");
  verify->add_option("--powersum-t-n-max", vb.power_sum_t_n_max, "S/T pairing identity bound");
  verify->add_option("--samples", vb.samples, "randomized samples");
  verify->add_option("--seed", vb.seed, "random seed");
  add_format(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (predict->parsed()) {
      predict_args.validate();
      return cmd_predict(predict_args, parse_format(format, false), out);
    }
    if (test->parsed()) {
      test_args.validate();
      return cmd_test(test_args, parse_format(format, false), out);
    }
    if (disc->parsed()) {
      disc_args.validate();
      return cmd_disc(disc_args, oracle, parse_format(format, false), out);
    }
    if (ps->parsed()) {
      ps_args.validate();
      return cmd_powersums(ps_args, upto, mod, parse_format(format, true), out);
    }
    if (search->parsed()) return cmd_search(sa, parse_format(search_format, true), out, err);
    if (st->parsed()) return cmd_stats(in_path, parse_format(format, false), out);
    if (verify->parsed()) return cmd_verify(vb, parse_format(format, false), out);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const ConsistencyError& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace pentparity::cli
