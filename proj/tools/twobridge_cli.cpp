// twobridge: unoriented genus and crosscap numbers of 2-bridge knots and
// links from continued fractions, with an exhaustive Kauffman-state oracle,
// census enumeration, closed-form tables, and a verification driver.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
// budget refusal.

#include <CLI11.hpp>

#include <iostream>
#include <fstream>
#include <sstream>

#include "twobridge/census.hpp"
#include "twobridge/contfrac.hpp"
#include "twobridge/formulas.hpp"
#include "twobridge/invariants.hpp"
#include "twobridge/plat_oracle.hpp"
#include "twobridge/verify.hpp"

namespace {

using namespace twobridge;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string rational_str(const mpq_class& v) {
  std::ostringstream out;
  out << v.get_num() << "/" << v.get_den();
  return out.str();
}

int run_inv(const std::string& input, bool use_oracle, bool use_reduction, int budget) {
  Fraction f = normalize_canonical(parse_fraction_or_cf(input));
  SubtractiveCF sub = to_positive_subtractive(f);
  WZCount wz = compute_wz(sub);

  InvariantReport report;
  report.fraction = f;
  report.crossing_number = crossing_number(sub);
  report.link_class = classify(f);
  report.w = wz.w;
  report.z = wz.z;
  report.unoriented_genus =
      use_reduction ? unoriented_genus_by_reduction(sub) : wz.w - wz.z;
  report.method = use_reduction ? Method::Reduction : Method::Formula;

  bool need_oracle = use_oracle || report.link_class == LinkClass::TwoComponentLink;
  if (report.link_class == LinkClass::Knot) report.crosscap = crosscap_knot(f);

  if (need_oracle) {
    OracleResult oracle = oracle_invariants(build_diagram(to_positive_additive(f)), budget);
    if (oracle.gamma_unoriented != report.unoriented_genus)
      throw std::logic_error("oracle unoriented genus disagrees with the formula");
    if (report.crosscap && *report.crosscap != oracle.crosscap)
      throw std::logic_error("oracle crosscap disagrees with the even-form rule");
    report.crosscap = oracle.crosscap;
    report.method = Method::Oracle;
  }
  std::cout << to_json(report) << "\n";
  return 0;
}

int run_census(int c, const std::string& family, const std::string& emit) {
  std::vector<census::Tuple> tuples;
  if (family == "K") {
    tuples = census::enumerate_K(c);
  } else if (family == "KP") {
    tuples = census::enumerate_KP(c);
  } else {
    census::EFamilies fams = census::enumerate_E_families(c);
    if (family == "E")
      tuples = std::move(fams.all);
    else if (family == "KE")
      tuples = std::move(fams.knots);
    else if (family == "LE")
      tuples = std::move(fams.links);
    else if (family == "KEP")
      tuples = std::move(fams.knot_palindromes);
    else
      throw CLI::ValidationError("--family", "expected K, KP, E, KE, LE or KEP");
  }
  if (emit == "tuples") {
    for (const census::Tuple& t : tuples) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << t[i];
      }
      std::cout << "\n";
    }
    return 0;
  }
  std::cout << "{\"c\":" << c << ",\"family\":\"" << family
            << "\",\"count\":" << tuples.size();
  if (family == "K" || family == "KP") {
    Int w = 0, z = 0;
    for (const census::Tuple& t : tuples) {
      WZCount wz = census::tuple_wz(t);
      w += static_cast<long>(wz.w);
      z += static_cast<long>(wz.z);
    }
    std::cout << ",\"" << (family == "K" ? "W" : "WP") << "\":" << w << ",\""
              << (family == "K" ? "Z" : "ZP") << "\":" << z;
  }
  std::cout << "}\n";
  return 0;
}

struct AggregateRow {
  int c;
  Int k_count, w, z, wp, zp, ke, kep;
  mpq_class gamma_bar, eps1, eps2, crosscap_bar;
};

AggregateRow make_row(int c) {
  AggregateRow row;
  row.c = c;
  row.k_count = formulas::ernst_sumners(c);
  row.w = c == 3 ? Int(2) : formulas::closed_W(c);
  row.z = c < 6 ? Int(0) : formulas::closed_Z(c);
  row.wp = formulas::closed_WP(c);
  row.zp = formulas::closed_ZP(c);
  row.gamma_bar = formulas::average_unoriented(c);
  row.eps1 = row.gamma_bar - mpq_class(c, 3) - mpq_class(1, 9);
  row.eps1.canonicalize();
  if (c >= 4) {
    formulas::ECounts counts = formulas::recursive_E_counts(c);
    row.ke = counts.ke_count;
    row.kep = counts.kep_count;
  } else {
    row.ke = row.kep = 0;
  }
  row.eps2 = c >= 7 ? formulas::epsilon2(c) : mpq_class(0);
  row.crosscap_bar = row.gamma_bar + row.eps2;
  row.crosscap_bar.canonicalize();
  return row;
}

int run_table(int from, int to, const std::string& format, const std::string& out_path) {
  std::ostringstream out;
  if (format == "csv") out << "c,K_count,W,Z,WP,ZP,GammaBar,eps1,KE,KEP,eps2,gammaBar\n";
  bool first = true;
  if (format == "json") out << "[";
  for (int c = from; c <= to; ++c) {
    AggregateRow row = make_row(c);
    if (format == "csv") {
      out << row.c << ',' << row.k_count << ',' << row.w << ',' << row.z << ',' << row.wp << ','
          << row.zp << ',' << rational_str(row.gamma_bar) << ',' << rational_str(row.eps1) << ','
          << row.ke << ',' << row.kep << ',' << rational_str(row.eps2) << ','
          << rational_str(row.crosscap_bar) << "\n";
    } else {
      if (!first) out << ",";
      first = false;
      out << "{\"c\":" << row.c << ",\"K_count\":" << row.k_count << ",\"W\":" << row.w
          << ",\"Z\":" << row.z << ",\"WP\":" << row.wp << ",\"ZP\":" << row.zp
          << ",\"GammaBar\":\"" << rational_str(row.gamma_bar) << "\",\"eps1\":\""
          << rational_str(row.eps1) << "\",\"KE\":" << row.ke << ",\"KEP\":" << row.kep
          << ",\"eps2\":\"" << rational_str(row.eps2) << "\",\"gammaBar\":\""
          << rational_str(row.crosscap_bar) << "\"}";
    }
  }
  if (format == "json") out << "]\n";
  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream sink(out_path);
    if (!sink) throw CLI::ValidationError("--out", "cannot open " + out_path);
    sink << out.str();
  }
  return 0;
}

int run_verify(int max_c, int oracle_max_c, int budget) {
  verify::Options opt;
  opt.max_c = max_c;
  opt.oracle_max_c = oracle_max_c;
  opt.budget = budget;
  bool ok = verify::report(verify::run_all(opt), std::cout);
  return ok ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-bridge link unoriented genus and crosscap number toolkit"};
  app.require_subcommand(1);

  std::string inv_input;
  bool inv_oracle = false, inv_reduction = false;
  int budget = kDefaultOracleBudget;
  CLI::App* inv = app.add_subcommand("inv", "invariants of one 2-bridge link");
  inv->add_option("input", inv_input, "fraction p/q or CF form add:[..] sub:[..] even:[..]")
      ->required();
  inv->add_flag("--oracle", inv_oracle, "recompute by exhaustive state sweep and cross-check");
  inv->add_flag("--reduction", inv_reduction, "derive the genus by the reduction rules");
  inv->add_option("--budget", budget, "largest crossing number the 2^c sweep may attempt")
      ->capture_default_str();

  int census_c = 0;
  std::string census_family = "K", census_emit = "tuples";
  CLI::App* cen = app.add_subcommand("census", "enumerate tuple families");
  cen->add_option("--c", census_c, "crossing number")->required();
  cen->add_option("--family", census_family, "K, KP, E, KE, LE or KEP")
      ->check(CLI::IsMember({"K", "KP", "E", "KE", "LE", "KEP"}));
  cen->add_option("--emit", census_emit, "tuples or counts")
      ->check(CLI::IsMember({"tuples", "counts"}));

  int table_from = 3, table_to = 18;
  std::string table_format = "csv", table_out;
  CLI::App* tab = app.add_subcommand("table", "aggregate census columns per crossing number");
  tab->add_option("--from", table_from, "first crossing number")->capture_default_str();
  tab->add_option("--to", table_to, "last crossing number")->capture_default_str();
  tab->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  tab->add_option("--out", table_out, "write the table to a file instead of stdout");

  int verify_max_c = 16, verify_oracle_max_c = 12;
  CLI::App* ver = app.add_subcommand("verify", "run every property suite");
  ver->add_option("--max-c", verify_max_c, "census and formula sweep bound (>= 7)")
      ->capture_default_str();
  ver->add_option("--oracle-max-c", verify_oracle_max_c, "exhaustive sweep bound")
      ->capture_default_str();
  ver->add_option("--budget", budget, "largest crossing number the 2^c sweep may attempt")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (inv->parsed()) return run_inv(inv_input, inv_oracle, inv_reduction, budget);
    if (cen->parsed()) {
      if (census_c < 0) throw std::invalid_argument("census needs c >= 0");
      return run_census(census_c, census_family, census_emit);
    }
    if (tab->parsed()) {
      if (table_from < 3 || table_to < table_from)
        throw std::invalid_argument("table needs 3 <= from <= to");
      return run_table(table_from, table_to, table_format, table_out);
    }
    if (ver->parsed()) {
      if (verify_max_c < 7) throw std::invalid_argument("verify needs --max-c >= 7");
      if (verify_oracle_max_c < 3 || verify_oracle_max_c > budget)
        throw std::invalid_argument("verify needs 3 <= --oracle-max-c <= budget");
      return run_verify(verify_max_c, verify_oracle_max_c, budget);
    }
  } catch (const OracleBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
