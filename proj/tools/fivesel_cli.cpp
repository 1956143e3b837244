// Command-line front end for the verification suites and for one-off
// queries (curve classification, custom rank programs, custom counts).
//
// Exit codes: 0 all checks pass (informational lines never fail),
//             1 at least one check failed,
//             2 usage or data errors.
#include <CLI11.hpp>

#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "fivesel/curves.hpp"
#include "fivesel/latticecount.hpp"
#include "fivesel/primes.hpp"
#include "fivesel/rankbounds.hpp"
#include "fivesel/report.hpp"
#include "fivesel/suites.hpp"
#include "fivesel/tables.hpp"

namespace {

using namespace fivesel;

Int parse_big(const std::string& s, const char* flag) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw std::runtime_error(std::string(flag) + " must be an integer, got '" +
                             s + "'");
  }
}

std::vector<Report> run_ranks_bounds(const std::string& objective,
                                     const std::string& parity,
                                     const std::string& avg_s, long rmax,
                                     const std::string& family_s) {
  RankProgram p;
  p.objective = objective == "avg"      ? RankObjective::AverageRank
                : objective == "mass01" ? RankObjective::MassRank01
                                        : RankObjective::MassRank0;
  p.parity = parity == "equidistributed";
  p.avg = parse_rat_or_throw(avg_s);
  p.rmax = rmax;

  Report r;
  r.suite = "ranks-program";
  const char* goal = p.objective == RankObjective::AverageRank
                         ? "maximize average rank"
                     : p.objective == RankObjective::MassRank01
                         ? "minimize rank-0/1 mass"
                         : "minimize rank-0 mass";
  r.info("program", "-",
         std::string(goal) + "; mean multiplicative size <= " +
             rat_string(p.avg) + "; ranks 0.." + std::to_string(p.rmax) +
             (p.parity ? "; even ranks carry exactly half the mass" : ""),
         "command line");

  const auto s = solve_rank(p);
  if (s.status == LPStatus::Infeasible) {
    r.info("optimum", "-", "infeasible: no distribution meets the constraints",
           "exact simplex");
  } else if (s.status == LPStatus::Unbounded) {
    r.info("optimum", "-", "unbounded", "exact simplex");
  } else {
    const bool canonical = p.avg == 6 && p.rmax == 40;
    if (canonical) {
      const Rat pin = p.objective == RankObjective::AverageRank
                          ? (p.parity ? Rat(3, 4) : Rat(21, 20))
                      : p.objective == RankObjective::MassRank01
                          ? (p.parity ? Rat(7, 8) : Rat(19, 24))
                          : Rat(3, 8);
      r.add(s.optimum == pin, "optimum", rat_string(pin),
            rat_string(s.optimum), "frozen canonical optimum");
    } else {
      r.info("optimum", "-", rat_string(s.optimum), "exact simplex");
    }
    r.add(s.certified, "certificate", "verified dual certificate",
          s.certified ? "verified by substitution" : "missing",
          "weak duality");
    std::string support;
    for (size_t i = 0; i < s.x.size(); ++i)
      if (s.x[i] != 0) {
        if (!support.empty()) support += ", ";
        support += "x" + std::to_string(i) + " = " + rat_string(s.x[i]);
      }
    r.info("support", "-", support.empty() ? "empty" : support,
           "optimal distribution");
  }

  if (!family_s.empty()) {
    const Rat mu = parse_rat_or_throw(family_s);
    const Rat avg =
        combine(mu, Rat(3, 4), Rat(21, 20), CombineMode::AvgRank);
    const Rat r01 = combine(mu, Rat(7, 8), Rat(19, 24), CombineMode::Rank01);
    const Rat r0 = combine(mu, Rat(3, 8), Rat(0), CombineMode::Rank0);
    if (mu == parse_rat_or_throw("0.5501")) {
      r.add(avg < parse_rat_or_throw("0.885"), "combined-average",
            "below 0.885", rat_string(avg), "family-weighted combination");
      r.add(r01 >= parse_rat_or_throw("0.8375"), "combined-mass01",
            "at least 0.8375", rat_string(r01),
            "family-weighted combination");
      r.add(r0 >= parse_rat_or_throw("0.2062"), "combined-mass0",
            "at least 0.2062", rat_string(r0), "family-weighted combination");
    } else {
      r.info("combined-average", "-", rat_string(avg),
             "family-weighted combination");
      r.info("combined-mass01", "-", rat_string(r01),
             "family-weighted combination");
      r.info("combined-mass0", "-", rat_string(r0),
             "family-weighted combination");
    }
  }
  return {r};
}

std::vector<Report> run_count_ij(const std::string& x_s,
                                 const std::string& sign) {
  const Int X = parse_big(x_s, "--x");
  const bool want_plus = sign == "all" || sign == "+";
  const bool want_minus = sign == "all" || sign == "-";
  const bool want_zero = sign == "all" || sign == "0";

  Report r;
  r.suite = "count-ij";
  const IJCounts c = count_ij_total(X);
  if (want_plus)
    r.info("pairs-positive", "-", c.plus.get_str(), "closed-form count");
  if (want_minus)
    r.info("pairs-negative", "-", c.minus.get_str(), "closed-form count");
  if (want_zero)
    r.info("pairs-zero", "-", c.zero.get_str(), "closed-form count");
  if (sign == "all") {
    const Int box = count_ij_box(X);
    r.add(c.total() == box, "partition",
          "the three signs partition the height box (" + box.get_str() +
              " pairs)",
          c.total().get_str(), "partition identity");
  }

  if (X <= 1000000) {
    auto cross = [&](DiscSign ds, const Int& closed, const char* name) {
      const Int brute = count_ij_brute(X, ds);
      r.add(closed == brute, std::string("scan-") + name,
            "two-dimensional scan agrees", brute.get_str(),
            "brute-force oracle");
    };
    if (want_plus) cross(DiscSign::Positive, c.plus, "positive");
    if (want_minus) cross(DiscSign::Negative, c.minus, "negative");
    if (want_zero) cross(DiscSign::Zero, c.zero, "zero");
  }

  if (X >= 10000) {
    auto envelope = [&](DiscSign ds, const char* name, const char* cnum) {
      const auto rep = check_envelope(X, ds);
      r.add(rep.ok(), std::string("envelope-") + name,
            std::string("|count - (") + cnum +
                "/5) X^(5/6)| <= 5 X^(1/2), by integer certificate",
            rep.ok() ? "certificate holds" : "certificate fails",
            "integer envelope certificate");
    };
    if (want_plus) envelope(DiscSign::Positive, "positive", "8");
    if (want_minus) envelope(DiscSign::Negative, "negative", "32");
  }
  return {r};
}

std::vector<Report> run_count_davenport(const std::string& region, long t) {
  const RegionKind kind = region == "cube"   ? RegionKind::Cube
                          : region == "disk" ? RegionKind::Disk
                                             : RegionKind::Simplex;
  Report r;
  r.suite = "count-davenport";
  auto describe = [](const DavenportRow& row) {
    return "count " + row.count.get_str() + ", volume " +
           rat_string(row.volume) + ", projection " +
           rat_string(row.projection) + ", ratio " + rat_string(row.ratio);
  };
  if (t > 0) {
    const auto row = davenport_demo(kind, t);
    const Rat bound = kind == RegionKind::Cube ? 4 : 2;
    r.info("t-" + std::to_string(t), "-", describe(row),
           "count-vs-volume row");
    r.add(row.ratio <= bound, "ratio",
          "at most " + rat_string(bound) +
              " relative to the largest projection",
          rat_string(row.ratio), "region-specific ceiling");
  } else {
    const auto rep = davenport_grid(kind);
    for (const auto& row : rep.rows)
      r.info("t-" + std::to_string(row.t), "-", describe(row),
             "count-vs-volume row");
    r.add(rep.ok, "ratio-grid",
          "every ratio at most " + rat_string(rep.bound),
          rep.ok ? "all within the ceiling" : "ceiling exceeded",
          "region-specific ceiling");
  }
  return {r};
}

std::vector<Report> run_roots_classify(const std::string& data_dir,
                                       const std::string& a_s,
                                       const std::string& b_s, long p) {
  const Int A = parse_big(a_s, "--a");
  const Int B = parse_big(b_s, "--b");

  Report r;
  r.suite = "roots-classify";
  const EllipticCurve e = minimalize(A, B);
  r.info("minimal-model", "-",
         "A = " + e.A.get_str() + ", B = " + e.B.get_str(),
         "prime-power reduction");
  const Int d = curve_disc(e);
  if (d == 0)
    throw std::runtime_error(
        "the curve is singular (discriminant zero); nothing to classify");
  r.info("discriminant", "-", d.get_str(), "-16(4A^3 + 27B^2)");

  const auto [t2, t3] = load_density_tables(data_dir + "/density_tables.txt");
  const auto row2 = classify_row(t2, e);
  const auto row3 = classify_row(t3, e);
  r.info("table2-row", "-",
         row2 ? "row " + std::to_string(*row2) : "unclassified",
         "valuation conditions at 2");
  r.info("table3-row", "-",
         row3 ? "row " + std::to_string(*row3) : "unclassified",
         "valuation conditions at 3");

  if (p != 0) {
    if (p <= 3 || !is_prime(p))
      throw std::runtime_error("--p must be a prime greater than 3");
    const auto rd = reduction_type(e, p);
    const char* ty = rd.type == ReductionType::Good ? "good"
                     : rd.type == ReductionType::Multiplicative
                         ? "multiplicative"
                         : "additive";
    r.info("reduction-at-" + std::to_string(p), "-",
           std::string(ty) + ", disc valuation " + std::to_string(rd.vDelta),
           "reduction data");
    r.info("sign-at-" + std::to_string(p), "-",
           "d_p = " + std::to_string(d_p(e, p)) +
               ", alpha_p = " + std::to_string(alpha_p(e, p)),
           "twist comparison");
  }
  return {r};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic verification: cusp certificates, Pfaffian algebra, "
      "local density tables, rank-distribution programs, and invariant pair "
      "counts."};
  app.require_subcommand(1);

  bool json = false;
  std::string data_dir = FIVESEL_DATA_DIR;
  int threads = 1;
  app.add_flag("--json", json, "emit the report as JSON");
  app.add_option("--data", data_dir, "directory holding the data files")
      ->capture_default_str();
  app.add_option("--threads", threads,
                 "suite concurrency for 'all' (default 1: sequential)")
      ->check(CLI::Range(1, 64));

  // Option storage for the parameterized subcommands; bound options write
  // here during parsing, and the selected action reads them afterwards.
  std::string cls_a, cls_b;
  long cls_p = 0;
  std::string ranks_objective = "avg";
  std::string ranks_parity = "none";
  std::string ranks_avg = "6";
  long ranks_rmax = 40;
  std::string ranks_family;
  std::string ij_x;
  std::string ij_sign = "all";
  std::string dav_region = "cube";
  long dav_t = 0;

  std::function<std::vector<Report>()> run;

  auto* cusp = app.add_subcommand("cusp", "cusp certificate checks");
  cusp->require_subcommand(1);
  cusp->add_subcommand("verify", "verify the ten shipped cusp certificates")
      ->callback([&] { run = [&] { return std::vector<Report>{suite_cusp_verify(data_dir)}; }; });
  cusp->add_subcommand("partition",
                       "vanishing-set partition, cover, and weight order")
      ->callback([&] { run = [&] { return std::vector<Report>{suite_cusp_partition()}; }; });

  auto* algebra = app.add_subcommand("algebra", "exact Pfaffian algebra checks");
  algebra->require_subcommand(1);
  algebra
      ->add_subcommand("pfaffian",
                       "Pfaffian identities, kernel vectors, factorization")
      ->callback([&] { run = [&] { return std::vector<Report>{suite_algebra_pfaffian()}; }; });
  algebra
      ->add_subcommand("screen",
                       "reducibility screens and factorization witnesses")
      ->callback([&] { run = [&] { return std::vector<Report>{suite_algebra_screen()}; }; });

  auto* roots = app.add_subcommand("roots", "local density checks");
  roots->require_subcommand(1);
  roots
      ->add_subcommand("verify-tables",
                       "recompute the shipped local density tables")
      ->callback([&] { run = [&] { return std::vector<Report>{suite_roots_verify_tables(data_dir)}; }; });
  roots
      ->add_subcommand("densities",
                       "closed-form densities, Euler products, sign families")
      ->callback([&] { run = [&] { return std::vector<Report>{suite_roots_densities(data_dir)}; }; });
  {
    auto* classify = roots->add_subcommand(
        "classify", "classify one curve y^2 = x^3 + Ax + B");
    classify->add_option("--a", cls_a, "coefficient A")->required();
    classify->add_option("--b", cls_b, "coefficient B")->required();
    classify->add_option("--p", cls_p,
                         "also report reduction data at this prime (> 3)");
    classify->callback([&] {
      run = [&] { return run_roots_classify(data_dir, cls_a, cls_b, cls_p); };
    });
  }

  auto* ranks = app.add_subcommand("ranks", "rank-distribution programs");
  ranks->require_subcommand(1);
  {
    auto* bounds = ranks->add_subcommand(
        "bounds", "solve one rank-distribution linear program");
    bounds
        ->add_option("--objective", ranks_objective,
                     "avg (maximize average rank), mass01 or mass0 "
                     "(minimize low-rank mass)")
        ->check(CLI::IsMember({"avg", "mass01", "mass0"}))
        ->capture_default_str();
    bounds
        ->add_option("--parity", ranks_parity,
                     "none, or equidistributed (even ranks carry half the "
                     "mass; required for mass0)")
        ->check(CLI::IsMember({"none", "equidistributed"}))
        ->capture_default_str();
    bounds
        ->add_option("--avg-selmer", ranks_avg,
                     "mean multiplicative size budget (rational)")
        ->capture_default_str();
    bounds->add_option("--rmax", ranks_rmax, "rank cutoff")
        ->check(CLI::Range(2L, 200L))
        ->capture_default_str();
    bounds->add_option(
        "--family-density", ranks_family,
        "also combine the canonical in/out-of-family bounds at this density");
    bounds->callback([&] {
      run = [&] {
        return run_ranks_bounds(ranks_objective, ranks_parity, ranks_avg,
                                ranks_rmax, ranks_family);
      };
    });
  }

  auto* count = app.add_subcommand("count", "invariant pair counts");
  count->require_subcommand(1);
  {
    auto* ij = count->add_subcommand(
        "ij", "count invariant pairs below a height bound");
    ij->add_option("--x", ij_x, "height bound (integer >= 1)")->required();
    ij->add_option("--sign", ij_sign, "+, -, 0, or all")
        ->check(CLI::IsMember({"+", "-", "0", "all"}))
        ->capture_default_str();
    ij->callback([&] { run = [&] { return run_count_ij(ij_x, ij_sign); }; });
  }
  {
    auto* dav = count->add_subcommand(
        "davenport", "lattice-point count versus volume for a scaled region");
    dav->add_option("--region", dav_region, "cube, disk, or simplex")
        ->check(CLI::IsMember({"cube", "disk", "simplex"}))
        ->capture_default_str();
    dav->add_option("--t", dav_t, "single scale factor (default: grid 10..160)")
        ->check(CLI::Range(1L, 100000L));
    dav->callback(
        [&] { run = [&] { return run_count_davenport(dav_region, dav_t); }; });
  }

  app.add_subcommand("all", "run every verification suite")->callback([&] {
    run = [&] { return run_all(data_dir, threads); };
  });

  // Let --json/--data/--threads appear before or after the subcommand
  // names: unmatched options inside a subcommand fall through to the parent.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands([](CLI::App*) { return true; })) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::vector<Report> reports;
  try {
    if (run) reports = run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << (json ? render_json(reports) : render_text(reports));
  return all_ok(reports) ? 0 : 1;
}
