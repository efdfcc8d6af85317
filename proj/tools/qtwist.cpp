// qtwist: central values of quadratic twists from weighted ternary theta series.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "qtwist/acceptance.hpp"
#include "qtwist/pipeline.hpp"

using namespace qtwist;

namespace {

enum Exit { kOk = 0, kInvariant = 1, kBadInput = 2, kVanishing = 3 };

struct Global {
  std::string cache_dir;
  bool no_cache = false;
  int threads = 1;
  std::string format = "text";
};

std::string real(long double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lf", digits, x);
  return buf;
}

std::string full(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.21Lg", x);
  return buf;
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer list: " + text);
    }
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InvalidArgument("range must look like -200..0");
  try {
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidArgument("range must look like -200..0");
  }
}

void check_p(std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw InvalidArgument("--p must be an odd prime");
}

void print_series_json(const GeneralizedThetaSeries& s, const Json& extra) {
  Json j = to_json(s);
  j.update(extra);
  std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic twist central values from quaternion theta series"};
  app.require_subcommand(1);
  Global g;
  g.cache_dir = Cache::default_dir().string();
  app.add_option("--cache-dir", g.cache_dir, "cache directory (default $QTWIST_CACHE_DIR or .qtwist-cache)");
  app.add_flag("--no-cache", g.no_cache, "do not read or write the cache");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));

  std::int64_t p = 0, lstar = 1, bound = 20, D = 1, cls = 0;
  std::string b0, psi, form, range, ms = "1,2,3", sign, only, qf, bvec, bench_bounds = "1000,10000,100000";
  std::int64_t compare_bound = 10000;
  long double target = 1e-13L;

  auto* classes = app.add_subcommand("classes", "ideal classes of the maximal order");
  auto* brandt = app.add_subcommand("brandt", "Brandt matrices");
  auto* eigen = app.add_subcommand("eigen", "rational Hecke eigensystems");
  auto* theta = app.add_subcommand("theta", "generalized theta series");
  auto* twists = app.add_subcommand("twists", "table of twisted central values");
  auto* lvalue = app.add_subcommand("lvalue", "L(f,D,1) by the approximate functional equation");
  auto* findaux = app.add_subcommand("find-aux", "smallest usable auxiliary l*");
  auto* verify = app.add_subcommand("verify-paper", "run the built-in acceptance suite");
  auto* bench = app.add_subcommand("bench", "theta versus standard timing for 11A");

  for (auto* c : {classes, brandt, eigen, theta, twists, lvalue, findaux}) c->add_option("--p", p, "prime level")->required();
  for (auto* c : {eigen, theta, twists, lvalue, findaux})
    c->add_option("--form", form, "eigenvalue signature a_2,a_3,... selecting the eigenform");
  brandt->add_option("--m", ms, "comma separated indices");
  theta->add_option("--lstar", lstar, "1, l = 1 mod 4, or -l with l = 3 mod 4");
  theta->add_option("--bound", bound, "largest exponent")->check(CLI::NonNegativeNumber);
  theta->add_option("--class", cls, "single class (1-based) instead of e_f");
  theta->add_option("--qf", qf, "A1,A2,A3,A23,A13,A12 of a single form (with --bvec)");
  theta->add_option("--bvec", bvec, "base point coordinates for --qf");
  for (auto* c : {theta, twists}) {
    c->add_option("--b0", b0, "base point, e.g. i+k");
    c->add_option("--psi", psi, "chi_p or step");
  }
  twists->add_option("--lstar", lstar, "auxiliary discriminant")->required();
  twists->add_option("--range", range, "D range, e.g. -200..0")->required();
  lvalue->add_option("--D", D, "fundamental discriminant")->required();
  for (auto* c : {lvalue, twists}) c->add_option("--target", target, "absolute error target");
  findaux->add_option("--sign", sign, "+ for l* = l, - for l* = -l")->required()->check(CLI::IsMember({"+", "-"}));
  verify->add_option("--only", only, "criterion id (AC-4) or form (37A)");
  bench->add_option("--bounds", bench_bounds, "theta bounds to time");
  bench->add_option("--compare", compare_bound, "largest d for the method comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    Cache cache(g.no_cache ? std::filesystem::path() : std::filesystem::path(g.cache_dir));
    const Cache* cp = g.no_cache ? nullptr : &cache;
    const bool json = g.format == "json";

    if (*classes) {
      check_p(p);
      auto cs = load_classes(p, cp);
      const bool mass_ok = cs->mass() == make_rational(p - 1, 24);
      if (json) {
        std::cout << Json{{"p", p}, {"n", cs->size()}, {"units", cs->unit_halforders}, {"mass", to_string(cs->mass())},
                          {"mass_ok", mass_ok}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "n=" << cs->size() << ", mass=" << p - 1 << "/24 " << (mass_ok ? "OK" : "FAIL") << "\n";
        std::cout << "w=[";
        for (std::size_t i = 0; i < cs->size(); ++i) std::cout << (i ? "," : "") << cs->unit_halforders[i];
        std::cout << "]\nnorms=[";
        for (std::size_t i = 0; i < cs->size(); ++i) std::cout << (i ? "," : "") << to_string(cs->reps[i].norm);
        std::cout << "]\n";
        for (std::size_t i = 0; i < cs->size(); ++i) {
          std::cout << "I" << i + 1 << " = <";
          auto b = cs->reps[i].lattice.basis();
          for (int k = 0; k < 4; ++k) std::cout << (k ? ", " : "") << b[k].str();
          std::cout << ">\n";
        }
      }
      return mass_ok ? kOk : kInvariant;
    }

    if (*brandt) {
      check_p(p);
      auto cs = load_classes(p, cp);
      BrandtModule bm(cs, g.threads);
      std::vector<BrandtMatrix> out;
      for (auto m : parse_list(ms)) out.push_back(bm.matrix(m));
      if (json) {
        std::cout << to_json(out).dump(2) << "\n";
      } else {
        for (const auto& b : out) {
          std::cout << "B_" << b.m << ":\n";
          for (const auto& row : b.entries) {
            for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "  ") << row[j];
            std::cout << "\n";
          }
        }
      }
      return kOk;
    }

    const auto signature = parse_list(form);

    if (*eigen) {
      check_p(p);
      FormContext ctx = load_form(p, cp, signature, g.threads);
      if (json) {
        std::cout << to_json(ctx.systems).dump(2) << "\n";
      } else {
        for (const auto& e : ctx.systems) {
          std::cout << e.label << (e.coords == ctx.form.coords ? " *" : "") << "  height=" << to_string(e.height) << "  e=(";
          for (std::size_t i = 0; i < e.coords.size(); ++i) std::cout << (i ? "," : "") << e.coords[i];
          std::cout << ")  a_q:";
          for (const auto& [q, a] : e.eigenvalues) std::cout << " " << q << ":" << a;
          std::cout << "\n";
        }
      }
      return kOk;
    }

    if (*theta) {
      check_p(p);
      if (!qf.empty()) {
        auto q = parse_list(qf);
        auto b = parse_list(bvec);
        if (q.size() != 6 || b.size() != 3) throw InvalidArgument("--qf needs 6 integers and --bvec 3");
        if (lstar < 3 || !is_prime(lstar)) throw InvalidArgument("--qf needs a positive prime --lstar");
        TernaryLattice t = ternary_lattice_from_qf({q[0], q[1], q[2], q[3], q[4], q[5]}, p);
        WeightL w = weight_l_from_coords(lstar, {t}, {Coords3{Rational(static_cast<long>(b[0])), Rational(static_cast<long>(b[1])),
                                                               Rational(static_cast<long>(b[2]))}},
                                         {Integer(1)});
        auto s = theta_aux({t}, w, nullptr, 0, bound, g.threads);
        if (json)
          print_series_json(s, {{"qf", q}, {"b", b}});
        else
          std::cout << s.str() << "\n";
        return kOk;
      }
      FormContext ctx = load_form(p, cp, signature, g.threads);
      ThetaOptions o;
      if (!b0.empty()) o.weight.b0 = parse_quaternion(ctx.classes->algebra, b0);
      o.psi = psi;
      ThetaSetup setup(ctx.classes, lstar, o);
      GeneralizedThetaSeries s;
      if (cls > 0) {
        if (static_cast<std::size_t>(cls) > ctx.classes->size()) throw InvalidArgument("--class out of range");
        s = setup.theta_class(static_cast<std::size_t>(cls - 1), bound, g.threads);
      } else {
        const std::string key = std::to_string(lstar) + "/" + std::to_string(bound) + "/" + b0 + "/" + psi + "/" + ctx.form.label;
        bool hit = false;
        if (cp)
          if (auto j = cp->load(p, "theta", key)) {
            s = theta_from_json(*j);
            hit = true;
          }
        if (!hit) {
          s = theta_eigen(setup, ctx.form, bound, g.threads);
          if (cp) cp->store(p, "theta", to_json(s), key);
        }
      }
      const std::string used_b0 = setup.weight_l() && setup.weight_l()->b0 ? setup.weight_l()->b0->str() : "";
      const std::string used_psi = lstar < 0 ? (psi.empty() ? default_psi(p) : psi) : "";
      if (json) {
        print_series_json(s, {{"form", ctx.form.label}, {"b0", used_b0}, {"psi", used_psi}, {"normalization", "primitive e_f"}});
      } else {
        std::cout << "# " << ctx.form.label << " l*=" << lstar << (used_b0.empty() ? "" : " b0=" + used_b0)
                  << (used_psi.empty() ? "" : " psi=" + used_psi) << " normalization=primitive e_f\n";
        std::cout << s.str() << "\n";
      }
      bool zero = true;
      for (std::size_t n = 1; n < s.coeffs.size(); ++n) zero = zero && s.coeffs[n] == 0;
      if (zero && cls == 0 && bound >= 50) {
        std::cerr << "all coefficients vanish: L(f,l*,1) = 0, choose another auxiliary l*\n";
        return kVanishing;
      }
      return kOk;
    }

    if (*twists) {
      check_p(p);
      auto [lo, hi] = parse_range(range);
      if (lo > hi) std::swap(lo, hi);
      if ((lstar < 0 && lo < 0) || (lstar > 0 && hi > 0))
        throw InvalidArgument("D must have the sign opposite to l* (D l* < 0)");
      const std::int64_t d_max = std::max(std::llabs(lo), std::llabs(hi));
      FormContext ctx = load_form(p, cp, signature, g.threads);
      DirichletCoeffs dc = load_coeffs(ctx, coefficient_bound(p, d_max, lstar, target), cp, g.threads);
      ThetaOptions o;
      if (!b0.empty()) o.weight.b0 = parse_quaternion(ctx.classes->algebra, b0);
      o.psi = psi;
      ThetaSetup setup(ctx.classes, lstar, o);
      GeneralizedThetaSeries th = theta_eigen(setup, ctx.form, d_max, g.threads);
      WaldspurgerOptions wo;
      wo.d_max = d_max;
      wo.threads = g.threads;
      wo.target = target;
      VerificationReport rep = verify_waldspurger(ctx.form, dc, th, wo);
      std::vector<const TwistRecord*> rows;
      for (const auto& r : rep.rows)
        if (r.D >= lo && r.D <= hi && r.admissible) rows.push_back(&r);
      if (json) {
        Json arr = Json::array();
        for (auto* r : rows)
          arr.push_back({{"D", r->D}, {"star", r->star}, {"c", r->c}, {"L_theta", full(r->L_theta)},
                         {"L_standard", full(r->L_standard)}, {"ratio", full(r->ratio())}, {"err", full(r->err)},
                         {"admissible", r->admissible}});
        std::cout << Json{{"form", rep.label}, {"lstar", rep.lstar}, {"khat", full(rep.khat)},
                          {"max_rel_dev", full(rep.max_rel_dev)}, {"support", rep.support}, {"rows", arr}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "D,star,c,L_theta,L_standard,ratio,admissible\n";
        for (auto* r : rows)
          std::cout << r->D << "," << r->star << "," << r->c << "," << real(r->L_theta) << "," << real(r->L_standard) << ","
                    << real(r->ratio()) << "," << (r->admissible ? 1 : 0) << "\n";
        std::cout << "# form=" << rep.label << " lstar=" << rep.lstar << " khat=" << real(rep.khat, 15)
                  << " max_rel_dev=" << full(rep.max_rel_dev) << " support=";
        for (std::size_t k = 0; k < rep.support.size(); ++k) std::cout << (k ? "," : "") << rep.support[k];
        std::cout << "\n";
      }
      return rep.max_rel_dev < 1e-5L ? kOk : kInvariant;
    }

    if (*lvalue) {
      check_p(p);
      FormContext ctx = load_form(p, cp, signature, g.threads);
      DirichletCoeffs dc = load_coeffs(ctx, coefficient_bound(p, std::llabs(D), 1, target), cp, g.threads);
      CentralValue cv = central_value(dc, D, target);
      if (json)
        std::cout << Json{{"form", ctx.form.label}, {"D", D}, {"L", full(cv.value)}, {"error", full(cv.error)},
                          {"epsilon", cv.epsilon}, {"predicted_epsilon", cv.predicted_epsilon}, {"terms", cv.terms}}
                         .dump(2)
                  << "\n";
      else
        std::cout << "L(" << ctx.form.label << "," << D << ",1) = " << full(cv.value) << " +- " << full(cv.error)
                  << "  eps=" << cv.epsilon << " (predicted " << cv.predicted_epsilon << ")\n";
      return kOk;
    }

    if (*findaux) {
      check_p(p);
      FormContext ctx = load_form(p, cp, signature, g.threads);
      for (std::int64_t l = 3;; l += 2) {
        if (!is_prime(l) || l == p) continue;
        if ((sign == "+") != (l % 4 == 1)) continue;
        const std::int64_t ls = sign == "+" ? l : -l;
        DirichletCoeffs dc = load_coeffs(ctx, coefficient_bound(p, l, ls, target), cp, g.threads);
        CentralValue cv = central_value(dc, ls, target);
        if (std::fabs(cv.value) > 10 * cv.error) {
          std::cout << "l*=" << ls << "  L(f," << ls << ",1) = " << real(cv.value, 7) << "\n";
          return kOk;
        }
      }
    }

    if (*verify) {
      AcceptanceOptions ao;
      ao.cache = cp;
      ao.threads = g.threads;
      ao.only = only;
      std::string first_fail;
      run_acceptance(ao, [&](const CriterionResult& r) {
        std::cout << r.id << " " << (r.pass ? "PASS" : "FAIL") << " (" << real(r.seconds, 2) << "s): " << r.detail << "\n"
                  << std::flush;
        if (!r.pass && first_fail.empty()) first_fail = r.id;
      });
      if (first_fail.empty()) {
        std::cout << "ALL PASS\n";
        return kOk;
      }
      std::cout << "FAILED: " << first_fail << "\n";
      return kInvariant;
    }

    if (*bench) {
      BenchResult b = run_bench(parse_list(bench_bounds), compare_bound, cp, g.threads);
      for (std::size_t k = 0; k < b.bounds.size(); ++k)
        std::cout << "theta x=" << b.bounds[k] << "  " << real(b.seconds[k], 6) << " s\n";
      std::cout << "log-log slope " << real(b.slope, 3) << "\n";
      std::cout << b.discriminants << " admissible d <= " << b.compare_bound << ": theta " << real(b.theta_seconds, 4)
                << " s, standard " << real(b.standard_seconds, 4) << " s, speedup " << real(b.speedup, 1) << "x\n";
      return kOk;
    }
  } catch (const NoNonzeroCoefficients& e) {
    std::cerr << e.what() << "\n";
    return kVanishing;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
  return kOk;
}
