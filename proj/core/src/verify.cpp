#include "triplet/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <memory>
#include <set>

#include "triplet/characters.hpp"

namespace triplet {

namespace {

constexpr std::size_t kKeptRecords = 25;
constexpr std::int64_t kDigitCap = 2'000'000;

// |P/Q| from the classical tables, used as an oracle independent of the Cartan determinant.
std::int64_t center_order(const CartanType& t) {
  switch (t.family) {
    case Family::A:
      return t.rank + 1;
    case Family::D:
      return 4;
    case Family::E:
      return 9 - t.rank;
  }
  return 0;
}

struct Partial {
  std::int64_t points = 0;
  std::int64_t failures = 0;
  std::vector<CheckRecord> records;
  std::vector<CheckRecord> info;
  std::vector<std::string> notes;

  void pass() { ++points; }
  void fail(std::string input, std::string computed, std::string expected) {
    ++points;
    ++failures;
    if (records.size() < kKeptRecords) records.push_back({std::move(input), std::move(computed), std::move(expected)});
  }
  void check(bool ok, const std::function<CheckRecord()>& describe) {
    if (ok) {
      pass();
    } else {
      auto r = describe();
      fail(std::move(r.input), std::move(r.computed), std::move(r.expected));
    }
  }
};

struct Job {
  const RootSystem* rs = nullptr;
  const WeylGroup* group = nullptr;
  int p = 0;
};

using JobFn = std::function<void(const Job&, const GridSpec&, Partial&)>;

struct CheckDef {
  std::string name;
  JobFn run;
  bool needs_group = false;
  int max_rank = 0;  // 0: no limit
  bool report_only = false;
};

std::string point_name(const RootSystem& rs, int p) { return rs.name() + " p=" + std::to_string(p); }

std::string lambda_name(const RootSystem& rs, const LambdaParam& lam) {
  return point_name(rs, lam.p) + " lambda0=" + to_string(lam.lambda0) + " sp=" + to_string(lam.sp);
}

std::string lambda_name(const RootSystem& rs, const IntWeight& alpha, const LambdaParam& lam) {
  return lambda_name(rs, lam) + " alpha=" + to_string(alpha);
}

std::string series_brief(const QSeries& s) {
  std::string out = "q^(" + to_string(s.base()) + ") [";
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(to_i64(s.coeffs()[i]));
  }
  return out + "]";
}

// Calls visit for every digit vector in [0, p-1]^l, or returns false when there are too many.
bool for_each_digits(int l, int p, const std::function<void(const Digits&)>& visit) {
  std::int64_t total = 1;
  for (int i = 0; i < l; ++i) {
    total *= p;
    if (total > kDigitCap) return false;
  }
  Digits sp(static_cast<std::size_t>(l), 0);
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t rest = code;
    for (std::size_t i = sp.size(); i-- > 0;) {
      sp[i] = static_cast<int>(rest % p);
      rest /= p;
    }
    visit(sp);
  }
  return true;
}

void digits_or_note(const Job& job, Partial& out, const std::function<void(const Digits&)>& visit) {
  if (!for_each_digits(job.rs->rank(), job.p, visit))
    out.notes.push_back(point_name(*job.rs, job.p) + ": p^l above " + std::to_string(kDigitCap) + ", skipped");
}

std::vector<IntWeight> alpha_grid(const RootSystem& rs, const GridSpec& grid) {
  return enum_dominant_in_Q(rs, NormBound::rho_plus(Rational(grid.alpha_extra)));
}

// ---------------------------------------------------------------------------

void strange_formula(const Job& job, Partial& out) {
  const auto& rs = *job.rs;
  const Rational lhs = rs.norm2(rs.rho());
  const Rational rhs = Rational(Int(rs.coxeter_number()) * Int(rs.dim_g()), Int(12));
  out.check(lhs == rhs, [&] {
    return CheckRecord{rs.name() + " |rho|^2", to_string(lhs), to_string(rhs) + " = h dim g / 12"};
  });
  const ModelParams mp(rs, job.p);
  const Rational c1 = mp.central_charge();
  const Rational c2 = mp.central_charge_from_dimension();
  out.check(c1 == c2, [&] {
    return CheckRecord{point_name(rs, job.p) + " central charge", to_string(c1), to_string(c2)};
  });
  const bool levels = mp.k() + Rational(mp.h()) == Rational(job.p) &&
                      mp.k_dual() + Rational(mp.h()) == Rational(Int(1), Int(job.p));
  out.check(levels, [&] {
    return CheckRecord{point_name(rs, job.p) + " levels", to_string(mp.k()) + ", " + to_string(mp.k_dual()),
                       "k + h = p and k' + h = 1/p"};
  });
}

void epsilon_w0_check(const Job& job, Partial& out, bool boundary) {
  const auto& rs = *job.rs;
  const ModelParams mp(rs, job.p);
  const IntWeight expected = -rs.rho();
  std::int64_t boundary_points = 0;
  std::int64_t deviations = 0;
  digits_or_note(job, out, [&](const Digits& sp) {
    const Int level = theta_level(mp, sp);
    if (boundary ? level != job.p : level >= job.p) return;
    const IntWeight eps = epsilon(mp, sp, mp.w0());
    const std::string input = point_name(rs, job.p) + " sp=" + to_string(sp);
    if (boundary) {
      out.pass();
      ++boundary_points;
      if (!(eps == expected)) ++deviations;
      out.info.push_back({input, to_string(eps), to_string(expected)});
    } else {
      out.check(eps == expected, [&] { return CheckRecord{input, to_string(eps), to_string(expected)}; });
    }
  });
  if (boundary && boundary_points > 0)
    out.notes.push_back(point_name(rs, job.p) + ": epsilon(w0) differs from -rho at " + std::to_string(deviations) +
                        " of " + std::to_string(boundary_points) + " boundary points");
}

void lemma216_equiv(const Job& job, Partial& out, std::size_t words_per_point) {
  const auto& rs = *job.rs;
  const ModelParams mp(rs, job.p);
  const auto words = reduced_words(rs, mp.w0(), std::max<std::size_t>(words_per_point, 1));
  digits_or_note(job, out, [&](const Digits& sp) {
    const bool expected = narrow(mp, sp);
    for (const auto& word : words) {
      const bool computed = epsilon_chain_vanishes(mp, sp, word);
      out.check(computed == expected, [&] {
        std::string w;
        for (int i : word) w += std::to_string(i + 1);
        return CheckRecord{point_name(rs, job.p) + " sp=" + to_string(sp) + " word=" + w,
                           computed ? "condition (1) holds" : "condition (1) fails",
                           expected ? "narrow" : "not narrow"};
      });
    }
  });
}

// |b|^2 <= (|a| + 2)^2, decided exactly.
bool within_a_plus_two(const Rational& b2, const Rational& a2) {
  const Rational lhs = b2 - a2 - Rational(4);
  if (lhs <= Rational(0)) return true;
  return lhs * lhs <= Rational(16) * a2;
}

void lemma310_bruteforce(const Job& job, Partial& out, const GridSpec& grid) {
  const auto& rs = *job.rs;
  const ModelParams mp(rs, job.p);
  for (const auto& alpha : alpha_grid(rs, grid)) {
    for (const auto& l0 : lambda0_set(rs)) {
      const ChamberPair pair = chamber_pair(mp, *job.group, alpha, l0);
      const IntWeight a = alpha + l0 + rs.rho();
      const Rational a2 = rs.norm2(a);
      const Rational reach = sqrt_upper(a2) + Rational(2);
      std::vector<IntWeight> betas;
      for_each_root_lattice_point(rs, Weight(static_cast<std::size_t>(rs.rank())), reach * reach,
                                  [&](const IntWeight& b) {
                                    if (within_a_plus_two(rs.norm2(b), a2)) betas.push_back(b);
                                  });
      digits_or_note(job, out, [&](const Digits& sp) {
        if (!narrow(mp, sp)) return;
        const LambdaParam lam{l0, sp, job.p};
        bool found = false;
        std::int64_t solutions = 0;
        for (const auto& sigma : job.group->elements())
          for (const auto& b : betas)
            if (alcove_condition(mp, sigma, b, alpha, lam)) {
              ++solutions;
              if (sigma == pair.sigma && b == pair.beta) found = true;
            }
        out.check(found, [&] {
          return CheckRecord{lambda_name(rs, alpha, lam),
                             std::to_string(solutions) + " brute-force solutions, constructed pair absent",
                             "sigma=" + pair.sigma.word_string() + " beta=" + to_string(pair.beta)};
        });
      });
    }
  }
}

void remark311_iff(const Job& job, Partial& out, const GridSpec& grid) {
  const auto& rs = *job.rs;
  const ModelParams mp(rs, job.p);
  for (const auto& alpha : alpha_grid(rs, grid)) {
    for (const auto& l0 : lambda0_set(rs)) {
      const ChamberPair pair = chamber_pair(mp, *job.group, alpha, l0);
      digits_or_note(job, out, [&](const Digits& sp) {
        const LambdaParam lam{l0, sp, job.p};
        const bool computed = alcove_condition(mp, pair.sigma, pair.beta, alpha, lam);
        const bool expected = narrow(mp, sp);
        out.check(computed == expected, [&] {
          return CheckRecord{lambda_name(rs, alpha, lam), computed ? "alcove condition holds" : "alcove condition fails",
                             expected ? "narrow" : "not narrow"};
        });
      });
    }
  }
}

void exponent_identity(const Job& job, Partial& out, const GridSpec& grid) {
  const auto& rs = *job.rs;
  const ModelParams mp(rs, job.p);
  const auto& elements = job.group->elements();
  std::vector<WeylElement> inverses;
  inverses.reserve(elements.size());
  for (const auto& w : elements) inverses.push_back(inverse(rs, w));
  std::int64_t same_sigma = 0;
  std::int64_t total = 0;
  for (const auto& alpha : alpha_grid(rs, grid)) {
    for (const auto& l0 : lambda0_set(rs)) {
      const ChamberPair pair = chamber_pair(mp, *job.group, alpha, l0);
      digits_or_note(job, out, [&](const Digits& sp) {
        if (!narrow(mp, sp)) return;
        const LambdaParam lam{l0, sp, job.p};
        MonomialSum affine_terms;
        MonomialSum direct_terms;
        for (std::size_t i = 0; i < elements.size(); ++i) {
          const Rational a = affine_exponent(mp, pair, elements[i], alpha, lam);
          const Rational d = direct_exponent(mp, inverses[i], alpha, lam);
          ++total;
          if (a == direct_exponent(mp, elements[i], alpha, lam)) ++same_sigma;
          add_term(affine_terms, a, elements[i].sign());
          add_term(direct_terms, direct_exponent(mp, elements[i], alpha, lam), elements[i].sign());
          out.check(a == d, [&] {
            return CheckRecord{lambda_name(rs, alpha, lam) + " sigma=" + elements[i].word_string(), to_string(a),
                               to_string(d) + " (direct exponent at sigma^-1)"};
          });
        }
        std::erase_if(affine_terms, [](const auto& t) { return t.second == 0; });
        std::erase_if(direct_terms, [](const auto& t) { return t.second == 0; });
        out.check(affine_terms == direct_terms, [&] {
          return CheckRecord{lambda_name(rs, alpha, lam), "signed affine exponents", "differ from direct exponents"};
        });
      });
    }
  }
  out.notes.push_back(point_name(rs, job.p) + ": affine exponent equals the direct exponent at the same sigma for " +
                      std::to_string(same_sigma) + " of " + std::to_string(total) + " terms");
}

void char_nonneg_leading1(const Job& job, Partial& out, const GridSpec& grid) {
  const auto& rs = *job.rs;
  const ModelParams mp(rs, job.p);
  const Rational c24 = mp.central_charge() / Rational(24);
  for (const auto& alpha : alpha_grid(rs, grid)) {
    for (const auto& l0 : lambda0_set(rs)) {
      digits_or_note(job, out, [&](const Digits& sp) {
        if (!narrow(mp, sp)) return;
        const LambdaParam lam{l0, sp, job.p};
        const QSeries s = w_char(mp, *job.group, alpha, lam, grid.order);
        const bool nonneg =
            std::all_of(s.coeffs().begin(), s.coeffs().end(), [](const Int& c) { return c >= 0; });
        const ScaledWeight x{lam.scaled().x - scale(Int(job.p), alpha), job.p};
        const Rational expected_base = conformal_weight(mp, x) - c24;
        const bool ok = !s.is_zero() && s.leading() == 1 && nonneg && s.base() == expected_base;
        out.check(ok, [&] {
          return CheckRecord{lambda_name(rs, alpha, lam), series_brief(s),
                             "leading 1 at q^(" + to_string(expected_base) + "), coefficients >= 0"};
        });
      });
    }
  }
}

void submodule_bound(const Job& job, Partial& out, const GridSpec& grid) {
  const auto& rs = *job.rs;
  const ModelParams mp(rs, job.p);
  for (const auto& lam : enumerate_lambda(mp)) {
    const QSeries m = module_char(mp, *job.group, lam, grid.compare_order);
    const QSeries v = lattice_char(mp, lam, grid.compare_order);
    bool ok = false;
    if (m.base() < v.base()) {
      ok = m.leading() < 0;
      if (ok) ok = qs_leq(m, v, m.base() + Rational(grid.compare_order));
    } else {
      ok = qs_leq(m, v, v.base() + Rational(grid.compare_order));
    }
    out.check(ok, [&] { return CheckRecord{lambda_name(rs, lam), series_brief(m), "<= " + series_brief(v)}; });
  }
}

void duality_chars(const Job& job, Partial& out, const GridSpec& grid) {
  const auto& rs = *job.rs;
  const ModelParams mp(rs, job.p);
  for (const auto& lam : enumerate_lambda(mp)) {
    if (!narrow(mp, lam.sp)) continue;
    const LambdaParam dual = dual_param(mp, lam);
    const QSeries a = module_char(mp, *job.group, lam, grid.compare_order);
    const QSeries b = module_char(mp, *job.group, dual, grid.compare_order);
    out.check(qs_eq(a, b, grid.compare_order), [&] {
      return CheckRecord{lambda_name(rs, lam), series_brief(a), series_brief(b) + " for " + lambda_name(rs, dual)};
    });
  }
}

void delta_selfdual(const Job& job, Partial& out) {
  const auto& rs = *job.rs;
  const ModelParams mp(rs, job.p);
  const std::int64_t total = center_order(rs.type()) * [&] {
    std::int64_t n = 1;
    for (int i = 0; i < rs.rank(); ++i) n *= job.p;
    return n;
  }();
  if (total > kDigitCap) {
    out.notes.push_back(point_name(rs, job.p) + ": |Lambda| above " + std::to_string(kDigitCap) + ", skipped");
    return;
  }
  for (const auto& lam : enumerate_lambda(mp)) {
    const LambdaParam dual = dual_param(mp, lam);
    // -w0 acts on lambda directly; dual_param must agree with it up to sqrt(p)Q
    const ScaledWeight direct{-mp.w0().act(lam.scaled().x), job.p};
    const Rational d1 = conformal_weight(mp, lam.scaled());
    const Rational d2 = conformal_weight(mp, dual.scaled());
    const Rational d3 = conformal_weight(mp, direct);
    out.check(d1 == d2 && d2 == d3, [&] {
      return CheckRecord{lambda_name(rs, lam), to_string(d1),
                         to_string(d2) + " for " + lambda_name(rs, dual) + ", " + to_string(d3) + " for -w0(lambda)"};
    });
  }
}

void lambda_count_check(const Job& job, Partial& out) {
  const auto& rs = *job.rs;
  const ModelParams mp(rs, job.p);
  const std::int64_t classes = center_order(rs.type());
  std::int64_t expected = classes;
  bool small = true;
  for (int i = 0; i < rs.rank(); ++i) {
    expected *= job.p;
    if (expected > kDigitCap) small = false;
  }
  const auto l0 = lambda0_set(rs);
  out.check(static_cast<std::int64_t>(l0.size()) == classes, [&] {
    return CheckRecord{rs.name() + " |Lambda0|", std::to_string(l0.size()), std::to_string(classes)};
  });
  out.check(to_i64(lambda_count(mp)) == expected, [&] {
    return CheckRecord{point_name(rs, job.p) + " lambda_count", std::to_string(to_i64(lambda_count(mp))),
                       std::to_string(expected)};
  });
  if (!small) {
    out.notes.push_back(point_name(rs, job.p) + ": enumeration above " + std::to_string(kDigitCap) +
                        ", count checked against the formula only");
    return;
  }
  const auto all = enumerate_lambda(mp);
  // Strictly increasing (class index, digits) keys imply the parameters are distinct.
  const auto key = [&](const LambdaParam& lam) {
    const auto it = std::find(l0.begin(), l0.end(), lam.lambda0);
    return std::make_pair(it - l0.begin(), std::cref(lam.sp));
  };
  std::int64_t distinct = all.empty() ? 0 : 1;
  for (std::size_t i = 1; i < all.size(); ++i)
    if (key(all[i - 1]) < key(all[i])) ++distinct;
  out.check(static_cast<std::int64_t>(all.size()) == expected && distinct == expected, [&] {
    return CheckRecord{point_name(rs, job.p) + " enumerate_lambda",
                       std::to_string(all.size()) + " listed, " + std::to_string(distinct) + " in strict order",
                       std::to_string(expected)};
  });
  std::int64_t roundtrip_failures = 0;
  for (const auto& lam : all)
    if (!(canonical_lambda(mp, lam.scaled()) == lam)) ++roundtrip_failures;
  out.check(roundtrip_failures == 0, [&] {
    return CheckRecord{point_name(rs, job.p) + " canonical_lambda round trip",
                       std::to_string(roundtrip_failures) + " parameters not fixed", "0"};
  });
}

const std::vector<CheckDef>& registry() {
  using G = const GridSpec&;
  static const std::vector<CheckDef> defs = {
      {"strange_formula", [](const Job& j, G, Partial& o) { strange_formula(j, o); }, false, 0, false},
      {"lemma215_strict", [](const Job& j, G, Partial& o) { epsilon_w0_check(j, o, false); }, false, 0, false},
      {"lemma215_boundary_report", [](const Job& j, G, Partial& o) { epsilon_w0_check(j, o, true); }, false, 0, true},
      {"lemma216_equiv", [](const Job& j, G g, Partial& o) { lemma216_equiv(j, o, g.reduced_words); }, false, 0,
       false},
      {"lemma310_bruteforce", [](const Job& j, G g, Partial& o) { lemma310_bruteforce(j, o, g); }, true, 2, false},
      {"remark311_iff", [](const Job& j, G g, Partial& o) { remark311_iff(j, o, g); }, true, 3, false},
      {"exponent_identity", [](const Job& j, G g, Partial& o) { exponent_identity(j, o, g); }, true, 0, false},
      {"char_nonneg_leading1", [](const Job& j, G g, Partial& o) { char_nonneg_leading1(j, o, g); }, true, 0,
       false},
      {"submodule_bound", [](const Job& j, G g, Partial& o) { submodule_bound(j, o, g); }, true, 0, false},
      {"duality_chars", [](const Job& j, G g, Partial& o) { duality_chars(j, o, g); }, true, 0, false},
      {"delta_selfdual", [](const Job& j, G, Partial& o) { delta_selfdual(j, o); }, false, 0, false},
      {"lambda_count", [](const Job& j, G, Partial& o) { lambda_count_check(j, o); }, false, 0, false},
  };
  return defs;
}

CheckReport execute(const CheckDef& def, const GridSpec& grid) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.check = def.name;
  report.grid = grid.describe();
  report.report_only = def.report_only;

  std::vector<std::unique_ptr<RootSystem>> systems;
  std::vector<std::unique_ptr<WeylGroup>> groups;
  std::vector<Job> jobs;
  for (const auto& type : grid.types) {
    if (def.max_rank > 0 && type.rank > def.max_rank) {
      report.notes.push_back(type.name() + ": rank above " + std::to_string(def.max_rank) + ", not in scope");
      continue;
    }
    systems.push_back(std::make_unique<RootSystem>(type));
    const RootSystem& rs = *systems.back();
    const WeylGroup* group = nullptr;
    if (def.needs_group) {
      try {
        groups.push_back(std::make_unique<WeylGroup>(rs, grid.weyl_cap));
        group = groups.back().get();
      } catch (const WeylCapExceeded& e) {
        report.notes.push_back(type.name() + ": skipped, " + e.what());
        continue;
      }
    }
    for (int p : grid.p_list(rs)) jobs.push_back({&rs, group, p});
  }

  std::vector<std::future<Partial>> futures;
  futures.reserve(jobs.size());
  for (const auto& job : jobs)
    futures.push_back(std::async(std::launch::async, [&def, &grid, job] {
      Partial part;
      try {
        def.run(job, grid, part);
      } catch (const WeylCapExceeded& e) {
        part.notes.push_back(point_name(*job.rs, job.p) + ": skipped, " + e.what());
      } catch (const std::exception& e) {
        part.fail(point_name(*job.rs, job.p), std::string("exception: ") + e.what(), "no exception");
      }
      return part;
    }));
  for (auto& f : futures) {
    Partial part = f.get();
    report.points += part.points;
    report.failures += part.failures;
    for (auto& r : part.records)
      if (report.counterexamples.size() < kKeptRecords) report.counterexamples.push_back(std::move(r));
    for (auto& r : part.info) report.informational.push_back(std::move(r));
    for (auto& n : part.notes) report.notes.push_back(std::move(n));
  }

  if (report.points == 0 && report.failures == 0)
    report.status = CheckStatus::skipped;
  else
    report.status = report.failures > 0 ? CheckStatus::fail : CheckStatus::pass;
  report.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

GridSpec GridSpec::defaults() {
  GridSpec g;
  g.types = {CartanType::parse("A1"), CartanType::parse("A2"), CartanType::parse("A3")};
  return g;
}

std::vector<int> GridSpec::p_list(const RootSystem& rs) const {
  std::set<int> ps;
  if (!p_values.empty()) {
    for (int p : p_values)
      if (p >= 2) ps.insert(p);
  } else {
    for (int off : p_offsets)
      if (rs.coxeter_number() + off >= 2) ps.insert(rs.coxeter_number() + off);
  }
  return {ps.begin(), ps.end()};
}

std::string GridSpec::describe() const {
  std::string out = "types=";
  for (std::size_t i = 0; i < types.size(); ++i) out += (i ? "," : "") + types[i].name();
  if (types.empty()) out += "none";
  out += " p=";
  if (!p_values.empty()) {
    for (std::size_t i = 0; i < p_values.size(); ++i) out += (i ? "," : "") + std::to_string(p_values[i]);
  } else {
    out += "h";
    for (std::size_t i = 0; i < p_offsets.size(); ++i) {
      const int off = p_offsets[i];
      out += (i ? ",h" : "") + std::string(off < 0 ? "" : "+") + std::to_string(off);
    }
  }
  out += " sp=all alpha=|alpha+rho|<=|rho|+" + std::to_string(alpha_extra);
  out += " order=" + std::to_string(order) + " compare_order=" + std::to_string(compare_order);
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.push_back(d.name);
    return out;
  }();
  return names;
}

CheckReport run_check(const std::string& name, const GridSpec& grid) {
  for (const auto& d : registry())
    if (d.name == name) return execute(d, grid);
  throw std::invalid_argument("unknown check '" + name + "'");
}

std::vector<CheckReport> run_all(const GridSpec& grid) {
  std::vector<std::future<CheckReport>> futures;
  for (const auto& name : check_names())
    futures.push_back(std::async(std::launch::async, [&grid, name] { return run_check(name, grid); }));
  std::vector<CheckReport> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const CheckReport& r) {
    return !r.report_only && r.status == CheckStatus::fail;
  });
}

}  // namespace triplet
