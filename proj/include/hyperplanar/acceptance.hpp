#pragma once

// Acceptance criteria, shared by the acceptance test binary and `hyperplanar_cli selftest`.
// Each criterion is an exact check plus a wall-clock budget; exceeding the budget fails it.

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperplanar/embed.hpp"
#include "hyperplanar/hecke.hpp"
#include "hyperplanar/planar.hpp"
#include "hyperplanar/tabular.hpp"
#include "hyperplanar/verlinde.hpp"

namespace hyperplanar {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double budget = 0.0;
  std::string detail;
};

/// Accumulates the verdict and a short detail line for one criterion.
class CriterionLog {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed_ = false;
      failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool passed() const { return passed_; }
  std::string detail() const {
    std::string out;
    auto append = [&](const std::string& s) {
      if (!out.empty()) out += "; ";
      out += s;
    };
    for (const auto& f : failures_) append("FAILED " + f);
    for (const auto& n : notes_) append(n);
    return out;
  }

 private:
  bool passed_ = true;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

// ---------------------------------------------------------------- associativity

inline bool associative_on(const PlanarContext& ctx, const LabeledDiagram& x, const LabeledDiagram& y,
                           const LabeledDiagram& z) {
  const PlanarElement xy = ctx.mul(x, y);
  const PlanarElement yz = ctx.mul(y, z);
  return ctx.mul(xy, PlanarElement(z)) == ctx.mul(PlanarElement(x), yz);
}

/// Every basis triple. Returns the number of triples checked, or -1 on the first failure.
inline long long associativity_exhaustive(const PlanarContext& ctx, std::string* witness = nullptr) {
  const auto basis = ctx.basis();
  long long count = 0;
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) {
        if (!associative_on(ctx, x, y, z)) {
          if (witness) *witness = x.to_string() + " / " + y.to_string() + " / " + z.to_string();
          return -1;
        }
        ++count;
      }
  return count;
}

/// Seeded random basis triples.
inline bool associativity_sampled(const PlanarContext& ctx, int triples, std::uint32_t seed,
                                  std::string* witness = nullptr) {
  const auto basis = ctx.basis();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int t = 0; t < triples; ++t) {
    const auto& x = basis[pick(rng)];
    const auto& y = basis[pick(rng)];
    const auto& z = basis[pick(rng)];
    if (!associative_on(ctx, x, y, z)) {
      if (witness) *witness = x.to_string() + " / " + y.to_string() + " / " + z.to_string();
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- criteria

namespace acceptance {

struct TypeSpec {
  CoxeterType type;
  int rank;
  int m;
};

inline std::string join(const std::vector<BigInt>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + x.str();
  return out;
}

inline std::vector<TypeSpec> canonical_types() {
  std::vector<TypeSpec> out;
  for (int n = 1; n <= 4; ++n) out.push_back({CoxeterType::A, n, 0});
  for (int n = 2; n <= 3; ++n) out.push_back({CoxeterType::B, n, 0});
  out.push_back({CoxeterType::H, 3, 0});
  for (int m = 3; m <= 8; ++m) out.push_back({CoxeterType::I, 2, m});
  return out;
}

inline std::vector<TypeSpec> embedding_types() {
  std::vector<TypeSpec> out{{CoxeterType::A, 2, 0}, {CoxeterType::A, 3, 0}, {CoxeterType::B, 3, 0}, {CoxeterType::H, 3, 0}};
  for (int m = 3; m <= 8; ++m) out.push_back({CoxeterType::I, 2, m});
  return out;
}

inline void verlinde_validity(CriterionLog& log) {
  for (int r = 1; r <= 8; ++r) {
    const auto v = verlinde_make(r);
    const auto rep = ta_check(v.algebra);
    log.require(rep.ok(), "ta_check V_" + std::to_string(r));
    log.require(v.algebra == verlinde_by_reduction(r), "Clebsch-Gordan vs reduction V_" + std::to_string(r));
  }
  log.note("r=1..8");
}

inline void w_element(CriterionLog& log) {
  for (int r = 1; r <= 8; ++r) log.require(verlinde_w_verify(r), "u_i u_{r-1} = u_{r-1-i}, w^2 = 1 at r=" + std::to_string(r));
  log.note("r=1..8");
}

inline void phi_map(CriterionLog& log) { log.require(phi_v3_v2_verify(), "phi: V_3 -> V_2 relations over Q(sqrt 2)"); }

inline void planar_associativity(CriterionLog& log) {
  long long exhaustive = 0;
  for (int n = 1; n <= 2; ++n)
    for (int r = 1; r <= 4; ++r) {
      std::string why;
      const long long c = associativity_exhaustive(PlanarContext::verlinde(n, r), &why);
      log.require(c >= 0, "exhaustive P(" + std::to_string(n) + "," + std::to_string(r) + ") at " + why);
      if (c > 0) exhaustive += c;
    }
  int sampled = 0;
  for (int n = 3; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) {
      std::string why;
      const bool ok = associativity_sampled(PlanarContext::verlinde(n, r), 1000, 1000u * n + r, &why);
      log.require(ok, "sampled P(" + std::to_string(n) + "," + std::to_string(r) + ") at " + why);
      sampled += 1000;
    }
  log.note("exhaustive_triples=" + std::to_string(exhaustive) + " sampled_triples=" + std::to_string(sampled));
}

inline void tabular_axioms(CriterionLog& log) {
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const auto ctx = PlanarContext::verlinde(n, r);
    const std::string at = "P(" + std::to_string(n) + "," + std::to_string(r) + ")";
    const TabularDatum datum = datum_build(ctx);
    const auto rep = axioms_check(datum, std::max<std::size_t>(exhaustive_cap(), ctx.basis().size()));
    log.require(rep.ok(), "axioms " + at);
    log.require(rep.exhaustive, "exhaustive scan " + at);
    const auto brute = a_function_brute_force(ctx);
    bool a_ok = true;
    for (const auto& d : ctx.basis()) {
      const auto it = brute.find(d);
      if (it == brute.end() || it->second != datum.a_function(d)) a_ok = false;
    }
    log.require(a_ok, "brute-force a-function " + at);
  }
}

inline void trace_values(CriterionLog& log) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 5; ++n) {
      const auto ctx = PlanarContext::verlinde(n, r);
      const auto one = ctx.one();
      LaurentInt tau_expect(1);
      LaurentInt tr_expect(1);
      for (int i = 0; i < n; ++i) {
        tau_expect = tau_expect * (LaurentInt(1) + LaurentInt::monomial(-2));
        tr_expect = tr_expect * LaurentInt::delta();
      }
      const std::string at = " n=" + std::to_string(n) + " r=" + std::to_string(r);
      log.require(ctx.tau(one) == tau_expect, "tau(1)" + at);
      log.require(ctx.tr(one) == tr_expect, "tr(1)" + at);
    }
  log.note("n=0..5 r=1..3");
}

inline void exposed_ranks(CriterionLog& log) {
  const auto r1 = drank_sequence(1, 5);
  const auto r2 = drank_sequence(2, 4);
  log.require(r1 == std::vector<BigInt>{1, 2, 5, 14, 42}, "drank r=1: " + join(r1));
  log.require(r2 == std::vector<BigInt>{2, 6, 20, 70}, "drank r=2: " + join(r2));
  log.note("r1=" + join(r1) + " r2=" + join(r2) + " r3=" + join(drank_sequence(3, 5)));
}

inline void i_admissible_counts(CriterionLog& log) {
  std::string counts;
  for (int r = 2; r <= 8; ++r) {
    const auto set = admissible(AdmissibleFlavor::I, PlanarContext::verlinde(3, r));
    const std::size_t c = set.members.size();
    log.require(c == static_cast<std::size_t>(2 * r + 1), "count at r=" + std::to_string(r) + " is " + std::to_string(c));
    counts += (counts.empty() ? "" : ",") + std::to_string(c);
  }
  const auto r1 = admissible(AdmissibleFlavor::I, PlanarContext::verlinde(3, 1)).members.size();
  log.note("r=2..8: " + counts + " (r=1 reported only: " + std::to_string(r1) + ")");
}

inline void canonical_bases(CriterionLog& log) {
  std::size_t total = 0;
  for (const auto& t : canonical_types()) {
    const TLContext tl(CoxeterGroup(t.type, t.rank, t.m));
    const auto rep = canonical_check(tl);
    log.require(rep.ok(), tl.group().name() + (rep.witnesses.empty() ? "" : ": " + rep.witnesses.front()));
    total += tl.wc().size();
  }
  log.note("canonical elements checked=" + std::to_string(total));
}

inline void embeddings(CriterionLog& log) {
  std::string counts;
  for (const auto& t : embedding_types()) {
    const TLContext tl(CoxeterGroup(t.type, t.rank, t.m));
    for (RhoVariant v : {natural_variant(tl.group()), RhoVariant::uniform}) {
      const Rho rho(tl, v);
      const auto rep = rho_build(rho);
      const std::string at = tl.group().name() + "/" + to_string(v);
      log.require(rep.ok(), at + (rep.witnesses.empty() ? "" : ": " + rep.witnesses.front()));
      log.require(rep.wc_count == tl.wc().size() && rep.image_count == rep.wc_count &&
                      rep.expected_count == rep.wc_count,
                  at + " counts " + std::to_string(rep.image_count) + "/" + std::to_string(rep.expected_count));
      if (v != RhoVariant::uniform) counts += (counts.empty() ? "" : ",") + tl.group().name() + ":" + std::to_string(rep.image_count);
    }
  }
  log.note("|W_c| " + counts);
}

inline void omega_invariance(CriterionLog& log) {
  const TLContext b3(CoxeterGroup(CoxeterType::B, 3));
  log.require(omega_fixes_image(Rho(b3, RhoVariant::B)), "omega o rho = rho for B3");
  for (int m : {4, 6}) {
    const TLContext tl(CoxeterGroup(CoxeterType::I, 2, m));
    const Rho rho(tl, RhoVariant::I);
    const auto moved = omega_moves_image(rho);
    std::string why = "omega o rho = rho for " + tl.group().name();
    if (moved) {
      const auto img = rho.canonical_image(*moved);
      // canonical images are single diagrams
      why += ", moved at c_" + tl.group().element_name(*moved) + ": " + img.begin()->first.to_string() + " -> " +
             rho.planar().omega(img).begin()->first.to_string();
    }
    log.require(!moved, why);
  }
  const TLContext a3(CoxeterGroup(CoxeterType::A, 3));
  const auto a_moved = omega_moves_image(Rho(a3, RhoVariant::A));
  log.require(a_moved.has_value(), "witness for omega o rho_A != rho_A");
  if (a_moved) log.note("type A witness c_" + a3.group().element_name(*a_moved));
}

inline void form_properties(CriterionLog& log) {
  for (const auto& t : embedding_types()) {
    const TLContext tl(CoxeterGroup(t.type, t.rank, t.m));
    const Rho rho(tl, natural_variant(tl.group()));
    const auto rep = form_check(rho);
    log.require(rep.ok(), tl.group().name() + (rep.witnesses.empty() ? "" : ": " + rep.witnesses.front()));
  }
}

inline void kl_images(CriterionLog& log) {
  std::vector<TypeSpec> types{{CoxeterType::A, 2, 0}, {CoxeterType::A, 3, 0}, {CoxeterType::B, 2, 0},
                              {CoxeterType::B, 3, 0}, {CoxeterType::H, 3, 0}};
  for (int m = 3; m <= 6; ++m) types.push_back({CoxeterType::I, 2, m});
  std::string counts;
  for (const auto& t : types) {
    const TLContext tl(CoxeterGroup(t.type, t.rank, t.m));
    const auto rep = conjecture_check(tl);
    log.require(rep.ok(), rep.group + (rep.witnesses.empty() ? "" : ": " + rep.witnesses.front()));
    counts += (counts.empty() ? "" : ",") + rep.group + ":" + std::to_string(rep.nonzero_count) + "/" +
              std::to_string(rep.group_size);
  }
  log.note("nonzero/|W| " + counts);
}

inline void tensor_and_exposed(CriterionLog& log) {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r) {
      const auto ctx = PlanarContext::verlinde(n, r);
      const std::string at = " P(" + std::to_string(n) + "," + std::to_string(r) + ")";
      log.require(verify_tensor_iso(ctx), "tensor embedding" + at);
      log.require(verify_exposed_closure(ctx), "exposed closure" + at);
    }
}

struct Criterion {
  int id;
  const char* name;
  double budget;
  void (*run)(CriterionLog&);
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "verlinde_validity", 1.0, verlinde_validity},
      {2, "verlinde_w_element", 1.0, w_element},
      {3, "phi_v3_v2", 1.0, phi_map},
      {4, "planar_associativity", 60.0, planar_associativity},
      {5, "tabular_axioms", 120.0, tabular_axioms},
      {6, "trace_values", 1.0, trace_values},
      {7, "exposed_ranks", 30.0, exposed_ranks},
      {8, "i_admissible_counts", 5.0, i_admissible_counts},
      {9, "tl_canonical_bases", 120.0, canonical_bases},
      {10, "tl_embeddings", 120.0, embeddings},
      {11, "omega_invariance", 10.0, omega_invariance},
      {12, "tl_form", 60.0, form_properties},
      {13, "kl_images", 120.0, kl_images},
      {14, "tensor_and_exposed", 60.0, tensor_and_exposed},
  };
  return list;
}

}  // namespace acceptance

inline CriterionResult run_criterion(const acceptance::Criterion& c) {
  CriterionResult res{c.id, c.name, false, 0.0, c.budget, {}};
  CriterionLog log;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(log);
  } catch (const std::exception& e) {
    log.require(false, std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream budget;
  budget << "runtime " << res.seconds << " s over budget " << c.budget << " s";
  log.require(res.seconds < c.budget, budget.str());
  res.passed = log.passed();
  res.detail = log.detail();
  return res;
}

/// Runs the selected criteria (all when `only` is empty), calling `sink` after each.
inline std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {},
                                                   const std::function<void(const CriterionResult&)>& sink = {}) {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance::criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    out.push_back(run_criterion(c));
    if (sink) sink(out.back());
  }
  return out;
}

inline std::string format_result(const CriterionResult& r, bool machine) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  std::string d = r.detail;
  for (char& ch : d) {
    if (ch == '\n') ch = ' ';
    if (machine && ch == '"') ch = '\'';
  }
  if (machine) {
    os << "criterion=" << r.id << " name=" << r.name << " status=" << (r.passed ? "pass" : "fail") << " seconds=" << r.seconds
       << " budget=" << r.budget << " detail=\"" << d << "\"";
  } else {
    os << (r.passed ? "PASS" : "FAIL") << "  " << r.id << " " << r.name << " (" << r.seconds << " s, budget " << r.budget
       << " s)";
    if (!d.empty()) os << "  " << d;
  }
  return os.str();
}

}  // namespace hyperplanar
