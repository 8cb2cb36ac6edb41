#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hyperplanar/acceptance.hpp"
#include "hyperplanar/embed.hpp"
#include "hyperplanar/hecke.hpp"
#include "hyperplanar/planar.hpp"
#include "hyperplanar/tabular.hpp"
#include "hyperplanar/verlinde.hpp"

namespace hyperplanar {

namespace cli {

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_usage = 2;

/// Bad flags, bad contexts, unreadable inputs.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// `key=value`, quoting values that contain spaces.
inline std::string kv(const std::string& key, const std::string& value) {
  if (value.find_first_of(" \t\"") == std::string::npos && !value.empty()) return key + "=" + value;
  std::string q;
  for (char c : value) q += (c == '"') ? '\'' : c;
  return key + "=\"" + q + "\"";
}

struct PlanarFlags {
  std::optional<int> n;
  std::optional<int> verlinde;
  std::string algebra_file;
};

struct CoxeterFlags {
  std::string type;
  int rank = 0;
  int m = 0;
  bool allow_h4 = false;
};

struct ElementFlags {
  std::vector<std::string> inline_text;
  std::vector<std::string> files;
};

inline void add_planar_flags(CLI::App* sub, PlanarFlags& f) {
  sub->add_option("--n", f.n, "number of strands (2n marked points)");
  sub->add_option("--verlinde", f.verlinde, "use the Verlinde algebra V_r as edge labels");
  sub->add_option("--algebra", f.algebra_file, "read the edge-label table algebra from a file");
}

inline void add_coxeter_flags(CLI::App* sub, CoxeterFlags& f) {
  sub->add_option("--type", f.type, "Coxeter type: A, B, H or I")->required();
  sub->add_option("--rank", f.rank, "rank of the Coxeter graph (2 for type I)");
  sub->add_option("--m", f.m, "bond label for type I_2(m)");
  sub->add_flag("--allow-h4", f.allow_h4, "permit H4 (slow)");
}

inline void add_element_flags(CLI::App* sub, ElementFlags& f) {
  sub->add_option("-e,--element", f.inline_text, "element text; terms separated by ';' or newlines");
  sub->add_option("-f,--file", f.files, "element file, '-' for stdin");
}

inline std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline PlanarContext planar_context(const PlanarFlags& f) {
  if (!f.n) throw UsageError("--n is required");
  if (*f.n < 0) throw UsageError("--n must be nonnegative");
  if (f.verlinde.has_value() == !f.algebra_file.empty())
    throw UsageError("exactly one of --verlinde and --algebra is required");
  if (f.verlinde) {
    if (*f.verlinde < 1) throw UsageError("--verlinde must be at least 1");
    return PlanarContext::verlinde(*f.n, *f.verlinde);
  }
  try {
    return PlanarContext(*f.n, TableAlgebra::parse(read_file(f.algebra_file)));
  } catch (const ParseError& e) {
    throw UsageError(std::string("--algebra: ") + e.what());
  }
}

inline CoxeterGroup coxeter_group(const CoxeterFlags& f) {
  CoxeterType t;
  try {
    t = parse_coxeter_type(f.type);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--type: ") + e.what());
  }
  int rank = f.rank;
  if (t == CoxeterType::I) {
    if (rank == 0) rank = 2;
    if (f.m < 2) throw UsageError("--m is required for type I");
  } else if (rank < 1) {
    throw UsageError("--rank is required for type " + to_string(t));
  }
  try {
    return CoxeterGroup(t, rank, f.m, CoxeterOptions{f.allow_h4});
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--type/--rank/--m: ") + e.what());
  }
}

inline std::vector<PlanarElement> read_elements(const ElementFlags& f, const PlanarContext& ctx) {
  if (!f.inline_text.empty() && !f.files.empty()) throw UsageError("use either --element or --file, not both");
  std::vector<std::string> texts;
  for (auto t : f.inline_text) {
    for (char& c : t)
      if (c == ';') c = '\n';
    texts.push_back(std::move(t));
  }
  for (const auto& p : f.files) texts.push_back(read_file(p));
  std::vector<PlanarElement> out;
  for (const auto& t : texts) {
    try {
      out.push_back(element_parse(t, ctx));
    } catch (const ParseError& e) {
      throw UsageError(std::string("--element: ") + e.what());
    } catch (const std::out_of_range& e) {
      throw UsageError(std::string("--element: ") + e.what());
    }
  }
  return out;
}

inline std::vector<PlanarElement> exactly(std::vector<PlanarElement> xs, std::size_t k) {
  if (xs.size() != k) throw UsageError("expected " + std::to_string(k) + " element(s), got " + std::to_string(xs.size()));
  return xs;
}

inline void print_element(std::ostream& out, const PlanarElement& x, bool machine) {
  if (!machine) {
    out << element_to_string(x);
    return;
  }
  if (x.is_zero()) {
    out << "zero=1\n";
    return;
  }
  for (const auto& [d, c] : x) out << kv("coeff", c.to_string()) << " " << kv("diagram", d.to_string()) << "\n";
}

inline void print_diagrams(std::ostream& out, const std::vector<LabeledDiagram>& ds, bool machine) {
  std::size_t i = 0;
  for (const auto& d : ds) {
    if (machine)
      out << "index=" << i++ << " " << kv("diagram", d.to_string()) << "\n";
    else
      out << d.to_string() << "\n";
  }
  out << (machine ? "count=" : "count ") << ds.size() << "\n";
}

inline const char* verdict(bool ok) { return ok ? "pass" : "FAIL"; }

inline void flag_line(std::ostream& out, bool machine, const std::string& key, bool ok) {
  if (machine)
    out << key << "=" << (ok ? "pass" : "fail") << "\n";
  else
    out << key << " " << verdict(ok) << "\n";
}

inline std::vector<int> parse_only(const std::vector<int>& only) {
  for (int k : only)
    if (k < 1 || k > static_cast<int>(acceptance::criteria().size()))
      throw UsageError("--only: no criterion " + std::to_string(k));
  return only;
}

}  // namespace cli

inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using namespace cli;
  CLI::App app{"Diagram algebras over Verlinde labels and Temperley-Lieb embeddings"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));

  PlanarFlags pf;
  CoxeterFlags cf;
  ElementFlags ef;
  int r = 0;
  int nmax = 0;
  std::size_t cap = exhaustive_cap();
  std::string variant;
  std::string trace_kind = "tau";
  std::vector<int> only;

  auto* verlinde = app.add_subcommand("verlinde", "structure constants of V_r and their check");
  verlinde->add_option("--r", r, "level")->required()->check(CLI::Range(1, 64));

  auto* basis = app.add_subcommand("basis", "every basis diagram of P_n^A");
  add_planar_flags(basis, pf);
  auto* dbasis = app.add_subcommand("dbasis", "exposed basis diagrams of D(n, r)");
  add_planar_flags(dbasis, pf);

  auto* mul = app.add_subcommand("mul", "product of two elements");
  add_planar_flags(mul, pf);
  add_element_flags(mul, ef);
  auto* star = app.add_subcommand("star", "anti-involution x -> x^*");
  add_planar_flags(star, pf);
  add_element_flags(star, ef);
  auto* trace = app.add_subcommand("trace", "closure trace tr and normalized trace tau");
  add_planar_flags(trace, pf);
  add_element_flags(trace, ef);
  trace->add_option("--kind", trace_kind, "which trace to print")->check(CLI::IsMember({"tau", "tr", "both"}));
  auto* omega = app.add_subcommand("omega", "relabel transitional edges by u_{r-1}");
  add_planar_flags(omega, pf);
  add_element_flags(omega, ef);

  auto* axioms = app.add_subcommand("axioms", "tabular axioms A1-A5 and the a-function");
  add_planar_flags(axioms, pf);
  axioms->add_option("--cap", cap, "basis size above which scans are sampled");

  auto* tlbasis = app.add_subcommand("tlbasis", "canonical basis of TL(X) in the t~ basis");
  add_coxeter_flags(tlbasis, cf);
  auto* embed = app.add_subcommand("embed", "diagram embedding of TL(X) and its checks");
  add_coxeter_flags(embed, cf);
  embed->add_option("--variant", variant, "A, B, H, I or uniform (default: natural for the type)");
  auto* conjecture = app.add_subcommand("conjecture", "images of Kazhdan-Lusztig elements under the uniform map");
  add_coxeter_flags(conjecture, cf);

  auto* drank = app.add_subcommand("drank", "ranks of D(n, r) for n = 1..nmax");
  drank->add_option("--r", r, "level")->required()->check(CLI::Range(1, 64));
  drank->add_option("--nmax", nmax, "largest n")->required()->check(CLI::Range(1, 13));

  auto* selftest = app.add_subcommand("selftest", "acceptance suite, one line per criterion");
  selftest->add_option("--only", only, "run only these criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  }
  const bool machine = format == "machine";

  try {
    if (verlinde->parsed()) {
      const auto v = verlinde_make(r);
      const auto rep = ta_check(v.algebra);
      const bool same = v.algebra == verlinde_by_reduction(r);
      if (machine) {
        out << "rank=" << r << "\n";
        for (const auto& c : v.algebra.structure_constants())
          out << "i=" << c.i << " j=" << c.j << " m=" << c.m << " c=" << c.value << "\n";
      } else {
        out << v.algebra.to_text();
      }
      flag_line(out, machine, "axioms", rep.ok());
      flag_line(out, machine, "reduction_agrees", same);
      flag_line(out, machine, "w_element", verlinde_w_verify(r));
      return rep.ok() && same && verlinde_w_verify(r) ? exit_ok : exit_verification;
    }
    if (basis->parsed() || dbasis->parsed()) {
      const auto ctx = planar_context(pf);
      if (dbasis->parsed() && !ctx.verlinde_r()) throw UsageError("dbasis needs --verlinde");
      print_diagrams(out, basis->parsed() ? ctx.basis() : ctx.exposed_basis(), machine);
      return exit_ok;
    }
    if (mul->parsed()) {
      const auto ctx = planar_context(pf);
      const auto xs = exactly(read_elements(ef, ctx), 2);
      print_element(out, ctx.mul(xs[0], xs[1]), machine);
      return exit_ok;
    }
    if (star->parsed()) {
      const auto ctx = planar_context(pf);
      print_element(out, ctx.star(exactly(read_elements(ef, ctx), 1)[0]), machine);
      return exit_ok;
    }
    if (trace->parsed()) {
      const auto ctx = planar_context(pf);
      const auto x = exactly(read_elements(ef, ctx), 1)[0];
      const char* sep = machine ? "=" : ": ";
      auto line = [&](const std::string& key, const LaurentInt& value) {
        out << (machine ? kv(key, value.to_string()) : key + sep + value.to_string()) << "\n";
      };
      if (trace_kind != "tau") line("tr", ctx.tr(x));
      if (trace_kind != "tr") line("tau", ctx.tau(x));
      return exit_ok;
    }
    if (omega->parsed()) {
      const auto ctx = planar_context(pf);
      if (!ctx.verlinde_r()) throw UsageError("omega needs --verlinde");
      print_element(out, ctx.omega(exactly(read_elements(ef, ctx), 1)[0]), machine);
      return exit_ok;
    }
    if (axioms->parsed()) {
      const auto ctx = planar_context(pf);
      const TabularDatum datum = datum_build(ctx);
      const auto rep = axioms_check(datum, cap);
      flag_line(out, machine, "A1", rep.a1);
      flag_line(out, machine, "A2", rep.a2);
      flag_line(out, machine, "A3", rep.a3);
      flag_line(out, machine, "A4", rep.a4);
      flag_line(out, machine, "A5", rep.a5);
      flag_line(out, machine, "a_function", rep.a_function);
      out << (machine ? "exhaustive=" : "exhaustive ") << (rep.exhaustive ? "yes" : "no") << "\n";
      for (const auto& w : rep.witnesses)
        out << (machine ? kv("witness", w.axiom + " " + w.detail) : "witness " + w.axiom + " " + w.detail) << "\n";
      return rep.ok() ? exit_ok : exit_verification;
    }
    if (tlbasis->parsed()) {
      const TLContext tl(coxeter_group(cf));
      for (Element w : tl.wc()) {
        const std::string body = tl_to_string_tilde(tl, tl.canonical(w));
        if (machine)
          out << kv("element", tl.element_name(w)) << " " << kv("canonical", body) << "\n";
        else
          out << "c_" << tl.element_name(w) << " = " << body << "\n";
      }
      const auto rep = canonical_check(tl);
      out << (machine ? "count=" : "count ") << tl.wc().size() << "\n";
      flag_line(out, machine, "canonical_check", rep.ok());
      for (const auto& w : rep.witnesses) out << (machine ? kv("witness", w) : "witness " + w) << "\n";
      return rep.ok() ? exit_ok : exit_verification;
    }
    if (embed->parsed()) {
      const TLContext tl(coxeter_group(cf));
      RhoVariant v = natural_variant(tl.group());
      if (!variant.empty()) {
        try {
          v = parse_rho_variant(variant);
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--variant: ") + e.what());
        }
      }
      std::optional<Rho> rho;
      try {
        rho.emplace(tl, v);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--variant: ") + e.what());
      }
      const auto rep = rho_build(*rho);
      if (!machine) {
        out << report_to_text(rep, tl);
      } else {
        out << kv("group", rep.group) << " " << kv("variant", to_string(rep.variant)) << " n=" << rep.n << " r=" << rep.r
            << "\n";
        for (std::size_t s = 0; s < rep.generator_images.size(); ++s)
          out << "generator=s" << s + 1 << " " << kv("image", rep.generator_images[s].to_string()) << "\n";
        for (const auto& [w, d] : rep.bijection)
          out << kv("element", tl.element_name(w)) << " " << kv("image", d.to_string()) << "\n";
        flag_line(out, true, "relations", rep.relations);
        flag_line(out, true, "single_diagrams", rep.single_diagrams);
        flag_line(out, true, "injective", rep.injective);
        flag_line(out, true, "image_matches", rep.image_matches);
        if (rep.multiplicative) flag_line(out, true, "multiplicative", *rep.multiplicative);
        if (rep.dihedral_descents) flag_line(out, true, "dihedral_descents", *rep.dihedral_descents);
        out << "wc=" << rep.wc_count << " image=" << rep.image_count << " expected=" << rep.expected_count << "\n";
        for (const auto& w : rep.witnesses) out << kv("witness", w) << "\n";
      }
      return rep.ok() ? exit_ok : exit_verification;
    }
    if (conjecture->parsed()) {
      const TLContext tl(coxeter_group(cf));
      const auto rep = conjecture_check(tl);
      if (machine)
        out << kv("group", rep.group) << " size=" << rep.group_size << " zero=" << rep.zero_count
            << " nonzero=" << rep.nonzero_count << "\n";
      else
        out << "group " << rep.group << " size " << rep.group_size << " zero " << rep.zero_count << " nonzero "
            << rep.nonzero_count << "\n";
      flag_line(out, machine, "zero_or_canonical", rep.all_zero_or_canonical);
      flag_line(out, machine, "injective", rep.injective);
      flag_line(out, machine, "zero_exactly_on_complex", rep.zero_exactly_on_complex);
      flag_line(out, machine, "agrees_with_theta", rep.agrees_with_theta);
      for (const auto& w : rep.witnesses) out << (machine ? kv("witness", w) : "witness " + w) << "\n";
      return rep.ok() ? exit_ok : exit_verification;
    }
    if (drank->parsed()) {
      const auto seq = drank_sequence(r, nmax);
      if (machine) {
        for (std::size_t i = 0; i < seq.size(); ++i) out << "n=" << i + 1 << " drank=" << seq[i].str() << "\n";
      } else {
        for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? " " : "") << seq[i].str();
        out << "\n";
      }
      return exit_ok;
    }
    if (selftest->parsed()) {
      bool all = true;
      run_acceptance(parse_only(only), [&](const CriterionResult& res) {
        out << format_result(res, machine) << std::endl;
        all = all && res.passed;
      });
      return all ? exit_ok : exit_verification;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::logic_error& e) {
    err << "verification failure: " << e.what() << "\n";
    return exit_verification;
  }
  return exit_usage;
}

}  // namespace hyperplanar
