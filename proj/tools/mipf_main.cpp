// mipf — modular data, invariants, extensions, and spectra for the rational
// c = 1 bosons and the SO(N) level-2 affine series.
//
// Exit codes: 0 pass, 1 verification failure (residuals on stderr),
// 2 invalid input.  Identical inputs produce byte-identical artifacts.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mipf/characters.hpp"
#include "mipf/coset.hpp"
#include "mipf/error.hpp"
#include "mipf/extension.hpp"
#include "mipf/fusion.hpp"
#include "mipf/invariants.hpp"
#include "mipf/json_io.hpp"
#include "mipf/modular_data.hpp"
#include "mipf/zspectrum.hpp"

namespace {

using namespace mipf;

struct Options {
  std::string theory;
  std::string builder;
  std::string in_path;
  std::string out_path;
  std::string current;
  std::string geom;
  std::string against_diag;
  int rtilde = 0;
  int m = 0;
  int ltilde = 0;
  long long p = 1, q = 1;
  int cutoff = -1;
  int qorder = 12;
  double tol = 1e-9;
  bool literal_subscripts = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw MipfError(ErrKind::InvalidInput, "cannot open input file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Write the artifact when --out is given, otherwise print it.
void emit(const Options& opt, const std::string& artifact) {
  if (opt.out_path.empty()) {
    std::cout << artifact;
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out)
    throw MipfError(ErrKind::InvalidInput,
                    "cannot open output file " + opt.out_path);
  out << artifact;
  std::cout << "wrote " << opt.out_path << "\n";
}

TheoryId require_theory(const Options& opt) {
  if (opt.theory.empty())
    throw MipfError(ErrKind::InvalidInput, "--theory is required here");
  return parse_theory(opt.theory);
}

// Build the invariant described by --builder/--in and the parameter flags.
Mipf obtain_mipf(const Options& opt) {
  if (!opt.in_path.empty()) return mipf_from_json(read_file(opt.in_path));
  if (opt.builder.empty())
    throw MipfError(ErrKind::InvalidInput,
                    "need either --in FILE or --builder NAME");
  const std::string& b = opt.builder;
  if (b == "diag") return diagonal_invariant(*modular_data(require_theory(opt)));
  if (b == "conj")
    return charge_conjugation_invariant(*modular_data(require_theory(opt)));
  if (b == "sc") {
    const auto md = modular_data(require_theory(opt));
    if (opt.current.empty())
      throw MipfError(ErrKind::InvalidInput,
                      "builder 'sc' needs --current (label or index)");
    int J;
    try {
      J = md->index_of(opt.current);
    } catch (const MipfError&) {
      try {
        size_t pos = 0;
        J = std::stoi(opt.current, &pos);
        if (pos != opt.current.size() || J < 0 || J >= md->n) throw 0;
      } catch (...) {
        throw MipfError(ErrKind::InvalidInput,
                        "--current '" + opt.current +
                            "' is neither a label nor a field index of " +
                            theory_name(md->theory));
      }
    }
    return simple_current_invariant(*md, verlinde(*md), J);
  }
  if (b == "dinv") {
    if (opt.rtilde < 1 || opt.m < 1)
      throw MipfError(ErrKind::InvalidInput,
                      "builder 'dinv' needs --rtilde and --m");
    Family fam = Family::AffineD2;
    if (!opt.theory.empty()) {
      const TheoryId id = parse_theory(opt.theory);
      fam = id.family;
      if (id.rank != opt.rtilde * opt.m * opt.m)
        throw MipfError(ErrKind::InvalidInput,
                        "--theory rank must equal rtilde*m^2");
    }
    return build_dinv(fam, opt.rtilde, opt.m);
  }
  if (b == "scinv") {
    const TheoryId id = require_theory(opt);
    return build_scinv(id.family, id.rank);
  }
  if (b == "bseries") {
    if (opt.ltilde < 1 || opt.m < 1)
      throw MipfError(ErrKind::InvalidInput,
                      "builder 'bseries' needs --ltilde and --m");
    if (!opt.theory.empty()) {
      const TheoryId id = parse_theory(opt.theory);
      const long long L = (long long)opt.ltilde * opt.m * opt.m;
      if (id.family != Family::AffineB2 || 2 * id.rank + 1 != L)
        throw MipfError(ErrKind::InvalidInput,
                        "--theory must be B2:(ltilde*m^2-1)/2");
    }
    return build_b_series(opt.ltilde, opt.m, opt.literal_subscripts);
  }
  throw MipfError(ErrKind::InvalidInput, "unknown builder '" + b + "'");
}

int cmd_spectrum(const Options& opt) {
  const auto md = modular_data(require_theory(opt));
  std::ostringstream os;
  os << "index,label,h\n";
  for (int i = 0; i < md->n; ++i)
    os << i << "," << md->labels[i] << "," << md->h[i].str() << "\n";
  emit(opt, os.str());
  std::cout << theory_name(md->theory) << ": " << md->n
            << " primaries, c = " << md->c.str() << "\n";
  return 0;
}

int cmd_smatrix(const Options& opt) {
  const auto md = modular_data(require_theory(opt));
  emit(opt, modular_data_json(*md));
  return 0;
}

int cmd_fusion(const Options& opt) {
  const auto md = modular_data(require_theory(opt));
  emit(opt, fusion_csv(*md, verlinde(*md)));
  return 0;
}

int verify_and_report(const ModularData& md, const Mipf& m, double tol) {
  const InvarianceReport rep = verify_invariant(md, m, tol);
  if (rep.pass(tol)) {
    std::cout << "PASS " << theory_name(md.theory) << " " << m.builder
              << ": S residual " << rep.s_residual << ", T residual "
              << rep.t_residual << " (tol " << tol << ")\n";
    return 0;
  }
  std::cerr << rep.describe();
  return 1;
}

int cmd_build(const Options& opt) {
  const Mipf m = obtain_mipf(opt);
  const auto md = modular_data(m.theory);
  emit(opt, mipf_json(m));
  return verify_and_report(*md, m, opt.tol);
}

int cmd_verify(const Options& opt) {
  const Mipf m = obtain_mipf(opt);
  const auto md = modular_data(m.theory);
  return verify_and_report(*md, m, opt.tol);
}

int cmd_search(const Options& opt) {
  const auto md = modular_data(require_theory(opt));
  const auto perms = automorphism_search_perms(*md);
  std::ostringstream os;
  os << "{\n  \"theory\": \"" << theory_name(md->theory) << "\",\n"
     << "  \"count\": " << perms.size() << ",\n  \"automorphisms\": [\n";
  for (size_t i = 0; i < perms.size(); ++i) {
    const Mipf m = mipf_from_permutation(*md, perms[i]);
    const InvarianceReport rep = verify_invariant(*md, m, opt.tol);
    long long omega = 0;
    const bool ladder = ladder_scaling_form(*md, perms[i], &omega);
    os << "    {\"permutation\": [";
    for (size_t j = 0; j < perms[i].size(); ++j)
      os << (j ? "," : "") << perms[i][j];
    os << "], \"ladder_scaling\": " << (ladder ? "true" : "false");
    if (ladder) os << ", \"omega\": " << omega;
    os << ", \"s_residual\": " << rep.s_residual << "}"
       << (i + 1 < perms.size() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  emit(opt, os.str());
  std::cout << "found " << perms.size() << " automorphism invariants\n";
  return 0;
}

int cmd_extend(const Options& opt) {
  const Mipf m = obtain_mipf(opt);
  const auto md = modular_data(m.theory);
  const BlockDecomposition dec = block_decompose(m);
  const ExtendedTheory ext = extended_modular_data(*md, dec, opt.tol);
  std::ostringstream os;
  os << "{\n  \"parent\": \"" << theory_name(md->theory) << "\",\n"
     << "  \"block_count\": " << dec.count() << ",\n"
     << "  \"multiplicities\": [";
  for (int i = 0; i < dec.count(); ++i) os << (i ? "," : "") << dec.mult[i];
  os << "],\n  \"solve_residual\": " << ext.solve_residual << ",\n"
     << "  \"data\": " << modular_data_json(ext.data) << "}\n";
  emit(opt, os.str());
  std::cout << "extension has " << ext.data.n << " primaries, solve residual "
            << ext.solve_residual << "\n";
  return 0;
}

int cmd_clone_check(const Options& opt) {
  if (opt.rtilde < 1 || opt.m < 1)
    throw MipfError(ErrKind::InvalidInput,
                    "clone-check needs --rtilde and --m");
  const CloneReport rep = clone_check(opt.rtilde, opt.m, opt.tol);
  emit(opt, clone_report_json(rep));
  const double tol = opt.tol > 1e-8 ? opt.tol : 1e-8;
  if (rep.pass(tol)) {
    std::cout << "PASS clone(" << rep.rtilde << "," << rep.M
              << "): S match residual " << rep.s_match_residual
              << ", spinor shift " << rep.spinor_shift.str() << "\n";
    return 0;
  }
  std::cerr << "clone(" << rep.rtilde << "," << rep.M << ") FAILS: iso="
            << (rep.iso_found ? "yes" : "no") << ", S match residual "
            << rep.s_match_residual << " (tol " << tol << "), spinor shift "
            << rep.spinor_shift.str() << " expected "
            << rep.spinor_shift_expected.str() << "\n";
  return 1;
}

int cmd_meromorphic(const Options& opt) {
  if (opt.m < 1)
    throw MipfError(ErrKind::InvalidInput, "meromorphic needs --m");
  const MeromorphicReport rep = meromorphic_chain(opt.m, opt.tol);
  emit(opt, meromorphic_report_json(rep));
  if (rep.final_count == 1 && rep.all_simple_currents) {
    std::cout << "PASS meromorphic(" << rep.M << "): " << rep.intermediate_count
              << " -> " << rep.final_count << " primaries at c = "
              << rep.c.str() << " via " << rep.chosen_current << "\n";
    return 0;
  }
  std::cerr << "meromorphic(" << rep.M << ") FAILS: intermediate count "
            << rep.intermediate_count << ", final count " << rep.final_count
            << ", all simple currents: "
            << (rep.all_simple_currents ? "yes" : "no") << "\n";
  return 1;
}

int cmd_zcompare(const Options& opt) {
  const Mipf m = obtain_mipf(opt);
  const auto md = modular_data(m.theory);
  const Rat cutoff(opt.cutoff >= 0 ? opt.cutoff : opt.qorder);
  const ZSpectrum lhs = z_from_mipf(*md, m, cutoff);
  ZSpectrum rhs;
  std::string rhs_name;
  if (!opt.geom.empty()) {
    if (opt.geom == "circle")
      rhs = geometric_circle_spectrum(opt.p, opt.q, cutoff);
    else if (opt.geom == "orbifold")
      rhs = geometric_orbifold_spectrum(opt.p, opt.q, cutoff);
    else
      throw MipfError(ErrKind::InvalidInput,
                      "--geom must be 'circle' or 'orbifold'");
    rhs_name = "geometric " + opt.geom + " p=" + std::to_string(opt.p) +
               " q=" + std::to_string(opt.q);
  } else if (!opt.against_diag.empty()) {
    const auto md2 = modular_data(parse_theory(opt.against_diag));
    rhs = z_from_mipf(*md2, diagonal_invariant(*md2), cutoff);
    rhs_name = "diagonal spectrum of " + opt.against_diag;
  } else {
    throw MipfError(ErrKind::InvalidInput,
                    "zcompare needs --geom circle|orbifold or "
                    "--against-diag THEORY");
  }
  if (!opt.out_path.empty()) emit(opt, zspectrum_csv(lhs));
  if (lhs == rhs) {
    std::cout << "PASS: " << lhs.states.size()
              << " states match " << rhs_name << " exactly to cutoff "
              << cutoff.str() << "\n";
    return 0;
  }
  std::cerr << "spectra differ (" << lhs.states.size() << " vs "
            << rhs.states.size() << " states to cutoff " << cutoff.str()
            << ")\n";
  size_t k = 0;
  while (k < lhs.states.size() && k < rhs.states.size() &&
         lhs.states[k] == rhs.states[k])
    ++k;
  auto show = [&](const char* side, const std::vector<ZState>& v) {
    if (k < v.size())
      std::cerr << "  " << side << " state " << k << ": (h_L,h_R,mult) = ("
                << v[k].hl.str() << "," << v[k].hr.str() << ","
                << v[k].mult << ")\n";
    else
      std::cerr << "  " << side << " has no state " << k << "\n";
  };
  show("invariant", lhs.states);
  show("reference", rhs.states);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "modular data, invariant partition functions, extensions, and state "
      "spectra for rational circle bosons, their Z2 orbifolds, and the "
      "SO(N) level-2 affine series"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", opt.tol, "verification tolerance")
        ->envname("MIPF_TOL")
        ->capture_default_str();
    sub->add_option("--qorder", opt.qorder, "q-expansion order")
        ->envname("MIPF_QORDER")
        ->capture_default_str();
    sub->add_option("--out", opt.out_path, "artifact output path");
  };
  auto add_builder_flags = [&](CLI::App* sub) {
    sub->add_option("--theory", opt.theory, "theory spec, e.g. D2:9, orb:6");
    sub->add_option("--builder,--family", opt.builder,
                    "diag|conj|sc|dinv|scinv|bseries");
    sub->add_option("--in", opt.in_path, "invariant JSON file");
    sub->add_option("--rtilde", opt.rtilde, "target rank parameter");
    sub->add_option("--m", opt.m, "odd scale factor M");
    sub->add_option("--ltilde", opt.ltilde, "odd parameter of the B series");
    sub->add_option("--current", opt.current, "simple current label/index");
    sub->add_flag("--literal-subscripts", opt.literal_subscripts,
                  "use the subscripts exactly as printed in the B-series "
                  "block list (audit mode; the resulting matrix is refused)");
  };

  int rc = 0;
  auto wire = [&](CLI::App* sub, int (*fn)(const Options&)) {
    sub->callback([&opt, fn, &rc]() { rc = fn(opt); });
  };

  CLI::App* sp = app.add_subcommand("spectrum", "primary fields and weights");
  sp->add_option("--theory", opt.theory)->required();
  add_common(sp);
  wire(sp, cmd_spectrum);

  CLI::App* sm = app.add_subcommand("smatrix", "modular data as JSON");
  sm->add_option("--theory", opt.theory)->required();
  add_common(sm);
  wire(sm, cmd_smatrix);

  CLI::App* fu = app.add_subcommand("fusion", "nonzero fusion coefficients");
  fu->add_option("--theory", opt.theory)->required();
  add_common(fu);
  wire(fu, cmd_fusion);

  CLI::App* bu = app.add_subcommand("build", "construct an invariant");
  add_builder_flags(bu);
  add_common(bu);
  wire(bu, cmd_build);

  CLI::App* ve = app.add_subcommand("verify", "check S/T commutation");
  add_builder_flags(ve);
  add_common(ve);
  wire(ve, cmd_verify);

  CLI::App* se = app.add_subcommand("search", "exhaustive automorphism search");
  se->add_option("--theory", opt.theory)->required();
  add_common(se);
  wire(se, cmd_search);

  CLI::App* ex = app.add_subcommand("extend", "extension theory of an invariant");
  add_builder_flags(ex);
  add_common(ex);
  wire(ex, cmd_extend);

  CLI::App* cc = app.add_subcommand("clone-check",
                                    "certify the extension against the "
                                    "low-rank target");
  cc->add_option("--rtilde", opt.rtilde)->required();
  cc->add_option("--m", opt.m)->required();
  add_common(cc);
  wire(cc, cmd_clone_check);

  CLI::App* me = app.add_subcommand("meromorphic",
                                    "two-step reduction of the B series");
  me->add_option("--m", opt.m)->required();
  add_common(me);
  wire(me, cmd_meromorphic);

  CLI::App* zc = app.add_subcommand("zcompare", "state-spectrum comparison");
  add_builder_flags(zc);
  zc->add_option("--p", opt.p, "radius numerator");
  zc->add_option("--q", opt.q, "radius denominator");
  zc->add_option("--cutoff", opt.cutoff, "h_L+h_R cutoff (default --qorder)");
  zc->add_option("--geom", opt.geom, "circle|orbifold reference");
  zc->add_option("--against-diag", opt.against_diag,
                 "diagonal spectrum of this theory as reference");
  add_common(zc);
  wire(zc, cmd_zcompare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const MipfError& e) {
    std::cerr << "error (" << err_kind_name(e.kind) << "): " << e.what()
              << "\n";
    return e.kind == ErrKind::InvalidInput ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
