#include "cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include <mub/equiv.hpp>
#include <mub/errors.hpp>
#include <mub/io.hpp>

namespace mub::cli {

namespace {

struct RunConfig {
  std::string family;
  int64_t p = 0;
  int n = 0;
  int s = -1;
  int64_t k = -1;
  std::string in_path, out_path, spread_out, plane_out, plane_in;
  std::string mode = "auto";  // auto | all-pairs | difference-class
  uint64_t seed = 0;
  int64_t samples = 10000;
  int threads = 1;
  int limit = 1;
};

VerifyMode pick_mode(const RunConfig& cfg, int64_t dim) {
  if (cfg.mode == "all-pairs") return VerifyMode::all_pairs;
  if (cfg.mode == "difference-class") return VerifyMode::difference_class;
  return dim <= 32 ? VerifyMode::all_pairs : VerifyMode::difference_class;
}

void print_report(std::ostream& out, const CheckReport& rep) {
  out << "CHECK " << rep.name << ' ' << (rep.pass ? "PASS" : "FAIL");
  for (size_t i = 0; i < rep.details.size() && i < 4; ++i) out << (i ? "; " : " ") << rep.details[i];
  if (rep.details.size() > 4) out << "; ...";
  out << '\n';
}

struct BuildArtifacts {
  MubSet mubs;
  std::optional<SymplecticSpread> spread;
  std::optional<AffinePlane> plane;
};

BuildArtifacts build_family(const RunConfig& cfg) {
  BuildArtifacts art;
  const bool want_spread = !cfg.spread_out.empty();
  const bool want_plane = !cfg.plane_out.empty();

  if (cfg.family == "desarguesian") {
    if (cfg.p < 2 || cfg.n < 1) fail(Errc::BadParameters, "desarguesian requires --p and --n");
    if (cfg.p == 2) {
      const SpreadSet k = desarguesian(2, cfg.n);
      art.mubs = frames_from_spreadset_binary(k);
      if (want_spread) art.spread = spread_from_spreadset(k);
      if (want_plane) art.plane = plane_from_spreadset(k);
    } else if (cfg.n % 2 == 1) {
      const SpreadSet k = desarguesian(cfg.p, cfg.n);
      art.mubs = frames_from_spreadset_odd(k);
      if (want_spread) art.spread = spread_from_spreadset(k);
      if (want_plane) art.plane = plane_from_spreadset(k);
    } else {
      // no self-dual basis: trace-form exponent path
      const ExponentFamily fam = desarguesian_exponents(cfg.p, cfg.n);
      art.mubs = frames_from_exponents(fam);
      if (want_spread || want_plane) {
        const SpreadSet k = spreadset_from_exponent_family(fam);
        if (want_spread) art.spread = spread_from_spreadset(k);
        if (want_plane) art.plane = plane_from_spreadset(k);
      }
    }
    art.mubs.prov.family = "desarguesian";
    art.mubs.prov.params = {{"p", std::to_string(cfg.p)}, {"n", std::to_string(cfg.n)}};
    return art;
  }
  if (cfg.family == "kantor") {
    if (cfg.p != 0 && cfg.p != 2) fail(Errc::BadParameters, "the kantor family has p = 2");
    const SymplecticSpread spread = kantor_binary(cfg.n);
    // members[1] is the graph of the zero map (m = 0), members[0] is 0+V
    const SpreadSet k = spreadset_from_spread(spread, spread.members[1], spread.members[0]);
    art.mubs = frames_from_spreadset_binary(k);
    art.mubs.prov.family = "kantor";
    art.mubs.prov.params = {{"n", std::to_string(cfg.n)}, {"p", "2"}};
    if (want_spread) art.spread = spread;
    if (want_plane) art.plane = plane_from_spreadset(k);
    return art;
  }
  if (cfg.family == "bkl") {
    if (cfg.s < 0) fail(Errc::BadParameters, "bkl requires --s");
    const ExponentFamily fam = bkl_exponents(cfg.p, cfg.n, cfg.s);
    art.mubs = frames_from_exponents(fam);
    if (want_spread || want_plane) {
      const SpreadSet k = spreadset_from_exponent_family(fam);
      if (want_spread) art.spread = spread_from_spreadset(k);
      if (want_plane) art.plane = plane_from_spreadset(k);
    }
    return art;
  }
  if (cfg.family == "planar") {
    if (cfg.p != 0 && cfg.p != 3) fail(Errc::BadParameters, "the planar family has p = 3");
    if (cfg.k < 0) fail(Errc::BadParameters, "planar requires --k");
    const ExponentFamily fam = planar_exponents(cfg.n, cfg.k);
    art.mubs = frames_from_exponents(fam);
    if (want_spread)
      fail(Errc::BadParameters, "the planar family does not arise from a spread; no --spread-out");
    if (want_plane) {
      const Field f(3, cfg.n);
      const int64_t e = [&] {
        int64_t r = 1;
        for (int64_t i = 0; i < cfg.k; ++i) r *= 3;
        return (r + 1) / 2;
      }();
      std::vector<int64_t> table;
      for (int64_t r = 0; r < f.size(); ++r) table.push_back(f.from_rank(r).pow(e).rank());
      art.plane = plane_from_planar(f, table);
    }
    return art;
  }
  fail(Errc::BadParameters, "unknown family '" + cfg.family + "'");
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
  BuildArtifacts art = build_family(cfg);
  const CheckReport rep = verify_mub_set(art.mubs, pick_mode(cfg, art.mubs.dim), cfg.threads);
  print_report(out, rep);
  if (!rep.pass) return kExitVerifyFailed;
  if (art.spread) {
    const CheckReport srep = verify_symplectic_spread(*art.spread);
    print_report(out, srep);
    if (!srep.pass) return kExitVerifyFailed;
  }
  if (art.plane) {
    PlaneCheckOptions opts;
    opts.exhaustive = art.plane->order <= 32;
    opts.seed = cfg.seed;
    opts.samples = cfg.samples;
    const CheckReport prep = verify_plane_axioms(*art.plane, opts);
    print_report(out, prep);
    if (!prep.pass) return kExitVerifyFailed;
  }
  write_file(cfg.out_path, serialize_mubset(art.mubs));
  out << "WROTE " << cfg.out_path << '\n';
  if (art.spread) {
    write_file(cfg.spread_out, serialize_spread(*art.spread));
    out << "WROTE " << cfg.spread_out << '\n';
  }
  if (art.plane) {
    write_file(cfg.plane_out, serialize_plane(*art.plane));
    out << "WROTE " << cfg.plane_out << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::string text = read_file(cfg.in_path);
  const std::string format = sniff_format(text);
  if (format == "MUBSET") {
    const MubSet m = parse_mubset(text);
    const CheckReport rep = verify_mub_set(m, pick_mode(cfg, m.dim), cfg.threads);
    print_report(out, rep);
    return rep.pass ? kExitOk : kExitVerifyFailed;
  }
  if (format == "SPREAD" || format == "ORTHOSPREAD") {
    const SpreadFileData data = parse_spread(text);
    CheckReport rep;
    if (data.orthogonal)
      rep = verify_orthogonal_spread(OrthogonalSpread{QuadraticSpace{data.n}, data.members});
    else
      rep = verify_symplectic_spread(
          SymplecticSpread{SymplecticSpace{data.p, data.n}, data.members});
    print_report(out, rep);
    return rep.pass ? kExitOk : kExitVerifyFailed;
  }
  if (format == "PLANE") {
    const AffinePlane plane = parse_plane(text);
    PlaneCheckOptions opts;
    opts.exhaustive = cfg.mode == "all-pairs" || (cfg.mode == "auto" && plane.order <= 32);
    opts.seed = cfg.seed;
    opts.samples = cfg.samples;
    const CheckReport rep = verify_plane_axioms(plane, opts);
    print_report(out, rep);
    return rep.pass ? kExitOk : kExitVerifyFailed;
  }
  fail(Errc::ParseError, "unrecognized file format '" + format + "'");
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
  const MubSet m = parse_mubset(read_file(cfg.in_path));
  write_file(cfg.out_path, export_vectors(m));
  out << "WROTE " << cfg.out_path << '\n';
  return kExitOk;
}

int cmd_invariants(const RunConfig& cfg, std::ostream& out) {
  const MubSet m = parse_mubset(read_file(cfg.in_path));
  std::optional<AffinePlane> plane;
  if (!cfg.plane_in.empty()) plane = parse_plane(read_file(cfg.plane_in));
  const InvariantRecord rec = invariant_battery(m, plane ? &*plane : nullptr);
  const std::string text = rec.serialize();
  if (cfg.out_path.empty())
    out << text;
  else {
    write_file(cfg.out_path, text);
    out << "WROTE " << cfg.out_path << '\n';
  }
  return kExitOk;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  const auto spreads = search_orthogonal_spreads(cfg.n, cfg.limit);
  if (spreads.empty()) {
    out << "FOUND 0\n";
    return kExitOk;
  }
  int code = kExitOk;
  for (size_t i = 0; i < spreads.size(); ++i) {
    const CheckReport rep = verify_orthogonal_spread(spreads[i]);
    print_report(out, rep);
    if (!rep.pass) code = kExitVerifyFailed;
    const std::string path =
        spreads.size() == 1 ? cfg.out_path : cfg.out_path + "." + std::to_string(i);
    write_file(path, serialize_orthospread(spreads[i]));
    out << "WROTE " << path << '\n';
  }
  out << "FOUND " << spreads.size() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact construction and verification of complete MUB sets"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* build = app.add_subcommand("build", "construct a family and write verified files");
  build->add_option("--family", cfg.family, "desarguesian | kantor | bkl | planar")->required();
  build->add_option("--p", cfg.p, "characteristic");
  build->add_option("--n", cfg.n, "extension degree")->required();
  build->add_option("--s", cfg.s, "bkl twist parameter");
  build->add_option("--k", cfg.k, "planar exponent parameter");
  build->add_option("--out", cfg.out_path, "MUBSET output path")->required();
  build->add_option("--spread-out", cfg.spread_out, "also write the SPREAD file");
  build->add_option("--plane-out", cfg.plane_out, "also write the PLANE file");
  build->add_option("--mode", cfg.mode, "auto | all-pairs | difference-class")
      ->check(CLI::IsMember({"auto", "all-pairs", "difference-class"}));
  build->add_option("--threads", cfg.threads, "verification thread count");
  build->add_option("--seed", cfg.seed, "plane sampling seed");
  build->add_option("--samples", cfg.samples, "plane sampling count");

  CLI::App* verify = app.add_subcommand("verify", "verify a MUBSET, SPREAD, ORTHOSPREAD or PLANE file");
  verify->add_option("--in", cfg.in_path, "input path")->required();
  verify->add_option("--mode", cfg.mode, "auto | all-pairs | difference-class")
      ->check(CLI::IsMember({"auto", "all-pairs", "difference-class"}));
  verify->add_option("--threads", cfg.threads, "verification thread count");
  verify->add_option("--seed", cfg.seed, "plane sampling seed");
  verify->add_option("--samples", cfg.samples, "plane sampling count");

  CLI::App* exp = app.add_subcommand("export", "write the unit-vector list of a MUBSET file");
  exp->add_option("--in", cfg.in_path, "MUBSET input path")->required();
  exp->add_option("--out", cfg.out_path, "vector list output path")->required();

  CLI::App* inv = app.add_subcommand("invariants", "print the invariant record of a MUBSET file");
  inv->add_option("--in", cfg.in_path, "MUBSET input path")->required();
  inv->add_option("--plane", cfg.plane_in, "attach a PLANE file for the p-rank field");
  inv->add_option("--out", cfg.out_path, "write the record here instead of stdout");

  CLI::App* search = app.add_subcommand("search", "search for orthogonal spreads (n even, 2n <= 8)");
  search->add_option("--n", cfg.n, "half-dimension")->required();
  search->add_option("--limit", cfg.limit, "maximum number of spreads");
  search->add_option("--out", cfg.out_path, "output path (suffix .<i> when limit > 1)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (exp->parsed()) return cmd_export(cfg, out);
    if (inv->parsed()) return cmd_invariants(cfg, out);
    if (search->parsed()) return cmd_search(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mub::cli
