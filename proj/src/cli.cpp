#include "catgal/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "catgal/galois.hpp"
#include "catgal/graph.hpp"
#include "catgal/homology.hpp"
#include "catgal/kan.hpp"
#include "catgal/structure.hpp"

namespace catgal::cli {

namespace {

using ojson = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kVersion = "0.1.0";

struct Report {
  ojson j;
  bool pass = true;
  Clock::time_point t0 = Clock::now();

  explicit Report(std::string command) {
    j["command"] = std::move(command);
    j["version"] = kVersion;
    j["checks"] = ojson::array();
  }
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    ojson c;
    c["name"] = name;
    c["pass"] = ok;
    if (!detail.empty()) c["detail"] = detail;
    j["checks"].push_back(std::move(c));
    pass = pass && ok;
  }
  int finish(std::ostream& out, bool pretty, bool no_timing) {
    j["pass"] = pass;
    if (!no_timing)
      j["ms"] = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (pretty)
      out << j.dump(2) << "\n";
    else
      out << j.dump() << "\n";
    return pass ? 0 : 1;
  }
};

ojson invariants_json(const std::vector<long long>& v) {
  ojson a = ojson::array();
  for (long long d : v) a.push_back(d);
  return a;
}

void group_report(const grp::Group& g, Report& rep) {
  rep.j["group"] = g.name();
  rep.j["order"] = g.order();
  rep.j["abelian"] = g.abelian();
  if (g.abelian()) rep.j["invariants"] = invariants_json(grp::abelian_invariants(g));
  rep.j["center_order"] = grp::center(g).order();
  rep.j["derived_order"] = grp::derived_subgroup(g).order();
  rep.check("group_axioms", true);
}

void ext_report(const grp::Hom& h, const std::string& name, Report& rep) {
  auto cls = structure::classify(h);
  rep.j["extension"] = name;
  rep.j["fibration"] = cls.is_fibration;
  rep.j["trivial_covering"] = cls.is_trivial_covering;
  rep.j["central"] = cls.is_central;
  rep.j["normal"] = cls.is_normal;
  rep.check("classified", true);
  if (cls.is_fibration) {
    rep.check("central_equals_normal", cls.is_central == cls.is_normal);
    if (cls.is_normal) {
      auto g = gal::galois_group(grp::Extension::make(h, name));
      rep.j["galois_invariants"] = invariants_json(grp::abelian_invariants(g.via_intersection));
      rep.check("two_path_galois_agreement", g.comparison.bijective());
    }
  }
}

gal::WeaklyUniversalCert load_pi1_cert(const io::json& j, const std::string& dir, ojson* names) {
  grp::Group base = io::resolve_group(j.at("base"), dir);
  grp::Extension u = kan::resolve_universal(j.at("universal"), dir, base);
  std::vector<grp::Extension> family;
  for (const auto& jf : j.at("family")) {
    family.push_back(kan::resolve_family_entry(jf, dir, base, u));
    if (names) names->push_back(family.back().name);
  }
  return gal::verify_weakly_universal(u, family);
}

int run_group(const std::string& file, Report& rep) {
  group_report(io::load_group(file), rep);
  return 0;
}

void run_pi1(const std::string& file, Report& rep) {
  auto j = io::load_json(file);
  ojson family_names = ojson::array();
  auto cert = load_pi1_cert(j, io::dir_of(file), &family_names);
  auto pi1 = gal::pi1_object(cert);
  rep.j["base"] = cert.u.cod().name();
  rep.j["cover"] = cert.u.name;
  rep.j["family"] = family_names;
  rep.j["pi1_invariants"] = invariants_json(grp::abelian_invariants(pi1.group));
  rep.j["stem"] = pi1.stem;
  rep.check("certificate", true);
  rep.check("two_path_galois_agreement", pi1.gal.comparison.bijective());
}

void run_kan(const std::string& file, Report& rep) {
  auto s = kan::load_scenario(file);
  rep.j["scenario"] = s.name;
  rep.j["kind"] = s.kind;
  if (s.kind == "kan") {
    auto v = kan::check_kappa_kan(s);
    rep.j["factorization_ok"] = v.factorization_ok;
    rep.j["uniqueness_ok"] = v.uniqueness_ok;
    ojson w = ojson::array();
    for (const auto& x : v.witnesses) w.push_back(x);
    rep.j["witnesses"] = w;
    rep.check("factorization", v.factorization_ok);
    rep.check("uniqueness", v.uniqueness_ok);
  } else {
    auto r = kan::check_iota_factorization(s);
    ojson w = ojson::array();
    for (const auto& x : r.witnesses) w.push_back(x);
    rep.j["witnesses"] = w;
    rep.check("iota_factorization", r.ok);
    ojson deltas = ojson::array();
    for (const auto& e : s.exts) {
      auto d = kan::delta_component(e.ext, s.bases[e.base].cert);
      ojson dj;
      dj["extension"] = e.name;
      ojson img = ojson::array();
      for (int x = 0; x < d.dom().order(); ++x) img.push_back(e.ext.kernel.elems[d(x)]);
      dj["delta_image"] = img;
      deltas.push_back(std::move(dj));
    }
    rep.j["delta"] = deltas;
  }
}

void run_h2(const std::string& file, Report& rep) {
  auto g = io::load_group(file);
  auto h1 = homology::homology(g, 1);
  auto h2 = homology::h2_report(g);
  rep.j["group"] = g.name();
  rep.j["H1"] = invariants_json(h1);
  rep.j["H2"] = invariants_json(h2.invariants);
  ojson dims;
  dims["C1"] = g.order() - 1;
  dims["C2"] = (g.order() - 1) * (g.order() - 1);
  dims["C3"] = (g.order() - 1) * (g.order() - 1) * (g.order() - 1);
  dims["mode"] = h2.sparse ? "sparse" : "dense";
  rep.j["dims"] = dims;
  rep.check("h1_matches_abelianization",
            h1 == grp::abelian_invariants(grp::abelianization(g).group));
  rep.check("h2_rank_zero", h2.z_rank == 0);
}

void run_graph_exactseq(const std::string& file, int word_bound, Report& rep) {
  auto c = graph::load_cover(file);
  auto r = graph::exact_sequence_check(c, word_bound);
  rep.j["cover"] = c.total.name + "->" + c.base.name;
  rep.j["sheets"] = c.sheets;
  rep.j["rank_base"] = r.rank_base;
  rep.j["rank_total"] = r.rank_total;
  rep.j["word_bound"] = r.word_bound;
  ojson w = ojson::array();
  for (const auto& x : r.witnesses) w.push_back(x);
  rep.j["witnesses"] = w;
  rep.check("pi1_injective_up_to_bound", r.pi1_injective);
  rep.check("delta_image_exact", r.delta_image_matches);
  rep.check("preimage_exact", r.preimage_matches);
  rep.check("pi0_surjective", r.pi0_surjective);
  rep.check("stabilizer_up_to_bound", r.stabilizer_matches);
}

void run_graph_deck(const std::string& file, Report& rep) {
  auto c = graph::load_cover(file);
  auto d = graph::deck_group(c);
  rep.j["cover"] = c.total.name + "->" + c.base.name;
  rep.j["deck_order"] = d.group.order();
  rep.j["regular"] = d.regular;
  rep.j["sheets"] = c.sheets;
  rep.check("deck_divides_sheets", c.sheets <= 0 || c.sheets % d.group.order() == 0);
}

void run_graph_galois(const std::string& file, Report& rep) {
  auto c = graph::load_cover(file);
  rep.j["cover"] = c.total.name + "->" + c.base.name;
  try {
    auto g = graph::graph_galois_group(c);
    rep.j["galois_order"] = g.group.order();
    rep.j["deck_order"] = g.deck_order;
    rep.j["fiber_in_component"] = g.fiber_in_component;
    rep.check("galois_equals_deck", g.group.order() == g.deck_order);
    rep.check("galois_equals_fiber_in_component", g.group.order() == g.fiber_in_component);
  } catch (const NotNormalCover& e) {
    rep.j["normal"] = false;
    rep.check("normal_cover", false, e.what());
  }
}

void run_suite_file(const std::filesystem::path& p, int word_bound, ojson& files, bool& all_pass,
                    bool pretty, bool no_timing) {
  (void)pretty;
  Report rep("suite:" + p.filename().string());
  bool recognized = true;
  try {
    auto j = io::load_json(p.string());
    if (j.contains("kind") && j.contains("bases")) {
      run_kan(p.string(), rep);
    } else if (j.contains("total") && j.contains("base") && j.contains("dmap")) {
      run_graph_exactseq(p.string(), word_bound, rep);
    } else if (j.contains("universal") && j.contains("family")) {
      run_pi1(p.string(), rep);
    } else if (j.contains("map") && j.contains("dom")) {
      ext_report(io::load_hom(p.string()), j.value("name", p.filename().string()), rep);
    } else if (j.contains("table") || j.contains("generators")) {
      group_report(io::group_from_json(j), rep);
    } else if (j.contains("darts")) {
      auto g = graph::graph_from_json(j);
      rep.j["graph"] = g.name;
      rep.check("graph_valid", true);
    } else {
      recognized = false;
      rep.check("recognized", false, "unknown fixture shape");
    }
  } catch (const Error& e) {
    rep.check("error", false, e.what());
  }
  (void)recognized;
  rep.j["pass"] = rep.pass;
  if (!no_timing)
    rep.j["ms"] = std::chrono::duration<double, std::milli>(Clock::now() - rep.t0).count();
  ojson entry;
  entry["file"] = p.filename().string();
  entry["pass"] = rep.pass;
  entry["report"] = rep.j;
  files.push_back(std::move(entry));
  all_pass = all_pass && rep.pass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite categorical Galois theory toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  bool pretty = false, no_timing = false;
  int threads = 0;
  app.add_flag("--pretty", pretty, "indent the JSON report");
  app.add_flag("--no-timing", no_timing, "omit the timing field");
  app.add_option("--threads", threads, "OpenMP thread count");
  app.add_option("--max-order", limits().max_order, "isomorphism/validation bound");
  app.add_option("--hom-budget", limits().hom_budget, "hom search node budget");
  app.add_option("--max-word-len", limits().max_word_len, "graph word bound");

  std::string file, dir;
  auto* c_group = app.add_subcommand("group", "validate and describe a group fixture");
  c_group->add_option("file", file)->required();
  auto* c_ext = app.add_subcommand("ext", "classify a hom: fibration/trivial/central/normal");
  c_ext->add_option("file", file)->required();
  auto* c_gal = app.add_subcommand("gal", "Galois group of a normal extension, both routes");
  c_gal->add_option("file", file)->required();
  auto* c_pi1 = app.add_subcommand("pi1", "fundamental group from a certified cover");
  c_pi1->add_option("file", file)->required();
  auto* c_kan = app.add_subcommand("kan", "verify the Kan property of a scenario");
  c_kan->add_option("file", file)->required();
  auto* c_h2 = app.add_subcommand("h2", "H1 and H2 via the bar resolution");
  c_h2->add_option("file", file)->required();
  auto* c_graph = app.add_subcommand("graph", "graph covering checks");
  c_graph->require_subcommand(1);
  auto* c_exactseq = c_graph->add_subcommand("exactseq", "exact homotopy sequence positions");
  c_exactseq->add_option("file", file)->required();
  auto* c_deck = c_graph->add_subcommand("deck", "deck transformation group");
  c_deck->add_option("file", file)->required();
  auto* c_ggal = c_graph->add_subcommand("galois", "Galois group via the pi0 kernel pair");
  c_ggal->add_option("file", file)->required();
  auto* c_suite = app.add_subcommand("suite", "run every fixture in a directory");
  c_suite->add_option("dir", dir)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (*c_group) {
      Report rep("group " + file);
      run_group(file, rep);
      return rep.finish(out, pretty, no_timing);
    }
    if (*c_ext) {
      Report rep("ext " + file);
      auto j = io::load_json(file);
      ext_report(io::load_hom(file), j.value("name", file), rep);
      return rep.finish(out, pretty, no_timing);
    }
    if (*c_gal) {
      Report rep("gal " + file);
      auto j = io::load_json(file);
      auto h = io::load_hom(file);
      std::string name = j.value("name", file);
      if (!h.surjective()) {
        rep.check("fibration", false, "not surjective");
      } else {
        grp::Extension p = grp::Extension::make(h, name);
        if (!structure::is_normal_extension(p)) {
          rep.j["extension"] = name;
          rep.check("normal", false, "not a normal extension");
        } else {
          auto g = gal::galois_group(p);
          rep.j["extension"] = name;
          rep.j["galois_invariants"] =
              invariants_json(grp::abelian_invariants(g.via_intersection));
          rep.j["order"] = g.via_intersection.order();
          rep.check("two_path_galois_agreement", g.comparison.bijective());
        }
      }
      return rep.finish(out, pretty, no_timing);
    }
    if (*c_pi1) {
      Report rep("pi1 " + file);
      run_pi1(file, rep);
      return rep.finish(out, pretty, no_timing);
    }
    if (*c_kan) {
      Report rep("kan " + file);
      try {
        run_kan(file, rep);
      } catch (const NaturalityViolation& e) {
        rep.check("naturality", false, e.what());
      }
      return rep.finish(out, pretty, no_timing);
    }
    if (*c_h2) {
      Report rep("h2 " + file);
      run_h2(file, rep);
      return rep.finish(out, pretty, no_timing);
    }
    if (*c_exactseq) {
      Report rep("graph exactseq " + file);
      run_graph_exactseq(file, limits().max_word_len, rep);
      return rep.finish(out, pretty, no_timing);
    }
    if (*c_deck) {
      Report rep("graph deck " + file);
      run_graph_deck(file, rep);
      return rep.finish(out, pretty, no_timing);
    }
    if (*c_ggal) {
      Report rep("graph galois " + file);
      run_graph_galois(file, rep);
      return rep.finish(out, pretty, no_timing);
    }
    if (*c_suite) {
      if (!std::filesystem::is_directory(dir)) {
        err << "not a directory: " << dir << "\n";
        return 2;
      }
      std::vector<std::filesystem::path> paths;
      for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") paths.push_back(e.path());
      std::sort(paths.begin(), paths.end());
      ojson files = ojson::array();
      bool all_pass = true;
      for (const auto& p : paths)
        run_suite_file(p, limits().max_word_len, files, all_pass, pretty, no_timing);
      ojson agg;
      agg["command"] = "suite " + dir;
      agg["version"] = kVersion;
      agg["files"] = files;
      agg["count"] = files.size();
      agg["pass"] = all_pass;
      out << (pretty ? agg.dump(2) : agg.dump()) << "\n";
      return all_pass ? 0 : 1;
    }
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace catgal::cli
