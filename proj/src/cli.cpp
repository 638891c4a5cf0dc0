#include "zgr/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zgr/cache.hpp"
#include "zgr/catalog.hpp"
#include "zgr/filtration.hpp"
#include "zgr/groupspec.hpp"
#include "zgr/theorems.hpp"
#include "zgr/units.hpp"
#include "zgr/verify.hpp"

namespace zgr {

namespace {

std::string cache_dir_for(const Config& cfg) {
  if (const char* env = std::getenv("ZGR_CACHE_DIR"); env && *env) return env;
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  return "zgr-cache";
}

void write_or_print(const std::string& out_path, const nlohmann::json& j, std::ostream& out) {
  if (out_path.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error("cannot write " + out_path);
  f << j.dump(2) << "\n";
}

nlohmann::json structure_json(const std::string& spec, const GroupPtr& g) {
  StructureReport rep = structural_report(g);
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [ord, count] : rep.order_histogram) hist[std::to_string(ord)] = count;
  nlohmann::json j{{"spec", spec},
                   {"group", g->canonical_hash()},
                   {"order", rep.order},
                   {"exponent", rep.exponent},
                   {"abelian", rep.abelian},
                   {"nilpotent", rep.nilpotent},
                   {"center_order", rep.center_order},
                   {"order_histogram", hist},
                   {"gamma_orders", rep.gamma_orders},
                   {"abelianization", rep.abelianization}};
  j["nilpotency_class"] =
      rep.nilpotency_class ? nlohmann::json(*rep.nilpotency_class) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json unit_scan_json(const GroupPtr& g, const Config& cfg) {
  long bicyclic_total = 0, bicyclic_nontrivial = 0;
  for (int x = 1; x < g->order(); ++x)
    for (int h = 1; h < g->order(); ++h) {
      UnitRecord u = bicyclic_unit(g, x, h);
      ++bicyclic_total;
      if (!u.trivial) ++bicyclic_nontrivial;
    }
  auto search = nilpotent_search(g);
  nlohmann::json j{{"bicyclic_pairs", bicyclic_total},
                   {"bicyclic_nontrivial", bicyclic_nontrivial},
                   {"nilpotent_witness_found", search.witness.has_value()},
                   {"nilpotent_note", search.note}};
  (void)cfg;
  return j;
}

struct CatalogSummary {
  nlohmann::json groups = nlohmann::json::array();
  long hits = 0, misses = 0;
};

CatalogSummary catalog_run(int max_order, int depth, const Config& cfg, const ResultCache& cache) {
  auto entries = catalog(max_order, cfg);
  std::vector<nlohmann::json> rows(entries.size());
  std::atomic<std::size_t> next{0};
  int workers = std::max(1, std::min<int>(cfg.workers, static_cast<int>(entries.size())));
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= entries.size()) return;
      const auto& e = entries[i];
      const std::string& hash = e.group->canonical_hash();
      nlohmann::json structure = cache.get_or_compute(hash, "structure", {}, [&] {
        return structure_json(e.spec, e.group);
      });
      nlohmann::json chain_report =
          cache.get_or_compute(hash, "delta", {{"depth", depth}}, [&] {
            return DeltaChain(e.group, depth, cfg).report();
          });
      nlohmann::json dimseries =
          cache.get_or_compute(hash, "dimseries", {{"depth", depth}}, [&] {
            return dimension_series_report(e.group, depth, false, cfg).to_json();
          });
      nlohmann::json units = cache.get_or_compute(hash, "units-scan", {}, [&] {
        return unit_scan_json(e.group, cfg);
      });
      rows[i] = nlohmann::json{{"spec", e.spec},
                               {"group", hash},
                               {"order", e.group->order()},
                               {"structure", structure},
                               {"delta", chain_report},
                               {"dimseries", dimseries},
                               {"units", units}};
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  CatalogSummary s;
  for (auto& r : rows) s.groups.push_back(std::move(r));
  s.hits = cache.hits();
  s.misses = cache.misses();
  return s;
}

int depth_or_default(int depth_flag, const Config& cfg) {
  return depth_flag > 0 ? depth_flag : cfg.default_depth;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"integral group ring filtration toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "flat key = value config file");

  std::string spec_text, out_path, element_path;
  int depth_flag = 0;
  bool rational = false;
  int max_order = 32;

  auto* info = app.add_subcommand("info", "structure report for a group spec");
  info->add_option("spec", spec_text)->required();
  info->add_option("--out", out_path);

  auto* delta = app.add_subcommand("delta", "augmentation power chain report");
  delta->add_option("spec", spec_text)->required();
  delta->add_option("--depth", depth_flag);
  delta->add_option("--out", out_path);

  auto* dimseries = app.add_subcommand("dimseries", "dimension subgroup series report");
  dimseries->add_option("spec", spec_text)->required();
  dimseries->add_option("--depth", depth_flag);
  dimseries->add_flag("--rational", rational, "include the rational series");
  dimseries->add_option("--out", out_path);

  auto* depth_cmd = app.add_subcommand("depth", "delta-adic depth of an element (JSON file, - for stdin)");
  depth_cmd->add_option("spec", spec_text)->required();
  depth_cmd->add_option("element", element_path)->required();
  depth_cmd->add_option("--depth", depth_flag);
  depth_cmd->add_option("--out", out_path);

  auto* units_cmd = app.add_subcommand("units", "construct and check unit families");
  std::string unit_form;
  std::vector<long> unit_args;
  units_cmd->add_option("form", unit_form, "bass | bicyclic | search-nilpotent")->required();
  units_cmd->add_option("spec", spec_text)->required();
  units_cmd->add_option("args", unit_args, "bass: g k m, bicyclic: g h");
  units_cmd->add_option("--depth", depth_flag);
  units_cmd->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "thm2.2 | thm3.3 | thm3.4 | rank | lemma2.1 | lemma3.2 | lemma4.2")
      ->required();
  std::string orders_range;
  verify->add_option("--orders", orders_range, "catalog order range, e.g. 1..32");
  bool corrupt_hook = false;
  verify->add_flag("--inject-corrupt-verdict", corrupt_hook,
                   "test hook: flip the first verdict before revalidation");
  verify->add_option("--out", out_path);

  auto* catalog_cmd = app.add_subcommand("catalog", "batch run over the built-in family catalog");
  catalog_cmd->add_option("--max-order", max_order);
  catalog_cmd->add_option("--depth", depth_flag);
  catalog_cmd->add_option("--out", out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    Config cfg = config_path.empty() ? Config{} : load_config_file(config_path);

    if (info->parsed()) {
      GroupPtr g = build_group(parse_spec(spec_text), cfg);
      write_or_print(out_path, structure_json(spec_text, g), out);
      return 0;
    }
    if (delta->parsed()) {
      GroupPtr g = build_group(parse_spec(spec_text), cfg);
      DeltaChain chain(g, depth_or_default(depth_flag, cfg), cfg);
      write_or_print(out_path, chain.report(), out);
      return 0;
    }
    if (dimseries->parsed()) {
      GroupPtr g = build_group(parse_spec(spec_text), cfg);
      auto rep = dimension_series_report(g, depth_or_default(depth_flag, cfg), rational, cfg);
      write_or_print(out_path, rep.to_json(), out);
      return 0;
    }
    if (depth_cmd->parsed()) {
      GroupPtr g = build_group(parse_spec(spec_text), cfg);
      nlohmann::json ej;
      if (element_path == "-") {
        ej = nlohmann::json::parse(std::cin);
      } else {
        std::ifstream f(element_path);
        if (!f) throw Error("cannot read element file " + element_path);
        ej = nlohmann::json::parse(f);
      }
      GroupRingElement x = GroupRingElement::from_json(g, ej);
      DeltaChain chain(g, depth_or_default(depth_flag, cfg), cfg);
      DeltaDepth d = chain.depth_of(x);
      write_or_print(out_path,
                     {{"spec", spec_text},
                      {"element", x.to_json()},
                      {"depth_observed", d.observed},
                      {"omega", d.omega},
                      {"at_cap", d.at_cap},
                      {"chain_depth", chain.computed_depth()}},
                     out);
      return 0;
    }
    if (units_cmd->parsed()) {
      GroupSpec spec = parse_spec(spec_text);
      GroupPtr g = build_group(spec, cfg);
      nlohmann::json j;
      if (unit_form == "bicyclic") {
        if (unit_args.size() != 2) throw Error("units bicyclic needs: g h");
        UnitRecord u = bicyclic_unit(g, static_cast<int>(unit_args[0]), static_cast<int>(unit_args[1]));
        DeltaChain chain(g, depth_or_default(depth_flag, cfg), cfg);
        attach_depth(u, chain);
        j = u.to_json();
      } else if (unit_form == "bass") {
        if (unit_args.size() != 3) throw Error("units bass needs: g k m");
        UnitRecord u = bass_unit(g, static_cast<int>(unit_args[0]), unit_args[1], unit_args[2]);
        DeltaChain chain(g, depth_or_default(depth_flag, cfg), cfg);
        attach_depth(u, chain);
        j = u.to_json();
      } else if (unit_form == "search-nilpotent") {
        auto res = nilpotent_search(g);
        j = {{"found", res.witness.has_value()},
             {"definitive_none", res.definitive_none},
             {"note", res.note},
             {"candidates_tried", res.candidates_tried}};
        if (res.witness) j["witness"] = res.witness->to_json();
      } else {
        throw Error("unknown units form '" + unit_form + "'");
      }
      write_or_print(out_path, j, out);
      return 0;
    }
    if (verify->parsed()) {
      int lo = 1, hi = max_order;
      if (!orders_range.empty()) {
        auto dots = orders_range.find("..");
        if (dots == std::string::npos) throw Error("--orders wants lo..hi");
        lo = std::stoi(orders_range.substr(0, dots));
        hi = std::stoi(orders_range.substr(dots + 2));
      }
      (void)lo;
      SuiteResult res;
      if (suite == "rank")
        res = verify_rank(23, cfg);
      else if (suite == "thm2.2")
        res = verify_terminating(hi, cfg);
      else if (suite == "thm3.3")
        res = verify_trivial_residue(hi, cfg);
      else if (suite == "thm3.4")
        res = verify_order_pq(hi, cfg);
      else if (suite == "lemma2.1")
        res = verify_unit_torsion(std::min(hi, 16), cfg);
      else if (suite == "lemma3.2")
        res = verify_nilpotent_units(cfg);
      else if (suite == "lemma4.2")
        res = verify_discrimination(cfg);
      else
        throw Error("unknown suite '" + suite + "'");
      if (corrupt_hook && !res.verdicts.empty()) res.verdicts[0].holds = !res.verdicts[0].holds;
      revalidate_suite(res, cfg);
      write_or_print(out_path, res.to_json(), out);
      for (const auto& f : res.failures) err << "FAIL: " << f << "\n";
      out << (res.ok() ? "suite passed" : "suite FAILED") << ": " << suite << " ("
          << res.verdicts.size() << " verdicts)\n";
      return res.ok() ? 0 : 1;
    }
    if (catalog_cmd->parsed()) {
      ResultCache cache(cache_dir_for(cfg));
      auto summary = catalog_run(max_order, depth_or_default(depth_flag, cfg), cfg, cache);
      nlohmann::json j{{"max_order", max_order},
                       {"depth", depth_or_default(depth_flag, cfg)},
                       {"group_count", summary.groups.size()},
                       {"groups", summary.groups}};
      write_or_print(out_path, j, out);
      out << "catalog: " << summary.groups.size() << " groups, cache " << summary.hits
          << " hits / " << summary.misses << " misses\n";
      return 0;
    }
    err << "no subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    err << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const SizeError& e) {
    err << "size error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "json error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace zgr
