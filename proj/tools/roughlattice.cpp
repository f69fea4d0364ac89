// Command-line front door: ingest a relation, run analyses, export
// lattices and reports with deterministic, canonically ordered output.
//
// Exit codes: 0 success, 1 validation error (e.g. input is not a
// quasiorder), 2 I/O or parse error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rsl/io.hpp"
#include "rsl/irreducible.hpp"
#include "rsl/rsl.hpp"

namespace {

using rsl::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

struct Options {
  std::string input_path;
  std::string format = "auto";     // json | edgelist | auto
  std::string closure = "reject";  // reject | close
  std::string output = "json";     // json | dot | text
  std::size_t cap = 20;
};

std::size_t default_cap() {
  if (const char* env = std::getenv("ROUGHLATTICE_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
  }
  return 20;
}

rsl::InputFormat sniff_format(const Options& opt) {
  if (opt.format == "json") return rsl::InputFormat::JSON;
  if (opt.format == "edgelist") return rsl::InputFormat::EDGELIST;
  std::ifstream in(opt.input_path);
  char c = 0;
  while (in.get(c) && (c == ' ' || c == '\n' || c == '\t' || c == '\r')) {
  }
  return c == '{' ? rsl::InputFormat::JSON : rsl::InputFormat::EDGELIST;
}

/// A concrete reason why r is not a quasiorder, for diagnostics.
std::string quasiorder_violation(const rsl::Relation& r) {
  for (std::size_t x = 0; x < r.size(); ++x)
    if (!r.contains(x, x)) return "missing reflexive pair (" + std::to_string(x) + ", " +
                                  std::to_string(x) + ")";
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y)
      if (r.contains(x, y))
        for (std::size_t z = 0; z < r.size(); ++z)
          if (r.contains(y, z) && !r.contains(x, z))
            return "missing transitive pair (" + std::to_string(x) + ", " + std::to_string(z) +
                   ") forced by (" + std::to_string(x) + ", " + std::to_string(y) + ") and (" +
                   std::to_string(y) + ", " + std::to_string(z) + ")";
  return "";
}

rsl::Relation load_relation(const Options& opt) {
  rsl::Relation r = rsl::parse_relation_file(opt.input_path, sniff_format(opt));
  if (opt.closure == "close") return rsl::reflexive_transitive_closure(r);
  if (!rsl::is_quasiorder(r))
    throw rsl::error("input is not a quasiorder: " + quasiorder_violation(r));
  return r;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json mask_json(const rsl::SubsetMask& m) { return rsl::mask_to_json(m); }

json stone_json(const rsl::StoneResult& sr) {
  json j{{"is_stone", sr.is_stone}};
  if (sr.witness) {
    j["witness"] = json{{"element", sr.witness->element},
                        {"compose_row", mask_json(sr.witness->compose_row)},
                        {"equiv_row", mask_json(sr.witness->equiv_row)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

int run_analyze(const Options& opt) {
  rsl::Relation r = load_relation(opt);
  rsl::StructureReport rep = rsl::analyze(r, opt.cap);
  if (opt.output == "dot") {
    if (r.size() > opt.cap) throw rsl::error("universe exceeds enumeration cap for dot output");
    rsl::RsLattice l = rsl::enumerate_rs(rsl::ApproxContext(r), opt.cap);
    std::cout << rsl::lattice_to_dot(l, &rep.components);
    return kExitOk;
  }
  json j;
  json comps = json::array();
  for (const auto& b : rep.components.blocks) comps.push_back(mask_json(b));
  j["components"] = std::move(comps);
  j["per_component_rs_size"] =
      rep.per_component_rs_size ? json(*rep.per_component_rs_size) : json(nullptr);
  j["is_stone"] = rep.is_stone;
  j["stone_witness"] =
      rep.stone_witness ? json{{"element", rep.stone_witness->element},
                               {"compose_row", mask_json(rep.stone_witness->compose_row)},
                               {"equiv_row", mask_json(rep.stone_witness->equiv_row)}}
                        : json(nullptr);
  j["is_directly_indecomposable"] = rep.is_directly_indecomposable;
  if (rep.equivalence_shape) {
    std::size_t i = rep.equivalence_shape->first, jj = rep.equivalence_shape->second;
    std::size_t predicted = 1;
    for (std::size_t k = 0; k < i; ++k) predicted *= 2;
    for (std::size_t k = 0; k < jj; ++k) predicted *= 3;
    j["equivalence_shape"] = json{
        {"singleton_classes", i}, {"larger_classes", jj}, {"predicted_rs_size", predicted}};
  } else {
    j["equivalence_shape"] = nullptr;
  }
  if (rep.down_directed) {
    json dd = json::array();
    for (const auto& [c, d] : *rep.down_directed)
      dd.push_back(json{{"component", mask_json(c)}, {"down_directed", d}});
    j["down_directed_components"] = std::move(dd);
  } else {
    j["down_directed_components"] = nullptr;
  }
  emit(j);
  return kExitOk;
}

int run_approx(const Options& opt, const std::string& set_literal) {
  rsl::Relation r = load_relation(opt);
  rsl::ApproxContext ctx(r);
  auto sets = rsl::parse_set_list(set_literal, r.size());
  json out = json::array();
  for (const auto& x : sets) {
    out.push_back(json{{"set", mask_json(x)},
                       {"lower", mask_json(ctx.lower(x))},
                       {"upper", mask_json(ctx.upper(x))},
                       {"lower_inv", mask_json(ctx.lower_inv(x))},
                       {"upper_inv", mask_json(ctx.upper_inv(x))}});
  }
  emit(json{{"universe", r.universe().names()}, {"approximations", std::move(out)}});
  return kExitOk;
}

int run_lattice(const Options& opt) {
  rsl::Relation r = load_relation(opt);
  rsl::RsLattice l = rsl::enumerate_rs(rsl::ApproxContext(r), opt.cap);
  if (opt.output == "dot")
    std::cout << rsl::lattice_to_dot(l);
  else
    emit(rsl::lattice_to_json(l));
  return kExitOk;
}

int run_irreducibles(const Options& opt) {
  rsl::Relation r = load_relation(opt);
  rsl::IrreducibleCatalog cat = rsl::irreducible_catalog(rsl::ApproxContext(r));
  auto entries = [](const std::vector<rsl::IrreducibleEntry>& v) {
    json arr = json::array();
    for (const auto& e : v)
      arr.push_back(json{
          {"lower", rsl::mask_to_json(e.element.lower)},
          {"upper", rsl::mask_to_json(e.element.upper)},
          {"origin", e.origin == rsl::IrreducibleOrigin::SINGLETON_UPPER ? "singleton_upper"
                                                                         : "neighbourhood"},
          {"generator", e.generator}});
    return arr;
  };
  emit(json{{"universe", r.universe().names()},
            {"join_irreducible", entries(cat.join_irr)},
            {"meet_irreducible", entries(cat.meet_irr)}});
  return kExitOk;
}

int run_complements(const Options& opt) {
  rsl::Relation r = load_relation(opt);
  rsl::ApproxContext ctx(r);
  rsl::RsLattice l = rsl::enumerate_rs(ctx, opt.cap);
  json arr = json::array();
  for (const auto& a : l.elements) {
    rsl::ComplementReport rep = rsl::complement_report(ctx, a);
    arr.push_back(json{{"element", rsl::rough_to_json(rep.element)},
                       {"de_morgan", rsl::rough_to_json(rep.de_morgan)},
                       {"pseudocomplement", rsl::rough_to_json(rep.pseudo)},
                       {"dual_pseudocomplement", rsl::rough_to_json(rep.dual_pseudo)},
                       {"is_exact", rep.is_exact},
                       {"is_complemented", rep.is_complemented}});
  }
  emit(json{{"universe", r.universe().names()}, {"elements", std::move(arr)}});
  return kExitOk;
}

int run_topology(const Options& opt, const std::string& kind) {
  rsl::Relation r = load_relation(opt);
  rsl::AlexandrovTopology t = kind == "down" ? rsl::topology_down(r) : rsl::topology_up(r);
  json base = json::array();
  for (const auto& b : t.base()) base.push_back(mask_json(b));
  json j{{"universe", r.universe().names()}, {"kind", kind}, {"base", std::move(base)}};
  if (r.size() <= opt.cap) {
    json opens = json::array();
    for (const auto& o : rsl::enumerate_opens(t, opt.cap)) opens.push_back(mask_json(o));
    j["opens"] = std::move(opens);
  } else {
    j["opens"] = nullptr;
  }
  emit(j);
  return kExitOk;
}

int run_witness(const Options& opt, bool meet, const std::string& sets_literal) {
  rsl::Relation r = load_relation(opt);
  rsl::ApproxContext ctx(r);
  auto sets = rsl::parse_set_list(sets_literal, r.size());
  rsl::SubsetMask w = meet ? rsl::witness_meet(ctx, sets) : rsl::witness_join(ctx, sets);
  rsl::RoughSet pair = ctx.rough_pair(w);
  if (opt.output == "text") {
    const char* label = meet ? "W" : "V";
    std::cout << label << " = " << rsl::mask_to_braces(w, r.universe()) << "\n";
    std::cout << "A(" << label << ") = " << rsl::rough_label(pair, r.universe()) << "\n";
  } else {
    emit(json{{"mode", meet ? "meet" : "join"},
              {"witness", mask_json(w)},
              {"rough_set", rsl::rough_to_json(pair)}});
  }
  return kExitOk;
}

int run_stone(const Options& opt) {
  rsl::Relation r = load_relation(opt);
  emit(stone_json(rsl::stone_check(r)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rough-set lattice toolkit for finite quasiorders"};
  app.require_subcommand(1);

  Options opt;
  opt.cap = default_cap();
  std::string set_literal, sets_literal, kind = "up";
  bool meet = false, join = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", opt.input_path, "relation file")->required();
    sub->add_option("-f,--format", opt.format, "json | edgelist | auto")
        ->check(CLI::IsMember({"json", "edgelist", "auto"}));
    sub->add_option("--closure", opt.closure,
                    "reject non-quasiorders, or take the reflexive-transitive closure")
        ->check(CLI::IsMember({"reject", "close"}));
    sub->add_option("--cap", opt.cap, "enumeration cap on |U|")->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", opt.output, "json | dot | text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full structure report");
  add_common(analyze);
  CLI::App* approx = app.add_subcommand("approx", "approximation operators on given sets");
  add_common(approx);
  approx->add_option("--set", set_literal, "semicolon-separated sets, e.g. \"0,1;2\"")
      ->required();
  CLI::App* lattice = app.add_subcommand("lattice", "enumerate the rough-set lattice");
  add_common(lattice);
  CLI::App* irr = app.add_subcommand("irreducibles", "completely irreducible elements");
  add_common(irr);
  CLI::App* comp = app.add_subcommand("complements", "complementation report per element");
  add_common(comp);
  CLI::App* topo = app.add_subcommand("topology", "induced Alexandrov topology");
  add_common(topo);
  topo->add_option("--kind", kind, "up | down")->check(CLI::IsMember({"up", "down"}));
  CLI::App* wit = app.add_subcommand("witness", "witness sets for meets and joins");
  add_common(wit);
  wit->add_flag("--meet", meet, "meet witness");
  wit->add_flag("--join", join, "join witness");
  wit->add_option("--sets", sets_literal, "semicolon-separated sets")->required();
  CLI::App* stone = app.add_subcommand("stone", "Stone-lattice decision");
  add_common(stone);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitIo;
  }

  try {
    if (analyze->parsed()) return run_analyze(opt);
    if (approx->parsed()) return run_approx(opt, set_literal);
    if (lattice->parsed()) return run_lattice(opt);
    if (irr->parsed()) return run_irreducibles(opt);
    if (comp->parsed()) return run_complements(opt);
    if (topo->parsed()) return run_topology(opt, kind);
    if (wit->parsed()) {
      if (meet == join) {
        std::cerr << "error: exactly one of --meet / --join is required\n";
        return kExitValidation;
      }
      return run_witness(opt, meet, sets_literal);
    }
    if (stone->parsed()) return run_stone(opt);
  } catch (const rsl::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const rsl::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
