// qtoric: exact-arithmetic toolkit for 4-dimensional quasitoric orbifold
// models. Every invocation writes one JSON document to stdout; --pretty adds
// aligned tables on stderr so stdout stays machine-parseable.
//
// Exit codes: 0 success, 2 usage, 3 parse/validation, 4 domain error.

#include "qtoric/birational.hpp"
#include "qtoric/charts.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace qtoric;

struct IOError : Error {
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IOError("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

json vector_to_json(const LatticeVector& v) {
  return json::array({int_to_json(v.x), int_to_json(v.y)});
}

json edges_to_json(const QuasitoricModel& model) {
  json edges = json::array();
  for (const LatticeVector& e : model.edges) {
    edges.push_back(vector_to_json(e));
  }
  return edges;
}

json betti_to_json(const BettiTable& table) {
  json out = json::object();
  for (const auto& [degree, dim] : table) {
    out[to_string(degree)] = int_to_json(dim);
  }
  return out;
}

json betti_to_json(const CRBettiTable& table) {
  json out = json::object();
  for (const auto& [degree, dim] : table) {
    out[to_string(degree)] = int_to_json(dim);
  }
  return out;
}

const char* finding_kind(ValidationFinding::Kind kind) {
  switch (kind) {
    case ValidationFinding::Kind::too_few_edges: return "tooFewEdges";
    case ValidationFinding::Kind::non_primitive_edge: return "nonPrimitiveEdge";
    case ValidationFinding::Kind::dependent_adjacent_pair: return "dependentAdjacentPair";
  }
  return "unknown";
}

json report_to_json(const ValidationReport& report) {
  json failures = json::array();
  for (const ValidationFinding& f : report.failures) {
    json item;
    item["kind"] = finding_kind(f.kind);
    if (f.kind != ValidationFinding::Kind::too_few_edges) {
      item["index"] = f.index;
    }
    item["detail"] = f.detail;
    failures.push_back(std::move(item));
  }
  json out;
  out["valid"] = report.valid;
  out["positively_omnioriented"] = report.positively_omnioriented;
  out["failures"] = std::move(failures);
  return out;
}

json site_to_json(const BlowdownSite& site) {
  json out;
  out["edge_index"] = site.edge_index;
  out["lambda1"] = vector_to_json(site.lambda1);
  out["lambda2"] = vector_to_json(site.lambda2);
  out["lambda3"] = vector_to_json(site.lambda3);
  out["smooth_side"] = to_string(site.smooth_side);
  out["k"] = int_to_json(site.k);
  out["m"] = int_to_json(site.m);
  out["crepant"] = is_crepant(site);
  return out;
}

void emit(const json& payload) { std::cout << payload.dump() << "\n"; }

struct Options {
  std::string model_path;
  std::string model_path_b;
  bool pretty = false;
  bool singular = false;
  bool chen_ruan = false;
  std::size_t edge = 0;
  std::size_t vertex = 0;
  std::string side = "first";
  bool crepant = false;
  bool all = false;
  charts::LocalModelParams params;
  std::size_t points = 1000;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

int cmd_validate(const Options& opt) {
  const QuasitoricModel model = model_from_json_text(read_input(opt.model_path));
  const ValidationReport report = validate(model);
  emit(report_to_json(report));
  if (opt.pretty) {
    std::cerr << "edges: " << model.size() << "\n"
              << "valid: " << (report.valid ? "yes" : "no") << "\n"
              << "positively omnioriented: " << (report.positively_omnioriented ? "yes" : "no")
              << "\n";
    for (const ValidationFinding& f : report.failures) {
      std::cerr << "  - " << f.detail << "\n";
    }
  }
  return report.valid ? 0 : 3;
}

int cmd_info(const Options& opt) {
  const QuasitoricModel model = parse_model(read_input(opt.model_path));
  const ValidationReport report = validate(model);
  json verts = json::array();
  for (const Vertex& v : vertices(model)) {
    const LocalGroup group = local_group(v);
    const SingularityType type = singularity_type(v);
    json item;
    item["index"] = v.index;
    item["first"] = vector_to_json(v.first);
    item["second"] = vector_to_json(v.second);
    item["det"] = int_to_json(v.det);
    item["order"] = int_to_json(group.order);
    item["singularity"] = {{"d", int_to_json(type.d)}, {"q", int_to_json(type.q)}};
    item["sl"] = is_SL(v);
    verts.push_back(std::move(item));
  }
  json out;
  out["m"] = model.size();
  out["positively_omnioriented"] = report.positively_omnioriented;
  out["vertices"] = std::move(verts);
  emit(out);
  if (opt.pretty) {
    std::cerr << "vertex\tfirst\tsecond\tdet\torder\ttype\tSL\n";
    for (const json& v : out["vertices"]) {
      std::ostringstream type;
      type << "1/" << v["singularity"]["d"] << "(1," << v["singularity"]["q"] << ")";
      std::cerr << v["index"].dump() << "\t" << v["first"].dump() << "\t" << v["second"].dump()
                << "\t" << v["det"].dump() << "\t" << v["order"].dump() << "\t" << type.str()
                << "\t" << (v["sl"].get<bool>() ? "yes" : "no") << "\n";
    }
  }
  return 0;
}

int cmd_cohomology(const Options& opt) {
  const QuasitoricModel model = parse_model(read_input(opt.model_path));
  const bool both = !opt.singular && !opt.chen_ruan;
  json out;
  if (opt.singular || both) {
    out["singular"] = betti_to_json(singular_betti(model));
  }
  if (opt.chen_ruan || both) {
    out["chen_ruan"] = betti_to_json(cr_betti(model));
  }
  emit(out);
  if (opt.pretty) {
    for (const auto& [name, table] : out.items()) {
      std::cerr << name << ":\n";
      for (const auto& [degree, dim] : table.items()) {
        std::cerr << "  H^" << degree << " = " << dim.dump() << "\n";
      }
    }
  }
  return 0;
}

int cmd_todd(const Options& opt) {
  const QuasitoricModel model = parse_model(read_input(opt.model_path));
  json out;
  out["todd_genus"] = int_to_json(todd_genus(model));
  emit(out);
  if (opt.pretty) {
    std::cerr << "Todd genus: " << out["todd_genus"].dump() << "\n";
  }
  return 0;
}

int cmd_blowdown(const Options& opt) {
  const QuasitoricModel model = parse_model(read_input(opt.model_path));
  const BlowdownSite site = blowdown_site(model, opt.edge);
  const QuasitoricModel result = blowdown(model, site);
  json out;
  out["edges"] = edges_to_json(result);
  out["site"] = site_to_json(site);
  emit(out);
  if (opt.pretty) {
    std::cerr << "deleted edge " << site.edge_index << ", smooth side "
              << to_string(site.smooth_side) << ", (k,m) = (" << to_string(site.k) << ","
              << to_string(site.m) << "), " << (is_crepant(site) ? "crepant" : "not crepant")
              << "\n";
  }
  return 0;
}

int cmd_blowup(const Options& opt) {
  const QuasitoricModel model = parse_model(read_input(opt.model_path));
  BlowupResult result;
  if (opt.crepant) {
    std::optional<BlowupResult> r = crepant_blowup(model, opt.vertex);
    if (!r) {
      json out;
      out["error"] = "NoCrepantBlowup";
      out["message"] = "vertex " + std::to_string(opt.vertex) +
                       ": neither insertion side yields a crepant site";
      emit(out);
      return 4;
    }
    result = std::move(*r);
  } else {
    const SmoothSide side = opt.side == "second" ? SmoothSide::second : SmoothSide::first;
    result = blowup(model, opt.vertex, side);
  }
  json out;
  out["edges"] = edges_to_json(result.model);
  out["inserted"] = vector_to_json(result.inserted);
  out["vertex_index"] = opt.vertex;
  out["site"] = site_to_json(blowdown_site(result.model, opt.vertex + 1));
  emit(out);
  if (opt.pretty) {
    std::cerr << "inserted " << to_string(result.inserted) << " after edge " << opt.vertex
              << "\n";
  }
  return 0;
}

int cmd_resolve(const Options& opt) {
  const QuasitoricModel model = parse_model(read_input(opt.model_path));
  QuasitoricModel current = model;
  std::vector<LatticeVector> inserted;
  if (opt.all) {
    for (;;) {
      std::optional<std::size_t> singular;
      for (const Vertex& v : vertices(current)) {
        if (v.det != 1) {
          singular = v.index;
          break;
        }
      }
      if (!singular) {
        break;
      }
      ResolutionResult step = resolve_vertex(current, *singular);
      current = std::move(step.model);
      inserted.insert(inserted.end(), step.inserted.begin(), step.inserted.end());
    }
  } else {
    ResolutionResult step = resolve_vertex(current, opt.vertex);
    current = std::move(step.model);
    inserted = std::move(step.inserted);
  }
  json ins = json::array();
  for (const LatticeVector& v : inserted) {
    ins.push_back(vector_to_json(v));
  }
  json out;
  out["edges"] = edges_to_json(current);
  out["inserted"] = std::move(ins);
  out["steps"] = inserted.size();
  emit(out);
  if (opt.pretty) {
    std::cerr << "resolved in " << inserted.size() << " insertion(s)\n";
  }
  return 0;
}

int cmd_mckay(const Options& opt) {
  const QuasitoricModel model_x = parse_model(read_input(opt.model_path));
  const QuasitoricModel model_y = parse_model(read_input(opt.model_path_b));
  const McKayReport report = mckay_check(model_x, model_y);
  json diff = json::object();
  for (const auto& [degree, d] : report.degreewise_diff) {
    diff[to_string(degree)] = int_to_json(d);
  }
  json out;
  out["equal"] = report.equal;
  out["table_x"] = betti_to_json(report.table_x);
  out["table_y"] = betti_to_json(report.table_y);
  out["degreewise_diff"] = std::move(diff);
  out["total_diff"] = int_to_json(report.total_diff);
  emit(out);
  if (opt.pretty) {
    std::cerr << (report.equal ? "tables agree in every degree\n" : "tables differ:\n");
    for (const auto& [degree, d] : report.degreewise_diff) {
      std::cerr << "  H^" << to_string(degree) << ": " << to_string(d) << "\n";
    }
  }
  return 0;
}

int cmd_verify_charts(const Options& opt) {
  const charts::LocalModelParams params = opt.params;
  std::map<std::string, double> worst;
  std::size_t checked = 0;
  for (const charts::OrbitPoint& pt : charts::sample_points(params, opt.points, opt.seed)) {
    const charts::ResidualReport blowdown_report = charts::verify_blowdown_identities(params, pt);
    const charts::ResidualReport transition_report =
        charts::verify_general_transition(0, 1, -params.k, params.m, pt, params.s, params.t);
    for (const auto& report : {blowdown_report, transition_report}) {
      for (const charts::IdentityResidual& r : report.identities) {
        double& w = worst[r.name];
        w = std::max(w, r.residual);
      }
    }
    ++checked;
  }
  double max_residual = 0;
  json identities = json::array();
  for (const auto& [name, r] : worst) {
    identities.push_back({{"name", name}, {"max_residual", r}});
    max_residual = std::max(max_residual, r);
  }
  const bool pass = max_residual < opt.tolerance;
  json out;
  out["k"] = params.k;
  out["m"] = params.m;
  out["s"] = params.s;
  out["t"] = params.t;
  out["eps1"] = params.eps1;
  out["eps2"] = params.eps2;
  out["points"] = checked;
  out["seed"] = opt.seed;
  out["tolerance"] = opt.tolerance;
  out["discrepancy_exponent"] = to_string(charts::discrepancy_exponent(params.k, params.m));
  out["identities"] = std::move(identities);
  out["max_residual"] = max_residual;
  out["pass"] = pass;
  emit(out);
  if (opt.pretty) {
    for (const auto& [name, r] : worst) {
      std::cerr << name << ": " << r << "\n";
    }
    std::cerr << "max residual " << max_residual << " over " << checked
              << " points: " << (pass ? "pass" : "FAIL") << "\n";
  }
  return pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for 4-dimensional quasitoric orbifold models"};
  app.require_subcommand(1);
  Options opt;
  int (*run)(const Options&) = nullptr;

  auto add_model_arg = [&opt](CLI::App* cmd) {
    cmd->add_option("model", opt.model_path, "model JSON file ('-' for stdin)")->required();
  };
  auto add_pretty = [&opt](CLI::App* cmd) {
    cmd->add_flag("--pretty", opt.pretty, "human-readable tables on stderr");
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "check a model file");
  add_model_arg(validate_cmd);
  add_pretty(validate_cmd);
  validate_cmd->callback([&run] { run = cmd_validate; });

  CLI::App* info_cmd = app.add_subcommand("info", "vertices, determinants, singularity types");
  add_model_arg(info_cmd);
  add_pretty(info_cmd);
  info_cmd->callback([&run] { run = cmd_info; });

  CLI::App* coh_cmd = app.add_subcommand("cohomology", "Betti tables");
  add_model_arg(coh_cmd);
  add_pretty(coh_cmd);
  CLI::Option* singular_flag = coh_cmd->add_flag("--singular", opt.singular, "singular table only");
  coh_cmd->add_flag("--chen-ruan", opt.chen_ruan, "Chen-Ruan table only")->excludes(singular_flag);
  coh_cmd->callback([&run] { run = cmd_cohomology; });

  CLI::App* todd_cmd = app.add_subcommand("todd-genus", "Todd genus of a manifold model");
  add_model_arg(todd_cmd);
  add_pretty(todd_cmd);
  todd_cmd->callback([&run] { run = cmd_todd; });

  CLI::App* bd_cmd = app.add_subcommand("blowdown", "delete an edge");
  add_model_arg(bd_cmd);
  add_pretty(bd_cmd);
  bd_cmd->add_option("--edge", opt.edge, "edge index to delete")->required();
  bd_cmd->callback([&run] { run = cmd_blowdown; });

  CLI::App* bu_cmd = app.add_subcommand("blowup", "insert an edge at a vertex");
  add_model_arg(bu_cmd);
  add_pretty(bu_cmd);
  bu_cmd->add_option("--vertex", opt.vertex, "vertex index")->required();
  bu_cmd->add_option("--side", opt.side, "smooth side of the insertion")
      ->check(CLI::IsMember({"first", "second"}))
      ->default_val("first");
  bu_cmd->add_flag("--crepant", opt.crepant, "only insert when a side is crepant");
  bu_cmd->callback([&run] { run = cmd_blowup; });

  CLI::App* res_cmd = app.add_subcommand("resolve", "resolve singular vertices by insertions");
  add_model_arg(res_cmd);
  add_pretty(res_cmd);
  CLI::Option* vopt = res_cmd->add_option("--vertex", opt.vertex, "vertex index to resolve");
  res_cmd->add_flag("--all", opt.all, "resolve every singular vertex")->excludes(vopt);
  res_cmd->callback([&run] { run = cmd_resolve; });

  CLI::App* mckay_cmd = app.add_subcommand("mckay", "compare Chen-Ruan tables of two models");
  mckay_cmd->add_option("model_a", opt.model_path, "first model")->required();
  mckay_cmd->add_option("model_b", opt.model_path_b, "second model")->required();
  add_pretty(mckay_cmd);
  mckay_cmd->callback([&run] { run = cmd_mckay; });

  CLI::App* charts_cmd =
      app.add_subcommand("verify-charts", "numerically verify the chart identities");
  charts_cmd->add_option("--k", opt.params.k, "determinant toward the singular endpoint")
      ->required();
  charts_cmd->add_option("--m", opt.params.m, "determinant of the contracted vertex")->required();
  charts_cmd->add_option("--s", opt.params.s, "middle edge slope")->default_val(1.0);
  charts_cmd->add_option("--t", opt.params.t, "middle edge offset")->default_val(1.0);
  charts_cmd->add_option("--eps1", opt.params.eps1, "pure-root threshold")->default_val(0.1);
  charts_cmd->add_option("--eps2", opt.params.eps2, "identity threshold")->default_val(0.5);
  charts_cmd->add_option("--points", opt.points, "sample size")->default_val(1000);
  charts_cmd->add_option("--seed", opt.seed, "64-bit sampling seed")->default_val(0);
  charts_cmd->add_option("--tolerance", opt.tolerance, "residual threshold")->default_val(1e-9);
  add_pretty(charts_cmd);
  charts_cmd->callback([&run] { run = cmd_verify_charts; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit({{"error", "UsageError"}, {"message", e.what()}});
    return 2;
  }

  try {
    return run(opt);
  } catch (const ValidationError& e) {
    json out;
    out["error"] = "ValidationError";
    out["message"] = e.what();
    out["report"] = report_to_json(e.report);
    emit(out);
    return 3;
  } catch (const ParseError& e) {
    emit({{"error", "ParseError"}, {"message", e.what()}});
    return 3;
  } catch (const NotAdmissibleError& e) {
    emit({{"error", "NotAdmissible"}, {"reason", to_string(e.reason)}, {"message", e.what()}});
    return 4;
  } catch (const TooFewEdgesError& e) {
    emit({{"error", "TooFewEdges"}, {"message", e.what()}});
    return 4;
  } catch (const NotAManifoldError& e) {
    emit({{"error", "NotAManifold"}, {"message", e.what()}});
    return 4;
  } catch (const IndexOutOfRange& e) {
    emit({{"error", "IndexOutOfRange"}, {"message", e.what()}});
    return 4;
  } catch (const NotPrimitiveError& e) {
    emit({{"error", "NotPrimitive"}, {"message", e.what()}});
    return 4;
  } catch (const GenericityFailure& e) {
    emit({{"error", "GenericityFailure"}, {"message", e.what()}});
    return 4;
  } catch (const DomainError& e) {
    emit({{"error", "DomainError"}, {"message", e.what()}});
    return 4;
  } catch (const IOError& e) {
    emit({{"error", "IOError"}, {"message", e.what()}});
    return 2;
  } catch (const std::exception& e) {
    emit({{"error", "InternalError"}, {"message", e.what()}});
    return 4;
  }
}
