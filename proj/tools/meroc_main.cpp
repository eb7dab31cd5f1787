#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "meroc/double_complex.hpp"
#include "meroc/json_io.hpp"
#include "meroc/necklace.hpp"
#include "meroc/version.hpp"

namespace {

using meroc::Json;

struct CommonFlags {
  std::string manifest_in;
  std::string emit_manifest;
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--manifest", flags->manifest_in,
                  "Replay parameters from a manifest file");
  cmd->add_option("--emit-manifest", flags->emit_manifest,
                  "Write a run manifest to this path");
  int default_threads = 1;
  if (const char* env = std::getenv("MEROC_THREADS"))
    default_threads = std::max(1, std::atoi(env));
  flags->threads = default_threads;
  cmd->add_option("--threads", flags->threads, "Worker thread bound");
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw meroc::ValidationError("cannot open file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw meroc::ValidationError("malformed JSON in '" + path +
                                 "': " + e.what());
  }
  return j;
}

std::complex<double> parse_complex(const std::string& s) {
  try {
    auto comma = s.find(',');
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw meroc::ValidationError("cannot parse complex number '" + s +
                                 "' (want RE or RE,IM)");
  }
}

// Each subcommand: parameters as a JSON object (manifest replay works on
// exactly this object), a runner producing the output body.
struct Subcommand {
  std::string name;
  std::vector<std::string> required;  // option names enforced without --manifest
  std::function<Json()> params;
  std::function<void(const Json&)> load_params;
  std::function<Json(const CommonFlags&)> run;
};

int run_dispatch(const Subcommand& sub, CLI::App* cmd,
                 const CommonFlags& flags) {
  Json params;
  if (flags.manifest_in.empty()) {
    for (const std::string& opt : sub.required) {
      if (cmd->count(opt) == 0) {
        std::cerr << opt << " is required (or supply --manifest)\n";
        return 2;
      }
    }
  } else {
    Json manifest = load_json_file(flags.manifest_in);
    if (manifest.value("subcommand", "") != sub.name)
      throw meroc::ValidationError("manifest subcommand '" +
                                   manifest.value("subcommand", "") +
                                   "' does not match '" + sub.name + "'");
    sub.load_params(manifest.at("params"));
  }
  params = sub.params();

  auto start = std::chrono::steady_clock::now();
  Json body = sub.run(flags);
  auto stop = std::chrono::steady_clock::now();

  // Raw escape hatch for non-JSON bodies (CSV matrices).
  std::string out = body.is_object() && body.contains("__raw__")
                        ? body["__raw__"].get<std::string>()
                        : body.dump() + "\n";
  std::cout << out;

  if (!flags.emit_manifest.empty()) {
    Json manifest;
    manifest["subcommand"] = sub.name;
    manifest["params"] = params;
    manifest["library_version"] = meroc::kVersion;
    Json orders = Json::object();
    for (const auto& [key, val] : params.items())
      if (key.find("order") != std::string::npos ||
          key.find("degree") != std::string::npos ||
          key.find("cutoff") != std::string::npos)
        orders[key] = val;
    manifest["truncation_orders"] = orders;
    manifest["duration_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
            .count();
    manifest["output_digest"] = meroc::fnv1a64_hex(out);
    std::ofstream mf(flags.emit_manifest);
    if (!mf)
      throw meroc::ValidationError("cannot write manifest '" +
                                   flags.emit_manifest + "'");
    mf << manifest.dump(2) << "\n";
  }
  return 0;
}

Json h_dims_json(const std::map<int, long>& dims) {
  Json j = Json::object();
  for (const auto& [d, n] : dims) j["H" + std::to_string(d)] = n;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quasimodular / necklace / cosimplicial cohomology tool"};
  app.set_version_flag("--version", meroc::kVersion);
  app.require_subcommand(1);

  // CommonFlags addresses are handed to CLI11; the reserve keeps them stable.
  std::vector<std::pair<Subcommand, CommonFlags>> subs;
  subs.reserve(16);
  std::map<std::string, CLI::App*> cmd_ptr;

  // ---- eisenstein ----------------------------------------------------
  struct {
    int k = 2;
    int order = 10;
    std::string tau;
    bool numeric = false;
  } eis;
  {
    CLI::App* c = app.add_subcommand("eisenstein", "Eisenstein series E_k");
    c->add_option("--k", eis.k, "Index k >= 2");
    c->add_option("--order", eis.order, "q-truncation order");
    c->add_option("--tau", eis.tau, "Numeric evaluation point RE,IM");
    c->add_flag("--numeric", eis.numeric, "Enable numeric evaluation");
    cmd_ptr["eisenstein"] = c;
    Subcommand s;
    s.name = "eisenstein";
    s.required = {"--k"};
    s.params = [&]() {
      Json p;
      p["k"] = eis.k;
      p["order"] = eis.order;
      p["tau"] = eis.tau;
      p["numeric"] = eis.numeric;
      return p;
    };
    s.load_params = [&](const Json& p) {
      eis.k = p.at("k").get<int>();
      eis.order = p.at("order").get<int>();
      eis.tau = p.value("tau", "");
      eis.numeric = p.value("numeric", false);
    };
    s.run = [&](const CommonFlags&) {
      meroc::QSeries s = meroc::eisenstein_q(eis.k, eis.order);
      Json out = Json::object();
      out["constant"] = s.coeff(0).str();
      for (int n = 1; n < eis.order; ++n) {
        if (!s.is_exact_zero() && n >= s.truncation_order()) break;
        out["q" + std::to_string(n)] = s.coeff(n).str();
      }
      if (!eis.tau.empty() || eis.numeric) {
        if (!eis.numeric)
          throw meroc::ValidationError(
              "numeric evaluation requires the explicit --numeric flag");
        if (eis.tau.empty())
          throw meroc::ValidationError("--numeric needs --tau RE,IM");
        meroc::EisensteinValue v =
            meroc::eisenstein_eval(eis.k, parse_complex(eis.tau), eis.order);
        Json num;
        num["re"] = v.value.real();
        num["im"] = v.value.imag();
        num["tail_bound"] = v.tail_bound;
        out["numeric"] = num;
      }
      return out;
    };
    subs.push_back({std::move(s), CommonFlags{}});
    add_common(c, &subs.back().second);
  }

  // ---- pk --------------------------------------------------------------
  struct {
    int k = 2;
    int zorder = 8;
    int qorder = 8;
  } pkp;
  {
    CLI::App* c = app.add_subcommand("pk", "Elliptic expansion function P_k");
    c->add_option("--k", pkp.k, "Index k >= 0");
    c->add_option("--zorder", pkp.zorder, "z-truncation order");
    c->add_option("--qorder", pkp.qorder, "q-truncation order");
    cmd_ptr["pk"] = c;
    Subcommand s;
    s.name = "pk";
    s.required = {"--k"};
    s.params = [&]() {
      Json p;
      p["k"] = pkp.k;
      p["zorder"] = pkp.zorder;
      p["qorder"] = pkp.qorder;
      return p;
    };
    s.load_params = [&](const Json& p) {
      pkp.k = p.at("k").get<int>();
      pkp.zorder = p.at("zorder").get<int>();
      pkp.qorder = p.at("qorder").get<int>();
    };
    s.run = [&](const CommonFlags&) {
      return meroc::pk_to_json(meroc::pk_any(pkp.k, pkp.zorder, pkp.qorder));
    };
    subs.push_back({std::move(s), CommonFlags{}});
    add_common(c, &subs.back().second);
  }

  // ---- cmatrix -----------------------------------------------------------
  struct {
    int kmax = 4;
    int qorder = 8;
  } cm;
  {
    CLI::App* c = app.add_subcommand("cmatrix", "C(k,l) coefficient table");
    c->add_option("--kmax", cm.kmax, "Maximal index");
    c->add_option("--qorder", cm.qorder, "q-truncation order");
    cmd_ptr["cmatrix"] = c;
    Subcommand s;
    s.name = "cmatrix";
    s.required = {"--kmax"};
    s.params = [&]() {
      Json p;
      p["kmax"] = cm.kmax;
      p["qorder"] = cm.qorder;
      return p;
    };
    s.load_params = [&](const Json& p) {
      cm.kmax = p.at("kmax").get<int>();
      cm.qorder = p.at("qorder").get<int>();
    };
    s.run = [&](const CommonFlags&) {
      Json entries = Json::object();
      for (int k = 1; k <= cm.kmax; ++k)
        for (int l = 1; l <= cm.kmax; ++l)
          entries[std::to_string(k) + "," + std::to_string(l)] =
              meroc::qseries_to_json(meroc::c_coeff(k, l, cm.qorder));
      Json out;
      out["kmax"] = cm.kmax;
      out["entries"] = entries;
      return out;
    };
    subs.push_back({std::move(s), CommonFlags{}});
    add_common(c, &subs.back().second);
  }

  // ---- amatrix -----------------------------------------------------------
  struct {
    int size = 3;
    int qorder = 6;
    std::string format = "json";
    bool numeric = false;
    std::string tau = "0,1";
    std::string eps = "1,0";
  } am;
  {
    CLI::App* c = app.add_subcommand("amatrix", "Truncated A-matrix");
    c->add_option("--size", am.size, "Matrix size N");
    c->add_option("--qorder", am.qorder, "q-truncation order");
    c->add_option("--format", am.format, "json or csv");
    c->add_flag("--numeric", am.numeric, "Numeric entries");
    c->add_option("--tau", am.tau, "tau as RE,IM (numeric mode)");
    c->add_option("--eps", am.eps, "epsilon as RE,IM (numeric mode)");
    cmd_ptr["amatrix"] = c;
    Subcommand s;
    s.name = "amatrix";
    s.required = {"--size"};
    s.params = [&]() {
      Json p;
      p["size"] = am.size;
      p["qorder"] = am.qorder;
      p["format"] = am.format;
      p["numeric"] = am.numeric;
      p["tau"] = am.tau;
      p["eps"] = am.eps;
      return p;
    };
    s.load_params = [&](const Json& p) {
      am.size = p.at("size").get<int>();
      am.qorder = p.at("qorder").get<int>();
      am.format = p.value("format", "json");
      am.numeric = p.value("numeric", false);
      am.tau = p.value("tau", "0,1");
      am.eps = p.value("eps", "1,0");
    };
    s.run = [&](const CommonFlags&) -> Json {
      if (am.format != "json" && am.format != "csv")
        throw meroc::ValidationError("--format must be json or csv");
      if (am.numeric) {
        meroc::CMat a = meroc::amatrix_numeric(am.size, parse_complex(am.tau),
                                               parse_complex(am.eps), am.qorder);
        if (am.format == "csv") {
          std::ostringstream os;
          for (int i = 0; i < am.size; ++i) {
            for (int j = 0; j < am.size; ++j) {
              if (j) os << ",";
              os << a(i, j).real() << "+" << a(i, j).imag() << "i";
            }
            os << "\n";
          }
          Json out;
          out["__raw__"] = os.str();
          return out;
        }
        Json rows = Json::array();
        for (int i = 0; i < am.size; ++i) {
          Json row = Json::array();
          for (int j = 0; j < am.size; ++j) {
            Json e;
            e["re"] = a(i, j).real();
            e["im"] = a(i, j).imag();
            row.push_back(e);
          }
          rows.push_back(row);
        }
        Json out;
        out["entries"] = rows;
        return out;
      }
      meroc::WMat a1 = meroc::amatrix_exact(am.size, 1, am.qorder);
      if (am.format == "csv") {
        std::ostringstream os;
        for (int i = 0; i < am.size; ++i) {
          for (int j = 0; j < am.size; ++j) {
            if (j) os << ",";
            os << '"' << meroc::weight_value_to_string(a1(i, j)) << '"';
          }
          os << "\n";
        }
        Json out;
        out["__raw__"] = os.str();
        return out;
      }
      Json rows = Json::array();
      for (int i = 0; i < am.size; ++i) {
        Json row = Json::array();
        for (int j = 0; j < am.size; ++j)
          row.push_back(meroc::weight_value_to_json(a1(i, j)));
        rows.push_back(row);
      }
      Json out;
      out["entries"] = rows;
      return out;
    };
    subs.push_back({std::move(s), CommonFlags{}});
    add_common(c, &subs.back().second);
  }

  // ---- verify-identities ---------------------------------------------
  struct {
    int zworder = 8;
    int qorder = 12;
    int kmax = 5;
  } vi;
  {
    CLI::App* c =
        app.add_subcommand("verify-identities", "Expansion identity checks");
    c->add_option("--zworder", vi.zworder, "z/w order");
    c->add_option("--qorder", vi.qorder, "q order");
    c->add_option("--kmax", vi.kmax, "Maximal k");
    cmd_ptr["verify-identities"] = c;
    Subcommand s;
    s.name = "verify-identities";
    s.params = [&]() {
      Json p;
      p["zworder"] = vi.zworder;
      p["qorder"] = vi.qorder;
      p["kmax"] = vi.kmax;
      return p;
    };
    s.load_params = [&](const Json& p) {
      vi.zworder = p.at("zworder").get<int>();
      vi.qorder = p.at("qorder").get<int>();
      vi.kmax = p.at("kmax").get<int>();
    };
    s.run = [&](const CommonFlags&) {
      meroc::IdentityReport rep =
          meroc::verify_expansion_identities(vi.zworder, vi.qorder, vi.kmax);
      Json out;
      out["ok"] = rep.ok;
      if (!rep.ok) out["first_failure"] = rep.first_failure;
      return out;
    };
    subs.push_back({std::move(s), CommonFlags{}});
    add_common(c, &subs.back().second);
  }

  // ---- necklace-sum ----------------------------------------------------
  struct {
    int m = 3;
    std::string ends = "1,1";
    int cutoff = 3;
    int first_edge = 1;
    int qorder = 6;
    bool numeric = false;
    std::string tau = "0,1";
    std::string tau2;
    std::string eps = "1,0";
    std::string eps2;
  } ns;
  {
    CLI::App* c = app.add_subcommand("necklace-sum",
                                     "Chequered necklace weight sums");
    c->add_option("--m", ns.m, "Node count m >= 2");
    c->add_option("--ends", ns.ends, "End labels K,L");
    c->add_option("--cutoff", ns.cutoff, "Label cutoff");
    c->add_option("--first-edge", ns.first_edge, "First edge label (1 or 2)");
    c->add_option("--qorder", ns.qorder, "q order (exact mode)");
    c->add_flag("--numeric", ns.numeric, "Numeric mode");
    c->add_option("--tau", ns.tau, "tau_1 as RE,IM");
    c->add_option("--tau2", ns.tau2, "tau_2 as RE,IM (defaults to tau)");
    c->add_option("--eps", ns.eps, "eps_1 as RE,IM");
    c->add_option("--eps2", ns.eps2, "eps_2 as RE,IM (defaults to eps)");
    cmd_ptr["necklace-sum"] = c;
    Subcommand s;
    s.name = "necklace-sum";
    s.required = {"--m", "--ends", "--cutoff"};
    s.params = [&]() {
      Json p;
      p["m"] = ns.m;
      p["ends"] = ns.ends;
      p["cutoff"] = ns.cutoff;
      p["first_edge"] = ns.first_edge;
      p["qorder"] = ns.qorder;
      p["numeric"] = ns.numeric;
      p["tau"] = ns.tau;
      p["tau2"] = ns.tau2;
      p["eps"] = ns.eps;
      p["eps2"] = ns.eps2;
      return p;
    };
    s.load_params = [&](const Json& p) {
      ns.m = p.at("m").get<int>();
      ns.ends = p.at("ends").get<std::string>();
      ns.cutoff = p.at("cutoff").get<int>();
      ns.first_edge = p.value("first_edge", 1);
      ns.qorder = p.value("qorder", 6);
      ns.numeric = p.value("numeric", false);
      ns.tau = p.value("tau", "0,1");
      ns.tau2 = p.value("tau2", "");
      ns.eps = p.value("eps", "1,0");
      ns.eps2 = p.value("eps2", "");
    };
    s.run = [&](const CommonFlags& flags) -> Json {
      auto comma = ns.ends.find(',');
      if (comma == std::string::npos)
        throw meroc::ValidationError("--ends wants K,L");
      int end_k = std::stoi(ns.ends.substr(0, comma));
      int end_l = std::stoi(ns.ends.substr(comma + 1));
      Json out;
      out["m"] = ns.m;
      out["ends"] = {end_k, end_l};
      out["cutoff"] = ns.cutoff;
      if (ns.numeric) {
        std::complex<double> t1 = parse_complex(ns.tau);
        std::complex<double> t2 =
            ns.tau2.empty() ? t1 : parse_complex(ns.tau2);
        std::complex<double> e1 = parse_complex(ns.eps);
        std::complex<double> e2 =
            ns.eps2.empty() ? e1 : parse_complex(ns.eps2);
        meroc::NumericNecklaceSum r = meroc::necklace_sum_numeric(
            ns.m, end_k, end_l, ns.cutoff, ns.first_edge, t1, t2, e1, e2,
            ns.qorder);
        Json d, t;
        d["re"] = r.direct.real();
        d["im"] = r.direct.imag();
        t["re"] = r.transfer.real();
        t["im"] = r.transfer.imag();
        out["direct"] = d;
        out["transfer"] = t;
        out["equal"] = r.equal;
        return out;
      }
      meroc::ExactNecklaceSum r =
          meroc::necklace_sum_exact(ns.m, end_k, end_l, ns.cutoff,
                                    ns.first_edge, ns.qorder, flags.threads);
      out["direct"] = meroc::weight_value_to_json(r.direct);
      out["transfer"] = meroc::weight_value_to_json(r.transfer);
      out["equal"] = r.equal;
      return out;
    };
    subs.push_back({std::move(s), CommonFlags{}});
    add_common(c, &subs.back().second);
  }

  // ---- axioms-check ----------------------------------------------------
  struct {
    std::string input;
    int weight = 0;
    bool has_weight = false;
  } ax;
  {
    CLI::App* c = app.add_subcommand("axioms-check",
                                     "Mero-function axiom checks on a cochain");
    c->add_option("--input", ax.input, "Cochain JSON file");
    CLI::Option* w = c->add_option("--weight", ax.weight, "Expected K-weight");
    c->callback([&ax, w]() { ax.has_weight = w->count() > 0; });
    cmd_ptr["axioms-check"] = c;
    Subcommand s;
    s.name = "axioms-check";
    s.required = {"--input"};
    s.params = [&]() {
      Json p;
      p["input"] = ax.input;
      p["weight"] = ax.weight;
      p["has_weight"] = ax.has_weight;
      return p;
    };
    s.load_params = [&](const Json& p) {
      ax.input = p.at("input").get<std::string>();
      ax.weight = p.value("weight", 0);
      ax.has_weight = p.value("has_weight", false);
    };
    s.run = [&](const CommonFlags&) {
      meroc::Cochain f = meroc::cochain_from_json(load_json_file(ax.input));
      Json out;
      meroc::CheckReport tg = meroc::check_tg_property(f);
      Json tgj;
      tgj["pass"] = tg.pass;
      tgj["violations"] = tg.violations;
      out["tg_property"] = tgj;
      if (ax.has_weight) {
        meroc::KgReport kg = meroc::check_kg_property(f, ax.weight);
        Json kgj;
        kgj["pass"] = kg.pass;
        kgj["weights_seen"] = std::vector<int>(kg.weights_seen.begin(),
                                               kg.weights_seen.end());
        kgj["violations"] = kg.violations;
        out["kg_property"] = kgj;
      }
      meroc::CheckReport pb = meroc::check_pole_bounds(f);
      Json pbj;
      pbj["pass"] = pb.pass;
      pbj["violations"] = pb.violations;
      out["pole_bounds"] = pbj;
      return out;
    };
    subs.push_back({std::move(s), CommonFlags{}});
    add_common(c, &subs.back().second);
  }

  // ---- ce-cohomology ---------------------------------------------------
  struct {
    std::string algebra;
    int pmax = 3;
    int pbw_cutoff = 0;
    bool use_module = false;
  } ce;
  {
    CLI::App* c = app.add_subcommand("ce-cohomology",
                                     "Chevalley-Eilenberg homology");
    c->add_option("--algebra", ce.algebra, "Structure-constant JSON file");
    c->add_option("--pmax", ce.pmax, "Top exterior degree");
    c->add_option("--pbw-cutoff", ce.pbw_cutoff, "PBW filtration cutoff");
    c->add_flag("--module", ce.use_module, "Use the attached module");
    cmd_ptr["ce-cohomology"] = c;
    Subcommand s;
    s.name = "ce-cohomology";
    s.required = {"--algebra"};
    s.params = [&]() {
      Json p;
      p["algebra"] = ce.algebra;
      p["pmax"] = ce.pmax;
      p["pbw_cutoff"] = ce.pbw_cutoff;
      p["module"] = ce.use_module;
      return p;
    };
    s.load_params = [&](const Json& p) {
      ce.algebra = p.at("algebra").get<std::string>();
      ce.pmax = p.value("pmax", 3);
      ce.pbw_cutoff = p.value("pbw_cutoff", 0);
      ce.use_module = p.value("module", false);
    };
    s.run = [&](const CommonFlags&) {
      meroc::LieAlgebra g = meroc::lie_from_json(load_json_file(ce.algebra));
      meroc::CEOptions opts;
      opts.p_max = ce.pmax;
      opts.pbw_cutoff = ce.pbw_cutoff;
      opts.use_module = ce.use_module;
      meroc::CEComplex cx = meroc::ce_complex(g, opts);
      meroc::NilpotencyReport nil = cx.verify_nilpotency_windowed();
      Json out;
      out["nilpotent"] = nil.ok;
      if (!nil.ok) out["detail"] = nil.detail;
      Json dims = Json::object();
      for (const auto& [d, n] : cx.chain.spaces())
        dims[std::to_string(d)] = n;
      out["dims"] = dims;
      out["closed_degrees"] =
          std::vector<int>(cx.closed_degrees.begin(), cx.closed_degrees.end());
      out["H"] = h_dims_json(cx.chain.cohomology_dims());
      return out;
    };
    subs.push_back({std::move(s), CommonFlags{}});
    add_common(c, &subs.back().second);
  }

  // ---- cech-cohomology ---------------------------------------------------
  struct {
    std::string nerve;
    std::string convention = "strings";
    int dim = 1;
  } cc;
  {
    CLI::App* c = app.add_subcommand("cech-cohomology",
                                     "Nerve cohomology with constant coefficients");
    c->add_option("--nerve", cc.nerve, "Nerve JSON file");
    c->add_option("--convention", cc.convention, "strings or simplicial");
    c->add_option("--dim", cc.dim, "Constant coefficient dimension");
    cmd_ptr["cech-cohomology"] = c;
    Subcommand s;
    s.name = "cech-cohomology";
    s.required = {"--nerve"};
    s.params = [&]() {
      Json p;
      p["nerve"] = cc.nerve;
      p["convention"] = cc.convention;
      p["dim"] = cc.dim;
      return p;
    };
    s.load_params = [&](const Json& p) {
      cc.nerve = p.at("nerve").get<std::string>();
      cc.convention = p.value("convention", "strings");
      cc.dim = p.value("dim", 1);
    };
    s.run = [&](const CommonFlags&) {
      meroc::Nerve nerve = meroc::nerve_from_json(load_json_file(cc.nerve));
      meroc::CechConvention conv;
      if (cc.convention == "strings")
        conv = meroc::CechConvention::Strings;
      else if (cc.convention == "simplicial")
        conv = meroc::CechConvention::Simplicial;
      else
        throw meroc::ValidationError("--convention must be strings or simplicial");
      meroc::CechCoefficients coeffs =
          meroc::CechCoefficients::constant(nerve, cc.dim);
      meroc::CechComplex cx = meroc::cech_complex(nerve, coeffs, conv);
      meroc::NilpotencyReport nil = cx.chain.verify_nilpotency();
      if (!nil.ok) throw meroc::ConsistencyError(nil.detail);
      Json out = h_dims_json(cx.chain.cohomology_dims());
      return out;
    };
    subs.push_back({std::move(s), CommonFlags{}});
    add_common(c, &subs.back().second);
  }

  // ---- d2check -----------------------------------------------------------
  struct {
    std::string model = "poly";
    int degree = 4;
    int lmax = 2;
    int kmax = 3;
  } d2;
  {
    CLI::App* c = app.add_subcommand("d2check",
                                     "Nilpotency of the double-complex coboundary");
    c->add_option("--model", d2.model, "Model name (poly)");
    c->add_option("--degree", d2.degree, "Model degree bound");
    c->add_option("--lmax", d2.lmax, "Maximal l");
    c->add_option("--kmax", d2.kmax, "Maximal k");
    cmd_ptr["d2check"] = c;
    Subcommand s;
    s.name = "d2check";
    s.params = [&]() {
      Json p;
      p["model"] = d2.model;
      p["degree"] = d2.degree;
      p["lmax"] = d2.lmax;
      p["kmax"] = d2.kmax;
      return p;
    };
    s.load_params = [&](const Json& p) {
      d2.model = p.value("model", "poly");
      d2.degree = p.at("degree").get<int>();
      d2.lmax = p.at("lmax").get<int>();
      d2.kmax = p.at("kmax").get<int>();
    };
    s.run = [&](const CommonFlags&) {
      if (d2.model != "poly")
        throw meroc::ValidationError("only the built-in 'poly' model ships");
      meroc::ModelAlgebra model;
      model.degree_bound = d2.degree;
      meroc::DoubleComplexOptions opts;
      opts.degree_bound = d2.degree;
      opts.l_max = d2.lmax;
      opts.k_max = d2.kmax;
      meroc::DoubleComplexResult r = meroc::build_double_complex(model, opts);
      meroc::NilpotencyReport nil = r.complex.verify_nilpotency();
      long cells = 0;
      for (const auto& [cell, m] : r.complex.maps())
        if (r.complex.has_map(cell.first + 1, cell.second - 1)) ++cells;
      Json out;
      out["nilpotent"] = nil.ok;
      if (!nil.ok) out["detail"] = nil.detail;
      out["checked_cells"] = cells;
      out["cell_dim"] = r.cell_dim;
      return out;
    };
    subs.push_back({std::move(s), CommonFlags{}});
    add_common(c, &subs.back().second);
  }

  // ---- cohomology ---------------------------------------------------------
  struct {
    std::string complex;
  } coh;
  {
    CLI::App* c = app.add_subcommand("cohomology",
                                     "Ranks of a user-supplied chain complex");
    c->add_option("--complex", coh.complex, "Chain complex JSON file");
    cmd_ptr["cohomology"] = c;
    Subcommand s;
    s.name = "cohomology";
    s.required = {"--complex"};
    s.params = [&]() {
      Json p;
      p["complex"] = coh.complex;
      return p;
    };
    s.load_params = [&](const Json& p) {
      coh.complex = p.at("complex").get<std::string>();
    };
    s.run = [&](const CommonFlags&) {
      meroc::ChainComplex cx =
          meroc::chain_complex_from_json(load_json_file(coh.complex));
      meroc::NilpotencyReport nil = cx.verify_nilpotency();
      Json out;
      out["nilpotent"] = nil.ok;
      if (!nil.ok) {
        out["detail"] = nil.detail;
        throw meroc::ValidationError("differentials do not compose to zero: " +
                                     nil.detail);
      }
      Json dims = Json::object();
      for (const auto& [d, n] : cx.spaces()) dims[std::to_string(d)] = n;
      out["dims"] = dims;
      out["H"] = h_dims_json(cx.cohomology_dims());
      out["euler_consistent"] = cx.euler_characteristic_check();
      return out;
    };
    subs.push_back({std::move(s), CommonFlags{}});
    add_common(c, &subs.back().second);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (auto& [sub, flags] : subs) {
      if (cmd_ptr.at(sub.name)->parsed())
        return run_dispatch(sub, cmd_ptr.at(sub.name), flags);
    }
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const meroc::Error& e) {
    Json err;
    err["error"] = {{"code", e.code()}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = {{"code", "internal"}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 1;
  }
}
