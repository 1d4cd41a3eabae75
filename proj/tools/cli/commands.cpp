#include "cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"

#include "cli/report.hpp"
#include "cli/simulate.hpp"
#include "latkern/latkern.hpp"

namespace latkern::cli {

namespace {

// Thrown by a command body to report a well-posed "no".
struct Negative {
  Json result;
};

Json longs(const std::vector<long>& v) {
  Json a = Json::array();
  for (long x : v) a.push_back(x);
  return a;
}

Json order_json(const ExtOrder& o) { return o.is_finite() ? Json(o.value()) : Json("inf"); }

Json series_json(const TruncatedSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(to_string(c));
  return Json{{"start_index", s.start_index}, {"horizon", s.horizon}, {"coefficients", coeffs},
              {"series", s.to_string()}};
}

long sum(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

long parse_count(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long v = -1;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v < 0) throw PreconditionError(what + " must be a nonnegative integer, got '" + text + "'");
  return v;
}

// Markov coefficients A_0..A_horizon of a causal matrix.
std::vector<ConstMatrix> markov(const TransferMatrix& f, long horizon) {
  std::vector<ConstMatrix> out(static_cast<std::size_t>(horizon + 1), ConstMatrix(f.rows(), f.cols()));
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const TruncatedSeries s = expand(f(i, j), horizon);
      for (long t = 0; t <= horizon; ++t) out[static_cast<std::size_t>(t)](i, j) = s.at(t);
    }
  return out;
}

// Impulse response of (I + g f)^-1 v, unrolled in time and compared with l.
bool loop_matches(const TransferMatrix& f, const FeedbackRealization& r, const TransferMatrix& l, long horizon) {
  const auto fs = markov(f, horizon);
  const auto gs = markov(r.g, horizon);
  const auto vs = markov(r.v, horizon);
  const auto ls = markov(l, horizon);
  const std::size_t m = f.cols();
  std::vector<ConstMatrix> gf;
  for (long t = 0; t <= horizon; ++t) {
    ConstMatrix acc(m, m);
    for (long s = 0; s <= t; ++s) acc = acc + gs[static_cast<std::size_t>(s)] * fs[static_cast<std::size_t>(t - s)];
    gf.push_back(std::move(acc));
  }
  std::vector<ConstMatrix> x;
  for (long t = 0; t <= horizon; ++t) {
    ConstMatrix xt = vs[static_cast<std::size_t>(t)];
    for (long s = 1; s <= t; ++s) xt = xt - gf[static_cast<std::size_t>(s)] * x[static_cast<std::size_t>(t - s)];
    if (!(xt == ls[static_cast<std::size_t>(t)])) return false;
    x.push_back(std::move(xt));
  }
  return true;
}

Json classify_json(const CausalityReport& r) {
  return Json{{"order", order_json(r.map_order)},    {"causal", r.causal},
              {"strictly_causal", r.strictly_causal}, {"order_consistent", r.order_consistent},
              {"instantaneous", r.instantaneous},     {"nonlatent", r.nonlatent},
              {"bicausal", r.bicausal}};
}

Json chain_json(const OrderChain& c) {
  Json levels = Json::array();
  for (long j = c.k_lower; j <= c.k_upper && !c.mu.empty(); ++j)
    levels.push_back(Json{{"j", j}, {"mu", c.mu_at(j)}, {"basis", matrix_to_json(c.subspace_at(j))}});
  return Json{{"k_lower", c.k_lower}, {"k_upper", c.k_upper}, {"rank", c.rank}, {"levels", levels}};
}

Json realization_json(const FeedbackRealization& r) {
  return Json{{"sigma", longs(r.sigma)}, {"nu", longs(r.nu)},      {"sum_sigma", sum(r.sigma)},
              {"sum_nu", sum(r.nu)},     {"v", matrix_to_json(r.v)}, {"g", matrix_to_json(r.g)},
              {"rho", matrix_to_json(r.rho)}};
}

// ---- subcommands ---------------------------------------------------------

Json cmd_classify(const std::string& path) { return classify_json(classify(read_matrix_file(path))); }

Json cmd_latency(const std::string& path) {
  const TransferMatrix f = read_matrix_file(path);
  const LatencyKernel k = latency_kernel(f);
  Json out{{"nu", longs(k.nu)}, {"orders", longs(k.orders)}, {"D", matrix_to_json(k.D)}};
  out["D_poly"] = k.D_poly ? matrix_to_json(*k.D_poly) : Json(nullptr);
  out["order_chain"] = chain_json(k.chain);
  if (!k.strictly_causal_input) out["warning"] = "input is not strictly causal";
  return out;
}

Json factor_witness(const TransferMatrix& f, const TransferMatrix& h, const RatVector& u) {
  return Json{{"u", vector_to_json(u)},
              {"order_Fu", order_json(vector_order(apply(f, u)))},
              {"order_Hu", order_json(vector_order(apply(h, u)))}};
}

Json cmd_factor(const std::string& fp, const std::string& hp, bool static_only) {
  const TransferMatrix f = read_matrix_file(fp);
  const TransferMatrix h = read_matrix_file(hp);
  if (static_only) {
    const auto g = static_factor(f, h);
    if (g) return Json{{"factorizable", true}, {"static", true}, {"G", matrix_to_json(*g)}};
    Json no{{"factorizable", false}, {"static", true}, {"reason", "no constant G with H = G F"}};
    const FactorOutcome c = causal_factor(f, h);
    if (c.witness) no["witness"] = factor_witness(f, h, *c.witness);
    throw Negative{std::move(no)};
  }
  const FactorOutcome c = causal_factor(f, h);
  if (c.yes) return Json{{"factorizable", true}, {"static", false}, {"G", matrix_to_json(c.G)}};
  Json no{{"factorizable", false}, {"static", false}};
  if (c.witness) no["witness"] = factor_witness(f, h, *c.witness);
  throw Negative{std::move(no)};
}

Json cmd_equiv(const std::string& p1, const std::string& p2, const std::string& mode_text) {
  const EquivalenceMode mode = parse_equivalence_mode(mode_text);
  const EquivalenceOutcome e = compensation_equivalence(read_matrix_file(p1), read_matrix_file(p2), mode);
  Json out{{"mode", to_string(e.mode)}, {"equivalent", e.equivalent}, {"nu1", longs(e.nu1)}, {"nu2", longs(e.nu2)}};
  if (e.equivalent) {
    if (mode != EquivalenceMode::post) out["l_pr"] = matrix_to_json(e.l_pr);
    if (mode != EquivalenceMode::pre) out["l_po"] = matrix_to_json(e.l_po);
    return out;
  }
  out["reason"] = e.reason;
  if (e.witness) out["witness"] = vector_to_json(*e.witness);
  throw Negative{std::move(out)};
}

Json cmd_realize(const std::string& fp, const std::string& lp, const std::string& out_dir) {
  const TransferMatrix f = read_matrix_file(fp);
  const TransferMatrix l = read_matrix_file(lp);
  const FeedbackRealization r = vg_representation(f, l);
  const long horizon = verification_horizon();
  if (!loop_matches(f, r, l, horizon)) throw InternalError("loop simulation disagrees with l");
  const std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw PreconditionError("cannot create output directory " + dir.string() + ": " + ec.message());
  write_matrix_file(dir / "v.json", r.v);
  write_matrix_file(dir / "g.json", r.g);
  Json out = realization_json(r);
  out["files"] = Json{{"v", (dir / "v.json").string()}, {"g", (dir / "g.json").string()}};
  out["simulation"] = Json{{"horizon", horizon}, {"agrees", true}};
  return out;
}

Json cmd_worstcase(const std::string& fp) {
  const TransferMatrix f = read_matrix_file(fp);
  const WorstCase w = worst_case_precompensator(f);
  Json out{{"l", matrix_to_json(w.l)}};
  out["realization"] = realization_json(w.realization);
  out["tight"] = sum(w.realization.sigma) == sum(w.realization.nu);
  return out;
}

Json cmd_expand(const std::string& fp, long terms) {
  if (terms < 1) throw PreconditionError("--terms must be at least 1");
  const TransferMatrix f = read_matrix_file(fp);
  Json rows = Json::array();
  for (std::size_t i = 0; i < f.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const ExtOrder o = ord(f(i, j));
      row.push_back(o.is_finite() ? expand(f(i, j), o.value() + terms - 1).to_string() : std::string("0"));
    }
    rows.push_back(std::move(row));
  }
  return Json{{"terms", terms}, {"expansions", rows}};
}

Json cmd_statespace(const std::string& ap, const std::string& bp, const std::string& cp) {
  StateSpace s{read_constant_matrix_file(ap), read_constant_matrix_file(bp), std::nullopt};
  if (!cp.empty()) s.C = read_constant_matrix_file(cp);
  const TransferMatrix t = from_state_space(s);
  Json out{{"transfer_matrix", matrix_to_json(t)}, {"classification", classify_json(classify(t))}};
  if (!s.C) {
    const NonlatencyReport n = is_nonlatency_check(s);
    Json nr{{"injective", n.injective}, {"nonlatent", n.nonlatent}};
    if (n.injective)
      nr["nu"] = longs(n.nu);
    else
      nr["static_kernel"] = matrix_to_json(n.static_kernel);
    out["nonlatency"] = std::move(nr);
  }
  return out;
}

Json cmd_simulate(const std::string& fp, const std::string& up, long horizon) {
  const TransferMatrix f = read_matrix_file(fp);
  const TransferMatrix u = read_matrix_file(up);
  if (u.cols() != 1) throw PreconditionError("input file must hold a column vector (cols = 1)");
  const auto ys = simulate_response(f, u.column(0), horizon);
  Json out = Json::array();
  for (const auto& y : ys) out.push_back(series_json(y));
  return Json{{"horizon", horizon}, {"output", out}};
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args)
    if (a != "--json") s += (s.empty() ? "" : " ") + a;
  return s;
}

CommandResult finish(const std::vector<std::string>& args, bool json, int code, const std::string& key, Json body) {
  CommandResult r;
  r.exit_code = code;
  r.json_output = json;
  static const char* const names[] = {"success", "negative", "input_error", "internal_error"};
  r.report = Json{{"command", join(args)}, {"status", names[code]}, {"exit_code", code}};
  r.report[key] = std::move(body);
  return r;
}

Json cmd_batch(const std::string& path, long jobs, int& worst);

}  // namespace

long verification_horizon() {
  const char* env = std::getenv("LATKERN_HORIZON");
  if (env == nullptr || *env == '\0') return 40;
  return parse_count(env, "LATKERN_HORIZON");
}

std::string CommandResult::rendered() const {
  if (!help.empty()) return help;
  return json_output ? report.dump(2) + "\n" : render_text(report);
}

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Causal factorization, latency kernels and feedback realization of rational transfer matrices",
               "latkern"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print the report as JSON");

  std::string a, b, c, mode = "post", out_dir = ".";
  bool static_only = false;
  long terms = 0, horizon = 0, jobs = 1;

  auto* classify_cmd = app.add_subcommand("classify", "Causality classification of F");
  classify_cmd->add_option("F", a, "Matrix file")->required();
  auto* latency_cmd = app.add_subcommand("latency", "Latency kernel and indices of F");
  latency_cmd->add_option("F", a, "Matrix file")->required();
  auto* factor_cmd = app.add_subcommand("factor", "Decide H = G F with G causal");
  factor_cmd->add_option("F", a, "Matrix file")->required();
  factor_cmd->add_option("H", b, "Matrix file")->required();
  factor_cmd->add_flag("--static", static_only, "Require G constant");
  auto* equiv_cmd = app.add_subcommand("equiv", "Bicausal compensation equivalence of F1 and F2");
  equiv_cmd->add_option("F1", a, "Matrix file")->required();
  equiv_cmd->add_option("F2", b, "Matrix file")->required();
  equiv_cmd->add_option("--mode", mode, "post, pre or two-sided")->check(CLI::IsMember({"post", "pre", "two-sided"}));
  auto* realize_cmd = app.add_subcommand("realize", "Write l = (I + g f)^-1 v as v.json and g.json");
  realize_cmd->add_option("F", a, "Strictly causal injective map")->required();
  realize_cmd->add_option("L", b, "Bicausal precompensator")->required();
  realize_cmd->add_option("--out-dir", out_dir, "Directory for v.json and g.json");
  auto* worst_cmd = app.add_subcommand("worstcase", "Precompensator with maximal remainder");
  worst_cmd->add_option("F", a, "Matrix file")->required();
  auto* expand_cmd = app.add_subcommand("expand", "Laurent expansions in z^-1");
  expand_cmd->add_option("F", a, "Matrix file")->required();
  expand_cmd->add_option("--terms", terms, "Terms per entry")->required();
  auto* ss_cmd = app.add_subcommand("statespace", "C (zI - A)^-1 B");
  ss_cmd->add_option("A", a, "Constant matrix file")->required();
  ss_cmd->add_option("B", b, "Constant matrix file")->required();
  ss_cmd->add_option("C", c, "Constant matrix file");
  auto* sim_cmd = app.add_subcommand("simulate", "Response of F to input U by convolution");
  sim_cmd->add_option("F", a, "Matrix file")->required();
  sim_cmd->add_option("U", b, "Column vector file")->required();
  sim_cmd->add_option("--horizon", horizon, "Last coefficient index")->required();
  auto* batch_cmd = app.add_subcommand("batch", "Run a JSON list of argument lists");
  batch_cmd->add_option("FILE", a, "Batch file")->required();
  batch_cmd->add_option("--jobs", jobs, "Concurrent jobs")->check(CLI::PositiveNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    CommandResult r;
    r.help = app.help();
    return r;
  } catch (const CLI::CallForAllHelp&) {
    CommandResult r;
    r.help = app.help("", CLI::AppFormatMode::All);
    return r;
  } catch (const CLI::ParseError& e) {
    return finish(args, json, kInputError, "error", std::string("usage: ") + e.what());
  }
  for (auto* sub : app.get_subcommands()) {
    if (sub->get_help_ptr() && sub->get_help_ptr()->count() > 0) {
      CommandResult r;
      r.help = sub->help();
      return r;
    }
  }

  try {
    Json result;
    int batch_code = kSuccess;
    if (*classify_cmd) result = cmd_classify(a);
    else if (*latency_cmd) result = cmd_latency(a);
    else if (*factor_cmd) result = cmd_factor(a, b, static_only);
    else if (*equiv_cmd) result = cmd_equiv(a, b, mode);
    else if (*realize_cmd) result = cmd_realize(a, b, out_dir);
    else if (*worst_cmd) result = cmd_worstcase(a);
    else if (*expand_cmd) result = cmd_expand(a, terms);
    else if (*ss_cmd) result = cmd_statespace(a, b, c);
    else if (*sim_cmd) result = cmd_simulate(a, b, horizon);
    else result = cmd_batch(a, jobs, batch_code);
    return finish(args, json, batch_code, "result", std::move(result));
  } catch (Negative& n) {
    return finish(args, json, kNegative, "result", std::move(n.result));
  } catch (const PreconditionError& e) {
    return finish(args, json, kInputError, "error", e.what());
  } catch (const InternalError& e) {
    return finish(args, json, kInternalError, "error", e.what());
  } catch (const std::exception& e) {
    return finish(args, json, kInputError, "error", e.what());
  }
}

namespace {

Json cmd_batch(const std::string& path, long jobs, int& worst) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  Json listing;
  try {
    listing = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(path + ": " + e.what());
  }
  if (!listing.is_array()) throw PreconditionError("batch file must be a JSON array of argument lists");
  std::vector<std::vector<std::string>> tasks;
  for (const auto& item : listing) {
    if (!item.is_array()) throw PreconditionError("each batch entry must be an array of strings");
    std::vector<std::string> task;
    for (const auto& s : item) {
      if (!s.is_string()) throw PreconditionError("each batch entry must be an array of strings");
      task.push_back(s.get<std::string>());
    }
    if (!task.empty() && task.front() == "batch") throw PreconditionError("nested batch entries are not allowed");
    tasks.push_back(std::move(task));
  }
  std::vector<CommandResult> results(tasks.size());
  const std::size_t width = static_cast<std::size_t>(std::max(1L, jobs));
  for (std::size_t start = 0; start < tasks.size(); start += width) {
    std::vector<std::future<CommandResult>> wave;
    for (std::size_t i = start; i < std::min(tasks.size(), start + width); ++i)
      wave.push_back(std::async(std::launch::async, [&tasks, i] { return run(tasks[i]); }));
    for (std::size_t k = 0; k < wave.size(); ++k) results[start + k] = wave[k].get();
  }
  Json out = Json::array();
  worst = kSuccess;
  for (auto& r : results) {
    worst = std::max(worst, r.exit_code);
    out.push_back(std::move(r.report));
  }
  return Json{{"jobs", jobs}, {"reports", out}};
}

}  // namespace

}  // namespace latkern::cli
