// crystalq: CLI over the crystal-melting / q-series library.
//
// Exit codes: 0 success, 1 assertion failure (nonzero residual), 2 usage
// error, 3 genericity or stabilization error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crystalq/gwside.hpp"
#include "crystalq/json_io.hpp"
#include "crystalq/observables.hpp"
#include "crystalq/partitions.hpp"
#include "crystalq/plane_partition.hpp"
#include "crystalq/qseries.hpp"
#include "crystalq/ronkin.hpp"
#include "crystalq/sampler.hpp"
#include "crystalq/vertex.hpp"

namespace {

using crystalq::Partition2D;
using crystalq::QSeries;
using crystalq::Rat;
using crystalq::TorusWeights;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

TorusWeights parse_t(const std::string& s) {
  std::istringstream is(s);
  std::string part;
  std::vector<Rat> v;
  while (std::getline(is, part, ',')) v.push_back(crystalq::rat_from_string(part));
  if (v.size() != 3)
    throw CLI::ValidationError("--t", "expected three comma-separated rationals");
  return {v[0], v[1], v[2]};
}

Partition2D parse_partition(const std::string& s) {
  std::vector<long> parts;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stol(tok));
  }
  return Partition2D(std::move(parts));
}

Rat gamma_exponent(const TorusWeights& t) {
  return (t.t1 + t.t2) * (t.t1 + t.t3) * (t.t2 + t.t3) / (t.t1 * t.t2 * t.t3);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Result JSON wrapped with the run manifest. Digests cover the serialized
// result and any output files; the timestamp is deliberately excluded.
void emit(const std::string& command, const json& flags, const json& result,
          const std::vector<std::string>& output_files = {}) {
  json digests;
  digests["result"] = fnv1a_hex(result.dump());
  for (const auto& path : output_files) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    digests[path] = fnv1a_hex(buf.str());
  }
  json manifest{{"command", command},
                {"flags", flags},
                {"version", kVersion},
                {"digests", digests},
                {"float_precision", "IEEE double, printed with %.17g"},
                {"timestamp", std::chrono::duration_cast<std::chrono::seconds>(
                                  std::chrono::system_clock::now()
                                      .time_since_epoch())
                                  .count()}};
  json out{{"manifest", manifest}, {"result", result}};
  std::cout << out.dump(2) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic crystal-melting partition functions, "
               "q-series identities, and limit-shape sampling"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for series sums");

  // mcmahon
  auto* c_mcm = app.add_subcommand("mcmahon", "McMahon series coefficients");
  long mcm_trunc = 10;
  c_mcm->add_option("--trunc", mcm_trunc, "truncation order")->required();

  // vertex-check
  auto* c_vc = app.add_subcommand(
      "vertex-check", "verify the vertex partition-function identity");
  std::string vc_t;
  long vc_trunc = 5;
  c_vc->add_option("--t", vc_t, "t1,t2,t3")->required();
  c_vc->add_option("--trunc", vc_trunc, "truncation order")->required();

  // weights
  auto* c_w = app.add_subcommand("weights", "list vertex measures at size n");
  std::string w_t;
  long w_size = 1;
  c_w->add_option("--t", w_t, "t1,t2,t3")->required();
  c_w->add_option("--size", w_size, "partition volume")->required();

  // observables
  auto* c_obs = app.add_subcommand(
      "observables", "expectation series of ch_k observables");
  std::string obs_t;
  long obs_k = 5, obs_trunc = 5;
  c_obs->add_option("--t", obs_t, "t1,t2,t3")->required();
  c_obs->add_option("--k", obs_k, "extra observable index to fit")->required();
  c_obs->add_option("--trunc", obs_trunc, "truncation order")->required();

  // gw-p1
  auto* c_gw = app.add_subcommand("gw-p1", "Plancherel descendent sum for P^1");
  long gw_d = 0;
  std::vector<long> gw_tau;
  c_gw->add_option("--d", gw_d, "degree")->required();
  c_gw->add_option("--tau", gw_tau, "insertion indices")->delimiter(',');

  // asymptotics
  auto* c_asy = app.add_subcommand(
      "asymptotics", "asymptotic expansion of the log McMahon function");
  double asy_u = 0.3;
  long asy_gmax = 4, asy_trunc = 0;
  c_asy->add_option("--u", asy_u, "expansion variable u > 0")->required();
  c_asy->add_option("--gmax", asy_gmax, "highest order term")->required();
  c_asy->add_option("--trunc", asy_trunc,
                    "product truncation (default ceil(30/u))");

  // sample
  auto* c_s = app.add_subcommand("sample", "Metropolis chain at fugacity Q");
  crystalq::ChainConfig cc;
  std::string shape_csv, shape_svg;
  c_s->add_option("--q", cc.fugacity, "fugacity in (0,1)")->required();
  c_s->add_option("--steps", cc.steps, "post-burn-in steps")->required();
  c_s->add_option("--seed", cc.seed, "RNG seed")->required();
  c_s->add_option("--burnin", cc.burnin, "burn-in steps");
  c_s->add_option("--max-extent", cc.max_extent, "support cap");
  c_s->add_option("--shape", shape_csv, "write rescaled shape CSV here");
  c_s->add_option("--svg", shape_svg, "write shape heatmap SVG here");

  // ronkin
  auto* c_r = app.add_subcommand("ronkin", "Ronkin function of z + w = 1");
  long r_grid = 256, r_points = 17;
  double r_range = 5.0;
  std::string r_out;
  c_r->add_option("--grid", r_grid, "quadrature grid size (>= 64)")->required();
  c_r->add_option("--range", r_range, "evaluate on [-range, range]^2")
      ->required();
  c_r->add_option("--points", r_points, "sample points per axis");
  c_r->add_option("--out", r_out, "CSV output path (default stdout table)");

  // legged
  auto* c_l = app.add_subcommand(
      "legged", "counting series with boundary legs");
  std::string l_legs;
  long l_trunc = 5;
  c_l->add_option("--legs", l_legs, "lambda;mu;nu, each a comma list")
      ->required();
  c_l->add_option("--trunc", l_trunc, "truncation order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2; --help exits 0
  }

  if (c_mcm->parsed()) {
    emit("mcmahon", json{{"trunc", mcm_trunc}},
         json{{"series", to_json(crystalq::mcmahon(mcm_trunc))}});
    return 0;
  }

  if (c_vc->parsed()) {
    TorusWeights t = parse_t(vc_t);
    QSeries lhs = crystalq::vertex_series(t, vc_trunc,
                                          crystalq::default_perturbation(),
                                          threads);
    Rat gamma = gamma_exponent(t);
    QSeries rhs = crystalq::degree0_dt_series(-gamma, vc_trunc);
    QSeries residual = lhs - rhs;
    json result{{"t", vc_t},
                {"gamma", crystalq::rat_to_string(gamma)},
                {"series", to_json(lhs)},
                {"residual", to_json(residual)},
                {"identity_holds", residual.is_zero()}};
    emit("vertex-check", json{{"t", vc_t}, {"trunc", vc_trunc}}, result);
    return residual.is_zero() ? 0 : 1;
  }

  if (c_w->parsed()) {
    TorusWeights t = parse_t(w_t);
    json items = json::array();
    for (const auto& pi : crystalq::enumerate_plane_partitions(w_size)) {
      auto w = crystalq::weight(pi);
      QSeries v = crystalq::evaluate_weight_series(
          w, t, crystalq::default_perturbation());
      items.push_back(json{{"pi", to_json(pi)},
                           {"weight", to_json(w)},
                           {"value", crystalq::rat_to_string(v.coeff(0))},
                           {"pole_order", -std::min(v.min_exp(), 0L)}});
    }
    emit("weights", json{{"t", w_t}, {"size", w_size}},
         json{{"weights", items}});
    return 0;
  }

  if (c_obs->parsed()) {
    TorusWeights t = parse_t(obs_t);
    QSeries e3 = crystalq::eisenstein_odd(1, obs_trunc).at_neg_q();
    Rat pre = (t.t1 + t.t2) * (t.t1 + t.t3) * (t.t2 + t.t3);
    QSeries ch3 = crystalq::expectation_ch(3, t, obs_trunc);
    QSeries ch4 = crystalq::expectation_ch(4, t, obs_trunc);
    QSeries res3 = ch3 - e3.scaled(-pre);
    QSeries res4 =
        ch4 - e3.q_ddq().scaled(Rat(-1, 2) * pre * (t.t1 + t.t2 + t.t3));
    auto fit = crystalq::fit_differential_algebra(obs_k, t, obs_trunc);
    json fitj{{"k", obs_k}, {"fits", fit.fits}};
    if (fit.fits) {
      json coeffs = json::object();
      for (size_t i = 0; i < fit.coefficients.size(); ++i)
        coeffs[fit.basis_names[i]] =
            crystalq::rat_to_string(fit.coefficients[i]);
      fitj["coefficients"] = coeffs;
    }
    json result{{"ch3", to_json(ch3)},
                {"ch4", to_json(ch4)},
                {"ch3_residual", to_json(res3)},
                {"ch4_residual", to_json(res4)},
                {"identities_hold", res3.is_zero() && res4.is_zero()},
                {"fit", fitj}};
    emit("observables",
         json{{"t", obs_t}, {"k", obs_k}, {"trunc", obs_trunc}}, result);
    return (res3.is_zero() && res4.is_zero()) ? 0 : 1;
  }

  if (c_gw->parsed()) {
    Rat v = crystalq::descendent_p1({gw_d, gw_tau});
    emit("gw-p1", json{{"d", gw_d}, {"tau", gw_tau}},
         json{{"value", crystalq::rat_to_string(v)}});
    return 0;
  }

  if (c_asy->parsed()) {
    long trunc = asy_trunc > 0
                     ? asy_trunc
                     : static_cast<long>(30.0 / asy_u) + 1;
    auto rep = crystalq::mcmahon_asymptotics(asy_u, asy_gmax, trunc);
    json rows = json::array();
    for (const auto& r : rep.rows)
      rows.push_back(json{{"u", fmt(rep.u)},
                          {"g", r.g},
                          {"partial_sum", fmt(r.partial_sum)},
                          {"residual", fmt(r.residual)}});
    json result{{"log_m", fmt(rep.log_m)},
                {"g1_sign", rep.g1_sign},
                {"rows", rows}};
    emit("asymptotics",
         json{{"u", fmt(asy_u)}, {"gmax", asy_gmax}, {"trunc", trunc}},
         result);
    return 0;
  }

  if (c_s->parsed()) {
    auto res = crystalq::run_chain(cc);
    std::vector<std::string> files;
    if (!shape_csv.empty() || !shape_svg.empty()) {
      auto grid = crystalq::export_rescaled_shape(res.final_state, cc.fugacity);
      if (!shape_csv.empty()) {
        crystalq::write_shape_csv(shape_csv, grid);
        files.push_back(shape_csv);
      }
      if (!shape_svg.empty()) {
        crystalq::write_shape_svg(shape_svg, grid);
        files.push_back(shape_svg);
      }
    }
    json result{{"mean_volume", fmt(res.mean_volume)},
                {"variance", fmt(res.variance)},
                {"std_error", fmt(res.std_error)},
                {"accepted", res.accepted},
                {"steps", res.steps},
                {"final_state", to_json(res.final_state)}};
    emit("sample",
         json{{"q", fmt(cc.fugacity)},
              {"steps", cc.steps},
              {"seed", cc.seed},
              {"burnin", cc.burnin},
              {"max_extent", cc.max_extent}},
         result, files);
    return 0;
  }

  if (c_r->parsed()) {
    std::ostringstream csv;
    csv << "x,y,ronkin\n";
    for (long i = 0; i < r_points; ++i)
      for (long j = 0; j < r_points; ++j) {
        double x = -r_range + 2.0 * r_range * i / (r_points - 1);
        double y = -r_range + 2.0 * r_range * j / (r_points - 1);
        csv << fmt(x) << "," << fmt(y) << ","
            << fmt(crystalq::ronkin(x, y, r_grid)) << "\n";
      }
    std::vector<std::string> files;
    json result;
    if (!r_out.empty()) {
      std::ofstream f(r_out);
      if (!f) throw std::runtime_error("cannot open " + r_out);
      f << csv.str();
      files.push_back(r_out);
      result = json{{"csv_path", r_out}};
    } else {
      result = json{{"csv", csv.str()}};
    }
    emit("ronkin",
         json{{"grid", r_grid},
              {"range", fmt(r_range)},
              {"points", r_points},
              {"out", r_out}},
         result, files);
    return 0;
  }

  if (c_l->parsed()) {
    std::vector<Partition2D> legs;
    std::istringstream is(l_legs);
    std::string part;
    while (std::getline(is, part, ';')) legs.push_back(parse_partition(part));
    legs.resize(3);
    QSeries s = crystalq::legged_counting_series(legs[0], legs[1], legs[2],
                                                 l_trunc);
    emit("legged", json{{"legs", l_legs}, {"trunc", l_trunc}},
         json{{"series", to_json(s)}});
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::domain_error& e) {
    // Genericity / stabilization failures.
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
