// Command-line front end: lineup enumeration, polytope vertices and
// membership, halfspace systems, exact-diagonalization checks, and figure
// data emission. JSON reports go to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 failed verification / internal error, 2 usage.

#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bosepoly/halfspace.hpp"
#include "bosepoly/lineups.hpp"
#include "bosepoly/oracle.hpp"
#include "bosepoly/parallel.hpp"
#include "bosepoly/polytope.hpp"

using json = nlohmann::ordered_json;
using namespace bosepoly;

namespace {

std::vector<Rat> parse_rational_list(const std::string& csv) {
  std::vector<Rat> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw NormalizationError("empty entry in list: " + csv);
    out.push_back(parse_rational(item));
  }
  if (out.empty()) throw NormalizationError("empty list");
  return out;
}

// Weights are exact rationals; a nonunit sum is rescaled with a warning so
// the echoed values show the arithmetic actually performed.
WeightVector parse_weights(const std::string& csv) {
  auto w = parse_rational_list(csv);
  Rat sum = 0;
  for (const auto& x : w) sum += x;
  if (sum <= 0) throw NormalizationError("weights must have a positive sum");
  if (sum != 1) {
    std::cerr << "warning: weights sum to " << sum.get_str()
              << "; normalizing\n";
    for (auto& x : w) x /= sum;
  }
  return WeightVector(std::move(w));
}

json rat_str(const Rat& q) { return q.get_str(); }

json rat_vector(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

json weights_json(const WeightVector& w) { return rat_vector(w.values()); }

json lineup_json(const Lineup& l) {
  json a = json::array();
  for (const auto& c : l.sequence) a.push_back(c.indices());
  return a;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

Spectrum parse_spectrum(const std::string& csv, int N) {
  auto v = parse_rational_list(csv);
  Rat sum = 0;
  for (const auto& x : v) sum += x;
  if (sum != N) {
    const Rat gap = abs(sum - Rat(N));
    if (gap.get_d() > 1e-9)
      throw NormalizationError("spectrum must sum to N");
    std::cerr << "warning: spectrum sums to " << sum.get_str()
              << "; rescaling to N\n";
    for (auto& x : v) x *= Rat(N) / sum;
  }
  return Spectrum(std::move(v));
}

int run_lineups_cmd(int N, int d, int r, const std::string& format) {
  const auto ls = enumerate_lineups(N, d, r);
  if (format == "csv") {
    std::cout << "lineup,position,configuration\n";
    for (std::size_t l = 0; l < ls.size(); ++l)
      for (int j = 0; j < r; ++j) {
        std::cout << l << "," << j << ",";
        const auto& idx = ls[l].sequence[j].indices();
        for (std::size_t k = 0; k < idx.size(); ++k)
          std::cout << (k ? " " : "") << idx[k];
        std::cout << "\n";
      }
    return 0;
  }
  json out = json::array();
  for (const auto& l : ls) out.push_back(lineup_json(l));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_vertices(int N, int d, const WeightVector& w) {
  const auto p = build_vertices(N, d, w);
  json out;
  out["N"] = N;
  out["d"] = d;
  out["weights"] = weights_json(w);
  out["vertices"] = json::array();
  for (const auto& v : p.vertices()) out["vertices"].push_back(rat_vector(v.coords));
  out["lineups"] = json::array();
  for (const auto& l : p.lineups()) out["lineups"].push_back(lineup_json(l));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_contains(int N, int d, const WeightVector& w, const std::string& spectrum) {
  const auto s = parse_spectrum(spectrum, N);
  if (d == 0) d = s.dimension();
  const auto p = build_vertices(N, d, w);
  const auto res = contains(p, s);
  json out;
  out["N"] = N;
  out["d"] = d;
  out["weights"] = weights_json(w);
  out["spectrum"] = rat_vector(s.values());
  out["member"] = res.member;
  out["boundary"] = res.boundary;
  out["slack"] = rat_str(res.slack);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_facets(int N, int r, int d, const WeightVector& w, const std::string& mode,
               bool allow_large) {
  if (d == 0) d = r;
  json out;
  out["N"] = N;
  out["r"] = r;
  out["d"] = d;
  out["weights"] = weights_json(w);
  out["mode"] = mode;
  json list = json::array();
  HalfspaceSystem sys;
  if (mode == "analytic")
    sys = analytic_halfspaces(N, w, d);
  else
    sys = numeric_facets(build_vertices(N, d, w), allow_large);
  for (const auto& iq : sys.inequalities) {
    json item;
    item["coeffs"] = rat_vector(iq.coeffs);
    item["bound"] = rat_str(iq.bound);
    item["type"] = "ineq";
    list.push_back(std::move(item));
  }
  {
    json norm;
    norm["coeffs"] = rat_vector(std::vector<Rat>(d, Rat(1)));
    norm["bound"] = rat_str(Rat(N));
    norm["type"] = "eq";
    list.push_back(std::move(norm));
  }
  out["constraints"] = std::move(list);
  out["count"] = sys.constraint_count();
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_oracle_verify(int N, int d, int r, int trials, unsigned long seed,
                      const std::string& weights_csv) {
  const WeightVector w = weights_csv.empty()
                             ? [&] {
                                 std::vector<Rat> v(r);
                                 Rat tot = 0;
                                 for (int j = 0; j < r; ++j) {
                                   v[j] = Rat(1L << (r - 1 - j));
                                   tot += v[j];
                                 }
                                 for (auto& x : v) x /= tot;
                                 return WeightVector(v);
                               }()
                             : parse_weights(weights_csv);
  if (w.r() != r) throw NormalizationError("weights must have exactly r nonzero entries");
  const auto p = build_vertices(N, d, w);
  std::vector<char> hits(trials, 0);
  std::vector<double> devs(trials, 0.0);
  parallel_for(trials, [&](std::size_t t) {
    std::seed_seq seq{seed, static_cast<unsigned long>(t)};
    std::mt19937_64 rng(seq);
    const auto h = sample_generic_field(rng, N, d);
    const auto rep = verify_vertex_sequence(h, N, w, &p);
    hits[t] = rep.hit ? 1 : 0;
    devs[t] = rep.deviation;
  });
  int hit_count = 0;
  double max_dev = 0;
  for (int t = 0; t < trials; ++t) {
    hit_count += hits[t];
    max_dev = std::max(max_dev, devs[t]);
  }
  json out;
  out["N"] = N;
  out["d"] = d;
  out["r"] = r;
  out["weights"] = weights_json(w);
  out["trials"] = trials;
  out["seed"] = seed;
  out["hits"] = hit_count;
  out["misses"] = trials - hit_count;
  out["max_deviation"] = max_dev;
  std::cout << out.dump(2) << "\n";
  return hit_count == trials ? 0 : 1;
}

int run_oracle_hubbard(double J, double U, int N, int sites,
                       const WeightVector& w, const std::string& v_csv) {
  std::vector<double> v(sites, 0.0);
  if (!v_csv.empty()) {
    const auto parsed = parse_rational_list(v_csv);
    if (static_cast<int>(parsed.size()) != sites)
      throw DimensionError("site potential needs one entry per site");
    for (int i = 0; i < sites; ++i) v[i] = parsed[i].get_d();
  }
  const auto op = build_bose_hubbard(J, U, v, N, sites);
  const auto gok = gok_minimizer(op, w);
  const auto gamma = reduce_1rdm(gok.state);
  const auto spec = spectrum_desc(gamma);
  std::vector<double> diag(sites);
  for (int i = 0; i < sites; ++i) diag[i] = gamma(i, i);
  const auto p = build_vertices(N, sites, w);
  const auto res = contains(p, Spectrum::from_doubles(spec, Rat(N)));
  json out;
  out["J"] = J;
  out["U"] = U;
  out["N"] = N;
  out["sites"] = sites;
  out["weights"] = weights_json(w);
  out["E_w"] = gok.energy;
  out["spectrum"] = spec;
  out["diag"] = diag;
  out["membership"] = res.member;
  out["boundary"] = res.boundary;
  out["boundary_distance"] = res.slack.get_d();
  out["degenerate"] = gok.degenerate;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_figure_sigma(int N, int d, const WeightVector& w) {
  if (d != 3) throw SizeError("sigma figure data is drawn in the (l1, l2) plane; d = 3");
  const auto p = build_vertices(N, d, w);
  const auto facets = sorted_sector_facets(p);
  // Substitute l3 = N - l1 - l2.
  std::vector<Facet> plane;
  for (const auto& f : facets) {
    Facet g;
    g.normal = {f.normal[0] - f.normal[2], f.normal[1] - f.normal[2]};
    g.offset = f.offset - f.normal[2] * N;
    plane.push_back(std::move(g));
  }
  const auto loop = polygon_from_halfspaces(plane);
  std::cout << "lambda1,lambda2\n";
  if (!loop.empty())
    for (std::size_t i = 0; i <= loop.size(); ++i) {
      const auto& pt = loop[i % loop.size()];
      std::cout << format_double(pt[0].get_d()) << ","
                << format_double(pt[1].get_d()) << "\n";
    }
  return 0;
}

int run_figure_minkowski(int N, int n_prime, int d, const WeightVector& w) {
  if (d != 3) throw SizeError("minkowski figure data is drawn in the (l1, l2) plane; d = 3");
  if (n_prime <= N) throw SizeError("need Nprime > N");
  const auto small = build_vertices(N, d, w);
  const auto large = build_vertices(n_prime, d, w);
  auto loop_of = [&](const SpectralPolytope& p) {
    std::vector<std::vector<Rat>> pts;
    for (const auto& q : detail::permuted_vertex_points(p))
      pts.push_back({q[0], q[1]});
    return convex_hull_2d(std::move(pts));
  };
  const int delta = n_prime - N;
  std::vector<std::vector<Rat>> simplex{{Rat(delta), Rat(0)}, {Rat(0), Rat(delta)},
                                        {Rat(0), Rat(0)}};
  std::cout << "set,lambda1,lambda2\n";
  auto emit = [&](const std::string& name, const std::vector<std::vector<Rat>>& loop) {
    if (loop.empty()) return;
    for (std::size_t i = 0; i <= loop.size(); ++i) {
      const auto& pt = loop[i % loop.size()];
      std::cout << name << "," << format_double(pt[0].get_d()) << ","
                << format_double(pt[1].get_d()) << "\n";
    }
  };
  emit("sigma_N", loop_of(small));
  emit("C", convex_hull_2d(simplex));
  emit("sigma_Nprime", loop_of(large));
  return 0;
}

int run_table1(int rmax, const std::string& format) {
  if (rmax < 1 || rmax > 12)
    throw SizeError("table supports 1 <= rmax <= 12 (inequalities get slow past 10)");
  std::vector<std::uint64_t> vertices;
  std::vector<int> inequalities;
  for (int r = 1; r <= rmax; ++r) {
    const int N = std::max(1, r - 1);
    vertices.push_back(count_lineups(N, r, r));
    std::vector<Rat> wv(r);
    Rat tot = 0;
    for (int j = 0; j < r; ++j) {
      wv[j] = Rat(1L << (r - 1 - j));
      tot += wv[j];
    }
    for (auto& x : wv) x /= tot;
    const auto sys = numeric_facets(build_vertices(N, r, WeightVector(wv)), true);
    inequalities.push_back(sys.constraint_count());
  }
  if (format == "csv") {
    std::cout << "r";
    for (int r = 1; r <= rmax; ++r) std::cout << "," << r;
    std::cout << "\nvertices";
    for (const auto v : vertices) std::cout << "," << v;
    std::cout << "\ninequalities";
    for (const auto c : inequalities) std::cout << "," << c;
    std::cout << "\n";
    return 0;
  }
  json out;
  out["r"] = json::array();
  for (int r = 1; r <= rmax; ++r) out["r"].push_back(r);
  out["vertices"] = vertices;
  out["inequalities"] = inequalities;
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bosonic ensemble occupation-spectrum polytopes"};
  app.require_subcommand(1);

  // lineups
  auto* lineups_cmd = app.add_subcommand("lineups", "Enumerate lineups");
  int ln_N = 0, ln_d = 0, ln_r = 0;
  std::string ln_format = "json";
  lineups_cmd->add_option("--N", ln_N, "Particle count")->required();
  lineups_cmd->add_option("--d", ln_d, "Orbital count")->required();
  lineups_cmd->add_option("--r", ln_r, "Lineup length")->required();
  lineups_cmd->add_option("--format", ln_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // polytope vertices | contains
  auto* polytope_cmd = app.add_subcommand("polytope", "Vertex representation and membership");
  polytope_cmd->require_subcommand(1);
  auto* vert_cmd = polytope_cmd->add_subcommand("vertices", "Generate vertices");
  int pv_N = 0, pv_d = 0;
  std::string pv_w;
  vert_cmd->add_option("--N", pv_N)->required();
  vert_cmd->add_option("--d", pv_d)->required();
  vert_cmd->add_option("--w", pv_w, "Weights, e.g. 0.5,0.3,0.2 or 1/2,1/3,1/6")->required();
  auto* cont_cmd = polytope_cmd->add_subcommand("contains", "Membership test");
  int pc_N = 0, pc_d = 0;
  std::string pc_w, pc_spectrum;
  cont_cmd->add_option("--N", pc_N)->required();
  cont_cmd->add_option("--d", pc_d, "Defaults to the spectrum length");
  cont_cmd->add_option("--w", pc_w)->required();
  cont_cmd->add_option("--spectrum", pc_spectrum, "Candidate occupations")->required();

  // facets
  auto* facets_cmd = app.add_subcommand("facets", "Halfspace representation");
  int fc_N = 0, fc_r = 0, fc_d = 0;
  std::string fc_w, fc_mode = "analytic";
  bool fc_large = false;
  facets_cmd->add_option("--N", fc_N)->required();
  facets_cmd->add_option("--r", fc_r)->required();
  facets_cmd->add_option("--w", fc_w)->required();
  facets_cmd->add_option("--d", fc_d, "Defaults to r");
  facets_cmd->add_option("--mode", fc_mode)->check(CLI::IsMember({"analytic", "numeric"}));
  facets_cmd->add_flag("--allow-large", fc_large, "Lift the r <= 5 numeric cap");

  // oracle verify | hubbard
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact-diagonalization checks");
  oracle_cmd->require_subcommand(1);
  auto* verify_cmd = oracle_cmd->add_subcommand("verify", "Vertex-sequence trials");
  int ov_N = 0, ov_d = 0, ov_r = 0, ov_trials = 100;
  unsigned long ov_seed = 42;
  std::string ov_w;
  verify_cmd->add_option("--N", ov_N)->required();
  verify_cmd->add_option("--d", ov_d)->required();
  verify_cmd->add_option("--r", ov_r)->required();
  verify_cmd->add_option("--trials", ov_trials);
  verify_cmd->add_option("--seed", ov_seed);
  verify_cmd->add_option("--w", ov_w, "Defaults to w_j ~ 2^(r-j)");
  auto* hub_cmd = oracle_cmd->add_subcommand("hubbard", "Bose-Hubbard ensemble report");
  double oh_J = 1.0, oh_U = 0.0;
  int oh_N = 0, oh_sites = 0;
  std::string oh_w, oh_v;
  hub_cmd->add_option("--J", oh_J, "Hopping amplitude");
  hub_cmd->add_option("--U", oh_U, "On-site interaction");
  hub_cmd->add_option("--N", oh_N)->required();
  hub_cmd->add_option("--sites", oh_sites)->required();
  hub_cmd->add_option("--w", oh_w)->required();
  hub_cmd->add_option("--v", oh_v, "Site potentials (default 0)");

  // figure-data sigma | minkowski
  auto* fig_cmd = app.add_subcommand("figure-data", "CSV boundary data");
  fig_cmd->require_subcommand(1);
  auto* sigma_cmd = fig_cmd->add_subcommand("sigma", "Sorted-sector boundary loop");
  int fs_N = 0, fs_d = 3;
  std::string fs_w;
  sigma_cmd->add_option("--N", fs_N)->required();
  sigma_cmd->add_option("--d", fs_d)->required();
  sigma_cmd->add_option("--w", fs_w)->required();
  auto* mink_cmd = fig_cmd->add_subcommand("minkowski", "Vertex loops of the sum relation");
  int fm_N = 0, fm_Np = 0, fm_d = 3;
  std::string fm_w;
  mink_cmd->add_option("--N", fm_N)->required();
  mink_cmd->add_option("--Nprime", fm_Np)->required();
  mink_cmd->add_option("--d", fm_d)->required();
  mink_cmd->add_option("--w", fm_w)->required();

  // table1
  auto* table_cmd = app.add_subcommand("table1", "Vertex and inequality count rows");
  int tb_rmax = 8;
  std::string tb_format = "json";
  table_cmd->add_option("--rmax", tb_rmax);
  table_cmd->add_option("--format", tb_format)->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (lineups_cmd->parsed())
      return run_lineups_cmd(ln_N, ln_d, ln_r, ln_format);
    if (vert_cmd->parsed())
      return run_vertices(pv_N, pv_d, parse_weights(pv_w));
    if (cont_cmd->parsed())
      return run_contains(pc_N, pc_d, parse_weights(pc_w), pc_spectrum);
    if (facets_cmd->parsed())
      return run_facets(fc_N, fc_r, fc_d, parse_weights(fc_w), fc_mode, fc_large);
    if (verify_cmd->parsed())
      return run_oracle_verify(ov_N, ov_d, ov_r, ov_trials, ov_seed, ov_w);
    if (hub_cmd->parsed())
      return run_oracle_hubbard(oh_J, oh_U, oh_N, oh_sites, parse_weights(oh_w), oh_v);
    if (sigma_cmd->parsed())
      return run_figure_sigma(fs_N, fs_d, parse_weights(fs_w));
    if (mink_cmd->parsed())
      return run_figure_minkowski(fm_N, fm_Np, fm_d, parse_weights(fm_w));
    if (table_cmd->parsed())
      return run_table1(tb_rmax, tb_format);
  } catch (const NormalizationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegeneracyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
