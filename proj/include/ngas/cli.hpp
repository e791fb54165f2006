#pragma once

// Command-line front end.  run() never calls exit(); it returns
//   0 success, 2 usage / invalid input, 3 numerical failure, 1 I/O error.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <exception>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ngas/error.hpp"
#include "ngas/io.hpp"
#include "ngas/ipt.hpp"
#include "ngas/model.hpp"
#include "ngas/oracle.hpp"
#include "ngas/spectrum.hpp"
#include "ngas/susy.hpp"
#include "ngas/tables.hpp"
#include "ngas/vacuum.hpp"

namespace ngas::cli {

using io::Json;

enum ExitCode : int { kOk = 0, kIoError = 1, kUsage = 2, kNumerical = 3 };

struct Family {
  std::string name;
  int k;
  bool double_well;
};

inline const std::vector<Family>& families() {
  static const std::vector<Family> all{{"quartic-aho", 4, false},
                                       {"quartic-dwo", 4, true},
                                       {"sextic-aho", 6, false},
                                       {"sextic-dwo", 6, true},
                                       {"octic-aho", 8, false}};
  return all;
}

inline Family parse_family(const std::string& name) {
  for (const Family& f : families())
    if (f.name == name) return f;
  throw InvalidArgument("unknown --kind '" + name +
                        "' (expected quartic-aho, quartic-dwo, sextic-aho, sextic-dwo or octic-aho)");
}

inline std::string family_name(const OscillatorSpec& spec) {
  for (const Family& f : families())
    if (f.k == spec.k && f.double_well == spec.is_double_well()) return f.name;
  return "k" + std::to_string(spec.k);
}

namespace detail {

inline double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v))
    throw InvalidArgument(what + ": '" + text + "' is not a finite number");
  return v;
}

inline int parse_int(const std::string& text, const std::string& what) {
  const double v = parse_real(text, what);
  if (v != std::floor(v) || v < 0 || v > 1e6)
    throw InvalidArgument(what + ": '" + text + "' is not a non-negative integer");
  return static_cast<int>(v);
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace detail

// "x", "x,y,z" or "a:b:step" (inclusive of b up to rounding).
inline std::vector<double> parse_real_list(const std::string& text, const std::string& what) {
  if (text.empty()) throw InvalidArgument(what + " is empty");
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    const std::vector<std::string> parts = detail::split(text, ':');
    if (parts.size() != 3) throw InvalidArgument(what + ": range must be a:b:step, got '" + text + "'");
    const double a = detail::parse_real(parts[0], what);
    const double b = detail::parse_real(parts[1], what);
    const double step = detail::parse_real(parts[2], what);
    if (!(step > 0.0) || b < a)
      throw InvalidArgument(what + ": range '" + text + "' needs step > 0 and b >= a");
    const double span = (b - a) / step;
    if (span > 1e7) throw InvalidArgument(what + ": range '" + text + "' has too many points");
    const long count = static_cast<long>(std::floor(span + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) out.push_back(a + static_cast<double>(i) * step);
    return out;
  }
  for (const std::string& part : detail::split(text, ',')) out.push_back(detail::parse_real(part, what));
  return out;
}

// "n", "a..b" or "n1,n2,...".
inline std::vector<int> parse_levels(const std::string& text) {
  if (text.empty()) throw InvalidArgument("--levels is empty");
  std::vector<int> out;
  const std::size_t dots = text.find("..");
  if (dots != std::string::npos) {
    const int a = detail::parse_int(text.substr(0, dots), "--levels");
    const int b = detail::parse_int(text.substr(dots + 2), "--levels");
    if (b < a) throw InvalidArgument("--levels range '" + text + "' is empty");
    for (int n = a; n <= b; ++n) out.push_back(n);
    return out;
  }
  for (const std::string& part : detail::split(text, ',')) out.push_back(detail::parse_int(part, "--levels"));
  return out;
}

// Evaluates fn(0..count-1) on a small worker pool; results keep index order and
// the lowest-index failure is rethrown, so output never depends on scheduling.
template <typename F>
auto parallel_map(std::size_t count, F fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct Options {
  std::string kind = "quartic-aho";
  double g = 1.0;
  std::string lambda = "0.1";
  std::string levels = "0";
  int order = 0;
  int dim = 0;
  double rel_tol = 1e-10;
  std::string format = "json";
  std::string convention = "half";
  std::string out;
  std::string phase = "auto";
  bool with_oracle = false;
  int table_id = 0;
  std::string b = "1";
  std::string grid = "-2:2:0.005";
  std::string wf = "both";
  std::string s_grid = "-2:2:0.1";
  std::string pot_kind = "both";
};

namespace detail {

inline Convention resolve_convention(const std::string& name, const Family& fam) {
  if (name == "half") return half_convention();
  Convention c;
  if (name == "paper") {
    c = table_convention(default_table_for(fam.k, fam.double_well));
  } else if (name.rfind("paper-table-", 0) == 0) {
    c = table_convention(parse_int(name.substr(12), "--convention"));
  } else {
    throw InvalidArgument("unknown --convention '" + name + "' (expected half, paper or paper-table-N)");
  }
  if (!convention_applies(c, fam.k, fam.double_well))
    throw InvalidArgument("--convention " + name + " does not apply to --kind " + fam.name);
  return c;
}

inline std::optional<Phase> parse_phase(const std::string& s) {
  if (s == "auto") return std::nullopt;
  if (s == "sr") return Phase::SymmetryRestored;
  if (s == "ssb") return Phase::SpontaneouslyBroken;
  throw InvalidArgument("unknown --phase '" + s + "' (expected auto, sr or ssb)");
}

inline OscillatorSpec family_spec(const Family& fam, double g_magnitude, double lambda) {
  if (g_magnitude < 0.0)
    throw InvalidArgument("--g is the magnitude of the quadratic coefficient; the sign comes from --kind");
  return make_spec(fam.k, fam.double_well ? -g_magnitude : g_magnitude, lambda);
}

inline Json base_meta(const std::string& command, const Convention& conv) {
  Json meta = Json::object();
  meta["tool"] = "ngas";
  meta["format_version"] = 1;
  meta["command"] = command;
  meta["convention"] = conv.name;
  meta["convention_label"] = conv.label;
  meta["hamiltonian"] = "H = p^2/2 + g f^2/2 + lambda f^k";
  return meta;
}

inline Json array_of(const std::vector<double>& v, double factor = 1.0) {
  Json a = Json::array();
  for (double x : v) a.push_back(factor * x);
  return a;
}

// Common provenance fields of every spectrum-like record.
inline Json level_record(const Family& fam, double lambda_requested, const EffectiveSolution& sol,
                         const Convention& conv) {
  Json r = Json::object();
  r["kind"] = fam.name;
  r["g"] = sol.spec.g;
  r["lambda"] = lambda_requested;
  r["model_lambda"] = sol.spec.lambda;
  r["n"] = sol.n;
  r["phase"] = std::string(to_string(sol.phase));
  r["convention"] = conv.name;
  r["w"] = sol.w;
  r["s"] = sol.s;
  r["E0"] = conv.energy(sol.spec, sol.E0);
  return r;
}

// Oracle levels 0..n_max for each coupling, computed once per coupling.
inline std::map<double, OracleSpectrum> oracle_by_lambda(const std::vector<OscillatorSpec>& specs, int n_max,
                                                         double rel_tol) {
  const std::vector<OracleSpectrum> spectra =
      parallel_map(specs.size(), [&](std::size_t i) { return exact_levels(specs[i], n_max, rel_tol); });
  std::map<double, OracleSpectrum> out;
  for (std::size_t i = 0; i < specs.size(); ++i) out.emplace(specs[i].lambda, spectra[i]);
  return out;
}

inline void attach_oracle(Json& r, const OracleSpectrum& o, int n, const Convention& conv) {
  const std::size_t u = static_cast<std::size_t>(n);
  r["oracle"] = conv.energy(o.spec, o.eigenvalues.at(u));
  r["oracle_dim"] = o.dim;
  r["oracle_basis_w"] = o.basis_w;
  r["oracle_convergence"] = conv.difference(o.convergence_estimate.at(u));
}

// spectrum / ipt / oracle share one grid evaluator.
inline io::Document level_grid(const std::string& command, const Options& opt, int order, bool with_oracle) {
  const Family fam = parse_family(opt.kind);
  const Convention conv = resolve_convention(opt.convention, fam);
  const std::optional<Phase> phase = parse_phase(opt.phase);
  const std::vector<double> lambdas = parse_real_list(opt.lambda, "--lambda");
  const std::vector<int> levels = parse_levels(opt.levels);
  if (order < 0 || order > kMaxIptOrder) throw InvalidArgument("--order must be in 0..4");
  if (opt.dim < 0) throw InvalidArgument("--dim must be >= 0");

  std::vector<OscillatorSpec> specs;
  for (double l : lambdas) specs.push_back(family_spec(fam, opt.g, conv.model_lambda(l)));

  struct Cell {
    std::size_t li;
    int n;
  };
  std::vector<Cell> cells;
  for (std::size_t li = 0; li < lambdas.size(); ++li)
    for (int n : levels) cells.push_back({li, n});

  std::vector<Json> records = parallel_map(cells.size(), [&](std::size_t i) {
    const Cell& c = cells[i];
    const EffectiveSolution sol = level_solution(specs[c.li], c.n, phase);
    Json r = level_record(fam, lambdas[c.li], sol, conv);
    Json corrections = Json::array();
    double energy = sol.E0;
    if (order > 0) {
      const IPTSeries series = rs_corrections(sol, order, opt.dim);
      corrections = array_of(series.corrections, conv.factor);
      energy = series.energy(order);
      r["corrections"] = corrections;
      r["energy"] = conv.energy(sol.spec, energy);
      if (command == "ipt") r["partial_sums"] = array_of(series.partial_sums, conv.factor);
      r["ipt_dim"] = series.basis_dim;
      r["truncation_warning"] = series.truncation_warning;
    } else {
      r["corrections"] = corrections;
      r["energy"] = conv.energy(sol.spec, energy);
    }
    return r;
  });

  if (with_oracle) {
    const int n_max = *std::max_element(levels.begin(), levels.end());
    const std::map<double, OracleSpectrum> oracle = oracle_by_lambda(specs, n_max, opt.rel_tol);
    for (std::size_t i = 0; i < cells.size(); ++i)
      attach_oracle(records[i], oracle.at(specs[cells[i].li].lambda), cells[i].n, conv);
  }

  io::Document doc;
  doc.meta = base_meta(command, conv);
  doc.meta["kind"] = fam.name;
  doc.meta["order"] = order;
  if (with_oracle) doc.meta["oracle_rel_tol"] = opt.rel_tol;
  doc.records = std::move(records);
  return doc;
}

inline Json published(const Printed& p) { return p.value(); }

inline io::Document table_document(const Options& opt, bool convention_given) {
  const int id = opt.table_id;
  if (id < 1 || id > 5) throw InvalidArgument("--id must be 1..5");
  const Convention conv =
      (convention_given && opt.convention == "half") ? half_convention() : table_convention(id);
  const int order = opt.order >= 0 ? opt.order : (id <= 2 ? 2 : 0);
  if (order > kMaxIptOrder) throw InvalidArgument("--order must be in 0..4");

  struct Cell {
    Family fam;
    double lambda;  // as labelled in the table (b for table 4)
    OscillatorSpec spec;
    int n;      // level solved
    int row;    // table row label
    Json published;
  };
  std::vector<Cell> cells;
  auto add_grid = [&](const Family& fam, double g, double lambda, int n, Json pub) {
    const Convention tc = table_convention(id);
    cells.push_back({fam, lambda, make_spec(fam.k, g, tc.model_lambda(lambda)), n, n, std::move(pub)});
  };
  switch (id) {
    case 1:
      for (const auto& r : tables::kTable1)
        add_grid(parse_family("quartic-aho"), 1.0, r.lambda, r.n,
                 {{"published_E0", published(r.lo)},
                  {"published_exact", published(r.exact)},
                  {"published_E2", published(r.e2)},
                  {"published_comparison", published(r.ref)}});
      break;
    case 2:
      for (const auto& r : tables::kTable2)
        add_grid(parse_family("quartic-dwo"), -1.0, r.lambda, r.n,
                 {{"published_E0", published(r.lo)},
                  {"published_E2", published(r.e2)},
                  {"published_comparison", published(r.ref)}});
      break;
    case 3:
      for (const auto& r : tables::kTable3)
        add_grid(parse_family("sextic-aho"), 1.0, r.lambda, r.n,
                 {{"published_E0", published(r.lo)}, {"published_comparison", published(r.ref)}});
      break;
    case 4:
      for (const auto& r : tables::kTable4) {
        const PartnerPair pair = partner_specs(1.0);
        cells.push_back({parse_family("sextic-aho"), 1.0, pair.aho, r.n, r.n,
                         {{"published_E0", published(r.aho)}, {"published_exact", published(r.exact)}}});
        cells.push_back({parse_family("sextic-dwo"), 1.0, pair.dwo, r.n + 1, r.n,
                         {{"published_E0", published(r.dwo)}, {"published_exact", published(r.exact)}}});
      }
      break;
    case 5:
      for (const auto& r : tables::kTable5)
        add_grid(parse_family("octic-aho"), 1.0, r.lambda, r.n,
                 {{"published_E0", published(r.lo)}, {"published_comparison", published(r.ref)}});
      break;
  }

  std::vector<Json> records = parallel_map(cells.size(), [&](std::size_t i) {
    const Cell& c = cells[i];
    const EffectiveSolution sol = level_solution(c.spec, c.n);
    Json r = Json::object();
    r["table"] = id;
    r["row"] = c.row;
    Json base = level_record(c.fam, c.lambda, sol, conv);
    if (id == 4) {
      base.erase("lambda");
      r["b"] = c.lambda;
    }
    for (auto& [k, v] : base.items()) r[k] = v;
    Json corrections = Json::array();
    double energy = sol.E0;
    if (order > 0 && sol.phase == Phase::SymmetryRestored) {
      const IPTSeries series = rs_corrections(sol, order, opt.dim);
      corrections = array_of(series.corrections, conv.factor);
      energy = series.energy(order);
    }
    r["corrections"] = corrections;
    r["energy"] = conv.energy(sol.spec, energy);
    for (auto& [k, v] : c.published.items()) r[k] = v;
    return r;
  });

  if (opt.with_oracle) {
    std::vector<OracleSpectrum> spectra = parallel_map(cells.size(), [&](std::size_t i) {
      return exact_levels(cells[i].spec, cells[i].n, opt.rel_tol);
    });
    for (std::size_t i = 0; i < cells.size(); ++i) attach_oracle(records[i], spectra[i], cells[i].n, conv);
  }

  io::Document doc;
  doc.meta = base_meta("table", conv);
  doc.meta["table"] = id;
  doc.meta["order"] = order;
  doc.records = std::move(records);
  return doc;
}

inline io::Document vacuum_document(const Options& opt) {
  if (!(opt.g > 0.0)) throw InvalidArgument("vacuum analysis needs --g > 0");
  const std::vector<double> lambdas = parse_real_list(opt.lambda, "--lambda");
  const Convention conv = half_convention();
  std::vector<Json> records = parallel_map(lambdas.size(), [&](std::size_t i) {
    const double l = lambdas[i];
    if (!(l > 0.0)) throw InvalidArgument("vacuum analysis needs lambda > 0");
    const VacuumStructure v = vacuum_structure(l, opt.g);
    Json r = Json::object();
    r["kind"] = "quartic-aho";
    r["g"] = opt.g;
    r["lambda"] = l;
    r["n"] = 0;
    r["phase"] = "SR";
    r["convention"] = conv.name;
    r["w"] = v.w;
    r["E0"] = v.E0;
    r["corrections"] = Json::array();
    r["w0"] = v.w0;
    r["alpha"] = v.alpha;
    r["n0"] = v.n0;
    r["n0_rational"] = condensate_density_rational(opt.g, v.w);
    r["E0_pert"] = v.E0_pert;
    r["stability_gap"] = v.E0 - v.E0_pert;
    return r;
  });
  io::Document doc;
  doc.meta = base_meta("vacuum", conv);
  doc.records = std::move(records);
  return doc;
}

inline Units parse_units(const std::string& convention) {
  if (convention == "half") return Units::Half;
  if (convention == "paper" || convention == "paper-table-4") return Units::Paper;
  throw InvalidArgument("susy --convention must be half or paper, got '" + convention + "'");
}

inline io::Document susy_spectrum_document(const std::string& which, const Options& opt) {
  const Units units = parse_units(opt.convention);
  const double u = unit_factor(units);
  const std::vector<double> bs = parse_real_list(opt.b, "--b");
  const std::vector<int> levels = parse_levels(opt.levels);
  const Convention conv = units == Units::Half ? half_convention() : table_convention(4);
  struct Cell {
    double b;
    int n;
  };
  std::vector<Cell> cells;
  for (double b : bs)
    for (int n : levels) cells.push_back({b, n});

  std::vector<Json> records = parallel_map(cells.size(), [&](std::size_t i) {
    const Cell& c = cells[i];
    const PartnerPair pair = partner_specs(c.b);
    Json r = Json::object();
    if (which == "ispp") {
      const EffectiveSolution aho = level_solution(pair.aho, c.n);
      const EffectiveSolution dwo = level_solution(pair.dwo, c.n + 1);
      r = level_record(parse_family("sextic-aho"), pair.aho.lambda, aho, conv);
      r["corrections"] = Json::array();
      r["b"] = c.b;
      r["units"] = std::string(to_string(units));
      r["dwo_level"] = c.n + 1;
      r["dwo_w"] = dwo.w;
      r["dwo_E0"] = u * dwo.E0;
      r["residual"] = u * (dwo.E0 - aho.E0);
      r["relative_residual"] = (dwo.E0 - aho.E0) / aho.E0;
    } else {
      const ScalingResidual s = scaling_residual(c.b, c.n, units);
      const EffectiveSolution aho = level_solution(pair.aho, c.n);
      const EffectiveSolution dwo = level_solution(pair.dwo, c.n);
      r = level_record(parse_family("sextic-aho"), pair.aho.lambda, aho, conv);
      r["corrections"] = Json::array();
      r["b"] = c.b;
      r["units"] = std::string(to_string(units));
      r["dwo_E0"] = u * dwo.E0;
      r["aho_residual"] = s.aho;
      r["dwo_residual"] = s.dwo;
      r["aho_relative"] = s.aho / (u * aho.E0);
      r["dwo_relative"] = s.dwo / (u * dwo.E0);
    }
    return r;
  });

  if (opt.with_oracle && which == "ispp") {
    const int n_max = *std::max_element(levels.begin(), levels.end());
    std::vector<PartnerPair> pairs;
    for (double b : bs) pairs.push_back(partner_specs(b));
    const auto spectra = parallel_map(2 * pairs.size(), [&](std::size_t i) {
      const PartnerPair& p = pairs[i / 2];
      return exact_levels(i % 2 == 0 ? p.aho : p.dwo, n_max + 1, opt.rel_tol);
    });
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::size_t bi = i / levels.size();
      const std::size_t n = static_cast<std::size_t>(cells[i].n);
      const OracleSpectrum& a = spectra[2 * bi];
      const OracleSpectrum& d = spectra[2 * bi + 1];
      records[i]["oracle"] = u * a.eigenvalues.at(n);
      records[i]["oracle_dwo"] = u * d.eigenvalues.at(n + 1);
      records[i]["oracle_residual"] = u * (d.eigenvalues.at(n + 1) - a.eigenvalues.at(n));
      records[i]["oracle_dwo_ground"] = u * d.eigenvalues.at(0);
      records[i]["oracle_dim"] = std::max(a.dim, d.dim);
    }
  }

  io::Document doc;
  doc.meta = base_meta("susy " + which, conv);
  doc.meta["units"] = std::string(to_string(units));
  doc.records = std::move(records);
  return doc;
}

inline io::Document susy_wavefunction_document(const Options& opt) {
  const double b = parse_real_list(opt.b, "--b").front();
  const std::vector<double> grid = parse_real_list(opt.grid, "--grid");
  std::vector<WavefunctionKind> kinds;
  if (opt.wf == "both") {
    kinds = {WavefunctionKind::SusyExact, WavefunctionKind::NgasLo};
  } else {
    kinds = {parse_wavefunction_kind(opt.wf)};
  }
  std::vector<std::vector<double>> samples;
  for (WavefunctionKind k : kinds) samples.push_back(ground_wavefunction(k, b, grid));

  io::Document doc;
  doc.meta = base_meta("susy wavefunction", half_convention());
  doc.meta["b"] = b;
  doc.meta["ngas_w"] = susy_ngas_frequency(b);
  const double lo = grid.front();
  const double hi = grid.back();
  const double need = 4.0 * susy_wider_sigma(b);
  if (lo <= -need && hi >= need) {
    const WavefunctionDistance d = wavefunction_distance(b, lo, hi);
    doc.meta["overlap"] = d.overlap;
    doc.meta["l2_distance"] = d.l2_distance;
  } else {
    doc.meta["overlap"] = nullptr;
    doc.meta["overlap_note"] = "grid narrower than 4 sigma of the wider density";
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Json r = Json::object();
    r["f"] = grid[i];
    for (std::size_t k = 0; k < kinds.size(); ++k) r[std::string(to_string(kinds[k]))] = samples[k][i];
    doc.records.push_back(std::move(r));
  }
  return doc;
}

inline io::Document effective_potential_document(const Options& opt) {
  const std::vector<double> lambdas = parse_real_list(opt.lambda, "--lambda");
  const std::vector<double> ss = parse_real_list(opt.s_grid, "--s");
  std::vector<PotentialKind> kinds;
  if (opt.pot_kind == "both") {
    kinds = {PotentialKind::Ngas, PotentialKind::Perturbative};
  } else {
    kinds = {parse_potential_kind(opt.pot_kind)};
  }
  std::vector<std::pair<double, double>> cells;
  for (double l : lambdas) {
    if (!(l > 0.0)) throw InvalidArgument("effective potential needs lambda > 0");
    for (double s : ss) cells.emplace_back(l, s);
  }
  std::vector<Json> records = parallel_map(cells.size(), [&](std::size_t i) {
    Json r = Json::object();
    r["lambda"] = cells[i].first;
    r["s"] = cells[i].second;
    for (PotentialKind k : kinds)
      r[k == PotentialKind::Ngas ? "ngas" : "perturbative"] =
          effective_potential(cells[i].first, cells[i].second, k);
    return r;
  });
  io::Document doc;
  doc.meta = base_meta("effective-potential", half_convention());
  doc.meta["kind"] = "quartic-aho";
  doc.meta["g"] = 1;
  doc.records = std::move(records);
  return doc;
}

// Lets negative range starts follow their flag: "--grid -2:2:0.1" -> "--grid=-2:2:0.1".
inline std::vector<std::string> normalize_args(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if ((a == "--grid" || a == "--s" || a == "--lambda" || a == "--g" || a == "--b") && i + 1 < args.size() &&
        args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
        (std::isdigit(static_cast<unsigned char>(args[i + 1][1])) || args[i + 1][1] == '.')) {
      out.push_back(a + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace detail

inline int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leading-order NGAS spectra, perturbative improvement and reference diagonalization"};
  app.name("ngas");
  app.require_subcommand(1);
  Options opt;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", opt.out, "output path (default: standard output)");
  };
  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--kind", opt.kind,
                    "quartic-aho | quartic-dwo | sextic-aho | sextic-dwo | octic-aho");
    sub->add_option("--g", opt.g, "magnitude of the quadratic coefficient (sign from --kind)");
    sub->add_option("--lambda", opt.lambda, "coupling: x, x,y,... or a:b:step");
    sub->add_option("--levels", opt.levels, "levels: n, a..b or n1,n2,...");
    sub->add_option("--convention", opt.convention, "half | paper | paper-table-N");
    sub->add_option("--phase", opt.phase, "auto | sr | ssb");
    sub->add_option("--dim", opt.dim, "perturbation basis size (0: n + 3k + 1)");
    sub->add_option("--rel-tol", opt.rel_tol, "oracle convergence tolerance");
    add_output(sub);
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "leading order (plus --order corrections) per level");
  add_model(spectrum);
  spectrum->add_option("--order", opt.order, "perturbation order 0..4");
  spectrum->add_flag("--with-oracle", opt.with_oracle, "attach reference eigenvalues");

  int ipt_order = 4;
  CLI::App* ipt = app.add_subcommand("ipt", "perturbative corrections through --order");
  add_model(ipt);
  ipt->add_option("--order", ipt_order, "perturbation order 0..4 (default 4)");
  ipt->add_flag("--with-oracle", opt.with_oracle, "attach reference eigenvalues");

  CLI::App* oracle = app.add_subcommand("oracle", "reference eigenvalues by diagonalization");
  add_model(oracle);

  int table_order = -1;
  CLI::App* table = app.add_subcommand("table", "reproduce a published table with its convention");
  table->add_option("--id", opt.table_id, "table 1..5")->required();
  table->add_option("--order", table_order, "perturbation order (default 2 for tables 1-2, else 0)");
  table->add_option("--convention", opt.convention, "paper (default) or half");
  table->add_option("--dim", opt.dim, "perturbation basis size");
  table->add_option("--rel-tol", opt.rel_tol, "oracle convergence tolerance");
  table->add_flag("--with-oracle", opt.with_oracle, "attach reference eigenvalues");
  add_output(table);

  CLI::App* vacuum = app.add_subcommand("vacuum", "vacuum structure of the quartic single well");
  vacuum->add_option("--lambda", opt.lambda, "coupling: x, x,y,... or a:b:step");
  vacuum->add_option("--g", opt.g, "quadratic coefficient (> 0)");
  add_output(vacuum);

  CLI::App* susy = app.add_subcommand("susy", "sextic SUSY partner checks");
  susy->require_subcommand(1);
  auto add_susy = [&](CLI::App* sub) {
    sub->add_option("--b", opt.b, "super-potential coefficient(s)");
    add_output(sub);
  };
  CLI::App* ispp = susy->add_subcommand("ispp", "E(dwo, n+1) - E(aho, n)");
  add_susy(ispp);
  ispp->add_option("--levels", opt.levels, "levels n");
  ispp->add_option("--convention", opt.convention, "half or paper units");
  ispp->add_option("--rel-tol", opt.rel_tol, "oracle convergence tolerance");
  ispp->add_flag("--with-oracle", opt.with_oracle, "attach reference eigenvalues");
  CLI::App* scaling = susy->add_subcommand("scaling", "E(b) - sqrt(b) E(1)");
  add_susy(scaling);
  scaling->add_option("--levels", opt.levels, "levels n");
  scaling->add_option("--convention", opt.convention, "half or paper units");
  CLI::App* wavefunction = susy->add_subcommand("wavefunction", "ground-state amplitudes on a grid");
  add_susy(wavefunction);
  wavefunction->add_option("--grid", opt.grid, "a:b:step");
  wavefunction->add_option("--wf", opt.wf, "both | susy_exact | ngas_lo");

  CLI::App* effpot = app.add_subcommand("effective-potential", "ngas and perturbative effective potentials");
  effpot->add_option("--lambda", opt.lambda, "coupling: x, x,y,... or a:b:step");
  effpot->add_option("--s", opt.s_grid, "displacement grid a:b:step or list");
  effpot->add_option("--pot-kind", opt.pot_kind, "both | ngas | perturbative");
  add_output(effpot);

  std::vector<std::string> args = detail::normalize_args(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    io::Document doc;
    if (*spectrum) {
      doc = detail::level_grid("spectrum", opt, opt.order, opt.with_oracle);
    } else if (*ipt) {
      doc = detail::level_grid("ipt", opt, ipt_order, opt.with_oracle);
    } else if (*oracle) {
      doc = detail::level_grid("oracle", opt, 0, true);
    } else if (*table) {
      opt.order = table_order;
      doc = detail::table_document(opt, table->count("--convention") > 0);
    } else if (*vacuum) {
      doc = detail::vacuum_document(opt);
    } else if (*ispp) {
      doc = detail::susy_spectrum_document("ispp", opt);
    } else if (*scaling) {
      doc = detail::susy_spectrum_document("scaling", opt);
    } else if (*wavefunction) {
      doc = detail::susy_wavefunction_document(opt);
    } else if (*effpot) {
      doc = detail::effective_potential_document(opt);
    }
    const std::string text = opt.format == "csv" ? io::to_csv(doc) : io::to_json(doc);
    if (opt.out.empty()) {
      out << text;
      out.flush();
    } else {
      io::write_atomically(opt.out, text);
    }
    return kOk;
  } catch (const InvalidArgument& e) {
    err << "ngas: invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const NoPhysicalRoot& e) {
    err << "ngas: numerical failure: " << e.what() << " (lambda_c = " << e.lambda_c() << ")\n";
    return kNumerical;
  } catch (const NumericalFailure& e) {
    err << "ngas: numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const Error& e) {
    err << "ngas: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "ngas: " << e.what() << '\n';
    return kIoError;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace ngas::cli
