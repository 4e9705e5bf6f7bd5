// aztec: exact Aztec-diamond tiling toolkit.
//
// Subcommands: count, pdf, sample, sample-half, arctic, limit-check, verify,
// render, half {count, pdf, verify}.  Exit codes: 0 ok, 2 verification
// failure, 3 budget exceeded, 4 bad input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

#include "CLI11.hpp"

#include "aztec/asymptotics.hpp"
#include "aztec/distributions.hpp"
#include "aztec/half.hpp"
#include "aztec/krawtchouk.hpp"
#include "aztec/parallel.hpp"
#include "aztec/sampler.hpp"
#include "aztec/serialize.hpp"
#include "aztec/verify.hpp"

namespace {

using namespace aztec;

std::vector<int> parse_positions(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file: " + path);
  os << content;
}

std::string rat_report(const BigRat& q) {
  return rat_string(q) + " (~= " + format_double(rat_double(q)) + ")";
}

int print_checks(const CheckList& checks) {
  for (const auto& c : checks) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) std::cout << " - " << c.detail;
    std::cout << "\n";
  }
  return all_pass(checks) ? 0 : 2;
}

SampleMode parse_mode(const std::string& mode) {
  if (mode == "exact") return SampleMode::exact;
  if (mode == "logfloat") return SampleMode::logfloat;
  throw std::invalid_argument("mode must be exact or logfloat");
}

int cmd_sample(int order, long count, uint64_t seed, const std::string& mode_str,
               const std::string& out_path, bool tiling, bool half, bool shuffle) {
  SampleMode mode = parse_mode(mode_str);
  if (shuffle && !tiling)
    throw std::invalid_argument("--shuffle draws tilings; combine it with --tiling");
  std::vector<std::string> records(static_cast<size_t>(count));
  parallel_for(count, [&](long i) {
    RngStream rng(seed, static_cast<uint64_t>(i));
    nlohmann::ordered_json j;
    if (half) {
      auto s = sample_half(order, rng, mode);
      j = half_system_to_json(s.system);
      if (mode == SampleMode::exact) j["probability"] = rat_string(s.probability);
    } else if (tiling) {
      j = tiling_to_json(shuffle ? shuffle_tiling(order, rng)
                                 : sample_tiling(order, rng, mode));
    } else {
      auto s = sample_system(order, rng, mode);
      j = system_to_json(s.system);
      if (mode == SampleMode::exact) j["probability"] = rat_string(s.probability);
    }
    j["stream"] = i;
    records[static_cast<size_t>(i)] = j.dump();
  });
  nlohmann::ordered_json meta;
  meta["schema_version"] = kSchemaVersion;
  meta["record"] = "meta";
  meta["command"] = half ? "sample-half" : "sample";
  meta["order"] = order;
  meta["count"] = count;
  meta["seed"] = seed;
  meta["mode"] = shuffle ? "shuffle" : mode_str;
  meta["tiling"] = tiling;
  std::ostringstream os;
  os << meta.dump() << "\n";
  for (auto& r : records) os << r << "\n";
  if (out_path.empty())
    std::cout << os.str();
  else
    write_file(out_path, os.str());
  return 0;
}

int cmd_arctic(int order, long samples, uint64_t seed, const std::string& csv_path,
               const std::string& svg_path, bool half, double eps) {
  EmpiricalEnsemble ens;
  ens.seed = seed;
  if (half) {
    // per-line draws from the exact one-line law of the complementary holes
    ens.init_half(order);
    for (int n = 1; n <= order; ++n) {
      int hole_line = 2 * (order - n) + 1;
      std::vector<LineConfig> lines(static_cast<size_t>(samples));
      parallel_for(samples, [&](long i) {
        RngStream rng(seed + static_cast<uint64_t>(n) * 0x9e3779b9ULL,
                      static_cast<uint64_t>(i));
        LineConfig holes = sample_half_line(hole_line, order, rng);
        std::vector<char> present(static_cast<size_t>(order) + 2, 0);
        for (int y : holes.positions) present[static_cast<size_t>(y)] = 1;
        std::vector<int> comp;
        for (int x = order + 1; x >= 1; --x)
          if (!present[static_cast<size_t>(x)]) comp.push_back(x);
        lines[static_cast<size_t>(i)] = LineConfig(2 * n, comp);
      });
      for (auto& ln : lines) ens.add_line(ln);
    }
    ens.sample_count = static_cast<int>(samples);
  } else {
    ens.init_full(order);
    std::vector<ParticleSystem> draws(static_cast<size_t>(samples));
    parallel_for(samples, [&](long i) {
      RngStream rng(seed, static_cast<uint64_t>(i));
      draws[static_cast<size_t>(i)] =
          particles_from_tiling(shuffle_tiling(order, rng));
    });
    for (auto& s : draws) ens.add(s);
  }

  std::vector<ArcticRow> rows;
  for (int n = 1; n <= order; ++n) {
    double s = static_cast<double>(n) / order;
    ArcticRow row{};
    row.s = s;
    if (half) {
      row.a_theory = 0.0;
      row.b_theory = half_boundary(s);
      auto band = empirical_support(ens, 2 * n, eps);
      row.a_emp = band.lo;
      row.b_emp = band.hi;
    } else {
      auto th = arctic_boundary(s);
      row.a_theory = th.a;
      row.b_theory = th.b;
      auto band = empirical_support(ens, n, eps);
      row.a_emp = band.lo;
      row.b_emp = band.hi;
    }
    rows.push_back(row);
  }
  std::ostringstream cfg;
  cfg << "command=arctic order=" << order << " samples=" << samples
      << " seed=" << seed << " half=" << (half ? 1 : 0) << " eps=" << eps
      << " sampler=" << (half ? "one-line" : "shuffle");
  std::string csv = csv_arctic(cfg.str(), rows);
  if (csv_path.empty())
    std::cout << csv;
  else
    write_file(csv_path, csv);

  if (!svg_path.empty()) {
    if (half)
      throw std::invalid_argument("arctic --svg supports the full diamond only");
    RngStream rng(seed, static_cast<uint64_t>(samples));
    DominoTiling t = shuffle_tiling(order, rng);
    std::string svg = svg_arctic_overlay(t);
    svg.insert(svg.find("?>\n") + 3, "<!-- " + cfg.str() + " -->\n");
    write_file(svg_path, svg);
  }
  return 0;
}

ZGrid default_grid(int n) {
  // interlacing configurations kept inside the bulk of the limit laws
  if (n == 1) return {{{0.0}}, {{0.5}}, {{-0.7}}, {{1.1}}, {{-1.3}}};
  if (n == 2)
    return {{{0.0}, {1.0, -1.0}},
            {{0.5}, {1.5, -0.5}},
            {{-0.3}, {0.8, -1.2}},
            {{0.1}, {2.0, -0.4}},
            {{-0.6}, {0.2, -1.8}}};
  if (n == 3)
    return {{{0.0}, {1.0, -1.0}, {1.8, 0.4, -1.6}},
            {{0.2}, {1.2, -0.9}, {2.0, 0.5, -1.4}}};
  throw std::invalid_argument("limit-check grids available for n <= 3");
}

ZGrid default_half_grid(int n) {
  // hole lines 1..n; line j holds ceil(j/2) positive values
  if (n == 1) return {{{0.6}}, {{1.0}}, {{1.4}}, {{0.3}}, {{1.8}}};
  if (n == 2)
    return {{{0.6}, {1.0}}, {{0.9}, {1.3}}, {{0.4}, {1.5}},
            {{1.2}, {1.7}}, {{0.3}, {0.8}}};
  throw std::invalid_argument("half limit-check grids available for n <= 2");
}

int cmd_limit_check(int n, const std::vector<int>& orders, bool half, double tol) {
  std::cout << (half ? "M" : "N") << ",error\n";
  double prev = -1;
  bool decreasing = true;
  double last = 0;
  for (int N : orders) {
    double err = half ? half_scaling_limit_error(n, N, default_half_grid(n))
                      : scaling_limit_error(n, N, default_grid(n));
    std::cout << N << "," << format_double(err) << "\n";
    if (prev >= 0 && err >= prev) decreasing = false;
    prev = err;
    last = err;
  }
  if (tol > 0) {
    bool pass = decreasing && last <= tol;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " strictly decreasing and last <= "
              << format_double(tol) << "\n";
    return pass ? 0 : 2;
  }
  return 0;
}

int cmd_render(int order, uint64_t seed, bool all, const std::string& out,
               bool overlay) {
  if (all) {
    std::filesystem::create_directories(out);
    long index = 0;
    std::function<void(const DominoTiling&)> visit = [&](const DominoTiling& t) {
      std::ostringstream name;
      name << out << "/tiling_" << order << "_" << index++ << ".svg";
      write_file(name.str(), svg_tiling(t, true, true));
    };
    enumerate_tilings(order, &visit);
    std::cout << "wrote " << index << " files to " << out << "\n";
    return 0;
  }
  RngStream rng(seed, 0);
  DominoTiling t = order <= 64 ? sample_tiling(order, rng, SampleMode::exact)
                               : shuffle_tiling(order, rng);
  std::string svg = overlay ? svg_arctic_overlay(t) : svg_tiling(t, true, true);
  std::ostringstream cfg;
  cfg << "<!-- command=render order=" << order << " seed=" << seed << " -->\n";
  svg.insert(svg.find("?>\n") + 3, cfg.str());
  if (out.empty())
    std::cout << svg;
  else
    write_file(out, svg);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Aztec diamond tilings: exact laws, samplers, asymptotics"};
  app.require_subcommand(1);

  // count
  int N = 2, M = 1, n = 1;
  auto* count_cmd = app.add_subcommand("count", "number of tilings of order N");
  count_cmd->add_option("--N", N, "diamond order")->required();

  // pdf
  std::string positions;
  auto* pdf_cmd = app.add_subcommand("pdf", "one-line law at given positions");
  pdf_cmd->add_option("--n", n, "line index")->required();
  pdf_cmd->add_option("--N", N, "diamond order")->required();
  pdf_cmd->add_option("--positions", positions, "comma-separated positions")->required();

  // sample / sample-half
  long count = 1;
  uint64_t seed = 1;
  std::string mode = "exact", out_path, csv_path, svg_path;
  bool tiling = false;
  auto* sample_cmd = app.add_subcommand("sample", "draw particle systems or tilings");
  sample_cmd->add_option("--N", N, "diamond order")->required();
  sample_cmd->add_option("--count", count, "number of draws");
  sample_cmd->add_option("--seed", seed, "rng seed");
  sample_cmd->add_option("--mode", mode, "exact | logfloat");
  sample_cmd->add_option("--out", out_path, "output JSONL path (stdout if empty)");
  sample_cmd->add_flag("--tiling", tiling, "emit tilings instead of systems");
  bool shuffle = false;
  sample_cmd->add_flag("--shuffle", shuffle,
                       "uniform tilings by growth shuffling (any order)");

  auto* sample_half_cmd = app.add_subcommand("sample-half", "draw half-diamond systems");
  sample_half_cmd->add_option("--M", M, "half-diamond order")->required();
  sample_half_cmd->add_option("--count", count, "number of draws");
  sample_half_cmd->add_option("--seed", seed, "rng seed");
  sample_half_cmd->add_option("--mode", mode, "exact | logfloat");
  sample_half_cmd->add_option("--out", out_path, "output JSONL path");

  // arctic
  long samples = 50;
  double eps = 0.1, tol = 0;
  bool half_flag = false;
  auto* arctic_cmd = app.add_subcommand("arctic", "empirical vs limiting support");
  arctic_cmd->add_option("--N", N, "diamond order (or M with --half)")->required();
  arctic_cmd->add_option("--samples", samples, "number of draws");
  arctic_cmd->add_option("--seed", seed, "rng seed");
  arctic_cmd->add_option("--csv", csv_path, "CSV output path (stdout if empty)");
  arctic_cmd->add_option("--svg", svg_path, "optional tiling+circle overlay SVG");
  arctic_cmd->add_option("--eps", eps, "support quantile");
  arctic_cmd->add_flag("--half", half_flag, "half diamond");

  // limit-check
  std::string n_list = "100,400,1600";
  auto* limit_cmd = app.add_subcommand("limit-check", "minor-process convergence table");
  limit_cmd->add_option("--n", n, "number of lines")->required();
  limit_cmd->add_option("--N-list", n_list, "comma-separated orders");
  limit_cmd->add_flag("--half", half_flag, "half diamond");
  limit_cmd->add_option("--tol", tol, "pass/fail threshold for the last order");

  // verify
  std::string which = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run the exact oracle suite");
  verify_cmd->add_option("which", which,
                         "counts | prop1 | one-line | complement | half | appendix | all");
  verify_cmd->add_option("--N", N, "diamond order");
  verify_cmd->add_option("--M", M, "half-diamond order");
  verify_cmd->add_option("--n", n, "identity depth");

  // render
  bool render_all = false, overlay = false;
  auto* render_cmd = app.add_subcommand("render", "emit SVG renderings");
  render_cmd->add_option("--N", N, "diamond order")->required();
  render_cmd->add_option("--seed", seed, "rng seed");
  render_cmd->add_flag("--all", render_all, "render every tiling (small N)");
  render_cmd->add_flag("--overlay", overlay, "draw the limiting circle");
  render_cmd->add_option("--out", out_path, "output file (or directory with --all)");

  // half group
  auto* half_cmd = app.add_subcommand("half", "half-diamond commands");
  half_cmd->require_subcommand(1);
  auto* half_count = half_cmd->add_subcommand("count", "number of half tilings");
  half_count->add_option("--M", M, "half order")->required();
  auto* half_pdf = half_cmd->add_subcommand("pdf", "hole-line one-line law");
  half_pdf->add_option("--j", n, "line index")->required();
  half_pdf->add_option("--M", M, "half order")->required();
  half_pdf->add_option("--positions", positions, "comma-separated positions")->required();
  auto* half_verify = half_cmd->add_subcommand("verify", "half oracle suite");
  half_verify->add_option("--M", M, "half order");

  CLI11_PARSE(app, argc, argv);

  if (count_cmd->parsed()) {
    std::cout << count_tilings(N) << "\n";
    return 0;
  }
  if (pdf_cmd->parsed()) {
    auto pos = parse_positions(positions);
    std::cout << rat_report(one_line_pdf(n, N, pos)) << "\n";
    return 0;
  }
  if (sample_cmd->parsed())
    return cmd_sample(N, count, seed, mode, out_path, tiling, false, shuffle);
  if (sample_half_cmd->parsed())
    return cmd_sample(M, count, seed, mode, out_path, false, true, false);
  if (arctic_cmd->parsed())
    return cmd_arctic(N, samples, seed, csv_path, svg_path, half_flag, eps);
  if (limit_cmd->parsed()) {
    std::vector<int> orders;
    for (int v : parse_positions(n_list)) orders.push_back(v);
    return cmd_limit_check(n, orders, half_flag, tol);
  }
  if (render_cmd->parsed()) return cmd_render(N, seed, render_all, out_path, overlay);
  if (half_count->parsed()) {
    std::cout << count_half(M) << "\n";
    return 0;
  }
  if (half_pdf->parsed()) {
    auto pos = parse_positions(positions);
    std::cout << rat_report(half_one_line_pdf(n, M, pos)) << "\n";
    return 0;
  }
  if (half_verify->parsed()) return print_checks(verify_half(M));
  if (verify_cmd->parsed()) {
    CheckList checks;
    auto append = [&](CheckList more) {
      for (auto& c : more) checks.push_back(std::move(c));
    };
    if (which == "counts") append(verify_counts(N));
    else if (which == "prop1") append(verify_prop1(N));
    else if (which == "one-line") append(verify_one_line(std::min(N, 4), std::max(N, 8)));
    else if (which == "complement") append(verify_complement(N));
    else if (which == "half") append(verify_half(M));
    else if (which == "appendix") append(verify_appendix(8, M, n));
    else if (which == "all") {
      append(verify_counts(4));
      append(verify_prop1(3));
      append(verify_prop1(4));
      append(verify_one_line(4, 8));
      append(verify_complement(4));
      append(verify_half(std::min(M, 3)));
      append(verify_appendix(8, 4, 2));
    } else {
      throw std::invalid_argument("unknown verify target: " + which);
    }
    return print_checks(checks);
  }
  return 4;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const aztec::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
