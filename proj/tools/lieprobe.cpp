// lieprobe command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 malformed input, 3 unrecognized
// graph or failed check, 4 size guard.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lieprobe/lieprobe.hpp"

using namespace lieprobe;

namespace {

constexpr int kUsage = 1;
constexpr int kMalformed = 2;
constexpr int kFailed = 3;
constexpr int kTooLarge = 4;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedInput:
    case ErrorCode::InvalidGeometry:
    case ErrorCode::DimensionMismatch:
      return kMalformed;
    case ErrorCode::InstanceTooLarge:
    case ErrorCode::SizeLimitExceeded:
      return kTooLarge;
    case ErrorCode::InvalidParameters:
    case ErrorCode::RankTooSmall:
    case ErrorCode::NonPrimeCharacteristic:
    case ErrorCode::OrderTooLarge:
    case ErrorCode::InvalidForm:
    case ErrorCode::VertexOutOfRange:
      return kUsage;
    default:
      return kFailed;
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return read_text_file(path);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_text_file(path, content);
  }
}

std::string encode(const Graph& g, const std::string& format) {
  if (format == "sparse6") return to_sparse6(g) + "\n";
  return to_graph6(g) + "\n";
}

Graph read_graph(const std::string& path) { return parse_graph(read_input(path)); }

std::string witness_string(const std::vector<int>& w) {
  std::string s;
  for (int v : w) s += (s.empty() ? "" : " ") + std::to_string(v);
  return "[" + s + "]";
}

Family family_from_name(const std::string& name) {
  if (name == "w") return Family::PolarW;
  if (name == "q") return Family::PolarQ;
  if (name == "qplus") return Family::PolarQplus;
  if (name == "qminus") return Family::PolarQminus;
  if (name == "grassmann") return Family::A_n2;
  if (name == "halfspin") return Family::D_nn;
  throw Error(ErrorCode::InvalidParameters, "unknown family " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate, reconstruct and recognize point graphs of Lie incidence geometries"};
  app.require_subcommand(1);
  app.fallthrough();  // --threads and --seed may follow the subcommand
  unsigned threads = 0;
  std::optional<unsigned long long> seed;
  app.add_option("--threads", threads, "worker threads (default: LIEPROBE_THREADS or all cores)");
  app.add_option("--seed", seed, "seed recorded in reports");

  std::string format = "graph6";
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "graph output format")->check(CLI::IsMember({"graph6", "sparse6"}));
  };

  auto* gen = app.add_subcommand("gen", "generate a geometry and its point graph");
  std::string family;
  int dim = 0, n = 0, q = 0;
  std::string graph_out, geometry_out;
  gen->add_option("--family", family, "w, q, qplus, qminus, grassmann or halfspin")
      ->required()
      ->check(CLI::IsMember({"w", "q", "qplus", "qminus", "grassmann", "halfspin"}));
  gen->add_option("--dim", dim, "projective dimension (polar families)");
  gen->add_option("--n", n, "rank parameter (grassmann, halfspin)");
  gen->add_option("--q", q, "field order")->required();
  gen->add_option("--graph", graph_out, "point graph output (default stdout)");
  gen->add_option("--geometry", geometry_out, "geometry JSON output");
  add_format(gen);

  std::string input, input2, output;
  int vertex = 0;
  auto* lg = app.add_subcommand("localgraph", "graph induced on the neighbours of a vertex");
  lg->add_option("input", input, "graph6/sparse6 file or -")->required();
  lg->add_option("--vertex", vertex, "vertex index")->required();
  lg->add_option("--out", output, "output path (default stdout)");
  add_format(lg);

  auto* ce = app.add_subcommand("cliqueext", "q-clique extension");
  int ext_q = 0;
  ce->add_option("input", input, "graph6/sparse6 file or -")->required();
  ce->add_option("--q", ext_q, "clique size")->required();
  ce->add_option("--out", output, "output path (default stdout)");
  add_format(ce);

  auto* qu = app.add_subcommand("quotient", "recover rays and print the ray quotient");
  qu->add_option("input", input, "graph6/sparse6 file or -")->required();
  qu->add_option("--out", output, "output path (default stdout)");
  add_format(qu);

  auto* rc = app.add_subcommand("reconstruct", "rebuild the point-line geometry from a graph");
  rc->add_option("input", input, "graph6/sparse6 file or -")->required();
  rc->add_option("--geometry", output, "geometry JSON output (default stdout)");

  auto* rg = app.add_subcommand("recognize", "classify a graph");
  std::string report_out;
  rg->add_option("input", input, "graph6/sparse6 file or -")->required();
  rg->add_option("--report", report_out, "report JSON output");

  auto* vf = app.add_subcommand("verify", "check axioms on a geometry JSON file");
  std::string axioms;
  vf->add_option("--axioms", axioms, "comma list: partial_linear, gamma, shult, degenerate, polar, parapolar:r, grid:q")->required();
  vf->add_option("input", input, "geometry JSON file or -")->required();

  auto* is = app.add_subcommand("iso", "isomorphism test");
  is->add_option("first", input, "graph6/sparse6 file")->required();
  is->add_option("second", input2, "graph6/sparse6 file")->required();

  auto* pa = app.add_subcommand("params", "strongly regular parameters");
  pa->add_option("input", input, "graph6/sparse6 file or -")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc_code = app.exit(e);
    return rc_code == 0 ? 0 : kUsage;
  }
  if (threads > 0) set_thread_count(threads);

  try {
    if (gen->parsed()) {
      Family f = family_from_name(family);
      Geometry d;
      if (is_polar(f)) {
        if (dim <= 0) throw Error(ErrorCode::InvalidParameters, "polar families need --dim");
        d = polar_space(f, dim, q);
      } else {
        if (n <= 0) throw Error(ErrorCode::InvalidParameters, family + " needs --n");
        d = f == Family::A_n2 ? grassmann_lines(n, q) : half_spin(n, q);
      }
      if (!geometry_out.empty()) write_output(geometry_out, geometry_to_json(d));
      if (!graph_out.empty() || geometry_out.empty()) write_output(graph_out, encode(point_graph(d), format));
      return 0;
    }
    if (lg->parsed()) {
      write_output(output, encode(local_graph(read_graph(input), vertex), format));
      return 0;
    }
    if (ce->parsed()) {
      write_output(output, encode(clique_extension(read_graph(input), ext_q), format));
      return 0;
    }
    if (qu->parsed()) {
      Graph g = read_graph(input);
      RayPartition p = recover_rays(g);
      std::cerr << p.rays.size() << " rays of size " << p.q << "\n";
      write_output(output, encode(ray_quotient(g, p), format));
      return 0;
    }
    if (rc->parsed()) {
      write_output(output, geometry_to_json(build_geometry(read_graph(input))));
      return 0;
    }
    if (rg->parsed()) {
      RecognitionReport r = recognize(read_graph(input));
      r.seed = seed;
      std::cout << r.outcome_string();
      if (r.recognized()) std::cout << " " << r.identification_level;
      std::cout << "\n";
      for (const auto& d : r.diagnostics) std::cout << "  " << d.code << " " << witness_string(d.witness) << ": " << d.message << "\n";
      if (!report_out.empty()) write_output(report_out, report_to_json(r));
      return r.recognized() ? 0 : kFailed;
    }
    if (vf->parsed()) {
      Geometry d = geometry_from_json(read_input(input));
      GeometryIndex idx(d);
      bool all = true;
      std::stringstream list(axioms);
      std::string item;
      while (std::getline(list, item, ',')) {
        std::string name = item, arg;
        if (auto colon = item.find(':'); colon != std::string::npos) {
          name = item.substr(0, colon);
          arg = item.substr(colon + 1);
        }
        bool holds = false;
        std::string detail;
        std::vector<int> witness;
        if (name == "partial_linear" || name == "gamma" || name == "shult") {
          AxiomReport a = name == "gamma" ? check_gamma(idx) : name == "shult" ? check_shult(idx) : check_partial_linear(d);
          holds = a.holds;
          detail = a.detail;
          witness = a.witness;
        } else if (name == "degenerate") {
          AxiomReport a = check_degenerate(idx);
          holds = !a.holds;
          detail = a.holds ? a.detail : "nondegenerate";
          witness = a.witness;
        } else if (name == "polar") {
          try {
            AxiomReport a = polar_rank(idx);
            holds = true;
            detail = a.detail;
          } catch (const Error& e) {
            detail = e.what();
            witness = e.witness();
          }
        } else if (name == "parapolar") {
          if (arg.empty()) throw Error(ErrorCode::InvalidParameters, "parapolar needs a rank, e.g. parapolar:3");
          ParapolarReport p = check_parapolar(idx, std::stoi(arg));
          holds = p.report.holds;
          detail = p.report.detail;
          witness = p.report.witness;
        } else if (name == "grid") {
          if (arg.empty()) throw Error(ErrorCode::InvalidParameters, "grid needs an order, e.g. grid:2");
          holds = check_grid(d, std::stoi(arg));
          detail = holds ? "grid" : "not a grid";
        } else {
          throw Error(ErrorCode::InvalidParameters, "unknown axiom " + name);
        }
        std::cout << item << ": " << (holds ? "holds" : "fails");
        if (!detail.empty()) std::cout << " (" << detail << ")";
        if (!holds && !witness.empty()) std::cout << " witness " << witness_string(witness);
        std::cout << "\n";
        all = all && holds;
      }
      return all ? 0 : kFailed;
    }
    if (is->parsed()) {
      Graph a = read_graph(input);
      Graph b = read_graph(input2);
      IsomorphismResult r = are_isomorphic(a, b);
      if (!r.isomorphic) {
        std::cout << "not isomorphic\n";
        return kFailed;
      }
      std::cout << "isomorphic\n";
      for (std::size_t v = 0; v < r.mapping.size(); ++v) std::cout << v << " " << r.mapping[v] << "\n";
      return 0;
    }
    if (pa->parsed()) {
      SrgParameters s = srg_parameters(read_graph(input));
      if (!s.strongly_regular) {
        std::cout << "NotStronglyRegular (" << s.detail << ")\n";
        return kFailed;
      }
      std::cout << "(" << s.v << "," << s.k << "," << s.lambda << "," << s.mu << ")\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (!e.witness().empty()) std::cerr << " witness " << witness_string(e.witness());
    std::cerr << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
