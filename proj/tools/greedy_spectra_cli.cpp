// greedy-spectra: build greedy trees, compute exact spectral moments and
// spectral functionals, enumerate trees by degree sequence, and run the
// extremality checks.
//
// Exit codes: 0 success, 1 a verification reported a counterexample,
// 2 invalid input, 3 an internal limit (enumeration cap, convergence) was hit.

#include "greedy_spectra/canonical.hpp"
#include "greedy_spectra/construction.hpp"
#include "greedy_spectra/enumeration.hpp"
#include "greedy_spectra/error.hpp"
#include "greedy_spectra/io.hpp"
#include "greedy_spectra/spectral.hpp"
#include "greedy_spectra/transformations.hpp"
#include "greedy_spectra/verification.hpp"
#include "greedy_spectra/walks.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace gs = greedy_spectra;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInternal = 3;

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gs::Error(gs::ErrorCode::ParseError, "cannot read " + path);
  return read_all(in);
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

// Degree sequences come inline or from a file; trees come from a JSON file or stdin.
gs::DegreeSequence load_degree_sequence(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return gs::parse_degree_sequence(read_file(arg));
  return gs::parse_degree_sequence(arg);
}

gs::Tree load_tree(const std::string& source, const std::string& degseq) {
  if (!degseq.empty()) return gs::build_greedy_tree(load_degree_sequence(degseq));
  if (source.empty() || source == "-") return gs::parse_tree_json(read_all(std::cin));
  if (std::filesystem::is_regular_file(source)) {
    const std::string text = read_file(source);
    if (looks_like_json(text)) return gs::parse_tree_json(text);
    return gs::build_greedy_tree(gs::parse_degree_sequence(text));
  }
  return gs::build_greedy_tree(gs::parse_degree_sequence(source));
}

int enumeration_cap(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("GREEDY_SPECTRA_CAP")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
    throw gs::Error(gs::ErrorCode::ParseError, "GREEDY_SPECTRA_CAP must be a positive integer");
  }
  return gs::kDefaultEnumerationCap;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy trees, exact spectral moments and extremality checks"};
  app.require_subcommand(1);

  std::string tree_source;
  std::string degseq;
  int k = 0;
  double tol = 1e-10;
  int cap_flag = 0;
  bool json = false;

  auto add_tree_input = [&](CLI::App* cmd) {
    cmd->add_option("tree", tree_source, "Tree JSON file, degree sequence, or '-' for stdin (default)");
    cmd->add_option("--degseq", degseq, "Use the greedy tree of this degree sequence");
  };

  auto* greedy = app.add_subcommand("greedy", "Print the greedy tree of a degree sequence as JSON");
  std::string greedy_seq;
  greedy->add_option("degseq", greedy_seq, "Degree sequence, e.g. 3^6,2,1^8, or a file containing one")->required();

  auto* volkmann = app.add_subcommand("volkmann", "Print the Volkmann tree on n vertices with maximum degree D");
  int vol_n = 0;
  int vol_delta = 0;
  volkmann->add_option("n", vol_n)->required();
  volkmann->add_option("max_degree", vol_delta)->required();

  auto* moments = app.add_subcommand("moments", "Exact spectral moments M_0..M_k as decimal strings");
  add_tree_input(moments);
  moments->add_option("--k", k, "Largest walk length")->required()->check(CLI::NonNegativeNumber);

  auto* estrada = app.add_subcommand("estrada", "Estrada index (eigenvalues, cross-checked by the moment series)");
  add_tree_input(estrada);
  estrada->add_option("--tol", tol, "Absolute tolerance")->check(CLI::PositiveNumber);
  estrada->add_flag("--json", json);

  auto* spectrum = app.add_subcommand("spectrum", "Adjacency eigenvalues, descending");
  add_tree_input(spectrum);
  spectrum->add_option("--tol", tol, "Absolute tolerance per eigenvalue")->check(CLI::PositiveNumber);
  spectrum->add_flag("--json", json);

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial, constant term first");
  add_tree_input(charpoly);

  auto* radius = app.add_subcommand("radius", "Spectral radius by power iteration");
  add_tree_input(radius);
  radius->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);
  radius->add_flag("--json", json);

  auto* enumerate = app.add_subcommand("enumerate", "All non-isomorphic trees with a degree sequence");
  std::string enum_seq;
  bool count_only = false;
  enumerate->add_option("degseq", enum_seq)->required();
  enumerate->add_flag("--count-only", count_only);
  enumerate->add_option("--cap", cap_flag, "Largest n to enumerate (env GREEDY_SPECTRA_CAP)");
  enumerate->add_flag("--json", json);

  auto* chain = app.add_subcommand("chain", "Majorization chain from b up to d");
  std::string chain_lower;
  std::string chain_upper;
  chain->add_option("lower", chain_lower)->required();
  chain->add_option("upper", chain_upper)->required();

  auto* verify = app.add_subcommand("verify", "Run an extremality check and print its report");
  verify->require_subcommand(1);
  bool timing = false;
  double x_margin = 1.0;
  verify->add_option("--cap", cap_flag, "Largest n to enumerate (env GREEDY_SPECTRA_CAP)");
  verify->add_flag("--timing", timing, "Include elapsed time in the report");
  int verify_k = 12;

  auto* v_max = verify->add_subcommand("maximality", "M_k(T) <= M_k(G(D)) over all trees with degree sequence D");
  std::string v_max_seq;
  v_max->add_option("degseq", v_max_seq)->required();
  v_max->add_option("--k", verify_k)->check(CLI::NonNegativeNumber);

  auto* v_maj = verify->add_subcommand("majorization", "M_k(G(B)) <= M_k(G(D)) for B majorized by D");
  std::string v_maj_lower;
  std::string v_maj_upper;
  v_maj->add_option("lower", v_maj_lower)->required();
  v_maj->add_option("upper", v_maj_upper)->required();
  v_maj->add_option("--k", verify_k)->check(CLI::NonNegativeNumber);

  auto* v_vol = verify->add_subcommand("volkmann", "Volkmann tree maximises M_2k for maximum degree D");
  int v_vol_n = 0;
  int v_vol_delta = 0;
  v_vol->add_option("n", v_vol_n)->required();
  v_vol->add_option("max_degree", v_vol_delta)->required();
  v_vol->add_option("--k", verify_k)->check(CLI::NonNegativeNumber);

  auto* v_cor = verify->add_subcommand("corollaries", "Spectral radius, characteristic polynomial, Estrada index");
  std::string v_cor_seq;
  v_cor->add_option("degseq", v_cor_seq)->required();
  v_cor->add_option("--margin", x_margin, "Evaluate P at rho(G) + margin")->check(CLI::PositiveNumber);

  auto* exporter = app.add_subcommand("export", "Re-emit a tree as JSON or Graphviz DOT");
  std::string format = "json";
  add_tree_input(exporter);
  exporter->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*greedy) {
      std::cout << gs::tree_to_json(gs::build_greedy_tree(load_degree_sequence(greedy_seq))).dump() << '\n';
    } else if (*volkmann) {
      std::cout << gs::tree_to_json(gs::build_volkmann_tree(vol_n, vol_delta)).dump() << '\n';
    } else if (*moments) {
      const gs::Tree t = load_tree(tree_source, degseq);
      std::cout << gs::moments_to_json(gs::spectral_moments_up_to(t, k)).dump() << '\n';
    } else if (*estrada) {
      const double value = gs::estrada_index(load_tree(tree_source, degseq), tol);
      if (json) {
        gs::Json j;
        j["estrada_index"] = value;
        j["tol"] = tol;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << format_double(value) << '\n';
      }
    } else if (*spectrum) {
      const gs::Spectrum s = gs::eigenvalues(load_tree(tree_source, degseq), tol);
      if (json) {
        gs::Json j;
        j["values"] = s.values;
        j["tol"] = s.tol;
        std::cout << j.dump() << '\n';
      } else {
        for (double x : s.values) std::cout << format_double(x) << '\n';
      }
    } else if (*charpoly) {
      std::cout << gs::polynomial_to_json(gs::characteristic_polynomial(load_tree(tree_source, degseq))).dump()
                << '\n';
    } else if (*radius) {
      const double rho = gs::spectral_radius(load_tree(tree_source, degseq), tol);
      if (json) {
        gs::Json j;
        j["spectral_radius"] = rho;
        j["tol"] = tol;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << format_double(rho) << '\n';
      }
    } else if (*enumerate) {
      const auto trees = gs::enumerate_trees(load_degree_sequence(enum_seq), enumeration_cap(cap_flag));
      if (count_only) {
        if (json) {
          gs::Json j;
          j["count"] = trees.size();
          std::cout << j.dump() << '\n';
        } else {
          std::cout << trees.size() << '\n';
        }
      } else {
        gs::Json j = gs::Json::array();
        for (const auto& t : trees) j.push_back(gs::tree_to_json(t));
        std::cout << j.dump() << '\n';
      }
    } else if (*chain) {
      const auto steps = gs::majorization_chain(load_degree_sequence(chain_lower), load_degree_sequence(chain_upper));
      std::cout << gs::chain_to_json(steps).dump() << '\n';
    } else if (*verify) {
      gs::VerifyConfig cfg;
      cfg.enumeration_cap = enumeration_cap(cap_flag);
      gs::VerificationReport report;
      if (*v_max) {
        report = gs::verify_greedy_maximality(load_degree_sequence(v_max_seq), verify_k, cfg);
      } else if (*v_maj) {
        report = gs::verify_majorization_monotonicity(load_degree_sequence(v_maj_lower),
                                                      load_degree_sequence(v_maj_upper), verify_k, cfg);
      } else if (*v_vol) {
        report = gs::verify_volkmann_conjecture(v_vol_n, v_vol_delta, verify_k, cfg);
      } else {
        report = gs::verify_spectral_corollaries(load_degree_sequence(v_cor_seq), x_margin, cfg);
      }
      std::cout << report.to_json(timing).dump() << '\n';
      return report.status == gs::Status::Fail ? kExitVerificationFailed : kExitOk;
    } else if (*exporter) {
      const gs::Tree t = load_tree(tree_source, degseq);
      if (format == "dot") {
        std::cout << gs::tree_to_dot(t);
      } else {
        std::cout << gs::tree_to_json(t).dump() << '\n';
      }
    }
  } catch (const gs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return gs::is_input_error(e.code()) ? kExitInvalidInput : kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
