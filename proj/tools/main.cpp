#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmod04/census.hpp"
#include "pmod04/classify.hpp"
#include "pmod04/gamma.hpp"
#include "pmod04/series.hpp"
#include "pmod04/word.hpp"

namespace {

using namespace pmod04;

struct Config {
  std::string word_text;
  int max_radius = 0;
  std::string format = "csv";
  bool verify = false;
  unsigned threads = 1;
  std::optional<int> cap_override;
  std::string which = "h";
  int terms = 0;

  EnumerationOptions enum_options() const {
    return {threads, cap_override.value_or(kDefaultEnumerationCap)};
  }
};

int run_classify(const Config& cfg) {
  Word w;
  try {
    w = parse_word(cfg.word_text);
  } catch (const WordParseError& e) {
    std::cerr << "classify: " << e.what() << "\n";
    return 2;
  }
  std::cout << classification_json(classify(w)) << "\n";
  return 0;
}

int run_census(const Config& cfg) {
  std::vector<CensusRow> rows;
  if (cfg.verify) {
    try {
      rows = census_rows(cfg.max_radius, cfg.enum_options());
    } catch (const CapExceeded& e) {
      std::cerr << "census: " << e.what()
                << " (use --cap-override to raise it)\n";
      return 2;
    }
    std::vector<CensusRow> closed = ratio_table(cfg.max_radius);
    if (auto i = first_row_mismatch(rows, closed)) {
      std::cerr << "census: verification mismatch at radius " << rows[*i].n
                << ": enumerated ("
                << rows[*i].total << "," << rows[*i].reducible << ","
                << rows[*i].pseudo_anosov << ") vs closed form ("
                << closed[*i].total << "," << closed[*i].reducible << ","
                << closed[*i].pseudo_anosov << ")\n";
      return 3;
    }
  } else {
    rows = ratio_table(cfg.max_radius);
  }
  std::cout << (cfg.format == "json" ? census_json(rows) : census_csv(rows));
  return 0;
}

int run_series(const Config& cfg) {
  RationalGF gf = cfg.which == "h" ? gf_h() : cfg.which == "r" ? gf_r() : gf_p();
  std::vector<BigInt> coeffs = expand(gf, cfg.terms);
  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const BigInt& c : coeffs) arr.push_back(c.str());
    std::cout << arr.dump() << "\n";
  } else {
    std::cout << "n,c_n\n";
    for (size_t n = 0; n < coeffs.size(); ++n)
      std::cout << n << "," << coeffs[n].str() << "\n";
  }
  return 0;
}

int run_gamma(const Config& cfg) {
  std::vector<GammaRow> rows;
  if (cfg.verify) {
    try {
      rows = gamma_census(cfg.max_radius, cfg.enum_options());
    } catch (const CapExceeded& e) {
      std::cerr << "gamma: " << e.what()
                << " (use --cap-override to raise it)\n";
      return 2;
    }
    std::vector<GammaRow> closed = gamma_table(cfg.max_radius);
    if (auto i = first_row_mismatch(rows, closed)) {
      std::cerr << "gamma: verification mismatch at radius " << rows[*i].n
                << "\n";
      return 3;
    }
    const int bfs_max = std::min(cfg.max_radius, 8);
    std::vector<BigInt> bfs = gamma_bfs_sphere_counts(bfs_max);
    for (int n = 0; n <= bfs_max; ++n) {
      if (bfs[size_t(n)] != rows[size_t(n)].total) {
        std::cerr << "gamma: BFS mismatch at radius " << n << ": "
                  << bfs[size_t(n)] << " vs " << rows[size_t(n)].total << "\n";
        return 3;
      }
    }
  } else {
    rows = gamma_table(cfg.max_radius);
  }
  std::cout << (cfg.format == "json" ? gamma_json(rows) : gamma_csv(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Thurston-type census for the pure mapping class group of the "
      "four-holed sphere (a rank-2 free group on two Dehn twists)"};
  app.require_subcommand(1);
  Config cfg;

  auto add_table_flags = [&](CLI::App* cmd, bool with_verify) {
    cmd->add_option("--max-radius", cfg.max_radius, "largest radius to report")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    if (with_verify) {
      cmd->add_flag("--verify", cfg.verify,
                    "enumerate and cross-check against the closed forms");
      cmd->add_option("--threads", cfg.threads,
                      "worker threads for enumeration")
          ->check(CLI::PositiveNumber);
      cmd->add_option("--cap-override", cfg.cap_override,
                      "raise the enumeration radius cap")
          ->check(CLI::NonNegativeNumber);
    }
  };

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "classify one word (identity, reducible or pseudo-Anosov)");
  CLI::Option* word_pos =
      classify_cmd->add_option("WORD", cfg.word_text, "word over a,A,b,B");
  classify_cmd->add_option("--word", cfg.word_text, "word over a,A,b,B")
      ->excludes(word_pos);

  CLI::App* census_cmd = app.add_subcommand(
      "census", "per-radius counts, cumulative counts and the p_n/h_n ratio");
  add_table_flags(census_cmd, true);

  CLI::App* series_cmd = app.add_subcommand(
      "series", "coefficients of the growth functions h, r, p");
  series_cmd->add_option("--which", cfg.which, "which growth function")
      ->required()
      ->check(CLI::IsMember({"h", "r", "p"}));
  series_cmd->add_option("--terms", cfg.terms, "last coefficient index")
      ->required()
      ->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* gamma_cmd = app.add_subcommand(
      "gamma", "census of the twist-and-rotation extension group");
  add_table_flags(gamma_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << app.get_name() << ": " << e.what() << "\n";
    return 2;
  }

  try {
    if (*classify_cmd) return run_classify(cfg);
    if (*census_cmd) return run_census(cfg);
    if (*series_cmd) return run_series(cfg);
    if (*gamma_cmd) return run_gamma(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
