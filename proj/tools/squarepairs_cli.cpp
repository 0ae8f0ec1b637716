#include "squarepairs/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace sp = squarepairs;

namespace {

// Constants block for this invocation. SQUAREPAIRS_TEST_CORRUPT lets the
// test harness damage one constant to prove the self-checks catch it.
sp::CurveConstants load_constants() {
  sp::CurveConstants consts = sp::curve_constants();
  if (const char* mode = std::getenv("SQUAREPAIRS_TEST_CORRUPT")) {
    const std::string m(mode);
    if (m == "a6") {
      consts.curve.a6 += 1;
    } else if (m == "point_p") {
      consts.p.X += 1;
    }
  }
  return consts;
}

// Writes the structured or text payload to the file or stdout. Returns a
// process exit code (0 ok, 1 on I/O failure).
int emit(const sp::Json& doc, const std::string& text, const std::string& format,
         const std::string& out_path) {
  const std::string payload = format == "text" ? text : sp::dump(doc);
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  f << payload;
  f.close();
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for pairs of triangles with perfect-square sides "
               "sharing perimeter and area"};
  app.require_subcommand(1);
  app.fallthrough(true);

  std::string format = "structured";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"structured", "text"}))
      ->capture_default_str();

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "recompute the published data against frozen expected values");

  CLI::App* cmd_pair =
      app.add_subcommand("pair", "run the parameter pipeline on one (p, q, r) triple");
  std::string p_str, q_str, r_str;
  cmd_pair->add_option("--p", p_str, "p, as an integer or num/den")->required();
  cmd_pair->add_option("--q", q_str, "q, as an integer or num/den")->required();
  cmd_pair->add_option("--r", r_str, "r, as an integer or num/den")->required();

  CLI::App* cmd_search = app.add_subcommand(
      "search", "scan canonical integer triples with |p|+|q|+|r| up to a bound");
  std::int64_t bound = 0;
  int workers = 0;
  std::string search_out;
  cmd_search->add_option("--bound", bound, "enumeration bound on |p|+|q|+|r|")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1000000}));
  cmd_search->add_option("--workers", workers,
                         "worker threads (default: SQUAREPAIRS_WORKERS or all cores)")
      ->check(CLI::Range(1, 1024));
  cmd_search->add_option("--out", search_out, "write the report to this file");

  CLI::App* cmd_generate = app.add_subcommand(
      "generate", "walk the curve lattice P + k*G1 + j*G2 and collect pairs");
  long k_bound = 0, j_bound = 0;
  std::string generate_out;
  cmd_generate->add_option("--k", k_bound, "bound on |k|")
      ->required()
      ->check(CLI::Range(0L, 64L));
  cmd_generate->add_option("--j", j_bound, "bound on |j|")
      ->required()
      ->check(CLI::Range(0L, 64L));
  cmd_generate->add_option("--out", generate_out, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_verify->parsed()) {
      const sp::VerifyReport rep = sp::run_verification(load_constants());
      const int rc = emit(sp::wrap("verification_report", sp::to_json(rep)),
                          sp::to_text(rep), format, "");
      if (rc != 0) return rc;
      return rep.all_pass() ? 0 : 1;
    }

    if (cmd_pair->parsed()) {
      sp::Rational p, q, r;
      try {
        p = sp::Rational::parse(p_str);
        q = sp::Rational::parse(q_str);
        r = sp::Rational::parse(r_str);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      sp::PipelineResult res = sp::pair_from_pqr(p, q, r);
      if (const sp::ParamSolution* sol = std::get_if<sp::ParamSolution>(&res)) {
        return emit(sp::wrap("param_solution", sp::to_json(*sol)), sp::to_text(*sol),
                    format, "");
      }
      const sp::Rejection& rej = std::get<sp::Rejection>(res);
      const int rc = emit(sp::wrap("rejection", sp::to_json(rej)), sp::to_text(rej),
                          format, "");
      return rc != 0 ? rc : 1;
    }

    if (cmd_search->parsed()) {
      const sp::SearchReport rep = sp::search(bound, workers);
      std::cerr << "scanned " << rep.triples_scanned << " canonical triples in "
                << rep.elapsed.count() << " ms with " << rep.workers
                << " worker(s); " << rep.solutions.size() << " pair(s)\n";
      return emit(sp::wrap("search_report", sp::to_json(rep)), sp::to_text(rep),
                  format, search_out);
    }

    if (cmd_generate->parsed()) {
      const sp::CurveConstants consts = load_constants();
      try {
        sp::self_check(consts);
      } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
      }
      const sp::GenerationReport rep = sp::generate_pairs(k_bound, j_bound, consts);
      std::cerr << "walked " << rep.outcomes.size() << " lattice points; "
                << rep.pairs.size() << " distinct pair(s)\n";
      return emit(sp::wrap("generation_report", sp::to_json(rep)), sp::to_text(rep),
                  format, generate_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
