#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "blk/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Brieskorn lattice differential structure: Saito basis, spectrum, monodromy"};
  std::string command, poly, file, format = "text";
  int degree = 10;
  bool audit = false;
  app.add_option("command", command,
                 "milnor | tmatrix-jet | saturate | vfilt | tmatrix | spectrum | spectral-pairs | monodromy | all")
      ->required();
  auto* poly_opt = app.add_option("--poly", poly, "polynomial, e.g. x^2*y^2+x^5+y^5");
  auto* file_opt = app.add_option("--file", file, "file containing the polynomial");
  poly_opt->excludes(file_opt);
  app.add_option("--degree", degree, "jet degree for tmatrix-jet and saturate (default 10)");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--audit", audit, "include the basis change audit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto cmd = blk::parse_command(command);
  if (!cmd) {
    std::cerr << "error: SyntaxError: unknown command '" << command << "'\n";
    return 2;
  }
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "error: SyntaxError: cannot read " << file << "\n";
      return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    poly = ss.str();
    while (!poly.empty() && std::isspace(static_cast<unsigned char>(poly.back()))) poly.pop_back();
  } else if (poly_opt->count() == 0) {
    std::cerr << "error: SyntaxError: one of --poly or --file is required\n";
    return 2;
  }

  blk::JobConfig cfg;
  cfg.command = *cmd;
  cfg.poly = poly;
  cfg.jet_degree = degree;
  cfg.format = format == "json" ? blk::Format::Json : blk::Format::Text;
  cfg.audit = audit;
  blk::Report rep = blk::run(cfg);
  std::cout << rep.out;
  std::cerr << rep.err;
  return rep.exit_code;
}
