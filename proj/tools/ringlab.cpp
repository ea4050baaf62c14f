#include "ringlab/config.hpp"
#include "ringlab/error.hpp"
#include "ringlab/script.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

namespace rs = ringlab::script;

int main(int argc, char** argv) {
  CLI::App app{"Finite commutative algebra decision engine"};

  std::string script_path;
  std::string out_path;
  rs::Format format = rs::Format::Text;
  bool recheck = false;
  bool battery = false;
  std::size_t cap = 0;
  unsigned threads = 1;

  const std::map<std::string, rs::Format> formats{{"text", rs::Format::Text}, {"structured", rs::Format::Structured}};
  app.add_option("script", script_path, "Script file ('-' reads standard input)");
  app.add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_flag("--recheck", recheck, "Re-validate every decision certificate");
  app.add_option("--cap", cap, "Carrier size cap")->check(CLI::PositiveNumber);
  app.add_flag("--battery", battery, "Run the built-in universe battery instead of a script");
  app.add_option("--out", out_path, "Write the report to FILE instead of standard output");
  app.add_option("--threads", threads, "Worker threads for law batteries")->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (!battery && script_path.empty()) {
    std::cerr << "error: a script file or --battery is required\n";
    return 2;
  }
  if (cap > 0) ringlab::set_carrier_cap(cap);

  const rs::Options options{format, recheck, threads};
  rs::RunResult result;
  if (battery) {
    result = rs::run_battery_report(options);
  } else {
    std::string text;
    if (script_path == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(script_path, std::ios::binary);
      if (!in) {
        std::cerr << "error: cannot read " << script_path << "\n";
        return 2;
      }
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    result = rs::run_script(text, options);
  }

  if (out_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    out << result.output;
  }
  std::cerr << result.diagnostics;
  return result.exit_status;
}
