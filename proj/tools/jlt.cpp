#include <cstdlib>
#include <iostream>
#include <iterator>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "jlt/cli.hpp"

namespace {


bool env_ascii() {
  const char* v = std::getenv("JLT_ASCII");
  return v && *v && std::string(v) != "0";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Levi subgroups, inner forms and transfer bookkeeping for split reductive groups"};
  app.require_subcommand(1);
  bool as_json = false, ascii = false;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_flag("--ascii", ascii, "plain ASCII text (also JLT_ASCII=1)");

  const std::map<std::string, std::string> help = {
      {"levi", "structure of the Levi obtained by removing simple roots"},
      {"satake", "transfer a condition-(1) Levi to an inner form"},
      {"appendix-a", "recompute the stated Levi catalog"},
      {"weyl", "Weyl group order, longest elements and reduced roots"},
      {"kottwitz", "Kottwitz group A(G) and related finite groups"},
      {"inner-forms", "inner forms GL_m(D_d) of GL_n"},
      {"globalize", "place plan and cocycle over S"},
      {"division-algebra", "global division algebra from local invariants"},
      {"lj", "Jacquet-Langlands transfer on Grothendieck-group elements"},
  };
  std::map<std::string, std::map<std::string, std::string>> values;
  for (const auto& [cmd, opts] : jlt::command_options()) {
    CLI::App* sub = app.add_subcommand(cmd, help.at(cmd));
    sub->fallthrough();
    for (const auto& key : opts) sub->add_option("--" + key, values[cmd][key]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : jlt::exit_usage;
  }

  jlt::CommandRequest req;
  req.json = as_json;
  req.ascii = ascii || env_ascii();
  CLI::App* chosen = app.get_subcommands().front();
  req.subcommand = chosen->get_name();
  for (const auto& [key, value] : values[req.subcommand])
    if (chosen->count("--" + key) > 0) req.options[key] = value;
  if (req.subcommand == "lj" && !req.options.count("element")) {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    req.options["element"] = text;
  }

  jlt::CommandResult res = jlt::run(req);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
