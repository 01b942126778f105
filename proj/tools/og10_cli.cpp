// og10: command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "og10/og10.h"

using Json = nlohmann::ordered_json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + what + ": " + e.what());
  }
}

// JSON array, "@file", or a comma separated list of integers.
Json vector_arg(const std::string& text, const std::string& what) {
  if (!text.empty() && text[0] == '@') return parse_json(read_file(text.substr(1)), what);
  if (!text.empty() && text[0] == '[') return parse_json(text, what);
  Json a = Json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty entry in " + what);
    const std::string tok = item.substr(b, e - b + 1);
    if (tok.find_first_not_of("-+0123456789") != std::string::npos) {
      throw InputError("not an integer in " + what + ": '" + tok + "'");
    }
    a.push_back(tok);
  }
  return a;
}

// JSON matrix or "@file".
Json matrix_arg(const std::string& text, const std::string& what) {
  if (!text.empty() && text[0] == '@') return parse_json(read_file(text.substr(1)), what);
  return parse_json(text, what);
}

// Lattice name, inline JSON object, or a path to a JSON file.
Json lattice_arg(const std::string& text) {
  if (!text.empty() && text[0] == '{') return parse_json(text, "--lattice");
  if (!text.empty() && text[0] == '@') return parse_json(read_file(text.substr(1)), "--lattice");
  if (text.size() > 5 && text.compare(text.size() - 5, 5, ".json") == 0) {
    return parse_json(read_file(text), "--lattice");
  }
  return text;
}

Json context_arg(const std::string& text) {
  if (!text.empty() && (text[0] == '{' || text[0] == '@')) return matrix_arg(text, "--context");
  if (text.size() > 5 && text.compare(text.size() - 5, 5, ".json") == 0) {
    return parse_json(read_file(text), "--context");
  }
  return text;
}

int report(const std::string& code, const std::string& detail, int exit_code) {
  Json e;
  e["error"] = code;
  e["detail"] = detail;
  std::cerr << e.dump() << "\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice computations for OG10-type hyperkähler manifolds"};
  app.require_subcommand(1, 1);

  std::string lattice = "og10", klass, other, format = "json", out, request_file;
  std::string v, vperp, pairings, h0, sublattice, other_sublattice, context = "ij", chamber = "kahler",
                                                                     ample, gram, preset;
  long bound = 10;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--format", format, "json, svg or csv")->check(CLI::IsMember({"json", "svg", "csv"}));
    c->add_option("--out", out, "write output to this file instead of standard output");
    c->add_option("--request", request_file, "read the full JSON request from a file");
  };
  auto add_lattice = [&](CLI::App* c) {
    c->add_option("--lattice", lattice, "named lattice (og10, U, A2, E8, P_V, P_V^t) or file.json");
  };

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"lattice-info", "rank, signature and discriminant group"},
      {"div", "square, divisibility and residue of a class"},
      {"orbit-equiv", "Eichler equivalence of two classes or two sublattices"},
      {"wall-check", "wall divisor classification"},
      {"pex-check", "stably prime exceptional classification"},
      {"reflection", "reflection matrix of a class"},
      {"moduli-picard", "Picard lattice of the resolved moduli space for v"},
      {"curve-class", "curve class from pairings and its dual wall"},
      {"mz-classify", "contraction type of the Gieseker wall"},
      {"cone", "chamber structure of a rank two cone"},
      {"unique-compactification", "compactification test for a cubic fourfold lattice"},
      {"preset", "run a named reproduction"},
  };
  std::map<std::string, CLI::App*> sub;
  for (const auto& c : commands) {
    CLI::App* s = app.add_subcommand(c.name, c.help);
    add_common(s);
    sub[c.name] = s;
  }
  for (const char* n : {"lattice-info", "div", "orbit-equiv", "wall-check", "pex-check", "reflection",
                        "moduli-picard", "curve-class", "mz-classify"}) {
    add_lattice(sub[n]);
  }
  for (const char* n : {"div", "orbit-equiv", "wall-check", "pex-check", "reflection"}) {
    sub[n]->add_option("--class", klass, "coordinates: JSON array, comma list or @file");
  }
  sub["orbit-equiv"]->add_option("--other", other, "second class");
  sub["orbit-equiv"]->add_option("--sublattice", sublattice, "basis rows (JSON) of the first sublattice");
  sub["orbit-equiv"]->add_option("--other-sublattice", other_sublattice, "basis rows of the second sublattice");
  for (const char* n : {"moduli-picard", "curve-class", "mz-classify"}) {
    sub[n]->add_option("--v", v, "Mukai vector (r, c..., s)");
  }
  for (const char* n : {"moduli-picard", "curve-class"}) {
    sub[n]->add_option("--vperp", vperp, "basis rows of v-perp in Mukai coordinates");
  }
  sub["curve-class"]->add_option("--pairings", pairings, "pairings with the frame basis");
  sub["mz-classify"]->add_option("--h0", h0, "polarization in Pic(S) coordinates");
  sub["mz-classify"]->add_option("--bound", bound, "coordinate search box");
  sub["cone"]->add_option("--context", context, "ij, ij-twisted, u or a JSON context");
  sub["cone"]->add_option("--chamber", chamber, "kahler or movable")->check(CLI::IsMember({"kahler", "movable"}));
  sub["cone"]->add_option("--ample", ample, "class on the ample side");
  sub["unique-compactification"]->add_option("--gram", gram, "Gram matrix of <h^2, K>");
  sub["preset"]->add_option("name", preset, "preset name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report("ParseError", e.what(), 2);
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  Json request = Json::object();
  try {
    if (!request_file.empty()) {
      request = parse_json(read_file(request_file), "--request");
    } else {
      auto given = [&](const char* opt) {
        const CLI::Option* o = chosen->get_option_no_throw(opt);
        return o && o->count() > 0;
      };
      if (given("--lattice") || chosen->get_option_no_throw("--lattice")) request["lattice"] = lattice_arg(lattice);
      if (given("--class")) request["class"] = vector_arg(klass, "--class");
      if (given("--other")) request["other"] = vector_arg(other, "--other");
      if (given("--sublattice")) request["sublattice"] = matrix_arg(sublattice, "--sublattice");
      if (given("--other-sublattice")) request["other_sublattice"] = matrix_arg(other_sublattice, "--other-sublattice");
      if (given("--v")) request["v"] = vector_arg(v, "--v");
      if (given("--vperp")) request["vperp"] = matrix_arg(vperp, "--vperp");
      if (given("--pairings")) request["pairings"] = vector_arg(pairings, "--pairings");
      if (given("--h0")) request["h0"] = vector_arg(h0, "--h0");
      if (name == "mz-classify") request["bound"] = bound;
      if (name == "cone") {
        request["context"] = context_arg(context);
        request["chamber"] = chamber;
        if (given("--ample")) request["ample"] = vector_arg(ample, "--ample");
      }
      if (given("--gram")) request["gram"] = matrix_arg(gram, "--gram");
      if (name == "preset") request["name"] = preset;
    }
  } catch (const InputError& e) {
    return report("ParseError", e.what(), 2);
  }

  char* output = nullptr;
  char* error = nullptr;
  const og10_status st = og10_run(name.c_str(), request.dump().c_str(), format.c_str(), &output, &error);
  if (st != OG10_OK) {
    std::cerr << (error ? error : og10_last_error()) << "\n";
    og10_string_free(error);
    return og10_status_exit_code(st);
  }
  int code = 0;
  if (out.empty()) {
    std::fwrite(output, 1, std::char_traits<char>::length(output), stdout);
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) code = report("InvalidArgument", "cannot write '" + out + "'", 2);
    else f << output;
  }
  og10_string_free(output);
  return code;
}
