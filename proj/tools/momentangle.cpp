#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "momentangle/hochster.hpp"
#include "momentangle/json_io.hpp"
#include "momentangle/parallel.hpp"
#include "momentangle/polytope.hpp"
#include "momentangle/random_complex.hpp"
#include "momentangle/ring.hpp"
#include "momentangle/verify.hpp"

using namespace momentangle;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kOther = 1, kParse = 2, kFlags = 3, kTruncation = 4, kVerification = 5 };

struct FlagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Job {
  std::string command;
  std::string input;
  std::string arena = "complex";
  std::string model = "b";
  std::string coeff = "z";
  std::optional<int> maxdeg;
  std::optional<int> truncate;
  std::vector<std::string> alphas;
  std::string output;
  std::string format = "json";
  bool random = false;
  std::uint64_t seed = 0;
  int m = 4;
};

Arena parse_arena(const std::string& text) {
  try {
    return arena_from_string(text);
  } catch (const std::invalid_argument& e) {
    throw FlagError("--arena " + text + ": " + e.what());
  }
}

CoefficientRing parse_coefficients(const std::string& text) {
  try {
    return coefficients_from_string(text);
  } catch (const std::invalid_argument& e) {
    throw FlagError("--coeff " + text + ": " + e.what());
  }
}

IndexSet parse_alpha(const std::string& text, int m) {
  std::vector<int> elements;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    int i = 0;
    try {
      i = std::stoi(item);
    } catch (const std::exception&) {
      throw FlagError("--alpha expects comma-separated vertices, got " + text);
    }
    if (i < 1 || i > m) throw FlagError("--alpha vertex " + item + " outside 1.." + std::to_string(m));
    elements.push_back(i);
  }
  return IndexSet(elements);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ModelVariant variant_for(const Job& job, const SimplicialComplex& sigma,
                         const CoefficientRing& coefficients) {
  try {
    return resolve_variant(job.model, job.arena, coefficients, job.maxdeg, job.truncate, sigma);
  } catch (const std::invalid_argument& e) {
    throw FlagError(e.what());
  }
}

ordered_json header(const Job& job, const SimplicialComplex& sigma) {
  ordered_json h;
  h["command"] = job.command;
  h["complex"] = complex_to_json(sigma);
  return h;
}

void write_output(const Job& job, const std::string& text) {
  if (job.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(job.output);
  if (!out) throw std::runtime_error("cannot write " + job.output);
  out << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

int run_betti(const Job& job, const SimplicialComplex& sigma) {
  const auto coefficients = parse_coefficients(job.coeff);
  const auto variant = variant_for(job, sigma, coefficients);
  const auto model = build_model(sigma, variant);
  const int top = job.maxdeg.value_or(model.complex().max_degree());
  HomologyEngine engine(model.complex(), coefficients);
  std::map<int, CohomologyGroup> groups;
  for (int k = 0; k <= top; ++k) groups[k] = engine.group(k);
  if (job.format == "csv") {
    write_output(job, groups_to_csv(groups));
  } else {
    auto out = header(job, sigma);
    out["arena"] = variant.arena.name();
    out["model"] = family_name(variant.family);
    out["coefficients"] = coefficients.name();
    out["degrees"] = groups_to_json(groups);
    write_output(job, dump(out));
  }
  return kOk;
}

int run_ring(const Job& job, const SimplicialComplex& sigma) {
  if (job.format != "json") throw FlagError("ring output is JSON only");
  const auto coefficients = parse_coefficients(job.coeff);
  const auto variant = variant_for(job, sigma, coefficients);
  if (variant.family != Family::A && variant.family != Family::B) {
    throw FlagError("ring needs a model with a product (a or b)");
  }
  const auto model = build_model(sigma, variant);
  const int top = job.maxdeg.value_or(model.complex().max_degree());
  auto out = header(job, sigma);
  out["arena"] = variant.arena.name();
  out["model"] = family_name(variant.family);
  out["ring"] = ring_to_json(cohomology_ring(model, top, coefficients));
  write_output(job, dump(out));
  return kOk;
}

int run_hochster(const Job& job, const SimplicialComplex& sigma) {
  if (job.model != "b") throw FlagError("hochster uses the B-model; --model does not apply");
  if (job.maxdeg || job.truncate) throw FlagError("hochster tables are finite; drop --maxdeg/--truncate");
  const auto coefficients = parse_coefficients(job.coeff);
  const Arena arena = parse_arena(job.arena);
  std::optional<std::vector<IndexSet>> alphas;
  if (!job.alphas.empty()) {
    alphas.emplace();
    for (const auto& a : job.alphas) alphas->push_back(parse_alpha(a, sigma.ground_size()));
  }
  const auto table = hochster_table_model(sigma, arena, coefficients, alphas);
  if (job.format == "csv") {
    write_output(job, betti_to_csv(table));
  } else {
    auto out = header(job, sigma);
    out["arena"] = arena.name();
    out["coefficients"] = coefficients.name();
    out["shift"] = "degree + (n-1)|alpha| in H^*";
    out["table"] = betti_to_json(table);
    write_output(job, dump(out));
  }
  return kOk;
}

int run_glm(const Job& job, const SimplicialComplex& sigma) {
  if (job.format != "json") throw FlagError("glm output is JSON only");
  if (job.model != "b" || job.arena != "complex") throw FlagError("glm takes no --model or --arena");
  if (job.truncate) throw FlagError("--truncate does not apply to glm");
  const auto coefficients = parse_coefficients(job.coeff);
  auto out = header(job, sigma);
  out["hypothesis"] = "polytopal hypothesis: caller-asserted";
  out["ring"] = ring_to_json(glm_ring(sigma, job.maxdeg, coefficients));
  write_output(job, dump(out));
  return kOk;
}

int run_verify(const Job& job, const SimplicialComplex& sigma) {
  const auto results = verify_complex(sigma);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (job.format == "csv") {
    std::string text = "check,passed,detail\n";
    for (const auto& r : results) text += r.name + "," + (r.passed ? "true" : "false") + "," + r.detail + "\n";
    write_output(job, text);
  } else {
    auto out = header(job, sigma);
    if (job.random) {
      out["seed"] = job.seed;
      out["m"] = job.m;
    }
    ordered_json checks = ordered_json::array();
    for (const auto& r : results) checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    out["checks"] = checks;
    out["passed"] = all;
    write_output(job, dump(out));
  }
  return all ? kOk : kVerification;
}

int run(const Job& job) {
  if (job.format != "json" && job.format != "csv") throw FlagError("--format must be json or csv");
  if (!job.alphas.empty() && job.command != "hochster") throw FlagError("--alpha applies to hochster only");
  if (job.maxdeg && *job.maxdeg < 0) throw FlagError("--maxdeg must be non-negative");
  if (job.truncate && job.maxdeg && *job.truncate <= *job.maxdeg) {
    throw TruncationError("--truncate " + std::to_string(*job.truncate) + " leaves degree " +
                          std::to_string(*job.maxdeg) + " untrusted");
  }
  std::optional<SimplicialComplex> sigma;
  if (job.command == "verify" && job.random) {
    if (!job.input.empty()) throw FlagError("--random and an input file are exclusive");
    if (job.m < 1 || job.m > 6) throw FlagError("--m must lie in 1..6");
    sigma = random_complex(job.m, job.seed);
  } else {
    if (job.input.empty()) throw FlagError("an input file is required");
    sigma = parse_complex(read_file(job.input));
  }
  if (job.command == "betti") return run_betti(job, *sigma);
  if (job.command == "ring") return run_ring(job, *sigma);
  if (job.command == "hochster") return run_hochster(job, *sigma);
  if (job.command == "glm") return run_glm(job, *sigma);
  return run_verify(job, *sigma);
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("MOMENTANGLE_THREADS")) {
    const int count = std::atoi(threads);
    if (count > 0) set_thread_count(static_cast<std::size_t>(count));
  }

  CLI::App app{"Cohomology of moment-angle complexes from finite models"};
  app.require_subcommand(1);
  Job job;

  auto add_common = [&job](CLI::App* sub) {
    sub->add_option("input", job.input, "Simplicial complex JSON {\"m\": .., \"facets\": [[..]]}");
    sub->add_option("--arena", job.arena, "complex | real | disk:n");
    sub->add_option("--model", job.model, "a | b | k | l");
    sub->add_option("--coeff", job.coeff, "z | q | zp:p");
    sub->add_option("--maxdeg", job.maxdeg, "Top degree (required for a and k)");
    sub->add_option("--truncate", job.truncate, "Truncation degree of a and k (default maxdeg + 1)");
    sub->add_option("--alpha", job.alphas, "Restrict to components, e.g. --alpha 1,3");
    sub->add_option("-o,--output", job.output, "Output file (default stdout)");
    sub->add_option("--format", job.format, "json | csv");
  };
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"betti", "Cohomology groups of a model"},
           {"ring", "Cohomology ring presentation"},
           {"hochster", "Bigraded table of the alpha-components"},
           {"glm", "Ring of the pairs (P, P_alpha) of the dual polytope"},
           {"verify", "Run all invariant suites"}}) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->callback([&job, name = name] { job.command = name; });
    if (name == "verify") {
      sub->add_flag("--random", job.random, "Use a seeded random complex instead of an input file");
      sub->add_option("--seed", job.seed, "Seed for --random");
      sub->add_option("--m", job.m, "Ground set size for --random");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kFlags;
  }

  try {
    return run(job);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kParse;
  } catch (const FlagError& e) {
    std::cerr << "illegal flags: " << e.what() << "\n";
    return kFlags;
  } catch (const TruncationError& e) {
    std::cerr << "truncation: " << e.what() << "\n";
    return kTruncation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
}
