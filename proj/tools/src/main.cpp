#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "catcheck/cli/cli.hpp"

namespace {

  std::map<std::string, std::string> const kHelp{
      {"check-monoidal", "category and symmetric monoidal laws on a named instance"},
      {"check-algebra", "monoid object laws"},
      {"check-bialgebra", "bialgebra laws"},
      {"check-hopf", "bialgebra laws, shear invertibility and the derived antipode"},
      {"derive-antipode", "antipode from the inverse of the right shear"},
      {"shear", "both shears, their identities and the antipode round trip"},
      {"operators-audit", "category of operators over F_p and finite sets"},
      {"segal", "Segal comparison on the fibers of the category of operators"},
      {"nerve", "nerve of a finite category"},
      {"hc-nerve", "homotopy coherent nerve of a discrete category or of a cube"},
      {"horn-audit", "horn fillers of a nerve or a simplicial set"},
      {"interchange-audit", "the algebra as a functor of operator categories"},
      {"coproduct-audit", "pairing of two commutative algebras and their coproduct"},
  };

}  // namespace

int main(int argc, char** argv) {
  using namespace catcheck::cli;
  CLI::App app{"catcheck: exact checks of categorical structure on finite instances"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Job                        job;
  std::string                format = "text";
  std::optional<std::uint64_t> prime;
  if (char const* env = std::getenv(std::string(kCorpusEnv).c_str())) {
    job.options.corpus = env;
  }
  app.add_option("--prime", prime, "prime for every F_p description");
  app.add_option("--arity-bound", job.options.arity_bound, "largest arity [n]_+ (1-4)")
      ->capture_default_str();
  app.add_option("--dim-bound", job.options.dim_bound, "largest simplex dimension (1-3)")
      ->capture_default_str();
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--corpus", job.options.corpus,
                 "directory searched for relative inputs (default $CATCHECK_CORPUS)");
  app.add_option("--horns", job.options.horns, "horn-audit: inner or all")
      ->check(CLI::IsMember({"inner", "all"}))
      ->capture_default_str();

  for (auto const& name : commands()) {
    auto* sub = app.add_subcommand(name, kHelp.at(name));
    sub->add_option("inputs", job.inputs, "description files");
    sub->callback([&job, name] { job.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kExitMalformed;
  }
  job.options.prime  = prime;
  job.options.format = format == "json" ? Format::json : Format::text;

  auto const outcome = run(job);
  std::cout << render(outcome.report, job.options.format);
  return outcome.exit_code;
}
