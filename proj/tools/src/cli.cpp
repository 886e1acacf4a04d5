#include "catcheck/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <variant>

#include "catcheck/algebra/hopf.hpp"
#include "catcheck/algebra/linearize.hpp"
#include "catcheck/category_laws.hpp"
#include "catcheck/error.hpp"
#include "catcheck/interchange/algebra_functor.hpp"
#include "catcheck/interchange/nerve_algebra.hpp"
#include "catcheck/interchange/pairing.hpp"
#include "catcheck/io/description.hpp"
#include "catcheck/operators/audit.hpp"
#include "catcheck/operators/operator_category.hpp"
#include "catcheck/simplicial/hc_nerve.hpp"
#include "catcheck/simplicial/horn.hpp"
#include "catcheck/simplicial/nerve.hpp"
#include "catcheck/simplicial/simplicial_category.hpp"

#ifndef CATCHECK_VERSION
#define CATCHECK_VERSION "0.0.0"
#endif

namespace catcheck::cli {

  namespace {

    using nlohmann::json;
    namespace fs = std::filesystem;

    // Bad invocation rather than bad description: exit 2 without a line.
    class UsageError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    constexpr std::size_t kPopulationCap = 128;
    constexpr std::size_t kMaxArity      = 4;
    constexpr std::size_t kMaxDim        = 3;

    struct Input {
      std::string given;
      fs::path    path;
      Document    doc;
    };

    struct Context {
      Job const&         job;
      LoadOptions        load;
      std::vector<Input> inputs;
      CheckReport        report;
      json               results = json::object();

      [[nodiscard]] Document const& doc(std::size_t i) const {
        return inputs.at(i).doc;
      }
    };

    void require_inputs(Context const& ctx, std::size_t least, std::size_t most) {
      auto const n = ctx.inputs.size();
      if (n < least || n > most) {
        std::string want = least == most ? std::to_string(least)
                                         : std::to_string(least) + " to " + std::to_string(most);
        throw UsageError(ctx.job.command + " takes " + want + " input file(s), got "
                         + std::to_string(n));
      }
    }

    void require_kind(Document const& doc, std::initializer_list<std::string_view> kinds) {
      for (auto k : kinds) {
        if (doc.kind() == k) {
          return;
        }
      }
      std::string want;
      for (auto k : kinds) {
        want += (want.empty() ? "" : " or ") + std::string(k);
      }
      doc.fail("/kind", "kind must be " + want);
    }

    template <SymmetricMonoidalCategory C>
    Bialgebra<C> const& require_bialgebra(Document const& doc, AlgebraInstance<C> const& inst) {
      if (!inst.bialgebra) {
        doc.fail("/kind", "a bialgebra description is required");
      }
      return *inst.bialgebra;
    }

    template <SymmetricMonoidalCategory C>
    json invertibility_json(C const& c, Invertibility<typename C::Morphism> const& inv) {
      json out{{"invertible", inv.invertible}};
      if (inv.inverse) {
        out["inverse"] = c.to_json(*inv.inverse);
      }
      if (inv.witness) {
        out["witness"] = to_json(*inv.witness);
      }
      return out;
    }

    template <SymmetricMonoidalCategory C>
    std::string category_name(C const& c) {
      if constexpr (std::is_same_v<C, MatrixCategory>) {
        return "Mat(" + c.ring().name() + ")";
      } else {
        return "FinSet";
      }
    }

    // check-monoidal

    template <SymmetricMonoidalCategory C>
    std::vector<typename C::Morphism> monoidal_population(MonoidalInstance<C> const& inst) {
      using Morphism = typename C::Morphism;
      auto const&           c = inst.category;
      std::vector<Morphism> out;
      std::set<std::string> seen;
      auto add = [&](Morphism const& f) {
        if (out.size() >= kPopulationCap) {
          return;
        }
        auto key = json{c.object_json(c.domain(f)), c.object_json(c.codomain(f)), c.to_json(f)}
                       .dump();
        if (seen.insert(std::move(key)).second) {
          out.push_back(f);
        }
      };
      for (auto const& f : inst.morphisms) {
        add(f);
      }
      for (auto const& x : inst.objects) {
        add(c.identity(x));
      }
      for (auto const& x : inst.objects) {
        for (auto const& y : inst.objects) {
          add(c.braiding(x, y));
        }
      }
      for (auto const& f : inst.morphisms) {
        for (auto const& g : inst.morphisms) {
          if (c.domain(g) == c.codomain(f)) {
            add(c.compose(g, f));
          }
        }
      }
      for (auto const& f : inst.morphisms) {
        for (auto const& g : inst.morphisms) {
          add(c.tensor(f, g));
        }
      }
      return out;
    }

    void check_monoidal(Context& ctx) {
      require_inputs(ctx, 1, 1);
      require_kind(ctx.doc(0), {"category"});
      std::visit(
          [&](auto const& inst) {
            ctx.results["category"] = category_name(inst.category);
            auto const& c   = inst.category;
            auto const  pop = monoidal_population(inst);
            ctx.report.merge(check_category_laws(c, std::span(pop)), "category");
            ctx.report.merge(check_monoidal_laws(c, std::span(inst.objects), std::span(pop)),
                             "monoidal");
            json inv = json::array();
            for (std::size_t i = 0; i < inst.morphisms.size(); ++i) {
              auto entry    = invertibility_json(c, c.is_invertible(inst.morphisms[i]));
              entry["name"] = inst.morphism_names.at(i);
              inv.push_back(std::move(entry));
            }
            ctx.results["population"]    = pop.size();
            ctx.results["invertibility"] = std::move(inv);
          },
          read_monoidal(ctx.doc(0), ctx.load));
    }

    // algebra module

    void check_algebra_command(Context& ctx) {
      require_inputs(ctx, 1, 1);
      require_kind(ctx.doc(0), {"algebra", "bialgebra"});
      std::visit(
          [&](auto const& inst) {
            ctx.results["category"] = category_name(inst.category);
            auto const& c = inst.category;
            ctx.report.merge(check_algebra(c, inst.algebra), "algebra");
            ctx.results["commutative"]
                = c.equal(c.compose(inst.algebra.mu,
                                    c.braiding(inst.algebra.carrier, inst.algebra.carrier)),
                          inst.algebra.mu);
          },
          read_algebra(ctx.doc(0), ctx.load));
    }

    void check_bialgebra_command(Context& ctx) {
      require_inputs(ctx, 1, 1);
      require_kind(ctx.doc(0), {"bialgebra"});
      std::visit(
          [&](auto const& inst) {
            ctx.results["category"] = category_name(inst.category);
            auto const& b = require_bialgebra(ctx.doc(0), inst);
            ctx.report.merge(check_bialgebra(inst.category, b), "bialgebra");
          },
          read_algebra(ctx.doc(0), ctx.load));
    }

    void check_hopf(Context& ctx) {
      require_inputs(ctx, 1, 1);
      require_kind(ctx.doc(0), {"bialgebra"});
      std::visit(
          [&](auto const& inst) {
            ctx.results["category"] = category_name(inst.category);
            auto const& c = inst.category;
            auto const& b = require_bialgebra(ctx.doc(0), inst);
            auto const  laws = check_bialgebra(c, b);
            ctx.report.merge(laws, "bialgebra");
            if (!laws.passed()) {
              return;
            }
            auto const decision = is_hopf(c, b);
            ctx.report.merge(decision.report, "hopf");
            ctx.results["hopf"]        = decision.hopf;
            ctx.results["right shear"] = invertibility_json(c, decision.right);
            ctx.results["left shear"]  = invertibility_json(c, decision.left);
            if (b.antipode) {
              ctx.report.merge(check_antipode(c, b, *b.antipode), "supplied antipode");
            }
            if (!decision.hopf) {
              return;
            }
            auto const derived = antipode_from_shear(c, b);
            ctx.report.merge(derived.report, "derived");
            if (derived.value) {
              ctx.results["antipode"] = c.to_json(*derived.value);
              if (b.antipode) {
                auto const same = c.equal(*derived.value, *b.antipode);
                ctx.report.expect(same, "derived antipode equals the supplied one",
                                  inst.monoid ? "supplied antipode is the inversion table" : "",
                                  same ? json()
                                       : json{{"derived", c.to_json(*derived.value)},
                                              {"supplied", c.to_json(*b.antipode)}});
              }
            }
          },
          read_algebra(ctx.doc(0), ctx.load));
    }

    void derive_antipode(Context& ctx) {
      require_inputs(ctx, 1, 1);
      require_kind(ctx.doc(0), {"bialgebra"});
      std::visit(
          [&](auto const& inst) {
            ctx.results["category"] = category_name(inst.category);
            auto const& c = inst.category;
            auto const& b = require_bialgebra(ctx.doc(0), inst);
            auto const  laws = check_bialgebra(c, b);
            ctx.report.merge(laws, "bialgebra");
            if (!laws.passed()) {
              return;
            }
            auto const derived = antipode_from_shear(c, b);
            ctx.report.merge(derived.report, "derived");
            if (derived.value) {
              ctx.results["antipode"] = c.to_json(*derived.value);
            }
          },
          read_algebra(ctx.doc(0), ctx.load));
    }

    void shear(Context& ctx) {
      require_inputs(ctx, 1, 1);
      require_kind(ctx.doc(0), {"bialgebra"});
      std::visit(
          [&](auto const& inst) {
            ctx.results["category"] = category_name(inst.category);
            auto const& c = inst.category;
            auto const& b = require_bialgebra(ctx.doc(0), inst);
            auto const  laws = check_bialgebra(c, b);
            ctx.report.merge(laws, "bialgebra");
            if (!laws.passed()) {
              return;
            }
            auto const right = right_shear(c, b);
            auto const left  = left_shear(c, b);
            auto const ri    = c.is_invertible(right);
            auto const li    = c.is_invertible(left);
            ctx.results["right shear"]                 = c.to_json(right);
            ctx.results["left shear"]                  = c.to_json(left);
            ctx.results["right shear invertibility"]   = invertibility_json(c, ri);
            ctx.results["left shear invertibility"]    = invertibility_json(c, li);
            ctx.report.merge(check_shear_identities(c, b), "identities");
            ctx.report.expect(ri.invertible, "right shear invertible", "",
                              ri.witness ? to_json(*ri.witness) : json());
            ctx.report.expect(li.invertible, "left shear invertible", "",
                              li.witness ? to_json(*li.witness) : json());
            if (!ri.invertible) {
              return;
            }
            auto const derived = antipode_from_shear(c, b);
            ctx.report.merge(derived.report, "derived");
            if (derived.value) {
              auto const back = shear_inverse_from_antipode(c, b, *derived.value);
              ctx.report.merge(back.report, "round trip");
              if (back.value) {
                ctx.results["shear inverse"] = c.to_json(*back.value);
              }
            }
          },
          read_algebra(ctx.doc(0), ctx.load));
    }

    // operators module

    void operators_audit_command(Context& ctx) {
      require_inputs(ctx, 0, 0);
      OperatorsAuditOptions o;
      o.prime                = ctx.job.options.prime.value_or(2);
      o.associativity_arity  = ctx.job.options.arity_bound;
      o.segal_bound          = ctx.job.options.arity_bound;
      ctx.report.merge(operators_audit(o));
      ctx.results["prime"]              = o.prime;
      ctx.results["associativity arity"] = o.associativity_arity;
      ctx.results["count bound"]        = o.count_bound;
      ctx.results["skeleton bound"]     = o.skeleton_bound;
      ctx.results["seed"]               = o.seed;
    }

    void segal(Context& ctx) {
      require_inputs(ctx, 0, 1);
      auto const N = ctx.job.options.arity_bound;
      if (ctx.inputs.empty()) {
        ctx.report.merge(segal_audit(ctx.job.options.prime.value_or(2), N));
        return;
      }
      require_kind(ctx.doc(0), {"category"});
      std::visit(
          [&](auto const& inst) {
            ctx.results["category"] = category_name(inst.category);
            OperatorCategory op(inst.category);
            for (std::size_t n = 1; n <= N; ++n) {
              ctx.report.merge(op.segal_check(n, std::span(inst.objects)));
            }
            ctx.results["population"] = inst.objects.size();
          },
          read_monoidal(ctx.doc(0), ctx.load));
    }

    // simplicial module

    json level_sizes(TruncatedSimplicialSet const& x) {
      json sizes = json::array();
      json nondeg = json::array();
      for (std::size_t k = 0; k <= x.dimension(); ++k) {
        sizes.push_back(x.size(k));
        nondeg.push_back(x.nondegenerate_count(k));
      }
      return {{"simplices", sizes}, {"nondegenerate", nondeg}};
    }

    void nerve_command(Context& ctx) {
      require_inputs(ctx, 1, 1);
      require_kind(ctx.doc(0), {"finite_category"});
      auto const c = read_finite_category(ctx.doc(0));
      auto const n = nerve(c, ctx.job.options.dim_bound);
      ctx.report.merge(c.check_laws(), "category");
      ctx.report.merge(n.set.check_identities(), "simplicial");
      ctx.results["levels"] = level_sizes(n.set);
      ctx.results["nerve"]  = n.set.to_json();
    }

    void hc_nerve_command(Context& ctx) {
      require_inputs(ctx, 1, 1);
      require_kind(ctx.doc(0), {"finite_category", "coherent_cube"});
      auto const D = ctx.job.options.dim_bound;
      if (ctx.doc(0).kind() == "finite_category") {
        auto const c  = read_finite_category(ctx.doc(0));
        auto const s  = SimplicialCategory::discrete(c, D);
        auto const hc = hc_nerve(s, D);
        auto const n  = nerve(c, D);
        ctx.report.merge(s.check_axioms(), "simplicial category");
        ctx.report.merge(hc.set.check_identities(), "simplicial");
        ctx.report.merge(check_isomorphism(hc.set, n.set, discrete_identification(hc, n)),
                         "identification with the nerve");
        ctx.results["levels"] = level_sizes(hc.set);
        return;
      }
      auto const cube = read_coherent_cube(ctx.doc(0));
      auto const s    = SimplicialCategory::from_cube(cube, D);
      auto const hc   = hc_nerve(s, D);
      ctx.report.merge(s.check_axioms(), "simplicial category");
      ctx.report.merge(hc.set.check_identities(), "simplicial");
      ctx.results["levels"] = level_sizes(hc.set);
    }

    void horn_audit(Context& ctx) {
      require_inputs(ctx, 1, 1);
      require_kind(ctx.doc(0), {"finite_category", "simplicial_set"});
      auto const& horns = ctx.job.options.horns;
      if (horns != "inner" && horns != "all") {
        throw UsageError("--horns must be inner or all");
      }
      auto const D = ctx.job.options.dim_bound;
      auto const x = ctx.doc(0).kind() == "finite_category"
                         ? nerve(read_finite_category(ctx.doc(0)), D).set
                         : read_simplicial_set(ctx.doc(0));
      ctx.report.merge(x.check_identities(), "simplicial");
      auto const audit = horn_check(x, horns == "inner" ? HornKind::inner : HornKind::all,
                                    std::min(D, x.dimension()));
      ctx.report.merge(audit.report, "horns");
      json counts = json::array();
      for (auto const& h : audit.counts) {
        counts.push_back({{"n", h.n},
                          {"k", h.k},
                          {"horns", h.horns},
                          {"filled", h.filled},
                          {"uniquely", h.uniquely}});
      }
      ctx.results["levels"] = level_sizes(x);
      ctx.results["horns"]  = std::move(counts);
    }

    // interchange module

    void interchange_audit(Context& ctx) {
      require_inputs(ctx, 1, 1);
      require_kind(ctx.doc(0), {"algebra", "bialgebra"});
      auto const N = ctx.job.options.arity_bound;
      auto const D = ctx.job.options.dim_bound;
      std::visit(
          [&](auto const& inst) {
            ctx.results["category"] = category_name(inst.category);
            auto const& c    = inst.category;
            auto const  laws = check_algebra(c, inst.algebra);
            ctx.report.merge(laws, "algebra");
            if (!laws.passed()) {
              return;
            }
            auto const f = algebra_functor(c, inst.algebra, N);
            ctx.results["operad"] = f.source().operad().name();
            ctx.report.merge(f.check_functoriality(N), "functoriality");
            ctx.report.merge(f.check_inert_preservation(N), "inert");
            // Nerve simplices of dimension 3 over arity 3 are too many to list.
            auto const nv = nerve_algebra(f, D, std::min<std::size_t>(N, 2));
            ctx.report.merge(nv.report, "nerve");
            ctx.results["nerve"] = level_sizes(nv.image_nerve.set);
            auto const h = homotopy_category_multiplication(f);
            ctx.report.merge(h.report, "homotopy category");
            ctx.results["multiplication"] = c.to_json(h.value);

            auto const same = cylinder_from_algebra_map(f, f, c.identity(inst.algebra.carrier));
            ctx.report.merge(same.check(N), "cylinder of the identity");
            if (inst.bialgebra) {
              auto const one = f.source().operad().name() == "Comm"
                                   ? comm_algebra_functor(c, unit_algebra(c), N)
                                   : assoc_algebra_functor(c, unit_algebra(c), N);
              auto const counit = cylinder_from_algebra_map(f, one, inst.bialgebra->epsilon);
              ctx.report.merge(counit.check(N), "cylinder of the counit");
            }
          },
          read_algebra(ctx.doc(0), ctx.load));
    }

    template <SymmetricMonoidalCategory C>
    void coproduct_for(Context& ctx, AlgebraInstance<C> const& r, AlgebraInstance<C> const& s) {
      auto const& c = r.category;
      auto const  N = ctx.job.options.arity_bound;
      ctx.results["category"] = category_name(c);
      for (auto const* a : {&r, &s}) {
        auto const laws = check_algebra(c, a->algebra);
        ctx.report.merge(laws, a == &r ? "R" : "S");
        if (!laws.passed()) {
          return;
        }
      }
      for (auto const* a : {&r, &s}) {
        auto const& x = a->algebra;
        if (!c.equal(c.compose(x.mu, c.braiding(x.carrier, x.carrier)), x.mu)) {
          ctx.report.refuse("commutative inputs", (a == &r ? "R" : "S") + std::string(" is not commutative"),
                            json{{"algebra", a->name}, {"mu", c.to_json(x.mu)}});
          return;
        }
      }
      auto ra        = r.algebra;
      auto sa        = s.algebra;
      ra.commutative = sa.commutative = true;
      ctx.report.merge(pairing_and_pushforward(c, ra, sa, N), "pairing");
      auto const t   = tensor_algebras(c, ra, sa);
      auto const in1 = c.tensor(c.identity(ra.carrier), sa.eta);
      auto const in2 = c.tensor(ra.eta, c.identity(sa.carrier));
      auto const u   = coproduct_universal_check(c, ra, sa, t, in1, in2);
      ctx.report.merge(u.report, "universal property");
      if (u.solutions) {
        ctx.results["solutions"] = *u.solutions;
      }
    }

    void coproduct_audit(Context& ctx) {
      require_inputs(ctx, 1, 2);
      for (auto const& in : ctx.inputs) {
        require_kind(in.doc, {"algebra", "bialgebra"});
      }
      auto const r = read_algebra(ctx.doc(0), ctx.load);
      auto const s = ctx.inputs.size() == 2 ? read_algebra(ctx.doc(1), ctx.load) : r;
      if (r.index() != s.index()) {
        ctx.doc(1).fail("/category", "both algebras must live in the same category");
      }
      std::visit(
          [&](auto const& ri) {
            using I        = std::decay_t<decltype(ri)>;
            auto const& si = std::get<I>(s);
            if constexpr (std::is_same_v<I, AlgebraInstance<MatrixCategory>>) {
              if (!(ri.category.ring() == si.category.ring())) {
                ctx.doc(1).fail("/category", "both algebras must use the same ring");
              }
            }
            coproduct_for(ctx, ri, si);
          },
          r);
    }

    using Handler = void (*)(Context&);

    std::vector<std::pair<std::string, Handler>> const& table() {
      static std::vector<std::pair<std::string, Handler>> const t{
          {"check-monoidal", check_monoidal},
          {"check-algebra", check_algebra_command},
          {"check-bialgebra", check_bialgebra_command},
          {"check-hopf", check_hopf},
          {"derive-antipode", derive_antipode},
          {"shear", shear},
          {"operators-audit", operators_audit_command},
          {"segal", segal},
          {"nerve", nerve_command},
          {"hc-nerve", hc_nerve_command},
          {"horn-audit", horn_audit},
          {"interchange-audit", interchange_audit},
          {"coproduct-audit", coproduct_audit},
      };
      return t;
    }

    fs::path resolve(std::string const& given, Options const& options) {
      fs::path p(given);
      if (fs::exists(p)) {
        return p;
      }
      std::string corpus = options.corpus;
      if (corpus.empty()) {
        if (char const* env = std::getenv(std::string(kCorpusEnv).c_str())) {
          corpus = env;
        }
      }
      if (!corpus.empty() && p.is_relative() && fs::exists(fs::path(corpus) / p)) {
        return fs::path(corpus) / p;
      }
      throw UsageError("input not found: " + given);
    }

    std::string read_file(fs::path const& p) {
      std::ifstream in(p, std::ios::binary);
      if (!in) {
        throw UsageError("cannot read " + p.string());
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    json options_json(Options const& o) {
      json out{{"arity_bound", o.arity_bound},
               {"dim_bound", o.dim_bound},
               {"format", o.format == Format::json ? "json" : "text"},
               {"horns", o.horns}};
      out["prime"] = o.prime ? json(*o.prime) : json();
      return out;
    }

    std::string fixed(double ms) {
      std::ostringstream out;
      out << std::fixed << std::setprecision(3) << ms;
      return out.str();
    }

  }  // namespace

  std::vector<std::string> const& commands() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> out;
      for (auto const& [name, _] : table()) {
        out.push_back(name);
      }
      return out;
    }();
    return names;
  }

  Outcome run(Job const& job) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    out;
    auto&      r = out.report;
    r["tool"]    = {{"name", "catcheck"}, {"version", CATCHECK_VERSION}, {"schema", kSchemaTag}};
    r["command"] = job.command;
    r["inputs"]  = json::array();
    r["options"] = options_json(job.options);

    Context ctx{job, {}, {}, {}};
    auto    malformed = [&](json error) {
      r["checks"]     = json::array();
      r["results"]    = json::object();
      r["error"]      = std::move(error);
      r["status"]     = "malformed";
      out.exit_code   = kExitMalformed;
    };
    try {
      auto const it = std::find_if(table().begin(), table().end(),
                                   [&](auto const& e) { return e.first == job.command; });
      if (it == table().end()) {
        throw UsageError("unknown command: " + job.command);
      }
      auto const& o = job.options;
      if (o.prime && !is_prime(*o.prime)) {
        throw UsageError("--prime " + std::to_string(*o.prime) + " is not prime");
      }
      if (o.arity_bound < 1 || o.arity_bound > kMaxArity) {
        throw UsageError("--arity-bound must be between 1 and " + std::to_string(kMaxArity));
      }
      if (o.dim_bound < 1 || o.dim_bound > kMaxDim) {
        throw UsageError("--dim-bound must be between 1 and " + std::to_string(kMaxDim));
      }
      ctx.load.prime_override = o.prime;
      for (auto const& given : job.inputs) {
        auto const path  = resolve(given, o);
        auto       bytes = read_file(path);
        json       entry{{"path", given}, {"sha256", sha256_hex(bytes)}};
        r["inputs"].push_back(entry);
        try {
          auto doc = Document::parse(std::move(bytes));
          r["inputs"].back()["kind"] = doc.kind();
          r["inputs"].back()["name"] = doc.name();
          ctx.inputs.push_back({given, path, std::move(doc)});
        } catch (DescriptionError const& e) {
          malformed({{"input", given}, {"path", e.path()}, {"line", e.line()}, {"rule", e.rule()}});
          throw;
        }
      }
      it->second(ctx);
      r["checks"]  = ctx.report.to_json();
      r["results"] = std::move(ctx.results);
      r["status"]  = ctx.report.passed() ? "pass" : "fail";
      out.exit_code = ctx.report.passed() ? kExitPass : kExitFail;
    } catch (DescriptionError const& e) {
      if (!r.contains("error")) {
        auto const given = ctx.inputs.empty() ? std::string() : ctx.inputs.back().given;
        malformed({{"input", given}, {"path", e.path()}, {"line", e.line()}, {"rule", e.rule()}});
      }
    } catch (UsageError const& e) {
      malformed({{"rule", e.what()}});
    } catch (Error const& e) {
      malformed({{"rule", e.what()}});
    }
    auto const ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now()
                                                              - start)
                        .count();
    r["timing"] = {{"total_ms", std::stod(fixed(ms))}};
    return out;
  }

  json without_timing(json report) {
    report.erase("timing");
    return report;
  }

  namespace {

    void render_witness(std::ostringstream& out, json const& w) {
      out << "      witness: " << w.dump() << '\n';
    }

  }  // namespace

  std::string render(json const& report, Format format) {
    if (format == Format::json) {
      return report.dump(2) + '\n';
    }
    std::ostringstream out;
    out << report["tool"]["name"].get<std::string>() << ' '
        << report["tool"]["version"].get<std::string>() << "  "
        << report["command"].get<std::string>() << '\n';
    for (auto const& in : report["inputs"]) {
      out << "input  " << in["path"].get<std::string>() << "  sha256 "
          << in["sha256"].get<std::string>();
      if (in.contains("kind")) {
        out << "  " << in["kind"].get<std::string>() << ' ' << in["name"].get<std::string>();
      }
      out << '\n';
    }
    auto const& o = report["options"];
    out << "options  prime=" << (o["prime"].is_null() ? "default" : o["prime"].dump())
        << " arity-bound=" << o["arity_bound"].dump() << " dim-bound=" << o["dim_bound"].dump()
        << '\n';
    if (report.contains("error")) {
      auto const& e = report["error"];
      out << "error  ";
      if (e.contains("input") && !e["input"].get<std::string>().empty()) {
        out << e["input"].get<std::string>() << ':' << e["line"].dump() << ": "
            << e["path"].get<std::string>() << ": ";
      }
      out << e["rule"].get<std::string>() << '\n';
    }
    std::map<std::string, std::size_t> tally;
    if (!report["checks"].empty()) {
      out << "checks\n";
    }
    for (auto const& c : report["checks"]) {
      auto const status = c["status"].get<std::string>();
      ++tally[status];
      out << "  " << std::left << std::setw(8) << (status == "pass" ? "pass" : status == "fail" ? "FAIL" : status)
          << c["name"].get<std::string>();
      if (c.contains("detail") && !c["detail"].get<std::string>().empty()) {
        out << "  (" << c["detail"].get<std::string>() << ')';
      }
      out << '\n';
      if (c.contains("witness") && !c["witness"].is_null()) {
        render_witness(out, c["witness"]);
      }
    }
    if (!report["results"].empty()) {
      out << "results\n";
      for (auto const& [key, value] : report["results"].items()) {
        out << "  " << key << ": " << value.dump() << '\n';
      }
    }
    out << "status  " << report["status"].get<std::string>();
    if (!report["checks"].empty()) {
      out << "  (" << tally["pass"] << " pass, " << tally["fail"] << " fail, " << tally["refused"]
          << " refused, " << tally["skipped"] << " skipped)";
    }
    out << '\n';
    if (report.contains("timing")) {
      out << "[timing]\n  total_ms  " << fixed(report["timing"]["total_ms"].get<double>())
          << '\n';
    }
    return out.str();
  }

}  // namespace catcheck::cli
