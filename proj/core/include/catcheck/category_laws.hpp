#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "catcheck/category.hpp"
#include "catcheck/report.hpp"

namespace catcheck {

  // Associativity over every composable triple of `population` and both
  // unit laws for every member. The detail of each outcome records how
  // many cases were checked.
  template <ComputableCategory C>
  CheckReport check_category_laws(C const&                              c,
                                  std::span<typename C::Morphism const> population) {
    CheckReport report;
    std::size_t triples = 0;
    bool        assoc   = true;
    for (auto const& f : population) {
      for (auto const& g : population) {
        if (!(c.domain(g) == c.codomain(f))) {
          continue;
        }
        auto const gf = c.compose(g, f);
        for (auto const& h : population) {
          if (!(c.domain(h) == c.codomain(g))) {
            continue;
          }
          ++triples;
          auto const lhs = c.compose(h, gf);
          auto const rhs = c.compose(c.compose(h, g), f);
          if (assoc && !c.equal(lhs, rhs)) {
            assoc = false;
            report.fail("associativity",
                        "h∘(g∘f) != (h∘g)∘f",
                        {{"f", c.to_json(f)},
                         {"g", c.to_json(g)},
                         {"h", c.to_json(h)}});
          }
        }
      }
    }
    if (assoc) {
      report.pass("associativity", std::to_string(triples) + " triples");
    }
    bool units = true;
    for (auto const& f : population) {
      auto const l = c.compose(c.identity(c.codomain(f)), f);
      auto const r = c.compose(f, c.identity(c.domain(f)));
      if (!c.equal(l, f) || !c.equal(r, f)) {
        units = false;
        report.fail("unit laws", "id∘f or f∘id differs from f",
                    {{"f", c.to_json(f)}});
        break;
      }
    }
    if (units) {
      report.pass("unit laws",
                  std::to_string(population.size()) + " morphisms");
    }
    return report;
  }

  // The strict symmetric monoidal laws on a finite population:
  // interchange, strict units, strict associativity of ⊗ on morphisms,
  // symmetry and naturality of the braiding, and the hexagon. At most
  // `max_cases` cases are checked per law, in a fixed order.
  template <SymmetricMonoidalCategory C>
  CheckReport check_monoidal_laws(C const&                              c,
                                  std::span<typename C::Object const>   objects,
                                  std::span<typename C::Morphism const> morphisms,
                                  std::size_t max_cases = 20000) {
    using Morphism = typename C::Morphism;
    CheckReport report;

    struct Pair {
      Morphism const* first;  // applied first
      Morphism const* second;
    };
    std::vector<Pair> composable;
    for (auto const& f : morphisms) {
      for (auto const& g : morphisms) {
        if (c.domain(g) == c.codomain(f)) {
          composable.push_back({&f, &g});
        }
      }
    }

    {
      std::size_t cases = 0;
      bool        ok    = true;
      for (auto const& p : composable) {
        for (auto const& q : composable) {
          if (cases >= max_cases || !ok) {
            break;
          }
          ++cases;
          auto const lhs = c.tensor(c.compose(*p.second, *p.first),
                                    c.compose(*q.second, *q.first));
          auto const rhs = c.compose(c.tensor(*p.second, *q.second),
                                     c.tensor(*p.first, *q.first));
          if (!c.equal(lhs, rhs)) {
            ok = false;
            report.fail("interchange",
                        "(g∘f)⊗(g'∘f') != (g⊗g')∘(f⊗f')",
                        {{"f", c.to_json(*p.first)},
                         {"g", c.to_json(*p.second)},
                         {"f'", c.to_json(*q.first)},
                         {"g'", c.to_json(*q.second)}});
          }
        }
      }
      if (ok) {
        report.pass("interchange", std::to_string(cases) + " pairs of pairs");
      }
    }

    {
      bool       ok   = true;
      auto const unit = c.identity(c.unit());
      for (auto const& f : morphisms) {
        if (!c.equal(c.tensor(unit, f), f) || !c.equal(c.tensor(f, unit), f)) {
          ok = false;
          report.fail("strict unit", "id_1⊗f or f⊗id_1 differs from f",
                      {{"f", c.to_json(f)}});
          break;
        }
      }
      for (auto const& a : objects) {
        if (ok && !c.equal(c.braiding(c.unit(), a), c.identity(a))) {
          ok = false;
          report.fail("strict unit", "σ_{1,A} differs from id_A",
                      {{"A", c.object_json(a)}});
        }
      }
      if (ok) {
        report.pass("strict unit");
      }
    }

    {
      std::size_t cases = 0;
      bool        ok    = true;
      for (auto const& f : morphisms) {
        for (auto const& g : morphisms) {
          for (auto const& h : morphisms) {
            if (cases >= max_cases || !ok) {
              break;
            }
            ++cases;
            if (!c.equal(c.tensor(c.tensor(f, g), h),
                         c.tensor(f, c.tensor(g, h)))) {
              ok = false;
              report.fail("tensor associativity", "(f⊗g)⊗h != f⊗(g⊗h)",
                          {{"f", c.to_json(f)},
                           {"g", c.to_json(g)},
                           {"h", c.to_json(h)}});
            }
          }
        }
      }
      if (ok) {
        report.pass("tensor associativity", std::to_string(cases) + " triples");
      }
    }

    {
      bool ok = true;
      for (auto const& a : objects) {
        for (auto const& b : objects) {
          auto const twice
              = c.compose(c.braiding(b, a), c.braiding(a, b));
          if (ok && !c.equal(twice, c.identity(c.tensor(a, b)))) {
            ok = false;
            report.fail("symmetry", "σ_{B,A}∘σ_{A,B} != id",
                        {{"A", c.object_json(a)}, {"B", c.object_json(b)}});
          }
        }
      }
      if (ok) {
        report.pass("symmetry", std::to_string(objects.size() * objects.size())
                                    + " object pairs");
      }
    }

    {
      std::size_t cases = 0;
      bool        ok    = true;
      for (auto const& f : morphisms) {
        for (auto const& g : morphisms) {
          if (cases >= max_cases || !ok) {
            break;
          }
          ++cases;
          auto const lhs = c.compose(c.braiding(c.codomain(f), c.codomain(g)),
                                     c.tensor(f, g));
          auto const rhs = c.compose(c.tensor(g, f),
                                     c.braiding(c.domain(f), c.domain(g)));
          if (!c.equal(lhs, rhs)) {
            ok = false;
            report.fail("braiding naturality",
                        "σ∘(f⊗g) != (g⊗f)∘σ",
                        {{"f", c.to_json(f)}, {"g", c.to_json(g)}});
          }
        }
      }
      if (ok) {
        report.pass("braiding naturality", std::to_string(cases) + " pairs");
      }
    }

    {
      bool ok = true;
      for (auto const& a : objects) {
        for (auto const& b : objects) {
          for (auto const& d : objects) {
            auto const lhs = c.braiding(a, c.tensor(b, d));
            auto const rhs = c.compose(
                c.tensor(c.identity(b), c.braiding(a, d)),
                c.tensor(c.braiding(a, b), c.identity(d)));
            if (ok && !c.equal(lhs, rhs)) {
              ok = false;
              report.fail("hexagon", "σ_{A,B⊗C} != (id⊗σ)∘(σ⊗id)",
                          {{"A", c.object_json(a)},
                           {"B", c.object_json(b)},
                           {"C", c.object_json(d)}});
            }
          }
        }
      }
      if (ok) {
        report.pass("hexagon");
      }
    }
    return report;
  }

}  // namespace catcheck
