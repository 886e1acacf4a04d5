// One line per acceptance criterion. Exit status is 0 when every criterion
// passes, except those listed in kUnattainable, which are still printed
// with their real status.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "catcheck/algebra/hopf.hpp"
#include "catcheck/algebra/linearize.hpp"
#include "catcheck/algebra/monoid.hpp"
#include "catcheck/cli/cli.hpp"
#include "catcheck/interchange/algebra_functor.hpp"
#include "catcheck/interchange/pairing.hpp"
#include "catcheck/io/description.hpp"
#include "catcheck/operators/audit.hpp"
#include "catcheck/operators/pointed_map.hpp"
#include "catcheck/simplicial/coherent_cube.hpp"
#include "catcheck/simplicial/hc_nerve.hpp"
#include "catcheck/simplicial/horn.hpp"
#include "catcheck/simplicial/nerve.hpp"
#include "catcheck/simplicial/simplicial_category.hpp"

using namespace catcheck;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

  constexpr double kHopfBudget     = 1.0;   // seconds per positive entry
  constexpr double kNegativeBudget = 1.0;
  constexpr double kSweepBudget    = 30.0;
  // Enumeration budgets per hom-set for the inert-edge checks. Matrix bases
  // fall back to a rank check above theirs.
  constexpr std::uint64_t kInertBudgetMatrix = 1u << 10;
  constexpr std::uint64_t kInertBudgetFinSet = 1u << 16;

  // Criteria that cannot be met as stated; see the decisions ledger.
  std::set<std::string> const kUnattainable = {"operator-category audit"};

  std::vector<std::string> const kHopfPositives = {"f2_c2.json", "f2_c3.json", "f3_c3.json",
                                                    "f2_s3.json"};
  std::vector<std::string> const kBialgebras    = {
      "f2_c2.json",     "f2_c3.json",    "f3_c3.json",  "f2_s3.json",
      "f2_idempotent.json", "finset_c3.json", "finset_truncated_naturals.json"};
  std::vector<std::string> const kAlgebras      = {
      "f2_c2.json",     "f2_c3.json",    "f3_c3.json",  "f2_s3.json",
      "f2_idempotent.json", "finset_c3.json", "finset_truncated_naturals.json",
      "f2_upper_triangular.json"};
  std::vector<std::string> const kCategories = {"arrow.json", "c2_groupoid.json",
                                                "ordinal_2.json", "three_objects.json"};

  fs::path corpus(std::string const& name) {
    return fs::path(CATCHECK_CORPUS_DIR) / name;
  }

  json raw(std::string const& name) {
    std::ifstream in(corpus(name));
    return json::parse(in);
  }

  double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  cli::Outcome run_cli(std::string command, std::vector<std::string> inputs) {
    cli::Options o;
    o.corpus = CATCHECK_CORPUS_DIR;
    return cli::run({std::move(command), std::move(inputs), o});
  }

  std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
  }

  // Raw monoid table helpers, read straight from the description JSON.
  using Table = std::vector<std::vector<std::size_t>>;

  std::size_t unit_of(Table const& t) {
    for (std::size_t u = 0; u < t.size(); ++u) {
      bool ok = true;
      for (std::size_t x = 0; x < t.size(); ++x) {
        ok = ok && t[u][x] == x && t[x][u] == x;
      }
      if (ok) {
        return u;
      }
    }
    return t.size();
  }

  std::optional<std::size_t> inverse_of(Table const& t, std::size_t g) {
    auto const e = unit_of(t);
    for (std::size_t h = 0; h < t.size(); ++h) {
      if (t[g][h] == e && t[h][g] == e) {
        return h;
      }
    }
    return std::nullopt;
  }

  bool is_group(Table const& t) {
    for (std::size_t g = 0; g < t.size(); ++g) {
      if (!inverse_of(t, g)) {
        return false;
      }
    }
    return true;
  }

  // Shears on the basis a⊗b ↦ index a*q+b, applied to v mod p.
  std::vector<std::int64_t> apply_shear(Table const& t, std::vector<std::int64_t> const& v,
                                        std::int64_t p, bool right) {
    auto const                q = t.size();
    std::vector<std::int64_t> out(q * q, 0);
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) {
        auto const to = right ? a * q + t[a][b] : t[a][b] * q + b;
        out[to]       = (out[to] + v[a * q + b]) % p;
      }
    }
    return out;
  }

  bool zero(std::vector<std::int64_t> const& v) {
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
  }

  // ----------------------------------------------------------------------

  struct Verdict {
    bool        pass = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
      if (!ok) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + what;
      }
    }
  };

  Verdict hopf_positives() {
    Verdict     v;
    double      worst = 0;
    for (auto const& file : kHopfPositives) {
      auto const t0  = std::chrono::steady_clock::now();
      auto const bi  = run_cli("check-bialgebra", {file});
      auto const hp  = run_cli("check-hopf", {file});
      auto const dt  = seconds_since(t0);
      worst          = std::max(worst, dt);
      v.require(bi.exit_code == cli::kExitPass, file + " check-bialgebra exit "
                                                    + std::to_string(bi.exit_code));
      v.require(hp.exit_code == cli::kExitPass,
                file + " check-hopf exit " + std::to_string(hp.exit_code));
      v.require(dt < kHopfBudget, file + " took " + fmt(dt) + " s");
      auto const doc = raw(file);
      auto const t   = doc["monoid"]["table"].get<Table>();
      json       expected = json::array();
      for (std::size_t r = 0; r < t.size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < t.size(); ++c) {
          row.push_back(inverse_of(t, c) == r ? 1 : 0);
        }
        expected.push_back(row);
      }
      auto const& got = hp.report["results"]["antipode"]["matrix"];
      v.require(got == expected, file + " antipode differs from the inversion table");
    }
    if (v.pass) {
      v.detail = "4 entries, antipode = inversion table, slowest " + fmt(worst) + " s";
    }
    return v;
  }

  json witness_of(json const& report, std::string const& name) {
    for (auto const& c : report["checks"]) {
      if (c["name"] == name) {
        return c.value("witness", json());
      }
    }
    return {};
  }

  Verdict hopf_negative() {
    Verdict    v;
    auto const t0  = std::chrono::steady_clock::now();
    auto const out = run_cli("check-hopf", {"f2_idempotent.json"});
    auto const dt  = seconds_since(t0);
    auto const t   = raw("f2_idempotent.json")["monoid"]["table"].get<Table>();
    v.require(out.exit_code == cli::kExitFail, "exit " + std::to_string(out.exit_code));
    auto const right = witness_of(out.report, "hopf/right shear invertible");
    v.require(right.value("kind", "") == "kernel_vector", "no right kernel witness");
    if (right.contains("vector")) {
      auto const w = right["vector"].get<std::vector<std::int64_t>>();
      v.require(!zero(w) && zero(apply_shear(t, w, 2, true)),
                "right witness is not a nonzero kernel vector");
    }
    auto const& left = out.report["results"]["left shear"];
    v.require(left.value("invertible", true) == false, "left shear reported invertible");
    if (left.contains("witness")) {
      auto const w = left["witness"]["vector"].get<std::vector<std::int64_t>>();
      v.require(!zero(w) && zero(apply_shear(t, w, 2, false)),
                "left witness is not a nonzero kernel vector");
    } else {
      v.require(false, "no left witness");
    }
    v.require(dt < kNegativeBudget, "took " + fmt(dt) + " s");
    if (v.pass) {
      v.detail = "kernel " + right["vector"].dump() + " (right), " + left["witness"]["vector"].dump()
                 + " (left), " + fmt(dt) + " s";
    }
    return v;
  }

  template <class F>
  void for_algebra(std::string const& file, F&& f) {
    auto const doc = Document::load(corpus(file));
    std::visit([&](auto const& inst) { f(inst); }, read_algebra(doc));
  }

  Verdict round_trip() {
    Verdict     v;
    std::size_t positives = 0;
    for (auto const& file : kBialgebras) {
      for_algebra(file, [&](auto const& inst) {
        auto const& c = inst.category;
        auto const& b = *inst.bialgebra;
        if (!is_hopf(c, b).hopf) {
          return;
        }
        ++positives;
        auto const alpha = antipode_from_shear(c, b);
        v.require(alpha.value.has_value() && alpha.report.passed(),
                  file + " antipode_from_shear");
        if (!alpha.value) {
          return;
        }
        v.require(check_antipode(c, b, *alpha.value).passed(), file + " check_antipode");
        auto const phi = shear_inverse_from_antipode(c, b, *alpha.value);
        v.require(phi.report.passed(), file + " shear inverse round trip");
      });
    }
    v.require(positives == 5, std::to_string(positives) + " positive entries, expected 5");
    if (v.pass) {
      v.detail = "5 positive entries, φ∘sh = sh∘φ = id";
    }
    return v;
  }

  Verdict shear_lemmas() {
    Verdict     v;
    std::size_t checks = 0;
    for (auto const& file : kBialgebras) {
      for_algebra(file, [&](auto const& inst) {
        auto const r = check_shear_identities(inst.category, *inst.bialgebra);
        checks += r.checks().size();
        v.require(r.passed(), file + " " + (r.passed() ? "" : r.first_failure()->name));
      });
    }
    if (v.pass) {
      v.detail = std::to_string(kBialgebras.size()) + " bialgebras, " + std::to_string(checks)
                 + " equalities";
    }
    return v;
  }

  // All associative unital tables on {0..n-1} with unit 0, one per
  // isomorphism class (least under relabelings fixing 0).
  std::vector<Table> monoid_oracle(std::size_t n) {
    std::vector<Table> out;
    if (n == 0) {
      return out;
    }
    std::vector<std::size_t> free;  // cells (a, b) with a, b ≥ 1
    auto const               cells = (n - 1) * (n - 1);
    std::size_t              total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
      total *= n;
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t code = 0; code < total; ++code) {
      Table t(n, std::vector<std::size_t>(n));
      auto  rest = code;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a == 0 || b == 0) {
            t[a][b] = a + b;
          } else {
            t[a][b] = rest % n;
            rest /= n;
          }
        }
      }
      bool assoc = true;
      for (std::size_t a = 0; a < n && assoc; ++a) {
        for (std::size_t b = 0; b < n && assoc; ++b) {
          for (std::size_t c = 0; c < n && assoc; ++c) {
            assoc = t[t[a][b]][c] == t[a][t[b][c]];
          }
        }
      }
      if (!assoc) {
        continue;
      }
      bool least = true;
      for (std::size_t i = 0; i < n; ++i) {
        perm[i] = i;
      }
      while (least && std::next_permutation(perm.begin() + 1, perm.end())) {
        Table u(n, std::vector<std::size_t>(n));
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            u[perm[a]][perm[b]] = perm[t[a][b]];
          }
        }
        least = !(u < t);
      }
      if (least) {
        out.push_back(t);
      }
    }
    return out;
  }

  Verdict monoid_sweep() {
    Verdict     v;
    auto const  t0 = std::chrono::steady_clock::now();
    std::size_t count = 0, groups = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& t : monoid_oracle(n)) {
        ++count;
        auto const b     = monoid_algebra(Monoid::from_table(t), Ring::prime_field(2));
        bool const hopf  = is_hopf(MatrixCategory(Ring::prime_field(2)), b).hopf;
        bool const group = is_group(t);
        groups += group;
        v.require(hopf == group, json(t).dump() + (group ? " group not Hopf" : " Hopf non-group"));
      }
    }
    auto const dt = seconds_since(t0);
    v.require(count == 10, std::to_string(count) + " monoids, expected 1 + 2 + 7");
    v.require(dt < kSweepBudget, "took " + fmt(dt) + " s");
    if (v.pass) {
      v.detail = std::to_string(count) + " monoids, " + std::to_string(groups)
                 + " groups, Hopf iff group, " + fmt(dt) + " s";
    }
    return v;
  }

  // Composable triples x → y → z → w of C^⊗ with tuples of length ≤ 3 over
  // {F_2^1, F_2^2}: Σ (H³)_{xw} with H_{xy} = Σ_α ∏_j 2^{y_j ∏_{α(i)=j} x_i}.
  long double literal_triple_count() {
    std::vector<std::vector<std::size_t>> tuples{{}};
    for (std::size_t len = 1; len <= 3; ++len) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
        std::vector<std::size_t> x;
        for (std::size_t i = 0; i < len; ++i) {
          x.push_back(1 + ((mask >> i) & 1));
        }
        tuples.push_back(x);
      }
    }
    auto const                            T = tuples.size();
    std::vector<std::vector<long double>> H(T, std::vector<long double>(T, 0));
    for (std::size_t a = 0; a < T; ++a) {
      for (std::size_t b = 0; b < T; ++b) {
        auto const& x = tuples[a];
        auto const& y = tuples[b];
        for (auto const& alpha : enumerate_pointed_maps(x.size(), y.size())) {
          long double homs = 1;
          for (std::size_t j = 1; j <= y.size(); ++j) {
            std::size_t d = 1;
            for (std::size_t i = 1; i <= x.size(); ++i) {
              d *= alpha(i) == j ? x[i - 1] : 1;
            }
            homs *= std::pow(2.0L, static_cast<long double>(d * y[j - 1]));
          }
          H[a][b] += homs;
        }
      }
    }
    long double total = 0;
    for (std::size_t a = 0; a < T; ++a) {
      for (std::size_t b = 0; b < T; ++b) {
        for (std::size_t c = 0; c < T; ++c) {
          for (std::size_t d = 0; d < T; ++d) {
            total += H[a][b] * H[b][c] * H[c][d];
          }
        }
      }
    }
    return total;
  }

  Verdict operators() {
    Verdict v;
    // The exhaustive sweep over every composable triple is out of reach;
    // what runs instead is every triple of pointed maps, each realized once.
    auto const literal = literal_triple_count();
    char       buf[64];
    std::snprintf(buf, sizeof buf, "%.3Le", literal);
    v.require(false, std::string("literal sweep needs ") + buf + " triples, not enumerated");

    OperatorsAuditOptions o;
    auto const assoc = operator_associativity(o);
    auto const counts = pointed_map_audit(4);
    auto const segal  = segal_audit(2, 3);
    auto const operad = operad_audit(4);
    std::string ran = "ran instead: associativity over all pointed-map triples with one seeded "
                      "realization each ";
    ran += assoc.passed() ? "pass" : "FAIL";
    ran += std::string(", Segal n ≤ 3 ") + (segal.passed() ? "pass" : "FAIL");
    ran += std::string(", (n+1)^m counts ") + (counts.passed() ? "pass" : "FAIL");
    ran += std::string(", Comm^⊗ ≅ Fin_* ≤ 4 ") + (operad.passed() ? "pass" : "FAIL");
    v.detail += "; " + ran;
    return v;
  }

  Verdict simplicial() {
    Verdict     v;
    std::size_t sets = 0;
    auto const  identities = [&](TruncatedSimplicialSet const& x, std::string const& what) {
      ++sets;
      v.require(x.check_identities().passed(), what + " identities");
    };
    for (auto const& file : kCategories) {
      auto const c = read_finite_category(Document::load(corpus(file)));
      auto const n = nerve(c, 3);
      identities(n.set, "N(" + file + ")");
      v.require(horn_check(n.set, HornKind::inner, 3).report.passed(), file + " inner horns");
      auto const hc = hc_nerve(SimplicialCategory::discrete(c, 3), 3);
      identities(hc.set, "hc(" + file + ")");
    }
    auto const c2 = read_finite_category(Document::load(corpus("c2_groupoid.json")));
    v.require(horn_check(nerve(c2, 3).set, HornKind::all, 3).report.passed(),
              "C_2 groupoid all horns");

    auto const arrow = read_finite_category(Document::load(corpus("arrow.json")));
    auto const audit = horn_check(nerve(arrow, 2).set, HornKind::all, 2);
    auto const bad   = audit.report.find("Λ^2_0");
    v.require(bad && bad->status == Status::fail && !bad->witness.is_null(),
              "arrow Λ^2_0 not refused with a witness");

    for (std::size_t n = 0; n <= 3; ++n) {
      identities(standard_simplex(n, 3), "Δ^" + std::to_string(n));
    }
    identities(read_simplicial_set(Document::load(corpus("delta_2.json"))), "delta_2.json");
    identities(product(standard_simplex(1, 3), nerve(c2, 3).set), "Δ¹ × N(C_2)");
    auto const cube = read_coherent_cube(Document::load(corpus("cube_3.json")));
    identities(cube.hom(0, 3, 3), "P_{0,3}");
    identities(hc_nerve(SimplicialCategory::from_cube(cube, 3), 3).set, "hc(cube_3)");

    for (std::size_t n = 1; n <= 5; ++n) {
      std::size_t brute = 0;
      for (std::size_t mask = 0; mask < (std::size_t{1} << (n + 1)); ++mask) {
        brute += (mask & 1) && (mask >> n & 1);
      }
      auto const got = CoherentCube(n).subsets(0, n).size();
      v.require(got == brute && got == (std::size_t{1} << (n - 1)),
                "|P_{0," + std::to_string(n) + "}| = " + std::to_string(got));
    }
    if (v.pass) {
      v.detail = std::to_string(sets) + " sets, inner horns on " + std::to_string(kCategories.size())
                 + " categories, arrow refuses Λ^2_0, |P_{0,n}| ok for n ≤ 5";
    }
    return v;
  }

  Verdict discrete_hc() {
    Verdict v;
    for (auto const& file : kCategories) {
      auto const c  = read_finite_category(Document::load(corpus(file)));
      auto const hc = hc_nerve(SimplicialCategory::discrete(c, 3), 3);
      auto const n  = nerve(c, 3);
      auto const r  = check_isomorphism(hc.set, n.set, discrete_identification(hc, n));
      v.require(r.passed(), file + " " + (r.passed() ? "" : r.first_failure()->name));
    }
    if (v.pass) {
      v.detail = std::to_string(kCategories.size()) + " categories, dimensions ≤ 3";
    }
    return v;
  }

  Verdict interchange() {
    Verdict     v;
    std::size_t skipped = 0, checks = 0;
    std::string per_file;
    for (auto const& file : kAlgebras) {
      for_algebra(file, [&](auto const& inst) {
        auto const f  = algebra_functor(inst.category, inst.algebra, 3);
        auto const fn = f.check_functoriality(3);
        auto const mu = homotopy_category_multiplication(f);
        auto const in = f.check_inert_preservation(
            3, std::is_same_v<std::decay_t<decltype(inst.category)>, MatrixCategory>
                   ? kInertBudgetMatrix
                   : kInertBudgetFinSet);
        v.require(fn.passed(), file + " functoriality");
        v.require(mu.report.passed() && inst.category.equal(mu.value, inst.algebra.mu),
                  file + " fold edge");
        v.require(in.passed(), file + " inert edges");
        skipped += in.count(Status::skipped);
        if (in.count(Status::skipped) > 0) {
          per_file += " " + file + ":" + std::to_string(in.count(Status::skipped));
        }
        checks += fn.checks().size() + in.checks().size() + 1;
      });
    }
    if (v.pass) {
      v.detail = std::to_string(kAlgebras.size()) + " algebras, " + std::to_string(checks)
                 + " checks, " + std::to_string(skipped) + " skipped over budget" + per_file;
    }
    return v;
  }

  Verdict pairing() {
    Verdict v;
    for (auto const& file : {std::string("f2_c2.json"), std::string("finset_c3.json")}) {
      for_algebra(file, [&](auto const& inst) {
        auto const r = pairing_and_pushforward(inst.category, inst.algebra, inst.algebra, 3);
        v.require(r.passed(), file + " " + (r.passed() ? "" : r.first_failure()->name));
      });
    }
    if (v.pass) {
      v.detail = "F_2[C_2] and C_3 in FinSet, arity 3";
    }
    return v;
  }

  std::vector<std::pair<std::string, std::vector<std::string>>> suite() {
    std::vector<std::pair<std::string, std::vector<std::string>>> s = {
        {"check-monoidal", {"f2_instance.json"}},
        {"check-monoidal", {"finset_instance.json"}},
        {"check-algebra", {"f2_upper_triangular.json"}},
        {"derive-antipode", {"f2_c3.json"}},
        {"shear", {"f2_s3.json"}},
        {"shear", {"f2_idempotent.json"}},
        {"operators-audit", {}},
        {"segal", {}},
        {"segal", {"f2_instance.json"}},
        {"nerve", {"three_objects.json"}},
        {"hc-nerve", {"ordinal_2.json"}},
        {"hc-nerve", {"cube_3.json"}},
        {"horn-audit", {"arrow.json"}},
        {"horn-audit", {"delta_2.json"}},
        {"interchange-audit", {"f2_c2.json"}},
        {"interchange-audit", {"f2_upper_triangular.json"}},
        {"interchange-audit", {"finset_c3.json"}},
        {"coproduct-audit", {"f2_c2.json", "f2_c3.json"}},
    };
    for (auto const& file : kBialgebras) {
      s.push_back({"check-bialgebra", {file}});
      s.push_back({"check-hopf", {file}});
    }
    return s;
  }

  Verdict determinism() {
    Verdict                  v;
    auto const               cases = suite();
    std::vector<std::string> first;
    for (auto const& [command, inputs] : cases) {
      first.push_back(cli::without_timing(run_cli(command, inputs).report).dump());
    }
    std::size_t i = 0;
    for (auto const& [command, inputs] : cases) {
      auto const again = cli::without_timing(run_cli(command, inputs).report).dump();
      v.require(again == first[i++], command + " differs between runs");
    }
    if (v.pass) {
      v.detail = std::to_string(cases.size()) + " invocations, identical twice";
    }
    return v;
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Verdict()>>> const criteria = {
      {"Hopf positives", hopf_positives},
      {"Hopf negative", hopf_negative},
      {"antipode/shear round trip", round_trip},
      {"shear identities", shear_lemmas},
      {"monoid sweep", monoid_sweep},
      {"operator-category audit", operators},
      {"simplicial audit", simplicial},
      {"discrete hc-nerve identification", discrete_hc},
      {"interchange audit", interchange},
      {"pairing and pushforward", pairing},
      {"determinism", determinism},
  };
  int failures = 0;
  for (auto const& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (std::exception const& e) {
      v.pass   = false;
      v.detail = std::string("threw: ") + e.what();
    }
    std::printf("[PRIMARY] %s: %s (%s)\n", name.c_str(), v.pass ? "PASS" : "FAIL",
                v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass && !kUnattainable.contains(name)) {
      ++failures;
    }
  }
  std::printf("%d unexpected failure(s); known unattainable:", failures);
  for (auto const& name : kUnattainable) {
    std::printf(" %s", name.c_str());
  }
  std::printf("\n");
  return failures == 0 ? 0 : 1;
}
