#include "catcheck/finset_category.hpp"

#include <limits>
#include <string>

namespace catcheck {

  Function Function::from_table(std::size_t              codomain,
                                std::vector<std::size_t> table) {
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= codomain) {
        throw ShapeError("function value " + std::to_string(table[i])
                         + " at " + std::to_string(i)
                         + " outside codomain of size "
                         + std::to_string(codomain));
      }
    }
    std::size_t const domain = table.size();
    return Function{domain, codomain, std::move(table)};
  }

  Function FinSetCategory::identity(Object a) const {
    Function f{a, a, std::vector<std::size_t>(a)};
    for (std::size_t i = 0; i < a; ++i) {
      f.table[i] = i;
    }
    return f;
  }

  namespace {
    std::string render(Function const& f) {
      std::string out = "[";
      for (std::size_t i = 0; i < f.table.size(); ++i) {
        out += (i == 0 ? "" : ", ") + std::to_string(f.table[i]);
      }
      return out + "]";
    }
  }  // namespace

  Function FinSetCategory::compose(Function const& g, Function const& f) const {
    if (f.codomain != g.domain) {
      throw CompositionError("g∘f undefined: f " + render(f) + " : "
                             + std::to_string(f.domain) + " → "
                             + std::to_string(f.codomain) + ", g "
                             + render(g) + " : " + std::to_string(g.domain)
                             + " → " + std::to_string(g.codomain));
    }
    Function h{f.domain, g.codomain, std::vector<std::size_t>(f.domain)};
    for (std::size_t i = 0; i < f.domain; ++i) {
      h.table[i] = g.table[f.table[i]];
    }
    return h;
  }

  Function FinSetCategory::tensor(Function const& f, Function const& g) const {
    Function h{f.domain * g.domain,
               f.codomain * g.codomain,
               std::vector<std::size_t>(f.domain * g.domain)};
    for (std::size_t i = 0; i < f.domain; ++i) {
      for (std::size_t k = 0; k < g.domain; ++k) {
        h.table[i * g.domain + k] = f.table[i] * g.codomain + g.table[k];
      }
    }
    return h;
  }

  Function FinSetCategory::braiding(Object a, Object b) const {
    Function h{a * b, a * b, std::vector<std::size_t>(a * b)};
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t k = 0; k < b; ++k) {
        h.table[i * b + k] = k * a + i;
      }
    }
    return h;
  }

  Function
  FinSetCategory::permute_factors(std::span<Object const>      objects,
                                  std::span<std::size_t const> perm) const {
    std::size_t const n     = objects.size();
    std::size_t       total = 1;
    for (auto d : objects) {
      total *= d;
    }
    std::vector<std::size_t> out_stride(n, 1);
    for (std::size_t t = n; t-- > 1;) {
      out_stride[t - 1] = out_stride[t] * objects[perm[t]];
    }
    std::vector<std::size_t> where(n);
    for (std::size_t t = 0; t < n; ++t) {
      where[perm[t]] = t;
    }
    Function                 h{total, total, std::vector<std::size_t>(total)};
    std::vector<std::size_t> digits(n, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t out = 0;
      for (std::size_t i = 0; i < n; ++i) {
        out += digits[i] * out_stride[where[i]];
      }
      h.table[idx] = out;
      for (std::size_t i = n; i-- > 0;) {
        if (++digits[i] < objects[i]) {
          break;
        }
        digits[i] = 0;
      }
    }
    return h;
  }

  Invertibility<Function>
  FinSetCategory::is_invertible(Function const& f) const {
    Invertibility<Function>  result;
    constexpr auto           none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> preimage(f.codomain, none);
    for (std::size_t x = 0; x < f.domain; ++x) {
      std::size_t const y = f.table[x];
      if (preimage[y] != none) {
        result.witness = Collision{preimage[y], x, y};
        return result;
      }
      preimage[y] = x;
    }
    for (std::size_t y = 0; y < f.codomain; ++y) {
      if (preimage[y] == none) {
        result.witness = Omission{y};
        return result;
      }
    }
    result.invertible = true;
    result.inverse    = Function{f.codomain, f.domain, std::move(preimage)};
    return result;
  }

  Function FinSetCategory::diagonal(Object a) const {
    Function h{a, a * a, std::vector<std::size_t>(a)};
    for (std::size_t i = 0; i < a; ++i) {
      h.table[i] = i * a + i;
    }
    return h;
  }

  Function FinSetCategory::terminal(Object a) const {
    return Function{a, 1, std::vector<std::size_t>(a, 0)};
  }

  Function FinSetCategory::point(Object a, std::size_t element) const {
    if (element >= a) {
      throw ShapeError("element " + std::to_string(element)
                       + " outside a set of size " + std::to_string(a));
    }
    return Function{1, a, {element}};
  }

  std::uint64_t FinSetCategory::hom_size(Object a, Object b) const {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < a; ++i) {
      if (b == 0) {
        return 0;
      }
      if (out > std::numeric_limits<std::uint64_t>::max() / b) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      out *= b;
    }
    return out;
  }

  std::vector<Function> FinSetCategory::enumerate_hom(Object a,
                                                      Object b) const {
    std::uint64_t const size = hom_size(a, b);
    if (size > kDefaultEnumerationLimit) {
      throw BoundError("hom(" + std::to_string(a) + ", " + std::to_string(b)
                       + ") in finite sets is too large to enumerate");
    }
    std::vector<Function> out;
    out.reserve(size);
    std::vector<std::size_t> digits(a, 0);
    for (std::uint64_t n = 0; n < size; ++n) {
      out.push_back(Function{a, b, digits});
      for (std::size_t c = a; c-- > 0;) {
        if (++digits[c] < b) {
          break;
        }
        digits[c] = 0;
      }
    }
    return out;
  }

  nlohmann::json FinSetCategory::to_json(Function const& f) const {
    return {{"domain", f.domain}, {"codomain", f.codomain}, {"table", f.table}};
  }

}  // namespace catcheck
