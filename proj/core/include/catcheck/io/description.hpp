#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "catcheck/algebra/algebra.hpp"
#include "catcheck/algebra/monoid.hpp"
#include "catcheck/error.hpp"
#include "catcheck/finite_category.hpp"
#include "catcheck/finset_category.hpp"
#include "catcheck/matrix_category.hpp"
#include "catcheck/simplicial/coherent_cube.hpp"
#include "catcheck/simplicial/simplicial_set.hpp"

namespace catcheck {

  inline constexpr std::string_view kSchemaTag = "catcheck/v1";

  // A description that does not parse or violates the schema. `path` is a
  // JSON pointer into the document and `line` the 1-based line where the
  // offending value starts (0 when unknown).
  class DescriptionError : public Error {
   public:
    DescriptionError(std::string path, std::size_t line, std::string rule);

    [[nodiscard]] std::string const& path() const noexcept {
      return _path;
    }
    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }
    [[nodiscard]] std::string const& rule() const noexcept {
      return _rule;
    }

   private:
    std::string _path;
    std::size_t _line;
    std::string _rule;
  };

  // A parsed description with the line on which every value starts.
  class Document {
   public:
    // Throws DescriptionError on malformed JSON, a missing or foreign
    // "schema" tag, or an unknown "kind".
    static Document parse(std::string text);
    static Document load(std::filesystem::path const& path);

    [[nodiscard]] nlohmann::json const& root() const noexcept {
      return _root;
    }
    [[nodiscard]] std::string const& kind() const noexcept {
      return _kind;
    }
    [[nodiscard]] std::string const& text() const noexcept {
      return _text;
    }
    [[nodiscard]] std::string name() const;
    // The line of the value at `pointer`, or of its nearest recorded
    // ancestor.
    [[nodiscard]] std::size_t line_of(std::string const& pointer) const;

    [[noreturn]] void fail(std::string const& pointer, std::string rule) const;
    // root()[pointer], or a DescriptionError naming `rule`.
    [[nodiscard]] nlohmann::json const& at(std::string const& pointer,
                                           std::string const& rule) const;

   private:
    std::string                        _text;
    nlohmann::json                     _root;
    std::string                        _kind;
    std::map<std::string, std::size_t> _lines;
  };

  struct LoadOptions {
    // Prime used when a matrix description does not name its ring.
    std::uint64_t default_prime = 2;
    // When set, replaces the ring of every prime-field description.
    std::optional<std::uint64_t> prime_override;
  };

  // An algebra, and when the description has one, its bialgebra. Matrix
  // descriptions may give a monoid table instead of structure maps, in
  // which case `monoid` is set and the structure is F[M].
  template <SymmetricMonoidalCategory C>
  struct AlgebraInstance {
    std::string                 name;
    C                           category;
    AlgebraStructure<C>         algebra;
    std::optional<Bialgebra<C>> bialgebra;
    std::optional<Monoid>       monoid;
  };

  using AnyAlgebra = std::variant<AlgebraInstance<MatrixCategory>, AlgebraInstance<FinSetCategory>>;

  template <SymmetricMonoidalCategory C>
  struct MonoidalInstance {
    std::string                       name;
    C                                 category;
    std::vector<typename C::Object>   objects;
    std::vector<typename C::Morphism> morphisms;
    std::vector<std::string>          morphism_names;
  };

  using AnyMonoidal
      = std::variant<MonoidalInstance<MatrixCategory>, MonoidalInstance<FinSetCategory>>;

  // Kinds "algebra" and "bialgebra".
  [[nodiscard]] AnyAlgebra read_algebra(Document const& doc, LoadOptions const& options = {});
  // Kind "category": a symmetric monoidal instance with named morphisms.
  [[nodiscard]] AnyMonoidal read_monoidal(Document const& doc, LoadOptions const& options = {});
  // Kind "finite_category".
  [[nodiscard]] FiniteCategory read_finite_category(Document const& doc);
  // Kind "simplicial_set".
  [[nodiscard]] TruncatedSimplicialSet read_simplicial_set(Document const& doc);
  // Kind "coherent_cube".
  [[nodiscard]] CoherentCube read_coherent_cube(Document const& doc);

  [[nodiscard]] Ring read_ring(Document const& doc, std::string const& pointer,
                               LoadOptions const& options);

}  // namespace catcheck
