#include "catcheck/io/description.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "catcheck/algebra/linearize.hpp"

namespace catcheck {

  namespace {

    constexpr std::array kKinds{"algebra",       "bialgebra",      "category",
                                "finite_category", "simplicial_set", "coherent_cube"};

    std::string pointer_token(std::string_view key) {
      std::string out;
      for (char ch : key) {
        if (ch == '~') {
          out += "~0";
        } else if (ch == '/') {
          out += "~1";
        } else {
          out += ch;
        }
      }
      return out;
    }

    // Walks well-formed JSON text and records the line on which every value
    // starts, keyed by JSON pointer.
    class LineScanner {
     public:
      LineScanner(std::string const& text, std::map<std::string, std::size_t>& out)
          : _text(text), _out(out) {}

      void run() {
        value("");
      }

     private:
      std::string const&                  _text;
      std::map<std::string, std::size_t>& _out;
      std::size_t                         _pos  = 0;
      std::size_t                         _line = 1;

      [[nodiscard]] char peek() const {
        return _pos < _text.size() ? _text[_pos] : '\0';
      }
      void advance() {
        if (peek() == '\n') {
          ++_line;
        }
        ++_pos;
      }
      void skip_space() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(peek()))) {
          advance();
        }
      }
      std::string string() {
        std::string out;
        advance();
        while (_pos < _text.size() && peek() != '"') {
          if (peek() == '\\') {
            advance();
          }
          out += peek();
          advance();
        }
        advance();
        return out;
      }
      void value(std::string const& path) {
        skip_space();
        _out.emplace(path, _line);
        char const ch = peek();
        if (ch == '{') {
          advance();
          skip_space();
          while (peek() != '}' && _pos < _text.size()) {
            auto const key = string();
            skip_space();
            advance();  // ':'
            value(path + "/" + pointer_token(key));
            skip_space();
            if (peek() == ',') {
              advance();
              skip_space();
            }
          }
          advance();
        } else if (ch == '[') {
          advance();
          skip_space();
          std::size_t index = 0;
          while (peek() != ']' && _pos < _text.size()) {
            value(path + "/" + std::to_string(index++));
            skip_space();
            if (peek() == ',') {
              advance();
            }
            skip_space();
          }
          advance();
        } else if (ch == '"') {
          string();
        } else {
          while (_pos < _text.size() && peek() != ',' && peek() != ']' && peek() != '}'
                 && !std::isspace(static_cast<unsigned char>(peek()))) {
            advance();
          }
        }
      }
    };

    std::size_t line_at_offset(std::string const& text, std::size_t offset) {
      std::size_t line = 1;
      for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        line += text[i] == '\n';
      }
      return line;
    }

    std::size_t read_size(Document const& doc, std::string const& pointer) {
      auto const& v = doc.at(pointer, "required");
      if (!v.is_number_unsigned()) {
        doc.fail(pointer, "must be a non-negative integer");
      }
      return v.get<std::size_t>();
    }

    Scalar read_scalar(Document const& doc, std::string const& pointer, Ring const& ring) {
      auto const& v = doc.root().at(nlohmann::json::json_pointer(pointer));
      try {
        if (v.is_number_integer()) {
          return ring.from_int(v.get<std::int64_t>());
        }
        if (v.is_string()) {
          auto const   s     = v.get<std::string>();
          auto const   slash = s.find('/');
          std::int64_t num   = std::stoll(s.substr(0, slash));
          std::int64_t den   = slash == std::string::npos ? 1 : std::stoll(s.substr(slash + 1));
          return ring.from_fraction(num, den);
        }
      } catch (std::exception const& e) {
        doc.fail(pointer, std::string("scalar must be an integer or \"p/q\": ") + e.what());
      }
      doc.fail(pointer, "scalar must be an integer or \"p/q\"");
    }

    Matrix read_matrix(Document const& doc, std::string const& pointer, Ring const& ring,
                       std::optional<std::size_t> domain   = {},
                       std::optional<std::size_t> codomain = {}) {
      auto const& v        = doc.at(pointer, "required");
      std::string rows_ptr = pointer;
      if (v.is_object()) {
        rows_ptr = pointer + "/matrix";
        (void)doc.at(rows_ptr, "a matrix object needs \"matrix\"");
        if (v.contains("domain")) {
          domain = read_size(doc, pointer + "/domain");
        }
        if (v.contains("codomain")) {
          codomain = read_size(doc, pointer + "/codomain");
        }
      }
      auto const& rows = doc.root().at(nlohmann::json::json_pointer(rows_ptr));
      if (!rows.is_array()) {
        doc.fail(rows_ptr, "a matrix is an array of rows");
      }
      std::size_t const r = rows.size();
      std::size_t const c = r ? (rows[0].is_array() ? rows[0].size() : 0) : domain.value_or(0);
      if (codomain && *codomain != r) {
        doc.fail(rows_ptr, "row count must equal the codomain " + std::to_string(*codomain));
      }
      if (domain && *domain != c) {
        doc.fail(rows_ptr, "column count must equal the domain " + std::to_string(*domain));
      }
      Matrix out(ring, r, c);
      for (std::size_t i = 0; i < r; ++i) {
        auto const row_ptr = rows_ptr + "/" + std::to_string(i);
        if (!rows[i].is_array() || rows[i].size() != c) {
          doc.fail(row_ptr, "every row must have " + std::to_string(c) + " entries");
        }
        for (std::size_t j = 0; j < c; ++j) {
          out.set(i, j, read_scalar(doc, row_ptr + "/" + std::to_string(j), ring));
        }
      }
      return out;
    }

    Function read_function(Document const& doc, std::string const& pointer,
                           std::optional<std::size_t> domain   = {},
                           std::optional<std::size_t> codomain = {}) {
      auto const& v = doc.at(pointer, "required");
      if (!v.is_object()) {
        doc.fail(pointer, "a function is an object with \"codomain\" and \"table\"");
      }
      auto const cod = read_size(doc, pointer + "/codomain");
      auto const& t  = doc.at(pointer + "/table", "a function needs \"table\"");
      if (!t.is_array()) {
        doc.fail(pointer + "/table", "table must be an array");
      }
      std::vector<std::size_t> table;
      for (std::size_t i = 0; i < t.size(); ++i) {
        auto const x = read_size(doc, pointer + "/table/" + std::to_string(i));
        if (x >= cod) {
          doc.fail(pointer + "/table/" + std::to_string(i), "value outside the codomain");
        }
        table.push_back(x);
      }
      if (v.contains("domain") && read_size(doc, pointer + "/domain") != table.size()) {
        doc.fail(pointer + "/table", "table length must equal the domain");
      }
      if (domain && *domain != table.size()) {
        doc.fail(pointer + "/table", "table length must be " + std::to_string(*domain));
      }
      if (codomain && *codomain != cod) {
        doc.fail(pointer + "/codomain", "codomain must be " + std::to_string(*codomain));
      }
      return Function::from_table(cod, std::move(table));
    }

    template <typename T>
    std::vector<T> read_array(Document const& doc, std::string const& pointer,
                              std::string const& rule) {
      auto const& v = doc.at(pointer, "required");
      try {
        return v.get<std::vector<T>>();
      } catch (nlohmann::json::exception const&) {
        doc.fail(pointer, rule);
      }
    }

    Monoid read_monoid(Document const& doc) {
      auto table = read_array<std::vector<std::size_t>>(doc, "/monoid/table",
                                                        "a square table of element indices");
      std::vector<std::string> labels;
      if (doc.root().at("monoid").contains("elements")) {
        labels = read_array<std::string>(doc, "/monoid/elements", "elements are labels");
      }
      try {
        return Monoid::from_table(std::move(table), std::move(labels));
      } catch (Error const& e) {
        doc.fail("/monoid/table", e.what());
      }
    }

    enum class Base { matrix, finset };

    Base read_base(Document const& doc) {
      if (!doc.root().contains("category")) {
        return Base::matrix;
      }
      auto const& type = doc.at("/category/type", "category needs \"type\"");
      if (type == "matrix") {
        return Base::matrix;
      }
      if (type == "finset") {
        return Base::finset;
      }
      doc.fail("/category/type", "type must be \"matrix\" or \"finset\"");
    }

    template <typename C, typename ReadFn>
    AlgebraInstance<C> read_structure(Document const& doc, C category, ReadFn read) {
      auto const        n    = read_size(doc, "/carrier");
      auto const        one  = category.unit();
      auto const        nn   = category.tensor(n, n);
      auto const&       root = doc.root();
      AlgebraStructure<C> a{n, read("/mu", nn, n), read("/eta", one, n), false};
      a.commutative = category.equal(category.compose(a.mu, category.braiding(n, n)), a.mu);
      AlgebraInstance<C> out{doc.name(), category, a, std::nullopt, std::nullopt};
      if (doc.kind() == "bialgebra") {
        Bialgebra<C> b{doc.name(), n, a.mu, a.eta, read("/delta", n, nn), read("/epsilon", n, one),
                       std::nullopt, a.commutative};
        if (root.contains("antipode")) {
          b.antipode = read("/antipode", n, n);
        }
        out.bialgebra = std::move(b);
      }
      return out;
    }

  }  // namespace

  DescriptionError::DescriptionError(std::string path, std::size_t line, std::string rule)
      : Error((path.empty() ? std::string("/") : path) + ":" + std::to_string(line) + ": "
              + rule),
        _path(std::move(path)),
        _line(line),
        _rule(std::move(rule)) {}

  Document Document::parse(std::string text) {
    Document doc;
    doc._text = std::move(text);
    try {
      doc._root = nlohmann::json::parse(doc._text);
    } catch (nlohmann::json::parse_error const& e) {
      throw DescriptionError("", line_at_offset(doc._text, e.byte ? e.byte - 1 : 0),
                             "well-formed JSON: " + std::string(e.what()));
    }
    LineScanner(doc._text, doc._lines).run();
    if (!doc._root.is_object()) {
      doc.fail("", "a description is a JSON object");
    }
    auto const& schema = doc.at("/schema", "a description needs \"schema\"");
    if (schema != std::string(kSchemaTag)) {
      doc.fail("/schema", "schema must be \"" + std::string(kSchemaTag) + "\"");
    }
    auto const& kind = doc.at("/kind", "a description needs \"kind\"");
    if (!kind.is_string()
        || std::find(kKinds.begin(), kKinds.end(), kind.get<std::string>()) == kKinds.end()) {
      doc.fail("/kind", "kind must be one of algebra, bialgebra, category, finite_category, "
                        "simplicial_set, coherent_cube");
    }
    doc._kind = kind.get<std::string>();
    return doc;
  }

  Document Document::load(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw DescriptionError("", 0, "readable file: cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
  }

  std::string Document::name() const {
    if (_root.contains("name") && _root["name"].is_string()) {
      return _root["name"].get<std::string>();
    }
    return _kind;
  }

  std::size_t Document::line_of(std::string const& pointer) const {
    std::string p = pointer;
    while (true) {
      if (auto it = _lines.find(p); it != _lines.end()) {
        return it->second;
      }
      if (p.empty()) {
        return 0;
      }
      p = p.substr(0, p.rfind('/'));
    }
  }

  void Document::fail(std::string const& pointer, std::string rule) const {
    throw DescriptionError(pointer, line_of(pointer), std::move(rule));
  }

  nlohmann::json const& Document::at(std::string const& pointer, std::string const& rule) const {
    nlohmann::json::json_pointer const ptr(pointer);
    if (!_root.contains(ptr)) {
      fail(pointer, rule);
    }
    return _root.at(ptr);
  }

  Ring read_ring(Document const& doc, std::string const& pointer, LoadOptions const& options) {
    auto prime = [&](std::uint64_t p) {
      auto const q = options.prime_override.value_or(p);
      if (!is_prime(q)) {
        doc.fail(pointer, "ring prime " + std::to_string(q) + " is not prime");
      }
      return Ring::prime_field(q);
    };
    if (!doc.root().contains(nlohmann::json::json_pointer(pointer))) {
      return prime(options.default_prime);
    }
    auto const& v = doc.root().at(nlohmann::json::json_pointer(pointer));
    if (v == "rationals") {
      return Ring::rationals();
    }
    if (v.is_object() && v.contains("prime") && v["prime"].is_number_unsigned()) {
      return prime(v["prime"].get<std::uint64_t>());
    }
    doc.fail(pointer, "ring must be \"rationals\" or {\"prime\": p}");
  }

  AnyAlgebra read_algebra(Document const& doc, LoadOptions const& options) {
    if (doc.kind() != "algebra" && doc.kind() != "bialgebra") {
      doc.fail("/kind", "expected an algebra or bialgebra description");
    }
    auto const base = read_base(doc);
    if (doc.root().contains("monoid")) {
      auto const m = read_monoid(doc);
      if (base == Base::finset) {
        FinSetCategory c;
        auto           b = monoid_bialgebra(m, doc.name());
        AlgebraInstance<FinSetCategory> out{doc.name(), c, b.algebra(), std::nullopt, m};
        if (doc.kind() == "bialgebra") {
          out.bialgebra = std::move(b);
        }
        return out;
      }
      auto const     ring = read_ring(doc, "/category/ring", options);
      MatrixCategory c(ring);
      auto           b = monoid_algebra(m, ring, doc.name());
      AlgebraInstance<MatrixCategory> out{doc.name(), c, b.algebra(), std::nullopt, m};
      if (doc.kind() == "bialgebra") {
        out.bialgebra = std::move(b);
      }
      return out;
    }
    if (base == Base::finset) {
      return read_structure(doc, FinSetCategory{},
                            [&](std::string const& p, std::size_t from, std::size_t to) {
                              return read_function(doc, p, from, to);
                            });
    }
    auto const ring = read_ring(doc, "/category/ring", options);
    return read_structure(doc, MatrixCategory(ring),
                          [&](std::string const& p, std::size_t from, std::size_t to) {
                            return read_matrix(doc, p, ring, from, to);
                          });
  }

  AnyMonoidal read_monoidal(Document const& doc, LoadOptions const& options) {
    if (doc.kind() != "category") {
      doc.fail("/kind", "expected a category description");
    }
    auto const objects  = read_array<std::size_t>(doc, "/objects", "objects are sizes");
    auto const& morphs  = doc.at("/morphisms", "a category description needs \"morphisms\"");
    if (!morphs.is_array()) {
      doc.fail("/morphisms", "morphisms must be an array");
    }
    auto read_all = [&](auto category, auto read) {
      using C = decltype(category);
      MonoidalInstance<C> out{doc.name(), category, objects, {}, {}};
      for (std::size_t i = 0; i < morphs.size(); ++i) {
        auto const p = "/morphisms/" + std::to_string(i);
        out.morphism_names.push_back(morphs[i].value("name", "m" + std::to_string(i)));
        out.morphisms.push_back(read(p));
      }
      return out;
    };
    if (read_base(doc) == Base::finset) {
      return read_all(FinSetCategory{}, [&](std::string const& p) { return read_function(doc, p); });
    }
    auto const ring = read_ring(doc, "/category/ring", options);
    return read_all(MatrixCategory(ring),
                    [&](std::string const& p) { return read_matrix(doc, p, ring); });
  }

  FiniteCategory read_finite_category(Document const& doc) {
    if (doc.kind() != "finite_category") {
      doc.fail("/kind", "expected a finite_category description");
    }
    auto const& root = doc.root();
    try {
      if (root.contains("monoid")) {
        auto const m = read_monoid(doc);
        return FiniteCategory::from_monoid(m.table(), m.labels());
      }
      if (root.contains("ordinal")) {
        return FiniteCategory::ordinal(read_size(doc, "/ordinal"));
      }
      if (root.contains("poset")) {
        auto leq = read_array<std::vector<bool>>(doc, "/poset/leq", "leq is a boolean matrix");
        std::vector<std::string> labels;
        if (root["poset"].contains("labels")) {
          labels = read_array<std::string>(doc, "/poset/labels", "labels must be strings");
        }
        return FiniteCategory::from_poset(leq, labels);
      }
    } catch (DescriptionError const&) {
      throw;
    } catch (Error const& e) {
      doc.fail("", e.what());
    }
    auto const objects = read_array<std::string>(doc, "/objects", "objects are labels");
    auto const& arrows = doc.at("/arrows", "needs \"monoid\", \"ordinal\", \"poset\" or \"arrows\"");
    std::map<std::string, std::size_t> object_index, arrow_index;
    for (std::size_t i = 0; i < objects.size(); ++i) {
      object_index.emplace(objects[i], i);
    }
    std::vector<FiniteCategory::Arrow> list;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      auto const p    = "/arrows/" + std::to_string(i);
      auto const name = doc.at(p + "/name", "an arrow needs \"name\"").get<std::string>();
      auto end = [&](char const* field) {
        auto const& v = doc.at(p + "/" + field, "an arrow needs \"from\" and \"to\"");
        if (!v.is_string() || !object_index.contains(v.get<std::string>())) {
          doc.fail(p + "/" + field, "must name an object");
        }
        return object_index.at(v.get<std::string>());
      };
      if (!arrow_index.emplace(name, i).second) {
        doc.fail(p + "/name", "arrow names must be unique");
      }
      list.push_back({end("from"), end("to"), name});
    }
    auto lookup = [&](std::string const& pointer) {
      auto const& v = doc.at(pointer, "required");
      if (!v.is_string() || !arrow_index.contains(v.get<std::string>())) {
        doc.fail(pointer, "must name an arrow");
      }
      return arrow_index.at(v.get<std::string>());
    };
    std::vector<std::size_t> identities;
    for (std::size_t i = 0; i < objects.size(); ++i) {
      identities.push_back(lookup("/identities/" + std::to_string(i)));
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> table;
    auto const& composition = doc.at("/composition", "needs \"composition\": [g, f, g∘f] triples");
    for (std::size_t i = 0; i < composition.size(); ++i) {
      auto const p = "/composition/" + std::to_string(i);
      table[{lookup(p + "/0"), lookup(p + "/1")}] = lookup(p + "/2");
    }
    try {
      return FiniteCategory::generate(
          objects, list, identities, [&](std::size_t g, std::size_t f) -> std::size_t {
            if (identities[list[g].domain] == g) {
              return f;
            }
            if (identities[list[f].codomain] == f) {
              return g;
            }
            auto it = table.find({g, f});
            if (it == table.end()) {
              doc.fail("/composition", "missing composite " + list[g].label + "∘" + list[f].label);
            }
            return it->second;
          });
    } catch (DescriptionError const&) {
      throw;
    } catch (Error const& e) {
      doc.fail("/composition", e.what());
    }
  }

  TruncatedSimplicialSet read_simplicial_set(Document const& doc) {
    if (doc.kind() != "simplicial_set") {
      doc.fail("/kind", "expected a simplicial_set description");
    }
    try {
      return TruncatedSimplicialSet::from_json(doc.at("/set", "needs \"set\""));
    } catch (DescriptionError const&) {
      throw;
    } catch (Error const& e) {
      doc.fail("/set", e.what());
    }
  }

  CoherentCube read_coherent_cube(Document const& doc) {
    if (doc.kind() != "coherent_cube") {
      doc.fail("/kind", "expected a coherent_cube description");
    }
    auto const n = read_size(doc, "/n");
    if (n > CoherentCube::max_n) {
      doc.fail("/n", "n must be at most " + std::to_string(CoherentCube::max_n));
    }
    return CoherentCube(n);
  }

}  // namespace catcheck
