#include "catcheck/report.hpp"

#include <sstream>

#include "catcheck/witness.hpp"

namespace catcheck {

  std::string_view to_string(Status s) noexcept {
    switch (s) {
      case Status::pass:
        return "pass";
      case Status::fail:
        return "fail";
      case Status::refused:
        return "refused";
      case Status::skipped:
        return "skipped";
    }
    return "unknown";
  }

  nlohmann::json to_json(Witness const& w) {
    struct Visitor {
      nlohmann::json operator()(KernelVector const& k) const {
        nlohmann::json v = nlohmann::json::array();
        for (auto const& s : k.entries) {
          if (s.den == 1) {
            v.push_back(s.num);
          } else {
            v.push_back(k.ring.to_string(s));
          }
        }
        return {{"kind", "kernel_vector"}, {"ring", k.ring.name()}, {"vector", v}};
      }
      nlohmann::json operator()(Collision const& c) const {
        return {{"kind", "collision"},
                {"points", {c.first, c.second}},
                {"image", c.image}};
      }
      nlohmann::json operator()(Omission const& o) const {
        return {{"kind", "omission"}, {"missing", o.missing}};
      }
      nlohmann::json operator()(ShapeWitness const& s) const {
        return {{"kind", "shape"}, {"domain", s.domain}, {"codomain", s.codomain}};
      }
    };
    return std::visit(Visitor{}, w);
  }

  CheckReport& CheckReport::add(CheckOutcome outcome) {
    _checks.push_back(std::move(outcome));
    return *this;
  }

  CheckReport& CheckReport::pass(std::string name, std::string detail) {
    return add({std::move(name), Status::pass, std::move(detail), nullptr});
  }

  CheckReport& CheckReport::fail(std::string    name,
                                 std::string    detail,
                                 nlohmann::json witness) {
    return add(
        {std::move(name), Status::fail, std::move(detail), std::move(witness)});
  }

  CheckReport& CheckReport::refuse(std::string    name,
                                   std::string    detail,
                                   nlohmann::json witness) {
    return add({std::move(name),
                Status::refused,
                std::move(detail),
                std::move(witness)});
  }

  CheckReport& CheckReport::skip(std::string name, std::string detail) {
    return add({std::move(name), Status::skipped, std::move(detail), nullptr});
  }

  CheckReport& CheckReport::expect(bool           ok,
                                   std::string    name,
                                   std::string    detail,
                                   nlohmann::json witness) {
    if (ok) {
      return pass(std::move(name), std::move(detail));
    }
    return fail(std::move(name), std::move(detail), std::move(witness));
  }

  CheckReport& CheckReport::merge(CheckReport const& other,
                                  std::string_view   prefix) {
    for (auto const& c : other._checks) {
      CheckOutcome copy = c;
      if (!prefix.empty()) {
        copy.name = std::string(prefix) + "/" + copy.name;
      }
      _checks.push_back(std::move(copy));
    }
    return *this;
  }

  bool CheckReport::passed() const noexcept {
    for (auto const& c : _checks) {
      if (c.status == Status::fail || c.status == Status::refused) {
        return false;
      }
    }
    return true;
  }

  CheckOutcome const* CheckReport::find(std::string_view name) const {
    for (auto const& c : _checks) {
      if (c.name == name) {
        return &c;
      }
    }
    return nullptr;
  }

  CheckOutcome const* CheckReport::first_failure() const {
    for (auto const& c : _checks) {
      if (c.status == Status::fail || c.status == Status::refused) {
        return &c;
      }
    }
    return nullptr;
  }

  std::size_t CheckReport::count(Status s) const noexcept {
    std::size_t n = 0;
    for (auto const& c : _checks) {
      n += (c.status == s);
    }
    return n;
  }

  nlohmann::json CheckReport::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (auto const& c : _checks) {
      nlohmann::json j = {{"name", c.name}, {"status", to_string(c.status)}};
      if (!c.detail.empty()) {
        j["detail"] = c.detail;
      }
      if (!c.witness.is_null()) {
        j["witness"] = c.witness;
      }
      out.push_back(std::move(j));
    }
    return out;
  }

  std::string CheckReport::to_text() const {
    std::ostringstream os;
    for (auto const& c : _checks) {
      os << to_string(c.status) << "  " << c.name;
      if (!c.detail.empty()) {
        os << ": " << c.detail;
      }
      os << '\n';
      if (!c.witness.is_null()) {
        os << "      witness: " << c.witness.dump() << '\n';
      }
    }
    return os.str();
  }

}  // namespace catcheck
