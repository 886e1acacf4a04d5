#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace catcheck {

  enum class Status { pass, fail, refused, skipped };

  [[nodiscard]] std::string_view to_string(Status s) noexcept;

  // The outcome of one named check. Failures and refusals carry a witness
  // rendered in the same JSON schema as the inputs.
  struct CheckOutcome {
    std::string    name;
    Status         status = Status::pass;
    std::string    detail;
    nlohmann::json witness;
  };

  // An ordered list of check outcomes. The order is the order in which the
  // checks ran, which is deterministic for every producer in the library.
  class CheckReport {
   public:
    CheckReport& pass(std::string name, std::string detail = {});
    CheckReport& fail(std::string    name,
                      std::string    detail,
                      nlohmann::json witness = nullptr);
    CheckReport& refuse(std::string    name,
                        std::string    detail,
                        nlohmann::json witness = nullptr);
    CheckReport& skip(std::string name, std::string detail);
    // Records pass or fail depending on `ok`.
    CheckReport& expect(bool           ok,
                        std::string    name,
                        std::string    detail  = {},
                        nlohmann::json witness = nullptr);
    CheckReport& add(CheckOutcome outcome);
    // Appends the outcomes of `other`, with names prefixed by `prefix/`.
    CheckReport& merge(CheckReport const& other, std::string_view prefix = {});

    // True when no check failed or was refused.
    [[nodiscard]] bool passed() const noexcept;
    [[nodiscard]] std::vector<CheckOutcome> const& checks() const noexcept {
      return _checks;
    }
    [[nodiscard]] CheckOutcome const* find(std::string_view name) const;
    [[nodiscard]] CheckOutcome const* first_failure() const;
    [[nodiscard]] std::size_t         count(Status s) const noexcept;

    [[nodiscard]] nlohmann::json to_json() const;
    [[nodiscard]] std::string    to_text() const;

   private:
    std::vector<CheckOutcome> _checks;
  };

}  // namespace catcheck
