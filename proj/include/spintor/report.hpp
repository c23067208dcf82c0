// Pass/fail reports carried by the verification sweeps.

#ifndef SPINTOR_REPORT_HPP_
#define SPINTOR_REPORT_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace spintor {

// Accumulates the outcome of one verification suite.  Witness messages are
// only materialized on failure, so hot loops can pass a lambda; the first
// few witnesses are kept verbatim and the rest are only counted.
struct CheckReport {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> witnesses; // first kept_max failure descriptions

  static constexpr std::size_t kept_max = 16;

  explicit CheckReport(std::string suite) : name(std::move(suite)) {}

  bool ok() const { return failed == 0; }

  template <class WitnessFn>
  void check(bool cond, WitnessFn&& witness) {
    ++checks;
    if (cond)
      return;
    ++failed;
    if (witnesses.size() < kept_max)
      witnesses.push_back(witness());
  }

  void check_eq(std::uint64_t got, std::uint64_t want, const std::string& what) {
    check(got == want, [&] {
      return what + ": got " + std::to_string(got) + ", want " +
             std::to_string(want);
    });
  }

  std::string summary() const {
    std::string line = (ok() ? "pass" : "FAIL") + std::string(" ") + name +
                       " (" + std::to_string(checks) + " checks";
    if (!ok())
      line += ", " + std::to_string(failed) + " failed";
    line += ")";
    return line;
  }
};

} // namespace spintor

#endif // SPINTOR_REPORT_HPP_
