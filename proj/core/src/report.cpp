#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "clausen/identities.hpp"

namespace clausen {

namespace {

// Short preview of a long decimal string for the text table.
std::string preview(const Real& x, int places) {
  std::string s = x.to_fixed(std::min(places, 20));
  if (places > 20) s += "...";
  return s;
}

std::string seconds(std::chrono::duration<double> d) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3f", d.count());
  return buffer;
}

}  // namespace

std::string format_text(const std::vector<IdentityReport>& reports) {
  std::size_t id_width = 2;
  for (const auto& r : reports) id_width = std::max(id_width, r.id.size());

  std::ostringstream out;
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  out << pad("id", id_width) << "  " << pad("status", 6) << "  " << pad("agree", 7) << "  "
      << pad("thresh", 7) << "  " << pad("time[s]", 9) << "  " << pad("lhs", 24) << "  rhs\n";
  for (const auto& r : reports) {
    out << pad(r.id, id_width) << "  " << pad(r.passed ? "PASS" : "FAIL", 6) << "  "
        << pad(std::to_string(r.agree_digits), 7) << "  " << pad(std::to_string(r.threshold), 7) << "  "
        << pad(seconds(r.elapsed), 9) << "  " << pad(preview(r.lhs_value, r.target_digits), 24) << "  "
        << preview(r.rhs_value, r.target_digits) << '\n';
    if (!r.error.empty()) out << "    error: " << r.error << '\n';
    if (!r.detail.empty()) out << "    " << r.detail << '\n';
    if (r.seed) out << "    seed: " << *r.seed << '\n';
  }
  const VerificationSummary s = summarize(reports);
  out << s.passed << '/' << s.total << " passed, " << s.failed << " failed in " << seconds(s.elapsed) << " s\n";
  return out.str();
}

std::string format_json(const std::vector<IdentityReport>& reports) {
  nlohmann::ordered_json doc;
  doc["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["lhs_value"] = r.lhs_value.to_fixed(r.target_digits);
    j["rhs_value"] = r.rhs_value.to_fixed(r.target_digits);
    j["agree_digits"] = r.agree_digits;
    j["threshold"] = r.threshold;
    j["passed"] = r.passed;
    j["elapsed"] = seconds(r.elapsed);
    j["target_digits"] = r.target_digits;
    j["seed"] = r.seed ? nlohmann::ordered_json(std::to_string(*r.seed)) : nlohmann::ordered_json(nullptr);
    j["detail"] = r.detail;
    j["error"] = r.error;
    doc["reports"].push_back(std::move(j));
  }
  const VerificationSummary s = summarize(reports);
  doc["summary"] = {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed},
                    {"elapsed", seconds(s.elapsed)}, {"all_passed", s.all_passed()}};
  return doc.dump(2) + "\n";
}

}  // namespace clausen
