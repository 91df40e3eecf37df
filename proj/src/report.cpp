#include "pitop/report.hpp"

#include <sstream>

namespace pitop {

Check& Report::check(const std::string& name) {
  for (auto& c : checks_)
    if (c.name == name) return c;
  Check c;
  c.name = name;
  checks_.push_back(c);
  return checks_.back();
}

void Report::record(const std::string& name, bool ok, const std::string& witness) {
  Check& c = check(name);
  ++c.tested;
  if (ok) return;
  c.pass = false;
  ++c.failures;
  if (c.witnesses.size() < kMaxWitnesses) c.witnesses.push_back(witness);
}

void Report::note(const std::string& name, const std::string& text) { check(name).note = text; }

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    Check& mine = check(prefix + c.name);
    mine.tested += c.tested;
    mine.failures += c.failures;
    mine.pass = mine.pass && c.pass;
    for (const auto& w : c.witnesses)
      if (mine.witnesses.size() < kMaxWitnesses) mine.witnesses.push_back(w);
    if (!c.note.empty()) mine.note = c.note;
  }
}

bool Report::ok() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

bool Report::passed(const std::string& name) const {
  const Check* c = find(name);
  return c && c->pass;
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

std::string Report::str() const {
  std::ostringstream os;
  if (!title_.empty()) os << title_ << "\n";
  for (const auto& c : checks_) {
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.tested << " tested";
    if (c.failures) os << ", " << c.failures << " failed";
    os << ")";
    if (!c.note.empty()) os << "  [" << c.note << "]";
    os << "\n";
    for (const auto& w : c.witnesses) os << "        witness: " << w << "\n";
  }
  return os.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["title"] = title_;
  j["ok"] = ok();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["tested"] = c.tested;
    cj["failures"] = c.failures;
    cj["witnesses"] = c.witnesses;
    if (!c.note.empty()) cj["note"] = c.note;
    j["checks"].push_back(cj);
  }
  return j;
}

}  // namespace pitop
