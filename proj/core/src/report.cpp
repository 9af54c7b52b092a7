#include "fourstate/report.hpp"

namespace fourstate {

const char* status_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::ExpectedMember: return "EXPECTED-MEMBER";
    }
    return "FAIL";
}

void Report::add(std::string name, bool pass, std::vector<std::string> witness) {
    entries_.push_back({std::move(name), pass ? CheckStatus::Pass : CheckStatus::Fail, std::move(witness)});
}

void Report::add_status(std::string name, CheckStatus status, std::vector<std::string> witness) {
    entries_.push_back({std::move(name), status, std::move(witness)});
}

void Report::absorb(const Report& other, const std::string& prefix) {
    for (const auto& e : other.entries_)
        entries_.push_back({prefix + e.name, e.status, e.witness});
}

const CheckEntry* Report::find(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return &e;
    return nullptr;
}

bool Report::overall_pass() const {
    for (const auto& e : entries_)
        if (e.status == CheckStatus::Fail) return false;
    return true;
}

} // namespace fourstate
