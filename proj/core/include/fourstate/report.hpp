#pragma once

#include <string>
#include <vector>

#include "fourstate/rational.hpp"

namespace fourstate {

enum class CheckStatus { Pass, Fail, ExpectedMember };

const char* status_string(CheckStatus s);

struct CheckEntry {
    std::string name;
    CheckStatus status = CheckStatus::Fail;
    // Exact witness values (rational strings) supporting the verdict.
    std::vector<std::string> witness;
};

// Ordered list of sub-certificates. Overall PASS iff every entry is PASS;
// ExpectedMember entries are informational and excluded from the criterion.
class Report {
public:
    explicit Report(std::string title) : title_(std::move(title)) {}

    void set_header(std::string h) { header_ = std::move(h); }
    const std::string& header() const { return header_; }
    const std::string& title() const { return title_; }

    void add(std::string name, bool pass, std::vector<std::string> witness = {});
    void add_status(std::string name, CheckStatus status, std::vector<std::string> witness = {});
    void absorb(const Report& other, const std::string& prefix = "");

    const std::vector<CheckEntry>& entries() const { return entries_; }
    const CheckEntry* find(const std::string& name) const;
    bool overall_pass() const;

private:
    std::string title_;
    std::string header_;
    std::vector<CheckEntry> entries_;
};

} // namespace fourstate
