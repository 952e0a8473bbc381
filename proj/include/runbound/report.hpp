#pragma once

#include <nlohmann/json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace runbound {

struct Check {
    std::string id;
    std::string expected;
    std::string actual;
    bool pass = false;
};

class VerificationReport {
public:
    explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

    const std::string& suite() const noexcept { return suite_; }
    const std::vector<Check>& checks() const noexcept { return checks_; }

    void add(std::string id, std::string expected, std::string actual) {
        const bool ok = expected == actual;
        checks_.push_back({std::move(id), std::move(expected), std::move(actual), ok});
    }

    void add(std::string id, std::string expected, std::string actual, bool pass) {
        checks_.push_back({std::move(id), std::move(expected), std::move(actual), pass});
    }

    void merge(const VerificationReport& other) {
        for (const auto& c : other.checks_) checks_.push_back({other.suite_ + "/" + c.id, c.expected, c.actual, c.pass});
    }

    bool pass() const {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }

    std::size_t failures() const {
        std::size_t f = 0;
        for (const auto& c : checks_) f += !c.pass;
        return f;
    }

    /// One line per check, then a summary line.
    void write_text(std::ostream& os) const {
        for (const auto& c : checks_)
            os << (c.pass ? "PASS " : "FAIL ") << suite_ << '/' << c.id << " expected=" << c.expected
               << " actual=" << c.actual << '\n';
        os << suite_ << ": " << (checks_.size() - failures()) << '/' << checks_.size() << " checks passed, "
           << (pass() ? "PASS" : "FAIL") << '\n';
    }

    nlohmann::json to_json() const {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : checks_)
            checks.push_back({{"id", c.id}, {"expected", c.expected}, {"actual", c.actual},
                              {"status", c.pass ? "pass" : "fail"}});
        return {{"suite", suite_}, {"pass", pass()}, {"checks", std::move(checks)}};
    }

    std::string text() const {
        std::ostringstream os;
        write_text(os);
        return os.str();
    }

private:
    std::string suite_;
    std::vector<Check> checks_;
};

}  // namespace runbound
