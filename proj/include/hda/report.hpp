#pragma once

#include <string>
#include <vector>

namespace hda {

struct Violation {
    std::string check;  // short tag, e.g. "cubical-identity", "HM3"
    std::string detail; // human-readable witness
};

// Validators collect every failure instead of stopping at the first one.
class Report {
public:
    void add(std::string check, std::string detail) { items_.push_back({std::move(check), std::move(detail)}); }
    void append(const Report& other) { items_.insert(items_.end(), other.items_.begin(), other.items_.end()); }

    [[nodiscard]] bool ok() const { return items_.empty(); }
    [[nodiscard]] const std::vector<Violation>& violations() const { return items_; }
    [[nodiscard]] bool has(const std::string& check) const
    {
        for (const auto& v : items_) {
            if (v.check == check) {
                return true;
            }
        }
        return false;
    }

    // One line per violation: "check: detail".
    [[nodiscard]] std::string to_string() const
    {
        std::string out;
        for (const auto& v : items_) {
            out += v.check + ": " + v.detail + "\n";
        }
        return out;
    }

private:
    std::vector<Violation> items_;
};

} // namespace hda
