#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace rsc {

// Exponent vector (alpha_1, alpha_2, ...) controlling face probabilities
// p_i = n^{-alpha_i}. Entries are indexed from 1 to match the face dimension
// they govern; every entry beyond the stored ones is +infinity (p_i = 0), and
// alpha_0 is fixed at 0 (all vertices present). Entries must be >= 0;
// +infinity is allowed and means the level is switched off.
class AlphaVector {
public:
    AlphaVector() = default;

    explicit AlphaVector(std::vector<double> entries) : entries_(std::move(entries)) {
        for (double a : entries_) {
            if (std::isnan(a) || a < 0.0)
                throw PreconditionError("AlphaVector: entries must be >= 0 (or +inf)");
        }
    }

    AlphaVector(std::initializer_list<double> entries)
        : AlphaVector(std::vector<double>(entries)) {}

    // alpha_i for i >= 1; i = 0 gives 0, beyond the stored tail gives +inf.
    double get(int i) const {
        if (i < 0) throw PreconditionError("AlphaVector: negative index");
        if (i == 0) return 0.0;
        if (i > static_cast<int>(entries_.size())) return std::numeric_limits<double>::infinity();
        return entries_[static_cast<std::size_t>(i) - 1];
    }

    int size() const { return static_cast<int>(entries_.size()); }
    const std::vector<double>& entries() const { return entries_; }

    // Entrywise comparison under the +inf tail convention.
    bool dominated_by(const AlphaVector& other) const {
        int k = std::max(size(), other.size());
        for (int i = 1; i <= k; ++i)
            if (get(i) > other.get(i)) return false;
        return true;
    }

    // Parse "0,2.5,inf" style comma-separated lists.
    static AlphaVector parse(const std::string& text) {
        std::vector<double> entries;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t a = item.find_first_not_of(" \t");
            if (a == std::string::npos) throw PreconditionError("AlphaVector: empty entry in '" + text + "'");
            std::size_t b = item.find_last_not_of(" \t");
            std::string tok = item.substr(a, b - a + 1);
            if (tok == "inf" || tok == "+inf" || tok == "infinity") {
                entries.push_back(std::numeric_limits<double>::infinity());
                continue;
            }
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(tok, &used);
            } catch (const std::exception&) {
                throw PreconditionError("AlphaVector: cannot parse entry '" + tok + "'");
            }
            if (used != tok.size()) throw PreconditionError("AlphaVector: trailing junk in '" + tok + "'");
            entries.push_back(v);
        }
        if (entries.empty()) throw PreconditionError("AlphaVector: empty list");
        return AlphaVector(std::move(entries));
    }

    std::string to_string() const {
        std::ostringstream os;
        for (int i = 0; i < size(); ++i) {
            if (i) os << ',';
            if (std::isinf(entries_[static_cast<std::size_t>(i)])) os << "inf";
            else os << entries_[static_cast<std::size_t>(i)];
        }
        return os.str();
    }

private:
    std::vector<double> entries_;
};

} // namespace rsc
