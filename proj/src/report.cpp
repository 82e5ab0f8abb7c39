#include "artifact/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace artifact {

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconsistent: return "inconsistent";
    }
    return "fail";
}

void CheckReport::add_row(WeightRow row)
{
    if (!row.ok) {
        std::string where = row.label.empty() ? "" : row.label + " at ";
        where += "weight " + std::to_string(row.w);
        if (row.d >= 0) where += ", degree " + std::to_string(row.d);
        fail(where + ": computed " + row.computed + ", expected " + row.expected);
    }
    weights.push_back(std::move(row));
}

void CheckReport::add_row(int w, int d, long long computed, long long expected, std::string label)
{
    add_row(WeightRow{w, d, std::move(label), std::to_string(computed), std::to_string(expected), computed == expected});
}

void CheckReport::fail(const std::string& witness_text, CheckStatus s)
{
    if (status == CheckStatus::Pass || (s == CheckStatus::Inconsistent && status == CheckStatus::Fail)) status = s;
    if (!witness) witness = witness_text;
}

bool CheckReport::expect(bool ok, const std::string& witness_text)
{
    if (!ok) fail(witness_text);
    return ok;
}

void CheckReport::merge(const CheckReport& sub)
{
    for (auto& r : sub.weights) weights.push_back(r);
    for (auto& n : sub.notes) notes.push_back(n);
    if (!sub.passed()) fail(sub.check_id + ": " + sub.witness.value_or("failed"), sub.status);
}

namespace {

// Integer-valued entries become JSON integers; anything else stays a string.
nlohmann::ordered_json value_json(const std::string& s)
{
    long long v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && end == s.data() + s.size() && !s.empty()) return v;
    return s;
}

} // namespace

nlohmann::ordered_json CheckReport::to_json() const
{
    nlohmann::ordered_json j;
    j["check"] = check_id;
    j["params"] = params;
    j["status"] = to_string(status);
    j["weights"] = nlohmann::ordered_json::array();
    for (auto& r : weights) {
        nlohmann::ordered_json row;
        row["w"] = r.w;
        if (r.d >= 0) row["d"] = r.d;
        else row["d"] = nullptr;
        if (!r.label.empty()) row["label"] = r.label;
        row["computed"] = value_json(r.computed);
        if (r.expected.empty()) row["expected"] = nullptr;
        else row["expected"] = value_json(r.expected);
        row["ok"] = r.ok;
        j["weights"].push_back(std::move(row));
    }
    if (witness) j["witness"] = *witness;
    else j["witness"] = nullptr;
    if (!notes.empty()) j["notes"] = notes;
    j["elapsed_ms"] = std::llround(elapsed_ms);
    return j;
}

std::string CheckReport::summary_line() const
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.0f ms", elapsed_ms);
    std::string s = check_id + ": " + to_string(status) + " (" + std::to_string(weights.size()) + " rows, " + buf + ")";
    if (witness) s += " witness: " + *witness;
    return s;
}

} // namespace artifact
