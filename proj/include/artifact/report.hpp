#ifndef ARTIFACT_REPORT_HPP
#define ARTIFACT_REPORT_HPP

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace artifact {

enum class CheckStatus { Pass, Fail, Inconsistent };

std::string to_string(CheckStatus s);

// One row of a check: a computed value against its expected value at a
// weight (and, for bigraded checks, a second degree d; -1 when unused).
struct WeightRow {
    int w = 0;
    int d = -1;
    std::string label;
    std::string computed;
    std::string expected;
    bool ok = true;
};

// Structured verdict of a named verification. Status is Pass when every row
// and every identity holds; the witness describes the first failure.
struct CheckReport {
    std::string check_id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    CheckStatus status = CheckStatus::Pass;
    std::vector<WeightRow> weights;
    std::optional<std::string> witness;
    std::vector<std::string> notes;
    double elapsed_ms = 0;

    bool passed() const { return status == CheckStatus::Pass; }
    // Records a row; the first failing row sets the witness.
    void add_row(WeightRow row);
    void add_row(int w, int d, long long computed, long long expected, std::string label = {});
    // Records a failed identity with its witness (keeps the first witness).
    void fail(const std::string& witness_text, CheckStatus s = CheckStatus::Fail);
    // Checks a boolean identity; on failure records the witness.
    bool expect(bool ok, const std::string& witness_text);
    // Absorbs the rows, status and witness of a sub-check.
    void merge(const CheckReport& sub);

    nlohmann::ordered_json to_json() const;
    std::string summary_line() const;
};

// Measures wall time between construction and finish().
class ReportTimer {
public:
    explicit ReportTimer(CheckReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
    ~ReportTimer() { finish(); }
    // Records the elapsed time once; later calls do nothing.
    void finish()
    {
        if (done_) return;
        done_ = true;
        auto d = std::chrono::steady_clock::now() - start_;
        report_.elapsed_ms = std::chrono::duration<double, std::milli>(d).count();
    }

private:
    CheckReport& report_;
    std::chrono::steady_clock::time_point start_;
    bool done_ = false;
};

} // namespace artifact

#endif
