#include "lissajous/report.hpp"

#include <algorithm>

namespace lissajous {

void VerificationReport::add(std::string model, std::string check, std::string source,
                             std::string expected, std::string computed, bool passed)
{
    records_.push_back({std::move(model), std::move(check), std::move(source), std::move(expected),
                        std::move(computed), passed});
}

void VerificationReport::merge(const VerificationReport& other)
{
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
    skipped_ += other.skipped_;
}

long VerificationReport::passedCount() const
{
    return std::count_if(records_.begin(), records_.end(), [](const CheckRecord& r) { return r.passed; });
}

std::vector<CheckRecord> VerificationReport::failures() const
{
    std::vector<CheckRecord> out;
    for (const auto& r : records_)
        if (!r.passed)
            out.push_back(r);
    return out;
}

std::string VerificationReport::summaryLine() const
{
    return "summary: checked=" + std::to_string(checked()) + " passed=" + std::to_string(passedCount()) +
           " failed=" + std::to_string(failedCount()) + " skipped=" + std::to_string(skipped_);
}

std::string formatRecord(const CheckRecord& r)
{
    return r.model + " | " + r.check + " | " + r.source + " | expected=" + r.expected +
           " | computed=" + r.computed + " | " + (r.passed ? "PASS" : "FAIL");
}

void VerificationReport::write(std::ostream& os) const
{
    for (const auto& r : records_)
        os << formatRecord(r) << '\n';
    os << summaryLine() << '\n';
}

} // namespace lissajous
