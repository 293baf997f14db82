#ifndef LISSAJOUS_REPORT_HPP
#define LISSAJOUS_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lissajous {

struct CheckRecord {
    std::string model;
    std::string check;
    std::string source;
    std::string expected;
    std::string computed;
    bool passed = false;
};

class VerificationReport {
public:
    void add(CheckRecord r) { records_.push_back(std::move(r)); }
    void add(std::string model, std::string check, std::string source, std::string expected,
             std::string computed, bool passed);
    void skip(long count = 1) { skipped_ += count; }
    void merge(const VerificationReport& other);

    const std::vector<CheckRecord>& records() const { return records_; }
    long checked() const { return static_cast<long>(records_.size()); }
    long passedCount() const;
    long failedCount() const { return checked() - passedCount(); }
    long skipped() const { return skipped_; }
    bool allPassed() const { return failedCount() == 0; }
    std::vector<CheckRecord> failures() const;

    std::string summaryLine() const;
    // one record per line followed by the summary line
    void write(std::ostream& os) const;

private:
    std::vector<CheckRecord> records_;
    long skipped_ = 0;
};

std::string formatRecord(const CheckRecord& r);

} // namespace lissajous

#endif
