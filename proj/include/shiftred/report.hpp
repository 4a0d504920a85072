#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftred {

enum class Status { pass, fail, inconclusive };

std::string to_string(Status s);

struct Record
{
  Status status;
  std::string suite;
  std::string case_id;
  std::string detail;  // for FAIL records, ends with the witness
};

/// Records of a verification run. Rendering sorts by (suite, case) so the text does not
/// depend on the order in which cases ran.
class Report
{
public:
  void add(Status status, std::string suite, std::string case_id, std::string detail);
  void merge(const Report& other);

  const std::vector<Record>& records() const { return records_; }
  std::vector<Record> sorted() const;
  std::size_t count(Status s) const;

  /// One `STATUS<TAB>suite<TAB>case<TAB>detail` line per record, then a summary line.
  void render(std::ostream& out) const;

  /// 1 on any FAIL, otherwise 0.
  int exit_code() const;

private:
  std::vector<Record> records_;
};

/// Tally for a case that checks many instances and reports the first failure.
class CaseTally
{
public:
  void pass() { ++checked_; }
  void fail(std::string witness);
  void inconclusive(std::string reason);

  std::size_t checked() const { return checked_; }
  bool failed() const { return failures_ > 0; }

  /// Adds one record: FAIL with the first failure, else INCONCLUSIVE with the first
  /// undecided instance, else PASS with `summary`.
  void record(Report& report, const std::string& suite, const std::string& case_id,
              const std::string& summary) const;

private:
  std::size_t checked_ = 0;
  std::size_t failures_ = 0;
  std::size_t undecided_ = 0;
  std::string failure_;
  std::string undecided_reason_;
};

}  // namespace shiftred
