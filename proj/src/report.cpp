#include "shiftred/report.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>

namespace shiftred {

std::string to_string(Status s)
{
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

void Report::add(Status status, std::string suite, std::string case_id, std::string detail)
{
  records_.push_back({status, std::move(suite), std::move(case_id), std::move(detail)});
}

void Report::merge(const Report& other)
{
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

std::vector<Record> Report::sorted() const
{
  std::vector<Record> out = records_;
  std::stable_sort(out.begin(), out.end(), [](const Record& a, const Record& b) {
    return std::tie(a.suite, a.case_id) < std::tie(b.suite, b.case_id);
  });
  return out;
}

std::size_t Report::count(Status s) const
{
  return static_cast<std::size_t>(std::count_if(
    records_.begin(), records_.end(), [s](const Record& r) { return r.status == s; }));
}

void Report::render(std::ostream& out) const
{
  for (const Record& r : sorted())
    out << to_string(r.status) << '\t' << r.suite << '\t' << r.case_id << '\t' << r.detail
        << '\n';
  const std::size_t fails = count(Status::fail);
  const std::size_t open = count(Status::inconclusive);
  if (open > 0)
    out << "warning: " << open << " inconclusive case(s)\n";
  if (fails > 0)
    out << fails << " of " << records_.size() << " case(s) FAILED\n";
  else
    out << "ALL PASS\n";
}

int Report::exit_code() const { return count(Status::fail) > 0 ? 1 : 0; }

void CaseTally::fail(std::string witness)
{
  ++checked_;
  if (failures_++ == 0)
    failure_ = std::move(witness);
}

void CaseTally::inconclusive(std::string reason)
{
  ++checked_;
  if (undecided_++ == 0)
    undecided_reason_ = std::move(reason);
}

void CaseTally::record(Report& report, const std::string& suite, const std::string& case_id,
                       const std::string& summary) const
{
  const std::string of = " of " + std::to_string(checked_);
  if (failures_ > 0)
    report.add(Status::fail, suite, case_id,
               std::to_string(failures_) + of + " failed; first: " + failure_);
  else if (undecided_ > 0)
    report.add(Status::inconclusive, suite, case_id,
               std::to_string(undecided_) + of + " undecided; first: " + undecided_reason_);
  else
    report.add(Status::pass, suite, case_id, summary + " (" + std::to_string(checked_) + ")");
}

}  // namespace shiftred
