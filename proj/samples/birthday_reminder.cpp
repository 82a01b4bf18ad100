// A birthday arrives either as ISO text or as a datetime; either way the
// reminder is the day before it.

#include <iostream>

#include "bx/bx.hpp"

int main() {
  using namespace bx;
  auto base = DateTime::make(2000, 1, 1).data();
  auto from_text = string_datetime_lens() >> day_of_month_lens(base) >> sub_lens(1);
  auto from_datetime = day_of_month_lens(base) >> sub_lens(1);
  auto reminder = or_lens(from_text, from_datetime);
  using Birthday = Either<std::string, DateTime>;

  auto as_text = Birthday::left("1992-12-31T00:00:00");
  auto as_datetime = Birthday::right(DateTime::make(1992, 12, 31).data());
  auto day_text = reminder.create_right(as_text);
  auto day_datetime = reminder.create_right(as_datetime);
  std::cout << "text:     " << show(day_text.map(join_either<std::int64_t>)) << "\n";
  std::cout << "datetime: " << show(day_datetime.map(join_either<std::int64_t>)) << "\n";
  std::cout << "put back: " << show(reminder.put_left(day_text.data(), as_text)) << "\n";
  std::cout << "moved:    " << show(reminder.put_left(Either<std::int64_t, std::int64_t>::left(14), as_text)) << "\n";
  return 0;
}
