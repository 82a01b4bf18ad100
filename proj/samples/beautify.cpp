// Turns "John;Doe;35;New York" into "Name: John Doe, Age: 35, City: New York"
// and back, then edits the pretty form and puts the change back.

#include <iostream>

#include "bx/bx.hpp"

int main() {
  using namespace bx;
  auto name_tag = ins_lens("Name: ");
  auto name = id_lens("[a-zA-Z]+");
  auto semi = del_lens(";");
  auto space = ins_lens(" ");
  auto comma = ins_lens(", ");
  auto age_tag = ins_lens("Age: ");
  auto age = id_lens("\\d+");
  auto city_tag = ins_lens("City: ");
  auto city = id_lens("[a-zA-Z ]+");
  auto lens = name_tag & name & semi & space & name & semi & comma & age_tag & age & semi & comma & city_tag & city;

  const std::string raw = "John;Doe;35;New York";
  auto pretty = lens.create_right(raw);
  std::cout << show(pretty) << "\n";
  std::cout << show(pretty.bind([&](const std::string& p) { return lens.create_left(p); })) << "\n";
  std::cout << show(lens.put_left("Name: John Doe, Age: 36, City: New York", raw)) << "\n";
  std::cout << show(lens.create_right("John;Doe;thirty-five;New York")) << "\n";
  return pretty.is_ok() ? 0 : 1;
}
