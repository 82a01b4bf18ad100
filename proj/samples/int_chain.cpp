// id >> add 1 >> add 5 >> sub 3 over integers, then across to text.

#include <iostream>

#include "bx/bx.hpp"

int main() {
  using namespace bx;
  auto chain = identity<std::int64_t>() >> add_lens(1) >> add_lens(5) >> sub_lens(3);
  std::cout << "createR(10)    = " << show(chain.create_right(10)) << "\n";
  std::cout << "putL(11, 10)   = " << show(chain.put_left(11, 10)) << "\n";

  auto as_text = chain >> int_string_lens();
  std::cout << "createR(10)    = " << show(as_text.create_right(10)) << "\n";
  std::cout << "putL(\"20\", 10) = " << show(as_text.put_left("20", 10)) << "\n";
  std::cout << "putL(\"2x\", 10) = " << show(as_text.put_left("2x", 10)) << "\n";
  return 0;
}
