// e^x by its Taylor series with an explicit term count, written the long way:
// each term is x^k / k! with the power and the factorial formed separately.
//
//   exponential_sample [x] [n] [precision]     (defaults: 1 70 100)

#include <cstdint>
#include <cstdlib>
#include <iostream>

#include "noz/noz.hpp"

int main(int argc, char** argv) {
  const char* x_text = argc > 1 ? argv[1] : "1";
  const std::uint64_t n = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 70;
  const std::uint64_t precision = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 100;

  try {
    const noz::context ctx(precision);
    const noz::context work(precision + 10);
    const auto x = noz::decimal::parse(x_text, work);

    noz::decimal sum;
    noz::decimal power = noz::decimal::from_integer(1);
    for (std::uint64_t k = 0; k < n; ++k) {
      sum = add(sum, div(power, noz::factorial<9>(k, work), work), work);
      power = mul(power, x, work);
    }
    std::cout << format(round(sum, ctx)) << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
