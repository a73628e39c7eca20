#include <iostream>

#include "evoalg/acceptance.hpp"

int main() {
  const auto results = evoalg::acceptance::run_all();
  return evoalg::acceptance::report(results, std::cout) == 0 ? 0 : 1;
}
