#include <iostream>

#include "tfu/acceptance.hpp"

int main() {
  const tfu::AcceptanceReport report = tfu::verify_all();
  std::cout << report.text();
  return report.all_pass() ? 0 : 1;
}
