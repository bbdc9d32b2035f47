#include <iostream>

#include "okd/acceptance.hpp"

int main() { return okd::print_acceptance(std::cout) == 0 ? 0 : 1; }
