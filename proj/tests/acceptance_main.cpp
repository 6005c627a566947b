#include <iostream>

#include "ssc/selftest.hpp"

int main() { return ssc::selftest_main(0, std::cout); }
