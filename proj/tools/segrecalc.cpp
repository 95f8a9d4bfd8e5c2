#include <cstdio>

int main() {
  std::puts("segrecalc: placeholder");
  return 0;
}
