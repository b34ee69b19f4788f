#include <cstdio>

int main() {
  std::puts("scarlab: subcommands pending");
  return 0;
}
