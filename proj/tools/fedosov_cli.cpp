#include <cstdio>

int main() {
    std::puts("fedosov cli placeholder");
    return 0;
}
