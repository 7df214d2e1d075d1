#include <iostream>

int main() {
    std::cout << "hopforder: placeholder\n";
    return 0;
}
