#include "ctxalg/ctxalg.hpp"
int main() { return 0; }
