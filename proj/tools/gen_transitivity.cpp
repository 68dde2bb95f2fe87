// Prints the generated transitivity proof shipped in the corpus.
#include <iostream>

#include "fedlogic/kernel.hpp"

int main() {
  std::cout << "-- (a :> b) :> ((b :> c) :> (a :> c)), generated\n"
            << fedlogic::render_script(fedlogic::generate_transitivity());
}
