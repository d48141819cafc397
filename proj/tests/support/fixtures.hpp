#pragma once

#include <string>

namespace cpctaxo::testing {

// Eight rows of the class G title list, as distributed.
inline const std::string kG06NExcerpt =
    "G\t\tPHYSICS\n"
    "G06\t\tCOMPUTING; CALCULATING; COUNTING\n"
    "G06N\t\tCOMPUTING ARRANGEMENTS BASED ON SPECIFIC COMPUTATIONAL MODELS\n"
    "G06N3/00\t0\tComputing arrangements based on biological models\n"
    "G06N3/02\t1\tusing neural network models\n"
    "G06N3/06\t2\tPhysical realisation, i.e. hardware implementation of neural networks, "
    "neurons or parts of neurons\n"
    "G06N3/063\t3\tusing electronic means\n"
    "G06N3/0635\t4\t{using analogue means}\n";

}  // namespace cpctaxo::testing
