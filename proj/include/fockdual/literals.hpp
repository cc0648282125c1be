#pragma once

#include <string>

#include "fockdual/partitions.hpp"
#include "fockdual/winfinity.hpp"

namespace fockdual {

/*
  Text literal grammar shared by the CLI and the golden files.

    generalized partition:  "N:[a,b,c]"  or bare "a,b,c" (width = count)
    partition:              bare "a,b,c"; empty string for ()
    rational:               "p/q" or "p"
    module:                 "L(n=2, lam=[1,0], s=1/3) * L(n=1, lam=[0], s=1/2)"
                            the empty product is written "1"
*/

GeneralizedPartition parse_generalized(const std::string& text);
Partition parse_partition(const std::string& text);
Rational parse_rational(const std::string& text);
PrimitiveWModule parse_wmodule(const std::string& text);  // returned as written (raw)

std::string format_generalized(const GeneralizedPartition& p);  // "N:[a,b,c]"
std::string format_tuple(const GeneralizedPartition& p);        // "(a,b,c)"
std::string format_rational(const Rational& q);                 // "p/q", "p"
std::string format_wmodule(const PrimitiveWModule& m);

}  // namespace fockdual
