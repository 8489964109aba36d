#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ign::cli {

// Dispatches one subcommand. args excludes the program name.
//
// Subcommands:
//   eval <formula>            point value of a formula
//   entails <A> <B>           yes/no
//   glb <point> <point>       meet in the algebra
//   sigma <n> <seq>           filter sequence of diamond-n applied to a filter
//   suitable <seq>            yes, or no with the violating index
//   rel (R|S)<n> <seqF> <seqG>  frame relation test
//   forces <seqF> <formula>   yes/no
//   verify [--height H --terms T --coeff C --support S] [--suite S]
//
// Exit codes: 0 affirmative/success, 1 negative decision or failed sweep,
// 2 usage or parse errors (message on the error stream).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ign::cli
