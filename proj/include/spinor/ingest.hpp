#ifndef SPINOR_INGEST_HPP
#define SPINOR_INGEST_HPP

#include <filesystem>

#include "spinor/satake.hpp"

namespace spinor {

// Form file format (text, locale-independent, dot decimal separator):
//
//   #SIEGEL-FORM v1 label=<label> route=<traces|eigen> prime_bound=<N>
//   <p> <v1> <v2>
//   ...
//
// One row per prime <= prime_bound. Under route=traces the values are
// (t_a, t_b); under route=eigen they are (lambda_F(p), lambda_F(p^2)) and the
// traces are recovered. Row order is irrelevant on load; save writes rows in
// ascending p with 17 significant digits.
enum class SaveRoute { traces, eigenvalues };

EigenForm load_form(const std::filesystem::path& path);

void save_form(const EigenForm& form, const std::filesystem::path& path,
               SaveRoute route);

} // namespace spinor

#endif
