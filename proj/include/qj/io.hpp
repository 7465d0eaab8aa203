#pragma once

// Text formats shared by the command line and golden tests. Every reader
// throws Error(Parse) on malformed input.

#include <string>
#include <string_view>

#include "qj/counting.hpp"
#include "qj/grassmann.hpp"
#include "qj/kummer.hpp"

namespace qj {

std::string write_quartic(const Form& F);
Form read_quartic(std::string_view text);

std::string write_divisor(const Divisor& D);
/// Points must lie on X when a curve is given.
Divisor read_divisor(std::string_view text, const CurveContext* ctx = nullptr);

std::string write_zpoint(const ZPoint& z);
ZPoint read_zpoint(std::string_view text);

std::string write_plucker(const PluckerVector& v);
PluckerVector read_plucker(std::string_view text);

std::string write_zeta(std::uint32_t p, const ZetaData& z);
ZetaData read_zeta(std::string_view text);

std::string write_kummer(const KummerCoords& k, const KummerCheck& check);

/// First word of the header line ("quartic", "divisor", ...).
std::string header_kind(std::string_view text);

}  // namespace qj
