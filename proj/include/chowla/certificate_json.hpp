#pragma once

#include <string>

#include "chowla/signchange.hpp"

namespace chowla {

// Canonical wire form of a certificate: one compact JSON object, fixed key
// order, big integers as decimal strings, fields that always fit in 64 bits
// (poly coefficients, A0, witness n, seed n0) as JSON numbers, and a trailing
// newline. Byte-stable across runs and platforms.
std::string certificate_to_json(const SignChangeCertificate& cert);

// Inverse of certificate_to_json. Accepts numbers or decimal strings for any
// integer field. Performs structural validation only (shape and discriminant
// consistency); semantic checking is verify_certificate's job.
SignChangeCertificate certificate_from_json(const std::string& text);

// One family in the same shape it takes inside a certificate's "families"
// array, as a standalone JSON document with a trailing newline.
std::string family_to_json(const SolutionFamily& fam);

}  // namespace chowla
