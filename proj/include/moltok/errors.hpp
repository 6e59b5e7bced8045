//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLTOK_ERRORS_HPP
#define MOLTOK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace moltok {

// Base class for all recoverable toolkit errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed SMILES input (unbalanced parenthesis, dangling ring closure,
// unknown symbol, bad bracket grammar, ...).
class SyntaxError : public Error {
public:
  explicit SyntaxError(const std::string& what) : Error(what) {}
};

// Input contains a `.` separator; only single-component molecules are handled.
class MultiComponentError : public Error {
public:
  explicit MultiComponentError(const std::string& what) : Error(what) {}
};

class EmptyMoleculeError : public Error {
public:
  explicit EmptyMoleculeError(const std::string& what) : Error(what) {}
};

class EmptySequenceError : public Error {
public:
  explicit EmptySequenceError(const std::string& what) : Error(what) {}
};

class EmptyCorpusError : public Error {
public:
  explicit EmptyCorpusError(const std::string& what) : Error(what) {}
};

class EmptyInputError : public Error {
public:
  explicit EmptyInputError(const std::string& what) : Error(what) {}
};

class UnknownIdError : public Error {
public:
  explicit UnknownIdError(const std::string& what) : Error(what) {}
};

class LengthMismatchError : public Error {
public:
  explicit LengthMismatchError(const std::string& what) : Error(what) {}
};

class KindMismatchError : public Error {
public:
  explicit KindMismatchError(const std::string& what) : Error(what) {}
};

class NoValidCandidateError : public Error {
public:
  explicit NoValidCandidateError(const std::string& what) : Error(what) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& what) : Error(what) {}
};

class FormatError : public Error {
public:
  explicit FormatError(const std::string& what) : Error(what) {}
};

// Structurally broken value (bad index, invalid argument combination, ...).
class InvalidArgumentError : public Error {
public:
  explicit InvalidArgumentError(const std::string& what) : Error(what) {}
};

}  // namespace moltok

#endif  // MOLTOK_ERRORS_HPP
