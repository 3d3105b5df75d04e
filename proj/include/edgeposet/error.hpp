#pragma once

#include <stdexcept>
#include <string>

namespace edgeposet {

enum class ErrorKind {
  NotGraded,
  DuplicateCover,
  IndexOutOfRange,
  TooLarge,
  ImageNotCover,
  GroupTooLarge,
  InvalidParams,
  NotInvolutions,
  NotCommuting,
  NotAGroup,
  NotARootedTree,
  InvalidMorphism,
  InvalidAction,
  ImageChainNotSaturated,
  WrongGroup,
  InvalidInput,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace edgeposet
