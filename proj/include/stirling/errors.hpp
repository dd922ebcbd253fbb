// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace stirling
{

/// Thrown when an argument lies outside an operation's domain (n = 0,
/// division by an interval containing zero, ln of a non-positive value).
class DomainError : public std::domain_error
{
  public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a certified answer could not be produced within the allowed
/// precision. Never means the underlying statement is false.
class UndecidedError : public std::runtime_error
{
  public:
    explicit UndecidedError(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

} // namespace stirling
