#ifndef MOTIVIC_ERRORS_HPP
#define MOTIVIC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motivic
{

// Root of every exception thrown by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class variable_mismatch : public error
{
public:
    using error::error;
};

class mode_mismatch : public error
{
public:
    using error::error;
};

class non_unit : public error
{
public:
    using error::error;
};

class precondition_violation : public error
{
public:
    using error::error;
};

// A truncation order or tail target cannot be reached within the configured limits.
class precision_unachievable : public error
{
public:
    using error::error;
};

class curve_validation_error : public error
{
public:
    using error::error;
};

class divergent_zeta : public error
{
public:
    using error::error;
};

// Syntax error in a motive expression; position is a 0-based character offset.
class parse_error : public error
{
public:
    parse_error(const std::string &msg, std::size_t pos)
        : error(msg + " at position " + std::to_string(pos)), m_pos(pos)
    {
    }
    std::size_t position() const noexcept
    {
        return m_pos;
    }

private:
    std::size_t m_pos;
};

class curve_file_error : public error
{
public:
    curve_file_error(const std::string &msg, std::size_t line, std::string field)
        : error("line " + std::to_string(line) + (field.empty() ? "" : " (field '" + field + "')") + ": " + msg),
          m_line(line), m_field(std::move(field))
    {
    }
    std::size_t line() const noexcept
    {
        return m_line;
    }
    const std::string &field() const noexcept
    {
        return m_field;
    }

private:
    std::size_t m_line;
    std::string m_field;
};

} // namespace motivic

#endif
