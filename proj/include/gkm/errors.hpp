#pragma once

#include <stdexcept>
#include <string>

namespace gkm {

enum class Errc {
    ZeroCharacter,
    NotPrimitive,
    UnsupportedSurfaceRelations,
    SchemaError,
    ValidationError,
    GraphMismatch,
    NotInSpan,
    NonUniqueSolution,
    NoWeylData,
    DegreeMismatch,
    IncompleteFan,
    NonSimplicial,
    NotMember,
    BadArgument,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ZeroCharacter: return "ZeroCharacter";
        case Errc::NotPrimitive: return "NotPrimitive";
        case Errc::UnsupportedSurfaceRelations: return "UnsupportedSurfaceRelations";
        case Errc::SchemaError: return "SchemaError";
        case Errc::ValidationError: return "ValidationError";
        case Errc::GraphMismatch: return "GraphMismatch";
        case Errc::NotInSpan: return "NotInSpan";
        case Errc::NonUniqueSolution: return "NonUniqueSolution";
        case Errc::NoWeylData: return "NoWeylData";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::IncompleteFan: return "IncompleteFan";
        case Errc::NonSimplicial: return "NonSimplicial";
        case Errc::NotMember: return "NotMember";
        case Errc::BadArgument: return "BadArgument";
    }
    return "Unknown";
}

class GkmError : public std::runtime_error {
public:
    GkmError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace gkm
