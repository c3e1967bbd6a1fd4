#pragma once

#include <stdexcept>
#include <string>

namespace spanner4 {

enum class Errc {
    DegenerateDirection,
    GeneralPositionViolation,
    DegenerateSquareWitness,
    ClassificationContradiction,
    ChainCycleDetected,
    ChargeOverflow,
    DegreeOverflow,
    PlanarityViolation,
    PositionOutOfRange,
    AnchorUndefined,
    NotAPath,
    DisconnectedGraph,
    CoordinateSpaceExhausted,
    InconsistentFiles,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace spanner4
