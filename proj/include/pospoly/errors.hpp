#pragma once

#include <stdexcept>
#include <string>

namespace pospoly {

/// Machine-readable failure classes surfaced by library operations.
enum class Errc {
    CycleDetected,
    UnknownLabel,
    IndexOutOfRange,
    BruteSizeExceeded,
    NoExcess,
    NotInSm0,
    NotMember,
    HypothesisFails,
    BadParams,
    TooLarge,
    CapExceeded,
    RelationViolated,
    NonIntegerResult,
    MalformedVector,
    RankDeficient,
    SearchExhausted,
    MalformedInput,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::CycleDetected: return "CycleDetected";
        case Errc::UnknownLabel: return "UnknownLabel";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::BruteSizeExceeded: return "BruteSizeExceeded";
        case Errc::NoExcess: return "NoExcess";
        case Errc::NotInSm0: return "NotInSm0";
        case Errc::NotMember: return "NotMember";
        case Errc::HypothesisFails: return "HypothesisFails";
        case Errc::BadParams: return "BadParams";
        case Errc::TooLarge: return "TooLarge";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::RelationViolated: return "RelationViolated";
        case Errc::NonIntegerResult: return "NonIntegerResult";
        case Errc::MalformedVector: return "MalformedVector";
        case Errc::RankDeficient: return "RankDeficient";
        case Errc::SearchExhausted: return "SearchExhausted";
        case Errc::MalformedInput: return "MalformedInput";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace pospoly
