#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace irls {

// Domain error carrying a stable name; the CLI prints the name and exits 1.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(detail.empty() ? name : name + ": " + detail),
          name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define IRLS_ERROR_TYPE(NAME)                                  \
    class NAME : public Error {                                \
    public:                                                    \
        explicit NAME(const std::string& detail = "")          \
            : Error(#NAME, detail) {}                          \
    }

IRLS_ERROR_TYPE(ParseError);
IRLS_ERROR_TYPE(DuplicateEdge);
IRLS_ERROR_TYPE(SelfLoop);
IRLS_ERROR_TYPE(BadWeight);
IRLS_ERROR_TYPE(OutOfRange);
IRLS_ERROR_TYPE(UnknownLabel);
IRLS_ERROR_TYPE(IsolatedSeed);
IRLS_ERROR_TYPE(EmptySeedSet);
IRLS_ERROR_TYPE(Infeasible);
IRLS_ERROR_TYPE(NumericalFailure);
IRLS_ERROR_TYPE(EmptySet);
IRLS_ERROR_TYPE(NoEdges);
IRLS_ERROR_TYPE(DegenerateCommunity);
IRLS_ERROR_TYPE(SeedNotCovered);
IRLS_ERROR_TYPE(NoEligibleSeeds);
IRLS_ERROR_TYPE(DetectionFailed);

#undef IRLS_ERROR_TYPE

}  // namespace irls
