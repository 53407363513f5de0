#include "sumprod/error.hpp"

namespace sumprod {

const char* to_string(Precondition p) noexcept {
    switch (p) {
        case Precondition::parallel_vectors: return "parallel_vectors";
        case Precondition::exceptional_polynomial: return "exceptional_polynomial";
        case Precondition::trivial_polynomial: return "trivial_polynomial";
        case Precondition::support_too_small: return "support_too_small";
        case Precondition::support_too_large: return "support_too_large";
        case Precondition::not_distinct: return "not_distinct";
        case Precondition::nonpositive_generator: return "nonpositive_generator";
        case Precondition::dilation_too_small: return "dilation_too_small";
    }
    return "unknown";
}

}  // namespace sumprod
