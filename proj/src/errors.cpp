#include "tfu/errors.hpp"

namespace tfu {

void throw_precondition(const std::string& what) { throw PreconditionError(what); }

void throw_numerical(const std::string& what) { throw NumericalError(what); }

}  // namespace tfu
