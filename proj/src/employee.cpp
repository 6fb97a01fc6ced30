#include "orglab/employee.hpp"

namespace orglab {

EmployeeState state_of_digit(int d) {
    switch (d) {
    case 0:
        return EmployeeState::Zombie;
    case 2:
        return EmployeeState::Confused;
    case 4:
        return EmployeeState::Motivated;
    default:
        throw InvalidInput("digit " + std::to_string(d) + " is not in {0, 2, 4}");
    }
}

} // namespace orglab
