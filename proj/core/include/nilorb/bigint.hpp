#ifndef NILORB_BIGINT_HPP
#define NILORB_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace nilorb {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace nilorb

#endif  // NILORB_BIGINT_HPP
