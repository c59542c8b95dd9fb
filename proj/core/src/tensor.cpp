#include "svhdr/tensor.hpp"

namespace svhdr {

template class TensorT<float>;
template class TensorT<double>;

}  // namespace svhdr
