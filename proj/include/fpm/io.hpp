#ifndef FPM_IO_HPP
#define FPM_IO_HPP

#include <complex>
#include <string>

#include "json.hpp"

#include "fpm/tensor.hpp"

namespace fpm::io {

/// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double x);

/// Write content to path through a temp file + rename, so readers never
/// observe a partial file.
void atomic_write_text(const std::string& path, const std::string& content);

/// Tensor dump: {"bins": m, "degree": n, "entries": [{"multiset": [b...],
/// "value": v}, ...]}; complex values with nonzero imaginary part are
/// emitted as [re, im].
template <class T>
nlohmann::ordered_json tensor_to_json(const tensor::SymTensor<T>& a) {
  nlohmann::ordered_json j;
  j["bins"] = a.bins();
  j["degree"] = a.degree();
  auto entries = nlohmann::ordered_json::array();
  const tensor::Layout& lay = a.layout();
  for (int i = 0; i < lay.size(); ++i) {
    nlohmann::ordered_json e;
    e["multiset"] = lay.tuple(i);
    if constexpr (std::is_same_v<T, std::complex<double>>) {
      if (a[i].imag() == 0.0) {
        e["value"] = a[i].real();
      } else {
        e["value"] = {a[i].real(), a[i].imag()};
      }
    } else {
      e["value"] = a[i];
    }
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace fpm::io

#endif
