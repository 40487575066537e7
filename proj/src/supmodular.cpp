#include "supmod/supmodular.hpp"

namespace supmod {

std::string ViolationCert::to_text() const {
    return "violation i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) +
           " r=" + std::to_string(r + 1) + " s=" + std::to_string(s + 1) +
           " deficit=" + deficit.to_string();
}

bool is_supmodular_adjacent(const Matrix& a) {
    for (int i = 0; i + 1 < a.rows(); ++i)
        for (int j = 0; j + 1 < a.cols(); ++j)
            if (a(i, j) + a(i + 1, j + 1) < a(i, j + 1) + a(i + 1, j)) return false;
    return true;
}

bool is_supmodular_full(const Matrix& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int r = i + 1; r < a.rows(); ++r)
            for (int j = 0; j < a.cols(); ++j)
                for (int s = j + 1; s < a.cols(); ++s)
                    if (a(i, j) + a(r, s) < a(i, s) + a(r, j)) return false;
    return true;
}

std::optional<ViolationCert> find_violation(const Matrix& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int r = i + 1; r < a.rows(); ++r)
                for (int s = j + 1; s < a.cols(); ++s) {
                    Rational deficit = (a(i, s) + a(r, j)) - (a(i, j) + a(r, s));
                    if (deficit.sign() > 0) return ViolationCert{i, r, j, s, deficit};
                }
    return std::nullopt;
}

}  // namespace supmod
