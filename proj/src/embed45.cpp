#include "cubic27/embed45.hpp"

namespace cubic27 {

std::string BinomialConjugate::str() const {
    std::string s;
    for (const auto& t : plus) s += t.str();
    s += " - ";
    for (const auto& t : minus) s += t.str();
    return s;
}

std::vector<BinomialConjugate> binomial_conjugates(const std::vector<Triederpaar>& tps) {
    std::vector<BinomialConjugate> out;
    for (const auto& tp : tps) out.push_back({tp.rows(), tp.cols(), tp.key()});
    if (out.size() != 120) throw CertificationError("expected 120 binomial conjugates");
    return out;
}

} // namespace cubic27
