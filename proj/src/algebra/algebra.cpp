#include "lissajous/algebra.hpp"

namespace lissajous {

std::string toString(Op op)
{
    switch (op) {
    case Op::XPlus:
        return "X+";
    case Op::XMinus:
        return "X-";
    case Op::Hphi:
        return "Hphi";
    case Op::SqrtHphi:
        return "sqrt(Hphi)";
    case Op::H:
        return "H";
    case Op::O:
        return "O";
    case Op::Ecal:
        return "E";
    case Op::Eprime:
        return "E'";
    case Op::P1:
        return "P1";
    case Op::P2:
        return "P2";
    }
    return "?";
}

template VerificationReport verifyProductPolynomials(const Model<ExactSpace>&);
template VerificationReport verifyProductsOnStates(const Model<ExactSpace>&, int, int);
template VerificationReport verifyGHA(const Model<ExactSpace>&, int, int);
template VerificationReport verifyPolyAlgebra(const Model<ExactSpace>&, int, int);
template VerificationReport verifyCasimir(const Model<ExactSpace>&, int, int);
template VerificationReport verifyProductPolynomials(const Model<SampledSpace>&);
template VerificationReport verifyProductsOnStates(const Model<SampledSpace>&, int, int);
template VerificationReport verifyGHA(const Model<SampledSpace>&, int, int);
template VerificationReport verifyPolyAlgebra(const Model<SampledSpace>&, int, int);
template VerificationReport verifyCasimir(const Model<SampledSpace>&, int, int);

} // namespace lissajous
