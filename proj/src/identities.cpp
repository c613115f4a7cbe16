#include "nullframe/curvature.hpp"

namespace nf {

namespace {

// Values of every letter, curvature scalar and their frame derivatives at the point.
struct Ctx {
    const FrameData& d;
    explicit Ctx(const FrameData& fd) : d(fd) {}

    cplx dir(int k, const Jet& j) const { return directional(d.ev, k, j).value(); }
    // delta = e1, delta-bar = e2, triangle = e3, D = e4
    cplx del(const Jet& j) const { return dir(0, j); }
    cplx delb(const Jet& j) const { return dir(1, j); }
    cplx tri(const Jet& j) const { return dir(2, j); }
    cplx D(const Jet& j) const { return dir(3, j); }

    const Jet& U(Letter l) const { return d.spin.u[l]; }
    const Jet& Up(Letter l) const { return d.spin.p[l]; }
    const Jet& Psi(int n) const { return d.scalars.psi[n]; }
    const Jet& PsiP(int n) const { return d.scalars.psi_p[n]; }
    const Jet& P(int a, int b) const { return d.scalars.P[a - 1][b - 1]; }
};

}  // namespace

std::vector<Residual> np_residuals(const FrameData& fd) {
    if (!fd.has_curvature) throw std::invalid_argument("structure equations need coframe order >= 2");
    const Ctx c(fd);
    const auto& s = fd.spin;
    const cplx al = s(kAlpha), be = s(kBeta), ga = s(kGamma), ep = s(kEpsilon), la = s(kLambda), mu = s(kMu),
               nu = s(kNu), pi = s(kPi), rh = s(kRho), si = s(kSigma), ta = s(kTau), ka = s(kKappa);
    const cplx alp = s.primed(kAlpha), bep = s.primed(kBeta), gap = s.primed(kGamma), epp = s.primed(kEpsilon),
               lap = s.primed(kLambda), mup = s.primed(kMu), nup = s.primed(kNu), pip = s.primed(kPi),
               rhp = s.primed(kRho), sip = s.primed(kSigma), tap = s.primed(kTau), kap = s.primed(kKappa);
    const cplx Y0 = c.Psi(0).value(), Y1 = c.Psi(1).value(), Y2 = c.Psi(2).value(), Y3 = c.Psi(3).value(),
               Y4 = c.Psi(4).value();
    const cplx Z0 = c.PsiP(0).value(), Z1 = c.PsiP(1).value(), Z2 = c.PsiP(2).value(), Z3 = c.PsiP(3).value(),
               Z4 = c.PsiP(4).value();
    const cplx P11 = c.P(1, 1).value(), P12 = c.P(1, 2).value(), P13 = c.P(1, 3).value(), P14 = c.P(1, 4).value(),
               P22 = c.P(2, 2).value(), P23 = c.P(2, 3).value(), P24 = c.P(2, 4).value(), P33 = c.P(3, 3).value(),
               P34 = c.P(3, 4).value(), P44 = c.P(4, 4).value();

    std::vector<Residual> r;
    auto add = [&](const char* label, const char* lhs, cplx v) { r.push_back({label, lhs, v, 2}); };

    add("np01", "delta kappa",
        c.del(c.U(kKappa)) - (c.D(c.U(kSigma)) + alp * ka + 3.0 * be * ka + ka * pip - 3.0 * ep * si + epp * si +
                              rh * si + rhp * si + ka * ta + Y0));
    add("np02", "delta-bar kappa'",
        c.delb(c.Up(kKappa)) - (c.D(c.Up(kSigma)) + al * kap + 3.0 * bep * kap + kap * pi - 3.0 * epp * sip +
                                ep * sip + rhp * sip + rh * sip + kap * tap + Z0));
    add("np03", "D beta",
        c.D(c.U(kBeta)) - (c.del(c.U(kEpsilon)) - alp * ep - be * epp - ga * ka - ka * mu - ep * pip - be * rhp -
                           al * si + pi * si - Y1));
    add("np04", "D beta'",
        c.D(c.Up(kBeta)) - (c.delb(c.Up(kEpsilon)) - al * epp - bep * ep - gap * kap - kap * mup - epp * pi -
                            bep * rh - alp * sip + pip * sip - Z1));
    add("np05", "delta rho",
        c.del(c.U(kRho)) - (c.delb(c.U(kSigma)) + ka * mup - ka * mu + alp * rh + be * rh - 3.0 * al * si + bep * si -
                            rhp * ta + rh * ta - Y1 - P14));
    add("np06", "delta-bar rho'",
        c.delb(c.Up(kRho)) - (c.del(c.Up(kSigma)) + kap * mu - kap * mup + al * rhp + bep * rhp - 3.0 * alp * sip +
                              be * sip - rh * tap + rhp * tap - Z1 - P24));
    add("np07", "D tau",
        c.D(c.U(kTau)) - (c.tri(c.U(kKappa)) - gap * ka - 3.0 * ga * ka + pip * rh + pi * si - si * tap - epp * ta +
                          ep * ta - rh * ta - Y1 + P14));
    add("np08", "D tau'",
        c.D(c.Up(kTau)) - (c.tri(c.Up(kKappa)) - ga * kap - 3.0 * gap * kap + pi * rhp + pip * sip - sip * ta -
                           ep * tap + epp * tap - rhp * tap - Z1 + P24));
    add("np09", "triangle rho",
        c.tri(c.U(kRho)) - (c.delb(c.U(kTau)) - ka * nu + ga * rh + gap * rh - mup * rh - la * si - al * ta +
                            bep * ta - ta * tap - Y2 - P12 - P34));
    add("np10", "triangle rho'",
        c.tri(c.Up(kRho)) - (c.del(c.Up(kTau)) - kap * nup + gap * rhp + ga * rhp - mu * rhp - lap * sip - alp * tap +
                             be * tap - ta * tap - Z2 - P12 - P34));
    add("np11", "triangle alpha",
        c.tri(c.U(kAlpha)) - (c.delb(c.U(kGamma)) + bep * ga + al * gap - be * la - al * mup - ep * nu + nu * rh -
                              la * ta - ga * tap + Y3));
    add("np12", "triangle alpha'",
        c.tri(c.Up(kAlpha)) - (c.del(c.Up(kGamma)) + be * gap + alp * ga - bep * lap - alp * mu - epp * nup +
                               nup * rhp - lap * tap - gap * ta + Z3));
    add("np13", "triangle lambda",
        c.tri(c.U(kLambda)) - (c.delb(c.U(kNu)) - 3.0 * ga * la + gap * la - la * mu - la * mup + 3.0 * al * nu +
                               bep * nu - nu * pi - nu * tap - Y4));
    add("np14", "triangle lambda'",
        c.tri(c.Up(kLambda)) - (c.del(c.Up(kNu)) - 3.0 * gap * lap + ga * lap - lap * mup - lap * mu +
                                3.0 * alp * nup + be * nup - nup * pip - nup * ta - Z4));
    add("np15", "D lambda",
        c.D(c.U(kLambda)) - (c.delb(c.U(kPi)) - 3.0 * ep * la + epp * la - kap * nu + al * pi - bep * pi - pi * pi -
                             la * rh - mu * sip - P22));
    add("np16", "D lambda'",
        c.D(c.Up(kLambda)) - (c.del(c.Up(kPi)) - 3.0 * epp * lap + ep * lap - ka * nup + alp * pip - be * pip -
                              pip * pip - lap * rhp - mup * si - P11));
    add("np17", "D mu",
        c.D(c.U(kMu)) - (c.del(c.U(kPi)) - ep * mu - epp * mu - ka * nu - alp * pi + be * pi - pi * pip - mu * rhp -
                         la * si - Y2 - P12 - P34));
    add("np18", "D mu'",
        c.D(c.Up(kMu)) - (c.delb(c.Up(kPi)) - epp * mup - ep * mup - kap * nup - al * pip + bep * pip - pi * pip -
                          mup * rh - lap * sip - Z2 - P12 - P34));
    add("np19", "D alpha",
        c.D(c.U(kAlpha)) - (c.delb(c.U(kEpsilon)) + al * epp - 2.0 * al * ep - bep * ep - ga * kap - ka * la -
                            ep * pi - al * rh + pi * rh - be * sip + P24));
    add("np20", "D alpha'",
        c.D(c.Up(kAlpha)) - (c.del(c.Up(kEpsilon)) + alp * ep - 2.0 * alp * epp - be * epp - gap * ka - kap * lap -
                             epp * pip - alp * rhp + pip * rhp - bep * si + P14));
    add("np21", "triangle beta",
        c.tri(c.U(kBeta)) - (c.del(c.U(kGamma)) + alp * ga + 2.0 * be * ga - be * gap - al * lap - be * mu -
                             ep * nup + nu * si - ga * ta - mu * ta - P13));
    add("np22", "triangle beta'",
        c.tri(c.Up(kBeta)) - (c.delb(c.Up(kGamma)) + al * gap + 2.0 * bep * gap - bep * ga - alp * la - bep * mup -
                              epp * nu + nup * sip - gap * tap - mup * tap - P23));
    add("np23", "D rho",
        c.D(c.U(kRho)) - (c.delb(c.U(kKappa)) - 3.0 * al * ka - bep * ka - ka * pi + ep * rh + epp * rh - rh * rh -
                          si * sip - kap * ta - P44));
    add("np24", "D rho'",
        c.D(c.Up(kRho)) - (c.del(c.Up(kKappa)) - 3.0 * alp * kap - be * kap - kap * pip + epp * rhp + ep * rhp -
                           rhp * rhp - si * sip - ka * tap - P44));
    add("np25", "triangle mu",
        c.tri(c.U(kMu)) - (c.del(c.U(kNu)) - la * lap - ga * mu - gap * mu - mu * mu + alp * nu + 3.0 * be * nu -
                           nup * pi - nu * ta - P33));
    add("np26", "triangle mu'",
        c.tri(c.Up(kMu)) - (c.delb(c.Up(kNu)) - la * lap - gap * mup - ga * mup - mup * mup + al * nup +
                            3.0 * bep * nup - nu * pip - nup * tap - P33));
    add("np27", "D nu",
        c.D(c.U(kNu)) - (c.tri(c.U(kPi)) - epp * nu - 3.0 * ep * nu + la * pip - gap * pi + ga * pi + mu * pi -
                         mu * tap - la * ta + Y3 - P23));
    add("np28", "D nu'",
        c.D(c.Up(kNu)) - (c.tri(c.Up(kPi)) - ep * nup - 3.0 * epp * nup + lap * pi - ga * pip + gap * pip +
                          mup * pip - mup * ta - lap * tap + Z3 - P13));
    add("np29", "D gamma",
        c.D(c.U(kGamma)) - (c.tri(c.U(kEpsilon)) - 2.0 * ep * ga - epp * ga - ep * gap - ka * nu + be * pi +
                            al * pip - al * ta + pi * ta - be * tap - Y2 + P34));
    add("np30", "D gamma'",
        c.D(c.Up(kGamma)) - (c.tri(c.Up(kEpsilon)) - 2.0 * epp * gap - ep * gap - epp * ga - kap * nup + bep * pip +
                             alp * pi - alp * tap + pip * tap - bep * ta - Z2 + P34));
    add("np31", "delta-bar mu",
        c.delb(c.U(kMu)) - (c.del(c.U(kLambda)) - alp * la + 3.0 * be * la - al * mu - bep * mu + mu * pi -
                            mup * pi - nu * rh + nu * rhp - Y3 - P23));
    add("np32", "delta mu'",
        c.del(c.Up(kMu)) - (c.delb(c.Up(kLambda)) - al * lap + 3.0 * bep * lap - alp * mup - be * mup + mup * pip -
                            mu * pip - nup * rhp + nup * rh - Z3 - P13));
    add("np33", "delta tau",
        c.del(c.U(kTau)) - (c.tri(c.U(kSigma)) + ka * nup + lap * rh - 3.0 * ga * si + gap * si + mu * si -
                            alp * ta + be * ta + ta * ta + P11));
    add("np34", "delta-bar tau'",
        c.delb(c.Up(kTau)) - (c.tri(c.Up(kSigma)) + kap * nu + la * rhp - 3.0 * gap * sip + ga * sip + mup * sip -
                              al * tap + bep * tap + tap * tap + P22));
    add("np35", "delta alpha",
        c.del(c.U(kAlpha)) - (c.delb(c.U(kBeta)) + al * alp - 2.0 * al * be + be * bep - ep * mu + ep * mup +
                              ga * rh + mu * rh - ga * rhp - la * si - Y2 + P12));
    add("np36", "delta-bar alpha'",
        c.delb(c.Up(kAlpha)) - (c.del(c.Up(kBeta)) + al * alp - 2.0 * alp * bep + be * bep - epp * mup +
                                epp * mu + gap * rhp + mup * rhp - gap * rh - lap * sip - Z2 + P12));
    return r;
}

std::vector<Residual> bianchi_residuals(const FrameData& fd) {
    if (!fd.has_cotton) throw std::invalid_argument("Bianchi identities need coframe order >= 3");
    const Ctx c(fd);
    const auto& s = fd.spin;
    const cplx al = s(kAlpha), be = s(kBeta), ga = s(kGamma), ep = s(kEpsilon), la = s(kLambda), mu = s(kMu),
               nu = s(kNu), pi = s(kPi), rh = s(kRho), si = s(kSigma), ta = s(kTau), ka = s(kKappa);
    const cplx alp = s.primed(kAlpha), bep = s.primed(kBeta), gap = s.primed(kGamma), epp = s.primed(kEpsilon),
               lap = s.primed(kLambda), mup = s.primed(kMu), nup = s.primed(kNu), pip = s.primed(kPi),
               rhp = s.primed(kRho), sip = s.primed(kSigma), tap = s.primed(kTau), kap = s.primed(kKappa);
    const cplx Y0 = c.Psi(0).value(), Y1 = c.Psi(1).value(), Y2 = c.Psi(2).value(), Y3 = c.Psi(3).value(),
               Y4 = c.Psi(4).value();
    const cplx Z0 = c.PsiP(0).value(), Z1 = c.PsiP(1).value(), Z2 = c.PsiP(2).value(), Z3 = c.PsiP(3).value(),
               Z4 = c.PsiP(4).value();
    const cplx P11 = c.P(1, 1).value(), P12 = c.P(1, 2).value(), P13 = c.P(1, 3).value(), P14 = c.P(1, 4).value(),
               P22 = c.P(2, 2).value(), P23 = c.P(2, 3).value(), P24 = c.P(2, 4).value(), P33 = c.P(3, 3).value(),
               P34 = c.P(3, 4).value(), P44 = c.P(4, 4).value();
    auto D = [&](const Jet& j) { return c.D(j); };
    auto del = [&](const Jet& j) { return c.del(j); };
    auto delb = [&](const Jet& j) { return c.delb(j); };
    auto tri = [&](const Jet& j) { return c.tri(j); };
    auto Y = [&](int n) -> const Jet& { return c.Psi(n); };
    auto Z = [&](int n) -> const Jet& { return c.PsiP(n); };
    auto P = [&](int a, int b) -> const Jet& { return c.P(a, b); };

    std::vector<Residual> r;
    auto add = [&](const char* label, const char* lhs, cplx v) { r.push_back({label, lhs, v, 3}); };

    add("b01", "delta Psi1",
        del(Y(1)) - (tri(Y(0)) - D(P(1, 1)) + del(P(1, 4)) - 4.0 * ga * Y0 + mu * Y0 + 2.0 * be * Y1 -
                     3.0 * si * Y2 + 4.0 * ta * Y1 - 2.0 * ka * P13 + 2.0 * ep * P11 - 2.0 * epp * P11 -
                     2.0 * be * P14 - 2.0 * pip * P14 + lap * P44 - rhp * P11 - si * P12 + si * P34));
    add("b02", "delta-bar Psi'1",
        delb(Z(1)) - (tri(Z(0)) - D(P(2, 2)) + delb(P(2, 4)) - 4.0 * gap * Z0 + mup * Z0 + 2.0 * bep * Z1 -
                      3.0 * sip * Z2 + 4.0 * tap * Z1 - 2.0 * kap * P23 + 2.0 * epp * P22 - 2.0 * ep * P22 -
                      2.0 * bep * P24 - 2.0 * pi * P24 + la * P44 - rh * P22 - sip * P12 + sip * P34));
    add("b03", "D Psi1",
        D(Y(1)) - (-delb(Y(0)) - D(P(1, 4)) + del(P(4, 4)) + 4.0 * al * Y0 + pi * Y0 + 2.0 * ep * Y1 -
                   3.0 * ka * Y2 - 4.0 * rh * Y1 + kap * P11 + ka * P12 + 2.0 * ep * P14 - ka * P34 -
                   2.0 * alp * P44 - 2.0 * be * P44 - pip * P44 - 2.0 * rhp * P14 - 2.0 * si * P24));
    add("b04", "D Psi'1",
        D(Z(1)) - (-del(Z(0)) - D(P(2, 4)) + delb(P(4, 4)) + 4.0 * alp * Z0 + pip * Z0 + 2.0 * epp * Z1 -
                   3.0 * kap * Z2 - 4.0 * rhp * Z1 + ka * P22 + kap * P12 + 2.0 * epp * P24 - kap * P34 -
                   2.0 * al * P44 - 2.0 * bep * P44 - pi * P44 - 2.0 * rh * P24 - 2.0 * sip * P14));
    add("b05", "triangle Psi1",
        tri(Y(1)) - (del(Y(2)) + D(P(1, 3)) - del(P(3, 4)) + nu * Y0 + 2.0 * ga * Y1 - 2.0 * mu * Y1 -
                     2.0 * si * Y3 - 3.0 * ta * Y2 - pi * P11 - pip * P12 + 2.0 * epp * P13 + mu * P14 +
                     lap * P24 + ka * P33 + pip * P34 + rhp * P13 + si * P23));
    add("b06", "triangle Psi'1",
        tri(Z(1)) - (delb(Z(2)) + D(P(2, 3)) - delb(P(3, 4)) + nup * Z0 + 2.0 * gap * Z1 - 2.0 * mup * Z1 -
                     2.0 * sip * Z3 - 3.0 * tap * Z2 - pip * P22 - pi * P12 + 2.0 * ep * P23 + mup * P24 +
                     la * P14 + kap * P33 + pi * P34 + rh * P23 + sip * P13));
    add("b07", "delta-bar Psi1",
        delb(Y(1)) - (-D(Y(2)) + D(P(1, 2)) - del(P(2, 4)) + la * Y0 + 2.0 * al * Y1 + 2.0 * pi * Y1 +
                      2.0 * ka * Y3 - 3.0 * rh * Y2 + kap * P13 + pi * P14 + ka * P23 + 2.0 * alp * P24 +
                      pip * P24 - mu * P44 + rhp * P12 - rhp * P34 + si * P22));
    add("b08", "delta Psi'1",
        del(Z(1)) - (-D(Z(2)) + D(P(1, 2)) - delb(P(1, 4)) + lap * Z0 + 2.0 * alp * Z1 + 2.0 * pip * Z1 +
                     2.0 * kap * Z3 - 3.0 * rhp * Z2 + ka * P23 + pip * P24 + kap * P13 + 2.0 * al * P14 +
                     pi * P14 - mup * P44 + rh * P12 - rh * P34 + sip * P11));
    add("b09", "triangle Psi2",
        tri(Y(2)) - (-del(Y(3)) + tri(P(1, 2)) - delb(P(1, 3)) + 2.0 * nu * Y1 - 3.0 * mu * Y2 - 2.0 * be * Y3 +
                     2.0 * ta * Y3 + si * Y4 + la * P11 + mup * P12 - 2.0 * bep * P13 + nu * P14 + nup * P24 -
                     rh * P33 - mup * P34 + ta * P23 + tap * P13));
    add("b10", "triangle Psi'2",
        tri(Z(2)) - (-delb(Z(3)) + tri(P(1, 2)) - del(P(2, 3)) + 2.0 * nup * Z1 - 3.0 * mup * Z2 -
                     2.0 * bep * Z3 + 2.0 * tap * Z3 + sip * Z4 + lap * P22 + mu * P12 - 2.0 * be * P23 +
                     nup * P24 + nu * P14 - rhp * P33 - mu * P34 + tap * P13 + ta * P23));
    add("b11", "D Psi3",
        D(Y(3)) - (delb(Y(2)) + tri(P(2, 4)) - delb(P(3, 4)) - 2.0 * la * Y1 - 3.0 * pi * Y2 - 2.0 * ep * Y3 +
                   ka * Y4 - 2.0 * rh * Y3 + la * P14 + rh * P23 - 2.0 * gap * P24 + mup * P24 + nu * P44 +
                   sip * P13 - ta * P22 - tap * P12 + tap * P34));
    add("b12", "D Psi'3",
        D(Z(3)) - (del(Z(2)) + tri(P(1, 4)) - del(P(3, 4)) - 2.0 * lap * Z1 - 3.0 * pip * Z2 - 2.0 * epp * Z3 +
                   kap * Z4 - 2.0 * rhp * Z3 + lap * P24 + rhp * P13 - 2.0 * ga * P14 + mu * P14 + nup * P44 +
                   si * P23 - tap * P11 - ta * P12 + ta * P34));
    add("b13", "triangle Psi3",
        tri(Y(3)) - (-del(Y(4)) - tri(P(2, 3)) + delb(P(3, 3)) - 3.0 * nu * Y2 - 2.0 * ga * Y3 - 4.0 * mu * Y3 -
                     4.0 * be * Y4 + ta * Y4 + nu * P12 - 2.0 * la * P13 + nup * P22 - 2.0 * ga * P23 -
                     2.0 * mup * P23 + 2.0 * al * P33 + 2.0 * bep * P33 - nu * P34 - tap * P33));
    add("b14", "triangle Psi'3",
        tri(Z(3)) - (-delb(Z(4)) - tri(P(1, 3)) + del(P(3, 3)) - 3.0 * nup * Z2 - 2.0 * gap * Z3 -
                     4.0 * mup * Z3 - 4.0 * bep * Z4 + tap * Z4 + nup * P12 - 2.0 * lap * P23 + nu * P11 -
                     2.0 * gap * P13 - 2.0 * mu * P13 + 2.0 * alp * P33 + 2.0 * be * P33 - nup * P34 - ta * P33));
    add("b15", "delta-bar Psi3",
        delb(Y(3)) - (D(Y(4)) - tri(P(2, 2)) + delb(P(2, 3)) - 3.0 * la * Y2 - 2.0 * al * Y3 + 4.0 * pi * Y3 +
                      4.0 * ep * Y4 + rh * Y4 + 2.0 * gap * P22 - 2.0 * ga * P22 - mup * P22 - la * P12 +
                      2.0 * al * P23 - 2.0 * nu * P24 + la * P34 + sip * P33 - 2.0 * tap * P23));
    add("b16", "delta Psi'3",
        del(Z(3)) - (D(Z(4)) - tri(P(1, 1)) + del(P(1, 3)) - 3.0 * lap * Z2 - 2.0 * alp * Z3 + 4.0 * pip * Z3 +
                     4.0 * epp * Z4 + rhp * Z4 + 2.0 * ga * P11 - 2.0 * gap * P11 - mu * P11 - lap * P12 +
                     2.0 * alp * P13 - 2.0 * nup * P14 + lap * P34 + si * P33 - 2.0 * ta * P13));
    add("b17", "delta P12",
        del(P(1, 2)) - (D(P(1, 3)) + tri(P(1, 4)) + delb(P(1, 1)) - 2.0 * del(P(3, 4)) - 2.0 * al * P11 +
                        2.0 * bep * P11 - pi * P11 - pip * P12 + 2.0 * epp * P13 + 2.0 * rh * P13 -
                        2.0 * ga * P14 + mu * P14 + 2.0 * mup * P14 + lap * P24 + ka * P33 + pip * P34 +
                        nup * P44 + rhp * P13 + si * P23 - ta * P12 + ta * P34 - tap * P11));
    add("b18", "delta-bar P12",
        delb(P(1, 2)) - (D(P(2, 3)) + tri(P(2, 4)) + del(P(2, 2)) - 2.0 * delb(P(3, 4)) - 2.0 * alp * P22 +
                         2.0 * be * P22 - pip * P22 - pi * P12 + 2.0 * ep * P23 + 2.0 * rhp * P23 -
                         2.0 * gap * P24 + mup * P24 + 2.0 * mu * P24 + la * P14 + kap * P33 + pi * P34 +
                         nu * P44 + rh * P23 + sip * P13 - tap * P12 + tap * P34 - ta * P22));
    add("b19", "D P34",
        D(P(3, 4)) - (-2.0 * D(P(1, 2)) + tri(P(4, 4)) + delb(P(1, 4)) + del(P(2, 4)) - rh * P12 - kap * P13 -
                      2.0 * al * P14 - pi * P14 - ka * P23 - 2.0 * alp * P24 - pip * P24 + rh * P34 -
                      2.0 * ga * P44 - 2.0 * gap * P44 + mu * P44 + mup * P44 - rhp * P12 + rhp * P34 -
                      si * P22 - sip * P11 - 2.0 * ta * P24 - 2.0 * tap * P14));
    add("b20", "triangle P34",
        tri(P(3, 4)) - (D(P(3, 3)) - 2.0 * tri(P(1, 2)) + delb(P(1, 3)) + del(P(2, 3)) - la * P11 - mu * P12 -
                        mup * P12 + 2.0 * bep * P13 - 2.0 * pi * P13 - nu * P14 - lap * P22 + 2.0 * be * P23 -
                        2.0 * pip * P23 - nup * P24 + 2.0 * ep * P33 + 2.0 * epp * P33 + rh * P33 + mu * P34 +
                        mup * P34 + rhp * P33 - ta * P23 - tap * P13));
    return r;
}

std::vector<Residual> cotton_bianchi_residuals(const FrameData& fd) {
    if (!fd.has_cotton) throw std::invalid_argument("Cotton forms need coframe order >= 3");
    const Ctx c(fd);
    const auto& s = fd.spin;
    const cplx al = s(kAlpha), be = s(kBeta), ga = s(kGamma), ep = s(kEpsilon), la = s(kLambda), mu = s(kMu),
               nu = s(kNu), pi = s(kPi), rh = s(kRho), si = s(kSigma), ta = s(kTau), ka = s(kKappa);
    const cplx Y0 = c.Psi(0).value(), Y1 = c.Psi(1).value(), Y2 = c.Psi(2).value(), Y3 = c.Psi(3).value(),
               Y4 = c.Psi(4).value();
    auto Y = [&](int n) -> const Jet& { return c.Psi(n); };
    // 1-based Cotton component
    auto A = [&](int a, int b, int e) { return fd.A[a - 1][b - 1][e - 1].value(); };

    std::vector<Residual> r;
    auto add = [&](const char* label, const char* lhs, cplx v) { r.push_back({label, lhs, v, 3}); };
    add("cotton-A141", "A141",
        A(1, 4, 1) - (c.tri(Y(0)) + (mu - 4.0 * ga) * Y0 - c.del(Y(1)) + 2.0 * (2.0 * ta + be) * Y1 - 3.0 * si * Y2));
    add("cotton-A414", "A414",
        A(4, 1, 4) - (c.delb(Y(0)) - (pi + 4.0 * al) * Y0 + c.D(Y(1)) + 2.0 * (2.0 * rh - ep) * Y1 + 3.0 * ka * Y2));
    add("cotton-A341", "A341",
        A(3, 4, 1) - (c.tri(Y(1)) + 2.0 * (mu - ga) * Y1 - c.del(Y(2)) + 3.0 * ta * Y2 - nu * Y0 + 2.0 * si * Y3));
    // The printed form has the opposite sign; numerically it is A241 = -A214.
    add("cotton-A214", "A214",
        -A(2, 1, 4) - (c.delb(Y(1)) - 2.0 * (al + pi) * Y1 + c.D(Y(2)) + 3.0 * rh * Y2 - la * Y0 - 2.0 * ka * Y3));
    add("cotton-A132", "A132",
        A(1, 3, 2) - (c.tri(Y(2)) + 3.0 * mu * Y2 + c.del(Y(3)) + 2.0 * (be - ta) * Y3 - 2.0 * nu * Y1 - si * Y4));
    add("cotton-A423", "A423",
        A(4, 2, 3) - (c.delb(Y(2)) - 3.0 * pi * Y2 - c.D(Y(3)) - 2.0 * (ep + rh) * Y3 - 2.0 * la * Y1 + ka * Y4));
    add("cotton-A323", "A323",
        A(3, 2, 3) - (c.tri(Y(3)) + 2.0 * (ga + 2.0 * mu) * Y3 + c.del(Y(4)) + (4.0 * be - ta) * Y4 + 3.0 * nu * Y2));
    add("cotton-A223", "A223",
        A(2, 2, 3) - (c.delb(Y(3)) + 2.0 * (al - 2.0 * pi) * Y3 - c.D(Y(4)) - (rh + 4.0 * ep) * Y4 + 3.0 * la * Y2));
    return r;
}

}  // namespace nf
