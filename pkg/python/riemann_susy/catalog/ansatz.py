"""
Invariant ansatz per subalgebra: symmetry variable, change of variables and
the printed reduced equations (written with s for sigma and _s jets).
"""
from ..reduction import ReductionAnsatz

S1 = ("s",)
EPS = {"choices": {"eps": (-1.0, 1.0)}}


def _a(label, system, sigma, fields, functions, expected, invariants=(), domain=None, notes=()):
    return ReductionAnsatz(label, system, sigma, dict(fields), dict(functions), list(expected),
                           list(invariants), dict(domain or {}), list(notes))


_FG = {"F": S1, "G": S1}
_RS = {"R": S1, "S": S1}

CLASSICAL = [
    _a("L1", "classical", "t", {"R": "R", "S": "S"}, _RS, ["R_s", "S_s"], ["R", "S"]),
    _a("L2", "classical", "x/t", {"R": "R", "S": "S"}, _RS,
       ["-s*R_s + S*R_s", "-s*S_s + R*S_s"], ["R", "S"]),
    _a("L3", "classical", "x*t", {"R": "F/t**2", "S": "G/t**2"}, _FG,
       ["-2*F + s*F_s + G*F_s", "-2*G + s*G_s + F*G_s"], ["t**2*R", "t**2*S"]),
    _a("L4", "classical", "t", {"R": "F + x/t", "S": "G + x/t"}, _FG,
       ["F_s + G/s", "G_s + F/s"], ["R - x/t", "S - x/t"]),
    _a("L5", "classical", "x**2 + t**2",
       {"R": "(x*tan(F) - t)/(x + t*tan(F))", "S": "(x*tan(G) - t)/(x + t*tan(G))"}, _FG,
       ["-1 - tan(F)**2 + 2*s*tan(G)*F_s + 2*s*tan(G)*tan(F)**2*F_s",
        "-1 - tan(G)**2 + 2*s*tan(F)*G_s + 2*s*tan(F)*tan(G)**2*G_s"],
       ["atan(R) + atan(t/x)", "atan(S) + atan(t/x)"]),
    _a("L6", "classical", "x*t**(-(k + 1)/(k - 1))",
       {"R": "t**(2/(k - 1))*F", "S": "t**(2/(k - 1))*G"}, _FG,
       ["2/(k - 1)*F - (k + 1)/(k - 1)*s*F_s + G*F_s", "2/(k - 1)*G - (k + 1)/(k - 1)*s*G_s + F*G_s"],
       ["t**(-2/(k - 1))*R", "t**(-2/(k - 1))*S"], {"ranges": {"k": (2.5, 4.0)}}),
    _a("L7", "classical", "t", {"R": "x*F", "S": "x*G"}, _FG,
       ["F_s + G*F", "G_s + F*G"], ["R/x", "S/x"]),
    _a("L8", "classical", "x", {"R": "F/t", "S": "G/t"}, _FG,
       ["-F + G*F_s", "-G + F*G_s"], ["t*R", "t*S"]),
    _a("L9", "classical", "x/t - eps*log(t)", {"R": "F + eps*log(t)", "S": "G + eps*log(t)"}, _FG,
       ["-s*F_s - eps*F_s + G*F_s + eps", "-s*G_s - eps*G_s + F*G_s + eps"],
       ["R - eps*log(t)", "S - eps*log(t)"], EPS),
    _a("L10", "classical", "sqrt(x**2 + t**2)*exp(k*atan(t/x))",
       {"R": "(x*tan(F) - t)/(x + t*tan(F))", "S": "(x*tan(G) - t)/(x + t*tan(G))"}, _FG,
       ["k*s*sec(F)**2*F_s + s*tan(G)*sec(F)**2*F_s - tan(F)**2 - 1",
        "k*s*sec(G)**2*G_s + s*tan(F)*sec(G)**2*G_s - tan(G)**2 - 1"],
       ["atan(R) + atan(t/x)", "atan(S) + atan(t/x)"]),
    _a("L11", "classical", "t", {"R": "F + x/(t + eps)", "S": "G + x/(t + eps)"}, _FG,
       ["F_s + G/(s + eps)", "G_s + F/(s + eps)"], ["R - x/(t + eps)", "S - x/(t + eps)"], EPS),
    _a("L12", "classical", "x*exp(-2*eps*t)", {"R": "x*F", "S": "x*G"}, _FG,
       ["-2*eps*s*F_s + G*F + s*G*F_s", "-2*eps*s*G_s + F*G + s*F*G_s"], ["R/x", "S/x"], EPS),
    _a("L13", "classical", "t*exp(2*eps*x)", {"R": "F/t", "S": "G/t"}, _FG,
       ["-F + s*F_s + 2*eps*s*G*F_s", "-G + s*G_s + 2*eps*s*F*G_s"], ["t*R", "t*S"], EPS),
]

_ALL = {"R": S1, "S": S1, "xi": S1, "psi": S1}
_FGXP = {"F": S1, "G": S1, "xi": S1, "psi": S1}
_FGLP = {"F": S1, "G": S1, "Lambda": S1, "psi": S1}
_FGXO = {"F": S1, "G": S1, "xi": S1, "Omega": S1}
_FGLO = {"F": S1, "G": S1, "Lambda": S1, "Omega": S1}
_RSLO = {"R": S1, "S": S1, "Lambda": S1, "Omega": S1}
_IDENTITY = {"R": "R", "S": "S", "xi": "xi", "psi": "psi"}

_A7 = "a/(1 + 3*a)"
_Q = "(1 + 3*a)/(1 + 2*a)"
_N = "(1 + a + 3*b)"

SUSY = [
    _a("SL1", "susy", "t", _IDENTITY, _ALL, ["R_s", "S_s", "xi_s", "psi_s"], ["R", "S", "xi", "psi"]),
    _a("SL2", "susy", "x", _IDENTITY, _ALL,
       ["S*R_s + psi_s*xi_s", "R*S_s + xi_s*psi_s", "S*xi_s", "R*psi_s"], ["R", "S", "xi", "psi"]),
    _a("SL3", "susy", "t", {"R": "F + x/t", "S": "G + x/t", "xi": "xi", "psi": "psi"}, _FGXP,
       ["F_s + G/s", "G_s + F/s", "xi_s", "psi_s"], ["R - x/t", "S - x/t", "xi", "psi"]),
    _a("SL4", "susy", "x**3/t**2", {"R": "t**(-1/3)*F", "S": "t**(-1/3)*G", "xi": "xi", "psi": "psi"}, _FGXP,
       ["-F/3 - 2*s*F_s + 3*s**(2/3)*G*F_s + 9*s**(4/3)*psi_s*xi_s",
        "-G/3 - 2*s*G_s + 3*s**(2/3)*F*G_s + 9*s**(4/3)*xi_s*psi_s",
        "-2*s*xi_s + 3*s**(2/3)*G*xi_s", "-2*s*psi_s + 3*s**(2/3)*F*psi_s"],
       ["t**(1/3)*R", "t**(1/3)*S", "xi", "psi"]),
    _a("SL5", "susy", "x/t", {"R": "R", "S": "S", "xi": "t*Lambda", "psi": "psi"},
       {"R": S1, "S": S1, "Lambda": S1, "psi": S1},
       ["-s*R_s + S*R_s + psi_s*Lambda_s", "-s*S_s + R*S_s + Lambda_s*psi_s",
        "Lambda - s*Lambda_s + S*Lambda_s", "-s*psi_s + R*psi_s"], ["R", "S", "xi/t", "psi"]),
    _a("SL6", "susy", "x/t", {"R": "R", "S": "S", "xi": "xi", "psi": "t*Omega"},
       {"R": S1, "S": S1, "xi": S1, "Omega": ("t",)},
       ["-s*R_s + S*R_s + Omega_s*xi_s", "-s*S_s + R*S_s + xi_s*Omega_s",
        "-s*xi_s + S*xi_s", "Omega - s*Omega_s + R*Omega_s"], ["R", "S", "xi", "psi/t"],
       notes=["printed change of variable psi = t*Omega(t) makes Omega depend on t; the reduction needs Omega(sigma)"]),
    _a("SL6*", "susy", "x/t", {"R": "R", "S": "S", "xi": "xi", "psi": "t*Omega"},
       {"R": S1, "S": S1, "xi": S1, "Omega": S1},
       ["-s*R_s + S*R_s + Omega_s*xi_s", "-s*S_s + R*S_s + xi_s*Omega_s",
        "-s*xi_s + S*xi_s", "Omega - s*Omega_s + R*Omega_s"], ["R", "S", "xi", "psi/t"],
       notes=["corrected change of variable psi = t*Omega(sigma)"]),
    _a("SL7", "susy", "x**(1 + 3*a)/t**(1 + 2*a)",
       {"R": "t**(-{})*F".format(_A7), "S": "t**(-{})*G".format(_A7),
        "xi": "t**(1/(1 + 3*a))*Lambda", "psi": "psi"}, _FGLP,
       ["-{a7}*F - (1 + 2*a)*s*F_s + (1 + 3*a)*s**(3*a/(1 + 3*a))*G*F_s"
        " + (1 + 3*a)**2*s**(6*a/(1 + 3*a))*psi_s*Lambda_s".format(a7=_A7),
        "-{a7}*G - (1 + 2*a)*s*G_s + (1 + 3*a)*s**(3*a/(1 + 3*a))*F*G_s"
        " + (1 + 3*a)**2*s**(6*a/(1 + 3*a))*Lambda_s*psi_s".format(a7=_A7),
        "Lambda/(1 + 3*a) - (1 + 2*a)*s*Lambda_s + (1 + 3*a)*s**(3*a/(1 + 3*a))*G*Lambda_s",
        "-(1 + 2*a)*s*psi_s + (1 + 3*a)*s**(3*a/(1 + 3*a))*F*psi_s"],
       ["t**({})*R".format(_A7), "t**({})*S".format(_A7), "t**(-1/(1 + 3*a))*xi", "psi"]),
    _a("SL7(a=-1/2)", "susy", "x", {"R": "F/t", "S": "G/t", "xi": "Lambda/t**2", "psi": "psi"}, _FGLP,
       ["-F + G*F_s + psi_s*Lambda_s", "-G + F*G_s + Lambda_s*psi_s", "-2*Lambda + G*Lambda_s", "F*psi_s"],
       ["t*R", "t*S", "t**2*xi", "psi"]),
    _a("SL8", "susy", "x**(1 + 3*a)/t**(1 + 2*a)",
       {"R": "t**(-{})*F".format(_A7), "S": "t**(-{})*G".format(_A7),
        "xi": "xi", "psi": "t**(1/(1 + 3*a))*Omega"}, _FGXO,
       ["-{a7}*F - (1 + 2*a)*s*F_s + (1 + 3*a)*s**(3*a/(1 + 3*a))*G*F_s"
        " + (1 + 3*a)**2*s**(6*a/(1 + 3*a))*Omega_s*xi_s".format(a7=_A7),
        "-{a7}*G - (1 + 2*a)*s*G_s + (1 + 3*a)*s**(3*a/(1 + 3*a))*F*G_s"
        " + (1 + 3*a)**2*s**(6*a/(1 + 3*a))*xi_s*Omega_s".format(a7=_A7),
        "-(1 + 2*a)*s*xi_s + (1 + 3*a)*s**(3*a/(1 + 3*a))*G*xi_s",
        "Omega/(1 + 3*a) - (1 + 2*a)*s*Omega_s + (1 + 3*a)*s**(3*a/(1 + 3*a))*F*Omega_s"],
       ["t**({})*R".format(_A7), "t**({})*S".format(_A7), "xi", "t**(-1/(1 + 3*a))*psi"]),
    _a("SL8(a=-1/2)", "susy", "x", {"R": "F/t", "S": "G/t", "xi": "xi", "psi": "Omega/t**2"}, _FGXO,
       ["-F + G*F_s + Omega_s*xi_s", "-G + F*G_s + xi_s*Omega_s", "G*xi_s", "-2*Omega + F*Omega_s"],
       ["t*R", "t*S", "xi", "t**2*psi"]),
    _a("SL9", "susy", "x/t", {"R": "R", "S": "S", "xi": "t**(a/(1 + a))*Lambda", "psi": "t**(1/(1 + a))*Omega"},
       _RSLO,
       ["-s*R_s + S*R_s + Omega_s*Lambda_s", "-s*S_s + R*S_s + Lambda_s*Omega_s",
        "a/(1 + a)*Lambda - s*Lambda_s + S*Lambda_s", "Omega/(1 + a) - s*Omega_s + R*Omega_s"],
       ["R", "S", "t**(-a/(1 + a))*xi", "t**(-1/(1 + a))*psi"]),
    _a("SL10", "susy", "x**({n}/(1 + a + 2*b))/t".format(n=_N),
       {"R": "t**(-b/{n})*F".format(n=_N), "S": "t**(-b/{n})*G".format(n=_N),
        "xi": "t**(a/{n})*Lambda".format(n=_N), "psi": "t**(1/{n})*Omega".format(n=_N)}, _FGLO,
       ["-b/{n}*F - s*F_s + ({n}/(1 + a + 2*b))*s**(b/{n})*G*F_s"
        " + ({n}/(1 + a + 2*b))**2*s**(2*b/{n})*Omega_s*Lambda_s".format(n=_N),
        "-b/{n}*G - s*G_s + ({n}/(1 + a + 2*b))*s**(b/{n})*F*G_s"
        " + ({n}/(1 + a + 2*b))**2*s**(2*b/{n})*Lambda_s*Omega_s".format(n=_N),
        "a/{n}*Lambda - s*Lambda_s + ({n}/(1 + a + 2*b))*s**(b/{n})*G*Lambda_s".format(n=_N),
        "1/{n}*Omega - s*Omega_s + ({n}/(1 + a + 2*b))*s**(b/{n})*F*Omega_s".format(n=_N)],
       ["t**(b/{n})*R".format(n=_N), "t**(b/{n})*S".format(n=_N),
        "t**(-a/{n})*xi".format(n=_N), "t**(-1/{n})*psi".format(n=_N)]),
    _a("SL11", "susy", "x/t - eps*log(t)",
       {"R": "F + eps*log(t)", "S": "G + eps*log(t)", "xi": "t*Lambda", "psi": "psi"}, _FGLP,
       ["-s*F_s - eps*F_s + G*F_s + eps + psi_s*Lambda_s", "-s*G_s - eps*G_s + F*G_s + eps + Lambda_s*psi_s",
        "Lambda - s*Lambda_s - eps*Lambda_s + G*Lambda_s", "-s*psi_s - eps*psi_s + F*psi_s"],
       ["R - eps*log(t)", "S - eps*log(t)", "xi/t", "psi"], EPS),
    _a("SL12", "susy", "x/t - eps*log(t)",
       {"R": "F + eps*log(t)", "S": "G + eps*log(t)", "xi": "xi", "psi": "t*Omega"}, _FGXO,
       ["-s*F_s - eps*F_s + G*F_s + eps + Omega_s*xi_s", "-s*G_s - eps*G_s + F*G_s + eps + xi_s*Omega_s",
        "-s*xi_s - eps*xi_s + G*xi_s", "Omega - s*Omega_s - eps*Omega_s + F*Omega_s"],
       ["R - eps*log(t)", "S - eps*log(t)", "xi", "psi/t"], EPS),
    _a("SL13", "susy", "(1 + a)*x/t - eps*log(t)",
       {"R": "F + eps/(1 + a)*log(t)", "S": "G + eps/(1 + a)*log(t)",
        "xi": "t**(a/(1 + a))*Lambda", "psi": "t**(1/(1 + a))*Omega"}, _FGLO,
       ["-s*F_s - eps*F_s + (1 + a)*G*F_s + eps/(1 + a) + (1 + a)**2*Omega_s*Lambda_s",
        "-s*G_s - eps*G_s + (1 + a)*F*G_s + eps/(1 + a) + (1 + a)**2*Lambda_s*Omega_s",
        "a/(1 + a)*Lambda - s*Lambda_s - eps*Lambda_s + (1 + a)*G*Lambda_s",
        "Omega/(1 + a) - s*Omega_s - eps*Omega_s + (1 + a)*F*Omega_s"],
       ["R - eps/(1 + a)*log(t)", "S - eps/(1 + a)*log(t)", "t**(-a/(1 + a))*xi", "t**(-1/(1 + a))*psi"], EPS),
    _a("SL14", "susy", "x - eps*t**2/2", {"R": "F + eps*t", "S": "G + eps*t", "xi": "xi", "psi": "psi"}, _FGXP,
       ["G*F_s + eps + psi_s*xi_s", "F*G_s + eps + xi_s*psi_s", "G*xi_s", "F*psi_s"],
       ["R - eps*t", "S - eps*t", "xi", "psi"], EPS),
    _a("SL18", "susy", "t", {"R": "R", "S": "S", "xi": "Lambda + eta1*x", "psi": "Omega + eta2*x"}, _RSLO,
       ["R_s + eta2*eta1", "S_s + eta1*eta2", "Lambda_s + S*eta1", "Omega_s + R*eta2"],
       ["R", "S", "xi - eta1*x", "psi - eta2*x"]),
    _a("SL19", "susy", "x", {"R": "R", "S": "S", "xi": "Lambda + eta1*t", "psi": "Omega + eta2*t"}, _RSLO,
       ["S*R_s + Omega_s*Lambda_s", "R*S_s + Lambda_s*Omega_s", "eta1 + S*Lambda_s", "eta2 + R*Omega_s"],
       ["R", "S", "xi - eta1*t", "psi - eta2*t"]),
    _a("SL20", "susy", "t",
       {"R": "F + x/t", "S": "G + x/t", "xi": "Lambda + eta1*x/t", "psi": "Omega + eta2*x/t"}, _FGLO,
       ["s**2*F_s + s*G + eta2*eta1", "s**2*G_s + s*F + eta1*eta2",
        "s*Lambda_s + eta1*G", "s*Omega_s + eta2*F"],
       ["R - x/t", "S - x/t", "xi - eta1*x/t", "psi - eta2*x/t"]),
    _a("SL21", "susy", "x/t**(2/3)",
       {"R": "t**(-1/3)*F", "S": "t**(-1/3)*G", "xi": "Lambda + eta1*log(t)/3", "psi": "Omega + eta2*log(t)/3"},
       _FGLO,
       ["-F/3 - 2*s*F_s/3 + G*F_s + Omega_s*Lambda_s", "-G/3 - 2*s*G_s/3 + F*G_s + Lambda_s*Omega_s",
        "-2*s*Lambda_s/3 + eta1/3 + G*Lambda_s", "-2*s*Omega_s/3 + eta2/3 + F*Omega_s"],
       ["t**(1/3)*R", "t**(1/3)*S", "xi - eta1*log(t)/3", "psi - eta2*log(t)/3"],
       notes=["the change of variable is printed with R(sigma), S(sigma); the reduced equations use F, G"]),
    _a("SL22", "susy", "x/t", {"R": "R", "S": "S", "xi": "t*Lambda", "psi": "Omega + eta2*log(t)"}, _RSLO,
       ["-s*R_s + S*R_s + Omega_s*Lambda_s", "-s*S_s + R*S_s + Lambda_s*Omega_s",
        "Lambda - s*Lambda_s + S*Lambda_s", "-s*Omega_s + eta2 + R*Omega_s"],
       ["R", "S", "xi/t", "psi - eta2*log(t)"]),
    _a("SL23", "susy", "x/t", {"R": "R", "S": "S", "xi": "Lambda + eta1*log(t)", "psi": "t*Omega"}, _RSLO,
       ["-s*R_s + S*R_s + Omega_s*Lambda_s", "-s*S_s + R*S_s + Lambda_s*Omega_s",
        "-s*Lambda_s + eta1 + S*Lambda_s", "Omega - s*Omega_s + R*Omega_s"],
       ["R", "S", "xi - eta1*log(t)", "psi/t"]),
    _a("SL24", "susy", "x**({q})/t".format(q=_Q),
       {"R": "t**(-{})*F".format(_A7), "S": "t**(-{})*G".format(_A7),
        "xi": "t**(1/(1 + 3*a))*Lambda", "psi": "Omega + eta2*log(t)/(1 + 3*a)"}, _FGLO,
       ["-{a7}*F - s*F_s + {q}*s**({a7})*G*F_s + ({q})**2*s**(2*{a7})*Omega_s*Lambda_s".format(a7=_A7, q=_Q),
        "-{a7}*G - s*G_s + {q}*s**({a7})*F*G_s + ({q})**2*s**(2*{a7})*Lambda_s*Omega_s".format(a7=_A7, q=_Q),
        "Lambda/(1 + 3*a) - s*Lambda_s + {q}*s**({a7})*G*Lambda_s".format(a7=_A7, q=_Q),
        "-s*Omega_s + eta2/(1 + 3*a) + {q}*s**({a7})*F*Omega_s".format(a7=_A7, q=_Q)],
       ["t**({})*R".format(_A7), "t**({})*S".format(_A7), "t**(-1/(1 + 3*a))*xi",
        "psi - eta2*log(t)/(1 + 3*a)"]),
    _a("SL25", "susy", "x**({q})/t".format(q=_Q),
       {"R": "t**(-{})*F".format(_A7), "S": "t**(-{})*G".format(_A7),
        "xi": "Lambda + eta1*log(t)/(1 + 3*a)", "psi": "t**(1/(1 + 3*a))*Omega"}, _FGLO,
       ["-{a7}*F - s*F_s + {q}*s**({a7})*G*F_s + ({q})**2*s**(2*{a7})*Omega_s*Lambda_s".format(a7=_A7, q=_Q),
        "-{a7}*G - s*G_s + {q}*s**({a7})*F*G_s + ({q})**2*s**(2*{a7})*Lambda_s*Omega_s".format(a7=_A7, q=_Q),
        "-s*Lambda_s + eta1/(1 + 3*a) + {q}*s**({a7})*G*Lambda_s".format(a7=_A7, q=_Q),
        "Omega/(1 + 3*a) - s*Omega_s + {q}*s**({a7})*F*Omega_s".format(a7=_A7, q=_Q)],
       ["t**({})*R".format(_A7), "t**({})*S".format(_A7), "xi - eta1*log(t)/(1 + 3*a)",
        "t**(-1/(1 + 3*a))*psi"]),
    _a("SL26", "susy", "x/t - eps*log(t)",
       {"R": "F + eps*log(t)", "S": "G + eps*log(t)", "xi": "t*Lambda", "psi": "Omega + eta2*log(t)"}, _FGLO,
       ["-s*F_s - eps*F_s + G*F_s + eps + Omega_s*Lambda_s",
        "-s*G_s - eps*G_s + F*G_s + eps + Lambda_s*Omega_s",
        "Lambda - s*Lambda_s - eps*Lambda_s + G*Lambda_s", "-s*Omega_s - eps*Omega_s + F*Omega_s + eta2"],
       ["R - eps*log(t)", "S - eps*log(t)", "xi/t", "psi - eta2*log(t)"], EPS),
    _a("SL27", "susy", "x/t - eps*log(t)",
       {"R": "F + eps*log(t)", "S": "G + eps*log(t)", "xi": "Lambda + eta1*log(t)", "psi": "t*Omega"}, _FGLO,
       ["-s*F_s - eps*F_s + G*F_s + eps + Omega_s*Lambda_s",
        "-s*G_s - eps*G_s + F*G_s + eps + Lambda_s*Omega_s",
        "-s*Lambda_s - eps*Lambda_s + G*Lambda_s + eta1", "Omega - s*Omega_s - eps*Omega_s + F*Omega_s"],
       ["R - eps*log(t)", "S - eps*log(t)", "xi - eta1*log(t)", "psi/t"], EPS),
    _a("SL28", "susy", "x - eps*t**2/2",
       {"R": "F + eps*t", "S": "G + eps*t", "xi": "Lambda + eta1*eps*t", "psi": "Omega + eta2*eps*t"}, _FGLO,
       ["G*F_s + eps + Omega_s*Lambda_s", "F*G_s + eps + Lambda_s*Omega_s",
        "G*Lambda_s + eta1*eps", "F*Omega_s + eta2*eps"],
       ["R - eps*t", "S - eps*t", "xi - eta1*eps*t", "psi - eta2*eps*t"], EPS),
]

ANSATZ = {a.label: a for a in CLASSICAL + SUSY}
