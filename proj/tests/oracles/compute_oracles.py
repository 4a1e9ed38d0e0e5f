"""Reference values for the C++ tests, computed independently with mpmath.

Run: python3 tests/oracles/compute_oracles.py
The printed numbers are frozen into tests/*.cpp.
"""
import mpmath as mp

mp.mp.dps = 40
pi = mp.pi


def show(name, value):
    print(f"{name:40s} {mp.nstr(value, 20)}")


# Pointwise values
show("psi1(1) = 2 e^-1/2", 2 * mp.e ** -0.5)
show("integral exp(-t^2/2)", mp.quad(lambda t: mp.e ** (-t * t / 2), [-mp.inf, mp.inf]))
show("integral exp(-t^2)", mp.quad(lambda t: mp.e ** (-t * t), [-mp.inf, mp.inf]))
show("integral sech^2", mp.quad(lambda t: mp.sech(t) ** 2, [-mp.inf, mp.inf]))
show("integral tanh^2 sech^2", mp.quad(lambda t: (mp.tanh(t) * mp.sech(t)) ** 2, [-mp.inf, 0, mp.inf]))
show("even part of e^-t step at 1", mp.e ** -1 / 2)

# 1/(1+t^2) spectrum by direct quadrature at isolated frequencies
for w in (0, 1, 2.5, 5):
    val = mp.quadosc(lambda t: 2 * mp.cos(w * t) / (1 + t * t), [0, mp.inf], omega=max(w, 1))
    show(f"F[1/(1+t^2)]({w})", val)

# Shifted Gaussian against the four eigenvalues on |x| <= 10
def shifted_residual(k):
    lam = mp.sqrt(2 * pi) * (-1j) ** k
    f = lambda x: mp.e ** (-(x - 3) ** 2 / 2)
    F = lambda w: mp.sqrt(2 * pi) * mp.e ** (-w * w / 2) * mp.expj(-3 * w)
    num = mp.quad(lambda x: abs(F(x) - lam * f(x)) ** 2, [-10, 0, 3, 10])
    den = mp.quad(lambda x: abs(f(x)) ** 2, [-10, 3, 10])
    return mp.sqrt(num / den) / mp.sqrt(2 * pi)

show("shifted gaussian best residual", min(shifted_residual(k) for k in range(4)))

# Wrong-kappa ODE residuals: (kappa_n - kappa) f / ||(|kappa| + t^2) f||
def wrong_kappa(n, kappa):
    H = lambda t: mp.hermite(n, t)
    f2 = lambda t: (H(t) * mp.e ** (-t * t / 2)) ** 2
    num = (-(2 * n + 1) - kappa) ** 2 * mp.quad(f2, [-mp.inf, mp.inf])
    den = mp.quad(lambda t: (abs(kappa) + t * t) ** 2 * f2(t), [-mp.inf, mp.inf])
    return mp.sqrt(num / den)

show("ode residual psi2, kappa=-3", wrong_kappa(2, -3))

# t^2 e^{-t^2/2} with n = 0: f'' - t^2 f + f = (2 - 4 t^2) e^{-t^2/2} ... computed directly
g = lambda t: t * t * mp.e ** (-t * t / 2)
g2 = lambda t: mp.diff(g, t, 2)
num = mp.quad(lambda t: (g2(t) - t * t * g(t) + g(t)) ** 2, [-mp.inf, mp.inf])
den = mp.quad(lambda t: ((1 + t * t) * g(t)) ** 2, [-mp.inf, mp.inf])
show("oscillator residual t^2 gaussian, n=0", mp.sqrt(num / den))

# Hermite orthogonality check value
show("<psi2, psi4>", mp.quad(lambda t: mp.hermite(2, t) * mp.hermite(4, t) * mp.e ** (-t * t), [-mp.inf, mp.inf]))

# Resolution values
show("sqrt(pi/6)", mp.sqrt(pi / 6))
show("(7/15)^(1/4)", (mp.mpf(7) / 15) ** 0.25)
show("sqrt(7/15)", mp.sqrt(mp.mpf(7) / 15))
show("(35/12)^(1/4)", (mp.mpf(35) / 12) ** 0.25)
show("(2 pi)^2 / 3", (2 * pi) ** 2 / 3)

mexh = lambda t: (1 - t * t) * mp.e ** (-t * t / 2)
E = mp.quad(lambda t: mexh(t) ** 2, [-mp.inf, mp.inf])
show("mexh m2_t", mp.quad(lambda t: t * t * mexh(t) ** 2, [-mp.inf, mp.inf]) / E)
W = lambda w: w * w * mp.e ** (-w * w / 2)
show("mexh m2_w", mp.quad(lambda w: w * w * W(w) ** 2, [-mp.inf, mp.inf]) / mp.quad(lambda w: W(w) ** 2, [-mp.inf, mp.inf]))

morl = lambda t: mp.cos(5 * t) * mp.e ** (-t * t / 2)
Em = mp.quad(lambda t: morl(t) ** 2, [-mp.inf, mp.inf])
show("morl m2_t", mp.quad(lambda t: t * t * morl(t) ** 2, [-mp.inf, mp.inf]) / Em)
M = lambda w: mp.e ** (-(w - 5) ** 2 / 2) + mp.e ** (-(w + 5) ** 2 / 2)
show("morl m2_w", mp.quad(lambda w: w * w * M(w) ** 2, [-mp.inf, -5, 0, 5, mp.inf]) / mp.quad(lambda w: M(w) ** 2, [-mp.inf, -5, 0, 5, mp.inf]))

tri = lambda w: max(0, 1 - abs(w - pi) / (2 * pi))
show("fbsp m2_w (sinc^2 e^{j pi t})", mp.quad(lambda w: w * w * tri(w) ** 2, [-pi, pi, 3 * pi]) / mp.quad(lambda w: tri(w) ** 2, [-pi, pi, 3 * pi]))
show("fbsp time limit 3/(4 pi^2)", 3 / (4 * pi ** 2))
show("haar m2_t", mp.mpf(1) / 3)
show("gaus1 m2", mp.quad(lambda t: t ** 4 * mp.e ** (-t * t), [-mp.inf, mp.inf]) / mp.quad(lambda t: t * t * mp.e ** (-t * t), [-mp.inf, mp.inf]))
